//! The point sets `F_q^d` and bilinear pairings on them.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalars::FiniteField;

/// Largest `q^d` for which tables are built.
pub const MAX_POINTS: usize = 4096;

/// `F_q^d` with points indexed lexicographically (first coordinate most
/// significant).
#[derive(Debug, PartialEq, Eq)]
pub struct FqSpace {
    field: Arc<FiniteField>,
    d: usize,
    points: Vec<Vec<u32>>,
}

impl FqSpace {
    pub fn new(field: &Arc<FiniteField>, d: usize) -> Result<Arc<Self>> {
        if d == 0 {
            return Err(Error::InvalidParameter("rank must be positive".into()));
        }
        let q = field.order() as usize;
        let size = q
            .checked_pow(d as u32)
            .filter(|&s| s <= MAX_POINTS)
            .ok_or_else(|| Error::SizeGuard(format!("{q}^{d} points exceed {MAX_POINTS}")))?;
        let points = (0..size)
            .map(|mut idx| {
                let mut v = vec![0u32; d];
                for slot in v.iter_mut().rev() {
                    *slot = (idx % q) as u32;
                    idx /= q;
                }
                v
            })
            .collect();
        Ok(Arc::new(FqSpace { field: field.clone(), d, points }))
    }

    /// `F_q` as a rank-one space.
    pub fn line(field: &Arc<FiniteField>) -> Arc<Self> {
        FqSpace::new(field, 1).expect("field order is within the guard")
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn size(&self) -> usize {
        self.points.len()
    }

    pub fn coords(&self, idx: usize) -> &[u32] {
        &self.points[idx]
    }

    pub fn index(&self, v: &[u32]) -> usize {
        let q = self.q() as usize;
        v.iter().fold(0, |acc, &c| acc * q + c as usize)
    }

    /// Index of `λ·v`.
    pub fn scale(&self, lambda: u32, idx: usize) -> usize {
        let v: Vec<u32> = self.points[idx].iter().map(|&c| self.field.mul(lambda, c)).collect();
        self.index(&v)
    }

    pub fn format_point(&self, idx: usize) -> String {
        let parts: Vec<String> = self.points[idx].iter().map(|&c| self.field.format_element(c)).collect();
        if self.d == 1 {
            parts[0].clone()
        } else {
            format!("({})", parts.join(","))
        }
    }

    pub fn same_as(&self, other: &FqSpace) -> bool {
        self.d == other.d && self.field == other.field
    }
}

/// `⟨v, ξ⟩ = vᵀ M ξ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    matrix: Vec<Vec<u32>>,
}

impl Pairing {
    pub fn standard(d: usize) -> Self {
        Pairing { matrix: (0..d).map(|i| (0..d).map(|j| u32::from(i == j)).collect()).collect() }
    }

    pub fn new(field: &FiniteField, matrix: Vec<Vec<u32>>) -> Result<Self> {
        let d = matrix.len();
        if matrix.iter().any(|r| r.len() != d) {
            return Err(Error::InvalidParameter("pairing matrix must be square".into()));
        }
        if matrix.iter().flatten().any(|&c| c >= field.order()) {
            return Err(Error::InvalidParameter("pairing entry outside the field".into()));
        }
        if !nonsingular(field, &matrix) {
            return Err(Error::DegeneratePairing);
        }
        Ok(Pairing { matrix })
    }

    pub fn d(&self) -> usize {
        self.matrix.len()
    }

    pub fn transpose(&self) -> Pairing {
        let d = self.d();
        Pairing { matrix: (0..d).map(|i| (0..d).map(|j| self.matrix[j][i]).collect()).collect() }
    }

    /// `M ξ`, so that `⟨v, ξ⟩ = v · (M ξ)`.
    pub fn apply(&self, field: &FiniteField, xi: &[u32]) -> Vec<u32> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(xi).fold(0, |acc, (&m, &x)| field.add(acc, field.mul(m, x))))
            .collect()
    }

    pub fn eval(&self, field: &FiniteField, v: &[u32], xi: &[u32]) -> u32 {
        dot(field, v, &self.apply(field, xi))
    }
}

pub fn dot(field: &FiniteField, a: &[u32], b: &[u32]) -> u32 {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}

fn nonsingular(field: &FiniteField, m: &[Vec<u32>]) -> bool {
    let mut a = m.to_vec();
    let n = a.len();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| a[r][c] != 0) else {
            return false;
        };
        a.swap(c, p);
        let inv = field.inv(a[c][c]);
        for r in c + 1..n {
            let f = field.mul(a[r][c], inv);
            if f == 0 {
                continue;
            }
            for k in c..n {
                let t = field.mul(f, a[c][k]);
                a[r][k] = field.sub(a[r][k], t);
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indexing_is_lexicographic() {
        let f = FiniteField::of_order(3).unwrap();
        let v = FqSpace::new(&f, 2).unwrap();
        assert_eq!(v.size(), 9);
        assert_eq!(v.coords(1), &[0, 1]);
        assert_eq!(v.coords(3), &[1, 0]);
        for i in 0..9 {
            assert_eq!(v.index(v.coords(i)), i);
        }
        assert_eq!(v.scale(2, v.index(&[1, 2])), v.index(&[2, 1]));
    }

    #[test]
    fn pairings() {
        let f = FiniteField::of_order(5).unwrap();
        assert!(matches!(Pairing::new(&f, vec![vec![1, 2], vec![2, 4]]), Err(Error::DegeneratePairing)));
        let p = Pairing::new(&f, vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(p.eval(&f, &[1, 2], &[3, 4]), (4 + 6) % 5);
        assert_eq!(Pairing::standard(2).eval(&f, &[1, 2], &[3, 4]), (3 + 8) % 5);
        let q = Pairing::new(&f, vec![vec![1, 2], vec![0, 1]]).unwrap();
        assert_eq!(q.eval(&f, &[1, 0], &[0, 1]), q.transpose().eval(&f, &[0, 1], &[1, 0]));
        assert!(FqSpace::new(&f, 6).is_err());
    }
}
