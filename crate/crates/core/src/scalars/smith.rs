//! Matrices over `Q[s]` and their Smith normal form.
//!
//! The torsion test for finitely presented `k[s]`-modules and the local
//! fiber computation both read off the invariant factors produced here.

use std::fmt;

use num_traits::Zero;

use super::linalg::{determinant, rank};
use super::poly::Poly;
use super::{RatFun, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Poly>>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, data: vec![vec![Poly::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = Poly::one();
        }
        m
    }

    pub fn from_rows(data: Vec<Vec<Poly>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        PolyMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        self.data[i][j] = p;
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.data[i]
    }

    pub fn column(&self, j: usize) -> Vec<Poly> {
        self.data.iter().map(|r| r[j].clone()).collect()
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = PolyMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.data[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if other.data[k][j].is_zero() {
                        continue;
                    }
                    let t = &self.data[i][k] * &other.data[k][j];
                    out.data[i][j] += &t;
                }
            }
        }
        out
    }

    pub fn to_ratfun(&self) -> Vec<Vec<RatFun>> {
        self.data
            .iter()
            .map(|r| r.iter().map(|p| RatFun::from_poly(p.clone())).collect())
            .collect()
    }

    /// Determinant of a square matrix, computed over `Q(s)`.
    pub fn det(&self) -> Poly {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        if self.rows == 0 {
            return Poly::one();
        }
        let d = determinant(&self.to_ratfun());
        assert!(d.is_polynomial(), "determinant of a polynomial matrix is a polynomial");
        d.num().clone()
    }

    /// Rank over the fraction field `Q(s)`.
    pub fn rank(&self) -> usize {
        rank(&self.to_ratfun())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.data[i][j].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<Poly> {
        (0..self.rows.min(self.cols)).map(|i| self.data[i][i].clone()).collect()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.rows, other.rows, "row mismatch");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.iter().chain(b).cloned().collect())
            .collect();
        PolyMatrix { rows: self.rows, cols: self.cols + other.cols, data }
    }

    /// `self ⊗ I_k` with generator order `(i, j) -> i * k + j`.
    pub fn kron_identity_right(&self, k: usize) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(self.rows * k, self.cols * k);
        for i in 0..self.rows {
            for j in 0..self.cols {
                for t in 0..k {
                    out.data[i * k + t][j * k + t] = self.data[i][j].clone();
                }
            }
        }
        out
    }

    /// `I_k ⊗ self` with the same generator order.
    pub fn kron_identity_left(&self, k: usize) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(self.rows * k, self.cols * k);
        for t in 0..k {
            for i in 0..self.rows {
                for j in 0..self.cols {
                    out.data[t * self.rows + i][t * self.cols + j] = self.data[i][j].clone();
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.data.swap(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for r in &mut self.data {
            r.swap(a, b);
        }
    }

    /// row_dst -= f * row_src
    fn row_axpy(&mut self, dst: usize, src: usize, f: &Poly) {
        for j in 0..self.cols {
            if self.data[src][j].is_zero() {
                continue;
            }
            let t = f * &self.data[src][j];
            self.data[dst][j] -= &t;
        }
    }

    /// col_dst -= col_src * f
    fn col_axpy(&mut self, dst: usize, src: usize, f: &Poly) {
        for i in 0..self.rows {
            if self.data[i][src].is_zero() {
                continue;
            }
            let t = &self.data[i][src] * f;
            self.data[i][dst] -= &t;
        }
    }

    fn scale_row(&mut self, i: usize, c: &Rational) {
        for p in &mut self.data[i] {
            *p = p.scale(c);
        }
    }
}

/// `left * input * right = diagonal`, with `left` and `right` unimodular.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub left: PolyMatrix,
    pub diagonal: PolyMatrix,
    pub right: PolyMatrix,
}

impl SmithForm {
    /// Monic invariant factors `d_1 | d_2 | ...`, zeros included.
    pub fn invariant_factors(&self) -> Vec<Poly> {
        self.diagonal.diagonal()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().iter().filter(|p| !p.is_zero()).count()
    }
}

fn min_degree_entry(a: &PolyMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for i in k..a.rows {
        for j in k..a.cols {
            if let Some(d) = a.data[i][j].degree() {
                if best.map_or(true, |(_, _, bd)| d < bd) {
                    best = Some((i, j, d));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

pub fn smith_normal_form(m: &PolyMatrix) -> SmithForm {
    let mut a = m.clone();
    let mut u = PolyMatrix::identity(m.rows);
    let mut v = PolyMatrix::identity(m.cols);
    let steps = m.rows.min(m.cols);
    for k in 0..steps {
        loop {
            let Some((pi, pj)) = min_degree_entry(&a, k) else {
                break;
            };
            a.swap_rows(k, pi);
            u.swap_rows(k, pi);
            a.swap_cols(k, pj);
            v.swap_cols(k, pj);

            let pivot = a.data[k][k].clone();
            let mut dirty = false;
            for i in k + 1..a.rows {
                if a.data[i][k].is_zero() {
                    continue;
                }
                let (q, r) = a.data[i][k].div_rem(&pivot);
                a.row_axpy(i, k, &q);
                u.row_axpy(i, k, &q);
                dirty |= !r.is_zero();
            }
            for j in k + 1..a.cols {
                if a.data[k][j].is_zero() {
                    continue;
                }
                let (q, r) = a.data[k][j].div_rem(&pivot);
                a.col_axpy(j, k, &q);
                v.col_axpy(j, k, &q);
                dirty |= !r.is_zero();
            }
            if dirty {
                continue;
            }
            // divisibility chain: pull an offending row into row k
            let offending = (k + 1..a.rows)
                .find(|&i| (k + 1..a.cols).any(|j| !pivot.divides(&a.data[i][j])));
            match offending {
                Some(i) => {
                    let minus_one = Poly::constant(-Rational::from_integer(1.into()));
                    a.row_axpy(k, i, &minus_one);
                    u.row_axpy(k, i, &minus_one);
                }
                None => break,
            }
        }
        let lc = a.data[k][k].leading();
        if !lc.is_zero() {
            let inv = lc.recip();
            a.scale_row(k, &inv);
            u.scale_row(k, &inv);
        }
    }
    SmithForm { left: u, diagonal: a, right: v }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.data {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn check(m: &PolyMatrix) -> SmithForm {
        let snf = smith_normal_form(m);
        assert_eq!(snf.left.mul(m).mul(&snf.right), snf.diagonal);
        assert!(snf.diagonal.is_diagonal());
        assert!(snf.left.det().is_constant() && !snf.left.det().is_zero());
        assert!(snf.right.det().is_constant() && !snf.right.det().is_zero());
        let d = snf.invariant_factors();
        for w in d.windows(2) {
            assert!(w[0].divides(&w[1]));
        }
        snf
    }

    #[test]
    fn one_by_one() {
        let snf = check(&PolyMatrix::from_rows(vec![vec![p(&[0, 1])]]));
        assert_eq!(snf.invariant_factors(), vec![p(&[0, 1])]);
    }

    #[test]
    fn already_diagonal() {
        let m = PolyMatrix::from_rows(vec![vec![p(&[1]), p(&[])], vec![p(&[]), p(&[0, 0, 1])]]);
        assert_eq!(check(&m).invariant_factors(), vec![p(&[1]), p(&[0, 0, 1])]);
    }

    #[test]
    fn triangular_example() {
        // [[s, s+1], [0, s-1]] -> diag(1, s(s-1))
        let m = PolyMatrix::from_rows(vec![
            vec![p(&[0, 1]), p(&[1, 1])],
            vec![p(&[]), p(&[-1, 1])],
        ]);
        assert_eq!(check(&m).invariant_factors(), vec![p(&[1]), p(&[0, -1, 1])]);
    }

    #[test]
    fn coprime_diagonal_needs_chain_fix() {
        let m = PolyMatrix::from_rows(vec![vec![p(&[0, 1]), p(&[])], vec![p(&[]), p(&[1, 1])]]);
        assert_eq!(check(&m).invariant_factors(), vec![p(&[1]), p(&[0, 1, 1])]);
    }

    #[test]
    fn rectangular_and_rank_deficient() {
        let m = PolyMatrix::from_rows(vec![
            vec![p(&[0, 1]), p(&[0, 0, 1]), p(&[1])],
            vec![p(&[0, 2]), p(&[0, 0, 2]), p(&[2])],
        ]);
        let snf = check(&m);
        assert_eq!(snf.rank(), 1);
        assert_eq!(m.rank(), 1);
    }
}
