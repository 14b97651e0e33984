//! The non-check subcommands, as functions returning JSON.

use serde::Serialize;

use super::parser::parse_operator;
use crate::error::{Error, Result};
use crate::mellin::normalize_weyl;
use crate::ore::{fourier_auto, mellin_op, Algebra, OreOperator};
use crate::scalars::FiniteField;
use crate::trace::{t_b, t_i0n, CharacterTable, FqSpace, TraceFunction};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OperatorOutput {
    pub algebra: String,
    pub input: String,
    pub output: String,
}

/// `weyl` takes its rank from `rank`; `shift` ignores it.
pub fn parse_algebra(name: &str, rank: usize) -> Result<Algebra> {
    match name {
        "weyl" if rank >= 1 => Ok(Algebra::Weyl(rank)),
        "shift" => Ok(Algebra::Shift),
        "laurent" => Ok(Algebra::LaurentWeyl),
        _ => Err(Error::InvalidParameter(format!("unknown algebra `{name}` (rank {rank})"))),
    }
}

/// Normal form of an expression.
pub fn reduce(algebra: Algebra, text: &str) -> Result<OperatorOutput> {
    let op = parse_operator(text, algebra)?;
    Ok(OperatorOutput { algebra: algebra.to_string(), input: text.into(), output: op.to_string() })
}

/// Mellin image of a Laurent-Weyl operator (`x` invertible).
pub fn mellin(text: &str) -> Result<OperatorOutput> {
    let OreOperator::Laurent(l) = parse_operator(text, Algebra::LaurentWeyl)? else {
        unreachable!("parsed in Laurent mode")
    };
    Ok(OperatorOutput { algebra: Algebra::Shift.to_string(), input: text.into(), output: mellin_op(&l).to_string() })
}

/// `x_i ↦ -∂_i`, `∂_i ↦ x_i`; with `normalize` the result is scaled so its
/// first monomial has coefficient 1, as for a relation.
pub fn fourier(rank: usize, text: &str, normalize: bool) -> Result<OperatorOutput> {
    let algebra = parse_algebra("weyl", rank)?;
    let OreOperator::Weyl(w) = parse_operator(text, algebra)? else {
        unreachable!("parsed in Weyl mode")
    };
    let image = fourier_auto(&w);
    let image = if normalize { normalize_weyl(&image) } else { image };
    Ok(OperatorOutput { algebra: algebra.to_string(), input: text.into(), output: image.to_string() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceTable {
    pub q: u32,
    pub object: String,
    pub values: Vec<(String, String)>,
}

/// Values of `B`, `I0:n` or `psi` on `F_q`, in lexicographic point order.
pub fn trace_table(q: u32, object: &str) -> Result<TraceTable> {
    let field = FiniteField::of_order(q)?;
    let line = FqSpace::line(&field);
    let f = match object {
        "B" => t_b(&line),
        "psi" => {
            let chars = CharacterTable::new(&field, 1)?;
            TraceFunction::from_fn(&line, |a| chars.psi(a as u32).clone())
        }
        o => match o.strip_prefix("I0:").map(str::parse::<u64>) {
            Some(Ok(n)) => t_i0n(&line, n)?,
            _ => return Err(Error::InvalidParameter(format!("unknown object `{o}`; use B, I0:n or psi"))),
        },
    };
    Ok(TraceTable { q, object: object.into(), values: f.table() })
}
