//! Squarefree decomposition in `Q(t)[x]` (Yun's algorithm).

use super::tfrac::TFrac;
use super::xpoly::XPoly;
use crate::error::ArithError;

/// `input = unit * prod factor^multiplicity`, factors monic, squarefree and
/// pairwise coprime, multiplicities strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub unit: TFrac,
    pub parts: Vec<(XPoly, usize)>,
}

impl SquarefreeDecomposition {
    /// Multiplies the decomposition back out.
    pub fn expand(&self) -> XPoly {
        self.parts
            .iter()
            .fold(XPoly::constant(self.unit.clone()), |acc, (f, m)| {
                &acc * &f.pow(*m as u32)
            })
    }

    /// Factor of multiplicity `m`, or `1` when absent.
    pub fn factor(&self, m: usize) -> XPoly {
        self.parts
            .iter()
            .find(|(_, k)| *k == m)
            .map(|(f, _)| f.clone())
            .unwrap_or_else(XPoly::one)
    }

    /// Product of the distinct factors.
    pub fn squarefree_part(&self) -> XPoly {
        self.parts.iter().fold(XPoly::one(), |acc, (f, _)| &acc * f)
    }
}

pub fn squarefree(a: &XPoly) -> Result<SquarefreeDecomposition, ArithError> {
    if a.is_zero() {
        return Err(ArithError::ZeroInput("squarefree decomposition"));
    }
    let unit = a.lc();
    let a = a.monic();
    let mut parts = Vec::new();
    if a.is_constant() {
        return Ok(SquarefreeDecomposition { unit, parts });
    }
    let da = a.d_dx();
    let c = a.gcd(&da)?;
    let mut w = a.exact_div(&c).expect("gcd divides");
    let mut y = da.exact_div(&c).expect("gcd divides");
    let mut z = &y - &w.d_dx();
    let mut i = 1;
    while !w.is_constant() {
        let g = w.gcd(&z)?;
        w = w.exact_div(&g).expect("gcd divides");
        y = z.exact_div(&g).expect("gcd divides");
        z = &y - &w.d_dx();
        if !g.is_constant() {
            parts.push((g, i));
        }
        i += 1;
    }
    Ok(SquarefreeDecomposition { unit, parts })
}
