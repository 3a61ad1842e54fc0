//! Values represented by an involution and the i-invariant after a
//! quadratic inseparable extension.

use super::iterate::{isotropy_witness, solve_square_in_s};
use super::DecomposedAlgebra;
use crate::algebra::AlgElement;
use crate::field::RatFunc;
use crate::forms::{i_after_sqrt_extension, q_value_membership};
use crate::involution::PlusVerdict;
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub enum Representation {
    /// x in F[v_1..v_n], x != 0, with x^2 = alpha.
    Yes(AlgElement),
    No,
}

impl Representation {
    pub fn is_yes(&self) -> bool {
        matches!(self, Representation::Yes(_))
    }

    pub fn witness(&self) -> Option<&AlgElement> {
        match self {
            Representation::Yes(x) => Some(x),
            Representation::No => None,
        }
    }
}

/// Whether alpha = x^2 for some nonzero x in S = F[v_1..v_n], decided by
/// the Pfister form and witnessed in the algebra.
pub fn represents(d: &DecomposedAlgebra, alpha: &RatFunc) -> Result<Representation> {
    if alpha.ctx() != d.ctx() {
        return Err(Error::ContextMismatch);
    }
    let pf = d.pfister()?;
    let in_form = q_value_membership(pf.expansion(), alpha)?.is_some();
    let x = if alpha.is_zero() {
        isotropy_witness(d)?.map(|w| w.z)
    } else {
        solve_square_in_s(d, alpha)?
    };
    let Some(x) = x else {
        if in_form {
            return Err(Error::ContractViolation("form represents alpha but S has no root".into()));
        }
        return Ok(Representation::No);
    };
    if !in_form {
        return Err(Error::ContractViolation("S has a root of alpha the form misses".into()));
    }
    let sq_ok = match x.square()?.is_scalar() {
        Some(c) => c == *alpha,
        None => false,
    };
    if x.is_zero() || !sq_ok || !d.involution().is_symmetric(&x)? {
        return Err(Error::ContractViolation("representation witness failed re-verification".into()));
    }
    Ok(Representation::Yes(x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorIa {
    pub i_before: u32,
    pub i_after: u32,
}

impl CorIa {
    /// i_after = i_before + 1 and i_before < n.
    pub fn holds(&self, n: usize) -> bool {
        self.i_after == self.i_before + 1 && (self.i_before as usize) < n
    }
}

/// i before and after adjoining sqrt(x^2) for x in Sym⁺ with x^2 not a square.
pub fn cor_ia_check(d: &DecomposedAlgebra, x: &AlgElement) -> Result<CorIa> {
    let alpha = match d.involution().sym_plus_member(x)? {
        PlusVerdict::Yes(a) => a,
        PlusVerdict::No(why) => return Err(Error::BadChoice(format!("x not in Sym⁺: {why}"))),
    };
    if alpha.is_zero() || alpha.is_square()?.is_some() {
        return Err(Error::SquareInput);
    }
    let pf = d.pfister()?;
    let i_before = crate::forms::i_invariant(&pf)?;
    let i_after = i_after_sqrt_extension(&pf, &alpha)?;
    Ok(CorIa { i_before, i_after })
}

#[cfg(test)]
mod tests {
    use super::super::tests::instance;
    use super::*;

    #[test]
    fn representation_examples() {
        let d = instance(&["x", "y", "z", "w"], &[("x", "y"), ("z", "w")], 0);
        let k = d.ctx().clone();
        let r = represents(&d, &k.parse("y").unwrap()).unwrap();
        assert_eq!(r.witness().unwrap(), &d.v(0));
        assert!(!represents(&d, &k.zero()).unwrap().is_yes());
        let r = represents(&d, &k.parse("y + w").unwrap()).unwrap();
        assert_eq!(r.witness().unwrap(), &d.v(0).add(&d.v(1)).unwrap());
        assert!(!represents(&d, &k.parse("x").unwrap()).unwrap().is_yes());
        let iso = instance(&["a", "b"], &[("a", "b")], 1);
        let z = represents(&iso, &iso.ctx().zero()).unwrap();
        assert!(z.is_yes());
    }

    #[test]
    fn cor_ia_examples() {
        let d = instance(&["x", "y", "z", "w"], &[("x", "y"), ("z", "w")], 0);
        assert_eq!(cor_ia_check(&d, &d.v(0)).unwrap(), CorIa { i_before: 0, i_after: 1 });
        let l3 = instance(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")], 1);
        assert_eq!(cor_ia_check(&l3, &l3.v(0)).unwrap(), CorIa { i_before: 1, i_after: 2 });
        assert_eq!(cor_ia_check(&l3, &l3.v(2)).err(), Some(Error::SquareInput));
    }
}
