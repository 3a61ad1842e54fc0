//! A symmetric element with non-square square that lies in no inseparable
//! subalgebra.

use super::DecomposedAlgebra;
use crate::algebra::AlgElement;
use crate::linalg::Subspace;
use crate::{Error, Result};

/// x = w ⊗ 1 + (w + u) ⊗ v_3 written against the last (M_2, t) factor, i.e.
/// the block matrix [[w, w + u], [w + u, w]]. Here u is the alternating v of
/// the first factor with non-square v^2 and w is the lowest symmetric basis
/// vector of another factor outside Alt ⊕ F. Verified: sigma(x) = x, x^2 is
/// a non-square scalar and x + lambda is alternating for no lambda.
pub fn count_witness(d: &DecomposedAlgebra) -> Result<AlgElement> {
    let n = d.n();
    if n < 3 {
        return Err(Error::WrongShape("degree at least 8 required".into()));
    }
    let i = d.i_invariant()?;
    if i == 0 || i as usize >= n {
        return Err(Error::WrongShape(format!("need 0 < i < n, got i = {i}")));
    }
    let m = d.transpose_factor().ok_or_else(|| Error::WrongShape("no (M_2, t) factor".into()))?;
    let mut ui = None;
    for k in (0..n).filter(|&k| k != m) {
        let f = &d.factors()[k];
        if f.basis.beta.is_square()?.is_none() {
            ui = Some(k);
            break;
        }
    }
    let ui = ui.ok_or_else(|| Error::WrongShape("every other factor has trivial discriminant".into()))?;
    let wi = (0..n)
        .find(|&k| k != m && k != ui)
        .ok_or_else(|| Error::WrongShape("need a second factor besides (M_2, t)".into()))?;
    let f = &d.factors()[wi];
    let inv = &f.involution;
    let alt_f = inv.alt().sum(&Subspace::span(f.algebra.ctx(), f.algebra.dim(), &[f.algebra.one().into_coords()])?)?;
    let w_local = inv
        .sym_basis()
        .into_iter()
        .find(|b| !alt_f.contains(b.coords()).unwrap_or(true))
        .ok_or_else(|| Error::WrongShape("Sym equals Alt ⊕ F in the second factor".into()))?;
    let u = d.v(ui);
    let w = d.embed(wi, &w_local)?;
    let v3 = d.v(m);
    let x = w.add(&w.add(&u)?.mul(&v3)?)?;

    let sigma = d.involution();
    if !sigma.is_symmetric(&x)? {
        return Err(Error::ContractViolation("count witness is not symmetric".into()));
    }
    let sq = x
        .square()?
        .is_scalar()
        .ok_or_else(|| Error::ContractViolation("count witness square is not scalar".into()))?;
    if sq.is_zero() || sq.is_square()?.is_some() || d.algebra().scalar(&sq) != u.square()? {
        return Err(Error::ContractViolation("count witness square is not u^2".into()));
    }
    if sigma.alt_plus_f_member(&x)?.is_some() {
        return Err(Error::ContractViolation("count witness lies in Alt ⊕ F".into()));
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::super::tests::instance;
    use super::*;

    #[test]
    fn degree_eight_witness() {
        let d = instance(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")], 1);
        let x = count_witness(&d).unwrap();
        let u = d.v(0);
        assert_eq!(x.square().unwrap(), u.square().unwrap());
    }

    #[test]
    fn shape_errors() {
        let d = instance(&["a", "b"], &[("a", "b")], 1);
        assert!(matches!(count_witness(&d), Err(Error::WrongShape(_))));
        let an = instance(&["a", "b", "c", "d", "e", "f"], &[("a", "b"), ("c", "d"), ("e", "f")], 0);
        assert!(matches!(count_witness(&an), Err(Error::WrongShape(_))));
    }
}
