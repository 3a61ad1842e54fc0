//! Powers of products of symmetric elements, and isotropy vectors built
//! from them.

use super::DecomposedAlgebra;
use crate::algebra::AlgElement;
use crate::field::solve_frobenius_single;
use crate::linalg::Matrix;
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct PosResult {
    /// Minimal k >= 1 with (xy)^k in Sym⁺.
    pub k: usize,
    pub power: AlgElement,
}

/// Default iteration cap: 2 dim^2.
pub fn default_cap(d: &DecomposedAlgebra) -> usize {
    2 * d.algebra().dim() * d.algebra().dim()
}

/// Minimal k with (xy)^k in Sym⁺, found by a linear scan. The result also
/// satisfies (xy)^k x = x (xy)^k, which is re-verified.
pub fn pos_iterate(d: &DecomposedAlgebra, x: &AlgElement, y: &AlgElement, cap: Option<usize>) -> Result<PosResult> {
    let sigma = d.involution();
    if !sigma.sym_plus_member(x)?.is_yes() || !x.is_unit()? {
        return Err(Error::BadChoice("x must be a unit of Sym⁺".into()));
    }
    if !y.is_unit()? {
        return Err(Error::BadChoice("y must be a unit".into()));
    }
    let cap = cap.unwrap_or_else(|| default_cap(d));
    let xy = x.mul(y)?;
    let mut p = xy.clone();
    for k in 1..=cap {
        if sigma.sym_plus_member(&p)?.is_yes() {
            if !p.commutes_with(x)? {
                return Err(Error::ContractViolation(format!("(xy)^{k} does not commute with x")));
            }
            return Ok(PosResult { k, power: p });
        }
        p = p.mul(&xy)?;
    }
    Err(Error::IterationCapExceeded(cap))
}

/// z != 0 with sigma(z) z = 0, together with the square-one element it came from.
#[derive(Debug, Clone)]
pub struct IsotropyWitness {
    /// y in S \ F with y^2 = 1.
    pub y: AlgElement,
    /// 1 + y.
    pub z: AlgElement,
}

/// y in F[v_1..v_n] with y^2 = 1, y != 1, from an F^2-dependence of the
/// squares of the monomials v^T. Absent iff the Pfister form is anisotropic.
pub fn isotropy_witness(d: &DecomposedAlgebra) -> Result<Option<IsotropyWitness>> {
    let ctx = d.ctx();
    let monos = d.v_monomials()?;
    let squares = monos
        .iter()
        .map(|m| {
            m.square()?
                .is_scalar()
                .ok_or_else(|| Error::ContractViolation("v^T squares to a non-scalar".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    // kernel over F^2: sum k_T^2 (v^T)^2 = 0
    let (_, _, m) = crate::field::frobenius_matrix(ctx, &squares, &[])?;
    let Some(k) = m.kernel_basis()?.into_iter().next() else {
        return Ok(None);
    };
    let mut z = d.algebra().zero();
    for (c, mono) in k.iter().zip(&monos) {
        if !c.is_zero() {
            z = z.add(&mono.scale(c)?)?;
        }
    }
    let y = z.add(&d.algebra().one())?;
    let sigma = d.involution();
    if z.is_zero() || !y.square()?.is_one() || !sigma.apply(&z)?.mul(&z)?.is_zero() {
        return Err(Error::ContractViolation("isotropy witness failed re-verification".into()));
    }
    Ok(Some(IsotropyWitness { y, z }))
}

/// z in the centralizer of x with sigma(z) z = 0.
#[derive(Debug, Clone)]
pub struct MetWitness {
    pub y: AlgElement,
    pub r: usize,
    pub z: AlgElement,
}

/// Isotropy vector of sigma restricted to C_A(x): z = (xy)^r + x^r where
/// y in S \ F squares to 1 and r is minimal with (xy)^r in Sym⁺.
pub fn met_isotropy_vector(d: &DecomposedAlgebra, x: &AlgElement, cap: Option<usize>) -> Result<MetWitness> {
    let sigma = d.involution();
    let alpha = match sigma.sym_plus_member(x)? {
        crate::involution::PlusVerdict::Yes(a) => a,
        crate::involution::PlusVerdict::No(why) => return Err(Error::BadChoice(format!("x not in Sym⁺: {why}"))),
    };
    if alpha.is_zero() || alpha.is_square()?.is_some() {
        return Err(Error::SquareInput);
    }
    let Some(w) = isotropy_witness(d)? else {
        return Err(Error::NotIsotropic);
    };
    let y = w.y;
    let pos = pos_iterate(d, x, &y, cap)?;
    let r = pos.k;
    let xr = x.pow(r as u32)?;
    if pos.power == xr {
        return Err(Error::ContractViolation("(xy)^r equals x^r".into()));
    }
    let z = pos.power.add(&xr)?;
    if z.is_zero() || !z.commutes_with(x)? || !sigma.apply(&z)?.mul(&z)?.is_zero() {
        return Err(Error::ContractViolation("met isotropy vector failed re-verification".into()));
    }
    Ok(MetWitness { y, r, z })
}

/// Coordinates of an element of span{v^T} in the monomial basis.
pub(crate) fn monomial_coordinates(d: &DecomposedAlgebra, x: &AlgElement) -> Result<Option<Vec<crate::field::RatFunc>>> {
    let monos = d.v_monomials()?;
    let cols: Vec<_> = monos.iter().map(|m| m.coords().to_vec()).collect();
    let m = Matrix::from_columns(d.ctx(), d.algebra().dim(), &cols)?;
    m.solve(x.coords())
}

/// Sum c_T^2 (v^T)^2 = target over F^2 with c re-verified in the algebra.
pub(crate) fn solve_square_in_s(d: &DecomposedAlgebra, target: &crate::field::RatFunc) -> Result<Option<AlgElement>> {
    let monos = d.v_monomials()?;
    let squares = monos
        .iter()
        .map(|m| m.square()?.is_scalar().ok_or_else(|| Error::ContractViolation("non-scalar square".into())))
        .collect::<Result<Vec<_>>>()?;
    let Some(sol) = solve_frobenius_single(target, &squares)? else {
        return Ok(None);
    };
    let mut x = d.algebra().zero();
    for (c, mono) in sol.iter().zip(&monos) {
        if !c.is_zero() {
            x = x.add(&mono.scale(c)?)?;
        }
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::super::tests::instance;
    use super::super::lemma3_pair;
    use super::*;

    #[test]
    fn isotropy_matches_invariant() {
        let an = instance(&["x", "y", "z", "w"], &[("x", "y"), ("z", "w")], 0);
        assert!(isotropy_witness(&an).unwrap().is_none());
        let m = instance(&["a"], &[], 1);
        assert!(isotropy_witness(&m).unwrap().is_some());
        let l3 = instance(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")], 1);
        assert_eq!(l3.i_invariant().unwrap(), 1);
        assert!(isotropy_witness(&l3).unwrap().is_some());
    }

    #[test]
    fn pos_trivial_cases() {
        let d = instance(&["a", "b"], &[("a", "b")], 1);
        let x = d.v(0);
        let r = pos_iterate(&d, &x, &d.algebra().one(), None).unwrap();
        assert_eq!(r.k, 1);
        let r = pos_iterate(&d, &x, &d.v(1), None).unwrap();
        assert_eq!(r.k, 1);
    }

    #[test]
    fn pos_noncommuting_pair() {
        let d = instance(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")], 1);
        let (s1, s2) = lemma3_pair(&d).unwrap();
        let mut found = 0;
        for x in s2.generators() {
            for y in s1.generators() {
                let c = x.commutes_with(y).unwrap();
                let r = pos_iterate(&d, x, y, None).unwrap();
                if !c { found += 1; }
                assert!(d.involution().sym_plus_member(&r.power).unwrap().is_yes());
            }
        }
        assert!(found > 0);
    }

    #[test]
    fn met_on_small_instances() {
        let d = instance(&["a", "b"], &[("a", "b")], 1);
        let w = met_isotropy_vector(&d, &d.v(0), None).unwrap();
        assert_eq!(w.r, 1);
        let an = instance(&["x", "y", "z", "w"], &[("x", "y"), ("z", "w")], 0);
        assert_eq!(met_isotropy_vector(&an, &an.v(0), None).err(), Some(Error::NotIsotropic));
        let l3 = instance(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")], 1);
        let (_, s2) = lemma3_pair(&l3).unwrap();
        let w = met_isotropy_vector(&l3, &s2.generators()[0], None).unwrap();
        assert!(w.z.commutes_with(&s2.generators()[0]).unwrap());
    }
}
