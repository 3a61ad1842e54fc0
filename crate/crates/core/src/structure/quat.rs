//! Search for a sigma-stable quaternion subalgebra containing a given
//! symmetric element.
//!
//! With x' = x + lambda alternating, we look for u with u x' + x' u = x',
//! sigma(u) = u and u^2 + u scalar. The first two conditions are linear.
//! The third is handled by a correction u -> u + c with c in S: since c^2
//! is a scalar, (u + c)^2 + (u + c) is scalar iff u^2 + u + uc + cu + c is,
//! which is linear in c.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::iterate::monomial_coordinates;
use super::{DecomposedAlgebra, SubalgebraDesc};
use crate::algebra::{AlgElement, QuaternionDesc, Subalgebra};
use crate::field::RatFunc;
use crate::involution::PlusVerdict;
use crate::linalg::Matrix;
use crate::{Error, Result};

/// Hard ceiling on random trials.
pub const MAX_TRIALS: usize = 10_000;

#[derive(Debug, Clone, Copy)]
pub struct QuatSearchOptions {
    pub seed: u64,
    pub max_trials: usize,
}

impl Default for QuatSearchOptions {
    fn default() -> Self {
        QuatSearchOptions { seed: 0x5eed, max_trials: 256 }
    }
}

/// How the quaternion was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuatMethod {
    /// u = sum of the factor u_i over a set meeting every monomial of x' oddly.
    Structured,
    /// Particular solution of the linear conditions plus an S-correction.
    Affine,
    /// Random point of the solution family plus an S-correction.
    Sampled(usize),
}

#[derive(Debug, Clone)]
pub struct QuatSubalgebra {
    /// x' = x + lambda lies in Alt.
    pub lambda: RatFunc,
    /// (1, u, x', u x').
    pub desc: QuaternionDesc,
    pub subalgebra: Subalgebra,
    pub method: QuatMethod,
}

impl QuatSubalgebra {
    pub fn u(&self) -> &AlgElement {
        &self.desc.u
    }
}

pub fn quat_subalgebra_containing(
    d: &DecomposedAlgebra,
    x: &AlgElement,
    s: &SubalgebraDesc,
    opts: QuatSearchOptions,
) -> Result<QuatSubalgebra> {
    let sigma = d.involution();
    let alg = d.algebra();
    if !s.contains(x)? {
        return Err(Error::BadChoice("x is not in S".into()));
    }
    let alpha = match sigma.sym_plus_member(x)? {
        PlusVerdict::Yes(a) => a,
        PlusVerdict::No(why) => return Err(Error::BadChoice(format!("x not in Sym⁺: {why}"))),
    };
    if alpha.is_zero() || alpha.is_square()?.is_some() {
        return Err(Error::SquareInput);
    }
    let lambda = sigma
        .alt_plus_f_member(x)?
        .ok_or_else(|| Error::BadChoice("x + lambda is alternating for no lambda".into()))?;
    let xp = x.add(&alg.scalar(&lambda))?;
    let s_basis = s.basis();
    let finish = |u: AlgElement, method: QuatMethod| finalize(d, x, &xp, &lambda, u, method);

    if let Some(u) = structured_candidate(d, &xp)? {
        if let Ok(q) = finish(u, QuatMethod::Structured) {
            return Ok(q);
        }
    }

    // linear conditions: (L_x' + R_x') u = x', (sigma + 1) u = 0
    let n = alg.dim();
    let ad = alg.left_mul_matrix(&xp)?.add(&alg.right_mul_matrix(&xp)?)?;
    let sym = sigma.matrix().add(&Matrix::identity(d.ctx(), n))?;
    let mut rows: Vec<Vec<RatFunc>> = (0..n).map(|i| ad.row(i).to_vec()).collect();
    rows.extend((0..n).map(|i| sym.row(i).to_vec()));
    let sys = Matrix::from_rows(d.ctx(), rows)?;
    let mut rhs = xp.coords().to_vec();
    rhs.extend(std::iter::repeat_n(d.ctx().zero(), n));
    let Some(u0) = sys.solve(&rhs)? else {
        return Err(Error::SearchExhausted(0));
    };
    let u0 = alg.element(u0)?;
    if let Some(u) = s_correction(d, &u0, &s_basis)? {
        if let Ok(q) = finish(u, QuatMethod::Affine) {
            return Ok(q);
        }
    }

    let family = sys.kernel_basis()?;
    let trials = opts.max_trials.min(MAX_TRIALS);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for t in 1..=trials {
        let mut u = u0.clone();
        for k in &family {
            if rng.gen_bool(0.5) {
                let c = d.ctx().random_poly(&mut rng, 1);
                if !c.is_zero() {
                    u = u.add(&alg.element(k.clone())?.scale(&c)?)?;
                }
            }
        }
        if let Some(u) = s_correction(d, &u, &s_basis)? {
            if let Ok(q) = finish(u, QuatMethod::Sampled(t)) {
                return Ok(q);
            }
        }
    }
    Err(Error::SearchExhausted(trials))
}

/// Lambda subset of factors with |Lambda ∩ T| odd for every monomial v^T in
/// the support of x'; then u = sum_{i in Lambda} u_i.
fn structured_candidate(d: &DecomposedAlgebra, xp: &AlgElement) -> Result<Option<AlgElement>> {
    let Some(coords) = monomial_coordinates(d, xp)? else {
        return Ok(None);
    };
    let support: Vec<usize> = coords.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(t, _)| t).collect();
    let n = d.n();
    let mut masks: Vec<usize> = (1..(1usize << n)).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for lam in masks {
        if support.iter().all(|t| (t & lam).count_ones() % 2 == 1) {
            let mut u = d.algebra().zero();
            for i in (0..n).filter(|i| lam & (1 << i) != 0) {
                u = u.add(&d.u(i))?;
            }
            return Ok(Some(u));
        }
    }
    Ok(None)
}

/// u + c with c in S making (u + c)^2 + (u + c) scalar, if such c exists.
fn s_correction(d: &DecomposedAlgebra, u: &AlgElement, s_basis: &[AlgElement]) -> Result<Option<AlgElement>> {
    let alg = d.algebra();
    let q = u.square()?.add(u)?;
    if q.is_scalar().is_some() {
        return Ok(Some(u.clone()));
    }
    let mut cols = Vec::with_capacity(s_basis.len() + 1);
    for b in s_basis {
        cols.push(u.mul(b)?.add(&b.mul(u)?)?.add(b)?.into_coords());
    }
    cols.push(alg.one().into_coords());
    let m = Matrix::from_columns(d.ctx(), alg.dim(), &cols)?;
    let Some(sol) = m.solve(q.coords())? else {
        return Ok(None);
    };
    let mut out = u.clone();
    for (c, b) in sol.iter().zip(s_basis) {
        if !c.is_zero() {
            out = out.add(&b.scale(c)?)?;
        }
    }
    Ok(Some(out))
}

/// Checks every relation and builds the subalgebra.
fn finalize(
    d: &DecomposedAlgebra,
    x: &AlgElement,
    xp: &AlgElement,
    lambda: &RatFunc,
    u: AlgElement,
    method: QuatMethod,
) -> Result<QuatSubalgebra> {
    let sigma = d.involution();
    let alg = d.algebra();
    let fail = |what: &str| Error::ContractViolation(format!("quaternion candidate: {what}"));
    if u.mul(xp)?.add(&xp.mul(&u)?)? != *xp {
        return Err(fail("ux' + x'u != x'"));
    }
    if !sigma.is_symmetric(&u)? {
        return Err(fail("u not symmetric"));
    }
    let a = u.square()?.add(&u)?.is_scalar().ok_or_else(|| fail("u^2 + u not scalar"))?;
    let b = xp.square()?.is_scalar().ok_or_else(|| fail("x'^2 not scalar"))?;
    let desc = QuaternionDesc { alpha: a, beta: b, one: alg.one(), w: u.mul(xp)?, u, v: xp.clone() };
    desc.verify()?;
    let sub = alg.generated_subalgebra(&[desc.u.clone(), desc.v.clone()])?;
    if sub.dim() != 4 {
        return Err(fail("span is not 4-dimensional"));
    }
    for e in sub.basis() {
        if !sub.contains(&sigma.apply(&e)?)? {
            return Err(fail("span not sigma-stable"));
        }
    }
    if !sub.contains(x)? {
        return Err(fail("x outside the span"));
    }
    Ok(QuatSubalgebra { lambda: lambda.clone(), desc, subalgebra: sub, method })
}

#[cfg(test)]
mod tests {
    use super::super::tests::instance;
    use super::super::lemma3_pair;
    use super::*;

    #[test]
    fn finds_quaternion_for_generator() {
        let d = instance(&["x", "y", "z", "w"], &[("x", "y"), ("z", "w")], 0);
        let s = d.default_inseparable().unwrap();
        let q = quat_subalgebra_containing(&d, &d.v(0), &s, QuatSearchOptions::default()).unwrap();
        assert_eq!(q.method, QuatMethod::Structured);
        assert_eq!(q.desc.beta, d.ctx().parse("y").unwrap());
    }

    #[test]
    fn mixed_element_uses_fallback() {
        let d = instance(&["x", "y", "z", "w"], &[("x", "y"), ("z", "w")], 0);
        let s = d.default_inseparable().unwrap();
        let x = d.v(0).add(&d.v(1)).unwrap().add(&d.v(0).mul(&d.v(1)).unwrap()).unwrap();
        let q = quat_subalgebra_containing(&d, &x, &s, QuatSearchOptions::default()).unwrap();
        assert!(q.subalgebra.contains(&x).unwrap());
    }

    #[test]
    fn degree_eight_element() {
        let d = instance(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")], 1);
        let (s1, _) = lemma3_pair(&d).unwrap();
        let x = d.v(0).mul(&d.v(1)).unwrap();
        quat_subalgebra_containing(&d, &x, &s1, QuatSearchOptions::default()).unwrap();
        assert_eq!(
            quat_subalgebra_containing(&d, &d.algebra().one(), &s1, QuatSearchOptions::default()).err(),
            Some(Error::SquareInput)
        );
    }
}
