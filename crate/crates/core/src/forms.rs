//! Diagonal symmetric bilinear forms and bilinear Pfister forms in
//! characteristic 2.
//!
//! For a diagonal form b = <a_1, ..., a_n> we have b(v, v) = sum a_i v_i^2,
//! so the value set Q(b) is the F^2-span of the entries and isotropy is
//! F^2-linear dependence of the entries.

use crate::field::{frobenius_matrix, solve_frobenius_single, FieldCtx, RatFunc};
use crate::involution::{quat_discriminant, Involution};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalForm {
    ctx: FieldCtx,
    entries: Vec<RatFunc>,
}

impl DiagonalForm {
    pub fn new(ctx: &FieldCtx, entries: Vec<RatFunc>) -> Result<DiagonalForm> {
        for e in &entries {
            if e.ctx() != ctx {
                return Err(Error::ContextMismatch);
            }
            if e.is_zero() {
                return Err(Error::ZeroEntry);
            }
        }
        Ok(DiagonalForm { ctx: ctx.clone(), entries })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn entries(&self) -> &[RatFunc] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// b(v, v) = sum a_i v_i^2.
    pub fn value(&self, v: &[RatFunc]) -> Result<RatFunc> {
        if v.len() != self.entries.len() {
            return Err(Error::DimensionMismatch("vector length".into()));
        }
        let mut acc = self.ctx.zero();
        for (a, x) in self.entries.iter().zip(v) {
            if !x.is_zero() {
                acc = acc.add(&a.mul(&x.square()?)?)?;
            }
        }
        Ok(acc)
    }

    /// Rank over F^2 of the entries.
    pub fn frobenius_rank(&self) -> Result<usize> {
        if self.entries.is_empty() {
            return Ok(0);
        }
        let (_, _, m) = frobenius_matrix(&self.ctx, &self.entries, &[])?;
        m.rank()
    }
}

/// Entries are all pairwise products, a-major.
pub fn tensor_forms(a: &DiagonalForm, b: &DiagonalForm) -> Result<DiagonalForm> {
    if a.ctx != b.ctx {
        return Err(Error::ContextMismatch);
    }
    let mut entries = Vec::with_capacity(a.len() * b.len());
    for x in &a.entries {
        for y in &b.entries {
            entries.push(x.mul(y)?);
        }
    }
    DiagonalForm::new(&a.ctx, entries)
}

/// A vector v with b(v, v) = target, re-verified. For target 0 the witness
/// is a nonzero isotropic vector, so its existence means b is isotropic.
pub fn q_value_membership(b: &DiagonalForm, target: &RatFunc) -> Result<Option<Vec<RatFunc>>> {
    if target.is_zero() {
        return isotropy_vector(b);
    }
    let Some(v) = solve_frobenius_single(target, &b.entries)? else {
        return Ok(None);
    };
    if b.value(&v)? != *target {
        return Err(Error::ContractViolation("value witness failed re-verification".into()));
    }
    Ok(Some(v))
}

/// A nonzero v with b(v, v) = 0, i.e. an F^2-dependence of the entries.
pub fn isotropy_vector(b: &DiagonalForm) -> Result<Option<Vec<RatFunc>>> {
    if b.entries.is_empty() {
        return Ok(None);
    }
    let (_, _, m) = frobenius_matrix(&b.ctx, &b.entries, &[])?;
    let Some(v) = m.kernel_basis()?.into_iter().next() else {
        return Ok(None);
    };
    if !b.value(&v)?.is_zero() {
        return Err(Error::ContractViolation("isotropy witness failed re-verification".into()));
    }
    Ok(Some(v))
}

pub fn is_anisotropic(b: &DiagonalForm) -> Result<bool> {
    Ok(isotropy_vector(b)?.is_none())
}

/// <<a_1, ..., a_n>> = <1, a_1> ⊗ ... ⊗ <1, a_n>.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PfisterForm {
    generators: Vec<RatFunc>,
    expansion: DiagonalForm,
}

impl PfisterForm {
    pub fn new(ctx: &FieldCtx, generators: Vec<RatFunc>) -> Result<PfisterForm> {
        let mut entries = Vec::with_capacity(1 << generators.len());
        for mask in 0..(1usize << generators.len()) {
            let mut p = ctx.one();
            for (i, g) in generators.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    p = p.mul(g)?;
                }
            }
            entries.push(p);
        }
        let expansion = DiagonalForm::new(ctx, entries)?;
        Ok(PfisterForm { generators, expansion })
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.expansion.ctx()
    }

    pub fn generators(&self) -> &[RatFunc] {
        &self.generators
    }

    pub fn fold(&self) -> usize {
        self.generators.len()
    }

    /// Subset products; entry at index S is the product of generators in S.
    pub fn expansion(&self) -> &DiagonalForm {
        &self.expansion
    }
}

/// i(b) = n - log2(rank over F^2 of the subset products).
pub fn i_invariant(p: &PfisterForm) -> Result<u32> {
    let r = p.expansion.frobenius_rank()?;
    if !r.is_power_of_two() {
        return Err(Error::ContractViolation(format!("F^2-rank {r} of a Pfister form is not a power of 2")));
    }
    Ok(p.fold() as u32 - r.trailing_zeros())
}

/// <<disc sigma_1, ..., disc sigma_n>> for orthogonal quaternion factors.
pub fn pfister_invariant(factors: &[&Involution]) -> Result<PfisterForm> {
    let Some(first) = factors.first() else {
        return Err(Error::DimensionMismatch("no factors".into()));
    };
    let ctx = first.algebra().ctx().clone();
    let mut gens = Vec::with_capacity(factors.len());
    for (i, s) in factors.iter().enumerate() {
        if !s.is_orthogonal() {
            return Err(Error::SymplecticFactor(i));
        }
        gens.push(quat_discriminant(s)?);
    }
    PfisterForm::new(&ctx, gens)
}

/// i of p over F(sqrt(alpha)).
pub fn i_after_sqrt_extension(p: &PfisterForm, alpha: &RatFunc) -> Result<u32> {
    let k = p.ctx().extend_by_sqrt(alpha)?;
    let gens = p.generators.iter().map(|g| k.lift(g)).collect::<Result<Vec<_>>>()?;
    i_invariant(&PfisterForm::new(&k, gens)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(vars: &[&str], exprs: &[&str]) -> (FieldCtx, Vec<RatFunc>) {
        let k = FieldCtx::new(vars).unwrap();
        let v = exprs.iter().map(|s| k.parse(s).unwrap()).collect();
        (k, v)
    }

    #[test]
    fn tensor_examples() {
        let (k, v) = f(&["x", "y"], &["1", "x", "y"]);
        let one = DiagonalForm::new(&k, vec![v[0].clone()]).unwrap();
        let b = DiagonalForm::new(&k, vec![v[0].clone(), v[2].clone()]).unwrap();
        assert_eq!(tensor_forms(&one, &b).unwrap(), b);
        let a = DiagonalForm::new(&k, vec![v[0].clone(), v[1].clone()]).unwrap();
        let t = tensor_forms(&a, &b).unwrap();
        assert_eq!(t.entries(), &[k.one(), k.var(1), k.var(0), k.parse("x*y").unwrap()]);
        let pf = PfisterForm::new(&k, vec![k.one(), k.one()]).unwrap();
        assert_eq!(pf.expansion().entries(), &vec![k.one(); 4][..]);
    }

    #[test]
    fn value_membership() {
        let (k, v) = f(&["x", "y"], &["x", "y", "x + y"]);
        let p = PfisterForm::new(&k, vec![v[0].clone(), v[1].clone()]).unwrap();
        let w = q_value_membership(p.expansion(), &v[2]).unwrap().unwrap();
        assert_eq!(w, vec![k.zero(), k.one(), k.one(), k.zero()]);
        let (k3, v3) = f(&["x", "y", "z"], &["x", "y", "z"]);
        let p3 = PfisterForm::new(&k3, vec![v3[0].clone(), v3[1].clone()]).unwrap();
        assert_eq!(q_value_membership(p3.expansion(), &v3[2]).unwrap(), None);
        assert_eq!(q_value_membership(p3.expansion(), &k3.zero()).unwrap(), None);
    }

    #[test]
    fn anisotropy() {
        let (k, v) = f(&["x", "y"], &["1", "x", "y"]);
        let b = DiagonalForm::new(&k, vec![v[0].clone(), v[0].clone()]).unwrap();
        assert_eq!(isotropy_vector(&b).unwrap(), Some(vec![k.one(), k.one()]));
        let p = PfisterForm::new(&k, vec![v[1].clone(), v[2].clone()]).unwrap();
        assert!(is_anisotropic(p.expansion()).unwrap());
        let pxx = PfisterForm::new(&k, vec![v[1].clone(), v[1].clone()]).unwrap();
        assert!(!is_anisotropic(pxx.expansion()).unwrap());
    }

    #[test]
    fn i_invariants() {
        let (k, v) = f(&["x", "y", "z"], &["1", "x", "y", "z"]);
        assert_eq!(i_invariant(&PfisterForm::new(&k, vec![k.one(), k.one()]).unwrap()).unwrap(), 2);
        let pxy = PfisterForm::new(&k, vec![v[1].clone(), v[2].clone()]).unwrap();
        assert_eq!(i_invariant(&pxy).unwrap(), 0);
        let pxx = PfisterForm::new(&k, vec![v[1].clone(), v[1].clone()]).unwrap();
        assert_eq!(i_invariant(&pxx).unwrap(), 1);
        assert_eq!(i_after_sqrt_extension(&pxy, &v[1]).unwrap(), 1);
        assert_eq!(i_after_sqrt_extension(&pxy, &v[3]).unwrap(), 0);
        let p11 = PfisterForm::new(&k, vec![k.one(), k.one(), k.one()]).unwrap();
        assert_eq!(i_after_sqrt_extension(&p11, &v[2]).unwrap(), 3);
        assert_eq!(i_after_sqrt_extension(&pxy, &k.one()).err(), Some(Error::AlreadySquare));
    }

    #[test]
    fn pfister_of_factors() {
        use crate::algebra::{make_matrix_algebra, make_quaternion};
        use crate::involution::{make_canonical, make_quat_orthogonal, make_transpose};
        let (k, v) = f(&["x", "y", "z", "w"], &["x", "y", "z", "w"]);
        let m = make_matrix_algebra(&k, 2).unwrap();
        let t = make_transpose(&m).unwrap();
        assert_eq!(pfister_invariant(&[&t]).unwrap().generators(), &[k.one()]);
        let (_, d1) = make_quaternion(&v[0], &v[1]).unwrap();
        let (_, d2) = make_quaternion(&v[2], &v[3]).unwrap();
        let t1 = make_quat_orthogonal(&d1).unwrap();
        let t2 = make_quat_orthogonal(&d2).unwrap();
        assert_eq!(pfister_invariant(&[&t1, &t2]).unwrap().generators(), &[v[1].clone(), v[3].clone()]);
        let p = pfister_invariant(&[&t1, &t]).unwrap();
        assert_eq!(p.generators(), &[v[1].clone(), k.one()]);
        assert_eq!(i_invariant(&p).unwrap(), 1);
        let g = make_canonical(&d1).unwrap();
        assert_eq!(pfister_invariant(&[&t1, &g]).err(), Some(Error::SymplecticFactor(1)));
    }
}
