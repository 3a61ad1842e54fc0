//! Totally decomposable algebras with orthogonal involution and the
//! constructions on them: inseparable subalgebras, isotropy and
//! representation witnesses, quaternion subalgebras containing a given
//! element, and the count witness.

mod count;
mod exm1;
mod iterate;
mod quat;
mod represent;

use serde::{Deserialize, Serialize};

use crate::algebra::{make_matrix_algebra, make_quaternion, AlgElement, QuaternionDesc, StructAlgebra, Subalgebra};
use crate::field::{FieldCtx, RatFunc};
use crate::forms::{i_invariant, pfister_invariant, PfisterForm};
use crate::involution::{make_canonical, make_quat_orthogonal, make_transpose, tensor_involution, Involution};
use crate::linalg::{to_sparse, SparseRow};
use crate::{Error, Result};

pub use count::count_witness;
pub use exm1::{exm1_partial, Exm1Report};
pub use iterate::{isotropy_witness, met_isotropy_vector, pos_iterate, IsotropyWitness, MetWitness, PosResult};
pub use quat::{quat_subalgebra_containing, QuatSearchOptions, QuatSubalgebra};
pub use represent::{cor_ia_check, represents, CorIa, Representation};

/// Which involution a quaternion factor carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QuatInvolution {
    /// tau: u, v fixed (orthogonal).
    Tau,
    /// canonical involution (symplectic).
    Gamma,
}

/// Input description of one tensor factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorSpec {
    Quat { alpha: RatFunc, beta: RatFunc, involution: QuatInvolution },
    /// (M_2(F), t).
    M2T,
}

impl FactorSpec {
    /// Parses `m2t` or `[alpha,beta)`, the latter with the orthogonal
    /// involution tau.
    pub fn parse(ctx: &FieldCtx, text: &str) -> Result<FactorSpec> {
        let t = text.trim();
        if t.eq_ignore_ascii_case("m2t") {
            return Ok(FactorSpec::M2T);
        }
        let inner = t
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("factor {t:?} is neither [alpha,beta) nor m2t")))?;
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("factor {t:?} needs two slots")))?;
        Ok(FactorSpec::Quat { alpha: ctx.parse(a)?, beta: ctx.parse(b)?, involution: QuatInvolution::Tau })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorKind {
    Quaternion,
    MatrixTranspose,
}

/// One factor (Q_i, sigma_i) with a quaternion basis (1, u, v, w) whose u
/// and v are symmetric.
#[derive(Debug, Clone)]
pub struct Factor {
    pub kind: FactorKind,
    pub algebra: StructAlgebra,
    pub involution: Involution,
    pub basis: QuaternionDesc,
}

impl Factor {
    pub fn from_spec(ctx: &FieldCtx, spec: &FactorSpec) -> Result<Factor> {
        match spec {
            FactorSpec::Quat { alpha, beta, involution } => {
                let (algebra, basis) = make_quaternion(alpha, beta)?;
                let involution = match involution {
                    QuatInvolution::Tau => make_quat_orthogonal(&basis)?,
                    QuatInvolution::Gamma => make_canonical(&basis)?,
                };
                Ok(Factor { kind: FactorKind::Quaternion, algebra, involution, basis })
            }
            FactorSpec::M2T => {
                let algebra = make_matrix_algebra(ctx, 2)?;
                let involution = make_transpose(&algebra)?;
                let e = |l: &str| algebra.basis(algebra.basis_index(l).expect("matrix unit"));
                // u = e11, v = e12 + e21, w = uv = e12: a quaternion basis of [0, 1)
                let basis = QuaternionDesc {
                    alpha: ctx.zero(),
                    beta: ctx.one(),
                    one: algebra.one(),
                    u: e("e11"),
                    v: e("e12").add(&e("e21"))?,
                    w: e("e12"),
                };
                basis.verify()?;
                Ok(Factor { kind: FactorKind::MatrixTranspose, algebra, involution, basis })
            }
        }
    }
}

/// (A, sigma) = ⊗ (Q_i, sigma_i), assembled left to right.
#[derive(Debug, Clone)]
pub struct DecomposedAlgebra {
    ctx: FieldCtx,
    factors: Vec<Factor>,
    algebra: StructAlgebra,
    involution: Involution,
}

impl DecomposedAlgebra {
    pub fn new(ctx: &FieldCtx, specs: &[FactorSpec]) -> Result<DecomposedAlgebra> {
        if specs.is_empty() {
            return Err(Error::WrongShape("at least one factor is required".into()));
        }
        let factors = specs.iter().map(|s| Factor::from_spec(ctx, s)).collect::<Result<Vec<_>>>()?;
        DecomposedAlgebra::from_factors(ctx, factors)
    }

    pub fn from_factors(ctx: &FieldCtx, factors: Vec<Factor>) -> Result<DecomposedAlgebra> {
        for (i, f) in factors.iter().enumerate() {
            if !f.involution.is_orthogonal() {
                return Err(Error::SymplecticFactor(i));
            }
            if f.algebra.ctx() != ctx {
                return Err(Error::ContextMismatch);
            }
        }
        let mut involution = factors[0].involution.clone();
        for f in &factors[1..] {
            involution = tensor_involution(&involution, &f.involution)?;
        }
        let algebra = involution.algebra().clone();
        Ok(DecomposedAlgebra { ctx: ctx.clone(), factors, algebra, involution })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    /// Number of factors n (degree 2^n).
    pub fn n(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn algebra(&self) -> &StructAlgebra {
        &self.algebra
    }

    pub fn involution(&self) -> &Involution {
        &self.involution
    }

    /// x_1 ⊗ ... ⊗ x_n with `None` standing for 1.
    pub fn pure_tensor(&self, parts: &[Option<&AlgElement>]) -> Result<AlgElement> {
        if parts.len() != self.n() {
            return Err(Error::DimensionMismatch("one part per factor".into()));
        }
        let mut acc: SparseRow = vec![(0, self.ctx.one())];
        for (f, p) in self.factors.iter().zip(parts) {
            let v = match p {
                Some(x) => {
                    if x.algebra() != &f.algebra {
                        return Err(Error::DimensionMismatch("part outside its factor".into()));
                    }
                    to_sparse(x.coords())
                }
                None => to_sparse(f.algebra.one().coords()),
            };
            let d = f.algebra.dim();
            let mut next = Vec::with_capacity(acc.len() * v.len());
            for (i, a) in &acc {
                for (j, b) in &v {
                    next.push((i * d + j, a.mul(b)?));
                }
            }
            acc = next;
        }
        let mut out = self.algebra.zero().into_coords();
        for (i, c) in acc {
            out[i] = c;
        }
        self.algebra.element(out)
    }

    /// Embedding of an element of factor i.
    pub fn embed(&self, i: usize, x: &AlgElement) -> Result<AlgElement> {
        let mut parts = vec![None; self.n()];
        parts[i] = Some(x);
        self.pure_tensor(&parts)
    }

    /// The symmetric u of factor i, embedded.
    pub fn u(&self, i: usize) -> AlgElement {
        self.embed(i, &self.factors[i].basis.u).expect("factor element")
    }

    /// The alternating unit v of factor i, embedded.
    pub fn v(&self, i: usize) -> AlgElement {
        self.embed(i, &self.factors[i].basis.v).expect("factor element")
    }

    pub fn pfister(&self) -> Result<PfisterForm> {
        let invs: Vec<&Involution> = self.factors.iter().map(|f| &f.involution).collect();
        pfister_invariant(&invs)
    }

    pub fn i_invariant(&self) -> Result<u32> {
        i_invariant(&self.pfister()?)
    }

    /// Index of the last (M_2, t) factor.
    pub fn transpose_factor(&self) -> Option<usize> {
        self.factors.iter().rposition(|f| f.kind == FactorKind::MatrixTranspose)
    }

    /// Products v^T = prod_{i in T} v_i for all subsets T (bit i = factor i).
    pub fn v_monomials(&self) -> Result<Vec<AlgElement>> {
        let n = self.n();
        (0..(1usize << n))
            .map(|mask| {
                let parts: Vec<Option<&AlgElement>> = (0..n)
                    .map(|i| (mask & (1 << i) != 0).then_some(&self.factors[i].basis.v))
                    .collect();
                self.pure_tensor(&parts)
            })
            .collect()
    }

    /// F[v_1, ..., v_n].
    pub fn default_inseparable(&self) -> Result<SubalgebraDesc> {
        let choices: Vec<AlgElement> = self.factors.iter().map(|f| f.basis.v.clone()).collect();
        build_inseparable(self, &choices)
    }
}

/// The five conditions of an inseparable subalgebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InseparableFlags {
    pub dim_ok: bool,
    pub self_centralizing: bool,
    pub in_sym_plus: bool,
    pub in_alt_plus_f: bool,
    pub gen_count_ok: bool,
}

impl InseparableFlags {
    pub fn verdict(&self) -> bool {
        self.dim_ok && self.self_centralizing && self.in_sym_plus && self.in_alt_plus_f && self.gen_count_ok
    }
}

/// A subalgebra of a decomposed algebra with its inseparability flags.
#[derive(Debug, Clone)]
pub struct SubalgebraDesc {
    pub subalgebra: Subalgebra,
    pub flags: InseparableFlags,
}

impl SubalgebraDesc {
    pub fn is_inseparable(&self) -> bool {
        self.flags.verdict()
    }

    pub fn generators(&self) -> &[AlgElement] {
        self.subalgebra.generators()
    }

    pub fn basis(&self) -> Vec<AlgElement> {
        self.subalgebra.basis()
    }

    pub fn dim(&self) -> usize {
        self.subalgebra.dim()
    }

    pub fn same_span(&self, o: &SubalgebraDesc) -> bool {
        self.subalgebra.same_span(&o.subalgebra)
    }

    pub fn contains(&self, x: &AlgElement) -> Result<bool> {
        self.subalgebra.contains(x)
    }
}

/// Evaluates the inseparability conditions for a subalgebra of D.
pub fn check_inseparable(d: &DecomposedAlgebra, s: &Subalgebra) -> Result<InseparableFlags> {
    if s.algebra() != d.algebra() {
        return Err(Error::NotSubalgebra("subalgebra of a different algebra".into()));
    }
    s.verify_closed()?;
    let sigma = d.involution();
    let basis = s.basis();
    let dim_ok = s.dim() == 1 << d.n();
    let gens: Vec<AlgElement> = if s.generators().is_empty() { basis.clone() } else { s.generators().to_vec() };
    let self_centralizing = d.algebra().centralizer(&gens)? == *s.space();
    let mut in_sym_plus = true;
    for (i, b) in basis.iter().enumerate() {
        if !sigma.sym_plus_member(b)?.is_yes() {
            in_sym_plus = false;
            break;
        }
        for c in &basis[i + 1..] {
            if !b.commutes_with(c)? {
                in_sym_plus = false;
                break;
            }
        }
    }
    let mut in_alt_plus_f = true;
    for b in &basis {
        if sigma.alt_plus_f_member(b)?.is_none() {
            in_alt_plus_f = false;
            break;
        }
    }
    let gen_count_ok = s.generators().len() <= d.n();
    Ok(InseparableFlags { dim_ok, self_centralizing, in_sym_plus, in_alt_plus_f, gen_count_ok })
}

/// Subalgebra generated by the given elements, with flags.
pub fn describe_subalgebra(d: &DecomposedAlgebra, gens: &[AlgElement]) -> Result<SubalgebraDesc> {
    let subalgebra = d.algebra().generated_subalgebra(gens)?;
    let flags = check_inseparable(d, &subalgebra)?;
    Ok(SubalgebraDesc { subalgebra, flags })
}

/// F[v_1, ..., v_n] for per-factor choices v_i in Sym(Q_i, sigma_i)⁺ \ F.
pub fn build_inseparable(d: &DecomposedAlgebra, choices: &[AlgElement]) -> Result<SubalgebraDesc> {
    if choices.len() != d.n() {
        return Err(Error::BadChoice(format!("{} choices for {} factors", choices.len(), d.n())));
    }
    let mut gens = Vec::with_capacity(d.n());
    for (i, (f, c)) in d.factors().iter().zip(choices).enumerate() {
        if c.algebra() != &f.algebra {
            return Err(Error::BadChoice(format!("choice {i} is not in its factor")));
        }
        if !f.involution.sym_plus_member(c)?.is_yes() {
            return Err(Error::BadChoice(format!("choice {i} is not in Sym⁺")));
        }
        if c.is_scalar().is_some() {
            return Err(Error::BadChoice(format!("choice {i} is a scalar")));
        }
        if !c.is_unit()? {
            return Err(Error::BadChoice(format!("choice {i} is not a unit")));
        }
        gens.push(d.embed(i, c)?);
    }
    let desc = describe_subalgebra(d, &gens)?;
    if !desc.is_inseparable() {
        return Err(Error::ContractViolation(format!("F[v_1..v_n] fails inseparability: {:?}", desc.flags)));
    }
    Ok(desc)
}

/// Factor indices (first, second, transpose) used by the two-subalgebra
/// construction: the last (M_2, t) factor and the last two others.
fn lemma3_indices(d: &DecomposedAlgebra) -> Result<(usize, usize, usize)> {
    let m = d
        .transpose_factor()
        .ok_or_else(|| Error::WrongShape("no (M_2, t) factor".into()))?;
    let others: Vec<usize> = (0..d.n()).filter(|&i| i != m).collect();
    if others.len() < 2 {
        return Err(Error::WrongShape("need two factors besides (M_2, t)".into()));
    }
    Ok((others[others.len() - 2], others[others.len() - 1], m))
}

/// v'_1 = u_2 v_1 + (u_2 v_1 + v_1) v_3 and v'_2 = u_1 v_2 + (u_1 v_2 + v_2) v_3.
fn twisted_generators(d: &DecomposedAlgebra, i1: usize, i2: usize, m: usize) -> Result<(AlgElement, AlgElement)> {
    let v3 = d.v(m);
    let a = d.u(i2).mul(&d.v(i1))?;
    let v1p = a.add(&a.add(&d.v(i1))?.mul(&v3)?)?;
    let b = d.u(i1).mul(&d.v(i2))?;
    let v2p = b.add(&b.add(&d.v(i2))?.mul(&v3)?)?;
    Ok((v1p, v2p))
}

/// The two distinct inseparable subalgebras of a degree-8 algebra with an
/// (M_2, t) factor: S_1 = F[v_1, v_2, v_3] and S_2 = F[v'_1, v'_2, v_3].
pub fn lemma3_pair(d: &DecomposedAlgebra) -> Result<(SubalgebraDesc, SubalgebraDesc)> {
    if d.n() != 3 {
        return Err(Error::WrongShape(format!("degree-8 algebra required, got {} factors", d.n())));
    }
    nonuniqueness_extend(d)
}

/// S ⊗ S_1 and S ⊗ S_2 for n >= 3 with an (M_2, t) factor, where S is
/// F[v_i] on the remaining factors.
pub fn nonuniqueness_extend(d: &DecomposedAlgebra) -> Result<(SubalgebraDesc, SubalgebraDesc)> {
    if d.n() < 3 {
        return Err(Error::WrongShape("at least three factors required".into()));
    }
    let (i1, i2, m) = lemma3_indices(d)?;
    let rest: Vec<AlgElement> = (0..d.n()).filter(|&i| i != i1 && i != i2 && i != m).map(|i| d.v(i)).collect();
    let (v1p, v2p) = twisted_generators(d, i1, i2, m)?;
    let mut g1 = rest.clone();
    g1.extend([d.v(i1), d.v(i2), d.v(m)]);
    let mut g2 = rest;
    g2.extend([v1p, v2p, d.v(m)]);
    let s1 = describe_subalgebra(d, &g1)?;
    let s2 = describe_subalgebra(d, &g2)?;
    Ok((s1, s2))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn instance(vars: &[&str], quats: &[(&str, &str)], m2t: usize) -> DecomposedAlgebra {
        let k = FieldCtx::new(vars).unwrap();
        let mut specs: Vec<FactorSpec> = quats
            .iter()
            .map(|(a, b)| FactorSpec::Quat {
                alpha: k.parse(a).unwrap(),
                beta: k.parse(b).unwrap(),
                involution: QuatInvolution::Tau,
            })
            .collect();
        specs.extend(std::iter::repeat_n(FactorSpec::M2T, m2t));
        DecomposedAlgebra::new(&k, &specs).unwrap()
    }

    #[test]
    fn default_inseparable_passes() {
        let d = instance(&["x", "y", "z", "w"], &[("x", "y"), ("z", "w")], 0);
        let s = d.default_inseparable().unwrap();
        assert!(s.is_inseparable());
        assert_eq!(s.dim(), 4);
        assert_eq!(d.i_invariant().unwrap(), 0);
    }

    #[test]
    fn bad_subalgebras_fail() {
        let d = instance(&["x", "y", "z", "w"], &[("x", "y"), ("z", "w")], 0);
        let s = describe_subalgebra(&d, &[d.u(0), d.v(1)]).unwrap();
        assert!(!s.flags.in_sym_plus);
        assert!(!s.is_inseparable());
        let q = instance(&["x", "y"], &[("x", "y")], 0);
        let s1 = describe_subalgebra(&q, &[]).unwrap();
        assert!(!s1.flags.dim_ok);
        let f = &d.factors()[0];
        assert!(matches!(build_inseparable(&d, &[f.basis.u.clone(), d.factors()[1].basis.v.clone()]), Err(Error::BadChoice(_))));
    }

    #[test]
    fn shifted_choice_gives_same_subalgebra() {
        let d = instance(&["x", "y", "z", "w"], &[("x", "y"), ("z", "w")], 0);
        let k = d.ctx().clone();
        let f0 = &d.factors()[0];
        let shifted = f0.basis.v.add(&f0.algebra.scalar(&k.var(2))).unwrap();
        let s = build_inseparable(&d, &[shifted, d.factors()[1].basis.v.clone()]).unwrap();
        assert!(s.same_span(&d.default_inseparable().unwrap()));
    }

    #[test]
    fn lemma3_pair_is_distinct() {
        let d = instance(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")], 1);
        let (s1, s2) = lemma3_pair(&d).unwrap();
        assert!(s1.is_inseparable(), "{:?}", s1.flags);
        assert!(s2.is_inseparable(), "{:?}", s2.flags);
        assert!(!s1.same_span(&s2));
        let v3 = d.v(2);
        assert!(s1.contains(&v3).unwrap() && s2.contains(&v3).unwrap());
        assert!(d.involution().sym_plus_member(&s2.generators()[0]).unwrap().is_yes());
    }
}
