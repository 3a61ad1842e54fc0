//! Involutions of the first kind as verified linear maps.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{self, AlgElement, AlgKind, QuaternionDesc, StructAlgebra};
use crate::field::RatFunc;
use crate::linalg::{axpy, to_dense, to_sparse, Matrix, SparseRow, Subspace, Vector};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InvolutionKind {
    Orthogonal,
    Symplectic,
}

/// Membership verdict for Sym⁺ / Alt⁺.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlusVerdict {
    /// Member; carries the scalar x^2.
    Yes(RatFunc),
    No(String),
}

impl PlusVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, PlusVerdict::Yes(_))
    }
}

/// An involution: the images of the basis elements, checked at construction
/// to square to the identity, reverse products and fix 1.
#[derive(Clone)]
pub struct Involution(Arc<InvInner>);

struct InvInner {
    alg: StructAlgebra,
    images: Vec<SparseRow>,
    kind: InvolutionKind,
    sym: Subspace,
    alt: Subspace,
}

impl fmt::Debug for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Involution({:?}, dim {})", self.0.kind, self.0.alg.dim())
    }
}

impl PartialEq for Involution {
    fn eq(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.0, &o.0) || (self.0.alg == o.0.alg && self.0.images == o.0.images)
    }
}

impl Eq for Involution {}

fn apply_sparse(images: &[SparseRow], x: &SparseRow) -> Result<SparseRow> {
    let mut acc = Vec::new();
    for (i, c) in x {
        acc = axpy(&acc, c, &images[*i])?;
    }
    Ok(acc)
}

/// sigma^2 = id and sigma(1) = 1 on the basis, anti-multiplicativity on
/// all basis pairs.
fn check_images(alg: &StructAlgebra, images: &[SparseRow]) -> Result<()> {
    let n = alg.dim();
    let ctx = alg.ctx();
    let fail = |what: String| Err(Error::ContractViolation(what));
        // sigma^2 = id
        for (i, img) in images.iter().enumerate() {
            if apply_sparse(images, img)? != vec![(i, ctx.one())] {
                return fail(format!("sigma^2 != id on {}", alg.labels()[i]));
            }
        }
        // sigma(1) = 1
        let one = to_sparse(alg.one().coords());
        if apply_sparse(images, &one)? != one {
            return fail("sigma(1) != 1".into());
        }
        // sigma(e_i e_j) = sigma(e_j) sigma(e_i)
        for i in 0..n {
            for j in 0..n {
                let lhs = apply_sparse(images, alg.product_entry(i, j))?;
                let rhs = alg.mul_sparse(&images[j], &images[i])?;
                if lhs != rhs {
                    return fail(format!(
                        "anti-multiplicativity fails on ({}, {})",
                        alg.labels()[i],
                        alg.labels()[j]
                    ));
                }
            }
        }
    Ok(())
}

impl Involution {
    /// Builds an involution from the images of the basis elements and checks
    /// the full contract on all basis elements and pairs.
    pub fn from_images(alg: &StructAlgebra, images: Vec<AlgElement>) -> Result<Involution> {
        if images.len() != alg.dim() {
            return Err(Error::DimensionMismatch("one image per basis element".into()));
        }
        let images = images.iter().map(|e| to_sparse(e.coords())).collect();
        Involution::from_sparse_images(alg, images)
    }

    pub fn from_matrix(alg: &StructAlgebra, m: &Matrix) -> Result<Involution> {
        if m.rows() != alg.dim() || m.cols() != alg.dim() {
            return Err(Error::DimensionMismatch("involution matrix shape".into()));
        }
        let images = (0..alg.dim()).map(|j| to_sparse(&m.column(j))).collect();
        Involution::from_sparse_images(alg, images)
    }

    fn from_sparse_images(alg: &StructAlgebra, images: Vec<SparseRow>) -> Result<Involution> {
        let n = alg.dim();
        let ctx = alg.ctx();
        let fail = |what: String| Err(Error::ContractViolation(what));
        check_images(alg, &images)?;
        // sigma - id, column j = sigma(e_j) + e_j
        let cols: Vec<Vector> = images
            .iter()
            .enumerate()
            .map(|(j, img)| Ok(to_dense(ctx, &axpy(img, &ctx.one(), &vec![(j, ctx.one())])?, n)))
            .collect::<Result<_>>()?;
        let m = Matrix::from_columns(ctx, n, &cols)?;
        let sym = Subspace::span(ctx, n, &m.kernel_basis()?)?;
        let alt = Subspace::span(ctx, n, &cols)?;
        if sym.dim() + alt.dim() != n {
            return fail("dim Sym + dim Alt != dim A".into());
        }
        if !sym.contains_subspace(&alt)? {
            return fail("Alt not contained in Sym".into());
        }
        let kind = if alt.contains(alg.one().coords())? {
            InvolutionKind::Symplectic
        } else {
            InvolutionKind::Orthogonal
        };
        Ok(Involution(Arc::new(InvInner { alg: alg.clone(), images, kind, sym, alt })))
    }

    /// Re-runs the exhaustive basis checks of the constructor.
    pub fn verify_exhaustive(&self) -> Result<()> {
        check_images(&self.0.alg, &self.0.images)
    }

    pub fn algebra(&self) -> &StructAlgebra {
        &self.0.alg
    }

    pub fn kind(&self) -> InvolutionKind {
        self.0.kind
    }

    pub fn is_orthogonal(&self) -> bool {
        self.0.kind == InvolutionKind::Orthogonal
    }

    pub fn image_of_basis(&self, i: usize) -> AlgElement {
        let mut e = self.0.alg.zero();
        for (j, c) in &self.0.images[i] {
            e = e.add(&self.0.alg.basis(*j).scale(c).expect("same ctx")).expect("same algebra");
        }
        e
    }

    pub fn matrix(&self) -> Matrix {
        let ctx = self.0.alg.ctx();
        let cols: Vec<Vector> = self.0.images.iter().map(|s| to_dense(ctx, s, self.0.alg.dim())).collect();
        Matrix::from_columns(ctx, self.0.alg.dim(), &cols).expect("square")
    }

    pub fn apply(&self, x: &AlgElement) -> Result<AlgElement> {
        if x.algebra() != &self.0.alg {
            return Err(Error::DimensionMismatch("element outside the involution's algebra".into()));
        }
        let s = apply_sparse(&self.0.images, &to_sparse(x.coords()))?;
        self.0.alg.element(to_dense(self.0.alg.ctx(), &s, self.0.alg.dim()))
    }

    pub fn is_symmetric(&self, x: &AlgElement) -> Result<bool> {
        Ok(self.apply(x)? == *x)
    }

    /// Sym(A, sigma) = ker(sigma - id).
    pub fn sym(&self) -> &Subspace {
        &self.0.sym
    }

    /// Alt(A, sigma) = im(sigma - id).
    pub fn alt(&self) -> &Subspace {
        &self.0.alt
    }

    pub fn sym_basis(&self) -> Vec<AlgElement> {
        self.0.alg.elements_of(&self.0.sym)
    }

    pub fn alt_basis(&self) -> Vec<AlgElement> {
        self.0.alg.elements_of(&self.0.alt)
    }

    pub fn in_alt(&self, x: &AlgElement) -> Result<bool> {
        self.0.alt.contains(x.coords())
    }

    /// Yes iff sigma(x) = x and x^2 is a scalar.
    pub fn sym_plus_member(&self, x: &AlgElement) -> Result<PlusVerdict> {
        if !self.is_symmetric(x)? {
            return Ok(PlusVerdict::No("not symmetric".into()));
        }
        Ok(match x.square()?.is_scalar() {
            Some(c) => PlusVerdict::Yes(c),
            None => PlusVerdict::No("square is not a scalar".into()),
        })
    }

    /// Yes iff x lies in Alt and x^2 is a scalar.
    pub fn alt_plus_member(&self, x: &AlgElement) -> Result<PlusVerdict> {
        if !self.in_alt(x)? {
            return Ok(PlusVerdict::No("not alternating".into()));
        }
        Ok(match x.square()?.is_scalar() {
            Some(c) => PlusVerdict::Yes(c),
            None => PlusVerdict::No("square is not a scalar".into()),
        })
    }

    /// lambda with x + lambda*1 in Alt, if one exists.
    pub fn alt_plus_f_member(&self, x: &AlgElement) -> Result<Option<RatFunc>> {
        let ctx = self.0.alg.ctx();
        let alt = &self.0.alt;
        let rx = alt.residue(x.coords())?;
        let r1 = alt.residue(self.0.alg.one().coords())?;
        if rx.is_empty() {
            return Ok(Some(ctx.zero()));
        }
        let Some((p, c1)) = r1.first() else {
            return Ok(None);
        };
        let cx = rx
            .iter()
            .find(|(q, _)| q == p)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| ctx.zero());
        let lambda = cx.div(c1)?;
        let shifted = x.add(&self.0.alg.scalar(&lambda))?;
        Ok(if alt.contains(shifted.coords())? { Some(lambda) } else { None })
    }
}

/// Transpose on M_n(F): e_ij -> e_ji.
pub fn make_transpose(alg: &StructAlgebra) -> Result<Involution> {
    let AlgKind::Matrix(n) = *alg.kind() else {
        return Err(Error::NotMatrixAlgebra);
    };
    let images = (0..n * n).map(|k| vec![((k % n) * n + k / n, alg.ctx().one())]).collect();
    Involution::from_sparse_images(alg, images)
}

/// Applies a map given on the quaternion basis (1, u, v, w) to every basis
/// element of the algebra carrying `q`.
fn quat_linear_map(q: &QuaternionDesc, targets: [AlgElement; 4]) -> Result<Vec<AlgElement>> {
    let alg = q.algebra();
    if alg.dim() != 4 {
        return Err(Error::WrongShape("quaternion basis must span a 4-dimensional algebra".into()));
    }
    (0..4)
        .map(|i| {
            let c = q.coordinates(&alg.basis(i))?;
            let mut img = alg.zero();
            for (ci, t) in c.iter().zip(&targets) {
                img = img.add(&t.scale(ci)?)?;
            }
            Ok(img)
        })
        .collect()
}

/// tau: 1, u, v fixed, w -> w + v.
pub fn make_quat_orthogonal(q: &QuaternionDesc) -> Result<Involution> {
    let images = quat_linear_map(q, [q.one.clone(), q.u.clone(), q.v.clone(), q.w.add(&q.v)?])?;
    let inv = Involution::from_images(q.algebra(), images)?;
    if !inv.is_orthogonal() || inv.alt() != &q.algebra().span(std::slice::from_ref(&q.v))? {
        return Err(Error::ContractViolation("tau is not orthogonal with Alt = span(v)".into()));
    }
    Ok(inv)
}

/// gamma(x) = x + Trd(x).
pub fn make_canonical(q: &QuaternionDesc) -> Result<Involution> {
    let images = quat_linear_map(q, [q.one.clone(), q.u.add(&q.one)?, q.v.clone(), q.w.clone()])?;
    let inv = Involution::from_images(q.algebra(), images)?;
    if inv.is_orthogonal() {
        return Err(Error::ContractViolation("canonical involution must be symplectic".into()));
    }
    Ok(inv)
}

/// Adjoint of the diagonal form <b_1, ..., b_n> on M_n(F):
/// sigma(X) = B^{-1} X^t B, so sigma(e_ij) = b_i / b_j e_ji.
pub fn make_adjoint_diagonal(entries: &[RatFunc]) -> Result<(StructAlgebra, Involution)> {
    let n = entries.len();
    let Some(first) = entries.first() else {
        return Err(Error::DimensionMismatch("empty diagonal".into()));
    };
    let ctx = first.ctx().clone();
    if entries.iter().any(|e| e.is_zero()) {
        return Err(Error::ZeroEntry);
    }
    let alg = algebra::make_matrix_algebra(&ctx, n)?;
    let mut images = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            images.push(vec![(j * n + i, entries[i].div(&entries[j])?)]);
        }
    }
    let inv = Involution::from_sparse_images(&alg, images)?;
    Ok((alg, inv))
}

/// Adjoint of the diagonal hermitian form <h_1, ..., h_n> over (Q, gamma) on
/// M_n(Q) = M_n(F) ⊗ Q: sigma(e_ij ⊗ q) = e_ji ⊗ h_j^{-1} gamma(q) h_i.
pub fn make_adjoint_hermitian(q: &QuaternionDesc, entries: &[AlgElement]) -> Result<(StructAlgebra, Involution)> {
    let n = entries.len();
    if n == 0 {
        return Err(Error::DimensionMismatch("empty hermitian diagonal".into()));
    }
    let qa = q.algebra().clone();
    let gamma = make_canonical(q)?;
    let mut inverses = Vec::with_capacity(n);
    for h in entries {
        if h.algebra() != &qa {
            return Err(Error::DimensionMismatch("hermitian entry outside the quaternion algebra".into()));
        }
        if !gamma.is_symmetric(h)? {
            return Err(Error::NonSymmetricEntry);
        }
        inverses.push(h.inverse()?.ok_or(Error::NonUnitEntry)?);
    }
    let mn = algebra::make_matrix_algebra(qa.ctx(), n)?;
    let alg = algebra::tensor(&mn, &qa)?;
    let mut images = Vec::with_capacity(alg.dim());
    for i in 0..n {
        for j in 0..n {
            for k in 0..4 {
                let val = inverses[j].mul(&gamma.apply(&qa.basis(k))?)?.mul(&entries[i])?;
                let e = algebra::embed_pair(&alg, &mn.basis(j * n + i), &val)?;
                images.push(to_sparse(e.coords()));
            }
        }
    }
    let inv = Involution::from_sparse_images(&alg, images)?;
    Ok((alg, inv))
}

/// sigma_1 ⊗ sigma_2 on the tensor product of the two algebras.
pub fn tensor_involution(s1: &Involution, s2: &Involution) -> Result<Involution> {
    let a = s1.algebra();
    let b = s2.algebra();
    let t = algebra::tensor(a, b)?;
    let db = b.dim();
    let mut images = Vec::with_capacity(t.dim());
    for i in 0..a.dim() {
        for j in 0..db {
            let mut out = Vec::new();
            for (p, x) in &s1.0.images[i] {
                for (q, y) in &s2.0.images[j] {
                    out.push((p * db + q, x.mul(y)?));
                }
            }
            out.sort_by_key(|(k, _)| *k);
            images.push(out);
        }
    }
    Involution::from_sparse_images(&t, images)
}

/// Square class of v^2 for a unit v spanning Alt(Q, sigma), as the canonical
/// square-free representative.
pub fn quat_discriminant(s: &Involution) -> Result<RatFunc> {
    if s.algebra().dim() != 4 || !s.is_orthogonal() || s.alt().dim() != 1 {
        return Err(Error::AltNotLine);
    }
    let v = s.alt_basis().remove(0);
    let c = v.square()?.is_scalar().ok_or(Error::AltNotLine)?;
    if c.is_zero() {
        return Err(Error::AltNotLine);
    }
    c.square_class_rep()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_matrix_algebra, make_quaternion};
    use crate::field::FieldCtx;

    fn ctx() -> FieldCtx {
        FieldCtx::new(&["x", "y"]).unwrap()
    }

    #[test]
    fn transpose_is_orthogonal() {
        let k = ctx();
        let m = make_matrix_algebra(&k, 2).unwrap();
        let t = make_transpose(&m).unwrap();
        let e12 = m.basis(m.basis_index("e12").unwrap());
        let e21 = m.basis(m.basis_index("e21").unwrap());
        assert_eq!(t.apply(&e12).unwrap(), e21);
        assert!(t.is_orthogonal());
        assert!(t.matrix().mul(&t.matrix()).unwrap().is_identity());
        // Alt = symmetric matrices with zero diagonal
        assert_eq!(t.alt(), &m.span(&[e12.add(&e21).unwrap()]).unwrap());
        assert_eq!(quat_discriminant(&t).unwrap(), k.one());
        let (q, _) = make_quaternion(&k.var(0), &k.var(1)).unwrap();
        assert_eq!(make_transpose(&q).err(), Some(Error::NotMatrixAlgebra));
    }

    #[test]
    fn quaternion_orthogonal() {
        let k = ctx();
        let (_, d) = make_quaternion(&k.var(0), &k.var(1)).unwrap();
        let tau = make_quat_orthogonal(&d).unwrap();
        assert_eq!(tau.apply(&d.w).unwrap(), d.w.add(&d.v).unwrap());
        assert_eq!(tau.sym().dim(), 3);
        assert_eq!(tau.alt().dim(), 1);
        assert!(tau.in_alt(&d.v).unwrap());
        assert_eq!(quat_discriminant(&tau).unwrap(), k.var(1));
        assert_eq!(tau.sym_plus_member(&d.v).unwrap(), PlusVerdict::Yes(k.var(1)));
        assert!(!tau.sym_plus_member(&d.u).unwrap().is_yes());
        assert_eq!(tau.sym_plus_member(&d.one).unwrap(), PlusVerdict::Yes(k.one()));
    }

    #[test]
    fn canonical_is_symplectic() {
        let k = ctx();
        let (q, d) = make_quaternion(&k.var(0), &k.var(1)).unwrap();
        let g = make_canonical(&d).unwrap();
        assert_eq!(g.kind(), InvolutionKind::Symplectic);
        assert_eq!(g.apply(&d.u).unwrap(), d.u.add(&q.one()).unwrap());
        assert_eq!(g.apply(&d.v).unwrap(), d.v);
        for i in 0..4 {
            let b = q.basis(i);
            assert!(g.apply(&b).unwrap().mul(&b).unwrap().is_scalar().is_some());
        }
        assert_eq!(quat_discriminant(&g).err(), Some(Error::AltNotLine));
    }

    #[test]
    fn diagonal_adjoints() {
        let k = ctx();
        let (m, s) = make_adjoint_diagonal(&[k.one(), k.one()]).unwrap();
        assert_eq!(s, make_transpose(&m).unwrap());
        let (m, s) = make_adjoint_diagonal(&[k.one(), k.var(0)]).unwrap();
        let e12 = m.basis(m.basis_index("e12").unwrap());
        let e21 = m.basis(m.basis_index("e21").unwrap());
        assert_eq!(s.apply(&e12).unwrap(), e21.scale(&k.var(0).inv().unwrap()).unwrap());
        assert_eq!(quat_discriminant(&s).unwrap(), k.var(0));
        assert_eq!(make_adjoint_diagonal(&[k.one(), k.zero()]).err(), Some(Error::ZeroEntry));
    }

    #[test]
    fn hermitian_adjoints() {
        let k = ctx();
        let (q, d) = make_quaternion(&k.var(0), &k.var(1)).unwrap();
        let (a1, s1) = make_adjoint_hermitian(&d, &[q.one()]).unwrap();
        assert_eq!(a1.dim(), 4);
        assert_eq!(s1.kind(), InvolutionKind::Symplectic);
        let (a2, s2) = make_adjoint_hermitian(&d, &[q.one(), d.v.clone()]).unwrap();
        assert_eq!(a2.dim(), 16);
        assert!(s2.matrix().mul(&s2.matrix()).unwrap().is_identity());
        assert_eq!(make_adjoint_hermitian(&d, std::slice::from_ref(&d.u)).err(), Some(Error::NonSymmetricEntry));
        let nil = q.zero();
        assert_eq!(make_adjoint_hermitian(&d, &[nil]).err(), Some(Error::NonUnitEntry));
    }

    #[test]
    fn tensor_involutions() {
        let k = ctx();
        let m = make_matrix_algebra(&k, 2).unwrap();
        let t = make_transpose(&m).unwrap();
        let tt = tensor_involution(&t, &t).unwrap();
        assert!(tt.is_orthogonal());
        assert!(tt.matrix().mul(&tt.matrix()).unwrap().is_identity());
        let (_, d) = make_quaternion(&k.var(0), &k.var(1)).unwrap();
        let tau = make_quat_orthogonal(&d).unwrap();
        let st = tensor_involution(&tau, &t).unwrap();
        assert_eq!(st.sym().dim() + st.alt().dim(), 16);
        assert!(st.is_orthogonal());
    }

    #[test]
    fn alt_plus_f() {
        let k = ctx();
        let (q, d) = make_quaternion(&k.var(0), &k.var(1)).unwrap();
        let tau = make_quat_orthogonal(&d).unwrap();
        assert_eq!(tau.alt_plus_f_member(&d.v).unwrap(), Some(k.zero()));
        assert_eq!(tau.alt_plus_f_member(&q.one()).unwrap(), Some(k.one()));
        assert_eq!(tau.alt_plus_f_member(&d.u).unwrap(), None);
    }
}
