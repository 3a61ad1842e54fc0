//! Finite-dimensional associative algebras given by a multiplication table.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{FieldCtx, RatFunc};
use crate::linalg::{axpy, to_dense, to_sparse, Matrix, SparseRow, Subspace, Vector};
use crate::{Error, Result};

/// Largest supported algebra dimension (degree-16 algebras).
pub const MAX_DIM: usize = 256;
/// Up to this dimension associativity is checked on all basis triples at
/// construction; above it a seeded sample of triples is used.
pub const EXHAUSTIVE_CHECK_DIM: usize = 64;
pub const SAMPLED_TRIPLES: usize = 500;

/// What an algebra was built as; used by constructors that need more than
/// the table (transpose involutions, quaternion bases of factors).
#[derive(Clone, Debug)]
pub enum AlgKind {
    /// [alpha, beta) on the basis (1, u, v, w).
    Quaternion { alpha: RatFunc, beta: RatFunc },
    /// M_n(F) on the matrix units e_ij, index i*n + j.
    Matrix(usize),
    Tensor(StructAlgebra, StructAlgebra),
    Other,
}

/// Algebra over a [`FieldCtx`] by structure constants: `table[i*dim + j]`
/// holds the coordinates of e_i e_j as a sparse vector. Cloning is cheap.
#[derive(Clone)]
pub struct StructAlgebra(Arc<AlgInner>);

struct AlgInner {
    ctx: FieldCtx,
    labels: Vec<String>,
    table: Vec<SparseRow>,
    unit: SparseRow,
    kind: AlgKind,
}

impl fmt::Debug for StructAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StructAlgebra(dim {})", self.dim())
    }
}

impl PartialEq for StructAlgebra {
    fn eq(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.0, &o.0)
            || (self.0.ctx == o.0.ctx
                && self.0.labels == o.0.labels
                && self.0.table == o.0.table
                && self.0.unit == o.0.unit)
    }
}

impl Eq for StructAlgebra {}

/// Quaternion basis (1, u, v, w) with u^2 + u = alpha, v^2 = beta, w = uv,
/// vu = w + v, given as elements of some algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuaternionDesc {
    pub alpha: RatFunc,
    pub beta: RatFunc,
    pub one: AlgElement,
    pub u: AlgElement,
    pub v: AlgElement,
    pub w: AlgElement,
}

impl QuaternionDesc {
    pub fn algebra(&self) -> &StructAlgebra {
        &self.u.alg
    }

    pub fn basis(&self) -> [&AlgElement; 4] {
        [&self.one, &self.u, &self.v, &self.w]
    }

    /// Re-checks the defining relations exactly.
    pub fn verify(&self) -> Result<()> {
        let a = self.algebra();
        let check = |ok: bool, what: &str| {
            if ok {
                Ok(())
            } else {
                Err(Error::ContractViolation(format!("quaternion relation {what} fails")))
            }
        };
        check(self.one == a.one(), "1")?;
        check(self.u.square()?.add(&self.u)? == a.scalar(&self.alpha), "u^2 + u = alpha")?;
        check(self.v.square()? == a.scalar(&self.beta), "v^2 = beta")?;
        check(self.u.mul(&self.v)? == self.w, "uv = w")?;
        check(self.v.mul(&self.u)? == self.w.add(&self.v)?, "vu = w + v")?;
        check(!self.beta.is_zero(), "beta != 0")
    }

    /// Coordinates of x in the basis (1, u, v, w).
    pub fn coordinates(&self, x: &AlgElement) -> Result<[RatFunc; 4]> {
        let a = self.algebra();
        let cols: Vec<Vector> = self.basis().iter().map(|b| b.coords().to_vec()).collect();
        let m = Matrix::from_columns(a.ctx(), a.dim(), &cols)?;
        let c = m
            .solve(x.coords())?
            .ok_or_else(|| Error::NotSubalgebra("element outside the quaternion span".into()))?;
        Ok([c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()])
    }
}

/// Trd(a + bu + cv + dw) = b.
pub fn reduced_trace_quat(x: &AlgElement, q: &QuaternionDesc) -> Result<RatFunc> {
    Ok(q.coordinates(x)?[1].clone())
}

fn table_product(table: &[SparseRow], dim: usize, a: &SparseRow, b: &SparseRow) -> Result<SparseRow> {
    let mut acc: SparseRow = Vec::new();
    for (i, ai) in a {
        for (j, bj) in b {
            let e = &table[i * dim + j];
            if e.is_empty() {
                continue;
            }
            let c = ai.mul(bj)?;
            acc = axpy(&acc, &c, e)?;
        }
    }
    Ok(acc)
}

impl StructAlgebra {
    /// Builds and verifies an algebra from a table of sparse vectors.
    pub(crate) fn from_table(
        ctx: &FieldCtx,
        labels: Vec<String>,
        table: Vec<SparseRow>,
        unit: SparseRow,
        kind: AlgKind,
    ) -> Result<StructAlgebra> {
        let dim = labels.len();
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::DimensionMismatch(format!("dimension {dim} outside 1..={MAX_DIM}")));
        }
        if table.len() != dim * dim {
            return Err(Error::DimensionMismatch("table size".into()));
        }
        let alg = StructAlgebra(Arc::new(AlgInner { ctx: ctx.clone(), labels, table, unit, kind }));
        alg.check_identity()?;
        if dim <= EXHAUSTIVE_CHECK_DIM {
            alg.check_associativity_exhaustive()?;
        } else {
            alg.check_associativity_sampled(SAMPLED_TRIPLES, 0x5eed)?;
        }
        Ok(alg)
    }

    /// Builds an algebra from dense table entries (`table[i][j]` = e_i e_j)
    /// and the coordinates of 1.
    pub fn new(ctx: &FieldCtx, labels: Vec<String>, table: Vec<Vec<Vector>>, unit: Vector) -> Result<StructAlgebra> {
        let dim = labels.len();
        if table.len() != dim || table.iter().any(|r| r.len() != dim || r.iter().any(|v| v.len() != dim)) {
            return Err(Error::DimensionMismatch("table shape".into()));
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch("unit length".into()));
        }
        let flat = table.iter().flat_map(|r| r.iter().map(|v| to_sparse(v))).collect();
        StructAlgebra::from_table(ctx, labels, flat, to_sparse(&unit), AlgKind::Other)
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.0.ctx
    }

    pub fn dim(&self) -> usize {
        self.0.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn kind(&self) -> &AlgKind {
        &self.0.kind
    }

    /// The standard basis description of an algebra built by
    /// [`make_quaternion`].
    pub fn quaternion_desc(&self) -> Option<QuaternionDesc> {
        let AlgKind::Quaternion { alpha, beta } = &self.0.kind else {
            return None;
        };
        Some(QuaternionDesc {
            alpha: alpha.clone(),
            beta: beta.clone(),
            one: self.basis(0),
            u: self.basis(1),
            v: self.basis(2),
            w: self.basis(3),
        })
    }

    /// e_i e_j as a sparse coordinate vector.
    pub(crate) fn product_entry(&self, i: usize, j: usize) -> &SparseRow {
        &self.0.table[i * self.dim() + j]
    }

    pub fn basis_product(&self, i: usize, j: usize) -> AlgElement {
        self.from_sparse(self.product_entry(i, j).clone())
    }

    pub(crate) fn from_sparse(&self, s: SparseRow) -> AlgElement {
        AlgElement { alg: self.clone(), coords: to_dense(self.ctx(), &s, self.dim()) }
    }

    pub(crate) fn mul_sparse(&self, a: &SparseRow, b: &SparseRow) -> Result<SparseRow> {
        table_product(&self.0.table, self.dim(), a, b)
    }

    pub fn zero(&self) -> AlgElement {
        AlgElement { alg: self.clone(), coords: vec![self.ctx().zero(); self.dim()] }
    }

    pub fn one(&self) -> AlgElement {
        self.from_sparse(self.0.unit.clone())
    }

    pub fn basis(&self, i: usize) -> AlgElement {
        let mut e = self.zero();
        e.coords[i] = self.ctx().one();
        e
    }

    pub fn basis_index(&self, label: &str) -> Option<usize> {
        self.0.labels.iter().position(|l| l == label)
    }

    pub fn scalar(&self, c: &RatFunc) -> AlgElement {
        self.one().scale(c).expect("scalar in algebra ctx")
    }

    pub fn element(&self, coords: Vector) -> Result<AlgElement> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch("coordinate vector length".into()));
        }
        if coords.iter().any(|c| c.ctx() != self.ctx()) {
            return Err(Error::ContextMismatch);
        }
        Ok(AlgElement { alg: self.clone(), coords })
    }

    /// Element from (label, coefficient) pairs.
    pub fn element_from_labels(&self, terms: &[(&str, RatFunc)]) -> Result<AlgElement> {
        let mut e = self.zero();
        for (l, c) in terms {
            let i = self
                .basis_index(l)
                .ok_or_else(|| Error::Parse(format!("unknown basis label {l}")))?;
            e.coords[i] = e.coords[i].add(c)?;
        }
        Ok(e)
    }

    pub fn random_element<R: Rng>(&self, rng: &mut R, max_degree: u32) -> AlgElement {
        let coords = (0..self.dim()).map(|_| self.ctx().random_poly(rng, max_degree)).collect();
        AlgElement { alg: self.clone(), coords }
    }

    fn check_identity(&self) -> Result<()> {
        let u = &self.0.unit;
        for i in 0..self.dim() {
            let e = vec![(i, self.ctx().one())];
            if self.mul_sparse(u, &e)? != e || self.mul_sparse(&e, u)? != e {
                return Err(Error::ContractViolation(format!("unit fails on {}", self.0.labels[i])));
            }
        }
        Ok(())
    }

    fn check_triple(&self, i: usize, j: usize, k: usize) -> Result<bool> {
        let ij = self.product_entry(i, j);
        let jk = self.product_entry(j, k);
        let ek = vec![(k, self.ctx().one())];
        let ei = vec![(i, self.ctx().one())];
        let left = if ij.is_empty() { Vec::new() } else { self.mul_sparse(ij, &ek)? };
        let right = if jk.is_empty() { Vec::new() } else { self.mul_sparse(&ei, jk)? };
        Ok(left == right)
    }

    /// Associativity on every basis triple.
    pub fn check_associativity_exhaustive(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if !self.check_triple(i, j, k)? {
                        return Err(Error::ContractViolation(format!(
                            "associativity fails on ({}, {}, {})",
                            self.0.labels[i], self.0.labels[j], self.0.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn check_associativity_sampled(&self, triples: usize, seed: u64) -> Result<()> {
        let n = self.dim();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..triples {
            let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            if !self.check_triple(i, j, k)? {
                return Err(Error::ContractViolation("sampled associativity check failed".into()));
            }
        }
        Ok(())
    }

    /// Full contract: identity on all basis elements and associativity on
    /// all basis triples.
    pub fn verify_exhaustive(&self) -> Result<()> {
        self.check_identity()?;
        self.check_associativity_exhaustive()
    }

    /// Matrix of y -> x*y (column j = x e_j).
    pub fn left_mul_matrix(&self, x: &AlgElement) -> Result<Matrix> {
        let xs = to_sparse(&x.coords);
        let cols = (0..self.dim())
            .map(|j| Ok(to_dense(self.ctx(), &self.mul_sparse(&xs, &vec![(j, self.ctx().one())])?, self.dim())))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(self.ctx(), self.dim(), &cols)
    }

    /// Matrix of y -> y*x.
    pub fn right_mul_matrix(&self, x: &AlgElement) -> Result<Matrix> {
        let xs = to_sparse(&x.coords);
        let cols = (0..self.dim())
            .map(|j| Ok(to_dense(self.ctx(), &self.mul_sparse(&vec![(j, self.ctx().one())], &xs)?, self.dim())))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(self.ctx(), self.dim(), &cols)
    }

    pub fn span(&self, xs: &[AlgElement]) -> Result<Subspace> {
        let rows = xs.iter().map(|x| x.coords.clone()).collect::<Vec<_>>();
        Subspace::span(self.ctx(), self.dim(), &rows)
    }

    pub fn elements_of(&self, s: &Subspace) -> Vec<AlgElement> {
        s.basis().into_iter().map(|c| AlgElement { alg: self.clone(), coords: c }).collect()
    }

    /// {a : a x = x a for all x in xs}.
    pub fn centralizer(&self, xs: &[AlgElement]) -> Result<Subspace> {
        let n = self.dim();
        let mut rows: Vec<SparseRow> = Vec::new();
        for x in xs {
            x.same_alg(self)?;
            let xs_ = to_sparse(&x.coords);
            // column j of (L_x - R_x)
            let mut cols = Vec::with_capacity(n);
            for j in 0..n {
                let ej = vec![(j, self.ctx().one())];
                let l = self.mul_sparse(&xs_, &ej)?;
                let r = self.mul_sparse(&ej, &xs_)?;
                cols.push(axpy(&l, &self.ctx().one(), &r)?);
            }
            let mut dense_rows: Vec<SparseRow> = vec![Vec::new(); n];
            for (j, c) in cols.into_iter().enumerate() {
                for (i, e) in c {
                    dense_rows[i].push((j, e));
                }
            }
            rows.extend(dense_rows.into_iter().filter(|r| !r.is_empty()));
        }
        let m = Matrix::from_rows(
            self.ctx(),
            rows.iter().map(|r| to_dense(self.ctx(), r, n)).collect(),
        );
        let kernel = match m {
            Ok(m) if m.rows() > 0 => m.kernel_basis()?,
            _ => (0..n).map(|j| self.basis(j).coords).collect(),
        };
        Subspace::span(self.ctx(), n, &kernel)
    }

    /// Smallest subalgebra containing 1 and the generators.
    pub fn generated_subalgebra(&self, gens: &[AlgElement]) -> Result<Subalgebra> {
        for g in gens {
            g.same_alg(self)?;
        }
        let n = self.dim();
        let mut elems = vec![self.one()];
        let mut space = self.span(&elems)?;
        let mut idx = 0;
        for g in gens {
            if !space.contains(&g.coords)? {
                elems.push(g.clone());
                space = Subspace::span(self.ctx(), n, &elems.iter().map(|e| e.coords.clone()).collect::<Vec<_>>())?;
            }
        }
        while idx < elems.len() {
            let b = elems[idx].clone();
            for g in gens {
                let p = b.mul(g)?;
                if !space.contains(&p.coords)? {
                    elems.push(p);
                    space = Subspace::span(self.ctx(), n, &elems.iter().map(|e| e.coords.clone()).collect::<Vec<_>>())?;
                }
            }
            idx += 1;
        }
        let sub = Subalgebra { alg: self.clone(), generators: gens.to_vec(), space };
        sub.verify_closed()?;
        Ok(sub)
    }
}

/// Subalgebra: generators plus the canonical basis of their closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subalgebra {
    alg: StructAlgebra,
    generators: Vec<AlgElement>,
    space: Subspace,
}

impl Subalgebra {
    pub fn algebra(&self) -> &StructAlgebra {
        &self.alg
    }

    pub fn generators(&self) -> &[AlgElement] {
        &self.generators
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis(&self) -> Vec<AlgElement> {
        self.alg.elements_of(&self.space)
    }

    pub fn contains(&self, x: &AlgElement) -> Result<bool> {
        self.space.contains(&x.coords)
    }

    /// Same span (generators may differ).
    pub fn same_span(&self, o: &Subalgebra) -> bool {
        self.space == o.space
    }

    /// Products of basis pairs stay in the span and 1 is contained.
    pub fn verify_closed(&self) -> Result<()> {
        let basis = self.basis();
        if !self.contains(&self.alg.one())? {
            return Err(Error::NotSubalgebra("1 missing".into()));
        }
        for a in &basis {
            for b in &basis {
                if !self.contains(&a.mul(b)?)? {
                    return Err(Error::NotSubalgebra("span not closed under multiplication".into()));
                }
            }
        }
        Ok(())
    }
}

/// Element of a [`StructAlgebra`] by its coordinate vector.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgElement {
    alg: StructAlgebra,
    coords: Vector,
}

impl fmt::Debug for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgElement({})", self.render())
    }
}

impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl AlgElement {
    pub fn algebra(&self) -> &StructAlgebra {
        &self.alg
    }

    pub fn coords(&self) -> &[RatFunc] {
        &self.coords
    }

    pub fn into_coords(self) -> Vector {
        self.coords
    }

    pub fn coord(&self, i: usize) -> &RatFunc {
        &self.coords[i]
    }

    fn same_alg(&self, a: &StructAlgebra) -> Result<()> {
        if self.alg == *a {
            Ok(())
        } else {
            Err(Error::DimensionMismatch("elements of different algebras".into()))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &AlgElement) -> Result<AlgElement> {
        o.same_alg(&self.alg)?;
        let coords = self.coords.iter().zip(&o.coords).map(|(a, b)| a.add(b)).collect::<Result<_>>()?;
        Ok(AlgElement { alg: self.alg.clone(), coords })
    }

    pub fn sub(&self, o: &AlgElement) -> Result<AlgElement> {
        self.add(o)
    }

    pub fn scale(&self, c: &RatFunc) -> Result<AlgElement> {
        let coords = self.coords.iter().map(|a| a.mul(c)).collect::<Result<_>>()?;
        Ok(AlgElement { alg: self.alg.clone(), coords })
    }

    pub fn mul(&self, o: &AlgElement) -> Result<AlgElement> {
        o.same_alg(&self.alg)?;
        let p = self.alg.mul_sparse(&to_sparse(&self.coords), &to_sparse(&o.coords))?;
        Ok(self.alg.from_sparse(p))
    }

    pub fn square(&self) -> Result<AlgElement> {
        self.mul(self)
    }

    pub fn pow(&self, e: u32) -> Result<AlgElement> {
        let mut acc = self.alg.one();
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn commutes_with(&self, o: &AlgElement) -> Result<bool> {
        Ok(self.mul(o)? == o.mul(self)?)
    }

    /// c with self = c*1.
    pub fn is_scalar(&self) -> Option<RatFunc> {
        let one = self.alg.one();
        let (p, c) = one.coords.iter().enumerate().find(|(_, c)| !c.is_zero())?;
        let lambda = self.coords[p].div(c).ok()?;
        let scaled = one.scale(&lambda).ok()?;
        (scaled == *self).then_some(lambda)
    }

    /// Two-sided inverse if self is a unit.
    pub fn inverse(&self) -> Result<Option<AlgElement>> {
        // x^2 = c scalar: x^{-1} = x / c, and c = 0 makes x nilpotent
        if let Some(c) = self.square()?.is_scalar() {
            if c.is_zero() {
                return Ok(None);
            }
            return Ok(Some(self.scale(&c.inv()?)?));
        }
        let l = self.alg.left_mul_matrix(self)?;
        let Some(s) = l.solve(self.alg.one().coords())? else {
            return Ok(None);
        };
        let inv = AlgElement { alg: self.alg.clone(), coords: s };
        if !self.mul(&inv)?.is_one() || !inv.mul(self)?.is_one() {
            return Ok(None);
        }
        Ok(Some(inv))
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.inverse()?.is_some())
    }

    pub fn is_one(&self) -> bool {
        *self == self.alg.one()
    }

    /// "c1*label1 + c2*label2" with coefficient 1 omitted.
    pub fn render(&self) -> String {
        let terms: Vec<String> = self
            .terms()
            .into_iter()
            .map(|(l, c)| {
                if c.is_one() {
                    l
                } else if c.is_polynomial() && c.numerator().is_some_and(|n| n.len() == 1) {
                    format!("{c}*{l}")
                } else {
                    format!("({c})*{l}")
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// Nonzero (label, coefficient) pairs in basis order.
    pub fn terms(&self) -> Vec<(String, RatFunc)> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.alg.labels()[i].clone(), c.clone()))
            .collect()
    }
}

fn unit_vec(ctx: &FieldCtx, i: usize) -> SparseRow {
    vec![(i, ctx.one())]
}

/// [alpha, beta) on the basis (1, u, v, w).
pub fn make_quaternion(alpha: &RatFunc, beta: &RatFunc) -> Result<(StructAlgebra, QuaternionDesc)> {
    if beta.is_zero() {
        return Err(Error::ZeroBeta);
    }
    let ctx = alpha.ctx().clone();
    if beta.ctx() != &ctx {
        return Err(Error::ContextMismatch);
    }
    let one = ctx.one();
    let ab = alpha.mul(beta)?;
    let e = |i: usize| unit_vec(&ctx, i);
    let lin = |terms: Vec<(usize, &RatFunc)>| -> SparseRow {
        let mut v: SparseRow = terms.into_iter().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect();
        v.sort_by_key(|(i, _)| *i);
        v
    };
    let (u, v, w) = (1, 2, 3);
    let mut table = vec![Vec::new(); 16];
    for i in 0..4 {
        table[i] = e(i);
        table[i * 4] = e(i);
    }
    table[u * 4 + u] = lin(vec![(0, alpha), (u, &one)]);
    table[u * 4 + v] = e(w);
    table[u * 4 + w] = lin(vec![(v, alpha), (w, &one)]);
    table[v * 4 + u] = lin(vec![(v, &one), (w, &one)]);
    table[v * 4 + v] = lin(vec![(0, beta)]);
    table[v * 4 + w] = lin(vec![(0, beta), (u, beta)]);
    table[w * 4 + u] = lin(vec![(v, alpha)]);
    table[w * 4 + v] = lin(vec![(u, beta)]);
    table[w * 4 + w] = lin(vec![(0, &ab)]);
    let labels = ["1", "u", "v", "w"].iter().map(|s| s.to_string()).collect();
    let kind = AlgKind::Quaternion { alpha: alpha.clone(), beta: beta.clone() };
    let alg = StructAlgebra::from_table(&ctx, labels, table, e(0), kind)?;
    let desc = alg.quaternion_desc().expect("quaternion kind");
    desc.verify()?;
    Ok((alg, desc))
}

/// Label of the matrix unit e_ij (1-based in the label).
pub fn matrix_unit_label(n: usize, i: usize, j: usize) -> String {
    if n <= 9 {
        format!("e{}{}", i + 1, j + 1)
    } else {
        format!("e{}_{}", i + 1, j + 1)
    }
}

/// M_n(F) on the matrix units e_ij (index i*n + j).
pub fn make_matrix_algebra(ctx: &FieldCtx, n: usize) -> Result<StructAlgebra> {
    if n == 0 || n * n > MAX_DIM {
        return Err(Error::DimensionMismatch(format!("matrix size {n}")));
    }
    let mut labels = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            labels.push(matrix_unit_label(n, i, j));
        }
    }
    let d = n * n;
    let mut table = vec![Vec::new(); d * d];
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                // e_ij e_jl = e_il
                table[(i * n + j) * d + (j * n + l)] = unit_vec(ctx, i * n + l);
            }
        }
    }
    let unit = (0..n).map(|i| (i * n + i, ctx.one())).collect();
    StructAlgebra::from_table(ctx, labels, table, unit, AlgKind::Matrix(n))
}

fn kron(a: &SparseRow, b: &SparseRow, db: usize) -> Result<SparseRow> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for (i, x) in a {
        for (j, y) in b {
            out.push((i * db + j, x.mul(y)?));
        }
    }
    Ok(out)
}

fn tensor_label(a: &str, b: &str) -> String {
    format!("{a}⊗{b}")
}

/// A ⊗ B with basis e_a ⊗ f_b at index a*dim(B) + b.
pub fn tensor(a: &StructAlgebra, b: &StructAlgebra) -> Result<StructAlgebra> {
    if a.ctx() != b.ctx() {
        return Err(Error::ContextMismatch);
    }
    let (da, db) = (a.dim(), b.dim());
    let d = da * db;
    if d > MAX_DIM {
        return Err(Error::DimensionMismatch(format!("tensor dimension {d} exceeds {MAX_DIM}")));
    }
    let mut labels = Vec::with_capacity(d);
    for la in a.labels() {
        for lb in b.labels() {
            labels.push(tensor_label(la, lb));
        }
    }
    let mut table = vec![Vec::new(); d * d];
    for i in 0..da {
        for k in 0..da {
            let ak = a.product_entry(i, k);
            if ak.is_empty() {
                continue;
            }
            for j in 0..db {
                for l in 0..db {
                    let bl = b.product_entry(j, l);
                    if bl.is_empty() {
                        continue;
                    }
                    table[(i * db + j) * d + (k * db + l)] = kron(ak, bl, db)?;
                }
            }
        }
    }
    let unit = kron(&a.0.unit, &b.0.unit, db)?;
    let alg = StructAlgebra::from_table(a.ctx(), labels, table, unit, AlgKind::Tensor(a.clone(), b.clone()))?;
    // basis-product law on all pairs
    for i in 0..d {
        for k in 0..d {
            let expect = kron(a.product_entry(i / db, k / db), b.product_entry(i % db, k % db), db)?;
            if *alg.product_entry(i, k) != expect {
                return Err(Error::ContractViolation("tensor basis-product law".into()));
            }
        }
    }
    Ok(alg)
}

/// Embeddings x -> x ⊗ 1 and y -> 1 ⊗ y into a tensor product.
pub fn embed_left(t: &StructAlgebra, x: &AlgElement) -> Result<AlgElement> {
    let AlgKind::Tensor(a, b) = t.kind() else {
        return Err(Error::WrongShape("not a tensor product".into()));
    };
    x.same_alg(a)?;
    let s = kron(&to_sparse(&x.coords), &b.0.unit, b.dim())?;
    Ok(t.from_sparse(s))
}

pub fn embed_right(t: &StructAlgebra, y: &AlgElement) -> Result<AlgElement> {
    let AlgKind::Tensor(a, b) = t.kind() else {
        return Err(Error::WrongShape("not a tensor product".into()));
    };
    y.same_alg(b)?;
    let s = kron(&a.0.unit, &to_sparse(&y.coords), b.dim())?;
    Ok(t.from_sparse(s))
}

/// x ⊗ y in a tensor product.
pub fn embed_pair(t: &StructAlgebra, x: &AlgElement, y: &AlgElement) -> Result<AlgElement> {
    let AlgKind::Tensor(a, b) = t.kind() else {
        return Err(Error::WrongShape("not a tensor product".into()));
    };
    x.same_alg(a)?;
    y.same_alg(b)?;
    Ok(t.from_sparse(kron(&to_sparse(&x.coords), &to_sparse(&y.coords), b.dim())?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> FieldCtx {
        FieldCtx::new(&["x", "y"]).unwrap()
    }

    fn quat() -> (StructAlgebra, QuaternionDesc) {
        let k = ctx();
        make_quaternion(&k.var(0), &k.var(1)).unwrap()
    }

    #[test]
    fn quaternion_relations() {
        let (q, d) = quat();
        let k = q.ctx().clone();
        assert_eq!(d.u.square().unwrap(), d.u.add(&q.scalar(&k.var(0))).unwrap());
        assert_eq!(d.v.square().unwrap(), q.scalar(&k.var(1)));
        assert_eq!(d.v.mul(&d.u).unwrap(), d.w.add(&d.v).unwrap());
        let xy = k.parse("x*y").unwrap();
        assert_eq!(d.w.square().unwrap(), q.scalar(&xy));
        let x = d.u.add(&d.u).unwrap();
        assert!(x.is_zero());
        let (z, dz) = make_quaternion(&k.zero(), &k.one()).unwrap();
        assert_eq!(dz.u.square().unwrap(), dz.u);
        assert!(z.dim() == 4);
        assert_eq!(make_quaternion(&k.var(0), &k.zero()).err(), Some(Error::ZeroBeta));
    }

    #[test]
    fn matrix_units() {
        let k = ctx();
        let m = make_matrix_algebra(&k, 2).unwrap();
        let e = |l: &str| m.basis(m.basis_index(l).unwrap());
        assert_eq!(e("e11").mul(&e("e12")).unwrap(), e("e12"));
        assert!(e("e12").mul(&e("e12")).unwrap().is_zero());
        assert_eq!(m.one(), e("e11").add(&e("e22")).unwrap());
        assert!(!e("e12").is_unit().unwrap());
    }

    #[test]
    fn tensor_products() {
        let (q, d) = quat();
        let m = make_matrix_algebra(q.ctx(), 2).unwrap();
        let t = tensor(&q, &m).unwrap();
        assert_eq!(t.dim(), 16);
        assert_eq!(t.one(), embed_left(&t, &q.one()).unwrap());
        let v3 = m.element_from_labels(&[("e12", m.ctx().one()), ("e21", m.ctx().one())]).unwrap();
        let a = embed_left(&t, &d.u).unwrap();
        let b = embed_right(&t, &v3).unwrap();
        assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        assert_eq!(a.mul(&b).unwrap(), embed_pair(&t, &d.u, &v3).unwrap());
    }

    #[test]
    fn scalars_and_units() {
        let (q, d) = quat();
        let k = q.ctx().clone();
        assert_eq!(q.one().is_scalar(), Some(k.one()));
        assert_eq!(d.u.is_scalar(), None);
        assert_eq!(q.scalar(&k.var(1)).is_scalar(), Some(k.var(1)));
        let inv = d.v.inverse().unwrap().unwrap();
        assert_eq!(inv, d.v.scale(&k.var(1).inv().unwrap()).unwrap());
        assert_eq!(q.one().inverse().unwrap().unwrap(), q.one());
    }

    #[test]
    fn centralizers() {
        let (q, d) = quat();
        assert_eq!(q.centralizer(&[q.one()]).unwrap().dim(), 4);
        let c = q.centralizer(std::slice::from_ref(&d.u)).unwrap();
        assert_eq!(c, q.span(&[q.one(), d.u.clone()]).unwrap());
        assert_ne!(d.v.mul(&d.u).unwrap(), d.u.mul(&d.v).unwrap());
        assert_eq!(q.centralizer(&[d.u.clone(), d.v.clone(), d.w.clone()]).unwrap().dim(), 1);
    }

    #[test]
    fn generated_subalgebras() {
        let (q, d) = quat();
        assert_eq!(q.generated_subalgebra(std::slice::from_ref(&d.u)).unwrap().dim(), 2);
        assert_eq!(q.generated_subalgebra(std::slice::from_ref(&d.v)).unwrap().dim(), 2);
        assert_eq!(q.generated_subalgebra(&[d.u.clone(), d.v.clone()]).unwrap().dim(), 4);
    }

    #[test]
    fn reduced_traces() {
        let (q, d) = quat();
        assert!(reduced_trace_quat(&q.one(), &d).unwrap().is_zero());
        assert!(reduced_trace_quat(&d.u, &d).unwrap().is_one());
        assert!(reduced_trace_quat(&d.v, &d).unwrap().is_zero());
    }
}
