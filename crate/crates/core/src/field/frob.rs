//! F^2-coordinates: every f in F is uniquely sum over square-free monomials
//! m_S of c_S^2 * m_S.

use std::collections::BTreeMap;

use super::poly::{Mono, Poly, MAX_VARS};
use super::{FieldCtx, RatFunc, Repr};
use crate::linalg::Matrix;
use crate::{Error, Result};

/// Key bit marking the extension generator T in a p-basis monomial.
pub const T_BIT: u32 = 1 << MAX_VARS;

/// Coefficients c_S with f = sum c_S^2 m_S. Keys are variable bitmasks
/// (bit i = variable i, [`T_BIT`] = T); zero coefficients are omitted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FrobCoords {
    ctx: FieldCtx,
    coeffs: BTreeMap<u32, RatFunc>,
}

impl FrobCoords {
    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn get(&self, key: u32) -> RatFunc {
        self.coeffs.get(&key).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&u32, &RatFunc)> {
        self.coeffs.iter()
    }

    pub fn values(&self) -> impl Iterator<Item = &RatFunc> {
        self.coeffs.values()
    }

    pub fn keys(&self) -> impl Iterator<Item = u32> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The p-basis monomial for a key, as a field element.
    pub fn basis_element(ctx: &FieldCtx, key: u32) -> RatFunc {
        let base = ctx.base();
        let m = base.base_elem(Poly::mono(Mono::from_mask(key & !T_BIT)));
        let m = ctx.lift(&m).expect("base embeds");
        if key & T_BIT != 0 {
            m.mul(&ctx.generator().expect("T only in extensions")).expect("degree within budget")
        } else {
            m
        }
    }

    /// Renders the monomial of a key using the context's variable names.
    pub fn key_label(ctx: &FieldCtx, key: u32) -> String {
        let mut parts: Vec<String> = (0..ctx.nvars())
            .filter(|v| key & (1 << v) != 0)
            .map(|v| ctx.vars()[v].clone())
            .collect();
        if key & T_BIT != 0 {
            parts.push("T".into());
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// Sum of c^2 * m over all keys.
    pub fn reconstruct(&self) -> Result<RatFunc> {
        let mut acc = self.ctx.zero();
        for (&k, c) in &self.coeffs {
            acc = acc.add(&c.square()?.mul(&FrobCoords::basis_element(&self.ctx, k))?)?;
        }
        Ok(acc)
    }
}

fn insert(map: &mut BTreeMap<u32, RatFunc>, key: u32, c: RatFunc) {
    if !c.is_zero() {
        map.insert(key, c);
    }
}

/// Splits a polynomial by exponent parity: p = sum g_S^2 m_S.
fn split_poly(p: &Poly) -> BTreeMap<u32, Vec<Mono>> {
    let mut groups: BTreeMap<u32, Vec<Mono>> = BTreeMap::new();
    for &m in p.terms() {
        groups.entry(m.parity_mask()).or_default().push(m.half());
    }
    groups
}

fn decompose_base(f: &RatFunc) -> Result<FrobCoords> {
    let Repr::Base { num, den } = &f.repr else { unreachable!() };
    let ctx = f.ctx.clone();
    let mut coeffs = BTreeMap::new();
    if den.is_one() {
        for (k, monos) in split_poly(num) {
            insert(&mut coeffs, k, ctx.base_elem(Poly::from_monos(monos)));
        }
    } else {
        // f = (num * den) / den^2
        let nd = num.mul(den)?;
        for (k, monos) in split_poly(&nd) {
            let g = ctx.base_elem(Poly::from_monos(monos));
            insert(&mut coeffs, k, g.div(&RatFunc { ctx: ctx.clone(), repr: Repr::Base { num: den.clone(), den: Poly::one() } })?);
        }
    }
    Ok(FrobCoords { ctx, coeffs })
}

/// Change of p-basis for K = F(T), T^2 = alpha, where base variable j is
/// replaced by T.
///
/// With P[S][S'] = sqrt-coordinate of alpha*m_{S'} at m_S (S' avoiding j),
/// a base element with coordinates o satisfies o = p + P q, where p lives on
/// masks avoiding j; its K-coordinate at m_{S'} is p_{S'} + q_{S'} T.
pub(crate) struct BasisChange {
    /// masks S' avoiding j, ascending
    cols: Vec<u32>,
    /// P columns, one per entry of `cols`
    p_cols: Vec<FrobCoords>,
    /// inverse of P restricted to rows S' | j
    b_inv: Matrix,
}

impl BasisChange {
    fn new(base: &FieldCtx, alpha: &RatFunc, j: usize) -> Result<BasisChange> {
        let n = base.nvars();
        let jbit = 1u32 << j;
        let cols: Vec<u32> = (0..(1u32 << n)).filter(|s| s & jbit == 0).collect();
        let mut p_cols = Vec::with_capacity(cols.len());
        for &s in &cols {
            let m = FrobCoords::basis_element(base, s);
            p_cols.push(decompose_base(&alpha.mul(&m)?)?);
        }
        let mut b = Matrix::zeros(base, cols.len(), cols.len());
        for (c, pc) in p_cols.iter().enumerate() {
            for (r, &s) in cols.iter().enumerate() {
                let e = pc.get(s | jbit);
                if !e.is_zero() {
                    b.set(r, c, e);
                }
            }
        }
        let b_inv = b
            .inverse()?
            .ok_or_else(|| Error::ContractViolation("p-basis exchange matrix is singular".into()))?;
        Ok(BasisChange { cols, p_cols, b_inv })
    }

    /// K-coordinates of a base element; `tbit` is OR-ed into every key.
    fn convert(&self, k: &FieldCtx, o: &FrobCoords, j: usize, tbit: u32, out: &mut BTreeMap<u32, RatFunc>) -> Result<()> {
        if o.is_zero() {
            return Ok(());
        }
        let jbit = 1u32 << j;
        let rhs: Vec<RatFunc> = self.cols.iter().map(|&s| o.get(s | jbit)).collect();
        let q = self.b_inv.mul_vec(&rhs)?;
        let t = k.generator().expect("extension");
        for (idx, &s) in self.cols.iter().enumerate() {
            let mut p = o.get(s);
            for (c, qc) in q.iter().enumerate() {
                if !qc.is_zero() {
                    let e = self.p_cols[c].get(s);
                    if !e.is_zero() {
                        p = p.add(&e.mul(qc)?)?;
                    }
                }
            }
            let coeff = k.lift(&p)?.add(&k.lift(&q[idx])?.mul(&t)?)?;
            insert(out, s | tbit, coeff);
        }
        Ok(())
    }
}

fn decompose_ext(f: &RatFunc) -> Result<FrobCoords> {
    let k = f.ctx.clone();
    let ext = k.extension().expect("extension ctx");
    let change = ext
        .basis_change
        .get_or_init(|| BasisChange::new(&ext.base, &ext.alpha, ext.dropped))
        .as_ref()
        .map_err(|e| e.clone())?;
    let (re, im) = f.components().expect("extension element");
    let mut coeffs = BTreeMap::new();
    change.convert(&k, &decompose_base(re)?, ext.dropped, 0, &mut coeffs)?;
    change.convert(&k, &decompose_base(im)?, ext.dropped, T_BIT, &mut coeffs)?;
    Ok(FrobCoords { ctx: k, coeffs })
}

pub(super) fn decompose(f: &RatFunc) -> Result<FrobCoords> {
    if f.ctx.is_extension() {
        decompose_ext(f)
    } else {
        decompose_base(f)
    }
}

/// For each target t, coefficients c_i with sum c_i^2 g_i = t. Returns
/// `None` if some target is outside the F^2-span of the generators.
pub fn solve_frobenius_linear(
    targets: &[RatFunc],
    generators: &[RatFunc],
) -> Result<Option<Vec<Vec<RatFunc>>>> {
    let mut out = Vec::with_capacity(targets.len());
    for t in targets {
        match solve_frobenius_single(t, generators)? {
            Some(c) => out.push(c),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

/// Matrix whose column i holds the F^2-coordinates of generator i, with the
/// row keys in ascending order.
pub(crate) fn frobenius_matrix(
    ctx: &FieldCtx,
    generators: &[RatFunc],
    extra: &[&FrobCoords],
) -> Result<(Vec<u32>, Vec<FrobCoords>, Matrix)> {
    let decs: Vec<FrobCoords> = generators.iter().map(|g| g.frobenius_decompose()).collect::<Result<_>>()?;
    let mut keys: Vec<u32> = decs.iter().chain(extra.iter().copied()).flat_map(|d| d.keys()).collect();
    keys.sort_unstable();
    keys.dedup();
    let mut m = Matrix::zeros(ctx, keys.len(), generators.len());
    for (c, d) in decs.iter().enumerate() {
        for (&k, v) in d.iter() {
            let r = keys.binary_search(&k).expect("key collected");
            m.set(r, c, v.clone());
        }
    }
    Ok((keys, decs, m))
}

/// Coefficients c_i with sum c_i^2 g_i = target, re-verified by direct
/// arithmetic; `None` iff no solution exists.
pub fn solve_frobenius_single(target: &RatFunc, generators: &[RatFunc]) -> Result<Option<Vec<RatFunc>>> {
    let ctx = target.ctx().clone();
    for g in generators {
        if g.ctx() != &ctx {
            return Err(Error::ContextMismatch);
        }
    }
    let td = target.frobenius_decompose()?;
    let (keys, _, m) = frobenius_matrix(&ctx, generators, &[&td])?;
    let rhs: Vec<RatFunc> = keys.iter().map(|&k| td.get(k)).collect();
    let Some(c) = (if generators.is_empty() {
        if target.is_zero() {
            Some(Vec::new())
        } else {
            None
        }
    } else {
        m.solve(&rhs)?
    }) else {
        return Ok(None);
    };
    let mut acc = ctx.zero();
    for (ci, g) in c.iter().zip(generators) {
        acc = acc.add(&ci.square()?.mul(g)?)?;
    }
    if acc != *target {
        return Err(Error::ContractViolation("F^2-linear solution failed re-verification".into()));
    }
    Ok(Some(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> FieldCtx {
        FieldCtx::new(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn decomposition_examples() {
        let k = ctx();
        let d = k.parse("x^3*y + z^2").unwrap().frobenius_decompose().unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d.get(0b011), k.var(0));
        assert_eq!(d.get(0), k.var(2));
        let d = k.parse("x^2").unwrap().frobenius_decompose().unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.get(0), k.var(0));
        let d = k.parse("1/x").unwrap().frobenius_decompose().unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.get(1), k.parse("1/x").unwrap());
    }

    #[test]
    fn reconstruction() {
        let k = ctx();
        for s in ["x^3*y + z^2", "(x + y)/(x*z + 1)", "x*y*z + x + 1", "1/(x^2 + y)"] {
            let f = k.parse(s).unwrap();
            assert_eq!(f.frobenius_decompose().unwrap().reconstruct().unwrap(), f, "{s}");
        }
    }

    #[test]
    fn solve_examples() {
        let k = FieldCtx::new(&["x", "y"]).unwrap();
        let gens: Vec<RatFunc> = ["1", "x", "y", "x*y"].iter().map(|s| k.parse(s).unwrap()).collect();
        let c = solve_frobenius_single(&k.parse("x + y").unwrap(), &gens).unwrap().unwrap();
        assert_eq!(c, vec![k.zero(), k.one(), k.one(), k.zero()]);
        let c = solve_frobenius_single(&k.parse("x^2 + x").unwrap(), &gens[..2]).unwrap().unwrap();
        assert_eq!(c, vec![k.var(0), k.one()]);
        let k3 = ctx();
        let gens3: Vec<RatFunc> = ["1", "x", "y", "x*y"].iter().map(|s| k3.parse(s).unwrap()).collect();
        assert_eq!(solve_frobenius_single(&k3.var(2), &gens3).unwrap(), None);
    }

    #[test]
    fn extension_examples() {
        let f = FieldCtx::new(&["x", "y"]).unwrap();
        let k = f.extend_by_sqrt(&f.var(0)).unwrap();
        assert_eq!(k.var(0).is_square().unwrap(), Some(k.generator().unwrap()));
        let k2 = f.extend_by_sqrt(&f.parse("x + y^2").unwrap()).unwrap();
        let root = k2.var(0).is_square().unwrap().unwrap();
        assert_eq!(root, k2.generator().unwrap().add(&k2.var(1)).unwrap());
        assert_eq!(k2.var(1).is_square().unwrap(), None);
    }

    #[test]
    fn extension_reconstruction() {
        let f = FieldCtx::new(&["x", "y", "z"]).unwrap();
        for alpha in ["x", "y*z + x", "x*y + z^2", "(x + 1)/y"] {
            let k = f.extend_by_sqrt(&f.parse(alpha).unwrap()).unwrap();
            let t = k.generator().unwrap();
            for s in ["x", "y", "x*y*z + 1", "(x + y)/(z + 1)"] {
                let e = k.lift(&f.parse(s).unwrap()).unwrap();
                let e = e.add(&t.mul(&k.lift(&f.parse("y + z").unwrap()).unwrap()).unwrap()).unwrap();
                let d = e.frobenius_decompose().unwrap();
                assert!(d.len() <= 8);
                assert_eq!(d.reconstruct().unwrap(), e, "alpha={alpha}, elem={s}");
            }
        }
    }
}
