//! Exact arithmetic in F = GF(2)(x_1, ..., x_m) and in quadratic purely
//! inseparable extensions K = F[T]/(T^2 - alpha).

mod frob;
mod parse;
pub mod poly;

use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::Rng;

pub(crate) use frob::frobenius_matrix;
pub use frob::{solve_frobenius_linear, solve_frobenius_single, FrobCoords, T_BIT};
use poly::{gcd, Mono, Poly, MAX_VARS};

use crate::{Error, Result};

pub const DEFAULT_DEGREE_BUDGET: u32 = 64;
/// Upper limit for a configurable budget; keeps products of four in-budget
/// polynomials inside the packed exponent range.
pub const MAX_DEGREE_BUDGET: u32 = 1000;

/// Handle to a field: a rational function field over GF(2) or a quadratic
/// purely inseparable extension of one. Cloning is cheap.
#[derive(Clone)]
pub struct FieldCtx(Arc<CtxInner>);

struct CtxInner {
    vars: Vec<String>,
    degree_budget: u32,
    ext: Option<Extension>,
}

pub(crate) struct Extension {
    pub(crate) base: FieldCtx,
    pub(crate) alpha: RatFunc,
    /// Base variable removed from the p-basis (replaced by T).
    pub(crate) dropped: usize,
    pub(crate) basis_change: OnceLock<Result<frob::BasisChange>>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.ext {
            None => write!(f, "GF(2)({})", self.0.vars.join(",")),
            Some(e) => write!(f, "{:?}(sqrt({}))", e.base, e.alpha),
        }
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, o: &Self) -> bool {
        if Arc::ptr_eq(&self.0, &o.0) {
            return true;
        }
        self.0.vars == o.0.vars
            && self.0.degree_budget == o.0.degree_budget
            && match (&self.0.ext, &o.0.ext) {
                (None, None) => true,
                (Some(a), Some(b)) => a.base == b.base && a.alpha == b.alpha,
                _ => false,
            }
    }
}

impl Eq for FieldCtx {}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl FieldCtx {
    pub fn new<S: AsRef<str>>(vars: &[S]) -> Result<FieldCtx> {
        FieldCtx::with_budget(vars, DEFAULT_DEGREE_BUDGET)
    }

    pub fn with_budget<S: AsRef<str>>(vars: &[S], degree_budget: u32) -> Result<FieldCtx> {
        if vars.len() > MAX_VARS {
            return Err(Error::InvalidContext(format!("at most {MAX_VARS} variables")));
        }
        if degree_budget == 0 || degree_budget > MAX_DEGREE_BUDGET {
            return Err(Error::InvalidContext(format!(
                "degree budget must lie in 1..={MAX_DEGREE_BUDGET}"
            )));
        }
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !valid_name(v) {
                return Err(Error::InvalidContext(format!("bad variable name {v:?}")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidContext(format!("duplicate variable {v}")));
            }
        }
        Ok(FieldCtx(Arc::new(CtxInner { vars, degree_budget, ext: None })))
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn degree_budget(&self) -> u32 {
        self.0.degree_budget
    }

    pub fn is_extension(&self) -> bool {
        self.0.ext.is_some()
    }

    pub(crate) fn extension(&self) -> Option<&Extension> {
        self.0.ext.as_ref()
    }

    /// The alpha with T^2 = alpha, for an extension field.
    pub fn ext_alpha(&self) -> Option<&RatFunc> {
        self.0.ext.as_ref().map(|e| &e.alpha)
    }

    pub fn base(&self) -> &FieldCtx {
        match &self.0.ext {
            Some(e) => &e.base,
            None => self,
        }
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    fn base_elem(&self, num: Poly) -> RatFunc {
        RatFunc { ctx: self.clone(), repr: Repr::Base { num, den: Poly::one() } }
    }

    pub fn zero(&self) -> RatFunc {
        match &self.0.ext {
            None => self.base_elem(Poly::zero()),
            Some(e) => RatFunc::ext(self, e.base.zero(), e.base.zero()),
        }
    }

    pub fn one(&self) -> RatFunc {
        match &self.0.ext {
            None => self.base_elem(Poly::one()),
            Some(e) => RatFunc::ext(self, e.base.one(), e.base.zero()),
        }
    }

    pub fn from_bool(&self, b: bool) -> RatFunc {
        if b {
            self.one()
        } else {
            self.zero()
        }
    }

    /// The i-th variable (of the base field, lifted when this is an extension).
    pub fn var(&self, i: usize) -> RatFunc {
        assert!(i < self.nvars(), "variable index out of range");
        match &self.0.ext {
            None => self.base_elem(Poly::var(i)),
            Some(e) => RatFunc::ext(self, e.base.var(i), e.base.zero()),
        }
    }

    pub fn var_named(&self, name: &str) -> Result<RatFunc> {
        self.var_index(name)
            .map(|i| self.var(i))
            .ok_or_else(|| Error::Parse(format!("unknown variable {name}")))
    }

    /// Polynomial element from a monomial set (base fields only).
    pub fn from_poly(&self, p: Poly) -> Result<RatFunc> {
        if self.is_extension() {
            return Err(Error::ContextMismatch);
        }
        let r = self.base_elem(p);
        r.check_budget()?;
        Ok(r)
    }

    pub fn from_fraction(&self, num: Poly, den: Poly) -> Result<RatFunc> {
        if self.is_extension() {
            return Err(Error::ContextMismatch);
        }
        RatFunc::reduce(self, num, den)
    }

    /// Square root generator T of an extension field.
    pub fn generator(&self) -> Option<RatFunc> {
        self.0.ext.as_ref().map(|e| RatFunc::ext(self, e.base.zero(), e.base.one()))
    }

    /// Embeds a base-field element into this field.
    pub fn lift(&self, f: &RatFunc) -> Result<RatFunc> {
        if f.ctx == *self {
            return Ok(f.clone());
        }
        match &self.0.ext {
            Some(e) if f.ctx == e.base => Ok(RatFunc::ext(self, f.clone(), e.base.zero())),
            _ => Err(Error::ContextMismatch),
        }
    }

    pub fn parse(&self, text: &str) -> Result<RatFunc> {
        parse::parse(self, text)
    }

    /// Builds K = F(sqrt(alpha)); the p-basis of K drops the lowest-index base
    /// variable that occurs in a monomial carrying a nonzero Frobenius
    /// coordinate of alpha, and adjoins T.
    pub fn extend_by_sqrt(&self, alpha: &RatFunc) -> Result<FieldCtx> {
        if self.is_extension() {
            return Err(Error::InvalidContext("nested square-root extensions are not supported".into()));
        }
        if alpha.ctx != *self {
            return Err(Error::ContextMismatch);
        }
        let coords = alpha.frobenius_decompose()?;
        let mut support = 0u32;
        for (&mask, c) in coords.iter() {
            if !c.is_zero() {
                support |= mask;
            }
        }
        if support == 0 {
            return Err(Error::AlreadySquare);
        }
        let dropped = support.trailing_zeros() as usize;
        Ok(FieldCtx(Arc::new(CtxInner {
            vars: self.0.vars.clone(),
            degree_budget: self.0.degree_budget,
            ext: Some(Extension {
                base: self.clone(),
                alpha: alpha.clone(),
                dropped,
                basis_change: OnceLock::new(),
            }),
        })))
    }

    /// Seeded random polynomial: each monomial of total degree at most
    /// `max_degree` is present with probability 1/2.
    pub fn random_poly<R: Rng>(&self, rng: &mut R, max_degree: u32) -> RatFunc {
        let base = self.base();
        let monos = monomials_up_to(base.nvars(), max_degree);
        let picked: Vec<Mono> = monos.into_iter().filter(|_| rng.gen_bool(0.5)).collect();
        let p = base.base_elem(Poly::from_monos(picked));
        self.lift(&p).expect("base embeds")
    }

    pub fn random_nonzero<R: Rng>(&self, rng: &mut R, max_degree: u32) -> RatFunc {
        loop {
            let r = self.random_poly(rng, max_degree);
            if !r.is_zero() {
                return r;
            }
        }
    }
}

/// All monomials in `n` variables of total degree at most `d`.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Mono> {
    let mut out = vec![Mono::ONE];
    for v in 0..n {
        let mut next = Vec::new();
        for m in &out {
            let mut cur = *m;
            next.push(cur);
            while cur.degree() < d {
                cur = cur.mul(Mono::var(v));
                next.push(cur);
            }
        }
        out = next;
    }
    out
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Reduced fraction; denominator nonzero, gcd 1.
    Base { num: Poly, den: Poly },
    /// re + im * T in an extension.
    Ext(Box<(RatFunc, RatFunc)>),
}

/// Exact element of a [`FieldCtx`]. Representation is canonical, so `==` is
/// field equality.
#[derive(Clone)]
pub struct RatFunc {
    ctx: FieldCtx,
    repr: Repr,
}

impl PartialEq for RatFunc {
    fn eq(&self, o: &Self) -> bool {
        self.repr == o.repr && self.ctx == o.ctx
    }
}

impl Eq for RatFunc {}

impl std::hash::Hash for RatFunc {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.repr.hash(state)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Mul,
    Div,
}

pub fn field_arith(a: &RatFunc, b: &RatFunc, op: FieldOp) -> Result<RatFunc> {
    match op {
        FieldOp::Add => a.add(b),
        FieldOp::Mul => a.mul(b),
        FieldOp::Div => a.div(b),
    }
}

impl RatFunc {
    fn ext(ctx: &FieldCtx, re: RatFunc, im: RatFunc) -> RatFunc {
        RatFunc { ctx: ctx.clone(), repr: Repr::Ext(Box::new((re, im))) }
    }

    fn reduce(ctx: &FieldCtx, num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let r = if num.is_zero() {
            RatFunc { ctx: ctx.clone(), repr: Repr::Base { num, den: Poly::one() } }
        } else if den.is_one() {
            RatFunc { ctx: ctx.clone(), repr: Repr::Base { num, den } }
        } else {
            let g = gcd(&num, &den)?;
            let (num, den) = if g.is_one() {
                (num, den)
            } else {
                (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
            };
            RatFunc { ctx: ctx.clone(), repr: Repr::Base { num, den } }
        };
        r.check_budget()?;
        Ok(r)
    }

    fn check_budget(&self) -> Result<()> {
        if let Repr::Base { num, den } = &self.repr {
            let d = num.degree().max(den.degree());
            if d > self.ctx.degree_budget() {
                return Err(Error::DegreeOverflow { degree: d, budget: self.ctx.degree_budget() });
            }
        }
        Ok(())
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Base { num, .. } => num.is_zero(),
            Repr::Ext(p) => p.0.is_zero() && p.1.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Base { num, den } => num.is_one() && den.is_one(),
            Repr::Ext(p) => p.0.is_one() && p.1.is_zero(),
        }
    }

    pub fn numerator(&self) -> Option<&Poly> {
        match &self.repr {
            Repr::Base { num, .. } => Some(num),
            Repr::Ext(_) => None,
        }
    }

    pub fn denominator(&self) -> Option<&Poly> {
        match &self.repr {
            Repr::Base { den, .. } => Some(den),
            Repr::Ext(_) => None,
        }
    }

    /// (re, im) with self = re + im*T, for extension elements.
    pub fn components(&self) -> Option<(&RatFunc, &RatFunc)> {
        match &self.repr {
            Repr::Ext(p) => Some((&p.0, &p.1)),
            Repr::Base { .. } => None,
        }
    }

    pub fn is_polynomial(&self) -> bool {
        matches!(&self.repr, Repr::Base { den, .. } if den.is_one())
    }

    /// Max total degree of numerator and denominator.
    pub fn degree(&self) -> u32 {
        match &self.repr {
            Repr::Base { num, den } => num.degree().max(den.degree()),
            Repr::Ext(p) => p.0.degree().max(p.1.degree()),
        }
    }

    /// Size measure used for pivot selection.
    pub(crate) fn weight(&self) -> u32 {
        match &self.repr {
            Repr::Base { num, den } => num.degree() + den.degree(),
            Repr::Ext(p) => p.0.weight() + p.1.weight() + 1,
        }
    }

    fn same_ctx(&self, o: &RatFunc) -> Result<()> {
        if self.ctx == o.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn add(&self, o: &RatFunc) -> Result<RatFunc> {
        self.same_ctx(o)?;
        match (&self.repr, &o.repr) {
            (Repr::Base { num: a, den: b }, Repr::Base { num: c, den: d }) => {
                if a.is_zero() {
                    return Ok(o.clone());
                }
                if c.is_zero() {
                    return Ok(self.clone());
                }
                if b == d {
                    let num = a.add(c);
                    if b.is_one() {
                        let r = self.ctx.base_elem(num);
                        r.check_budget()?;
                        return Ok(r);
                    }
                    return RatFunc::reduce(&self.ctx, num, b.clone());
                }
                if b.is_one() {
                    // (a*d + c)/d is already reduced
                    let r = RatFunc {
                        ctx: self.ctx.clone(),
                        repr: Repr::Base { num: a.mul(d)?.add(c), den: d.clone() },
                    };
                    r.check_budget()?;
                    return Ok(r);
                }
                if d.is_one() {
                    let r = RatFunc {
                        ctx: self.ctx.clone(),
                        repr: Repr::Base { num: c.mul(b)?.add(a), den: b.clone() },
                    };
                    r.check_budget()?;
                    return Ok(r);
                }
                let g = gcd(b, d)?;
                let bg = b.exact_div(&g).expect("gcd divides");
                let dg = d.exact_div(&g).expect("gcd divides");
                let num = a.mul(&dg)?.add(&c.mul(&bg)?);
                if num.is_zero() {
                    return Ok(self.ctx.zero());
                }
                // both inputs are reduced, so any common factor divides g
                let h = if g.is_one() { Poly::one() } else { gcd(&num, &g)? };
                let (num, den) = if h.is_one() {
                    (num, b.mul(&dg)?)
                } else {
                    (num.exact_div(&h).expect("gcd divides"), bg.mul(&dg)?.mul(&g.exact_div(&h).expect("gcd divides"))?)
                };
                let r = RatFunc { ctx: self.ctx.clone(), repr: Repr::Base { num, den } };
                r.check_budget()?;
                Ok(r)
            }
            (Repr::Ext(p), Repr::Ext(q)) => {
                Ok(RatFunc::ext(&self.ctx, p.0.add(&q.0)?, p.1.add(&q.1)?))
            }
            _ => Err(Error::ContextMismatch),
        }
    }

    /// Subtraction coincides with addition in characteristic 2.
    pub fn sub(&self, o: &RatFunc) -> Result<RatFunc> {
        self.add(o)
    }

    pub fn mul(&self, o: &RatFunc) -> Result<RatFunc> {
        self.same_ctx(o)?;
        if self.is_one() {
            return Ok(o.clone());
        }
        if o.is_one() {
            return Ok(self.clone());
        }
        match (&self.repr, &o.repr) {
            (Repr::Base { num: a, den: b }, Repr::Base { num: c, den: d }) => {
                if a.is_zero() || c.is_zero() {
                    return Ok(self.ctx.zero());
                }
                if b.is_one() && d.is_one() {
                    let r = self.ctx.base_elem(a.mul(c)?);
                    r.check_budget()?;
                    return Ok(r);
                }
                // cross-cancel: a/b * c/d with gcd(a,d), gcd(c,b)
                let g1 = if d.is_one() { Poly::one() } else { gcd(a, d)? };
                let g2 = if b.is_one() { Poly::one() } else { gcd(c, b)? };
                let a1 = a.exact_div(&g1).expect("gcd divides");
                let d1 = d.exact_div(&g1).expect("gcd divides");
                let c1 = c.exact_div(&g2).expect("gcd divides");
                let b1 = b.exact_div(&g2).expect("gcd divides");
                let r = RatFunc {
                    ctx: self.ctx.clone(),
                    repr: Repr::Base { num: a1.mul(&c1)?, den: b1.mul(&d1)? },
                };
                r.check_budget()?;
                Ok(r)
            }
            (Repr::Ext(p), Repr::Ext(q)) => {
                let alpha = &self.ctx.extension().expect("extension ctx").alpha;
                let (a, b) = (&p.0, &p.1);
                let (c, d) = (&q.0, &q.1);
                let re = a.mul(c)?.add(&b.mul(d)?.mul(alpha)?)?;
                let im = a.mul(d)?.add(&b.mul(c)?)?;
                Ok(RatFunc::ext(&self.ctx, re, im))
            }
            _ => Err(Error::ContextMismatch),
        }
    }

    pub fn square(&self) -> Result<RatFunc> {
        match &self.repr {
            Repr::Base { num, den } => {
                let r = RatFunc {
                    ctx: self.ctx.clone(),
                    repr: Repr::Base { num: num.square()?, den: den.square()? },
                };
                r.check_budget()?;
                Ok(r)
            }
            Repr::Ext(p) => {
                let alpha = &self.ctx.extension().expect("extension ctx").alpha;
                let re = p.0.square()?.add(&p.1.square()?.mul(alpha)?)?;
                Ok(RatFunc::ext(&self.ctx, re, self.ctx.base().zero()))
            }
        }
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match &self.repr {
            Repr::Base { num, den } => {
                Ok(RatFunc { ctx: self.ctx.clone(), repr: Repr::Base { num: den.clone(), den: num.clone() } })
            }
            Repr::Ext(p) => {
                // (a + bT)^{-1} = (a + bT) / (a^2 + alpha b^2)
                let norm = self.square()?;
                let n = norm.components().expect("ext").0.inv()?;
                Ok(RatFunc::ext(&self.ctx, p.0.mul(&n)?, p.1.mul(&n)?))
            }
        }
    }

    pub fn div(&self, o: &RatFunc) -> Result<RatFunc> {
        self.same_ctx(o)?;
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if o.is_one() {
            return Ok(self.clone());
        }
        if let (Repr::Base { num: a, den: b }, Repr::Base { num: c, den: d }) = (&self.repr, &o.repr) {
            if b.is_one() && d.is_one() {
                if let Some(q) = a.exact_div(c) {
                    let r = self.ctx.base_elem(q);
                    r.check_budget()?;
                    return Ok(r);
                }
            }
        }
        self.mul(&o.inv()?)
    }

    pub fn pow(&self, e: u32) -> Result<RatFunc> {
        let mut acc = self.ctx.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.square()?;
            }
        }
        Ok(acc)
    }

    /// F^2-coordinates over the square-free monomial p-basis.
    pub fn frobenius_decompose(&self) -> Result<FrobCoords> {
        frob::decompose(self)
    }

    /// Square root if self is a square.
    pub fn is_square(&self) -> Result<Option<RatFunc>> {
        let coords = self.frobenius_decompose()?;
        let mut root = None;
        for (&mask, c) in coords.iter() {
            if c.is_zero() {
                continue;
            }
            if mask != 0 {
                return Ok(None);
            }
            root = Some(c.clone());
        }
        let root = root.unwrap_or_else(|| self.ctx.zero());
        debug_assert!(root.square().map(|s| s == *self).unwrap_or(true));
        Ok(Some(root))
    }

    /// Canonical representative of the square class: the unique polynomial
    /// without square factors in `self * F^{x2}`. Base fields only.
    pub fn square_class_rep(&self) -> Result<RatFunc> {
        let Repr::Base { num, den } = &self.repr else {
            return Err(Error::ContextMismatch);
        };
        if num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = num.mul(den)?;
        let pr = self.ctx.base_elem(p.clone());
        let coords = pr.frobenius_decompose()?;
        let mut g = Poly::zero();
        for c in coords.values() {
            if let Some(n) = c.numerator() {
                g = gcd(&g, n)?;
            }
        }
        let g2 = g.square()?;
        let q = p.exact_div(&g2).expect("square of common coordinate factor divides");
        self.ctx.from_poly(q)
    }

    pub fn render(&self) -> String {
        match &self.repr {
            Repr::Base { num, den } => {
                let vars = self.ctx.vars();
                if den.is_one() {
                    num.render(vars)
                } else {
                    format!("({})/({})", num.render(vars), den.render(vars))
                }
            }
            Repr::Ext(p) => {
                if p.1.is_zero() {
                    p.0.render()
                } else if p.0.is_zero() {
                    format!("({})*T", p.1.render())
                } else {
                    format!("{} + ({})*T", p.0.render(), p.1.render())
                }
            }
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> FieldCtx {
        FieldCtx::new(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let k = ctx();
        let x = k.var(0);
        let y = k.var(1);
        assert!(x.add(&x).unwrap().is_zero());
        let s = x.add(&y).unwrap();
        assert_eq!(s.mul(&s).unwrap(), k.parse("x^2 + y^2").unwrap());
        let q = k.parse("x^2 + x*y").unwrap().div(&x).unwrap();
        assert_eq!(q, s);
    }

    #[test]
    fn division_by_zero() {
        let k = ctx();
        assert_eq!(k.var(0).div(&k.zero()), Err(Error::DivisionByZero));
        assert_eq!(k.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn degree_budget_is_enforced() {
        let k = FieldCtx::with_budget(&["x"], 4).unwrap();
        let x = k.var(0);
        assert!(x.pow(4).is_ok());
        assert!(matches!(x.pow(5), Err(Error::DegreeOverflow { degree: 5, budget: 4 })));
        assert!(matches!(
            FieldCtx::with_budget(&["x"], 0),
            Err(Error::InvalidContext(_))
        ));
    }

    #[test]
    fn context_mismatch() {
        let a = ctx();
        let b = FieldCtx::new(&["u"]).unwrap();
        assert_eq!(a.var(0).add(&b.var(0)), Err(Error::ContextMismatch));
        assert!(FieldCtx::new(&["x", "x"]).is_err());
    }

    #[test]
    fn canonical_fractions() {
        let k = ctx();
        let a = k.parse("(x^2 + 1)/(x + 1)").unwrap();
        assert_eq!(a, k.parse("x + 1").unwrap());
        let b = k.parse("1/x + 1/y").unwrap();
        assert_eq!(b, k.parse("(x + y)/(x*y)").unwrap());
        assert_eq!(b.render(), "(x + y)/(x*y)");
    }

    #[test]
    fn square_examples() {
        let k = ctx();
        assert_eq!(k.parse("x^2*y^4").unwrap().is_square().unwrap(), Some(k.parse("x*y^2").unwrap()));
        assert_eq!(k.var(0).is_square().unwrap(), None);
        assert_eq!(k.parse("x^2 + y^2").unwrap().is_square().unwrap(), Some(k.parse("x + y").unwrap()));
        assert_eq!(k.parse("1/x^2").unwrap().is_square().unwrap(), Some(k.parse("1/x").unwrap()));
    }

    #[test]
    fn square_class_representatives() {
        let k = ctx();
        assert_eq!(k.parse("1/x").unwrap().square_class_rep().unwrap(), k.var(0));
        assert_eq!(k.parse("x^3*y").unwrap().square_class_rep().unwrap(), k.parse("x*y").unwrap());
        // (y+1)^2 * x stripped to x
        assert_eq!(k.parse("x*y^2 + x").unwrap().square_class_rep().unwrap(), k.var(0));
        assert_eq!(k.parse("x^3 + x*z^2").unwrap().square_class_rep().unwrap(), k.var(0));
        let f = k.parse("x^2 + x*z^2").unwrap();
        assert_eq!(f.square_class_rep().unwrap(), f);
    }

    #[test]
    fn extension_arithmetic() {
        let f = FieldCtx::new(&["x", "y"]).unwrap();
        let k = f.extend_by_sqrt(&f.var(0)).unwrap();
        let t = k.generator().unwrap();
        assert_eq!(t.square().unwrap(), k.var(0));
        let one_t = k.one().add(&t).unwrap();
        let inv = one_t.inv().unwrap();
        let expect = one_t.div(&k.lift(&f.parse("1 + x").unwrap()).unwrap()).unwrap();
        assert_eq!(inv, expect);
        assert!(one_t.mul(&inv).unwrap().is_one());
        assert_eq!(f.extend_by_sqrt(&f.parse("x^2").unwrap()).err(), Some(Error::AlreadySquare));
    }

    #[test]
    fn random_elements_are_seeded() {
        use rand::SeedableRng;
        let k = ctx();
        let mut r1 = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut r2 = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let a: Vec<_> = (0..5).map(|_| k.random_poly(&mut r1, 2)).collect();
        let b: Vec<_> = (0..5).map(|_| k.random_poly(&mut r2, 2)).collect();
        assert_eq!(a, b);
        assert!(a.iter().all(|e| e.degree() <= 2));
    }
}
