//! Multivariate polynomials over GF(2).
//!
//! A polynomial is the set of monomials with coefficient 1, stored sorted in
//! descending lexicographic order (variable 0 most significant), so the first
//! monomial is the lex-leading term.

use std::cmp::Ordering;
use std::fmt::Write as _;

use crate::Error;

/// Maximum number of variables a context may declare.
pub const MAX_VARS: usize = 10;
const FIELD_BITS: u32 = 12;
const FIELD_MASK: u128 = (1 << FIELD_BITS) - 1;
/// Largest exponent a single variable may carry inside the packed encoding.
pub(crate) const MAX_EXP: u32 = (1 << FIELD_BITS) - 1;

#[inline]
fn shift(var: usize) -> u32 {
    (MAX_VARS - 1 - var) as u32 * FIELD_BITS
}

/// Packed exponent vector, 12 bits per variable.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Mono(u128);

impl Mono {
    pub const ONE: Mono = Mono(0);

    pub fn var(var: usize) -> Mono {
        Mono(1u128 << shift(var))
    }

    pub fn from_exps(exps: &[u32]) -> Mono {
        let mut m = 0u128;
        for (i, &e) in exps.iter().enumerate() {
            debug_assert!(e <= MAX_EXP);
            m |= (e as u128) << shift(i);
        }
        Mono(m)
    }

    #[inline]
    pub fn exp(self, var: usize) -> u32 {
        ((self.0 >> shift(var)) & FIELD_MASK) as u32
    }

    pub fn degree(self) -> u32 {
        (0..MAX_VARS).map(|v| self.exp(v)).sum()
    }

    #[inline]
    pub fn mul(self, o: Mono) -> Mono {
        Mono(self.0 + o.0)
    }

    pub fn divides(self, o: Mono) -> bool {
        (0..MAX_VARS).all(|v| self.exp(v) <= o.exp(v))
    }

    /// `o / self`; caller guarantees divisibility.
    #[inline]
    pub fn div_into(self, o: Mono) -> Mono {
        Mono(o.0 - self.0)
    }

    pub fn min(self, o: Mono) -> Mono {
        let mut m = 0u128;
        for v in 0..MAX_VARS {
            m |= (self.exp(v).min(o.exp(v)) as u128) << shift(v);
        }
        Mono(m)
    }

    /// Bitmask of variables with odd exponent.
    pub fn parity_mask(self) -> u32 {
        let mut mask = 0;
        for v in 0..MAX_VARS {
            if self.exp(v) & 1 == 1 {
                mask |= 1 << v;
            }
        }
        mask
    }

    /// Halves every exponent after dropping the odd parts.
    pub fn half(self) -> Mono {
        let mut m = 0u128;
        for v in 0..MAX_VARS {
            m |= ((self.exp(v) / 2) as u128) << shift(v);
        }
        Mono(m)
    }

    pub fn square(self) -> Mono {
        Mono(self.0 << 1)
    }

    pub fn from_mask(mask: u32) -> Mono {
        let mut m = Mono::ONE;
        for v in 0..MAX_VARS {
            if mask & (1 << v) != 0 {
                m = m.mul(Mono::var(v));
            }
        }
        m
    }

    /// Graded-lexicographic comparison (higher degree first).
    pub fn grlex_cmp(self, o: Mono) -> Ordering {
        self.degree().cmp(&o.degree()).then(self.0.cmp(&o.0))
    }

    pub fn render(self, vars: &[String]) -> String {
        let mut out = String::new();
        for (v, name) in vars.iter().enumerate() {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(name);
            if e > 1 {
                let _ = write!(out, "^{e}");
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

/// Polynomial over GF(2): sorted (descending), duplicate-free monomial list.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: Vec<Mono>,
}

/// Keeps monomials that occur an odd number of times in a descending-sorted list.
fn cancel_pairs(sorted: Vec<Mono>) -> Vec<Mono> {
    let mut out = Vec::with_capacity(sorted.len());
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i + 1;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        if (j - i) % 2 == 1 {
            out.push(sorted[i]);
        }
        i = j;
    }
    out
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly { terms: vec![Mono::ONE] }
    }

    pub fn mono(m: Mono) -> Poly {
        Poly { terms: vec![m] }
    }

    pub fn var(v: usize) -> Poly {
        Poly::mono(Mono::var(v))
    }

    /// Builds a polynomial from an arbitrary monomial multiset (pairs cancel).
    pub fn from_monos(mut monos: Vec<Mono>) -> Poly {
        monos.sort_unstable_by(|a, b| b.cmp(a));
        Poly { terms: cancel_pairs(monos) }
    }

    pub fn terms(&self) -> &[Mono] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0] == Mono::ONE
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<Mono> {
        self.terms.first().copied()
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn deg_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|m| m.exp(var)).max().unwrap_or(0)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Poly { terms: out }
    }

    pub fn mul_mono(&self, m: Mono) -> Poly {
        Poly { terms: self.terms.iter().map(|t| t.mul(m)).collect() }
    }

    pub fn mul(&self, o: &Poly) -> Result<Poly, Error> {
        if self.is_zero() || o.is_zero() {
            return Ok(Poly::zero());
        }
        if self.is_one() {
            return Ok(o.clone());
        }
        if o.is_one() {
            return Ok(self.clone());
        }
        let bound = self.degree() + o.degree();
        if bound > MAX_EXP {
            return Err(Error::DegreeOverflow { degree: bound, budget: MAX_EXP });
        }
        if self.terms.len() == 1 {
            return Ok(o.mul_mono(self.terms[0]));
        }
        if o.terms.len() == 1 {
            return Ok(self.mul_mono(o.terms[0]));
        }
        if let Some(p) = self.mul_dense(o) {
            return Ok(p);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * o.terms.len());
        for &a in &self.terms {
            for &b in &o.terms {
                prods.push(a.mul(b));
            }
        }
        Ok(Poly::from_monos(prods))
    }

    fn max_exps(&self) -> [u32; MAX_VARS] {
        let mut e = [0u32; MAX_VARS];
        for &m in &self.terms {
            for (v, x) in e.iter_mut().enumerate() {
                *x = (*x).max(m.exp(v));
            }
        }
        e
    }

    /// Product accumulated in a bitset over the exponent box, used when the
    /// box is small next to the number of term products. Mixed-radix
    /// indices with variable 0 most significant follow monomial order, so
    /// scanning the bits downward yields sorted terms.
    fn mul_dense(&self, o: &Poly) -> Option<Poly> {
        let (ea, eb) = (self.max_exps(), o.max_exps());
        let pairs = (self.terms.len() * o.terms.len()) as u64;
        let mut radix = [0u64; MAX_VARS];
        let mut size = 1u64;
        for v in (0..MAX_VARS).rev() {
            radix[v] = size;
            size = size.checked_mul((ea[v] + eb[v] + 1) as u64)?;
            if size / 64 > 4 * pairs + 1024 {
                return None;
            }
        }
        let index = |m: Mono| -> u64 { (0..MAX_VARS).map(|v| m.exp(v) as u64 * radix[v]).sum() };
        let mut bits = vec![0u64; size.div_ceil(64) as usize];
        let ib: Vec<u64> = o.terms.iter().map(|&m| index(m)).collect();
        for &a in &self.terms {
            let ia = index(a);
            for &b in &ib {
                let k = ia + b;
                bits[(k / 64) as usize] ^= 1 << (k % 64);
            }
        }
        let mut terms = Vec::new();
        for (w, &word) in bits.iter().enumerate().rev() {
            let mut word = word;
            while word != 0 {
                let bit = 63 - word.leading_zeros() as u64;
                word ^= 1 << bit;
                let mut k = w as u64 * 64 + bit;
                let mut exps = [0u32; MAX_VARS];
                for v in 0..MAX_VARS {
                    exps[v] = (k / radix[v]) as u32;
                    k %= radix[v];
                }
                terms.push(Mono::from_exps(&exps));
            }
        }
        Some(Poly { terms })
    }

    /// Long division in a bitset over the exponent box of `self`. An exact
    /// quotient has deg_v q = deg_v self - deg_v d, so every product stays in
    /// the box and a quotient term outside that bound proves d does not
    /// divide. Returns `None` when the box is too large to be worth it.
    fn div_dense(&self, d: &Poly) -> Option<Option<Poly>> {
        let (ea, ed) = (self.max_exps(), d.max_exps());
        if (0..MAX_VARS).any(|v| ed[v] > ea[v]) {
            return Some(None);
        }
        let work = (self.terms.len() + d.terms.len()) as u64;
        let mut radix = [0u64; MAX_VARS];
        let mut size = 1u64;
        for v in (0..MAX_VARS).rev() {
            radix[v] = size;
            size = size.checked_mul((ea[v] + 1) as u64)?;
            if size / 64 > 64 * work + 1024 {
                return None;
            }
        }
        let index = |m: Mono| -> u64 { (0..MAX_VARS).map(|v| m.exp(v) as u64 * radix[v]).sum() };
        let mut bits = vec![0u64; size.div_ceil(64) as usize];
        for &m in &self.terms {
            let k = index(m);
            bits[(k / 64) as usize] ^= 1 << (k % 64);
        }
        let lt = d.terms[0];
        let id: Vec<u64> = d.terms.iter().map(|&m| index(m)).collect();
        let mut q = Vec::new();
        let mut w = bits.len();
        while w > 0 {
            let word = bits[w - 1];
            if word == 0 {
                w -= 1;
                continue;
            }
            let mut k = (w as u64 - 1) * 64 + 63 - word.leading_zeros() as u64;
            let mut exps = [0u32; MAX_VARS];
            for v in 0..MAX_VARS {
                exps[v] = (k / radix[v]) as u32;
                k %= radix[v];
            }
            let lead = Mono::from_exps(&exps);
            if !lt.divides(lead) {
                return Some(None);
            }
            let t = lt.div_into(lead);
            if (0..MAX_VARS).any(|v| t.exp(v) + ed[v] > ea[v]) {
                return Some(None);
            }
            let it = index(t);
            for &i in &id {
                let k = it + i;
                bits[(k / 64) as usize] ^= 1 << (k % 64);
            }
            q.push(t);
        }
        Some(Some(Poly { terms: q }))
    }

    /// Frobenius: squaring is additive in characteristic 2.
    pub fn square(&self) -> Result<Poly, Error> {
        let bound = 2 * self.degree();
        if bound > MAX_EXP {
            return Err(Error::DegreeOverflow { degree: bound, budget: MAX_EXP });
        }
        Ok(Poly { terms: self.terms.iter().map(|m| m.square()).collect() })
    }

    pub fn pow(&self, e: u32) -> Result<Poly, Error> {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        let lt = d.leading()?;
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if d.is_one() {
            return Some(self.clone());
        }
        if d.terms.len() == 1 {
            let mut q = Vec::with_capacity(self.terms.len());
            for &t in &self.terms {
                if !lt.divides(t) {
                    return None;
                }
                q.push(lt.div_into(t));
            }
            return Some(Poly { terms: q });
        }
        if let Some(q) = self.div_dense(d) {
            return q;
        }
        let mut r = self.clone();
        let mut q = Vec::new();
        while let Some(lr) = r.leading() {
            if !lt.divides(lr) {
                return None;
            }
            let t = lt.div_into(lr);
            q.push(t);
            r = r.add(&d.mul_mono(t));
        }
        Some(Poly { terms: q })
    }

    /// Greatest monomial dividing every term.
    pub fn mono_content(&self) -> Mono {
        let mut it = self.terms.iter();
        let Some(&first) = it.next() else {
            return Mono::ONE;
        };
        it.fold(first, |acc, &m| acc.min(m))
    }

    fn lowest_var(&self) -> Option<usize> {
        (0..MAX_VARS).find(|&v| self.terms.iter().any(|m| m.exp(v) > 0))
    }

    /// Coefficients with respect to `var`, indexed by exponent; each free of `var`.
    pub fn coeffs_in(&self, var: usize) -> Vec<Poly> {
        let d = self.deg_in(var) as usize;
        let mut buckets: Vec<Vec<Mono>> = vec![Vec::new(); d + 1];
        for &m in &self.terms {
            let e = m.exp(var);
            let stripped = Mono(m.0 - ((e as u128) << shift(var)));
            buckets[e as usize].push(stripped);
        }
        buckets.into_iter().map(Poly::from_monos).collect()
    }

    fn coeff_in(&self, var: usize, e: u32) -> Poly {
        let mut monos = Vec::new();
        for &m in &self.terms {
            if m.exp(var) == e {
                monos.push(Mono(m.0 - ((e as u128) << shift(var))));
            }
        }
        Poly { terms: monos }
    }

    fn content_in(&self, var: usize) -> Result<Poly, Error> {
        let mut g = Poly::zero();
        for c in self.coeffs_in(var) {
            if c.is_zero() {
                continue;
            }
            g = gcd_inner(&g, &c)?;
            if g.is_one() {
                break;
            }
        }
        Ok(g)
    }

    fn primitive_in(&self, var: usize) -> Result<Poly, Error> {
        let c = self.content_in(var)?;
        Ok(self.exact_div(&c).expect("content divides"))
    }

    pub fn render(&self, vars: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| b.grlex_cmp(*a));
        terms.iter().map(|m| m.render(vars)).collect::<Vec<_>>().join(" + ")
    }
}

/// Greatest common divisor over GF(2)[x_1..x_m].
pub fn gcd(a: &Poly, b: &Poly) -> Result<Poly, Error> {
    if a.is_zero() {
        return Ok(b.clone());
    }
    if b.is_zero() || a == b {
        return Ok(a.clone());
    }
    if a.is_one() || b.is_one() {
        return Ok(Poly::one());
    }
    if a.degree() >= b.degree() {
        if a.exact_div(b).is_some() {
            return Ok(b.clone());
        }
    } else if b.exact_div(a).is_some() {
        return Ok(a.clone());
    }
    gcd_inner(a, b)
}

/// Largest Kronecker image (in bits) worth a univariate coprimality test.
const KRONECKER_MAX_BITS: u64 = 1 << 15;

/// Exact coprimality test by Kronecker substitution x_v -> t^(w_v), with
/// mixed-radix weights so distinct monomials of a or b stay distinct. A
/// nonconstant common factor maps to a nonconstant common factor of the
/// images, so a trivial univariate gcd proves gcd(a, b) = 1. `false` means
/// "not shown coprime".
fn kronecker_coprime(a: &Poly, b: &Poly) -> bool {
    let mut weights = [0u64; MAX_VARS];
    let mut w = 1u64;
    for (v, weight) in weights.iter_mut().enumerate() {
        *weight = w;
        let d = a.deg_in(v).max(b.deg_in(v)) as u64;
        w = match w.checked_mul(d + 1) {
            Some(x) if x <= KRONECKER_MAX_BITS => x,
            _ => return false,
        };
    }
    let image = |p: &Poly| {
        let mut bits = BitPoly::zero(w as usize);
        for &m in p.terms() {
            let e: u64 = (0..MAX_VARS).map(|v| m.exp(v) as u64 * weights[v]).sum();
            bits.toggle(e as usize);
        }
        bits
    };
    BitPoly::gcd_is_one(image(a), image(b))
}

/// Dense univariate polynomial over GF(2), one bit per coefficient.
struct BitPoly {
    words: Vec<u64>,
}

impl BitPoly {
    fn zero(bits: usize) -> BitPoly {
        BitPoly { words: vec![0; bits.div_ceil(64) + 1] }
    }

    fn toggle(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    fn degree(&self) -> Option<usize> {
        let top = self.words.iter().rposition(|&w| w != 0)?;
        Some(top * 64 + 63 - self.words[top].leading_zeros() as usize)
    }

    /// self ^= o * t^shift
    fn xor_shifted(&mut self, o: &BitPoly, shift: usize, o_deg: usize) {
        let (ws, bs) = (shift / 64, shift % 64);
        for i in 0..=o_deg / 64 {
            let w = o.words[i];
            self.words[i + ws] ^= w << bs;
            if bs != 0 && w >> (64 - bs) != 0 {
                self.words[i + ws + 1] ^= w >> (64 - bs);
            }
        }
    }

    fn gcd_is_one(mut a: BitPoly, mut b: BitPoly) -> bool {
        loop {
            let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
                return false;
            };
            if da < db {
                std::mem::swap(&mut a, &mut b);
                continue;
            }
            if db == 0 {
                return true;
            }
            let mut d = da;
            loop {
                a.xor_shifted(&b, d - db, db);
                match a.degree() {
                    Some(x) if x >= db => d = x,
                    Some(_) => break,
                    None => return false,
                }
            }
        }
    }
}

/// Recursive content / primitive-part gcd with the lowest-index variable as main variable.
fn gcd_inner(a: &Poly, b: &Poly) -> Result<Poly, Error> {
    if a.is_zero() {
        return Ok(b.clone());
    }
    if b.is_zero() {
        return Ok(a.clone());
    }
    if a.is_one() || b.is_one() || kronecker_coprime(a, b) {
        return Ok(Poly::one());
    }
    let m = a.mono_content().min(b.mono_content());
    let a = Poly { terms: a.terms.iter().map(|t| m.div_into(*t)).collect() };
    let b = Poly { terms: b.terms.iter().map(|t| m.div_into(*t)).collect() };
    if a.lowest_var().is_none() || b.lowest_var().is_none() {
        return Ok(Poly::mono(m));
    }
    // a variable of both with the smallest degree keeps the sequence short
    let (ea, eb) = (a.max_exps(), b.max_exps());
    let main = (0..MAX_VARS)
        .filter(|&v| ea[v] > 0 && eb[v] > 0)
        .min_by_key(|&v| ea[v].max(eb[v]))
        .or_else(|| (0..MAX_VARS).find(|&v| ea[v] > 0 || eb[v] > 0))
        .expect("nonconstant");
    let in_a = a.deg_in(main) > 0;
    let in_b = b.deg_in(main) > 0;
    let g = if !in_a {
        gcd_inner(&a, &b.content_in(main)?)?
    } else if !in_b {
        gcd_inner(&a.content_in(main)?, &b)?
    } else {
        let ca = a.content_in(main)?;
        let cb = b.content_in(main)?;
        let pa = a.exact_div(&ca).expect("content divides");
        let pb = b.exact_div(&cb).expect("content divides");
        let c = gcd_inner(&ca, &cb)?;
        let p = subresultant_prs(pa, pb, main)?;
        c.mul(&p)?
    };
    Ok(g.mul_mono(m))
}

/// Subresultant remainder sequence for two primitive polynomials in `var`;
/// returns the primitive part of the last nonzero remainder.
fn subresultant_prs(mut a: Poly, mut b: Poly, var: usize) -> Result<Poly, Error> {
    if a.deg_in(var) < b.deg_in(var) {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = Poly::one();
    let mut h = Poly::one();
    loop {
        let delta = a.deg_in(var) - b.deg_in(var);
        let r = pseudo_rem(&a, &b, var)?;
        if r.is_zero() {
            return b.primitive_in(var);
        }
        if r.deg_in(var) == 0 {
            return Ok(Poly::one());
        }
        let divisor = g.mul(&h.pow(delta)?)?;
        a = b;
        b = r.exact_div(&divisor).expect("subresultant division is exact");
        g = a.coeff_in(var, a.deg_in(var));
        h = if delta == 0 {
            h
        } else {
            g.pow(delta)?.exact_div(&h.pow(delta - 1)?).expect("subresultant division is exact")
        };
    }
}

/// lc(b)^(deg a - deg b + 1) * a reduced modulo b in `var`.
fn pseudo_rem(a: &Poly, b: &Poly, var: usize) -> Result<Poly, Error> {
    let db = b.deg_in(var);
    let lcb = b.coeff_in(var, db);
    let mut r = a.clone();
    let mut pending = a.deg_in(var) + 1 - db;
    while !r.is_zero() && r.deg_in(var) >= db {
        let dr = r.deg_in(var);
        let lcr = r.coeff_in(var, dr);
        let mut e = [0u32; MAX_VARS];
        e[var] = dr - db;
        let lhs = lcb.mul(&r)?;
        let rhs = lcr.mul(b)?.mul_mono(Mono::from_exps(&e));
        r = lhs.add(&rhs);
        pending -= 1;
    }
    if pending > 0 && !r.is_zero() {
        r = r.mul(&lcb.pow(pending)?)?;
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Poly {
        Poly::var(0)
    }
    fn y() -> Poly {
        Poly::var(1)
    }
    fn z() -> Poly {
        Poly::var(2)
    }

    #[test]
    fn char_two_addition() {
        assert!(x().add(&x()).is_zero());
        let s = x().add(&y());
        assert_eq!(s.square().unwrap(), x().square().unwrap().add(&y().square().unwrap()));
        assert_eq!(s.mul(&s).unwrap(), s.square().unwrap());
    }

    #[test]
    fn exact_division() {
        let xy = x().mul(&y()).unwrap();
        let num = x().square().unwrap().add(&xy);
        assert_eq!(num.exact_div(&x()).unwrap(), x().add(&y()));
        assert!(num.exact_div(&y()).is_none());
        let p = x().add(&y()).mul(&z().add(&Poly::one())).unwrap();
        assert_eq!(p.exact_div(&x().add(&y())).unwrap(), z().add(&Poly::one()));
    }

    #[test]
    fn gcd_of_products() {
        let f = x().add(&y().mul(&z()).unwrap());
        let g = x().mul(&x()).unwrap().add(&Poly::one());
        let h = y().add(&z()).add(&Poly::one());
        let a = f.mul(&g).unwrap();
        let b = f.mul(&h).unwrap().mul(&x()).unwrap();
        assert_eq!(gcd(&a, &b).unwrap(), f);
        assert!(gcd(&g, &h).unwrap().is_one());
        // (x+1)^2 = x^2+1 shares (x+1) with x^2 + x
        let xp1 = x().add(&Poly::one());
        let x2x = x().square().unwrap().add(&x());
        assert_eq!(gcd(&g, &x2x).unwrap(), xp1);
    }

    #[test]
    fn grlex_rendering() {
        let vars: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let p = x().square().unwrap().mul(&y()).unwrap().add(&z());
        assert_eq!(p.render(&vars), "x^2*y + z");
        assert_eq!(Poly::zero().render(&vars), "0");
        assert_eq!(Poly::one().add(&y()).render(&vars), "y + 1");
    }
}
