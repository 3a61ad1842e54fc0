//! JSON forms of field elements and algebra elements, and a small element
//! syntax for scenario files.

use std::collections::BTreeMap;

use sha2::{Digest, Sha256};

use crate::algebra::{AlgElement, StructAlgebra};
use crate::field::RatFunc;
use crate::structure::DecomposedAlgebra;
use crate::{Error, Result};

/// label -> rendered coefficient, zero coefficients omitted.
pub fn element_to_map(x: &AlgElement) -> BTreeMap<String, String> {
    x.terms().into_iter().map(|(l, c)| (l, c.render())).collect()
}

pub fn element_from_map(alg: &StructAlgebra, map: &BTreeMap<String, String>) -> Result<AlgElement> {
    let mut coords = alg.zero().into_coords();
    for (label, coeff) in map {
        let i = alg
            .basis_index(label)
            .ok_or_else(|| Error::Parse(format!("unknown basis label {label:?}")))?;
        coords[i] = alg.ctx().parse(coeff)?;
    }
    alg.element(coords)
}

/// Hex SHA-256 of the canonical JSON of an element's label map.
pub fn element_hash(x: &AlgElement) -> String {
    let text = serde_json::to_string(&element_to_map(x)).expect("string map serializes");
    hex(&Sha256::digest(text.as_bytes()))
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Parses an element of a decomposed algebra written as a sum of terms.
/// A term is a product of factors separated by `*`, where a factor is `1`,
/// a generator `u<i>`, `v<i>` or `w<i>` of factor i, a scalar in square
/// brackets or a parenthesized sum, e.g. `v0 + [a + 1]*(v1 + u0)*u2`.
pub fn parse_element(d: &DecomposedAlgebra, text: &str) -> Result<AlgElement> {
    let alg = d.algebra();
    let mut acc = alg.zero();
    for term in split_top(text, '+')? {
        let mut prod = alg.one();
        for factor in split_top(&term, '*')? {
            let f = factor.trim();
            let e = if let Some(inner) = f.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
                alg.scalar(&d.ctx().parse(inner)?)
            } else if let Some(inner) = f.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
                parse_element(d, inner)?
            } else if f == "1" {
                alg.one()
            } else {
                generator(d, f)?
            };
            prod = prod.mul(&e)?;
        }
        acc = acc.add(&prod)?;
    }
    Ok(acc)
}

fn generator(d: &DecomposedAlgebra, name: &str) -> Result<AlgElement> {
    let bad = || Error::Parse(format!("unknown generator {name:?}"));
    let mut chars = name.chars();
    let kind = chars.next().ok_or_else(bad)?;
    let i: usize = chars.as_str().parse().map_err(|_| bad())?;
    if i >= d.n() {
        return Err(bad());
    }
    let b = &d.factors()[i].basis;
    let local = match kind {
        'u' => &b.u,
        'v' => &b.v,
        'w' => &b.w,
        _ => return Err(bad()),
    };
    d.embed(i, local)
}

/// Splits on `sep` outside brackets and parentheses.
fn split_top(text: &str, sep: char) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in text.chars() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Parse(format!("unbalanced brackets in {text:?}")));
        }
        if c == sep && depth == 0 {
            out.push(std::mem::take(&mut cur));
        } else {
            cur.push(c);
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced brackets in {text:?}")));
    }
    out.push(cur);
    if out.iter().any(|t| t.trim().is_empty()) {
        return Err(Error::Parse(format!("empty term in {text:?}")));
    }
    Ok(out)
}

pub fn render_all(xs: &[RatFunc]) -> Vec<String> {
    xs.iter().map(|x| x.render()).collect()
}
