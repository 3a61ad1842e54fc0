//! Recursive-descent parser for rational function text such as
//! `(x^2*y + z)/(x + 1)`. Integer literals are read mod 2; `T` denotes the
//! square-root generator in an extension unless it names a variable.

use super::{FieldCtx, RatFunc};
use crate::{Error, Result};

struct Parser<'a> {
    ctx: &'a FieldCtx,
    src: &'a [u8],
    pos: usize,
}

pub(super) fn parse(ctx: &FieldCtx, text: &str) -> Result<RatFunc> {
    let mut p = Parser { ctx, src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in {:?}", self.pos, String::from_utf8_lossy(self.src)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        while let Some(b'+' | b'-') = self.peek() {
            self.pos += 1;
            acc = acc.add(&self.term()?)?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?)?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    acc = acc.div(&self.power()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e = u32::try_from(e).map_err(|_| self.err("exponent too large"))?;
            return base.pow(e);
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii")
            .parse()
            .map_err(|_| self.err("integer out of range"))
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(self.ctx.from_bool(n % 2 == 1))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                if let Some(i) = self.ctx.var_index(name) {
                    return Ok(self.ctx.var(i));
                }
                if name == "T" {
                    if let Some(t) = self.ctx.generator() {
                        return Ok(t);
                    }
                }
                self.pos = start;
                Err(self.err(&format!("unknown variable {name}")))
            }
            _ => Err(self.err("expected expression")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        let k = FieldCtx::new(&["x", "y", "z"]).unwrap();
        for s in ["0", "1", "x^2*y + z", "(x + y)/(x*z + 1)", "x*y + x + y^3"] {
            let e = k.parse(s).unwrap();
            assert_eq!(k.parse(&e.render()).unwrap(), e);
        }
        assert_eq!(k.parse("3*x - x").unwrap(), k.zero());
        assert!(k.parse("w").is_err());
        assert!(k.parse("x +").is_err());
        assert!(k.parse("(x").is_err());
        assert_eq!(k.parse("x/0"), Err(Error::DivisionByZero));
    }

    #[test]
    fn extension_text() {
        let f = FieldCtx::new(&["x", "y"]).unwrap();
        let k = f.extend_by_sqrt(&f.var(0)).unwrap();
        let e = k.parse("y + (x + 1)*T").unwrap();
        assert_eq!(k.parse(&e.render()).unwrap(), e);
        assert_eq!(k.parse("T^2").unwrap(), k.var(0));
    }
}
