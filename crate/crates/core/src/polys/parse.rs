//! Polynomial syntax: sums of products of numbers, symbols and
//! parenthesized expressions. `*` is optional, `^` takes a nonnegative
//! integer, symbols are matched longest first.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{FunctionRing, Poly};
use crate::coefficients::Domain;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigRational),
    Sym(usize),
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn err(src: &str, pos: usize, msg: &str) -> Error {
    Error::Invalid(format!("{msg} at column {} in \"{src}\"", pos + 1))
}

fn lex(src: &str, symbols: &[String]) -> Result<Vec<(Tok, usize)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let rest = &src[i..];
        let sym = symbols
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_empty() && rest.starts_with(s.as_str()))
            .max_by_key(|(_, s)| s.len());
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::Open),
            ')' => Some(Tok::Close),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, i));
            i += 1;
            continue;
        }
        if c == '$' {
            return Err(err(src, i, "tag names starting with '$' are reserved"));
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let num_end = i;
            // a symbol named like a number wins when it is at least as long
            if let Some((k, s)) = sym {
                if s.len() >= num_end - start {
                    out.push((Tok::Sym(k), start));
                    i = start + s.len();
                    continue;
                }
            }
            let n: BigInt = src[start..num_end].parse().expect("digits");
            let mut q = BigRational::from_integer(n);
            if i < bytes.len() && bytes[i] == b'/' {
                let ds = i + 1;
                let mut j = ds;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                if j == ds {
                    return Err(err(src, i, "expected a denominator"));
                }
                let d: BigInt = src[ds..j].parse().expect("digits");
                if d.is_zero() {
                    return Err(err(src, ds, "zero denominator"));
                }
                q /= BigRational::from_integer(d);
                i = j;
            }
            out.push((Tok::Num(q), start));
            continue;
        }
        match sym {
            Some((k, s)) => {
                out.push((Tok::Sym(k), i));
                i += s.len();
            }
            None => {
                let end = rest.find(|ch: char| !ch.is_alphanumeric() && ch != '_').unwrap_or(rest.len()).max(1);
                return Err(err(src, i, &format!("unknown symbol '{}'", &rest[..end])));
            }
        }
    }
    Ok(out)
}

enum Val<E> {
    Scalar(BigRational),
    Poly(Poly<E>),
}

struct Parser<'a, D: Domain> {
    ring: &'a FunctionRing<D>,
    src: &'a str,
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl<'a, D: Domain> Parser<'a, D> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.src.len(), |(_, p)| *p)
    }

    fn scalar(&self, q: &BigRational) -> Result<D::Elem> {
        self.ring
            .domain
            .from_rational(q)
            .ok_or_else(|| Error::NotRepresentable(q.to_string(), self.ring.domain.descriptor()))
    }

    fn to_poly(&self, v: Val<D::Elem>) -> Result<Poly<D::Elem>> {
        match v {
            Val::Poly(p) => Ok(p),
            Val::Scalar(q) => {
                if q.is_zero() {
                    Ok(Poly::zero())
                } else {
                    self.ring.constant(self.scalar(&q)?)
                }
            }
        }
    }

    fn add(&self, a: Val<D::Elem>, b: Val<D::Elem>, neg: bool) -> Result<Val<D::Elem>> {
        Ok(match (a, b) {
            (Val::Scalar(x), Val::Scalar(y)) => Val::Scalar(if neg { x - y } else { x + y }),
            (a, b) => {
                let (a, b) = (self.to_poly(a)?, self.to_poly(b)?);
                Val::Poly(if neg { self.ring.sub(&a, &b) } else { self.ring.add(&a, &b) })
            }
        })
    }

    fn mul(&self, a: Val<D::Elem>, b: Val<D::Elem>) -> Result<Val<D::Elem>> {
        Ok(match (a, b) {
            (Val::Scalar(x), Val::Scalar(y)) => Val::Scalar(x * y),
            (Val::Scalar(x), Val::Poly(p)) | (Val::Poly(p), Val::Scalar(x)) => Val::Poly(self.ring.scale(&p, &self.scalar(&x)?)),
            (Val::Poly(p), Val::Poly(q)) => Val::Poly(self.ring.mul(&p, &q)),
        })
    }

    fn expr(&mut self) -> Result<Val<D::Elem>> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                let t = self.term()?;
                self.add(Val::Scalar(BigRational::zero()), t, true)?
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.add(acc, t, false)?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.add(acc, t, true)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Val<D::Elem>> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = self.mul(acc, f)?;
                }
                Some(Tok::Num(_) | Tok::Sym(_) | Tok::Open) => {
                    let f = self.factor()?;
                    acc = self.mul(acc, f)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Val<D::Elem>> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let at = self.here();
            let n = match self.peek() {
                Some(Tok::Num(q)) if q.is_integer() => q.to_integer(),
                _ => return Err(err(self.src, at, "expected an exponent")),
            };
            self.pos += 1;
            let n: u32 = n.try_into().map_err(|_| err(self.src, at, "exponent out of range"))?;
            return Ok(match base {
                Val::Scalar(q) => {
                    let mut r = BigRational::one();
                    for _ in 0..n {
                        r *= &q;
                    }
                    Val::Scalar(r)
                }
                Val::Poly(p) => Val::Poly(self.ring.pow(&p, n)?),
            });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Val<D::Elem>> {
        let at = self.here();
        match self.toks.get(self.pos).map(|(t, _)| t.clone()) {
            Some(Tok::Num(q)) => {
                self.pos += 1;
                Ok(Val::Scalar(q))
            }
            Some(Tok::Sym(k)) => {
                self.pos += 1;
                Ok(Val::Poly(self.ring.generator(k)))
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(err(self.src, self.here(), "expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(_) => Err(err(self.src, at, "unexpected token")),
            None => Err(err(self.src, at, "unexpected end of input")),
        }
    }
}

pub(super) fn parse_poly<D: Domain>(ring: &FunctionRing<D>, src: &str) -> Result<Poly<D::Elem>> {
    let toks = lex(src, &ring.universe().symbols())?;
    let mut p = Parser { ring, src, toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(err(src, p.here(), "unexpected token"));
    }
    p.to_poly(v)
}

#[cfg(test)]
mod tests {
    use crate::coefficients::Rationals;
    use crate::polys::FunctionRing;
    use crate::terms::{Reductive, TermOrder, TermSpace, Universe};

    #[test]
    fn longest_match_and_errors() {
        let s = TermSpace::new(Universe::free(["x", "x1", "d1"]), TermOrder::lenlex(&[1, 0, 2]), Reductive::Prefix).unwrap();
        let r = FunctionRing::new(s, Rationals).unwrap();
        assert_eq!(r.fmt(&r.parse("x1d1 - x x").unwrap()), "x1d1 - xx");
        let e = r.parse("x1 + y").unwrap_err().to_string();
        assert!(e.contains("column 6"), "{e}");
        assert!(r.parse("$z").is_err());
        assert!(r.parse("(x").is_err());
    }
}
