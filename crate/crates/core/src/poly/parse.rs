//! Recursive-descent parser for the polynomial grammar:
//!
//! ```text
//! poly     := term (("+"|"-") term)*
//! term     := factor ("*" factor)*
//! factor   := base ("^" nat)?
//! base     := rational | ident | "(" poly ")"
//! rational := int ("/" nat)?
//! ident    := letter (letter|digit|_)*
//! ```
//!
//! Whitespace is insignificant; unary minus is allowed at the head of a
//! polynomial and directly after `(`. Multiplication is always explicit.

use num_traits::Zero;

use super::{PolyRing, Polynomial, Rat};
use crate::error::Error;
use crate::Result;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a PolyRing,
}

pub fn parse_polynomial(src: &str, ring: &PolyRing) -> Result<Polynomial> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        ring,
    };
    p.skip_ws();
    let poly = p.poly()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(Error::Parse {
            pos: p.pos,
            msg: format!("unexpected `{}`", p.src[p.pos] as char),
        });
    }
    Ok(poly)
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            self.skip_ws();
            true
        } else {
            false
        }
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut negate = self.eat(b'-');
        let mut acc = self.ring.zero();
        loop {
            let t = self.term()?;
            acc = if negate { acc.sub(&t)? } else { acc.add(&t)? };
            if self.eat(b'+') {
                negate = false;
            } else if self.eat(b'-') {
                negate = true;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = acc.mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if self.eat(b'^') {
            let start = self.pos;
            let n = self.nat()?;
            if n > u32::MAX as u64 {
                return Err(Error::Parse {
                    pos: start,
                    msg: "exponent too large".into(),
                });
            }
            Ok(base.pow(n as u32))
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                self.skip_ws();
                let inner = self.poly()?;
                if !self.eat(b')') {
                    return Err(Error::Parse {
                        pos: self.pos,
                        msg: "expected `)`".into(),
                    });
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let r = self.rational()?;
                Ok(self.ring.constant(r))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self
                    .peek()
                    .is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let idx = self.ring.var_index(name).ok_or(Error::UnknownVariable {
                    name: name.into(),
                    pos: start,
                })?;
                self.skip_ws();
                Ok(self.ring.var(idx))
            }
            Some(c) => Err(Error::Parse {
                pos: self.pos,
                msg: format!("unexpected `{}`", c as char),
            }),
            None => Err(Error::Parse {
                pos: self.pos,
                msg: "unexpected end of input".into(),
            }),
        }
    }

    fn nat(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse {
                pos: start,
                msg: "expected a number".into(),
            });
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        self.skip_ws();
        digits.parse::<u64>().map_err(|_| Error::Parse {
            pos: start,
            msg: "number too large".into(),
        })
    }

    fn rational(&mut self) -> Result<Rat> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let numer: num_bigint::BigInt = std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::MalformedRational {
                pos: start,
                msg: "bad integer".into(),
            })?;
        self.skip_ws();
        if self.eat(b'/') {
            let dstart = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            if dstart == self.pos {
                return Err(Error::MalformedRational {
                    pos: dstart,
                    msg: "missing denominator".into(),
                });
            }
            let denom: num_bigint::BigInt = std::str::from_utf8(&self.src[dstart..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| Error::MalformedRational {
                    pos: dstart,
                    msg: "bad denominator".into(),
                })?;
            if denom.is_zero() {
                return Err(Error::MalformedRational {
                    pos: dstart,
                    msg: "zero denominator".into(),
                });
            }
            self.skip_ws();
            Ok(Rat::new(numer, denom))
        } else {
            Ok(Rat::from_integer(numer))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat_int;

    #[test]
    fn quadric_cone_relation() {
        let r = PolyRing::with_vars(&["x1", "x2", "x3", "x4", "x5"]);
        let f = r.parse("x1*x2 + x3*x4").unwrap();
        let manual = r
            .var(0)
            .mul(&r.var(1))
            .unwrap()
            .add(&r.var(2).mul(&r.var(3)).unwrap())
            .unwrap();
        assert_eq!(f, manual);
    }

    #[test]
    fn zero_and_constants() {
        let r = PolyRing::with_vars(&["x"]);
        assert!(r.parse("0").unwrap().is_zero());
        let one = r.parse("(x+1)^2 - x^2 - 2*x").unwrap();
        assert_eq!(one, r.one());
        assert_eq!(r.parse("3/4").unwrap().constant_term(), Rat::new(3.into(), 4.into()));
    }

    #[test]
    fn unary_minus_placement() {
        let r = PolyRing::with_vars(&["x"]);
        assert_eq!(r.parse("-x"), r.parse("0 - x"));
        assert_eq!(r.parse("(-x + 1)*(-1)"), r.parse("x - 1"));
        // unary minus is only allowed at head and after `(`
        assert!(r.parse("x * -1").is_err());
        assert!(r.parse("x + + 1").is_err());
    }

    #[test]
    fn error_positions() {
        let r = PolyRing::with_vars(&["x"]);
        match r.parse("x + y") {
            Err(Error::UnknownVariable { name, pos }) => {
                assert_eq!(name, "y");
                assert_eq!(pos, 4);
            }
            other => panic!("expected unknown variable, got {other:?}"),
        }
        assert!(matches!(
            r.parse("1/0"),
            Err(Error::MalformedRational { .. })
        ));
        assert!(matches!(r.parse("x +"), Err(Error::Parse { .. })));
        assert!(matches!(r.parse(""), Err(Error::Parse { .. })));
        assert!(matches!(r.parse("x x"), Err(Error::Parse { .. })));
    }

    #[test]
    fn parse_print_parse_identity() {
        let r = PolyRing::with_vars(&["x", "y", "z"]);
        let p = r.parse("-3/7*x^2*y + z^5 - 1/2").unwrap();
        assert_eq!(r.parse(&p.to_string()).unwrap(), p);
        assert_eq!(p.evaluate(&[rat_int(0), rat_int(0), rat_int(1)]).unwrap(), Rat::new(1.into(), 2.into()));
    }
}
