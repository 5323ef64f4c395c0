use alloc::string::{String, ToString};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use super::{Polynomial, RationalFunction};
use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

// Intermediate value: a quotient that is never reduced, so declared shapes survive.
struct Frac {
    num: Polynomial,
    den: Polynomial,
}

impl Frac {
    fn poly(p: Polynomial) -> Self {
        Self {
            num: p,
            den: Polynomial::one(),
        }
    }

    fn add(self, rhs: Frac, negate: bool) -> Frac {
        let rnum = if negate { -&rhs.num } else { rhs.num };
        if self.den == rhs.den {
            Frac {
                num: &self.num + &rnum,
                den: self.den,
            }
        } else {
            Frac {
                num: &(&self.num * &rhs.den) + &(&rnum * &self.den),
                den: &self.den * &rhs.den,
            }
        }
    }

    fn mul(self, rhs: Frac) -> Frac {
        Frac {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }

    fn div(self, rhs: Frac) -> Option<Frac> {
        if rhs.num.is_zero() {
            return None;
        }
        Some(Frac {
            num: &self.num * &rhs.den,
            den: &self.den * &rhs.num,
        })
    }

    fn pow(self, e: u32) -> Frac {
        Frac {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    // constant denominators fold into the numerator
    fn finish(self) -> Frac {
        match self.den.as_constant() {
            Some(c) if !c.is_one() => Frac {
                num: self.num.scale(&c.recip()),
                den: Polynomial::one(),
            },
            _ => self,
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Self {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, message: &str) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos,
            message: message.to_string(),
        })
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse_all(mut self) -> Result<Frac, ParseError> {
        let v = self.expr()?;
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        Ok(v.finish())
    }

    fn expr(&mut self) -> Result<Frac, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(self.term()?, false);
            } else if self.eat(b'-') {
                acc = acc.add(self.term()?, true);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Frac, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(self.factor()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let rhs = self.factor()?;
                    acc = match acc.div(rhs) {
                        Some(v) => v,
                        None => {
                            self.pos = at;
                            return self.err("division by zero");
                        }
                    };
                }
                // implicit multiplication: `53x`, `2(1+x)`
                Some(b'x') | Some(b'(') => acc = acc.mul(self.factor()?),
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Frac, ParseError> {
        if self.eat(b'-') {
            let v = self.factor()?;
            return Ok(Frac {
                num: -&v.num,
                den: v.den,
            });
        }
        if self.eat(b'+') {
            return self.factor();
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.uint()?;
            let e = u32::try_from(e).or_else(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Frac, ParseError> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(Frac::poly(Polynomial::x()))
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits =
                    core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
                let n = BigInt::from_str(digits).expect("digits parse");
                Ok(Frac::poly(Polynomial::constant(Rational::from_integer(n))))
            }
            Some(_) => self.err("expected number, 'x' or '('"),
            None => self.err("unexpected end of input"),
        }
    }

    fn uint(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a nonnegative integer exponent");
        }
        core::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .map_or_else(|| self.err("exponent too large"), Ok)
    }
}

impl FromStr for Polynomial {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v = Parser::new(s).parse_all()?;
        if v.den != Polynomial::one() {
            return Err(ParseError {
                position: 0,
                message: "expression is not a polynomial".to_string(),
            });
        }
        Ok(v.num)
    }
}

impl FromStr for RationalFunction {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v = Parser::new(s).parse_all()?;
        RationalFunction::new(v.num, v.den).map_err(|e| ParseError {
            position: 0,
            message: e.to_string(),
        })
    }
}
