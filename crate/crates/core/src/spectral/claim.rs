//! Exact spectrum claims: a product of monic integer factors compared with
//! the characteristic polynomial coefficient by coefficient.
//!
//! Claim text is a product of factors, optionally separated by `*` or
//! whitespace:
//!
//! ```text
//! L^4(L-360)(L^2+216)(L^2+17496)
//! ```
//!
//! `L` and `L^k` are powers of the variable, `(L-a)`/`(L+a)` linear factors,
//! `(L^2+b)`/`(L^2-b)` quadratics.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::linalg::{charpoly_exact, exact_factor_check, BigPoly, IntSquare};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpectrumFactor {
    /// `λᵏ`
    ZeroPower(usize),
    /// `λ − a`
    Linear(BigInt),
    /// `λ² + b`
    Quadratic(BigInt),
}

impl SpectrumFactor {
    pub fn to_poly(&self) -> BigPoly {
        match self {
            SpectrumFactor::ZeroPower(k) => BigPoly::monomial(*k),
            SpectrumFactor::Linear(a) => BigPoly::linear(a.clone()),
            SpectrumFactor::Quadratic(b) => BigPoly::quadratic(b.clone()),
        }
    }
}

fn signed(f: &mut fmt::Formatter<'_>, x: &BigInt) -> fmt::Result {
    if x.sign() == num_bigint::Sign::Minus {
        write!(f, "-{}", -x)
    } else {
        write!(f, "+{x}")
    }
}

impl fmt::Display for SpectrumFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectrumFactor::ZeroPower(1) => f.write_str("L"),
            SpectrumFactor::ZeroPower(k) => write!(f, "L^{k}"),
            SpectrumFactor::Linear(a) => {
                f.write_str("(L")?;
                signed(f, &-a)?;
                f.write_str(")")
            }
            SpectrumFactor::Quadratic(b) => {
                f.write_str("(L^2")?;
                signed(f, b)?;
                f.write_str(")")
            }
        }
    }
}

/// True iff the product of `claim` is exactly the characteristic polynomial
/// of `m`.
pub fn spectrum_claim_check(m: &IntSquare, claim: &[SpectrumFactor]) -> bool {
    let factors: Vec<BigPoly> = claim.iter().map(SpectrumFactor::to_poly).collect();
    exact_factor_check(&charpoly_exact(m), &factors)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ClaimParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "malformed claim at byte {}: {}",
            self.position, self.message
        )
    }
}

impl std::error::Error for ClaimParseError {}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ClaimParseError> {
        Err(ClaimParseError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_space(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_space();
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

    fn expect(&mut self, c: u8) -> Result<(), ClaimParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn variable(&mut self) -> Result<(), ClaimParseError> {
        match self.peek() {
            Some(b'L') | Some(b'l') => {
                self.pos += 1;
                Ok(())
            }
            _ => self.err("expected 'L'"),
        }
    }

    fn digits(&mut self) -> Result<&'a str, ClaimParseError> {
        self.skip_space();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn exponent(&mut self) -> Result<usize, ClaimParseError> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let d = self.digits()?;
        d.parse().or_else(|_| self.err("exponent out of range"))
    }

    /// `(L ± a)` or `(L^2 ± b)`, after the opening parenthesis.
    fn bracketed(&mut self) -> Result<SpectrumFactor, ClaimParseError> {
        self.variable()?;
        let power = self.exponent()?;
        let negative = match self.peek() {
            Some(b'+') => false,
            Some(b'-') => true,
            _ => return self.err("expected '+' or '-'"),
        };
        self.pos += 1;
        let mut value: BigInt = self.digits()?.parse().expect("ascii digits");
        if negative {
            value = -value;
        }
        self.expect(b')')?;
        match power {
            1 => Ok(SpectrumFactor::Linear(-value)),
            2 => Ok(SpectrumFactor::Quadratic(value)),
            _ => self.err(format!("unsupported factor degree {power}")),
        }
    }
}

/// Parses claim text into factors.
pub fn parse_claim(text: &str) -> Result<Vec<SpectrumFactor>, ClaimParseError> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut factors = Vec::new();
    loop {
        match cur.peek() {
            None => break,
            Some(b'*') if !factors.is_empty() => {
                cur.pos += 1;
                if cur.peek().is_none() {
                    return cur.err("dangling '*'");
                }
            }
            Some(b'(') => {
                cur.pos += 1;
                factors.push(cur.bracketed()?);
            }
            Some(b'L') | Some(b'l') => {
                cur.pos += 1;
                factors.push(SpectrumFactor::ZeroPower(cur.exponent()?));
            }
            Some(_) => return cur.err("expected a factor"),
        }
    }
    if factors.is_empty() {
        return cur.err("empty claim");
    }
    Ok(factors)
}

impl FromStr for SpectrumFactor {
    type Err = ClaimParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut f = parse_claim(s)?;
        if f.len() != 1 {
            return Err(ClaimParseError {
                position: 0,
                message: "expected exactly one factor".into(),
            });
        }
        Ok(f.remove(0))
    }
}
