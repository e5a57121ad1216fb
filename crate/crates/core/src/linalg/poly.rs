use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

/// Univariate polynomial in `λ` with arbitrary-precision integer coefficients.
///
/// `coefficients()[k]` is the coefficient of `λᵏ`. Trailing zeros are trimmed,
/// so the zero polynomial has no coefficients and every other polynomial has a
/// nonzero leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BigPoly {
    coeffs: Vec<BigInt>,
}

impl BigPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(vec![BigInt::one()])
    }

    /// `λᵏ`
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Self { coeffs }
    }

    /// `λ − root`
    pub fn linear(root: impl Into<BigInt>) -> Self {
        Self::new(vec![-root.into(), BigInt::one()])
    }

    /// `λ² + b`; for `b > 0` its roots are `±i√b`.
    pub fn quadratic(b: impl Into<BigInt>) -> Self {
        Self::new(vec![b.into(), BigInt::zero(), BigInt::one()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = BigInt::zero();
        Self::new(
            (0..len)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) + other.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Horner evaluation at an exact integer.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Multiplicity of the root `λ = 0`, i.e. the index of the lowest nonzero
    /// coefficient. `None` for the zero polynomial.
    pub fn zero_root_multiplicity(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a BigPoly>) -> Self {
        factors.into_iter().fold(Self::one(), |acc, f| acc.mul(f))
    }
}

impl fmt::Display for BigPoly {
    /// Renders with `L` as the variable, highest power first, e.g.
    /// `L^3 - 12L^2 + 24L - 288`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "L")?,
                _ => write!(f, "L^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for BigPoly {
    /// Coefficients as decimal strings, lowest degree first.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(ToString::to_string))
    }
}

/// True iff the product of `factors` equals `p` coefficient by coefficient.
pub fn exact_factor_check(p: &BigPoly, factors: &[BigPoly]) -> bool {
    BigPoly::product(factors) == *p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_and_degrees() {
        let p = BigPoly::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(BigPoly::from_i64(&[0, 0]).degree(), None);
        assert!(BigPoly::from_i64(&[0]).is_zero());
    }

    #[test]
    fn product_of_lo_shu_factors() {
        // (λ−12)(λ²+24) = λ³ − 12λ² + 24λ − 288
        let p = BigPoly::linear(12).mul(&BigPoly::quadratic(24));
        assert_eq!(p, BigPoly::from_i64(&[-288, 24, -12, 1]));
        assert_eq!(p.to_string(), "L^3 - 12L^2 + 24L - 288");
    }

    #[test]
    fn factor_check_examples() {
        let p = BigPoly::monomial(2).mul(&BigPoly::linear(3));
        assert!(exact_factor_check(
            &p,
            &[BigPoly::monomial(2), BigPoly::linear(3)]
        ));
        let q = BigPoly::linear(12).mul(&BigPoly::quadratic(24));
        assert!(!exact_factor_check(
            &q,
            &[BigPoly::linear(12), BigPoly::quadratic(25)]
        ));
    }

    #[test]
    fn eval_and_zero_roots() {
        let p = BigPoly::monomial(4).mul(&BigPoly::linear(-5));
        assert!(p.eval(&BigInt::from(-5)).is_zero());
        assert_eq!(p.eval(&BigInt::from(1)), BigInt::from(6));
        assert_eq!(p.zero_root_multiplicity(), Some(4));
        assert_eq!(p.to_string(), "L^5 + 5L^4");
    }

    #[test]
    fn sub_cancels() {
        let p = BigPoly::from_i64(&[3, -1, 7]);
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.mul(&BigPoly::zero()), BigPoly::zero());
    }
}
