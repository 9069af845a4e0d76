use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::RatPoly;
use crate::error::{Error, Result};

/// Polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// Result of dividing two integer polynomials over ℚ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntDivision {
    pub quotient: RatPoly,
    pub remainder: RatPoly,
    /// `remainder == 0` and the quotient has integer coefficients.
    pub divides: bool,
}

impl IntDivision {
    /// The quotient as an integer polynomial, when the division is exact in ℤ[x].
    pub fn integer_quotient(&self) -> Option<IntPoly> {
        if self.divides {
            self.quotient.to_int_poly()
        } else {
            None
        }
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// `self / content`, normalized to a positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Long division over ℚ, with a flag telling whether `divisor` divides
    /// `self` in ℤ[x].
    pub fn div_rem(&self, divisor: &IntPoly) -> Result<IntDivision> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (quotient, remainder) = self.to_rat().div_rem(&divisor.to_rat())?;
        let divides = remainder.is_zero() && quotient.to_int_poly().is_some();
        Ok(IntDivision {
            quotient,
            remainder,
            divides,
        })
    }

    /// Exact quotient in ℤ[x], or `None` if `divisor` does not divide `self`.
    ///
    /// Integer long division that gives up as soon as the divisor's leading
    /// coefficient fails to divide the running remainder's.
    pub fn exact_div(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let nd = self.degree()?;
        if nd < dd {
            return None;
        }
        // Cheap filter on the constant terms.
        let (a0, b0) = (&self.coeffs[0], &divisor.coeffs[0]);
        if !b0.is_zero() && !(a0 % b0).is_zero() {
            return None;
        }
        let lc = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (i, b) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * b;
            }
            quot[k] = c;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::new(quot))
        } else {
            None
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl From<Vec<BigInt>> for IntPoly {
    fn from(coeffs: Vec<BigInt>) -> Self {
        Self::new(coeffs)
    }
}

impl<'a> Add<&'a IntPoly> for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &'a IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a IntPoly> for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &'a IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a IntPoly> for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &'a IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident :: $m:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &'a $ty) -> $ty {
                (&self).$m(rhs)
            }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(IntPoly, Add::add, Sub::sub, Mul::mul);

impl Neg for IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        -&self
    }
}

/// Canonical text form: descending degree, `2*x^3 - x + 5`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}*x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn canonical_form() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
    }

    #[test]
    fn multiply() {
        assert_eq!(p(&[1, 1]) * p(&[-1, 1]), p(&[-1, 0, 1]));
        let f = p(&[3, -2, 0, 7]);
        assert_eq!(&f * &IntPoly::one(), f);
        assert_eq!(&f * &IntPoly::zero(), IntPoly::zero());
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[1, 0, 1]).derivative(), p(&[0, 2]));
        assert_eq!(p(&[5]).derivative(), IntPoly::zero());
        assert_eq!(p(&[1, 0, 0, 0, 1]).derivative(), p(&[0, 0, 0, 4]));
    }

    #[test]
    fn division_examples() {
        let d = p(&[-1, 0, 1]).div_rem(&p(&[-1, 1])).unwrap();
        assert!(d.divides);
        assert_eq!(d.integer_quotient(), Some(p(&[1, 1])));
        assert!(d.remainder.is_zero());

        let d = p(&[1, 0, 0, 0, 1]).div_rem(&p(&[2, 1, 1])).unwrap();
        assert!(!d.divides);
        assert!(!d.remainder.is_zero());

        // x^2 + 1 by 2x: quotient x/2 is not integral
        let d = p(&[1, 0, 1]).div_rem(&p(&[0, 2])).unwrap();
        assert!(!d.divides);
        assert!(d.quotient.to_int_poly().is_none());

        assert_eq!(p(&[1]).div_rem(&IntPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn exact_div_matches_rational_route() {
        assert_eq!(p(&[-1, 0, 1]).exact_div(&p(&[-1, 1])), Some(p(&[1, 1])));
        assert_eq!(p(&[1, 0, 1]).exact_div(&p(&[0, 2])), None);
        assert_eq!(p(&[2, 4]).exact_div(&p(&[1, 2])), Some(p(&[2])));
        assert_eq!(p(&[1, 2]).exact_div(&p(&[2, 4])), None);
        assert_eq!(p(&[1, 1]).exact_div(&p(&[1, 0, 1])), None);
    }

    #[test]
    fn content_and_primitive_part() {
        let f = p(&[-4, 0, -6]);
        assert_eq!(f.content(), BigInt::from(2));
        assert_eq!(f.primitive_part(), p(&[2, 0, 3]));
        assert_eq!(IntPoly::zero().content(), BigInt::zero());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[5, -1, 0, 2]).to_string(), "2*x^3 - x + 5");
        assert_eq!(p(&[1, 0, 0, 0, 1]).to_string(), "x^4 + 1");
        assert_eq!(p(&[-1, 0, -3]).to_string(), "-3*x^2 - 1");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[-7]).to_string(), "-7");
    }
}
