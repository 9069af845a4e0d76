use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::int::forward_owned;
use super::IntPoly;
use crate::error::{Error, Result};

/// Polynomial with exact rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// Builds from `(numerator, denominator)` pairs.
    pub fn from_ratios(pairs: &[(i64, i64)]) -> Self {
        Self::new(
            pairs
                .iter()
                .map(|&(n, d)| BigRational::new(n.into(), d.into()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    /// `Some` iff every coefficient is an integer.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<BigInt>>>()
            .map(IntPoly::new)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn div_rem(&self, divisor: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return Ok((Self::zero(), self.clone()));
        };
        let inv_lc = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &inv_lc;
            if c.is_zero() {
                continue;
            }
            for (i, b) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * b;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic gcd over ℚ; zero when both inputs are zero.
    pub fn gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        while !r1.is_zero() {
            let r = r0.div_rem(&r1).expect("nonzero divisor").1;
            r0 = std::mem::replace(&mut r1, r.monic());
        }
        r0.monic()
    }

    /// The primitive integer polynomial with positive leading coefficient
    /// that is a rational multiple of `self`.
    pub fn to_primitive_int(&self) -> IntPoly {
        let den = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        IntPoly::new(self.coeffs.iter().map(|c| (c * &den).to_integer()).collect()).primitive_part()
    }

    /// Returns `(g, s, t)` with `s*a + t*b = g` and `g` monic (or zero when
    /// both inputs are zero).
    pub fn ext_gcd(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly, RatPoly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().cloned() {
            Some(lc) => {
                let inv = lc.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
            None => (r0, s0, t0),
        }
    }
}

impl From<&IntPoly> for RatPoly {
    fn from(f: &IntPoly) -> Self {
        f.to_rat()
    }
}

impl<'a> Add<&'a RatPoly> for &RatPoly {
    type Output = RatPoly;

    fn add(self, rhs: &'a RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a RatPoly> for &RatPoly {
    type Output = RatPoly;

    fn sub(self, rhs: &'a RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a RatPoly> for &RatPoly {
    type Output = RatPoly;

    fn mul(self, rhs: &'a RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;

    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

forward_owned!(RatPoly, Add::add, Sub::sub, Mul::mul);

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "({mag})*")?,
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Checks `lam * f + mu * f' == 1` exactly over ℚ.
pub fn bezout_check(f: &IntPoly, lam: &RatPoly, mu: &RatPoly) -> bool {
    let f = f.to_rat();
    let df = f.derivative();
    (&(lam * &f) + &(mu * &df)).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bezout_examples() {
        let f = IntPoly::from_i64s(&[1, 0, 1]);
        let lam = RatPoly::from_ratios(&[(1, 1)]);
        let mu = RatPoly::from_ratios(&[(0, 1), (-1, 2)]);
        assert!(bezout_check(&f, &lam, &mu));

        let f = IntPoly::from_i64s(&[0, 0, 1]);
        assert!(!bezout_check(&f, &RatPoly::one(), &RatPoly::zero()));

        let f = IntPoly::from_i64s(&[1, 1]);
        assert!(bezout_check(&f, &RatPoly::zero(), &RatPoly::one()));
    }

    #[test]
    fn ext_gcd_gives_bezout_witness() {
        let f = IntPoly::from_i64s(&[-3, 1, 0, 2, 1]).to_rat();
        let (g, s, t) = RatPoly::ext_gcd(&f, &f.derivative());
        assert!(g.is_one());
        assert!((&(&s * &f) + &(&t * &f.derivative())).is_one());
    }

    #[test]
    fn division_reconstructs() {
        let a = IntPoly::from_i64s(&[1, 0, 0, 0, 1]).to_rat();
        let b = IntPoly::from_i64s(&[2, 1, 1]).to_rat();
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap() < 2);
    }
}
