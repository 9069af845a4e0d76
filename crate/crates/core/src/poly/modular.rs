use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{IntPoly, Modulus};
use crate::error::{Error, Result};

/// Polynomial over `ℤ/q`, coefficients stored in `[0, q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModPoly {
    modulus: Modulus,
    coeffs: Vec<BigInt>,
}

impl ModPoly {
    /// Reduces every coefficient into `[0, q)` and trims.
    pub fn new(modulus: &Modulus, coeffs: Vec<BigInt>) -> Self {
        let coeffs = coeffs.iter().map(|c| modulus.reduce(c)).collect();
        Self::from_reduced(modulus.clone(), coeffs)
    }

    fn from_reduced(modulus: Modulus, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { modulus, coeffs }
    }

    pub fn from_int(f: &IntPoly, modulus: &Modulus) -> Self {
        Self::new(modulus, f.coeffs().to_vec())
    }

    pub fn from_i64s(modulus: &Modulus, coeffs: &[i64]) -> Self {
        Self::new(modulus, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(modulus: &Modulus) -> Self {
        Self::from_reduced(modulus.clone(), Vec::new())
    }

    pub fn one(modulus: &Modulus) -> Self {
        Self::new(modulus, vec![BigInt::one()])
    }

    pub fn x(modulus: &Modulus) -> Self {
        Self::new(modulus, vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(modulus: &Modulus, c: BigInt) -> Self {
        Self::new(modulus, vec![c])
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
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

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    fn check_same(&self, other: &ModPoly) -> Result<()> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(Error::ModulusMismatch(
                self.modulus.q().clone(),
                other.modulus.q().clone(),
            ))
        }
    }

    pub fn try_add(&self, other: &ModPoly) -> Result<ModPoly> {
        self.check_same(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &ModPoly) -> Result<ModPoly> {
        self.check_same(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn try_mul(&self, other: &ModPoly) -> Result<ModPoly> {
        self.check_same(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &ModPoly) -> ModPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let q = self.modulus.q();
        let coeffs = (0..len)
            .map(|i| {
                let s = self.coeff(i) + other.coeff(i);
                if &s >= q {
                    s - q
                } else {
                    s
                }
            })
            .collect();
        Self::from_reduced(self.modulus.clone(), coeffs)
    }

    fn sub_unchecked(&self, other: &ModPoly) -> ModPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let q = self.modulus.q();
        let coeffs = (0..len)
            .map(|i| {
                let s = self.coeff(i) - other.coeff(i);
                if s < BigInt::zero() {
                    s + q
                } else {
                    s
                }
            })
            .collect();
        Self::from_reduced(self.modulus.clone(), coeffs)
    }

    fn mul_unchecked(&self, other: &ModPoly) -> ModPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.modulus);
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
        Self::new(&self.modulus, out)
    }

    pub fn scale(&self, c: &BigInt) -> ModPoly {
        Self::new(&self.modulus, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient; fails if it is not a unit mod `q`.
    pub fn monic(&self) -> Result<ModPoly> {
        let Some(lc) = self.leading() else {
            return Ok(self.clone());
        };
        if lc.is_one() {
            return Ok(self.clone());
        }
        let inv = self.lc_inverse(lc)?;
        Ok(self.scale(&inv))
    }

    fn lc_inverse(&self, lc: &BigInt) -> Result<BigInt> {
        self.modulus
            .inverse(lc)
            .ok_or_else(|| Error::NotInvertible(lc.clone(), self.modulus.q().clone()))
    }

    /// Euclidean division; the divisor's leading coefficient must be a unit.
    pub fn div_rem(&self, divisor: &ModPoly) -> Result<(ModPoly, ModPoly)> {
        self.check_same(divisor)?;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let inv = self.lc_inverse(&divisor.coeffs[dd])?;
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return Ok((Self::zero(&self.modulus), self.clone()));
        };
        let q = self.modulus.q();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            if rem[k + dd].is_zero() {
                continue;
            }
            let c = (&rem[k + dd] * &inv) % q;
            for (i, b) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * b;
            }
            for r in &mut rem[k..=k + dd] {
                *r = self.modulus.reduce(r);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((
            Self::from_reduced(self.modulus.clone(), quot),
            Self::from_reduced(self.modulus.clone(), rem),
        ))
    }

    pub fn rem(&self, divisor: &ModPoly) -> Result<ModPoly> {
        Ok(self.div_rem(divisor)?.1)
    }

    pub fn derivative(&self) -> ModPoly {
        Self::new(
            &self.modulus,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Representatives in `[0, q)` as an integer polynomial.
    pub fn to_int_poly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.clone())
    }

    /// Each coefficient mapped to its representative in `(-q/2, q/2]`.
    pub fn symmetric_lift(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| self.modulus.symmetric(c)).collect())
    }

    /// Reinterprets the coefficient representatives modulo another modulus.
    pub fn with_modulus(&self, modulus: &Modulus) -> ModPoly {
        Self::new(modulus, self.coeffs.clone())
    }

    /// Monic gcd over the prime field. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &ModPoly) -> Result<ModPoly> {
        self.check_same(other)?;
        self.modulus.require_prime()?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = std::mem::replace(&mut b, r);
        }
        a.monic()
    }

    /// Extended Euclid over the prime field: `(g, s, t)` with `s*a + t*b = g`,
    /// `g` monic.
    pub fn ext_gcd(a: &ModPoly, b: &ModPoly) -> Result<(ModPoly, ModPoly, ModPoly)> {
        a.check_same(b)?;
        a.modulus.require_prime()?;
        let m = &a.modulus;
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(m), Self::zero(m));
        let (mut t0, mut t1) = (Self::zero(m), Self::one(m));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = s0.sub_unchecked(&q.mul_unchecked(&s1));
            let t = t0.sub_unchecked(&q.mul_unchecked(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().cloned() {
            Some(lc) => {
                let inv = r0.lc_inverse(&lc)?;
                Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
            }
            None => Ok((r0, s0, t0)),
        }
    }

    /// `self * other mod m`.
    pub fn mul_mod(&self, other: &ModPoly, m: &ModPoly) -> Result<ModPoly> {
        self.try_mul(other)?.rem(m)
    }

    /// `self^e mod m` by square-and-multiply, reducing after every product.
    pub fn pow_mod(&self, e: &BigUint, m: &ModPoly) -> Result<ModPoly> {
        self.check_same(m)?;
        let base = self.rem(m)?;
        let mut acc = Self::one(&self.modulus).rem(m)?;
        for i in (0..e.bits()).rev() {
            acc = acc.mul_unchecked(&acc).rem(m)?;
            if e.bit(i) {
                acc = acc.mul_unchecked(&base).rem(m)?;
            }
        }
        Ok(acc)
    }

    /// `x^(p^j) mod self` over the prime field `ℤ/p`.
    pub fn powmod_x(&self, j: u32) -> Result<ModPoly> {
        self.modulus.require_prime()?;
        match self.degree() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) => return Err(Error::ConstantPolynomial),
            Some(_) => {}
        }
        let p = self.modulus.p().magnitude().clone();
        let e = num_traits::pow(p, j as usize);
        Self::x(&self.modulus).pow_mod(&e, self)
    }

    /// Canonical ordering: by degree, then coefficient sequence low-to-high.
    pub fn canonical_cmp(&self, other: &ModPoly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl<'a> Add<&'a ModPoly> for &ModPoly {
    type Output = ModPoly;

    /// Panics on modulus mismatch; use [`ModPoly::try_add`] to get an error.
    fn add(self, rhs: &'a ModPoly) -> ModPoly {
        self.try_add(rhs).expect("modulus mismatch")
    }
}

impl<'a> Sub<&'a ModPoly> for &ModPoly {
    type Output = ModPoly;

    fn sub(self, rhs: &'a ModPoly) -> ModPoly {
        self.try_sub(rhs).expect("modulus mismatch")
    }
}

impl<'a> Mul<&'a ModPoly> for &ModPoly {
    type Output = ModPoly;

    fn mul(self, rhs: &'a ModPoly) -> ModPoly {
        self.try_mul(rhs).expect("modulus mismatch")
    }
}

impl Neg for &ModPoly {
    type Output = ModPoly;

    fn neg(self) -> ModPoly {
        ModPoly::new(&self.modulus, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_int_poly().fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: i64) -> Modulus {
        Modulus::prime(p).unwrap()
    }

    fn mp(p: i64, c: &[i64]) -> ModPoly {
        ModPoly::from_i64s(&m(p), c)
    }

    #[test]
    fn product_mod_three() {
        // (x^2 + x + 2)(x^2 + 2x + 2) = x^4 + 3x^3 + 6x^2 + 6x + 4 = x^4 + 1 mod 3
        assert_eq!(&mp(3, &[2, 1, 1]) * &mp(3, &[2, 2, 1]), mp(3, &[1, 0, 0, 0, 1]));
    }

    #[test]
    fn mismatch_is_an_error() {
        let e = mp(3, &[1, 1]).try_mul(&mp(5, &[1, 1]));
        assert!(matches!(e, Err(Error::ModulusMismatch(_, _))));
    }

    #[test]
    fn powmod_examples() {
        let f = mp(3, &[1, 0, 1]);
        assert_eq!(f.powmod_x(1).unwrap(), mp(3, &[0, 2]));
        assert_eq!(f.powmod_x(2).unwrap(), mp(3, &[0, 1]));
        assert_eq!(mp(5, &[0, 1]).powmod_x(1).unwrap(), ModPoly::zero(&m(5)));
        let m9 = Modulus::new(BigInt::from(3), 2).unwrap();
        let g = ModPoly::from_i64s(&m9, &[1, 0, 1]);
        assert!(matches!(g.powmod_x(1), Err(Error::CompositeModulus(_, 2))));
    }

    #[test]
    fn gcd_examples() {
        assert!(mp(3, &[1, 0, 1]).gcd(&mp(3, &[0, 1])).unwrap().is_one());
        let f = mp(7, &[3, 0, 2]);
        assert_eq!(f.gcd(&ModPoly::zero(&m(7))).unwrap(), f.monic().unwrap());
        assert_eq!(mp(5, &[-1, 0, 1]).gcd(&mp(5, &[-1, 1])).unwrap(), mp(5, &[4, 1]));
    }

    #[test]
    fn ext_gcd_identity() {
        let a = mp(7, &[1, 2, 0, 3]);
        let b = mp(7, &[5, 1, 1]);
        let (g, s, t) = ModPoly::ext_gcd(&a, &b).unwrap();
        assert_eq!(&(&s * &a) + &(&t * &b), g);
        assert!(g.is_one());
    }

    #[test]
    fn symmetric_lift_examples() {
        let m9 = Modulus::new(BigInt::from(3), 2).unwrap();
        let f = ModPoly::from_i64s(&m9, &[7, 4]);
        assert_eq!(f.symmetric_lift(), IntPoly::from_i64s(&[-2, 4]));
        let m8 = Modulus::new(BigInt::from(2), 3).unwrap();
        assert_eq!(ModPoly::from_i64s(&m8, &[4]).symmetric_lift(), IntPoly::from_i64s(&[4]));
    }

    #[test]
    fn division_mod_prime_power() {
        let m27 = Modulus::new(BigInt::from(3), 3).unwrap();
        let a = ModPoly::from_i64s(&m27, &[5, 7, 1, 2]);
        let b = ModPoly::from_i64s(&m27, &[1, 1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        let bad = ModPoly::from_i64s(&m27, &[1, 3]);
        assert!(matches!(a.div_rem(&bad), Err(Error::NotInvertible(_, _))));
    }
}
