//! Coefficient bounds for integer factors, and an exact executable check of
//! Mignotte's norm identity `||(X + α)P|| = |α| · ||(X + conj(α)^-1)P||`.
//!
//! Complex numbers are restricted to Gaussian rationals so that every
//! comparison is exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Identifier of the bound formula `B = ⌊2^m · ||f||₂⌋ + 1`, `m = deg f - 1`.
pub const FORMULA_ID: &str = "mignotte-2^m-l2-v1";

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Self::new(
            BigRational::from_integer(re.into()),
            BigRational::from_integer(im.into()),
        )
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// `|z|^2`
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        Some(Self::new(&self.re / &n, -&self.im / &n))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(&self.re * c, &self.im * c)
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;

    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;

    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;

    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;

    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i)", self.re, self.im)
    }
}

/// Polynomial with Gaussian-rational coefficients, low-to-high.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GaussianRationalPoly {
    coeffs: Vec<GaussianRational>,
}

impl GaussianRationalPoly {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(GaussianRational::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `a_k`, with `a_k = 0` outside `0..=deg`. `k = -1` is allowed.
    fn a(&self, k: isize) -> GaussianRational {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.coeffs.get(k).cloned())
            .unwrap_or_default()
    }

    pub fn l2_norm_sq(&self) -> BigRational {
        self.coeffs.iter().fold(BigRational::zero(), |acc, c| acc + c.norm_sq())
    }

    /// `(X + c) * self`
    pub fn mul_linear(&self, c: &GaussianRational) -> Self {
        let m = self.coeffs.len() as isize;
        Self::new((0..=m).map(|k| &self.a(k - 1) + &(c * &self.a(k))).collect())
    }
}

impl From<&IntPoly> for GaussianRationalPoly {
    fn from(f: &IntPoly) -> Self {
        Self::new(
            f.coeffs()
                .iter()
                .map(|c| GaussianRational::new(BigRational::from_integer(c.clone()), BigRational::zero()))
                .collect(),
        )
    }
}

/// `Σ c_i^2`
pub fn l2_norm_sq(f: &IntPoly) -> BigInt {
    f.coeffs().iter().map(|c| c * c).sum()
}

/// Checks `||Q||^2 = |α|^2 ||R||^2` with `Q = (X + α)P`, `R = (X + conj(α)^-1)P`.
pub fn mignotte_identity_check(p: &GaussianRationalPoly, alpha: &GaussianRational) -> Result<bool> {
    let conj_inv = alpha
        .conj()
        .inv()
        .ok_or_else(|| Error::InvalidInput("alpha must be nonzero".into()))?;
    let q = p.mul_linear(alpha);
    let r = p.mul_linear(&conj_inv);
    Ok(q.l2_norm_sq() == alpha.norm_sq() * r.l2_norm_sq())
}

/// The two summations obtained by expanding `||Q||^2` and `|α|^2 ||R||^2`
/// index by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormExpansion {
    /// `Σ_k |a_{k-1}|^2 + α a_k conj(a_{k-1}) + conj(α) a_{k-1} conj(a_k) + |α|^2 |a_k|^2`
    pub sum_a: BigRational,
    /// `Σ_k |α|^2 |a_{k-1}|^2 + α a_k conj(a_{k-1}) + conj(α) a_{k-1} conj(a_k) + |a_k|^2`
    pub sum_b: BigRational,
    /// Every index-`k` summand of the first sum equals its counterpart.
    pub termwise_equal: bool,
    /// Indices `k` at which the two summands differ.
    pub differing: Vec<usize>,
}

pub fn expand_l1a_terms(p: &GaussianRationalPoly, alpha: &GaussianRational) -> Result<NormExpansion> {
    if alpha.is_zero() {
        return Err(Error::InvalidInput("alpha must be nonzero".into()));
    }
    let alpha_sq = alpha.norm_sq();
    let m = p.coeffs().len() as isize - 1;
    let mut sum_a = BigRational::zero();
    let mut sum_b = BigRational::zero();
    let mut differing = Vec::new();
    for k in 0..=m + 1 {
        let (prev, cur) = (p.a(k - 1), p.a(k));
        let cross_1 = &(alpha * &cur) * &prev.conj();
        let cross_2 = &(&alpha.conj() * &prev) * &cur.conj();
        // The cross terms are conjugates, so their sum is real.
        let cross = (&cross_1 + &cross_2).re;
        let term_a = prev.norm_sq() + &cross + &alpha_sq * cur.norm_sq();
        let term_b = &alpha_sq * prev.norm_sq() + &cross + cur.norm_sq();
        if term_a != term_b {
            differing.push(k as usize);
        }
        sum_a += term_a;
        sum_b += term_b;
    }
    Ok(NormExpansion {
        sum_a,
        sum_b,
        termwise_equal: differing.is_empty(),
        differing,
    })
}

/// Bound `B` on the coefficient magnitudes of every factor of `f` in ℤ[x].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorBound {
    #[serde(with = "crate::certificate::decimal")]
    pub bound: BigInt,
    pub formula_id: String,
    pub degree_cap: usize,
}

/// `B` = smallest integer with `B^2 > 4^m ||f||^2`, `m = deg f - 1`.
pub fn factor_coeff_bound(f: &IntPoly) -> Result<FactorBound> {
    let deg = match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(d) => d,
    };
    let m = deg - 1;
    let scaled: BigInt = l2_norm_sq(f) << (2 * m);
    Ok(FactorBound {
        bound: scaled.sqrt() + BigInt::one(),
        formula_id: FORMULA_ID.to_string(),
        degree_cap: m,
    })
}

/// Recomputes a bound by formula id; `None` for an unknown formula.
pub fn bound_for_formula(formula_id: &str, f: &IntPoly) -> Option<Result<FactorBound>> {
    (formula_id == FORMULA_ID).then(|| factor_coeff_bound(f))
}

/// Smallest `n >= 1` with `p^n >= 2B`.
pub fn choose_lift_exponent(p: &BigInt, bound: &FactorBound) -> u32 {
    assert!(*p >= BigInt::from(2), "p must be at least 2");
    let target: BigInt = &bound.bound << 1usize;
    let mut n = 1;
    let mut pn = p.clone();
    while pn < target {
        pn *= p;
        n += 1;
    }
    n
}
