//! Dense univariate polynomials over ℤ, ℤ/q and ℚ.
//!
//! Coefficients are stored low-to-high: `coeffs[i]` is the coefficient of
//! `x^i`. Every constructor trims trailing zeros, so the zero polynomial is the
//! empty vector and `degree()` returns `None` for it.

mod int;
mod modular;
mod rational;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use int::{IntDivision, IntPoly};
pub use modular::ModPoly;
pub use rational::{bezout_check, RatPoly};

/// Trial-division limit used to sanity-check that a claimed prime is prime.
///
/// Primality is trusted input; this only catches obvious composites.
pub const TRIAL_DIVISION_LIMIT: u64 = 10_000;

/// Modulus `q = p^n` for a (trusted) prime `p` and exponent `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Modulus {
    p: BigInt,
    n: u32,
    q: BigInt,
}

impl Modulus {
    /// Builds `p^n`, rejecting `p < 2`, `n == 0` and any `p` with a divisor
    /// found by trial division up to [`TRIAL_DIVISION_LIMIT`].
    pub fn new(p: BigInt, n: u32) -> Result<Self> {
        if p < BigInt::from(2) {
            return Err(Error::InvalidModulus(format!("p = {p} is not a prime")));
        }
        if n == 0 {
            return Err(Error::InvalidModulus("exponent must be at least 1".into()));
        }
        if let Some(d) = small_divisor(&p) {
            return Err(Error::InvalidModulus(format!("p = {p} is divisible by {d}")));
        }
        let q = num_traits::pow(p.clone(), n as usize);
        Ok(Self { p, n, q })
    }

    pub fn prime(p: impl Into<BigInt>) -> Result<Self> {
        Self::new(p.into(), 1)
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn is_prime_field(&self) -> bool {
        self.n == 1
    }

    /// The prime field `ℤ/p` underneath this modulus.
    pub fn base(&self) -> Modulus {
        Modulus {
            p: self.p.clone(),
            n: 1,
            q: self.p.clone(),
        }
    }

    /// `p^k` with the same prime.
    pub fn with_exponent(&self, k: u32) -> Result<Modulus> {
        if k == 0 {
            return Err(Error::InvalidModulus("exponent must be at least 1".into()));
        }
        Ok(Modulus {
            p: self.p.clone(),
            n: k,
            q: num_traits::pow(self.p.clone(), k as usize),
        })
    }

    pub fn reduce(&self, c: &BigInt) -> BigInt {
        c.mod_floor(&self.q)
    }

    /// Inverse of `a` modulo `q`, if it exists.
    pub fn inverse(&self, a: &BigInt) -> Option<BigInt> {
        mod_inverse(a, &self.q)
    }

    /// Symmetric representative in `(-q/2, q/2]`.
    pub fn symmetric(&self, c: &BigInt) -> BigInt {
        symmetric_residue(c, &self.q)
    }

    pub(crate) fn require_prime(&self) -> Result<()> {
        if self.n == 1 {
            Ok(())
        } else {
            Err(Error::CompositeModulus(self.p.clone(), self.n))
        }
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}^{}", self.p, self.n)
        }
    }
}

fn small_divisor(p: &BigInt) -> Option<u64> {
    let small = p.to_u64();
    for d in 2..=TRIAL_DIVISION_LIMIT {
        if let Some(v) = small {
            if d * d > v {
                return None;
            }
        }
        if (p % d).is_zero() {
            return Some(d);
        }
    }
    None
}

/// Inverse of `a` modulo `m` in `[0, m)`.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let a = a.mod_floor(m);
    if a.is_zero() {
        return if m.is_one() { Some(BigInt::zero()) } else { None };
    }
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Maps `c` to the representative of its class modulo `q` in `(-q/2, q/2]`.
pub fn symmetric_residue(c: &BigInt, q: &BigInt) -> BigInt {
    let r = c.mod_floor(q);
    // r > q/2  <=>  2r > q
    if (&r << 1usize) > *q {
        r - q
    } else {
        r
    }
}

/// True if `c` lies in the symmetric range `(-q/2, q/2]`.
pub fn in_symmetric_range(c: &BigInt, q: &BigInt) -> bool {
    let twice: BigInt = c << 1usize;
    twice > -q && twice <= *q
}

/// Primes in increasing order starting at 2.
pub fn primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| is_small_prime(n))
}

pub fn is_small_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
