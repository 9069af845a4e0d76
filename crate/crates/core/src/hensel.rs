//! Hensel lifting of a coprime factorization mod `p` to mod `p^n`.
//!
//! Lifting is quadratic: each step squares the working modulus (clamped to
//! the target) and updates the Bézout cofactors alongside the factors. Several
//! factors are lifted through a balanced product tree.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{IntPoly, ModPoly, Modulus};

/// `leading_unit * ∏ factors ≡ f (mod p^n)` with monic factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedFactorization {
    pub modulus: Modulus,
    pub factors: Vec<ModPoly>,
    /// Monic mod-`p` factors, in the same order as `factors`.
    pub base_factors: Vec<ModPoly>,
    pub leading_unit: BigInt,
}

impl LiftedFactorization {
    pub fn product(&self) -> ModPoly {
        self.factors
            .iter()
            .fold(ModPoly::constant(&self.modulus, self.leading_unit.clone()), |acc, g| {
                &acc * g
            })
    }
}

struct PairLift {
    g: ModPoly,
    h: ModPoly,
}

/// Lifts monic `g`, `h` with `target ≡ g*h (mod p)` to `p^target_n`.
///
/// `target` must be monic modulo `p^target_n`.
fn lift_monic_pair(target: &IntPoly, g: &ModPoly, h: &ModPoly, target_n: u32) -> Result<PairLift> {
    let base = g.modulus().clone();
    let (gcd, s, t) = ModPoly::ext_gcd(g, h)?;
    if !gcd.is_one() {
        return Err(Error::NotCoprime(base.p().clone()));
    }
    let (mut g, mut h, mut s, mut t) = (g.clone(), h.clone(), s, t);
    let mut k = 1;
    while k < target_n {
        let next = (2 * k).min(target_n);
        let m = base.with_exponent(next)?;
        g = g.with_modulus(&m);
        h = h.with_modulus(&m);
        s = s.with_modulus(&m);
        t = t.with_modulus(&m);
        let f = ModPoly::from_int(target, &m);

        let e = &f - &(&g * &h);
        let (q, r) = (&s * &e).div_rem(&h)?;
        let g_next = &(&g + &(&t * &e)) + &(&q * &g);
        let h_next = &h + &r;

        let b = &(&(&s * &g_next) + &(&t * &h_next)) - &ModPoly::one(&m);
        let (c, d) = (&s * &b).div_rem(&h_next)?;
        s = &s - &d;
        t = &(&t - &(&t * &b)) - &(&c * &g_next);
        g = g_next;
        h = h_next;
        k = next;
    }
    debug_assert!(g.is_monic() && h.is_monic());
    Ok(PairLift { g, h })
}

fn check_leading(f: &IntPoly, base: &Modulus) -> Result<BigInt> {
    let lc = f.leading().ok_or(Error::ZeroPolynomial)?;
    if base.reduce(lc).is_zero() {
        return Err(Error::PrimeDividesLeading(base.p().clone()));
    }
    Ok(lc.clone())
}

/// `lc(f)^-1 * f` reduced modulo `m`, as an integer polynomial.
fn monic_target(f: &IntPoly, lc: &BigInt, m: &Modulus) -> Result<IntPoly> {
    let inv = m
        .inverse(lc)
        .ok_or_else(|| Error::NotInvertible(lc.clone(), m.q().clone()))?;
    Ok(ModPoly::from_int(f, m).scale(&inv).to_int_poly())
}

fn require_base(g: &ModPoly) -> Result<&Modulus> {
    let m = g.modulus();
    m.require_prime()?;
    if g.degree().unwrap_or(0) == 0 {
        return Err(Error::ConstantPolynomial);
    }
    Ok(m)
}

/// Lifts `f ≡ g*h (mod p)` (up to a unit) to `f ≡ G*H (mod p^target_n)`.
///
/// `G ≡ g` and `G` is monic whenever `g` is; `H` absorbs the unit, so
/// `H ≡ h` whenever `f ≡ g*h` exactly mod `p`.
pub fn hensel_lift_pair(f: &IntPoly, g: &ModPoly, h: &ModPoly, target_n: u32) -> Result<(ModPoly, ModPoly)> {
    let base = require_base(g)?.clone();
    require_base(h)?;
    if h.modulus() != &base {
        return Err(Error::ModulusMismatch(base.q().clone(), h.modulus().q().clone()));
    }
    let lc = check_leading(f, &base)?;
    let (gm, hm) = (g.monic()?, h.monic()?);
    if monic_target(f, &lc, &base)? != (&gm * &hm).to_int_poly() {
        return Err(Error::ProductMismatch(base.p().clone()));
    }
    let m = base.with_exponent(target_n)?;
    let target = monic_target(f, &lc, &m)?;
    let lifted = lift_monic_pair(&target, &gm, &hm, target_n)?;

    let lc_g = g.leading().cloned().unwrap_or_else(BigInt::one);
    let inv_lc_g = m
        .inverse(&lc_g)
        .ok_or_else(|| Error::NotInvertible(lc_g.clone(), m.q().clone()))?;
    Ok((lifted.g.scale(&lc_g), lifted.h.scale(&(lc * inv_lc_g))))
}

/// Lifts a factorization into pairwise coprime factors mod `p` to `p^target_n`.
pub fn hensel_lift_multi(f: &IntPoly, base: &[ModPoly], target_n: u32) -> Result<LiftedFactorization> {
    let first = base
        .first()
        .ok_or_else(|| Error::InvalidInput("no factors to lift".into()))?;
    let modulus_p = require_base(first)?.clone();
    let mut base_factors = Vec::with_capacity(base.len());
    for g in base {
        require_base(g)?;
        if g.modulus() != &modulus_p {
            return Err(Error::ModulusMismatch(modulus_p.q().clone(), g.modulus().q().clone()));
        }
        base_factors.push(g.monic()?);
    }
    base_factors.sort_by(ModPoly::canonical_cmp);

    let lc = check_leading(f, &modulus_p)?;
    let product = base_factors.iter().fold(ModPoly::one(&modulus_p), |acc, g| &acc * g);
    if monic_target(f, &lc, &modulus_p)? != product.to_int_poly() {
        return Err(Error::ProductMismatch(modulus_p.p().clone()));
    }

    let m = modulus_p.with_exponent(target_n)?;
    let target = monic_target(f, &lc, &m)?;
    let factors = lift_tree(&target, &base_factors, &m)?;
    Ok(LiftedFactorization {
        leading_unit: m.reduce(&lc),
        modulus: m,
        factors,
        base_factors,
    })
}

fn lift_tree(target: &IntPoly, leaves: &[ModPoly], m: &Modulus) -> Result<Vec<ModPoly>> {
    if leaves.len() == 1 {
        return Ok(vec![ModPoly::from_int(target, m)]);
    }
    let (left, right) = leaves.split_at(leaves.len() / 2);
    let base = leaves[0].modulus();
    let prod = |side: &[ModPoly]| side.iter().fold(ModPoly::one(base), |acc, g| &acc * g);
    let lifted = lift_monic_pair(target, &prod(left), &prod(right), m.n())?;
    let (l, r) = rayon::join(
        || lift_tree(&lifted.g.to_int_poly(), left, m),
        || lift_tree(&lifted.h.to_int_poly(), right, m),
    );
    let mut out = l?;
    out.extend(r?);
    Ok(out)
}
