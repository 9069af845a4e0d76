//! Factorization and irreducibility testing over a prime field `ℤ/p`.
//!
//! Distinct-degree factorization peels off `u_j = gcd(f_j, x^(p^j) - x)`,
//! with `x^(p^j)` always computed modulo the current `f_j` by repeated
//! squaring. Each `u_j` is then split into its degree-`j` irreducible factors
//! by Cantor–Zassenhaus (trace map for `p = 2`).

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::{ModPoly, Modulus};

/// Attempts per equal-degree split before the input is declared invalid.
pub const SPLIT_RETRY_LIMIT: usize = 64;

/// Product `u_j` of all irreducible factors of degree `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeClass {
    pub degree: usize,
    pub product: ModPoly,
}

/// A degree class together with its split into irreducible factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreePart {
    pub degree: usize,
    pub product: ModPoly,
    pub factors: Vec<ModPoly>,
}

/// `f = unit * ∏ factor^multiplicity (mod p)` with monic irreducible factors
/// in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModFactorization {
    pub unit: BigInt,
    pub factors: Vec<(ModPoly, usize)>,
}

impl ModFactorization {
    pub fn product(&self, modulus: &Modulus) -> ModPoly {
        let mut acc = ModPoly::constant(modulus, self.unit.clone());
        for (g, e) in &self.factors {
            for _ in 0..*e {
                acc = &acc * g;
            }
        }
        acc
    }

    /// Number of irreducible factors counted with multiplicity.
    pub fn count(&self) -> usize {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (g, e) in &self.factors {
            let d = g.degree().unwrap_or(0);
            out.extend(std::iter::repeat_n(d, *e));
        }
        out
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, e)| *e == 1)
    }
}

fn nonconstant_checked(f: &ModPoly) -> Result<usize> {
    f.modulus().require_prime()?;
    match f.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(d) => Ok(d),
    }
}

/// True iff `gcd(f, f') = 1` over `ℤ/p`.
pub fn squarefree_mod_p(f: &ModPoly) -> Result<bool> {
    f.modulus().require_prime()?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(f.gcd(&f.derivative())?.is_one())
}

/// Distinct-degree factorization of a square-free polynomial.
///
/// Returns the nontrivial `u_j` in increasing `j`; their product is the monic
/// associate of `f`.
pub fn distinct_degree_split(f: &ModPoly) -> Result<Vec<DegreeClass>> {
    nonconstant_checked(f)?;
    if !squarefree_mod_p(f)? {
        return Err(Error::NotSquareFree(f.modulus().p().clone()));
    }
    let m = f.modulus().clone();
    let p = m.p().magnitude().clone();
    let x = ModPoly::x(&m);
    let mut rest = f.monic()?;
    let mut out = Vec::new();
    // h = x^(p^j) mod rest
    let mut h = x.rem(&rest)?;
    let mut j = 0;
    while rest.degree().unwrap_or(0) > 0 {
        j += 1;
        let deg = rest.degree().unwrap_or(0);
        if deg < 2 * j {
            // What remains has no factor of degree < j, so it is irreducible.
            out.push(DegreeClass {
                degree: deg,
                product: rest,
            });
            break;
        }
        h = h.pow_mod(&p, &rest)?;
        let u = rest.gcd(&(&h - &x))?;
        if !u.is_one() {
            rest = rest.div_rem(&u)?.0;
            h = h.rem(&rest)?;
            out.push(DegreeClass { degree: j, product: u });
        }
    }
    Ok(out)
}

/// Splits a product of distinct monic irreducibles, all of degree `j`.
///
/// Deterministic for a fixed `seed`. Output is in canonical order.
pub fn equal_degree_split(u: &ModPoly, j: usize, seed: u64) -> Result<Vec<ModPoly>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    equal_degree_split_with(u, j, &mut rng)
}

fn equal_degree_split_with(u: &ModPoly, j: usize, rng: &mut ChaCha8Rng) -> Result<Vec<ModPoly>> {
    let d = nonconstant_checked(u)?;
    if j == 0 || d % j != 0 {
        return Err(Error::InvalidInput(format!(
            "degree {d} is not a multiple of the class degree {j}"
        )));
    }
    let mut pending = vec![u.monic()?];
    let mut out = Vec::new();
    while let Some(w) = pending.pop() {
        if w.degree() == Some(j) {
            out.push(w);
            continue;
        }
        let g = split_once(&w, j, rng)?;
        let (cofactor, _) = w.div_rem(&g)?;
        pending.push(g);
        pending.push(cofactor.monic()?);
    }
    out.sort_by(ModPoly::canonical_cmp);
    Ok(out)
}

/// Finds a proper monic divisor of `w`.
fn split_once(w: &ModPoly, j: usize, rng: &mut ChaCha8Rng) -> Result<ModPoly> {
    let m = w.modulus();
    let p = m.p();
    let d = w.degree().unwrap_or(0);
    let one = ModPoly::one(m);
    let odd_exponent: Option<BigUint> = if p.is_even() {
        None
    } else {
        let pj = num_traits::pow(p.magnitude().clone(), j);
        Some((pj - 1u32) >> 1)
    };
    for _ in 0..SPLIT_RETRY_LIMIT {
        let a = random_poly(m, d, rng);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = w.gcd(&a)?;
        if is_proper(&g, d) {
            return Ok(g);
        }
        let b = match &odd_exponent {
            Some(e) => &a.pow_mod(e, w)? - &one,
            None => trace_map(&a, j, w)?,
        };
        let g = w.gcd(&b)?;
        if is_proper(&g, d) {
            return Ok(g);
        }
    }
    Err(Error::SplitFailed(SPLIT_RETRY_LIMIT))
}

fn is_proper(g: &ModPoly, d: usize) -> bool {
    g.degree().is_some_and(|k| k > 0 && k < d)
}

/// `a + a^2 + a^4 + ... + a^(2^(j-1)) mod w` over `ℤ/2`.
fn trace_map(a: &ModPoly, j: usize, w: &ModPoly) -> Result<ModPoly> {
    let mut term = a.rem(w)?;
    let mut acc = term.clone();
    for _ in 1..j {
        term = term.mul_mod(&term, w)?;
        acc = &acc + &term;
    }
    Ok(acc)
}

fn random_poly(m: &Modulus, below_degree: usize, rng: &mut ChaCha8Rng) -> ModPoly {
    let p = m.p();
    let coeffs = (0..below_degree)
        .map(|_| match p.to_u64() {
            Some(small) => BigInt::from(rng.gen_range(0..small)),
            None => rng.gen_bigint_range(&BigInt::zero(), p),
        })
        .collect();
    ModPoly::new(m, coeffs)
}

/// Irreducibility over `ℤ/p`: `gcd(f, x^(p^j) - x mod f) = 1` for every
/// `1 <= j <= deg f / 2`. Does not need `f` square-free.
pub fn irreducible_mod_p(f: &ModPoly) -> Result<bool> {
    let n = nonconstant_checked(f)?;
    let f = f.monic()?;
    let m = f.modulus();
    let p = m.p().magnitude().clone();
    let x = ModPoly::x(m);
    let mut h = x.rem(&f)?;
    for _ in 1..=n / 2 {
        h = h.pow_mod(&p, &f)?;
        if !f.gcd(&(&h - &x))?.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Distinct-degree classes of a square-free `f`, each split into irreducibles.
pub fn degree_parts(f: &ModPoly, seed: u64) -> Result<Vec<DegreePart>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    distinct_degree_split(f)?
        .into_iter()
        .map(|class| {
            let factors = equal_degree_split_with(&class.product, class.degree, &mut rng)?;
            Ok(DegreePart {
                degree: class.degree,
                product: class.product,
                factors,
            })
        })
        .collect()
}

/// Complete factorization over `ℤ/p` with multiplicities.
pub fn factor_mod_p(f: &ModPoly, seed: u64) -> Result<ModFactorization> {
    f.modulus().require_prime()?;
    let unit = f.leading().cloned().ok_or(Error::ZeroPolynomial)?;
    if f.degree() == Some(0) {
        return Ok(ModFactorization {
            unit,
            factors: Vec::new(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(&f.monic()?)? {
        for class in distinct_degree_split(&part)? {
            for g in equal_degree_split_with(&class.product, class.degree, &mut rng)? {
                factors.push((g, mult));
            }
        }
    }
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    Ok(ModFactorization { unit, factors })
}

/// Square-free decomposition of a monic polynomial over `ℤ/p`:
/// `f = ∏ part^multiplicity` with pairwise coprime square-free parts.
pub fn squarefree_decomposition(f: &ModPoly) -> Result<Vec<(ModPoly, usize)>> {
    let m = f.modulus();
    m.require_prime()?;
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return Ok(out);
    }
    let df = f.derivative();
    let mut c = if df.is_zero() { f.clone() } else { f.gcd(&df)? };
    if !df.is_zero() {
        let mut w = f.div_rem(&c)?.0;
        let mut i = 1;
        while !w.is_one() {
            let y = w.gcd(&c)?;
            let fac = w.div_rem(&y)?.0;
            if !fac.is_one() {
                out.push((fac, i));
            }
            c = c.div_rem(&y)?.0;
            w = y;
            i += 1;
        }
    }
    if !c.is_one() {
        // c is a polynomial in x^p
        let p = m.p().to_usize().expect("p <= degree here");
        let root = ModPoly::new(m, c.coeffs().iter().step_by(p).cloned().collect());
        for (g, e) in squarefree_decomposition(&root.monic()?)? {
            out.push((g, e * p));
        }
    }
    Ok(out)
}
