//! Factorization over ℤ[x] and construction of irreducibility certificates.
//!
//! Search order for one irreducible `f`: a simple certificate from a small
//! prime budget, then degree analysis over several primes, then a lifted
//! factorization whose subset checks cover whatever degrees remain.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::bounds::{choose_lift_exponent, factor_coeff_bound};
use crate::certificate::{
    BezoutWitness, Certificate, CertifiedFactor, ComplexPostMusser, DegreeSet, FactorisationResult, PostMusser,
    PreMusser, Trial,
};
use crate::error::{Error, Result};
use crate::hensel::hensel_lift_multi;
use crate::modfactor::{factor_mod_p, irreducible_mod_p, squarefree_mod_p};
use crate::poly::{primes, IntPoly, ModPoly, Modulus, RatPoly};
use crate::subsets::{count_with_degree_sums, Combinations, DEFAULT_SUBSET_CEILING};

pub const DEFAULT_PRIME_BUDGET: usize = 25;
pub const DEFAULT_TRIALS: usize = 5;

/// Primes tried when looking for one that keeps `f` square-free.
const GOOD_PRIME_SEARCH: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifyOptions {
    /// Primes tried for a simple certificate.
    pub prime_budget: usize,
    /// Primes used for degree analysis.
    pub trials: usize,
    pub seed: u64,
    /// Refuse to enumerate more subsets than this.
    pub max_subsets: u64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        Self {
            prime_budget: DEFAULT_PRIME_BUDGET,
            trials: DEFAULT_TRIALS,
            seed: 0,
            max_subsets: DEFAULT_SUBSET_CEILING,
        }
    }
}

/// Monic irreducible factors of `f` modulo one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialFactors {
    pub modulus: Modulus,
    pub factors: Vec<ModPoly>,
}

impl TrialFactors {
    pub fn degrees(&self) -> Vec<usize> {
        self.factors.iter().filter_map(ModPoly::degree).collect()
    }

    fn to_trial(&self) -> Trial {
        Trial {
            p: self.modulus.p().clone(),
            factors: self.factors.iter().map(ModPoly::to_int_poly).collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PostMusserAttempt {
    pub certificate: Option<Certificate>,
    pub trials: Vec<TrialFactors>,
    /// Degrees in `1..deg f` not yet excluded.
    pub residual: BTreeSet<usize>,
}

/// Achievable factor degrees given the degrees of the factors mod `p`.
pub fn degree_compat_set(factor_degrees: &[usize]) -> DegreeSet {
    DegreeSet::from_factor_degrees(factor_degrees)
}

fn positive_degree(f: &IntPoly) -> Result<usize> {
    match f.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(d) => Ok(d),
    }
}

fn leading_unit_mod(f: &IntPoly, m: &Modulus) -> bool {
    f.leading().is_some_and(|lc| !m.reduce(lc).is_zero())
}

fn trial_seed(seed: u64, p: &BigInt) -> u64 {
    let low = p.iter_u64_digits().next().unwrap_or(0);
    seed ^ low.wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

/// Looks for a prime among the first `prime_budget` modulo which `f` stays
/// irreducible.
pub fn try_simple(f: &IntPoly, prime_budget: usize) -> Result<Option<Certificate>> {
    positive_degree(f)?;
    for p in primes().take(prime_budget) {
        let m = Modulus::prime(p)?;
        if !leading_unit_mod(f, &m) {
            continue;
        }
        if irreducible_mod_p(&ModPoly::from_int(f, &m))? {
            return Ok(Some(Certificate::Simple { p: p.into() }));
        }
    }
    Ok(None)
}

/// Primes not dividing `lc(f)` modulo which `f` is square-free.
fn good_primes(f: &IntPoly) -> impl Iterator<Item = Modulus> + '_ {
    primes()
        .take(GOOD_PRIME_SEARCH)
        .map(|p| Modulus::prime(p).expect("small primes are prime"))
        .filter(move |m| leading_unit_mod(f, m) && squarefree_mod_p(&ModPoly::from_int(f, m)).unwrap_or(false))
}

fn factor_at(f: &IntPoly, m: Modulus, seed: u64) -> Result<TrialFactors> {
    let fac = factor_mod_p(&ModPoly::from_int(f, &m), trial_seed(seed, m.p()))?;
    Ok(TrialFactors {
        factors: fac.factors.into_iter().map(|(g, _)| g).collect(),
        modulus: m,
    })
}

/// Intersects degree information over up to `trial_count` good primes,
/// stopping as soon as nothing strictly between `0` and `deg f` survives.
pub fn try_post_musser(f: &IntPoly, trial_count: usize, seed: u64) -> Result<PostMusserAttempt> {
    let n = positive_degree(f)?;
    let mut acc = DegreeSet::from_factor_degrees(&vec![1; n]);
    let mut trials = Vec::new();
    for m in good_primes(f).take(trial_count) {
        let trial = factor_at(f, m, seed)?;
        acc = acc.intersect(&degree_compat_set(&trial.degrees()));
        trials.push(trial);
        if acc.residual().is_empty() {
            break;
        }
    }
    let residual = acc.residual();
    let certificate = (!trials.is_empty() && residual.is_empty()).then(|| {
        Certificate::PostMusser(PostMusser {
            trials: trials.iter().map(TrialFactors::to_trial).collect(),
        })
    });
    Ok(PostMusserAttempt {
        certificate,
        trials,
        residual,
    })
}

/// Lifts the factorization in `trial` far enough for the coefficient bound.
fn lift_payload(f: &IntPoly, trial: &TrialFactors) -> Result<PreMusser> {
    let bound = factor_coeff_bound(f)?;
    let p = trial.modulus.p().clone();
    let n = choose_lift_exponent(&p, &bound);
    let lifted = hensel_lift_multi(f, &trial.factors, n)?;
    Ok(PreMusser {
        p,
        n,
        lifted_factors: lifted.factors.iter().map(ModPoly::symmetric_lift).collect(),
        formula_id: bound.formula_id,
    })
}

/// `pp(lc(f) * ∏ subset)` with coefficients in the symmetric range mod `q`.
fn subset_candidate(lc: &BigInt, factors: &[IntPoly], subset: &[usize], m: &Modulus) -> IntPoly {
    let prod = subset.iter().fold(ModPoly::constant(m, lc.clone()), |acc, &j| {
        &acc * &ModPoly::from_int(&factors[j], m)
    });
    prod.symmetric_lift().primitive_part()
}

/// Checks that no subset with degree sum in `allowed` yields a factor of `f`.
fn check_subsets(f: &IntPoly, pre: &PreMusser, allowed: &BTreeSet<usize>, ceiling: u64) -> Result<()> {
    let degrees: Vec<usize> = pre.lifted_factors.iter().filter_map(IntPoly::degree).collect();
    let total = count_with_degree_sums(&degrees, allowed);
    if total > u128::from(ceiling) {
        return Err(Error::InvalidInput(format!(
            "{total} subsets exceed the limit of {ceiling}"
        )));
    }
    let m = Modulus::new(pre.p.clone(), pre.n)?;
    let lc = f.leading().ok_or(Error::ZeroPolynomial)?;
    for k in 1..degrees.len() {
        let batch: Vec<Vec<usize>> = Combinations::new(degrees.len(), k)
            .filter(|s| allowed.contains(&s.iter().map(|&j| degrees[j]).sum()))
            .collect();
        let found = batch.par_iter().find_map_first(|s| {
            let cand = subset_candidate(lc, &pre.lifted_factors, s, &m);
            f.exact_div(&cand).map(|_| cand)
        });
        if let Some(cand) = found {
            return Err(Error::FoundFactor(cand));
        }
    }
    Ok(())
}

fn proper_degrees(n: usize) -> BTreeSet<usize> {
    (1..n).collect()
}

/// Pre-Musser certificate at prime `p`. Fails with [`Error::FoundFactor`] if
/// some subset of lifted factors recombines into a true factor.
pub fn build_pre_musser(f: &IntPoly, p: &BigInt, seed: u64, max_subsets: u64) -> Result<Certificate> {
    let n = positive_degree(f)?;
    let m = Modulus::prime(p.clone())?;
    if !leading_unit_mod(f, &m) {
        return Err(Error::PrimeDividesLeading(p.clone()));
    }
    if !squarefree_mod_p(&ModPoly::from_int(f, &m))? {
        return Err(Error::NotSquareFree(p.clone()));
    }
    let pre = lift_payload(f, &factor_at(f, m, seed)?)?;
    check_subsets(f, &pre, &proper_degrees(n), max_subsets)?;
    Ok(Certificate::PreMusser(pre))
}

/// Combines trial degree data with a lifted factorization, checking only the
/// subsets whose degree survives every trial. Degenerates to a post-Musser
/// certificate when nothing survives.
pub fn build_complex(f: &IntPoly, trials: &[TrialFactors], pre: PreMusser, max_subsets: u64) -> Result<Certificate> {
    let n = positive_degree(f)?;
    let residual = trials
        .iter()
        .fold(DegreeSet::from_factor_degrees(&vec![1; n]), |acc, t| {
            acc.intersect(&degree_compat_set(&t.degrees()))
        })
        .residual();
    let post = PostMusser {
        trials: trials.iter().map(TrialFactors::to_trial).collect(),
    };
    if !trials.is_empty() && residual.is_empty() {
        return Ok(Certificate::PostMusser(post));
    }
    check_subsets(f, &pre, &residual, max_subsets)?;
    Ok(Certificate::Complex(ComplexPostMusser {
        post,
        pre,
        residual_degrees: residual,
    }))
}

/// Certificate for a polynomial believed irreducible over ℤ.
pub fn certify_irreducible(f: &IntPoly, opts: &CertifyOptions) -> Result<Certificate> {
    let n = positive_degree(f)?;
    if let Some(c) = try_simple(f, opts.prime_budget)? {
        return Ok(c);
    }
    let attempt = try_post_musser(f, opts.trials, opts.seed)?;
    if let Some(c) = attempt.certificate {
        return Ok(c);
    }
    let chosen = match attempt.trials.iter().min_by_key(|t| t.factors.len()) {
        Some(t) => t.clone(),
        None => {
            let m = good_primes(f)
                .next()
                .ok_or_else(|| Error::NotSquareFree(BigInt::zero()))?;
            factor_at(f, m, opts.seed)?
        }
    };
    let pre = lift_payload(f, &chosen)?;
    if attempt.trials.is_empty() || attempt.residual == proper_degrees(n) {
        check_subsets(f, &pre, &proper_degrees(n), opts.max_subsets)?;
        return Ok(Certificate::PreMusser(pre));
    }
    build_complex(f, &attempt.trials, pre, opts.max_subsets)
}

/// Yun's square-free decomposition of a primitive polynomial over ℤ.
pub fn squarefree_decomposition_z(f: &IntPoly) -> Result<Vec<(IntPoly, usize)>> {
    positive_degree(f)?;
    let fr = f.to_rat();
    let df = fr.derivative();
    let a = RatPoly::gcd(&fr, &df);
    let mut b = fr.div_rem(&a)?.0;
    let c = df.div_rem(&a)?.0;
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = RatPoly::gcd(&b, &d);
        b = b.div_rem(&a)?.0;
        let c = d.div_rem(&a)?.0;
        d = &c - &b.derivative();
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.to_primitive_int(), i));
        }
        i += 1;
    }
    Ok(out)
}

/// Irreducible factors of a primitive square-free `f` with positive leading
/// coefficient, by lifting and recombination.
pub fn factor_squarefree(f: &IntPoly, opts: &CertifyOptions) -> Result<Vec<IntPoly>> {
    if positive_degree(f)? == 1 {
        return Ok(vec![f.clone()]);
    }
    let mut best: Option<TrialFactors> = None;
    for m in good_primes(f).take(opts.trials.max(1)) {
        let t = factor_at(f, m, opts.seed)?;
        if best.as_ref().is_none_or(|b| t.factors.len() < b.factors.len()) {
            best = Some(t);
        }
    }
    let best = best.ok_or_else(|| Error::NotSquareFree(BigInt::zero()))?;
    if best.factors.len() == 1 {
        return Ok(vec![f.clone()]);
    }
    let pre = lift_payload(f, &best)?;
    let m = Modulus::new(pre.p.clone(), pre.n)?;
    let mut active = pre.lifted_factors;
    let mut remaining = f.clone();
    let mut found = Vec::new();
    let mut k = 1;
    while 2 * k <= active.len() {
        let lc = remaining.leading().expect("nonzero").clone();
        let hit = Combinations::new(active.len(), k)
            .collect::<Vec<_>>()
            .into_par_iter()
            .find_map_first(|s| {
                let cand = subset_candidate(&lc, &active, &s, &m);
                remaining.exact_div(&cand).map(|q| (s, cand, q))
            });
        match hit {
            Some((s, cand, q)) => {
                found.push(cand);
                remaining = q;
                active = active
                    .into_iter()
                    .enumerate()
                    .filter(|(j, _)| !s.contains(j))
                    .map(|(_, g)| g)
                    .collect();
            }
            None => k += 1,
        }
    }
    found.push(remaining);
    Ok(found)
}

fn canonical_key(g: &IntPoly) -> (usize, IntPoly) {
    (g.degree().unwrap_or(0), g.clone())
}

/// `f = content * ∏ g^e` with primitive irreducible `g` of positive leading
/// coefficient, sorted by degree and then coefficients.
pub fn factor_z(f: &IntPoly, opts: &CertifyOptions) -> Result<(BigInt, Vec<(IntPoly, usize)>)> {
    positive_degree(f)?;
    let mut content = f.content();
    if f.leading().is_some_and(Signed::is_negative) {
        content = -content;
    }
    let mut factors = Vec::new();
    for (g, e) in squarefree_decomposition_z(&f.primitive_part())? {
        for h in factor_squarefree(&g, opts)? {
            factors.push((h, e));
        }
    }
    factors.sort_by_key(|(h, _)| canonical_key(h));

    let rebuilt = factors.iter().fold(IntPoly::constant(content.clone()), |acc, (h, e)| {
        &acc * &h.pow(*e as u32)
    });
    if &rebuilt != f {
        return Err(Error::InvalidInput("factorization does not reproduce f".into()));
    }
    Ok((content, factors))
}

/// Complete factorization of `f` with one certificate per distinct
/// irreducible factor, plus a Bézout witness when `f` is square-free.
pub fn factor_and_certify(f: &IntPoly, opts: &CertifyOptions) -> Result<FactorisationResult> {
    let (content, factors) = factor_z(f, opts)?;
    let certificates = factors
        .par_iter()
        .map(|(h, _)| certify_irreducible(h, opts))
        .collect::<Result<Vec<_>>>()?;

    let squarefree_witness = factors
        .iter()
        .all(|(_, e)| *e == 1)
        .then(|| {
            let fr = f.to_rat();
            let (g, lambda, mu) = RatPoly::ext_gcd(&fr, &fr.derivative());
            g.is_one().then_some(BezoutWitness { lambda, mu })
        })
        .flatten();

    Ok(FactorisationResult {
        f: f.clone(),
        content,
        factors: factors
            .into_iter()
            .zip(certificates)
            .map(|((poly, multiplicity), certificate)| CertifiedFactor {
                poly,
                multiplicity,
                certificate,
            })
            .collect(),
        squarefree_witness,
    })
}
