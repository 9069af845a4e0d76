//! Independent certificate checker.
//!
//! Everything here is re-derived from the certificate data using polynomial
//! arithmetic, the mod-`p` irreducibility test and the bound formula. Nothing
//! from the lifting or factor-search code is consulted.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::bound_for_formula;
use crate::certificate::{
    Certificate, ComplexPostMusser, DegreeSet, Document, FactorisationResult, PostMusser, PreMusser, Trial,
};
use crate::modfactor::irreducible_mod_p;
use crate::poly::{bezout_check, in_symmetric_range, IntPoly, ModPoly, Modulus, TRIAL_DIVISION_LIMIT};
use crate::subsets::{count_with_degree_sums, subsets_with_degree_sums, DEFAULT_SUBSET_CEILING};

/// Largest `p^n`, in bits, the checker is willing to work with.
pub const MAX_MODULUS_BITS: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum AssertionId {
    #[serde(rename = "P.1")]
    P1,
    #[serde(rename = "P.2")]
    P2,
    #[serde(rename = "P.3")]
    P3,
    #[serde(rename = "P.4")]
    P4,
    #[serde(rename = "S.1")]
    S1,
    #[serde(rename = "S.2")]
    S2,
    #[serde(rename = "S.3")]
    S3,
    #[serde(rename = "C.1")]
    C1,
    #[serde(rename = "SIMPLE")]
    Simple,
    #[serde(rename = "BOUND-RECOMPUTE")]
    BoundRecompute,
    /// `content * ∏ g^e = f` for a factorization document.
    #[serde(rename = "PRODUCT")]
    Product,
    #[serde(rename = "BEZOUT")]
    Bezout,
    /// Certificate data that cannot be interpreted at all.
    #[serde(rename = "MALFORMED")]
    Malformed,
}

impl AssertionId {
    pub fn as_str(self) -> &'static str {
        match self {
            AssertionId::P1 => "P.1",
            AssertionId::P2 => "P.2",
            AssertionId::P3 => "P.3",
            AssertionId::P4 => "P.4",
            AssertionId::S1 => "S.1",
            AssertionId::S2 => "S.2",
            AssertionId::S3 => "S.3",
            AssertionId::C1 => "C.1",
            AssertionId::Simple => "SIMPLE",
            AssertionId::BoundRecompute => "BOUND-RECOMPUTE",
            AssertionId::Product => "PRODUCT",
            AssertionId::Bezout => "BEZOUT",
            AssertionId::Malformed => "MALFORMED",
        }
    }
}

impl std::fmt::Display for AssertionId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What made a check fail (or, for some passing checks, what was computed).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// Offending factor or trial index.
    Index(usize),
    /// Indices of lifted factors whose recombination divides `f`.
    Subset {
        indices: Vec<usize>,
        factor: IntPoly,
    },
    /// A degree that should have been ruled out.
    Degree(usize),
    Detail(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub assertion: AssertionId,
    pub passed: bool,
    /// Position in the factor list of a factorization document.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub factor: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

impl Check {
    fn pass(assertion: AssertionId) -> Self {
        Self {
            assertion,
            passed: true,
            factor: None,
            witness: None,
        }
    }

    fn fail(assertion: AssertionId, witness: Witness) -> Self {
        Self {
            assertion,
            passed: false,
            factor: None,
            witness: Some(witness),
        }
    }

    fn detail(assertion: AssertionId, msg: impl Into<String>) -> Self {
        Self::fail(assertion, Witness::Detail(msg.into()))
    }

    fn from_result(assertion: AssertionId, r: Result<(), Witness>) -> Self {
        match r {
            Ok(()) => Self::pass(assertion),
            Err(w) => Self::fail(assertion, w),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Accepted,
    Rejected,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub verdict: Verdict,
    /// Facts the verdict relies on without re-proving them.
    pub trusted_base: Vec<String>,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    fn from_checks(checks: Vec<Check>) -> Self {
        let verdict = if !checks.is_empty() && checks.iter().all(|c| c.passed) {
            Verdict::Accepted
        } else {
            Verdict::Rejected
        };
        Self {
            verdict,
            trusted_base: trusted_base(),
            checks,
        }
    }

    pub fn accepted(&self) -> bool {
        self.verdict == Verdict::Accepted
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// True iff some check with this id failed.
    pub fn failed(&self, id: AssertionId) -> bool {
        self.failures().any(|c| c.assertion == id)
    }
}

fn trusted_base() -> Vec<String> {
    vec![
        format!(
            "every listed prime p is prime (only trial division by primes up to {TRIAL_DIVISION_LIMIT} is performed)"
        ),
        "soundness of the factor coefficient bound named by formula_id".into(),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Refuse subset checks larger than this.
    pub max_subsets: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            max_subsets: DEFAULT_SUBSET_CEILING,
        }
    }
}

fn degree_of(f: &IntPoly) -> Result<usize, Witness> {
    match f.degree() {
        Some(d) if d > 0 => Ok(d),
        _ => Err(Witness::Detail("f must have positive degree".into())),
    }
}

fn prime_modulus(p: &BigInt) -> Result<Modulus, Witness> {
    Modulus::prime(p.clone()).map_err(|e| Witness::Detail(e.to_string()))
}

fn lc_is_unit(f: &IntPoly, m: &Modulus) -> bool {
    f.leading().is_some_and(|lc| !m.reduce(lc).is_zero())
}

pub fn verify_simple(f: &IntPoly, p: &BigInt) -> Check {
    let run = || -> Result<(), Witness> {
        degree_of(f)?;
        let m = prime_modulus(p)?;
        if !lc_is_unit(f, &m) {
            return Err(Witness::Detail(format!("{p} divides the leading coefficient")));
        }
        match irreducible_mod_p(&ModPoly::from_int(f, &m)) {
            Ok(true) => Ok(()),
            Ok(false) => Err(Witness::Detail(format!("f is reducible modulo {p}"))),
            Err(e) => Err(Witness::Detail(e.to_string())),
        }
    };
    Check::from_result(AssertionId::Simple, run())
}

/// The lifted data after the structural part of P.1 has been established.
struct Lifted<'a> {
    modulus: Modulus,
    base: Modulus,
    factors: &'a [IntPoly],
    degrees: Vec<usize>,
}

fn check_p1<'a>(f: &IntPoly, pre: &'a PreMusser) -> Result<Lifted<'a>, Witness> {
    degree_of(f)?;
    let base = prime_modulus(&pre.p)?;
    if pre.n == 0 {
        return Err(Witness::Detail("exponent n must be at least 1".into()));
    }
    if u64::from(pre.n) * pre.p.bits() > MAX_MODULUS_BITS {
        return Err(Witness::Detail(format!("p^n exceeds {MAX_MODULUS_BITS} bits")));
    }
    let modulus = Modulus::new(pre.p.clone(), pre.n).map_err(|e| Witness::Detail(e.to_string()))?;
    if !lc_is_unit(f, &base) {
        return Err(Witness::Detail(format!("{} divides the leading coefficient", pre.p)));
    }
    if pre.lifted_factors.is_empty() {
        return Err(Witness::Detail("no lifted factors".into()));
    }
    let mut degrees = Vec::with_capacity(pre.lifted_factors.len());
    for (j, g) in pre.lifted_factors.iter().enumerate() {
        let ok = matches!(g.degree(), Some(d) if d > 0)
            && g.leading().is_some_and(One::is_one)
            && g.coeffs().iter().all(|c| in_symmetric_range(c, modulus.q()));
        if !ok {
            return Err(Witness::Index(j));
        }
        degrees.push(g.degree().unwrap_or(0));
    }
    let lc = f.leading().expect("positive degree").clone();
    let product = pre
        .lifted_factors
        .iter()
        .fold(ModPoly::constant(&modulus, lc), |acc, g| {
            &acc * &ModPoly::from_int(g, &modulus)
        });
    if product != ModPoly::from_int(f, &modulus) {
        return Err(Witness::Detail("lc(f) * ∏ f_j differs from f modulo p^n".into()));
    }
    Ok(Lifted {
        modulus,
        base,
        factors: &pre.lifted_factors,
        degrees,
    })
}

fn check_p2(f: &IntPoly, lifted: &Lifted<'_>) -> Result<(), Witness> {
    for (j, g) in lifted.factors.iter().enumerate() {
        match irreducible_mod_p(&ModPoly::from_int(g, &lifted.base)) {
            Ok(true) => {}
            _ => return Err(Witness::Index(j)),
        }
    }
    let fp = ModPoly::from_int(f, &lifted.base);
    let coprime = fp.gcd(&fp.derivative()).map(|g| g.is_one()).unwrap_or(false);
    if !coprime {
        return Err(Witness::Detail("f is not square-free modulo p".into()));
    }
    Ok(())
}

fn check_p3(f: &IntPoly, pre: &PreMusser) -> (Check, Check) {
    let bound = match bound_for_formula(&pre.formula_id, f) {
        None => {
            let msg = format!("unknown formula_id {:?}", pre.formula_id);
            return (
                Check::detail(AssertionId::P3, msg.clone()),
                Check::detail(AssertionId::BoundRecompute, msg),
            );
        }
        Some(Err(e)) => {
            return (
                Check::detail(AssertionId::P3, e.to_string()),
                Check::detail(AssertionId::BoundRecompute, e.to_string()),
            )
        }
        Some(Ok(b)) => b.bound,
    };
    let recomputed = Check {
        witness: Some(Witness::Detail(format!("B = {bound}"))),
        ..Check::pass(AssertionId::BoundRecompute)
    };
    let large_enough = pre.n > 0
        && u64::from(pre.n) * pre.p.bits() <= MAX_MODULUS_BITS
        && pre.p >= BigInt::from(2)
        && num_traits::pow(pre.p.clone(), pre.n as usize) >= &bound << 1usize;
    let p3 = if large_enough {
        Check::pass(AssertionId::P3)
    } else {
        Check::detail(AssertionId::P3, format!("p^n < 2B with B = {bound}"))
    };
    (p3, recomputed)
}

/// No subset with degree sum in `allowed` recombines into a factor of `f`.
fn check_no_subset_divides(
    f: &IntPoly,
    lifted: &Lifted<'_>,
    allowed: &BTreeSet<usize>,
    opts: &VerifyOptions,
) -> Result<(), Witness> {
    let total = count_with_degree_sums(&lifted.degrees, allowed);
    if total > u128::from(opts.max_subsets) {
        return Err(Witness::Detail(format!(
            "{total} subsets exceed the limit of {}",
            opts.max_subsets
        )));
    }
    let subsets = subsets_with_degree_sums(&lifted.degrees, allowed);
    let lc = f.leading().expect("positive degree");
    let m = &lifted.modulus;
    let hits: Vec<Option<IntPoly>> = subsets
        .par_iter()
        .map(|s| {
            let prod = s.iter().fold(ModPoly::constant(m, lc.clone()), |acc, &j| {
                &acc * &ModPoly::from_int(&lifted.factors[j], m)
            });
            let cand = prod.symmetric_lift().primitive_part();
            let proper = cand.degree().is_some_and(|d| d > 0 && Some(d) < f.degree());
            (proper && f.exact_div(&cand).is_some()).then_some(cand)
        })
        .collect();
    match subsets.into_iter().zip(hits).find_map(|(s, h)| h.map(|c| (s, c))) {
        Some((indices, factor)) => Err(Witness::Subset { indices, factor }),
        None => Ok(()),
    }
}

fn skipped(id: AssertionId) -> Check {
    Check::detail(id, "not evaluated: lifted factorization is malformed")
}

/// P.1 to P.4 (or C.1 in place of P.4 when `residual` is given).
fn pre_checks(f: &IntPoly, pre: &PreMusser, residual: Option<&BTreeSet<usize>>, opts: &VerifyOptions) -> Vec<Check> {
    let subset_id = if residual.is_some() {
        AssertionId::C1
    } else {
        AssertionId::P4
    };
    let (p3, recomputed) = check_p3(f, pre);
    match check_p1(f, pre) {
        Err(w) => vec![
            Check::fail(AssertionId::P1, w),
            skipped(AssertionId::P2),
            p3,
            recomputed,
            skipped(subset_id),
        ],
        Ok(lifted) => {
            let n = f.degree().unwrap_or(0);
            let all: BTreeSet<usize> = (1..n).collect();
            let allowed = residual.unwrap_or(&all);
            vec![
                Check::pass(AssertionId::P1),
                Check::from_result(AssertionId::P2, check_p2(f, &lifted)),
                p3,
                recomputed,
                Check::from_result(subset_id, check_no_subset_divides(f, &lifted, allowed, opts)),
            ]
        }
    }
}

pub fn verify_pre_musser(f: &IntPoly, pre: &PreMusser, opts: &VerifyOptions) -> Vec<Check> {
    pre_checks(f, pre, None, opts)
}

fn check_trial_product(f: &IntPoly, t: &Trial) -> Result<(), Witness> {
    let m = prime_modulus(&t.p)?;
    if !lc_is_unit(f, &m) {
        return Err(Witness::Detail(format!("{} divides the leading coefficient", t.p)));
    }
    if t.factors.is_empty() {
        return Err(Witness::Detail("empty factor list".into()));
    }
    let mut product = ModPoly::one(&m);
    for g in &t.factors {
        let gp = ModPoly::from_int(g, &m);
        if gp.degree().unwrap_or(0) == 0 {
            return Err(Witness::Detail("factor of degree < 1 modulo p".into()));
        }
        product = &product * &gp;
    }
    let fp = ModPoly::from_int(f, &m);
    match (fp.monic(), product.monic()) {
        (Ok(a), Ok(b)) if a == b => Ok(()),
        _ => Err(Witness::Detail("∏ f_ij differs from f modulo p up to a unit".into())),
    }
}

fn check_trial_irreducible(t: &Trial) -> Result<(), Witness> {
    let m = prime_modulus(&t.p)?;
    for (j, g) in t.factors.iter().enumerate() {
        match irreducible_mod_p(&ModPoly::from_int(g, &m)) {
            Ok(true) => {}
            _ => return Err(Witness::Detail(format!("factor {j} is reducible modulo {}", t.p))),
        }
    }
    Ok(())
}

/// Degrees in `1..deg f` that survive every trial.
fn surviving_degrees(f: &IntPoly, trials: &[Trial]) -> BTreeSet<usize> {
    let n = f.degree().unwrap_or(0);
    trials
        .iter()
        .fold(DegreeSet::from_factor_degrees(&vec![1; n]), |acc, t| {
            let degrees: Vec<usize> = t.factors.iter().filter_map(IntPoly::degree).collect();
            acc.intersect(&DegreeSet::from_factor_degrees(&degrees))
        })
        .residual()
}

/// S.1 and S.2, one pair per trial, with the trial index as witness.
fn trial_checks(f: &IntPoly, post: &PostMusser) -> Vec<Check> {
    if let Err(w) = degree_of(f) {
        return vec![Check::fail(AssertionId::S1, w)];
    }
    if post.trials.is_empty() {
        return vec![Check::detail(AssertionId::S1, "no trials")];
    }
    let mut out = Vec::new();
    for (i, t) in post.trials.iter().enumerate() {
        for (id, r) in [
            (AssertionId::S1, check_trial_product(f, t)),
            (AssertionId::S2, check_trial_irreducible(t)),
        ] {
            out.push(match r {
                Ok(()) => Check::pass(id),
                Err(Witness::Detail(d)) => Check::detail(id, format!("trial {i}: {d}")),
                Err(w) => Check::fail(id, w),
            });
        }
    }
    out
}

pub fn verify_post_musser(f: &IntPoly, post: &PostMusser) -> Vec<Check> {
    let mut out = trial_checks(f, post);
    if degree_of(f).is_ok() {
        let surviving = surviving_degrees(f, &post.trials);
        out.push(match surviving.first() {
            None => Check::pass(AssertionId::S3),
            Some(&k) => Check::fail(AssertionId::S3, Witness::Degree(k)),
        });
    }
    out
}

pub fn verify_complex(f: &IntPoly, cx: &ComplexPostMusser, opts: &VerifyOptions) -> Vec<Check> {
    let mut out = trial_checks(f, &cx.post);
    let Ok(n) = degree_of(f) else {
        return out;
    };
    let claimed = &cx.residual_degrees;
    let surviving = surviving_degrees(f, &cx.post.trials);
    let residual_ok = if let Some(&k) = claimed.iter().find(|&&k| k == 0 || k >= n) {
        Err(Witness::Detail(format!("residual degree {k} outside 1..{}", n - 1)))
    } else if let Some(&k) = surviving.difference(claimed).next() {
        Err(Witness::Degree(k))
    } else {
        Ok(())
    };
    match residual_ok {
        Ok(()) => out.extend(pre_checks(f, &cx.pre, Some(claimed), opts)),
        Err(w) => {
            let mut pre = pre_checks(f, &cx.pre, Some(&BTreeSet::new()), opts);
            for c in pre.iter_mut().filter(|c| c.assertion == AssertionId::C1) {
                *c = Check::fail(AssertionId::C1, w.clone());
            }
            out.extend(pre);
        }
    }
    out
}

pub fn verify_certificate_with(f: &IntPoly, cert: &Certificate, opts: &VerifyOptions) -> VerificationReport {
    VerificationReport::from_checks(certificate_checks(f, cert, opts))
}

pub fn verify_certificate(f: &IntPoly, cert: &Certificate) -> VerificationReport {
    verify_certificate_with(f, cert, &VerifyOptions::default())
}

fn certificate_checks(f: &IntPoly, cert: &Certificate, opts: &VerifyOptions) -> Vec<Check> {
    match cert {
        Certificate::Simple { p } => vec![verify_simple(f, p)],
        Certificate::PreMusser(pre) => verify_pre_musser(f, pre, opts),
        Certificate::PostMusser(post) => verify_post_musser(f, post),
        Certificate::Complex(cx) => verify_complex(f, cx, opts),
    }
}

fn check_product(result: &FactorisationResult) -> Result<(), Witness> {
    if result.content.is_zero() {
        return Err(Witness::Detail("content is zero".into()));
    }
    if result.f.is_zero() {
        return Err(Witness::Detail("f is zero".into()));
    }
    let mut rebuilt = IntPoly::constant(result.content.clone());
    for (i, cf) in result.factors.iter().enumerate() {
        let g = &cf.poly;
        let primitive = g.content().is_one() && g.leading().is_some_and(Signed::is_positive);
        if cf.multiplicity == 0 || degree_of(g).is_err() || !primitive {
            return Err(Witness::Index(i));
        }
        let total_degree = g.degree().unwrap_or(0).saturating_mul(cf.multiplicity);
        if total_degree > result.f.degree().unwrap_or(0) {
            return Err(Witness::Index(i));
        }
        rebuilt = &rebuilt * &g.pow(cf.multiplicity as u32);
    }
    if rebuilt != result.f {
        return Err(Witness::Detail("content * ∏ g^e differs from f".into()));
    }
    Ok(())
}

/// Checks the product identity, every factor certificate and the optional
/// Bézout witness.
pub fn verify_factorisation(result: &FactorisationResult, opts: &VerifyOptions) -> VerificationReport {
    let mut checks = vec![Check::from_result(AssertionId::Product, check_product(result))];
    for (i, cf) in result.factors.iter().enumerate() {
        checks.extend(
            certificate_checks(&cf.poly, &cf.certificate, opts)
                .into_iter()
                .map(|c| Check { factor: Some(i), ..c }),
        );
    }
    if let Some(w) = &result.squarefree_witness {
        checks.push(if bezout_check(&result.f, &w.lambda, &w.mu) {
            Check::pass(AssertionId::Bezout)
        } else {
            Check::detail(AssertionId::Bezout, "λ f + μ f' ≠ 1")
        });
    }
    VerificationReport::from_checks(checks)
}

/// Verifies a parsed document; a bare certificate needs the polynomial it
/// speaks about.
pub fn verify_document(doc: &Document, f: Option<&IntPoly>, opts: &VerifyOptions) -> VerificationReport {
    match (doc, f) {
        (Document::Factorisation(r), None) => verify_factorisation(r, opts),
        (Document::Factorisation(r), Some(g)) => {
            let mut report = verify_factorisation(r, opts);
            if g != &r.f {
                report.checks.insert(
                    0,
                    Check::detail(AssertionId::Product, "document is about a different polynomial"),
                );
                report.verdict = Verdict::Rejected;
            }
            report
        }
        (Document::Certificate(c), Some(g)) => verify_certificate_with(g, c, opts),
        (Document::Certificate(_), None) => VerificationReport::from_checks(vec![Check::detail(
            AssertionId::Malformed,
            "a bare certificate needs the polynomial it certifies",
        )]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn simple_examples() {
        let f = ip(&[1, 0, 1]);
        assert!(verify_simple(&f, &3.into()).passed);
        assert!(!verify_simple(&f, &5.into()).passed);
        assert!(!verify_simple(&f, &4.into()).passed);
        assert!(!verify_simple(&ip(&[1, 0, 3]), &3.into()).passed);
    }

    #[test]
    fn post_musser_rejects_single_prime_for_x4_plus_1() {
        let f = ip(&[1, 0, 0, 0, 1]);
        let post = PostMusser {
            trials: vec![Trial {
                p: 3.into(),
                factors: vec![ip(&[2, 1, 1]), ip(&[2, 2, 1])],
            }],
        };
        let checks = verify_post_musser(&f, &post);
        let s3 = checks.iter().find(|c| c.assertion == AssertionId::S3).unwrap();
        assert_eq!(s3.witness, Some(Witness::Degree(2)));
        assert!(checks
            .iter()
            .filter(|c| c.assertion != AssertionId::S3)
            .all(|c| c.passed));
    }

    #[test]
    fn pre_musser_lift_of_x4_plus_1_mod_3() {
        // f = (x^2 + x + 2)(x^2 - x + 2) mod 3, lifted to 3^3 = 27 >= 2 * 12
        let f = ip(&[1, 0, 0, 0, 1]);
        let pre = PreMusser {
            p: 3.into(),
            n: 3,
            lifted_factors: vec![ip(&[-1, 5, 1]), ip(&[-1, -5, 1])],
            formula_id: crate::bounds::FORMULA_ID.into(),
        };
        let checks = verify_pre_musser(&f, &pre, &VerifyOptions::default());
        assert!(checks.iter().all(|c| c.passed), "{checks:?}");

        let short = PreMusser {
            n: 2,
            lifted_factors: vec![ip(&[-1, -4, 1]), ip(&[-1, 4, 1])],
            ..pre.clone()
        };
        let checks = verify_pre_musser(&f, &short, &VerifyOptions::default());
        let failed: Vec<_> = checks.iter().filter(|c| !c.passed).map(|c| c.assertion).collect();
        assert_eq!(failed, vec![AssertionId::P3]);
    }

    #[test]
    fn factorisation_product_mismatch() {
        let r = FactorisationResult {
            f: ip(&[2, 0, 2]),
            content: 1.into(),
            factors: vec![crate::certificate::CertifiedFactor {
                poly: ip(&[1, 0, 1]),
                multiplicity: 1,
                certificate: Certificate::Simple { p: 3.into() },
            }],
            squarefree_witness: None,
        };
        let report = verify_factorisation(&r, &VerifyOptions::default());
        assert!(!report.accepted());
        assert!(report.failed(AssertionId::Product));
        assert!(!report.failed(AssertionId::Simple));
    }
}
