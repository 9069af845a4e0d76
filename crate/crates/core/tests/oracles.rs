mod common;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;

use common::Poly;
use factcert::certificate::Certificate;
use factcert::certify::{certify_irreducible, factor_z, CertifyOptions};
use factcert::verify::verify_certificate;
use factcert::{Error, IntPoly};

const SMALL_PRIMES: [u64; 10] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29];

fn to_lib(f: &Poly) -> IntPoly {
    IntPoly::new(f.iter().map(|&c| BigInt::from(c)).collect())
}

fn to_oracle(f: &IntPoly) -> Poly {
    f.coeffs().iter().map(|c| c.to_i128().unwrap()).collect()
}

fn positive_lc(f: Poly) -> Poly {
    if f.last().is_some_and(|&c| c < 0) {
        f.into_iter().map(|c| -c).collect()
    } else {
        f
    }
}

/// Every coefficient vector of the given degree with entries in `-b..=b`.
fn all_polys(degree: usize, b: i128) -> Vec<Poly> {
    let mut out = vec![vec![]];
    for i in 0..=degree {
        let range: Vec<i128> = if i == degree {
            (-b..=b).filter(|&c| c != 0).collect()
        } else {
            (-b..=b).collect()
        };
        out = out
            .into_iter()
            .flat_map(|p| range.iter().map(move |&c| [p.clone(), vec![c]].concat()))
            .collect();
    }
    out
}

fn check_factorisation(f: &Poly) -> Result<(), String> {
    let (content, factors) = factor_z(&to_lib(f), &CertifyOptions::default()).map_err(|e| e.to_string())?;
    let mut got: Vec<Poly> = factors
        .iter()
        .flat_map(|(g, e)| std::iter::repeat_n(positive_lc(to_oracle(g)), *e))
        .collect();
    got.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let want: Vec<Poly> = common::irreducible_factors(f).into_iter().map(positive_lc).collect();
    let mut want = want;
    want.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    if got != want {
        return Err(format!("{f:?}: library {got:?}, oracle {want:?}"));
    }
    let rebuilt = factors
        .iter()
        .fold(to_lib(&vec![content.to_i128().unwrap()]), |acc, (g, e)| {
            &acc * &g.pow(*e as u32)
        });
    if rebuilt != to_lib(f) {
        return Err(format!("{f:?}: product does not reconstruct"));
    }
    Ok(())
}

/// An accepted simple certificate means the primitive part of `f` has no
/// proper divisor, so `f` is irreducible over the rationals.
fn check_simple_certificates(f: &Poly) -> Result<(), String> {
    let irreducible = common::is_irreducible(&common::primitive(f));
    for p in SMALL_PRIMES {
        let cert = Certificate::Simple { p: p.into() };
        let accepted = verify_certificate(&to_lib(f), &cert).accepted();
        if accepted && !irreducible {
            return Err(format!(
                "{f:?}: simple certificate at {p} accepted for a reducible input"
            ));
        }
    }
    Ok(())
}

/// Certification succeeds on irreducible inputs and the result verifies; on
/// reducible inputs it reports a factor the oracle agrees with.
fn check_certify(f: &Poly) -> Result<(), String> {
    let g = to_lib(f);
    match certify_irreducible(&g, &CertifyOptions::default()) {
        Ok(cert) => {
            if !common::is_irreducible(f) {
                return Err(format!(
                    "{f:?}: certified but oracle finds {:?}",
                    common::irreducible_factors(f)
                ));
            }
            if !verify_certificate(&g, &cert).accepted() {
                return Err(format!("{f:?}: own {} certificate rejected", cert.kind()));
            }
        }
        Err(Error::FoundFactor(h)) => {
            if common::exact_div(f, &to_oracle(&h)).is_none() || h.degree() >= g.degree() {
                return Err(format!("{f:?}: reported factor {h} is not a proper divisor"));
            }
        }
        Err(Error::NotSquareFree(_)) => {
            if common::is_irreducible(f) {
                return Err(format!("{f:?}: irreducible input refused"));
            }
        }
        Err(e) => return Err(format!("{f:?}: {e}")),
    }
    Ok(())
}

/// Certificates built for one polynomial must not verify for a reducible
/// polynomial of the same degree.
fn check_transplant(f: &Poly, donor: &Poly) -> Result<(), String> {
    let Ok(cert) = certify_irreducible(&to_lib(donor), &CertifyOptions::default()) else {
        return Ok(());
    };
    if !common::is_irreducible(&common::primitive(f)) && verify_certificate(&to_lib(f), &cert).accepted() {
        return Err(format!(
            "{} certificate for {donor:?} accepted for reducible {f:?}",
            cert.kind()
        ));
    }
    Ok(())
}

fn run_all(f: &Poly) -> Result<(), String> {
    check_factorisation(f)?;
    check_simple_certificates(f)?;
    if common::content(f) == 1 {
        check_certify(f)?;
    }
    Ok(())
}

#[test]
fn exhaustive_quadratics() {
    for f in all_polys(2, 4) {
        run_all(&f).unwrap();
    }
}

#[test]
fn exhaustive_cubics() {
    for f in all_polys(3, 2) {
        run_all(&f).unwrap();
    }
}

#[test]
fn transplanted_certificates_are_rejected() {
    let donors: [Poly; 4] = [
        vec![1, 0, 0, 0, 1],
        vec![-2, 0, 0, 0, 1],
        vec![1, 1, 1, 1, 1],
        vec![3, 0, 1, 0, 1],
    ];
    for f in all_polys(4, 1) {
        for d in &donors {
            check_transplant(&f, d).unwrap();
        }
    }
}

fn bounded_poly() -> impl Strategy<Value = Poly> {
    (1usize..=5)
        .prop_flat_map(|d| {
            (
                prop::collection::vec(-5i128..=5, d),
                prop::sample::select(vec![-5i128, -4, -3, -2, -1, 1, 2, 3, 4, 5]),
            )
        })
        .prop_map(|(mut c, lc)| {
            c.push(lc);
            c
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn sampled_against_divisor_search(f in bounded_poly()) {
        run_all(&f).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn sampled_products(a in bounded_poly(), b in bounded_poly()) {
        let f = common::mul(&a, &b);
        prop_assume!(common::degree(&f).unwrap() <= 5);
        run_all(&f).map_err(TestCaseError::fail)?;
    }
}
