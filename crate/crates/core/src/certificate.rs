//! Certificate data model and the `factcert-v1` JSON encoding.
//!
//! Big integers are written as decimal strings and polynomials as
//! `{"coeffs": [...]}` with the constant term first.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::poly::{IntPoly, RatPoly};

pub const SCHEMA: &str = "factcert-v1";

/// Serde adapter writing a `BigInt` as a decimal string.
pub mod decimal {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        parse_decimal(&s).map_err(D::Error::custom)
    }
}

fn parse_decimal(s: &str) -> Result<BigInt, String> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("invalid decimal integer {s:?}"));
    }
    s.parse().map_err(|_| format!("invalid decimal integer {s:?}"))
}

#[derive(Serialize, Deserialize)]
struct CoeffsRepr<T> {
    coeffs: Vec<T>,
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CoeffsRepr {
            coeffs: self.coeffs().iter().map(ToString::to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = CoeffsRepr::<String>::deserialize(d)?;
        repr.coeffs
            .iter()
            .map(|c| parse_decimal(c))
            .collect::<Result<Vec<_>, _>>()
            .map(IntPoly::new)
            .map_err(D::Error::custom)
    }
}

impl Serialize for RatPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CoeffsRepr {
            coeffs: self.coeffs().iter().map(ToString::to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = CoeffsRepr::<String>::deserialize(d)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|c| parse_ratio(c))
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Ok(RatPoly::new(coeffs))
    }
}

fn parse_ratio(s: &str) -> Result<BigRational, String> {
    match s.split_once('/') {
        None => parse_decimal(s).map(BigRational::from_integer),
        Some((n, d)) => {
            let (n, d) = (parse_decimal(n)?, parse_decimal(d)?);
            if d == BigInt::from(0) {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Hensel-lifted factorization data: a prime `p`, exponent `n` and factors
/// `f_j` in ℤ[x] with coefficients in `(-p^n/2, p^n/2]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreMusser {
    #[serde(with = "decimal")]
    pub p: BigInt,
    pub n: u32,
    pub lifted_factors: Vec<IntPoly>,
    pub formula_id: String,
}

/// One prime together with the full factorization of `f` modulo it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trial {
    #[serde(with = "decimal")]
    pub p: BigInt,
    /// Factors as residue representatives modulo `p`.
    pub factors: Vec<IntPoly>,
}

impl Trial {
    pub fn degrees(&self) -> Vec<usize> {
        self.factors.iter().filter_map(IntPoly::degree).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PostMusser {
    pub trials: Vec<Trial>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexPostMusser {
    pub post: PostMusser,
    pub pre: PreMusser,
    pub residual_degrees: BTreeSet<usize>,
}

/// Evidence that a polynomial is irreducible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// `f` is irreducible modulo `p`.
    Simple {
        #[serde(with = "decimal")]
        p: BigInt,
    },
    PreMusser(PreMusser),
    /// Degree information from several primes rules out every split.
    PostMusser(PostMusser),
    Complex(ComplexPostMusser),
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Simple { .. } => "simple",
            Certificate::PreMusser(_) => "pre_musser",
            Certificate::PostMusser(_) => "post_musser",
            Certificate::Complex(_) => "complex",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BezoutWitness {
    pub lambda: RatPoly,
    pub mu: RatPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedFactor {
    pub poly: IntPoly,
    pub multiplicity: usize,
    pub certificate: Certificate,
}

/// `f = content * ∏ poly^multiplicity`, one certificate per distinct factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorisationResult {
    pub f: IntPoly,
    #[serde(with = "decimal")]
    pub content: BigInt,
    pub factors: Vec<CertifiedFactor>,
    pub squarefree_witness: Option<BezoutWitness>,
}

/// Achievable degrees of a factor of `f`, given the degrees of its
/// irreducible factors modulo some prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSet {
    degree: usize,
    achievable: BTreeSet<usize>,
}

impl DegreeSet {
    /// All subset sums of `factor_degrees`.
    pub fn from_factor_degrees(factor_degrees: &[usize]) -> Self {
        let degree: usize = factor_degrees.iter().sum();
        let mut reach = vec![false; degree + 1];
        reach[0] = true;
        for &d in factor_degrees {
            for s in (d..=degree).rev() {
                if reach[s - d] {
                    reach[s] = true;
                }
            }
        }
        let achievable = reach.iter().enumerate().filter_map(|(k, &r)| r.then_some(k)).collect();
        Self { degree, achievable }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn achievable(&self) -> &BTreeSet<usize> {
        &self.achievable
    }

    pub fn contains(&self, k: usize) -> bool {
        self.achievable.contains(&k)
    }

    pub fn intersect(&self, other: &DegreeSet) -> DegreeSet {
        DegreeSet {
            degree: self.degree,
            achievable: self.achievable.intersection(&other.achievable).copied().collect(),
        }
    }

    /// Achievable degrees strictly between `0` and `deg f`.
    pub fn residual(&self) -> BTreeSet<usize> {
        self.achievable
            .iter()
            .copied()
            .filter(|&k| k > 0 && k < self.degree)
            .collect()
    }
}

/// Either a full factorization document or a bare certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Factorisation(FactorisationResult),
    Certificate(Certificate),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for ParseError {}

impl From<serde_json::Error> for ParseError {
    fn from(e: serde_json::Error) -> Self {
        ParseError { message: e.to_string() }
    }
}

fn with_schema<T: Serialize>(body: &T) -> Value {
    let mut v = serde_json::to_value(body).expect("certificate data serializes");
    if let Value::Object(map) = &mut v {
        map.insert("schema".into(), Value::String(SCHEMA.into()));
    }
    v
}

fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

impl Document {
    pub fn to_json(&self) -> String {
        match self {
            Document::Factorisation(r) => to_pretty(&with_schema(r)),
            Document::Certificate(c) => to_pretty(&with_schema(c)),
        }
    }

    /// Parses either document shape. A `schema` field, when present, must be
    /// `factcert-v1`; it is required for factorization documents.
    pub fn from_json(text: &str) -> Result<Self, ParseError> {
        let mut v: Value = serde_json::from_str(text)?;
        let Value::Object(map) = &mut v else {
            return Err(ParseError {
                message: "top-level JSON value must be an object".into(),
            });
        };
        let schema = map.remove("schema");
        match &schema {
            Some(Value::String(s)) if s == SCHEMA => {}
            None => {}
            Some(other) => {
                return Err(ParseError {
                    message: format!("unsupported schema {other}"),
                })
            }
        }
        if map.contains_key("kind") {
            Ok(Document::Certificate(serde_json::from_value(v)?))
        } else if schema.is_none() {
            Err(ParseError {
                message: format!("missing \"schema\": \"{SCHEMA}\""),
            })
        } else {
            Ok(Document::Factorisation(serde_json::from_value(v)?))
        }
    }
}

impl FactorisationResult {
    pub fn to_json(&self) -> String {
        to_pretty(&with_schema(self))
    }
}

impl Certificate {
    pub fn to_json(&self) -> String {
        to_pretty(&with_schema(self))
    }
}
