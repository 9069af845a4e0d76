//! Malformed and adversarial inputs must be rejected without panicking.

use proptest::prelude::*;
use serde_json::{json, Value};

use factcert::certificate::Document;
use factcert::certify::{factor_and_certify, CertifyOptions};
use factcert::verify::{verify_document, VerifyOptions};
use factcert::IntPoly;

fn ip(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

fn x4_plus_1_doc() -> Value {
    let r = factor_and_certify(&ip(&[1, 0, 0, 0, 1]), &CertifyOptions::default()).unwrap();
    serde_json::from_str(&r.to_json()).unwrap()
}

fn verdict(text: &str, f: Option<&IntPoly>) -> Option<bool> {
    let doc = Document::from_json(text).ok()?;
    Some(verify_document(&doc, f, &VerifyOptions::default()).accepted())
}

fn bare(cert: Value, f: &IntPoly) -> bool {
    verdict(&cert.to_string(), Some(f)).unwrap_or(false)
}

fn pre(p: &str, n: u64, lifted: Value) -> Value {
    json!({"p": p, "n": n, "lifted_factors": lifted, "formula_id": "mignotte-2^m-l2-v1"})
}

#[test]
fn bad_primes_in_simple_certificates() {
    let f = ip(&[1, 0, 1]);
    for p in ["9", "1", "0", "-3", "4", "+3", "3.0", "", "0x3", "1e3"] {
        assert!(!bare(json!({"kind": "simple", "p": p}), &f), "p = {p:?}");
    }
    assert!(!bare(json!({"kind": "simple", "p": 3}), &f));
    assert!(bare(json!({"kind": "simple", "p": "3"}), &f));
}

#[test]
fn huge_lifting_exponent_is_refused_quickly() {
    let f = ip(&[1, 0, 0, 0, 1]);
    let lifted = json!([{"coeffs": ["-1", "-5", "1"]}, {"coeffs": ["-1", "5", "1"]}]);
    for n in [u64::from(u32::MAX), 1 << 20, 0] {
        let start = std::time::Instant::now();
        assert!(!bare(with_kind("pre_musser", pre("3", n, lifted.clone())), &f));
        assert!(start.elapsed().as_secs() < 5, "n = {n}");
    }
    assert!(!bare(with_kind("pre_musser", pre("3", 1u64 << 40, lifted)), &f));
}

fn with_kind(kind: &str, body: Value) -> Value {
    let mut m = body.as_object().unwrap().clone();
    m.insert("kind".into(), kind.into());
    m.into()
}

#[test]
fn composite_modulus_in_pre_musser() {
    let f = ip(&[1, 0, 0, 0, 1]);
    let lifted = json!([{"coeffs": ["1", "0", "0", "0", "1"]}]);
    assert!(!bare(with_kind("pre_musser", pre("4", 3, lifted.clone())), &f));
    assert!(!bare(with_kind("pre_musser", pre("1", 30, lifted)), &f));
}

#[test]
fn empty_lists() {
    let f = ip(&[1, 0, 0, 0, 1]);
    assert!(!bare(json!({"kind": "post_musser", "trials": []}), &f));
    assert!(!bare(with_kind("pre_musser", pre("3", 3, json!([]))), &f));
    let empty_trial = json!({"kind": "post_musser", "trials": [{"p": "3", "factors": []}]});
    assert!(!bare(empty_trial, &f));
    let complex = json!({
        "kind": "complex",
        "post": {"trials": []},
        "pre": pre("3", 3, json!([])),
        "residual_degrees": []
    });
    assert!(!bare(complex, &f));

    let mut doc = x4_plus_1_doc();
    doc["factors"] = json!([]);
    assert_eq!(verdict(&doc.to_string(), None), Some(false));
}

#[test]
fn zero_and_constant_polynomials() {
    let cert = json!({"kind": "simple", "p": "3"});
    for f in [ip(&[]), ip(&[5]), ip(&[0, 0, 0])] {
        assert!(!bare(cert.clone(), &f), "{f}");
    }
    let doc = json!({"schema": "factcert-v1", "f": {"coeffs": []}, "content": "0", "factors": []});
    assert!(!verdict(&doc.to_string(), None).unwrap_or(false));
}

#[test]
fn structural_garbage_is_a_parse_error() {
    let deep = "[".repeat(100_000);
    for text in [
        "",
        "null",
        "[]",
        "{}",
        "\"simple\"",
        &deep,
        "{\"kind\": \"unknown\"}",
        "{\"schema\": \"factcert-v0\"}",
    ] {
        assert!(Document::from_json(text).is_err(), "{:.40}", text);
    }
    assert!(Document::from_json(&json!({"kind": "simple", "p": "3"}).to_string()).is_ok());
}

fn hostile_value() -> impl Strategy<Value = Value> {
    prop_oneof![
        Just(Value::Null),
        Just(json!("")),
        Just(json!("-0")),
        Just(json!("1/0")),
        Just(json!("99999999999999999999999999999999999999")),
        Just(json!(-1)),
        Just(json!(u64::MAX)),
        Just(json!([])),
        Just(json!({})),
        Just(json!({"coeffs": []})),
        Just(json!({"coeffs": ["0"]})),
        any::<i64>().prop_map(|n| json!(n.to_string())),
        "[ -~]{0,8}".prop_map(Value::String),
    ]
}

/// Replace the `k`-th node (pre-order) of `v` with `new`.
fn replace_nth(v: &mut Value, k: &mut usize, new: &Value) -> bool {
    if *k == 0 {
        *v = new.clone();
        return true;
    }
    *k -= 1;
    match v {
        Value::Array(items) => items.iter_mut().any(|x| replace_nth(x, k, new)),
        Value::Object(map) => map.values_mut().any(|x| replace_nth(x, k, new)),
        _ => false,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn arbitrary_bytes_never_panic(bytes in prop::collection::vec(any::<u8>(), 0..200)) {
        let text = String::from_utf8_lossy(&bytes);
        let _ = verdict(&text, Some(&ip(&[1, 0, 1])));
    }

    #[test]
    fn mutated_documents_never_panic(k in 0usize..400, new in hostile_value()) {
        let mut doc = x4_plus_1_doc();
        let mut k = k;
        prop_assume!(replace_nth(&mut doc, &mut k, &new));
        let _ = verdict(&doc.to_string(), None);
    }

    #[test]
    fn mutated_lifted_factors_are_rejected(i in 0usize..2, j in 0usize..3, delta in 1i64..1000) {
        let mut doc = x4_plus_1_doc();
        let slot = &mut doc["factors"][0]["certificate"]["pre"]["lifted_factors"][i]["coeffs"][j];
        let c: i64 = slot.as_str().unwrap().parse().unwrap();
        *slot = json!((c + delta).to_string());
        prop_assert_eq!(verdict(&doc.to_string(), None), Some(false));
    }
}
