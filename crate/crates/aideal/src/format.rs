//! Plain-text structured file formats (JSON): ideal files holding lists of
//! plane polynomials, knot files holding peripheral-generator expressions,
//! and kappa files holding colored bracket sequences.
//!
//! Coefficients are exact: a Laurent polynomial is a list of
//! `[exponent, numerator, denominator]` integer triples, and a rational
//! function is `{"num": [...], "den": [...]}`. Plain triple lists are
//! accepted (and written) wherever the denominator is trivial. Integers are
//! arbitrary precision.

use crate::action::{ZSeq, ZSource};
use crate::coeff::{Rat, TPoly, TRat};
use crate::pipeline::{KappaHandle, KnotData};
use crate::plane::PlanePoly;
use crate::skein::CurveIndex;
use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

fn ferr<T>(path: &str, msg: impl Into<String>) -> crate::Result<T> {
    Err(crate::Error::Format(format!("{path}: {}", msg.into())))
}

/// Pretty printing with primitive-only arrays kept on one line, so
/// coefficient triples stay compact and diffs stay term-sized.
fn to_pretty(v: &Value) -> String {
    let mut out = String::new();
    write_pretty(&mut out, v, 0);
    out.push('\n');
    out
}

fn write_pretty(out: &mut String, v: &Value, indent: usize) {
    const STEP: usize = 2;
    let pad = |out: &mut String, n: usize| out.push_str(&" ".repeat(n));
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items)
            if items
                .iter()
                .all(|x| !matches!(x, Value::Array(_) | Value::Object(_))) =>
        {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(&item.to_string());
            }
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                pad(out, indent + STEP);
                write_pretty(out, item, indent + STEP);
                if i + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            pad(out, indent);
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, val)) in map.iter().enumerate() {
                pad(out, indent + STEP);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_pretty(out, val, indent + STEP);
                if i + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            pad(out, indent);
            out.push('}');
        }
        other => out.push_str(&other.to_string()),
    }
}

fn bigint_to_number(n: &BigInt) -> Number {
    serde_json::from_str(&n.to_string()).expect("integer is a valid JSON number")
}

fn value_to_bigint(v: &Value, path: &str) -> crate::Result<BigInt> {
    match v {
        Value::Number(n) => n
            .to_string()
            .parse::<BigInt>()
            .map_err(|_| crate::Error::Format(format!("{path}: expected an integer, got {n}"))),
        other => ferr(path, format!("expected an integer, got {other}")),
    }
}

fn value_to_i64(v: &Value, path: &str) -> crate::Result<i64> {
    let big = value_to_bigint(v, path)?;
    big.try_into()
        .map_err(|_| crate::Error::Format(format!("{path}: integer out of range")))
}

// ---- coefficient encoding ----

fn tpoly_to_value(p: &TPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(k, c)| {
                Value::Array(vec![
                    Value::Number(bigint_to_number(&BigInt::from(k))),
                    Value::Number(bigint_to_number(c.numer())),
                    Value::Number(bigint_to_number(c.denom())),
                ])
            })
            .collect(),
    )
}

fn tpoly_from_value(v: &Value, path: &str) -> crate::Result<TPoly> {
    let Value::Array(items) = v else {
        return ferr(
            path,
            "expected a list of [exponent, numerator, denominator] triples",
        );
    };
    let mut terms = Vec::with_capacity(items.len());
    for (i, item) in items.iter().enumerate() {
        let tpath = format!("{path}[{i}]");
        let Value::Array(triple) = item else {
            return ferr(
                &tpath,
                "expected an [exponent, numerator, denominator] triple",
            );
        };
        if triple.len() != 3 {
            return ferr(&tpath, format!("expected 3 entries, got {}", triple.len()));
        }
        let k = value_to_i64(&triple[0], &format!("{tpath}[0]"))?;
        let num = value_to_bigint(&triple[1], &format!("{tpath}[1]"))?;
        let den = value_to_bigint(&triple[2], &format!("{tpath}[2]"))?;
        if den == BigInt::from(0) {
            return ferr(&format!("{tpath}[2]"), "zero denominator");
        }
        terms.push((k, Rat::new(num, den)));
    }
    Ok(TPoly::from_terms(terms))
}

fn trat_to_value(x: &TRat) -> Value {
    match x.as_poly() {
        Some(p) => tpoly_to_value(p),
        None => json!({ "num": tpoly_to_value(x.num()), "den": tpoly_to_value(x.den()) }),
    }
}

fn trat_from_value(v: &Value, path: &str) -> crate::Result<TRat> {
    match v {
        Value::Array(_) => Ok(TRat::from_poly(tpoly_from_value(v, path)?)),
        Value::Object(map) => {
            let num = map
                .get("num")
                .ok_or_else(|| crate::Error::Format(format!("{path}: missing \"num\"")))?;
            let den = map
                .get("den")
                .ok_or_else(|| crate::Error::Format(format!("{path}: missing \"den\"")))?;
            let num = tpoly_from_value(num, &format!("{path}.num"))?;
            let den = tpoly_from_value(den, &format!("{path}.den"))?;
            if den.is_zero() {
                return ferr(&format!("{path}.den"), "zero denominator");
            }
            TRat::new(num, den)
        }
        other => ferr(path, format!("expected a coefficient, got {other}")),
    }
}

// ---- ideal files ----

/// Serializes a list of plane polynomials, each as its term records
/// `{p, q, coeff}` sorted by power product.
pub fn write_ideal(polys: &[PlanePoly<TRat>]) -> String {
    let polys: Vec<Value> = polys
        .iter()
        .map(|f| {
            let terms: Vec<Value> = f
                .terms()
                .map(|((p, q), c)| {
                    let mut rec = Map::new();
                    rec.insert("p".into(), json!(p));
                    rec.insert("q".into(), json!(q));
                    rec.insert("coeff".into(), trat_to_value(c));
                    Value::Object(rec)
                })
                .collect();
            json!({ "terms": terms })
        })
        .collect();
    let doc = json!({ "polys": polys });
    to_pretty(&doc)
}

fn parse_root(src: &str) -> crate::Result<Value> {
    serde_json::from_str(src).map_err(|e| crate::Error::Format(e.to_string()))
}

pub fn parse_ideal(src: &str) -> crate::Result<Vec<PlanePoly<TRat>>> {
    let root = parse_root(src)?;
    let Some(polys) = root.get("polys").and_then(Value::as_array) else {
        return ferr("polys", "expected a list");
    };
    let mut out = Vec::with_capacity(polys.len());
    for (i, poly) in polys.iter().enumerate() {
        let ppath = format!("polys[{i}]");
        let Some(terms) = poly.get("terms").and_then(Value::as_array) else {
            return ferr(&format!("{ppath}.terms"), "expected a list");
        };
        let mut raw = Vec::with_capacity(terms.len());
        for (j, term) in terms.iter().enumerate() {
            let tpath = format!("{ppath}.terms[{j}]");
            let p = value_to_i64(
                term.get("p")
                    .ok_or_else(|| crate::Error::Format(format!("{tpath}: missing \"p\"")))?,
                &format!("{tpath}.p"),
            )?;
            let q = value_to_i64(
                term.get("q")
                    .ok_or_else(|| crate::Error::Format(format!("{tpath}: missing \"q\"")))?,
                &format!("{tpath}.q"),
            )?;
            let coeff = trat_from_value(
                term.get("coeff")
                    .ok_or_else(|| crate::Error::Format(format!("{tpath}: missing \"coeff\"")))?,
                &format!("{tpath}.coeff"),
            )?;
            if p < 0 || q < 0 {
                return ferr(
                    &tpath,
                    format!("plane exponents must be nonnegative, got ({p},{q})"),
                );
            }
            raw.push((p, q, coeff));
        }
        out.push(PlanePoly::try_from_terms(raw)?);
    }
    Ok(out)
}

// ---- knot files ----

/// A knot record as stored on disk; the kappa field is an unresolved
/// reference (`"builtin:NAME"` or a file path, resolved by the caller).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotFile {
    pub name: String,
    pub bounding_curve: (i64, i64),
    pub generators: Vec<String>,
    pub kappa: Option<String>,
}

impl KnotFile {
    /// Builds the knot data, attaching the given resolved sequence (if the
    /// record references one by path) or the named builtin.
    pub fn into_knot_data(self, file_kappa: Option<ZSeq>) -> crate::Result<KnotData> {
        let handle = match (&self.kappa, file_kappa) {
            (None, _) => None,
            (Some(spec), _) if spec.starts_with("builtin:") => {
                Some(KappaHandle::Builtin(spec["builtin:".len()..].to_string()))
            }
            (Some(_), Some(z)) => Some(KappaHandle::Data(z)),
            (Some(path), None) => {
                return ferr("kappa", format!("sequence file '{path}' was not loaded"));
            }
        };
        let bc = CurveIndex::new(self.bounding_curve.0, self.bounding_curve.1)
            .map_err(|_| crate::Error::Format("bounding_curve: (0,0) is not a curve".into()))?;
        KnotData::new(self.name, self.generators, bc, handle)
    }
}

pub fn write_knot(k: &KnotFile) -> String {
    let mut doc = Map::new();
    doc.insert("name".into(), json!(k.name));
    doc.insert(
        "bounding_curve".into(),
        json!([k.bounding_curve.0, k.bounding_curve.1]),
    );
    doc.insert("generators".into(), json!(k.generators));
    if let Some(kappa) = &k.kappa {
        doc.insert("kappa".into(), json!(kappa));
    }
    to_pretty(&Value::Object(doc))
}

pub fn parse_knot(src: &str) -> crate::Result<KnotFile> {
    let root = parse_root(src)?;
    let name = root
        .get("name")
        .and_then(Value::as_str)
        .ok_or_else(|| crate::Error::Format("name: expected a string".into()))?
        .to_string();
    let bc = root
        .get("bounding_curve")
        .and_then(Value::as_array)
        .ok_or_else(|| crate::Error::Format("bounding_curve: expected [p, q]".into()))?;
    if bc.len() != 2 {
        return ferr("bounding_curve", "expected exactly two entries");
    }
    let bounding_curve = (
        value_to_i64(&bc[0], "bounding_curve[0]")?,
        value_to_i64(&bc[1], "bounding_curve[1]")?,
    );
    let gens = root
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| crate::Error::Format("generators: expected a list of expressions".into()))?;
    let mut generators = Vec::with_capacity(gens.len());
    for (i, g) in gens.iter().enumerate() {
        let Some(s) = g.as_str() else {
            return ferr(&format!("generators[{i}]"), "expected an expression string");
        };
        generators.push(s.to_string());
    }
    let kappa = match root.get("kappa") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(other) => return ferr("kappa", format!("expected a string, got {other}")),
    };
    Ok(KnotFile {
        name,
        bounding_curve,
        generators,
        kappa,
    })
}

// ---- kappa files ----

/// A colored bracket sequence record: which knot, at which framing, and the
/// values `κ(0), κ(1), ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KappaFile {
    pub knot: String,
    pub framing: i64,
    pub kappa: Vec<TRat>,
}

impl KappaFile {
    pub fn into_zseq(self, origin: &str) -> crate::Result<ZSeq> {
        ZSeq::from_values(self.kappa, ZSource::File(origin.to_string()))
    }
}

pub fn write_kappa(k: &KappaFile) -> String {
    let doc = json!({
        "knot": k.knot,
        "framing": k.framing,
        "kappa": k.kappa.iter().map(trat_to_value).collect::<Vec<_>>(),
    });
    to_pretty(&doc)
}

pub fn parse_kappa(src: &str) -> crate::Result<KappaFile> {
    let root = parse_root(src)?;
    let knot = root
        .get("knot")
        .and_then(Value::as_str)
        .ok_or_else(|| crate::Error::Format("knot: expected a string".into()))?
        .to_string();
    let framing = value_to_i64(root.get("framing").unwrap_or(&json!(0)), "framing")?;
    let vals = root
        .get("kappa")
        .and_then(Value::as_array)
        .ok_or_else(|| crate::Error::Format("kappa: expected a list of coefficients".into()))?;
    let mut kappa = Vec::with_capacity(vals.len());
    for (i, v) in vals.iter().enumerate() {
        kappa.push(trat_from_value(v, &format!("kappa[{i}]"))?);
    }
    Ok(KappaFile {
        knot,
        framing,
        kappa,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat, rat_int};
    use proptest::prelude::*;

    fn tr(terms: &[(i64, i64)]) -> TRat {
        TRat::from_poly(TPoly::from_terms(
            terms.iter().map(|&(k, c)| (k, rat_int(c))),
        ))
    }

    #[test]
    fn ideal_round_trip_on_unknot_input() {
        let polys = vec![
            PlanePoly::from_terms([
                (0, 2, tr(&[(0, 1)])),
                (0, 1, tr(&[(2, 1), (-2, 1)])),
                (0, 0, tr(&[(0, 1)])),
            ]),
            PlanePoly::from_terms([
                (2, 2, tr(&[(-3, 1)])),
                (2, 1, tr(&[(-5, 1)])),
                (0, 1, tr(&[(-1, 1)])),
                (0, 0, tr(&[(1, 1)])),
            ]),
        ];
        let text = write_ideal(&polys);
        assert_eq!(parse_ideal(&text).unwrap(), polys);
    }

    #[test]
    fn ideal_accepts_rational_function_coefficients() {
        let c = TRat::new(
            TPoly::from_terms([(1, rat_int(1))]),
            TPoly::from_terms([(2, rat_int(1)), (0, rat_int(1))]),
        )
        .unwrap();
        let polys = vec![PlanePoly::from_terms([
            (1, 0, c),
            (0, 0, TRat::from_rat(rat(7, 3))),
        ])];
        let text = write_ideal(&polys);
        assert_eq!(parse_ideal(&text).unwrap(), polys);
    }

    #[test]
    fn ideal_rejects_bad_input() {
        assert!(matches!(parse_ideal("{"), Err(crate::Error::Format(_))));
        let neg = r#"{"polys": [{"terms": [{"p": -1, "q": 0, "coeff": [[0,1,1]]}]}]}"#;
        match parse_ideal(neg) {
            Err(crate::Error::Format(msg)) => assert!(msg.contains("polys[0].terms[0]"), "{msg}"),
            other => panic!("unexpected: {other:?}"),
        }
        let zero_den = r#"{"polys": [{"terms": [{"p": 1, "q": 0, "coeff": [[0,1,0]]}]}]}"#;
        match parse_ideal(zero_den) {
            Err(crate::Error::Format(msg)) => assert!(msg.contains("coeff[0][2]"), "{msg}"),
            other => panic!("unexpected: {other:?}"),
        }
        let float = r#"{"polys": [{"terms": [{"p": 1, "q": 0, "coeff": [[0,1.5,1]]}]}]}"#;
        assert!(matches!(parse_ideal(float), Err(crate::Error::Format(_))));
    }

    #[test]
    fn knot_round_trip() {
        let k = KnotFile {
            name: "unknot".into(),
            bounding_curve: (0, 1),
            generators: vec![
                "L(0,1) + t^2 + t^-2".into(),
                "L(1,1) + t^-3 * L(1,0)".into(),
            ],
            kappa: Some("builtin:unknot".into()),
        };
        let text = write_knot(&k);
        assert_eq!(parse_knot(&text).unwrap(), k);
        let data = parse_knot(&text).unwrap().into_knot_data(None).unwrap();
        assert_eq!(data.kappa, Some(KappaHandle::Builtin("unknot".into())));
        assert_eq!(data.peripheral_gens.len(), 2);
    }

    #[test]
    fn kappa_round_trip_and_validation() {
        let k = KappaFile {
            knot: "unknot".into(),
            framing: 0,
            kappa: crate::action::z_unknot(6).values().to_vec(),
        };
        let text = write_kappa(&k);
        let parsed = parse_kappa(&text).unwrap();
        assert_eq!(parsed, k);
        let z = parsed.into_zseq("test.kappa").unwrap();
        assert_eq!(z.len(), 7);
        // head validation fires
        let bad = KappaFile {
            knot: "x".into(),
            framing: 0,
            kappa: vec![TRat::zero()],
        };
        assert_eq!(
            parse_kappa(&write_kappa(&bad)).unwrap().into_zseq("x"),
            Err(crate::Error::BadKappaHead)
        );
    }

    #[test]
    fn big_integers_survive() {
        let big = BigInt::from(2).pow(200) + BigInt::from(7);
        let c = TRat::from_rat(Rat::new(big.clone(), BigInt::from(3)));
        let polys = vec![PlanePoly::from_terms([(0, 0, c)])];
        let text = write_ideal(&polys);
        let parsed = parse_ideal(&text).unwrap();
        assert_eq!(parsed, polys);
        let ((_, _), coeff) = parsed[0].terms().next().unwrap();
        assert_eq!(coeff.num().coeff(0).numer(), &big);
    }

    fn arb_trat() -> impl Strategy<Value = TRat> {
        (
            proptest::collection::vec((-5i64..=5, -9i64..=9), 0..4),
            proptest::collection::vec((-3i64..=3, -9i64..=9), 1..3),
        )
            .prop_map(|(num, den)| {
                let num = TPoly::from_terms(num.into_iter().map(|(k, c)| (k, rat_int(c))));
                let mut den = TPoly::from_terms(den.into_iter().map(|(k, c)| (k, rat_int(c))));
                if den.is_zero() {
                    den = TPoly::one();
                }
                TRat::new(num, den).unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn ideal_serialization_round_trips(coeffs in proptest::collection::vec(((0i64..4, 0i64..4), arb_trat()), 0..6)) {
            let poly = PlanePoly::from_terms(coeffs.into_iter().map(|((p, q), c)| (p, q, c)));
            let text = write_ideal(std::slice::from_ref(&poly));
            prop_assert_eq!(parse_ideal(&text).unwrap(), vec![poly]);
        }
    }
}
