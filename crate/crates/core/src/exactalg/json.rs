//! JSON forms: `{"num":[[qe,te,"c"],...],"den":[...]}` for rational functions.

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::laurent_q::LaurentQ;
use super::laurent_qt::LaurentQT;
use super::ratqt::RatQT;
use crate::error::{Error, Result};

fn terms_json(p: &LaurentQT) -> Value {
    Value::Array(p.terms().iter().map(|((qe, te), c)| json!([qe, te, c.to_string()])).collect())
}

pub fn ratqt_to_json(v: &RatQT) -> Value {
    json!({ "num": terms_json(v.num()), "den": terms_json(v.den()) })
}

fn terms_from_json(v: &Value) -> Result<LaurentQT> {
    let arr = v.as_array().ok_or_else(|| Error::Parse("expected term array".into()))?;
    let mut terms = Vec::with_capacity(arr.len());
    for t in arr {
        let bad = || Error::Parse(format!("bad term {t}"));
        let a = t.as_array().filter(|a| a.len() == 3).ok_or_else(bad)?;
        let qe = a[0].as_i64().ok_or_else(bad)?;
        let te = a[1].as_i64().ok_or_else(bad)?;
        let c: BigInt = a[2].as_str().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        terms.push(((qe, te), c));
    }
    Ok(LaurentQT::from_terms(terms))
}

pub fn ratqt_from_json(v: &Value) -> Result<RatQT> {
    let num = terms_from_json(v.get("num").ok_or_else(|| Error::Parse("missing num".into()))?)?;
    let den = terms_from_json(v.get("den").ok_or_else(|| Error::Parse("missing den".into()))?)?;
    RatQT::new(num, den)
}

/// `[[qe, "c"], ...]` with `c` a decimal integer or `p/r` fraction.
pub fn laurent_q_to_json(v: &LaurentQ) -> Value {
    Value::Array(v.terms().map(|(e, c)| json!([e, c.to_string()])).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::parse_ratqt;

    #[test]
    fn roundtrip() {
        for s in ["0", "q^-3*t + 5", "(1-t^2)*(1+q^4)/(1-t^2*q^4)", "1/6"] {
            let v = parse_ratqt(s);
            let j = ratqt_to_json(&v);
            let text = serde_json::to_string(&j).unwrap();
            let back: Value = serde_json::from_str(&text).unwrap();
            assert_eq!(ratqt_from_json(&back).unwrap(), v);
        }
    }

    #[test]
    fn shape() {
        let j = ratqt_to_json(&parse_ratqt("-3*q^-2*t^4"));
        assert_eq!(j.to_string(), r#"{"den":[[0,0,"1"]],"num":[[-2,4,"-3"]]}"#);
    }
}
