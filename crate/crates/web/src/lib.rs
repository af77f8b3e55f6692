//! wasm-bindgen bindings for the browser demo in `www/`.
//!
//! Each export returns plain text. The `*_text` functions hold the logic so
//! they can be tested natively.

use dahaknot::cli::run_verify;
use dahaknot::invariants::{cherednik_torus, sign_torus};
use dahaknot::macdonald::{macdonald_poly, sign_macdonald_poly};
use dahaknot::{CableSpec, Convention, Family};
use wasm_bindgen::prelude::*;

fn convention(name: &str) -> Result<Convention, String> {
    match name {
        "topological" => Ok(Convention::Topological),
        "newton" => Ok(Convention::Newton),
        other => Err(format!("unknown convention {other}")),
    }
}

pub fn macdonald_text(n: usize, sign: bool) -> Result<String, String> {
    if n > 12 {
        return Err("n is limited to 12 in the demo".into());
    }
    let p = if sign { sign_macdonald_poly(n) } else { macdonald_poly(n) }.map_err(|e| e.to_string())?;
    Ok(p.coeffs().rev().map(|(k, c)| format!("m_{k}: {c}")).collect::<Vec<_>>().join("\n"))
}

pub fn torus_text(n: usize, r: i64, s: i64, family: &str) -> Result<String, String> {
    if !(1..=6).contains(&n) {
        return Err("n must be between 1 and 6".into());
    }
    let v = match family {
        "cherednik" => cherednik_torus(n, r, s),
        "sign" => sign_torus(n, r, s),
        other => return Err(format!("unknown family {other}")),
    };
    v.map(|v| v.to_string()).map_err(|e| e.to_string())
}

/// Iterated cable (topological) or Newton-pair polynomial, specialized and
/// compared with the oracle.
pub fn verify_text(n: usize, pairs: &str, conv: &str) -> Result<String, String> {
    if !(1..=4).contains(&n) {
        return Err("n must be between 1 and 4".into());
    }
    let spec = CableSpec::parse(pairs, convention(conv)?).map_err(|e| e.to_string())?;
    let family = match spec.convention() {
        Convention::Topological => Family::Iterated,
        Convention::Newton => Family::Cd,
    };
    let (value, rep) = run_verify(family, n, &spec, 0).map_err(|e| e.to_string())?;
    let verdict = match (rep.matched, rep.monomial_k) {
        (true, Some(k)) => format!("match, sign {}, k = {k}", rep.sign),
        (true, None) => format!("match, sign {}", rep.sign),
        (false, _) => "MISMATCH".to_string(),
    };
    Ok(format!(
        "{} {spec}, n = {n}\nJ(q,t) = {value}\nt = -q^2: {}\noracle: {}\n{verdict}",
        family.name(),
        rep.specialized,
        rep.oracle
    ))
}

#[wasm_bindgen]
pub fn macdonald(n: u32, sign: bool) -> Result<String, JsError> {
    macdonald_text(n as usize, sign).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn torus(n: u32, r: i32, s: i32, family: &str) -> Result<String, JsError> {
    torus_text(n as usize, r.into(), s.into(), family).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn verify(n: u32, pairs: &str, convention: &str) -> Result<String, JsError> {
    verify_text(n as usize, pairs, convention).map_err(|e| JsError::new(&e))
}
