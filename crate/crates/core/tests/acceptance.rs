//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the report.
//! All comparisons are exact equality of canonical forms; the only numeric
//! tolerance is the wall-clock budget per criterion.

use std::time::{Duration, Instant};

use dahaknot::exactalg::{monomial_ratio, parse_laurent_x, parse_ratqt};
use dahaknot::hword::{gamma_apply, x_word, y_word, z_word, TauGen};
use dahaknot::invariants::{
    cd_newton, cd_newton_with, cherednik_torus, cherednik_torus_with, iterated_topological, iterated_topological_with,
    newton_to_topological, sign_torus, sign_torus_with, GammaChoice,
};
use dahaknot::joracle::{oracle_jones, unknot_jones};
use dahaknot::macdonald::{chebyshev_s_sym, eigenvalue, macdonald_operator, macdonald_poly};
use dahaknot::polyrep::{act, RepFlavor};
use dahaknot::{CableSpec, HElement, LaurentQ, LaurentX, RatQT, TSubst};

/// Per-criterion wall-clock budget.
const TIME_BUDGET: Duration = Duration::from_secs(60);

/// Criteria that fail as stated; see the decisions ledger. Any other failure,
/// or any of these starting to pass, fails the test.
const KNOWN_RED: [u32; 3] = [3, 4, 5];

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

const KP_REFERENCE: &str = "q^32*(t^-1 - t^3) + q^44*(-t^-15 - t^-13) + q^48*(t^-11 + t^-9) \
    + q^52*(-t^-13 + t^-9) + q^56*(-t^-13 + 2*t^-9 - t^-5) + q^60*(-t^-11 + t^-9 + t^-7 - t^-5) \
    + q^64*(t^-9 + t^-7 - t^-5 - t^-3) + q^68*(-t^-5 + t^-1)";

const KM_REFERENCE: &str = "q^-28*(t^-1 - t^3) + q^4*(-t^-5 - t^-3) + q^8*(t^-1 + t) \
    + q^12*(-t^-3 + t) + q^16*(-t^-3 + 2*t - t^5) + q^20*(-t^-1 + t + t^3 - t^5) \
    + q^24*(t + t^3 - t^5 - t^7) + q^28*(-t^5 + t^9)";

const TREFOIL_3_REFERENCE: &str = "q^24*(-t^-10 - t^-8) + q^32*(-t^-8 + t^-4) + q^28*(t^-6 + t^-4) \
    + q^36*(-1 - t^-8 + 2*t^-4) + q^40*(-1 - t^-6 + t^-4 + t^-2) \
    + q^44*(-1 + t^-4 + t^-2 - t^2) + q^48*(-1 + t^4)";

fn kp_jones() -> LaurentQ {
    LaurentQ::from_int_terms([(14, 1), (18, 1), (22, 1), (26, 1), (42, -1), (46, -1), (50, -1), (58, 1)])
}

fn km_jones() -> LaurentQ {
    LaurentQ::from_int_terms([
        (-30, -1),
        (-6, 1),
        (-2, 1),
        (2, 1),
        (6, 1),
        (10, 1),
        (22, -1),
        (26, -1),
        (30, -1),
        (38, 1),
    ])
}

fn one_minus_q4t2() -> RatQT {
    parse_ratqt("1 - q^4*t^2")
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn topo(pairs: &[(i64, i64)]) -> CableSpec {
    CableSpec::topological(pairs).unwrap()
}

fn newton(pairs: &[(i64, i64)]) -> CableSpec {
    CableSpec::newton(pairs).unwrap()
}

/// `f = ±g`, with the sign.
fn up_to_sign(f: &LaurentQ, g: &LaurentQ) -> Option<i32> {
    if f == g {
        Some(1)
    } else if *f == g.neg() {
        Some(-1)
    } else {
        None
    }
}

fn sign_label(s: Option<i32>) -> String {
    s.map_or_else(|| "none".into(), |s| s.to_string())
}

fn ratio_label(computed: &RatQT, reference: &RatQT) -> String {
    match computed.div(reference) {
        Ok(r) if r.as_bigrat().is_some() => r.to_string(),
        Ok(_) => "not a constant".into(),
        Err(e) => e.to_string(),
    }
}

fn c1_macdonald_golden() -> Outcome {
    let p = macdonald_poly(2).map_err(err)?.to_laurent_x();
    let want = parse_laurent_x("X^2 + X^-2 + (1 - t^2)*(1 + q^4)/(1 - t^2*q^4)");
    if p == want {
        Ok(format!("p_2 = {p}"))
    } else {
        Err(format!("p_2 = {p}"))
    }
}

fn c2_trefoil_two() -> Outcome {
    let v = iterated_topological(2, &topo(&[(2, 3)])).map_err(err)?;
    let want = parse_ratqt("q^12*(t^-5 + t^-3) + q^16*(t^-3 - t)");
    if v == want {
        Ok(format!("J_2 = {v}"))
    } else {
        Err(format!("J_2 = {v}"))
    }
}

fn c3_trefoil_three() -> Outcome {
    let v = iterated_topological(3, &topo(&[(2, 3)])).map_err(err)?.mul(&one_minus_q4t2());
    let reference = parse_ratqt(TREFOIL_3_REFERENCE);
    if v == reference {
        Ok("matches reference value".into())
    } else {
        Err(format!("computed / reference = {}", ratio_label(&v, &reference)))
    }
}

/// `(1 − q⁴t²)·J_2` for the Newton input with second slope `s2`, through the
/// topological conversion.
fn double_cable(s2: i64) -> Result<(CableSpec, RatQT), String> {
    let spec = newton(&[(2, 3), (2, s2)]);
    let a = newton_to_topological(&spec);
    let topo_spec = spec.to_topological();
    debug_assert_eq!(topo_spec.pairs().iter().map(|p| p.1).collect::<Vec<_>>(), a);
    let v = iterated_topological(2, &topo_spec).map_err(err)?.mul(&one_minus_q4t2());
    Ok((topo_spec, v))
}

fn c4_double_cables() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for (s2, reference, label) in [(5, KP_REFERENCE, "Kp"), (-5, KM_REFERENCE, "Km")] {
        let (topo_spec, v) = double_cable(s2)?;
        let reference = parse_ratqt(reference);
        if v == reference {
            notes.push(format!("{label} via {topo_spec}: match"));
        } else {
            ok = false;
            notes.push(format!("{label} via {topo_spec}: computed / reference = {}", ratio_label(&v, &reference)));
        }
    }
    if ok {
        Ok(notes.join("; "))
    } else {
        Err(notes.join("; "))
    }
}

fn c5_jones_depth_two() -> Outcome {
    let divisor = LaurentQ::from_int_terms([(0, 1), (8, -1)]);
    let mut notes = Vec::new();
    let mut ok = true;
    for (s2, want, label) in [(5, kp_jones(), "Kp"), (-5, km_jones(), "Km")] {
        let (_, v) = double_cable(s2)?;
        let spec = LaurentQ::from_ratqt(&v.specialize_t(TSubst::MinusQ2).map_err(err)?).map_err(err)?;
        let jones = spec.div_exact(&divisor).ok_or_else(|| format!("{label}: 1 - q^8 does not divide"))?;
        let oracle = oracle_jones(2, &newton(&[(2, 3), (2, s2)])).map_err(err)?;
        match (up_to_sign(&jones, &want), up_to_sign(&oracle, &want)) {
            (Some(a), Some(b)) => notes.push(format!("{label}: pipeline sign {a}, oracle sign {b}")),
            (a, b) => {
                ok = false;
                notes.push(format!(
                    "{label}: pipeline {}, oracle {}",
                    if a.is_some() { "match" } else { "differs" },
                    if b.is_some() { "match" } else { "differs" }
                ));
            }
        }
    }
    if ok {
        Ok(notes.join("; "))
    } else {
        Err(notes.join("; "))
    }
}

fn c6_bridge() -> Outcome {
    let mut count = 0;
    for n in 1..=3 {
        for (r, s) in [(2, 3), (3, 2), (2, 5), (2, -3)] {
            let c = cherednik_torus(n, r, s).map_err(err)?;
            let lhs = c.specialize_t(TSubst::MinusQ2OverT).map_err(err)?;
            let rhs = sign_torus(n, r, s).map_err(err)?;
            if lhs != rhs {
                return Err(format!("n={n} ({r},{s}): {lhs} != {rhs}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} identities"))
}

fn c7_monomial() -> Outcome {
    let mut found = Vec::new();
    for pairs in [vec![(2, 3)], vec![(2, 3), (2, 5)]] {
        let spec = newton(&pairs);
        for n in 1..=2 {
            let v = cd_newton(n, &spec).map_err(err)?;
            let s = LaurentQ::from_ratqt(&v.specialize_t(TSubst::MinusQ2).map_err(err)?).map_err(err)?;
            let o = oracle_jones(n as i64, &spec).map_err(err)?;
            match monomial_ratio(&s, &o) {
                Some((sign, k)) => found.push(format!("{spec} n={n}: ({sign},{k})")),
                None => return Err(format!("{spec} n={n}: no monomial ratio")),
            }
        }
    }
    Ok(found.join("; "))
}

fn same_on(lhs: &HElement, rhs: &HElement, vs: &[LaurentX], flavor: RepFlavor) -> Result<bool, String> {
    for v in vs {
        if act(lhs, v, flavor).map_err(err)? != act(rhs, v, flavor).map_err(err)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn c8_relations() -> Outcome {
    let laurent: Vec<LaurentX> = (-5..=5).map(LaurentX::x_pow).collect();
    let symmetric: Vec<LaurentX> = ["1", "X + X^-1", "X^2 + X^-2", "X^3 + X^-3", "t*X^2 + q + t*X^-2"]
        .iter()
        .map(|s| parse_laurent_x(s))
        .collect();
    let (x, xi, y, yi, t) = (HElement::x(1), HElement::x(-1), HElement::y(1), HElement::y(-1), HElement::t_gen(1));
    let scalar = |s: &str| HElement::scalar(parse_ratqt(s));

    for flavor in [RepFlavor::Standard, RepFlavor::Sign] {
        let u = flavor.effective_t();
        let quad = t.sub(&HElement::scalar(u.clone())).mul(&t.add(&HElement::scalar(u.inv().map_err(err)?)));
        let rels = [
            ("TXT = X^-1", t.mul(&x).mul(&t), xi.clone()),
            ("TY^-1T = Y", t.mul(&yi).mul(&t), y.clone()),
            ("XY = q^2 YXT^2", x.mul(&y), scalar("q^2").mul(&y).mul(&x).mul(&t).mul(&t)),
            ("Hecke relation", quad, HElement::zero()),
        ];
        for (name, l, r) in rels {
            if !same_on(&l, &r, &laurent, flavor)? {
                return Err(format!("{name} ({})", flavor.name()));
            }
        }
        let e = t.add(&scalar("t^-1")).mul(&scalar("1/(t + t^-1)"));
        if !same_on(&e.mul(&e), &e, &laurent, flavor)? {
            return Err(format!("e^2 != e ({})", flavor.name()));
        }
    }

    let (xs, ys, zs) = (x_word(), y_word(), z_word());
    let qc = |a: &HElement, b: &HElement| scalar("q").mul(a).mul(b).sub(&scalar("q^-1").mul(b).mul(a));
    let c = scalar("q^2 - q^-2");
    let bq = [
        ("[x,y]_q", qc(&xs, &ys), c.mul(&zs)),
        ("[z,x]_q", qc(&zs, &xs), c.mul(&ys)),
        ("[y,z]_q", qc(&ys, &zs), c.mul(&xs)),
    ];
    for (name, l, r) in bq {
        if !same_on(&l, &r, &symmetric, RepFlavor::Standard)? {
            return Err(name.into());
        }
    }

    let casimir = scalar("q^2")
        .mul(&xs)
        .mul(&xs)
        .add(&scalar("q^-2").mul(&ys).mul(&ys))
        .add(&scalar("q^2").mul(&zs).mul(&zs))
        .sub(&scalar("q").mul(&xs).mul(&ys).mul(&zs));
    let k = scalar("(t/q - q/t)^2 + (q + 1/q)^2");
    if !same_on(&casimir, &k, &symmetric, RepFlavor::Standard)? {
        return Err("Casimir is not the scalar".into());
    }

    for n in 0..=8 {
        let p = macdonald_poly(n).map_err(err)?;
        if macdonald_operator(&p).map_err(err)? != p.scale(&eigenvalue(n)) {
            return Err(format!("p_{n} is not an eigenvector"));
        }
        if p.specialize_t(TSubst::MinusQ2).map_err(err)? != chebyshev_s_sym(n) {
            return Err(format!("p_{n} at t = -q^2 is not S_{n}"));
        }
    }
    Ok("DAHA, e, B'_q, Casimir, p_n for n <= 8".into())
}

fn c9_gamma_independence() -> Outcome {
    let y = y_word();
    let fixed = HElement::y(1).tau_apply(TauGen::Minus);
    if fixed != HElement::y(1) {
        return Err("tau- does not fix Y".into());
    }
    let mut count = 0;
    for (r, s) in [(2, 3), (3, 2), (2, 5), (1, 2)] {
        let a = gamma_apply(r, s, &y).map_err(err)?;
        let b = gamma_apply(r, s, &y.tau_apply(TauGen::Minus)).map_err(err)?;
        if a != b {
            return Err(format!("gamma_({r},{s})(y) depends on the word"));
        }
        for n in 1..=2 {
            let ch = cherednik_torus(n, r, s).map_err(err)?
                == cherednik_torus_with(n, r, s, GammaChoice::WithStabilizer).map_err(err)?;
            let sg = sign_torus(n, r, s).map_err(err)?
                == sign_torus_with(n, r, s, GammaChoice::WithStabilizer).map_err(err)?;
            if !(ch && sg) {
                return Err(format!("torus n={n} ({r},{s})"));
            }
            count += 2;
        }
    }
    for pairs in [vec![(2, 3)], vec![(3, 2)], vec![(2, 3), (2, 5)]] {
        for n in 1..=2 {
            let t = topo(&pairs);
            let w = newton(&pairs);
            let it = iterated_topological(n, &t).map_err(err)?
                == iterated_topological_with(n, &t, GammaChoice::WithStabilizer).map_err(err)?;
            let cd =
                cd_newton(n, &w).map_err(err)? == cd_newton_with(n, &w, GammaChoice::WithStabilizer).map_err(err)?;
            if !(it && cd) {
                return Err(format!("cable {t} n={n}"));
            }
            count += 2;
        }
    }
    Ok(format!("{count} invariant values unchanged"))
}

fn c10_oracle_sanity() -> Outcome {
    let specs = [
        topo(&[(2, 3)]),
        topo(&[(3, 2)]),
        topo(&[(2, 5)]),
        topo(&[(2, -3)]),
        topo(&[(2, 3), (2, 5)]),
        topo(&[(2, 3), (2, -5)]),
        newton(&[(2, 3)]),
        newton(&[(2, 3), (2, 5)]),
        newton(&[(2, 3), (2, -5)]),
    ];
    for spec in &specs {
        if oracle_jones(1, spec).map_err(err)? != LaurentQ::one() {
            return Err(format!("J_1({spec}) != 1"));
        }
        for n in 2..=3 {
            oracle_jones(n, spec).map_err(|e| format!("{spec} n={n}: {e}"))?;
        }
    }
    let qdiff = LaurentQ::from_int_terms([(2, 1), (-2, -1)]);
    for n in 1..=8i64 {
        let num = LaurentQ::from_int_terms([(2 * n, 1), (-2 * n, -1)]);
        let mut want = num.div_exact(&qdiff).ok_or("quantum integer is not a polynomial")?;
        if n % 2 == 0 {
            want = want.neg();
        }
        if unknot_jones(n) != want {
            return Err(format!("unknot n={n}"));
        }
    }
    if !unknot_jones(0).is_zero() {
        return Err("unknot n=0".into());
    }
    Ok(format!("{} specs, unknot n <= 8", specs.len()))
}

/// The reading where the second Kp/Km stage is the topological (2,±5) cable.
fn topological_reading() -> Vec<String> {
    let mut lines = Vec::new();
    for (s2, reference, jones, label) in [(5, KP_REFERENCE, kp_jones(), "Kp"), (-5, KM_REFERENCE, km_jones(), "Km")] {
        let spec = topo(&[(2, 3), (2, s2)]);
        let line = (|| -> Result<String, String> {
            let v = iterated_topological(2, &spec).map_err(err)?;
            let scaled = v.mul(&one_minus_q4t2());
            let ratio = ratio_label(&scaled, &parse_ratqt(reference));
            let s = LaurentQ::from_ratqt(&v.specialize_t(TSubst::MinusQ2).map_err(err)?).map_err(err)?;
            let o = oracle_jones(2, &spec).map_err(err)?;
            Ok(format!(
                "{label} as {spec}: (1-q^4t^2)J_2 / reference = {ratio}; specialization sign {}; oracle sign {}",
                sign_label(up_to_sign(&s, &jones)),
                sign_label(up_to_sign(&o, &jones))
            ))
        })();
        lines.push(line.unwrap_or_else(|e| format!("{label}: {e}")));
    }
    lines
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        (1, "Macdonald p_2 golden value", c1_macdonald_golden),
        (2, "trefoil J_2(q,t)", c2_trefoil_two),
        (3, "trefoil (1-q^4t^2) J_3(q,t)", c3_trefoil_three),
        (4, "double cables Kp, Km", c4_double_cables),
        (5, "depth-two Jones specialization", c5_jones_depth_two),
        (6, "Cherednik/sign bridge", c6_bridge),
        (7, "monomial ratio for Newton pairs", c7_monomial),
        (8, "operator relations", c8_relations),
        (9, "gamma independence", c9_gamma_independence),
        (10, "oracle sanity", c10_oracle_sanity),
    ];
    let mut failed = Vec::new();
    for (id, name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (pass, detail) = match outcome {
            Ok(d) if elapsed <= TIME_BUDGET => (true, d),
            Ok(d) => (false, format!("{d}; over the {}s budget", TIME_BUDGET.as_secs())),
            Err(d) => (false, d),
        };
        println!(
            "criterion {id:>2} {:<4} {name} [{:.2}s] {detail}",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
        if !pass {
            failed.push(id);
        }
    }
    for line in topological_reading() {
        println!("info: {line}");
    }
    assert_eq!(failed, KNOWN_RED, "failing criteria changed");
}
