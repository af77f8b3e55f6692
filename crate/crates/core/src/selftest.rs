//! Invariant checks run by `dahaknot selftest`.

use std::time::{Duration, Instant};

use crate::error::Result;
use crate::exactalg::{monomial_ratio, LaurentQ, LaurentX, RatQT, TSubst};
use crate::hword::{e_rs, gamma_apply, x_word, y_word, z_word, HElement};
use crate::invariants::{
    cd_newton, cd_newton_with, cherednik_torus, cherednik_torus_with, depth_one_ratio, iterated_topological,
    iterated_topological_with, sign_torus, sign_torus_with, CableSpec, GammaChoice,
};
use crate::joracle::{oracle_jones, unknot_jones};
use crate::macdonald::{chebyshev_s_sym, eigenvalue, macdonald_operator, macdonald_poly};
use crate::polyrep::{act, eval_at, idempotent_project, right_act, RepFlavor};

/// Outcome of one check. `detail` carries computed values worth reporting.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

type Check = fn() -> Result<std::result::Result<String, String>>;

const FLAVORS: [RepFlavor; 2] = [RepFlavor::Standard, RepFlavor::Sign];

fn basis(max: i64) -> Vec<LaurentX> {
    (-max..=max).map(LaurentX::x_pow).collect()
}

fn symmetric_vectors() -> Vec<LaurentX> {
    let mut out = vec![LaurentX::one()];
    for k in 1..=3 {
        out.push(LaurentX::x_pow(k).add(&LaurentX::x_pow(-k)));
    }
    out.push(crate::exactalg::parse_laurent_x("q*X^2 + t + q*X^-2"));
    out
}

/// `lhs·v == rhs·v` for every `v`.
fn same_action(lhs: &HElement, rhs: &HElement, vs: &[LaurentX], flavor: RepFlavor) -> Result<bool> {
    for v in vs {
        if act(lhs, v, flavor)? != act(rhs, v, flavor)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn verdict(ok: bool, what: &str) -> std::result::Result<String, String> {
    if ok {
        Ok(String::new())
    } else {
        Err(format!("{what} violated"))
    }
}

pub fn daha_relations() -> Result<std::result::Result<String, String>> {
    let (x, xi, y, yi, t) = (HElement::x(1), HElement::x(-1), HElement::y(1), HElement::y(-1), HElement::t_gen(1));
    let q2 = RatQT::monomial(1, 2, 0);
    let vs = basis(6);
    for flavor in FLAVORS {
        let te = flavor.effective_t();
        let quad = t.sub(&HElement::scalar(te.clone())).mul(&t.add(&HElement::scalar(te.inv()?)));
        let rels = [
            ("TXT = X^-1", t.mul(&x).mul(&t), xi.clone()),
            ("TY^-1T = Y", t.mul(&yi).mul(&t), y.clone()),
            ("XY = q^2 YXT^2", x.mul(&y), y.mul(&x).mul(&t).mul(&t).scale(&q2)),
            ("(T - t)(T + 1/t) = 0", quad, HElement::zero()),
        ];
        for (name, l, r) in rels {
            if !same_action(&l, &r, &vs, flavor)? {
                return Ok(Err(format!("{name} fails in the {} flavor", flavor.name())));
            }
        }
    }
    Ok(Ok("4 relations x 2 flavors on X^d, |d| <= 6".into()))
}

fn q_commutator(a: &HElement, b: &HElement) -> HElement {
    let q = RatQT::q();
    a.mul(b).scale(&q).sub(&b.mul(a).scale(&q.inv().unwrap()))
}

pub fn bq_relations() -> Result<std::result::Result<String, String>> {
    let (x, y, z) = (x_word(), y_word(), z_word());
    let c = RatQT::monomial(1, 2, 0).sub(&RatQT::monomial(1, -2, 0));
    let vs = symmetric_vectors();
    let rels = [
        ("[x,y]_q", q_commutator(&x, &y), z.scale(&c)),
        ("[z,x]_q", q_commutator(&z, &x), y.scale(&c)),
        ("[y,z]_q", q_commutator(&y, &z), x.scale(&c)),
    ];
    for (name, l, r) in rels {
        if !same_action(&l, &r, &vs, RepFlavor::Standard)? {
            return Ok(Err(format!("{name} relation fails")));
        }
    }
    Ok(Ok("3 relations on symmetric vectors".into()))
}

/// `q²x² + q⁻²y² + q²z² − q·xyz`.
pub fn casimir() -> HElement {
    let (x, y, z) = (x_word(), y_word(), z_word());
    let m = |e| RatQT::monomial(1, e, 0);
    x.mul(&x)
        .scale(&m(2))
        .add(&y.mul(&y).scale(&m(-2)))
        .add(&z.mul(&z).scale(&m(2)))
        .sub(&x.mul(&y).mul(&z).scale(&m(1)))
}

/// `(t/q − q/t)² + (q + 1/q)²`.
pub fn casimir_scalar() -> RatQT {
    let a = RatQT::monomial(1, -1, 1).sub(&RatQT::monomial(1, 1, -1));
    let b = RatQT::q().add(&RatQT::monomial(1, -1, 0));
    a.mul(&a).add(&b.mul(&b))
}

fn casimir_check() -> Result<std::result::Result<String, String>> {
    let c = casimir();
    let k = casimir_scalar();
    for v in symmetric_vectors() {
        if act(&c, &v, RepFlavor::Standard)? != v.scale(&k) {
            return Ok(Err(format!("casimir is not scalar on {v}")));
        }
    }
    Ok(Ok(format!("scalar {k}")))
}

fn idempotent_checks() -> Result<std::result::Result<String, String>> {
    for flavor in FLAVORS {
        for v in basis(5) {
            let p = idempotent_project(&v, flavor)?;
            if idempotent_project(&p, flavor)? != p {
                return Ok(Err(format!("e is not idempotent on {v}")));
            }
            for a in [x_word(), y_word(), z_word()] {
                if idempotent_project(&act(&a, &v, flavor)?, flavor)? != act(&a, &p, flavor)? {
                    return Ok(Err(format!("e does not commute with a generator on {v}")));
                }
            }
        }
    }
    Ok(Ok("e^2 = e and e commutes with x, y, z".into()))
}

fn adjunction() -> Result<std::result::Result<String, String>> {
    let (x, y, z) = (x_word(), y_word(), z_word());
    let samples = [x.mul(&y), y.mul(&z), z.mul(&x).add(&y), x.mul(&z).mul(&y), y.mul(&y).sub(&z)];
    let one = LaurentX::one();
    let t = RatQT::t();
    for h in samples {
        let l = eval_at(&act(&h, &one, RepFlavor::Standard)?, &t)?;
        let r = eval_at(&right_act(&one, &h, RepFlavor::Standard)?, &t)?;
        if l != r {
            return Ok(Err("<1, h.1> differs between the two actions".into()));
        }
    }
    Ok(Ok(String::new()))
}

fn quantum_torus() -> Result<std::result::Result<String, String>> {
    let vs: Vec<LaurentX> = symmetric_vectors().into_iter().take(4).collect();
    let mut count = 0;
    for r in -3i64..=3 {
        for s in -3i64..=3 {
            if num_integer::Integer::gcd(&r, &s) != 1 {
                continue;
            }
            let g = gamma_apply(r, s, &y_word())?;
            let e = e_rs(r, s).add(&e_rs(-r, -s));
            for v in &vs {
                let a = act(&g, v, RepFlavor::Standard)?.specialize_t(TSubst::One)?;
                let b = act(&e, v, RepFlavor::Standard)?.specialize_t(TSubst::One)?;
                if a != b {
                    return Ok(Err(format!("gamma_({r},{s})(y) differs from e_(r,s) + e_(-r,-s) at t = 1")));
                }
            }
            count += 1;
        }
    }
    Ok(Ok(format!("{count} pairs")))
}

fn macdonald_eigen() -> Result<std::result::Result<String, String>> {
    for n in 0..=8 {
        let p = macdonald_poly(n)?;
        if macdonald_operator(&p)? != p.scale(&eigenvalue(n)) {
            return Ok(Err(format!("p_{n} is not an eigenvector")));
        }
        if p.specialize_t(TSubst::MinusQ2)? != chebyshev_s_sym(n) {
            return Ok(Err(format!("p_{n}(t = -q^2) != S_{n}")));
        }
    }
    Ok(Ok("n <= 8, including p_n(t = -q^2) = S_n".into()))
}

const TORUS: [(i64, i64); 4] = [(2, 3), (3, 2), (2, 5), (2, -3)];

fn bridge() -> Result<std::result::Result<String, String>> {
    for (r, s) in TORUS {
        for n in 1..=3 {
            let c = cherednik_torus(n, r, s)?.specialize_t(TSubst::MinusQ2OverT)?;
            if c != sign_torus(n, r, s)? {
                return Ok(Err(format!("bridge fails for n={n}, ({r},{s})")));
            }
        }
    }
    Ok(Ok("12 identities".into()))
}

fn gamma_independence() -> Result<std::result::Result<String, String>> {
    let choices = [GammaChoice::WithStabilizer, GammaChoice::Floor];
    for (r, s) in [(2, 3), (3, 2), (2, 5)] {
        let spec = CableSpec::topological(&[(r, s)])?;
        let nspec = CableSpec::newton(&[(r, s)])?;
        for n in 1..=3 {
            let base = [
                cherednik_torus(n, r, s)?,
                sign_torus(n, r, s)?,
                iterated_topological(n, &spec)?,
                cd_newton(n, &nspec)?,
            ];
            for choice in choices {
                let other = [
                    cherednik_torus_with(n, r, s, choice)?,
                    sign_torus_with(n, r, s, choice)?,
                    iterated_topological_with(n, &spec, choice)?,
                    cd_newton_with(n, &nspec, choice)?,
                ];
                if base != other {
                    return Ok(Err(format!("{choice:?} changes a value at n={n}, ({r},{s})")));
                }
            }
        }
    }
    Ok(Ok("4 families, n <= 3".into()))
}

fn to_laurent_q(v: &RatQT, rule: TSubst) -> Result<LaurentQ> {
    LaurentQ::from_ratqt(&v.specialize_t(rule)?)
}

fn jones_specialization() -> Result<std::result::Result<String, String>> {
    let specs = [vec![(2, 3)], vec![(3, 2)], vec![(2, 3), (2, 5)], vec![(2, 3), (2, -5)]];
    let mut signs = Vec::new();
    for pairs in specs {
        let spec = CableSpec::topological(&pairs)?;
        for n in 1..=2 {
            let v = to_laurent_q(&iterated_topological(n, &spec)?, TSubst::MinusQ2)?;
            let o = oracle_jones(n as i64, &spec)?;
            let sign = if v == o {
                1
            } else if v == o.neg() {
                -1
            } else {
                return Ok(Err(format!("n={n}, {spec}: no match up to sign")));
            };
            signs.push(sign);
        }
    }
    Ok(Ok(format!("signs {signs:?}")))
}

fn newton_monomial() -> Result<std::result::Result<String, String>> {
    let mut ks = Vec::new();
    for pairs in [vec![(2, 3)], vec![(2, 3), (2, 5)]] {
        let spec = CableSpec::newton(&pairs)?;
        for n in 1..=2 {
            let v = to_laurent_q(&cd_newton(n, &spec)?, TSubst::MinusQ2)?;
            match monomial_ratio(&v, &oracle_jones(n as i64, &spec)?) {
                Some(m) => ks.push(m),
                None => return Ok(Err(format!("n={n}, {spec}: not a monomial multiple"))),
            }
        }
    }
    Ok(Ok(format!("(sign, k) = {ks:?}")))
}

fn oracle_sanity() -> Result<std::result::Result<String, String>> {
    for pairs in [vec![(2, 3)], vec![(2, 3), (2, 5)], vec![(2, 1), (3, 1), (5, 1)]] {
        if oracle_jones(1, &CableSpec::topological(&pairs)?)? != LaurentQ::one() {
            return Ok(Err("J_1 != 1".into()));
        }
    }
    let ok = unknot_jones(2) == LaurentQ::from_int_terms([(2, -1), (-2, -1)]) && unknot_jones(0).is_zero();
    Ok(verdict(ok, "unknot normalization"))
}

fn ratio_report() -> Result<std::result::Result<String, String>> {
    let mut parts = Vec::new();
    for n in 1..=3 {
        parts.push(format!("n={n}: {}", depth_one_ratio(n, 2, 3)?));
    }
    Ok(Ok(parts.join("; ")))
}

fn opposite_gamma_report() -> Result<std::result::Result<String, String>> {
    let vs = symmetric_vectors();
    let mut parts = Vec::new();
    for (r, s) in [(1, 0), (2, 3), (3, 2), (1, 2)] {
        let a = gamma_apply(r, s, &y_word())?;
        let b = gamma_apply(-r, -s, &y_word())?;
        parts.push(format!("({r},{s}): {}", same_action(&a, &b, &vs, RepFlavor::Standard)?));
    }
    Ok(Ok(format!("gamma(-r,-s)(y) acts as gamma(r,s)(y): {}", parts.join(", "))))
}

/// Every check in reporting order.
pub fn checks() -> Vec<(&'static str, Check)> {
    vec![
        ("daha relations", daha_relations as Check),
        ("q-commutator relations", bq_relations),
        ("casimir scalar", casimir_check),
        ("spherical idempotent", idempotent_checks),
        ("pairing adjunction", adjunction),
        ("t=1 quantum torus", quantum_torus),
        ("macdonald eigen-relations", macdonald_eigen),
        ("cherednik/sign bridge", bridge),
        ("gamma word independence", gamma_independence),
        ("jones specialization", jones_specialization),
        ("newton monomial ratio", newton_monomial),
        ("oracle sanity", oracle_sanity),
        ("depth-one ratio", ratio_report),
        ("opposite gamma", opposite_gamma_report),
    ]
}

pub fn run_all() -> Vec<CheckOutcome> {
    checks()
        .into_iter()
        .map(|(name, f)| {
            let start = Instant::now();
            let (passed, detail) = match f() {
                Ok(Ok(d)) => (true, d),
                Ok(Err(d)) => (false, d),
                Err(e) => (false, format!("error: {e}")),
            };
            CheckOutcome { name, passed, detail, elapsed: start.elapsed() }
        })
        .collect()
}

/// Plain-text summary table.
pub fn render(outcomes: &[CheckOutcome]) -> String {
    let width = outcomes.iter().map(|o| o.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for o in outcomes {
        let status = if o.passed { "ok" } else { "FAILED" };
        out.push_str(&format!("{:<width$}  {:<6}  {:>8.3}s  {}\n", o.name, status, o.elapsed.as_secs_f64(), o.detail));
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    out.push_str(&format!("{} checks, {} failed\n", outcomes.len(), failed));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyrep::delta_t;

    #[test]
    fn casimir_scalar_expands() {
        let want = crate::exactalg::parse_ratqt("q^2 + q^-2 + q^2*t^-2 + q^-2*t^2");
        assert_eq!(casimir_scalar(), want);
    }

    #[test]
    fn delta_is_sign_eigenvector() {
        let d = delta_t();
        let td = act(&HElement::t_gen(1), &d, RepFlavor::Sign).unwrap();
        assert_eq!(td, d.scale(&RatQT::t()));
    }
}
