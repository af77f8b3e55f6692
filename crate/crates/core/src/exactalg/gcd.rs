//! Polynomial gcd over ℤ[q, t] by modular methods.
//!
//! Univariate gcds use the small-prime modular algorithm with CRT
//! reconstruction. Bivariate gcds use Brown's dense modular algorithm with
//! the variable of smaller degree as the main variable. Every result is
//! certified by exact trial division, which also yields the cofactors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent_qt::{LaurentQT, Mono};
use super::modp;

/// Dense univariate polynomial over ℤ, index = degree, no trailing zeros.
type ZU = Vec<BigInt>;
/// Dense bivariate polynomial: rows indexed by main-variable degree.
type ZB = Vec<ZU>;

fn zu_trim(v: &mut ZU) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn zu_content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn zu_div_scalar(a: &[BigInt], c: &BigInt) -> ZU {
    a.iter().map(|x| x / c).collect()
}

/// Primitive part with positive leading coefficient.
fn zu_pp(a: &[BigInt]) -> ZU {
    if a.is_empty() {
        return Vec::new();
    }
    let mut c = zu_content(a);
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    zu_div_scalar(a, &c)
}

fn zu_mul(a: &[BigInt], b: &[BigInt]) -> ZU {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zu_trim(&mut out);
    out
}

/// `a -= b * x^shift`.
fn zu_sub_shifted(a: &mut ZU, b: &[BigInt], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigInt::zero());
    }
    for (i, y) in b.iter().enumerate() {
        a[i + shift] -= y;
    }
    zu_trim(a);
}

fn zu_divexact(a: &[BigInt], b: &[BigInt]) -> Option<ZU> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let (qc, rem) = r[dr].div_rem(lc);
        if !rem.is_zero() {
            return None;
        }
        let off = dr - db;
        for (i, y) in b.iter().enumerate() {
            r[off + i] -= &qc * y;
        }
        q[off] = qc;
        zu_trim(&mut r);
        if r.len() > dr {
            return None;
        }
    }
    if !r.is_empty() {
        return None;
    }
    zu_trim(&mut q);
    Some(q)
}

fn zu_mod(a: &[BigInt], p: u64) -> Vec<u64> {
    let mut v: Vec<u64> = a.iter().map(|c| modp::reduce(c, p)).collect();
    modp::trim(&mut v);
    v
}

/// Full gcd over ℤ[x] (integer content included), positive leading coefficient.
fn zu_gcd_full(a: &[BigInt], b: &[BigInt]) -> ZU {
    if a.is_empty() {
        return zu_pp_keep_content(b);
    }
    if b.is_empty() {
        return zu_pp_keep_content(a);
    }
    let c = zu_content(a).gcd(&zu_content(b));
    let g = ugcd(a, b);
    g.iter().map(|x| x * &c).collect()
}

fn zu_pp_keep_content(a: &[BigInt]) -> ZU {
    if a.last().is_some_and(|c| c.is_negative()) {
        a.iter().map(|c| -c).collect()
    } else {
        a.to_vec()
    }
}

/// Primitive gcd over ℤ[x] with positive leading coefficient.
fn ugcd(a: &[BigInt], b: &[BigInt]) -> ZU {
    if a.is_empty() {
        return zu_pp(b);
    }
    if b.is_empty() {
        return zu_pp(a);
    }
    let a = zu_pp(a);
    let b = zu_pp(b);
    if a.len() == 1 || b.len() == 1 {
        return vec![BigInt::one()];
    }
    if a == b {
        return a;
    }
    let gamma = a.last().unwrap().gcd(b.last().unwrap());
    let mut best = usize::MAX;
    let mut acc: ZU = Vec::new();
    let mut m = BigInt::one();
    let mut prev: Option<ZU> = None;
    for i in 0.. {
        let p = modp::prime(i);
        let la = modp::reduce(a.last().unwrap(), p);
        let lb = modp::reduce(b.last().unwrap(), p);
        if la == 0 || lb == 0 {
            continue;
        }
        let g = modp::gcd(&zu_mod(&a, p), &zu_mod(&b, p), p);
        let d = g.len() - 1;
        if d == 0 {
            return vec![BigInt::one()];
        }
        if d > best {
            continue;
        }
        if d < best {
            best = d;
            acc = vec![BigInt::zero(); d + 1];
            m = BigInt::one();
            prev = None;
        }
        let gp = modp::reduce(&gamma, p);
        let scaled: Vec<u64> = g.iter().map(|&c| modp::mul(c, gp, p)).collect();
        modp::crt_extend(&mut acc, &m, &scaled, p);
        m *= p;
        let half = &m / 2u32;
        let sym: ZU = acc.iter().map(|c| modp::symmetric(c, &m, &half)).collect();
        if prev.as_ref() == Some(&sym) {
            let cand = zu_pp(&sym);
            if zu_divexact(&a, &cand).is_some() && zu_divexact(&b, &cand).is_some() {
                return cand;
            }
        }
        prev = Some(sym);
    }
    unreachable!()
}

fn zb_trim(a: &mut ZB) {
    while a.last().is_some_and(|r| r.is_empty()) {
        a.pop();
    }
}

fn zb_minor_deg(a: &ZB) -> usize {
    a.iter().map(|r| r.len().saturating_sub(1)).max().unwrap_or(0)
}

/// Content with respect to the main variable, as a primitive element of ℤ[minor].
fn zb_content(a: &ZB) -> ZU {
    let mut g: ZU = Vec::new();
    for r in a {
        if r.is_empty() {
            continue;
        }
        g = if g.is_empty() { zu_pp(r) } else { ugcd(&g, r) };
        if g.len() == 1 {
            break;
        }
    }
    g
}

fn zb_div_minor(a: &ZB, c: &[BigInt]) -> ZB {
    if c.len() == 1 && c[0].is_one() {
        return a.clone();
    }
    a.iter().map(|r| if r.is_empty() { Vec::new() } else { zu_divexact(r, c).expect("content divides") }).collect()
}

fn zb_divexact(a: &ZB, b: &ZB) -> Option<ZB> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.clone();
    let mut q: ZB = vec![Vec::new(); a.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let qc = zu_divexact(&r[dr], lc)?;
        let off = dr - db;
        for (i, row) in b.iter().enumerate() {
            if row.is_empty() {
                continue;
            }
            let prod = zu_mul(&qc, row);
            zu_sub_shifted(&mut r[off + i], &prod, 0);
        }
        q[off] = qc;
        zb_trim(&mut r);
        if r.len() > dr {
            return None;
        }
    }
    if !r.is_empty() {
        return None;
    }
    zb_trim(&mut q);
    Some(q)
}

enum ModImage {
    Coprime,
    Image(Vec<Vec<u64>>),
}

fn brown_modp(a: &ZB, b: &ZB, gamma: &[BigInt], bound: usize, p: u64, seed: u64) -> ModImage {
    let ap: Vec<Vec<u64>> = a.iter().map(|r| zu_mod(r, p)).collect();
    let bp: Vec<Vec<u64>> = b.iter().map(|r| zu_mod(r, p)).collect();
    let gp = zu_mod(gamma, p);
    let lca = ap.last().unwrap();
    let lcb = bp.last().unwrap();
    let mut h: Vec<Vec<u64>> = Vec::new();
    let mut mprod: Vec<u64> = vec![1];
    let mut dcur = usize::MAX;
    let mut npts = 0usize;
    let mut k: u64 = 0;
    loop {
        k += 1;
        let alpha = (seed.wrapping_mul(0x9E37_79B9).wrapping_add(k)) % p;
        if modp::eval(lca, alpha, p) == 0 || modp::eval(lcb, alpha, p) == 0 {
            continue;
        }
        let mut aa: Vec<u64> = ap.iter().map(|r| modp::eval(r, alpha, p)).collect();
        let mut bb: Vec<u64> = bp.iter().map(|r| modp::eval(r, alpha, p)).collect();
        modp::trim(&mut aa);
        modp::trim(&mut bb);
        let g = modp::gcd(&aa, &bb, p);
        let d = g.len() - 1;
        if d == 0 {
            return ModImage::Coprime;
        }
        if d > dcur {
            continue;
        }
        if d < dcur {
            dcur = d;
            h = vec![Vec::new(); d + 1];
            mprod = vec![1];
            npts = 0;
        }
        let ga = modp::eval(&gp, alpha, p);
        let m_alpha = modp::eval(&mprod, alpha, p);
        if m_alpha == 0 {
            continue;
        }
        let inv_m = modp::inv(m_alpha, p);
        for (i, hi) in h.iter_mut().enumerate() {
            let target = modp::mul(g[i], ga, p);
            let cur = modp::eval(hi, alpha, p);
            let corr = modp::mul(modp::sub(target, cur, p), inv_m, p);
            if corr != 0 {
                if hi.len() < mprod.len() {
                    hi.resize(mprod.len(), 0);
                }
                for (j, &mc) in mprod.iter().enumerate() {
                    hi[j] = modp::add(hi[j], modp::mul(corr, mc, p), p);
                }
                modp::trim(hi);
            }
        }
        // mprod *= (x - alpha)
        let mut next = vec![0u64; mprod.len() + 1];
        for (j, &mc) in mprod.iter().enumerate() {
            next[j + 1] = modp::add(next[j + 1], mc, p);
            next[j] = modp::sub(next[j], modp::mul(mc, alpha, p), p);
        }
        mprod = next;
        npts += 1;
        if npts > bound {
            return ModImage::Image(h);
        }
    }
}

/// Primitive gcd of bivariate polynomials that are primitive in the main
/// variable and have positive main degree.
fn brown(a: &ZB, b: &ZB) -> ZB {
    let gamma = zu_gcd_full(a.last().unwrap(), b.last().unwrap());
    let bound = (gamma.len() - 1) + zb_minor_deg(a).min(zb_minor_deg(b));
    let width = bound + 1;
    let mut best = usize::MAX;
    let mut acc: Vec<BigInt> = Vec::new();
    let mut m = BigInt::one();
    let mut prev: Option<Vec<BigInt>> = None;
    for i in 0.. {
        let p = modp::prime(i);
        let la = a.last().unwrap().last().unwrap();
        let lb = b.last().unwrap().last().unwrap();
        if modp::reduce(la, p) == 0 || modp::reduce(lb, p) == 0 {
            continue;
        }
        let img = match brown_modp(a, b, &gamma, bound, p, i as u64) {
            ModImage::Coprime => return vec![vec![BigInt::one()]],
            ModImage::Image(h) => h,
        };
        let d = img.len() - 1;
        if d > best {
            continue;
        }
        if d < best {
            best = d;
            acc = vec![BigInt::zero(); (d + 1) * width];
            m = BigInt::one();
            prev = None;
        }
        let mut flat = vec![0u64; (d + 1) * width];
        for (r, row) in img.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                flat[r * width + c] = v;
            }
        }
        modp::crt_extend(&mut acc, &m, &flat, p);
        m *= p;
        let half = &m / 2u32;
        let sym: Vec<BigInt> = acc.iter().map(|c| modp::symmetric(c, &m, &half)).collect();
        if prev.as_ref() == Some(&sym) {
            let mut cand: ZB = sym
                .chunks(width)
                .map(|ch| {
                    let mut r = ch.to_vec();
                    zu_trim(&mut r);
                    r
                })
                .collect();
            zb_trim(&mut cand);
            let cont = zb_content(&cand);
            let icont = cand.iter().fold(BigInt::zero(), |g, r| g.gcd(&zu_content(r)));
            let cont: ZU = cont.iter().map(|c| c * &icont).collect();
            let cand = zb_div_minor(&cand, &cont);
            if zb_divexact(a, &cand).is_some() && zb_divexact(b, &cand).is_some() {
                return cand;
            }
        }
        prev = Some(sym);
    }
    unreachable!()
}

/// Bivariate gcd for integer-primitive inputs, primitive result.
fn zb_gcd(a: &ZB, b: &ZB) -> ZB {
    let ca = zb_content(a);
    let cb = zb_content(b);
    let cg = ugcd(&ca, &cb);
    let a1 = zb_div_minor(a, &ca);
    let b1 = zb_div_minor(b, &cb);
    let core = if a1.len() <= 1 || b1.len() <= 1 {
        vec![vec![BigInt::one()]]
    } else if a1 == b1 {
        a1
    } else {
        brown(&a1, &b1)
    };
    core.iter().map(|r| if r.is_empty() { Vec::new() } else { zu_mul(r, &cg) }).collect()
}

/// Layout used to move between sparse `LaurentQT` and dense `ZB`.
struct Layout {
    q0: (i64, i64),
    t0: (i64, i64),
    dq: i64,
    dt: i64,
    q_main: bool,
}

impl Layout {
    fn to_dense(&self, a: &LaurentQT, which: usize) -> ZB {
        let (q0, t0) = if which == 0 { (self.q0.0, self.t0.0) } else { (self.q0.1, self.t0.1) };
        let mut out: ZB = Vec::new();
        for ((qe, te), c) in a.terms() {
            let qi = ((qe - q0) / self.dq) as usize;
            let ti = ((te - t0) / self.dt) as usize;
            let (mi, ni) = if self.q_main { (qi, ti) } else { (ti, qi) };
            if out.len() <= mi {
                out.resize(mi + 1, Vec::new());
            }
            let row = &mut out[mi];
            if row.len() <= ni {
                row.resize(ni + 1, BigInt::zero());
            }
            row[ni] = c.clone();
        }
        out
    }

    fn to_laurent(&self, a: &ZB, shift: Mono) -> LaurentQT {
        let mut terms = Vec::new();
        for (mi, row) in a.iter().enumerate() {
            for (ni, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (qi, ti) = if self.q_main { (mi, ni) } else { (ni, mi) };
                terms.push(((qi as i64 * self.dq + shift.0, ti as i64 * self.dt + shift.1), c.clone()));
            }
        }
        LaurentQT::from_terms(terms)
    }
}

fn exponent_gcd(polys: &[&LaurentQT], lo: &[Mono]) -> (i64, i64) {
    let mut gq = 0i64;
    let mut gt = 0i64;
    for (p, l) in polys.iter().zip(lo) {
        for ((qe, te), _) in p.terms() {
            gq = gq.gcd(&(qe - l.0));
            gt = gt.gcd(&(te - l.1));
        }
    }
    (gq.max(1), gt.max(1))
}

/// Gcd with cofactors: returns `(g, a/g, b/g)`.
///
/// `g` is primitive over ℤ (times the integer gcd of contents), has positive
/// leading coefficient in graded lex order, and carries the monomial gcd
/// `q^min t^min` of the inputs, so Laurent inputs are accepted. For
/// `a = b = 0` all three outputs are zero. If exactly one input is zero the
/// gcd is the other input normalized.
pub fn gcd_cofactors(a: &LaurentQT, b: &LaurentQT) -> (LaurentQT, LaurentQT, LaurentQT) {
    if a.is_zero() && b.is_zero() {
        return (LaurentQT::zero(), LaurentQT::zero(), LaurentQT::zero());
    }
    if a.is_zero() {
        let (g, cb) = normalize_sign(b);
        return (g, LaurentQT::zero(), cb);
    }
    if b.is_zero() {
        let (g, ca) = normalize_sign(a);
        return (g, ca, LaurentQT::zero());
    }
    let la = a.min_exps().unwrap();
    let lb = b.min_exps().unwrap();
    let mono = (la.0.min(lb.0), la.1.min(lb.1));
    let ca = a.content();
    let cb = b.content();
    let cg = ca.gcd(&cb);

    let (core_g, a_co, b_co) = if a.is_monomial() || b.is_monomial() {
        (LaurentQT::one(), None, None)
    } else {
        let (dq, dt) = exponent_gcd(&[a, b], &[la, lb]);
        let ha = a.max_exps().unwrap();
        let hb = b.max_exps().unwrap();
        let qdeg = ((ha.0 - la.0).min(hb.0 - lb.0)) / dq;
        let tdeg = ((ha.1 - la.1).min(hb.1 - lb.1)) / dt;
        let layout = Layout { q0: (la.0, lb.0), t0: (la.1, lb.1), dq, dt, q_main: qdeg < tdeg };
        let da: ZB = layout.to_dense(&a.div_int_exact(&ca), 0);
        let db: ZB = layout.to_dense(&b.div_int_exact(&cb), 1);
        let g = zb_gcd(&da, &db);
        if g.len() == 1 && g[0].len() == 1 {
            (LaurentQT::one(), None, None)
        } else {
            let qa = zb_divexact(&da, &g).expect("gcd divides first input");
            let qb = zb_divexact(&db, &g).expect("gcd divides second input");
            (layout.to_laurent(&g, (0, 0)), Some(layout.to_laurent(&qa, la)), Some(layout.to_laurent(&qb, lb)))
        }
    };

    let mut g = core_g.scale(&cg).shift(mono.0, mono.1);
    let mut a_co = match a_co {
        Some(x) => x.scale(&(&ca / &cg)).shift(-mono.0, -mono.1),
        None => a.div_int_exact(&cg).shift(-mono.0, -mono.1),
    };
    let mut b_co = match b_co {
        Some(x) => x.scale(&(&cb / &cg)).shift(-mono.0, -mono.1),
        None => b.div_int_exact(&cg).shift(-mono.0, -mono.1),
    };
    if g.leading_grlex().is_some_and(|(_, c)| c.is_negative()) {
        g = g.neg();
        a_co = a_co.neg();
        b_co = b_co.neg();
    }
    (g, a_co, b_co)
}

fn normalize_sign(a: &LaurentQT) -> (LaurentQT, LaurentQT) {
    if a.leading_grlex().is_some_and(|(_, c)| c.is_negative()) {
        (a.neg(), LaurentQT::from_i64(-1))
    } else {
        (a.clone(), LaurentQT::one())
    }
}

/// Greatest common divisor of two polynomials in ℤ[q, t].
///
/// The result is a gcd over ℚ[q, t] scaled to be primitive over ℤ, with
/// positive leading coefficient in graded lexicographic order. The monomial
/// gcd of the inputs is kept. `gcd(0, 0) = 0`.
pub fn gcd_qt(a: &LaurentQT, b: &LaurentQT) -> LaurentQT {
    let (g, _, _) = gcd_cofactors(a, b);
    if g.is_zero() {
        return g;
    }
    let c = g.content();
    let c = if g.leading_grlex().is_some_and(|(_, x)| x.is_negative()) { -c } else { c };
    g.div_int_exact(&c)
}

/// Exact quotient `a / b` in ℤ[q^±, t^±], or `None` if `b` does not divide `a`.
pub fn div_exact(a: &LaurentQT, b: &LaurentQT) -> Option<LaurentQT> {
    if b.is_zero() {
        return None;
    }
    if a.is_zero() {
        return Some(LaurentQT::zero());
    }
    if b.is_monomial() {
        let ((bq, bt), bc) = &b.terms()[0];
        if !(a.content() % bc).is_zero() {
            return None;
        }
        return Some(a.div_int_exact(bc).shift(-bq, -bt));
    }
    let la = a.min_exps().unwrap();
    let lb = b.min_exps().unwrap();
    let (dq, dt) = exponent_gcd(&[a, b], &[la, lb]);
    let layout = Layout { q0: (la.0, lb.0), t0: (la.1, lb.1), dq, dt, q_main: false };
    let da = layout.to_dense(a, 0);
    let db = layout.to_dense(b, 1);
    let qd = zb_divexact(&da, &db)?;
    Some(layout.to_laurent(&qd, (la.0 - lb.0, la.1 - lb.1)))
}

/// Reference gcd by a primitive remainder sequence over ℤ[q][t].
///
/// Slow; kept to cross-check the modular algorithm in tests.
#[cfg(test)]
pub(crate) fn gcd_prs(a: &LaurentQT, b: &LaurentQT) -> LaurentQT {
    fn to_zb(a: &LaurentQT) -> ZB {
        let layout = Layout { q0: (0, 0), t0: (0, 0), dq: 1, dt: 1, q_main: false };
        layout.to_dense(a, 0)
    }
    fn prem(a: &ZB, b: &ZB) -> ZB {
        let mut r = a.clone();
        let db = b.len() - 1;
        let lc = b[db].clone();
        while r.len() > db {
            let dr = r.len() - 1;
            let rl = r[dr].clone();
            for row in r.iter_mut() {
                *row = zu_mul(row, &lc);
            }
            for (i, brow) in b.iter().enumerate() {
                let prod = zu_mul(&rl, brow);
                zu_sub_shifted(&mut r[dr - db + i], &prod, 0);
            }
            zb_trim(&mut r);
        }
        r
    }
    fn pp(a: &ZB) -> ZB {
        let c = zb_content(a);
        zb_div_minor(a, &c)
    }
    if a.is_zero() || b.is_zero() {
        return gcd_qt(a, b);
    }
    let mut x = pp(&to_zb(a));
    let mut y = pp(&to_zb(b));
    let cg = ugcd(&zb_content(&to_zb(a)), &zb_content(&to_zb(b)));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while y.len() > 1 {
        let r = prem(&x, &y);
        x = y;
        y = if r.is_empty() { Vec::new() } else { pp(&r) };
        if y.is_empty() {
            break;
        }
    }
    let core = if y.is_empty() { x } else { vec![vec![BigInt::one()]] };
    let g: ZB = core.iter().map(|r| if r.is_empty() { Vec::new() } else { zu_mul(r, &cg) }).collect();
    let layout = Layout { q0: (0, 0), t0: (0, 0), dq: 1, dt: 1, q_main: false };
    let g = layout.to_laurent(&g, (0, 0));
    let c = g.content();
    let c = if g.leading_grlex().is_some_and(|(_, x)| x.is_negative()) { -c } else { c };
    g.div_int_exact(&c)
}
