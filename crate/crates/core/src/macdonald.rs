//! Type A₁ Macdonald polynomials as eigenfunctions of `L = Y + Y⁻¹` on
//! symmetric Laurent polynomials, their sign twins, and Chebyshev families.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactalg::{LaurentX, RatQT, TSubst};

/// Symmetric Laurent polynomial `Σ c_k·m_k`, `m_0 = 1`, `m_k = X^k + X^-k`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymPoly {
    coeffs: BTreeMap<usize, RatQT>,
}

impl SymPoly {
    pub fn zero() -> Self {
        SymPoly { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::m(0)
    }

    /// The basis element `m_k`.
    pub fn m(k: usize) -> Self {
        Self::from_coeffs([(k, RatQT::one())])
    }

    pub fn from_coeffs<I: IntoIterator<Item = (usize, RatQT)>>(it: I) -> Self {
        let mut s = SymPoly::zero();
        for (k, c) in it {
            s.add_term(k, &c);
        }
        s
    }

    fn add_term(&mut self, k: usize, c: &RatQT) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(k).or_default();
        *e = e.add(c);
        if e.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn coeff(&self, k: usize) -> RatQT {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> impl DoubleEndedIterator<Item = (usize, &RatQT)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in &o.coeffs {
            r.add_term(*k, c);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&RatQT::from_i64(-1)))
    }

    pub fn scale(&self, c: &RatQT) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SymPoly { coeffs: self.coeffs.iter().map(|(k, x)| (*k, x.mul(c))).collect() }
    }

    /// `Σ c_i·f_i` with one reduction per output coefficient.
    pub fn lincomb<'a, I: IntoIterator<Item = (&'a RatQT, &'a SymPoly)>>(items: I) -> Self {
        let mut buckets: BTreeMap<usize, Vec<RatQT>> = BTreeMap::new();
        for (c, f) in items {
            for (k, x) in &f.coeffs {
                buckets.entry(*k).or_default().push(c.mul(x));
            }
        }
        SymPoly::from_coeffs(buckets.into_iter().map(|(k, v)| (k, RatQT::sum(v.iter()))))
    }

    pub fn to_laurent_x(&self) -> LaurentX {
        let mut terms = Vec::new();
        for (k, c) in &self.coeffs {
            if *k == 0 {
                terms.push((0, c.clone()));
            } else {
                terms.push((*k as i64, c.clone()));
                terms.push((-(*k as i64), c.clone()));
            }
        }
        LaurentX::from_terms(terms)
    }

    pub fn from_laurent_x(v: &LaurentX) -> Result<Self> {
        if !v.is_symmetric() {
            return Err(Error::Internal(format!("expected a symmetric Laurent polynomial, got {v}")));
        }
        Ok(SymPoly::from_coeffs(v.terms().filter(|(k, _)| *k >= 0).map(|(k, c)| (k as usize, c.clone()))))
    }

    pub fn specialize_t(&self, rule: TSubst) -> Result<Self> {
        let mut out = SymPoly::zero();
        for (k, c) in &self.coeffs {
            out.add_term(*k, &c.specialize_t(rule)?);
        }
        Ok(out)
    }

    /// Evaluates `f(x)` with `X = point`.
    pub fn eval_at(&self, point: &RatQT) -> Result<RatQT> {
        self.to_laurent_x().eval_at(point)
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(k, c)| match (k, c.is_one()) {
                (0, _) => format!("({c})"),
                (_, true) => format!("m{k}"),
                _ => format!("({c})*m{k}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymPoly({self})")
    }
}

/// Power-basis coefficients of `S_n(u)`: `S_{-1} = 0`, `S_0 = 1`,
/// `S_{n+1} = u·S_n − S_{n−1}`.
pub fn chebyshev_s(n: i64) -> Vec<BigInt> {
    assert!(n >= -1, "S_n needs n >= -1");
    chebyshev(n + 1, vec![], vec![BigInt::from(1)])
}

/// Power-basis coefficients of `T_n(x)`: `T_0 = 2`, `T_1 = x`.
pub fn chebyshev_t(n: i64) -> Vec<BigInt> {
    assert!(n >= 0, "T_n needs n >= 0");
    chebyshev(n, vec![BigInt::from(2)], vec![BigInt::from(0), BigInt::from(1)])
}

/// Runs the three-term recursion `steps` times from `(a, b)` and returns `a`.
fn chebyshev(steps: i64, a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    let (mut a, mut b) = (a, b);
    for _ in 0..steps {
        let mut next = vec![BigInt::from(0); b.len() + 1];
        for (i, c) in b.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in a.iter().enumerate() {
            next[i] -= c;
        }
        while next.last().is_some_and(|c| *c == BigInt::from(0)) {
            next.pop();
        }
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Evaluates a power-basis polynomial at `x = X + X⁻¹`.
pub fn power_basis_to_sym(coeffs: &[BigInt]) -> SymPoly {
    let x = SymPoly::m(1).to_laurent_x();
    let mut acc = LaurentX::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(&x).add(&LaurentX::constant(RatQT::from_bigint(c.clone())));
    }
    SymPoly::from_laurent_x(&acc).expect("polynomials in x are symmetric")
}

/// `S_n(X + X⁻¹) = X^n + X^(n−2) + ⋯ + X^-n`.
pub fn chebyshev_s_sym(n: usize) -> SymPoly {
    SymPoly::from_coeffs((0..=n).filter(|k| (n - k).is_multiple_of(2)).map(|k| (k, RatQT::one())))
}

/// `λ_n = t·q^(2n) + t⁻¹·q^(−2n)`.
pub fn eigenvalue(n: usize) -> RatQT {
    let n = n as i64;
    RatQT::monomial(1, 2 * n, 1).add(&RatQT::monomial(1, -2 * n, -1))
}

/// The Macdonald operator by its difference-operator formula
/// `((tX⁻¹ − t⁻¹X)·ŷ + (t⁻¹X⁻¹ − tX)·ŷ⁻¹)/(X⁻¹ − X)`.
pub fn macdonald_operator_x(f: &LaurentX) -> Result<LaurentX> {
    let a = LaurentX::from_terms([(-1, RatQT::t()), (1, RatQT::monomial(-1, 0, -1))]);
    let b = LaurentX::from_terms([(-1, RatQT::monomial(1, 0, -1)), (1, RatQT::monomial(-1, 0, 1))]);
    let num = a.mul(&f.y_hat(1)).add(&b.mul(&f.y_hat(-1)));
    let den = LaurentX::from_terms([(-1, RatQT::one()), (1, RatQT::from_i64(-1))]);
    let r = LaurentX::exact_divide(&num, &den).map_err(|e| Error::Internal(format!("Macdonald operator: {e}")))?;
    if !r.is_symmetric() {
        return Err(Error::Internal(format!("Macdonald operator produced asymmetric {r}")));
    }
    Ok(r)
}

pub fn macdonald_operator(f: &SymPoly) -> Result<SymPoly> {
    SymPoly::from_laurent_x(&macdonald_operator_x(&f.to_laurent_x())?)
}

type Cache = Mutex<HashMap<(usize, bool), SymPoly>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cache_limit() -> usize {
    std::env::var("DAHAKNOT_CACHE_LIMIT").ok().and_then(|v| v.parse().ok()).unwrap_or(256)
}

fn cached(key: (usize, bool), fill: impl FnOnce() -> Result<SymPoly>) -> Result<SymPoly> {
    if let Some(p) = cache().lock().unwrap_or_else(|e| e.into_inner()).get(&key) {
        return Ok(p.clone());
    }
    let p = fill()?;
    let mut guard = cache().lock().unwrap_or_else(|e| e.into_inner());
    if guard.len() < cache_limit() {
        guard.entry(key).or_insert_with(|| p.clone());
    }
    Ok(p)
}

/// Column `k` of the matrix of `L` in the m-basis, restricted to `m_j`, `j ≤ k`.
fn operator_column(k: usize) -> Result<SymPoly> {
    macdonald_operator(&SymPoly::m(k))
}

/// `p_n`, the monic Macdonald polynomial, by back-substitution in the
/// triangular action of `L` on the m-basis.
pub fn macdonald_poly(n: usize) -> Result<SymPoly> {
    cached((n, false), || {
        let lam_n = eigenvalue(n);
        let cols: Vec<Option<SymPoly>> = (0..=n)
            .map(|k| if (n - k).is_multiple_of(2) { operator_column(k).map(Some) } else { Ok(None) })
            .collect::<Result<_>>()?;
        let mut a: BTreeMap<usize, RatQT> = BTreeMap::new();
        a.insert(n, RatQT::one());
        for j in (0..n).rev().filter(|j| (n - j).is_multiple_of(2)) {
            let terms: Vec<RatQT> = a.iter().map(|(k, ak)| cols[*k].as_ref().unwrap().coeff(j).mul(ak)).collect();
            let s = RatQT::sum(terms.iter());
            let pivot = eigenvalue(j).sub(&lam_n);
            a.insert(j, s.neg().div(&pivot)?);
        }
        Ok(SymPoly::from_coeffs(a))
    })
}

/// `p_n⁻(x; q, t) = p_n(x; q, −q²t⁻¹)`, the `y`-eigenbasis of `𝐞P⁻` once
/// multiplied by `δ_t`. Substituting `t ↦ −t⁻¹` instead does not give
/// eigenvectors from `n = 2` on.
pub fn sign_macdonald_poly(n: usize) -> Result<SymPoly> {
    cached((n, true), || macdonald_poly(n)?.specialize_t(TSubst::MinusQ2OverT))
}

/// Coefficients `c_n` with `f = Σ c_n·p_n`.
pub fn expand_in_macdonald(f: &SymPoly) -> Result<BTreeMap<usize, RatQT>> {
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while let Some(d) = rest.degree() {
        let c = rest.coeff(d);
        let p = macdonald_poly(d)?;
        rest = rest.sub(&p.scale(&c));
        out.insert(d, c);
    }
    Ok(out)
}

/// `Σ c_n·p_n`.
pub fn reconstruct(coeffs: &BTreeMap<usize, RatQT>) -> Result<SymPoly> {
    let ps: Vec<(RatQT, SymPoly)> =
        coeffs.iter().map(|(n, c)| Ok((c.clone(), macdonald_poly(*n)?))).collect::<Result<_>>()?;
    Ok(SymPoly::lincomb(ps.iter().map(|(c, p)| (c, p))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_ratqt as rq;
    use crate::hword::y_word;
    use crate::polyrep::{act, RepFlavor};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn chebyshev_examples() {
        assert_eq!(chebyshev_s(0), ints(&[1]));
        assert_eq!(chebyshev_s(2), ints(&[-1, 0, 1]));
        assert!(chebyshev_s(-1).is_empty());
        assert_eq!(chebyshev_t(0), ints(&[2]));
        assert_eq!(chebyshev_t(1), ints(&[0, 1]));
        assert_eq!(chebyshev_t(3), ints(&[0, -3, 0, 1]));
        for n in 0..7 {
            assert_eq!(power_basis_to_sym(&chebyshev_s(n as i64)), chebyshev_s_sym(n));
        }
        assert_eq!(power_basis_to_sym(&chebyshev_t(4)), SymPoly::m(4));
    }

    #[test]
    fn operator_examples() {
        assert_eq!(macdonald_operator(&SymPoly::one()).unwrap(), SymPoly::one().scale(&rq("t + 1/t")));
        let l1 = macdonald_operator(&SymPoly::m(1)).unwrap();
        assert_eq!(l1.coeff(1), eigenvalue(1));
        assert_eq!(l1.degree(), Some(1));
    }

    #[test]
    fn low_polynomials() {
        assert_eq!(macdonald_poly(0).unwrap(), SymPoly::one());
        assert_eq!(macdonald_poly(1).unwrap(), SymPoly::m(1));
        let p2 = SymPoly::m(2).add(&SymPoly::one().scale(&rq("(1-t^2)*(1+q^4)/(1-t^2*q^4)")));
        assert_eq!(macdonald_poly(2).unwrap(), p2);
        let s2 = SymPoly::m(2).add(&SymPoly::one().scale(&rq("(1-q^4*t^-2)*(1+q^4)/(1-q^8*t^-2)")));
        assert_eq!(sign_macdonald_poly(2).unwrap(), s2);
        assert_eq!(sign_macdonald_poly(0).unwrap(), SymPoly::one());
    }

    #[test]
    fn sign_polynomials_are_eigenvectors_on_delta() {
        use crate::hword::y_word;
        use crate::polyrep::{act, delta_t, RepFlavor};
        for n in 0..=4 {
            let v = sign_macdonald_poly(n).unwrap().to_laurent_x().mul(&delta_t());
            let w = act(&y_word(), &v, RepFlavor::Sign).unwrap();
            let lam = RatQT::monomial(-1, -2 * (n as i64 + 1), 1).sub(&RatQT::monomial(1, 2 * (n as i64 + 1), -1));
            assert_eq!(w, v.scale(&lam), "n = {n}");
        }
    }

    #[test]
    fn sign_at_one_is_chebyshev() {
        for n in 0..=4 {
            let a = sign_macdonald_poly(n).unwrap().specialize_t(TSubst::One).unwrap();
            assert_eq!(a, chebyshev_s_sym(n));
        }
    }

    #[test]
    fn eigen_relations_and_shape() {
        for n in 0..=8 {
            let p = macdonald_poly(n).unwrap();
            assert_eq!(macdonald_operator(&p).unwrap(), p.scale(&eigenvalue(n)), "n = {n}");
            assert_eq!(p.degree(), Some(n));
            assert!(p.coeff(n).is_one());
            assert!(p.coeffs().all(|(k, _)| (n - k) % 2 == 0));
        }
    }

    #[test]
    fn two_operator_implementations_agree() {
        for k in 0..=8 {
            let f = SymPoly::m(k);
            let via_words = act(&y_word(), &f.to_laurent_x(), RepFlavor::Standard).unwrap();
            assert_eq!(via_words, macdonald_operator(&f).unwrap().to_laurent_x(), "k = {k}");
        }
    }

    #[test]
    fn specialize_to_chebyshev() {
        for n in 0..=8 {
            let p = macdonald_poly(n).unwrap().specialize_t(TSubst::MinusQ2).unwrap();
            assert_eq!(p, chebyshev_s_sym(n), "n = {n}");
        }
    }

    #[test]
    fn expansion_examples() {
        let p3 = macdonald_poly(3).unwrap();
        let e = expand_in_macdonald(&p3).unwrap();
        assert_eq!(e.len(), 1);
        assert!(e[&3].is_one());
        let e2 = expand_in_macdonald(&SymPoly::m(2)).unwrap();
        assert!(e2[&2].is_one());
        assert_eq!(e2[&0], rq("-(1-t^2)*(1+q^4)/(1-t^2*q^4)"));
        assert!(expand_in_macdonald(&SymPoly::zero()).unwrap().is_empty());
    }
}
