use std::collections::BTreeMap;
use std::fmt;

use super::ratqt::{RatQT, TSubst};
use crate::error::{Error, Result};

/// Laurent polynomial in `X` with coefficients in ℚ(q, t).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentX {
    terms: BTreeMap<i64, RatQT>,
}

impl LaurentX {
    pub fn zero() -> Self {
        LaurentX { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(RatQT::one())
    }

    pub fn constant(c: RatQT) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(k: i64, c: RatQT) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LaurentX { terms }
    }

    /// `X^k`.
    pub fn x_pow(k: i64) -> Self {
        Self::monomial(k, RatQT::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, RatQT)>>(it: I) -> Self {
        let mut v = LaurentX::zero();
        for (k, c) in it {
            v.add_term(k, &c);
        }
        v
    }

    fn add_term(&mut self, k: i64, c: &RatQT) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(x) => {
                let s = x.add(c);
                if s.is_zero() {
                    self.terms.remove(&k);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &RatQT)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: i64) -> RatQT {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn min_deg(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_deg(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn as_monomial(&self) -> Option<(i64, RatQT)> {
        if self.terms.len() == 1 {
            let (k, c) = self.terms.iter().next().unwrap();
            Some((*k, c.clone()))
        } else {
            None
        }
    }

    /// True when every coefficient is an integer Laurent polynomial in `q`, `t`.
    pub fn has_laurent_coeffs(&self) -> bool {
        self.terms.values().all(RatQT::is_laurent)
    }

    pub fn neg(&self) -> Self {
        LaurentX { terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(*k, c);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(*k, &c.neg());
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut buckets: BTreeMap<i64, Vec<RatQT>> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                buckets.entry(a + b).or_default().push(ca.mul(cb));
            }
        }
        Self::from_buckets(buckets)
    }

    fn from_buckets(buckets: BTreeMap<i64, Vec<RatQT>>) -> Self {
        let terms = buckets
            .into_iter()
            .filter_map(|(k, v)| {
                let s = RatQT::sum(v.iter());
                (!s.is_zero()).then_some((k, s))
            })
            .collect();
        LaurentX { terms }
    }

    /// `Σ c_i·v_i`, reducing each output coefficient once.
    pub fn lincomb<'a, I: IntoIterator<Item = (&'a RatQT, &'a LaurentX)>>(items: I) -> Self {
        let mut buckets: BTreeMap<i64, Vec<RatQT>> = BTreeMap::new();
        for (c, v) in items {
            if c.is_zero() {
                continue;
            }
            for (k, x) in &v.terms {
                buckets.entry(*k).or_default().push(if c.is_one() { x.clone() } else { c.mul(x) });
            }
        }
        Self::from_buckets(buckets)
    }

    pub fn scale(&self, c: &RatQT) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        LaurentX { terms: self.terms.iter().map(|(k, x)| (*k, x.mul(c))).collect() }
    }

    /// Multiplies by `X^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentX { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// `f(X) ↦ f(X⁻¹)`.
    pub fn s_hat(&self) -> Self {
        LaurentX { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// `f(X) ↦ f(q^(-2j)·X)`.
    pub fn y_hat(&self, j: i64) -> Self {
        LaurentX { terms: self.terms.iter().map(|(e, c)| (*e, c.mul_monomial(-2 * j * e, 0))).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(k, c)| self.terms.get(&-k) == Some(c))
    }

    /// Substitutes `X = point`.
    pub fn eval_at(&self, point: &RatQT) -> Result<RatQT> {
        let mut parts = Vec::with_capacity(self.terms.len());
        for (k, c) in &self.terms {
            parts.push(c.mul(&point.pow(*k)?));
        }
        Ok(RatQT::sum(parts.iter()))
    }

    pub fn specialize_t(&self, rule: TSubst) -> Result<Self> {
        let mut out = LaurentX::zero();
        for (k, c) in &self.terms {
            out.add_term(*k, &c.specialize_t(rule)?);
        }
        Ok(out)
    }

    /// Exact quotient `(self) / (X² − 1)`.
    pub fn div_x2_minus_1(&self) -> Result<Self> {
        let (lo, hi) = match (self.min_deg(), self.max_deg()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Ok(Self::zero()),
        };
        let mut rem: BTreeMap<i64, RatQT> = self.terms.clone();
        let mut quot = BTreeMap::new();
        let mut k = hi;
        while k >= lo + 2 {
            if let Some(c) = rem.remove(&k) {
                let low = rem.entry(k - 2).or_default();
                *low = low.add(&c);
                if low.is_zero() {
                    rem.remove(&(k - 2));
                }
                quot.insert(k - 2, c);
            }
            k -= 1;
        }
        if !rem.is_empty() {
            return Err(Error::NonExactDivision { remainder: LaurentX { terms: rem }.to_string() });
        }
        Ok(LaurentX { terms: quot })
    }

    /// Exact division in ℚ(q, t)[X^±1].
    pub fn exact_divide(f: &Self, g: &Self) -> Result<Self> {
        let (glo, ghi) = match (g.min_deg(), g.max_deg()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::DivisionByZero),
        };
        if f.is_zero() {
            return Ok(Self::zero());
        }
        let glc_inv = g.terms[&ghi].inv()?;
        let mut rem = f.clone();
        let mut quot = LaurentX::zero();
        let flo = f.min_deg().unwrap();
        while let Some(top) = rem.max_deg() {
            if top - ghi < flo - glo {
                break;
            }
            let c = rem.terms[&top].mul(&glc_inv);
            let e = top - ghi;
            rem = rem.sub(&g.shift(e).scale(&c));
            quot.add_term(e, &c);
        }
        if !rem.is_zero() {
            return Err(Error::NonExactDivision { remainder: rem.to_string() });
        }
        Ok(quot)
    }
}

impl fmt::Display for LaurentX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let xs = match k {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{k}"),
            };
            if xs.is_empty() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                f.write_str(&xs)?;
            } else {
                write!(f, "({c})*{xs}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentX({self})")
    }
}
