use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent_qt::LaurentQT;
use super::ratqt::RatQT;
use crate::error::{Error, Result};

/// Laurent polynomial in `q` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentQ {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentQ {
    pub fn zero() -> Self {
        LaurentQ { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0)
    }

    pub fn monomial(c: BigRational, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentQ { terms }
    }

    pub fn from_int_terms<I: IntoIterator<Item = (i64, i64)>>(it: I) -> Self {
        let mut out = LaurentQ::zero();
        for (e, c) in it {
            out.add_term(e, &BigRational::from_integer(BigInt::from(c)));
        }
        out
    }

    pub fn add_term(&mut self, e: i64, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> BigRational {
        self.terms.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_deg(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_deg(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn neg(&self) -> Self {
        LaurentQ { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, c);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = LaurentQ::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                r.add_term(a + b, &(ca * cb));
            }
        }
        r
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentQ { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentQ { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// `q ↦ q⁻¹`.
    pub fn mirror(&self) -> Self {
        LaurentQ { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Exact quotient, `None` if the division leaves a remainder.
    pub fn div_exact(&self, g: &Self) -> Option<Self> {
        let (glo, ghi) = (g.min_deg()?, g.max_deg()?);
        let glc = g.terms[&ghi].clone();
        let mut rem = self.clone();
        let mut quot = LaurentQ::zero();
        let flo = match self.min_deg() {
            Some(x) => x,
            None => return Some(Self::zero()),
        };
        while let Some(top) = rem.max_deg() {
            let e = top - ghi;
            if e < flo - glo {
                return None;
            }
            let c = &rem.terms[&top] / &glc;
            rem = rem.sub(&g.shift(e).scale(&c));
            quot.add_term(e, &c);
        }
        Some(quot)
    }

    /// Converts a `t`-free rational function whose denominator is a constant.
    pub fn from_ratqt(v: &RatQT) -> Result<Self> {
        if v.has_t() {
            return Err(Error::NotLaurent(format!("{v} depends on t")));
        }
        let d = v.den().as_constant().ok_or_else(|| Error::NotLaurent(v.to_string()))?;
        let mut out = LaurentQ::zero();
        for ((qe, _), c) in v.num().terms() {
            out.add_term(*qe, &BigRational::new(c.clone(), d.clone()));
        }
        Ok(out)
    }

    pub fn to_ratqt(&self) -> RatQT {
        let parts: Vec<RatQT> = self.terms.iter().map(|(e, c)| RatQT::from_bigrat(c).mul_monomial(*e, 0)).collect();
        RatQT::sum(parts.iter())
    }

    /// Integer coefficients as a `LaurentQT`, if they are all integral.
    pub fn to_laurent_qt(&self) -> Option<LaurentQT> {
        let mut terms = Vec::new();
        for (e, c) in &self.terms {
            if !c.is_integer() {
                return None;
            }
            terms.push(((*e, 0), c.to_integer()));
        }
        Some(LaurentQT::from_terms(terms))
    }
}

/// Finds `(σ, k)` with `f = σ·q^k·g` and `σ = ±1`.
pub fn monomial_ratio(f: &LaurentQ, g: &LaurentQ) -> Option<(i32, i64)> {
    let (flo, glo) = (f.min_deg()?, g.min_deg()?);
    if f.len() != g.len() {
        return None;
    }
    let ratio = &f.terms[&flo] / &g.terms[&glo];
    let sign = if ratio.is_one() {
        1
    } else if (-&ratio).is_one() {
        -1
    } else {
        return None;
    };
    let k = flo - glo;
    let scaled = g.shift(k).scale(&BigRational::from_integer(BigInt::from(sign)));
    (scaled == *f).then_some((sign, k))
}

impl fmt::Display for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let cs = if abs.is_integer() { abs.to_integer().to_string() } else { format!("({abs})") };
            match (abs.is_one(), *e) {
                (_, 0) => f.write_str(&cs)?,
                (true, 1) => f.write_str("q")?,
                (true, _) => write!(f, "q^{e}")?,
                (false, 1) => write!(f, "{cs}*q")?,
                (false, _) => write!(f, "{cs}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentQ({self})")
    }
}
