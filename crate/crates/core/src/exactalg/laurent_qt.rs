use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(q, t)`.
pub type Mono = (i64, i64);

/// Sparse Laurent polynomial in `q` and `t` with integer coefficients.
///
/// Terms are kept sorted ascending by `(q, t)` exponent with no zero
/// coefficients, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentQT {
    terms: Vec<(Mono, BigInt)>,
}

impl LaurentQT {
    pub fn zero() -> Self {
        LaurentQT { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }

    pub fn monomial(c: BigInt, qe: i64, te: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentQT { terms: vec![((qe, te), c)] }
        }
    }

    pub fn q() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Mono, BigInt)>>(it: I) -> Self {
        let mut v: Vec<(Mono, BigInt)> = it.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.sort_by_key(|a| a.0);
        Self::from_sorted_with_dups(v)
    }

    fn from_sorted_with_dups(v: Vec<(Mono, BigInt)>) -> Self {
        let mut out: Vec<(Mono, BigInt)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        LaurentQT { terms: out }
    }

    pub fn terms(&self) -> &[(Mono, BigInt)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Mono, BigInt)> {
        self.terms
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

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    /// True for a nonzero constant or zero.
    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == (0, 0))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        if self.terms.is_empty() {
            Some(BigInt::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn coeff(&self, qe: i64, te: i64) -> BigInt {
        match self.terms.binary_search_by(|(m, _)| m.cmp(&(qe, te))) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn has_t(&self) -> bool {
        self.terms.iter().any(|((_, te), _)| *te != 0)
    }

    /// Componentwise minimum exponents, `None` for zero.
    pub fn min_exps(&self) -> Option<Mono> {
        let mut it = self.terms.iter();
        let first = it.next()?.0;
        Some(it.fold(first, |(a, b), ((q, t), _)| (a.min(*q), b.min(*t))))
    }

    /// Componentwise maximum exponents, `None` for zero.
    pub fn max_exps(&self) -> Option<Mono> {
        let mut it = self.terms.iter();
        let first = it.next()?.0;
        Some(it.fold(first, |(a, b), ((q, t), _)| (a.max(*q), b.max(*t))))
    }

    /// Leading term under graded lexicographic order with `q > t`.
    pub fn leading_grlex(&self) -> Option<(Mono, &BigInt)> {
        self.terms.iter().max_by(|(a, _), (b, _)| grlex_cmp(*a, *b)).map(|(m, c)| (*m, c))
    }

    /// Non-negative gcd of all coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn neg(&self) -> Self {
        LaurentQT { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { other.neg() } else { other.clone() };
        }
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for (m, c) in &b[j..] {
            out.push((*m, if negate { -c } else { c.clone() }));
        }
        LaurentQT { terms: out }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        LaurentQT { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    /// Divides every coefficient by `c`, which must divide them all.
    pub fn div_int_exact(&self, c: &BigInt) -> Self {
        if c.is_one() {
            return self.clone();
        }
        LaurentQT {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| {
                    debug_assert!((x % c).is_zero());
                    (*m, x / c)
                })
                .collect(),
        }
    }

    pub fn shift(&self, qe: i64, te: i64) -> Self {
        if qe == 0 && te == 0 {
            return self.clone();
        }
        LaurentQT { terms: self.terms.iter().map(|((a, b), c)| ((a + qe, b + te), c.clone())).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            let ((qe, te), c) = &self.terms[0];
            return other.shift(*qe, *te).scale(c);
        }
        if other.terms.len() == 1 {
            let ((qe, te), c) = &other.terms[0];
            return self.shift(*qe, *te).scale(c);
        }
        let (alo, ahi) = (self.min_exps().unwrap(), self.max_exps().unwrap());
        let (blo, bhi) = (other.min_exps().unwrap(), other.max_exps().unwrap());
        let q0 = alo.0 + blo.0;
        let t0 = alo.1 + blo.1;
        let wq = (ahi.0 + bhi.0 - q0 + 1) as u128;
        let wt = (ahi.1 + bhi.1 - t0 + 1) as u128;
        let area = wq * wt;
        let pairs = (self.terms.len() as u128) * (other.terms.len() as u128);
        if area <= 4 * pairs + 1024 {
            let wt = wt as usize;
            let mut acc: Vec<BigInt> = vec![BigInt::zero(); area as usize];
            for ((aq, at), ac) in &self.terms {
                for ((bq, bt), bc) in &other.terms {
                    let idx = ((aq + bq - q0) as usize) * wt + (at + bt - t0) as usize;
                    acc[idx] += ac * bc;
                }
            }
            let mut out = Vec::new();
            for (idx, c) in acc.into_iter().enumerate() {
                if !c.is_zero() {
                    let qe = (idx / wt) as i64 + q0;
                    let te = (idx % wt) as i64 + t0;
                    out.push(((qe, te), c));
                }
            }
            LaurentQT { terms: out }
        } else {
            let mut acc: HashMap<Mono, BigInt> = HashMap::new();
            for ((aq, at), ac) in &self.terms {
                for ((bq, bt), bc) in &other.terms {
                    *acc.entry((aq + bq, at + bt)).or_default() += ac * bc;
                }
            }
            Self::from_terms(acc)
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Applies `q^a t^b ↦ sign^b q^(a + alpha*b) t^(beta*b)`.
    pub fn subst_t_monomial(&self, sign: i64, alpha: i64, beta: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|((a, b), c)| {
            let neg = sign < 0 && b.rem_euclid(2) == 1;
            ((a + alpha * b, beta * b), if neg { -c } else { c.clone() })
        }))
    }

    /// Applies `q ↦ q^-1`, `t ↦ t^-1`.
    pub fn invert_vars(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|((a, b), c)| ((-a, -b), c.clone())))
    }

    pub fn to_string_with(&self, f: &mut impl fmt::Write) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((qe, te), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || (*qe == 0 && *te == 0) {
                parts.push(abs.to_string());
            }
            for (name, e) in [("q", *qe), ("t", *te)] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    _ => parts.push(format!("{name}^{e}")),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

/// Graded lexicographic comparison with `q > t`.
pub fn grlex_cmp(a: Mono, b: Mono) -> Ordering {
    (a.0 + a.1).cmp(&(b.0 + b.1)).then(a.0.cmp(&b.0))
}

impl fmt::Display for LaurentQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_string_with(f)
    }
}

impl fmt::Debug for LaurentQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentQT({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64, i64)]) -> LaurentQT {
        LaurentQT::from_terms(terms.iter().map(|&(a, b, c)| ((a, b), BigInt::from(c))))
    }

    #[test]
    fn merge_and_cancel() {
        let a = p(&[(0, 0, 1), (1, 0, 2)]);
        let b = p(&[(1, 0, -2), (2, 1, 5)]);
        assert_eq!(a.add(&b), p(&[(0, 0, 1), (2, 1, 5)]));
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn dense_and_sparse_products_agree() {
        let a = p(&[(0, 0, 1), (1, 0, -1), (0, 3, 2)]);
        let b = p(&[(0, 0, 1), (1, 0, 1)]);
        assert_eq!(a.mul(&b), p(&[(0, 0, 1), (2, 0, -1), (0, 3, 2), (1, 3, 2)]));
        let far = p(&[(0, 0, 1), (400, 0, 1)]);
        let far2 = p(&[(0, 0, 1), (0, 400, -1)]);
        assert_eq!(far.mul(&far2), p(&[(0, 0, 1), (400, 0, 1), (0, 400, -1), (400, 400, -1)]));
    }

    #[test]
    fn display_format() {
        let a = p(&[(-2, 4, -3), (0, 0, 1), (1, 0, 1)]);
        assert_eq!(a.to_string(), "-3*q^-2*t^4 + 1 + q");
    }

    #[test]
    fn substitution_signs() {
        // t -> -q^2 on t^3 gives -q^6
        assert_eq!(p(&[(0, 3, 1)]).subst_t_monomial(-1, 2, 0), p(&[(6, 0, -1)]));
        assert_eq!(p(&[(1, -2, 1)]).subst_t_monomial(-1, 0, -1), p(&[(1, 2, 1)]));
    }
}
