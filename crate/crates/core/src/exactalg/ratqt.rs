use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gcd::{div_exact, gcd_cofactors};
use super::laurent_qt::LaurentQT;
use crate::error::{Error, Result};

/// The four substitutions for `t` used by the specialization maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TSubst {
    /// `t ↦ −q²`
    MinusQ2,
    /// `t ↦ −q²·t⁻¹`
    MinusQ2OverT,
    /// `t ↦ 1`
    One,
    /// `t ↦ −t⁻¹`
    MinusInvT,
}

impl TSubst {
    /// `(sign, alpha, beta)` with `t ↦ sign·q^alpha·t^beta`.
    fn params(self) -> (i64, i64, i64) {
        match self {
            TSubst::MinusQ2 => (-1, 2, 0),
            TSubst::MinusQ2OverT => (-1, 2, -1),
            TSubst::One => (1, 0, 0),
            TSubst::MinusInvT => (-1, 0, -1),
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            TSubst::MinusQ2 => "t -> -q^2",
            TSubst::MinusQ2OverT => "t -> -q^2/t",
            TSubst::One => "t -> 1",
            TSubst::MinusInvT => "t -> -1/t",
        }
    }
}

/// Element of ℚ(q, t) stored as a reduced fraction `num / den`.
///
/// `num` is an integer Laurent polynomial, `den` an integer polynomial with no
/// monomial factor, coprime to `num` over ℤ[q, t] (contents included), with
/// positive leading coefficient in graded lex order. Rational constants sit
/// in `den`, so `1/2` is stored as `1 / 2`. This form is unique, so derived
/// equality and hashing are value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatQT {
    num: LaurentQT,
    den: LaurentQT,
}

impl Default for RatQT {
    fn default() -> Self {
        Self::zero()
    }
}

/// Gcd with cofactors for a Laurent `x` and a polynomial `y` without monomial
/// factor; the gcd returned has no monomial factor either.
fn gcd3(x: &LaurentQT, y: &LaurentQT) -> (LaurentQT, LaurentQT, LaurentQT) {
    let (xq, xt) = x.min_exps().unwrap_or((0, 0));
    let (yq, yt) = y.min_exps().unwrap_or((0, 0));
    let (g, a, b) = gcd_cofactors(&x.shift(-xq, -xt), &y.shift(-yq, -yt));
    (g, a.shift(xq, xt), b.shift(yq, yt))
}

impl RatQT {
    pub fn zero() -> Self {
        RatQT { num: LaurentQT::zero(), den: LaurentQT::one() }
    }

    pub fn one() -> Self {
        RatQT { num: LaurentQT::one(), den: LaurentQT::one() }
    }

    pub fn from_i64(c: i64) -> Self {
        Self::from_laurent(LaurentQT::from_i64(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Self::from_laurent(LaurentQT::constant(c))
    }

    pub fn from_bigrat(c: &BigRational) -> Self {
        Self::new(LaurentQT::constant(c.numer().clone()), LaurentQT::constant(c.denom().clone()))
            .expect("rational has nonzero denominator")
    }

    pub fn from_laurent(num: LaurentQT) -> Self {
        RatQT { num, den: LaurentQT::one() }
    }

    /// `c·q^qe·t^te`.
    pub fn monomial(c: i64, qe: i64, te: i64) -> Self {
        Self::from_laurent(LaurentQT::monomial(BigInt::from(c), qe, te))
    }

    pub fn q() -> Self {
        Self::from_laurent(LaurentQT::q())
    }

    pub fn t() -> Self {
        Self::from_laurent(LaurentQT::t())
    }

    /// Builds and canonicalizes `num / den`.
    pub fn new(num: LaurentQT, den: LaurentQT) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: LaurentQT, den: LaurentQT) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let (dq, dt) = den.min_exps().unwrap();
        let num = num.shift(-dq, -dt);
        let den = den.shift(-dq, -dt);
        let (mut num, mut den) = if den.is_constant() {
            let d = den.as_constant().unwrap();
            let g = num.content().gcd(&d);
            (num.div_int_exact(&g), den.div_int_exact(&g))
        } else {
            let (_, n, d) = gcd3(&num, &den);
            (n, d)
        };
        if den.leading_grlex().is_some_and(|(_, c)| c.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        RatQT { num, den }
    }

    pub fn num(&self) -> &LaurentQT {
        &self.num
    }

    pub fn den(&self) -> &LaurentQT {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1, i.e. the value is a Laurent polynomial
    /// with integer coefficients.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentQT> {
        self.is_laurent().then_some(&self.num)
    }

    pub fn has_t(&self) -> bool {
        self.num.has_t() || self.den.has_t()
    }

    pub fn neg(&self) -> Self {
        RatQT { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_laurent(self.num.add(&other.num));
        }
        if self.den == other.den {
            return Self::reduce(self.num.add(&other.num), self.den.clone());
        }
        if self.den.is_one() {
            return RatQT { num: self.num.mul(&other.den).add(&other.num), den: other.den.clone() };
        }
        if other.den.is_one() {
            return RatQT { num: other.num.mul(&self.den).add(&self.num), den: self.den.clone() };
        }
        let (g, b1, d1) = gcd3(&self.den, &other.den);
        let t = self.num.mul(&d1).add(&other.num.mul(&b1));
        if t.is_zero() {
            return Self::zero();
        }
        if g.is_one() {
            return RatQT { num: t, den: self.den.mul(&other.den) };
        }
        // g = gcd(t, g)·g_rest, den = b1·d1·g_rest
        let (_, t2, g_rest) = gcd3(&t, &g);
        Self::fix_sign(t2, b1.mul(&d1).mul(&g_rest))
    }

    fn fix_sign(num: LaurentQT, den: LaurentQT) -> Self {
        if den.leading_grlex().is_some_and(|(_, c)| c.is_negative()) {
            RatQT { num: num.neg(), den: den.neg() }
        } else {
            RatQT { num, den }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_laurent(self.num.mul(&other.num));
        }
        let (a, b) = (&self.num, &self.den);
        let (c, d) = (&other.num, &other.den);
        let (a1, d1) = if d.is_one() {
            (a.clone(), d.clone())
        } else {
            let (_, x, y) = gcd3(a, d);
            (x, y)
        };
        let (c1, b1) = if b.is_one() {
            (c.clone(), b.clone())
        } else {
            let (_, x, y) = gcd3(c, b);
            (x, y)
        };
        Self::fix_sign(a1.mul(&c1), b1.mul(&d1))
    }

    /// Multiplies by an integer Laurent polynomial.
    pub fn mul_laurent(&self, p: &LaurentQT) -> Self {
        self.mul(&Self::from_laurent(p.clone()))
    }

    /// Multiplies by `q^qe·t^te`; cheap because the form stays canonical.
    pub fn mul_monomial(&self, qe: i64, te: i64) -> Self {
        RatQT { num: self.num.shift(qe, te), den: self.den.clone() }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.mul(&Self::from_i64(c))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (nq, nt) = self.num.min_exps().unwrap();
        let num = self.den.shift(-nq, -nt);
        let den = self.num.shift(-nq, -nt);
        Ok(Self::fix_sign(num, den))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs();
        let e32 = u32::try_from(e).map_err(|_| Error::Internal("exponent too large".into()))?;
        Ok(RatQT { num: base.num.pow(e32), den: base.den.pow(e32) })
    }

    /// Sum of many terms over a common denominator with one final reduction.
    pub fn sum<'a, I: IntoIterator<Item = &'a RatQT>>(items: I) -> Self {
        let mut groups: HashMap<&LaurentQT, LaurentQT> = HashMap::new();
        let mut order: Vec<&LaurentQT> = Vec::new();
        for x in items {
            if x.is_zero() {
                continue;
            }
            match groups.get_mut(&x.den) {
                Some(acc) => *acc = acc.add(&x.num),
                None => {
                    order.push(&x.den);
                    groups.insert(&x.den, x.num.clone());
                }
            }
        }
        match order.len() {
            0 => Self::zero(),
            1 => {
                let d = order[0];
                let n = groups.remove(d).unwrap();
                if d.is_one() {
                    Self::from_laurent(n)
                } else {
                    Self::reduce(n, d.clone())
                }
            }
            _ => {
                let mut lcm = LaurentQT::one();
                for d in &order {
                    if d.is_one() {
                        continue;
                    }
                    let (_, _, d_co) = gcd3(&lcm, d);
                    lcm = lcm.mul(&d_co);
                }
                let mut total = LaurentQT::zero();
                for d in &order {
                    let n = &groups[d];
                    let f = div_exact(&lcm, d).expect("lcm is divisible by each denominator");
                    total = total.add(&n.mul(&f));
                }
                Self::reduce(total, lcm)
            }
        }
    }

    /// `Σ c_i·x_i` with one reduction at the end.
    pub fn lincomb<'a, I: IntoIterator<Item = (&'a RatQT, &'a RatQT)>>(items: I) -> Self {
        let prods: Vec<RatQT> = items.into_iter().map(|(a, b)| a.mul(b)).collect();
        Self::sum(prods.iter())
    }

    pub fn specialize_t(&self, rule: TSubst) -> Result<Self> {
        let (sign, alpha, beta) = rule.params();
        let den = self.den.subst_t_monomial(sign, alpha, beta);
        if den.is_zero() {
            return Err(Error::Pole { rule: rule.describe().to_string() });
        }
        let num = self.num.subst_t_monomial(sign, alpha, beta);
        Ok(Self::reduce(num, den))
    }

    /// Applies `q ↦ q⁻¹`, `t ↦ t⁻¹`.
    pub fn invert_vars(&self) -> Self {
        Self::reduce(self.num.invert_vars(), self.den.invert_vars())
    }

    /// Recanonicalizes; the identity on values built through this API.
    pub fn normalize(&self) -> Self {
        Self::reduce(self.num.clone(), self.den.clone())
    }

    /// Leading-coefficient ratio when the value is an integer constant.
    pub fn as_bigrat(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(BigRational::new(n, d))
    }

    pub fn as_i64(&self) -> Option<i64> {
        let r = self.as_bigrat()?;
        if r.is_integer() {
            i64::try_from(r.to_integer()).ok()
        } else {
            None
        }
    }

    pub fn is_integer_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn signum_constant(&self) -> Option<i32> {
        let r = self.as_bigrat()?;
        Some(if r.is_zero() {
            0
        } else if r.is_positive() {
            1
        } else {
            -1
        })
    }

    pub fn one_ref() -> &'static RatQT {
        static ONE: std::sync::OnceLock<RatQT> = std::sync::OnceLock::new();
        ONE.get_or_init(RatQT::one)
    }
}

impl fmt::Display for RatQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &LaurentQT| if p.len() > 1 { format!("({p})") } else { p.to_string() };
        write!(f, "{} / {}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RatQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatQT({self})")
    }
}

impl From<i64> for RatQT {
    fn from(c: i64) -> Self {
        Self::from_i64(c)
    }
}

impl From<LaurentQT> for RatQT {
    fn from(p: LaurentQT) -> Self {
        Self::from_laurent(p)
    }
}

impl One for RatQT {
    fn one() -> Self {
        RatQT::one()
    }
}

impl Zero for RatQT {
    fn zero() -> Self {
        RatQT::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl std::ops::$tr for RatQT {
            type Output = RatQT;
            fn $m(self, rhs: RatQT) -> RatQT {
                RatQT::$f(&self, &rhs)
            }
        }
        impl<'a> std::ops::$tr<&'a RatQT> for &'a RatQT {
            type Output = RatQT;
            fn $m(self, rhs: &'a RatQT) -> RatQT {
                RatQT::$f(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl std::ops::Neg for RatQT {
    type Output = RatQT;
    fn neg(self) -> RatQT {
        RatQT::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::parse_ratqt as r;

    #[test]
    fn factor_cancellation() {
        assert_eq!(r("q^4-1").div(&r("q^2-1")).unwrap(), r("q^2+1"));
        assert!(r("q^4-1").div(&r("q^2-1")).unwrap().is_laurent());
    }

    #[test]
    fn additive_identity() {
        let a = r("(q+t)/(1-q*t)");
        assert_eq!(a.add(&RatQT::zero()), a);
    }

    #[test]
    fn macdonald_coefficient_shape() {
        let v = r("(1-t^2)*(1+q^4)").div(&r("1-t^2*q^4")).unwrap();
        assert_eq!(v.den(), &r("q^4*t^2 - 1").num().clone());
        assert_eq!(v.num(), &r("-(1-t^2)*(1+q^4)").num().clone());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(r("q").div(&RatQT::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn rational_constants_live_in_den() {
        let h = RatQT::from_i64(1).div(&RatQT::from_i64(2)).unwrap();
        assert_eq!(h.num(), &LaurentQT::one());
        assert_eq!(h.den(), &LaurentQT::from_i64(2));
        let m = RatQT::from_i64(1).div(&RatQT::from_i64(-2)).unwrap();
        assert_eq!(m.num(), &LaurentQT::from_i64(-1));
    }

    #[test]
    fn monomials_leave_den() {
        let v = r("1/(q^3*t*(1+q))");
        assert_eq!(v.num(), &LaurentQT::monomial(BigInt::one(), -3, -1));
        assert_eq!(v.den(), r("1+q").num());
    }

    #[test]
    fn specializations() {
        let v = r("(1-t^2)*(1+q^4)/(1-t^2*q^4)");
        assert_eq!(v.specialize_t(TSubst::MinusQ2).unwrap(), RatQT::one());
        assert_eq!(r("q^5*t^7").specialize_t(TSubst::One).unwrap(), r("q^5"));
        assert_eq!(r("t").specialize_t(TSubst::MinusQ2OverT).unwrap(), r("-q^2/t"));
        assert!(matches!(r("1/(t-1)").specialize_t(TSubst::One), Err(Error::Pole { .. })));
    }

    #[test]
    fn sum_matches_pairwise() {
        let xs = [r("1/(1-q)"), r("q/(1-q^2)"), r("t/(1+q)"), r("3"), r("1/(1-q)")];
        let pairwise = xs.iter().fold(RatQT::zero(), |a, b| a.add(b));
        assert_eq!(RatQT::sum(xs.iter()), pairwise);
    }

    #[test]
    fn display_roundtrip() {
        for s in ["0", "1", "-3*q^-2*t^4 + q", "(q + t) / (1 - q*t)", "1/2", "q/(3 + 6*t)"] {
            let v = r(s);
            assert_eq!(r(&v.to_string()), v, "{s}");
        }
    }
}
