//! Colored Jones polynomials of iterated torus knots from the cabling sum
//! formula, independent of the Hecke-algebra pipeline.
//!
//! Normalization: `J_1 = 1` and `J_m(unknot) = (−1)^(m−1)(q^(2m) − q^(−2m))/(q² − q⁻²)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactalg::LaurentQ;
use crate::invariants::{gamma_pair, CableSpec};

/// `(−1)^(m−1)·(q^(2m) − q^(−2m))/(q² − q⁻²)`, with `J_0 = 0`, `J_{−m} = −J_m`.
pub fn unknot_jones(m: i64) -> LaurentQ {
    if m == 0 {
        return LaurentQ::zero();
    }
    let a = m.abs();
    let sign = if (a - 1) % 2 == 0 { 1 } else { -1 } * m.signum();
    LaurentQ::from_int_terms((0..a).map(|i| (2 * (a - 1) - 4 * i, sign)))
}

/// `(−q)^e`.
fn minus_q_pow(e: i64) -> LaurentQ {
    let c = if e.rem_euclid(2) == 1 { -1 } else { 1 };
    LaurentQ::monomial(BigRational::from_integer(BigInt::from(c)), e)
}

/// One application of the cabling sum formula:
/// `(−q)^(rs(n²−1)) Σ_u q^(−(rs·u² + 2r·u)) inner(s·u + 1)` over
/// `u ∈ {−(n−1), −(n−3), …, n−1}`.
pub fn cable_step<F>(r: i64, s: i64, mut inner: F, n: i64) -> Result<LaurentQ>
where
    F: FnMut(i64) -> Result<LaurentQ>,
{
    if n < 1 {
        return Err(Error::InvalidSpec(format!("color {n} < 1")));
    }
    if num_integer::Integer::gcd(&r, &s) != 1 {
        return Err(Error::NotCoprime { r, s });
    }
    let mut acc = LaurentQ::zero();
    let mut parity = None;
    for u in (-(n - 1)..=(n - 1)).step_by(2) {
        let color = s * u + 1;
        let p = color.rem_euclid(2);
        if *parity.get_or_insert(p) != p {
            return Err(Error::Internal("inner colors of one cabling step differ in parity".into()));
        }
        acc = acc.add(&inner(color)?.shift(-(r * s * u * u + 2 * r * u)));
    }
    Ok(acc.mul(&minus_q_pow(r * s * (n * n - 1))))
}

/// Memo of `J_color(K_depth)`, where `K_0` is the unknot and `K_d` is the
/// `d`-th pair's cable of `K_{d−1}`.
#[derive(Default)]
pub struct ColorTable {
    pairs: Vec<(i64, i64)>,
    memo: HashMap<(usize, i64), LaurentQ>,
}

impl ColorTable {
    pub fn new(pairs: Vec<(i64, i64)>) -> Self {
        ColorTable { pairs, memo: HashMap::new() }
    }

    pub fn get(&mut self, depth: usize, color: i64) -> Result<LaurentQ> {
        if let Some(v) = self.memo.get(&(depth, color)) {
            return Ok(v.clone());
        }
        let v = if depth == 0 {
            unknot_jones(color)
        } else if color == 0 {
            LaurentQ::zero()
        } else if color < 0 {
            self.get(depth, -color)?.neg()
        } else {
            let (r, s) = gamma_pair(self.pairs[depth - 1]);
            cable_step(r, s, |c| self.get(depth - 1, c), color)?
        };
        self.memo.insert((depth, color), v.clone());
        Ok(v)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, i64), &LaurentQ)> {
        self.memo.iter()
    }
}

/// `J_n(K(𝐫, 𝐬); q)`. The first pair is the companion torus knot and each
/// later pair `(w, a)` is the `w`-strand cable with slope `a` of the knot built
/// so far, fed to [`cable_step`] as `(a, w)`. Newton specs are converted to
/// topological pairs first.
pub fn oracle_jones(n: i64, spec: &CableSpec) -> Result<LaurentQ> {
    let top = spec.to_topological();
    let mut table = ColorTable::new(top.pairs().to_vec());
    let v = table.get(top.pairs().len(), n)?;
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lq(t: &[(i64, i64)]) -> LaurentQ {
        LaurentQ::from_int_terms(t.iter().copied())
    }

    #[test]
    fn unknot_values() {
        assert_eq!(unknot_jones(1), LaurentQ::one());
        assert!(unknot_jones(0).is_zero());
        assert_eq!(unknot_jones(2), lq(&[(2, -1), (-2, -1)]));
        assert_eq!(unknot_jones(-3), unknot_jones(3).neg());
    }

    #[test]
    fn single_term_at_color_one() {
        let v = cable_step(2, 3, |c| Ok(unknot_jones(c * 7)), 1).unwrap();
        assert_eq!(v, unknot_jones(7));
    }

    #[test]
    fn geometric_sum_for_1_0() {
        for n in 1..6i64 {
            let v = cable_step(1, 0, |c| Ok(unknot_jones(c)), n).unwrap();
            let expect = LaurentQ::from_int_terms((0..n).map(|i| (2 * (n - 1) - 4 * i, 1)));
            assert_eq!(v, expect);
        }
    }

    #[test]
    fn mirror_is_q_inverse() {
        for n in 1..=3 {
            let a = oracle_jones(n, &CableSpec::topological(&[(2, 3)]).unwrap()).unwrap();
            let b = oracle_jones(n, &CableSpec::topological(&[(2, -3)]).unwrap()).unwrap();
            let m = a.mirror();
            assert!(b == m || b == m.neg(), "n={n}");
        }
    }

    #[test]
    fn memo_is_antisymmetric() {
        let mut table = ColorTable::new(vec![(2, 3), (2, 5)]);
        for d in 0..=2 {
            for c in 0..=4 {
                let p = table.get(d, c).unwrap();
                assert_eq!(table.get(d, -c).unwrap(), p.neg());
            }
            assert!(table.get(d, 0).unwrap().is_zero());
        }
        for ((d, c), v) in table.entries() {
            if *d == 0 {
                assert_eq!(*v, unknot_jones(*c));
            }
        }
    }

    #[test]
    fn color_one_is_one() {
        for pairs in [vec![(2, 3)], vec![(2, 3), (2, 5)], vec![(3, 2), (2, -7), (2, 1)]] {
            let spec = CableSpec::topological(&pairs).unwrap();
            assert_eq!(oracle_jones(1, &spec).unwrap(), LaurentQ::one());
        }
    }

    #[test]
    fn rejects_non_coprime_and_color_zero() {
        assert!(cable_step(2, 4, |c| Ok(unknot_jones(c)), 2).is_err());
        assert!(cable_step(2, 3, |c| Ok(unknot_jones(c)), 0).is_err());
    }

    #[test]
    fn trefoil() {
        let spec = CableSpec::topological(&[(2, 3)]).unwrap();
        // V(q⁴)·(q² + q⁻²) with V(x) = x + x³ − x⁴
        assert_eq!(oracle_jones(2, &spec).unwrap(), lq(&[(2, 1), (6, 1), (10, 1), (18, -1)]));
        assert!(oracle_jones(1, &spec).unwrap() == LaurentQ::one());
    }
}
