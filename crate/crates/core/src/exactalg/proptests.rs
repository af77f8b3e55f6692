use num_bigint::BigInt;
use proptest::prelude::*;

use super::gcd::{gcd_cofactors, gcd_prs, gcd_qt};
use super::laurent_qt::LaurentQT;
use super::laurent_x::LaurentX;
use super::ratqt::{RatQT, TSubst};

fn poly(lo: i64, hi: i64, max_terms: usize) -> impl Strategy<Value = LaurentQT> {
    prop::collection::vec(((lo..=hi), (lo..=hi), -3i64..=3), 0..=max_terms)
        .prop_map(|v| LaurentQT::from_terms(v.into_iter().map(|(a, b, c)| ((a, b), BigInt::from(c)))))
}

fn nonzero_poly(lo: i64, hi: i64, max_terms: usize) -> impl Strategy<Value = LaurentQT> {
    poly(lo, hi, max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratqt() -> impl Strategy<Value = RatQT> {
    (poly(-2, 3, 4), nonzero_poly(0, 3, 3)).prop_map(|(n, d)| RatQT::new(n, d).unwrap())
}

fn laurent_x() -> impl Strategy<Value = LaurentX> {
    prop::collection::vec((-3i64..=3, ratqt()), 0..4).prop_map(LaurentX::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn addition_is_associative(a in ratqt(), b in ratqt(), c in ratqt()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn multiplication_distributes(a in ratqt(), b in ratqt(), c in ratqt()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn inverse(a in ratqt()) {
        prop_assume!(!a.is_zero());
        prop_assert!(a.mul(&a.inv().unwrap()).is_one());
    }

    #[test]
    fn canonical_form_is_unique(n in poly(-2, 3, 4), d in nonzero_poly(0, 3, 3), f in nonzero_poly(-1, 2, 3)) {
        let a = RatQT::new(n.clone(), d.clone()).unwrap();
        let b = RatQT::new(n.mul(&f), d.mul(&f)).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.normalize(), a);
    }

    #[test]
    fn specialization_is_multiplicative(a in ratqt(), b in ratqt()) {
        for rule in [TSubst::MinusQ2, TSubst::MinusQ2OverT, TSubst::One, TSubst::MinusInvT] {
            if let (Ok(x), Ok(y)) = (a.specialize_t(rule), b.specialize_t(rule)) {
                prop_assert_eq!(a.mul(&b).specialize_t(rule).unwrap(), x.mul(&y));
            }
        }
    }

    #[test]
    fn exact_divide_recovers_factor(f in laurent_x(), g in laurent_x()) {
        prop_assume!(!g.is_zero());
        prop_assert_eq!(LaurentX::exact_divide(&f.mul(&g), &g).unwrap(), f);
    }

    #[test]
    fn modular_gcd_matches_prs(a in nonzero_poly(0, 4, 4), b in nonzero_poly(0, 4, 4), f in nonzero_poly(0, 3, 3)) {
        let (x, y) = (a.mul(&f), b.mul(&f));
        prop_assert_eq!(gcd_qt(&x, &y), gcd_prs(&x, &y));
        let (g, cx, cy) = gcd_cofactors(&x, &y);
        prop_assert_eq!(g.mul(&cx), x);
        prop_assert_eq!(g.mul(&cy), y);
    }
}
