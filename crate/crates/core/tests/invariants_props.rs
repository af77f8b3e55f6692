use dahaknot::exactalg::monomial_ratio;
use dahaknot::invariants::{cd_newton, cherednik_torus, iterated_topological, sign_torus};
use dahaknot::joracle::oracle_jones;
use dahaknot::{CableSpec, LaurentQ, TSubst};
use num_integer::Integer;
use proptest::prelude::*;

fn pair() -> impl Strategy<Value = (i64, i64)> {
    (-5i64..=5, -5i64..=5).prop_filter("coprime, nonzero", |&(r, s)| r != 0 && s != 0 && r.gcd(&s) == 1)
}

fn at_minus_q2(v: &dahaknot::RatQT) -> LaurentQ {
    LaurentQ::from_ratqt(&v.specialize_t(TSubst::MinusQ2).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn iterated_specializes_to_oracle(a in pair(), b in pair(), n in 1usize..=2) {
        let spec = CableSpec::topological(&[a, b]).unwrap();
        let s = at_minus_q2(&iterated_topological(n, &spec).unwrap());
        let o = oracle_jones(n as i64, &spec).unwrap();
        prop_assert!(s == o || s == o.neg(), "{} n={}: {} vs {}", spec, n, s, o);
    }

    #[test]
    fn newton_pairs_give_monomial_ratio(a in pair(), b in pair(), n in 1usize..=2) {
        let spec = CableSpec::newton(&[a, b]).unwrap();
        let s = at_minus_q2(&cd_newton(n, &spec).unwrap());
        let o = oracle_jones(n as i64, &spec).unwrap();
        prop_assert!(monomial_ratio(&s, &o).is_some(), "{} n={}", spec, n);
    }

    #[test]
    fn bridge(p in pair(), n in 1usize..=3) {
        let (r, s) = p;
        let c = cherednik_torus(n, r, s).unwrap().specialize_t(TSubst::MinusQ2OverT).unwrap();
        prop_assert_eq!(c, sign_torus(n, r, s).unwrap());
    }

    #[test]
    fn oracle_mirror(p in pair(), n in 1i64..=3) {
        let (r, s) = p;
        let a = oracle_jones(n, &CableSpec::topological(&[(r, s)]).unwrap()).unwrap();
        let b = oracle_jones(n, &CableSpec::topological(&[(r, -s)]).unwrap()).unwrap().mirror();
        prop_assert!(a == b || a == b.neg());
        prop_assert_eq!(oracle_jones(1, &CableSpec::topological(&[(r, s)]).unwrap()).unwrap(), LaurentQ::one());
    }
}
