use dahaknot::hword::{x_word, y_word, z_word};
use dahaknot::polyrep::{act, delta_t, eval_at, idempotent_project, right_act, t_hat, t_hat_inv, RepFlavor};
use dahaknot::{HElement, LaurentX, RatQT};
use proptest::prelude::*;

fn vector() -> impl Strategy<Value = LaurentX> {
    let coeff = ((-2i64..=2).prop_filter("nonzero", |c| *c != 0), -2i64..=2, -1i64..=1)
        .prop_map(|(c, qe, te)| RatQT::monomial(c, qe, te));
    prop::collection::vec((-3i64..=3, coeff), 1..=3).prop_map(LaurentX::from_terms)
}

/// `f(X) + f(X⁻¹)`.
fn symmetric() -> impl Strategy<Value = LaurentX> {
    vector().prop_map(|v| v.add(&v.s_hat()))
}

fn flavor() -> impl Strategy<Value = RepFlavor> {
    prop_oneof![Just(RepFlavor::Standard), Just(RepFlavor::Sign)]
}

fn generator() -> impl Strategy<Value = HElement> {
    prop_oneof![Just(x_word()), Just(y_word()), Just(z_word())]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn t_hat_stays_laurent_and_inverts(v in vector(), f in flavor()) {
        let tv = t_hat(&v, f).unwrap();
        prop_assert_eq!(t_hat_inv(&tv, f).unwrap(), v);
    }

    #[test]
    fn daha_relations_hold(v in vector(), f in flavor()) {
        let (x, xi, y, yi, t) = (HElement::x(1), HElement::x(-1), HElement::y(1), HElement::y(-1), HElement::t_gen(1));
        let u = f.effective_t();
        let quad = t.sub(&HElement::scalar(u.clone())).mul(&t.add(&HElement::scalar(u.inv().unwrap())));
        prop_assert_eq!(act(&t.mul(&x).mul(&t), &v, f).unwrap(), act(&xi, &v, f).unwrap());
        prop_assert_eq!(act(&t.mul(&yi).mul(&t), &v, f).unwrap(), act(&y, &v, f).unwrap());
        let rhs = y.mul(&x).mul(&t).mul(&t).scale(&RatQT::monomial(1, 2, 0));
        prop_assert_eq!(act(&x.mul(&y), &v, f).unwrap(), act(&rhs, &v, f).unwrap());
        prop_assert!(act(&quad, &v, f).unwrap().is_zero());
    }

    #[test]
    fn right_action_composes(v in vector(), a in generator(), b in generator()) {
        let f = RepFlavor::Standard;
        let lhs = right_act(&right_act(&v, &a, f).unwrap(), &b, f).unwrap();
        prop_assert_eq!(lhs, right_act(&v, &a.mul(&b), f).unwrap());
    }

    #[test]
    fn pairing_with_one_is_symmetric(a in generator(), b in generator(), c in generator()) {
        let h = a.mul(&b).mul(&c);
        let one = LaurentX::one();
        let t = RatQT::t();
        let l = eval_at(&act(&h, &one, RepFlavor::Standard).unwrap(), &t).unwrap();
        let r = eval_at(&right_act(&one, &h, RepFlavor::Standard).unwrap(), &t).unwrap();
        prop_assert_eq!(l, r);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn idempotent_commutes_with_generators(v in vector(), a in generator(), f in flavor()) {
        let lhs = idempotent_project(&act(&a, &v, f).unwrap(), f).unwrap();
        let rhs = act(&a, &idempotent_project(&v, f).unwrap(), f).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sign_flavor_eigenspaces(v in symmetric()) {
        let minus_tinv = RatQT::monomial(-1, 0, -1);
        prop_assert_eq!(t_hat(&v, RepFlavor::Sign).unwrap(), v.scale(&minus_tinv));
        let w = v.mul(&delta_t());
        prop_assert_eq!(t_hat(&w, RepFlavor::Sign).unwrap(), w.scale(&RatQT::t()));
    }
}
