//! Randomized ring invariants: ring axioms by structural equality of
//! canonical forms, the evaluation homomorphism, and sign agreement.

use proptest::prelude::*;
use statman::ring::{ParamRing, Poly, Rational, Sign};
use std::collections::BTreeMap;

fn ring() -> ParamRing {
    ParamRing::new(["a", "b"]).unwrap()
}

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn poly() -> impl Strategy<Value = Poly> {
    let term = (rational(), 0u32..=3, 0u32..=3);
    proptest::collection::vec(term, 0..=4).prop_map(|terms| {
        let r = ring();
        let a = Poly::var(&r, "a").unwrap();
        let b = Poly::var(&r, "b").unwrap();
        let mut acc = Poly::zero(&r);
        for (c, ea, eb) in terms {
            acc = acc.add(&a.pow(ea).mul(&b.pow(eb)).scale(&c));
        }
        acc
    })
}

fn assignment() -> impl Strategy<Value = BTreeMap<String, Rational>> {
    (rational(), rational()).prop_map(|(va, vb)| {
        let mut m = BTreeMap::new();
        m.insert("a".to_string(), va);
        m.insert("b".to_string(), vb);
        m
    })
}

proptest! {
    #[test]
    fn add_is_associative_and_commutative(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(p.add(&q).add(&r), p.add(&q.add(&r)));
        prop_assert_eq!(p.add(&q), q.add(&p));
    }

    #[test]
    fn mul_is_associative_and_commutative(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(p.mul(&q), q.mul(&p));
    }

    #[test]
    fn mul_distributes_over_add(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
    }

    #[test]
    fn additive_inverse_and_identities(p in poly()) {
        prop_assert!(p.add(&p.neg()).is_zero());
        prop_assert_eq!(p.add(&Poly::zero(&ring())), p.clone());
        prop_assert_eq!(p.mul(&Poly::one(&ring())), p);
    }

    #[test]
    fn eval_is_a_homomorphism(p in poly(), q in poly(), asg in assignment()) {
        let sum = p.add(&q).eval(&asg).unwrap();
        prop_assert_eq!(sum, &p.eval(&asg).unwrap() + &q.eval(&asg).unwrap());
        let prod = p.mul(&q).eval(&asg).unwrap();
        prop_assert_eq!(prod, &p.eval(&asg).unwrap() * &q.eval(&asg).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]
    #[test]
    fn sign_agrees_with_eval(p in poly(), asg in assignment()) {
        let via_sign = p.sign_at(&asg).unwrap();
        let via_eval = p.eval(&asg).unwrap().sign();
        prop_assert_eq!(via_sign, via_eval);
        // invariant under positive rescaling
        let scaled = p.scale(&Rational::new(7, 3).unwrap());
        prop_assert_eq!(scaled.sign_at(&asg).unwrap(), via_eval);
        let _ = Sign::Zero;
    }
}
