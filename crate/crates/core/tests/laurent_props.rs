use affine_cluster::{CanonicalForm, Error, ExponentVector, Laurent};
use num_bigint::BigInt;
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = Laurent> {
    prop::collection::vec((-4i64..=4, -4i64..=4, -9i64..=9), 0..6)
        .prop_map(|terms| Laurent::from_terms(terms.into_iter().map(|(e1, e2, c)| (ExponentVector::new(e1, e2), c))))
}

fn nonzero_laurent() -> impl Strategy<Value = Laurent> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn addition_is_commutative_and_associative(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a - &a, Laurent::zero());
    }

    #[test]
    fn multiplication_is_a_commutative_ring_product(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &Laurent::one(), a.clone());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in laurent(), b in nonzero_laurent()) {
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn division_by_zero_is_rejected(a in laurent()) {
        prop_assert_eq!(a.div_exact(&Laurent::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn swap_is_a_ring_involution(a in laurent(), b in laurent()) {
        prop_assert_eq!((&a * &b).swap_vars(), &a.swap_vars() * &b.swap_vars());
        prop_assert_eq!((&a + &b).swap_vars(), &a.swap_vars() + &b.swap_vars());
        prop_assert_eq!(a.swap_vars().swap_vars(), a);
    }

    #[test]
    fn text_round_trip(a in laurent()) {
        let back: Laurent = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a.clone());
        let canon = CanonicalForm::from_laurent(&a);
        prop_assert_eq!(canon.to_laurent(), a);
    }

    #[test]
    fn json_round_trip(a in laurent()) {
        let text = serde_json::to_string(&a).unwrap();
        let back: Laurent = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, a.clone());
        prop_assert_eq!(Laurent::from_json_triples(&a.to_json_triples()).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in laurent(), b in laurent(), s1 in prop::bool::ANY, s2 in prop::bool::ANY) {
        let v1 = BigInt::from(if s1 { 1 } else { -1 });
        let v2 = BigInt::from(if s2 { 1 } else { -1 });
        let ev = |p: &Laurent| p.eval(&v1, &v2).unwrap();
        prop_assert_eq!(ev(&(&a * &b)), ev(&a) * ev(&b));
        prop_assert_eq!(ev(&(&a + &b)), ev(&a) + ev(&b));
    }

    #[test]
    fn powers_agree_with_repeated_products(a in laurent(), k in 0u32..5) {
        let mut acc = Laurent::one();
        for _ in 0..k {
            acc = &acc * &a;
        }
        prop_assert_eq!(a.pow(k), acc);
    }
}

#[test]
fn units_at_negative_exponents() {
    let p: Laurent = "x1^-1 + x2".parse().unwrap();
    assert!(p.eval(&BigInt::from(2), &BigInt::from(5)).is_err());
    assert_eq!(p.eval(&BigInt::from(-1), &BigInt::from(5)).unwrap(), BigInt::from(4));
}
