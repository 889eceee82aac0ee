use num_bigint::BigInt;
use proptest::prelude::*;
use superweyl::laurent::{CharacterPoly, HalfWeight};

fn poly(rank: usize) -> impl Strategy<Value = CharacterPoly> {
    prop::collection::vec((prop::collection::vec(-10i64..=10, rank), -5i64..=5), 0..=20).prop_map(
        move |terms| {
            CharacterPoly::from_terms(
                rank,
                terms
                    .into_iter()
                    .map(|(d, c)| (HalfWeight::from_doubled(d).unwrap(), BigInt::from(c))),
            )
            .unwrap()
        },
    )
}

fn triple() -> impl Strategy<Value = (CharacterPoly, CharacterPoly, CharacterPoly)> {
    (1usize..=3).prop_flat_map(|r| (poly(r), poly(r), poly(r)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws((p, q, r) in triple()) {
        prop_assert_eq!(p.add(&q).unwrap().add(&r).unwrap(), p.add(&q.add(&r).unwrap()).unwrap());
        prop_assert_eq!(
            p.mul(&q.add(&r).unwrap()).unwrap(),
            p.mul(&q).unwrap().add(&p.mul(&r).unwrap()).unwrap()
        );
        prop_assert_eq!(p.mul(&q).unwrap(), q.mul(&p).unwrap());
        prop_assert!(p.sub(&p).unwrap().is_zero());
    }

    #[test]
    fn dim_eval_is_multiplicative((p, q, _r) in triple()) {
        prop_assert_eq!(p.mul(&q).unwrap().dim_eval(), p.dim_eval() * q.dim_eval());
        prop_assert_eq!(p.add(&q).unwrap().dim_eval(), p.dim_eval() + q.dim_eval());
    }

    #[test]
    fn division_completeness((q, r, _p) in triple()) {
        prop_assume!(!q.is_zero());
        let product = q.mul(&r).unwrap();
        prop_assert_eq!(product.exact_divide(&q).unwrap(), r);
    }

    #[test]
    fn division_soundness((p, q, _r) in triple()) {
        prop_assume!(!q.is_zero());
        if let Ok(quotient) = p.exact_divide(&q) {
            prop_assert_eq!(q.mul(&quotient).unwrap(), p);
        }
    }

    #[test]
    fn serialization_round_trip((p, _q, _r) in triple()) {
        prop_assume!(!p.is_zero());
        let json = serde_json::to_string(&p).unwrap();
        let back: CharacterPoly = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, p);
    }
}
