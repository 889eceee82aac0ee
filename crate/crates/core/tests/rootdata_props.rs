mod common;

use std::collections::BTreeSet;

use common::{make_dominant, pd, rank_of, w, BUILDERS};
use proptest::prelude::*;
use superweyl::characters::even_character;
use superweyl::laurent::HalfWeight;
use superweyl::rootdata::{standard_polarized, GroupSpec};

#[test]
fn rho_even_is_half_sum_of_positive_even_roots() {
    for spec in BUILDERS {
        let p = pd(spec);
        let sum = p
            .pos_even()
            .iter()
            .fold(HalfWeight::zero(p.rank()), |acc, a| acc.plus(a));
        assert_eq!(sum, p.rho_even().scale(2), "{spec}");
        assert_eq!(p.rho(), &p.rho_even().minus(p.rho_odd()), "{spec}");
    }
}

#[test]
fn polarization_partitions_even_roots() {
    for spec in BUILDERS {
        let p = pd(spec);
        assert_eq!(p.pos_even().len() + p.neg_even().len(), p.datum().even_roots().len());
        let negated: BTreeSet<_> = p.pos_even().iter().map(HalfWeight::neg).collect();
        assert_eq!(&negated, p.neg_even(), "{spec}");
        for a in p.pos_even() {
            assert!(p.gamma().eval(a) > 0.into());
        }
    }
}

#[test]
fn weyl_group_is_a_group_of_root_permutations() {
    for spec in BUILDERS {
        let p = pd(spec);
        let ws = p.weyl_elements().unwrap();
        let actions: BTreeSet<_> = ws.iter().map(|x| x.action.clone()).collect();
        assert_eq!(actions.len(), ws.len());
        for x in ws {
            let image: BTreeSet<_> = p.datum().even_roots().iter().map(|a| x.apply(a)).collect();
            assert_eq!(&image, p.datum().even_roots());
            for y in ws {
                let composed: Vec<Vec<i64>> = (0..p.rank())
                    .map(|i| {
                        (0..p.rank())
                            .map(|j| (0..p.rank()).map(|k| x.action[i][k] * y.action[k][j]).sum())
                            .collect()
                    })
                    .collect();
                assert!(actions.contains(&composed));
            }
        }
        if ws.len() > 1 {
            assert_eq!(ws.iter().map(|x| x.sign as i64).sum::<i64>(), 0, "{spec}");
        }
    }
}

#[test]
fn rho_odd_is_weyl_invariant_for_gl_and_p() {
    for spec in BUILDERS.iter().filter(|s| !s.starts_with('q')) {
        let p = pd(spec);
        for x in p.weyl_elements().unwrap() {
            assert_eq!(&x.apply(p.rho_odd()), p.rho_odd(), "{spec}");
        }
    }
}

fn spec_and_weights() -> impl Strategy<Value = (GroupSpec, Vec<i64>, Vec<i64>, Vec<i64>)> {
    prop::sample::select(BUILDERS).prop_flat_map(|s| {
        let spec: GroupSpec = s.parse().unwrap();
        let r = rank_of(spec);
        let v = || prop::collection::vec(-3i64..=3, r);
        (Just(spec), v(), v(), v())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn leq_is_a_partial_order((spec, a, b, c) in spec_and_weights()) {
        let p = standard_polarized(spec).unwrap();
        let (a, b, c) = (w(&a), w(&b), w(&c));
        prop_assert!(p.leq(&a, &a));
        if p.leq(&a, &b) && p.leq(&b, &a) {
            prop_assert_eq!(&a, &b);
        }
        if p.leq(&a, &b) && p.leq(&b, &c) {
            prop_assert!(p.leq(&a, &c));
        }
        // adding a positive root moves up
        if let Some(alpha) = p.positive_roots().into_iter().next() {
            prop_assert!(p.leq(&a, &a.plus(&alpha)));
        }
    }

    #[test]
    fn even_character_support_lies_below_lambda((spec, raw, _b, _c) in spec_and_weights()) {
        let p = standard_polarized(spec).unwrap();
        let lambda = w(&make_dominant(spec, raw));
        let ch = even_character(&p, &lambda).unwrap();
        for mu in ch.support() {
            prop_assert!(p.leq(mu, &lambda), "{} not below {}", mu, lambda);
        }
    }
}
