mod common;

use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use superweyl::clifford::{
    brute_force_classify, classify, construct_rep, gram_from_weight, CliffordClassification, CliffordError,
    Matrix, QuadraticSpace, SimpleType, SquareClass,
};
use superweyl::field::FieldMode;
use superweyl::laurent::HalfWeight;
use superweyl::rootdata::{GroupSpec, RootDatum};

fn modes() -> impl Strategy<Value = FieldMode> {
    prop_oneof![
        Just(FieldMode::Rationals),
        Just(FieldMode::PrimeField(3)),
        Just(FieldMode::PrimeField(5)),
        Just(FieldMode::PrimeField(7)),
        Just(FieldMode::AlgebraicallyClosed(0)),
        Just(FieldMode::AlgebraicallyClosed(3)),
    ]
}

fn symmetric(r: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(-4i64..=4, r * r).prop_map(move |v| {
        let mut g = vec![vec![0; r]; r];
        for i in 0..r {
            for j in i..r {
                g[i][j] = v[i * r + j];
                g[j][i] = v[i * r + j];
            }
        }
        g
    })
}

fn space() -> impl Strategy<Value = QuadraticSpace> {
    (modes(), 0usize..=4)
        .prop_flat_map(|(m, r)| (Just(m), symmetric(r)))
        .prop_map(|(m, g)| QuadraticSpace::from_integers(&g, m).unwrap())
}

/// Determinant by cofactor expansion, reduced into the field.
fn det(f: FieldMode, m: &Matrix) -> BigRational {
    let n = m.len();
    if n == 0 {
        return BigRational::one();
    }
    let mut acc = BigRational::zero();
    for j in 0..n {
        let minor: Matrix = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = f.mul(&m[0][j], &det(f, &minor));
        acc = if j % 2 == 0 { f.add(&acc, &term) } else { f.sub(&acc, &term) };
    }
    acc
}

fn invariants(c: &CliffordClassification) -> impl PartialEq + std::fmt::Debug {
    (c.r, c.rad_dim, c.d, c.delta_class, c.simple_type, c.closed_dim, c.isotropic_dim)
}

fn mat_mul(f: FieldMode, a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).fold(BigRational::zero(), |acc, t| f.add(&acc, &f.mul(&a[i][t], &b[t][j]))))
                .collect()
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn classify_is_basis_independent(
        qs in space(),
        entries in prop::collection::vec(-3i64..=3, 16),
    ) {
        let f = qs.mode();
        let r = qs.dim();
        let p: Matrix = (0..r)
            .map(|i| (0..r).map(|j| f.from_int(entries[i * 4 + j])).collect())
            .collect();
        prop_assume!(!det(f, &p).is_zero());
        let moved = qs.transform(&p).unwrap();
        prop_assert_eq!(invariants(&classify(&moved)), invariants(&classify(&qs)));
    }

    #[test]
    fn orthogonal_sum_delta_class(
        (mode, a, b) in modes().prop_flat_map(|m| (Just(m), 0usize..=3, 0usize..=3))
            .prop_flat_map(|(m, r, s)| (Just(m), symmetric(r), symmetric(s)))
    ) {
        let u = QuadraticSpace::from_integers(&a, mode).unwrap();
        let v = QuadraticSpace::from_integers(&b, mode).unwrap();
        let (cu, cv) = (classify(&u), classify(&v));
        let cs = classify(&u.orthogonal_sum(&v).unwrap());
        prop_assert_eq!(cs.d, cu.d + cv.d);
        match (cu.delta_class, cv.delta_class) {
            (SquareClass::Zero, _) => prop_assert_eq!(cs.delta_class, cv.delta_class),
            (_, SquareClass::Zero) => prop_assert_eq!(cs.delta_class, cu.delta_class),
            _ => {
                let mut expected = mode.mul(&cu.delta, &cv.delta);
                if (cu.d * cv.d) % 2 == 1 {
                    expected = mode.neg(&expected);
                }
                let class = if mode.is_square(&expected) { SquareClass::Square } else { SquareClass::NonSquare };
                prop_assert_eq!(cs.delta_class, class);
            }
        }
    }

    #[test]
    fn closed_dimension_identities(qs in space()) {
        let closed = QuadraticSpace::new(qs.gram().clone(), FieldMode::AlgebraicallyClosed(qs.mode().characteristic()));
        let c = classify(&closed.unwrap());
        let dim = c.closed_dim.unwrap();
        prop_assert_eq!(dim, 1u64 << ((c.d + 1) / 2));
        prop_assert_eq!(dim, 1u64 << (c.r - c.isotropic_dim));
    }

    #[test]
    fn matrix_reps_satisfy_relations(qs in space()) {
        let rep = match construct_rep(&qs) {
            Ok(rep) => rep,
            Err(CliffordError::SquareRootUnavailable(_)) => {
                prop_assert!(!qs.mode().is_closed());
                return Ok(());
            }
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        let f = rep.mode;
        let n = rep.dim();
        let c = classify(&qs);
        prop_assert!(rep.generators_are_odd());
        prop_assert_eq!(rep.generators.len(), qs.dim());
        prop_assert_eq!(n as u64, 1u64 << ((c.d + 1) / 2));
        if c.d >= 1 {
            prop_assert_eq!(rep.even_dim, rep.odd_dim);
        } else {
            prop_assert_eq!((rep.even_dim, rep.odd_dim), (1, 0));
        }
        // the represented vectors form an orthogonal basis with the recorded norms
        let col = |k: usize| rep.basis.iter().map(|row| row[k].clone()).collect::<Vec<_>>();
        for i in 0..qs.dim() {
            let norm = f.div(&qs.eval(&col(i), &col(i)), &rep.rescale[i]).unwrap();
            prop_assert_eq!(&norm, &rep.diagonal[i]);
            for j in 0..qs.dim() {
                let x = &rep.generators[i];
                let y = &rep.generators[j];
                let xy = mat_mul(f, x, y);
                let yx = mat_mul(f, y, x);
                for a in 0..n {
                    for b in 0..n {
                        let anti = f.add(&xy[a][b], &yx[a][b]);
                        let expected = if i == j && a == b {
                            f.mul(&f.from_int(2), &rep.diagonal[i])
                        } else {
                            BigRational::zero()
                        };
                        prop_assert_eq!(anti, expected);
                    }
                }
                if i != j {
                    prop_assert!(qs.eval(&col(i), &col(j)).is_zero());
                }
            }
        }
        prop_assert!(rep.relations_hold());
    }

    #[test]
    fn queer_modular_d_lambda(
        n in 1usize..=4,
        p in prop::sample::select(vec![3u64, 5, 7]),
        coords in prop::collection::vec(-30i64..=30, 4),
    ) {
        let datum = RootDatum::build(GroupSpec::Queer { n }).unwrap();
        let lambda = HalfWeight::integral(&coords[..n]).unwrap();
        let qs = gram_from_weight(&datum, &lambda, FieldMode::PrimeField(p)).unwrap();
        let expected = coords[..n].iter().filter(|&&d| d % p as i64 != 0).count();
        prop_assert_eq!(classify(&qs).d, expected);
    }
}

#[test]
fn brute_force_agrees_on_small_grams() {
    for p in [3u64, 5] {
        let f = FieldMode::PrimeField(p);
        for r in 0..=2usize {
            let entries = (r * (r + 1)) / 2;
            for code in 0..(p as usize).pow(entries as u32) {
                let mut digits = (0..entries).map(|k| (code / (p as usize).pow(k as u32)) % p as usize);
                let mut g = vec![vec![0i64; r]; r];
                for i in 0..r {
                    for j in i..r {
                        let v = digits.next().unwrap() as i64;
                        g[i][j] = v;
                        g[j][i] = v;
                    }
                }
                let qs = QuadraticSpace::from_integers(&g, f).unwrap();
                let oracle = brute_force_classify(&qs).unwrap();
                assert!(oracle.unique_up_to_parity, "{g:?} over F{p}");
                assert_eq!(classify(&qs).simple_type, oracle.simple_type, "{g:?} over F{p}");
            }
        }
    }
}

#[test]
fn zero_form_is_type_m() {
    for r in 0..=3 {
        let c = classify(&QuadraticSpace::diagonal(&vec![0; r], FieldMode::PrimeField(3)).unwrap());
        assert_eq!(c.simple_type, SimpleType::M);
        assert_eq!(c.delta_class, SquareClass::Zero);
    }
}
