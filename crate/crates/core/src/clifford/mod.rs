//! Quadratic spaces and the classification of simple Clifford supermodules.
//!
//! For a quadratic space `(V, b)` the simple supermodule of `C(V, b)` is
//! unique up to parity change. Whether it is isomorphic to its parity shift
//! (type Q) or not (type M) depends only on `d = dim V - dim rad(b)` and the
//! square class of the signed determinant of the nondegenerate part.
//!
//! Generators follow the relations `x_i² = b(x_i, x_i)` and
//! `x_i x_j + x_j x_i = 0` on an orthogonal basis.

mod brute;

pub use brute::{brute_force_classify, BruteForceReport, BRUTE_FORCE_MAX_PRIME, BRUTE_FORCE_MAX_RANK};

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::field::{FieldError, FieldMode, Scalar};
use crate::laurent::HalfWeight;
use crate::rootdata::RootDatum;

pub type Matrix = Vec<Vec<Scalar>>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("NotSymmetric: Gram matrix must be square and symmetric")]
    NotSymmetric,
    #[error("SquareRootUnavailable: {0} has no square root in the field")]
    SquareRootUnavailable(String),
    #[error("InstanceTooLarge: {0}")]
    InstanceTooLarge(String),
    #[error("UnsupportedField: {0}")]
    UnsupportedField(String),
    #[error("RankMismatch: weight has rank {found}, datum has rank {expected}")]
    RankMismatch { expected: usize, found: usize },
    #[error("NotIntegral: weight {0} is not integral")]
    NotIntegral(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A symmetric bilinear form given by its Gram matrix over a field mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticSpace {
    gram: Matrix,
    mode: FieldMode,
}

impl QuadraticSpace {
    pub fn new(gram: Matrix, mode: FieldMode) -> Result<Self, CliffordError> {
        let r = gram.len();
        if gram.iter().any(|row| row.len() != r) {
            return Err(CliffordError::NotSymmetric);
        }
        let gram = gram
            .iter()
            .map(|row| row.iter().map(|x| mode.element(x)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Matrix, _>>()?;
        for i in 0..r {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(CliffordError::NotSymmetric);
                }
            }
        }
        Ok(Self { gram, mode })
    }

    pub fn from_integers(gram: &[Vec<i64>], mode: FieldMode) -> Result<Self, CliffordError> {
        let m = gram
            .iter()
            .map(|row| row.iter().map(|&v| Scalar::from_integer(v.into())).collect())
            .collect();
        Self::new(m, mode)
    }

    pub fn diagonal(entries: &[i64], mode: FieldMode) -> Result<Self, CliffordError> {
        let r = entries.len();
        let gram: Vec<Vec<i64>> = (0..r)
            .map(|i| (0..r).map(|j| if i == j { entries[i] } else { 0 }).collect())
            .collect();
        Self::from_integers(&gram, mode)
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn mode(&self) -> FieldMode {
        self.mode
    }

    /// `b(u, v)` for coordinate vectors `u`, `v`.
    pub fn eval(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        let f = &self.mode;
        let mut acc = Scalar::zero();
        for (i, ui) in u.iter().enumerate() {
            for (j, vj) in v.iter().enumerate() {
                acc = f.add(&acc, &f.mul(&f.mul(ui, &self.gram[i][j]), vj));
            }
        }
        acc
    }

    /// `Pᵀ G P`.
    pub fn transform(&self, p: &Matrix) -> Result<Self, CliffordError> {
        let r = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..r).map(|k| (0..r).map(|i| p[i][k].clone()).collect()).collect();
        let gram = (0..r)
            .map(|a| (0..r).map(|b| self.eval(&cols[a], &cols[b])).collect())
            .collect();
        Self::new(gram, self.mode)
    }

    /// Orthogonal sum `V ⊥ V'`.
    pub fn orthogonal_sum(&self, other: &Self) -> Result<Self, CliffordError> {
        if self.mode != other.mode {
            return Err(CliffordError::UnsupportedField("orthogonal sum across field modes".into()));
        }
        let (r, s) = (self.dim(), other.dim());
        let mut gram = vec![vec![Scalar::zero(); r + s]; r + s];
        for i in 0..r {
            gram[i][..r].clone_from_slice(&self.gram[i]);
        }
        for i in 0..s {
            gram[r + i][r..].clone_from_slice(&other.gram[i]);
        }
        Self::new(gram, self.mode)
    }
}

/// An orthogonal basis: columns of `basis` with `basisᵀ · gram · basis = diag(diagonal)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagonalization {
    /// `basis[i][k]` is coordinate `i` of the `k`-th basis vector.
    pub basis: Matrix,
    /// Nonzero entries first, then the radical.
    pub diagonal: Vec<Scalar>,
}

/// Symmetric Gaussian elimination. When every remaining diagonal entry is
/// zero but some `b(x, y) ≠ 0`, `x` is replaced by `x + y` (char ≠ 2).
/// Eliminated vectors are rescaled by the pivot to keep entries integral.
pub fn diagonalize(qs: &QuadraticSpace) -> Diagonalization {
    let f = qs.mode;
    let r = qs.dim();
    let mut a = qs.gram.clone();
    let mut p: Matrix = (0..r)
        .map(|i| (0..r).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
        .collect();

    for k in 0..r {
        let pivot = (k..r).find(|&i| !a[i][i].is_zero()).or_else(|| {
            let (i, j) = (k..r)
                .flat_map(|i| (i + 1..r).map(move |j| (i, j)))
                .find(|&(i, j)| !a[i][j].is_zero())?;
            // x_i <- x_i + x_j
            for row in p.iter_mut() {
                row[i] = f.add(&row[i], &row[j]);
            }
            for c in 0..r {
                a[i][c] = f.add(&a[i][c], &a[j][c]);
            }
            for row in a.iter_mut() {
                row[i] = f.add(&row[i], &row[j]);
            }
            Some(i)
        });
        let Some(i) = pivot else { break };
        if i != k {
            for row in p.iter_mut() {
                row.swap(i, k);
            }
            a.swap(i, k);
            for row in a.iter_mut() {
                row.swap(i, k);
            }
        }
        let akk = a[k][k].clone();
        for j in k + 1..r {
            let c = a[k][j].clone();
            if c.is_zero() {
                continue;
            }
            // x_j <- a_kk x_j - c x_k
            for row in p.iter_mut() {
                row[j] = f.sub(&f.mul(&akk, &row[j]), &f.mul(&c, &row[k]));
            }
            for col in 0..r {
                a[j][col] = f.sub(&f.mul(&akk, &a[j][col]), &f.mul(&c, &a[k][col]));
            }
            for row in a.iter_mut() {
                row[j] = f.sub(&f.mul(&akk, &row[j]), &f.mul(&c, &row[k]));
            }
        }
    }
    let diagonal = (0..r).map(|i| a[i][i].clone()).collect();
    Diagonalization { basis: p, diagonal }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SquareClass {
    Zero,
    Square,
    NonSquare,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SimpleType {
    M,
    Q,
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Invariants of `(V, b)` that determine the simple `C(V, b)`-supermodule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliffordClassification {
    pub r: usize,
    pub rad_dim: usize,
    pub d: usize,
    #[serde(skip)]
    pub delta: Scalar,
    pub delta_class: SquareClass,
    #[serde(rename = "type")]
    pub simple_type: SimpleType,
    /// `2^⌊(d+1)/2⌋`, only in algebraically closed mode.
    pub closed_dim: Option<u64>,
    pub isotropic_dim: usize,
}

pub fn classify(qs: &QuadraticSpace) -> CliffordClassification {
    let f = qs.mode;
    let diag = diagonalize(qs);
    let nonzero: Vec<&Scalar> = diag.diagonal.iter().filter(|x| !x.is_zero()).collect();
    let r = qs.dim();
    let d = nonzero.len();
    let rad_dim = r - d;
    let mut delta = Scalar::zero();
    let delta_class = if d == 0 {
        SquareClass::Zero
    } else {
        delta = nonzero.iter().fold(Scalar::one(), |acc, x| f.mul(&acc, x));
        if (d * (d - 1) / 2) % 2 == 1 {
            delta = f.neg(&delta);
        }
        if f.is_square(&delta) {
            SquareClass::Square
        } else {
            SquareClass::NonSquare
        }
    };
    let simple_type = match delta_class {
        SquareClass::Zero => SimpleType::M,
        SquareClass::Square if d % 2 == 0 => SimpleType::M,
        _ => SimpleType::Q,
    };
    CliffordClassification {
        r,
        rad_dim,
        d,
        delta,
        delta_class,
        simple_type,
        closed_dim: f.is_closed().then(|| 1u64 << d.div_ceil(2)),
        isotropic_dim: rad_dim + d / 2,
    }
}

/// `b^λ(K_t, K_s) = λ([K_t, K_s])` on the odd Cartan subalgebra.
pub fn gram_from_weight(
    datum: &RootDatum,
    lambda: &HalfWeight,
    mode: FieldMode,
) -> Result<QuadraticSpace, CliffordError> {
    if lambda.rank() != datum.rank() {
        return Err(CliffordError::RankMismatch {
            expected: datum.rank(),
            found: lambda.rank(),
        });
    }
    let coords = lambda
        .coords()
        .ok_or_else(|| CliffordError::NotIntegral(lambda.to_string()))?;
    let gram: Vec<Vec<i64>> = datum
        .odd_cartan_bracket()
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| c.iter().zip(&coords).map(|(a, b)| a * b).sum())
                .collect()
        })
        .collect();
    QuadraticSpace::from_integers(&gram, mode)
}

/// A graded matrix representation of `C(V, b)` on an orthogonal basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRep {
    pub mode: FieldMode,
    /// One odd matrix per orthogonal basis vector; radical vectors act by 0.
    pub generators: Vec<Matrix>,
    pub even_dim: usize,
    pub odd_dim: usize,
    /// `b(x_i, x_i)` for the represented basis: `generators[i]² = diagonal[i]·I`.
    pub diagonal: Vec<Scalar>,
    /// The orthogonal basis from [`diagonalize`], before any formal rescaling.
    pub basis: Matrix,
    /// Represented vector `i` is `basis_i / sqrt(rescale[i])`; `1` means
    /// unscaled. Values other than `1` only occur in closed modes.
    pub rescale: Vec<Scalar>,
}

impl MatrixRep {
    pub fn dim(&self) -> usize {
        self.even_dim + self.odd_dim
    }

    /// Every generator is block-antidiagonal for the `(even_dim | odd_dim)` split.
    pub fn generators_are_odd(&self) -> bool {
        let e = self.even_dim;
        self.generators.iter().all(|g| {
            g.iter().enumerate().all(|(i, row)| {
                row.iter()
                    .enumerate()
                    .all(|(j, x)| x.is_zero() || ((i < e) != (j < e)))
            })
        })
    }

    /// `x_i x_j + x_j x_i = 2 b(x_i, x_j) I` for all `i, j`.
    pub fn relations_hold(&self) -> bool {
        let f = self.mode;
        let n = self.dim();
        let two = f.from_int(2);
        for (i, gi) in self.generators.iter().enumerate() {
            for (j, gj) in self.generators.iter().enumerate() {
                let s = mat_add(&f, &mat_mul(&f, gi, gj), &mat_mul(&f, gj, gi));
                let target = if i == j {
                    f.mul(&two, &self.diagonal[i])
                } else {
                    Scalar::zero()
                };
                let ok = (0..n).all(|a| {
                    (0..n).all(|b| s[a][b] == if a == b { target.clone() } else { Scalar::zero() })
                });
                if !ok {
                    return false;
                }
            }
        }
        true
    }
}

pub(crate) fn mat_mul(f: &FieldMode, a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    a[i].iter()
                        .zip(b)
                        .fold(Scalar::zero(), |acc, (x, row)| f.add(&acc, &f.mul(x, &row[j])))
                })
                .collect()
        })
        .collect()
}

fn mat_add(f: &FieldMode, a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| f.add(x, y)).collect())
        .collect()
}

fn kron(f: &FieldMode, a: &Matrix, b: &Matrix) -> Matrix {
    let (n, m) = (a.len(), b.len());
    let mut out = vec![vec![Scalar::zero(); n * m]; n * m];
    for i in 0..n {
        for j in 0..n {
            if a[i][j].is_zero() {
                continue;
            }
            for k in 0..m {
                for l in 0..m {
                    out[i * m + k][j * m + l] = f.mul(&a[i][j], &b[k][l]);
                }
            }
        }
    }
    out
}

fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
        .collect()
}

/// Explicit simple supermodule on an orthogonal basis.
///
/// Nondegenerate basis vectors are paired: on a `(1|1)` block the pair
/// `(δ_a, δ_b)` acts by `[[0,1],[δ_a,0]]` and `[[0,-c],[c δ_a,0]]` with
/// `c² = -δ_b/δ_a`; an unpaired last vector acts by `[[0,1],[δ,0]]`. Blocks
/// are combined by the Jordan-Wigner tensor construction, giving dimension
/// `2^⌊(d+1)/2⌋`. When `c` is not available in `Q` or `F_p`, closed modes
/// rescale the basis vector formally; other modes fail.
pub fn construct_rep(qs: &QuadraticSpace) -> Result<MatrixRep, CliffordError> {
    let f = qs.mode;
    let diag = diagonalize(qs);
    let d = diag.diagonal.iter().filter(|x| !x.is_zero()).count();
    let mut represented = diag.diagonal.clone();
    let mut rescale = vec![Scalar::one(); qs.dim()];

    let slots = d.div_ceil(2);
    let grading = vec![
        vec![Scalar::one(), Scalar::zero()],
        vec![Scalar::zero(), f.from_int(-1)],
    ];
    let embed = |slot: usize, x: &Matrix| -> Matrix {
        let mut m = identity(1);
        for s in 0..slots {
            let factor = match s.cmp(&slot) {
                std::cmp::Ordering::Less => grading.clone(),
                std::cmp::Ordering::Equal => x.clone(),
                std::cmp::Ordering::Greater => identity(2),
            };
            m = kron(&f, &m, &factor);
        }
        m
    };

    let mut generators = Vec::with_capacity(qs.dim());
    for slot in 0..slots {
        let ia = 2 * slot;
        let da = represented[ia].clone();
        generators.push(embed(slot, &vec![
            vec![Scalar::zero(), Scalar::one()],
            vec![da.clone(), Scalar::zero()],
        ]));
        let ib = ia + 1;
        if ib >= d {
            break;
        }
        let db = represented[ib].clone();
        let ratio = f.neg(&f.div(&db, &da).expect("nonzero pivot"));
        let c = match f.sqrt(&ratio) {
            Some(c) => c,
            None if f.is_closed() => {
                // x_b' = x_b / sqrt(ratio) has b(x_b', x_b') = -δ_a.
                represented[ib] = f.neg(&da);
                rescale[ib] = ratio;
                Scalar::one()
            }
            None => return Err(CliffordError::SquareRootUnavailable(ratio.to_string())),
        };
        generators.push(embed(slot, &vec![
            vec![Scalar::zero(), f.neg(&c)],
            vec![f.mul(&c, &da), Scalar::zero()],
        ]));
    }
    let n = 1usize << slots;
    generators.extend((d..qs.dim()).map(|_| vec![vec![Scalar::zero(); n]; n]));

    // Γ^{⊗slots} is diagonal with entries ±1; sort even basis vectors first.
    let parity: Vec<bool> = (0..n).map(|i| i.count_ones() % 2 == 1).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| parity[i]);
    let generators = generators
        .into_iter()
        .map(|g| {
            order
                .iter()
                .map(|&i| order.iter().map(|&j| g[i][j].clone()).collect())
                .collect()
        })
        .collect();
    let odd_dim = parity.iter().filter(|&&p| p).count();
    Ok(MatrixRep {
        mode: f,
        generators,
        even_dim: n - odd_dim,
        odd_dim,
        diagonal: represented,
        basis: diag.basis,
        rescale,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::GroupSpec;
    use num_rational::BigRational;

    fn s(v: i64) -> Scalar {
        Scalar::from_integer(v.into())
    }

    fn qs(g: &[Vec<i64>], mode: FieldMode) -> QuadraticSpace {
        QuadraticSpace::from_integers(g, mode).unwrap()
    }

    #[test]
    fn rejects_asymmetric() {
        assert_eq!(
            QuadraticSpace::from_integers(&[vec![0, 1], vec![2, 0]], FieldMode::Rationals),
            Err(CliffordError::NotSymmetric)
        );
    }

    #[test]
    fn gram_from_q2_weight() {
        let d = RootDatum::build(GroupSpec::Queer { n: 2 }).unwrap();
        let g = gram_from_weight(&d, &HalfWeight::integral(&[1, 3]).unwrap(), FieldMode::Rationals).unwrap();
        assert_eq!(g, qs(&[vec![2, 0], vec![0, 6]], FieldMode::Rationals));
        let z = gram_from_weight(&d, &HalfWeight::integral(&[0, 0]).unwrap(), FieldMode::Rationals).unwrap();
        assert_eq!(z, qs(&[vec![0, 0], vec![0, 0]], FieldMode::Rationals));
        let gl = RootDatum::build(GroupSpec::GeneralLinear { m: 2, n: 1 }).unwrap();
        let e = gram_from_weight(&gl, &HalfWeight::integral(&[4, 1, 7]).unwrap(), FieldMode::Rationals).unwrap();
        assert_eq!(e.dim(), 0);
        let c = classify(&e);
        assert_eq!((c.delta_class, c.simple_type), (SquareClass::Zero, SimpleType::M));
    }

    #[test]
    fn diagonalize_hyperbolic_plane() {
        let q = qs(&[vec![0, 1], vec![1, 0]], FieldMode::Rationals);
        let dg = diagonalize(&q);
        assert_eq!(dg.diagonal, vec![s(2), s(-2)]);
        // basis x + y, y - x
        assert_eq!(dg.basis, vec![vec![s(1), s(-1)], vec![s(1), s(1)]]);
        let t = q.transform(&dg.basis).unwrap();
        assert_eq!(t, qs(&[vec![2, 0], vec![0, -2]], FieldMode::Rationals));
    }

    #[test]
    fn diagonalize_puts_radical_last() {
        let dg = diagonalize(&qs(&[vec![0, 0], vec![0, 3]], FieldMode::Rationals));
        assert_eq!(dg.diagonal, vec![s(3), s(0)]);
        let c = classify(&qs(&[vec![0, 0], vec![0, 3]], FieldMode::Rationals));
        assert_eq!(c.rad_dim, 1);
        let z = diagonalize(&qs(&[vec![0, 0], vec![0, 0]], FieldMode::Rationals));
        assert!(z.diagonal.iter().all(Zero::is_zero));
    }

    #[test]
    fn classify_zero_form() {
        for r in 0..4 {
            let c = classify(&QuadraticSpace::diagonal(&vec![0; r], FieldMode::closed(0).unwrap()).unwrap());
            assert_eq!(c.delta_class, SquareClass::Zero);
            assert_eq!(c.simple_type, SimpleType::M);
            assert_eq!(c.closed_dim, Some(1));
        }
    }

    #[test]
    fn classify_diag_2_6() {
        let c = classify(&QuadraticSpace::diagonal(&[2, 6], FieldMode::Rationals).unwrap());
        assert_eq!(c.d, 2);
        assert_eq!(c.delta, s(-12));
        assert_eq!(c.delta_class, SquareClass::NonSquare);
        assert_eq!(c.simple_type, SimpleType::Q);
        assert_eq!(c.closed_dim, None);
        let c = classify(&QuadraticSpace::diagonal(&[2, 6], FieldMode::closed(0).unwrap()).unwrap());
        assert_eq!((c.delta_class, c.simple_type, c.closed_dim), (SquareClass::Square, SimpleType::M, Some(2)));
    }

    #[test]
    fn classify_diag_1_1_mod_3_and_5() {
        let c3 = classify(&QuadraticSpace::diagonal(&[1, 1], FieldMode::PrimeField(3)).unwrap());
        assert_eq!(c3.delta, s(2));
        assert_eq!((c3.delta_class, c3.simple_type), (SquareClass::NonSquare, SimpleType::Q));
        let c5 = classify(&QuadraticSpace::diagonal(&[1, 1], FieldMode::PrimeField(5)).unwrap());
        assert_eq!(c5.delta, s(4));
        assert_eq!((c5.delta_class, c5.simple_type), (SquareClass::Square, SimpleType::M));
    }

    #[test]
    fn classification_record_shape() {
        let c = classify(&QuadraticSpace::diagonal(&[2, 6], FieldMode::Rationals).unwrap());
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(
            v.to_string(),
            r#"{"closed_dim":null,"d":2,"delta_class":"NonSquare","isotropic_dim":1,"r":2,"rad_dim":0,"type":"Q"}"#
        );
    }

    #[test]
    fn rep_rank_one() {
        let rep = construct_rep(&QuadraticSpace::diagonal(&[1], FieldMode::Rationals).unwrap()).unwrap();
        assert_eq!(rep.generators, vec![vec![vec![s(0), s(1)], vec![s(1), s(0)]]]);
        assert_eq!((rep.even_dim, rep.odd_dim), (1, 1));
        assert!(rep.relations_hold() && rep.generators_are_odd());
    }

    #[test]
    fn rep_split_plane() {
        let rep = construct_rep(&QuadraticSpace::diagonal(&[1, -1], FieldMode::Rationals).unwrap()).unwrap();
        assert_eq!(rep.generators[0], vec![vec![s(0), s(1)], vec![s(1), s(0)]]);
        assert_eq!(rep.generators[1], vec![vec![s(0), s(-1)], vec![s(1), s(0)]]);
        assert!(rep.relations_hold() && rep.generators_are_odd());
    }

    #[test]
    fn rep_needs_square_root() {
        let err = construct_rep(&QuadraticSpace::diagonal(&[2, 6], FieldMode::Rationals).unwrap()).unwrap_err();
        assert!(matches!(err, CliffordError::SquareRootUnavailable(_)));
        // the same form over the closure rescales formally
        let rep = construct_rep(&QuadraticSpace::diagonal(&[2, 6], FieldMode::closed(0).unwrap()).unwrap()).unwrap();
        assert_eq!(rep.diagonal, vec![s(2), s(-2)]);
        assert_eq!(rep.rescale[1], BigRational::from_integer((-3).into()));
        assert!(rep.relations_hold());
        assert_eq!(rep.dim(), 2);
    }

    #[test]
    fn rep_with_radical() {
        let q = qs(&[vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 3]], FieldMode::closed(0).unwrap());
        let rep = construct_rep(&q).unwrap();
        assert_eq!(rep.dim(), 2);
        assert_eq!(rep.generators.len(), 3);
        assert!(rep.generators[2].iter().flatten().all(Zero::is_zero));
        assert!(rep.relations_hold() && rep.generators_are_odd());
        let zero = construct_rep(&QuadraticSpace::diagonal(&[0, 0], FieldMode::Rationals).unwrap()).unwrap();
        assert_eq!((zero.even_dim, zero.odd_dim), (1, 0));
    }
}
