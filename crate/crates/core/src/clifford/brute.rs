//! Exhaustive oracle for the simple supermodules of small Clifford superalgebras.
//!
//! `C(V, b)` over `F_p` is materialized on the monomial basis `x_S` straight
//! from the defining relations of the given Gram matrix (no diagonalization).
//! Every nonzero graded submodule of the regular supermodule contains a cyclic
//! one generated by a homogeneous vector, so enumerating all homogeneous
//! vectors finds every minimal graded submodule. Isomorphism of simples is
//! decided by solving for nonzero homogeneous module maps.

use std::collections::BTreeSet;

use num_traits::ToPrimitive;

use super::{CliffordError, QuadraticSpace, SimpleType};
use crate::field::FieldMode;

pub const BRUTE_FORCE_MAX_RANK: usize = 3;
pub const BRUTE_FORCE_MAX_PRIME: u64 = 7;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForceReport {
    pub simple_type: SimpleType,
    /// All minimal graded left ideals are isomorphic up to parity change.
    pub unique_up_to_parity: bool,
    /// Number of distinct minimal graded left ideals found.
    pub minimal_count: usize,
    /// `(even, odd)` dimension of the first minimal ideal.
    pub simple_dims: (usize, usize),
}

type Vector = Vec<u64>;

struct Fp(u64);

impl Fp {
    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.0
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.0
    }
    fn neg(&self, a: u64) -> u64 {
        (self.0 - a % self.0) % self.0
    }
    fn inv(&self, a: u64) -> u64 {
        let mut r = 1;
        let (mut b, mut e) = (a % self.0, self.0 - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    /// Reduced row echelon form of the span of `rows`, zero rows dropped.
    fn rref(&self, rows: &[Vector]) -> Vec<Vector> {
        let mut m: Vec<Vector> = rows.to_vec();
        let ncols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..ncols {
            let Some(piv) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, piv);
            let inv = self.inv(m[rank][col]);
            for x in m[rank].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for r in 0..m.len() {
                if r != rank && m[r][col] != 0 {
                    let factor = m[r][col];
                    for c in 0..ncols {
                        let sub = self.mul(factor, m[rank][c]);
                        m[r][c] = self.add(m[r][c], self.neg(sub));
                    }
                }
            }
            rank += 1;
        }
        m.truncate(rank);
        m
    }

    fn nullity(&self, equations: &[Vector], unknowns: usize) -> usize {
        unknowns - self.rref(equations).len()
    }
}

/// Multiplication table of `C(V, b)` on monomials indexed by bitmask.
struct CliffordAlgebra {
    field: Fp,
    r: usize,
    gram: Vec<Vec<u64>>,
    /// Basis order: even monomials first, then odd.
    order: Vec<usize>,
    /// Position of each bitmask in `order`.
    position: Vec<usize>,
}

impl CliffordAlgebra {
    fn new(p: u64, gram: Vec<Vec<u64>>) -> Self {
        let r = gram.len();
        let mut order: Vec<usize> = (0..1 << r).collect();
        order.sort_by_key(|m: &usize| (m.count_ones() % 2, *m));
        let mut position = vec![0; 1 << r];
        for (i, &m) in order.iter().enumerate() {
            position[m] = i;
        }
        Self {
            field: Fp(p),
            r,
            gram,
            order,
            position,
        }
    }

    fn dim(&self) -> usize {
        1 << self.r
    }

    fn even_dim(&self) -> usize {
        if self.r == 0 { 1 } else { self.dim() / 2 }
    }

    /// Normal-orders a word in the generators into a combination of
    /// increasing monomials using `x_i x_j = -x_j x_i + 2 b_ij` and
    /// `x_i x_i = b_ii`.
    fn reduce_word(&self, word: Vec<usize>, coeff: u64, out: &mut [u64]) {
        if coeff == 0 {
            return;
        }
        let f = &self.field;
        match word.windows(2).position(|w| w[0] >= w[1]) {
            None => {
                let mask = word.iter().fold(0usize, |m, &i| m | 1 << i);
                let k = self.position[mask];
                out[k] = f.add(out[k], coeff);
            }
            Some(k) => {
                let (i, j) = (word[k], word[k + 1]);
                let mut rest = word.clone();
                rest.drain(k..k + 2);
                if i == j {
                    self.reduce_word(rest, f.mul(coeff, self.gram[i][i]), out);
                } else {
                    let mut swapped = word;
                    swapped.swap(k, k + 1);
                    self.reduce_word(swapped, f.neg(coeff), out);
                    let two_b = f.mul(2, self.gram[i][j]);
                    self.reduce_word(rest, f.mul(coeff, two_b), out);
                }
            }
        }
    }

    /// `x_mask · v` for a vector `v` in the monomial basis.
    fn left_mul(&self, mask: usize, v: &[u64]) -> Vector {
        let mut out = vec![0; self.dim()];
        let left: Vec<usize> = (0..self.r).filter(|i| mask >> i & 1 == 1).collect();
        for (k, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let m = self.order[k];
            let mut word = left.clone();
            word.extend((0..self.r).filter(|i| m >> i & 1 == 1));
            self.reduce_word(word, c, &mut out);
        }
        out
    }

    /// `A·v` as a reduced echelon basis.
    fn cyclic(&self, v: &[u64]) -> Vec<Vector> {
        let images: Vec<Vector> = (0..self.dim()).map(|mask| self.left_mul(mask, v)).collect();
        self.field.rref(&images)
    }

    fn contains(&self, big: &[Vector], small: &[Vector]) -> bool {
        let mut all = big.to_vec();
        all.extend_from_slice(small);
        self.field.rref(&all).len() == big.len()
    }

    fn parity_of(&self, v: &[u64]) -> usize {
        let pivot = v.iter().position(|&x| x != 0).expect("nonzero row");
        usize::from(pivot >= self.even_dim())
    }

    /// Dimension of the space of `A`-linear maps `M → N` of the given
    /// parity (0 even, 1 odd); both given by homogeneous echelon bases.
    fn hom_dim(&self, m: &[Vector], n: &[Vector], parity: usize) -> usize {
        let f = &self.field;
        let (dm, dn) = (m.len(), n.len());
        // Unknown F[a][b]: coefficient of n_a in the image of m_b.
        let allowed: Vec<(usize, usize)> = (0..dn)
            .flat_map(|a| (0..dm).map(move |b| (a, b)))
            .filter(|&(a, b)| (self.parity_of(&n[a]) + parity) % 2 == self.parity_of(&m[b]))
            .collect();
        let pivots = |basis: &[Vector]| -> Vec<usize> {
            basis.iter().map(|row| row.iter().position(|&x| x != 0).unwrap()).collect()
        };
        let (pm, pn) = (pivots(m), pivots(n));
        let coords = |v: &[u64], piv: &[usize]| -> Vec<u64> { piv.iter().map(|&c| v[c]).collect() };
        let mut equations = Vec::new();
        for g in 0..self.r {
            let act_m: Vec<Vec<u64>> = m.iter().map(|v| coords(&self.left_mul(1 << g, v), &pm)).collect();
            let act_n: Vec<Vec<u64>> = n.iter().map(|v| coords(&self.left_mul(1 << g, v), &pn)).collect();
            // F(g m_b) = g F(m_b), compared on the n-basis coordinate a.
            for b in 0..dm {
                for a in 0..dn {
                    let mut eq = vec![0; allowed.len()];
                    for (u, &(a2, b2)) in allowed.iter().enumerate() {
                        // Σ_c act_m[b][c] F[a][c]
                        if a2 == a {
                            eq[u] = f.add(eq[u], act_m[b][b2]);
                        }
                        // Σ_c act_n[c][a] F[c][b]
                        if b2 == b {
                            eq[u] = f.add(eq[u], f.neg(act_n[a2][a]));
                        }
                    }
                    equations.push(eq);
                }
            }
        }
        if allowed.is_empty() {
            return 0;
        }
        f.nullity(&equations, allowed.len())
    }
}

/// Enumerates all vectors over `F_p` supported on `range` whose first
/// nonzero entry is 1.
fn projective_points(p: u64, dim: usize, range: std::ops::Range<usize>) -> Vec<Vector> {
    let len = range.len();
    let mut out = Vec::new();
    let total = p.pow(len as u32);
    for code in 1..total {
        let mut digits = Vec::with_capacity(len);
        let mut c = code;
        for _ in 0..len {
            digits.push(c % p);
            c /= p;
        }
        if digits.iter().find(|&&x| x != 0) != Some(&1) {
            continue;
        }
        let mut v = vec![0; dim];
        v[range.clone()].copy_from_slice(&digits);
        out.push(v);
    }
    out
}

/// Exhaustive classification of the simple `C(V, b)`-supermodules over `F_p`
/// for `dim V ≤ 3` and `p ≤ 7`.
pub fn brute_force_classify(qs: &QuadraticSpace) -> Result<BruteForceReport, CliffordError> {
    let FieldMode::PrimeField(p) = qs.mode() else {
        return Err(CliffordError::UnsupportedField(format!(
            "brute force needs a prime field, got {}",
            qs.mode()
        )));
    };
    if qs.dim() > BRUTE_FORCE_MAX_RANK || p > BRUTE_FORCE_MAX_PRIME {
        return Err(CliffordError::InstanceTooLarge(format!(
            "dim {} over F_{p} exceeds dim <= {BRUTE_FORCE_MAX_RANK}, p <= {BRUTE_FORCE_MAX_PRIME}",
            qs.dim()
        )));
    }
    let gram = qs
        .gram()
        .iter()
        .map(|row| row.iter().map(|x| x.numer().to_u64().expect("reduced residue")).collect())
        .collect();
    let alg = CliffordAlgebra::new(p, gram);
    let (n, e) = (alg.dim(), alg.even_dim());

    let mut cyclic: BTreeSet<Vec<Vector>> = BTreeSet::new();
    let homogeneous = projective_points(p, n, 0..e)
        .into_iter()
        .chain(projective_points(p, n, e..n));
    for v in homogeneous {
        cyclic.insert(alg.cyclic(&v));
    }
    let cyclic: Vec<Vec<Vector>> = cyclic.into_iter().collect();
    let minimal: Vec<&Vec<Vector>> = cyclic
        .iter()
        .filter(|u| {
            !cyclic
                .iter()
                .any(|w| w.len() < u.len() && alg.contains(u, w))
        })
        .collect();

    let first = minimal[0];
    let unique_up_to_parity = minimal
        .iter()
        .all(|u| alg.hom_dim(first, u, 0) > 0 || alg.hom_dim(first, u, 1) > 0);
    let simple_type = if alg.hom_dim(first, first, 1) > 0 {
        SimpleType::Q
    } else {
        SimpleType::M
    };
    let even = first.iter().filter(|v| alg.parity_of(v) == 0).count();
    Ok(BruteForceReport {
        simple_type,
        unique_up_to_parity,
        minimal_count: minimal.len(),
        simple_dims: (even, first.len() - even),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(diag: &[i64], p: u64) -> BruteForceReport {
        brute_force_classify(&QuadraticSpace::diagonal(diag, FieldMode::PrimeField(p)).unwrap()).unwrap()
    }

    #[test]
    fn diag_1_1_mod_3_is_queer() {
        let r = run(&[1, 1], 3);
        assert_eq!(r.simple_type, SimpleType::Q);
        assert!(r.unique_up_to_parity);
    }

    #[test]
    fn zero_form_rank_one_is_type_m() {
        let r = run(&[0], 3);
        assert_eq!(r.simple_type, SimpleType::M);
        assert!(r.unique_up_to_parity);
        assert_eq!(r.simple_dims, (0, 1));
    }

    #[test]
    fn split_plane_mod_3_is_type_m() {
        let r = run(&[1, -1], 3);
        assert_eq!(r.simple_type, SimpleType::M);
        assert!(r.unique_up_to_parity);
        assert_eq!(r.simple_dims.0 + r.simple_dims.1, 2);
    }

    #[test]
    fn non_diagonal_gram() {
        let q = QuadraticSpace::from_integers(&[vec![0, 1], vec![1, 0]], FieldMode::PrimeField(5)).unwrap();
        let r = brute_force_classify(&q).unwrap();
        // hyperbolic plane: δ = -(2·-2) = 4 is a square, d even
        assert_eq!(r.simple_type, SimpleType::M);
    }

    #[test]
    fn caps_enforced() {
        let big = QuadraticSpace::diagonal(&[1, 1, 1, 1], FieldMode::PrimeField(3)).unwrap();
        assert!(matches!(brute_force_classify(&big), Err(CliffordError::InstanceTooLarge(_))));
        let big_p = QuadraticSpace::diagonal(&[1], FieldMode::PrimeField(11)).unwrap();
        assert!(matches!(brute_force_classify(&big_p), Err(CliffordError::InstanceTooLarge(_))));
        let q = QuadraticSpace::diagonal(&[1], FieldMode::Rationals).unwrap();
        assert!(matches!(brute_force_classify(&q), Err(CliffordError::UnsupportedField(_))));
    }
}
