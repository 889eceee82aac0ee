//! Exact arithmetic in the group algebra `Z[1/2 Λ]`.
//!
//! Weights are stored with doubled integer coordinates so that half-integral
//! weights such as `ρ₀` live in an integer lattice. A [`CharacterPoly`] is a
//! finitely supported map from weights to nonzero arbitrary-precision
//! integers; multiplication is the group-algebra convolution and
//! [`CharacterPoly::exact_divide`] recovers quotients such as
//! `A(λ+ρ₀)/A(ρ₀)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("RankMismatch: expected rank {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("ZeroRank: weights must have rank at least 1")]
    ZeroRank,
    #[error("DivisionByZero: divisor is the zero character")]
    DivisionByZero,
    #[error("NotDivisible: the dividend is not a multiple of the divisor")]
    NotDivisible,
}

/// An element of `1/2 Λ ≅ 1/2 Z^ℓ`, stored as twice its coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfWeight {
    doubled: Vec<i64>,
}

impl HalfWeight {
    pub fn from_doubled(doubled: Vec<i64>) -> Result<Self, LaurentError> {
        if doubled.is_empty() {
            return Err(LaurentError::ZeroRank);
        }
        Ok(Self { doubled })
    }

    /// Weight with integral coordinates `d_i`, i.e. `Σ d_i λ_i`.
    pub fn integral(coords: &[i64]) -> Result<Self, LaurentError> {
        Self::from_doubled(coords.iter().map(|c| 2 * c).collect())
    }

    pub fn zero(rank: usize) -> Self {
        assert!(rank >= 1, "weights must have rank at least 1");
        Self {
            doubled: vec![0; rank],
        }
    }

    /// The basis weight `λ_i` (0-based index).
    pub fn basis(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.doubled[i] = 2;
        w
    }

    pub fn rank(&self) -> usize {
        self.doubled.len()
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    pub fn is_zero(&self) -> bool {
        self.doubled.iter().all(|&d| d == 0)
    }

    pub fn is_integral(&self) -> bool {
        self.doubled.iter().all(|d| d % 2 == 0)
    }

    /// Integer coordinates, if the weight is integral.
    pub fn coords(&self) -> Option<Vec<i64>> {
        self.is_integral()
            .then(|| self.doubled.iter().map(|d| d / 2).collect())
    }

    fn check_rank(&self, other: &Self) -> Result<(), LaurentError> {
        if self.rank() != other.rank() {
            return Err(LaurentError::RankMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_rank(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_rank(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    /// Sum assuming equal ranks; panics otherwise.
    pub fn plus(&self, other: &Self) -> Self {
        self.checked_add(other).expect("rank mismatch")
    }

    /// Difference assuming equal ranks; panics otherwise.
    pub fn minus(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("rank mismatch")
    }

    pub fn neg(&self) -> Self {
        Self {
            doubled: self.doubled.iter().map(|d| -d).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        Self {
            doubled: self.doubled.iter().map(|d| k * d).collect(),
        }
    }

    /// Halves the weight; `None` if the result leaves `1/2 Λ`.
    pub fn halve(&self) -> Option<Self> {
        self.doubled
            .iter()
            .all(|d| d % 2 == 0)
            .then(|| Self {
                doubled: self.doubled.iter().map(|d| d / 2).collect(),
            })
    }

    /// Doubled value of the pairing `⟨self, v⟩ = Σ self_i v_i`.
    pub fn pairing_doubled(&self, v: &[i64]) -> i64 {
        self.doubled.iter().zip(v).map(|(a, b)| a * b).sum()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(i64, i64) -> i64) -> Self {
        Self {
            doubled: self
                .doubled
                .iter()
                .zip(&other.doubled)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Renders the weight as a linear combination `L1 - L2`, `1/2L1`, ...
    pub fn to_combination(&self) -> String {
        let mut out = String::new();
        for (i, &d) in self.doubled.iter().enumerate() {
            if d == 0 {
                continue;
            }
            let sign = if d < 0 { '-' } else { '+' };
            if out.is_empty() {
                if d < 0 {
                    out.push('-');
                }
            } else {
                out.push(' ');
                out.push(sign);
                out.push(' ');
            }
            let a = d.abs();
            match (a % 2 == 0, a / 2) {
                (true, 1) => {}
                (true, k) => out.push_str(&k.to_string()),
                (false, _) => out.push_str(&format!("{a}/2")),
            }
            out.push_str(&format!("L{}", i + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for HalfWeight {
    /// Coordinate tuple, e.g. `(1/2, -1/2, 0)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.doubled.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", half_to_string(*d))?;
        }
        write!(f, ")")
    }
}

pub(crate) fn half_to_string(doubled: i64) -> String {
    if doubled % 2 == 0 {
        (doubled / 2).to_string()
    } else {
        format!("{doubled}/2")
    }
}

/// Element of `Z[1/2 Λ]`: a finite integer combination of `e^w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterPoly {
    rank: usize,
    terms: BTreeMap<HalfWeight, BigInt>,
}

impl CharacterPoly {
    pub fn zero(rank: usize) -> Self {
        assert!(rank >= 1, "characters must have rank at least 1");
        Self {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::mono(HalfWeight::zero(rank))
    }

    /// The basis element `e^w`.
    pub fn mono(w: HalfWeight) -> Self {
        Self::term(w, BigInt::one())
    }

    pub fn term(w: HalfWeight, coeff: BigInt) -> Self {
        let mut p = Self::zero(w.rank());
        if !coeff.is_zero() {
            p.terms.insert(w, coeff);
        }
        p
    }

    /// Builds a character from `(weight, coefficient)` pairs, merging repeats.
    pub fn from_terms<I>(rank: usize, terms: I) -> Result<Self, LaurentError>
    where
        I: IntoIterator<Item = (HalfWeight, BigInt)>,
    {
        let mut p = Self::zero(rank);
        for (w, c) in terms {
            if w.rank() != rank {
                return Err(LaurentError::RankMismatch {
                    expected: rank,
                    found: w.rank(),
                });
            }
            p.add_term(w, c);
        }
        Ok(p)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of weights with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of the doubled exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&HalfWeight, &BigInt)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &HalfWeight> {
        self.terms.keys()
    }

    pub fn leading_term(&self) -> Option<(&HalfWeight, &BigInt)> {
        self.terms.iter().next_back()
    }

    fn check_rank(&self, other: &Self) -> Result<(), LaurentError> {
        if self.rank != other.rank {
            return Err(LaurentError::RankMismatch {
                expected: self.rank,
                found: other.rank,
            });
        }
        Ok(())
    }

    fn add_term(&mut self, w: HalfWeight, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LaurentError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.rank);
        }
        Self {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }

    /// Multiplies by the monomial `e^w`.
    pub fn shift(&self, w: &HalfWeight) -> Result<Self, LaurentError> {
        if w.rank() != self.rank {
            return Err(LaurentError::RankMismatch {
                expected: self.rank,
                found: w.rank(),
            });
        }
        Ok(Self {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(v, c)| (v.plus(w), c.clone()))
                .collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.rank);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.plus(b), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.rank);
        for _ in 0..k {
            out = out.mul(self).expect("same rank");
        }
        out
    }

    /// Returns the unique `r` with `divisor · r = self`.
    ///
    /// Lexicographic leading-term elimination. If `self = q·r` then in every
    /// coordinate the extreme exponents of `r` are the differences of those
    /// of `self` and `q`, so every quotient term lies in a finite box; a
    /// candidate term outside that box proves non-divisibility.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self, LaurentError> {
        self.check_rank(divisor)?;
        let (q_lead, q_coeff) = divisor.leading_term().ok_or(LaurentError::DivisionByZero)?;
        if self.is_zero() {
            return Ok(Self::zero(self.rank));
        }
        let (p_lo, p_hi) = self.exponent_box();
        let (q_lo, q_hi) = divisor.exponent_box();
        let lo: Vec<i64> = p_lo.iter().zip(&q_lo).map(|(a, b)| a - b).collect();
        let hi: Vec<i64> = p_hi.iter().zip(&q_hi).map(|(a, b)| a - b).collect();

        let mut rem = self.clone();
        let mut quotient = Self::zero(self.rank);
        while let Some((r_lead, r_coeff)) = rem.leading_term() {
            let exp = r_lead.minus(q_lead);
            let in_box = exp
                .doubled()
                .iter()
                .zip(lo.iter().zip(&hi))
                .all(|(e, (l, h))| l <= e && e <= h);
            if !in_box {
                return Err(LaurentError::NotDivisible);
            }
            let (c, m) = r_coeff.div_rem(q_coeff);
            if !m.is_zero() {
                return Err(LaurentError::NotDivisible);
            }
            for (w, cw) in &divisor.terms {
                rem.add_term(w.plus(&exp), -(cw * &c));
            }
            quotient.add_term(exp, c);
        }
        Ok(quotient)
    }

    /// Per-coordinate minimum and maximum doubled exponent over the support.
    fn exponent_box(&self) -> (Vec<i64>, Vec<i64>) {
        let mut lo = vec![i64::MAX; self.rank];
        let mut hi = vec![i64::MIN; self.rank];
        for w in self.terms.keys() {
            for (i, &d) in w.doubled().iter().enumerate() {
                lo[i] = lo[i].min(d);
                hi[i] = hi[i].max(d);
            }
        }
        (lo, hi)
    }

    /// Evaluation at `e^w ↦ 1`: the sum of all coefficients.
    pub fn dim_eval(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn coefficient(&self, w: &HalfWeight) -> Result<BigInt, LaurentError> {
        if w.rank() != self.rank {
            return Err(LaurentError::RankMismatch {
                expected: self.rank,
                found: w.rank(),
            });
        }
        Ok(self.terms.get(w).cloned().unwrap_or_default())
    }

    /// Applies a map on weights termwise, merging coinciding images.
    pub fn map_weights(&self, f: impl Fn(&HalfWeight) -> HalfWeight) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, c) in &self.terms {
            out.add_term(f(w), c.clone());
        }
        out
    }

    /// Re-indexes into rank `rank`, placing variable `i` at `i + offset`.
    pub fn embed(&self, rank: usize, offset: usize) -> Result<Self, LaurentError> {
        if offset + self.rank > rank {
            return Err(LaurentError::RankMismatch {
                expected: rank,
                found: offset + self.rank,
            });
        }
        let mut out = Self::zero(rank);
        for (w, c) in &self.terms {
            let mut d = vec![0; rank];
            d[offset..offset + self.rank].copy_from_slice(w.doubled());
            out.add_term(HalfWeight { doubled: d }, c.clone());
        }
        Ok(out)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, w: &HalfWeight) -> Result<bool, fmt::Error> {
    let mut wrote = false;
    for (i, &d) in w.doubled().iter().enumerate() {
        if d == 0 {
            continue;
        }
        if wrote {
            write!(f, "*")?;
        }
        write!(f, "t{}", i + 1)?;
        if d != 2 {
            if d > 0 && d % 2 == 0 {
                write!(f, "^{}", d / 2)?;
            } else {
                write!(f, "^({})", half_to_string(d))?;
            }
        }
        wrote = true;
    }
    Ok(wrote)
}

impl fmt::Display for CharacterPoly {
    /// Terms in descending lexicographic order, e.g. `t1^2 - 3*t1^(1/2)*t2^(-1/2) + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if w.is_zero() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, w)?;
            }
        }
        Ok(())
    }
}

/// Serialized term record: `{"doubled": [...], "coeff": n}`.
///
/// Coefficients that fit in `i64` are JSON integers; larger ones are decimal
/// strings.
#[derive(Serialize, Deserialize)]
struct TermRecord {
    doubled: Vec<i64>,
    coeff: CoeffRepr,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Small(i64),
    Big(String),
}

impl CoeffRepr {
    fn from_bigint(c: &BigInt) -> Self {
        match i64::try_from(c) {
            Ok(v) => Self::Small(v),
            Err(_) => Self::Big(c.to_string()),
        }
    }

    fn to_bigint(&self) -> Option<BigInt> {
        match self {
            Self::Small(v) => Some(BigInt::from(*v)),
            Self::Big(s) => s.parse().ok(),
        }
    }
}

impl Serialize for CharacterPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (w, c) in &self.terms {
            seq.serialize_element(&TermRecord {
                doubled: w.doubled.clone(),
                coeff: CoeffRepr::from_bigint(c),
            })?;
        }
        seq.end()
    }
}

/// Deserialization needs the rank; an empty list cannot carry it, so the
/// zero character is only recoverable through [`CharacterPoly::from_records`].
impl<'de> Deserialize<'de> for CharacterPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        let rank = records
            .first()
            .map(|r| r.doubled.len())
            .ok_or_else(|| de::Error::custom("empty term list carries no rank"))?;
        Self::from_records_inner(rank, records).map_err(de::Error::custom)
    }
}

impl CharacterPoly {
    /// Rebuilds a character of known rank from `(doubled, coeff)` records.
    /// Unlike deserialization this also accepts the empty (zero) list.
    pub fn from_records(rank: usize, records: Vec<(Vec<i64>, BigInt)>) -> Result<Self, String> {
        let records = records
            .into_iter()
            .map(|(doubled, c)| TermRecord {
                doubled,
                coeff: CoeffRepr::Big(c.to_string()),
            })
            .collect();
        Self::from_records_inner(rank, records)
    }

    fn from_records_inner(rank: usize, records: Vec<TermRecord>) -> Result<Self, String> {
        let mut p = Self::zero(rank);
        for r in records {
            let w = HalfWeight::from_doubled(r.doubled).map_err(|e| e.to_string())?;
            if w.rank() != rank {
                return Err(format!("term of rank {} in character of rank {rank}", w.rank()));
            }
            let c = r.coeff.to_bigint().ok_or("malformed coefficient")?;
            if c.is_zero() {
                return Err("zero coefficient in serialized character".into());
            }
            if p.terms.contains_key(&w) {
                return Err("repeated weight in serialized character".into());
            }
            p.terms.insert(w, c);
        }
        Ok(p)
    }
}
