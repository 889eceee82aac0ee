//! Super root data, `γ`-polarizations, dominance and the Weyl group.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::laurent::{HalfWeight, LaurentError};

/// Default cap on the number of Weyl group elements enumerated.
pub const DEFAULT_WEYL_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootDataError {
    #[error("SizeOutOfRange: {0}")]
    SizeOutOfRange(String),
    #[error("InvalidGroupSpec: {0}")]
    InvalidGroupSpec(String),
    #[error("InvalidDatum: {0}")]
    InvalidDatum(String),
    #[error("GammaVanishesOnRoot: gamma is zero on the root {0}")]
    GammaVanishesOnRoot(String),
    #[error("InvalidGamma: {0}")]
    InvalidGamma(String),
    #[error("InvalidCharacteristic: {0} (expected 0 or a value greater than 2)")]
    InvalidCharacteristic(i64),
    #[error("GroupTooLarge: Weyl group exceeds {0} elements")]
    GroupTooLarge(usize),
    #[error("NotIntegral: weight {0} is not integral")]
    NotIntegral(String),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// One of the supported supergroup families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupSpec {
    /// `GL(m|n)`.
    GeneralLinear { m: usize, n: usize },
    /// The queer supergroup `Q(n)`.
    Queer { n: usize },
    /// The periplectic supergroup `P(n)`.
    Periplectic { n: usize },
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::GeneralLinear { m, n } => write!(f, "GL({m}|{n})"),
            Self::Queer { n } => write!(f, "Q({n})"),
            Self::Periplectic { n } => write!(f, "P({n})"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = RootDataError;

    /// Accepts `gl:m,n`, `q:n` and `p:n`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RootDataError::InvalidGroupSpec(s.to_string());
        let (family, args) = s.split_once(':').ok_or_else(bad)?;
        let nums = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| bad())?;
        match (family.trim().to_ascii_lowercase().as_str(), nums.as_slice()) {
            ("gl", [m, n]) => Ok(Self::GeneralLinear { m: *m, n: *n }),
            ("q", [n]) => Ok(Self::Queer { n: *n }),
            ("p", [n]) => Ok(Self::Periplectic { n: *n }),
            _ => Err(bad()),
        }
    }
}

/// Even and odd roots, coroots and odd Cartan bracket data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    name: String,
    rank: usize,
    even_roots: BTreeSet<HalfWeight>,
    coroots: BTreeMap<HalfWeight, Vec<i64>>,
    odd_roots: BTreeMap<HalfWeight, u32>,
    odd_cartan_dim: usize,
    /// `bracket[t][s]` holds `c(t,s)` with `[K_t,K_s] = Σ_i c(t,s)_i H_i`.
    odd_cartan_bracket: Vec<Vec<Vec<i64>>>,
    simple_even_roots: Vec<HalfWeight>,
}

fn root_diff(rank: usize, i: usize, j: usize) -> HalfWeight {
    HalfWeight::basis(rank, i).minus(&HalfWeight::basis(rank, j))
}

fn coroot_diff(rank: usize, i: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; rank];
    v[i] = 1;
    v[j] = -1;
    v
}

/// Type A roots `λ_i - λ_j` for `i ≠ j` in `range`, with coroots `e_i - e_j`.
fn type_a_block(
    rank: usize,
    range: std::ops::Range<usize>,
    roots: &mut BTreeSet<HalfWeight>,
    coroots: &mut BTreeMap<HalfWeight, Vec<i64>>,
    simple: &mut Vec<HalfWeight>,
) {
    for i in range.clone() {
        for j in range.clone() {
            if i != j {
                let a = root_diff(rank, i, j);
                coroots.insert(a.clone(), coroot_diff(rank, i, j));
                roots.insert(a);
            }
        }
        if i + 1 < range.end {
            simple.push(root_diff(rank, i, i + 1));
        }
    }
}

impl RootDatum {
    /// Validates and assembles a datum from explicit data.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        rank: usize,
        even_roots: BTreeSet<HalfWeight>,
        coroots: BTreeMap<HalfWeight, Vec<i64>>,
        odd_roots: BTreeMap<HalfWeight, u32>,
        odd_cartan_bracket: Vec<Vec<Vec<i64>>>,
        simple_even_roots: Vec<HalfWeight>,
    ) -> Result<Self, RootDataError> {
        let invalid = |m: String| Err(RootDataError::InvalidDatum(m));
        if rank == 0 {
            return invalid("rank must be at least 1".into());
        }
        for a in &even_roots {
            if a.rank() != rank || !a.is_integral() {
                return invalid(format!("even root {a} is not an integral weight of rank {rank}"));
            }
            if a.is_zero() {
                return invalid("0 is not an even root".into());
            }
            if !even_roots.contains(&a.neg()) {
                return invalid(format!("even roots are not closed under negation at {a}"));
            }
            let Some(c) = coroots.get(a) else {
                return invalid(format!("missing coroot for {a}"));
            };
            if c.len() != rank || a.pairing_doubled(c) != 4 {
                return invalid(format!("coroot of {a} does not pair to 2"));
            }
        }
        if coroots.keys().any(|a| !even_roots.contains(a)) {
            return invalid("coroot given for a non-root".into());
        }
        for (d, &m) in &odd_roots {
            if d.rank() != rank || d.is_zero() || !d.is_integral() || m == 0 {
                return invalid(format!("odd root {d} must be nonzero integral of rank {rank} with multiplicity >= 1"));
            }
        }
        let l1 = odd_cartan_bracket.len();
        for (t, row) in odd_cartan_bracket.iter().enumerate() {
            if row.len() != l1 || row.iter().any(|c| c.len() != rank) {
                return invalid("odd Cartan bracket has the wrong shape".into());
            }
            for s in 0..l1 {
                if row[s] != odd_cartan_bracket[s][t] {
                    return invalid("odd Cartan bracket is not symmetric".into());
                }
            }
        }
        if simple_even_roots.iter().any(|a| !even_roots.contains(a)) {
            return invalid("simple root is not an even root".into());
        }
        Ok(Self {
            name: name.into(),
            rank,
            even_roots,
            coroots,
            odd_roots,
            odd_cartan_dim: l1,
            odd_cartan_bracket,
            simple_even_roots,
        })
    }

    pub fn build(spec: GroupSpec) -> Result<Self, RootDataError> {
        let mut even = BTreeSet::new();
        let mut coroots = BTreeMap::new();
        let mut simple = Vec::new();
        let mut odd = BTreeMap::new();
        let mut bracket = Vec::new();
        let rank = match spec {
            GroupSpec::GeneralLinear { m, n } => {
                if m == 0 || n == 0 {
                    return Err(RootDataError::SizeOutOfRange(format!(
                        "GL(m|n) needs m, n >= 1, got {spec}"
                    )));
                }
                let rank = m + n;
                type_a_block(rank, 0..m, &mut even, &mut coroots, &mut simple);
                type_a_block(rank, m..rank, &mut even, &mut coroots, &mut simple);
                for i in 0..m {
                    for j in m..rank {
                        odd.insert(root_diff(rank, i, j), 1);
                        odd.insert(root_diff(rank, j, i), 1);
                    }
                }
                rank
            }
            GroupSpec::Queer { n } => {
                if n == 0 {
                    return Err(RootDataError::SizeOutOfRange("Q(n) needs n >= 1".into()));
                }
                type_a_block(n, 0..n, &mut even, &mut coroots, &mut simple);
                for a in &even {
                    odd.insert(a.clone(), 1);
                }
                // [K_t, K_s] = 2 δ_ts H_t
                bracket = (0..n)
                    .map(|t| {
                        (0..n)
                            .map(|s| {
                                let mut c = vec![0; n];
                                if t == s {
                                    c[t] = 2;
                                }
                                c
                            })
                            .collect()
                    })
                    .collect();
                n
            }
            GroupSpec::Periplectic { n } => {
                if n < 2 {
                    return Err(RootDataError::SizeOutOfRange("P(n) needs n >= 2".into()));
                }
                type_a_block(n, 0..n, &mut even, &mut coroots, &mut simple);
                for i in 0..n {
                    for j in i + 1..n {
                        let s = HalfWeight::basis(n, i).plus(&HalfWeight::basis(n, j));
                        odd.insert(s.neg(), 1);
                        odd.insert(s, 1);
                    }
                    odd.insert(HalfWeight::basis(n, i).scale(2), 1);
                }
                n
            }
        };
        Self::new(spec.to_string(), rank, even, coroots, odd, bracket, simple)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn even_roots(&self) -> &BTreeSet<HalfWeight> {
        &self.even_roots
    }

    pub fn coroot(&self, alpha: &HalfWeight) -> Option<&[i64]> {
        self.coroots.get(alpha).map(Vec::as_slice)
    }

    pub fn odd_roots(&self) -> &BTreeMap<HalfWeight, u32> {
        &self.odd_roots
    }

    /// `ℓ₁ = dim h₁`.
    pub fn odd_cartan_dim(&self) -> usize {
        self.odd_cartan_dim
    }

    pub fn odd_cartan_bracket(&self) -> &[Vec<Vec<i64>>] {
        &self.odd_cartan_bracket
    }

    /// Whether `h₁ ≠ 0`, i.e. whether `0` belongs to the full root set.
    pub fn zero_is_root(&self) -> bool {
        self.odd_cartan_dim > 0
    }

    pub fn simple_even_roots(&self) -> &[HalfWeight] {
        &self.simple_even_roots
    }

    /// Total odd root multiplicity `Σ m_δ` over all odd roots.
    pub fn total_odd_multiplicity(&self) -> u32 {
        self.odd_roots.values().sum()
    }

    pub fn check_weight(&self, w: &HalfWeight) -> Result<(), RootDataError> {
        if w.rank() != self.rank {
            return Err(LaurentError::RankMismatch {
                expected: self.rank,
                found: w.rank(),
            }
            .into());
        }
        Ok(())
    }
}

/// A homomorphism `γ : ZΔ → Q`, `γ(μ) = Σ values_i μ_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaFunctional {
    values: Vec<Rational64>,
}

impl GammaFunctional {
    pub fn new(values: Vec<Rational64>) -> Self {
        Self { values }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&v| Rational64::from_integer(v)).collect())
    }

    /// `γ(λ_i) = -i`.
    pub fn standard(rank: usize) -> Self {
        Self::from_integers(&(1..=rank as i64).map(|i| -i).collect::<Vec<_>>())
    }

    pub fn values(&self) -> &[Rational64] {
        &self.values
    }

    pub fn eval(&self, w: &HalfWeight) -> Rational64 {
        self.values
            .iter()
            .zip(w.doubled())
            .map(|(v, &d)| v * d)
            .sum::<Rational64>()
            / 2
    }
}

impl FromStr for GammaFunctional {
    type Err = RootDataError;

    /// Comma-separated rationals, e.g. `-1,-2,1/2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .map(|t| t.trim().parse::<Rational64>())
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
            .map_err(|_| RootDataError::InvalidGamma(s.to_string()))
    }
}

impl fmt::Display for GammaFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// A Weyl group element acting linearly on `Λ ⊗ Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    /// Row-major `ℓ × ℓ` integer matrix acting on coordinate column vectors.
    pub action: Vec<Vec<i64>>,
    /// `(-1)^{ℓ(w)}`.
    pub sign: i8,
    /// Length of a shortest word in the simple reflections.
    pub length: usize,
}

impl WeylElement {
    pub fn apply(&self, w: &HalfWeight) -> HalfWeight {
        let d = w.doubled();
        let out = self
            .action
            .iter()
            .map(|row| row.iter().zip(d).map(|(a, b)| a * b).sum())
            .collect();
        HalfWeight::from_doubled(out).expect("nonzero rank")
    }
}

/// A root datum together with the positive system cut out by `γ`.
#[derive(Debug, Clone)]
pub struct PolarizedDatum {
    datum: RootDatum,
    gamma: GammaFunctional,
    pos_even: BTreeSet<HalfWeight>,
    neg_even: BTreeSet<HalfWeight>,
    pos_odd: BTreeMap<HalfWeight, u32>,
    neg_odd: BTreeMap<HalfWeight, u32>,
    rho_even: HalfWeight,
    rho_odd: HalfWeight,
    rho: HalfWeight,
    weyl: OnceLock<Result<Vec<WeylElement>, RootDataError>>,
}

impl PolarizedDatum {
    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }
    pub fn gamma(&self) -> &GammaFunctional {
        &self.gamma
    }
    pub fn rank(&self) -> usize {
        self.datum.rank
    }
    pub fn pos_even(&self) -> &BTreeSet<HalfWeight> {
        &self.pos_even
    }
    pub fn neg_even(&self) -> &BTreeSet<HalfWeight> {
        &self.neg_even
    }
    pub fn pos_odd(&self) -> &BTreeMap<HalfWeight, u32> {
        &self.pos_odd
    }
    pub fn neg_odd(&self) -> &BTreeMap<HalfWeight, u32> {
        &self.neg_odd
    }
    /// `ρ₀ = ½ Σ_{α ∈ Δ₀⁺} α`.
    pub fn rho_even(&self) -> &HalfWeight {
        &self.rho_even
    }
    /// `ρ₁ = ½ Σ_{δ ∈ Δ₁⁺} m_δ δ`.
    pub fn rho_odd(&self) -> &HalfWeight {
        &self.rho_odd
    }
    /// `ρ = ρ₀ - ρ₁`.
    pub fn rho(&self) -> &HalfWeight {
        &self.rho
    }

    /// Total multiplicity of the positive odd roots.
    pub fn pos_odd_count(&self) -> u32 {
        self.pos_odd.values().sum()
    }

    /// All positive roots (even and odd), deduplicated.
    pub fn positive_roots(&self) -> BTreeSet<HalfWeight> {
        self.pos_even
            .iter()
            .chain(self.pos_odd.keys())
            .cloned()
            .collect()
    }

    fn pairings_doubled<'a>(&'a self, lambda: &'a HalfWeight) -> impl Iterator<Item = i64> + 'a {
        self.pos_even.iter().map(move |a| {
            lambda.pairing_doubled(self.datum.coroot(a).expect("coroot of even root"))
        })
    }

    /// `⟨λ, α∨⟩ ≥ 0` for every positive even root `α`.
    pub fn is_dominant(&self, lambda: &HalfWeight) -> bool {
        assert_eq!(lambda.rank(), self.rank(), "weight rank mismatch");
        self.pairings_doubled(lambda).all(|p| p >= 0)
    }

    /// Membership in `Λ⁺_p`: dominance plus, for `p > 2`, the bound
    /// `0 ≤ ⟨λ+ρ₀, β∨⟩ ≤ p` for every positive even root `β`.
    pub fn in_lambda_plus_p(&self, lambda: &HalfWeight, p: i64) -> Result<bool, RootDataError> {
        if p < 0 || p == 1 || p == 2 {
            return Err(RootDataError::InvalidCharacteristic(p));
        }
        if !lambda.is_integral() {
            return Err(RootDataError::NotIntegral(lambda.to_string()));
        }
        self.datum.check_weight(lambda)?;
        if !self.is_dominant(lambda) {
            return Ok(false);
        }
        if p == 0 {
            return Ok(true);
        }
        let shifted = lambda.plus(&self.rho_even);
        let ok = self.pairings_doubled(&shifted).all(|d| 0 <= d && d <= 2 * p);
        Ok(ok)
    }

    /// `μ ≤ λ`: `λ - μ` is a nonnegative integer combination of positive roots.
    pub fn leq(&self, mu: &HalfWeight, lambda: &HalfWeight) -> bool {
        let diff = lambda.minus(mu);
        if diff.is_zero() {
            return true;
        }
        let roots: Vec<HalfWeight> = self.positive_roots().into_iter().collect();
        let mut memo = HashMap::new();
        self.is_positive_combination(&diff, &roots, &mut memo)
    }

    // γ is strictly positive on every positive root, so γ(residual) strictly
    // decreases along any branch and the search terminates.
    fn is_positive_combination(
        &self,
        residual: &HalfWeight,
        roots: &[HalfWeight],
        memo: &mut HashMap<HalfWeight, bool>,
    ) -> bool {
        if residual.is_zero() {
            return true;
        }
        if !self.gamma.eval(residual).is_positive() {
            return false;
        }
        if let Some(&known) = memo.get(residual) {
            return known;
        }
        let found = roots
            .iter()
            .any(|a| self.is_positive_combination(&residual.minus(a), roots, memo));
        memo.insert(residual.clone(), found);
        found
    }

    /// The Weyl group of the even part, cached after the first call.
    pub fn weyl_elements(&self) -> Result<&[WeylElement], RootDataError> {
        self.weyl
            .get_or_init(|| self.weyl_elements_capped(DEFAULT_WEYL_CAP))
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    /// Breadth-first closure of the simple reflections `s_α(μ) = μ - ⟨μ,α∨⟩α`.
    pub fn weyl_elements_capped(&self, cap: usize) -> Result<Vec<WeylElement>, RootDataError> {
        let l = self.rank();
        let identity: Vec<Vec<i64>> = (0..l)
            .map(|i| (0..l).map(|j| i64::from(i == j)).collect())
            .collect();
        let gens: Vec<Vec<Vec<i64>>> = self
            .datum
            .simple_even_roots
            .iter()
            .map(|a| {
                let c = self.datum.coroot(a).expect("coroot of simple root");
                let a: Vec<i64> = a.doubled().iter().map(|d| d / 2).collect();
                (0..l)
                    .map(|i| (0..l).map(|j| i64::from(i == j) - a[i] * c[j]).collect())
                    .collect()
            })
            .collect();
        let mut seen = HashSet::new();
        seen.insert(identity.clone());
        let mut out = vec![WeylElement {
            action: identity.clone(),
            sign: 1,
            length: 0,
        }];
        let mut queue = VecDeque::from([(identity, 0usize)]);
        while let Some((m, len)) = queue.pop_front() {
            for g in &gens {
                let next = mat_mul(g, &m);
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return Err(RootDataError::GroupTooLarge(cap));
                    }
                    out.push(WeylElement {
                        action: next.clone(),
                        sign: if (len + 1) % 2 == 0 { 1 } else { -1 },
                        length: len + 1,
                    });
                    queue.push_back((next, len + 1));
                }
            }
        }
        Ok(out)
    }

    /// Root-level test for a parabolic super-subgroup with even part `G` and
    /// odd part `b⁻₁`: requires `h₁ = 0` and `δ + α ∈ Δ₁⁻` whenever
    /// `δ ∈ Δ₁⁻`, `α ∈ Δ₀` and `δ + α` is an odd root.
    pub fn admits_distinguished_parabolic(&self) -> bool {
        if self.datum.odd_cartan_dim != 0 {
            return false;
        }
        self.neg_odd.keys().all(|d| {
            self.datum.even_roots.iter().all(|a| {
                let s = d.plus(a);
                !self.datum.odd_roots.contains_key(&s) || self.neg_odd.contains_key(&s)
            })
        })
    }
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Splits the roots of `datum` by the sign of `γ` and computes the `ρ` vectors.
pub fn polarize(datum: &RootDatum, gamma: &GammaFunctional) -> Result<PolarizedDatum, RootDataError> {
    if gamma.values.len() != datum.rank {
        return Err(RootDataError::InvalidGamma(format!(
            "gamma has {} values for rank {}",
            gamma.values.len(),
            datum.rank
        )));
    }
    let vanishes = |a: &HalfWeight| RootDataError::GammaVanishesOnRoot(a.to_combination());
    let mut pos_even = BTreeSet::new();
    let mut neg_even = BTreeSet::new();
    for a in &datum.even_roots {
        let g = gamma.eval(a);
        if g.is_zero() {
            return Err(vanishes(a));
        }
        if g.is_positive() { &mut pos_even } else { &mut neg_even }.insert(a.clone());
    }
    let mut pos_odd = BTreeMap::new();
    let mut neg_odd = BTreeMap::new();
    for (d, &m) in &datum.odd_roots {
        let g = gamma.eval(d);
        if g.is_zero() {
            return Err(vanishes(d));
        }
        if g.is_positive() { &mut pos_odd } else { &mut neg_odd }.insert(d.clone(), m);
    }
    let rank = datum.rank;
    // Σ α is already the doubled form of ½ Σ α.
    let sum_doubled = |it: &mut dyn Iterator<Item = (HalfWeight, i64)>| {
        let mut acc = vec![0i64; rank];
        for (w, m) in it {
            for (a, d) in acc.iter_mut().zip(w.doubled()) {
                *a += m * d / 2;
            }
        }
        HalfWeight::from_doubled(acc).expect("nonzero rank")
    };
    let rho_even = sum_doubled(&mut pos_even.iter().map(|a| (a.clone(), 1)));
    let rho_odd = sum_doubled(&mut pos_odd.iter().map(|(d, &m)| (d.clone(), i64::from(m))));
    let rho = rho_even.minus(&rho_odd);
    Ok(PolarizedDatum {
        datum: datum.clone(),
        gamma: gamma.clone(),
        pos_even,
        neg_even,
        pos_odd,
        neg_odd,
        rho_even,
        rho_odd,
        rho,
        weyl: OnceLock::new(),
    })
}

/// Builds the datum for `spec` and polarizes it with the standard `γ(λ_i) = -i`.
pub fn standard_polarized(spec: GroupSpec) -> Result<PolarizedDatum, RootDataError> {
    let datum = RootDatum::build(spec)?;
    let gamma = GammaFunctional::standard(datum.rank());
    polarize(&datum, &gamma)
}
