//! Weyl numerators, even characters and the super Weyl character formula.
//!
//! For a polarized datum admitting a distinguished parabolic and a dominant
//! weight `λ`,
//!
//! ```text
//! ch H⁰(λ) = A(λ+ρ₀)/A(ρ₀) · ∏_{δ ∈ Δ₁⁺} (1 + e^{-δ})^{m_δ}
//! ```
//!
//! where `A(μ) = Σ_w (-1)^{ℓ(w)} e^{wμ}`. Schur polynomials and the `GL(m|n)`
//! product formula are provided as independent cross-checks.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::clifford::{classify, gram_from_weight, CliffordError};
use crate::field::FieldMode;
use crate::laurent::{CharacterPoly, HalfWeight, LaurentError};
use crate::rootdata::{PolarizedDatum, RootDataError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterError {
    #[error("NotDominant: {0} is not dominant")]
    NotDominant(String),
    #[error("NoParabolic: {0} admits no distinguished parabolic for this gamma")]
    NoParabolic(String),
    #[error("RhoOddNotInvariant: rho_1 is not fixed by the Weyl group")]
    RhoOddNotInvariant,
    #[error("LambdaNotInSupport: {0} is not a weight of the character")]
    LambdaNotInSupport(String),
    #[error("NotPartition: {0}")]
    NotPartition(String),
    #[error("NotIntegral: weight {0} is not integral")]
    NotIntegral(String),
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Clifford(#[from] CliffordError),
}

fn check_integral_weight(pd: &PolarizedDatum, lambda: &HalfWeight) -> Result<(), CharacterError> {
    pd.datum().check_weight(lambda)?;
    if !lambda.is_integral() {
        return Err(CharacterError::NotIntegral(lambda.to_string()));
    }
    Ok(())
}

fn check_dominant(pd: &PolarizedDatum, lambda: &HalfWeight) -> Result<(), CharacterError> {
    check_integral_weight(pd, lambda)?;
    if !pd.is_dominant(lambda) {
        return Err(CharacterError::NotDominant(lambda.to_string()));
    }
    Ok(())
}

/// `A(μ) = Σ_{w ∈ W} (-1)^{ℓ(w)} e^{wμ}`.
pub fn weyl_numerator(pd: &PolarizedDatum, mu: &HalfWeight) -> Result<CharacterPoly, CharacterError> {
    pd.datum().check_weight(mu)?;
    let terms = pd
        .weyl_elements()?
        .iter()
        .map(|w| (w.apply(mu), BigInt::from(w.sign)));
    Ok(CharacterPoly::from_terms(pd.rank(), terms)?)
}

/// Character of the induced module of the even part, `A(λ+ρ₀)/A(ρ₀)`.
pub fn even_character(pd: &PolarizedDatum, lambda: &HalfWeight) -> Result<CharacterPoly, CharacterError> {
    check_dominant(pd, lambda)?;
    let num = weyl_numerator(pd, &lambda.plus(pd.rho_even()))?;
    let den = weyl_numerator(pd, pd.rho_even())?;
    Ok(num.exact_divide(&den)?)
}

fn odd_product(pd: &PolarizedDatum, sign: i64) -> CharacterPoly {
    let one = CharacterPoly::one(pd.rank());
    pd.pos_odd().iter().fold(one.clone(), |acc, (delta, &m)| {
        let factor = one.add(&CharacterPoly::mono(delta.scale(sign))).expect("same rank");
        acc.mul(&factor.pow(m)).expect("same rank")
    })
}

/// `∏_{δ ∈ Δ₁⁺} (1 + e^{-δ})^{m_δ}`, the character of `∧(n₁⁺)*`.
pub fn odd_factor(pd: &PolarizedDatum) -> CharacterPoly {
    odd_product(pd, -1)
}

/// `∏_{δ ∈ Δ₁⁺} (1 + e^{δ})^{m_δ}`. For `P(n)` with the standard `γ` this
/// is the product `∏ (1 + 1/(t_i t_j))`; it differs from [`odd_factor`]
/// exactly when `-Δ₁⁺ ≠ Δ₁⁻`.
pub fn reflected_odd_factor(pd: &PolarizedDatum) -> CharacterPoly {
    odd_product(pd, 1)
}

/// Whether negation fails to map `Δ₁⁺` onto `Δ₁⁻`, the situation in which
/// the two odd factors disagree.
pub fn odd_system_is_asymmetric(pd: &PolarizedDatum) -> bool {
    pd.pos_odd().len() != pd.neg_odd().len()
        || pd.pos_odd().iter().any(|(d, m)| pd.neg_odd().get(&d.neg()) != Some(m))
}

fn serialize_bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match i64::try_from(v) {
        Ok(x) => s.serialize_i64(x),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}

fn serialize_coords<S: Serializer>(w: &HalfWeight, s: S) -> Result<S::Ok, S::Error> {
    w.coords().unwrap_or_default().serialize(s)
}

/// The second odd-factor convention, reported alongside the main result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddFactorVariant {
    pub odd_factor: CharacterPoly,
    pub super_char: CharacterPoly,
    #[serde(serialize_with = "serialize_bigint")]
    pub super_dim: BigInt,
    pub top_weight_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuperCharacterReport {
    #[serde(serialize_with = "serialize_coords")]
    pub lambda: HalfWeight,
    pub even_char: CharacterPoly,
    pub odd_factor: CharacterPoly,
    pub super_char: CharacterPoly,
    #[serde(serialize_with = "serialize_bigint")]
    pub even_dim: BigInt,
    #[serde(serialize_with = "serialize_bigint")]
    pub super_dim: BigInt,
    pub top_weight_ok: bool,
    /// Set when computed with `force` on a datum without a distinguished
    /// parabolic: the expression is then only an Euler characteristic.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub euler_only: bool,
    /// `n_λ = dim u(λ)` over an algebraically closed field, when `h₁ ≠ 0`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_lambda: Option<u64>,
    /// Product over `Δ₁⁺` of `(1 + e^{δ})`, present when `-Δ₁⁺ ≠ Δ₁⁻`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reflected: Option<OddFactorVariant>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CharacterOptions {
    /// Skip the distinguished-parabolic requirement.
    pub force: bool,
}

fn check_parabolic(pd: &PolarizedDatum, opts: CharacterOptions) -> Result<bool, CharacterError> {
    let ok = pd.admits_distinguished_parabolic();
    if !ok && !opts.force {
        return Err(CharacterError::NoParabolic(pd.datum().name().to_string()));
    }
    Ok(!ok)
}

/// `n_λ = 2^⌊(d_λ+1)/2⌋` from the closed-field classification of `b^λ`.
pub fn simple_torus_dim(pd: &PolarizedDatum, lambda: &HalfWeight) -> Result<u64, CharacterError> {
    let qs = gram_from_weight(pd.datum(), lambda, FieldMode::AlgebraicallyClosed(0))?;
    Ok(classify(&qs).closed_dim.expect("closed mode"))
}

pub fn super_character(pd: &PolarizedDatum, lambda: &HalfWeight) -> Result<SuperCharacterReport, CharacterError> {
    super_character_with(pd, lambda, CharacterOptions::default())
}

pub fn super_character_with(
    pd: &PolarizedDatum,
    lambda: &HalfWeight,
    opts: CharacterOptions,
) -> Result<SuperCharacterReport, CharacterError> {
    let euler_only = check_parabolic(pd, opts)?;
    check_dominant(pd, lambda)?;
    let even_char = even_character(pd, lambda)?;
    let odd = odd_factor(pd);
    let super_char = even_char.mul(&odd)?;
    let top_weight_ok = maximal_weight_check(pd, lambda, &super_char)?;
    let reflected = if odd_system_is_asymmetric(pd) {
        let odd_factor = reflected_odd_factor(pd);
        let super_char = even_char.mul(&odd_factor)?;
        Some(OddFactorVariant {
            top_weight_ok: maximal_weight_check(pd, lambda, &super_char)?,
            super_dim: super_char.dim_eval(),
            odd_factor,
            super_char,
        })
    } else {
        None
    };
    let n_lambda = if pd.datum().odd_cartan_dim() > 0 {
        Some(simple_torus_dim(pd, lambda)?)
    } else {
        None
    };
    Ok(SuperCharacterReport {
        lambda: lambda.clone(),
        even_dim: even_char.dim_eval(),
        super_dim: super_char.dim_eval(),
        even_char,
        odd_factor: odd,
        super_char,
        top_weight_ok,
        euler_only,
        n_lambda,
        reflected,
    })
}

/// `A(λ+ρ) · ∏_{δ ∈ Δ₁⁺} (e^{δ/2} + e^{-δ/2})^{m_δ} / A(ρ₀)`, valid when `ρ₁`
/// is Weyl-invariant.
pub fn super_character_rho_form(pd: &PolarizedDatum, lambda: &HalfWeight) -> Result<CharacterPoly, CharacterError> {
    super_character_rho_form_with(pd, lambda, CharacterOptions::default())
}

pub fn super_character_rho_form_with(
    pd: &PolarizedDatum,
    lambda: &HalfWeight,
    opts: CharacterOptions,
) -> Result<CharacterPoly, CharacterError> {
    check_parabolic(pd, opts)?;
    check_dominant(pd, lambda)?;
    if pd.weyl_elements()?.iter().any(|w| w.apply(pd.rho_odd()) != *pd.rho_odd()) {
        return Err(CharacterError::RhoOddNotInvariant);
    }
    let rank = pd.rank();
    let mut num = weyl_numerator(pd, &lambda.plus(pd.rho()))?;
    for (delta, &m) in pd.pos_odd() {
        let half = HalfWeight::from_doubled(delta.doubled().iter().map(|d| d / 2).collect())?;
        let factor = CharacterPoly::mono(half.clone()).add(&CharacterPoly::mono(half.neg()))?;
        num = num.mul(&factor.pow(m))?;
        debug_assert_eq!(num.rank(), rank);
    }
    Ok(num.exact_divide(&weyl_numerator(pd, pd.rho_even())?)?)
}

fn permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i64)>) {
        let k = used.len();
        if prefix.len() == k {
            let inversions = (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .filter(|&(i, j)| prefix[i] > prefix[j])
                .count();
            out.push((prefix.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..k {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// Laurent–Schur polynomial `s_λ(t_1..t_k)` as the bialternant
/// `det(t_i^{λ_j + k - j}) / ∏_{i<j} (t_i - t_j)`. Shorter partitions are
/// padded with zeros; negative parts are allowed.
pub fn schur(partition: &[i64], nvars: usize) -> Result<CharacterPoly, CharacterError> {
    if nvars == 0 {
        return Err(CharacterError::NotPartition("need at least one variable".into()));
    }
    if partition.len() > nvars {
        return Err(CharacterError::NotPartition(format!(
            "{} parts in {nvars} variables",
            partition.len()
        )));
    }
    if partition.windows(2).any(|w| w[0] < w[1]) {
        return Err(CharacterError::NotPartition(format!("{partition:?} is not weakly decreasing")));
    }
    let k = nvars;
    let mut parts = partition.to_vec();
    parts.resize(k, 0);
    let shifted: Vec<i64> = (0..k).map(|j| parts[j] + (k - 1 - j) as i64).collect();
    let mut alternant = CharacterPoly::zero(k);
    for (perm, sign) in permutations(k) {
        let exps: Vec<i64> = (0..k).map(|i| shifted[perm[i]]).collect();
        let term = CharacterPoly::term(HalfWeight::integral(&exps)?, BigInt::from(sign));
        alternant = alternant.add(&term)?;
    }
    let mut vandermonde = CharacterPoly::one(k);
    for i in 0..k {
        for j in i + 1..k {
            let diff = CharacterPoly::mono(HalfWeight::basis(k, i))
                .sub(&CharacterPoly::mono(HalfWeight::basis(k, j)))?;
            vandermonde = vandermonde.mul(&diff)?;
        }
    }
    Ok(alternant.exact_divide(&vandermonde)?)
}

/// `s_{λ₊}(t_1..t_m) · s_{λ₋}(t_{m+1}..t_{m+n}) · ∏_{i ≤ m < j} (1 + t_j/t_i)`.
pub fn gl_super_character(m: usize, n: usize, lambda: &[i64]) -> Result<CharacterPoly, CharacterError> {
    if lambda.len() != m + n || m == 0 || n == 0 {
        return Err(CharacterError::Laurent(LaurentError::RankMismatch {
            expected: m + n,
            found: lambda.len(),
        }));
    }
    let (plus, minus) = lambda.split_at(m);
    let decreasing = |v: &[i64]| v.windows(2).all(|w| w[0] >= w[1]);
    if !decreasing(plus) || !decreasing(minus) {
        return Err(CharacterError::NotDominant(format!("{lambda:?}")));
    }
    let rank = m + n;
    let mut ch = schur(plus, m)?
        .embed(rank, 0)?
        .mul(&schur(minus, n)?.embed(rank, m)?)?;
    let one = CharacterPoly::one(rank);
    for i in 0..m {
        for j in m..rank {
            let ratio = HalfWeight::basis(rank, j).minus(&HalfWeight::basis(rank, i));
            ch = ch.mul(&one.add(&CharacterPoly::mono(ratio))?)?;
        }
    }
    Ok(ch)
}

/// `λ` occurs in `ch` and no other weight `μ` of `ch` satisfies `λ ≤ μ`.
pub fn maximal_weight_check(
    pd: &PolarizedDatum,
    lambda: &HalfWeight,
    ch: &CharacterPoly,
) -> Result<bool, CharacterError> {
    let c = ch.coefficient(lambda)?;
    if c.is_zero() {
        return Err(CharacterError::LambdaNotInSupport(lambda.to_string()));
    }
    if c < BigInt::one() {
        return Ok(false);
    }
    let g_lambda = pd.gamma().eval(lambda);
    Ok(ch.support().all(|mu| {
        // λ ≤ μ with μ ≠ λ forces γ(μ) > γ(λ)
        mu == lambda || pd.gamma().eval(mu) <= g_lambda || !pd.leq(lambda, mu)
    }))
}

/// Checks `dim H⁰(λ) ≤ dim H⁰₀(λ) · n_λ · 2^{Σ m_δ + ℓ₁}`.
pub fn induced_dim_bound(pd: &PolarizedDatum, lambda: &HalfWeight, n_lambda: u64) -> Result<bool, CharacterError> {
    check_dominant(pd, lambda)?;
    let even = even_character(pd, lambda)?;
    let super_dim = even.mul(&odd_factor(pd))?.dim_eval();
    let exponent = pd.datum().total_odd_multiplicity() as usize + pd.datum().odd_cartan_dim();
    let bound = even.dim_eval() * BigInt::from(n_lambda) * (BigInt::one() << exponent);
    Ok(super_dim <= bound)
}

/// Weyl dimension formula `∏_{α ∈ Δ₀⁺} ⟨λ+ρ₀, α∨⟩ / ⟨ρ₀, α∨⟩`.
pub fn weyl_dimension(pd: &PolarizedDatum, lambda: &HalfWeight) -> Result<BigRational, CharacterError> {
    pd.datum().check_weight(lambda)?;
    let shifted = lambda.plus(pd.rho_even());
    let mut acc = BigRational::one();
    for alpha in pd.pos_even() {
        let c = pd.datum().coroot(alpha).expect("coroot of even root");
        let num = shifted.pairing_doubled(c);
        let den = pd.rho_even().pairing_doubled(c);
        acc *= BigRational::new(num.into(), den.into());
    }
    debug_assert!(!acc.is_negative() || !pd.is_dominant(lambda));
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{polarize, standard_polarized, GammaFunctional, GroupSpec, RootDatum};

    fn w(c: &[i64]) -> HalfWeight {
        HalfWeight::integral(c).unwrap()
    }

    fn pd(spec: &str) -> PolarizedDatum {
        standard_polarized(spec.parse().unwrap()).unwrap()
    }

    fn poly(rank: usize, terms: &[(&[i64], i64)]) -> CharacterPoly {
        CharacterPoly::from_terms(rank, terms.iter().map(|(e, c)| (w(e), BigInt::from(*c)))).unwrap()
    }

    #[test]
    fn weyl_numerator_examples() {
        let gl = pd("gl:2,1");
        let a = weyl_numerator(&gl, gl.rho_even()).unwrap();
        assert_eq!(a.to_string(), "t1^(1/2)*t2^(-1/2) - t1^(-1/2)*t2^(1/2)");
        assert!(weyl_numerator(&gl, &w(&[1, 1, 0])).unwrap().is_zero());
        let q1 = pd("q:1");
        assert_eq!(weyl_numerator(&q1, &w(&[3])).unwrap(), CharacterPoly::mono(w(&[3])));
    }

    #[test]
    fn even_character_examples() {
        let gl = pd("gl:2,1");
        assert_eq!(
            even_character(&gl, &w(&[1, 0, 0])).unwrap(),
            poly(3, &[(&[1, 0, 0], 1), (&[0, 1, 0], 1)])
        );
        for spec in ["gl:2,1", "p:3", "q:2"] {
            let p = pd(spec);
            let zero = HalfWeight::zero(p.rank());
            assert_eq!(even_character(&p, &zero).unwrap(), CharacterPoly::one(p.rank()));
        }
        let p2 = pd("p:2");
        assert_eq!(
            even_character(&p2, &w(&[2, 1])).unwrap(),
            poly(2, &[(&[2, 1], 1), (&[1, 2], 1)])
        );
        assert!(matches!(
            even_character(&gl, &w(&[0, 1, 0])),
            Err(CharacterError::NotDominant(_))
        ));
    }

    #[test]
    fn odd_factor_examples() {
        let gl = pd("gl:2,1");
        assert_eq!(
            odd_factor(&gl),
            poly(3, &[(&[0, 0, 0], 1), (&[-1, 0, 1], 1), (&[0, -1, 1], 1), (&[-1, -1, 2], 1)])
        );
        let d = RootDatum::new(
            "even",
            2,
            RootDatum::build(GroupSpec::Periplectic { n: 2 }).unwrap().even_roots().clone(),
            [(w(&[1, -1]), vec![1, -1]), (w(&[-1, 1]), vec![-1, 1])].into_iter().collect(),
            Default::default(),
            vec![],
            vec![w(&[1, -1])],
        )
        .unwrap();
        let even_only = polarize(&d, &GammaFunctional::standard(2)).unwrap();
        assert_eq!(odd_factor(&even_only), CharacterPoly::one(2));
        let p2 = pd("p:2");
        assert_eq!(odd_factor(&p2), poly(2, &[(&[0, 0], 1), (&[1, 1], 1)]));
        assert_eq!(reflected_odd_factor(&p2), poly(2, &[(&[0, 0], 1), (&[-1, -1], 1)]));
    }

    #[test]
    fn super_character_examples() {
        let gl11 = pd("gl:1,1");
        let r = super_character(&gl11, &w(&[1, 0])).unwrap();
        assert_eq!(r.super_char, poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]));
        assert_eq!(r.super_dim, BigInt::from(2));

        let gl21 = pd("gl:2,1");
        let r = super_character(&gl21, &w(&[1, 0, 0])).unwrap();
        let expected = poly(3, &[(&[1, 0, 0], 1), (&[0, 1, 0], 1)]).mul(&odd_factor(&gl21)).unwrap();
        assert_eq!(r.super_char, expected);
        assert_eq!(r.super_dim, BigInt::from(8));
        assert_eq!(r.even_dim, BigInt::from(2));
        assert!(r.top_weight_ok);
        assert!(r.reflected.is_none());

        assert!(matches!(
            super_character(&gl21, &w(&[0, 1, 0])),
            Err(CharacterError::NotDominant(_))
        ));
    }

    #[test]
    fn super_character_requires_parabolic() {
        let q2 = pd("q:2");
        assert!(matches!(
            super_character(&q2, &w(&[1, 0])),
            Err(CharacterError::NoParabolic(_))
        ));
        let r = super_character_with(&q2, &w(&[1, 0]), CharacterOptions { force: true }).unwrap();
        assert!(r.euler_only);
        // b^λ = diag(2, 0): d = 1, so n_λ = 2
        assert_eq!(r.n_lambda, Some(2));
    }

    #[test]
    fn rho_form_examples() {
        for (spec, l) in [("gl:1,1", vec![1, 0]), ("gl:2,1", vec![1, 0, 0]), ("p:3", vec![1, 1, 1])] {
            let p = pd(spec);
            let lam = w(&l);
            assert_eq!(
                super_character_rho_form(&p, &lam).unwrap(),
                super_character(&p, &lam).unwrap().super_char,
                "{spec}"
            );
        }
        let gl11 = pd("gl:1,1");
        assert_eq!(gl11.rho().doubled(), &[-1, 1]);
    }

    #[test]
    fn rho_form_detects_non_invariant_rho_odd() {
        // Q(2) odd roots coincide with the even ones: ρ₁ = ρ₀ is not W-fixed.
        let q2 = pd("q:2");
        let err = super_character_rho_form_with(&q2, &w(&[1, 0]), CharacterOptions { force: true });
        assert_eq!(err, Err(CharacterError::RhoOddNotInvariant));
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur(&[1, 0], 2).unwrap(), poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]));
        assert_eq!(schur(&[2, 1], 2).unwrap(), poly(2, &[(&[2, 1], 1), (&[1, 2], 1)]));
        assert_eq!(schur(&[], 3).unwrap(), CharacterPoly::one(3));
        assert_eq!(schur(&[-1], 1).unwrap(), poly(1, &[(&[-1], 1)]));
        assert!(matches!(schur(&[0, 1], 2), Err(CharacterError::NotPartition(_))));
        // s_(2)(t1,t2,t3) has six monomials
        assert_eq!(schur(&[2], 3).unwrap().dim_eval(), BigInt::from(6));
    }

    #[test]
    fn gl_formula_examples() {
        let odd21 = odd_factor(&pd("gl:2,1"));
        assert_eq!(gl_super_character(1, 1, &[1, 0]).unwrap(), poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]));
        assert_eq!(
            gl_super_character(2, 1, &[2, 1, 0]).unwrap(),
            poly(3, &[(&[2, 1, 0], 1), (&[1, 2, 0], 1)]).mul(&odd21).unwrap()
        );
        assert_eq!(gl_super_character(2, 1, &[0, 0, 0]).unwrap(), odd21);
        assert!(matches!(
            gl_super_character(2, 1, &[0, 1, 0]),
            Err(CharacterError::NotDominant(_))
        ));
    }

    #[test]
    fn maximal_weight_examples() {
        let gl = pd("gl:2,1");
        let r = super_character(&gl, &w(&[1, 0, 0])).unwrap();
        assert!(maximal_weight_check(&gl, &w(&[1, 0, 0]), &r.super_char).unwrap());
        let m = CharacterPoly::mono(w(&[4, -2, 1]));
        assert!(maximal_weight_check(&gl, &w(&[4, -2, 1]), &m).unwrap());
        assert!(matches!(
            maximal_weight_check(&gl, &w(&[0, 0, 5]), &r.super_char),
            Err(CharacterError::LambdaNotInSupport(_))
        ));
        // λ = (0,1,0) is in the support but (1,0,0) lies above it
        assert!(!maximal_weight_check(&gl, &w(&[0, 1, 0]), &r.super_char).unwrap());
    }

    #[test]
    fn periplectic_variants() {
        let p2 = pd("p:2");
        let r = super_character(&p2, &w(&[1, 0])).unwrap();
        assert!(r.top_weight_ok);
        let alt = r.reflected.unwrap();
        assert!(!alt.top_weight_ok);
        assert_eq!(alt.super_dim, r.super_dim);
    }

    #[test]
    fn dim_bound_examples() {
        let gl = pd("gl:2,1");
        assert!(induced_dim_bound(&gl, &w(&[1, 0, 0]), 1).unwrap());
        let p2 = pd("p:2");
        assert!(induced_dim_bound(&p2, &w(&[1, 0]), 1).unwrap());
        assert_eq!(p2.datum().total_odd_multiplicity(), 4);
    }

    #[test]
    fn weyl_dimension_matches_gl3() {
        let gl = pd("gl:3,1");
        // dim of the GL3 module with highest weight (2,1,0) is 8
        assert_eq!(weyl_dimension(&gl, &w(&[2, 1, 0, 0])).unwrap(), BigRational::from_integer(8.into()));
    }
}
