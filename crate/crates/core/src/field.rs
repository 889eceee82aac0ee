//! Field modes of characteristic different from 2 and their scalar arithmetic.
//!
//! Every scalar is a [`BigRational`]. Over `F_p` (and the algebraic closure of
//! `F_p`) scalars are kept as canonical integer residues in `[0, p)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Scalar = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("InvalidField: {0}")]
    InvalidField(String),
    #[error("InvalidEntry: {0} is not an element of the field")]
    InvalidEntry(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldMode {
    Rationals,
    PrimeField(u64),
    /// An algebraically closed field of the given characteristic (0 or an
    /// odd prime). Only "every nonzero element is a square" is used.
    AlgebraicallyClosed(u64),
}

fn is_odd_prime(p: u64) -> bool {
    p > 2 && p % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl FieldMode {
    pub fn prime_field(p: u64) -> Result<Self, FieldError> {
        if !is_odd_prime(p) {
            return Err(FieldError::InvalidField(format!("{p} is not an odd prime")));
        }
        Ok(Self::PrimeField(p))
    }

    pub fn closed(characteristic: u64) -> Result<Self, FieldError> {
        if characteristic != 0 && !is_odd_prime(characteristic) {
            return Err(FieldError::InvalidField(format!(
                "characteristic {characteristic} must be 0 or an odd prime"
            )));
        }
        Ok(Self::AlgebraicallyClosed(characteristic))
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            Self::Rationals => 0,
            Self::PrimeField(p) | Self::AlgebraicallyClosed(p) => p,
        }
    }

    pub fn is_closed(&self) -> bool {
        matches!(self, Self::AlgebraicallyClosed(_))
    }

    fn modulus(&self) -> Option<BigInt> {
        match self.characteristic() {
            0 => None,
            p => Some(BigInt::from(p)),
        }
    }

    /// Maps a rational number into the field.
    pub fn element(&self, x: &BigRational) -> Result<Scalar, FieldError> {
        let Some(p) = self.modulus() else {
            return Ok(x.clone());
        };
        if x.is_integer() {
            if !x.is_negative() && x.numer() < &p {
                return Ok(x.clone());
            }
            return Ok(BigRational::from_integer(x.numer().mod_floor_big(&p)));
        }
        let den = x.denom().mod_floor_big(&p);
        if den.is_zero() {
            return Err(FieldError::InvalidEntry(x.to_string()));
        }
        let inv = den.modpow(&(&p - 2), &p);
        let num = x.numer().mod_floor_big(&p);
        Ok(BigRational::from_integer((num * inv) % &p))
    }

    pub fn from_int(&self, v: i64) -> Scalar {
        self.element(&BigRational::from_integer(v.into()))
            .expect("integers are field elements")
    }

    fn norm(&self, x: BigRational) -> Scalar {
        self.element(&x).expect("closed under ring operations")
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.norm(a + b)
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.norm(a - b)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.norm(a * b)
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.norm(-a)
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        Some(self.norm(a.recip()))
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// Whether a nonzero element lies in `(k^×)²`.
    pub fn is_square(&self, a: &Scalar) -> bool {
        if a.is_zero() {
            return false;
        }
        match self {
            Self::AlgebraicallyClosed(_) => true,
            Self::Rationals => rational_sqrt(a).is_some(),
            Self::PrimeField(p) => {
                let p = BigInt::from(*p);
                a.numer().modpow(&((&p - 1) / 2), &p).is_one()
            }
        }
    }

    /// A square root inside the concrete arithmetic (`Q` or `F_p`), if one
    /// exists there. In closed modes this can fail even though `a` is a
    /// square of the closure.
    pub fn sqrt(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return Some(a.clone());
        }
        match self.characteristic() {
            0 => rational_sqrt(a),
            p => tonelli_shanks(a.numer().to_u64()?, p).map(|r| BigRational::from_integer(r.into())),
        }
    }
}

trait ModFloor {
    fn mod_floor_big(&self, m: &BigInt) -> BigInt;
}

impl ModFloor for BigInt {
    fn mod_floor_big(&self, m: &BigInt) -> BigInt {
        let r = self % m;
        if r.is_negative() {
            r + m
        } else {
            r
        }
    }
}

fn integer_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Exact square root of a rational in lowest terms.
fn rational_sqrt(a: &BigRational) -> Option<BigRational> {
    let n = integer_sqrt(a.numer())?;
    let d = integer_sqrt(a.denom())?;
    Some(BigRational::new(n, d))
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

fn tonelli_shanks(n: u64, p: u64) -> Option<u64> {
    let n = n % p;
    if n == 0 {
        return Some(0);
    }
    if pow_mod(n, (p - 1) / 2, p) != 1 {
        return None;
    }
    let mulm = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let (mut q, mut s) = (p - 1, 0u32);
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..p).find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)?;
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(n, q, p);
    let mut r = pow_mod(n, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mulm(t2, t2);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mulm(b, b);
        t = mulm(t, c);
        r = mulm(r, b);
    }
    Some(r.min(p - r))
}

impl FromStr for FieldMode {
    type Err = FieldError;

    /// `Q`, `Fp:<p>` or `closed:<char>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FieldError::InvalidField(s.to_string());
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(Self::Rationals);
        }
        let (kind, arg) = t.split_once(':').ok_or_else(bad)?;
        let n: u64 = arg.trim().parse().map_err(|_| bad())?;
        match kind.to_ascii_lowercase().as_str() {
            "fp" => Self::prime_field(n),
            "closed" => Self::closed(n),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for FieldMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rationals => write!(f, "Q"),
            Self::PrimeField(p) => write!(f, "Fp:{p}"),
            Self::AlgebraicallyClosed(c) => write!(f, "closed:{c}"),
        }
    }
}
