//! Scalar backends: exact rationals and double-precision floats.

use std::fmt::Debug;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::ToPrimitive;

/// What the representation matrices are made of.
///
/// `Rat` (arbitrary-precision rationals) carries the row-stochastic
/// normalization exactly; `f64` is needed for the orthogonal one, whose
/// off-diagonal coefficients are square roots.
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync + 'static {
    /// True when equality of values is exact.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// √(num/den) when the backend can represent it.
    fn sqrt_ratio(num: i64, den: i64) -> Option<Self>;
    fn to_f64(&self) -> f64;
    /// Rendering for JSON payloads: "p/q" for rationals, plain number text
    /// for floats.
    fn render(&self) -> String;
}

/// Exact rational scalar.
pub type Rat = BigRational;

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn sqrt_ratio(num: i64, den: i64) -> Option<Self> {
        let v = num as f64 / den as f64;
        (v >= 0.0).then(|| v.sqrt())
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn render(&self) -> String {
        format!("{self}")
    }
}

impl Scalar for Rat {
    const EXACT: bool = true;

    fn zero() -> Self {
        num::zero()
    }

    fn one() -> Self {
        num::one()
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn is_zero(&self) -> bool {
        num::Zero::is_zero(self)
    }

    fn sqrt_ratio(num: i64, den: i64) -> Option<Self> {
        if num < 0 || den <= 0 {
            return None;
        }
        let (sn, sd) = (isqrt(num)?, isqrt(den)?);
        Some(Self::from_ratio(sn, sd))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn render(&self) -> String {
        if self.denom() == &BigInt::from(1) {
            format!("{}", self.numer())
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }
}

fn isqrt(v: i64) -> Option<i64> {
    let r = (v as f64).sqrt().round() as i64;
    for cand in r.saturating_sub(1)..=r + 1 {
        if cand >= 0 && cand * cand == v {
            return Some(cand);
        }
    }
    None
}
