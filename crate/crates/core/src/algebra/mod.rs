//! Value algebras for labelings.
//!
//! Every formula in [`crate::dynamics`] is written once against
//! [`AlgebraBackend`], keeping products in the order a skew field needs.
//! Rationals give the commutative (birational) realm, square rational
//! matrices model a noncommutative skew field by generic evaluation, and the
//! max-plus semiring gives back the piecewise-linear maps.

mod matrix;
mod rational;
mod tropical;

use std::fmt::Debug;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poset::Poset;

pub use matrix::{MatrixRing, RatMatrix};
pub use rational::RationalField;
pub use tropical::TropicalSemiring;

pub trait AlgebraBackend: Debug + Clone + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Send + Sync;

    fn name(&self) -> String;
    /// Associative and commutative.
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    /// Associative, possibly noncommutative.
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// Two-sided inverse, `None` when it does not exist.
    fn inv(&self, x: &Self::Elem) -> Option<Self::Elem>;
    /// The central constant labelling the top of the bounded poset.
    fn constant_c(&self) -> Self::Elem;
    /// Same backend with a different central constant.
    fn with_constant(&self, c: BigRational) -> Self;
    fn equals(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        x == y
    }
    /// Draws a generic element.
    fn sample<R: Rng>(&self, rng: &mut R) -> Self::Elem;
    /// Draws a generic central element.
    fn sample_central<R: Rng>(&self, rng: &mut R) -> Self::Elem;
    /// Image of a rational number in the center.
    fn embed(&self, q: &BigRational) -> Self::Elem;
    fn is_central(&self, x: &Self::Elem) -> bool;
    fn is_commutative(&self) -> bool;
    fn is_tropical(&self) -> bool;
    fn render(&self, x: &Self::Elem) -> String;
}

/// Uniform rational `n/d` with `n, d` in `lo..=hi`.
pub(crate) fn sample_ratio<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> BigRational {
    let n = rng.gen_range(lo..=hi);
    let d = rng.gen_range(lo..=hi);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p/q` or a bare integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Invalid(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// `x1 ∥ x2 ∥ … = inv(inv x1 + inv x2 + …)`.
pub fn parallel_sum<B: AlgebraBackend>(b: &B, xs: &[B::Elem]) -> Result<B::Elem> {
    let mut total: Option<B::Elem> = None;
    for (i, x) in xs.iter().enumerate() {
        let xi = b.inv(x).ok_or_else(|| Error::NotInvertible(format!("parallel sum: term {i}")))?;
        total = Some(match total {
            None => xi,
            Some(t) => b.add(&t, &xi),
        });
    }
    let total = total.ok_or_else(|| Error::Invalid("parallel sum of nothing".into()))?;
    b.inv(&total).ok_or_else(|| Error::NotInvertible("parallel sum: sum of inverses".into()))
}

/// Sum of a nonempty list.
pub fn sum<B: AlgebraBackend>(b: &B, xs: impl IntoIterator<Item = B::Elem>) -> Option<B::Elem> {
    xs.into_iter().reduce(|acc, x| b.add(&acc, &x))
}

/// Product in list order.
pub fn product<'a, B: AlgebraBackend>(b: &B, xs: impl IntoIterator<Item = &'a B::Elem>) -> B::Elem
where
    B::Elem: 'a,
{
    xs.into_iter().fold(b.one(), |acc, x| b.mul(&acc, x))
}

/// Independent generic samples per element, determined by `seed`.
pub fn random_labeling<B: AlgebraBackend>(b: &B, p: &Poset, seed: u64) -> Vec<B::Elem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    p.elements().map(|_| b.sample(&mut rng)).collect()
}

/// Any of the three backends, chosen at run time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BackendSpec {
    Rational,
    Matrix(usize),
    Tropical,
}

impl FromStr for BackendSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "rational" => Ok(BackendSpec::Rational),
            "tropical" => Ok(BackendSpec::Tropical),
            _ => {
                let d = s
                    .strip_prefix("matrix:")
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|&d| d >= 1)
                    .ok_or_else(|| Error::UnknownBackend(s.to_string()))?;
                Ok(BackendSpec::Matrix(d))
            }
        }
    }
}

impl std::fmt::Display for BackendSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BackendSpec::Rational => f.write_str("rational"),
            BackendSpec::Matrix(d) => write!(f, "matrix:{d}"),
            BackendSpec::Tropical => f.write_str("tropical"),
        }
    }
}
