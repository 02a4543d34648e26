use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use super::{sample_ratio, AlgebraBackend};

/// The field of rational numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalField {
    c: BigRational,
    /// Numerators and denominators of samples are drawn from `lo..=hi`.
    pub lo: i64,
    pub hi: i64,
}

impl Default for RationalField {
    fn default() -> Self {
        RationalField { c: BigRational::one(), lo: 1, hi: 50 }
    }
}

impl RationalField {
    pub fn new(c: BigRational) -> Self {
        RationalField { c, ..Default::default() }
    }
}

impl AlgebraBackend for RationalField {
    type Elem = BigRational;

    fn name(&self) -> String {
        "rational".into()
    }

    fn add(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x + y
    }

    fn mul(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x * y
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn inv(&self, x: &BigRational) -> Option<BigRational> {
        (!x.is_zero()).then(|| x.recip())
    }

    fn constant_c(&self) -> BigRational {
        self.c.clone()
    }

    fn with_constant(&self, c: BigRational) -> Self {
        RationalField { c, ..self.clone() }
    }

    fn sample<R: Rng>(&self, rng: &mut R) -> BigRational {
        loop {
            let x = sample_ratio(rng, self.lo, self.hi);
            if !x.is_zero() {
                return x;
            }
        }
    }

    fn sample_central<R: Rng>(&self, rng: &mut R) -> BigRational {
        self.sample(rng)
    }

    fn embed(&self, q: &BigRational) -> BigRational {
        q.clone()
    }

    fn is_central(&self, _: &BigRational) -> bool {
        true
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn is_tropical(&self) -> bool {
        false
    }

    fn render(&self, x: &BigRational) -> String {
        x.to_string()
    }
}
