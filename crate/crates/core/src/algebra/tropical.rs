use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use super::AlgebraBackend;

/// Max-plus arithmetic on the rationals: addition is `max`, multiplication
/// is `+`, the unit is 0 and inversion is negation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalSemiring {
    c: BigRational,
    /// Samples are `n/d` with `|n| <= hi` and `1 <= d <= hi`.
    pub hi: i64,
}

impl Default for TropicalSemiring {
    fn default() -> Self {
        TropicalSemiring { c: BigRational::one(), hi: 50 }
    }
}

impl TropicalSemiring {
    pub fn new(c: BigRational) -> Self {
        TropicalSemiring { c, ..Default::default() }
    }
}

impl AlgebraBackend for TropicalSemiring {
    type Elem = BigRational;

    fn name(&self) -> String {
        "tropical".into()
    }

    fn add(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x.max(y).clone()
    }

    fn mul(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x + y
    }

    fn one(&self) -> BigRational {
        BigRational::zero()
    }

    fn inv(&self, x: &BigRational) -> Option<BigRational> {
        Some(-x)
    }

    fn constant_c(&self) -> BigRational {
        self.c.clone()
    }

    fn with_constant(&self, c: BigRational) -> Self {
        TropicalSemiring { c, ..self.clone() }
    }

    fn sample<R: Rng>(&self, rng: &mut R) -> BigRational {
        let n = rng.gen_range(-self.hi..=self.hi);
        let d = rng.gen_range(1..=self.hi);
        BigRational::new(n.into(), d.into())
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
        true
    }

    fn render(&self, x: &BigRational) -> String {
        x.to_string()
    }
}
