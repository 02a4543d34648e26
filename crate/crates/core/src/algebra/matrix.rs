use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use super::{sample_ratio, AlgebraBackend};

/// Dense square matrix over the rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    d: usize,
    a: Vec<BigRational>,
}

impl RatMatrix {
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let d = rows.len();
        assert!(rows.iter().all(|r| r.len() == d), "matrix must be square");
        RatMatrix { d, a: rows.into_iter().flatten().collect() }
    }

    pub fn scalar(d: usize, c: &BigRational) -> Self {
        let mut a = vec![BigRational::zero(); d * d];
        for i in 0..d {
            a[i * d + i] = c.clone();
        }
        RatMatrix { d, a }
    }

    pub fn identity(d: usize) -> Self {
        Self::scalar(d, &BigRational::one())
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.a[i * self.d + j]
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.d, other.d);
        RatMatrix { d: self.d, a: self.a.iter().zip(&other.a).map(|(x, y)| x + y).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.d, other.d);
        let d = self.d;
        let mut a = vec![BigRational::zero(); d * d];
        for i in 0..d {
            for k in 0..d {
                let x = &self.a[i * d + k];
                if x.is_zero() {
                    continue;
                }
                for j in 0..d {
                    a[i * d + j] += x * &other.a[k * d + j];
                }
            }
        }
        RatMatrix { d, a }
    }

    /// Gauss-Jordan elimination; `None` for singular matrices.
    pub fn inverse(&self) -> Option<Self> {
        let d = self.d;
        let mut m = self.a.clone();
        let mut inv = Self::identity(d).a;
        for col in 0..d {
            let pivot = (col..d).find(|&r| !m[r * d + col].is_zero())?;
            if pivot != col {
                for j in 0..d {
                    m.swap(pivot * d + j, col * d + j);
                    inv.swap(pivot * d + j, col * d + j);
                }
            }
            let p = m[col * d + col].recip();
            for j in 0..d {
                m[col * d + j] *= &p;
                inv[col * d + j] *= &p;
            }
            for r in 0..d {
                if r == col || m[r * d + col].is_zero() {
                    continue;
                }
                let f = m[r * d + col].clone();
                for j in 0..d {
                    let (mv, iv) = (&m[col * d + j] * &f, &inv[col * d + j] * &f);
                    m[r * d + j] -= mv;
                    inv[r * d + j] -= iv;
                }
            }
        }
        Some(RatMatrix { d, a: inv })
    }

    /// `Some(c)` when the matrix is `c` times the identity.
    pub fn as_scalar(&self) -> Option<BigRational> {
        let c = self.get(0, 0).clone();
        (*self == Self::scalar(self.d, &c)).then_some(c)
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.d {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for j in 0..self.d {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// `d x d` rational matrices, a generic model of a skew field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRing {
    d: usize,
    c: BigRational,
    pub lo: i64,
    pub hi: i64,
}

impl MatrixRing {
    pub fn new(d: usize) -> Self {
        assert!(d >= 1);
        MatrixRing { d, c: BigRational::one(), lo: 1, hi: 50 }
    }

    pub fn dim(&self) -> usize {
        self.d
    }
}

impl AlgebraBackend for MatrixRing {
    type Elem = RatMatrix;

    fn name(&self) -> String {
        format!("matrix:{}", self.d)
    }

    fn add(&self, x: &RatMatrix, y: &RatMatrix) -> RatMatrix {
        x.add(y)
    }

    fn mul(&self, x: &RatMatrix, y: &RatMatrix) -> RatMatrix {
        x.mul(y)
    }

    fn one(&self) -> RatMatrix {
        RatMatrix::identity(self.d)
    }

    fn inv(&self, x: &RatMatrix) -> Option<RatMatrix> {
        x.inverse()
    }

    fn constant_c(&self) -> RatMatrix {
        RatMatrix::scalar(self.d, &self.c)
    }

    fn with_constant(&self, c: BigRational) -> Self {
        MatrixRing { c, ..self.clone() }
    }

    /// Entries are drawn one by one with the rational sampler; singular
    /// draws are rejected.
    fn sample<R: Rng>(&self, rng: &mut R) -> RatMatrix {
        loop {
            let a: Vec<BigRational> = (0..self.d * self.d).map(|_| sample_ratio(rng, self.lo, self.hi)).collect();
            let m = RatMatrix { d: self.d, a };
            if m.inverse().is_some() {
                return m;
            }
        }
    }

    fn sample_central<R: Rng>(&self, rng: &mut R) -> RatMatrix {
        RatMatrix::scalar(self.d, &sample_ratio(rng, self.lo, self.hi))
    }

    fn embed(&self, q: &BigRational) -> RatMatrix {
        RatMatrix::scalar(self.d, q)
    }

    fn is_central(&self, x: &RatMatrix) -> bool {
        x.as_scalar().is_some()
    }

    fn is_commutative(&self) -> bool {
        self.d == 1
    }

    fn is_tropical(&self) -> bool {
        false
    }

    fn render(&self, x: &RatMatrix) -> String {
        x.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn inverse_of_known_matrix() {
        let m = RatMatrix::from_rows(vec![vec![q(0), q(1)], vec![q(2), q(3)]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RatMatrix::identity(2));
        assert_eq!(inv.mul(&m), RatMatrix::identity(2));
        let singular = RatMatrix::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn random_inverses() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for d in 1..=4 {
            let ring = MatrixRing::new(d);
            for _ in 0..20 {
                let m = ring.sample(&mut rng);
                assert_eq!(m.mul(&m.inverse().unwrap()), RatMatrix::identity(d));
            }
        }
    }

    #[test]
    fn scalars() {
        assert_eq!(RatMatrix::scalar(3, &q(5)).as_scalar(), Some(q(5)));
        let m = RatMatrix::from_rows(vec![vec![q(1), q(0)], vec![q(0), q(2)]]);
        assert_eq!(m.as_scalar(), None);
        assert_eq!(m.to_string(), "[[1,0],[0,2]]");
    }
}
