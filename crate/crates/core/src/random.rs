//! Seeded generators for the randomized property checks.

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{rat, Matrix, Rational, Scalar};
use crate::quat::HypercomplexStructure;

/// Deterministic random source; every randomized check records its seed.
pub struct Rng {
    inner: ChaCha8Rng,
}

impl Rng {
    pub fn seeded(seed: u64) -> Self {
        Rng { inner: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn int(&mut self, bound: i64) -> i64 {
        self.inner.gen_range(-bound..=bound)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.inner.gen_range(0..n)
    }

    pub fn coin(&mut self) -> bool {
        self.inner.gen_bool(0.5)
    }

    /// Rational `p/q` with `|p| <= bound` and `1 <= q <= 3`.
    pub fn rational(&mut self, bound: i64) -> Rational {
        let q = self.inner.gen_range(1..=3);
        rat(self.int(bound), q)
    }

    pub fn real_scalar(&mut self, bound: i64) -> Scalar {
        Scalar::real(self.rational(bound))
    }

    pub fn int_matrix(&mut self, rows: usize, cols: usize, bound: i64) -> Matrix {
        Matrix::from_fn(rows, cols, |_, _| Scalar::from_int(self.int(bound)))
    }

    /// Random invertible real matrix with small integer entries.
    pub fn invertible_matrix(&mut self, n: usize, bound: i64) -> Matrix {
        loop {
            let m = self.int_matrix(n, n, bound);
            if !m.determinant().is_zero() {
                return m;
            }
        }
    }
}

/// Projection onto the commutant of `{I, J, K}`:
/// `X -> (X - IXI - JXJ - KXK) / 4`.
pub fn project_quaternion_linear(x: &Matrix, hs: &HypercomplexStructure) -> Matrix {
    let mut acc = x.clone();
    for (_, a) in hs.ops() {
        acc = acc.sub(&a.mul(x).mul(a));
    }
    acc.scale(&Scalar::from_frac(1, 4))
}

/// Random H-linear endomorphism (possibly singular).
pub fn random_quaternion_linear_any(rng: &mut Rng, hs: &HypercomplexStructure, bound: i64) -> Matrix {
    let n = hs.dim();
    project_quaternion_linear(&rng.int_matrix(n, n, bound), hs)
}

/// Random invertible H-linear endomorphism.
pub fn random_quaternion_linear(rng: &mut Rng, hs: &HypercomplexStructure, bound: i64) -> Matrix {
    loop {
        let m = random_quaternion_linear_any(rng, hs, bound);
        if !m.determinant().is_zero() {
            return m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projection_is_idempotent_and_h_linear() {
        let hs = HypercomplexStructure::standard(2);
        let mut rng = Rng::seeded(1);
        let x = rng.int_matrix(8, 8, 5);
        let p = project_quaternion_linear(&x, &hs);
        assert!(hs.quaternion_linear_failure(&p).is_none());
        assert_eq!(project_quaternion_linear(&p, &hs), p);
    }

    #[test]
    fn seeds_are_deterministic() {
        let a = Rng::seeded(42).int_matrix(3, 3, 9);
        let b = Rng::seeded(42).int_matrix(3, 3, 9);
        assert_eq!(a, b);
    }
}
