use crate::error::{Error, Result};
use crate::exact::{is_positive_definite, Matrix, Scalar};
use crate::quat::HypercomplexStructure;
use crate::random::Rng;

/// Real symmetric positive definite Gram matrix invariant under `I, J, K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuatHermMetric {
    gram: Matrix,
}

impl QuatHermMetric {
    pub fn new(gram: Matrix, hs: &HypercomplexStructure) -> Result<Self> {
        let n = hs.dim();
        if !gram.is_square() || gram.rows() != n {
            return Err(Error::DimensionMismatch { context: "metric", expected: n, found: gram.rows() });
        }
        if gram.is_zero() {
            return Err(Error::NotQuaternionicHermitian("zero metric".into()));
        }
        if !gram.is_real() {
            return Err(Error::NotQuaternionicHermitian("metric has non-real entries".into()));
        }
        if gram.transpose() != gram {
            return Err(Error::NotQuaternionicHermitian("metric is not symmetric".into()));
        }
        for (name, a) in hs.ops() {
            if a.transpose().mul(&gram).mul(a) != gram {
                return Err(Error::NotQuaternionicHermitian(format!("g({name}x, {name}y) != g(x, y)")));
            }
        }
        let def = is_positive_definite(&gram)?;
        if let Some(minor) = def.failing_minor {
            return Err(Error::NotPositive { minor });
        }
        Ok(QuatHermMetric { gram })
    }

    /// The flat metric `g = id`; quaternionic Hermitian whenever `I, J, K` are orthogonal.
    pub fn identity(hs: &HypercomplexStructure) -> Result<Self> {
        Self::new(Matrix::identity(hs.dim()), hs)
    }

    /// Random metric: `A^T A + id` averaged over `{1, I, J, K}`.
    pub fn random(rng: &mut Rng, hs: &HypercomplexStructure, bound: i64) -> Result<Self> {
        let n = hs.dim();
        let a = rng.int_matrix(n, n, bound);
        let g0 = a.transpose().mul(&a).add(&Matrix::identity(n));
        Self::new(average(&g0, hs), hs)
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn scale(&self, s: &Scalar, hs: &HypercomplexStructure) -> Result<Self> {
        Self::new(self.gram.scale(s), hs)
    }

    /// `g(x, y)` for real or complexified vectors (bilinear, no conjugation).
    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let gy = self.gram.mul_vec(y);
        x.iter().zip(&gy).fold(Scalar::zero(), |acc, (a, b)| &acc + &(a * b))
    }
}

/// `(g + I^T g I + J^T g J + K^T g K) / 4`.
pub fn average(g: &Matrix, hs: &HypercomplexStructure) -> Matrix {
    let mut acc = g.clone();
    for (_, a) in hs.ops() {
        acc = acc.add(&a.transpose().mul(g).mul(a));
    }
    acc.scale(&Scalar::from_frac(1, 4))
}
