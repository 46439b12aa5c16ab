use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational, Scalar, Vector};

/// One structure-constant entry `[g_i, g_j] = sum_k c^k_ij g_k` (0-based indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bracket {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<(usize, Rational)>,
}

impl Bracket {
    pub fn new(i: usize, j: usize, coeffs: Vec<(usize, Rational)>) -> Self {
        Bracket { i, j, coeffs }
    }
}

/// Real Lie algebra given by rational structure constants in a basis `g_1..g_dim`.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    /// `table[i * dim + j]` = coordinates of `[g_i, g_j]`; antisymmetric.
    table: Vec<Vector>,
}

impl LieAlgebra {
    /// Builds the algebra and checks the Jacobi identity.
    pub fn new(dim: usize, brackets: &[Bracket]) -> Result<Self> {
        let l = Self::new_unchecked(dim, brackets)?;
        if let Some(witness) = l.jacobi_check() {
            return Err(Error::JacobiViolation(witness));
        }
        Ok(l)
    }

    /// Builds the algebra with the Jacobi check deferred to the caller.
    pub fn new_unchecked(dim: usize, brackets: &[Bracket]) -> Result<Self> {
        let mut table = vec![vec![Scalar::zero(); dim]; dim * dim];
        let mut seen = vec![false; dim * dim];
        for b in brackets {
            for idx in [b.i, b.j].into_iter().chain(b.coeffs.iter().map(|(k, _)| *k)) {
                if idx >= dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            if b.i == b.j {
                return Err(Error::DegenerateBracket(b.i, b.j));
            }
            let (lo, hi) = (b.i.min(b.j), b.i.max(b.j));
            if seen[lo * dim + hi] {
                return Err(Error::DuplicateBracket(lo, hi));
            }
            seen[lo * dim + hi] = true;
            let sign = if b.i < b.j { Scalar::one() } else { Scalar::from_int(-1) };
            for (k, c) in &b.coeffs {
                let v = &sign * &Scalar::real(c.clone());
                table[lo * dim + hi][*k] += &v;
                table[hi * dim + lo][*k] -= &v;
            }
        }
        Ok(LieAlgebra { dim, table })
    }

    /// Abelian algebra `R^dim`.
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra { dim, table: vec![vec![Scalar::zero(); dim]; dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `[g_i, g_j]` in coordinates.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.dim + j]
    }

    /// `c^k_ij`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.table[i * self.dim + j][k]
    }

    /// Nonzero brackets with `i < j`, for serialization and display.
    pub fn brackets(&self) -> Vec<Bracket> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let coeffs: Vec<(usize, Rational)> = self
                    .basis_bracket(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.re.clone()))
                    .collect();
                if !coeffs.is_empty() {
                    out.push(Bracket::new(i, j, coeffs));
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| v.iter().all(Scalar::is_zero))
    }

    /// Bracket of arbitrary complexified vectors by bilinearity.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        assert!(x.len() == self.dim && y.len() == self.dim, "bracket: wrong vector length");
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let coeff = xi * yj;
                for (k, c) in self.basis_bracket(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(&coeff * c);
                    }
                }
            }
        }
        out
    }

    /// Adjoint matrix `ad(x)`.
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.bracket(x, &unit(self.dim, j))).collect();
        Matrix::from_columns(&cols)
    }

    /// First basis triple violating Jacobi, or `None` when it holds.
    pub fn jacobi_check(&self) -> Option<[usize; 3]> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (gi, gj, gk) = (unit(n, i), unit(n, j), unit(n, k));
                    let a = self.bracket(&self.bracket(&gi, &gj), &gk);
                    let b = self.bracket(&self.bracket(&gj, &gk), &gi);
                    let c = self.bracket(&self.bracket(&gk, &gi), &gj);
                    if a.iter().zip(&b).zip(&c).any(|((x, y), z)| !(&(x + y) + z).is_zero()) {
                        return Some([i, j, k]);
                    }
                }
            }
        }
        None
    }

    /// The same algebra written in a new real basis whose vectors are the
    /// columns of `basis` (assumed invertible).
    pub fn change_basis(&self, basis: &Matrix) -> Result<LieAlgebra> {
        let inv = basis
            .inverse()
            .ok_or_else(|| Error::Internal("change_basis: singular basis".into()))?;
        let n = self.dim;
        let cols: Vec<Vector> = (0..n).map(|i| basis.column(i)).collect();
        let mut table = vec![vec![Scalar::zero(); n]; n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    table[i * n + j] = inv.mul_vec(&self.bracket(&cols[i], &cols[j]));
                }
            }
        }
        Ok(LieAlgebra { dim: n, table })
    }
}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LieAlgebra(dim {}", self.dim)?;
        for b in self.brackets() {
            let rhs: Vec<String> = b
                .coeffs
                .iter()
                .map(|(k, c)| format!("{}*g{}", crate::exact::format_rational(c), k + 1))
                .collect();
            write!(f, ", [g{},g{}]={}", b.i + 1, b.j + 1, rhs.join("+"))?;
        }
        write!(f, ")")
    }
}

/// Standard basis vector `e_i` of length `n`.
pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}
