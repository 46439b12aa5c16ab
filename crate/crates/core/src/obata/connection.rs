use crate::error::{Error, Result};
use crate::exact::{kernel, solve, unflatten, Matrix, Scalar, Solution, Vector};
use crate::lie::LieAlgebra;
use crate::quat::HypercomplexStructure;

/// Left-invariant affine connection: `gamma[i]` is the matrix of
/// `Gamma_{g_i}`, so `nabla_{g_i} g_j = sum_k gamma[i][(k, j)] g_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connection {
    gamma: Vec<Matrix>,
}

impl Connection {
    pub fn new(gamma: Vec<Matrix>) -> Result<Self> {
        let n = gamma.len();
        for g in &gamma {
            if !g.is_square() || g.rows() != n {
                return Err(Error::DimensionMismatch { context: "connection", expected: n, found: g.rows() });
            }
        }
        Ok(Connection { gamma })
    }

    pub fn zero(n: usize) -> Self {
        Connection { gamma: vec![Matrix::zeros(n, n); n] }
    }

    pub fn dim(&self) -> usize {
        self.gamma.len()
    }

    /// `Gamma^k_ij`.
    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.gamma[i][(k, j)]
    }

    pub fn gamma(&self, i: usize) -> &Matrix {
        &self.gamma[i]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.gamma
    }

    /// `Gamma_x = sum x_i Gamma_{g_i}`.
    pub fn gamma_at(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut acc = Matrix::zeros(n, n);
        for (xi, g) in x.iter().zip(&self.gamma) {
            if !xi.is_zero() {
                acc = acc.add(&g.scale(xi));
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.gamma.iter().all(Matrix::is_zero)
    }

    /// First pair with `Gamma_i g_j - Gamma_j g_i != [g_i, g_j]`.
    pub fn torsion_violation(&self, l: &LieAlgebra) -> Option<(usize, usize, Vector)> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                let t: Vector = (0..n)
                    .map(|k| &(&self.gamma[i][(k, j)] - &self.gamma[j][(k, i)]) - &l.basis_bracket(i, j)[k])
                    .collect();
                if t.iter().any(|s| !s.is_zero()) {
                    return Some((i, j, t));
                }
            }
        }
        None
    }

    /// First `(operator, i)` with `Gamma_i` not commuting with the operator.
    pub fn parallel_violation(&self, hs: &HypercomplexStructure) -> Option<(&'static str, usize)> {
        self.gamma
            .iter()
            .enumerate()
            .find_map(|(i, g)| hs.quaternion_linear_failure(g).map(|name| (name, i)))
    }

    pub fn add(&self, other: &Connection) -> Connection {
        Connection { gamma: self.gamma.iter().zip(&other.gamma).map(|(a, b)| a.add(b)).collect() }
    }
}

/// Basis of the endomorphisms commuting with `I`, `J` and `K`.
pub fn commutant_basis(hs: &HypercomplexStructure) -> Vec<Matrix> {
    let n = hs.dim();
    let mut rows: Vec<Vector> = Vec::with_capacity(3 * n * n);
    for (_, a) in hs.ops() {
        // ([X, A])_{rc} = sum_t X_rt A_tc - A_rt X_tc
        for r in 0..n {
            for c in 0..n {
                let mut row = vec![Scalar::zero(); n * n];
                for t in 0..n {
                    row[r * n + t] += &a[(t, c)];
                    row[t * n + c] -= &a[(r, t)];
                }
                rows.push(row);
            }
        }
    }
    kernel(&Matrix::from_rows(rows)).iter().map(|v| unflatten(v, n)).collect()
}

/// The Obata connection, defined as the unique torsion-free connection with
/// every `Gamma_x` commuting with `I, J, K`.
///
/// `Gamma_i` is first written in a basis of the commutant; the torsion
/// equations are then solved for the coordinates. An inconsistent system
/// or a nontrivial solution family is reported as an error. The output is
/// re-verified against both defining identities.
pub fn obata_solve(l: &LieAlgebra, hs: &HypercomplexStructure) -> Result<Connection> {
    let n = l.dim();
    if hs.dim() != n {
        return Err(Error::DimensionMismatch { context: "obata", expected: n, found: hs.dim() });
    }
    let basis = commutant_basis(hs);
    let r = basis.len();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let bracket = l.basis_bracket(i, j);
            for k in 0..n {
                let mut row = vec![Scalar::zero(); n * r];
                for (s, b) in basis.iter().enumerate() {
                    row[i * r + s] += &b[(k, j)];
                    row[j * r + s] -= &b[(k, i)];
                }
                rows.push(row);
                rhs.push(bracket[k].clone());
            }
        }
    }
    let a = Matrix::from_rows(rows);
    let coords = match solve(&a, &rhs)? {
        Solution::Unique(x) => x,
        Solution::Affine { kernel, .. } => return Err(Error::ObataNotUnique(kernel.len())),
        Solution::Inconsistent => return Err(Error::ObataInconsistent),
    };
    let gamma = (0..n)
        .map(|i| {
            let mut acc = Matrix::zeros(n, n);
            for (s, b) in basis.iter().enumerate() {
                let c = &coords[i * r + s];
                if !c.is_zero() {
                    acc = acc.add(&b.scale(c));
                }
            }
            acc
        })
        .collect();
    let conn = Connection { gamma };
    if let Some((i, j, _)) = conn.torsion_violation(l) {
        return Err(Error::Internal(format!("solver output has torsion on (g{}, g{})", i + 1, j + 1)));
    }
    if let Some((name, i)) = conn.parallel_violation(hs) {
        return Err(Error::Internal(format!("solver output: Gamma_{} does not commute with {name}", i + 1)));
    }
    Ok(conn)
}

/// `Gamma_x y` by direct evaluation.
pub fn covariant_derivative(c: &Connection, x: &[Scalar], y: &[Scalar]) -> Vector {
    c.gamma_at(x).mul_vec(y)
}
