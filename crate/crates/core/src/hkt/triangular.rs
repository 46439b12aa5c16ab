use crate::error::Result;
use crate::exact::{kernel, Matrix, Span, Vector};
use crate::lie::{InvariantForm, LieAlgebra};
use crate::quat::ComplexStructure;

/// `c^k_ij = 0` whenever `k <= max(i, j)`; returns the first offending
/// `(i, j, k)` otherwise.
pub fn triangular_violation(l: &LieAlgebra) -> Option<(usize, usize, usize)> {
    let n = l.dim();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..=j {
                if !l.structure_constant(i, j, k).is_zero() {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// Outcome of the greedy search. `basis` columns are `b_1..b_dim` with
/// `I b_{2p-1} = b_{2p}`.
#[derive(Debug, Clone)]
pub struct TriangularReport {
    pub basis: Option<Matrix>,
    pub triangular: bool,
    /// `d theta_k` only involves `theta_i ^ bar theta_j` with `i, j < k`.
    pub complex_triangular: bool,
    pub message: String,
}

impl TriangularReport {
    pub fn found(&self) -> bool {
        self.basis.is_some() && self.triangular && self.complex_triangular
    }

    fn not_found(message: String) -> Self {
        TriangularReport { basis: None, triangular: false, complex_triangular: false, message }
    }
}

/// Rows spanning the annihilator of `w`.
fn annihilator(w: &Span) -> Matrix {
    let n = w.ambient_dim();
    let basis = w.basis();
    if basis.is_empty() {
        return Matrix::identity(n);
    }
    let rows = kernel(&Matrix::from_rows(basis));
    Matrix::from_rows(rows)
}

/// Builds the basis from the top of the algebra down: at each step it picks
/// `v` outside the current `I`-invariant subspace `W` such that
/// `[g, v]` and `[g, I v]` lie in `W` for all `g`, and prepends `(v, I v)`.
pub fn triangular_basis_search(l: &LieAlgebra, cs: &ComplexStructure) -> Result<TriangularReport> {
    let n = l.dim();
    let op = cs.op();
    let mut w = Span::new(n);
    let mut pairs: Vec<(Vector, Vector)> = Vec::new();
    while w.dim() < n {
        let q = annihilator(&w);
        let mut stacked: Vec<Vector> = Vec::new();
        for g in 0..n {
            let ad = l.ad(&crate::lie::unit(n, g));
            for m in [q.mul(&ad), q.mul(&ad).mul(op)] {
                stacked.extend((0..m.rows()).map(|r| m.row(r).to_vec()));
            }
        }
        let candidates = kernel(&Matrix::from_rows(stacked));
        let Some(v) = candidates.into_iter().find(|v| !w.contains(v)) else {
            return Ok(TriangularReport::not_found(format!(
                "no admissible vector outside a {}-dimensional I-invariant subspace",
                w.dim()
            )));
        };
        let iv = op.mul_vec(&v);
        w.insert(&v);
        w.insert(&iv);
        pairs.push((v, iv));
    }
    let cols: Vec<Vector> = pairs.into_iter().rev().flat_map(|(v, iv)| [v, iv]).collect();
    let basis = Matrix::from_columns(&cols);
    let adapted = l.change_basis(&basis)?;
    let triangular = triangular_violation(&adapted).is_none();
    let complex_triangular = check_complex_triangular(l, cs, &basis)?;
    let message = if triangular && complex_triangular {
        "adapted basis found".to_string()
    } else {
        "greedy basis fails the re-check".to_string()
    };
    Ok(TriangularReport { basis: Some(basis), triangular, complex_triangular, message })
}

/// With `h_p = b_{2p-1} - i b_{2p}`: `d theta_k = sum m^k_ij theta_i ^ bar theta_j`
/// with `m^k_ij = 0` for `k <= max(i, j)` and no (2,0)-part.
fn check_complex_triangular(l: &LieAlgebra, cs: &ComplexStructure, basis: &Matrix) -> Result<bool> {
    let half = cs.half();
    let ones: Vec<Vector> = (0..half)
        .map(|p| {
            let (b1, b2) = (basis.column(2 * p), basis.column(2 * p + 1));
            b1.iter().zip(&b2).map(|(x, y)| x - &y.mul_i()).collect()
        })
        .collect();
    let adapted = ComplexStructure::with_one_zero_basis(cs.op().clone(), ones)?;
    let d = adapted.differential(l)?;
    for k in 0..half {
        let dk: &InvariantForm = d.of_generator(k);
        for (mono, _) in dk.terms() {
            let (i, j) = (mono[0], mono[1]);
            if i >= half || j < half {
                return Ok(false);
            }
            if i >= k || j - half >= k {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::exact::rat;
    use crate::lie::Bracket;

    #[test]
    fn heisenberg_standard_basis_is_triangular() {
        let l = LieAlgebra::new(3, &[Bracket::new(0, 1, vec![(2, rat(1, 1))])]).unwrap();
        assert_eq!(triangular_violation(&l), None);
        let reversed = LieAlgebra::new(3, &[Bracket::new(1, 2, vec![(0, rat(1, 1))])]).unwrap();
        assert_eq!(triangular_violation(&reversed), Some((1, 2, 0)));
    }

    #[test]
    fn found_on_catalog() {
        for name in ["abelian_h1", "abelian_h2", "qheis_r"] {
            let inst = catalog(name).unwrap();
            let r = triangular_basis_search(&inst.algebra, inst.structure.complex()).unwrap();
            assert!(r.found(), "{name}: {}", r.message);
        }
    }
}
