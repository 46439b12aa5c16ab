use super::connection::Connection;
use crate::error::{Error, Result};
use crate::exact::{flatten, lie_closure, Matrix, Scalar, Span};
use crate::lie::LieAlgebra;
use crate::quat::{in_sl_n_h, HypercomplexStructure};

/// `R(g_i, g_j) = [Gamma_i, Gamma_j] - Gamma_{[g_i, g_j]}` for `i < j`.
#[derive(Debug, Clone)]
pub struct Curvature {
    dim: usize,
    values: Vec<((usize, usize), Matrix)>,
}

impl Curvature {
    pub fn at(&self, i: usize, j: usize) -> Matrix {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Matrix::zeros(self.dim, self.dim),
            std::cmp::Ordering::Less => self.lookup(i, j).clone(),
            std::cmp::Ordering::Greater => self.lookup(j, i).neg(),
        }
    }

    fn lookup(&self, i: usize, j: usize) -> &Matrix {
        &self.values.iter().find(|(p, _)| *p == (i, j)).expect("pair stored").1
    }

    /// `(i, j, R(g_i, g_j))` for `i < j`.
    pub fn values(&self) -> &[((usize, usize), Matrix)] {
        &self.values
    }

    pub fn is_flat(&self) -> bool {
        self.values.iter().all(|(_, m)| m.is_zero())
    }

    /// First nonzero `R(g_i, g_j)`.
    pub fn witness(&self) -> Option<&((usize, usize), Matrix)> {
        self.values.iter().find(|(_, m)| !m.is_zero())
    }
}

/// Curvature of `c`; asserts every value commutes with `I, J, K` when
/// `c` preserves the structure.
pub fn curvature(c: &Connection, l: &LieAlgebra, hs: Option<&HypercomplexStructure>) -> Result<Curvature> {
    let n = l.dim();
    let mut values = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let r = c.gamma(i).commutator(c.gamma(j)).sub(&c.gamma_at(l.basis_bracket(i, j)));
            if let Some(hs) = hs {
                if let Some(name) = hs.quaternion_linear_failure(&r) {
                    return Err(Error::Internal(format!(
                        "R(g{}, g{}) does not commute with {name}",
                        i + 1,
                        j + 1
                    )));
                }
            }
            values.push(((i, j), r));
        }
    }
    Ok(Curvature { dim: n, values })
}

/// How a holonomy basis element was produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    Curvature { i: usize, j: usize },
    /// `[Gamma_{g_x}, A_of]`
    GammaCommutator { x: usize, of: usize },
    /// `[A_a, A_b]`
    Bracket { a: usize, b: usize },
}

#[derive(Debug, Clone)]
pub struct HolonomyAlgebra {
    pub basis: Vec<Matrix>,
    pub transcript: Vec<Origin>,
    pub flat: bool,
}

impl HolonomyAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Smallest subspace of `gl(g)` containing every `R(x, y)` and closed under
/// `A -> [Gamma_x, A]` and under commutators. The result is re-checked for
/// bracket closure and `H`-linearity.
pub fn holonomy_algebra(c: &Connection, l: &LieAlgebra, hs: &HypercomplexStructure) -> Result<HolonomyAlgebra> {
    let n = l.dim();
    let curv = curvature(c, l, Some(hs))?;
    let mut span = Span::new(n * n);
    let mut basis: Vec<Matrix> = Vec::new();
    let mut transcript = Vec::new();
    for ((i, j), r) in curv.values() {
        if span.insert(&flatten(r)) {
            basis.push(r.clone());
            transcript.push(Origin::Curvature { i: *i, j: *j });
        }
    }
    let mut next = 0;
    while next < basis.len() {
        let a = basis[next].clone();
        for x in 0..n {
            let m = c.gamma(x).commutator(&a);
            if span.insert(&flatten(&m)) {
                basis.push(m);
                transcript.push(Origin::GammaCommutator { x, of: next });
            }
        }
        for b in 0..next {
            let m = a.commutator(&basis[b]);
            if span.insert(&flatten(&m)) {
                basis.push(m);
                transcript.push(Origin::Bracket { a: next, b });
            }
        }
        next += 1;
    }
    if lie_closure(&basis).len() != basis.len() {
        return Err(Error::Internal("holonomy span is not bracket-closed".into()));
    }
    for (t, m) in basis.iter().enumerate() {
        if let Some(name) = hs.quaternion_linear_failure(m) {
            return Err(Error::Internal(format!("holonomy element {t} does not commute with {name}")));
        }
    }
    Ok(HolonomyAlgebra { basis, transcript, flat: curv.is_flat() })
}

/// Result of testing every holonomy generator for membership in `sl(n, H)`.
#[derive(Debug, Clone)]
pub struct SlCertificate {
    pub complex_traces: Vec<Scalar>,
    pub offending: Option<usize>,
}

impl SlCertificate {
    pub fn holds(&self) -> bool {
        self.offending.is_none()
    }
}

pub fn holonomy_in_sl_check(basis: &[Matrix], hs: &HypercomplexStructure) -> Result<SlCertificate> {
    let mut complex_traces = Vec::with_capacity(basis.len());
    let mut offending = None;
    for (t, m) in basis.iter().enumerate() {
        let mem = in_sl_n_h(m, hs)?;
        if !mem.member && offending.is_none() {
            offending = Some(t);
        }
        complex_traces.push(mem.complex_trace);
    }
    Ok(SlCertificate { complex_traces, offending })
}
