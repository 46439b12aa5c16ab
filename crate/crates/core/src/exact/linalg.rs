use super::matrix::{Matrix, Vector};
use super::scalar::Scalar;
use crate::error::Error;

/// Outcome of an exact linear solve `A x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Unique(Vector),
    /// `particular + span(kernel)`.
    Affine { particular: Vector, kernel: Vec<Vector> },
    Inconsistent,
}

impl Solution {
    pub fn unique(self) -> Option<Vector> {
        match self {
            Solution::Unique(x) => Some(x),
            _ => None,
        }
    }
}

/// Exact Gaussian elimination on the augmented system.
pub fn solve(a: &Matrix, b: &[Scalar]) -> Result<Solution, Error> {
    if a.rows() != b.len() {
        return Err(Error::DimensionMismatch {
            context: "solve",
            expected: a.rows(),
            found: b.len(),
        });
    }
    let n = a.cols();
    let mut aug = Matrix::zeros(a.rows(), n + 1);
    for r in 0..a.rows() {
        for c in 0..n {
            aug[(r, c)] = a[(r, c)].clone();
        }
        aug[(r, n)] = b[r].clone();
    }
    let pivots = aug.rref_in_place(n);
    // a nonzero right-hand side in a row with no pivot
    if (pivots.len()..a.rows()).any(|r| !aug[(r, n)].is_zero()) {
        return Ok(Solution::Inconsistent);
    }
    let mut particular = vec![Scalar::zero(); n];
    for (row, &col) in pivots.iter().enumerate() {
        particular[col] = aug[(row, n)].clone();
    }
    if pivots.len() == n {
        return Ok(Solution::Unique(particular));
    }
    let kernel = kernel_from_rref(&aug, &pivots, n);
    Ok(Solution::Affine { particular, kernel })
}

/// Basis of the null space of `a`, one vector per free column.
pub fn kernel(a: &Matrix) -> Vec<Vector> {
    let mut r = a.clone();
    let pivots = r.rref_in_place(a.cols());
    kernel_from_rref(&r, &pivots, a.cols())
}

fn kernel_from_rref(r: &Matrix, pivots: &[usize], n: usize) -> Vec<Vector> {
    let mut is_pivot = vec![false; n];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Scalar::zero(); n];
            v[free] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&r[(row, free)];
            }
            v
        })
        .collect()
}

/// Sylvester-criterion result for a Hermitian matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Definiteness {
    pub positive: bool,
    /// 1-based size of the first non-positive leading principal minor.
    pub failing_minor: Option<usize>,
    /// Leading principal minors that were evaluated, in order.
    pub minors: Vec<Scalar>,
}

/// Positive-definiteness by leading principal minors.
pub fn is_positive_definite(h: &Matrix) -> Result<Definiteness, Error> {
    if !h.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    let mut minors = Vec::new();
    for k in 1..=h.rows() {
        let m = h.block(0, k, 0, k).determinant();
        // Hermitian minors are real
        let positive = m.is_positive_real();
        minors.push(m);
        if !positive {
            return Ok(Definiteness { positive: false, failing_minor: Some(k), minors });
        }
    }
    Ok(Definiteness { positive: true, failing_minor: None, minors })
}

/// Incrementally maintained subspace of `Q(i)^n`, kept in row echelon form.
#[derive(Debug, Clone)]
pub struct Span {
    dim: usize,
    /// (pivot column, row normalised to 1 at the pivot), sorted by pivot
    rows: Vec<(usize, Vector)>,
}

impl Span {
    pub fn new(ambient_dim: usize) -> Self {
        Span { dim: ambient_dim, rows: Vec::new() }
    }

    pub fn from_vectors<'a>(ambient_dim: usize, vs: impl IntoIterator<Item = &'a Vector>) -> Self {
        let mut s = Span::new(ambient_dim);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after elimination against the current rows.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            if w[*p].is_zero() {
                continue;
            }
            let f = w[*p].clone();
            for (c, x) in row.iter().enumerate().skip(*p) {
                if !x.is_zero() {
                    w[c] -= &(&f * x);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Adds `v`; returns `true` if the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv();
        let w: Vector = w.iter().map(|x| x * &inv).collect();
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, w));
        true
    }

    /// Echelon basis of the subspace.
    pub fn basis(&self) -> Vec<Vector> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }

    pub fn contains_span(&self, other: &Span) -> bool {
        other.rows.iter().all(|(_, r)| self.contains(r))
    }
}

pub(crate) fn flatten(m: &Matrix) -> Vector {
    m.entries().to_vec()
}

pub(crate) fn unflatten(v: &[Scalar], n: usize) -> Matrix {
    Matrix::from_fn(n, n, |r, c| v[r * n + c].clone())
}

/// Smallest bracket-closed subspace of `gl(n)` containing `generators`,
/// returned as an independent basis.
pub fn lie_closure(generators: &[Matrix]) -> Vec<Matrix> {
    let Some(first) = generators.first() else {
        return Vec::new();
    };
    let n = first.rows();
    assert!(
        generators.iter().all(|g| g.is_square() && g.rows() == n),
        "lie_closure needs square matrices of one size"
    );
    let mut span = Span::new(n * n);
    let mut basis: Vec<Matrix> = Vec::new();
    for g in generators {
        if span.insert(&flatten(g)) {
            basis.push(g.clone());
        }
    }
    // worklist: bracket every new element against everything before it
    let mut next = 0;
    while next < basis.len() {
        let a = basis[next].clone();
        for j in 0..next {
            let c = a.commutator(&basis[j]);
            if span.insert(&flatten(&c)) {
                basis.push(c);
            }
        }
        next += 1;
    }
    basis
}
