use super::algebra::{unit, LieAlgebra};
use crate::exact::{Span, Vector};

/// A descending chain of subspaces, each given by an echelon basis.
#[derive(Debug, Clone)]
pub struct Series {
    pub terms: Vec<Vec<Vector>>,
    /// `true` iff the chain reaches the zero subspace.
    pub reaches_zero: bool,
}

impl Series {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Vec::len).collect()
    }

    /// Number of bracket steps needed to reach zero, if it does.
    pub fn length(&self) -> Option<usize> {
        self.reaches_zero.then(|| self.terms.len() - 1)
    }
}

fn iterate_series(l: &LieAlgebra, next: impl Fn(&[Vector]) -> Span) -> Series {
    let n = l.dim();
    let mut terms: Vec<Vec<Vector>> = vec![(0..n).map(|i| unit(n, i)).collect()];
    loop {
        let current = terms.last().unwrap();
        if current.is_empty() {
            return Series { terms, reaches_zero: true };
        }
        let span = next(current);
        if span.dim() == current.len() {
            return Series { terms, reaches_zero: false };
        }
        terms.push(span.basis());
    }
}

/// `g^0 = g`, `g^{s+1} = [g, g^s]`.
pub fn lower_central_series(l: &LieAlgebra) -> Series {
    let n = l.dim();
    iterate_series(l, |current| {
        let mut span = Span::new(n);
        for i in 0..n {
            for v in current {
                span.insert(&l.bracket(&unit(n, i), v));
            }
        }
        span
    })
}

/// `g^(0) = g`, `g^(s+1) = [g^(s), g^(s)]`.
pub fn derived_series(l: &LieAlgebra) -> Series {
    let n = l.dim();
    iterate_series(l, |current| {
        let mut span = Span::new(n);
        for (a, u) in current.iter().enumerate() {
            for v in &current[a + 1..] {
                span.insert(&l.bracket(u, v));
            }
        }
        span
    })
}

pub fn is_nilpotent(l: &LieAlgebra) -> bool {
    lower_central_series(l).reaches_zero
}

pub fn is_solvable(l: &LieAlgebra) -> bool {
    derived_series(l).reaches_zero
}
