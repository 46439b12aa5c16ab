use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar, Vector};
use crate::lie::{Coframe, InvariantForm, Monomial};

/// Increasing `k`-subsets of `lo..hi`.
fn subsets(lo: usize, hi: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in lo..hi {
        if hi - first < k {
            break;
        }
        for mut rest in subsets(first + 1, hi, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Monomial basis of each `Lambda^{p,q}` over a complex coframe with `half = m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormBasis {
    half: usize,
    blocks: BTreeMap<(usize, usize), Vec<Monomial>>,
}

impl FormBasis {
    pub fn new(half: usize) -> Self {
        let mut blocks = BTreeMap::new();
        for p in 0..=half {
            let ps = subsets(0, half, p);
            for q in 0..=half {
                let qs = subsets(half, 2 * half, q);
                let monos = ps
                    .iter()
                    .flat_map(|a| qs.iter().map(move |b| a.iter().chain(b).copied().collect()))
                    .collect();
                blocks.insert((p, q), monos);
            }
        }
        FormBasis { half, blocks }
    }

    pub fn half(&self) -> usize {
        self.half
    }

    pub fn tag(&self) -> Coframe {
        Coframe::Complex { half: self.half }
    }

    pub fn block(&self, p: usize, q: usize) -> &[Monomial] {
        self.blocks.get(&(p, q)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn dim(&self, p: usize, q: usize) -> usize {
        self.block(p, q).len()
    }

    pub fn element(&self, p: usize, q: usize, idx: usize) -> InvariantForm {
        InvariantForm::monomial(self.tag(), 2 * self.half, self.block(p, q)[idx].clone(), Scalar::one())
    }

    /// Coordinates of a pure `(p,q)`-form.
    pub fn coords(&self, p: usize, q: usize, eta: &InvariantForm) -> Vector {
        self.block(p, q).iter().map(|m| eta.coeff(m)).collect()
    }

    pub fn form(&self, p: usize, q: usize, coords: &[Scalar]) -> InvariantForm {
        InvariantForm::from_terms(
            self.tag(),
            2 * self.half,
            p + q,
            self.block(p, q).iter().cloned().zip(coords.iter().cloned()),
        )
    }
}

/// Which bidegrees an operator is defined on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// Every `Lambda^{p,q}`.
    All,
    /// `Lambda^{0,q}` only.
    ZeroP,
}

impl Domain {
    pub fn bidegrees(self, half: usize) -> Vec<(usize, usize)> {
        let ps = match self {
            Domain::All => half,
            Domain::ZeroP => 0,
        };
        (0..=ps).flat_map(|p| (0..=half).map(move |q| (p, q))).collect()
    }
}

/// Linear operator on invariant forms with a fixed bidegree shift, stored
/// as one matrix per source bidegree (rows: target basis, cols: source basis).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorOnForms {
    basis: FormBasis,
    domain: Domain,
    shift: (isize, isize),
    blocks: BTreeMap<(usize, usize), Matrix>,
}

fn target(p: usize, q: usize, shift: (isize, isize), half: usize) -> Option<(usize, usize)> {
    let tp = p as isize + shift.0;
    let tq = q as isize + shift.1;
    (tp >= 0 && tq >= 0 && tp as usize <= half && tq as usize <= half).then(|| (tp as usize, tq as usize))
}

impl OperatorOnForms {
    /// Tabulates `f` on every basis monomial of the domain; fails if an
    /// image does not have the declared bidegree.
    pub fn from_fn(
        basis: &FormBasis,
        domain: Domain,
        shift: (isize, isize),
        mut f: impl FnMut(&InvariantForm) -> Result<InvariantForm>,
    ) -> Result<Self> {
        let half = basis.half();
        let mut blocks = BTreeMap::new();
        for (p, q) in domain.bidegrees(half) {
            let n_src = basis.dim(p, q);
            let tgt = target(p, q, shift, half);
            let n_tgt = tgt.map_or(0, |(tp, tq)| basis.dim(tp, tq));
            let mut m = Matrix::zeros(n_tgt, n_src);
            for c in 0..n_src {
                let image = f(&basis.element(p, q, c))?;
                if image.is_zero() {
                    continue;
                }
                let Some((tp, tq)) = tgt else {
                    return Err(Error::Internal(format!("image of a ({p},{q})-form leaves the bigrading")));
                };
                if !image.is_pure(tp, tq) {
                    return Err(Error::Internal(format!(
                        "operator declared with shift {shift:?} maps ({p},{q}) into {:?}",
                        image.bidegrees()
                    )));
                }
                for (r, x) in basis.coords(tp, tq, &image).into_iter().enumerate() {
                    m[(r, c)] = x;
                }
            }
            blocks.insert((p, q), m);
        }
        Ok(OperatorOnForms { basis: basis.clone(), domain, shift, blocks })
    }

    pub(crate) fn from_blocks(
        basis: &FormBasis,
        domain: Domain,
        shift: (isize, isize),
        blocks: BTreeMap<(usize, usize), Matrix>,
    ) -> Self {
        OperatorOnForms { basis: basis.clone(), domain, shift, blocks }
    }

    /// `s * id` on block `(p,q)`.
    pub fn scalar(basis: &FormBasis, domain: Domain, mut s: impl FnMut(usize, usize) -> Scalar) -> Self {
        let blocks = domain
            .bidegrees(basis.half())
            .into_iter()
            .map(|(p, q)| ((p, q), Matrix::identity(basis.dim(p, q)).scale(&s(p, q))))
            .collect();
        OperatorOnForms { basis: basis.clone(), domain, shift: (0, 0), blocks }
    }

    pub fn basis(&self) -> &FormBasis {
        &self.basis
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn shift(&self) -> (isize, isize) {
        self.shift
    }

    pub fn block(&self, p: usize, q: usize) -> Option<&Matrix> {
        self.blocks.get(&(p, q))
    }

    pub fn blocks(&self) -> impl Iterator<Item = (&(usize, usize), &Matrix)> {
        self.blocks.iter()
    }

    pub fn target_of(&self, p: usize, q: usize) -> Option<(usize, usize)> {
        target(p, q, self.shift, self.basis.half())
    }

    pub fn apply(&self, eta: &InvariantForm) -> InvariantForm {
        let b = &self.basis;
        let degree = eta.degree() as isize + self.shift.0 + self.shift.1;
        let mut out = InvariantForm::zero(b.tag(), 2 * b.half(), degree.max(0) as usize);
        for (p, q) in eta.bidegrees() {
            let (Some(m), Some((tp, tq))) = (self.block(p, q), self.target_of(p, q)) else {
                continue;
            };
            let v = m.mul_vec(&b.coords(p, q, &eta.project(p, q)));
            out = out.add(&b.form(tp, tq, &v));
        }
        out
    }

    /// `self o other`.
    pub fn compose(&self, other: &OperatorOnForms) -> OperatorOnForms {
        let half = self.basis.half();
        let shift = (self.shift.0 + other.shift.0, self.shift.1 + other.shift.1);
        let mut blocks = BTreeMap::new();
        for (p, q) in other.domain.bidegrees(half) {
            let n_src = self.basis.dim(p, q);
            let n_tgt = target(p, q, shift, half).map_or(0, |(tp, tq)| self.basis.dim(tp, tq));
            let m = match (other.block(p, q), other.target_of(p, q)) {
                (Some(b), Some((mp, mq))) => match self.block(mp, mq) {
                    Some(a) if a.rows() == n_tgt => a.mul(b),
                    _ => Matrix::zeros(n_tgt, n_src),
                },
                _ => Matrix::zeros(n_tgt, n_src),
            };
            blocks.insert((p, q), m);
        }
        OperatorOnForms { basis: self.basis.clone(), domain: other.domain, shift, blocks }
    }

    fn combine(&self, other: &OperatorOnForms, f: impl Fn(&Matrix, &Matrix) -> Matrix) -> OperatorOnForms {
        assert_eq!(self.shift, other.shift, "adding operators with different shifts");
        let mut blocks = BTreeMap::new();
        for (k, a) in &self.blocks {
            let m = match other.blocks.get(k) {
                Some(b) => f(a, b),
                None => f(a, &Matrix::zeros(a.rows(), a.cols())),
            };
            blocks.insert(*k, m);
        }
        OperatorOnForms { basis: self.basis.clone(), domain: self.domain, shift: self.shift, blocks }
    }

    pub fn add(&self, other: &OperatorOnForms) -> OperatorOnForms {
        self.combine(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &OperatorOnForms) -> OperatorOnForms {
        self.combine(other, |a, b| a.sub(b))
    }

    pub fn scale(&self, s: &Scalar) -> OperatorOnForms {
        let blocks = self.blocks.iter().map(|(k, m)| (*k, m.scale(s))).collect();
        OperatorOnForms { blocks, ..self.clone() }
    }

    pub fn commutator(&self, other: &OperatorOnForms) -> OperatorOnForms {
        self.compose(other).sub(&other.compose(self))
    }

    pub fn anticommutator(&self, other: &OperatorOnForms) -> OperatorOnForms {
        self.compose(other).add(&other.compose(self))
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.values().all(Matrix::is_zero)
    }

    /// First source bidegree with a nonzero block.
    pub fn first_nonzero_block(&self) -> Option<(usize, usize)> {
        self.blocks.iter().find(|(_, m)| !m.is_zero()).map(|(k, _)| *k)
    }

    /// Restriction to `Lambda^{0,*}`.
    pub fn restrict_zero_p(&self) -> OperatorOnForms {
        let blocks = self.blocks.iter().filter(|((p, _), _)| *p == 0).map(|(k, m)| (*k, m.clone())).collect();
        OperatorOnForms { basis: self.basis.clone(), domain: Domain::ZeroP, shift: self.shift, blocks }
    }
}
