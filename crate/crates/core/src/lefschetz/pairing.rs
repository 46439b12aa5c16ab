use std::collections::BTreeMap;

use super::operator::{Domain, FormBasis, OperatorOnForms};
use crate::error::{Error, Result};
use crate::exact::{is_positive_definite, Matrix, Scalar};
use crate::hkt::QuatHermMetric;
use crate::lie::InvariantForm;
use crate::quat::ComplexStructure;

/// Hermitian pairing on invariant forms induced by a quaternionic Hermitian
/// metric. On 1-forms `<a, b> = 1/2 a G^{-1} b^*` in real-coframe
/// coefficients; on `p`-forms the Gram determinant. `K^{1/2}` is
/// trivialized by a unit section, so twisted forms pair like plain ones.
///
/// Block Gram matrices satisfy `<x, y> = y^* G x`.
#[derive(Debug, Clone)]
pub struct HermitianPairing {
    metric: QuatHermMetric,
    basis: FormBasis,
    domain: Domain,
    one_forms: Matrix,
    grams: BTreeMap<(usize, usize), Matrix>,
    inverses: BTreeMap<(usize, usize), Matrix>,
}

impl HermitianPairing {
    pub fn new(metric: &QuatHermMetric, cs: &ComplexStructure, domain: Domain) -> Result<Self> {
        let n = cs.dim();
        let half = cs.half();
        let g_inv = metric.gram().inverse().ok_or(Error::NotPositive { minor: n })?;
        let c = cs.coframe();
        let one_forms = c.mul(&g_inv).mul(&c.conj_transpose()).scale(&Scalar::from_frac(1, 2));
        for a in 0..half {
            for b in half..n {
                if !one_forms[(a, b)].is_zero() {
                    return Err(Error::Internal("(1,0)- and (0,1)-forms are not orthogonal".into()));
                }
            }
        }
        let basis = FormBasis::new(half);
        let mut grams = BTreeMap::new();
        let mut inverses = BTreeMap::new();
        for (p, q) in domain.bidegrees(half) {
            let monos = basis.block(p, q);
            let g = Matrix::from_fn(monos.len(), monos.len(), |r, col| {
                one_forms.select(&monos[col], &monos[r]).determinant()
            });
            let def = is_positive_definite(&g)?;
            if let Some(minor) = def.failing_minor {
                return Err(Error::NotPositive { minor });
            }
            inverses.insert((p, q), g.inverse().expect("positive definite"));
            grams.insert((p, q), g);
        }
        Ok(HermitianPairing { metric: metric.clone(), basis, domain, one_forms, grams, inverses })
    }

    pub fn metric(&self) -> &QuatHermMetric {
        &self.metric
    }

    pub fn basis(&self) -> &FormBasis {
        &self.basis
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// `<eps_a, eps_b>` on the complex coframe.
    pub fn one_forms(&self) -> &Matrix {
        &self.one_forms
    }

    pub fn gram(&self, p: usize, q: usize) -> Option<&Matrix> {
        self.grams.get(&(p, q))
    }

    /// `<x, y>`, linear in `x`.
    pub fn inner(&self, x: &InvariantForm, y: &InvariantForm) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        for (p, q) in x.bidegrees() {
            let g = self.grams.get(&(p, q)).ok_or(Error::WrongBidegree { expected_p: 0, expected_q: q })?;
            let xv = self.basis.coords(p, q, &x.project(p, q));
            let yv = self.basis.coords(p, q, &y.project(p, q));
            let gx = g.mul_vec(&xv);
            for (a, b) in gx.iter().zip(&yv) {
                acc += &(a * &b.conj());
            }
        }
        Ok(acc)
    }

    pub fn norm_sqr(&self, x: &InvariantForm) -> Result<Scalar> {
        self.inner(x, x)
    }

    /// Hermitian adjoint: on each block `G_src^{-1} M^* G_tgt`.
    pub fn adjoint(&self, op: &OperatorOnForms) -> Result<OperatorOnForms> {
        let (dp, dq) = op.shift();
        let half = self.basis.half();
        let shift = (-dp, -dq);
        let mut blocks = BTreeMap::new();
        for (p, q) in op.domain().bidegrees(half) {
            let tp = p as isize - dp;
            let tq = q as isize - dq;
            let n_src = self.basis.dim(p, q);
            let pre = (tp >= 0 && tq >= 0 && tp as usize <= half && tq as usize <= half)
                .then(|| (tp as usize, tq as usize));
            let n_tgt = pre.map_or(0, |(a, b)| self.basis.dim(a, b));
            let m = match pre.and_then(|(a, b)| op.block(a, b).map(|m| (a, b, m))) {
                Some((a, b, m)) => {
                    let g_pre = self.inverses.get(&(a, b)).ok_or(Error::Internal("pairing domain too small".into()))?;
                    let g_here = self.grams.get(&(p, q)).ok_or(Error::Internal("pairing domain too small".into()))?;
                    g_pre.mul(&m.conj_transpose()).mul(g_here)
                }
                None => Matrix::zeros(n_tgt, n_src),
            };
            blocks.insert((p, q), m);
        }
        Ok(OperatorOnForms::from_blocks(&self.basis, op.domain(), shift, blocks))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::hkt::omega_from_metric;
    use crate::random::Rng;

    #[test]
    fn omega_has_norm_n() {
        for inst in crate::catalog::all() {
            let hs = &inst.structure;
            let mut rng = Rng::seeded(3);
            for g in [QuatHermMetric::identity(hs).unwrap(), QuatHermMetric::random(&mut rng, hs, 3).unwrap()] {
                let pairing = HermitianPairing::new(&g, hs.complex(), Domain::All).unwrap();
                let omega = omega_from_metric(&g, hs).unwrap();
                let n = hs.quaternionic_dim() as i64;
                assert_eq!(pairing.norm_sqr(omega.form()).unwrap(), Scalar::from_int(n), "{}", inst.name);
            }
        }
    }

    #[test]
    fn adjoint_of_wedge() {
        let inst = catalog("abelian_h2").unwrap();
        let hs = &inst.structure;
        let g = QuatHermMetric::random(&mut Rng::seeded(1), hs, 3).unwrap();
        let pairing = HermitianPairing::new(&g, hs.complex(), Domain::All).unwrap();
        let b = pairing.basis().clone();
        let a = b.element(0, 1, 1).add(&b.element(0, 1, 2).scale(&Scalar::i()));
        let op = OperatorOnForms::from_fn(&b, Domain::All, (0, 1), |e| Ok(a.wedge(e))).unwrap();
        let adj = pairing.adjoint(&op).unwrap();
        let x = b.element(1, 0, 0).add(&b.element(1, 0, 3));
        let y = b.element(1, 1, 2).add(&b.element(1, 1, 7).scale(&Scalar::from_int(-2)));
        assert_eq!(pairing.inner(&op.apply(&x), &y).unwrap(), pairing.inner(&x, &adj.apply(&y)).unwrap());
    }
}
