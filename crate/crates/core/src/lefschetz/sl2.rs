use super::operator::{Domain, OperatorOnForms};
use super::pairing::HermitianPairing;
use crate::error::{Error, Result};
use crate::exact::Scalar;
use crate::hkt::{omega_from_metric, TwoZeroForm};
use crate::quat::HypercomplexStructure;

/// Outcome of the `sl(2)` relations. Each `Option<(usize, usize)>` is the
/// first `(0,q)` block where the relation fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Certificate {
    /// `[H, L] = -2 L`
    pub h_l: Option<(usize, usize)>,
    /// `[H, Lambda] = 2 Lambda`
    pub h_lambda: Option<(usize, usize)>,
    /// Measured sign with `[L, Lambda] = eps H`, if `[L, Lambda]` is a
    /// multiple of `H` on the first block where `H != 0`.
    pub epsilon: Option<i64>,
    /// `[L, Lambda] = eps H`
    pub l_lambda: Option<(usize, usize)>,
}

impl Sl2Certificate {
    pub fn holds(&self) -> bool {
        self.h_l.is_none() && self.h_lambda.is_none() && self.l_lambda.is_none() && self.epsilon.is_some()
    }
}

#[derive(Debug, Clone)]
pub struct LefschetzTriple {
    /// `eta -> eta ^ bar Omega`
    pub l: OperatorOnForms,
    /// Hermitian adjoint of `l`.
    pub lambda: OperatorOnForms,
    /// `(n - p) id` on `Lambda^{0,p}`.
    pub h: OperatorOnForms,
    pub certificate: Sl2Certificate,
}

/// Builds `(L, Lambda, H)` on `Lambda^{0,*}` and measures the `sl(2)`
/// relations. `Omega` must be the form of the pairing's metric.
pub fn lefschetz_triple(
    omega: &TwoZeroForm,
    pairing: &HermitianPairing,
    hs: &HypercomplexStructure,
) -> Result<LefschetzTriple> {
    if *omega != omega_from_metric(pairing.metric(), hs)? {
        return Err(Error::PairingMismatch);
    }
    let n = hs.quaternionic_dim();
    if omega.form().power(n).is_zero() {
        return Err(Error::DegenerateForm("Omega^n vanishes"));
    }
    let basis = pairing.basis();
    let omega_bar = omega.form().conj();
    let l = OperatorOnForms::from_fn(basis, Domain::ZeroP, (0, 2), |e| Ok(e.wedge(&omega_bar)))?;
    let lambda = pairing.adjoint(&l)?;
    let h = OperatorOnForms::scalar(basis, Domain::ZeroP, |_, q| Scalar::from_int(n as i64 - q as i64));

    let two = Scalar::from_int(2);
    let h_l = h.commutator(&l).add(&l.scale(&two)).first_nonzero_block();
    let h_lambda = h.commutator(&lambda).sub(&lambda.scale(&two)).first_nonzero_block();
    let c = l.commutator(&lambda);
    let epsilon = (0..=basis.half())
        .filter(|q| *q != n && basis.dim(0, *q) > 0)
        .find_map(|q| c.block(0, q).map(|m| &m[(0, 0)] / &Scalar::from_int(n as i64 - q as i64)))
        .and_then(|e| {
            [1i64, -1].into_iter().find(|s| e == Scalar::from_int(*s))
        });
    let l_lambda = match epsilon {
        Some(e) => c.sub(&h.scale(&Scalar::from_int(e))).first_nonzero_block(),
        None => Some((0, 0)),
    };
    let certificate = Sl2Certificate { h_l, h_lambda, epsilon, l_lambda };
    Ok(LefschetzTriple { l, lambda, h, certificate })
}

/// Per-degree data of the Laplacian experiment on `Lambda^{0,q}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeData {
    pub q: usize,
    pub dim: usize,
    pub ker_laplacian: usize,
    pub closed: usize,
    pub cohomology: usize,
}

/// Comparison of `Delta = D D^* + D^* D` for `D = del_bar` and
/// `D = del_bar_J` on the invariant subcomplex of `Lambda^{0,*}`.
/// This is experimental data, not a verdict on compact manifolds.
#[derive(Debug, Clone)]
pub struct LaplacianReport {
    pub laplacian: OperatorOnForms,
    pub laplacian_j: OperatorOnForms,
    /// First block where the two Laplacians differ.
    pub mismatch: Option<(usize, usize)>,
    /// First block where `[L, Delta] != 0`.
    pub l_commutator: Option<(usize, usize)>,
    /// First block where `[Lambda, Delta] != 0`.
    pub lambda_commutator: Option<(usize, usize)>,
    pub self_adjoint: bool,
    pub degrees: Vec<DegreeData>,
}

impl LaplacianReport {
    pub fn equal(&self) -> bool {
        self.mismatch.is_none()
    }

    pub fn commutes(&self) -> bool {
        self.l_commutator.is_none() && self.lambda_commutator.is_none()
    }

    pub fn zero(&self) -> bool {
        self.laplacian.is_zero() && self.laplacian_j.is_zero()
    }
}

fn laplacian(d: &OperatorOnForms, pairing: &HermitianPairing) -> Result<OperatorOnForms> {
    let adj = pairing.adjoint(d)?;
    Ok(d.compose(&adj).add(&adj.compose(d)))
}

pub fn laplacian_experiment(
    del_bar: &OperatorOnForms,
    del_bar_j: &OperatorOnForms,
    pairing: &HermitianPairing,
    triple: &LefschetzTriple,
) -> Result<LaplacianReport> {
    let d = del_bar.restrict_zero_p();
    let dj = del_bar_j.restrict_zero_p();
    let laplacian_d = laplacian(&d, pairing)?;
    let laplacian_j = laplacian(&dj, pairing)?;
    let mismatch = laplacian_d.sub(&laplacian_j).first_nonzero_block();
    let l_commutator = triple.l.commutator(&laplacian_d).first_nonzero_block();
    let lambda_commutator = triple.lambda.commutator(&laplacian_d).first_nonzero_block();
    let self_adjoint = pairing.adjoint(&laplacian_d)? == laplacian_d && pairing.adjoint(&laplacian_j)? == laplacian_j;
    let basis = pairing.basis();
    let mut degrees = Vec::new();
    for q in 0..=basis.half() {
        let dim = basis.dim(0, q);
        let rank_of = |op: &OperatorOnForms, q: usize| op.block(0, q).map_or(0, |m| m.rank());
        let closed = dim - rank_of(&d, q);
        let exact = if q == 0 { 0 } else { rank_of(&d, q - 1) };
        degrees.push(DegreeData {
            q,
            dim,
            ker_laplacian: dim - rank_of(&laplacian_d, q),
            closed,
            cohomology: closed - exact,
        });
    }
    Ok(LaplacianReport {
        laplacian: laplacian_d,
        laplacian_j,
        mismatch,
        l_commutator,
        lambda_commutator,
        self_adjoint,
        degrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hkt::QuatHermMetric;
    use crate::random::Rng;

    fn triple_for(name: &str, seed: Option<u64>) -> LefschetzTriple {
        let inst = crate::catalog::catalog(name).unwrap();
        let hs = &inst.structure;
        let g = match seed {
            Some(s) => QuatHermMetric::random(&mut Rng::seeded(s), hs, 3).unwrap(),
            None => QuatHermMetric::identity(hs).unwrap(),
        };
        let pairing = HermitianPairing::new(&g, hs.complex(), Domain::ZeroP).unwrap();
        let omega = omega_from_metric(&g, hs).unwrap();
        lefschetz_triple(&omega, &pairing, hs).unwrap()
    }

    #[test]
    fn sign_is_global() {
        let mut signs = Vec::new();
        for name in crate::catalog::CATALOG_NAMES {
            for seed in [None, Some(5)] {
                let t = triple_for(name, seed);
                assert!(t.certificate.holds(), "{name}: {:?}", t.certificate);
                signs.push(t.certificate.epsilon.unwrap());
            }
        }
        assert!(signs.windows(2).all(|w| w[0] == w[1]), "{signs:?}");
    }

    #[test]
    fn mismatched_pairing_is_rejected() {
        let inst = crate::catalog::catalog("abelian_h1").unwrap();
        let hs = &inst.structure;
        let g = QuatHermMetric::identity(hs).unwrap();
        let pairing = HermitianPairing::new(&g, hs.complex(), Domain::ZeroP).unwrap();
        let omega = omega_from_metric(&g, hs).unwrap().scale(&Scalar::from_int(2));
        assert!(matches!(lefschetz_triple(&omega, &pairing, hs), Err(Error::PairingMismatch)));
    }
}
