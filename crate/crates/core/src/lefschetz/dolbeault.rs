use super::operator::{Domain, FormBasis, OperatorOnForms};
use crate::error::{Error, Result};
use crate::exact::Matrix;
use crate::lie::{generator_name, InvariantForm, LieAlgebra};
use crate::obata::CanonicalConnectionForm;
use crate::quat::{ComplexStructure, HypercomplexStructure};
use crate::random::Rng;

/// `d = del + del_bar` on invariant forms in the (1,0)-coframe of `I`.
#[derive(Debug, Clone)]
pub struct DolbeaultSplit {
    pub basis: FormBasis,
    pub del: OperatorOnForms,
    pub del_bar: OperatorOnForms,
}

impl DolbeaultSplit {
    /// First block where `del^2`, `del_bar^2` or `del del_bar + del_bar del`
    /// fails to vanish.
    pub fn identities_violation(&self) -> Option<(&'static str, (usize, usize))> {
        let checks = [
            ("del^2", self.del.compose(&self.del)),
            ("del_bar^2", self.del_bar.compose(&self.del_bar)),
            ("del del_bar + del_bar del", self.del.anticommutator(&self.del_bar)),
        ];
        checks.into_iter().find_map(|(name, op)| op.first_nonzero_block().map(|b| (name, b)))
    }
}

/// Splits the Chevalley–Eilenberg differential by type. If `I` is not
/// integrable some `d theta` has a `(0,2)`-part (or `d bar theta` a
/// `(2,0)`-part) and the first such generator is reported.
pub fn dolbeault_split(l: &LieAlgebra, cs: &ComplexStructure) -> Result<DolbeaultSplit> {
    let d = cs.differential(l)?;
    let half = cs.half();
    let tag = cs.coframe_tag();
    for c in 0..cs.dim() {
        let bad = if c < half { (0, 2) } else { (2, 0) };
        if !d.of_generator(c).project(bad.0, bad.1).is_zero() {
            return Err(Error::MixedType { generator: generator_name(tag, c), p: bad.0, q: bad.1 });
        }
    }
    let basis = FormBasis::new(half);
    let del = OperatorOnForms::from_fn(&basis, Domain::All, (1, 0), |e| {
        let (p, q) = e.bidegrees()[0];
        Ok(d.apply(e)?.project(p + 1, q))
    })?;
    let del_bar = OperatorOnForms::from_fn(&basis, Domain::All, (0, 1), |e| {
        let (p, q) = e.bidegrees()[0];
        let de = d.apply(e)?;
        let rest = de.sub(&de.project(p + 1, q)).sub(&de.project(p, q + 1));
        if !rest.is_zero() {
            return Err(Error::Internal(format!("d of a ({p},{q})-form has components {:?}", rest.bidegrees())));
        }
        Ok(de.project(p, q + 1))
    })?;
    Ok(DolbeaultSplit { basis, del, del_bar })
}

/// Half of the canonical-bundle connection form, split by type, used to
/// couple operators to the square root of the canonical bundle.
#[derive(Debug, Clone)]
pub struct Twist {
    pub theta_half: InvariantForm,
    pub theta_bar_half: InvariantForm,
}

impl Twist {
    pub fn none(cs: &ComplexStructure) -> Self {
        let z = InvariantForm::zero(cs.coframe_tag(), cs.dim(), 1);
        Twist { theta_half: z.clone(), theta_bar_half: z }
    }

    pub fn from_connection(f: &CanonicalConnectionForm) -> Self {
        let (theta_half, theta_bar_half) = f.half_parts();
        Twist { theta_half, theta_bar_half }
    }

    pub fn is_trivial(&self) -> bool {
        self.theta_half.is_zero() && self.theta_bar_half.is_zero()
    }
}

fn wedge_op(basis: &FormBasis, shift: (isize, isize), a: &InvariantForm) -> Result<OperatorOnForms> {
    OperatorOnForms::from_fn(basis, Domain::All, shift, |e| Ok(a.wedge(e)))
}

/// `del_bar + (bar theta / 2) ^` on `K^{1/2}`-valued forms.
pub fn twisted_del_bar(split: &DolbeaultSplit, twist: &Twist) -> Result<OperatorOnForms> {
    Ok(split.del_bar.add(&wedge_op(&split.basis, (0, 1), &twist.theta_bar_half)?))
}

/// `del + (theta / 2) ^`, the (1,0)-part of the coupled connection.
pub fn twisted_del(split: &DolbeaultSplit, twist: &Twist) -> Result<OperatorOnForms> {
    Ok(split.del.add(&wedge_op(&split.basis, (1, 0), &twist.theta_half)?))
}

/// `J^{-1}` on forms: `J^2 = (-1)^k` on `k`-forms.
fn j_inverse_on_forms(hs: &HypercomplexStructure, eta: &InvariantForm) -> Result<InvariantForm> {
    let je = hs.j_on_forms(eta)?;
    Ok(if eta.degree() % 2 == 1 { je.neg() } else { je })
}

/// `del_bar_J = J^{-1} o (del + theta/2 ^) o J`. On 1-forms `J^{-1} = -J`;
/// `J` maps `(p,q)` to `(q,p)`, so the result raises the `q`-degree.
pub fn del_bar_j(split: &DolbeaultSplit, hs: &HypercomplexStructure, twist: &Twist) -> Result<OperatorOnForms> {
    let del = twisted_del(split, twist)?;
    OperatorOnForms::from_fn(&split.basis, Domain::All, (0, 1), |e| {
        let je = hs.j_on_forms(e)?;
        j_inverse_on_forms(hs, &del.apply(&je))
    })
}

/// Outcome of the bicomplex identities; each entry is the first failing
/// source bidegree, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicomplexReport {
    pub del_bar_squared: Option<(usize, usize)>,
    pub del_bar_j_squared: Option<(usize, usize)>,
    pub anticommutator: Option<(usize, usize)>,
}

impl BicomplexReport {
    pub fn holds(&self) -> bool {
        self.del_bar_squared.is_none() && self.del_bar_j_squared.is_none() && self.anticommutator.is_none()
    }
}

pub fn bicomplex_check(del_bar: &OperatorOnForms, del_bar_j: &OperatorOnForms) -> BicomplexReport {
    BicomplexReport {
        del_bar_squared: del_bar.compose(del_bar).first_nonzero_block(),
        del_bar_j_squared: del_bar_j.compose(del_bar_j).first_nonzero_block(),
        anticommutator: del_bar.anticommutator(del_bar_j).first_nonzero_block(),
    }
}

/// A conjugate `J' = R J R^{-1}` (with `R` commuting with `I`) that breaks
/// the bicomplex identities.
#[derive(Debug, Clone)]
pub struct PerturbationWitness {
    pub r: Matrix,
    pub attempts: usize,
    pub report: BicomplexReport,
}

/// Keeps `I` fixed and replaces `J` by `R J R^{-1}` for random integer `R`
/// commuting with `I`, until the untwisted bicomplex check fails.
pub fn j_perturbation_search(
    l: &LieAlgebra,
    hs: &HypercomplexStructure,
    seed: u64,
    budget: usize,
) -> Result<Option<PerturbationWitness>> {
    let split = dolbeault_split(l, hs.complex())?;
    let twist = Twist::none(hs.complex());
    let i = hs.i();
    let mut rng = Rng::seeded(seed);
    for attempt in 1..=budget {
        let x = rng.int_matrix(hs.dim(), hs.dim(), 2);
        let r = x.sub(&i.mul(&x).mul(i));
        let Some(r_inv) = r.inverse() else { continue };
        let perturbed = hs.with_j(r.mul(hs.j()).mul(&r_inv))?;
        let dj = del_bar_j(&split, &perturbed, &twist)?;
        let report = bicomplex_check(&split.del_bar, &dj);
        if !report.holds() {
            return Ok(Some(PerturbationWitness { r, attempts: attempt, report }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::exact::{rat, Scalar};
    use crate::lie::Bracket;

    #[test]
    fn split_identities_on_catalog() {
        for inst in crate::catalog::all() {
            let split = dolbeault_split(&inst.algebra, inst.structure.complex()).unwrap();
            assert_eq!(split.identities_violation(), None, "{}", inst.name);
            let dj = del_bar_j(&split, &inst.structure, &Twist::none(inst.structure.complex())).unwrap();
            assert!(bicomplex_check(&split.del_bar, &dj).holds(), "{}", inst.name);
        }
    }

    #[test]
    fn minus_j_on_every_degree_commutes_instead() {
        // -J o del o J agrees with del_bar_J only on odd-degree images; on all
        // of Lambda^{p,q} it commutes with del_bar rather than anticommuting
        let inst = catalog("qheis_r").unwrap();
        let hs = &inst.structure;
        let split = dolbeault_split(&inst.algebra, hs.complex()).unwrap();
        let literal = OperatorOnForms::from_fn(&split.basis, Domain::All, (0, 1), |e| {
            let je = hs.j_on_forms(e)?;
            Ok(hs.j_on_forms(&split.del.apply(&je))?.neg())
        })
        .unwrap();
        assert!(split.del_bar.commutator(&literal).is_zero());
        assert!(!split.del_bar.anticommutator(&literal).is_zero());
        let dj = del_bar_j(&split, hs, &Twist::none(hs.complex())).unwrap();
        assert!(split.del_bar.anticommutator(&dj).is_zero());
        assert!(!dj.is_zero());
    }

    #[test]
    fn split_reconstructs_d() {
        let inst = catalog("qheis_r").unwrap();
        let cs = inst.structure.complex();
        let split = dolbeault_split(&inst.algebra, cs).unwrap();
        let d = cs.differential(&inst.algebra).unwrap();
        let b = &split.basis;
        let eta = b.element(1, 0, 2).add(&b.element(0, 1, 0).scale(&Scalar::i()));
        assert_eq!(split.del.apply(&eta).add(&split.del_bar.apply(&eta)), d.apply(&eta).unwrap());
        assert!(!split.del_bar.is_zero());
    }

    #[test]
    fn non_integrable_is_diagnosed() {
        // [g1, g3] = g2 with I g1 = g2, I g3 = g4 gives N(g1, g3) = -g2
        let l = LieAlgebra::new(4, &[Bracket::new(0, 2, vec![(1, rat(1, 1))])]).unwrap();
        let hs = HypercomplexStructure::standard(1);
        assert!(!crate::quat::nijenhuis(&l, hs.i()).unwrap().is_integrable());
        assert!(matches!(dolbeault_split(&l, hs.complex()), Err(Error::MixedType { .. })));
    }

    #[test]
    fn perturbed_j_breaks_the_bicomplex() {
        let inst = catalog("qheis_r").unwrap();
        let w = j_perturbation_search(&inst.algebra, &inst.structure, 0, 20).unwrap().expect("witness");
        assert!(!w.report.holds());
        assert!(w.r.commutes_with(inst.structure.i()));
    }
}
