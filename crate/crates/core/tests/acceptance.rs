//! Acceptance suite: one line per criterion. All comparisons are exact
//! (tolerance 0) over Q(i).

use std::process::ExitCode;
use std::time::Instant;

use hypercomplex::catalog::{self, catalog};
use hypercomplex::controls::{hyperbolic, random_abelian_complex, u2_plus_u2};
use hypercomplex::exact::{Matrix, Scalar};
use hypercomplex::hkt::{
    hkt_check, is_j_real, j_positivity, metric_from_omega, omega_from_metric, theta_closed_and_holomorphic,
    QuatHermMetric,
};
use hypercomplex::instance::Instance;
use hypercomplex::lefschetz::{
    bicomplex_check, del_bar_j, dolbeault_split, j_perturbation_search, laplacian_experiment, lefschetz_triple,
    twisted_del_bar, Domain, HermitianPairing, Twist,
};
use hypercomplex::lie::{unit, LieAlgebra};
use hypercomplex::obata::{
    canonical_connection_form, curvature, holonomy_algebra, holonomy_in_sl_check, obata_solve, Connection,
};
use hypercomplex::quat::{nijenhuis, one_zero_bracket_check, quat_det, ComplexStructure, HypercomplexStructure};
use hypercomplex::random::{random_quaternion_linear, Rng};

const SEED: u64 = 0;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

type Check = fn() -> Result<Outcome, hypercomplex::Error>;

fn abelian_catalog() -> Vec<Instance> {
    catalog::all()
}

/// Random abelian complex structures for criteria 1 and 2.
fn random_structures() -> Vec<(LieAlgebra, Matrix)> {
    let shapes = [(1, 1), (2, 1), (1, 2), (3, 1), (2, 2)];
    let mut rng = Rng::seeded(SEED);
    (0..25).map(|t| random_abelian_complex(&mut rng, shapes[t % 5].0, shapes[t % 5].1)).collect()
}

fn c1_integrability() -> Result<Outcome, hypercomplex::Error> {
    let start = Instant::now();
    let mut bad = Vec::new();
    for inst in abelian_catalog() {
        for (name, a) in inst.structure.ops() {
            if !nijenhuis(&inst.algebra, a)?.is_integrable() {
                bad.push(format!("{}:{name}", inst.name));
            }
        }
    }
    let randoms = random_structures();
    for (t, (l, i)) in randoms.iter().enumerate() {
        if !nijenhuis(l, i)?.is_integrable() {
            bad.push(format!("random#{t}"));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    Ok(outcome(
        bad.is_empty() && secs < 10.0,
        format!("3 catalog entries x (I,J,K) + 25 random (dims 4..8): N == 0; failures {bad:?}; {secs:.2}s (target < 10s)"),
    ))
}

fn c2_one_zero_brackets() -> Result<Outcome, hypercomplex::Error> {
    let mut bad = Vec::new();
    for inst in abelian_catalog() {
        if let Some((a, b, _)) = one_zero_bracket_check(&inst.algebra, inst.structure.complex()) {
            bad.push(format!("{}: [h{}, h{}]", inst.name, a + 1, b + 1));
        }
    }
    for (t, (l, i)) in random_structures().into_iter().enumerate() {
        if let Some((a, b, _)) = one_zero_bracket_check(&l, &ComplexStructure::new(i)?) {
            bad.push(format!("random#{t}: [h{}, h{}]", a + 1, b + 1));
        }
    }
    Ok(outcome(bad.is_empty(), format!("[h_a, h_b] == 0 on all (1,0) pairs of 28 structures; failures {bad:?}")))
}

fn c3_metric_bijection() -> Result<Outcome, hypercomplex::Error> {
    let mut rng = Rng::seeded(SEED);
    let mut count = 0;
    let mut bad = Vec::new();
    for inst in abelian_catalog() {
        let hs = &inst.structure;
        for t in 0..20 {
            let g = QuatHermMetric::random(&mut rng, hs, 4)?;
            let omega = omega_from_metric(&g, hs)?;
            let back = metric_from_omega(&omega, hs)?;
            let again = omega_from_metric(&back, hs)?;
            let ok = back == g && again == omega && is_j_real(&omega, hs)?.is_none() && j_positivity(&omega, hs).is_positive();
            if !ok {
                bad.push(format!("{}#{t}", inst.name));
            }
            count += 1;
        }
    }
    Ok(outcome(bad.is_empty(), format!("{count} round trips g -> Omega -> g -> Omega exact, Omega J-real and J-positive; failures {bad:?}")))
}

fn c4_hkt_existence() -> Result<Outcome, hypercomplex::Error> {
    let mut rng = Rng::seeded(SEED);
    let mut bad = Vec::new();
    for inst in abelian_catalog() {
        let hs = &inst.structure;
        for t in 0..20 {
            let omega = omega_from_metric(&QuatHermMetric::random(&mut rng, hs, 4)?, hs)?;
            let valid = is_j_real(&omega, hs)?.is_none() && j_positivity(&omega, hs).is_positive();
            if !valid || !hkt_check(&inst.algebra, hs, &omega)?.is_hkt() {
                bad.push(format!("{}#{t}", inst.name));
            }
        }
    }
    // control: a non-abelian hypercomplex algebra with a non-HKT metric
    let ctrl = u2_plus_u2();
    let g = QuatHermMetric::random(&mut Rng::seeded(SEED), &ctrl.structure, 3)?;
    let control = !hkt_check(&ctrl.algebra, &ctrl.structure, &omega_from_metric(&g, &ctrl.structure)?)?.is_hkt();
    Ok(outcome(
        bad.is_empty() && control,
        format!("60 random J-real J-positive Omega: del Omega == 0, failures {bad:?}; control u(2)+u(2) del Omega != 0: {control}"),
    ))
}

fn c5_canonical_section() -> Result<Outcome, hypercomplex::Error> {
    let mut bad = Vec::new();
    for inst in abelian_catalog() {
        let r = theta_closed_and_holomorphic(&inst.algebra, inst.structure.complex())?;
        if !r.closed() || !r.holomorphic() {
            bad.push(inst.name.clone());
        }
    }
    let ctrl = hyperbolic();
    let r = theta_closed_and_holomorphic(&ctrl.algebra, ctrl.structure.complex())?;
    let control = !r.closed();
    Ok(outcome(
        bad.is_empty() && control,
        format!("d Theta == 0 and del_bar Theta == 0 on catalog, failures {bad:?}; control R x R^3: d Theta = {}", r.d_theta),
    ))
}

/// Torsion and commutation with I, J, K recomputed from scratch.
fn independent_obata_check(c: &Connection, l: &LieAlgebra, hs: &HypercomplexStructure) -> bool {
    let n = l.dim();
    for i in 0..n {
        let gi = c.gamma(i);
        if hs.ops().iter().any(|(_, a)| gi.mul(a) != a.mul(gi)) {
            return false;
        }
        for j in 0..n {
            let lhs: Vec<Scalar> = gi
                .mul_vec(&unit(n, j))
                .iter()
                .zip(c.gamma(j).mul_vec(&unit(n, i)))
                .map(|(a, b)| a - &b)
                .collect();
            if lhs != l.bracket(&unit(n, i), &unit(n, j)) {
                return false;
            }
        }
    }
    true
}

fn c6_obata() -> Result<Outcome, hypercomplex::Error> {
    let mut notes = Vec::new();
    let mut ok = true;
    for inst in abelian_catalog() {
        let c = obata_solve(&inst.algebra, &inst.structure)?;
        let verified = independent_obata_check(&c, &inst.algebra, &inst.structure);
        let zero_ok = !inst.algebra.is_abelian() || c.is_zero();
        ok &= verified && zero_ok;
        notes.push(format!("{}: unique, verified {verified}, Gamma == 0 {}", inst.name, c.is_zero()));
    }
    Ok(outcome(ok, notes.join("; ")))
}

fn c7_chain() -> Result<Outcome, hypercomplex::Error> {
    let start = Instant::now();
    let mut ok = true;
    let mut notes = Vec::new();
    for inst in abelian_catalog() {
        let (l, hs) = (&inst.algebra, &inst.structure);
        let holomorphic = theta_closed_and_holomorphic(l, hs.complex())?.holomorphic();
        let c = obata_solve(l, hs)?;
        let alpha_zero = canonical_connection_form(&c, l, hs)?.parallel();
        let hol = holonomy_algebra(&c, l, hs)?;
        let in_sl = holonomy_in_sl_check(&hol.basis, hs)?.holds();
        ok &= (!holomorphic || alpha_zero) && holomorphic && in_sl;
        notes.push(format!("{}: del_bar Theta = 0 {holomorphic}, alpha == 0 {alpha_zero}, {} generators in sl {in_sl}", inst.name, hol.dim()));
    }
    let secs = start.elapsed().as_secs_f64();
    ok &= secs < 30.0;
    Ok(outcome(ok, format!("{}; {secs:.2}s (target < 30s)", notes.join("; "))))
}

fn c8_flatness() -> Result<Outcome, hypercomplex::Error> {
    let inst = catalog("qheis_r")?;
    let (l, hs) = (&inst.algebra, &inst.structure);
    let c = obata_solve(l, hs)?;
    let flat = curvature(&c, l, Some(hs))?.is_flat();
    let dim = holonomy_algebra(&c, l, hs)?.dim();
    Ok(outcome(flat && dim == 0, format!("qheis_r: R == 0 {flat}, holonomy algebra dim {dim}")))
}

fn c9_bicomplex() -> Result<Outcome, hypercomplex::Error> {
    let mut bad = Vec::new();
    for inst in abelian_catalog() {
        let (l, hs) = (&inst.algebra, &inst.structure);
        let c = obata_solve(l, hs)?;
        let twist = Twist::from_connection(&canonical_connection_form(&c, l, hs)?);
        let split = dolbeault_split(l, hs.complex())?;
        let report = bicomplex_check(&twisted_del_bar(&split, &twist)?, &del_bar_j(&split, hs, &twist)?);
        if !report.holds() {
            bad.push(format!("{}: {report:?}", inst.name));
        }
    }
    let q = catalog("qheis_r")?;
    let control = j_perturbation_search(&q.algebra, &q.structure, SEED, 20)?;
    let control_note = match &control {
        Some(w) => format!("J -> RJR^-1 breaks it after {} tries, anticommutator block {:?}", w.attempts, w.report.anticommutator),
        None => "no perturbation found".to_string(),
    };
    let control_ok = control.is_some_and(|w| w.report.anticommutator.is_some());
    Ok(outcome(
        bad.is_empty() && control_ok,
        format!("del_bar^2 == del_bar_J^2 == {{del_bar, del_bar_J}} == 0 on all Lambda^(p,q), failures {bad:?}; control: {control_note}"),
    ))
}

fn c10_sl2() -> Result<Outcome, hypercomplex::Error> {
    let mut rng = Rng::seeded(SEED);
    let mut signs = Vec::new();
    let mut ok = true;
    for inst in abelian_catalog() {
        let hs = &inst.structure;
        for g in [QuatHermMetric::identity(hs)?, QuatHermMetric::random(&mut rng, hs, 3)?] {
            let pairing = HermitianPairing::new(&g, hs.complex(), Domain::ZeroP)?;
            let t = lefschetz_triple(&omega_from_metric(&g, hs)?, &pairing, hs)?;
            ok &= t.certificate.holds();
            signs.push(t.certificate.epsilon);
        }
    }
    let single = signs.windows(2).all(|w| w[0] == w[1]) && signs[0].is_some();
    Ok(outcome(
        ok && single,
        format!("n = 1, 2; identity and random metrics: [H,L] == -2L, [H,Lambda] == 2 Lambda, [L,Lambda] == eps H; eps per run {signs:?}"),
    ))
}

fn c11_laplacian() -> Result<Outcome, hypercomplex::Error> {
    let mut notes = Vec::new();
    let mut computed = true;
    let mut instances = abelian_catalog();
    instances.push(u2_plus_u2());
    for inst in instances {
        let (l, hs) = (&inst.algebra, &inst.structure);
        let g = QuatHermMetric::identity(hs)?;
        let omega = omega_from_metric(&g, hs)?;
        if !hkt_check(l, hs, &omega)?.is_hkt() {
            notes.push(format!("{}: not HKT, skipped", inst.name));
            continue;
        }
        let c = obata_solve(l, hs)?;
        let twist = Twist::from_connection(&canonical_connection_form(&c, l, hs)?);
        let split = dolbeault_split(l, hs.complex())?;
        let pairing = HermitianPairing::new(&g, hs.complex(), Domain::ZeroP)?;
        let triple = lefschetz_triple(&omega, &pairing, hs)?;
        let rep = laplacian_experiment(&twisted_del_bar(&split, &twist)?, &del_bar_j(&split, hs, &twist)?, &pairing, &triple)?;
        computed &= rep.self_adjoint;
        let kers: Vec<usize> = rep.degrees.iter().map(|d| d.ker_laplacian).collect();
        let coh: Vec<usize> = rep.degrees.iter().map(|d| d.cohomology).collect();
        notes.push(format!(
            "{} (twist trivial {}): Delta == Delta_J {}, [L,Delta] == [Lambda,Delta] == 0 {}, ker {kers:?}, H^(0,q) {coh:?}",
            inst.name,
            twist.is_trivial(),
            rep.equal(),
            rep.commutes()
        ));
    }
    Ok(outcome(computed, format!("invariant-subcomplex experiment: {}", notes.join("; "))))
}

fn c12_determinant() -> Result<Outcome, hypercomplex::Error> {
    let mut rng = Rng::seeded(SEED);
    let mut ok = true;
    for n in 1..=2 {
        let hs = HypercomplexStructure::standard(n);
        let mats: Vec<Matrix> = (0..50).map(|_| random_quaternion_linear(&mut rng, &hs, 3)).collect();
        let dets = mats.iter().map(|m| quat_det(m, &hs)).collect::<Result<Vec<_>, _>>()?;
        ok &= dets.iter().all(|d| d.is_real() && d.is_positive_real());
        for t in 0..50 {
            let s = (t + 1) % 50;
            ok &= quat_det(&mats[t].mul(&mats[s]), &hs)? == &dets[t] * &dets[s];
        }
    }
    Ok(outcome(ok, "50 random H-linear invertibles per n in {1, 2}: det real, > 0, det(AB) == det(A) det(B)"))
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 12] = [
        ("abelian integrability", c1_integrability),
        ("(1,0)-bracket vanishing", c2_one_zero_brackets),
        ("metric/form bijection", c3_metric_bijection),
        ("HKT existence", c4_hkt_existence),
        ("canonical section", c5_canonical_section),
        ("Obata solver", c6_obata),
        ("holonomy chain", c7_chain),
        ("flatness", c8_flatness),
        ("bicomplex", c9_bicomplex),
        ("sl(2) triple", c10_sl2),
        ("Laplacian experiment", c11_laplacian),
        ("determinant homomorphism", c12_determinant),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (status, detail) = match check() {
            Ok(o) => (if o.ok { "PASS" } else { "FAIL" }, o.detail),
            Err(e) => ("FAIL", format!("error: {e}")),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "{status} C{:<2} {name} [tolerance: exact, 0] ({:.2}s): {detail}",
            k + 1,
            start.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
