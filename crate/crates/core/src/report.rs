//! Verification pipeline: runs check suites on an instance in dependency
//! order and collects per-check records with exact witnesses.

use std::fmt;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;
use crate::exact::{Matrix, Scalar};
use crate::hkt::{
    canonical_section, hkt_check, is_j_real, j_positivity, metric_from_omega, omega_from_metric, omega_power_section,
    proportionality, theta_closed_and_holomorphic, triangular_basis_search, QuatHermMetric, TwoZeroForm,
};
use crate::instance::Instance;
use crate::lefschetz::{
    bicomplex_check, del_bar_j, dolbeault_split, laplacian_experiment, lefschetz_triple, twisted_del_bar, Domain,
    HermitianPairing, Twist,
};
use crate::lie::{is_nilpotent, lower_central_series, InvariantForm};
use crate::obata::{
    canonical_connection_form, curvature, holonomy_algebra, holonomy_in_sl_check, obata_solve,
    CanonicalConnectionForm, Connection,
};
use crate::quat::{check_quaternion_relations, is_abelian_hypercomplex, nijenhuis, one_zero_bracket_check};
use crate::random::Rng;

/// Number of seeded random metrics tried by the HKT suite.
pub const RANDOM_METRICS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Structure,
    Hkt,
    Canonical,
    Obata,
    Holonomy,
    Lefschetz,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Structure, Suite::Hkt, Suite::Canonical, Suite::Obata, Suite::Holonomy, Suite::Lefschetz];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Structure => "structure",
            Suite::Hkt => "hkt",
            Suite::Canonical => "canonical",
            Suite::Obata => "obata",
            Suite::Holonomy => "holonomy",
            Suite::Lefschetz => "lefschetz",
        }
    }

    fn prerequisites(self) -> &'static [Suite] {
        match self {
            Suite::Structure => &[],
            Suite::Hkt | Suite::Canonical | Suite::Obata => &[Suite::Structure],
            Suite::Holonomy => &[Suite::Structure, Suite::Obata],
            Suite::Lefschetz => &[Suite::Structure, Suite::Hkt, Suite::Obata],
        }
    }

    /// `requested` plus prerequisites, in dependency order.
    pub fn closure(requested: &[Suite]) -> Vec<Suite> {
        let mut out: Vec<Suite> = requested.iter().flat_map(|s| s.prerequisites().iter().copied()).collect();
        out.extend_from_slice(requested);
        out.sort();
        out.dedup();
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Data outside the hypotheses of a claim; never affects the verdict.
    Experiment,
    /// Not run because a prerequisite failed.
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Experiment => "EXPT",
            Status::Skipped => "SKIP",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub suite: Suite,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub witness: Value,
    pub timing_ms: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub hypercomplex: Option<bool>,
    pub abelian: Option<bool>,
    pub hkt: Option<bool>,
    pub theta_closed: Option<bool>,
    pub holonomy_in_sl: Option<bool>,
    pub local_holonomy_dim: Option<usize>,
    pub lefschetz_sign: Option<i64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub instance: String,
    pub dim: usize,
    pub seed: u64,
    pub suites: Vec<Suite>,
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| !matches!(r.status, Status::Fail | Status::Skipped))
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn record(&self, id: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("instance {} (dim {}), seed {}\n", self.instance, self.dim, self.seed);
        for r in &self.records {
            out.push_str(&format!("{}  {:<34} {}\n", r.status, r.id, r.detail));
        }
        let s = &self.summary;
        let show = |b: Option<bool>| b.map_or("-".to_string(), |b| if b { "yes" } else { "no" }.to_string());
        out.push_str(&format!(
            "summary: hypercomplex {}, abelian {}, HKT {}, dTheta=0 {}, hol in sl(n,H) {}, local holonomy dim {}, sl(2) sign {}\n",
            show(s.hypercomplex),
            show(s.abelian),
            show(s.hkt),
            show(s.theta_closed),
            show(s.holonomy_in_sl),
            s.local_holonomy_dim.map_or("-".into(), |d| d.to_string()),
            s.lefschetz_sign.map_or("-".into(), |e| e.to_string()),
        ));
        out.push_str(if self.passed() { "verdict: PASS\n" } else { "verdict: FAIL\n" });
        out
    }
}

fn scalar(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

fn vector(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar).collect())
}

fn matrix(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|r| vector(m.row(r))).collect())
}

fn form(f: &InvariantForm) -> Value {
    Value::String(f.to_string())
}

fn block(b: Option<(usize, usize)>) -> Value {
    b.map_or(Value::Null, |(p, q)| json!([p, q]))
}

/// Status of a claim whose hypotheses may not hold on this instance.
fn claim(applicable: bool, ok: bool) -> Status {
    match (applicable, ok) {
        (false, _) => Status::Experiment,
        (true, true) => Status::Pass,
        (true, false) => Status::Fail,
    }
}

fn verdict(ok: bool) -> Status {
    claim(true, ok)
}

struct Runner<'a> {
    inst: &'a Instance,
    seed: u64,
    records: Vec<CheckRecord>,
    summary: Summary,
    suite: Suite,
    clock: Instant,
    hypercomplex: bool,
    abelian: bool,
    nilpotent: bool,
    metric: Option<QuatHermMetric>,
    omega: Option<TwoZeroForm>,
    connection: Option<Connection>,
    canonical: Option<CanonicalConnectionForm>,
}

impl<'a> Runner<'a> {
    fn push(&mut self, id: &str, status: Status, detail: impl Into<String>, witness: Value) {
        let timing_ms = self.clock.elapsed().as_millis() as u64;
        self.records.push(CheckRecord {
            id: format!("{}.{id}", self.suite.name()),
            suite: self.suite,
            status,
            detail: detail.into(),
            witness,
            timing_ms,
        });
        self.clock = Instant::now();
    }

    fn error(&mut self, id: &str, e: crate::Error) {
        self.push(id, Status::Fail, e.to_string(), Value::Null);
    }

    fn skip(&mut self, reason: &str) {
        self.push("prerequisites", Status::Skipped, reason.to_string(), Value::Null);
    }

    fn structure(&mut self) {
        let (l, hs) = (&self.inst.algebra, &self.inst.structure);
        let jacobi = l.jacobi_check();
        match jacobi {
            None => self.push("jacobi", Status::Pass, "Jacobi identity holds", Value::Null),
            Some(t) => self.push(
                "jacobi",
                Status::Fail,
                format!("fails on (g{}, g{}, g{})", t[0] + 1, t[1] + 1, t[2] + 1),
                json!({ "triple": [t[0] + 1, t[1] + 1, t[2] + 1] }),
            ),
        }
        match check_quaternion_relations(hs.i(), hs.j(), hs.k()) {
            Ok(None) => self.push("quaternion_relations", Status::Pass, "I^2 = J^2 = K^2 = IJK = -1", Value::Null),
            Ok(Some(rel)) => self.push("quaternion_relations", Status::Fail, format!("{rel} fails"), Value::Null),
            Err(e) => self.error("quaternion_relations", e),
        }
        let mut integrable = true;
        for (name, a) in hs.ops() {
            let id = format!("integrable.{name}");
            match nijenhuis(l, a) {
                Ok(rep) => match rep.witness() {
                    None => self.push(&id, Status::Pass, "Nijenhuis tensor vanishes", Value::Null),
                    Some(((i, j), v)) => {
                        integrable = false;
                        let w = json!({ "pair": [i + 1, j + 1], "value": vector(v) });
                        self.push(&id, Status::Fail, format!("N(g{}, g{}) != 0", i + 1, j + 1), w);
                    }
                },
                Err(e) => {
                    integrable = false;
                    self.error(&id, e);
                }
            }
        }
        self.hypercomplex = jacobi.is_none() && integrable;
        self.summary.hypercomplex = Some(self.hypercomplex);
        if jacobi.is_some() {
            return;
        }
        match is_abelian_hypercomplex(l, hs) {
            None => {
                self.abelian = true;
                self.push("abelian", Status::Pass, "[Ax, Ay] = [x, y] for A = I, J, K", Value::Null);
            }
            Some((op, i, j)) => self.push(
                "abelian",
                Status::Fail,
                format!("[{op}g{}, {op}g{}] != [g{}, g{}]", i + 1, j + 1, i + 1, j + 1),
                json!({ "operator": op, "pair": [i + 1, j + 1] }),
            ),
        }
        self.summary.abelian = Some(self.abelian);
        match one_zero_bracket_check(l, hs.complex()) {
            None => self.push("one_zero_brackets", claim(self.abelian, true), "[h_a, h_b] = 0 on the (1,0)-frame", Value::Null),
            Some((a, b, v)) => self.push(
                "one_zero_brackets",
                claim(self.abelian, false),
                format!("[h{}, h{}] != 0", a + 1, b + 1),
                json!({ "pair": [a + 1, b + 1], "value": vector(&v) }),
            ),
        }
        self.nilpotent = is_nilpotent(l);
        let dims = lower_central_series(l).dims();
        self.push(
            "nilpotent",
            Status::Experiment,
            format!("nilpotent: {}, lower central series dims {dims:?}", self.nilpotent),
            json!({ "lower_central_series": dims }),
        );
    }

    fn hkt(&mut self) {
        if !self.hypercomplex {
            return self.skip("structure is not hypercomplex");
        }
        let (l, hs) = (&self.inst.algebra, &self.inst.structure);
        let metric = match (&self.inst.metric, &self.inst.omega) {
            (Some(g), _) => Ok(g.clone()),
            (None, Some(om)) => metric_from_omega(om, hs),
            (None, None) => QuatHermMetric::identity(hs),
        };
        let metric = match metric {
            Ok(g) => g,
            Err(e) => return self.error("metric", e),
        };
        let omega = match omega_from_metric(&metric, hs) {
            Ok(om) => om,
            Err(e) => return self.error("omega_from_metric", e),
        };
        match metric_from_omega(&omega, hs) {
            Ok(back) if back == metric => self.push("round_trip", Status::Pass, "g -> Omega -> g is the identity", Value::Null),
            Ok(back) => self.push("round_trip", Status::Fail, "g -> Omega -> g differs", json!({ "metric": matrix(back.gram()) })),
            Err(e) => self.error("round_trip", e),
        }
        if let Some(given) = &self.inst.omega {
            let ok = *given == omega;
            self.push("omega_matches_metric", verdict(ok), format!("given Omega matches the metric: {ok}"), Value::Null);
        }
        match is_j_real(&omega, hs) {
            Ok(None) => self.push("j_real", Status::Pass, "J(bar Omega) = Omega", Value::Null),
            Ok(Some((m, c))) => self.push("j_real", Status::Fail, "J(bar Omega) != Omega", json!({ "monomial": m, "difference": scalar(&c) })),
            Err(e) => self.error("j_real", e),
        }
        let pos = j_positivity(&omega, hs);
        let w = if pos.is_positive() { Value::Null } else { json!({ "matrix": matrix(&pos.matrix), "failing_minor": pos.failing_minor() }) };
        self.push("j_positive", verdict(pos.is_positive()), "Omega(x, J bar x) is positive definite", w);
        match hkt_check(l, hs, &omega) {
            Ok(rep) => {
                self.summary.hkt = Some(rep.is_hkt());
                let w = if rep.is_hkt() { Value::Null } else { json!({ "del_omega": form(&rep.del_omega) }) };
                self.push("del_omega", claim(self.abelian, rep.is_hkt()), format!("del Omega = 0: {}", rep.is_hkt()), w);
            }
            Err(e) => return self.error("del_omega", e),
        }
        let mut rng = Rng::seeded(self.seed);
        let mut first_bad = None;
        for t in 0..RANDOM_METRICS {
            let r = QuatHermMetric::random(&mut rng, hs, 3)
                .and_then(|g| omega_from_metric(&g, hs))
                .and_then(|om| hkt_check(l, hs, &om));
            match r {
                Ok(rep) if rep.is_hkt() => {}
                Ok(rep) => {
                    first_bad.get_or_insert((t, rep.del_omega));
                }
                Err(e) => return self.error("random_metrics", e),
            }
        }
        match first_bad {
            None => self.push(
                "random_metrics",
                claim(self.abelian, true),
                format!("{RANDOM_METRICS} random metrics: del Omega = 0"),
                Value::Null,
            ),
            Some((t, d)) => self.push(
                "random_metrics",
                claim(self.abelian, false),
                format!("random metric #{t} has del Omega != 0"),
                json!({ "index": t, "del_omega": form(&d) }),
            ),
        }
        self.metric = Some(metric);
        self.omega = Some(omega);
    }

    fn canonical(&mut self) {
        if !self.hypercomplex {
            return self.skip("structure is not hypercomplex");
        }
        let (l, hs) = (&self.inst.algebra, &self.inst.structure);
        let applicable = self.abelian && self.nilpotent;
        match theta_closed_and_holomorphic(l, hs.complex()) {
            Ok(rep) => {
                self.summary.theta_closed = Some(rep.closed());
                let w = |f: &InvariantForm| if f.is_zero() { Value::Null } else { json!({ "form": form(f) }) };
                self.push("theta_closed", claim(applicable, rep.closed()), format!("d Theta = 0: {}", rep.closed()), w(&rep.d_theta));
                self.push(
                    "theta_holomorphic",
                    claim(applicable, rep.holomorphic()),
                    format!("del_bar Theta = 0: {}", rep.holomorphic()),
                    w(&rep.del_bar_theta),
                );
            }
            Err(e) => return self.error("theta_closed", e),
        }
        let omega = match &self.omega {
            Some(om) => Ok(om.clone()),
            None => QuatHermMetric::identity(hs).and_then(|g| omega_from_metric(&g, hs)),
        };
        let power = omega.and_then(|om| omega_power_section(&om, hs));
        match (power, canonical_section(l, hs.complex())) {
            (Ok(p), Ok(theta)) => match proportionality(&p.theta, &theta.theta) {
                Some(c) if !c.is_zero() => self.push("omega_power", Status::Pass, format!("Omega^n = ({c}) Theta"), Value::Null),
                _ => self.push("omega_power", Status::Fail, "Omega^n is not a nonzero multiple of Theta", json!({ "omega_power": form(&p.theta) })),
            },
            (Err(e), _) | (_, Err(e)) => return self.error("omega_power", e),
        }
        match triangular_basis_search(l, hs.complex()) {
            Ok(rep) => {
                let w = rep.basis.as_ref().map_or(Value::Null, matrix);
                self.push("triangular_basis", claim(applicable, rep.found()), rep.message.clone(), w);
            }
            Err(e) => self.error("triangular_basis", e),
        }
    }

    fn obata(&mut self) {
        if !self.hypercomplex {
            return self.skip("structure is not hypercomplex");
        }
        let (l, hs) = (&self.inst.algebra, &self.inst.structure);
        let c = match obata_solve(l, hs) {
            Ok(c) => c,
            Err(e) => return self.error("solve", e),
        };
        self.push("solve", Status::Pass, "unique torsion-free connection with nabla I = nabla J = nabla K = 0", Value::Null);
        match c.torsion_violation(l) {
            None => self.push("torsion_free", Status::Pass, "T = 0 on all basis pairs", Value::Null),
            Some((i, j, t)) => self.push("torsion_free", Status::Fail, "torsion", json!({ "pair": [i + 1, j + 1], "value": vector(&t) })),
        }
        match c.parallel_violation(hs) {
            None => self.push("parallel", Status::Pass, "every Gamma_x commutes with I, J, K", Value::Null),
            Some((name, i)) => self.push("parallel", Status::Fail, format!("Gamma_{} does not commute with {name}", i + 1), json!({ "gamma": matrix(c.gamma(i)) })),
        }
        if l.is_abelian() {
            self.push("abelian_algebra", verdict(c.is_zero()), format!("Gamma = 0: {}", c.is_zero()), Value::Null);
        }
        self.connection = Some(c);
    }

    fn holonomy(&mut self) {
        let Some(c) = self.connection.clone() else {
            return self.skip("no Obata connection");
        };
        let (l, hs) = (&self.inst.algebra, &self.inst.structure);
        let applicable = self.abelian && self.nilpotent;
        match curvature(&c, l, Some(hs)) {
            Ok(curv) => {
                let w = curv.witness().map_or(Value::Null, |((i, j), r)| json!({ "pair": [i + 1, j + 1], "value": matrix(r) }));
                self.push("flat", claim(applicable, curv.is_flat()), format!("R = 0: {}", curv.is_flat()), w);
            }
            Err(e) => return self.error("flat", e),
        }
        let hol = match holonomy_algebra(&c, l, hs) {
            Ok(h) => h,
            Err(e) => return self.error("algebra", e),
        };
        self.summary.local_holonomy_dim = Some(hol.dim());
        self.push("algebra", Status::Experiment, format!("local holonomy algebra has dimension {}", hol.dim()), Value::Null);
        match canonical_connection_form(&c, l, hs) {
            Ok(f) => {
                let w = if f.parallel() { Value::Null } else { json!({ "alpha": form(&f.alpha) }) };
                self.push("canonical_parallel", claim(applicable, f.parallel()), format!("alpha = 0: {}", f.parallel()), w);
                self.canonical = Some(f);
            }
            Err(e) => return self.error("canonical_parallel", e),
        }
        match holonomy_in_sl_check(&hol.basis, hs) {
            Ok(cert) => {
                self.summary.holonomy_in_sl = Some(cert.holds());
                let w = cert.offending.map_or(Value::Null, |t| {
                    json!({ "generator": matrix(&hol.basis[t]), "complex_trace": scalar(&cert.complex_traces[t]) })
                });
                self.push("in_sl_n_h", claim(applicable, cert.holds()), format!("{} generators checked", hol.dim()), w);
            }
            Err(e) => self.error("in_sl_n_h", e),
        }
    }

    fn lefschetz(&mut self) {
        let (Some(metric), Some(omega)) = (self.metric.clone(), self.omega.clone()) else {
            return self.skip("no HKT metric");
        };
        if self.connection.is_none() {
            return self.skip("no Obata connection");
        }
        let (l, hs) = (&self.inst.algebra, &self.inst.structure);
        let split = match dolbeault_split(l, hs.complex()) {
            Ok(s) => s,
            Err(e) => return self.error("dolbeault", e),
        };
        match split.identities_violation() {
            None => self.push("dolbeault", Status::Pass, "d = del + del_bar, del^2 = del_bar^2 = {del, del_bar} = 0", Value::Null),
            Some((name, b)) => self.push("dolbeault", Status::Fail, format!("{name} != 0"), json!({ "block": block(Some(b)) })),
        }
        let twist = match &self.canonical {
            Some(f) => Twist::from_connection(f),
            None => match canonical_connection_form(self.connection.as_ref().expect("checked"), l, hs) {
                Ok(f) => Twist::from_connection(&f),
                Err(e) => return self.error("twist", e),
            },
        };
        self.push(
            "twist",
            Status::Experiment,
            if twist.is_trivial() { "alpha = 0: the K^{1/2} twist is trivial" } else { "K^{1/2} twist by alpha/2 included" },
            Value::Null,
        );
        let ops = twisted_del_bar(&split, &twist).and_then(|d| Ok((d, del_bar_j(&split, hs, &twist)?)));
        let (dbar, dbar_j) = match ops {
            Ok(x) => x,
            Err(e) => return self.error("bicomplex", e),
        };
        let bi = bicomplex_check(&dbar, &dbar_j);
        let w = json!({
            "del_bar_squared": block(bi.del_bar_squared),
            "del_bar_j_squared": block(bi.del_bar_j_squared),
            "anticommutator": block(bi.anticommutator),
        });
        self.push("bicomplex", verdict(bi.holds()), "on every Lambda^{p,q}", if bi.holds() { Value::Null } else { w });
        let pairing = match HermitianPairing::new(&metric, hs.complex(), Domain::ZeroP) {
            Ok(p) => p,
            Err(e) => return self.error("sl2", e),
        };
        let triple = match lefschetz_triple(&omega, &pairing, hs) {
            Ok(t) => t,
            Err(e) => return self.error("sl2", e),
        };
        let cert = &triple.certificate;
        self.summary.lefschetz_sign = cert.epsilon;
        let w = json!({
            "h_l": block(cert.h_l),
            "h_lambda": block(cert.h_lambda),
            "l_lambda": block(cert.l_lambda),
        });
        self.push(
            "sl2",
            verdict(cert.holds()),
            format!(
                "[H,L] = -2L, [H,Lambda] = 2 Lambda, [L,Lambda] = eps H with eps = {}",
                cert.epsilon.map_or("undetermined".to_string(), |e| e.to_string())
            ),
            if cert.holds() { Value::Null } else { w },
        );
        match laplacian_experiment(&dbar, &dbar_j, &pairing, &triple) {
            Ok(rep) => {
                let degrees: Vec<Value> = rep
                    .degrees
                    .iter()
                    .map(|d| json!({ "q": d.q, "dim": d.dim, "ker_laplacian": d.ker_laplacian, "closed": d.closed, "cohomology": d.cohomology }))
                    .collect();
                let w = json!({
                    "mismatch": block(rep.mismatch),
                    "l_commutator": block(rep.l_commutator),
                    "lambda_commutator": block(rep.lambda_commutator),
                    "self_adjoint": rep.self_adjoint,
                    "degrees": degrees,
                });
                self.push(
                    "laplacian",
                    Status::Experiment,
                    format!(
                        "invariant-subcomplex experiment: Delta = Delta_J {}, commutes with L, Lambda {}, zero {}",
                        rep.equal(),
                        rep.commutes(),
                        rep.zero()
                    ),
                    w,
                );
            }
            Err(e) => self.error("laplacian", e),
        }
    }
}

/// Runs `suites` (with prerequisites) on `inst`; randomized checks use `seed`.
pub fn run_report(inst: &Instance, suites: &[Suite], seed: u64) -> VerificationReport {
    let order = Suite::closure(suites);
    let mut r = Runner {
        inst,
        seed,
        records: Vec::new(),
        summary: Summary::default(),
        suite: Suite::Structure,
        clock: Instant::now(),
        hypercomplex: false,
        abelian: false,
        nilpotent: false,
        metric: None,
        omega: None,
        connection: None,
        canonical: None,
    };
    for &s in &order {
        r.suite = s;
        r.clock = Instant::now();
        match s {
            Suite::Structure => r.structure(),
            Suite::Hkt => r.hkt(),
            Suite::Canonical => r.canonical(),
            Suite::Obata => r.obata(),
            Suite::Holonomy => r.holonomy(),
            Suite::Lefschetz => r.lefschetz(),
        }
    }
    VerificationReport {
        instance: inst.name.clone(),
        dim: inst.algebra.dim(),
        seed,
        suites: order,
        records: r.records,
        summary: r.summary,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn closure_adds_prerequisites_in_order() {
        assert_eq!(Suite::closure(&[Suite::Holonomy]), vec![Suite::Structure, Suite::Obata, Suite::Holonomy]);
        assert_eq!(Suite::closure(&Suite::ALL), Suite::ALL.to_vec());
    }

    #[test]
    fn abelian_h2_passes_everything() {
        let rep = run_report(&catalog("abelian_h2").unwrap(), &Suite::ALL, 0);
        assert!(rep.passed(), "{}", rep.to_text());
        assert_eq!(rep.summary.local_holonomy_dim, Some(0));
        assert_eq!(rep.summary.abelian, Some(true));
    }

    #[test]
    fn jacobi_failure_skips_downstream() {
        use crate::lie::{Bracket, LieAlgebra};
        let mut inst = catalog("abelian_h1").unwrap();
        let r = |a| crate::exact::rat(a, 1);
        inst.algebra = LieAlgebra::new_unchecked(
            4,
            &[Bracket::new(0, 1, vec![(2, r(1))]), Bracket::new(1, 2, vec![(0, r(1))]), Bracket::new(0, 2, vec![(0, r(1))])],
        )
        .unwrap();
        assert!(inst.algebra.jacobi_check().is_some());
        let rep = run_report(&inst, &[Suite::Holonomy], 0);
        assert!(!rep.passed());
        assert_eq!(rep.record("structure.jacobi").unwrap().status, Status::Fail);
        assert_eq!(rep.record("obata.prerequisites").unwrap().status, Status::Skipped);
        assert_eq!(rep.record("holonomy.prerequisites").unwrap().status, Status::Skipped);
    }

    #[test]
    fn reports_are_deterministic() {
        let inst = crate::controls::u2_plus_u2();
        let a = run_report(&inst, &[Suite::Hkt], 3);
        let b = run_report(&inst, &[Suite::Hkt], 3);
        let strip = |r: &VerificationReport| r.records.iter().map(|c| (c.id.clone(), c.status, c.witness.clone())).collect::<Vec<_>>();
        assert_eq!(strip(&a), strip(&b));
        assert_eq!(a.record("hkt.random_metrics").unwrap().status, Status::Experiment);
    }
}
