//! End-to-end runs shared by the command line and the Python bindings:
//! classify, build an envelope, or evaluate a bound, producing a JSON report
//! plus a plain-text summary.

use std::fmt::{self, Write as _};

use serde_json::{json, Value};

use crate::envelope::{
    deficiency_bound_check, envelope_general, envelope_regular, envelope_weighted, scan_c, verify_envelope,
    EnvelopeError,
};
use crate::generators::GenError;
use crate::gf::Field;
use crate::plane::{ProjLine, ProjPoint};
use crate::report;
use crate::szw::{
    build_point_count_pair, construction_directions, dichotomy_check, gcd_profile, point_index_check, renitent_lower_bound_check,
    szw_check_all, SzwError,
};
use crate::uniformity::{check_lambda, classify_all, concurrency_point, Classification, DirectionReport, PointMultiset, UniformityError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailureKind {
    /// Malformed or out-of-range input.
    Input,
    /// The input is well formed but a hypothesis of the construction fails.
    Hypothesis,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub kind: FailureKind,
    pub msg: String,
}

impl Failure {
    pub fn input(msg: impl Into<String>) -> Failure {
        Failure { kind: FailureKind::Input, msg: msg.into() }
    }

    pub fn hypothesis(msg: impl Into<String>) -> Failure {
        Failure { kind: FailureKind::Hypothesis, msg: msg.into() }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.msg)
    }
}

impl std::error::Error for Failure {}

impl From<UniformityError> for Failure {
    fn from(e: UniformityError) -> Failure {
        Failure::input(e.to_string())
    }
}

impl From<EnvelopeError> for Failure {
    fn from(e: EnvelopeError) -> Failure {
        match e {
            EnvelopeError::Uniformity(u) => u.into(),
            EnvelopeError::CZero | EnvelopeError::LambdaTooLarge { .. } => Failure::input(e.to_string()),
            EnvelopeError::TotalSizeDivisibleByP(_) => {
                Failure::hypothesis(format!("{e}: every Λ_d(c) needs |T| invertible mod p, so no choice of c helps"))
            }
            other => Failure::hypothesis(other.to_string()),
        }
    }
}

impl From<SzwError> for Failure {
    fn from(e: SzwError) -> Failure {
        match e {
            SzwError::Uniformity(u) => u.into(),
            other => Failure::hypothesis(other.to_string()),
        }
    }
}

impl From<GenError> for Failure {
    fn from(e: GenError) -> Failure {
        Failure::input(e.to_string())
    }
}

/// A finished run. `pass` is false only when a verification failed.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub summary: String,
    pub pass: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    Regular,
    Weighted,
    General,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CChoice {
    Fixed(u32),
    Scan,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    Deficiency,
    Szw,
    Renitent,
    Dichotomy,
}

/// Accepts a plain order `q` as well as the `p^e[:m=...]` forms.
pub fn parse_field(spec: &str) -> Result<Field, Failure> {
    match spec.trim().parse::<u32>() {
        Ok(q) => Field::with_order(q),
        Err(_) => Field::parse_spec(spec),
    }
    .map_err(|e| Failure::input(format!("field {spec}: {e}")))
}

fn uniform(t: &PointMultiset, lambda: usize) -> Result<(Vec<Classification>, Vec<DirectionReport>), Failure> {
    check_lambda(t.field(), lambda)?;
    let classes = classify_all(t, lambda)?;
    let reports = classes.iter().filter_map(|c| c.report().cloned()).collect();
    Ok((classes, reports))
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn analyze(t: &PointMultiset, lambda: usize) -> Result<Outcome, Failure> {
    let field = t.field();
    let (classes, reports) = uniform(t, lambda)?;
    let lines: Vec<ProjLine> = reports.iter().flat_map(|r| r.renitent.iter().map(|x| x.line)).collect();
    let concurrency = concurrency_point(field, &lines).ok().flatten().map(|p| p.display(field));
    let report = report::analyze_json(field, t.size(), lambda, &classes, concurrency.clone());
    let mut summary = format!(
        "GF({}) |T|={} λ={}: {} of {} directions uniform, {} renitent lines\n",
        field.q(),
        t.size(),
        lambda,
        reports.len(),
        classes.len(),
        lines.len()
    );
    for c in &classes {
        match c {
            Classification::Uniform(r) => {
                let ls: Vec<String> = r.renitent.iter().map(|x| format!("{} (t={})", x.line, x.t)).collect();
                let sharp = if r.sharp { ", sharp" } else { "" };
                let _ = writeln!(summary, "  {}: m={}{} {}", r.direction, r.typical, sharp, ls.join(" "));
            }
            Classification::NotUniform(d) => {
                let _ = writeln!(summary, "  {d}: not uniform");
            }
        }
    }
    if let Some(p) = concurrency {
        let _ = writeln!(summary, "renitent lines concur at {p}");
    }
    Ok(Outcome { report, summary, pass: true })
}

/// The regular envelope is built from the sharp non-vertical directions; the
/// weighted one from every uniform direction; the general one from the
/// non-vertical directions and verified at all of them.
pub fn envelope(t: &PointMultiset, lambda: usize, theorem: Theorem, c: CChoice) -> Result<Outcome, Failure> {
    let field = t.field();
    let (_, reports) = uniform(t, lambda)?;
    let (curve, verification, extra) = match theorem {
        Theorem::Regular => {
            let used: Vec<DirectionReport> =
                construction_directions(&reports).into_iter().filter(|r| r.lambda_d() == lambda).collect();
            let curve = envelope_regular(t, &used)?;
            let v = verify_envelope(&curve, &used, None);
            let dirs: Vec<String> = used.iter().map(|r| r.direction.to_string()).collect();
            (curve, v, json!({ "directions_used": dirs }))
        }
        Theorem::Weighted => {
            let (rows, best) = scan_c(field, &reports)?;
            let c = match c {
                CChoice::Fixed(c) => c,
                CChoice::Scan => {
                    best.ok_or_else(|| Failure::hypothesis("no c in 1..p gives a consistent Λ(c) within the cap"))?
                }
            };
            let w = envelope_weighted(t, &reports, c)?;
            let v = verify_envelope(&w.curve, &reports, Some(&w.multiplicities));
            let extra = json!({
                "c": c,
                "scan": report::c_scan_json(&rows, best),
                "weights": report::weight_profile_json(&w.profile),
            });
            (w.curve, v, extra)
        }
        Theorem::General => {
            let used = construction_directions(&reports);
            let curve = envelope_general(t, &used, lambda)?;
            let v = verify_envelope(&curve, &reports, None);
            let dirs: Vec<String> = used.iter().map(|r| r.direction.to_string()).collect();
            (curve, v, json!({ "directions_used": dirs }))
        }
    };
    let mut report = report::curve_json(field, &curve, Some(&verification));
    let obj = report.as_object_mut().expect("object");
    for (k, v) in extra.as_object().expect("object") {
        obj.insert(k.clone(), v.clone());
    }
    let mut summary = format!("class {} curve: {}\n", curve.class(), curve.poly.render());
    if let Some(rows) = report["scan"]["rows"].as_array() {
        for row in rows {
            let _ = writeln!(summary, "  c={} Λ={} feasible={}", row["c"], row["totals"], row["feasible"]);
        }
        let _ = writeln!(summary, "selected c={}", report["c"]);
    }
    let failures: Vec<String> = verification.failures().map(|c| c.direction.to_string()).collect();
    if failures.is_empty() {
        let _ = writeln!(summary, "verification passed at {} directions", verification.checks.len());
    } else {
        let _ = writeln!(summary, "verification FAILED at {}", failures.join(", "));
    }
    Ok(Outcome { report, summary, pass: verification.pass() })
}

pub fn check(t: &PointMultiset, lambda: usize, bound: Bound) -> Result<Outcome, Failure> {
    let field = t.field();
    let (_, reports) = uniform(t, lambda)?;
    let outcome = match bound {
        Bound::Deficiency => {
            let cert = deficiency_bound_check(&reports, lambda)?;
            let summary = format!("Σ(λ-λ_d) = {} <= λ²-λ = {}: {}\n", cert.sum, cert.bound, verdict(cert.pass));
            Outcome { report: report::deficiency_json(&cert), summary, pass: cert.pass }
        }
        Bound::Szw => {
            let used = construction_directions(&reports);
            if used.is_empty() {
                return Err(Failure::hypothesis("no uniform direction other than the vertical one"));
            }
            let pair = build_point_count_pair(t, &used)?;
            let profile = gcd_profile(&pair.f, &pair.g)?;
            let checks = szw_check_all(&profile);
            let pass = checks.iter().all(|c| c.pass);
            let worst = checks.iter().min_by_key(|c| c.slack()).expect("q >= 2");
            let report = report::check_json(
                "szw",
                json!({ "lambda": lambda, "directions": used.len(), "deg_f": profile.deg_f(), "deg_g": profile.deg_g() }),
                worst.lhs,
                worst.rhs,
                pass,
                json!({ "min_slack": worst.slack(), "checks": checks.iter().map(report::szw_check_json).collect::<Vec<_>>() }),
            );
            let mut summary = String::new();
            for c in &checks {
                let _ = writeln!(summary, "  y0={}: {} <= {} slack {}", c.y0, c.lhs, c.rhs, c.slack());
            }
            let _ = writeln!(summary, "inequality at every y0: {} (minimum slack {})", verdict(pass), worst.slack());
            Outcome { report, summary, pass }
        }
        Bound::Renitent => {
            let used = construction_directions(&reports);
            let rep = renitent_lower_bound_check(t, &used)?;
            let pass = rep.pass && rep.counts_agree();
            let summary = format!(
                "{} renitent lines >= {} on {} directions, gcd counts agree: {}; {}\n",
                rep.count,
                rep.bound,
                rep.directions,
                rep.counts_agree(),
                verdict(pass)
            );
            Outcome { report: report::renitent_bound_json(&rep), summary, pass }
        }
        Bound::Dichotomy => {
            let rep = dichotomy_check(t, lambda)?;
            let used = construction_directions(&reports);
            let gcd_checks = field
                .elements()
                .flat_map(|a| field.elements().map(move |b| ProjPoint::affine(a, b)))
                .map(|r| point_index_check(t, &used, &r))
                .collect::<Result<Vec<_>, _>>()?;
            let pass = rep.pass && gcd_checks.iter().all(|c| c.pass);
            let mut summary = format!(
                "every point has index <= {} or >= {} over {} directions: {}\n",
                rep.low,
                rep.high,
                rep.directions,
                verdict(pass)
            );
            for h in &rep.heavy {
                let _ = writeln!(summary, "  heavy point {} on {} renitent lines", h.point.display(field), h.index);
            }
            Outcome { report: report::dichotomy_json(field, &rep, &gcd_checks), summary, pass }
        }
    };
    Ok(outcome)
}
