//! JSON renderings of reports, curves and bound checks. Every top-level
//! object carries `"schema": 1`; field elements are written as their
//! integer indices.

use serde_json::{json, Value};

use crate::envelope::{
    CScanEntry, CheckStatus, DeficiencyCertificate, EnvelopeCurve, Provenance, VerificationReport, WeightProfile,
};
use crate::gf::Field;
use crate::poly::TriHomPoly;
use crate::szw::{DichotomyReport, IndexReport, PointIndexCheck, RenitentBoundReport, SzwCheck};
use crate::uniformity::{Classification, DirectionReport};

pub const SCHEMA: u32 = 1;

pub fn direction_report_json(report: &DirectionReport) -> Value {
    json!({
        "direction": report.direction.to_string(),
        "uniform": true,
        "typical": report.typical,
        "lambda_d": report.lambda_d(),
        "sharp": report.sharp,
        "renitent": report.renitent.iter().map(|r| json!({
            "line": r.line.to_string(),
            "alpha": r.alpha.index(),
            "t": r.t,
            "count": report.counts[r.alpha.index() as usize],
        })).collect::<Vec<_>>(),
    })
}

pub fn classification_json(c: &Classification) -> Value {
    match c {
        Classification::Uniform(r) => direction_report_json(r),
        Classification::NotUniform(d) => json!({ "direction": d.to_string(), "uniform": false }),
    }
}

pub fn analyze_json(field: &Field, size: u64, lambda: usize, classes: &[Classification], concurrency: Option<String>) -> Value {
    let uniform: Vec<&DirectionReport> = classes.iter().filter_map(Classification::report).collect();
    json!({
        "schema": SCHEMA,
        "field": field.to_string(),
        "q": field.q(),
        "size": size,
        "lambda": lambda,
        "uniform_directions": uniform.len(),
        "sharp_directions": uniform.iter().filter(|r| r.sharp).count(),
        "renitent_lines": uniform.iter().map(|r| r.lambda_d()).sum::<usize>(),
        "concurrency_point": concurrency,
        "directions": classes.iter().map(classification_json).collect::<Vec<_>>(),
    })
}

pub fn monomials_json(poly: &TriHomPoly) -> Value {
    Value::Array(
        poly.monomials()
            .rev()
            .map(|((i, j, k), c)| json!({ "i": i, "j": j, "k": k, "coeff": c.index() }))
            .collect(),
    )
}

pub fn provenance_json(p: &Provenance) -> Value {
    match p {
        Provenance::Regular { c } => json!({ "theorem": "regular", "c": c }),
        Provenance::Weighted { c, excluded } => {
            json!({ "theorem": "weighted", "c": c, "excluded_direction": excluded.map(|d| d.to_string()) })
        }
        Provenance::General { lambda, actual_degree } => {
            json!({ "theorem": "general", "lambda": lambda, "actual_degree": actual_degree })
        }
    }
}

pub fn verification_json(v: &VerificationReport) -> Value {
    json!({
        "pass": v.pass(),
        "directions": v.checks.iter().map(|c| json!({
            "direction": c.direction.to_string(),
            "status": match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::PencilContained => "pencil_contained",
                CheckStatus::Fail => "fail",
            },
            "roots": c.roots.iter().map(|(a, expected, found)| json!({
                "alpha": a.index(),
                "expected": expected,
                "found": found,
            })).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

pub fn weight_profile_json(w: &WeightProfile) -> Value {
    json!({
        "c": w.c,
        "common_total": w.common_total(),
        "directions": w.entries.iter().map(|e| json!({
            "direction": e.direction.to_string(),
            "weights": e.weights,
            "total": e.total,
        })).collect::<Vec<_>>(),
    })
}

pub fn c_scan_json(rows: &[CScanEntry], selected: Option<u32>) -> Value {
    json!({
        "selected": selected,
        "rows": rows.iter().map(|r| {
            let common = (r.feasible).then(|| r.totals[0]);
            json!({ "c": r.c, "totals": r.totals, "feasible": r.feasible, "lambda": common })
        }).collect::<Vec<_>>(),
    })
}

pub fn curve_json(field: &Field, curve: &EnvelopeCurve, verification: Option<&VerificationReport>) -> Value {
    json!({
        "schema": SCHEMA,
        "field": field.to_string(),
        "class": curve.class(),
        "provenance": provenance_json(&curve.provenance),
        "polynomial": curve.poly.render(),
        "monomials": monomials_json(&curve.poly),
        "verification": verification.map(verification_json),
    })
}

pub fn check_json(theorem: &str, hypotheses: Value, lhs: i64, rhs: i64, pass: bool, witnesses: Value) -> Value {
    json!({
        "schema": SCHEMA,
        "theorem": theorem,
        "hypotheses": hypotheses,
        "lhs": lhs,
        "rhs": rhs,
        "pass": pass,
        "witnesses": witnesses,
    })
}

pub fn szw_check_json(c: &SzwCheck) -> Value {
    json!({ "y0": c.y0.index(), "lhs": c.lhs, "rhs": c.rhs, "slack": c.slack(), "pass": c.pass })
}

pub fn index_report_json(field: &Field, r: &IndexReport) -> Value {
    json!({
        "point": r.point.display(field),
        "index": r.index,
        "lines": r.lines.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
    })
}

pub fn deficiency_json(c: &DeficiencyCertificate) -> Value {
    check_json(
        "deficiency",
        json!({ "lambda": c.lambda, "sharp_direction_present": true }),
        c.sum as i64,
        c.bound as i64,
        c.pass,
        json!(c.per_direction.iter().map(|(d, l)| json!({ "direction": d.to_string(), "lambda_d": l })).collect::<Vec<_>>()),
    )
}

pub fn renitent_bound_json(r: &RenitentBoundReport) -> Value {
    // lhs >= rhs is the inequality here
    check_json(
        "renitent",
        json!({ "lambda": r.lambda, "directions": r.directions, "counts_agree": r.counts_agree() }),
        r.count as i64,
        r.bound as i64,
        r.pass,
        json!({
            "deficiency": r.deficiency,
            "szw": szw_check_json(&r.szw),
            "per_direction": r.per_direction.iter().map(|c| json!({
                "direction": c.direction.to_string(),
                "combinatorial": c.combinatorial,
                "from_gcd": c.from_gcd,
            })).collect::<Vec<_>>(),
        }),
    )
}

pub fn dichotomy_json(field: &Field, r: &DichotomyReport, gcd_checks: &[PointIndexCheck]) -> Value {
    check_json(
        "dichotomy",
        json!({ "lambda": r.lambda, "directions": r.directions, "q": field.q() }),
        r.worst.as_ref().map_or(r.low as i64, |w| w.index as i64),
        r.low as i64,
        r.pass,
        json!({
            "low": r.low,
            "high": r.high,
            "heavy_points": r.heavy.iter().map(|h| index_report_json(field, h)).collect::<Vec<_>>(),
            "middle_point": r.worst.as_ref().map(|w| index_report_json(field, w)),
            "histogram": r.histogram,
            "gcd_route": {
                "points_checked": gcd_checks.len(),
                "pass": gcd_checks.iter().all(|c| c.pass),
            },
        }),
    )
}
