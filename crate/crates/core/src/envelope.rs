//! Dual algebraic envelopes containing renitent lines.
//!
//! A line `[A:B:C]` is read as the dual point `(C:A:-B)`; in particular the
//! line `[d:-1:α]` of slope `d` and intercept `α` becomes `(α:d:1)`, and the
//! vertical line `x = t` becomes `(-t:1:0)`. An envelope of class `n` is a
//! homogeneous polynomial `g(U, V, W)` of degree `n` in these dual
//! coordinates.
//!
//! Three constructions are provided, all driven only by the power sums
//!
//! ```text
//! π_k(V) = Σ_i m_i (b_i - a_i V)^k
//! ```
//!
//! of the multiset. The renitent intercepts are never inputs; they are used
//! only by [`verify_envelope`].
//!
//! * [`envelope_regular`]: renitent lines of equal residue, class λ.
//! * [`envelope_weighted`]: residues weighted by `c`, class Λ(c), with
//!   intersection multiplicities λ_{d,i}(c).
//! * [`envelope_general`]: any (q-λ)-uniform directions, class λ², built
//!   from Hankel determinants of the power sums.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::gf::{Elem, Field};
use crate::plane::{Direction, ProjLine, ProjPoint};
use crate::poly::{homogenize, poly_det, roots_with_multiplicity, BiPoly, PolyMatrix, TriHomPoly, UniPoly};
use crate::uniformity::{check_lambda, DirectionReport, PointMultiset, UniformityError};

/// Hypotheses of the class-λ construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    /// `0 < λ <= min(q-2, p-1)` with a common number of renitent lines.
    ClassBound,
    /// All renitent lines of a direction meet the set in the same residue.
    EqualResidues,
    /// `t_d - m_d` is the same residue for every direction.
    CommonDifference,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnvelopeError {
    #[error("power sums requested up to k = {k_max}, but only k <= q-2 = {max} are meaningful")]
    KMaxTooLarge { k_max: usize, max: usize },
    #[error("class {lambda} exceeds min(q-2, p-1) = {max}")]
    LambdaTooLarge { lambda: usize, max: usize },
    #[error("c must be a nonzero residue mod p")]
    CZero,
    #[error("renitent line meets the set in the typical residue")]
    ZeroDifference,
    #[error("need power sums up to index {needed}, have {have}")]
    InsufficientPowerSums { needed: usize, have: usize },
    #[error("hypothesis ({hypothesis:?}) violated: {detail}")]
    HypothesisViolation { hypothesis: Hypothesis, detail: String },
    #[error("the vertical direction (0:1:0) must not be in the direction set")]
    VerticalDirectionPresent,
    #[error("no directions given")]
    EmptyDirectionSet,
    #[error("Λ_d(c) = {total} at {direction} exceeds min(q-2, p-1) = {cap}")]
    LambdaCapExceeded { direction: Direction, total: u32, cap: u32 },
    #[error("|T| = {0} is divisible by p; the weighted construction does not apply")]
    TotalSizeDivisibleByP(u64),
    #[error("Λ_d(c) differs between directions ({first} vs {other} at {direction})")]
    InconsistentLambda { first: u32, other: u32, direction: Direction },
    #[error("{count} directions given, at most q = {q} allowed")]
    TooManyDirections { count: usize, q: u32 },
    #[error("{direction} has {lambda_d} renitent lines, more than λ = {lambda}")]
    ReportExceedsBound { direction: Direction, lambda_d: usize, lambda: usize },
    #[error("the constructed curve vanishes identically")]
    DegenerateCurve,
    #[error("no sharply uniform direction among the reports")]
    NoSharpDirection,
    #[error(transparent)]
    Uniformity(#[from] UniformityError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Equal-residue construction with common residue `c`.
    Regular { c: u32 },
    /// Weighted construction; `excluded` is the direction left out when all
    /// q + 1 directions were supplied.
    Weighted { c: u32, excluded: Option<Direction> },
    /// Hankel construction for bound λ; `actual_degree` is the total degree
    /// of the affine equation, at most λ².
    General { lambda: usize, actual_degree: usize },
}

impl Provenance {
    pub fn name(&self) -> &'static str {
        match self {
            Provenance::Regular { .. } => "regular",
            Provenance::Weighted { .. } => "weighted",
            Provenance::General { .. } => "general",
        }
    }
}

/// A dual curve `g(U, V, W)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvelopeCurve {
    pub poly: TriHomPoly,
    pub provenance: Provenance,
}

impl EnvelopeCurve {
    pub fn class(&self) -> usize {
        self.poly.degree()
    }
}

/// `(direction, α) -> expected intersection multiplicity`.
pub type MultiplicityMap = BTreeMap<(Direction, Elem), u32>;

/// The dual point of a line.
pub fn dual_point(field: &Field, line: &ProjLine) -> ProjPoint {
    let [a, b, c] = line.coords();
    ProjPoint::new(field, [c, a, field.neg(b)]).expect("line coordinates are not all zero")
}

fn cap(field: &Field) -> usize {
    (field.q() as usize).saturating_sub(2).min(field.p() as usize - 1)
}

/// `[π_0, ..., π_{k_max}]` for the multiset.
pub fn power_sum_polys(t: &PointMultiset, k_max: usize) -> Result<Vec<UniPoly>, EnvelopeError> {
    let f = t.field();
    let max = f.q() as usize - 2;
    if k_max > max {
        return Err(EnvelopeError::KMaxTooLarge { k_max, max });
    }
    let mut sums = vec![UniPoly::zero(f); k_max + 1];
    for (a, b, m) in t.iter() {
        let weight = f.from_int((m % f.p() as u64) as i64);
        if weight.is_zero() {
            continue;
        }
        let lin = UniPoly::linear(f, b, f.neg(a));
        let mut pw = UniPoly::constant(f, weight);
        for slot in sums.iter_mut() {
            *slot = &*slot + &pw;
            pw = &pw * &lin;
        }
    }
    Ok(sums)
}

/// `[M_1, ..., M_λ]` from the power sums `π_1/c, ..., π_λ/c` by the Newton
/// recursion `j σ_j = Σ_{i=1..j} (-1)^{i-1} σ_{j-i} π_i / c`.
pub fn newton_sigma(pi: &[UniPoly], lambda: usize, c: u32) -> Result<Vec<UniPoly>, EnvelopeError> {
    let Some(first) = pi.first() else {
        return Err(EnvelopeError::InsufficientPowerSums { needed: lambda, have: 0 });
    };
    let f = first.field().clone();
    let max = cap(&f);
    if lambda > max {
        return Err(EnvelopeError::LambdaTooLarge { lambda, max });
    }
    if c.is_multiple_of(f.p()) {
        return Err(EnvelopeError::CZero);
    }
    if pi.len() <= lambda {
        return Err(EnvelopeError::InsufficientPowerSums { needed: lambda, have: pi.len() - 1 });
    }
    let c_inv = f.inv(f.from_int(c as i64)).expect("c nonzero");
    let scaled: Vec<UniPoly> = pi.iter().map(|p| p.scale(c_inv)).collect();
    let mut sigma = vec![UniPoly::one(&f)];
    for j in 1..=lambda {
        let mut acc = UniPoly::zero(&f);
        for i in 1..=j {
            let term = &sigma[j - i] * &scaled[i];
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        let j_inv = f.inv(f.from_int(j as i64)).expect("j < p");
        sigma.push(acc.scale(j_inv));
    }
    sigma.remove(0);
    Ok(sigma)
}

/// `U^n - M_1 U^{n-1} + M_2 U^{n-2} - ... + (-1)^n M_n` as a polynomial in
/// `U` (first) and `V` (second).
fn monic_from_sigmas(field: &Field, sigmas: &[UniPoly]) -> BiPoly {
    let n = sigmas.len();
    let mut f = BiPoly::monomial(field, Elem::ONE, n, 0);
    for (idx, m) in sigmas.iter().enumerate() {
        let j = idx + 1;
        let term = &BiPoly::from_second(m) * &BiPoly::monomial(field, Elem::ONE, n - j, 0);
        f = if j % 2 == 1 { &f - &term } else { &f + &term };
    }
    f
}

fn reject_vertical(reports: &[DirectionReport]) -> Result<(), EnvelopeError> {
    if reports.iter().any(|r| r.direction == Direction::Vertical) {
        return Err(EnvelopeError::VerticalDirectionPresent);
    }
    Ok(())
}

/// Class-λ envelope for directions whose renitent lines share one residue
/// `t_d`, with `t_d - m_d` independent of the direction. The size of the
/// direction set is not restricted.
pub fn envelope_regular(t: &PointMultiset, reports: &[DirectionReport]) -> Result<EnvelopeCurve, EnvelopeError> {
    let f = t.field();
    let p = f.p();
    let first = reports.first().ok_or(EnvelopeError::EmptyDirectionSet)?;
    reject_vertical(reports)?;
    let mut common: Option<(usize, u32)> = None;
    for r in reports {
        let Some(t0) = r.renitent.first().map(|x| x.t) else {
            return Err(EnvelopeError::HypothesisViolation {
                hypothesis: Hypothesis::EqualResidues,
                detail: format!("{} has no renitent lines", r.direction),
            });
        };
        if r.renitent.iter().any(|x| x.t != t0) {
            return Err(EnvelopeError::HypothesisViolation {
                hypothesis: Hypothesis::EqualResidues,
                detail: format!("renitent lines at {} meet the set in different residues", r.direction),
            });
        }
        let c = (t0 + p - r.typical) % p;
        match common {
            None => common = Some((r.lambda_d(), c)),
            Some((_, c0)) if c0 != c => {
                return Err(EnvelopeError::HypothesisViolation {
                    hypothesis: Hypothesis::CommonDifference,
                    detail: format!("t_d - m_d is {c0} at {} but {c} at {}", first.direction, r.direction),
                })
            }
            Some((l0, _)) if l0 != r.lambda_d() => {
                return Err(EnvelopeError::HypothesisViolation {
                    hypothesis: Hypothesis::ClassBound,
                    detail: format!("{} renitent lines at {} but {} at {}", l0, first.direction, r.lambda_d(), r.direction),
                })
            }
            Some(_) => {}
        }
    }
    let (lambda, c) = common.expect("at least one report");
    let max = cap(f);
    if lambda > max {
        return Err(EnvelopeError::HypothesisViolation {
            hypothesis: Hypothesis::ClassBound,
            detail: format!("λ = {lambda} exceeds min(q-2, p-1) = {max}"),
        });
    }
    let pi = power_sum_polys(t, lambda)?;
    let sigmas = newton_sigma(&pi, lambda, c)?;
    let poly = homogenize(&monic_from_sigmas(f, &sigmas), lambda).expect("degree λ");
    Ok(EnvelopeCurve { poly, provenance: Provenance::Regular { c } })
}

/// Weights λ_{d,i}(c) of one direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectionWeights {
    pub direction: Direction,
    /// Parallel to the report's renitent lines.
    pub weights: Vec<u32>,
    /// Λ_d(c), summed over the naturals.
    pub total: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightProfile {
    pub c: u32,
    pub entries: Vec<DirectionWeights>,
}

impl WeightProfile {
    /// Λ(c) when every direction has the same Λ_d(c).
    pub fn common_total(&self) -> Option<u32> {
        let first = self.entries.first()?.total;
        self.entries.iter().all(|e| e.total == first).then_some(first)
    }
}

/// λ_{d,i}(c) in `1..p` with `c λ_{d,i}(c) ≡ t_{d,i} - m_d (mod p)`.
pub fn lambda_weights(field: &Field, report: &DirectionReport, c: u32) -> Result<DirectionWeights, EnvelopeError> {
    let p = field.p();
    if c.is_multiple_of(p) {
        return Err(EnvelopeError::CZero);
    }
    let c_inv = field.inv(field.from_int(c as i64)).expect("c nonzero");
    let weights = report
        .renitent
        .iter()
        .map(|x| {
            let diff = (x.t + p - report.typical % p) % p;
            if diff == 0 {
                return Err(EnvelopeError::ZeroDifference);
            }
            let w = field.mul(field.from_int(diff as i64), c_inv);
            Ok(field.residue(w).expect("prime subfield"))
        })
        .collect::<Result<Vec<u32>, _>>()?;
    let total = weights.iter().sum();
    Ok(DirectionWeights { direction: report.direction, weights, total })
}

pub fn weight_profile(field: &Field, reports: &[DirectionReport], c: u32) -> Result<WeightProfile, EnvelopeError> {
    let entries = reports.iter().map(|r| lambda_weights(field, r, c)).collect::<Result<_, _>>()?;
    Ok(WeightProfile { c, entries })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedEnvelope {
    pub curve: EnvelopeCurve,
    pub profile: WeightProfile,
    pub multiplicities: MultiplicityMap,
}

/// Class-Λ(c) envelope; the pencil of each direction meets it at the
/// renitent line `(d, α_i)` with multiplicity λ_{d,i}(c).
///
/// With all q + 1 directions the curve is built from the q directions other
/// than the vertical one, and it is expected to pass the check at every
/// direction.
pub fn envelope_weighted(
    t: &PointMultiset,
    reports: &[DirectionReport],
    c: u32,
) -> Result<WeightedEnvelope, EnvelopeError> {
    let f = t.field();
    let p = f.p();
    if reports.is_empty() {
        return Err(EnvelopeError::EmptyDirectionSet);
    }
    if c.is_multiple_of(p) {
        return Err(EnvelopeError::CZero);
    }
    if t.size().is_multiple_of(p as u64) {
        return Err(EnvelopeError::TotalSizeDivisibleByP(t.size()));
    }
    let profile = weight_profile(f, reports, c)?;
    let cap = cap(f) as u32;
    if let Some(e) = profile.entries.iter().find(|e| e.total > cap) {
        return Err(EnvelopeError::LambdaCapExceeded { direction: e.direction, total: e.total, cap });
    }
    let total = profile.entries[0].total;
    if let Some(e) = profile.entries.iter().find(|e| e.total != total) {
        return Err(EnvelopeError::InconsistentLambda { first: total, other: e.total, direction: e.direction });
    }
    let excluded = (reports.len() == f.q() as usize + 1).then(|| {
        reports.iter().map(|r| r.direction).max_by_key(|d| d.index(f)).expect("nonempty")
    });
    let lambda = total as usize;
    let pi = power_sum_polys(t, lambda)?;
    let sigmas = newton_sigma(&pi, lambda, c)?;
    let poly = homogenize(&monic_from_sigmas(f, &sigmas), lambda).expect("degree Λ");
    let multiplicities = reports
        .iter()
        .zip(&profile.entries)
        .flat_map(|(r, e)| r.renitent.iter().zip(&e.weights).map(move |(x, &w)| ((r.direction, x.alpha), w)))
        .collect();
    Ok(WeightedEnvelope {
        curve: EnvelopeCurve { poly, provenance: Provenance::Weighted { c: c % p, excluded } },
        profile,
        multiplicities,
    })
}

/// One row of a `c` scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CScanEntry {
    pub c: u32,
    /// Λ_d(c) per report.
    pub totals: Vec<u32>,
    pub feasible: bool,
}

/// Tries every `c` in `1..p`; returns all rows and the feasible `c` with the
/// smallest Λ(c), ties going to the smallest `c`.
pub fn scan_c(field: &Field, reports: &[DirectionReport]) -> Result<(Vec<CScanEntry>, Option<u32>), EnvelopeError> {
    let cap = cap(field) as u32;
    let mut rows = Vec::new();
    let mut best: Option<(u32, u32)> = None;
    for c in 1..field.p() {
        let profile = weight_profile(field, reports, c)?;
        let totals: Vec<u32> = profile.entries.iter().map(|e| e.total).collect();
        let feasible = !totals.is_empty() && totals.iter().all(|&x| x <= cap && x == totals[0]);
        if feasible && best.is_none_or(|(l, _)| totals[0] < l) {
            best = Some((totals[0], c));
        }
        rows.push(CScanEntry { c, totals, feasible });
    }
    Ok((rows, best.map(|(_, c)| c)))
}

/// `P_k = Σ c_i x_i^k` for `k = 0..=k_max`.
pub fn weighted_power_sums(field: &Field, cs: &[Elem], xs: &[Elem], k_max: usize) -> Vec<Elem> {
    (0..=k_max)
        .map(|k| {
            cs.iter().zip(xs).fold(Elem::ZERO, |acc, (&c, &x)| field.add(acc, field.mul(c, field.pow(x, k as u64))))
        })
        .collect()
}

/// `[σ_0, ..., σ_n]` of the given values.
pub fn elementary_symmetric(field: &Field, xs: &[Elem]) -> Vec<Elem> {
    // coefficients of Π (1 + x_i Y)
    let mut sigma = vec![Elem::ONE];
    for &x in xs {
        let mut next = sigma.clone();
        next.push(Elem::ZERO);
        for k in 1..next.len() {
            next[k] = field.add(next[k], field.mul(sigma[k - 1], x));
        }
        sigma = next;
    }
    sigma
}

/// Evaluates both sides of `P_{λ+j} = Σ_{i=1..λ} (-1)^{i+1} P_{λ+j-i} σ_i`.
pub fn weighted_power_recursion_check(field: &Field, cs: &[Elem], xs: &[Elem], j: usize) -> bool {
    let lambda = xs.len();
    let sums = weighted_power_sums(field, cs, xs, lambda + j);
    let sigma = elementary_symmetric(field, xs);
    let rhs = (1..=lambda).fold(Elem::ZERO, |acc, i| {
        let term = field.mul(sums[lambda + j - i], sigma[i]);
        if i % 2 == 1 {
            field.add(acc, term)
        } else {
            field.sub(acc, term)
        }
    });
    sums[lambda + j] == rhs
}

/// λ×λ matrix with entry `(r, c) = π_{λ-1+r-c}`.
pub fn hankel_matrix(pi: &[UniPoly], lambda: usize) -> Result<PolyMatrix, EnvelopeError> {
    let needed = 2 * lambda - 1;
    if lambda == 0 || pi.len() < needed {
        return Err(EnvelopeError::InsufficientPowerSums { needed: needed.saturating_sub(1), have: pi.len().saturating_sub(1) });
    }
    let f = pi[0].field().clone();
    let rows = (0..lambda).map(|r| (0..lambda).map(|c| pi[lambda - 1 + r - c].clone()).collect()).collect();
    Ok(PolyMatrix::new(&f, rows).expect("square"))
}

/// `(-1)^{λ(λ-1)/2} Π c_i Π_{i<j} (x_i - x_j)^2`.
pub fn hankel_det_closed_form(field: &Field, cs: &[Elem], xs: &[Elem]) -> Elem {
    let lambda = xs.len();
    let mut acc = cs.iter().fold(Elem::ONE, |acc, &c| field.mul(acc, c));
    for i in 0..lambda {
        for j in i + 1..lambda {
            let d = field.sub(xs[i], xs[j]);
            acc = field.mul(acc, field.mul(d, d));
        }
    }
    if (lambda * (lambda.saturating_sub(1)) / 2) % 2 == 1 {
        field.neg(acc)
    } else {
        acc
    }
}

/// Pieces of the Hankel construction, kept for inspection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelData {
    pub hankel: PolyMatrix,
    /// `M(V) = det H(V)`.
    pub det: UniPoly,
    /// `M_i(V)`: determinant with column `i` replaced by `(π_λ, ..., π_{2λ-1})`.
    pub minors: Vec<UniPoly>,
}

pub fn hankel_data(t: &PointMultiset, lambda: usize) -> Result<HankelData, EnvelopeError> {
    let pi = power_sum_polys(t, 2 * lambda - 1)?;
    let hankel = hankel_matrix(&pi, lambda)?;
    let column: Vec<UniPoly> = pi[lambda..2 * lambda].to_vec();
    let det = poly_det(&hankel);
    let minors = (0..lambda).map(|i| poly_det(&hankel.with_column(i, &column))).collect();
    Ok(HankelData { hankel, det, minors })
}

/// Class-λ² envelope for (q-λ)-uniform directions.
///
/// The affine equation is `f = M U^λ - M_1 U^{λ-1} - ... - M_λ`: Cramer's
/// rule gives `M_i(d) = (-1)^{i+1} σ_i(d) M(d)` at a sharply uniform `d`, so
/// `f(U, d) = M(d) Π (U - α_i(d))`, while at a direction with fewer than λ
/// renitent lines every coefficient vanishes.
pub fn envelope_general(
    t: &PointMultiset,
    reports: &[DirectionReport],
    lambda: usize,
) -> Result<EnvelopeCurve, EnvelopeError> {
    let f = t.field();
    check_lambda(f, lambda)?;
    if 2 * lambda + 1 > f.q() as usize {
        return Err(UniformityError::LambdaOutOfRange { lambda, max: (f.q() as usize - 1) / 2 }.into());
    }
    if reports.len() > f.q() as usize {
        return Err(EnvelopeError::TooManyDirections { count: reports.len(), q: f.q() });
    }
    reject_vertical(reports)?;
    if let Some(r) = reports.iter().find(|r| r.lambda_d() > lambda) {
        return Err(EnvelopeError::ReportExceedsBound { direction: r.direction, lambda_d: r.lambda_d(), lambda });
    }
    let data = hankel_data(t, lambda)?;
    let mut affine = &BiPoly::from_second(&data.det) * &BiPoly::monomial(f, Elem::ONE, lambda, 0);
    for (idx, m) in data.minors.iter().enumerate() {
        let term = &BiPoly::from_second(m) * &BiPoly::monomial(f, Elem::ONE, lambda - idx - 1, 0);
        affine = &affine - &term;
    }
    let actual_degree = affine.total_degree().ok_or(EnvelopeError::DegenerateCurve)?;
    let poly = homogenize(&affine, lambda * lambda).expect("degree at most λ²");
    Ok(EnvelopeCurve { poly, provenance: Provenance::General { lambda, actual_degree } })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeficiencyCertificate {
    pub lambda: usize,
    /// `(d, λ_d)` for every report.
    pub per_direction: Vec<(Direction, usize)>,
    /// `Σ (λ - λ_d)`.
    pub sum: usize,
    /// `λ² - λ`.
    pub bound: usize,
    pub pass: bool,
}

/// `Σ_d (λ - λ_d) <= λ² - λ`, given a sharply uniform direction.
pub fn deficiency_bound_check(reports: &[DirectionReport], lambda: usize) -> Result<DeficiencyCertificate, EnvelopeError> {
    if !reports.iter().any(|r| r.lambda_d() == lambda) {
        return Err(EnvelopeError::NoSharpDirection);
    }
    if let Some(r) = reports.iter().find(|r| r.lambda_d() > lambda) {
        return Err(EnvelopeError::ReportExceedsBound { direction: r.direction, lambda_d: r.lambda_d(), lambda });
    }
    let per_direction: Vec<(Direction, usize)> = reports.iter().map(|r| (r.direction, r.lambda_d())).collect();
    let sum = per_direction.iter().map(|&(_, l)| lambda - l).sum();
    let bound = lambda * lambda - lambda;
    Ok(DeficiencyCertificate { lambda, per_direction, sum, bound, pass: sum <= bound })
}

/// Restriction of the curve to the pencil of `d`, as a polynomial whose
/// roots are the intercepts of the pencil lines on the curve: `g(U, d, 1)`
/// for a slope, `g(-U, 1, 0)` for the vertical direction.
pub fn pencil_restriction(curve: &TriHomPoly, d: Direction) -> UniPoly {
    let f = curve.field();
    match d {
        Direction::Slope(s) => curve.restrict(s, Elem::ONE),
        Direction::Vertical => {
            let r = curve.restrict(Elem::ONE, Elem::ZERO);
            let coeffs = r.coeffs().iter().enumerate().map(|(i, &c)| if i % 2 == 1 { f.neg(c) } else { c }).collect();
            UniPoly::new(f, coeffs)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    /// Every renitent intercept is a root of the expected multiplicity.
    Pass,
    /// The restriction vanishes identically: the whole pencil lies on the curve.
    PencilContained,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectionCheck {
    pub direction: Direction,
    pub status: CheckStatus,
    /// `(α, expected multiplicity, found multiplicity)`; without a
    /// multiplicity map the expectation is "at least 1".
    pub roots: Vec<(Elem, Option<u32>, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<DirectionCheck>,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &DirectionCheck> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }
}

/// Checks that each renitent line of each report lies on the envelope, with
/// the exact multiplicity when `mult` is given.
pub fn verify_envelope(
    curve: &EnvelopeCurve,
    reports: &[DirectionReport],
    mult: Option<&MultiplicityMap>,
) -> VerificationReport {
    let checks = reports
        .iter()
        .map(|r| {
            let restriction = pencil_restriction(&curve.poly, r.direction);
            if restriction.is_zero() {
                let roots = r.renitent.iter().map(|x| (x.alpha, mult.and_then(|m| m.get(&(r.direction, x.alpha)).copied()), 0)).collect();
                return DirectionCheck { direction: r.direction, status: CheckStatus::PencilContained, roots };
            }
            let found: BTreeMap<Elem, u32> = roots_with_multiplicity(&restriction)
                .expect("nonzero")
                .into_iter()
                .map(|(a, m)| (a, m as u32))
                .collect();
            let mut ok = true;
            let roots = r
                .renitent
                .iter()
                .map(|x| {
                    let got = found.get(&x.alpha).copied().unwrap_or(0);
                    let expected = mult.map(|m| m.get(&(r.direction, x.alpha)).copied().unwrap_or(1));
                    ok &= match expected {
                        Some(e) => got == e,
                        None => got >= 1,
                    };
                    (x.alpha, expected, got)
                })
                .collect();
            let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
            DirectionCheck { direction: r.direction, status, roots }
        })
        .collect();
    VerificationReport { checks }
}
