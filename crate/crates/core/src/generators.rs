//! Deterministic test instances with known ground truth.
//!
//! Random choices use splitmix64: the state advances by
//! `0x9E3779B97F4A7C15` and each output is
//!
//! ```text
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! z ^ (z >> 31)
//! ```
//!
//! with wrapping arithmetic. A uniform draw in `[0, 1)` is
//! `(z >> 11) * 2^-53`.

use serde_json::{json, Value};
use thiserror::Error;

use crate::gf::{Elem, Field};
use crate::plane::{incident, Direction, ProjLine, ProjPoint};
use crate::poly::TriHomPoly;
use crate::uniformity::PointMultiset;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenError {
    #[error("{lambda} planted points, need fewer than p = {p}")]
    LambdaGEp { lambda: usize, p: u32 },
    #[error("planted points must be distinct")]
    DuplicatePoints,
    #[error("{points} points but {weights} weights")]
    WeightCountMismatch { points: usize, weights: usize },
    #[error("weight {0} is divisible by p")]
    ZeroWeight(u64),
    #[error("at least one point is required")]
    NoPoints,
    #[error("norm conics need characteristic 2, got p = {0}")]
    NotEvenCharacteristic(u32),
    #[error("norm conics need q >= 4")]
    FieldTooSmall,
    #[error("density must lie in (0, 1], got {0}")]
    BadDensity(f64),
    #[error("the line at infinity has no affine points")]
    LineAtInfinity,
}

/// splitmix64 generator.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `0..n` by rejection.
    pub fn below(&mut self, n: u64) -> u64 {
        let zone = u64::MAX - u64::MAX % n;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % n;
            }
        }
    }
}

/// `Π (U + a_i V - b_i W)^{e_i}`: the lines through `(a_i, b_i)` form the
/// pencil whose dual is the line `U + a_i V - b_i W = 0`.
pub fn dual_lines_curve(field: &Field, points: &[(Elem, Elem)], exponents: &[u32]) -> TriHomPoly {
    points.iter().zip(exponents).fold(TriHomPoly::one(field), |acc, (&(a, b), &k)| {
        &acc * &TriHomPoly::linear(field, Elem::ONE, a, field.neg(b)).pow(k)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlantedInstance {
    pub multiset: PointMultiset,
    pub points: Vec<(Elem, Elem)>,
    pub weights: Vec<u64>,
    /// `Π (U + a_i V - b_i W)^{w_i}`.
    pub oracle: TriHomPoly,
    /// Directions (index order, vertical included) on which no two planted
    /// points are collinear.
    pub generic: Vec<Direction>,
}

pub fn gen_planted(field: &Field, points: &[(Elem, Elem)], weights: &[u64]) -> Result<PlantedInstance, GenError> {
    if points.is_empty() {
        return Err(GenError::NoPoints);
    }
    if points.len() != weights.len() {
        return Err(GenError::WeightCountMismatch { points: points.len(), weights: weights.len() });
    }
    if points.len() >= field.p() as usize {
        return Err(GenError::LambdaGEp { lambda: points.len(), p: field.p() });
    }
    if let Some(&w) = weights.iter().find(|&&w| w % field.p() as u64 == 0) {
        return Err(GenError::ZeroWeight(w));
    }
    let mut sorted = points.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != points.len() {
        return Err(GenError::DuplicatePoints);
    }
    let multiset = PointMultiset::from_points(field, points.iter().zip(weights).map(|(&(a, b), &w)| (a, b, w)))
        .expect("positive weights");
    let exponents: Vec<u32> = weights.iter().map(|&w| w as u32).collect();
    let oracle = dual_lines_curve(field, points, &exponents);
    let generic = Direction::all(field)
        .into_iter()
        .filter(|d| {
            let mut seen: Vec<Elem> = points.iter().map(|&(a, b)| d.intercept(field, a, b)).collect();
            seen.sort();
            seen.windows(2).all(|w| w[0] != w[1])
        })
        .collect();
    Ok(PlantedInstance { multiset, points: points.to_vec(), weights: weights.to_vec(), oracle, generic })
}

/// `λ` distinct random affine points with all weights equal to `w`.
pub fn random_planted(field: &Field, lambda: usize, w: u64, seed: u64) -> Result<PlantedInstance, GenError> {
    let points = random_distinct_points(field, lambda, seed);
    gen_planted(field, &points, &vec![w; lambda])
}

/// `n` distinct affine points, drawn uniformly without replacement.
pub fn random_distinct_points(field: &Field, n: usize, seed: u64) -> Vec<(Elem, Elem)> {
    let q = field.q() as u64;
    let mut rng = SplitMix64::new(seed);
    let mut out: Vec<(Elem, Elem)> = Vec::with_capacity(n);
    while out.len() < n.min((q * q) as usize) {
        let i = rng.below(q * q);
        let p = (Elem::from_index_unchecked((i / q) as u32), Elem::from_index_unchecked((i % q) as u32));
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormConic {
    pub multiset: PointMultiset,
    /// The element δ of absolute trace 1 defining `x² + xy + δy² = 1`.
    pub delta: Elem,
    pub nucleus: ProjPoint,
}

/// The `q + 1` affine points of `x² + xy + δy² = 1`, δ the smallest-index
/// element of absolute trace 1. The form is irreducible, so the conic has
/// no points at infinity; its tangents all pass through the origin.
pub fn gen_norm_conic(field: &Field) -> Result<NormConic, GenError> {
    if field.p() != 2 {
        return Err(GenError::NotEvenCharacteristic(field.p()));
    }
    if field.q() < 4 {
        return Err(GenError::FieldTooSmall);
    }
    let delta = field.elements().find(|&d| field.trace(d) == Elem::ONE).expect("trace is onto");
    let mut multiset = PointMultiset::new(field);
    for x in field.elements() {
        for y in field.elements() {
            let v = field.add(field.add(field.mul(x, x), field.mul(x, y)), field.mul(delta, field.mul(y, y)));
            if v == Elem::ONE {
                multiset.insert(x, y, 1).expect("positive");
            }
        }
    }
    Ok(NormConic { multiset, delta, nucleus: ProjPoint::affine(Elem::ZERO, Elem::ZERO) })
}

/// Each affine point independently with probability `density`, scanning
/// `a` in the outer loop and `b` in the inner loop, one draw per point.
pub fn gen_random(field: &Field, seed: u64, density: f64) -> Result<PointMultiset, GenError> {
    if !(density > 0.0 && density <= 1.0) {
        return Err(GenError::BadDensity(density));
    }
    let mut rng = SplitMix64::new(seed);
    let mut t = PointMultiset::new(field);
    for a in field.elements() {
        for b in field.elements() {
            if rng.next_f64() < density {
                t.insert(a, b, 1).expect("positive");
            }
        }
    }
    Ok(t)
}

/// Multiset sum of the affine points of the given lines.
pub fn gen_union_lines(field: &Field, lines: &[ProjLine]) -> Result<PointMultiset, GenError> {
    let mut t = PointMultiset::new(field);
    for line in lines {
        if line.is_infinity() {
            return Err(GenError::LineAtInfinity);
        }
        for a in field.elements() {
            for b in field.elements() {
                if incident(field, &ProjPoint::affine(a, b), line) {
                    t.insert(a, b, 1).expect("positive");
                }
            }
        }
    }
    Ok(t)
}

#[derive(Clone, Debug, PartialEq)]
pub enum GenSpec {
    Planted { points: Vec<(Elem, Elem)>, weights: Vec<u64> },
    NormConic,
    Random { seed: u64, density: f64 },
    UnionLines { lines: Vec<ProjLine> },
}

impl GenSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            GenSpec::Planted { .. } => "planted",
            GenSpec::NormConic => "norm_conic",
            GenSpec::Random { .. } => "random",
            GenSpec::UnionLines { .. } => "union_lines",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Generated {
    pub multiset: PointMultiset,
    /// Ground truth, `"schema": 1`.
    pub truth: Value,
}

pub fn generate(field: &Field, spec: &GenSpec) -> Result<Generated, GenError> {
    let base = json!({ "schema": 1, "kind": spec.kind(), "field": field.to_string(), "q": field.q() });
    let (multiset, extra) = match spec {
        GenSpec::Planted { points, weights } => {
            let inst = gen_planted(field, points, weights)?;
            let extra = json!({
                "points": inst.points.iter().map(|&(a, b)| json!([a.index(), b.index()])).collect::<Vec<_>>(),
                "weights": inst.weights,
                "oracle_curve": inst.oracle.render(),
                "generic_directions": inst.generic.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
            });
            (inst.multiset, extra)
        }
        GenSpec::NormConic => {
            let conic = gen_norm_conic(field)?;
            let extra = json!({ "delta": conic.delta.index(), "nucleus": conic.nucleus.display(field) });
            (conic.multiset, extra)
        }
        GenSpec::Random { seed, density } => {
            let t = gen_random(field, *seed, *density)?;
            (t, json!({ "seed": seed, "density": density }))
        }
        GenSpec::UnionLines { lines } => {
            let t = gen_union_lines(field, lines)?;
            (t, json!({ "lines": lines.iter().map(|l| l.to_string()).collect::<Vec<_>>() }))
        }
    };
    let mut truth = base;
    let obj = truth.as_object_mut().expect("object");
    obj.insert("size".into(), json!(multiset.size()));
    for (k, v) in extra.as_object().expect("object") {
        obj.insert(k.clone(), v.clone());
    }
    Ok(Generated { multiset, truth })
}
