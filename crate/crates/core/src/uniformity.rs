//! Intersection profiles of an affine point multiset with parallel classes,
//! classification of (q-λ)-uniform directions and extraction of renitent
//! lines.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::gf::{Elem, Field};
use crate::plane::{incident, meet, Direction, PlaneError, ProjLine, ProjPoint};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UniformityError {
    #[error("the line at infinity carries no affine points")]
    LineAtInfinity,
    #[error("lambda = {lambda} must satisfy 0 < lambda <= (q-1)/2 = {max}")]
    LambdaOutOfRange { lambda: usize, max: usize },
    #[error("concurrency needs at least two lines")]
    FewerThanTwoLines,
    #[error("multiplicity must be positive")]
    ZeroMultiplicity,
    #[error("coordinate {0} outside the field")]
    OutOfField(u32),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Affine points `(a, b)` with positive multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointMultiset {
    field: Field,
    points: BTreeMap<(Elem, Elem), u64>,
    size: u64,
}

impl PointMultiset {
    pub fn new(field: &Field) -> PointMultiset {
        PointMultiset { field: field.clone(), points: BTreeMap::new(), size: 0 }
    }

    /// Adds `m` copies of `(a, b)`.
    pub fn insert(&mut self, a: Elem, b: Elem, m: u64) -> Result<(), UniformityError> {
        if m == 0 {
            return Err(UniformityError::ZeroMultiplicity);
        }
        for c in [a, b] {
            self.field.elem(c.index()).map_err(|_| UniformityError::OutOfField(c.index()))?;
        }
        *self.points.entry((a, b)).or_insert(0) += m;
        self.size += m;
        Ok(())
    }

    pub fn from_points(
        field: &Field,
        points: impl IntoIterator<Item = (Elem, Elem, u64)>,
    ) -> Result<PointMultiset, UniformityError> {
        let mut t = PointMultiset::new(field);
        for (a, b, m) in points {
            t.insert(a, b, m)?;
        }
        Ok(t)
    }

    /// Every affine point once.
    pub fn full_plane(field: &Field) -> PointMultiset {
        let pts = field.elements().flat_map(|a| field.elements().map(move |b| (a, b, 1)));
        PointMultiset::from_points(field, pts).expect("valid points")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Total size counted with multiplicity.
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn multiplicity(&self, a: Elem, b: Elem) -> u64 {
        self.points.get(&(a, b)).copied().unwrap_or(0)
    }

    /// Distinct points `(a, b, m)` in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = (Elem, Elem, u64)> + '_ {
        self.points.iter().map(|(&(a, b), &m)| (a, b, m))
    }

    /// Parses the point-set text format: one `a b [m]` per line, `#` starts
    /// a comment.
    pub fn parse(field: &Field, text: &str) -> Result<PointMultiset, UniformityError> {
        let mut t = PointMultiset::new(field);
        for (no, raw) in text.lines().enumerate() {
            let line = no + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let fields: Vec<&str> = body.split_whitespace().collect();
            if !(2..=3).contains(&fields.len()) {
                return Err(UniformityError::Parse { line, msg: format!("expected `a b [m]`, got {body:?}") });
            }
            let num = |s: &str| {
                s.parse::<u64>().map_err(|_| UniformityError::Parse { line, msg: format!("not a natural number: {s:?}") })
            };
            let elem = |s: &str| -> Result<Elem, UniformityError> {
                let i = num(s)?;
                u32::try_from(i)
                    .ok()
                    .and_then(|i| field.elem(i).ok())
                    .ok_or_else(|| UniformityError::Parse { line, msg: format!("{i} is not an element of GF({})", field.q()) })
            };
            let (a, b) = (elem(fields[0])?, elem(fields[1])?);
            let m = fields.get(2).map(|s| num(s)).transpose()?.unwrap_or(1);
            if m == 0 {
                return Err(UniformityError::Parse { line, msg: "multiplicity must be positive".into() });
            }
            t.insert(a, b, m)?;
        }
        Ok(t)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (a, b, m) in self.iter() {
            let _ = writeln!(out, "{a} {b} {m}");
        }
        out
    }
}

/// Exact number of points (with multiplicity) of `t` on an affine line.
pub fn line_count(t: &PointMultiset, line: &ProjLine) -> Result<u64, UniformityError> {
    if line.is_infinity() {
        return Err(UniformityError::LineAtInfinity);
    }
    let f = t.field();
    Ok(t.iter().filter(|&(a, b, _)| incident(f, &ProjPoint::affine(a, b), line)).map(|(_, _, m)| m).sum())
}

/// Counts per intercept for the class of `d`: entry `t` is the size of the
/// intersection with the line of intercept `t` (see [`Direction::line`]).
pub fn intercept_profile(t: &PointMultiset, d: Direction) -> Vec<u64> {
    let f = t.field();
    let mut counts = vec![0u64; f.q() as usize];
    for (a, b, m) in t.iter() {
        counts[d.intercept(f, a, b).index() as usize] += m;
    }
    counts
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenitentLine {
    pub line: ProjLine,
    /// Intercept of the line within its class.
    pub alpha: Elem,
    /// Intersection size mod p.
    pub t: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectionReport {
    pub direction: Direction,
    /// The bound λ the direction was classified against.
    pub lambda: usize,
    /// Exact intersection sizes indexed by intercept.
    pub counts: Vec<u64>,
    /// Typical intersection number m_d, in `0..p`.
    pub typical: u32,
    pub renitent: Vec<RenitentLine>,
    pub sharp: bool,
}

impl DirectionReport {
    /// Number of renitent lines λ_d.
    pub fn lambda_d(&self) -> usize {
        self.renitent.len()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Uniform(DirectionReport),
    NotUniform(Direction),
}

impl Classification {
    pub fn direction(&self) -> Direction {
        match self {
            Classification::Uniform(r) => r.direction,
            Classification::NotUniform(d) => *d,
        }
    }

    pub fn report(&self) -> Option<&DirectionReport> {
        match self {
            Classification::Uniform(r) => Some(r),
            Classification::NotUniform(_) => None,
        }
    }
}

pub fn check_lambda(field: &Field, lambda: usize) -> Result<(), UniformityError> {
    let max = (field.q() as usize - 1) / 2;
    if lambda == 0 || lambda > max {
        return Err(UniformityError::LambdaOutOfRange { lambda, max });
    }
    Ok(())
}

/// Classifies `d` against the bound λ.
///
/// The residue class with at least `q - λ` lines is unique because
/// `q - λ > q / 2`.
pub fn classify_direction(
    t: &PointMultiset,
    d: Direction,
    lambda: usize,
) -> Result<Classification, UniformityError> {
    let f = t.field();
    check_lambda(f, lambda)?;
    let q = f.q() as usize;
    let p = f.p() as u64;
    let counts = intercept_profile(t, d);
    let mut hist = vec![0usize; p as usize];
    for &c in &counts {
        hist[(c % p) as usize] += 1;
    }
    let mut candidates = hist.iter().enumerate().filter(|&(_, &n)| n >= q - lambda);
    let Some((typical, &n_typical)) = candidates.next() else {
        return Ok(Classification::NotUniform(d));
    };
    debug_assert!(candidates.next().is_none());
    let typical = typical as u32;
    let renitent = counts
        .iter()
        .enumerate()
        .filter(|&(_, &c)| (c % p) as u32 != typical)
        .map(|(i, &c)| {
            let alpha = Elem::from_index_unchecked(i as u32);
            RenitentLine { line: d.line(f, alpha), alpha, t: (c % p) as u32 }
        })
        .collect();
    Ok(Classification::Uniform(DirectionReport {
        direction: d,
        lambda,
        counts,
        typical,
        renitent,
        sharp: n_typical == q - lambda,
    }))
}

/// Classification of all q + 1 directions in index order.
pub fn classify_all(t: &PointMultiset, lambda: usize) -> Result<Vec<Classification>, UniformityError> {
    Direction::all(t.field()).into_iter().map(|d| classify_direction(t, d, lambda)).collect()
}

/// Reports for every (q-λ)-uniform direction, in direction index order.
pub fn uniform_directions(t: &PointMultiset, lambda: usize) -> Result<Vec<DirectionReport>, UniformityError> {
    Ok(classify_all(t, lambda)?
        .into_iter()
        .filter_map(|c| match c {
            Classification::Uniform(r) => Some(r),
            Classification::NotUniform(_) => None,
        })
        .collect())
}

/// The common point of the given lines, if there is exactly one.
pub fn concurrency_point(field: &Field, lines: &[ProjLine]) -> Result<Option<ProjPoint>, UniformityError> {
    if lines.len() < 2 {
        return Err(UniformityError::FewerThanTwoLines);
    }
    let Some(other) = lines.iter().find(|l| **l != lines[0]) else {
        return Ok(None);
    };
    let p = match meet(field, &lines[0], other) {
        Ok(p) => p,
        Err(PlaneError::EqualPoints) => return Ok(None),
        Err(e) => unreachable!("meet only fails on equal lines: {e}"),
    };
    Ok(lines.iter().all(|l| incident(field, &p, l)).then_some(p))
}
