//! Points, lines and collineations of PG(2,q).
//!
//! Affine points are `(a:b:1)`, the direction of slope `d` is `(1:d:0)` and
//! the vertical direction is `(0:1:0)`. The line at infinity is `[0:0:1]`,
//! the Y-axis `[1:0:0]`, and the line of slope `d` meeting the Y-axis at
//! `(0:t:1)` is `[d:-1:t]`. Homogeneous triples are stored with their last
//! nonzero coordinate scaled to 1.

use std::fmt;

use thiserror::Error;

use crate::gf::{Elem, Field};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlaneError {
    #[error("homogeneous coordinates must not all vanish")]
    AllZero,
    #[error("points coincide")]
    EqualPoints,
    #[error("point is not on the line at infinity")]
    NotADirection,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("no suitable collineation: {0}")]
    CollineationFailure(String),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("coordinate {0} outside the field")]
    OutOfField(u32),
}

fn canonical(field: &Field, v: [Elem; 3]) -> Result<[Elem; 3], PlaneError> {
    let last = v.iter().rposition(|c| !c.is_zero()).ok_or(PlaneError::AllZero)?;
    let s = field.inv(v[last]).expect("nonzero");
    Ok(v.map(|c| field.mul(c, s)))
}

fn dot(field: &Field, a: &[Elem; 3], b: &[Elem; 3]) -> Elem {
    (0..3).fold(Elem::ZERO, |acc, i| field.add(acc, field.mul(a[i], b[i])))
}

fn cross(field: &Field, a: &[Elem; 3], b: &[Elem; 3]) -> [Elem; 3] {
    let m = |x, y| field.mul(x, y);
    [
        field.sub(m(a[1], b[2]), m(a[2], b[1])),
        field.sub(m(a[2], b[0]), m(a[0], b[2])),
        field.sub(m(a[0], b[1]), m(a[1], b[0])),
    ]
}

/// A point of PG(2,q) in canonical coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint([Elem; 3]);

/// A line of PG(2,q) in canonical coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjLine([Elem; 3]);

/// A point of the line at infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    /// `(1:d:0)`, carrying the lines of slope `d`.
    Slope(Elem),
    /// `(0:1:0)`, carrying the vertical lines.
    Vertical,
}

impl Direction {
    /// Slopes come first in element order, the vertical direction is `q`.
    pub fn index(self, field: &Field) -> u32 {
        match self {
            Direction::Slope(d) => d.index(),
            Direction::Vertical => field.q(),
        }
    }

    pub fn from_index(field: &Field, i: u32) -> Option<Direction> {
        match i.cmp(&field.q()) {
            std::cmp::Ordering::Less => Some(Direction::Slope(Elem::from_index_unchecked(i))),
            std::cmp::Ordering::Equal => Some(Direction::Vertical),
            std::cmp::Ordering::Greater => None,
        }
    }

    /// All q + 1 directions in index order.
    pub fn all(field: &Field) -> Vec<Direction> {
        field.elements().map(Direction::Slope).chain(std::iter::once(Direction::Vertical)).collect()
    }

    pub fn point(self, field: &Field) -> ProjPoint {
        match self {
            Direction::Slope(d) => ProjPoint::new(field, [Elem::ONE, d, Elem::ZERO]).expect("nonzero"),
            Direction::Vertical => ProjPoint([Elem::ZERO, Elem::ONE, Elem::ZERO]),
        }
    }

    /// The affine line of this class with intercept `t`: `[d:-1:t]`, or the
    /// vertical line `x = t`.
    pub fn line(self, field: &Field, t: Elem) -> ProjLine {
        match self {
            Direction::Slope(d) => ProjLine::new(field, [d, field.neg(Elem::ONE), t]).expect("nonzero"),
            Direction::Vertical => ProjLine::new(field, [Elem::ONE, Elem::ZERO, field.neg(t)]).expect("nonzero"),
        }
    }

    /// Intercept of the class line through the affine point `(a, b)`.
    pub fn intercept(self, field: &Field, a: Elem, b: Elem) -> Elem {
        match self {
            Direction::Slope(d) => field.sub(b, field.mul(a, d)),
            Direction::Vertical => a,
        }
    }

    pub fn parse(field: &Field, s: &str) -> Result<Direction, PlaneError> {
        let rest = s.trim().strip_prefix("inf:").ok_or_else(|| PlaneError::Parse(s.to_string()))?;
        if rest == "vert" {
            return Ok(Direction::Vertical);
        }
        let d: u32 = rest.parse().map_err(|_| PlaneError::Parse(s.to_string()))?;
        Ok(Direction::Slope(field.elem(d).map_err(|_| PlaneError::OutOfField(d))?))
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Slope(d) => write!(f, "inf:{d}"),
            Direction::Vertical => write!(f, "inf:vert"),
        }
    }
}

impl ProjPoint {
    pub fn new(field: &Field, v: [Elem; 3]) -> Result<ProjPoint, PlaneError> {
        canonical(field, v).map(ProjPoint)
    }

    pub fn affine(a: Elem, b: Elem) -> ProjPoint {
        ProjPoint([a, b, Elem::ONE])
    }

    pub fn coords(&self) -> [Elem; 3] {
        self.0
    }

    pub fn affine_coords(&self) -> Option<(Elem, Elem)> {
        (self.0[2] == Elem::ONE).then_some((self.0[0], self.0[1]))
    }

    pub fn direction(&self, field: &Field) -> Option<Direction> {
        if !self.0[2].is_zero() {
            return None;
        }
        if self.0[0].is_zero() {
            Some(Direction::Vertical)
        } else {
            Some(Direction::Slope(field.div(self.0[1], self.0[0]).expect("nonzero")))
        }
    }

    /// Every point of PG(2,q): affine points `(a, b)` row by row, then the
    /// directions in index order.
    pub fn all(field: &Field) -> Vec<ProjPoint> {
        let mut out: Vec<ProjPoint> =
            field.elements().flat_map(|a| field.elements().map(move |b| ProjPoint::affine(a, b))).collect();
        out.extend(Direction::all(field).into_iter().map(|d| d.point(field)));
        out
    }

    pub fn parse(field: &Field, s: &str) -> Result<ProjPoint, PlaneError> {
        let s = s.trim();
        if s.starts_with("inf:") {
            return Direction::parse(field, s).map(|d| d.point(field));
        }
        let (a, b) = s.split_once(',').ok_or_else(|| PlaneError::Parse(s.to_string()))?;
        let parse = |t: &str| -> Result<Elem, PlaneError> {
            let i: u32 = t.trim().parse().map_err(|_| PlaneError::Parse(s.to_string()))?;
            field.elem(i).map_err(|_| PlaneError::OutOfField(i))
        };
        Ok(ProjPoint::affine(parse(a)?, parse(b)?))
    }

    pub fn display(&self, field: &Field) -> String {
        match (self.affine_coords(), self.direction(field)) {
            (Some((a, b)), _) => format!("{a},{b}"),
            (None, Some(d)) => d.to_string(),
            (None, None) => unreachable!("canonical points are affine or at infinity"),
        }
    }
}

impl ProjLine {
    pub fn new(field: &Field, v: [Elem; 3]) -> Result<ProjLine, PlaneError> {
        canonical(field, v).map(ProjLine)
    }

    pub fn infinity() -> ProjLine {
        ProjLine([Elem::ZERO, Elem::ZERO, Elem::ONE])
    }

    pub fn y_axis() -> ProjLine {
        ProjLine([Elem::ONE, Elem::ZERO, Elem::ZERO])
    }

    pub fn coords(&self) -> [Elem; 3] {
        self.0
    }

    pub fn is_infinity(&self) -> bool {
        *self == ProjLine::infinity()
    }

    /// The point where the line meets the line at infinity.
    pub fn direction(&self, field: &Field) -> Option<Direction> {
        if self.is_infinity() {
            return None;
        }
        let [a, b, _] = self.0;
        ProjPoint::new(field, [b, field.neg(a), Elem::ZERO]).ok()?.direction(field)
    }

    pub fn all(field: &Field) -> Vec<ProjLine> {
        ProjPoint::all(field).into_iter().map(|p| ProjLine(p.0)).collect()
    }

    pub fn parse(field: &Field, s: &str) -> Result<ProjLine, PlaneError> {
        let bad = || PlaneError::Parse(s.to_string());
        let inner = s.trim().strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(bad)?;
        let parts: Vec<&str> = inner.split(':').collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let mut v = [Elem::ZERO; 3];
        for (slot, t) in v.iter_mut().zip(parts) {
            let i: u32 = t.trim().parse().map_err(|_| bad())?;
            *slot = field.elem(i).map_err(|_| PlaneError::OutOfField(i))?;
        }
        ProjLine::new(field, v)
    }
}

impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:{}]", self.0[0], self.0[1], self.0[2])
    }
}

pub fn incident(field: &Field, p: &ProjPoint, l: &ProjLine) -> bool {
    dot(field, &p.0, &l.0).is_zero()
}

pub fn line_through(field: &Field, p: &ProjPoint, q: &ProjPoint) -> Result<ProjLine, PlaneError> {
    ProjLine::new(field, cross(field, &p.0, &q.0)).map_err(|_| PlaneError::EqualPoints)
}

/// Common point of two distinct lines.
pub fn meet(field: &Field, l: &ProjLine, m: &ProjLine) -> Result<ProjPoint, PlaneError> {
    ProjPoint::new(field, cross(field, &l.0, &m.0)).map_err(|_| PlaneError::EqualPoints)
}

/// The q affine lines through a direction, ordered by intercept.
pub fn parallel_class(field: &Field, d: &ProjPoint) -> Result<Vec<ProjLine>, PlaneError> {
    let dir = d.direction(field).ok_or(PlaneError::NotADirection)?;
    Ok(field.elements().map(|t| dir.line(field, t)).collect())
}

/// An invertible 3x3 matrix acting on column vectors of point coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Collineation {
    matrix: [[Elem; 3]; 3],
    inverse: [[Elem; 3]; 3],
}

impl Collineation {
    pub fn new(field: &Field, matrix: [[Elem; 3]; 3]) -> Result<Collineation, PlaneError> {
        let m = &matrix;
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| {
            field.sub(field.mul(m[r0][c0], m[r1][c1]), field.mul(m[r0][c1], m[r1][c0]))
        };
        // adjugate = transpose of cofactor matrix
        let adj = [
            [cof(1, 2, 1, 2), field.neg(cof(0, 2, 1, 2)), cof(0, 1, 1, 2)],
            [field.neg(cof(1, 2, 0, 2)), cof(0, 2, 0, 2), field.neg(cof(0, 1, 0, 2))],
            [cof(1, 2, 0, 1), field.neg(cof(0, 2, 0, 1)), cof(0, 1, 0, 1)],
        ];
        let det = (0..3).fold(Elem::ZERO, |acc, c| field.add(acc, field.mul(m[0][c], adj[c][0])));
        let det_inv = field.inv(det).map_err(|_| PlaneError::SingularMatrix)?;
        let inverse = adj.map(|row| row.map(|x| field.mul(x, det_inv)));
        Ok(Collineation { matrix, inverse })
    }

    pub fn identity() -> Collineation {
        let (o, z) = (Elem::ONE, Elem::ZERO);
        let id = [[o, z, z], [z, o, z], [z, z, o]];
        Collineation { matrix: id, inverse: id }
    }

    pub fn matrix(&self) -> [[Elem; 3]; 3] {
        self.matrix
    }

    /// `self` after `first`.
    pub fn compose(&self, field: &Field, first: &Collineation) -> Collineation {
        let mul = |a: &[[Elem; 3]; 3], b: &[[Elem; 3]; 3]| {
            let mut out = [[Elem::ZERO; 3]; 3];
            for (r, row) in out.iter_mut().enumerate() {
                for (c, slot) in row.iter_mut().enumerate() {
                    *slot = (0..3).fold(Elem::ZERO, |acc, k| field.add(acc, field.mul(a[r][k], b[k][c])));
                }
            }
            out
        };
        Collineation { matrix: mul(&self.matrix, &first.matrix), inverse: mul(&first.inverse, &self.inverse) }
    }

    pub fn apply_point(&self, field: &Field, p: &ProjPoint) -> ProjPoint {
        let v = self.matrix.map(|row| dot(field, &row, &p.0));
        ProjPoint::new(field, v).expect("invertible map")
    }

    /// Lines transform by the inverse transpose.
    pub fn apply_line(&self, field: &Field, l: &ProjLine) -> ProjLine {
        let v = [0, 1, 2].map(|c| (0..3).fold(Elem::ZERO, |acc, r| field.add(acc, field.mul(self.inverse[r][c], l.0[r]))));
        ProjLine::new(field, v).expect("invertible map")
    }

    pub fn inverse_point(&self, field: &Field, p: &ProjPoint) -> ProjPoint {
        let v = self.inverse.map(|row| dot(field, &row, &p.0));
        ProjPoint::new(field, v).expect("invertible map")
    }
}

/// A collineation sending the line at infinity to the Y-axis and the affine
/// point `r` to some `(1:y0:0)`, such that no direction in `avoid` lands on
/// `(0:1:0)`.
///
/// Built as translation of `r` to the origin, then a coordinate swap or
/// shear moving the first direction (by index) outside `avoid` onto the
/// vertical direction, then the swap `x <-> z`. Fails when `r` is at
/// infinity or when `avoid` contains every direction.
pub fn pick_index_frame_collineation(
    field: &Field,
    avoid: &[Direction],
    r: &ProjPoint,
) -> Result<Collineation, PlaneError> {
    let (r1, r2) = r
        .affine_coords()
        .ok_or_else(|| PlaneError::CollineationFailure("a point at infinity stays on the image of the line at infinity".into()))?;
    let spare = Direction::all(field)
        .into_iter()
        .find(|d| !avoid.contains(d))
        .ok_or_else(|| PlaneError::CollineationFailure("every direction must be avoided".into()))?;
    let (o, z) = (Elem::ONE, Elem::ZERO);
    let translate = Collineation::new(field, [[o, z, field.neg(r1)], [z, o, field.neg(r2)], [z, z, o]])?;
    let straighten = match spare {
        Direction::Vertical => Collineation::identity(),
        Direction::Slope(s) if s.is_zero() => Collineation::new(field, [[z, o, z], [o, z, z], [z, z, o]])?,
        Direction::Slope(s) => {
            let shear = field.neg(field.inv(s).expect("nonzero slope"));
            Collineation::new(field, [[o, shear, z], [z, o, z], [z, z, o]])?
        }
    };
    let swap = Collineation::new(field, [[z, z, o], [z, o, z], [o, z, z]])?;
    let t = swap.compose(field, &straighten.compose(field, &translate));

    debug_assert_eq!(t.apply_line(field, &ProjLine::infinity()), ProjLine::y_axis());
    debug_assert!(t.apply_point(field, r).coords()[2].is_zero());
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: u32) -> Elem {
        Elem::from_index_unchecked(i)
    }

    #[test]
    fn incidence_examples() {
        let f = Field::prime(5).unwrap();
        assert!(incident(&f, &ProjPoint::affine(e(0), e(0)), &ProjLine::y_axis()));
        for d in f.elements() {
            assert!(incident(&f, &Direction::Slope(d).point(&f), &ProjLine::infinity()));
        }
        for (a, b, d) in [(1, 2, 3), (4, 0, 2), (0, 3, 1)] {
            let (a, b, d) = (e(a), e(b), e(d));
            let l = ProjLine::new(&f, [d, f.neg(Elem::ONE), f.sub(b, f.mul(a, d))]).unwrap();
            assert!(incident(&f, &ProjPoint::affine(a, b), &l));
        }
    }

    #[test]
    fn joining_lines() {
        let f = Field::prime(7).unwrap();
        let (a, b, d) = (e(3), e(5), e(2));
        let l = line_through(&f, &Direction::Slope(d).point(&f), &ProjPoint::affine(a, b)).unwrap();
        let expected = ProjLine::new(&f, [d, f.neg(Elem::ONE), f.sub(b, f.mul(a, d))]).unwrap();
        assert_eq!(l, expected);
        let x_axis = line_through(&f, &ProjPoint::affine(e(0), e(0)), &ProjPoint::affine(e(1), e(0))).unwrap();
        assert_eq!(x_axis, ProjLine::new(&f, [e(0), e(1), e(0)]).unwrap());
        let p = ProjPoint::affine(e(1), e(1));
        assert_eq!(line_through(&f, &p, &p), Err(PlaneError::EqualPoints));
    }

    #[test]
    fn horizontal_class() {
        let f = Field::prime(3).unwrap();
        let class = parallel_class(&f, &Direction::Slope(e(0)).point(&f)).unwrap();
        let expected: Vec<ProjLine> =
            f.elements().map(|t| ProjLine::new(&f, [e(0), f.neg(Elem::ONE), t]).unwrap()).collect();
        assert_eq!(class, expected);
        assert_eq!(parallel_class(&f, &ProjPoint::affine(e(0), e(0))), Err(PlaneError::NotADirection));
    }

    #[test]
    fn parallel_classes_partition_plane() {
        let f = Field::with_order(4).unwrap();
        for d in Direction::all(&f) {
            let class = parallel_class(&f, &d.point(&f)).unwrap();
            for (i, l) in class.iter().enumerate() {
                for m in &class[i + 1..] {
                    assert_eq!(meet(&f, l, m).unwrap(), d.point(&f));
                }
            }
            for p in ProjPoint::all(&f).iter().filter(|p| p.affine_coords().is_some()) {
                assert_eq!(class.iter().filter(|l| incident(&f, p, l)).count(), 1);
            }
        }
    }

    #[test]
    fn plane_counts() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = Field::with_order(q).unwrap();
            let points = ProjPoint::all(&f);
            let lines = ProjLine::all(&f);
            assert_eq!(points.len() as u32, q * q + q + 1);
            for l in &lines {
                assert_eq!(points.iter().filter(|p| incident(&f, p, l)).count() as u32, q + 1);
            }
            if q <= 5 {
                for (i, l) in lines.iter().enumerate() {
                    for m in &lines[i + 1..] {
                        assert_eq!(points.iter().filter(|p| incident(&f, p, l) && incident(&f, p, m)).count(), 1);
                    }
                }
            }
        }
    }

    #[test]
    fn swap_xz_maps_infinity_to_y_axis() {
        let f = Field::prime(5).unwrap();
        let (o, z) = (Elem::ONE, Elem::ZERO);
        let swap = Collineation::new(&f, [[z, z, o], [z, o, z], [o, z, z]]).unwrap();
        assert_eq!(swap.apply_line(&f, &ProjLine::infinity()), ProjLine::y_axis());
        let id = Collineation::identity();
        let p = ProjPoint::affine(e(2), e(3));
        assert_eq!(id.apply_point(&f, &p), p);
        let singular = [[o, o, z], [o, o, z], [z, z, o]];
        assert_eq!(Collineation::new(&f, singular), Err(PlaneError::SingularMatrix));
    }

    #[test]
    fn collineation_preserves_incidence_q3() {
        let f = Field::prime(3).unwrap();
        let m = [[e(1), e(2), e(0)], [e(0), e(1), e(1)], [e(2), e(0), e(1)]];
        let t = Collineation::new(&f, m).unwrap();
        let points = ProjPoint::all(&f);
        let lines = ProjLine::all(&f);
        for p in &points {
            assert_eq!(t.inverse_point(&f, &t.apply_point(&f, p)), *p);
            for l in &lines {
                assert_eq!(incident(&f, p, l), incident(&f, &t.apply_point(&f, p), &t.apply_line(&f, l)));
            }
        }
    }

    #[test]
    fn index_frame_collineation_postconditions() {
        let f = Field::prime(5).unwrap();
        let dirs = Direction::all(&f);
        let vertical = ProjPoint::new(&f, [e(0), e(1), e(0)]).unwrap();
        for skip in 0..dirs.len() {
            let avoid: Vec<Direction> = dirs.iter().copied().enumerate().filter(|&(i, _)| i != skip).map(|(_, d)| d).collect();
            for r in ProjPoint::all(&f).into_iter().filter(|p| p.affine_coords().is_some()) {
                let t = pick_index_frame_collineation(&f, &avoid, &r).unwrap();
                assert_eq!(t.apply_line(&f, &ProjLine::infinity()), ProjLine::y_axis());
                let img = t.apply_point(&f, &r).coords();
                assert!(img[2].is_zero() && img[0] == Elem::ONE);
                for d in &avoid {
                    assert_ne!(t.apply_point(&f, &d.point(&f)), vertical);
                }
                assert_eq!(t, pick_index_frame_collineation(&f, &avoid, &r).unwrap());
            }
        }
    }

    #[test]
    fn index_frame_collineation_impossible_cases() {
        let f = Field::prime(3).unwrap();
        let all = Direction::all(&f);
        let r_inf = Direction::Slope(e(1)).point(&f);
        assert!(matches!(pick_index_frame_collineation(&f, &[], &r_inf), Err(PlaneError::CollineationFailure(_))));
        let origin = ProjPoint::affine(e(0), e(0));
        assert!(matches!(pick_index_frame_collineation(&f, &all, &origin), Err(PlaneError::CollineationFailure(_))));
    }

    #[test]
    fn text_forms() {
        let f = Field::prime(7).unwrap();
        assert_eq!(ProjPoint::parse(&f, "3,4").unwrap(), ProjPoint::affine(e(3), e(4)));
        assert_eq!(ProjPoint::parse(&f, "inf:vert").unwrap().display(&f), "inf:vert");
        assert_eq!(ProjPoint::parse(&f, "inf:5").unwrap().display(&f), "inf:5");
        assert_eq!(ProjLine::parse(&f, "[2:6:1]").unwrap().to_string(), "[2:6:1]");
        assert_eq!(ProjLine::parse(&f, "[0:0:3]").unwrap(), ProjLine::infinity());
        assert!(ProjPoint::parse(&f, "9,1").is_err());
        assert!(ProjLine::parse(&f, "[0:0:0]").is_err());
    }
}
