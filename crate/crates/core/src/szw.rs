//! Counting renitent lines through gcd degrees of specialized bivariate
//! polynomials.
//!
//! For `f, g ∈ GF(q)[X, Y]` with `X^{deg f}` appearing in `f`, write
//! `k_y = deg gcd(f(X, y), g(X, y))`. The Szőnyi–Weiner inequality states
//!
//! ```text
//! Σ_y (k_y - k_{y0})^+ <= (deg f - k_{y0}) (deg g - k_{y0})
//! ```
//!
//! for every `y0`. Two constructions turn renitent line
//! counts into such gcd degrees; each is checked against the combinatorial
//! count taken straight from the direction reports.

use thiserror::Error;

use crate::gf::{Elem, Field};
use crate::plane::{incident, pick_index_frame_collineation, Collineation, Direction, PlaneError, ProjLine, ProjPoint};
use crate::poly::{uni_gcd, BiPoly, UniPoly};
use crate::uniformity::{uniform_directions, DirectionReport, PointMultiset, UniformityError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SzwError {
    #[error("f must be nonzero with a nonzero constant coefficient at X^deg f")]
    BadLeadingCoefficient,
    #[error("{count} directions given, at most q = {q} allowed")]
    TooManyDirections { count: usize, q: u32 },
    #[error("the vertical direction (0:1:0) must not be in the direction set")]
    VerticalDirectionPresent,
    #[error("no sharply uniform direction among the reports")]
    NoSharpDirection,
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("no suitable collineation: {0}")]
    CollineationFailure(String),
    #[error(transparent)]
    Uniformity(#[from] UniformityError),
}

impl From<PlaneError> for SzwError {
    fn from(e: PlaneError) -> Self {
        match e {
            PlaneError::CollineationFailure(msg) => SzwError::CollineationFailure(msg),
            other => SzwError::CollineationFailure(other.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdProfile {
    pub f: BiPoly,
    pub g: BiPoly,
    /// `k_y`, indexed by the element index of `y`.
    pub k: Vec<usize>,
}

impl GcdProfile {
    pub fn field(&self) -> &Field {
        self.f.field()
    }

    pub fn deg_f(&self) -> usize {
        self.f.total_degree().expect("f is nonzero")
    }

    /// Total degree of `g`, 0 for the zero polynomial.
    pub fn deg_g(&self) -> usize {
        self.g.total_degree().unwrap_or(0)
    }

    pub fn k_at(&self, y: Elem) -> usize {
        self.k[y.index() as usize]
    }
}

/// `k_y` for every `y`; when `g(X, y)` vanishes, `k_y = deg f`.
pub fn gcd_profile(f: &BiPoly, g: &BiPoly) -> Result<GcdProfile, SzwError> {
    let deg = f.total_degree().ok_or(SzwError::BadLeadingCoefficient)?;
    if f.coeff(deg, 0).is_zero() {
        return Err(SzwError::BadLeadingCoefficient);
    }
    let field = f.field();
    let k = field
        .elements()
        .map(|y| {
            let gy = g.eval_second(y);
            if gy.is_zero() {
                return deg;
            }
            let fy = f.eval_second(y);
            uni_gcd(&fy, &gy).expect("g(X, y) nonzero").degree().unwrap_or(0)
        })
        .collect();
    Ok(GcdProfile { f: f.clone(), g: g.clone(), k })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SzwCheck {
    pub y0: Elem,
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
}

impl SzwCheck {
    pub fn slack(&self) -> i64 {
        self.rhs - self.lhs
    }
}

pub fn szw_inequality_check(profile: &GcdProfile, y0: Elem) -> SzwCheck {
    let k0 = profile.k_at(y0) as i64;
    let lhs = profile.k.iter().map(|&k| (k as i64 - k0).max(0)).sum();
    let rhs = (profile.deg_f() as i64 - k0) * (profile.deg_g() as i64 - k0);
    SzwCheck { y0, lhs, rhs, pass: lhs <= rhs }
}

/// The inequality at every `y0`.
pub fn szw_check_all(profile: &GcdProfile) -> Vec<SzwCheck> {
    profile.field().elements().map(|y0| szw_inequality_check(profile, y0)).collect()
}

/// `C(n, k) mod p` by Lucas' theorem.
fn binom_mod(mut n: u64, mut k: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while n > 0 || k > 0 {
        let (ni, ki) = (n % p, k % p);
        if ki > ni {
            return 0;
        }
        let mut c = 1u64;
        for i in 0..ki {
            c = c * (ni - i) % p;
        }
        for i in 1..=ki {
            c = c * crate::gf::prime_poly::inv_mod(i as u32, p as u32) as u64 % p;
        }
        acc = acc * c % p;
        n /= p;
        k /= p;
    }
    acc
}

/// Dense coefficient accumulator for `X^i Y^j`, `i, j < q`.
struct Grid {
    field: Field,
    cells: Vec<Vec<Elem>>,
}

impl Grid {
    fn new(field: &Field) -> Grid {
        let q = field.q() as usize;
        Grid { field: field.clone(), cells: vec![vec![Elem::ZERO; q]; q] }
    }

    fn add(&mut self, i: usize, j: usize, c: Elem) {
        let cell = &mut self.cells[i][j];
        *cell = self.field.add(*cell, c);
    }

    /// Adds `w (X + a Y - b)^{q-1}`.
    fn add_line_power(&mut self, w: Elem, a: Elem, b: Elem) {
        let f = self.field.clone();
        let n = f.q() as u64 - 1;
        let z = UniPoly::linear(&f, f.neg(b), a);
        let mut zpow = vec![UniPoly::one(&f)];
        for _ in 0..n {
            let next = zpow.last().expect("nonempty") * &z;
            zpow.push(next);
        }
        for k in 0..=n {
            let c = f.mul(w, f.from_int(binom_mod(n, k, f.p() as u64) as i64));
            if c.is_zero() {
                continue;
            }
            for (j, &zc) in zpow[(n - k) as usize].coeffs().iter().enumerate() {
                self.add(k as usize, j, f.mul(c, zc));
            }
        }
    }

    /// Adds `w p(X)` when `in_x`, else `w p(Y)`.
    fn add_uni(&mut self, w: Elem, p: &UniPoly, in_x: bool) {
        for (k, &c) in p.coeffs().iter().enumerate() {
            let c = self.field.mul(w, c);
            if in_x {
                self.add(k, 0, c);
            } else {
                self.add(0, k, c);
            }
        }
    }

    fn finish(self) -> BiPoly {
        BiPoly::new(&self.field, self.cells)
    }
}

fn residue_elem(field: &Field, m: u64) -> Elem {
    field.from_int((m % field.p() as u64) as i64)
}

/// `Σ_k m_k (1 - (Z - c_k)^{q-1})` for `(c_k, m_k)`.
fn indicator_sum(field: &Field, points: &[(Elem, u32)]) -> UniPoly {
    let n = field.q() as u64 - 1;
    points.iter().fold(UniPoly::zero(field), |acc, &(c, m)| {
        let ind = &UniPoly::one(field) - &UniPoly::linear(field, field.neg(c), Elem::ONE).pow(n);
        &acc + &ind.scale(residue_elem(field, m as u64))
    })
}

/// Output of the construction in the original frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultantPair {
    pub f: BiPoly,
    pub g: BiPoly,
    pub h: UniPoly,
}

fn slope_directions(field: &Field, reports: &[DirectionReport]) -> Result<Vec<(Elem, u32)>, SzwError> {
    if reports.len() > field.q() as usize {
        return Err(SzwError::TooManyDirections { count: reports.len(), q: field.q() });
    }
    reports
        .iter()
        .map(|r| match r.direction {
            Direction::Slope(d) => Ok((d, r.typical)),
            Direction::Vertical => Err(SzwError::VerticalDirectionPresent),
        })
        .collect()
}

/// `f = X^q - X` and `g = Σ_i (X + a_i Y - b_i)^{q-1} - |T| + h(Y)` with
/// `h(Y) = Σ_k m_k (1 - (Y - d_k)^{q-1})`, so that `g(x, y)` is
/// `m_y - |ℓ ∩ T| (mod p)` for the line ℓ of slope `y ∈ E` and intercept `x`.
pub fn build_point_count_pair(t: &PointMultiset, reports: &[DirectionReport]) -> Result<ResultantPair, SzwError> {
    let field = t.field();
    let dirs = slope_directions(field, reports)?;
    let h = indicator_sum(field, &dirs);
    let mut grid = Grid::new(field);
    for (a, b, m) in t.iter() {
        grid.add_line_power(residue_elem(field, m), a, b);
    }
    grid.add(0, 0, field.neg(residue_elem(field, t.size())));
    grid.add_uni(Elem::ONE, &h, false);
    let f = BiPoly::from_first(&UniPoly::field_polynomial(field));
    Ok(ResultantPair { f, g: grid.finish(), h })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectionCount {
    pub direction: Direction,
    /// λ_d from the report.
    pub combinatorial: usize,
    /// `q - k_d` from the gcd profile.
    pub from_gcd: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenitentBoundReport {
    pub lambda: usize,
    pub directions: usize,
    /// Σ λ_d over the direction set.
    pub count: usize,
    /// `λ (|E| + 1 - λ)`.
    pub bound: usize,
    /// Σ (λ - λ_d).
    pub deficiency: usize,
    pub per_direction: Vec<DirectionCount>,
    /// The inequality at a sharply uniform direction.
    pub szw: SzwCheck,
    pub pass: bool,
}

impl RenitentBoundReport {
    pub fn counts_agree(&self) -> bool {
        self.per_direction.iter().all(|c| c.combinatorial == c.from_gcd)
    }
}

/// At least `λ(|E| + 1 - λ)` renitent lines over `E`, where λ is the number
/// of renitent lines of a sharply uniform direction.
pub fn renitent_lower_bound_check(
    t: &PointMultiset,
    reports: &[DirectionReport],
) -> Result<RenitentBoundReport, SzwError> {
    let field = t.field();
    let sharp = reports.iter().find(|r| r.sharp).ok_or(SzwError::NoSharpDirection)?;
    let lambda = sharp.lambda_d();
    let pair = build_point_count_pair(t, reports)?;
    let profile = gcd_profile(&pair.f, &pair.g)?;
    let q = field.q() as usize;
    let per_direction: Vec<DirectionCount> = reports
        .iter()
        .map(|r| {
            let Direction::Slope(d) = r.direction else { unreachable!("checked by build_point_count_pair") };
            DirectionCount { direction: r.direction, combinatorial: r.lambda_d(), from_gcd: q - profile.k_at(d) }
        })
        .collect();
    let count = per_direction.iter().map(|c| c.combinatorial).sum();
    let n = reports.len();
    let bound = lambda * (n + 1).saturating_sub(lambda);
    let deficiency = reports.iter().map(|r| lambda.saturating_sub(r.lambda_d())).sum();
    let Direction::Slope(y0) = sharp.direction else { unreachable!("checked by build_point_count_pair") };
    let szw = szw_inequality_check(&profile, y0);
    let agree = per_direction.iter().all(|c| c.combinatorial == c.from_gcd);
    Ok(RenitentBoundReport {
        lambda,
        directions: n,
        count,
        bound,
        deficiency,
        per_direction,
        pass: count >= bound && agree && szw.pass,
        szw,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexReport {
    pub point: ProjPoint,
    /// Number of renitent lines through the point.
    pub index: usize,
    pub lines: Vec<ProjLine>,
}

/// Renitent lines of the reports incident with `r`.
pub fn index_of_point(field: &Field, reports: &[DirectionReport], r: &ProjPoint) -> IndexReport {
    let lines: Vec<ProjLine> = reports
        .iter()
        .flat_map(|rep| rep.renitent.iter())
        .filter(|x| incident(field, r, &x.line))
        .map(|x| x.line)
        .collect();
    IndexReport { point: *r, index: lines.len(), lines }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DichotomyReport {
    pub lambda: usize,
    /// |F|, the number of (q-λ)-uniform directions.
    pub directions: usize,
    /// Every index must be at most `low` or at least `high`.
    pub low: usize,
    pub high: usize,
    /// Points of index at least `high`.
    pub heavy: Vec<IndexReport>,
    /// A point with the largest index strictly between `low` and `high`.
    pub worst: Option<IndexReport>,
    /// `histogram[i]` is the number of points of index `i`.
    pub histogram: Vec<usize>,
    pub pass: bool,
}

/// Scans every point of PG(2, q): each is on at most λ or at least
/// `|F| + 1 - λ` renitent lines, given `|F| > λ² + λ` and `q > 2`.
pub fn dichotomy_check(t: &PointMultiset, lambda: usize) -> Result<DichotomyReport, SzwError> {
    let field = t.field();
    if field.q() <= 2 {
        return Err(SzwError::HypothesisNotMet("q must exceed 2".into()));
    }
    let reports = uniform_directions(t, lambda)?;
    let n = reports.len();
    if n <= lambda * lambda + lambda {
        return Err(SzwError::HypothesisNotMet(format!(
            "{n} uniform directions, need more than λ² + λ = {}",
            lambda * lambda + lambda
        )));
    }
    let high = n + 1 - lambda;
    let mut histogram = vec![0usize; field.q() as usize + 2];
    let mut heavy = Vec::new();
    let mut worst: Option<IndexReport> = None;
    for r in ProjPoint::all(field) {
        let rep = index_of_point(field, &reports, &r);
        histogram[rep.index] += 1;
        if rep.index >= high {
            heavy.push(rep);
        } else if rep.index > lambda && worst.as_ref().is_none_or(|w| rep.index > w.index) {
            worst = Some(rep);
        }
    }
    Ok(DichotomyReport { lambda, directions: n, low: lambda, high, heavy, pass: worst.is_none(), worst, histogram })
}

/// The multiset and directions after the collineation of the point-index
/// construction. The direction points land on the line `X = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformedFrame {
    pub collineation: Collineation,
    /// Affine images `(a_i, b_i)` with multiplicity.
    pub affine: Vec<(Elem, Elem, u64)>,
    /// Images `(1:z_j:0)` at infinity with multiplicity.
    pub infinite: Vec<(Elem, u64)>,
    /// `(0:c_k:1)` with the typical number of the original direction.
    pub directions: Vec<(Elem, u32)>,
    /// `R` maps to `(1:y0:0)`.
    pub y0: Elem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointIndexConstruction {
    pub frame: TransformedFrame,
    /// `Π (X - c_k)`.
    pub f: BiPoly,
    /// `Σ (X + a_i Y - b_i)^{q-1} + Σ (Y - z_j)^{q-1} - |T| + h(X)`.
    pub g: BiPoly,
    /// `Σ m_k (1 - (X - c_k)^{q-1})`.
    pub h: UniPoly,
}

/// Moves `r` to a point `(1:y0:0)` and the line at infinity to `X = 0`, then
/// builds `f, g` with `k_y = |E| - ind(1:y:0)` in the new frame.
pub fn build_point_index_pair(
    t: &PointMultiset,
    reports: &[DirectionReport],
    r: &ProjPoint,
) -> Result<PointIndexConstruction, SzwError> {
    let field = t.field();
    if reports.len() > field.q() as usize {
        return Err(SzwError::TooManyDirections { count: reports.len(), q: field.q() });
    }
    let avoid: Vec<Direction> = reports.iter().map(|rep| rep.direction).collect();
    let col = pick_index_frame_collineation(field, &avoid, r)?;
    let mut affine = Vec::new();
    let mut infinite = Vec::new();
    for (a, b, m) in t.iter() {
        let [x, y, z] = col.apply_point(field, &ProjPoint::affine(a, b)).coords();
        if !z.is_zero() {
            affine.push((x, y, m));
        } else if y.is_zero() {
            infinite.push((Elem::ZERO, m));
        } else {
            // canonical (x:1:0) is (1:1/x:0)
            infinite.push((field.inv(x).expect("(0:1:0) is the image of a direction"), m));
        }
    }
    let directions: Vec<(Elem, u32)> = reports
        .iter()
        .map(|rep| {
            let [x, y, z] = col.apply_point(field, &rep.direction.point(field)).coords();
            debug_assert!(x.is_zero() && z == Elem::ONE);
            (y, rep.typical)
        })
        .collect();
    let [rx, ry, _] = col.apply_point(field, r).coords();
    let y0 = field.div(ry, rx).expect("image of r is off (0:1:0)");

    let h = indicator_sum(field, &directions);
    let roots: Vec<Elem> = directions.iter().map(|&(c, _)| c).collect();
    let f = BiPoly::from_first(&UniPoly::from_roots(field, &roots));
    let n = field.q() as u64 - 1;
    let mut grid = Grid::new(field);
    for &(a, b, m) in &affine {
        grid.add_line_power(residue_elem(field, m), a, b);
    }
    for &(z, m) in &infinite {
        grid.add_uni(residue_elem(field, m), &UniPoly::linear(field, field.neg(z), Elem::ONE).pow(n), false);
    }
    grid.add(0, 0, field.neg(residue_elem(field, t.size())));
    grid.add_uni(Elem::ONE, &h, true);
    Ok(PointIndexConstruction {
        frame: TransformedFrame { collineation: col, affine, infinite, directions, y0 },
        f,
        g: grid.finish(),
        h,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointIndexCheck {
    pub point: ProjPoint,
    /// `(y, k_y, |E| - ind)` for every `y`, where `ind` is counted directly
    /// at the preimage of `(1:y:0)`.
    pub rows: Vec<(Elem, usize, usize)>,
    pub szw: SzwCheck,
    /// The inequality at every `y0`, not only the image of `r`.
    pub szw_all: bool,
    pub pass: bool,
}

/// Runs [`build_point_index_pair`] at `r`, comparing every `k_y` with the direct
/// index count and checking the inequality at the image of `r`.
pub fn point_index_check(
    t: &PointMultiset,
    reports: &[DirectionReport],
    r: &ProjPoint,
) -> Result<PointIndexCheck, SzwError> {
    let field = t.field();
    let built = build_point_index_pair(t, reports, r)?;
    let profile = gcd_profile(&built.f, &built.g)?;
    let col = &built.frame.collineation;
    let rows: Vec<(Elem, usize, usize)> = field
        .elements()
        .map(|y| {
            let image = ProjPoint::new(field, [Elem::ONE, y, Elem::ZERO]).expect("nonzero");
            let pre = col.inverse_point(field, &image);
            let ind = index_of_point(field, reports, &pre).index;
            (y, profile.k_at(y), reports.len() - ind)
        })
        .collect();
    let szw = szw_inequality_check(&profile, built.frame.y0);
    let szw_all = szw_check_all(&profile).iter().all(|c| c.pass);
    let pass = szw_all && rows.iter().all(|&(_, k, expected)| k == expected);
    Ok(PointIndexCheck { point: *r, rows, szw, szw_all, pass })
}

/// The slope directions among the reports, the form the resultant
/// constructions take them in. At most q remain.
pub fn construction_directions(reports: &[DirectionReport]) -> Vec<DirectionReport> {
    reports.iter().filter(|r| r.direction != Direction::Vertical).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: u32) -> Elem {
        Elem::from_index_unchecked(i)
    }

    #[test]
    fn binomials_mod_p() {
        for p in [2u64, 3, 5, 7] {
            let mut row = vec![1u64];
            for n in 1..=30u64 {
                let mut next = vec![1u64; n as usize + 1];
                for k in 1..n as usize {
                    next[k] = (row[k - 1] + row[k]) % p;
                }
                row = next;
                for k in 0..=n {
                    assert_eq!(binom_mod(n, k, p), row[k as usize], "C({n},{k}) mod {p}");
                }
            }
        }
    }

    #[test]
    fn line_power_matches_repeated_products() {
        for q in [4u32, 5, 9] {
            let f = Field::with_order(q).unwrap();
            let (a, b) = (e(2), e(3));
            let mut grid = Grid::new(&f);
            grid.add_line_power(Elem::ONE, a, b);
            let lin = &(&BiPoly::monomial(&f, Elem::ONE, 1, 0) + &BiPoly::monomial(&f, a, 0, 1))
                - &BiPoly::constant(&f, b);
            assert_eq!(grid.finish(), lin.pow(q as u64 - 1));
        }
    }

    #[test]
    fn zero_g_gives_trivial_inequality() {
        let f = Field::prime(5).unwrap();
        let fx = BiPoly::from_first(&UniPoly::field_polynomial(&f));
        let profile = gcd_profile(&fx, &BiPoly::zero(&f)).unwrap();
        assert!(profile.k.iter().all(|&k| k == 5));
        let check = szw_inequality_check(&profile, e(0));
        assert_eq!((check.lhs, check.rhs, check.pass), (0, 0, true));
    }

    #[test]
    fn constant_in_y_profile() {
        let f = Field::prime(5).unwrap();
        let fx = &BiPoly::monomial(&f, Elem::ONE, 2, 0) - &BiPoly::constant(&f, Elem::ONE);
        let gx = &BiPoly::monomial(&f, Elem::ONE, 1, 0) - &BiPoly::constant(&f, Elem::ONE);
        let profile = gcd_profile(&fx, &gx).unwrap();
        assert!(profile.k.iter().all(|&k| k == 1));
        assert_eq!(szw_inequality_check(&profile, e(3)).lhs, 0);
    }

    #[test]
    fn leading_coefficient_required() {
        let f = Field::prime(5).unwrap();
        let xy = BiPoly::monomial(&f, Elem::ONE, 1, 1);
        assert_eq!(gcd_profile(&xy, &xy), Err(SzwError::BadLeadingCoefficient));
        assert_eq!(gcd_profile(&BiPoly::zero(&f), &xy), Err(SzwError::BadLeadingCoefficient));
    }

    #[test]
    fn single_point_bound_is_tight() {
        let f = Field::prime(7).unwrap();
        let t = PointMultiset::from_points(&f, [(e(3), e(1), 1)]).unwrap();
        let reports = construction_directions(&uniform_directions(&t, 1).unwrap());
        assert_eq!(reports.len(), 7);
        let rep = renitent_lower_bound_check(&t, &reports).unwrap();
        assert_eq!((rep.count, rep.bound), (7, 7));
        assert!(rep.pass && rep.counts_agree());
    }

    #[test]
    fn empty_set_has_no_renitent_lines() {
        let f = Field::prime(5).unwrap();
        let t = PointMultiset::new(&f);
        let reports = construction_directions(&uniform_directions(&t, 1).unwrap());
        let pair = build_point_count_pair(&t, &reports).unwrap();
        let profile = gcd_profile(&pair.f, &pair.g).unwrap();
        assert!(profile.k.iter().all(|&k| k == 5));
        assert_eq!(renitent_lower_bound_check(&t, &reports), Err(SzwError::NoSharpDirection));
    }

    #[test]
    fn single_point_indices() {
        let f = Field::prime(5).unwrap();
        let t = PointMultiset::from_points(&f, [(e(1), e(2), 1)]).unwrap();
        let reports = uniform_directions(&t, 1).unwrap();
        assert_eq!(index_of_point(&f, &reports, &ProjPoint::affine(e(1), e(2))).index, 6);
        let rep = dichotomy_check(&t, 1).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.heavy.len(), 1);
        assert_eq!(rep.heavy[0].point, ProjPoint::affine(e(1), e(2)));
    }

    #[test]
    fn point_index_frame_single_point() {
        let f = Field::prime(5).unwrap();
        let t = PointMultiset::from_points(&f, [(e(1), e(2), 1)]).unwrap();
        let reports = construction_directions(&uniform_directions(&t, 1).unwrap());
        for r in [ProjPoint::affine(e(1), e(2)), ProjPoint::affine(e(0), e(0)), ProjPoint::affine(e(4), e(2))] {
            let check = point_index_check(&t, &reports, &r).unwrap();
            assert!(check.pass, "{check:?}");
        }
        let at_infinity = Direction::Slope(e(1)).point(&f);
        assert!(matches!(point_index_check(&t, &reports, &at_infinity), Err(SzwError::CollineationFailure(_))));
    }
}
