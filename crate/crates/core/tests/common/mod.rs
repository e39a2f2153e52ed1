#![allow(dead_code)]

use renitent_core::generators::SplitMix64;
use renitent_core::plane::{Direction, ProjLine, ProjPoint};
use renitent_core::uniformity::{DirectionReport, PointMultiset, RenitentLine};
use renitent_core::{Elem, Field};

pub const SMALL_ORDERS: [u32; 10] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16];

pub fn e(i: u32) -> Elem {
    Elem::from_index_unchecked(i)
}

pub fn field(q: u32) -> Field {
    Field::with_order(q).unwrap()
}

/// A report for slope 1 with the given typical number and renitent
/// residues, intercepts 0, 1, ...
pub fn synthetic_report(f: &Field, typical: u32, ts: &[u32]) -> DirectionReport {
    synthetic_report_at(f, Direction::Slope(Elem::ONE), typical, ts)
}

pub fn synthetic_report_at(f: &Field, d: Direction, typical: u32, ts: &[u32]) -> DirectionReport {
    DirectionReport {
        direction: d,
        lambda: ts.len().max(1),
        counts: Vec::new(),
        typical,
        renitent: ts
            .iter()
            .enumerate()
            .map(|(i, &t)| RenitentLine { line: d.line(f, e(i as u32)), alpha: e(i as u32), t })
            .collect(),
        sharp: true,
    }
}

pub fn random_elem(rng: &mut SplitMix64, f: &Field) -> Elem {
    e(rng.below(f.q() as u64) as u32)
}

pub fn random_nonzero(rng: &mut SplitMix64, f: &Field) -> Elem {
    e(1 + rng.below(f.q() as u64 - 1) as u32)
}

/// Affine points of `x = 0` once each, plus `(1, 0)` once and `(1, 5)`
/// seven times, over GF(13). Every slope direction has typical number 1
/// and renitent residues {2, 8}.
pub fn thirteen_fixture() -> PointMultiset {
    let f = field(13);
    let mut t = PointMultiset::new(&f);
    for b in f.elements() {
        t.insert(Elem::ZERO, b, 1).unwrap();
    }
    t.insert(e(1), e(0), 1).unwrap();
    t.insert(e(1), e(5), 7).unwrap();
    t
}

pub fn affine_points(f: &Field) -> Vec<ProjPoint> {
    ProjPoint::all(f).into_iter().filter(|p| p.affine_coords().is_some()).collect()
}

pub fn vertical_line(f: &Field, a: Elem) -> ProjLine {
    Direction::Vertical.line(f, a)
}
