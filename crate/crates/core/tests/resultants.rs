mod common;

use common::*;
use proptest::prelude::*;
use renitent_core::generators::{gen_norm_conic, gen_planted, random_distinct_points, SplitMix64};
use renitent_core::plane::{Direction, ProjPoint};
use renitent_core::poly::{BiPoly, UniPoly};
use renitent_core::szw::{
    build_point_count_pair, build_point_index_pair, construction_directions, dichotomy_check, gcd_profile, index_of_point,
    point_index_check, renitent_lower_bound_check, szw_check_all, szw_inequality_check, SzwError,
};
use renitent_core::uniformity::{line_count, uniform_directions, PointMultiset};
use renitent_core::{Elem, Field};

/// Rank of the Sylvester matrix of `a` and `b` by Gaussian elimination.
fn sylvester_rank(f: &Field, a: &UniPoly, b: &UniPoly) -> usize {
    let (m, n) = (a.degree().unwrap(), b.degree().unwrap());
    let size = m + n;
    let mut rows: Vec<Vec<Elem>> = Vec::new();
    for shift in 0..n {
        let mut row = vec![Elem::ZERO; size];
        for (k, &c) in a.coeffs().iter().enumerate() {
            row[shift + k] = c;
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![Elem::ZERO; size];
        for (k, &c) in b.coeffs().iter().enumerate() {
            row[shift + k] = c;
        }
        rows.push(row);
    }
    let mut rank = 0;
    for col in 0..size {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, pivot);
        let inv = f.inv(rows[rank][col]).unwrap();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = f.mul(rows[r][col], inv);
                for c in 0..size {
                    let v = f.mul(factor, rows[rank][c]);
                    rows[r][c] = f.sub(rows[r][c], v);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn random_bipoly(f: &Field, rng: &mut SplitMix64, dx: usize, dy: usize) -> BiPoly {
    let grid = (0..=dx).map(|_| (0..=dy).map(|_| random_elem(rng, f)).collect()).collect();
    BiPoly::new(f, grid)
}

#[test]
fn gcd_profile_matches_sylvester_rank() {
    let f = field(7);
    let mut rng = SplitMix64::new(77);
    for _ in 0..60 {
        let common = random_bipoly(&f, &mut rng, 1, 1);
        let mut fx = &random_bipoly(&f, &mut rng, 2, 1) * &common;
        let lead = fx.total_degree().unwrap();
        fx = &fx + &BiPoly::monomial(&f, Elem::ONE, lead + 1, 0);
        let gx = &random_bipoly(&f, &mut rng, 2, 2) * &common;
        let profile = gcd_profile(&fx, &gx).unwrap();
        for y in f.elements() {
            let (a, b) = (fx.eval_second(y), gx.eval_second(y));
            let expected = if b.is_zero() {
                fx.total_degree().unwrap()
            } else if b.degree() == Some(0) {
                0
            } else {
                a.degree().unwrap() + b.degree().unwrap() - sylvester_rank(&f, &a, &b)
            };
            assert_eq!(profile.k_at(y), expected, "y = {y}");
        }
        assert!(szw_check_all(&profile).iter().all(|c| c.pass));
    }
}

#[test]
fn point_count_frame_semantics_exhaustive() {
    for q in [3u32, 4, 5, 7, 8, 9] {
        let f = field(q);
        let p = f.p() as u64;
        let mut rng = SplitMix64::new(q as u64);
        for round in 0..4 {
            let mut t = PointMultiset::new(&f);
            for _ in 0..(round * 3 + 1) {
                let (a, b) = (random_elem(&mut rng, &f), random_elem(&mut rng, &f));
                t.insert(a, b, 1 + rng.below(3)).unwrap();
            }
            let reports = construction_directions(&uniform_directions(&t, 1).unwrap());
            if reports.is_empty() {
                continue;
            }
            let pair = build_point_count_pair(&t, &reports).unwrap();
            let profile = gcd_profile(&pair.f, &pair.g).unwrap();
            for r in &reports {
                let Direction::Slope(y) = r.direction else { unreachable!() };
                for x in f.elements() {
                    let count = line_count(&t, &r.direction.line(&f, x)).unwrap();
                    let expected = f.from_int(((r.typical as u64 + p - count % p) % p) as i64);
                    assert_eq!(pair.g.eval(x, y), expected, "q={q} slope {y} intercept {x}");
                }
                assert_eq!(profile.k_at(y), q as usize - r.lambda_d());
            }
        }
    }
}

#[test]
fn planted_counts_and_slack() {
    let f = field(11);
    let pts = random_distinct_points(&f, 3, 21);
    let inst = gen_planted(&f, &pts, &[1, 1, 1]).unwrap();
    let reports = construction_directions(&uniform_directions(&inst.multiset, 3).unwrap());
    let rep = renitent_lower_bound_check(&inst.multiset, &reports).unwrap();
    assert!(rep.pass && rep.counts_agree());
    let generic = reports.iter().filter(|r| inst.generic.contains(&r.direction)).count();
    assert_eq!(rep.count, 3 * generic + 2 * (reports.len() - generic));
    assert!(rep.deficiency <= 6);
    assert!(rep.szw.slack() >= 0);

    let generic_only: Vec<_> = reports.iter().filter(|r| inst.generic.contains(&r.direction)).cloned().collect();
    let rep = renitent_lower_bound_check(&inst.multiset, &generic_only).unwrap();
    assert_eq!(rep.count, 3 * generic_only.len());
    assert!(rep.count >= rep.bound);
}

#[test]
fn vertical_direction_is_rejected() {
    let f = field(5);
    let t = gen_planted(&f, &[(e(1), e(1))], &[1]).unwrap().multiset;
    let all = uniform_directions(&t, 1).unwrap();
    assert_eq!(build_point_count_pair(&t, &all[1..]), Err(SzwError::VerticalDirectionPresent));
    assert!(matches!(build_point_count_pair(&t, &[all.clone(), all.clone()].concat()), Err(SzwError::TooManyDirections { .. })));
}

#[test]
fn index_examples() {
    let f = field(8);
    let conic = gen_norm_conic(&f).unwrap();
    let reports = uniform_directions(&conic.multiset, 1).unwrap();
    assert_eq!(index_of_point(&f, &reports, &conic.nucleus).index, 9);
    let single = gen_planted(&field(7), &[(e(2), e(2))], &[1]).unwrap().multiset;
    let g = single.field().clone();
    let reps = uniform_directions(&single, 1).unwrap();
    assert_eq!(index_of_point(&g, &reps, &ProjPoint::affine(e(2), e(2))).index, 8);
    // a direction point lies on no line of its own class other than ℓ∞
    assert_eq!(index_of_point(&g, &reps, &Direction::Slope(e(3)).point(&g)).index, 1);
    let far = gen_planted(&g, &[(e(0), e(0)), (e(1), e(0))], &[1, 1]).unwrap().multiset;
    let far_reports = uniform_directions(&far, 2).unwrap();
    let off = ProjPoint::affine(e(5), e(3));
    let ind = index_of_point(&g, &far_reports, &off).index;
    assert!(ind <= 2);
}

#[test]
fn dichotomy_examples() {
    let f = field(8);
    let conic = gen_norm_conic(&f).unwrap();
    let rep = dichotomy_check(&conic.multiset, 1).unwrap();
    assert!(rep.pass);
    assert_eq!(rep.heavy.len(), 1);
    assert_eq!(rep.heavy[0].point, conic.nucleus);
    // every other point is on at most one tangent
    assert_eq!(rep.histogram.iter().skip(2).sum::<usize>(), 1);

    let g = field(11);
    for seed in 0..4 {
        let pts = random_distinct_points(&g, 2, seed);
        let t = gen_planted(&g, &pts, &[1, 1]).unwrap().multiset;
        let rep = dichotomy_check(&t, 2).unwrap();
        assert!(rep.pass);
        let heavy: Vec<_> = rep.heavy.iter().map(|h| h.point).collect();
        assert_eq!(heavy.len(), 2);
        for (a, b) in pts {
            assert!(heavy.contains(&ProjPoint::affine(a, b)));
        }
    }
}

#[test]
fn dichotomy_hypotheses() {
    let f = field(5);
    let t = gen_planted(&f, &[(e(0), e(0)), (e(1), e(2))], &[1, 1]).unwrap().multiset;
    assert!(matches!(dichotomy_check(&t, 1), Err(SzwError::HypothesisNotMet(_))));
    let two = field(2);
    assert!(matches!(dichotomy_check(&PointMultiset::new(&two), 1), Err(SzwError::HypothesisNotMet(_))));
}

#[test]
fn point_index_frame_properties() {
    for q in [5u32, 7, 9] {
        let f = field(q);
        let pts = random_distinct_points(&f, 2, q as u64);
        let t = gen_planted(&f, &pts, &[1, 1]).unwrap().multiset;
        let reports = construction_directions(&uniform_directions(&t, 2).unwrap());
        for r in affine_points(&f) {
            let built = build_point_index_pair(&t, &reports, &r).unwrap();
            let col = &built.frame.collineation;
            let vertical = ProjPoint::new(&f, [Elem::ZERO, Elem::ONE, Elem::ZERO]).unwrap();
            for rep in &reports {
                assert_ne!(col.apply_point(&f, &rep.direction.point(&f)), vertical);
            }
            let check = point_index_check(&t, &reports, &r).unwrap();
            assert!(check.pass);
            let ind = index_of_point(&f, &reports, &r).index;
            let profile = gcd_profile(&built.f, &built.g).unwrap();
            assert_eq!(profile.k_at(built.frame.y0), reports.len() - ind);
            if ind == 0 {
                assert_eq!(profile.k_at(built.frame.y0), reports.len());
            }
        }
    }
}

#[test]
fn larger_fields_sampled() {
    for q in [11u32, 13] {
        let f = field(q);
        let mut rng = SplitMix64::new(q as u64 * 3);
        for seed in 0..2 {
            let pts = random_distinct_points(&f, 2, seed + 40);
            let t = gen_planted(&f, &pts, &[1, 2]).unwrap().multiset;
            let reports = construction_directions(&uniform_directions(&t, 2).unwrap());
            let pair = build_point_count_pair(&t, &reports).unwrap();
            let profile = gcd_profile(&pair.f, &pair.g).unwrap();
            assert!(szw_check_all(&profile).iter().all(|c| c.pass));
            for _ in 0..6 {
                let r = ProjPoint::affine(random_elem(&mut rng, &f), random_elem(&mut rng, &f));
                assert!(point_index_check(&t, &reports, &r).unwrap().pass);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn inequality_on_point_count_profiles(q in prop::sample::select(vec![4u32, 5, 7, 8, 9]), seed in any::<u64>(), n in 1usize..8) {
        let f = field(q);
        let mut rng = SplitMix64::new(seed);
        let mut t = PointMultiset::new(&f);
        for _ in 0..n {
            let (a, b) = (random_elem(&mut rng, &f), random_elem(&mut rng, &f));
            t.insert(a, b, 1 + rng.below(3)).unwrap();
        }
        let lambda = 1 + rng.below(((q - 1) / 2) as u64) as usize;
        let reports = construction_directions(&uniform_directions(&t, lambda).unwrap());
        prop_assume!(!reports.is_empty());
        let pair = build_point_count_pair(&t, &reports).unwrap();
        let profile = gcd_profile(&pair.f, &pair.g).unwrap();
        for y0 in f.elements() {
            prop_assert!(szw_inequality_check(&profile, y0).pass);
        }
        for r in &reports {
            let Direction::Slope(y) = r.direction else { unreachable!() };
            prop_assert_eq!(q as usize - profile.k_at(y), r.lambda_d());
        }
    }
}
