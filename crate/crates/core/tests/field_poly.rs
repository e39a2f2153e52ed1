mod common;

use common::*;
use proptest::prelude::*;
use renitent_core::poly::{
    homogenize, poly_det, poly_det_bareiss, poly_det_cofactor, roots_with_multiplicity, uni_gcd, BiPoly, PolyMatrix,
    TriHomPoly, UniPoly,
};
use renitent_core::{Elem, Field};

fn arb_field() -> impl Strategy<Value = Field> {
    prop::sample::select(SMALL_ORDERS.to_vec()).prop_map(field)
}

fn arb_uni(f: Field, max_deg: usize) -> impl Strategy<Value = UniPoly> {
    let q = f.q();
    prop::collection::vec(0..q, 0..=max_deg + 1).prop_map(move |c| UniPoly::new(&f, c.into_iter().map(e).collect()))
}

fn field_and_polys(max_deg: usize) -> impl Strategy<Value = (Field, UniPoly, UniPoly)> {
    arb_field().prop_flat_map(move |f| (Just(f.clone()), arb_uni(f.clone(), max_deg), arb_uni(f, max_deg)))
}

fn naive_eval(p: &UniPoly, x: Elem) -> Elem {
    let f = p.field();
    p.coeffs().iter().enumerate().fold(Elem::ZERO, |acc, (k, &c)| f.add(acc, f.mul(c, f.pow(x, k as u64))))
}

#[test]
fn field_identities_exhaustive() {
    for q in SMALL_ORDERS {
        let f = field(q);
        let minus_one = f.neg(Elem::ONE);
        let top = f.elements().fold(Elem::ZERO, |acc, g| f.add(acc, f.pow(g, q as u64 - 1)));
        assert_eq!(top, minus_one, "Σγ^(q-1) over GF({q})");
        for a in f.elements() {
            assert_eq!(f.pow(a, q as u64), a);
            if !a.is_zero() {
                assert_eq!(f.mul(f.inv(a).unwrap(), a), Elem::ONE);
            }
            for b in f.elements() {
                let p = f.p() as u64;
                assert_eq!(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
            }
        }
    }
}

#[test]
fn small_products() {
    let f2 = field(2);
    let x1 = UniPoly::linear(&f2, Elem::ONE, Elem::ONE);
    assert_eq!(&x1 * &x1, UniPoly::new(&f2, vec![e(1), e(0), e(1)]));
    let f5 = field(5);
    let prod = &UniPoly::linear(&f5, f5.neg(e(2)), Elem::ONE) * &UniPoly::linear(&f5, f5.neg(e(3)), Elem::ONE);
    assert_eq!(prod, UniPoly::new(&f5, vec![e(1), e(0), e(1)]));
    assert_eq!(prod.eval(e(2)), Elem::ZERO);
    let f7 = field(7);
    let g = uni_gcd(
        &UniPoly::new(&f7, vec![f7.neg(e(1)), e(0), e(1)]),
        &UniPoly::linear(&f7, f7.neg(e(1)), Elem::ONE),
    )
    .unwrap();
    assert_eq!(g, UniPoly::linear(&f7, f7.neg(e(1)), Elem::ONE));
}

#[test]
fn root_lists() {
    let f5 = field(5);
    let p = &UniPoly::from_roots(&f5, &[e(1), e(1)]) * &UniPoly::from_roots(&f5, &[e(2)]);
    assert_eq!(roots_with_multiplicity(&p).unwrap(), vec![(e(1), 2), (e(2), 1)]);
    let f3 = field(3);
    assert!(roots_with_multiplicity(&UniPoly::new(&f3, vec![e(1), e(0), e(1)])).unwrap().is_empty());
    for q in [4u32, 7, 9] {
        let f = field(q);
        let all = roots_with_multiplicity(&UniPoly::field_polynomial(&f)).unwrap();
        assert_eq!(all, f.elements().map(|x| (x, 1)).collect::<Vec<_>>());
    }
}

#[test]
fn homogenize_and_restrict_examples() {
    let f = field(7);
    let u_minus_v = &BiPoly::monomial(&f, Elem::ONE, 1, 0) - &BiPoly::monomial(&f, Elem::ONE, 0, 1);
    let g = homogenize(&u_minus_v, 1).unwrap();
    assert_eq!(g.restrict(e(3), Elem::ONE), UniPoly::linear(&f, f.neg(e(3)), Elem::ONE));
    let u_minus_3 = &BiPoly::monomial(&f, Elem::ONE, 1, 0) - &BiPoly::constant(&f, e(3));
    assert_eq!(homogenize(&u_minus_3, 1).unwrap(), TriHomPoly::linear(&f, Elem::ONE, Elem::ZERO, f.neg(e(3))));
    let u2_plus_v = &BiPoly::monomial(&f, Elem::ONE, 2, 0) + &BiPoly::monomial(&f, Elem::ONE, 0, 1);
    let h = homogenize(&u2_plus_v, 2).unwrap();
    assert_eq!(h.coeff(2, 0, 0), Elem::ONE);
    assert_eq!(h.coeff(0, 1, 1), Elem::ONE);
    assert_eq!(h.monomials().count(), 2);
}

#[test]
fn determinant_examples() {
    let f = field(5);
    let v = UniPoly::monomial(&f, Elem::ONE, 1);
    let id = PolyMatrix::new(&f, vec![vec![UniPoly::one(&f), UniPoly::zero(&f)], vec![UniPoly::zero(&f), UniPoly::one(&f)]]).unwrap();
    assert_eq!(poly_det(&id), UniPoly::one(&f));
    let m = PolyMatrix::new(&f, vec![vec![v.clone(), UniPoly::one(&f)], vec![UniPoly::zero(&f), v.clone()]]).unwrap();
    assert_eq!(poly_det(&m), &v * &v);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gcd_divides_both((_f, a, b) in field_and_polys(8)) {
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let g = uni_gcd(&a, &b).unwrap();
        prop_assert!(a.divrem(&g).unwrap().1.is_zero());
        prop_assert!(b.divrem(&g).unwrap().1.is_zero());
    }

    #[test]
    fn gcd_with_field_polynomial_counts_roots((f, a, _b) in field_and_polys(20)) {
        prop_assume!(!a.is_zero());
        let roots = f.elements().filter(|&x| a.eval(x).is_zero()).count();
        let g = uni_gcd(&UniPoly::field_polynomial(&f), &a).unwrap();
        prop_assert_eq!(g.degree(), Some(roots));
    }

    #[test]
    fn roots_leave_root_free_cofactor((f, a, b) in field_and_polys(6)) {
        let p = &a * &b;
        prop_assume!(!p.is_zero());
        let roots = roots_with_multiplicity(&p).unwrap();
        let mut rebuilt = UniPoly::one(&f);
        for &(r, m) in &roots {
            rebuilt = &rebuilt * &UniPoly::linear(&f, f.neg(r), Elem::ONE).pow(m as u64);
        }
        let cofactor = p.div_exact(&rebuilt).expect("product of root factors divides p");
        prop_assert!(f.elements().all(|x| !cofactor.eval(x).is_zero()));
    }

    #[test]
    fn horner_matches_monomial_sum((f, a, _b) in field_and_polys(10), x in 0u32..16) {
        let x = e(x % f.q());
        prop_assert_eq!(a.eval(x), naive_eval(&a, x));
    }

    #[test]
    fn determinant_methods_agree(q in prop::sample::select(vec![5u32, 7, 8, 9]), n in 1usize..=4, seed in any::<u64>()) {
        let f = field(q);
        let mut rng = renitent_core::generators::SplitMix64::new(seed);
        let rows: Vec<Vec<UniPoly>> = (0..n)
            .map(|_| (0..n).map(|_| UniPoly::new(&f, (0..3).map(|_| random_elem(&mut rng, &f)).collect())).collect())
            .collect();
        let m = PolyMatrix::new(&f, rows).unwrap();
        prop_assert_eq!(poly_det_bareiss(&m), poly_det_cofactor(&m));
        // evaluation commutes with the determinant
        let x = random_elem(&mut rng, &f);
        prop_assert_eq!(poly_det(&m).eval(x), poly_det(&m.eval(x)).coeff(0));
    }

    #[test]
    fn homogenize_round_trip(q in prop::sample::select(vec![5u32, 7, 9]), seed in any::<u64>(), n in 0usize..5) {
        let f = field(q);
        let mut rng = renitent_core::generators::SplitMix64::new(seed);
        let mut grid = vec![vec![Elem::ZERO; n + 1]; n + 1];
        for (i, row) in grid.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                if i + j <= n {
                    *cell = random_elem(&mut rng, &f);
                }
            }
        }
        let b = BiPoly::new(&f, grid);
        let h = homogenize(&b, n).unwrap();
        prop_assert_eq!(h.dehomogenize(), b.clone());
        let (u, v) = (random_elem(&mut rng, &f), random_elem(&mut rng, &f));
        prop_assert_eq!(h.eval(u, v, Elem::ONE), b.eval(u, v));
        prop_assert_eq!(h.restrict(v, Elem::ONE).eval(u), b.eval(u, v));
    }
}
