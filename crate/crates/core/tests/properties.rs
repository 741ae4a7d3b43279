use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use zassenhaus::cli::wire::{PolyJson, RationalJson, TermJson};
use zassenhaus::freealg::{
    factorial, rational, Alphabet, Generator, NCPoly, Rational, TSeries, Word,
};
use zassenhaus::numeric::{
    commuting_diagonal, convergence_scan, evaluate, exact_exponential, expm, random_assignment,
    random_symmetric_assignment, triangular_pair, zassenhaus_apply, Assignment, DenseMatrix,
    MatrixJson,
};
use zassenhaus::zassenhaus::{
    composition_coefficient, expansion_terms, Composition, ExpansionConfig, Side,
};

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec(prop_oneof![Just(Generator::A), Just(Generator::B)], 0..=3)
        .prop_map(Word::new)
}

fn coefficient() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=5).prop_map(|(n, d)| rational(n, d))
}

fn poly() -> impl Strategy<Value = NCPoly> {
    prop::collection::vec((word(), coefficient()), 0..=5)
        .prop_map(|terms| terms.into_iter().collect())
}

fn composition() -> impl Strategy<Value = Composition> {
    prop::collection::vec(1usize..=5, 1..=4).prop_map(|v| Composition::new(v).unwrap())
}

fn finite_rows(dim: usize) -> impl Strategy<Value = Vec<Vec<f64>>> {
    prop::collection::vec(prop::collection::vec(-1e6f64..1e6, dim), dim)
}

proptest! {
    #[test]
    fn multiplication_is_associative(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    }

    #[test]
    fn multiplication_distributes(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&(&q + &r) * &p, &(&q * &p) + &(&r * &p));
    }

    #[test]
    fn addition_has_inverses(p in poly()) {
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p + &NCPoly::zero(), p.clone());
        prop_assert_eq!(&p * &NCPoly::one(), p);
    }

    #[test]
    fn reverse_is_an_involutive_anti_automorphism(p in poly(), q in poly()) {
        prop_assert_eq!(p.reverse().reverse(), p.clone());
        prop_assert_eq!((&p * &q).reverse(), &q.reverse() * &p.reverse());
        prop_assert_eq!((&p + &q).reverse(), &p.reverse() + &q.reverse());
    }

    #[test]
    fn swap_is_an_automorphism(p in poly(), q in poly()) {
        prop_assert_eq!((&p * &q).swap_generators(), &p.swap_generators() * &q.swap_generators());
        prop_assert_eq!(p.swap_generators().swap_generators(), p);
    }

    #[test]
    fn grades_sum_to_the_polynomial(p in poly()) {
        let top = p.degree().unwrap_or(0);
        let sum: NCPoly = (0..=top).map(|d| p.grade(d)).sum();
        prop_assert_eq!(sum, p.clone());
        for d in 0..=top {
            prop_assert!(p.grade(d).is_homogeneous_of(d));
        }
    }

    #[test]
    fn truncated_product_agrees_with_full_product(p in poly(), q in poly(), n in 0usize..=6) {
        prop_assert_eq!(p.mul_truncated(&q, n), (&p * &q).truncate(n));
    }

    #[test]
    fn stored_coefficients_are_reduced_and_nonzero(p in poly(), q in poly()) {
        for (_, c) in (&p * &q + &p).terms() {
            prop_assert!(!c.is_zero());
            prop_assert!(c.denom().is_positive());
            prop_assert!(c.numer().gcd(c.denom()).is_one());
        }
    }

    #[test]
    fn word_bookkeeping(u in word(), v in word()) {
        let w = u.concat(&v);
        prop_assert_eq!(w.degree(), u.degree() + v.degree());
        prop_assert_eq!(w.b_degree(), u.b_degree() + v.b_degree());
        prop_assert_eq!(w.reversed().b_degree(), w.b_degree());
        prop_assert_eq!(w.swapped().b_degree(), w.degree() - w.b_degree());
        prop_assert_eq!(Word::parse(&w.render(Alphabet::XY), Alphabet::XY), Some(w));
    }

    #[test]
    fn exp_of_nilpotent_series_inverts(coeffs in prop::collection::vec(poly(), 1..=3)) {
        let n = 4;
        let mut c = vec![NCPoly::zero()];
        c.extend(coeffs);
        let s = TSeries::from_coeffs(c, n);
        let e = s.exp().unwrap();
        let inv = s.neg().exp().unwrap();
        prop_assert!(e.mul(&inv).unwrap().is_one());
        prop_assert!(inv.mul(&e).unwrap().is_one());
    }

    #[test]
    fn right_coefficients_lie_in_unit_interval(c in composition()) {
        let r = composition_coefficient(&c, Side::Right);
        prop_assert!(r.is_positive() && r <= Rational::one());
        prop_assert!(r.numer().gcd(r.denom()).is_one());
        let l = composition_coefficient(&c, Side::Left);
        let sign = if (c.weight() - c.len()) % 2 == 0 { r.clone() } else { -r.clone() };
        prop_assert_eq!(l, sign);
    }

    #[test]
    fn all_ones_composition_has_inverse_factorial(p in 1usize..=12) {
        let c = Composition::new(vec![1; p]).unwrap();
        let expected = Rational::new(1.into(), factorial(p));
        prop_assert_eq!(composition_coefficient(&c, Side::Right), expected);
    }

    #[test]
    fn rational_json_round_trips(c in coefficient()) {
        let j = RationalJson::from(&c);
        let text = serde_json::to_string(&j).unwrap();
        let back: RationalJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.parse().unwrap(), c);
    }

    #[test]
    fn poly_json_round_trips(p in poly()) {
        for alphabet in [Alphabet::AB, Alphabet::XY] {
            let text = serde_json::to_string(&PolyJson::new(&p, alphabet)).unwrap();
            let back: PolyJson = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(back.parse().unwrap(), p.clone());
        }
    }

    #[test]
    fn term_json_round_trips(c in composition(), r in coefficient()) {
        let text = serde_json::to_string(&TermJson::new(&c, &r)).unwrap();
        let back: TermJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.parse().unwrap(), (c, r));
    }

    #[test]
    fn matrix_json_round_trips_bit_exactly(rows in finite_rows(3)) {
        let m = DenseMatrix::from_rows(&rows).unwrap();
        let text = serde_json::to_string(&m.to_json()).unwrap();
        let back: MatrixJson = serde_json::from_str(&text).unwrap();
        let m2 = DenseMatrix::from_json(&back).unwrap();
        for (r1, r2) in m.rows().iter().zip(m2.rows()) {
            for (x, y) in r1.iter().zip(r2) {
                prop_assert_eq!(x.to_bits(), y.to_bits());
            }
        }
    }

    #[test]
    fn evaluate_is_a_homomorphism(p in poly(), q in poly(), seed in 0u64..1000) {
        let a = random_assignment(4, 1.0, seed);
        let pq = evaluate(&(&p * &q), &a);
        let prod = &evaluate(&p, &a) * &evaluate(&q, &a);
        prop_assert!(pq.max_abs_diff(&prod) <= 1e-12);
        let sum = evaluate(&(&p + &q), &a);
        let add = &evaluate(&p, &a) + &evaluate(&q, &a);
        prop_assert!(sum.max_abs_diff(&add) <= 1e-12);
    }

    #[test]
    fn b_zero_collapses_to_exp_a(seed in 0u64..1000, n in 0usize..=12, cap in 1usize..=4) {
        let base = random_assignment(3, 0.5, seed);
        let a = Assignment::new(base.a().clone(), DenseMatrix::zeros(3)).unwrap();
        let exp_a = expm(a.a());
        for side in [Side::Right, Side::Left] {
            let cfg = ExpansionConfig::new(n, Some(cap), side).unwrap();
            prop_assert!(zassenhaus_apply(&a, &cfg).max_abs_diff(&exp_a) <= 1e-13);
        }
    }
}

#[test]
fn evaluate_unit_and_commutator() {
    let a = random_assignment(4, 1.0, 7);
    assert_eq!(
        evaluate(&NCPoly::one(), &a).max_abs_diff(&DenseMatrix::identity(4)),
        0.0
    );
    let ab = NCPoly::a().commutator(&NCPoly::b());
    let direct = a.a().commutator(a.b());
    assert!(evaluate(&ab, &a).max_abs_diff(&direct) <= 1e-15);
}

#[test]
fn expansion_coefficients_are_reduced() {
    for side in [Side::Right, Side::Left] {
        for t in expansion_terms(&ExpansionConfig::new(10, None, side).unwrap()) {
            let c = &t.coefficient;
            assert!(c.numer().gcd(c.denom()).is_one(), "{}: {c}", t.composition);
            assert!(c.abs() <= Rational::one() && !c.is_zero());
        }
    }
}

#[test]
fn triangular_class_is_exact_at_cap_d_minus_one() {
    for dim in 2..=5 {
        for seed in 0..4 {
            let a = triangular_pair(dim, 1.0, seed);
            let oracle = exact_exponential(&a);
            for side in [Side::Right, Side::Left] {
                let cfg = ExpansionConfig::new(30, Some(dim - 1), side).unwrap();
                let err = (&zassenhaus_apply(&a, &cfg) - &oracle).frobenius_norm();
                assert!(err <= 1e-10, "dim {dim} seed {seed} {side}: {err:e}");
            }
        }
    }
}

#[test]
fn factor_cap_below_nilpotency_index_is_not_exact() {
    let a = triangular_pair(4, 1.0, 1);
    let cfg = ExpansionConfig::new(30, Some(1), Side::Right).unwrap();
    let err = (&zassenhaus_apply(&a, &cfg) - &exact_exponential(&a)).frobenius_norm();
    assert!(err > 1e-6, "{err:e}");
}

#[test]
fn symmetric_fixtures_give_equal_left_and_right_reports() {
    let degrees = [2, 4, 6, 8, 10, 12];
    for seed in 0..5 {
        let a = random_symmetric_assignment(4, 0.25, seed);
        let right = convergence_scan(&a, &degrees, Side::Right, None).unwrap();
        let left = convergence_scan(&a, &degrees, Side::Left, None).unwrap();
        for (r, l) in right.errors().iter().zip(left.errors()) {
            assert!((r - l).abs() <= 1e-12, "seed {seed}: {r:e} vs {l:e}");
        }
        // for symmetric inputs the two sides are transposes of each other
        for n in degrees {
            let r = zassenhaus_apply(&a, &ExpansionConfig::right(n));
            let l = zassenhaus_apply(&a, &ExpansionConfig::left(n));
            assert!(r.transpose().max_abs_diff(&l) <= 1e-12);
        }
    }
}

#[test]
fn general_fixtures_agree_once_converged() {
    for seed in 0..5 {
        let a = random_assignment(4, 0.25, seed);
        let r = zassenhaus_apply(&a, &ExpansionConfig::right(14));
        let l = zassenhaus_apply(&a, &ExpansionConfig::left(14));
        assert!(r.max_abs_diff(&l) <= 1e-12, "seed {seed}");
    }
}

#[test]
fn transpose_swaps_sides() {
    let a = random_assignment(3, 0.5, 3);
    let cfg = ExpansionConfig::right(6);
    let r = zassenhaus_apply(&a, &cfg);
    let l = zassenhaus_apply(&a.transpose(), &cfg.with_side(Side::Left));
    assert!(r.transpose().max_abs_diff(&l) <= 1e-14);
}

#[test]
fn commuting_diagonal_pairs() {
    for seed in 0..5 {
        let a = commuting_diagonal(4, 0.25, seed);
        let cfg = ExpansionConfig::right(8);
        let err = (&zassenhaus_apply(&a, &cfg) - &exact_exponential(&a)).frobenius_norm();
        assert!(err <= 1e-8, "norm 0.25, N = 8, seed {seed}: {err:e}");

        let a = commuting_diagonal(4, 1.0, seed);
        let cfg = ExpansionConfig::right(14);
        let err = (&zassenhaus_apply(&a, &cfg) - &exact_exponential(&a)).frobenius_norm();
        assert!(err <= 1e-8, "norm 1, N = 14, seed {seed}: {err:e}");
    }
}
