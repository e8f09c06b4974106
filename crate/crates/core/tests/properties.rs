//! Randomized invariants across the algebraic and numeric layers.

use mzv_genus::lyndon::{is_lyndon, lyndon_decompose, lyndon_factorize};
use mzv_genus::numeric::{eval_qsym, mzv_with_budget, mzv_with_cutoff, DEFAULT_CUTOFF_BUDGET};
use mzv_genus::rational::rat;
use mzv_genus::sym::mul_via_expansion;
use mzv_genus::{
    eval_zeta_poly, expand_in_vars, mzv, mzv_expansion, stuffle, sym_to_words, zeta_hom, Basis, BoundedValue,
    Partition, QsymPoly, SymPoly, Word,
};
use proptest::prelude::*;

fn partition(max_weight: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_weight, 0..=max_weight as usize)
        .prop_filter("weight", move |v| v.iter().sum::<u32>() <= max_weight)
        .prop_map(|v| Partition::new(v).unwrap())
}

fn basis() -> impl Strategy<Value = Basis> {
    prop::sample::select(Basis::ALL.to_vec())
}

fn sym_poly(max_weight: u32) -> impl Strategy<Value = SymPoly> {
    (basis(), prop::collection::vec((partition(max_weight), -5i64..=5), 1..4))
        .prop_map(|(b, terms)| SymPoly::from_terms(b, terms.into_iter().map(|(p, c)| (p, rat(c, 1)))))
}

fn word(max_weight: u32) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=max_weight, 1..=max_weight as usize)
        .prop_filter("weight", move |v| v.iter().sum::<u32>() <= max_weight)
        .prop_map(|v| Word::new(v).unwrap())
}

fn convergent_word(max_weight: u32, max_depth: usize) -> impl Strategy<Value = Word> {
    (2..=max_weight, prop::collection::vec(1..=max_weight, 0..max_depth))
        .prop_filter("weight", move |(h, t)| h + t.iter().sum::<u32>() <= max_weight)
        .prop_map(|(h, mut t)| {
            t.insert(0, h);
            Word::new(t).unwrap()
        })
}

fn q(w: &Word) -> QsymPoly {
    QsymPoly::word(w.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn basis_conversion_round_trips(f in sym_poly(8), b in basis()) {
        prop_assert_eq!(f.to_basis(b).to_basis(f.basis()), f);
    }

    #[test]
    fn basis_conversion_is_linear(f in sym_poly(6), g in sym_poly(6), b in basis()) {
        let g = g.to_basis(f.basis());
        prop_assert_eq!(f.add(&g).to_basis(b), f.to_basis(b).add(&g.to_basis(b)));
    }

    #[test]
    fn conversion_preserves_the_polynomial(f in sym_poly(5), b in basis()) {
        let n = f.max_degree().max(1);
        prop_assert_eq!(expand_in_vars(&f, n).unwrap(), expand_in_vars(&f.to_basis(b), n).unwrap());
    }

    #[test]
    fn products_agree_with_expansion(f in sym_poly(3), g in sym_poly(3)) {
        let g = g.to_basis(f.basis());
        prop_assert_eq!(f.mul(&g).to_basis(Basis::Monomial), mul_via_expansion(&f, &g));
    }

    #[test]
    fn stuffle_is_commutative(a in word(7), b in word(7)) {
        prop_assert_eq!(stuffle(&q(&a), &q(&b)), stuffle(&q(&b), &q(&a)));
    }

    #[test]
    fn stuffle_is_associative(a in word(5), b in word(5), c in word(5)) {
        let left = stuffle(&stuffle(&q(&a), &q(&b)), &q(&c));
        let right = stuffle(&q(&a), &stuffle(&q(&b), &q(&c)));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn stuffle_weight_and_depth(a in word(7), b in word(7)) {
        let product = stuffle(&q(&a), &q(&b));
        let (lo, hi) = (a.depth().max(b.depth()), a.depth() + b.depth());
        for w in product.terms().keys() {
            prop_assert_eq!(w.weight(), a.weight() + b.weight());
            prop_assert!(w.depth() >= lo && w.depth() <= hi);
        }
    }

    #[test]
    fn embedding_is_multiplicative(f in sym_poly(3), g in sym_poly(3)) {
        let g = g.to_basis(f.basis());
        prop_assert_eq!(sym_to_words(&f.mul(&g)), stuffle(&sym_to_words(&f), &sym_to_words(&g)));
    }

    #[test]
    fn lyndon_factorization_round_trips(w in word(7)) {
        let factors = lyndon_factorize(&w).unwrap();
        let joined = factors.iter().fold(Word::empty(), |acc, f| acc.concat(f));
        prop_assert_eq!(&joined, &w);
        prop_assert!(factors.iter().all(|f| is_lyndon(f).unwrap()));
        prop_assert!(factors.windows(2).all(|p| p[0] >= p[1]));
    }

    #[test]
    fn lyndon_decomposition_round_trips(w in word(6), c in -3i64..=3) {
        let poly = q(&w).scale(&rat(c, 2));
        prop_assert_eq!(lyndon_decompose(&poly).expand(), poly);
    }

    #[test]
    fn zeta_hom_is_multiplicative(f in sym_poly(4), g in sym_poly(4)) {
        let g = g.to_basis(f.basis());
        prop_assert_eq!(zeta_hom(&f.mul(&g)), &zeta_hom(&f) * &zeta_hom(&g));
    }

    #[test]
    fn zeta_hom_preserves_weight(lambda in partition(9), b in basis()) {
        let z = zeta_hom(&SymPoly::element(b, lambda.clone()));
        prop_assert!(z.is_homogeneous_of_weight(lambda.weight() as u32));
    }

    #[test]
    fn bounded_arithmetic_encloses(
        x in -10.0f64..10.0, ex in 0.0f64..1.0, y in -10.0f64..10.0, ey in 0.0f64..1.0,
        s in -1.0f64..=1.0, t in -1.0f64..=1.0,
    ) {
        let (a, b) = (BoundedValue::new(x, ex), BoundedValue::new(y, ey));
        let (u, v) = (x + s * ex, y + t * ey);
        let sum = a + b;
        let prod = a * b;
        prop_assert!(sum.lower() <= u + v && u + v <= sum.upper());
        prop_assert!(prod.lower() <= u * v && u * v <= prod.upper());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn tail_bound_is_sound(w in convergent_word(8, 3)) {
        let first = mzv_with_budget(w.letters(), 1e-5, DEFAULT_CUTOFF_BUDGET).unwrap();
        let doubled = mzv_with_cutoff(w.letters(), 2 * first.cutoff).unwrap();
        prop_assert!((first.value.value - doubled.value.value).abs() <= first.value.bound);
        prop_assert!(doubled.value.bound <= first.value.bound);
    }

    #[test]
    fn stuffle_is_multiplicative_numerically(a in convergent_word(6, 2), b in convergent_word(6, 2)) {
        let lhs = eval_qsym(&stuffle(&q(&a), &q(&b)), 1e-5).unwrap();
        let rhs = mzv(a.letters(), 1e-5).unwrap() * mzv(b.letters(), 1e-5).unwrap();
        prop_assert!(lhs.agrees_with(&rhs), "{} * {}: {} vs {}", a, b, lhs, rhs);
    }

    #[test]
    fn calabi_yau_coefficients_match_the_ring(lambda in partition(8)) {
        prop_assume!(!lambda.is_empty() && !lambda.has_part_one());
        let terms = mzv_expansion(&lambda).unwrap();
        let summed = mzv_genus::numeric::eval_mzv_terms(&terms, 1e-6).unwrap();
        let ring = eval_zeta_poly(&zeta_hom(&SymPoly::m(lambda.parts())));
        prop_assert!(summed.agrees_with(&ring));
    }
}
