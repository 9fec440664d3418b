use hyperplane_core::algebra::{component_dimension, quotient_by_forms, restrict_hyperplane};
use hyperplane_core::macaulay::{eval_rep, es_bound_rep, es_threshold, iterated_shadow, macaulay_rep, shadow};
use hyperplane_core::poly::{default_names, Monomial, Polynomial};
use hyperplane_core::{BigCount, Limits, LinearForm, PresentedAlgebra, PrimeField};
use proptest::prelude::*;

fn big(v: u64) -> BigCount {
    BigCount::from(v)
}

proptest! {
    #[test]
    fn rep_round_trips(c in 0u64..1_000_000_000, d in 1u32..9) {
        let rep = macaulay_rep(&big(c), d).unwrap();
        prop_assert_eq!(rep.coeffs().len(), d as usize);
        prop_assert!(rep.coeffs().windows(2).all(|w| w[0] > w[1]));
        prop_assert_eq!(eval_rep(&rep), big(c));
    }

    #[test]
    fn successor_is_lex_larger(c in 0u64..1_000_000, d in 1u32..7) {
        prop_assert!(macaulay_rep(&big(c), d).unwrap() < macaulay_rep(&big(c + 1), d).unwrap());
        prop_assert!(shadow(&big(c), d).unwrap() <= shadow(&big(c + 1), d).unwrap());
    }

    #[test]
    fn iterate_is_repeated_shadow(c in 0u64..100_000, d in 1u32..6, r in 0u64..5) {
        let mut v = big(c);
        for _ in 0..r {
            v = shadow(&v, d).unwrap();
        }
        prop_assert_eq!(iterated_shadow(&big(c), d, r).unwrap(), v);
    }

    #[test]
    fn threshold_mechanics(i in 1u32..40, r in 1u32..40) {
        let rep = es_bound_rep(i, r).unwrap();
        let expected: Vec<u64> = (r as u64..(i + r) as u64).rev().collect();
        prop_assert_eq!(rep.coeffs(), expected.as_slice());
        prop_assert_eq!(eval_rep(&rep), es_threshold(i, r) - 1u32);
        prop_assert_eq!(iterated_shadow(&(es_threshold(i, r) - 1u32), i, r as u64).unwrap(), big(0));
    }

    #[test]
    fn restriction_agrees_with_quotient(
        exps in prop::collection::vec(prop::collection::vec(0u32..3, 3), 1..4),
        form in prop::collection::vec(0u64..32003, 3),
        last in 1u64..32003,
    ) {
        let k = PrimeField::new(32003).unwrap();
        let gens: Vec<Polynomial> = exps
            .into_iter()
            .filter(|e| e.iter().sum::<u32>() > 0)
            .map(|e| Polynomial::monomial(k, Monomial::new(e), 1))
            .collect();
        let a = PresentedAlgebra::new(k, default_names(3), gens).unwrap();
        let mut coeffs = form;
        coeffs[2] = last;
        let l = LinearForm::new(k, coeffs).unwrap();
        let restricted = restrict_hyperplane(&a, &l).unwrap();
        let quotient = quotient_by_forms(&a, &[l]).unwrap();
        for d in 0..=5 {
            prop_assert_eq!(
                component_dimension(&restricted, d, &Limits::default()).unwrap(),
                component_dimension(&quotient, d, &Limits::default()).unwrap()
            );
        }
    }
}
