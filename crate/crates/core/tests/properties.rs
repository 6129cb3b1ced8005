//! Randomized invariants: every structural claim the library relies on,
//! checked against small instances and the brute-force oracle.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::One;
use proptest::prelude::*;

use tallysat::{
    analyze_structure, are_alternative, brute_force_models, count_falsifying,
    count_falsifying_with, cube_cover_tuples, cube_tuple_count, decide, merge_cubes,
    nonalternative_components, parse_dimacs, truth_table, write_dimacs, CnfFormula, CountOptions,
    CountPath, Cube, Literal, MergeResult,
};

fn lit_code(n: u32) -> impl Strategy<Value = i32> {
    (1..=n as i32, any::<bool>()).prop_map(|(v, pos)| if pos { v } else { -v })
}

/// Raw clause literal lists: duplicates and contrary pairs allowed, so
/// normalization gets exercised.
fn clause_codes(n: u32) -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec(lit_code(n), 1..=(2 * n as usize))
}

fn formula(max_n: u32, max_m: usize) -> impl Strategy<Value = CnfFormula> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(clause_codes(n), 0..=max_m)
            .prop_map(move |clauses| CnfFormula::from_dimacs_lits(n, &clauses).unwrap())
    })
}

fn cube(n: u32) -> impl Strategy<Value = Cube> {
    (
        prop::collection::btree_set(1..=n, 0..=n as usize),
        any::<u64>(),
    )
        .prop_map(move |(vars, polarity_bits)| {
            let lits: Vec<Literal> = vars
                .iter()
                .map(|&v| Literal::new(v, (polarity_bits >> (v % 64)) & 1 == 1))
                .collect();
            Cube::new(&lits, n).unwrap()
        })
}

fn cube_pair(max_n: u32) -> impl Strategy<Value = (u32, Cube, Cube)> {
    (1..=max_n).prop_flat_map(|n| (Just(n), cube(n), cube(n)))
}

fn cover_set(cubes: &[Cube], n: u32) -> BTreeSet<u64> {
    cubes
        .iter()
        .flat_map(|c| cube_cover_tuples(c, n).unwrap())
        .collect()
}

proptest! {
    #[test]
    fn clause_negation_is_an_involution(f in formula(10, 8)) {
        for clause in f.clauses() {
            prop_assert_eq!(&clause.negate().negate(), clause);
        }
    }

    #[test]
    fn negation_preserves_count_and_width(f in formula(10, 8)) {
        let dnf = f.negate();
        prop_assert_eq!(dnf.cubes().len(), f.num_clauses());
        for (clause, cube) in f.clauses().iter().zip(dnf.cubes()) {
            prop_assert_eq!(cube.width(), clause.len());
        }
    }

    #[test]
    fn normalization_is_idempotent(f in formula(10, 8)) {
        let again = CnfFormula::new(f.num_vars(), f.clauses().to_vec()).unwrap();
        prop_assert_eq!(&again, &f);
    }

    #[test]
    fn dimacs_write_parse_write_is_stable(f in formula(12, 10)) {
        let text = write_dimacs(&f);
        let parsed = parse_dimacs(&text).unwrap();
        prop_assert_eq!(&parsed.formula, &f);
        prop_assert_eq!(write_dimacs(&parsed.formula), text);
    }

    #[test]
    fn expansion_covers_the_same_tuples_with_full_width_cubes(f in formula(6, 5)) {
        let n = f.num_vars();
        let dnf = f.negate();
        let expanded = dnf.expand_to_alternative(6).unwrap();
        prop_assert_eq!(cover_set(expanded.cubes(), n), cover_set(dnf.cubes(), n));
        for c in expanded.cubes() {
            prop_assert_eq!(c.width(), n as usize);
        }
        for (i, a) in expanded.cubes().iter().enumerate() {
            for b in &expanded.cubes()[i + 1..] {
                prop_assert!(are_alternative(a, b));
            }
        }
    }

    #[test]
    fn alternative_is_symmetric_and_never_reflexive((_n, a, b) in cube_pair(8)) {
        prop_assert_eq!(are_alternative(&a, &b), are_alternative(&b, &a));
        prop_assert!(!are_alternative(&a, &a));
        prop_assert!(!are_alternative(&b, &b));
    }

    #[test]
    fn alternative_pairs_are_exactly_the_disjoint_pairs((n, a, b) in cube_pair(8)) {
        let ca: BTreeSet<u64> = cube_cover_tuples(&a, n).unwrap().into_iter().collect();
        let cb: BTreeSet<u64> = cube_cover_tuples(&b, n).unwrap().into_iter().collect();
        prop_assert_eq!(are_alternative(&a, &b), ca.is_disjoint(&cb));
    }

    #[test]
    fn merging_matches_the_cover_intersection((n, a, b) in cube_pair(8)) {
        let ca: BTreeSet<u64> = cube_cover_tuples(&a, n).unwrap().into_iter().collect();
        let cb: BTreeSet<u64> = cube_cover_tuples(&b, n).unwrap().into_iter().collect();
        let overlap = ca.intersection(&cb).count() as u64;
        match merge_cubes(&[a, b], n) {
            MergeResult::Clash => prop_assert_eq!(overlap, 0),
            MergeResult::Merged { cube, free_count } => {
                prop_assert_eq!(overlap, 1u64 << free_count);
                prop_assert_eq!(BigUint::from(overlap), cube_tuple_count(&cube, n));
            }
        }
    }

    #[test]
    fn engine_matches_the_oracle(f in formula(10, 10)) {
        let report = count_falsifying(&f).unwrap();
        let models = brute_force_models(&f).unwrap();
        prop_assert_eq!(&report.models, &BigUint::from(models));
        let universe = BigUint::one() << f.num_vars() as usize;
        prop_assert_eq!(&report.falsifying + &report.models, universe);
        prop_assert_eq!(decide(&f).unwrap(), models > 0);
    }

    #[test]
    fn clause_order_cannot_change_anything(f in formula(10, 8)) {
        let mut reversed = f.clauses().to_vec();
        reversed.reverse();
        let g = CnfFormula::new(f.num_vars(), reversed).unwrap();
        prop_assert_eq!(&g, &f);
        prop_assert_eq!(count_falsifying(&g).unwrap(), count_falsifying(&f).unwrap());
    }

    #[test]
    fn components_partition_the_cubes(f in formula(10, 10)) {
        let dnf = f.negate();
        let components = nonalternative_components(&dnf);
        let mut seen: Vec<usize> = components.iter().flatten().copied().collect();
        seen.sort_unstable();
        let everyone: Vec<usize> = (0..dnf.cubes().len()).collect();
        prop_assert_eq!(seen, everyone);
    }

    #[test]
    fn pruning_never_changes_count_or_terms(f in formula(8, 8)) {
        let pruned = count_falsifying(&f).unwrap();
        let unpruned = count_falsifying_with(
            &f,
            &CountOptions { prune: false, ..CountOptions::default() },
        )
        .unwrap();
        prop_assert_eq!(&pruned.falsifying, &unpruned.falsifying);
        prop_assert_eq!(pruned.terms_evaluated, unpruned.terms_evaluated);
        prop_assert_eq!(unpruned.subtrees_pruned, 0);
    }

    #[test]
    fn worker_count_never_changes_the_report(f in formula(10, 8)) {
        let sequential = count_falsifying(&f).unwrap();
        let parallel = count_falsifying_with(
            &f,
            &CountOptions { threads: 3, ..CountOptions::default() },
        )
        .unwrap();
        prop_assert_eq!(sequential, parallel);
    }

    #[test]
    fn structure_report_bounds_the_evaluated_terms(f in formula(10, 8)) {
        let dnf = f.negate();
        let structure = analyze_structure(&dnf);
        let report = count_falsifying(&f).unwrap();
        prop_assert!(
            BigUint::from(report.terms_evaluated) <= structure.predicted_terms_upper_bound
        );
        prop_assert_eq!(structure.all_pairwise_alternative, structure.p_max <= 1);
        if structure.all_pairwise_alternative {
            prop_assert_eq!(report.path, CountPath::ClosedForm);
            prop_assert_eq!(
                &structure.predicted_terms_upper_bound,
                &BigUint::from(structure.m)
            );
            let sum: BigUint = dnf
                .cubes()
                .iter()
                .map(|c| cube_tuple_count(c, f.num_vars()))
                .sum();
            prop_assert_eq!(&report.falsifying, &sum);
        }
    }

    #[test]
    fn truth_table_model_rows_match_the_oracle(f in formula(8, 6)) {
        let table = truth_table(&f).unwrap();
        prop_assert_eq!(table.rows.len() as u64, 1u64 << f.num_vars());
        let ones = table.rows.iter().filter(|r| r.formula_value).count() as u64;
        prop_assert_eq!(ones, brute_force_models(&f).unwrap());
    }

    #[test]
    fn cover_listing_has_the_predicted_size((n, c, _b) in cube_pair(10)) {
        let tuples = cube_cover_tuples(&c, n).unwrap();
        prop_assert_eq!(BigUint::from(tuples.len() as u64), cube_tuple_count(&c, n));
        let mut sorted = tuples.clone();
        sorted.sort_unstable();
        sorted.dedup();
        prop_assert_eq!(sorted, tuples);
    }
}
