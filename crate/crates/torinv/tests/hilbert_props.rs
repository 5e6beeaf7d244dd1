mod common;

use std::collections::BTreeSet;

use common::{int_matrix, matrix_with_column_permutation};
use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;
use torinv::hilbert::{
    hilbert_basis, hilbert_basis_with_strategy, is_member, NonnegVector, SearchStrategy,
    DEFAULT_NODE_BUDGET,
};
use torinv::matrix::{Matrix, MatrixZ};
use torinv::reference::{brute_force_hilbert, enumerate_solutions};

const ORACLE_DEGREE: u64 = 12;

/// Subtracting any generator that fits keeps the remainder in the solution
/// monoid, so repeated subtraction decides decomposability.
fn decomposes_into(v: &[u64], gens: &[NonnegVector]) -> bool {
    let mut rest: Vec<BigUint> = v.iter().map(|&x| BigUint::from(x)).collect();
    'peel: while rest.iter().any(|e| !e.is_zero()) {
        for g in gens {
            if g.entries().iter().zip(&rest).all(|(ge, re)| ge <= re) {
                for (ge, re) in g.entries().iter().zip(rest.iter_mut()) {
                    *re -= ge;
                }
                continue 'peel;
            }
        }
        return false;
    }
    true
}

fn entry_sets(gens: &[NonnegVector]) -> BTreeSet<Vec<BigUint>> {
    gens.iter().map(|g| g.entries().to_vec()).collect()
}

proptest! {
    #[test]
    fn generators_match_the_brute_force_oracle(a in int_matrix(3, 5, 3)) {
        let basis = match hilbert_basis(&a, DEFAULT_NODE_BUDGET) {
            Ok(basis) => basis,
            Err(_) => return Ok(()),
        };
        let expected = brute_force_hilbert(&a, ORACLE_DEGREE);
        let got: Vec<NonnegVector> = basis
            .generators
            .iter()
            .filter(|g| g.degree() <= BigUint::from(ORACLE_DEGREE))
            .cloned()
            .collect();
        // Both sides list exactly the minimal nonzero solutions of degree
        // at most the oracle cap, in the same canonical order.
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn every_generator_solves_the_system(a in int_matrix(3, 5, 3)) {
        if let Ok(basis) = hilbert_basis(&a, DEFAULT_NODE_BUDGET) {
            for g in &basis.generators {
                prop_assert!(is_member(&a, g).unwrap());
                prop_assert!(!g.is_zero());
            }
        }
    }

    #[test]
    fn no_generator_dominates_another(a in int_matrix(3, 5, 3)) {
        let basis = match hilbert_basis(&a, DEFAULT_NODE_BUDGET) {
            Ok(basis) => basis,
            Err(_) => return Ok(()),
        };
        // g = h + v with v a nonzero solution would force h <= g
        // pointwise; minimality rules that out for distinct generators.
        for g in &basis.generators {
            for h in &basis.generators {
                if g != h {
                    let dominated = h.entries().iter().zip(g.entries()).all(|(he, ge)| he <= ge);
                    prop_assert!(!dominated, "{:?} dominates {:?}", g, h);
                }
            }
        }
    }

    #[test]
    fn small_degree_solutions_decompose_into_generators(a in int_matrix(3, 4, 3)) {
        let basis = match hilbert_basis(&a, DEFAULT_NODE_BUDGET) {
            Ok(basis) => basis,
            Err(_) => return Ok(()),
        };
        for solution in enumerate_solutions(&a, ORACLE_DEGREE) {
            prop_assert!(
                decomposes_into(&solution, &basis.generators),
                "{:?} does not decompose",
                solution
            );
        }
    }

    #[test]
    fn column_permutation_acts_on_generators((a, perm) in matrix_with_column_permutation(3, 5, 3)) {
        let b = Matrix::from_fn(a.rows(), a.cols(), |i, j| a.at(i, perm[j]).clone());
        let (ga, gb) = match (
            hilbert_basis(&a, DEFAULT_NODE_BUDGET),
            hilbert_basis(&b, DEFAULT_NODE_BUDGET),
        ) {
            (Ok(x), Ok(y)) => (x, y),
            _ => return Ok(()),
        };
        let mapped: BTreeSet<Vec<BigUint>> = ga
            .generators
            .iter()
            .map(|g| perm.iter().map(|&p| g.entries()[p].clone()).collect())
            .collect();
        prop_assert_eq!(mapped, entry_sets(&gb.generators));
    }

    #[test]
    fn automatic_and_general_strategies_agree(a in int_matrix(3, 4, 3)) {
        let auto = hilbert_basis_with_strategy(&a, DEFAULT_NODE_BUDGET, SearchStrategy::Auto);
        let general = hilbert_basis_with_strategy(&a, DEFAULT_NODE_BUDGET, SearchStrategy::General);
        if let (Ok(x), Ok(y)) = (auto, general) {
            prop_assert_eq!(x.generators, y.generators);
        }
    }
}

#[test]
fn oracle_and_solver_agree_on_a_zero_matrix() {
    let a = MatrixZ::from_i64_rows(vec![vec![0, 0, 0]]);
    let basis = hilbert_basis(&a, DEFAULT_NODE_BUDGET).unwrap();
    assert_eq!(entry_sets(&basis.generators).len(), 3);
    assert_eq!(basis.generators, brute_force_hilbert(&a, 2));
}
