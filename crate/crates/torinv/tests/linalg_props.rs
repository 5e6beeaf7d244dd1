mod common;

use common::{int_matrix, matrix_with_column_permutation};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;
use torinv::matrix::Matrix;
use torinv::matrix::{
    kernel_basis, rank, rank_with_order, solve_homogeneous, solve_homogeneous_with_order,
    EliminationOrder,
};
use torinv::scalar::{GaussianRational, Rational};

proptest! {
    #[test]
    fn rank_is_independent_of_elimination_order(a in int_matrix(4, 5, 5)) {
        let q = a.to_rational();
        prop_assert_eq!(
            rank_with_order(&q, EliminationOrder::Forward),
            rank_with_order(&q, EliminationOrder::Reverse)
        );
    }

    #[test]
    fn rank_is_invariant_under_column_permutation((a, perm) in matrix_with_column_permutation(4, 5, 5)) {
        let b = Matrix::from_fn(a.rows(), a.cols(), |i, j| a.at(i, perm[j]).clone());
        prop_assert_eq!(rank(&a.to_rational()), rank(&b.to_rational()));
    }

    #[test]
    fn integer_kernel_is_exact_primitive_and_rank_complementary(a in int_matrix(4, 5, 5)) {
        let q = a.to_rational();
        let ker = kernel_basis(&q);
        prop_assert_eq!(ker.len() + rank(&q), a.cols());
        for v in &ker {
            for i in 0..a.rows() {
                let dot: BigInt = (0..a.cols()).map(|j| a.at(i, j) * &v[j]).sum();
                prop_assert!(dot.is_zero());
            }
            let gcd = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            prop_assert!(gcd.is_one());
        }
    }

    #[test]
    fn gaussian_solver_agrees_with_rank_nullity(a in int_matrix(4, 5, 5)) {
        let q = a.to_rational();
        let g = q.map(|e| GaussianRational::from_rational(e.clone()));
        for order in [EliminationOrder::Forward, EliminationOrder::Reverse] {
            let sol = solve_homogeneous_with_order(&g, order);
            prop_assert_eq!(sol.rank, rank(&q));
            prop_assert_eq!(sol.rank + sol.nullity, a.cols());
            prop_assert_eq!(sol.basis.len(), sol.nullity);
            for v in &sol.basis {
                for i in 0..g.rows() {
                    let dot: GaussianRational = (0..g.cols())
                        .map(|j| g.at(i, j).clone() * v[j].clone())
                        .fold(GaussianRational::zero(), |acc, t| acc + t);
                    prop_assert!(dot.is_zero());
                }
            }
        }
    }

    #[test]
    fn gaussian_kernel_vectors_are_normalized_and_independent(a in int_matrix(4, 5, 5)) {
        let g = a.to_rational().map(|e| GaussianRational::from_rational(e.clone()));
        let sol = solve_homogeneous(&g);
        for v in &sol.basis {
            let lead = v.iter().position(|e| !e.is_zero());
            let lead = lead.expect("kernel basis vector is nonzero");
            prop_assert!(Rational::one() == v[lead].re && v[lead].im.is_zero());
        }
        if !sol.basis.is_empty() {
            let stacked = Matrix::from_rows(sol.basis.clone());
            prop_assert_eq!(solve_homogeneous(&stacked).rank, sol.nullity);
        }
    }
}
