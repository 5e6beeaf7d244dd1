//! Slow, independent reference implementations used to cross-check the
//! production algorithms on small instances: exhaustive enumeration of
//! invariant monomials, the null-cone degree via 0/1 indicator points, and
//! root adjacency via explicit root enumeration. Nothing here shares code
//! with the routines it checks.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::hilbert::NonnegVector;
use crate::matrix::MatrixZ;
use crate::weights::{weight_equal, Weight, WeightError};

/// All nonzero solutions of `Av = 0`, `v >= 0`, of coordinate sum at most
/// `max_degree`, by plain enumeration.
pub fn enumerate_solutions(a: &MatrixZ, max_degree: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = vec![0u64; a.cols()];
    enumerate_rec(a, max_degree, 0, &mut current, &mut out);
    out.sort();
    out
}

fn enumerate_rec(
    a: &MatrixZ,
    remaining: u64,
    col: usize,
    current: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if col == a.cols() {
        if current.iter().any(|&x| x > 0) && solves(a, current) {
            out.push(current.clone());
        }
        return;
    }
    for value in 0..=remaining {
        current[col] = value;
        enumerate_rec(a, remaining - value, col + 1, current, out);
    }
    current[col] = 0;
}

fn solves(a: &MatrixZ, v: &[u64]) -> bool {
    for i in 0..a.rows() {
        let mut acc = BigInt::zero();
        for (j, &x) in v.iter().enumerate() {
            if x > 0 {
                acc += a.at(i, j) * BigInt::from(x);
            }
        }
        if !acc.is_zero() {
            return false;
        }
    }
    true
}

fn dominates(v: &[u64], w: &[u64]) -> bool {
    v.iter().zip(w).all(|(a, b)| a >= b)
}

/// The minimal nonzero solutions (those not dominating another solution)
/// among all solutions of degree at most `max_degree`. When `max_degree`
/// is at least the true maximal generator degree, this is the full Hilbert
/// basis of `I(A)`.
pub fn brute_force_hilbert(a: &MatrixZ, max_degree: u64) -> Vec<NonnegVector> {
    let solutions = enumerate_solutions(a, max_degree);
    let mut minimal: Vec<Vec<u64>> = Vec::new();
    for v in &solutions {
        if solutions.iter().all(|w| w == v || !dominates(v, w)) {
            minimal.push(v.clone());
        }
    }
    let mut out: Vec<NonnegVector> = minimal.iter().map(|v| NonnegVector::from_u64s(v)).collect();
    out.sort_by_key(|v| (v.degree(), v.entries().to_vec()));
    out
}

/// The null-cone degree by the direct definition, restricted to 0/1
/// indicator points. Monomial vanishing depends only on the support of a
/// point (a monomial vanishes iff its support is not contained in the
/// point's), so the indicator points of the 2^cols supports decide
/// null-cone membership exactly. Returns the least `D <= max_degree` such
/// that every support killed by all invariants of degree `<= D` is killed
/// by all invariants, or `None` when no such degree exists below the cap.
pub fn sigma_by_indicator_points(a: &MatrixZ, max_degree: u64) -> Option<u64> {
    assert!(a.cols() < 32, "oracle is exponential in columns");
    let solutions = enumerate_solutions(a, max_degree);
    let degrees: Vec<u64> = solutions.iter().map(|v| v.iter().sum()).collect();
    let supports: Vec<Vec<bool>> = solutions
        .iter()
        .map(|v| v.iter().map(|&x| x > 0).collect())
        .collect();
    let cols = a.cols();
    // For each subset S, a monomial survives iff its support sits inside S.
    let survives = |support: &[bool], subset: u32| -> bool {
        support
            .iter()
            .enumerate()
            .all(|(j, &used)| !used || subset & (1 << j) != 0)
    };
    'degree: for d in 0..=max_degree {
        for subset in 0..(1u32 << cols) {
            let low_all_vanish =
                (0..solutions.len()).all(|k| degrees[k] > d || !survives(&supports[k], subset));
            if low_all_vanish {
                let all_vanish = (0..solutions.len()).all(|k| !survives(&supports[k], subset));
                if !all_vanish {
                    continue 'degree;
                }
            }
        }
        return Some(d);
    }
    None
}

/// Root adjacency by enumerating every root of the product root system and
/// testing the difference against each, instead of the shape test.
pub fn adjacent_by_enumeration(a: &Weight, b: &Weight) -> Result<bool, WeightError> {
    if a.lattice() != b.lattice() {
        return Err(WeightError::LatticeMismatch);
    }
    let lattice = a.lattice();
    let dim = lattice.dim();
    let mut offset = 0;
    for factor in lattice.factors() {
        for i in 0..factor.size {
            for j in 0..factor.size {
                if i == j {
                    continue;
                }
                let mut shifted = b.coords().to_vec();
                shifted[offset + i] += 1;
                shifted[offset + j] -= 1;
                let candidate = Weight::new(lattice.clone(), shifted)?;
                if weight_equal(a, &candidate)? {
                    return Ok(true);
                }
            }
        }
        offset += factor.size;
    }
    debug_assert_eq!(offset, dim);
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::{hilbert_basis, DEFAULT_NODE_BUDGET};
    use crate::reproduce::matrix_m;
    use crate::weights::{is_root_adjacent, WeightLattice};

    #[test]
    fn enumeration_finds_the_pairing_solutions() {
        let a = MatrixZ::from_i64_rows(vec![vec![1, -1]]);
        assert_eq!(enumerate_solutions(&a, 4), vec![vec![1, 1], vec![2, 2]],);
        assert_eq!(
            brute_force_hilbert(&a, 4),
            vec![NonnegVector::from_u64s(&[1, 1])]
        );
    }

    #[test]
    fn brute_force_agrees_with_the_search_on_a_known_kernel() {
        let m2 = matrix_m(2).unwrap();
        let brute = brute_force_hilbert(&m2, 10);
        let fast = hilbert_basis(&m2, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(brute, fast.generators);
        assert_eq!(brute.len(), 1);
        assert_eq!(brute[0], NonnegVector::from_u64s(&[1, 4, 5]));
    }

    #[test]
    fn indicator_sigma_on_small_examples() {
        // Invariants x1 x2 and x3: the support {x1, x2} survives degree 1
        // but not degree 2, so the null cone needs degree 2.
        let a = MatrixZ::from_i64_rows(vec![vec![1, -1, 0]]);
        assert_eq!(sigma_by_indicator_points(&a, 6), Some(2));

        // No invariants at all: the null cone is everything at degree 0.
        let id = MatrixZ::from_i64_rows(vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(sigma_by_indicator_points(&id, 6), Some(0));
    }

    #[test]
    fn enumeration_matches_the_shape_test_on_a_sample() {
        let lattice = WeightLattice::sl(3);
        let coords = [
            vec![3i64, 0, 0],
            vec![2, 1, 0],
            vec![1, 1, 1],
            vec![2, 0, 1],
            vec![0, 0, 3],
        ];
        let weights: Vec<Weight> = coords
            .iter()
            .map(|c| Weight::new(lattice.clone(), c.clone()).unwrap())
            .collect();
        for a in &weights {
            for b in &weights {
                assert_eq!(
                    is_root_adjacent(a, b).unwrap(),
                    adjacent_by_enumeration(a, b).unwrap(),
                );
            }
        }
    }
}
