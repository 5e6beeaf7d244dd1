//! Weight lattices for finite products of GL and SL factors, and the type A
//! root combinatorics on them.
//!
//! Weights are stored as full-length integer coordinate vectors, one block
//! per factor. A GL block is a free lattice; an SL block is read modulo the
//! all-ones vector of that block, which is the single relation among the
//! coordinate weights of an SL factor. The roots of a product are the roots
//! of its factors, so two weights are root adjacent exactly when their
//! difference is zero in all blocks but one and is `e_i - e_j` (up to the
//! block relation) in that one.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum GroupKind {
    Gl,
    Sl,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LatticeFactor {
    pub kind: GroupKind,
    pub size: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WeightLattice {
    factors: Vec<LatticeFactor>,
}

impl WeightLattice {
    pub fn new(factors: Vec<LatticeFactor>) -> Self {
        WeightLattice { factors }
    }

    /// A single SL factor of the given size.
    pub fn sl(size: usize) -> Self {
        WeightLattice {
            factors: vec![LatticeFactor {
                kind: GroupKind::Sl,
                size,
            }],
        }
    }

    pub fn gl(size: usize) -> Self {
        WeightLattice {
            factors: vec![LatticeFactor {
                kind: GroupKind::Gl,
                size,
            }],
        }
    }

    pub fn product_sl(sizes: &[usize]) -> Self {
        WeightLattice {
            factors: sizes
                .iter()
                .map(|&size| LatticeFactor {
                    kind: GroupKind::Sl,
                    size,
                })
                .collect(),
        }
    }

    pub fn factors(&self) -> &[LatticeFactor] {
        &self.factors
    }

    /// Total coordinate count across all blocks.
    pub fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.size).sum()
    }

    fn block_ranges(&self) -> impl Iterator<Item = (LatticeFactor, std::ops::Range<usize>)> + '_ {
        let mut start = 0;
        self.factors.iter().map(move |&f| {
            let range = start..start + f.size;
            start += f.size;
            (f, range)
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Weight {
    lattice: WeightLattice,
    coords: Vec<i64>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeightError {
    #[error("weights live on different lattices")]
    LatticeMismatch,
    #[error("weight has {found} coordinates, lattice has {expected}")]
    CoordinateLength { expected: usize, found: usize },
}

impl Weight {
    pub fn new(lattice: WeightLattice, coords: Vec<i64>) -> Result<Self, WeightError> {
        if coords.len() != lattice.dim() {
            return Err(WeightError::CoordinateLength {
                expected: lattice.dim(),
                found: coords.len(),
            });
        }
        Ok(Weight { lattice, coords })
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn lattice(&self) -> &WeightLattice {
        &self.lattice
    }
}

fn check_same_lattice(a: &Weight, b: &Weight) -> Result<(), WeightError> {
    if a.lattice != b.lattice {
        return Err(WeightError::LatticeMismatch);
    }
    Ok(())
}

/// Zero test for one block of a difference vector: exact zero for GL,
/// constant (a multiple of all-ones) for SL.
fn block_is_zero(kind: GroupKind, d: &[i64]) -> bool {
    match kind {
        GroupKind::Gl => d.iter().all(|&x| x == 0),
        GroupKind::Sl => d.windows(2).all(|w| w[0] == w[1]),
    }
}

/// Root test for one block of a difference vector. A root is `e_i - e_j`
/// with `i != j`; in an SL block the representative is only determined up to
/// a multiple `c` of all-ones, and summing shows `c` must be the mean of the
/// entries. After subtracting it, the block must be one `+1`, one `-1`, and
/// zeros.
fn block_is_root(kind: GroupKind, d: &[i64]) -> bool {
    let c = match kind {
        GroupKind::Gl => 0,
        GroupKind::Sl => {
            let m = d.len() as i128;
            let s: i128 = d.iter().map(|&x| i128::from(x)).sum();
            if s.rem_euclid(m) != 0 {
                return false;
            }
            match i64::try_from(s.div_euclid(m)) {
                Ok(c) => c,
                Err(_) => return false,
            }
        }
    };
    let (mut plus, mut minus) = (0u32, 0u32);
    for &x in d {
        match x - c {
            0 => {}
            1 => plus += 1,
            -1 => minus += 1,
            _ => return false,
        }
    }
    plus == 1 && minus == 1
}

/// Blockwise equality: exact in GL blocks, modulo all-ones in SL blocks.
pub fn weight_equal(a: &Weight, b: &Weight) -> Result<bool, WeightError> {
    check_same_lattice(a, b)?;
    let d: Vec<i64> = a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect();
    Ok(a.lattice
        .block_ranges()
        .all(|(f, r)| block_is_zero(f.kind, &d[r])))
}

/// True iff the difference of the two weights is a root of the product root
/// system: supported in exactly one factor block and a root there.
pub fn is_root_adjacent(a: &Weight, b: &Weight) -> Result<bool, WeightError> {
    check_same_lattice(a, b)?;
    let d: Vec<i64> = a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect();
    let mut nonzero = None;
    for (f, r) in a.lattice.block_ranges() {
        if block_is_zero(f.kind, &d[r.clone()]) {
            continue;
        }
        if nonzero.is_some() {
            return Ok(false);
        }
        nonzero = Some((f, r));
    }
    match nonzero {
        None => Ok(false),
        Some((f, r)) => Ok(block_is_root(f.kind, &d[r])),
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UncrampedReport {
    pub uncramped: bool,
    /// Indices of the first root-adjacent pair found, when there is one.
    pub witness: Option<(usize, usize)>,
}

/// Checks that no pair in the set is root adjacent.
pub fn is_uncramped(set: &[Weight]) -> Result<UncrampedReport, WeightError> {
    for i in 0..set.len() {
        for j in i + 1..set.len() {
            if is_root_adjacent(&set[i], &set[j])? {
                return Ok(UncrampedReport {
                    uncramped: false,
                    witness: Some((i, j)),
                });
            }
        }
    }
    Ok(UncrampedReport {
        uncramped: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(lattice: &WeightLattice, coords: Vec<i64>) -> Weight {
        Weight::new(lattice.clone(), coords).unwrap()
    }

    #[test]
    fn sl_equality_is_modulo_all_ones() {
        let sl3 = WeightLattice::sl(3);
        assert!(weight_equal(&w(&sl3, vec![1, 1, 1]), &w(&sl3, vec![0, 0, 0])).unwrap());
        assert!(!weight_equal(&w(&sl3, vec![1, 1, 0]), &w(&sl3, vec![0, 0, 0])).unwrap());
        let gl3 = WeightLattice::gl(3);
        assert!(!weight_equal(&w(&gl3, vec![1, 1, 1]), &w(&gl3, vec![0, 0, 0])).unwrap());
    }

    #[test]
    fn product_equality_is_per_factor() {
        let lat = WeightLattice::product_sl(&[2, 2]);
        assert!(weight_equal(&w(&lat, vec![1, 1, 0, 0]), &w(&lat, vec![0, 0, 1, 1])).unwrap());
        assert!(!weight_equal(&w(&lat, vec![1, 0, 0, 0]), &w(&lat, vec![0, 0, 0, 0])).unwrap());
    }

    #[test]
    fn mismatched_lattices_error() {
        let a = w(&WeightLattice::sl(3), vec![1, 0, 0]);
        let b = w(&WeightLattice::gl(3), vec![1, 0, 0]);
        assert_eq!(weight_equal(&a, &b), Err(WeightError::LatticeMismatch));
        assert_eq!(is_root_adjacent(&a, &b), Err(WeightError::LatticeMismatch));
    }

    #[test]
    fn coordinate_length_is_checked() {
        assert_eq!(
            Weight::new(WeightLattice::sl(3), vec![1, 0]),
            Err(WeightError::CoordinateLength {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn root_difference_is_adjacent() {
        let sl3 = WeightLattice::sl(3);
        // 3*b1 vs 2*b1 + b2 differ by the root b1 - b2.
        assert!(is_root_adjacent(&w(&sl3, vec![3, 0, 0]), &w(&sl3, vec![2, 1, 0])).unwrap());
        // The shift representative: (2,1,1) - (0,0,1) = (2,1,0) = (1,0,-1) + 1.
        assert!(is_root_adjacent(&w(&sl3, vec![2, 1, 1]), &w(&sl3, vec![0, 0, 1])).unwrap());
    }

    #[test]
    fn adjacency_is_irreflexive_and_symmetric() {
        let sl3 = WeightLattice::sl(3);
        let a = w(&sl3, vec![3, 0, 0]);
        let b = w(&sl3, vec![2, 1, 0]);
        assert!(!is_root_adjacent(&a, &a).unwrap());
        assert_eq!(
            is_root_adjacent(&a, &b).unwrap(),
            is_root_adjacent(&b, &a).unwrap()
        );
    }

    #[test]
    fn cubic_leading_weights_are_not_adjacent() {
        // In SL_6 with coordinates (x1, x2, y1, y2, z1, z2):
        // 2*x1 + z1 vs 2*x2 + z2 differ by entries of size 2.
        let sl6 = WeightLattice::sl(6);
        let a = w(&sl6, vec![2, 0, 0, 0, 1, 0]);
        let b = w(&sl6, vec![0, 2, 0, 0, 0, 1]);
        assert!(!is_root_adjacent(&a, &b).unwrap());
    }

    #[test]
    fn tensor_weights_differing_in_two_factors_are_not_adjacent() {
        let lat = WeightLattice::product_sl(&[3, 3, 3]);
        let a = w(&lat, vec![1, 0, 0, 0, 1, 0, 0, 0, 1]);
        let b = w(&lat, vec![0, 1, 0, 0, 0, 1, 1, 0, 0]);
        assert!(!is_root_adjacent(&a, &b).unwrap());
        // Same second and third block, root difference in the first.
        let c = w(&lat, vec![0, 1, 0, 0, 1, 0, 0, 0, 1]);
        assert!(is_root_adjacent(&a, &c).unwrap());
    }

    #[test]
    fn adjacency_is_stable_under_the_block_relation() {
        let lat = WeightLattice::product_sl(&[3, 2]);
        let a = w(&lat, vec![3, 0, 0, 1, 0]);
        let b = w(&lat, vec![2, 1, 0, 1, 0]);
        // Add all-ones to the first block of one argument.
        let shifted = w(&lat, vec![4, 1, 1, 1, 0]);
        assert!(is_root_adjacent(&a, &b).unwrap());
        assert!(is_root_adjacent(&shifted, &b).unwrap());
    }

    #[test]
    fn gl_blocks_do_not_absorb_all_ones_shifts() {
        let gl3 = WeightLattice::gl(3);
        // (2,1,1) - (0,0,1) = (1,0,-1) + all-ones, a root only modulo the
        // SL relation, which GL does not have.
        assert!(!is_root_adjacent(&w(&gl3, vec![2, 1, 1]), &w(&gl3, vec![0, 0, 1])).unwrap());
        assert!(is_root_adjacent(&w(&gl3, vec![1, 0, 0]), &w(&gl3, vec![0, 1, 0])).unwrap());
    }

    #[test]
    fn uncramped_sets_and_witnesses() {
        let sl9 = WeightLattice::sl(9);
        // Weights 2*x_i + z_i for i = 1..3 with labels (x1..x3, y1..y3, z1..z3).
        let mut support = Vec::new();
        for i in 0..3 {
            let mut coords = vec![0i64; 9];
            coords[i] = 2;
            coords[6 + i] = 1;
            support.push(w(&sl9, coords));
        }
        let report = is_uncramped(&support).unwrap();
        assert!(report.uncramped);
        assert_eq!(report.witness, None);

        assert!(is_uncramped(&support[..1]).unwrap().uncramped);

        let sl3 = WeightLattice::sl(3);
        let cramped = vec![w(&sl3, vec![3, 0, 0]), w(&sl3, vec![2, 1, 0])];
        let report = is_uncramped(&cramped).unwrap();
        assert!(!report.uncramped);
        assert_eq!(report.witness, Some((0, 1)));
    }
}
