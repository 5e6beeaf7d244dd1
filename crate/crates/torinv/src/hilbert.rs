//! Hilbert bases of the monoid of nonnegative integer kernel points.
//!
//! For an integer matrix `A` with `m` columns, `I(A) = {v in Z^m, v >= 0,
//! Av = 0}` is a monoid under addition. Its unique minimal generating set
//! `GI(A)` consists of the minimal nonzero elements of `I(A)` in the
//! componentwise order. The general algorithm here is Contejean-Devie
//! completion: a breadth-first search over nonnegative vectors, starting
//! from the unit vectors, that expands `t` by a unit `e_j` only when
//! `<At, A e_j> < 0` and discards anything that componentwise dominates an
//! already-found solution. Every solution it records is minimal, every
//! minimal solution is reached, and the search always terminates; a node
//! budget turns pathological growth into a hard, reportable error instead
//! of an open-ended run.
//!
//! When the kernel of `A` has dimension 0 or 1 the monoid is read off the
//! kernel ray directly, which also covers kernel generators of exponential
//! degree that no frontier search could reach.

use std::collections::HashSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::matrix::{kernel_basis, MatrixZ};

/// A vector of nonnegative arbitrary-precision integers, graded by the sum
/// of its entries.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NonnegVector {
    entries: Vec<BigUint>,
}

impl NonnegVector {
    pub fn new(entries: Vec<BigUint>) -> Self {
        NonnegVector { entries }
    }

    pub fn from_u64s(entries: &[u64]) -> Self {
        NonnegVector {
            entries: entries.iter().map(|&e| BigUint::from(e)).collect(),
        }
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Sum of the entries.
    pub fn degree(&self) -> BigUint {
        self.entries.iter().sum()
    }

    /// Indices of the nonzero entries, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.entries.len())
            .filter(|&i| !self.entries[i].is_zero())
            .collect()
    }
}

/// The minimal generating set of `I(A)`, together with the matrix it was
/// computed from and the path that produced it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HilbertBasis {
    /// Sorted by (degree, entries), ascending.
    pub generators: Vec<NonnegVector>,
    pub source: MatrixZ,
    /// True when the answer came from the kernel ray instead of the search.
    pub fast_path: bool,
}

impl HilbertBasis {
    /// Largest generator degree, zero for an empty basis.
    pub fn max_degree(&self) -> BigUint {
        self.generators
            .iter()
            .map(NonnegVector::degree)
            .max()
            .unwrap_or_else(BigUint::zero)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HilbertError {
    #[error("vector has {found} entries but the matrix has {expected} columns")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("support index {index} is out of range for {cols} columns")]
    SupportOutOfRange { index: usize, cols: usize },
    #[error("completion frontier exceeded the node budget of {budget}")]
    ResourceLimit { budget: usize },
}

/// Default node budget for the completion search. Generously above anything
/// the bundled scenarios need, small enough to fail fast on hostile input.
pub const DEFAULT_NODE_BUDGET: usize = 1 << 20;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SearchStrategy {
    /// Use the kernel ray when the nullity is at most 1, else the search.
    Auto,
    /// Always run the completion search.
    General,
}

/// Computes `GI(A)`, choosing the kernel-ray shortcut when it applies.
pub fn hilbert_basis(a: &MatrixZ, budget: usize) -> Result<HilbertBasis, HilbertError> {
    hilbert_basis_with_strategy(a, budget, SearchStrategy::Auto)
}

pub fn hilbert_basis_with_strategy(
    a: &MatrixZ,
    budget: usize,
    strategy: SearchStrategy,
) -> Result<HilbertBasis, HilbertError> {
    if strategy == SearchStrategy::Auto {
        let kernel = kernel_basis(&a.to_rational());
        if kernel.len() <= 1 {
            let mut generators = Vec::new();
            if let Some(ray) = kernel.first() {
                // The integer points of the kernel line are the integer
                // multiples of the primitive vector; the nonnegative ones
                // form a monoid generated by it, or vanish entirely when
                // the line leaves the positive orthant.
                if ray.iter().all(|e| !e.is_negative()) {
                    generators.push(NonnegVector::new(
                        ray.iter().map(|e| e.magnitude().clone()).collect(),
                    ));
                }
            }
            return Ok(HilbertBasis {
                generators,
                source: a.clone(),
                fast_path: true,
            });
        }
    }
    let mut generators = contejean_devie(a, budget)?;
    generators.sort_by(|x, y| x.degree().cmp(&y.degree()).then_with(|| x.cmp(y)));
    Ok(HilbertBasis {
        generators,
        source: a.clone(),
        fast_path: false,
    })
}

/// The completion search. Frontier vectors are kept as plain machine words:
/// every entry is bounded by the BFS depth, which the node budget bounds in
/// turn.
fn contejean_devie(a: &MatrixZ, budget: usize) -> Result<Vec<NonnegVector>, HilbertError> {
    let m = a.cols();
    let n = a.rows();
    // Gram matrix of the columns: <At, A e_j> = (Gt)_j, so the search only
    // ever updates the m-vector Gt, never At itself.
    let gram: Vec<Vec<BigInt>> = (0..m)
        .map(|j| {
            (0..m)
                .map(|k| (0..n).map(|i| a.at(i, j) * a.at(i, k)).sum())
                .collect()
        })
        .collect();
    let mut solutions: Vec<Vec<u64>> = Vec::new();
    let mut frontier: Vec<(Vec<u64>, Vec<BigInt>)> = Vec::new();
    let mut nodes: usize = 0;
    for j in 0..m {
        let mut t = vec![0u64; m];
        t[j] = 1;
        frontier.push((t, gram[j].clone()));
        nodes += 1;
        if nodes > budget {
            return Err(HilbertError::ResourceLimit { budget });
        }
    }
    while !frontier.is_empty() {
        // Record this level's solutions first: pruning below must already
        // see them, and equal-degree solutions can never dominate each other.
        for (t, w) in &frontier {
            if w.iter().all(Zero::is_zero) {
                solutions.push(t.clone());
            }
        }
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let mut next: Vec<(Vec<u64>, Vec<BigInt>)> = Vec::new();
        for (t, w) in &frontier {
            if w.iter().all(Zero::is_zero) {
                continue;
            }
            for j in 0..m {
                if !w[j].is_negative() {
                    continue;
                }
                let mut grown = t.clone();
                grown[j] += 1;
                if seen.contains(&grown) || dominates_any(&grown, &solutions) {
                    continue;
                }
                nodes += 1;
                if nodes > budget {
                    return Err(HilbertError::ResourceLimit { budget });
                }
                let w2: Vec<BigInt> = w.iter().zip(&gram[j]).map(|(a, b)| a + b).collect();
                seen.insert(grown.clone());
                next.push((grown, w2));
            }
        }
        frontier = next;
    }
    Ok(solutions
        .into_iter()
        .map(|t| NonnegVector::new(t.into_iter().map(BigUint::from).collect()))
        .collect())
}

fn dominates_any(t: &[u64], solutions: &[Vec<u64>]) -> bool {
    solutions
        .iter()
        .any(|s| s.iter().zip(t).all(|(si, ti)| si <= ti))
}

/// True iff `v >= 0` (by construction) and `Av = 0` exactly.
pub fn is_member(a: &MatrixZ, v: &NonnegVector) -> Result<bool, HilbertError> {
    if v.len() != a.cols() {
        return Err(HilbertError::DimensionMismatch {
            expected: a.cols(),
            found: v.len(),
        });
    }
    let entries: Vec<BigInt> = v
        .entries()
        .iter()
        .map(|e| BigInt::from(e.clone()))
        .collect();
    Ok((0..a.rows()).all(|i| {
        (0..a.cols())
            .map(|j| a.at(i, j) * &entries[j])
            .sum::<BigInt>()
            .is_zero()
    }))
}

/// A nonzero element of `I(A)` of minimal degree whose support lies inside
/// the given column set, or `None` when no such element exists. Ties are
/// broken lexicographically, so the result is deterministic.
pub fn min_support_invariant(
    a: &MatrixZ,
    support: &[usize],
    budget: usize,
) -> Result<Option<NonnegVector>, HilbertError> {
    let mut cols: Vec<usize> = support.to_vec();
    cols.sort_unstable();
    cols.dedup();
    if let Some(&bad) = cols.iter().find(|&&c| c >= a.cols()) {
        return Err(HilbertError::SupportOutOfRange {
            index: bad,
            cols: a.cols(),
        });
    }
    // Restriction to the support columns is itself a torus weight matrix,
    // and minimal elements supported inside the set are exactly the minimal
    // elements of the restricted monoid.
    let sub = a.select_columns(&cols);
    let basis = hilbert_basis(&sub, budget)?;
    let Some(best) = basis.generators.first() else {
        return Ok(None);
    };
    let mut full = vec![BigUint::zero(); a.cols()];
    for (slot, &col) in cols.iter().enumerate() {
        full[col] = best.entries()[slot].clone();
    }
    Ok(Some(NonnegVector::new(full)))
}

/// Minimal degree of a nonzero element of `I(A)` supported inside the given
/// column set, or `None` when there is none.
pub fn min_degree_in_support(
    a: &MatrixZ,
    support: &[usize],
    budget: usize,
) -> Result<Option<BigUint>, HilbertError> {
    Ok(min_support_invariant(a, support, budget)?.map(|v| v.degree()))
}
