//! Explicit bases, torus weights, and weight matrices for symmetric powers
//! and tensor products, plus the Lie-algebra derivation action used for
//! stabilizer computations.
//!
//! Basis orders are fixed: graded-lexicographic (largest first) for monomial
//! bases of `S^d`, odometer order (last index fastest) for tensor bases.
//! Torus embeddings are given extensionally, as one integer weight vector
//! per underlying basis label; the weight of a monomial or decomposable
//! tensor is then the sum of its constituents' weights.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::{MatrixG, MatrixZ};
use crate::scalar::GaussianRational;
use crate::weights::WeightLattice;

/// The representation space a point or basis element lives in. Direct sums
/// are handled one copy at a time: a point stores one term map per summand,
/// all over the same `Space`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Space {
    Sym { degree: u32, labels: Vec<String> },
    Tensor { factors: Vec<Vec<String>> },
}

impl Space {
    /// Sizes of the underlying factor spaces: `[m]` for `S^d(C^m)`, one
    /// entry per factor for tensors.
    pub fn factor_sizes(&self) -> Vec<usize> {
        match self {
            Space::Sym { labels, .. } => vec![labels.len()],
            Space::Tensor { factors } => factors.iter().map(|f| f.len()).collect(),
        }
    }

    /// Builds a monomial element from label → exponent assignments.
    pub fn monomial_from_exponents(
        &self,
        exponents: &BTreeMap<String, u32>,
    ) -> Result<BasisElement, RepError> {
        let Space::Sym { degree, labels } = self else {
            return Err(RepError::UnsupportedBasisKind);
        };
        let mut exps = vec![0u32; labels.len()];
        for (label, &e) in exponents {
            let pos =
                labels
                    .iter()
                    .position(|l| l == label)
                    .ok_or_else(|| RepError::UnknownLabel {
                        label: label.clone(),
                    })?;
            exps[pos] += e;
        }
        if exps.iter().sum::<u32>() != *degree {
            return Err(RepError::ElementShape);
        }
        Ok(BasisElement::Monomial(exps))
    }

    /// Builds a decomposable tensor element from one label per factor.
    pub fn tensor_from_labels(&self, chosen: &[String]) -> Result<BasisElement, RepError> {
        let Space::Tensor { factors } = self else {
            return Err(RepError::UnsupportedBasisKind);
        };
        if chosen.len() != factors.len() {
            return Err(RepError::ElementShape);
        }
        let mut idx = Vec::with_capacity(chosen.len());
        for (factor, label) in factors.iter().zip(chosen) {
            let pos =
                factor
                    .iter()
                    .position(|l| l == label)
                    .ok_or_else(|| RepError::UnknownLabel {
                        label: label.clone(),
                    })?;
            idx.push(pos);
        }
        Ok(BasisElement::Tensor(idx))
    }
}

/// One basis vector of a `Space`: an exponent vector over the labels (sym)
/// or one label index per factor (tensor).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum BasisElement {
    Monomial(Vec<u32>),
    Tensor(Vec<usize>),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RepError {
    #[error("no weight assigned to basis vector {label:?}")]
    UnassignedBasisVector { label: String },
    #[error("unknown basis label {label:?}")]
    UnknownLabel { label: String },
    #[error("basis element kind does not match the space")]
    UnsupportedBasisKind,
    #[error("basis element shape does not match the space")]
    ElementShape,
    #[error("algebra factors {found:?} do not match space factors {expected:?}")]
    AlgebraMismatch {
        expected: Vec<usize>,
        found: Vec<usize>,
    },
}

/// All degree-`d` monomials in the given variables, graded-lexicographic
/// with the largest exponent vector first (so `x1^d` leads).
pub fn sym_power_basis(degree: u32, underlying: &[String]) -> Vec<BasisElement> {
    let m = underlying.len();
    if m == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(m);
    fill_exponents(m, degree, &mut prefix, &mut out);
    out
}

fn fill_exponents(m: usize, remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<BasisElement>) {
    if m == 1 {
        prefix.push(remaining);
        out.push(BasisElement::Monomial(prefix.clone()));
        prefix.pop();
        return;
    }
    for e in (0..=remaining).rev() {
        prefix.push(e);
        fill_exponents(m - 1, remaining - e, prefix, out);
        prefix.pop();
    }
}

/// All decomposable basis tensors, odometer order (last factor fastest).
pub fn tensor_basis(factors: &[Vec<String>]) -> Vec<BasisElement> {
    if factors.is_empty() || factors.iter().any(|f| f.is_empty()) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; factors.len()];
    loop {
        out.push(BasisElement::Tensor(idx.clone()));
        let mut k = factors.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < factors[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// The norm class of a basis element: the sorted positive exponents of a
/// monomial, or the single class of decomposable tensors. Elements of the
/// same class have the same norm under any torus-compatible inner product,
/// so classes index the unknown basis norms in orbit certificates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum MonomialType {
    Exponents(Vec<u32>),
    RankOne,
}

pub fn monomial_type(element: &BasisElement) -> MonomialType {
    match element {
        BasisElement::Monomial(exps) => {
            let mut parts: Vec<u32> = exps.iter().copied().filter(|&e| e > 0).collect();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            MonomialType::Exponents(parts)
        }
        BasisElement::Tensor(_) => MonomialType::RankOne,
    }
}

impl fmt::Display for MonomialType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialType::Exponents(parts) => {
                write!(f, "(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
            MonomialType::RankOne => write!(f, "rank-one"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("malformed norm class {input:?}")]
pub struct MonomialTypeParseError {
    pub input: String,
}

impl FromStr for MonomialType {
    type Err = MonomialTypeParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || MonomialTypeParseError {
            input: s.to_string(),
        };
        if s == "rank-one" {
            return Ok(MonomialType::RankOne);
        }
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(bad)?;
        let parts: Vec<u32> = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        if parts.is_empty() || parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(bad());
        }
        Ok(MonomialType::Exponents(parts))
    }
}

impl Serialize for MonomialType {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for MonomialType {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Human-readable form of a basis element: `x1^2*z1` for monomials,
/// `u1*v2*w3` for decomposable tensors.
pub fn format_element(space: &Space, element: &BasisElement) -> Result<String, RepError> {
    match (space, element) {
        (Space::Sym { labels, .. }, BasisElement::Monomial(exps)) => {
            if exps.len() != labels.len() {
                return Err(RepError::ElementShape);
            }
            let parts: Vec<String> = labels
                .iter()
                .zip(exps)
                .filter(|(_, &e)| e > 0)
                .map(|(l, &e)| {
                    if e == 1 {
                        l.clone()
                    } else {
                        format!("{l}^{e}")
                    }
                })
                .collect();
            Ok(if parts.is_empty() {
                "1".to_string()
            } else {
                parts.join("*")
            })
        }
        (Space::Tensor { factors }, BasisElement::Tensor(idx)) => {
            if idx.len() != factors.len() {
                return Err(RepError::ElementShape);
            }
            let parts: Vec<String> = factors
                .iter()
                .zip(idx)
                .map(|(f, &i)| f.get(i).cloned().ok_or(RepError::ElementShape))
                .collect::<Result<_, _>>()?;
            Ok(parts.join("*"))
        }
        _ => Err(RepError::UnsupportedBasisKind),
    }
}

/// A torus action given extensionally: each underlying basis label carries
/// an integer weight vector of length `rank`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TorusEmbedding {
    rank: usize,
    weights: BTreeMap<String, Vec<i64>>,
}

impl TorusEmbedding {
    pub fn new(rank: usize) -> Self {
        TorusEmbedding {
            rank,
            weights: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn assign(&mut self, label: impl Into<String>, weight: Vec<i64>) {
        assert_eq!(weight.len(), self.rank, "weight length must equal rank");
        self.weights.insert(label.into(), weight);
    }

    pub fn weight_of(&self, label: &str) -> Option<&[i64]> {
        self.weights.get(label).map(Vec::as_slice)
    }
}

/// The tautological maximal-torus assignment: each label gets its own
/// coordinate vector, blocks concatenated in factor order. This realizes
/// the acting group's own torus, with rank equal to the ambient dimension.
pub fn coordinate_embedding(space: &Space) -> TorusEmbedding {
    let sizes = space.factor_sizes();
    let rank: usize = sizes.iter().sum();
    let mut emb = TorusEmbedding::new(rank);
    let mut offset = 0;
    let blocks: Vec<&[String]> = match space {
        Space::Sym { labels, .. } => vec![labels.as_slice()],
        Space::Tensor { factors } => factors.iter().map(Vec::as_slice).collect(),
    };
    for block in blocks {
        for (i, label) in block.iter().enumerate() {
            let mut w = vec![0i64; rank];
            w[offset + i] = 1;
            emb.assign(label.clone(), w);
        }
        offset += block.len();
    }
    emb
}

/// Weight of a single basis element: the exponent- or factor-weighted sum
/// of the assigned label weights.
pub fn element_weight(
    space: &Space,
    element: &BasisElement,
    emb: &TorusEmbedding,
) -> Result<Vec<i64>, RepError> {
    let mut acc = vec![0i64; emb.rank()];
    let mut add = |label: &String, mult: i64| -> Result<(), RepError> {
        let w = emb
            .weight_of(label)
            .ok_or_else(|| RepError::UnassignedBasisVector {
                label: label.clone(),
            })?;
        for (a, x) in acc.iter_mut().zip(w) {
            *a += mult * x;
        }
        Ok(())
    };
    match (space, element) {
        (Space::Sym { degree, labels }, BasisElement::Monomial(exps)) => {
            if exps.len() != labels.len() || exps.iter().sum::<u32>() != *degree {
                return Err(RepError::ElementShape);
            }
            for (e, label) in exps.iter().zip(labels) {
                if *e > 0 {
                    add(label, i64::from(*e))?;
                }
            }
        }
        (Space::Tensor { factors }, BasisElement::Tensor(idx)) => {
            if idx.len() != factors.len() {
                return Err(RepError::ElementShape);
            }
            for (factor, &i) in factors.iter().zip(idx) {
                let label = factor.get(i).ok_or(RepError::ElementShape)?;
                add(label, 1)?;
            }
        }
        _ => return Err(RepError::UnsupportedBasisKind),
    }
    Ok(acc)
}

/// An ordered basis together with the integer matrix whose i-th column is
/// the weight of the i-th basis element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightMatrix {
    pub basis: Vec<BasisElement>,
    pub matrix: MatrixZ,
}

pub fn weight_matrix(
    space: &Space,
    basis: &[BasisElement],
    emb: &TorusEmbedding,
) -> Result<WeightMatrix, RepError> {
    let columns: Vec<Vec<i64>> = basis
        .iter()
        .map(|b| element_weight(space, b, emb))
        .collect::<Result<_, _>>()?;
    let matrix = MatrixZ::from_fn(emb.rank(), basis.len(), |i, j| BigInt::from(columns[j][i]));
    Ok(WeightMatrix {
        basis: basis.to_vec(),
        matrix,
    })
}

/// One direct-sum component of a point: a name and a sparse term map with
/// nonzero Gaussian-rational coefficients.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct Summand {
    pub name: String,
    terms: BTreeMap<BasisElement, GaussianRational>,
}

impl Summand {
    pub fn new(name: impl Into<String>) -> Self {
        Summand {
            name: name.into(),
            terms: BTreeMap::new(),
        }
    }

    /// Adds `coeff * element`, merging with any existing term and dropping
    /// the term if the total cancels to zero.
    pub fn add_term(&mut self, element: BasisElement, coeff: GaussianRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(element)
            .or_insert_with(GaussianRational::zero);
        *entry = entry.clone() + coeff;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone());
            if let Some(key) = key {
                self.terms.remove(&key);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisElement, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// A point of `Space^{⊕ summands.len()}` under a group with the given
/// weight lattice, stored summand by summand.
#[derive(Clone, PartialEq, Debug)]
pub struct RepPoint {
    pub space: Space,
    pub lattice: WeightLattice,
    pub summands: Vec<Summand>,
}

/// A product of sl blocks, optionally extended by the scalar directions
/// that cut out the joint-traceless subalgebra of the corresponding gl
/// product (the Lie algebra of a joint-determinant-one group).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AlgebraSpec {
    factors: Vec<usize>,
    joint_trace: bool,
}

impl AlgebraSpec {
    /// sl(m) acting on a single space.
    pub fn sl(size: usize) -> Self {
        AlgebraSpec {
            factors: vec![size],
            joint_trace: false,
        }
    }

    /// A direct sum of sl blocks, factor k acting on tensor factor k.
    pub fn sl_product(sizes: &[usize]) -> Self {
        AlgebraSpec {
            factors: sizes.to_vec(),
            joint_trace: false,
        }
    }

    /// The subalgebra of gl(m_1) ⊕ … ⊕ gl(m_f) with total trace zero:
    /// all sl blocks plus f−1 independent scalar directions.
    pub fn joint_traceless(sizes: &[usize]) -> Self {
        AlgebraSpec {
            factors: sizes.to_vec(),
            joint_trace: true,
        }
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn dim(&self) -> usize {
        let sl: usize = self.factors.iter().map(|m| m * m - 1).sum();
        let scalars = if self.joint_trace {
            self.factors.len().saturating_sub(1)
        } else {
            0
        };
        sl + scalars
    }

    /// Basis directions in a fixed order: per factor all E_ij (i ≠ j,
    /// row-major) then the Cartan differences E_ll − E_{l+1,l+1}; finally
    /// the scalar trace directions pairing consecutive factors.
    fn directions(&self) -> Vec<Direction> {
        let mut dirs = Vec::with_capacity(self.dim());
        for (k, &m) in self.factors.iter().enumerate() {
            for row in 0..m {
                for col in 0..m {
                    if row != col {
                        dirs.push(Direction::Elementary {
                            factor: k,
                            row,
                            col,
                        });
                    }
                }
            }
            for index in 0..m.saturating_sub(1) {
                dirs.push(Direction::Cartan { factor: k, index });
            }
        }
        if self.joint_trace {
            for k in 0..self.factors.len().saturating_sub(1) {
                let (ma, mb) = (self.factors[k] as i64, self.factors[k + 1] as i64);
                let g = gcd_i64(ma, mb);
                // left*ma + right*mb = 0, the smallest integer solution.
                dirs.push(Direction::Scalar {
                    factor_a: k,
                    coeff_a: mb / g,
                    factor_b: k + 1,
                    coeff_b: -ma / g,
                });
            }
        }
        dirs
    }
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    num_integer::Integer::gcd(&a, &b)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Direction {
    /// E_{row,col}: sends basis vector `col` to basis vector `row`.
    Elementary {
        factor: usize,
        row: usize,
        col: usize,
    },
    /// E_ll − E_{l+1,l+1} with l = index.
    Cartan { factor: usize, index: usize },
    /// coeff_a · I on factor_a plus coeff_b · I on factor_b.
    Scalar {
        factor_a: usize,
        coeff_a: i64,
        factor_b: usize,
        coeff_b: i64,
    },
}

/// Applies one algebra direction to one basis element by the derivation
/// rule: Leibniz on monomials, one-factor-at-a-time on tensors. Returns
/// the resulting terms with integer coefficients.
fn apply_direction(
    space: &Space,
    dir: &Direction,
    element: &BasisElement,
) -> Result<Vec<(BasisElement, i64)>, RepError> {
    match (space, element) {
        (Space::Sym { labels, .. }, BasisElement::Monomial(exps)) => {
            if exps.len() != labels.len() {
                return Err(RepError::ElementShape);
            }
            match *dir {
                Direction::Elementary { row, col, .. } => {
                    if exps[col] == 0 {
                        return Ok(Vec::new());
                    }
                    let mut new_exps = exps.clone();
                    new_exps[col] -= 1;
                    new_exps[row] += 1;
                    Ok(vec![(
                        BasisElement::Monomial(new_exps),
                        i64::from(exps[col]),
                    )])
                }
                Direction::Cartan { index, .. } => {
                    let c = i64::from(exps[index]) - i64::from(exps[index + 1]);
                    if c == 0 {
                        Ok(Vec::new())
                    } else {
                        Ok(vec![(element.clone(), c)])
                    }
                }
                Direction::Scalar {
                    coeff_a, coeff_b, ..
                } => {
                    // Single-factor algebras have no scalar directions, but
                    // the identity acts on S^d by multiplication by d.
                    let d = exps.iter().map(|&e| i64::from(e)).sum::<i64>();
                    let c = (coeff_a + coeff_b) * d;
                    if c == 0 {
                        Ok(Vec::new())
                    } else {
                        Ok(vec![(element.clone(), c)])
                    }
                }
            }
        }
        (Space::Tensor { factors }, BasisElement::Tensor(idx)) => {
            if idx.len() != factors.len() {
                return Err(RepError::ElementShape);
            }
            match *dir {
                Direction::Elementary { factor, row, col } => {
                    if idx[factor] != col {
                        return Ok(Vec::new());
                    }
                    let mut new_idx = idx.clone();
                    new_idx[factor] = row;
                    Ok(vec![(BasisElement::Tensor(new_idx), 1)])
                }
                Direction::Cartan { factor, index } => {
                    let c = i64::from(idx[factor] == index) - i64::from(idx[factor] == index + 1);
                    if c == 0 {
                        Ok(Vec::new())
                    } else {
                        Ok(vec![(element.clone(), c)])
                    }
                }
                Direction::Scalar {
                    coeff_a, coeff_b, ..
                } => {
                    // Each identity block multiplies a decomposable tensor
                    // by one, so the pair contributes coeff_a + coeff_b.
                    let c = coeff_a + coeff_b;
                    if c == 0 {
                        Ok(Vec::new())
                    } else {
                        Ok(vec![(element.clone(), c)])
                    }
                }
            }
        }
        _ => Err(RepError::UnsupportedBasisKind),
    }
}

/// The matrix of X ↦ X·point over the chosen algebra basis: one column per
/// algebra direction, one row per basis element (and summand) reachable
/// from the point. Its kernel is the Lie-algebra stabilizer of the point.
pub fn lie_action_matrix(point: &RepPoint, algebra: &AlgebraSpec) -> Result<MatrixG, RepError> {
    let sizes = point.space.factor_sizes();
    if algebra.factors() != sizes.as_slice() {
        return Err(RepError::AlgebraMismatch {
            expected: sizes,
            found: algebra.factors().to_vec(),
        });
    }
    let dirs = algebra.directions();
    let mut columns: Vec<BTreeMap<(usize, BasisElement), GaussianRational>> =
        Vec::with_capacity(dirs.len());
    for dir in &dirs {
        let mut col: BTreeMap<(usize, BasisElement), GaussianRational> = BTreeMap::new();
        for (s, summand) in point.summands.iter().enumerate() {
            for (element, coeff) in summand.terms() {
                for (image, factor) in apply_direction(&point.space, dir, element)? {
                    let contribution = coeff.clone() * GaussianRational::from_integer(factor);
                    let entry = col.entry((s, image)).or_insert_with(GaussianRational::zero);
                    *entry = entry.clone() + contribution;
                }
            }
        }
        columns.push(col);
    }
    let mut row_index: BTreeMap<(usize, BasisElement), usize> = BTreeMap::new();
    for col in &columns {
        for key in col.keys() {
            let next = row_index.len();
            row_index.entry(key.clone()).or_insert(next);
        }
    }
    // Re-number rows in sorted key order so the layout is deterministic.
    for (i, (_, v)) in row_index.iter_mut().enumerate() {
        *v = i;
    }
    let mut mat = MatrixG::from_fn(row_index.len(), dirs.len(), |_, _| GaussianRational::zero());
    for (j, col) in columns.into_iter().enumerate() {
        for (key, value) in col {
            *mat.at_mut(row_index[&key], j) = value;
        }
    }
    Ok(mat)
}
