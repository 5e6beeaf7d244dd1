//! Closed-orbit certificates and Lie-algebra stabilizer dimensions.
//!
//! A point of a direct sum has a closed orbit when (1) the support of every
//! summand is uncramped and (2) the norm-weighted sum of support weights
//! vanishes in the weight lattice. Basis norms enter condition (2) only
//! through the norm class of each basis element, so the check runs in two
//! modes: symbolic, which demands that the weight sum of every class
//! vanishes separately (sufficient for all positive norm assignments), and
//! numeric, which evaluates the single sum for one supplied assignment.
//! The criterion is one-directional: a failed certificate means undecided,
//! never "not closed".

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::matrix::{solve_homogeneous_with_order, EliminationOrder};
use crate::reps::{
    element_weight, lie_action_matrix, monomial_type, AlgebraSpec, BasisElement, MonomialType,
    MonomialTypeParseError, RepError, RepPoint, Space, Summand, TorusEmbedding,
};
use crate::scalar::{
    format_rational, parse_rational, GaussianRational, Rational, ScalarParseError,
};
use crate::weights::{is_uncramped, GroupKind, Weight, WeightError, WeightLattice};

#[derive(Debug, Error, PartialEq)]
pub enum OrbitError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error("numeric mode requires a norms table")]
    MissingNorms,
    #[error("no norm supplied for class {class}")]
    MissingClassNorm { class: String },
    #[error("norm for class {class} must be positive")]
    NonPositiveNorm { class: String },
    #[error("point lattice dimension {lattice} does not match embedding rank {rank}")]
    RankMismatch { lattice: usize, rank: usize },
    #[error("term must give exactly one of \"monomial\" or \"tensor\"")]
    TermShape,
    #[error(transparent)]
    BadNormClass(#[from] MonomialTypeParseError),
    #[error(transparent)]
    BadNormValue(#[from] ScalarParseError),
}

fn ser_rational<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

fn ser_rationals<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(format_rational))
}

fn ser_opt_rationals<S: Serializer>(v: &Option<Vec<Rational>>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => ser_rationals(v, s),
        None => s.serialize_none(),
    }
}

/// One support entry of a summand: a weight that appears with nonzero
/// component, the exact squared norm of the coefficients carrying it, and
/// the norm class of the underlying basis elements.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct SupportTerm {
    pub weight: Weight,
    #[serde(rename = "normSqr", serialize_with = "ser_rational")]
    pub norm_sqr: Rational,
    pub class: MonomialType,
}

/// Per-summand supports: terms grouped by (class, weight), in class order.
pub fn support_weights(
    point: &RepPoint,
    emb: &TorusEmbedding,
) -> Result<Vec<Vec<SupportTerm>>, OrbitError> {
    if emb.rank() != point.lattice.dim() {
        return Err(OrbitError::RankMismatch {
            lattice: point.lattice.dim(),
            rank: emb.rank(),
        });
    }
    let mut out = Vec::with_capacity(point.summands.len());
    for summand in &point.summands {
        let mut groups: BTreeMap<(MonomialType, Vec<i64>), Rational> = BTreeMap::new();
        for (element, coeff) in summand.terms() {
            let weight = element_weight(&point.space, element, emb)?;
            let class = monomial_type(element);
            let entry = groups.entry((class, weight)).or_insert_with(Rational::zero);
            *entry += coeff.norm_sqr();
        }
        let mut terms = Vec::with_capacity(groups.len());
        for ((class, coords), norm_sqr) in groups {
            terms.push(SupportTerm {
                weight: Weight::new(point.lattice.clone(), coords)?,
                norm_sqr,
                class,
            });
        }
        out.push(terms);
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NormMode {
    Symbolic,
    Numeric,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Both conditions verified: the orbit is closed.
    ClosedOrbit,
    /// Some condition failed. The criterion is sufficient only, so no
    /// conclusion about the orbit is drawn.
    Undecided,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct SupportAudit {
    pub summand: String,
    pub terms: Vec<SupportTerm>,
    pub uncramped: bool,
}

/// The weight sum of one norm class, and whether it vanishes in the
/// lattice (exactly in GL blocks, modulo all-ones in SL blocks).
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct ClassSum {
    pub class: MonomialType,
    #[serde(serialize_with = "ser_rationals")]
    pub total: Vec<Rational>,
    pub vanishes: bool,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
#[serde(tag = "condition", rename_all = "kebab-case")]
pub enum FailureWitness {
    /// Condition (1): a summand support contains a root-adjacent pair.
    #[serde(rename = "support-cramped")]
    RootAdjacentPair {
        summand: String,
        first: Weight,
        second: Weight,
    },
    /// Condition (2), symbolic mode: one class sum does not vanish.
    #[serde(rename = "class-sum-nonzero")]
    ClassSumNonzero {
        class: MonomialType,
        #[serde(serialize_with = "ser_rationals")]
        total: Vec<Rational>,
    },
    /// Condition (2), numeric mode: the weighted sum does not vanish.
    #[serde(rename = "weighted-sum-nonzero")]
    WeightedSumNonzero {
        #[serde(serialize_with = "ser_rationals")]
        total: Vec<Rational>,
    },
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct ClosedOrbitCertificate {
    pub mode: NormMode,
    pub supports: Vec<SupportAudit>,
    #[serde(rename = "classSums")]
    pub class_sums: Vec<ClassSum>,
    /// Numeric mode only: the single norm-weighted total.
    #[serde(rename = "numericTotal", serialize_with = "ser_opt_rationals")]
    pub numeric_total: Option<Vec<Rational>>,
    pub verdict: Verdict,
    pub failure: Option<FailureWitness>,
}

impl ClosedOrbitCertificate {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::ClosedOrbit
    }
}

fn sum_vanishes(lattice: &WeightLattice, total: &[Rational]) -> bool {
    let mut offset = 0;
    for f in lattice.factors() {
        let block = &total[offset..offset + f.size];
        let ok = match f.kind {
            GroupKind::Gl => block.iter().all(|x| x.is_zero()),
            GroupKind::Sl => block.windows(2).all(|w| w[0] == w[1]),
        };
        if !ok {
            return false;
        }
        offset += f.size;
    }
    true
}

/// Checks the two closed-orbit conditions and returns the full audit.
/// Condition (1) is checked first; the recorded failure is the first check
/// that fails, scanning summands then class sums in order.
pub fn certify_closed_orbit(
    point: &RepPoint,
    emb: &TorusEmbedding,
    mode: NormMode,
    norms: Option<&BTreeMap<MonomialType, Rational>>,
) -> Result<ClosedOrbitCertificate, OrbitError> {
    if mode == NormMode::Numeric && norms.is_none() {
        return Err(OrbitError::MissingNorms);
    }
    let supports = support_weights(point, emb)?;

    let mut failure = None;
    let mut audits = Vec::with_capacity(supports.len());
    for (summand, terms) in point.summands.iter().zip(&supports) {
        let weights: Vec<Weight> = terms.iter().map(|t| t.weight.clone()).collect();
        let report = is_uncramped(&weights)?;
        if !report.uncramped && failure.is_none() {
            let (i, j) = report.witness.expect("cramped set has a witness");
            failure = Some(FailureWitness::RootAdjacentPair {
                summand: summand.name.clone(),
                first: weights[i].clone(),
                second: weights[j].clone(),
            });
        }
        audits.push(SupportAudit {
            summand: summand.name.clone(),
            terms: terms.clone(),
            uncramped: report.uncramped,
        });
    }

    let rank = emb.rank();
    let mut by_class: BTreeMap<MonomialType, Vec<Rational>> = BTreeMap::new();
    for terms in &supports {
        for term in terms {
            let total = by_class
                .entry(term.class.clone())
                .or_insert_with(|| vec![Rational::zero(); rank]);
            for (t, &c) in total.iter_mut().zip(term.weight.coords()) {
                *t += &term.norm_sqr * Rational::from_integer(c.into());
            }
        }
    }
    let class_sums: Vec<ClassSum> = by_class
        .into_iter()
        .map(|(class, total)| {
            let vanishes = sum_vanishes(&point.lattice, &total);
            ClassSum {
                class,
                total,
                vanishes,
            }
        })
        .collect();

    let mut numeric_total = None;
    match mode {
        NormMode::Symbolic => {
            if failure.is_none() {
                if let Some(bad) = class_sums.iter().find(|c| !c.vanishes) {
                    failure = Some(FailureWitness::ClassSumNonzero {
                        class: bad.class.clone(),
                        total: bad.total.clone(),
                    });
                }
            }
        }
        NormMode::Numeric => {
            let norms = norms.expect("checked above");
            let mut total = vec![Rational::zero(); rank];
            for sum in &class_sums {
                let norm = norms
                    .get(&sum.class)
                    .ok_or_else(|| OrbitError::MissingClassNorm {
                        class: sum.class.to_string(),
                    })?;
                if *norm <= Rational::zero() {
                    return Err(OrbitError::NonPositiveNorm {
                        class: sum.class.to_string(),
                    });
                }
                for (t, x) in total.iter_mut().zip(&sum.total) {
                    *t += norm * x;
                }
            }
            if failure.is_none() && !sum_vanishes(&point.lattice, &total) {
                failure = Some(FailureWitness::WeightedSumNonzero {
                    total: total.clone(),
                });
            }
            numeric_total = Some(total);
        }
    }

    let verdict = if failure.is_none() {
        Verdict::ClosedOrbit
    } else {
        Verdict::Undecided
    };
    Ok(ClosedOrbitCertificate {
        mode,
        supports: audits,
        class_sums,
        numeric_total,
        verdict,
        failure,
    })
}

/// Dimension of the Lie-algebra stabilizer {X : X·point = 0}, computed as
/// the exact nullity of the action matrix.
pub fn lie_stabilizer_dim(point: &RepPoint, algebra: &AlgebraSpec) -> Result<usize, OrbitError> {
    lie_stabilizer_dim_with_order(point, algebra, EliminationOrder::Forward)
}

/// Same nullity computed under a chosen pivot-column order; agreement of
/// the two orders is a cheap independent check of the elimination.
pub fn lie_stabilizer_dim_with_order(
    point: &RepPoint,
    algebra: &AlgebraSpec,
    order: EliminationOrder,
) -> Result<usize, OrbitError> {
    let mat = lie_action_matrix(point, algebra)?;
    Ok(solve_homogeneous_with_order(&mat, order).nullity)
}

/// On-disk form of a point: labels instead of indices, coefficients as
/// strings, so inputs can be written by hand.
#[derive(Clone, Debug, Serialize, serde::Deserialize)]
pub struct PointFile {
    pub space: Space,
    pub lattice: WeightLattice,
    pub summands: Vec<SummandFile>,
}

#[derive(Clone, Debug, Serialize, serde::Deserialize)]
pub struct SummandFile {
    pub name: String,
    pub terms: Vec<TermFile>,
}

#[derive(Clone, Debug, Serialize, serde::Deserialize)]
pub struct TermFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monomial: Option<BTreeMap<String, u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tensor: Option<Vec<String>>,
    pub coeff: String,
}

impl PointFile {
    pub fn into_point(self) -> Result<RepPoint, OrbitError> {
        let mut summands = Vec::with_capacity(self.summands.len());
        for sf in self.summands {
            let mut summand = Summand::new(sf.name);
            for term in sf.terms {
                let element = match (&term.monomial, &term.tensor) {
                    (Some(exps), None) => self.space.monomial_from_exponents(exps)?,
                    (None, Some(labels)) => self.space.tensor_from_labels(labels)?,
                    _ => return Err(OrbitError::TermShape),
                };
                let coeff: GaussianRational = term.coeff.parse()?;
                summand.add_term(element, coeff);
            }
            summands.push(summand);
        }
        Ok(RepPoint {
            space: self.space,
            lattice: self.lattice,
            summands,
        })
    }
}

/// The inverse of `PointFile::into_point`, for emitting sample inputs.
pub fn point_to_file(point: &RepPoint) -> PointFile {
    let summands = point
        .summands
        .iter()
        .map(|summand| SummandFile {
            name: summand.name.clone(),
            terms: summand
                .terms()
                .map(|(element, coeff)| {
                    let (monomial, tensor) = describe_element(&point.space, element);
                    TermFile {
                        monomial,
                        tensor,
                        coeff: coeff.to_string(),
                    }
                })
                .collect(),
        })
        .collect();
    PointFile {
        space: point.space.clone(),
        lattice: point.lattice.clone(),
        summands,
    }
}

#[allow(clippy::type_complexity)]
fn describe_element(
    space: &Space,
    element: &BasisElement,
) -> (Option<BTreeMap<String, u32>>, Option<Vec<String>>) {
    match (space, element) {
        (Space::Sym { labels, .. }, BasisElement::Monomial(exps)) => {
            let map = labels
                .iter()
                .zip(exps)
                .filter(|(_, &e)| e > 0)
                .map(|(l, &e)| (l.clone(), e))
                .collect();
            (Some(map), None)
        }
        (Space::Tensor { factors }, BasisElement::Tensor(idx)) => {
            let labels = factors
                .iter()
                .zip(idx)
                .map(|(f, &i)| f[i].clone())
                .collect();
            (None, Some(labels))
        }
        _ => (None, None),
    }
}

/// Parses a class → squared-norm table from its string form.
pub fn parse_norms(
    raw: &BTreeMap<String, String>,
) -> Result<BTreeMap<MonomialType, Rational>, OrbitError> {
    let mut out = BTreeMap::new();
    for (class, value) in raw {
        out.insert(class.parse::<MonomialType>()?, parse_rational(value)?);
    }
    Ok(out)
}
