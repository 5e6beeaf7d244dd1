//! Degree bounds for torus invariant rings, read off a weight matrix.
//!
//! `beta` is the largest degree in a minimal generating set of the
//! invariant monomials, i.e. the largest degree in the Hilbert basis of
//! `I(A)`. `sigma` is the smallest degree `D` such that the invariants of
//! degree at most `D` cut out the null cone. The criterion used here:
//! that happens iff every Hilbert-basis generator has some nonzero
//! invariant of degree `<= D` supported inside its own support (taking the
//! 0/1 indicator point of a generator's support shows the condition is
//! necessary; conversely a point killing those invariants kills every
//! generator). This turns `sigma` into one minimal-degree subproblem per
//! generator, and `sigma <= beta` always, since each generator supports
//! itself.
//!
//! `compose_lower_bound` transports torus bounds to an ambient group: when
//! a point has a certified closed orbit and its Lie-algebra stabilizer is
//! the acting torus, the ambient invariant degrees are bounded below by the
//! torus ones. The chain is refused outright when a precondition fails.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::hilbert::{
    hilbert_basis, min_support_invariant, HilbertBasis, HilbertError, NonnegVector,
};
use crate::matrix::MatrixZ;
use crate::orbit::ClosedOrbitCertificate;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
    #[error("lower-bound chain broken: {0}")]
    BrokenChain(ChainBreak),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainBreak {
    CertificateNotPassed,
    StabilizerDimMismatch {
        torus_rank: usize,
        stabilizer_dim: usize,
    },
}

impl fmt::Display for ChainBreak {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainBreak::CertificateNotPassed => {
                write!(f, "closed-orbit certificate did not pass")
            }
            ChainBreak::StabilizerDimMismatch {
                torus_rank,
                stabilizer_dim,
            } => write!(
                f,
                "stabilizer dimension {stabilizer_dim} differs from torus rank {torus_rank}"
            ),
        }
    }
}

/// Why one generator forces degree `min_invariant.degree()`: no smaller
/// nonzero invariant lives inside the generator's support, so the support's
/// 0/1 indicator point survives all lower degrees.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SigmaWitness {
    pub generator: NonnegVector,
    pub min_invariant: NonnegVector,
}

impl SigmaWitness {
    pub fn degree(&self) -> BigUint {
        self.min_invariant.degree()
    }
}

/// Audit record for a chained (non-torus) lower bound.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChainRecord {
    pub ambient: String,
    pub stabilizer_dim: usize,
    pub torus_rank: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeBoundReport {
    pub beta: BigUint,
    pub sigma: BigUint,
    pub generators: HilbertBasis,
    pub sigma_witnesses: Vec<SigmaWitness>,
    pub chain: Option<ChainRecord>,
}

/// Largest Hilbert-basis degree; zero when there are no invariants.
pub fn beta_bound(a: &MatrixZ, budget: usize) -> Result<BigUint, BoundsError> {
    Ok(hilbert_basis(a, budget)?.max_degree())
}

/// Smallest degree whose invariants cut out the null cone, by the
/// support-covering criterion above; zero when there are no invariants.
pub fn sigma_bound(a: &MatrixZ, budget: usize) -> Result<BigUint, BoundsError> {
    Ok(degree_bounds(a, budget)?.sigma)
}

/// Computes both bounds and the per-generator witnesses in one pass.
pub fn degree_bounds(a: &MatrixZ, budget: usize) -> Result<DegreeBoundReport, BoundsError> {
    let generators = hilbert_basis(a, budget)?;
    let beta = generators.max_degree();
    let mut sigma_witnesses = Vec::with_capacity(generators.generators.len());
    for generator in &generators.generators {
        let min_invariant = min_support_invariant(a, &generator.support(), budget)?
            .expect("a generator is a nonzero invariant inside its own support");
        sigma_witnesses.push(SigmaWitness {
            generator: generator.clone(),
            min_invariant,
        });
    }
    let sigma = sigma_witnesses
        .iter()
        .map(SigmaWitness::degree)
        .max()
        .unwrap_or_else(BigUint::zero);
    debug_assert!(sigma <= beta);
    Ok(DegreeBoundReport {
        beta,
        sigma,
        generators,
        sigma_witnesses,
        chain: None,
    })
}

/// Lifts a torus report to the ambient group acting on the full space.
/// Preconditions are hard requirements: the certificate must have passed
/// and the point's Lie-algebra stabilizer must have exactly the rank of
/// the torus the report was computed for. A report is never emitted with
/// weakened claims.
pub fn compose_lower_bound(
    cert: &ClosedOrbitCertificate,
    stabilizer_dim: usize,
    torus_report: &DegreeBoundReport,
    ambient: &str,
) -> Result<DegreeBoundReport, BoundsError> {
    if !cert.passed() {
        return Err(BoundsError::BrokenChain(ChainBreak::CertificateNotPassed));
    }
    let torus_rank = torus_report.generators.source.rows();
    if stabilizer_dim != torus_rank {
        return Err(BoundsError::BrokenChain(
            ChainBreak::StabilizerDimMismatch {
                torus_rank,
                stabilizer_dim,
            },
        ));
    }
    let mut chained = torus_report.clone();
    chained.chain = Some(ChainRecord {
        ambient: ambient.to_string(),
        stabilizer_dim,
        torus_rank,
    });
    Ok(chained)
}

fn degree_u64(d: &BigUint) -> u64 {
    d.to_u64().expect("degree exceeds u64")
}

fn vector_u64(v: &NonnegVector) -> Vec<u64> {
    v.entries()
        .iter()
        .map(|e| e.to_u64().expect("entry exceeds u64"))
        .collect()
}

impl DegreeBoundReport {
    /// JSON form used by reports and the command line.
    pub fn to_json(&self) -> Value {
        let generators: Vec<Vec<u64>> = self.generators.generators.iter().map(vector_u64).collect();
        let witnesses: Vec<Value> = self
            .sigma_witnesses
            .iter()
            .map(|w| {
                json!({
                    "generator": vector_u64(&w.generator),
                    "invariant": vector_u64(&w.min_invariant),
                    "degree": degree_u64(&w.degree()),
                })
            })
            .collect();
        let mut out = json!({
            "beta": degree_u64(&self.beta),
            "sigma": degree_u64(&self.sigma),
            "generators": generators,
            "sigmaWitnesses": witnesses,
        });
        if let Some(chain) = &self.chain {
            out["chain"] = json!({
                "ambient": chain.ambient,
                "stabilizerDim": chain.stabilizer_dim,
                "torusRank": chain.torus_rank,
            });
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::DEFAULT_NODE_BUDGET;
    use crate::orbit::{certify_closed_orbit, NormMode};
    use crate::reproduce::{matrix_m, matrix_n};
    use crate::reps::{coordinate_embedding, BasisElement, RepPoint, Space, Summand};
    use crate::weights::WeightLattice;

    fn deg(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn beta_matches_the_known_kernels() {
        let budget = DEFAULT_NODE_BUDGET;
        assert_eq!(beta_bound(&matrix_m(2).unwrap(), budget).unwrap(), deg(10));
        assert_eq!(beta_bound(&matrix_n(2).unwrap(), budget).unwrap(), deg(15));
    }

    #[test]
    fn identity_weights_have_no_invariants() {
        let a = MatrixZ::from_i64_rows(vec![vec![1, 0], vec![0, 1]]);
        let report = degree_bounds(&a, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(report.beta, deg(0));
        assert_eq!(report.sigma, deg(0));
        assert!(report.sigma_witnesses.is_empty());
    }

    #[test]
    fn sigma_sees_smaller_invariants_inside_supports() {
        // Invariant monomials of [[1,-1,0]]: x1 x2 and x3. The generator
        // (1,1,0) needs degree 2 and (0,0,1) needs degree 1.
        let a = MatrixZ::from_i64_rows(vec![vec![1, -1, 0]]);
        let report = degree_bounds(&a, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(report.beta, deg(2));
        assert_eq!(report.sigma, deg(2));
        let degrees: Vec<BigUint> = report.sigma_witnesses.iter().map(|w| w.degree()).collect();
        assert!(degrees.contains(&deg(1)));
        assert!(degrees.contains(&deg(2)));
    }

    #[test]
    fn single_generator_rings_attain_beta() {
        let report = degree_bounds(&matrix_m(2).unwrap(), DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(report.generators.generators.len(), 1);
        assert_eq!(report.sigma, deg(10));
        assert_eq!(report.beta, deg(10));
    }

    fn quadric_cert(pass: bool) -> ClosedOrbitCertificate {
        // x1 x2 passes; x1^2 does not.
        let exps = if pass { vec![1, 1] } else { vec![2, 0] };
        let mut summand = Summand::new("p");
        summand.add_term(BasisElement::Monomial(exps), "1".parse().unwrap());
        let point = RepPoint {
            space: Space::Sym {
                degree: 2,
                labels: vec!["x1".to_string(), "x2".to_string()],
            },
            lattice: WeightLattice::sl(2),
            summands: vec![summand],
        };
        let emb = coordinate_embedding(&point.space);
        certify_closed_orbit(&point, &emb, NormMode::Symbolic, None).unwrap()
    }

    #[test]
    fn chains_require_all_preconditions() {
        let report = degree_bounds(&matrix_m(2).unwrap(), DEFAULT_NODE_BUDGET).unwrap();
        let cert = quadric_cert(true);

        let chained = compose_lower_bound(&cert, 2, &report, "ambient test").unwrap();
        assert_eq!(chained.beta, report.beta);
        let chain = chained.chain.unwrap();
        assert_eq!(chain.torus_rank, 2);
        assert_eq!(chain.stabilizer_dim, 2);

        assert_eq!(
            compose_lower_bound(&cert, 3, &report, "ambient test").unwrap_err(),
            BoundsError::BrokenChain(ChainBreak::StabilizerDimMismatch {
                torus_rank: 2,
                stabilizer_dim: 3
            })
        );
        assert_eq!(
            compose_lower_bound(&quadric_cert(false), 2, &report, "ambient test").unwrap_err(),
            BoundsError::BrokenChain(ChainBreak::CertificateNotPassed)
        );
    }

    #[test]
    fn report_json_has_the_published_keys() {
        let report = degree_bounds(
            &MatrixZ::from_i64_rows(vec![vec![1, -1, 0]]),
            DEFAULT_NODE_BUDGET,
        )
        .unwrap();
        let value = report.to_json();
        assert_eq!(value["beta"], 2);
        assert_eq!(value["sigma"], 2);
        assert!(value["generators"].is_array());
        assert!(value["sigmaWitnesses"].is_array());
        assert!(value.get("chain").is_none());
    }
}
