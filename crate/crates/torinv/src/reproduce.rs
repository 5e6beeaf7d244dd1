//! The two worked end-to-end scenarios. Each builds an explicit point with
//! a certified closed orbit, computes its Lie-algebra stabilizer (a torus),
//! restricts to a distinguished subspace whose weight matrix under that
//! torus is one of the structured matrices below, and chains the torus
//! degree bounds into a lower bound for the ambient invariant ring. Every
//! stage records a pass/fail outcome; a bound is asserted only when all of
//! them pass.

use std::fmt;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};
use serde_json::{json, Value};
use thiserror::Error;

use crate::bounds::{compose_lower_bound, degree_bounds, DegreeBoundReport};
use crate::hilbert::DEFAULT_NODE_BUDGET;
use crate::matrix::{Matrix, MatrixFile, MatrixZ};
use crate::orbit::{
    certify_closed_orbit, lie_stabilizer_dim, ClosedOrbitCertificate, FailureWitness, NormMode,
    OrbitError,
};
use crate::reps::{
    coordinate_embedding, format_element, weight_matrix, AlgebraSpec, BasisElement, RepError,
    RepPoint, Space, Summand, TorusEmbedding,
};
use crate::scalar::{GaussianRational, Rational};
use crate::weights::WeightLattice;

#[derive(Debug, Error, PartialEq)]
pub enum ReproduceError {
    #[error("{what} needs n >= {min}, got {n}")]
    SizeTooSmall {
        what: &'static str,
        n: usize,
        min: usize,
    },
    #[error("scalar constraint violated: {0}")]
    ScalarConstraintViolated(ScalarViolation),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarViolation {
    WrongCount { expected: usize, found: usize },
    NotUnitModulus { value: String },
    NotDistinct { value: String },
}

impl fmt::Display for ScalarViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarViolation::WrongCount { expected, found } => {
                write!(f, "expected {expected} scalars per family, found {found}")
            }
            ScalarViolation::NotUnitModulus { value } => {
                write!(f, "scalar {value} does not have unit modulus")
            }
            ScalarViolation::NotDistinct { value } => {
                write!(f, "scalar {value} appears more than once")
            }
        }
    }
}

/// The n x (n+1) weight matrix of the cubic scenario's distinguished
/// subspace: ones on the diagonal, -4 below it, and a wrap-around column
/// pattern `-4` and `3` in the first row.
pub fn matrix_m(n: usize) -> Result<MatrixZ, ReproduceError> {
    if n < 2 {
        return Err(ReproduceError::SizeTooSmall {
            what: "matrix_m",
            n,
            min: 2,
        });
    }
    let mut m = Matrix::from_fn(n, n + 1, |_, _| BigInt::from(0));
    *m.at_mut(0, 0) = BigInt::from(1);
    *m.at_mut(0, n - 1) = BigInt::from(-4);
    *m.at_mut(0, n) = BigInt::from(3);
    for i in 1..n {
        *m.at_mut(i, i) = BigInt::from(1);
        *m.at_mut(i, i - 1) = BigInt::from(-4);
    }
    Ok(m)
}

/// The 3n x (3n-1) block-bidiagonal weight matrix of the tensor scenario's
/// distinguished subspace. Block column 0 is `B = (-2,-2,-2)^t`; block
/// column k (1 <= k <= n-1) carries `I_3` in block row k-1 and
/// `P = -(I_3 + J_3)` in block row k; the last column is `A = (1,1,1)^t` in
/// the final block row.
pub fn matrix_n(n: usize) -> Result<MatrixZ, ReproduceError> {
    if n < 1 {
        return Err(ReproduceError::SizeTooSmall {
            what: "matrix_n",
            n,
            min: 1,
        });
    }
    let mut m = Matrix::from_fn(3 * n, 3 * n - 1, |_, _| BigInt::from(0));
    for r in 0..3 {
        *m.at_mut(r, 0) = BigInt::from(-2);
        *m.at_mut(3 * (n - 1) + r, 3 * n - 2) = BigInt::from(1);
    }
    for k in 1..n {
        for r in 0..3 {
            for c in 0..3 {
                let col = 1 + 3 * (k - 1) + c;
                *m.at_mut(3 * (k - 1) + r, col) = BigInt::from(i64::from(r == c));
                *m.at_mut(3 * k + r, col) = BigInt::from(if r == c { -2 } else { -1 });
            }
        }
    }
    Ok(m)
}

/// The exact unit-circle point (k+i)/(k-i).
fn unit_point(k: i64) -> GaussianRational {
    let re = Rational::from_integer(k.into());
    let num = GaussianRational::new(re.clone(), Rational::one());
    let den = GaussianRational::new(re, -Rational::one());
    num / den
}

/// Unit-modulus scalars for the cubic point: (k+i)/(k-i) for k = 1..n.
/// They are pairwise distinct and no two are negatives of each other
/// (either identity forces the indices to coincide or to multiply to -1),
/// and the first is plain i.
pub fn make_alphas(n: usize) -> Vec<GaussianRational> {
    (1..=n as i64).map(unit_point).collect()
}

/// The three scalar families decorating the G summands of the tensor
/// point: all 3n values pairwise distinct, each of exact unit modulus.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorScalars {
    pub alphas: Vec<GaussianRational>,
    pub betas: Vec<GaussianRational>,
    pub gammas: Vec<GaussianRational>,
}

impl TensorScalars {
    /// Default choice: unit-circle points (k+i)/(k-i) with the index
    /// ranges 1..n, n+1..2n, 2n+1..3n, so all 3n values differ.
    pub fn standard(n: usize) -> Self {
        let band = |lo: usize| {
            (1..=n)
                .map(|k| unit_point((lo + k) as i64))
                .collect::<Vec<_>>()
        };
        TensorScalars {
            alphas: band(0),
            betas: band(n),
            gammas: band(2 * n),
        }
    }

    fn validate(&self, n: usize) -> Result<(), ReproduceError> {
        for family in [&self.alphas, &self.betas, &self.gammas] {
            if family.len() != n {
                return Err(ReproduceError::ScalarConstraintViolated(
                    ScalarViolation::WrongCount {
                        expected: n,
                        found: family.len(),
                    },
                ));
            }
        }
        let all: Vec<&GaussianRational> = self
            .alphas
            .iter()
            .chain(&self.betas)
            .chain(&self.gammas)
            .collect();
        for (i, a) in all.iter().enumerate() {
            if !a.norm_sqr().is_one() {
                return Err(ReproduceError::ScalarConstraintViolated(
                    ScalarViolation::NotUnitModulus {
                        value: a.to_string(),
                    },
                ));
            }
            if all[..i].contains(a) {
                return Err(ReproduceError::ScalarConstraintViolated(
                    ScalarViolation::NotDistinct {
                        value: a.to_string(),
                    },
                ));
            }
        }
        Ok(())
    }
}

fn cubic_labels(n: usize) -> Vec<String> {
    let mut labels = Vec::with_capacity(3 * n);
    for prefix in ["x", "y", "z"] {
        for i in 1..=n {
            labels.push(format!("{prefix}{i}"));
        }
    }
    labels
}

fn tensor_factor_labels(prefix: char, n: usize) -> Vec<String> {
    let mut labels = Vec::with_capacity(3 * n);
    for k in 1..=n {
        for a in 1..=3 {
            labels.push(format!("{prefix}{a}_{k}"));
        }
    }
    labels
}

/// The cubic-forms point: three summands of S^3(C^{3n}) in the variables
/// (x_i, y_i, z_i) — the sums of x_i^2 z_i, of y_i^2 z_i, and of
/// alpha_i x_i y_i z_i — acted on by SL(3n).
pub fn build_cubic_point(n: usize) -> Result<RepPoint, ReproduceError> {
    if n < 1 {
        return Err(ReproduceError::SizeTooSmall {
            what: "build_cubic_point",
            n,
            min: 1,
        });
    }
    let space = Space::Sym {
        degree: 3,
        labels: cubic_labels(n),
    };
    let alphas = make_alphas(n);
    let mut w1 = Summand::new("w1");
    let mut w2 = Summand::new("w2");
    let mut w3 = Summand::new("w3");
    for i in 0..n {
        let (x, y, z) = (i, n + i, 2 * n + i);
        let mut exps = vec![0u32; 3 * n];
        exps[x] = 2;
        exps[z] = 1;
        w1.add_term(BasisElement::Monomial(exps), GaussianRational::one());

        let mut exps = vec![0u32; 3 * n];
        exps[y] = 2;
        exps[z] = 1;
        w2.add_term(BasisElement::Monomial(exps), GaussianRational::one());

        let mut exps = vec![0u32; 3 * n];
        exps[x] = 1;
        exps[y] = 1;
        exps[z] = 1;
        w3.add_term(BasisElement::Monomial(exps), alphas[i].clone());
    }
    Ok(RepPoint {
        space,
        lattice: WeightLattice::sl(3 * n),
        summands: vec![w1, w2, w3],
    })
}

/// Which (u, v, w) slots each of the four plain summands uses, per block.
/// The paired decorated summands reuse the same slots with the scalar
/// families applied in term order.
const TENSOR_TRIPLES: [[(usize, usize, usize); 3]; 4] = [
    [(1, 2, 3), (2, 3, 1), (3, 1, 2)],
    [(2, 1, 3), (1, 3, 2), (3, 2, 1)],
    [(1, 1, 3), (2, 3, 2), (3, 1, 1)],
    [(2, 2, 3), (1, 3, 1), (3, 2, 2)],
];

/// The tensor point: eight summands of U ⊗ V ⊗ W with dim U = V = W = 3n,
/// four with unit coefficients and four decorated with the scalar
/// families, acted on by the determinant-one product group.
pub fn build_tensor_point(n: usize, scalars: &TensorScalars) -> Result<RepPoint, ReproduceError> {
    if n < 1 {
        return Err(ReproduceError::SizeTooSmall {
            what: "build_tensor_point",
            n,
            min: 1,
        });
    }
    scalars.validate(n)?;
    let space = Space::Tensor {
        factors: vec![
            tensor_factor_labels('u', n),
            tensor_factor_labels('v', n),
            tensor_factor_labels('w', n),
        ],
    };
    let mut summands = Vec::with_capacity(8);
    for (d, triples) in TENSOR_TRIPLES.iter().enumerate() {
        let mut plain = Summand::new(format!("F{}", d + 1));
        let mut decorated = Summand::new(format!("G{}", d + 1));
        for k in 0..n {
            let families = [&scalars.alphas, &scalars.betas, &scalars.gammas];
            for (pos, &(a, b, c)) in triples.iter().enumerate() {
                let element =
                    BasisElement::Tensor(vec![3 * k + a - 1, 3 * k + b - 1, 3 * k + c - 1]);
                plain.add_term(element.clone(), GaussianRational::one());
                decorated.add_term(element, families[pos][k].clone());
            }
        }
        summands.push(plain);
        summands.push(decorated);
    }
    Ok(RepPoint {
        space,
        lattice: WeightLattice::product_sl(&[3 * n, 3 * n, 3 * n]),
        summands,
    })
}

/// An ordered monomial (or rank-one tensor) basis of a subspace, together
/// with the subtorus whose weights it diagonalizes.
#[derive(Clone, PartialEq, Debug)]
pub struct Subspace {
    pub space: Space,
    pub basis: Vec<BasisElement>,
    pub embedding: TorusEmbedding,
}

/// The cubic scenario's subspace: x_i z_{i+1}^2 (indices wrapping) and
/// x_1^3, with the rank-n torus acting by t·x_i = t_i x_i, t·y_i = t_i y_i,
/// t·z_i = t_i^{-2} z_i. Its weight matrix is exactly `matrix_m(n)`.
pub fn build_subspace_u(n: usize) -> Result<Subspace, ReproduceError> {
    if n < 2 {
        return Err(ReproduceError::SizeTooSmall {
            what: "build_subspace_u",
            n,
            min: 2,
        });
    }
    let space = Space::Sym {
        degree: 3,
        labels: cubic_labels(n),
    };
    let mut basis = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut exps = vec![0u32; 3 * n];
        exps[i] = 1;
        exps[2 * n + (i + 1) % n] = 2;
        basis.push(BasisElement::Monomial(exps));
    }
    let mut cube = vec![0u32; 3 * n];
    cube[0] = 3;
    basis.push(BasisElement::Monomial(cube));

    let mut embedding = TorusEmbedding::new(n);
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        embedding.assign(format!("x{}", i + 1), e.clone());
        embedding.assign(format!("y{}", i + 1), e.clone());
        let mut minus2 = vec![0i64; n];
        minus2[i] = -2;
        embedding.assign(format!("z{}", i + 1), minus2);
    }
    Ok(Subspace {
        space,
        basis,
        embedding,
    })
}

/// The tensor scenario's subspace: rank-one tensors aligned so that the
/// weight matrix under the rank-3n torus (p_k, q_k, r_k) equals
/// `matrix_n(n)` column for column. The torus scales u1, u2 by p, u3 by
/// (qr)^{-1}, and cyclically for the v and w factors.
pub fn build_subspace_l(n: usize) -> Result<Subspace, ReproduceError> {
    if n < 1 {
        return Err(ReproduceError::SizeTooSmall {
            what: "build_subspace_l",
            n,
            min: 1,
        });
    }
    let space = Space::Tensor {
        factors: vec![
            tensor_factor_labels('u', n),
            tensor_factor_labels('v', n),
            tensor_factor_labels('w', n),
        ],
    };
    // Slot a in block k of one factor sits at index 3k + a - 1.
    let elem = |(a, ka): (usize, usize), (b, kb): (usize, usize), (c, kc): (usize, usize)| {
        BasisElement::Tensor(vec![3 * ka + a - 1, 3 * kb + b - 1, 3 * kc + c - 1])
    };
    let mut basis = Vec::with_capacity(3 * n - 1);
    basis.push(elem((3, 0), (3, 0), (3, 0)));
    for k in 0..n - 1 {
        basis.push(elem((1, k), (3, k + 1), (3, k + 1)));
        basis.push(elem((3, k + 1), (1, k), (3, k + 1)));
        basis.push(elem((3, k + 1), (3, k + 1), (1, k)));
    }
    basis.push(elem((1, n - 1), (1, n - 1), (1, n - 1)));

    let rank = 3 * n;
    let mut embedding = TorusEmbedding::new(rank);
    for k in 0..n {
        let (p, q, r) = (3 * k, 3 * k + 1, 3 * k + 2);
        let unit = |j: usize| {
            let mut e = vec![0i64; rank];
            e[j] = 1;
            e
        };
        let minus_pair = |a: usize, b: usize| {
            let mut e = vec![0i64; rank];
            e[a] = -1;
            e[b] = -1;
            e
        };
        let block = k + 1;
        embedding.assign(format!("u1_{block}"), unit(p));
        embedding.assign(format!("u2_{block}"), unit(p));
        embedding.assign(format!("u3_{block}"), minus_pair(q, r));
        embedding.assign(format!("v1_{block}"), unit(q));
        embedding.assign(format!("v2_{block}"), unit(q));
        embedding.assign(format!("v3_{block}"), minus_pair(p, r));
        embedding.assign(format!("w1_{block}"), unit(r));
        embedding.assign(format!("w2_{block}"), unit(r));
        embedding.assign(format!("w3_{block}"), minus_pair(p, q));
    }
    Ok(Subspace {
        space,
        basis,
        embedding,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Scenario {
    Cubic,
    Tensor,
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scenario::Cubic => write!(f, "cubic"),
            Scenario::Tensor => write!(f, "tensor"),
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct StageOutcome {
    pub stage: String,
    pub passed: bool,
    pub detail: String,
}

/// Everything one scenario run produces: per-stage outcomes, the
/// intermediate artifacts, and the asserted bound (present only when every
/// stage passed).
#[derive(Clone, PartialEq, Debug)]
pub struct ScenarioReport {
    pub scenario: Scenario,
    pub n: usize,
    pub stages: Vec<StageOutcome>,
    pub certificate: Option<ClosedOrbitCertificate>,
    pub stabilizer_dim: Option<usize>,
    pub expected_stabilizer_dim: usize,
    pub subspace_basis: Vec<String>,
    pub weight_matrix: Option<MatrixZ>,
    pub bounds: Option<DegreeBoundReport>,
    pub chained: Option<DegreeBoundReport>,
    pub formula: String,
    pub formula_value: BigUint,
    pub final_bound: Option<BigUint>,
    pub notes: Vec<String>,
}

impl ScenarioReport {
    pub fn passed(&self) -> bool {
        !self.stages.is_empty() && self.stages.iter().all(|s| s.passed)
    }

    fn push_stage(&mut self, stage: &str, passed: bool, detail: String) {
        self.stages.push(StageOutcome {
            stage: stage.to_string(),
            passed,
            detail,
        });
    }

    pub fn to_json(&self) -> Value {
        let stages: Vec<Value> = self
            .stages
            .iter()
            .map(|s| json!({"stage": s.stage, "passed": s.passed, "detail": s.detail}))
            .collect();
        json!({
            "scenario": self.scenario.to_string(),
            "n": self.n,
            "passed": self.passed(),
            "stages": stages,
            "certificate": self.certificate.as_ref().map(|c| {
                serde_json::to_value(c).expect("certificate serializes")
            }),
            "stabilizerDim": self.stabilizer_dim,
            "expectedStabilizerDim": self.expected_stabilizer_dim,
            "subspaceBasis": self.subspace_basis,
            "weightMatrix": self.weight_matrix.as_ref().map(|m| {
                serde_json::to_value(MatrixFile::from_integer(m)).expect("matrix serializes")
            }),
            "bounds": self.bounds.as_ref().map(DegreeBoundReport::to_json),
            "chain": self.chained.as_ref().map(DegreeBoundReport::to_json),
            "formula": self.formula,
            "formulaValue": biguint_u64(&self.formula_value),
            "finalBound": self.final_bound.as_ref().map(biguint_u64),
            "notes": self.notes,
        })
    }

    /// Deterministic pretty JSON: identical runs give identical bytes.
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# Lower-bound reproduction: {} scenario, n = {}\n",
            self.scenario, self.n
        );
        let _ = writeln!(out, "| stage | result | detail |");
        let _ = writeln!(out, "|---|---|---|");
        for s in &self.stages {
            let result = if s.passed { "pass" } else { "FAIL" };
            let _ = writeln!(out, "| {} | {} | {} |", s.stage, result, s.detail);
        }
        let _ = writeln!(out);
        match &self.final_bound {
            Some(bound) => {
                let _ = writeln!(
                    out,
                    "Asserted lower bound on generator degrees: **{bound}** \
                     (closed form {}).",
                    self.formula
                );
            }
            None => {
                let _ = writeln!(out, "No bound asserted: at least one stage failed.");
            }
        }
        if let Some(dim) = self.stabilizer_dim {
            let _ = writeln!(
                out,
                "\nStabilizer dimension {dim} (expected {}).",
                self.expected_stabilizer_dim
            );
        }
        if !self.notes.is_empty() {
            let _ = writeln!(out, "\nNotes:");
            for note in &self.notes {
                let _ = writeln!(out, "- {note}");
            }
        }
        out
    }
}

fn biguint_u64(d: &BigUint) -> u64 {
    d.to_u64().expect("degree exceeds u64")
}

fn power_of_four(n: usize) -> BigUint {
    BigUint::from(4u32).pow(n as u32)
}

fn describe_failure(witness: &FailureWitness) -> String {
    match witness {
        FailureWitness::RootAdjacentPair { summand, .. } => {
            format!("support of summand {summand} contains a root-adjacent pair")
        }
        FailureWitness::ClassSumNonzero { class, .. } => {
            format!("weight sum of class {class} is nonzero")
        }
        FailureWitness::WeightedSumNonzero { .. } => "norm-weighted sum is nonzero".to_string(),
    }
}

struct PipelineInput {
    scenario: Scenario,
    n: usize,
    point: RepPoint,
    algebra: AlgebraSpec,
    expected_dim: usize,
    subspace: Subspace,
    expected_matrix: MatrixZ,
    ambient: String,
    formula: String,
    formula_value: BigUint,
    notes: Vec<String>,
}

fn run_pipeline(input: PipelineInput) -> Result<ScenarioReport, ReproduceError> {
    let mut report = ScenarioReport {
        scenario: input.scenario,
        n: input.n,
        stages: Vec::new(),
        certificate: None,
        stabilizer_dim: None,
        expected_stabilizer_dim: input.expected_dim,
        subspace_basis: Vec::new(),
        weight_matrix: None,
        bounds: None,
        chained: None,
        formula: input.formula,
        formula_value: input.formula_value,
        final_bound: None,
        notes: input.notes,
    };

    let term_count: usize = input.point.summands.iter().map(|s| s.terms().count()).sum();
    report.push_stage(
        "build-point",
        true,
        format!(
            "{} summands, {} terms",
            input.point.summands.len(),
            term_count
        ),
    );

    let emb = coordinate_embedding(&input.point.space);
    let cert = certify_closed_orbit(&input.point, &emb, NormMode::Symbolic, None)?;
    let detail = match &cert.failure {
        None => "support and weight-sum conditions hold".to_string(),
        Some(witness) => describe_failure(witness),
    };
    report.push_stage("certify-closed-orbit", cert.passed(), detail);
    report.certificate = Some(cert.clone());

    let dim = lie_stabilizer_dim(&input.point, &input.algebra)?;
    report.stabilizer_dim = Some(dim);
    report.push_stage(
        "stabilizer-dimension",
        dim == input.expected_dim,
        format!("computed {dim}, expected {}", input.expected_dim),
    );

    for element in &input.subspace.basis {
        report
            .subspace_basis
            .push(format_element(&input.subspace.space, element)?);
    }
    let wm = weight_matrix(
        &input.subspace.space,
        &input.subspace.basis,
        &input.subspace.embedding,
    )?;
    let wm_ok = wm.matrix == input.expected_matrix;
    report.weight_matrix = Some(wm.matrix.clone());
    report.push_stage(
        "subspace-weight-matrix",
        wm_ok,
        if wm_ok {
            format!(
                "{}x{} matrix matches the structured target",
                wm.matrix.rows(),
                wm.matrix.cols()
            )
        } else {
            "computed weight matrix differs from the structured target".to_string()
        },
    );

    match degree_bounds(&wm.matrix, DEFAULT_NODE_BUDGET) {
        Ok(db) => {
            report.push_stage(
                "degree-bounds",
                true,
                format!(
                    "beta = {}, sigma = {}, generator count {}",
                    db.beta,
                    db.sigma,
                    db.generators.generators.len()
                ),
            );
            report.bounds = Some(db);
        }
        Err(e) => report.push_stage("degree-bounds", false, e.to_string()),
    }

    match &report.bounds {
        Some(db) => match compose_lower_bound(&cert, dim, db, &input.ambient) {
            Ok(chained) => {
                report.push_stage(
                    "compose-chain",
                    true,
                    format!("bound for {} is >= {}", input.ambient, chained.sigma),
                );
                report.chained = Some(chained);
            }
            Err(e) => report.push_stage("compose-chain", false, e.to_string()),
        },
        None => report.push_stage(
            "compose-chain",
            false,
            "skipped: torus bounds unavailable".to_string(),
        ),
    }

    match &report.bounds {
        Some(db) => {
            let ok = db.beta == report.formula_value && db.sigma == report.formula_value;
            report.push_stage(
                "formula-check",
                ok,
                format!(
                    "beta = {}, sigma = {}, closed form {} = {}",
                    db.beta, db.sigma, report.formula, report.formula_value
                ),
            );
        }
        None => report.push_stage(
            "formula-check",
            false,
            "skipped: torus bounds unavailable".to_string(),
        ),
    }

    if report.passed() {
        report.final_bound = Some(report.formula_value.clone());
    }
    Ok(report)
}

const SIGMA_CRITERION_NOTE: &str = "sigma is computed by the support-covering criterion: the \
smallest D such that every Hilbert-basis generator's support carries a nonzero invariant of \
degree at most D; 0/1 indicator points show this degree and no smaller one cuts out the null \
cone, and an exhaustive oracle cross-checks it on small instances";

const TENSOR_ALIGNMENT_NOTE: &str = "the subspace basis aligns block indices so the weight \
matrix equals the block-bidiagonal target exactly; the variant alignment that shifts the \
first-factor index instead yields a kernel generator of degree 5 at n = 2 and is not used";

const LARGE_N_NOTE: &str = "bounds at this size are computed by exact search; beyond it the \
closed form is checked against the rank-one kernel ray only, since search at exponential \
degrees is infeasible";

/// Runs the cubic scenario end to end. The asserted bound, present when
/// all stages pass, is 2*(4^n - 1)/3.
pub fn reproduce_cubic(n: usize) -> Result<ScenarioReport, ReproduceError> {
    if n < 2 {
        return Err(ReproduceError::SizeTooSmall {
            what: "reproduce_cubic",
            n,
            min: 2,
        });
    }
    let point = build_cubic_point(n)?;
    let m = 3 * n;
    run_pipeline(PipelineInput {
        scenario: Scenario::Cubic,
        n,
        point,
        algebra: AlgebraSpec::sl(m),
        expected_dim: n,
        subspace: build_subspace_u(n)?,
        expected_matrix: matrix_m(n)?,
        ambient: format!("SL({m}) on four copies of the degree-3 forms on C^{m}"),
        formula: "2*(4^n - 1)/3".to_string(),
        formula_value: (power_of_four(n) - 1u32) * 2u32 / 3u32,
        notes: vec![SIGMA_CRITERION_NOTE.to_string(), LARGE_N_NOTE.to_string()],
    })
}

/// Runs the tensor scenario end to end. The asserted bound, present when
/// all stages pass, is 4^n - 1.
pub fn reproduce_tensor(n: usize) -> Result<ScenarioReport, ReproduceError> {
    if n < 1 {
        return Err(ReproduceError::SizeTooSmall {
            what: "reproduce_tensor",
            n,
            min: 1,
        });
    }
    let m = 3 * n;
    let point = build_tensor_point(n, &TensorScalars::standard(n))?;
    run_pipeline(PipelineInput {
        scenario: Scenario::Tensor,
        n,
        point,
        algebra: AlgebraSpec::joint_traceless(&[m, m, m]),
        expected_dim: m,
        subspace: build_subspace_l(n)?,
        expected_matrix: matrix_n(n)?,
        ambient: format!(
            "determinant-one product subgroup of GL({m})^3 on nine copies of the {m}^3 tensors"
        ),
        formula: "4^n - 1".to_string(),
        formula_value: power_of_four(n) - 1u32,
        notes: vec![
            SIGMA_CRITERION_NOTE.to_string(),
            TENSOR_ALIGNMENT_NOTE.to_string(),
            LARGE_N_NOTE.to_string(),
        ],
    })
}
