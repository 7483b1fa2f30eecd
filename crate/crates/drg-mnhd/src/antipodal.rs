//! Exact certification for antipodal distance-regular graphs of diameter 3.
//!
//! Every such graph has intersection array `{d, m*gamma, 1; 1, gamma, d}`
//! for a positive integer `m`, giving `n = (1+d)(1+m)` vertices. With
//! `M = sqrt(4d + (d - gamma - m*gamma - 1)^2)` the nonzero Laplacian
//! eigenvalues are
//!
//! ```text
//! lambda_1 = ((d + 1 + gamma + m*gamma) - M) / 2
//! lambda_2 = d + 1
//! lambda_3 = ((d + 1 + gamma + m*gamma) + M) / 2
//! ```
//!
//! `M` is usually irrational, so the certification pipeline runs over
//! [`QuadraticNumber`] values in `Q(sqrt(disc))`; when the discriminant is
//! a perfect square everything collapses to rationals automatically. The
//! monotone heat-ratio property always certifies: distance 1 through case
//! `I`, distance 3 through case `II`, and distance 2 through `I` or `II`
//! depending on the sign of `Delta_12`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use thiserror::Error;

use crate::analysis::{self, AnalysisError, LaplacianPairData, MnhdVerdict, RegularSpectrumContext};
use crate::classical::{FeasibilityReport, IntersectionArray, Violation};
use crate::quadratic::QuadraticNumber;

/// Parameters `(d, gamma, m)` of the array `{d, m*gamma, 1; 1, gamma, d}`.
/// `gamma_c2` is the array's `c_2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AntipodalParams {
    pub degree: u64,
    pub gamma_c2: u64,
    pub m: u64,
}

impl AntipodalParams {
    pub fn new(degree: u64, gamma_c2: u64, m: u64) -> Self {
        Self { degree, gamma_c2, m }
    }
}

impl fmt::Display for AntipodalParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(d={}, gamma={}, m={})", self.degree, self.gamma_c2, self.m)
    }
}

#[derive(Debug, Error)]
pub enum AntipodalError {
    #[error("infeasible parameters: {0}")]
    Infeasible(FeasibilityReport),
    #[error("eigenvalue ordering failed for valid parameters")]
    OrderingViolation,
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

/// Validates positivity of all three parameters and the two derived
/// constraints `a_1 = d - 1 - m*gamma >= 0` and `a_2 = d - 1 - gamma >= 0`.
pub fn validate(p: &AntipodalParams) -> FeasibilityReport {
    let mut violations = Vec::new();
    let push = |violations: &mut Vec<Violation>, constraint: &str, value: String| {
        violations.push(Violation { constraint: constraint.to_string(), value });
    };
    if p.degree == 0 {
        push(&mut violations, "degree_nonpositive", "0".to_string());
    }
    if p.gamma_c2 == 0 {
        push(&mut violations, "gamma_nonpositive", "0".to_string());
    }
    if p.m == 0 {
        push(&mut violations, "m_nonpositive", "0".to_string());
    }
    if !violations.is_empty() {
        return FeasibilityReport { violations };
    }
    let (d, g, m) = (p.degree as i128, p.gamma_c2 as i128, p.m as i128);
    let a1 = d - 1 - m * g;
    if a1 < 0 {
        push(&mut violations, "a1_negative", a1.to_string());
    }
    let a2 = d - 1 - g;
    if a2 < 0 {
        push(&mut violations, "a2_negative", a2.to_string());
    }
    FeasibilityReport { violations }
}

fn rat(v: i128) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `{d, m*gamma, 1; 1, gamma, d}` for feasible parameters.
pub fn intersection_array(p: &AntipodalParams) -> Result<IntersectionArray, AntipodalError> {
    let report = validate(p);
    if !report.feasible() {
        return Err(AntipodalError::Infeasible(report));
    }
    let (d, g, m) = (p.degree as i128, p.gamma_c2 as i128, p.m as i128);
    Ok(IntersectionArray::from_rows(
        vec![rat(d), rat(m * g), rat(1)],
        vec![rat(1), rat(g), rat(d)],
    ))
}

/// `M^2 = 4d + (d - gamma - m*gamma - 1)^2`.
pub fn discriminant(p: &AntipodalParams) -> u64 {
    let (d, g, m) = (p.degree as i128, p.gamma_c2 as i128, p.m as i128);
    let e = d - g - m * g - 1;
    u64::try_from(4 * d + e * e).expect("discriminant fits in u64")
}

/// The three nonzero Laplacian eigenvalues as exact quadratic numbers,
/// with the ordering `0 < lambda_1 < lambda_2 < lambda_3` verified by
/// exact sign tests. The middle eigenvalue is always the rational `d + 1`.
pub fn antipodal_eigenvalues(
    p: &AntipodalParams,
) -> Result<[QuadraticNumber; 3], AntipodalError> {
    let report = validate(p);
    if !report.feasible() {
        return Err(AntipodalError::Infeasible(report));
    }
    let (d, g, m) = (p.degree as i128, p.gamma_c2 as i128, p.m as i128);
    let disc = discriminant(p);
    let s_half = BigRational::new(BigInt::from(d + 1 + g + m * g), BigInt::from(2));
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let lambda1 = QuadraticNumber::new(s_half.clone(), -half.clone(), disc);
    let lambda2 = QuadraticNumber::from_integer(d as i64 + 1);
    let lambda3 = QuadraticNumber::new(s_half, half, disc);
    let ordered = lambda1.signum() == 1 && lambda1 < lambda2 && lambda2 < lambda3;
    if !ordered {
        return Err(AntipodalError::OrderingViolation);
    }
    Ok([lambda1, lambda2, lambda3])
}

fn quadratic_context(
    p: &AntipodalParams,
    array: &IntersectionArray,
) -> Result<RegularSpectrumContext<QuadraticNumber>, AntipodalError> {
    let lambdas = antipodal_eigenvalues(p)?;
    Ok(analysis::context(
        QuadraticNumber::from_rational(array.degree.clone()),
        QuadraticNumber::from_rational(array.vertex_count.clone()),
        lambdas,
    )?)
}

fn pair_at_distance(
    array: &IntersectionArray,
    dist: u32,
) -> Result<LaplacianPairData<QuadraticNumber>, AnalysisError> {
    let l2 = analysis::l2_entry(array, dist)?;
    let l = if dist == 1 { -BigRational::one() } else { BigRational::zero() };
    Ok(LaplacianPairData {
        l: QuadraticNumber::from_rational(l),
        l2: QuadraticNumber::from_rational(l2),
    })
}

/// Certifies the monotone heat-ratio property for a feasible antipodal
/// parameter set, running the generic case checks in exact quadratic
/// arithmetic.
pub fn certify_antipodal(
    p: &AntipodalParams,
) -> Result<MnhdVerdict<QuadraticNumber>, AntipodalError> {
    let array = intersection_array(p)?;
    let ctx = quadratic_context(p, &array)?;
    let mut pairs = Vec::with_capacity(3);
    for dist in 1..=3u32 {
        pairs.push((dist, pair_at_distance(&array, dist)?));
    }
    Ok(analysis::certify_distances(&ctx, pairs))
}

/// One exactly-verified equality: a quantity computed through the general
/// closed forms and its predicted simplified value.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub computed: QuadraticNumber,
    pub predicted: QuadraticNumber,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.computed == self.predicted
    }
}

/// Verifies, in exact arithmetic, every simplification the antipodal
/// analysis rests on: the vertex count, the three square-difference
/// identities for `M^2`, the per-distance scaled projection differences
/// `Delta_i / C_i`, the rearranged cross-difference brackets, and the
/// distance-1 case condition. Each check pairs the value computed through
/// the general closed forms with its predicted antipodal form.
pub fn proof_identity_checks(
    p: &AntipodalParams,
) -> Result<Vec<IdentityCheck>, AntipodalError> {
    let array = intersection_array(p)?;
    let ctx = quadratic_context(p, &array)?;
    let (d, g, m) = (p.degree as i128, p.gamma_c2 as i128, p.m as i128);
    let disc = rat(discriminant(p) as i128);
    let root = QuadraticNumber::sqrt(discriminant(p));
    let q = |v: BigRational| QuadraticNumber::from_rational(v);
    let qi = |v: i128| QuadraticNumber::from_rational(rat(v));
    let half_shifted = |base: i128, sign: i128| {
        // (base +/- M) / 2
        (qi(base) + qi(sign) * root.clone()) / qi(2)
    };
    let mut checks = Vec::new();

    checks.push(IdentityCheck {
        name: "vertex_count_product",
        computed: q(array.vertex_count.clone()),
        predicted: qi((1 + d) * (1 + m)),
    });

    // (1+d)^2 - M^2 = gamma (1+m) (2d - 2 - gamma - m gamma), the slack
    // identity; its right side is gamma (1+m) (a_1 + a_2) >= 0, which
    // forces lambda_1 + lambda_2 - lambda_3 = 1 + d - M >= 0.
    checks.push(IdentityCheck {
        name: "slack_square_difference",
        computed: q(rat((1 + d) * (1 + d)) - disc.clone()),
        predicted: qi(g * (1 + m) * (2 * d - 2 - g - m * g)),
    });
    checks.push(IdentityCheck {
        name: "eigenvalue_slack",
        computed: ctx.lambdas[0].clone() + ctx.lambdas[1].clone() - ctx.lambdas[2].clone(),
        predicted: qi(1 + d) - root.clone(),
    });

    // Per-distance data through the general closed forms.
    let scaled = |dist: u32| -> Result<[QuadraticNumber; 3], AntipodalError> {
        let pair = pair_at_distance(&array, dist)?;
        let profile = analysis::delta_closed_form(&ctx, &pair);
        Ok([
            profile.delta1 / ctx.coefficients[0].clone(),
            profile.delta2 / ctx.coefficients[1].clone(),
            profile.delta3 / ctx.coefficients[2].clone(),
        ])
    };
    let cross_bracket = |dist: u32, i: usize, j: usize| -> Result<QuadraticNumber, AntipodalError> {
        let pair = pair_at_distance(&array, dist)?;
        let profile = analysis::delta_closed_form(&ctx, &pair);
        let delta = match (i, j) {
            (0, 1) => profile.delta12,
            (0, 2) => profile.delta13,
            _ => profile.delta23,
        };
        let scale = ctx.coefficients[i].clone()
            * ctx.coefficients[j].clone()
            * (ctx.lambdas[j].clone() - ctx.lambdas[i].clone());
        Ok(delta * q(array.vertex_count.clone()) / scale)
    };

    // Distance 1: Delta_1/C_1 = Delta_3/C_3 = m gamma, Delta_2/C_2 = -gamma,
    // and the Delta_12 bracket collapses to -lambda_3 b_1.
    let [s1, s2, s3] = scaled(1)?;
    checks.push(IdentityCheck { name: "distance1_delta1_scaled", computed: s1, predicted: qi(m * g) });
    checks.push(IdentityCheck { name: "distance1_delta2_scaled", computed: s2, predicted: qi(-g) });
    checks.push(IdentityCheck { name: "distance1_delta3_scaled", computed: s3, predicted: qi(m * g) });
    checks.push(IdentityCheck {
        name: "distance1_delta12_bracket",
        computed: cross_bracket(1, 0, 1)?,
        predicted: -(half_shifted(1 + d + g + m * g, 1) * qi(m * g)),
    });
    // L^2 - L (lambda_2 + lambda_3) at distance 1.
    let pair1 = pair_at_distance(&array, 1)?;
    let q1 = pair1.l2.clone()
        - pair1.l.clone() * (ctx.lambdas[1].clone() + ctx.lambdas[2].clone());
    checks.push(IdentityCheck {
        name: "distance1_case_condition",
        computed: q1,
        predicted: half_shifted(1 + d + g - m * g, 1),
    });

    // Distance 2: the middle value is -gamma again; the outer values are
    // (1 + d - gamma + m gamma +/- M)/2, nonnegative by the second
    // square-difference identity; the Delta_13 bracket is -(1+d) m gamma.
    let [s1, s2, s3] = scaled(2)?;
    checks.push(IdentityCheck {
        name: "distance2_delta1_scaled",
        computed: s1,
        predicted: half_shifted(1 + d - g + m * g, 1),
    });
    checks.push(IdentityCheck { name: "distance2_delta2_scaled", computed: s2, predicted: qi(-g) });
    checks.push(IdentityCheck {
        name: "distance2_delta3_scaled",
        computed: s3,
        predicted: half_shifted(1 + d - g + m * g, -1),
    });
    checks.push(IdentityCheck {
        name: "distance2_square_difference",
        computed: q(rat((1 + d - g + m * g) * (1 + d - g + m * g)) - disc.clone()),
        predicted: qi(-4 * g * (1 - d * m + m * g)),
    });
    checks.push(IdentityCheck {
        name: "distance2_delta13_bracket",
        computed: cross_bracket(2, 0, 2)?,
        predicted: qi(-(1 + d) * m * g),
    });

    // Distance 3: Delta_2 vanishes; the outer values are
    // (1 + d + gamma + m gamma +/- M)/2, positive by the third
    // square-difference identity; the Delta_13 bracket vanishes.
    let [s1, s2, s3] = scaled(3)?;
    checks.push(IdentityCheck {
        name: "distance3_delta1_scaled",
        computed: s1,
        predicted: half_shifted(1 + d + g + m * g, 1),
    });
    checks.push(IdentityCheck {
        name: "distance3_delta2_scaled",
        computed: s2,
        predicted: QuadraticNumber::from_integer(0),
    });
    checks.push(IdentityCheck {
        name: "distance3_delta3_scaled",
        computed: s3,
        predicted: half_shifted(1 + d + g + m * g, -1),
    });
    checks.push(IdentityCheck {
        name: "distance3_square_difference",
        computed: q(rat((1 + d + g + m * g) * (1 + d + g + m * g)) - disc),
        predicted: qi(4 * d * (1 + m) * g),
    });
    checks.push(IdentityCheck {
        name: "distance3_delta13_bracket",
        computed: cross_bracket(3, 0, 2)?,
        predicted: QuadraticNumber::from_integer(0),
    });

    Ok(checks)
}

/// Grid for antipodal sweeps: all `(d, gamma, m)` with each coordinate at
/// least 1 and at most its bound, enumerated in lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AntipodalSweepSpec {
    pub d_max: u64,
    pub gamma_max: u64,
    pub m_max: u64,
}

impl Default for AntipodalSweepSpec {
    fn default() -> Self {
        Self { d_max: 50, gamma_max: 20, m_max: 20 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum AntipodalPointOutcome {
    Infeasible(FeasibilityReport),
    Certified(MnhdVerdict<QuadraticNumber>),
    NotCertified(MnhdVerdict<QuadraticNumber>),
    /// Pipeline failure after validation; never expected.
    Error(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct AntipodalSweepPoint {
    pub params: AntipodalParams,
    pub outcome: AntipodalPointOutcome,
    /// Names of identity checks that failed (empty for healthy points and
    /// for infeasible ones, where no checks run).
    pub failed_identities: Vec<String>,
}

impl AntipodalSweepPoint {
    pub fn is_anomaly(&self) -> bool {
        matches!(
            self.outcome,
            AntipodalPointOutcome::NotCertified(_) | AntipodalPointOutcome::Error(_)
        ) || !self.failed_identities.is_empty()
    }
}

pub fn antipodal_sweep_grid(spec: &AntipodalSweepSpec) -> Vec<AntipodalParams> {
    let mut grid = Vec::new();
    for d in 1..=spec.d_max {
        for gamma in 1..=spec.gamma_max {
            for m in 1..=spec.m_max {
                grid.push(AntipodalParams::new(d, gamma, m));
            }
        }
    }
    grid
}

/// Certifies every grid point and runs the full identity-check pack on
/// each feasible one. Result order equals grid order at any parallelism;
/// `parallelism = 0` uses all available cores.
pub fn sweep_antipodal(spec: &AntipodalSweepSpec, parallelism: usize) -> Vec<AntipodalSweepPoint> {
    use rayon::prelude::*;

    let grid = antipodal_sweep_grid(spec);
    let evaluate = |params: AntipodalParams| {
        let outcome = match certify_antipodal(&params) {
            Ok(v) if v.certified() => AntipodalPointOutcome::Certified(v),
            Ok(v) => AntipodalPointOutcome::NotCertified(v),
            Err(AntipodalError::Infeasible(report)) => AntipodalPointOutcome::Infeasible(report),
            Err(other) => AntipodalPointOutcome::Error(other.to_string()),
        };
        let failed_identities = match &outcome {
            AntipodalPointOutcome::Infeasible(_) => Vec::new(),
            _ => match proof_identity_checks(&params) {
                Ok(checks) => checks
                    .into_iter()
                    .filter(|c| !c.holds())
                    .map(|c| c.name.to_string())
                    .collect(),
                Err(e) => vec![format!("identity_pipeline_error: {e}")],
            },
        };
        AntipodalSweepPoint { params, outcome, failed_identities }
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism)
        .build()
        .expect("worker pool");
    pool.install(|| grid.into_par_iter().map(evaluate).collect())
}
