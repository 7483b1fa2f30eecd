//! Exact certification of the monotone heat-ratio property.
//!
//! For a connected d-regular graph on n vertices whose Laplacian has
//! spectrum `{0, lambda1, lambda2, lambda3}`, the derivative sign of the
//! normalized heat ratio `r_t(u,v) = H_t(u,v)/H_t(u,u)` is controlled by
//! the projection differences
//!
//! ```text
//! Delta_i(u,v)  = P_i(u,u) - P_i(u,v)
//! Delta_ij(u,v) = P_i(u,v) P_j(u,u) - P_j(u,v) P_i(u,u)
//! ```
//!
//! which, crucially, collapse to closed forms in `d`, `n`, the eigenvalues,
//! and the two matrix entries `L(u,v)`, `L^2(u,v)`. Everything in this
//! module evaluates those closed forms exactly — over the rationals for
//! classical parameter sets, or over any other exact scalar type
//! implementing [`Scalar`] — and decides a sufficient condition for
//! monotonicity case by case.

use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Div, Neg, Sub};
use thiserror::Error;

use crate::classical::{
    self, ClassicalError, ClassicalParams, FeasibilityReport, IntersectionArray,
};

/// Exact scalar arithmetic: cloneable field elements with a decidable order.
/// Implemented by `BigRational`, by [`crate::quadratic::QuadraticNumber`],
/// and (approximately) by `f64`, which lets the floating-point oracle reuse
/// the same closed forms.
pub trait Scalar:
    Clone
    + PartialEq
    + PartialOrd
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + PartialOrd
        + Zero
        + One
        + Neg<Output = Self>
        + Sub<Output = Self>
        + Div<Output = Self>
{
}

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("degenerate spectrum: the three eigenvalues must be pairwise distinct")]
    DegenerateSpectrum,
    #[error("spectrum must satisfy 0 < lambda1 < lambda2 < lambda3")]
    SpectrumNotSortedPositive,
    #[error("distance {0} is outside the supported range")]
    BadDistance(u32),
    #[error("intersection array has diameter {0}, need 3")]
    WrongDiameter(u32),
    #[error("infeasible parameters: {0}")]
    Infeasible(FeasibilityReport),
    #[error("eigenvalue ordering failed for feasible input")]
    UnexpectedOrdering,
}

impl From<ClassicalError> for AnalysisError {
    fn from(e: ClassicalError) -> Self {
        match e {
            ClassicalError::Infeasible(r) => AnalysisError::Infeasible(r),
            ClassicalError::WrongDiameter(d) => AnalysisError::WrongDiameter(d),
            ClassicalError::UnexpectedOrdering => AnalysisError::UnexpectedOrdering,
        }
    }
}

/// Spectral context of a d-regular graph with exactly three nonzero
/// Laplacian eigenvalues, sorted ascending.
///
/// `coefficients[i]` is `C_i = 1 / prod_{m != i} (lambda_m - lambda_i)`;
/// for a sorted spectrum the signs are `(+, -, +)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RegularSpectrumContext<T> {
    pub degree: T,
    pub vertex_count: T,
    pub lambdas: [T; 3],
    pub coefficients: [T; 3],
}

/// The two Laplacian matrix entries that determine a pair's profile:
/// `l = L(u,v)` and `l2 = L^2(u,v)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LaplacianPairData<T> {
    pub l: T,
    pub l2: T,
}

/// The six projection differences of a vertex pair, `Delta_i` for the three
/// nonzero eigenvalues and `Delta_ij` for `i < j`.
#[derive(Debug, Clone, PartialEq)]
pub struct DeltaProfile<T> {
    pub delta1: T,
    pub delta2: T,
    pub delta3: T,
    pub delta12: T,
    pub delta13: T,
    pub delta23: T,
}

/// The three alternative sufficient conditions for pairwise monotonicity,
/// tried in order. All require `Delta_1, Delta_2, Delta_3 >= 0`; beyond
/// that:
///
/// * `I`   needs `L^2 - L(lambda2+lambda3) >= 0` and `Delta_12 >= 0`;
/// * `II`  needs `L^2 - L(lambda1+lambda2) >= 0`, `Delta_13 <= 0`, and
///   `lambda1 + lambda2 - lambda3 >= 0`;
/// * `III` needs `L^2 - L(lambda1+lambda3) >= 0`, `Delta_23 >= 0`, and
///   `lambda1 + lambda2 - lambda3 >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonotoneCase {
    I,
    II,
    III,
}

impl fmt::Display for MonotoneCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MonotoneCase::I => "i",
            MonotoneCase::II => "ii",
            MonotoneCase::III => "iii",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertStatus {
    Certified,
    NotCertified,
}

/// Witness data for one distance class.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceWitness<T> {
    pub distance: u32,
    pub case: Option<MonotoneCase>,
    pub pair: LaplacianPairData<T>,
    pub deltas: DeltaProfile<T>,
    /// `L^2 - L(lambda_a + lambda_b)` for the eigenvalue pairs of cases
    /// `I`, `II`, `III` in that order.
    pub case_conditions: [T; 3],
    pub notes: Vec<String>,
}

/// Certification verdict: certified exactly when every distance class
/// satisfies some [`MonotoneCase`].
#[derive(Debug, Clone, PartialEq)]
pub struct MnhdVerdict<T> {
    pub status: CertStatus,
    /// `lambda1 + lambda2 - lambda3`.
    pub eigenvalue_slack: T,
    pub per_distance: Vec<DistanceWitness<T>>,
}

impl<T> MnhdVerdict<T> {
    pub fn certified(&self) -> bool {
        self.status == CertStatus::Certified
    }
}

fn others(i: usize) -> (usize, usize) {
    match i {
        0 => (1, 2),
        1 => (0, 2),
        2 => (0, 1),
        _ => unreachable!("index must be 0..3"),
    }
}

fn c_const<T: Scalar>(lams: &[T; 3], i: usize) -> T {
    let (j, k) = others(i);
    let dj = lams[j].clone() - lams[i].clone();
    let dk = lams[k].clone() - lams[i].clone();
    T::one() / (dj * dk)
}

/// `d^2 + d - L2 + (L - d)(lambda_j + lambda_k) + lambda_j lambda_k`,
/// the bracket of `Delta_i = C_i { ... }`.
fn delta_single_bracket<T: Scalar>(lams: &[T; 3], d: &T, pair: &LaplacianPairData<T>, i: usize) -> T {
    let (j, k) = others(i);
    let lj = lams[j].clone();
    let lk = lams[k].clone();
    let d2d = d.clone() * d.clone() + d.clone();
    d2d - pair.l2.clone() + (pair.l.clone() - d.clone()) * (lj.clone() + lk.clone()) + lj * lk
}

/// The bracket of `Delta_ij = C_i C_j (lambda_j - lambda_i) { ... }`, a
/// function of the third eigenvalue `lambda_k` only:
/// `(d + w lk) L2 - (d^2 + d + w lk^2) L - ((d^2+d) lk - d lk^2)/n` with
/// `w = (1-n)/n`.
fn delta_pair_bracket<T: Scalar>(
    lams: &[T; 3],
    d: &T,
    n: &T,
    pair: &LaplacianPairData<T>,
    k: usize,
) -> T {
    let lk = lams[k].clone();
    let w = (T::one() - n.clone()) / n.clone();
    let d2d = d.clone() * d.clone() + d.clone();
    (d.clone() + w.clone() * lk.clone()) * pair.l2.clone()
        - (d2d.clone() + w * lk.clone() * lk.clone()) * pair.l.clone()
        - (d2d * lk.clone() - d.clone() * lk.clone() * lk.clone()) / n.clone()
}

fn formal_delta_single<T: Scalar>(lams: &[T; 3], d: &T, pair: &LaplacianPairData<T>, i: usize) -> T {
    c_const(lams, i) * delta_single_bracket(lams, d, pair, i)
}

fn formal_delta_pair<T: Scalar>(
    lams: &[T; 3],
    d: &T,
    n: &T,
    pair: &LaplacianPairData<T>,
    i: usize,
    j: usize,
) -> T {
    let k = 3 - i - j;
    c_const(lams, i)
        * c_const(lams, j)
        * (lams[j].clone() - lams[i].clone())
        * delta_pair_bracket(lams, d, n, pair, k)
}

/// Builds the spectral context, verifying `0 < lambda1 < lambda2 < lambda3`
/// and computing the coefficients `C_i`.
pub fn context<T: Scalar>(
    degree: T,
    vertex_count: T,
    lambdas: [T; 3],
) -> Result<RegularSpectrumContext<T>, AnalysisError> {
    if lambdas[0] == lambdas[1] || lambdas[0] == lambdas[2] || lambdas[1] == lambdas[2] {
        return Err(AnalysisError::DegenerateSpectrum);
    }
    let ascending_positive =
        lambdas[0] > T::zero() && lambdas[0] < lambdas[1] && lambdas[1] < lambdas[2];
    if !ascending_positive {
        return Err(AnalysisError::SpectrumNotSortedPositive);
    }
    let coefficients = [
        c_const(&lambdas, 0),
        c_const(&lambdas, 1),
        c_const(&lambdas, 2),
    ];
    Ok(RegularSpectrumContext { degree, vertex_count, lambdas, coefficients })
}

/// `lambda1 + lambda2 - lambda3`.
pub fn eigenvalue_slack<T: Scalar>(ctx: &RegularSpectrumContext<T>) -> T {
    ctx.lambdas[0].clone() + ctx.lambdas[1].clone() - ctx.lambdas[2].clone()
}

/// `L^2(u,v)` for a pair at the given distance in a diameter-3
/// distance-regular graph: `d^2 + d`, `-2d + a_1`, `c_2`, `0` for distances
/// 0, 1, 2, 3.
pub fn l2_entry(array: &IntersectionArray, dist: u32) -> Result<BigRational, AnalysisError> {
    if array.diameter() != 3 {
        return Err(AnalysisError::WrongDiameter(array.diameter()));
    }
    let d = &array.degree;
    match dist {
        0 => Ok(d * d + d),
        1 => Ok(BigRational::from_integer((-2).into()) * d + array.a_i(1)),
        2 => Ok(array.c_i(2)),
        3 => Ok(BigRational::zero()),
        other => Err(AnalysisError::BadDistance(other)),
    }
}

impl LaplacianPairData<BigRational> {
    /// Pair data for a diameter-3 distance-regular graph:
    /// `L(u,v)` is `d`, `-1`, `0`, `0` at distances 0, 1, 2, 3.
    pub fn at_distance(array: &IntersectionArray, dist: u32) -> Result<Self, AnalysisError> {
        let l2 = l2_entry(array, dist)?;
        let l = match dist {
            0 => array.degree.clone(),
            1 => -BigRational::one(),
            _ => BigRational::zero(),
        };
        Ok(Self { l, l2 })
    }
}

/// Evaluates all six projection differences from the closed forms.
pub fn delta_closed_form<T: Scalar>(
    ctx: &RegularSpectrumContext<T>,
    pair: &LaplacianPairData<T>,
) -> DeltaProfile<T> {
    let lams = &ctx.lambdas;
    let single = |i: usize| {
        ctx.coefficients[i].clone() * delta_single_bracket(lams, &ctx.degree, pair, i)
    };
    let cross = |i: usize, j: usize| {
        let k = 3 - i - j;
        ctx.coefficients[i].clone()
            * ctx.coefficients[j].clone()
            * (lams[j].clone() - lams[i].clone())
            * delta_pair_bracket(lams, &ctx.degree, &ctx.vertex_count, pair, k)
    };
    DeltaProfile {
        delta1: single(0),
        delta2: single(1),
        delta3: single(2),
        delta12: cross(0, 1),
        delta13: cross(0, 2),
        delta23: cross(1, 2),
    }
}

/// `Delta_i` at a given distance of a diameter-3 distance-regular graph,
/// via the per-distance bracket forms:
///
/// ```text
/// dist 1:  C_i { (lj - d - 1)(lk - d - 1) + d - a_1 - 1 }
/// dist 2:  C_i { (lj - d)(lk - d) + d - c_2 }
/// dist 3:  C_i { (lj - d)(lk - d) + d }
/// ```
///
/// These are the general closed forms after substituting that distance's
/// `L`, `L^2` entries; agreement is exact.
pub fn delta_drg(
    ctx: &RegularSpectrumContext<BigRational>,
    array: &IntersectionArray,
    dist: u32,
) -> Result<[BigRational; 3], AnalysisError> {
    if array.diameter() != 3 {
        return Err(AnalysisError::WrongDiameter(array.diameter()));
    }
    let d = &array.degree;
    let one = BigRational::one();
    let (shift, offset) = match dist {
        1 => (d + &one, d - array.a_i(1) - &one),
        2 => (d.clone(), d - array.c_i(2)),
        3 => (d.clone(), d.clone()),
        other => return Err(AnalysisError::BadDistance(other)),
    };
    let delta = |i: usize| {
        let (j, k) = others(i);
        let lj = &ctx.lambdas[j];
        let lk = &ctx.lambdas[k];
        ctx.coefficients[i].clone() * ((lj - &shift) * (lk - &shift) + &offset)
    };
    Ok([delta(0), delta(1), delta(2)])
}

/// The distance-1 cross difference `Delta_12` via the rearranged form
///
/// ```text
/// Delta_12 = C_1 C_2 (l2 - l1) / n *
///            { -(n-1-d) l3 (l3 - d - 1) + ((n-1) l3 - n d) b_1 }
/// ```
///
/// equal to the general closed form at distance 1.
pub fn delta12_distance1(
    ctx: &RegularSpectrumContext<BigRational>,
    array: &IntersectionArray,
) -> Result<BigRational, AnalysisError> {
    if array.diameter() != 3 {
        return Err(AnalysisError::WrongDiameter(array.diameter()));
    }
    let d = &array.degree;
    let n = &ctx.vertex_count;
    let l3 = &ctx.lambdas[2];
    let one = BigRational::one();
    let b1 = array.b_i(1);
    let bracket = -((n - &one - d) * l3 * (l3 - d - &one)) + ((n - &one) * l3 - n * d) * b1;
    Ok(ctx.coefficients[0].clone()
        * ctx.coefficients[1].clone()
        * (&ctx.lambdas[1] - &ctx.lambdas[0])
        / n
        * bracket)
}

fn case_conditions<T: Scalar>(
    ctx: &RegularSpectrumContext<T>,
    pair: &LaplacianPairData<T>,
) -> [T; 3] {
    let q = |a: usize, b: usize| {
        pair.l2.clone() - pair.l.clone() * (ctx.lambdas[a].clone() + ctx.lambdas[b].clone())
    };
    [q(1, 2), q(0, 1), q(0, 2)]
}

/// Tries the three sufficient-condition cases in order and returns the
/// first that holds. Requires `Delta_1, Delta_2, Delta_3 >= 0` up front;
/// returns `None` immediately otherwise.
pub fn check_sufficient_cases<T: Scalar>(
    ctx: &RegularSpectrumContext<T>,
    pair: &LaplacianPairData<T>,
    profile: &DeltaProfile<T>,
) -> Option<MonotoneCase> {
    let zero = T::zero();
    if profile.delta1 < zero || profile.delta2 < zero || profile.delta3 < zero {
        return None;
    }
    let [q1, q2, q3] = case_conditions(ctx, pair);
    if q1 >= zero && profile.delta12 >= zero {
        return Some(MonotoneCase::I);
    }
    if eigenvalue_slack(ctx) >= zero {
        if q2 >= zero && profile.delta13 <= zero {
            return Some(MonotoneCase::II);
        }
        if q3 >= zero && profile.delta23 >= zero {
            return Some(MonotoneCase::III);
        }
    }
    None
}

/// Residual of the exact algebraic identity tying the six differences to
/// the pair data: for any role assignment `(i, j, k)` (a permutation of
/// `(1, 2, 3)`, 1-based),
///
/// ```text
/// (li lj / n)(Delta_i + Delta_j) + (lk (li + lj - lk)/n) Delta_k
///   - (lk - li)(lk - lj)(Delta_ik + Delta_jk)  =  L^2 - L (li + lj)
/// ```
///
/// holds identically in `d`, `n`, `L`, `L^2` as long as the eigenvalues are
/// pairwise distinct. Returns `LHS - RHS`, which must be zero.
pub fn identity_residual<T: Scalar>(
    lambdas: &[T; 3],
    degree: &T,
    vertex_count: &T,
    pair: &LaplacianPairData<T>,
    roles: [usize; 3],
) -> Result<T, AnalysisError> {
    let mut sorted = roles;
    sorted.sort_unstable();
    assert_eq!(sorted, [1, 2, 3], "roles must be a permutation of (1, 2, 3)");
    assert!(!vertex_count.is_zero(), "vertex count must be nonzero");
    if lambdas[0] == lambdas[1] || lambdas[0] == lambdas[2] || lambdas[1] == lambdas[2] {
        return Err(AnalysisError::DegenerateSpectrum);
    }
    let (i, j, k) = (roles[0] - 1, roles[1] - 1, roles[2] - 1);
    let (li, lj, lk) = (lambdas[i].clone(), lambdas[j].clone(), lambdas[k].clone());
    let n = vertex_count;

    let d_i = formal_delta_single(lambdas, degree, pair, i);
    let d_j = formal_delta_single(lambdas, degree, pair, j);
    let d_k = formal_delta_single(lambdas, degree, pair, k);
    let d_ik = formal_delta_pair(lambdas, degree, n, pair, i, k);
    let d_jk = formal_delta_pair(lambdas, degree, n, pair, j, k);

    let lhs = li.clone() * lj.clone() / n.clone() * (d_i + d_j)
        + lk.clone() * (li.clone() + lj.clone() - lk.clone()) / n.clone() * d_k
        - (lk.clone() - li.clone()) * (lk - lj.clone()) * (d_ik + d_jk);
    let rhs = pair.l2.clone() - pair.l.clone() * (li + lj);
    Ok(lhs - rhs)
}

/// Certifies the monotone heat-ratio property for a feasible diameter-3
/// classical parameter set, distance class by distance class, recording the
/// full exact witness data.
pub fn certify_classical(p: &ClassicalParams) -> Result<MnhdVerdict<BigRational>, AnalysisError> {
    if p.diameter != 3 {
        return Err(AnalysisError::WrongDiameter(p.diameter));
    }
    let report = classical::validate(p);
    if !report.feasible() {
        return Err(AnalysisError::Infeasible(report));
    }
    let array = classical::intersection_array(p)?;
    let triple = classical::laplacian_eigenvalues_sorted(p)?;
    let ctx = context(array.degree.clone(), array.vertex_count.clone(), triple.as_array())?;
    certify_with_context(&ctx, &array, Some(p))
}

/// Certification walk over a list of distance classes with their pair
/// data, shared by the rational and quadratic-field pipelines.
pub(crate) fn certify_distances<T: Scalar>(
    ctx: &RegularSpectrumContext<T>,
    pairs: Vec<(u32, LaplacianPairData<T>)>,
) -> MnhdVerdict<T> {
    let mut per_distance = Vec::with_capacity(pairs.len());
    for (distance, pair) in pairs {
        let profile = delta_closed_form(ctx, &pair);
        let case = check_sufficient_cases(ctx, &pair, &profile);
        per_distance.push(DistanceWitness {
            distance,
            case,
            case_conditions: case_conditions(ctx, &pair),
            deltas: profile,
            pair,
            notes: Vec::new(),
        });
    }
    let status = if per_distance.iter().all(|w| w.case.is_some()) {
        CertStatus::Certified
    } else {
        CertStatus::NotCertified
    };
    MnhdVerdict { status, eigenvalue_slack: eigenvalue_slack(ctx), per_distance }
}

/// Shared certification walk over the three distance classes.
pub(crate) fn certify_with_context(
    ctx: &RegularSpectrumContext<BigRational>,
    array: &IntersectionArray,
    params: Option<&ClassicalParams>,
) -> Result<MnhdVerdict<BigRational>, AnalysisError> {
    let mut pairs = Vec::with_capacity(3);
    for dist in 1..=3u32 {
        pairs.push((dist, LaplacianPairData::at_distance(array, dist)?));
    }
    let mut verdict = certify_distances(ctx, pairs);
    if let Some(p) = params {
        // The sharp distance-2 branch for b >= 1 proves the strict sign
        // Delta_13 < 0; flag (without failing) any input where only the
        // non-strict version holds.
        let witness = &mut verdict.per_distance[1];
        if p.b >= 1 && witness.deltas.delta13.is_zero() {
            let threshold =
                BigRational::one() + BigRational::from_integer((2 + p.b).into()) * &p.alpha;
            if p.beta < threshold {
                witness.notes.push(
                    "delta13 is exactly zero in the sharp distance-2 branch; \
                     a strict-sign variant of the check would reject this point"
                        .to_string(),
                );
            }
        }
    }
    Ok(verdict)
}

/// Grid specification for classical parameter sweeps: integer `b` in
/// `b_min..=b_max` (skipping 0 and -1), `alpha = k/(1+b)` for integer
/// `k = (1+b) alpha` in `scaled_alpha_min..=scaled_alpha_max`, and `beta`
/// running over all fractions with denominator `|1+b|` in `(0, beta_max]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassicalSweepSpec {
    pub b_min: i64,
    pub b_max: i64,
    pub scaled_alpha_min: i64,
    pub scaled_alpha_max: i64,
    pub beta_max: i64,
}

impl Default for ClassicalSweepSpec {
    fn default() -> Self {
        Self { b_min: -6, b_max: 6, scaled_alpha_min: -12, scaled_alpha_max: 12, beta_max: 12 }
    }
}

/// Outcome at one sweep grid point.
#[derive(Debug, Clone, PartialEq)]
pub enum PointOutcome {
    Infeasible(FeasibilityReport),
    Certified(MnhdVerdict<BigRational>),
    NotCertified(MnhdVerdict<BigRational>),
    /// Pipeline failure after validation; never expected.
    Error(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepPoint {
    pub params: ClassicalParams,
    pub outcome: PointOutcome,
}

impl SweepPoint {
    /// A feasible point that failed to certify (or errored).
    pub fn is_anomaly(&self) -> bool {
        matches!(self.outcome, PointOutcome::NotCertified(_) | PointOutcome::Error(_))
    }
}

/// Enumerates the sweep grid in deterministic order (`b`, then `k`, then
/// the `beta` numerator, each ascending).
pub fn sweep_grid(spec: &ClassicalSweepSpec) -> Vec<ClassicalParams> {
    let mut grid = Vec::new();
    for b in spec.b_min..=spec.b_max {
        if b == 0 || b == -1 {
            continue;
        }
        let denom = (1 + b).unsigned_abs() as i64;
        for k in spec.scaled_alpha_min..=spec.scaled_alpha_max {
            let alpha = BigRational::new(k.into(), (1 + b).into());
            for numer in 1..=spec.beta_max * denom {
                let beta = BigRational::new(numer.into(), denom.into());
                grid.push(ClassicalParams::new(3, b, alpha.clone(), beta));
            }
        }
    }
    grid
}

/// Certifies every grid point, classifying each as infeasible, certified,
/// or an anomaly. The result order equals the grid order no matter how many
/// workers run; `parallelism = 0` uses all available cores.
pub fn sweep_classical(spec: &ClassicalSweepSpec, parallelism: usize) -> Vec<SweepPoint> {
    use rayon::prelude::*;

    let grid = sweep_grid(spec);
    let evaluate = |params: ClassicalParams| {
        let outcome = match certify_classical(&params) {
            Ok(v) if v.certified() => PointOutcome::Certified(v),
            Ok(v) => PointOutcome::NotCertified(v),
            Err(AnalysisError::Infeasible(report)) => PointOutcome::Infeasible(report),
            Err(other) => PointOutcome::Error(other.to_string()),
        };
        SweepPoint { params, outcome }
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism)
        .build()
        .expect("worker pool");
    pool.install(|| grid.into_par_iter().map(evaluate).collect())
}

/// The feasible subset of the sweep grid, in grid order.
pub fn feasible_sweep_params(spec: &ClassicalSweepSpec) -> Vec<ClassicalParams> {
    sweep_grid(spec).into_iter().filter(|p| classical::validate(p).feasible()).collect()
}
