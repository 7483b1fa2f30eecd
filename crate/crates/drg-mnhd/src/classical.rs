//! Classical parameterizations of distance-regular graphs.
//!
//! A distance-regular graph of diameter `D` has classical parameters
//! `(D, b, alpha, beta)` when its intersection numbers are generated by the
//! Gaussian binomial `[j]_b = 1 + b + ... + b^(j-1)`:
//!
//! ```text
//! b_i = ([D]_b - [i]_b) (beta - alpha [i]_b)      0 <= i < D
//! c_i = [i]_b (1 + alpha [i-1]_b)                 1 <= i <= D
//! a_i = b_0 - b_i - c_i
//! ```
//!
//! `b` is an integer other than 0 and -1, `alpha` and `beta` are rationals
//! with `(1+b) alpha` integral. Every operation here is exact; the
//! floating-point world never enters this module.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

/// Classical parameters `(D, b, alpha, beta)` of a distance-regular graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalParams {
    /// Diameter `D >= 1`.
    pub diameter: u32,
    /// Base of the Gaussian binomial; any integer except 0 and -1.
    pub b: i64,
    pub alpha: BigRational,
    pub beta: BigRational,
}

impl ClassicalParams {
    pub fn new(diameter: u32, b: i64, alpha: BigRational, beta: BigRational) -> Self {
        Self { diameter, b, alpha, beta }
    }

    /// Convenience constructor for integer `alpha`, `beta`.
    pub fn from_integers(diameter: u32, b: i64, alpha: i64, beta: i64) -> Self {
        Self::new(diameter, b, rat(alpha), rat(beta))
    }

    /// `(1+b) * alpha`, the quantity required to be integral.
    pub fn scaled_alpha(&self) -> BigRational {
        rat(1 + self.b) * &self.alpha
    }
}

impl fmt::Display for ClassicalParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(D, b, alpha, beta) = ({}, {}, {}, {})", self.diameter, self.b, self.alpha, self.beta)
    }
}

/// Intersection numbers `{b_0, ..., b_{D-1}; c_1, ..., c_D}` of a
/// distance-regular graph, together with the derived `a_i` row, the degree
/// `d = b_0`, and the vertex count.
///
/// Entries are exact rationals; for a feasible parameter set every entry is
/// a nonnegative integer with `b_i > 0` (i < D) and `c_i > 0` (i >= 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionArray {
    /// `b_0 .. b_{D-1}`.
    pub b_list: Vec<BigRational>,
    /// `c_1 .. c_D`.
    pub c_list: Vec<BigRational>,
    /// `a_0 .. a_D`.
    pub a_list: Vec<BigRational>,
    /// Degree `d = b_0`.
    pub degree: BigRational,
    /// Number of vertices.
    pub vertex_count: BigRational,
}

impl IntersectionArray {
    /// Assembles an array from its `b` and `c` rows; `a_i` and the vertex
    /// count are derived. Callers guarantee the rows are consistent.
    pub fn from_rows(b_list: Vec<BigRational>, c_list: Vec<BigRational>) -> Self {
        assert_eq!(b_list.len(), c_list.len(), "b row is b_0..b_[D-1], c row is c_1..c_D");
        let degree = b_list[0].clone();
        let diameter = b_list.len();
        let a_list = (0..=diameter)
            .map(|i| {
                let b_i = if i < diameter { b_list[i].clone() } else { BigRational::zero() };
                let c_i = if i == 0 { BigRational::zero() } else { c_list[i - 1].clone() };
                &degree - b_i - c_i
            })
            .collect();
        let vertex_count = vertex_count_from_rows(&b_list, &c_list);
        Self { b_list, c_list, a_list, degree, vertex_count }
    }

    pub fn diameter(&self) -> u32 {
        self.b_list.len() as u32
    }

    /// `b_i` with the natural index range `0 ..= D` (`b_D = 0`).
    pub fn b_i(&self, i: usize) -> BigRational {
        if i < self.b_list.len() { self.b_list[i].clone() } else { BigRational::zero() }
    }

    /// `c_i` with the natural index range `0 ..= D` (`c_0 = 0`).
    pub fn c_i(&self, i: usize) -> BigRational {
        if i == 0 { BigRational::zero() } else { self.c_list[i - 1].clone() }
    }

    /// `a_i` for `0 <= i <= D`.
    pub fn a_i(&self, i: usize) -> BigRational {
        self.a_list[i].clone()
    }

    /// Vertices at each distance from a base vertex: `n_0 = 1`,
    /// `n_{i+1} = b_i n_i / c_{i+1}`.
    pub fn counts_by_distance(&self) -> Vec<BigRational> {
        let mut counts = vec![BigRational::one()];
        for i in 0..self.b_list.len() {
            let next = &self.b_list[i] * counts[i].clone() / &self.c_list[i];
            counts.push(next);
        }
        counts
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |xs: &[BigRational]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{{{}; {}}}", row(&self.b_list), row(&self.c_list))
    }
}

/// The three nonzero Laplacian eigenvalues of a diameter-3 instance, sorted
/// ascending, plus the permutation relating them to the unsorted
/// `gamma_i = d - theta_i` (1-based: `lambda_j = gamma_[perm[j-1]]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenvalueTriple {
    pub lambda1: BigRational,
    pub lambda2: BigRational,
    pub lambda3: BigRational,
    pub gamma_permutation: [u8; 3],
}

impl EigenvalueTriple {
    pub fn as_array(&self) -> [BigRational; 3] {
        [self.lambda1.clone(), self.lambda2.clone(), self.lambda3.clone()]
    }
}

/// One violated feasibility constraint: a machine-readable id plus the
/// offending value rendered exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub constraint: String,
    pub value: String,
}

/// Outcome of [`validate`]: feasible iff no violations.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FeasibilityReport {
    pub violations: Vec<Violation>,
}

impl FeasibilityReport {
    pub fn feasible(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, constraint: &str) -> bool {
        self.violations.iter().any(|v| v.constraint == constraint)
    }
}

impl fmt::Display for FeasibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.feasible() {
            return write!(f, "feasible");
        }
        let items: Vec<String> =
            self.violations.iter().map(|v| format!("{}({})", v.constraint, v.value)).collect();
        write!(f, "{}", items.join("; "))
    }
}

#[derive(Debug, Error)]
pub enum ClassicalError {
    #[error("infeasible classical parameters: {0}")]
    Infeasible(FeasibilityReport),
    #[error("operation requires diameter 3, got diameter {0}")]
    WrongDiameter(u32),
    #[error("laplacian eigenvalues violate the expected ordering; input slipped validation")]
    UnexpectedOrdering,
}

/// Gaussian binomial `[j]_b = 1 + b + ... + b^(j-1)`; `[0]_b = 0`.
pub fn gaussian_binomial(j: u32, b: i64) -> BigInt {
    let base = BigInt::from(b);
    let mut acc = BigInt::zero();
    let mut pow = BigInt::one();
    for _ in 0..j {
        acc += &pow;
        pow *= &base;
    }
    acc
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `[0]_b ..= [D]_b` as rationals.
fn gaussians(p: &ClassicalParams) -> Vec<BigRational> {
    (0..=p.diameter).map(|i| BigRational::from_integer(gaussian_binomial(i, p.b))).collect()
}

/// Raw `b`/`c` rows straight from the defining polynomials, with no
/// feasibility assumptions. Used by both [`validate`] and
/// [`intersection_array`].
fn raw_rows(p: &ClassicalParams) -> (Vec<BigRational>, Vec<BigRational>) {
    let q = gaussians(p);
    let dd = p.diameter as usize;
    let b_list: Vec<BigRational> =
        (0..dd).map(|i| (&q[dd] - &q[i]) * (&p.beta - &p.alpha * &q[i])).collect();
    let c_list: Vec<BigRational> =
        (1..=dd).map(|i| &q[i] * (BigRational::one() + &p.alpha * &q[i - 1])).collect();
    (b_list, c_list)
}

fn vertex_count_from_rows(b_list: &[BigRational], c_list: &[BigRational]) -> BigRational {
    let mut total = BigRational::one();
    let mut layer = BigRational::one();
    for i in 0..b_list.len() {
        layer = layer * &b_list[i] / &c_list[i];
        total += &layer;
    }
    total
}

/// Checks every feasibility constraint and reports all violations at once:
/// the forbidden bases `b = 0, -1`, integrality of `(1+b) alpha`, the sign
/// constraints tying `alpha` and `beta` to the sign of `b`, and positivity
/// plus integrality of every intersection number and of the vertex count.
pub fn validate(p: &ClassicalParams) -> FeasibilityReport {
    let mut violations = Vec::new();
    let push = |violations: &mut Vec<Violation>, constraint: &str, value: String| {
        violations.push(Violation { constraint: constraint.to_string(), value });
    };

    if p.diameter == 0 {
        push(&mut violations, "diameter_zero", "0".to_string());
        return FeasibilityReport { violations };
    }
    if p.b == 0 || p.b == -1 {
        push(&mut violations, "b_forbidden", p.b.to_string());
    }
    let scaled = p.scaled_alpha();
    if !scaled.is_integer() {
        push(&mut violations, "scaled_alpha_nonintegral", scaled.to_string());
    }
    if p.b >= 1 && p.alpha.is_negative() {
        push(&mut violations, "alpha_negative_for_positive_b", p.alpha.to_string());
    }
    if p.b <= -2 && p.alpha >= rat(-1) {
        push(&mut violations, "alpha_not_below_minus_one", p.alpha.to_string());
    }
    if p.beta < BigRational::one() + &scaled {
        push(&mut violations, "beta_below_minimum", p.beta.to_string());
    }

    let (b_list, c_list) = raw_rows(p);
    let degree = b_list[0].clone();
    let dd = p.diameter as usize;
    for (i, v) in b_list.iter().enumerate() {
        if *v <= BigRational::zero() {
            push(&mut violations, &format!("b{i}_nonpositive"), v.to_string());
        }
        if !v.is_integer() {
            push(&mut violations, &format!("b{i}_nonintegral"), v.to_string());
        }
    }
    for (idx, v) in c_list.iter().enumerate() {
        let i = idx + 1;
        if *v <= BigRational::zero() {
            push(&mut violations, &format!("c{i}_nonpositive"), v.to_string());
        }
        if !v.is_integer() {
            push(&mut violations, &format!("c{i}_nonintegral"), v.to_string());
        }
    }
    for i in 0..=dd {
        let b_i = if i < dd { b_list[i].clone() } else { BigRational::zero() };
        let c_i = if i == 0 { BigRational::zero() } else { c_list[i - 1].clone() };
        let a_i = &degree - b_i - c_i;
        if a_i.is_negative() {
            push(&mut violations, &format!("a{i}_negative"), a_i.to_string());
        }
        if !a_i.is_integer() {
            push(&mut violations, &format!("a{i}_nonintegral"), a_i.to_string());
        }
    }
    if c_list.iter().all(|c| !c.is_zero()) {
        let n = vertex_count_from_rows(&b_list, &c_list);
        if !n.is_integer() {
            push(&mut violations, "n_nonintegral", n.to_string());
        }
    }

    FeasibilityReport { violations }
}

/// Builds the intersection array of a feasible parameter set.
pub fn intersection_array(p: &ClassicalParams) -> Result<IntersectionArray, ClassicalError> {
    let report = validate(p);
    if !report.feasible() {
        return Err(ClassicalError::Infeasible(report));
    }
    let (b_list, c_list) = raw_rows(p);
    Ok(IntersectionArray::from_rows(b_list, c_list))
}

/// Vertex count of an intersection array. For diameter 3 this is the
/// explicit four-term sum `1 + d + d b_1/c_2 + d b_1 b_2/(c_2 c_3)`; other
/// diameters use the telescoping product over distance layers.
pub fn vertex_count(array: &IntersectionArray) -> BigRational {
    if array.diameter() == 3 {
        let d = &array.degree;
        let b1 = &array.b_list[1];
        let b2 = &array.b_list[2];
        let c2 = &array.c_list[1];
        let c3 = &array.c_list[2];
        BigRational::one() + d + d * b1 / c2 + d * b1 * b2 / (c2 * c3)
    } else {
        vertex_count_from_rows(&array.b_list, &array.c_list)
    }
}

/// Adjacency eigenvalues `theta_0 > ... ` of a feasible parameter set via
/// the general formula `theta_i = b_i / b^i - [i]_b` (with `b_D = 0`),
/// returned in index order `theta_0 ..= theta_D`.
pub fn adjacency_eigenvalues(p: &ClassicalParams) -> Result<Vec<BigRational>, ClassicalError> {
    let report = validate(p);
    if !report.feasible() {
        return Err(ClassicalError::Infeasible(report));
    }
    let (b_list, _) = raw_rows(p);
    let q = gaussians(p);
    let base = rat(p.b);
    let dd = p.diameter as usize;
    let thetas = (0..=dd)
        .map(|i| {
            let b_i = if i < dd { b_list[i].clone() } else { BigRational::zero() };
            b_i / base.pow(i as i32) - &q[i]
        })
        .collect();
    Ok(thetas)
}

/// The three nonzero Laplacian eigenvalues `d - theta_i` of a feasible
/// diameter-3 parameter set, sorted ascending.
///
/// The sign of `b` pins the sorted order: `b >= 1` keeps the natural order
/// `(gamma_1, gamma_2, gamma_3)`, `b <= -2` rotates it to
/// `(gamma_2, gamma_3, gamma_1)`. Both facts are re-verified exactly; a
/// mismatch (impossible for feasible input) is reported as
/// [`ClassicalError::UnexpectedOrdering`].
pub fn laplacian_eigenvalues_sorted(p: &ClassicalParams) -> Result<EigenvalueTriple, ClassicalError> {
    if p.diameter != 3 {
        return Err(ClassicalError::WrongDiameter(p.diameter));
    }
    let thetas = adjacency_eigenvalues(p)?;
    // theta_0 is the degree d
    let degree = thetas[0].clone();
    let gammas: Vec<BigRational> = (1..=3).map(|i| &degree - &thetas[i]).collect();

    let mut order: Vec<usize> = vec![0, 1, 2];
    order.sort_by(|&i, &j| gammas[i].cmp(&gammas[j]));
    let sorted: Vec<BigRational> = order.iter().map(|&i| gammas[i].clone()).collect();

    let strictly_ascending_positive = sorted[0] > BigRational::zero()
        && sorted[0] < sorted[1]
        && sorted[1] < sorted[2];
    let expected: [usize; 3] = if p.b >= 1 { [0, 1, 2] } else { [1, 2, 0] };
    if !strictly_ascending_positive || order != expected {
        return Err(ClassicalError::UnexpectedOrdering);
    }

    Ok(EigenvalueTriple {
        lambda1: sorted[0].clone(),
        lambda2: sorted[1].clone(),
        lambda3: sorted[2].clone(),
        gamma_permutation: [
            (order[0] + 1) as u8,
            (order[1] + 1) as u8,
            (order[2] + 1) as u8,
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    fn assert_int_row(row: &[BigRational], expected: &[i64]) {
        let got: Vec<BigRational> = row.to_vec();
        let want: Vec<BigRational> = expected.iter().map(|&v| rat(v)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn gaussian_binomial_examples() {
        assert_eq!(gaussian_binomial(3, 1), BigInt::from(3));
        assert_eq!(gaussian_binomial(3, -2), BigInt::from(3));
        assert_eq!(gaussian_binomial(0, 5), BigInt::from(0));
        assert_eq!(gaussian_binomial(2, 3), BigInt::from(4));
    }

    #[test]
    fn gaussian_binomial_matches_geometric_sum() {
        for b in [-6i64, -3, -2, 2, 3, 6] {
            for j in 0u32..8 {
                let direct = gaussian_binomial(j, b);
                // (b^j - 1)/(b - 1) for b != 1
                let num = BigInt::from(b).pow(j) - BigInt::from(1);
                let den = BigInt::from(b) - BigInt::from(1);
                assert_eq!(&direct * den, num, "b={b} j={j}");
            }
        }
    }

    #[test]
    fn hypercube_parameters_produce_their_array() {
        let p = ClassicalParams::from_integers(3, 1, 0, 1);
        let arr = intersection_array(&p).unwrap();
        assert_int_row(&arr.b_list, &[3, 2, 1]);
        assert_int_row(&arr.c_list, &[1, 2, 3]);
        assert_int_row(&arr.a_list, &[0, 0, 0, 0]);
        assert_eq!(arr.vertex_count, rat(8));
        assert_eq!(arr.degree, rat(3));
        assert_eq!(arr.to_string(), "{3,2,1; 1,2,3}");
    }

    #[test]
    fn johnson_parameters_produce_their_array() {
        let p = ClassicalParams::from_integers(3, 1, 1, 3);
        let arr = intersection_array(&p).unwrap();
        assert_int_row(&arr.b_list, &[9, 4, 1]);
        assert_int_row(&arr.c_list, &[1, 4, 9]);
        assert_eq!(arr.vertex_count, rat(20));
    }

    #[test]
    fn hermitian_forms_parameters_produce_their_array() {
        let p = ClassicalParams::from_integers(3, -2, -3, 7);
        let arr = intersection_array(&p).unwrap();
        assert_int_row(&arr.b_list, &[21, 20, 16]);
        assert_int_row(&arr.c_list, &[1, 2, 12]);
        assert_int_row(&arr.a_list, &[0, 0, 3, 9]);
        assert_eq!(arr.vertex_count, rat(512));
    }

    /// Diameter-3 closed forms for every entry, written out independently of
    /// the general polynomial route.
    #[test]
    fn diameter_three_closed_forms_agree_with_general_formulas() {
        let cases = [
            (1i64, rat(0), rat(1)),
            (1, rat(1), rat(3)),
            (-2, rat(-3), rat(7)),
            (2, ratio(1, 3), rat(2)),
            (3, rat(1), rat(9)),
            (-3, rat(-2), rat(5)),
        ];
        for (b, alpha, beta) in cases {
            let p = ClassicalParams::new(3, b, alpha.clone(), beta.clone());
            let (b_list, c_list) = raw_rows(&p);
            let br = rat(b);
            let one = BigRational::one();

            let b0 = (&one + &br + &br * &br) * &beta;
            let b1 = (&br + &br * &br) * (&beta - &alpha);
            let b2 = &br * &br * (&beta - &alpha * (&one + &br));
            assert_eq!(b_list, vec![b0.clone(), b1, b2]);

            let c2 = (&one + &br) * (&one + &alpha);
            let c3 = (&one + &br + &br * &br) * (&one + &alpha * (&one + &br));
            assert_eq!(c_list, vec![one.clone(), c2, c3]);

            let a1 = rat(-1) + &br * &alpha + &br * &br * &alpha + &beta;
            let a2 = (&one + &br) * (rat(-1) - &alpha + &br * &br * &alpha + &beta);
            let a3 = (&one + &br + &br * &br) * (rat(-1) - &alpha - &br * &alpha + &beta);
            let arr = IntersectionArray::from_rows(b_list, c_list);
            assert_eq!(arr.a_list[1..], [a1, a2, a3]);
            assert_eq!(arr.a_list[0], BigRational::zero());
            assert_eq!(arr.degree, b0);
        }
    }

    #[test]
    fn vertex_count_matches_layer_recurrence() {
        for (d, b, alpha, beta) in
            [(3u32, 1i64, 0i64, 1i64), (3, 1, 1, 3), (3, -2, -3, 7), (4, 1, 0, 1), (2, 2, 1, 3)]
        {
            let p = ClassicalParams::from_integers(d, b, alpha, beta);
            if !validate(&p).feasible() {
                continue;
            }
            let arr = intersection_array(&p).unwrap();
            let layered: BigRational = arr.counts_by_distance().into_iter().sum();
            assert_eq!(vertex_count(&arr), layered);
            assert_eq!(arr.vertex_count, layered);
        }
    }

    #[test]
    fn forbidden_base_is_reported() {
        let report = validate(&ClassicalParams::from_integers(3, 0, 0, 1));
        assert!(!report.feasible());
        assert!(report.has("b_forbidden"));
        let report = validate(&ClassicalParams::from_integers(3, -1, -2, 1));
        assert!(report.has("b_forbidden"));
    }

    #[test]
    fn negative_base_requires_alpha_below_minus_one() {
        let report = validate(&ClassicalParams::from_integers(3, -2, 0, 2));
        assert!(!report.feasible());
        assert!(report.has("alpha_not_below_minus_one"));
    }

    #[test]
    fn fractional_alpha_with_integral_scale_can_be_feasible() {
        let p = ClassicalParams::new(3, 2, ratio(1, 3), rat(2));
        assert!(validate(&p).feasible(), "{}", validate(&p));
        let arr = intersection_array(&p).unwrap();
        assert_eq!(arr.vertex_count, rat(60));
    }

    #[test]
    fn nonintegral_scaled_alpha_is_reported() {
        let p = ClassicalParams::new(3, 2, ratio(1, 2), rat(2));
        let report = validate(&p);
        assert!(report.has("scaled_alpha_nonintegral"));
    }

    #[test]
    fn beta_below_minimum_is_reported() {
        // beta must reach 1 + (1+b) alpha
        let p = ClassicalParams::from_integers(3, 1, 2, 3);
        let report = validate(&p);
        assert!(report.has("beta_below_minimum"));
    }

    #[test]
    fn adjacency_eigenvalue_examples() {
        let thetas = adjacency_eigenvalues(&ClassicalParams::from_integers(3, 1, 0, 1)).unwrap();
        assert_eq!(thetas, vec![rat(3), rat(1), rat(-1), rat(-3)]);
        let thetas = adjacency_eigenvalues(&ClassicalParams::from_integers(3, 1, 1, 3)).unwrap();
        assert_eq!(thetas, vec![rat(9), rat(3), rat(-1), rat(-3)]);
        let thetas = adjacency_eigenvalues(&ClassicalParams::from_integers(3, -2, -3, 7)).unwrap();
        assert_eq!(thetas, vec![rat(21), rat(-11), rat(5), rat(-3)]);
    }

    /// Closed forms for the diameter-3 adjacency eigenvalues.
    #[test]
    fn adjacency_eigenvalues_match_closed_forms() {
        for (b, alpha, beta) in
            [(1i64, rat(0), rat(1)), (1, rat(1), rat(3)), (-2, rat(-3), rat(7)), (2, ratio(1, 3), rat(2))]
        {
            let p = ClassicalParams::new(3, b, alpha.clone(), beta.clone());
            let thetas = adjacency_eigenvalues(&p).unwrap();
            let br = rat(b);
            let one = BigRational::one();
            assert_eq!(thetas[1], (&one + &br) * (&beta - &alpha) - &one);
            assert_eq!(thetas[2], &beta - (&one + &br) * (&one + &alpha));
            assert_eq!(thetas[3], -(&one + &br + &br * &br));
        }
    }

    #[test]
    fn laplacian_eigenvalue_examples() {
        let t = laplacian_eigenvalues_sorted(&ClassicalParams::from_integers(3, 1, 0, 1)).unwrap();
        assert_eq!(t.as_array(), [rat(2), rat(4), rat(6)]);
        assert_eq!(t.gamma_permutation, [1, 2, 3]);

        let t = laplacian_eigenvalues_sorted(&ClassicalParams::from_integers(3, 1, 1, 3)).unwrap();
        assert_eq!(t.as_array(), [rat(6), rat(10), rat(12)]);
        assert_eq!(t.gamma_permutation, [1, 2, 3]);

        let t = laplacian_eigenvalues_sorted(&ClassicalParams::from_integers(3, -2, -3, 7)).unwrap();
        assert_eq!(t.as_array(), [rat(16), rat(24), rat(32)]);
        assert_eq!(t.gamma_permutation, [2, 3, 1]);
    }

    #[test]
    fn wrong_diameter_is_rejected_for_eigenvalue_sorting() {
        let err = laplacian_eigenvalues_sorted(&ClassicalParams::from_integers(4, 1, 0, 1));
        assert!(matches!(err, Err(ClassicalError::WrongDiameter(4))));
    }

    #[test]
    fn infeasible_parameters_are_rejected_by_constructors() {
        let p = ClassicalParams::from_integers(3, 0, 0, 1);
        assert!(matches!(intersection_array(&p), Err(ClassicalError::Infeasible(_))));
        assert!(matches!(adjacency_eigenvalues(&p), Err(ClassicalError::Infeasible(_))));
    }
}
