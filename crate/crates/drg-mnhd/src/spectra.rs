//! Floating-point spectral oracle.
//!
//! Everything the exact pipeline certifies symbolically can be measured
//! numerically: diagonalize the Laplacian with Jacobi rotations, group
//! numerically equal eigenvalues into clusters with their projection
//! matrices, and evaluate the heat kernel `H_t = sum_l e^{-tl} P_l`, the
//! ratio `r_t(u,v) = H_t(u,v)/H_t(u,u)`, and its derivative surrogate
//!
//! ```text
//! h_{u,v}(t) = H_t'(u,v) H_t(u,u) - H_t(u,v) H_t'(u,u)
//!            = sum_{i>=1} (l_i/n) e^{-t l_i} Delta_i
//!              + sum_{1<=i<j} (l_j - l_i) e^{-t(l_i+l_j)} Delta_ij
//! ```
//!
//! over a time grid. The expansion uses the exact `P_0 = J/n` for the
//! constant cluster, so it needs a connected graph (simple eigenvalue 0).

use crate::analysis::DeltaProfile;
use crate::graph::Graph;
use thiserror::Error;

/// Absolute tolerance on `h` values; matched to eigensolver accuracy.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

const JACOBI_SWEEP_CAP: usize = 100;
const JACOBI_OFF_FACTOR: f64 = 1e-12;
const CLUSTER_GAP_FACTOR: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum SpectraError {
    #[error("eigensolver did not converge within {JACOBI_SWEEP_CAP} sweeps")]
    NoConvergence,
    #[error("time must be nonnegative, got {0}")]
    NegativeTime(f64),
    #[error("vertex pair must be distinct")]
    SameVertex,
    #[error("need exactly 4 distinct eigenvalues, got {0}")]
    WrongSpectrumSize(usize),
}

/// Dense row-major square matrix of `f64`.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![0.0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += aik * rhs.data[k * n + j];
                }
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Matrix { n: self.n, data }
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, x| acc.max(x.abs()))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    fn off_diagonal_frobenius(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    let x = self.get(i, j);
                    sum += x * x;
                }
            }
        }
        sum.sqrt()
    }

    fn is_symmetric(&self, tol: f64) -> bool {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if (self.get(i, j) - self.get(j, i)).abs() > tol {
                    return false;
                }
            }
        }
        true
    }
}

/// `L = Deg - A`.
pub fn laplacian(g: &Graph) -> Matrix {
    let n = g.vertex_count();
    let mut l = Matrix::zeros(n);
    for u in 0..n {
        l.set(u, u, g.degree(u) as f64);
        for v in g.neighbors(u) {
            l.set(u, v, -1.0);
        }
    }
    l
}

/// Cyclic Jacobi diagonalization: returns the eigenvalues (unsorted, as the
/// final diagonal) and the orthogonal matrix whose columns are the
/// eigenvectors.
fn jacobi(matrix: &Matrix) -> Result<(Vec<f64>, Matrix), SpectraError> {
    let n = matrix.n;
    let mut a = matrix.clone();
    let mut v = Matrix::identity(n);
    let threshold = JACOBI_OFF_FACTOR * matrix.frobenius_norm();

    let mut converged = n < 2 || a.off_diagonal_frobenius() <= threshold;
    for _ in 0..JACOBI_SWEEP_CAP {
        if converged {
            break;
        }
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let tau = (a.get(q, q) - a.get(p, p)) / (2.0 * apq);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // A <- J^T A J and V <- V J with the (p, q) rotation J
                for i in 0..n {
                    let aip = a.get(i, p);
                    let aiq = a.get(i, q);
                    a.set(i, p, c * aip - s * aiq);
                    a.set(i, q, s * aip + c * aiq);
                }
                for i in 0..n {
                    let api = a.get(p, i);
                    let aqi = a.get(q, i);
                    a.set(p, i, c * api - s * aqi);
                    a.set(q, i, s * api + c * aqi);
                }
                for i in 0..n {
                    let vip = v.get(i, p);
                    let viq = v.get(i, q);
                    v.set(i, p, c * vip - s * viq);
                    v.set(i, q, s * vip + c * viq);
                }
            }
        }
        converged = a.off_diagonal_frobenius() <= threshold;
    }
    if !converged {
        return Err(SpectraError::NoConvergence);
    }
    let eigenvalues = (0..n).map(|i| a.get(i, i)).collect();
    Ok((eigenvalues, v))
}

/// Spectral decomposition with numerically equal eigenvalues merged into
/// clusters: ascending distinct eigenvalues (cluster means), their
/// multiplicities, and one projection matrix per cluster.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    pub n: usize,
    pub eigenvalues: Vec<f64>,
    pub multiplicities: Vec<usize>,
    pub projections: Vec<Matrix>,
}

impl SpectralDecomposition {
    /// Count of nonzero distinct eigenvalues, treating the first cluster as
    /// the constant one.
    pub fn nonzero_count(&self) -> usize {
        self.eigenvalues.len().saturating_sub(1)
    }

    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues.iter().fold(0.0, |acc, x| acc.max(x.abs()))
    }
}

/// Diagonalizes a symmetric matrix and groups eigenvalues whose gaps stay
/// below `1e-6 * max(1, spectral radius)` into clusters.
pub fn eigendecompose(l: &Matrix) -> Result<SpectralDecomposition, SpectraError> {
    assert!(l.is_symmetric(1e-12 * (1.0 + l.max_abs())), "matrix must be symmetric");
    let n = l.n;
    let (raw_values, vectors) = jacobi(l)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| raw_values[i].total_cmp(&raw_values[j]));

    let radius = raw_values.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
    let gap = CLUSTER_GAP_FACTOR * radius.max(1.0);

    let mut eigenvalues = Vec::new();
    let mut multiplicities = Vec::new();
    let mut projections = Vec::new();
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && raw_values[order[end]] - raw_values[order[end - 1]] <= gap {
            end += 1;
        }
        let members = &order[start..end];
        let mean = members.iter().map(|&i| raw_values[i]).sum::<f64>() / members.len() as f64;
        let mut p = Matrix::zeros(n);
        for &col in members {
            for i in 0..n {
                let vi = vectors.get(i, col);
                if vi == 0.0 {
                    continue;
                }
                for j in 0..n {
                    let add = vi * vectors.get(j, col);
                    p.set(i, j, p.get(i, j) + add);
                }
            }
        }
        eigenvalues.push(mean);
        multiplicities.push(members.len());
        projections.push(p);
        start = end;
    }
    Ok(SpectralDecomposition { n, eigenvalues, multiplicities, projections })
}

/// `H_t = sum_l e^{-tl} P_l`.
pub fn heat_kernel(dec: &SpectralDecomposition, t: f64) -> Result<Matrix, SpectraError> {
    if t < 0.0 || t.is_nan() {
        return Err(SpectraError::NegativeTime(t));
    }
    let mut h = Matrix::zeros(dec.n);
    for (lambda, p) in dec.eigenvalues.iter().zip(&dec.projections) {
        let w = (-t * lambda).exp();
        for i in 0..dec.n {
            for j in 0..dec.n {
                h.set(i, j, h.get(i, j) + w * p.get(i, j));
            }
        }
    }
    Ok(h)
}

fn heat_entry(dec: &SpectralDecomposition, t: f64, i: usize, j: usize) -> f64 {
    dec.eigenvalues
        .iter()
        .zip(&dec.projections)
        .map(|(lambda, p)| (-t * lambda).exp() * p.get(i, j))
        .sum()
}

/// `r_t(u,v) = H_t(u,v) / H_t(u,u)`.
pub fn ratio_r(
    dec: &SpectralDecomposition,
    u: usize,
    v: usize,
    t: f64,
) -> Result<f64, SpectraError> {
    if u == v {
        return Err(SpectraError::SameVertex);
    }
    if t < 0.0 || t.is_nan() {
        return Err(SpectraError::NegativeTime(t));
    }
    Ok(heat_entry(dec, t, u, v) / heat_entry(dec, t, u, u))
}

/// The monotonicity driver `h_{u,v}(t)`, evaluated through the spectral
/// double sum over the nonzero clusters. Assumes a connected graph, whose
/// constant cluster contributes the exact `P_0(x,y) = 1/n`.
pub fn h_function(
    dec: &SpectralDecomposition,
    u: usize,
    v: usize,
    t: f64,
) -> Result<f64, SpectraError> {
    if u == v {
        return Err(SpectraError::SameVertex);
    }
    if t < 0.0 || t.is_nan() {
        return Err(SpectraError::NegativeTime(t));
    }
    let n = dec.n as f64;
    let s = dec.eigenvalues.len();
    let mut h = 0.0;
    for i in 1..s {
        let li = dec.eigenvalues[i];
        let pi = &dec.projections[i];
        let delta_i = pi.get(u, u) - pi.get(u, v);
        h += li / n * (-t * li).exp() * delta_i;
        for j in (i + 1)..s {
            let lj = dec.eigenvalues[j];
            let pj = &dec.projections[j];
            let delta_ij = pi.get(u, v) * pj.get(u, u) - pj.get(u, v) * pi.get(u, u);
            h += (lj - li) * (-t * (li + lj)).exp() * delta_ij;
        }
    }
    Ok(h)
}

/// Reads the six projection differences of a pair straight off the
/// projection matrices. Requires exactly four distinct eigenvalues.
pub fn delta_from_projections(
    dec: &SpectralDecomposition,
    u: usize,
    v: usize,
) -> Result<DeltaProfile<f64>, SpectraError> {
    if u == v {
        return Err(SpectraError::SameVertex);
    }
    if dec.nonzero_count() != 3 {
        return Err(SpectraError::WrongSpectrumSize(dec.nonzero_count()));
    }
    let single = |i: usize| {
        let p = &dec.projections[i];
        p.get(u, u) - p.get(u, v)
    };
    let cross = |i: usize, j: usize| {
        let pi = &dec.projections[i];
        let pj = &dec.projections[j];
        pi.get(u, v) * pj.get(u, u) - pj.get(u, v) * pi.get(u, u)
    };
    Ok(DeltaProfile {
        delta1: single(1),
        delta2: single(2),
        delta3: single(3),
        delta12: cross(1, 2),
        delta13: cross(1, 3),
        delta23: cross(2, 3),
    })
}

/// Time grid: `t = 0` followed by `points` geometrically spaced values
/// from `t_min` to `t_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub t_min: f64,
    pub t_max: f64,
    pub points: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self { t_min: 1e-3, t_max: 1e2, points: 400 }
    }
}

impl GridSpec {
    pub fn times(&self) -> Vec<f64> {
        assert!(self.points >= 2, "need at least two grid points");
        assert!(
            self.t_min > 0.0 && self.t_max > self.t_min,
            "need 0 < t_min < t_max"
        );
        let mut times = Vec::with_capacity(self.points + 1);
        times.push(0.0);
        let log_min = self.t_min.ln();
        let log_max = self.t_max.ln();
        for k in 0..self.points {
            let frac = k as f64 / (self.points - 1) as f64;
            times.push((log_min + frac * (log_max - log_min)).exp());
        }
        times
    }
}

/// Result of scanning `h_{u,v}` over a time grid.
#[derive(Debug, Clone, PartialEq)]
pub struct MonotonicityReport {
    pub u: usize,
    pub v: usize,
    /// Every evaluated time, ascending (base grid plus refinements).
    pub grid: Vec<f64>,
    pub min_h: f64,
    pub argmin_t: f64,
    /// `(t, h)` at every evaluated time with `h < -tol`.
    pub violations: Vec<(f64, f64)>,
    /// `r` at the first grid time (zero when the grid starts at 0).
    pub r_at_start: f64,
    /// `|r - 1|` at the last grid time.
    pub r_end_deviation: f64,
    /// Whether flagged violations triggered denser local sampling.
    pub refined: bool,
}

impl MonotonicityReport {
    pub fn clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Evaluates `h_{u,v}` over the grid and reports the minimum, all values
/// below `-tol`, and the ratio endpoints. Any flagged violation triggers a
/// second pass sampling its neighborhood 50 times more densely, so the
/// report never rests on a single suspicious grid point.
pub fn monotonicity_scan(
    dec: &SpectralDecomposition,
    u: usize,
    v: usize,
    grid: &GridSpec,
    tol: f64,
) -> Result<MonotonicityReport, SpectraError> {
    let base = grid.times();
    let mut samples: Vec<(f64, f64)> = Vec::with_capacity(base.len());
    for &t in &base {
        samples.push((t, h_function(dec, u, v, t)?));
    }

    let flagged: Vec<usize> =
        (0..samples.len()).filter(|&i| samples[i].1 < -tol).collect();
    let refined = !flagged.is_empty();
    if refined {
        let mut extra = Vec::new();
        for &i in &flagged {
            let lo = if i == 0 { 0.0 } else { base[i - 1] };
            let hi = if i + 1 < base.len() { base[i + 1] } else { base[i] * 1.1 };
            let steps = 50;
            for k in 1..steps {
                let t = lo + (hi - lo) * k as f64 / steps as f64;
                extra.push((t, h_function(dec, u, v, t)?));
            }
        }
        samples.extend(extra);
        samples.sort_by(|a, b| a.0.total_cmp(&b.0));
        samples.dedup_by(|a, b| a.0 == b.0);
    }

    let (mut min_h, mut argmin_t) = (f64::INFINITY, 0.0);
    for &(t, h) in &samples {
        if h < min_h {
            min_h = h;
            argmin_t = t;
        }
    }
    let violations: Vec<(f64, f64)> =
        samples.iter().copied().filter(|&(_, h)| h < -tol).collect();

    let first = samples.first().expect("grid is nonempty").0;
    let last = samples.last().expect("grid is nonempty").0;
    Ok(MonotonicityReport {
        u,
        v,
        grid: samples.iter().map(|&(t, _)| t).collect(),
        min_h,
        argmin_t,
        violations,
        r_at_start: ratio_r(dec, u, v, first)?,
        r_end_deviation: (ratio_r(dec, u, v, last)? - 1.0).abs(),
        refined,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{self, GraphKind};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn decompose(kind: GraphKind) -> (Graph, SpectralDecomposition) {
        let g = graph::construct(kind).unwrap();
        let dec = eigendecompose(&laplacian(&g)).unwrap();
        (g, dec)
    }

    #[test]
    fn laplacian_examples() {
        let g = graph::construct(GraphKind::Complete(2)).unwrap();
        let l = laplacian(&g);
        assert_eq!(
            (l.get(0, 0), l.get(0, 1), l.get(1, 0), l.get(1, 1)),
            (1.0, -1.0, -1.0, 1.0)
        );

        let g = graph::construct(GraphKind::Cycle(3)).unwrap();
        let l = laplacian(&g);
        for i in 0..3 {
            assert_eq!(l.get(i, i), 2.0);
            for j in 0..3 {
                if i != j {
                    assert_eq!(l.get(i, j), -1.0);
                }
            }
        }

        // row sums vanish on a bigger fixture
        let g = graph::construct(GraphKind::Hypercube(3)).unwrap();
        let l = laplacian(&g);
        for i in 0..8 {
            let row: f64 = (0..8).map(|j| l.get(i, j)).sum();
            assert!(row.abs() < 1e-12);
        }
    }

    #[test]
    fn fixture_spectra() {
        let (_, dec) = decompose(GraphKind::Complete(2));
        assert_eq!(dec.multiplicities, vec![1, 1]);
        assert!((dec.eigenvalues[0]).abs() < 1e-9);
        assert!((dec.eigenvalues[1] - 2.0).abs() < 1e-9);

        let (_, dec) = decompose(GraphKind::Hypercube(3));
        assert_eq!(dec.multiplicities, vec![1, 3, 3, 1]);
        let tol = 1e-9 * dec.spectral_radius();
        for (got, want) in dec.eigenvalues.iter().zip([0.0, 2.0, 4.0, 6.0]) {
            assert!((got - want).abs() <= tol, "{got} vs {want}");
        }

        let (_, dec) = decompose(GraphKind::Icosahedron);
        assert_eq!(dec.multiplicities, vec![1, 3, 5, 3]);
        let tol = 1e-9 * dec.spectral_radius();
        let sqrt5 = 5.0f64.sqrt();
        for (got, want) in dec.eigenvalues.iter().zip([0.0, 5.0 - sqrt5, 6.0, 5.0 + sqrt5]) {
            assert!((got - want).abs() <= tol, "{got} vs {want}");
        }
    }

    fn assert_projection_algebra(dec: &SpectralDecomposition) {
        let n = dec.n;
        // sum of projections is the identity
        let mut total = Matrix::zeros(n);
        for p in &dec.projections {
            for i in 0..n {
                for j in 0..n {
                    total.set(i, j, total.get(i, j) + p.get(i, j));
                }
            }
        }
        assert!(total.sub(&Matrix::identity(n)).max_abs() <= 1e-9);
        // idempotent and mutually annihilating
        for (i, p) in dec.projections.iter().enumerate() {
            assert!(p.mul(p).sub(p).max_abs() <= 1e-9, "P_{i}^2 != P_{i}");
            for (j, q) in dec.projections.iter().enumerate() {
                if i != j {
                    assert!(p.mul(q).max_abs() <= 1e-9, "P_{i} P_{j} != 0");
                }
            }
        }
        // constant cluster is J/n
        let p0 = &dec.projections[0];
        for i in 0..n {
            for j in 0..n {
                assert!((p0.get(i, j) - 1.0 / n as f64).abs() <= 1e-9);
            }
        }
    }

    #[test]
    fn projection_algebra_on_fixtures() {
        for kind in [
            GraphKind::Hypercube(3),
            GraphKind::Johnson(6, 3),
            GraphKind::Icosahedron,
            GraphKind::Cycle(6),
            GraphKind::Complete(4),
        ] {
            let (_, dec) = decompose(kind);
            assert_projection_algebra(&dec);
        }
    }

    #[test]
    fn reconstruction_from_projections() {
        for kind in [GraphKind::Hypercube(3), GraphKind::Icosahedron, GraphKind::Cycle(6)] {
            let g = graph::construct(kind).unwrap();
            let l = laplacian(&g);
            let dec = eigendecompose(&l).unwrap();
            let mut rebuilt = Matrix::zeros(dec.n);
            for (lambda, p) in dec.eigenvalues.iter().zip(&dec.projections) {
                for i in 0..dec.n {
                    for j in 0..dec.n {
                        rebuilt.set(i, j, rebuilt.get(i, j) + lambda * p.get(i, j));
                    }
                }
            }
            assert!(rebuilt.sub(&l).max_abs() <= 1e-9 * (1.0 + l.max_abs()));
        }
    }

    #[test]
    fn heat_kernel_closed_forms() {
        let (_, dec) = decompose(GraphKind::Complete(2));
        let h0 = heat_kernel(&dec, 0.0).unwrap();
        assert!(h0.sub(&Matrix::identity(2)).max_abs() <= 1e-9);
        for t in [0.1, 1.0, 10.0] {
            let h = heat_kernel(&dec, t).unwrap();
            let expected = (1.0 - (-2.0 * t).exp()) / 2.0;
            assert!((h.get(0, 1) - expected).abs() <= 1e-12);
        }

        // large time: every entry approaches 1/n
        let (g, dec) = decompose(GraphKind::Hypercube(3));
        let h = heat_kernel(&dec, 100.0).unwrap();
        let n = g.vertex_count() as f64;
        for i in 0..g.vertex_count() {
            for j in 0..g.vertex_count() {
                assert!((h.get(i, j) - 1.0 / n).abs() <= 1e-9);
            }
        }
        assert!(matches!(heat_kernel(&dec, -0.5), Err(SpectraError::NegativeTime(_))));
    }

    #[test]
    fn heat_kernel_is_stochastic_on_fixtures() {
        for kind in [
            GraphKind::Hypercube(3),
            GraphKind::Johnson(6, 3),
            GraphKind::Icosahedron,
            GraphKind::Cycle(6),
            GraphKind::Complete(4),
        ] {
            let (g, dec) = decompose(kind);
            for t in [0.0, 0.1, 1.0, 10.0] {
                let h = heat_kernel(&dec, t).unwrap();
                for i in 0..g.vertex_count() {
                    let row: f64 = (0..g.vertex_count()).map(|j| h.get(i, j)).sum();
                    assert!((row - 1.0).abs() <= 1e-9, "row {i} at t={t}");
                    for j in 0..g.vertex_count() {
                        assert!(h.get(i, j) >= -1e-9);
                    }
                }
            }
        }
    }

    #[test]
    fn semigroup_property_on_fixtures() {
        for kind in [GraphKind::Hypercube(3), GraphKind::Icosahedron, GraphKind::Cycle(6)] {
            let (_, dec) = decompose(kind);
            for (s, t) in [(0.3, 0.7), (1.0, 1.0)] {
                let hs = heat_kernel(&dec, s).unwrap();
                let ht = heat_kernel(&dec, t).unwrap();
                let hst = heat_kernel(&dec, s + t).unwrap();
                assert!(hst.sub(&hs.mul(&ht)).max_abs() <= 1e-8);
            }
        }
    }

    #[test]
    fn constant_diagonal_on_walk_regular_fixtures() {
        for kind in [GraphKind::Hypercube(3), GraphKind::Icosahedron, GraphKind::Cycle(5)] {
            let (g, dec) = decompose(kind);
            for t in [0.1, 1.0, 10.0] {
                let h = heat_kernel(&dec, t).unwrap();
                let diag: Vec<f64> = (0..g.vertex_count()).map(|i| h.get(i, i)).collect();
                let max = diag.iter().cloned().fold(f64::MIN, f64::max);
                let min = diag.iter().cloned().fold(f64::MAX, f64::min);
                assert!(max - min <= 1e-9, "diagonal spread {} at t={t}", max - min);
            }
        }
    }

    #[test]
    fn ratio_endpoints_and_closed_form() {
        let (_, dec) = decompose(GraphKind::Complete(2));
        assert!(ratio_r(&dec, 0, 1, 0.0).unwrap().abs() <= 1e-12);
        for t in [0.2f64, 1.0, 3.0] {
            let e = (-2.0 * t).exp();
            let expected = (1.0 - e) / (1.0 + e);
            assert!((ratio_r(&dec, 0, 1, t).unwrap() - expected).abs() <= 1e-12);
        }

        let (_, dec) = decompose(GraphKind::Hypercube(3));
        let r = ratio_r(&dec, 0, 1, 10.0).unwrap();
        assert!((r - 1.0).abs() <= 1e-3);
        assert!(matches!(ratio_r(&dec, 2, 2, 1.0), Err(SpectraError::SameVertex)));
    }

    #[test]
    fn h_function_closed_form_on_an_edge() {
        // complete(2): single nonzero eigenvalue 2, Delta_1 = 1, no cross
        // terms, so h(t) = (2/2) e^{-2t} = e^{-2t}.
        let (_, dec) = decompose(GraphKind::Complete(2));
        for t in [0.0, 0.5, 2.0] {
            let h = h_function(&dec, 0, 1, t).unwrap();
            assert!((h - (-2.0 * t).exp()).abs() <= 1e-12);
        }
    }

    /// Direct differentiation of the spectral sums:
    /// `h = H'(u,v) H(u,u) - H(u,v) H'(u,u)` with
    /// `H'(x,y) = -sum_l l e^{-tl} P_l(x,y)`.
    fn h_via_derivatives(dec: &SpectralDecomposition, u: usize, v: usize, t: f64) -> f64 {
        let entry = |i: usize, j: usize| heat_entry(dec, t, i, j);
        let dentry = |i: usize, j: usize| -> f64 {
            dec.eigenvalues
                .iter()
                .zip(&dec.projections)
                .map(|(l, p)| -l * (-t * l).exp() * p.get(i, j))
                .sum()
        };
        dentry(u, v) * entry(u, u) - entry(u, v) * dentry(u, u)
    }

    #[test]
    fn h_function_matches_direct_differentiation() {
        for kind in [GraphKind::Hypercube(3), GraphKind::Johnson(6, 3), GraphKind::Icosahedron] {
            let (g, dec) = decompose(kind);
            for v in 1..g.vertex_count() {
                for t in [0.0, 0.05, 0.5, 2.0, 20.0] {
                    let a = h_function(&dec, 0, v, t).unwrap();
                    let b = h_via_derivatives(&dec, 0, v, t);
                    let scale = a.abs().max(b.abs()).max(1.0);
                    assert!((a - b).abs() <= 1e-9 * scale, "v={v} t={t}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn h_at_zero_is_nonnegative_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..25 {
            let n = rng.gen_range(4..=12);
            let g = graph::random_connected(n, 0.3, &mut rng);
            let dec = eigendecompose(&laplacian(&g)).unwrap();
            for u in 0..g.vertex_count() {
                for v in (u + 1)..g.vertex_count() {
                    let h = h_function(&dec, u, v, 0.0).unwrap();
                    assert!(h >= -1e-9, "h(0) = {h} at ({u},{v})");
                }
            }
        }
    }

    #[test]
    fn delta_profile_matches_frozen_cube_values() {
        let (_, dec) = decompose(GraphKind::Hypercube(3));
        // vertices 0 and 1 are adjacent in the hypercube labeling
        let profile = delta_from_projections(&dec, 0, 1).unwrap();
        let expected = [0.25, 0.5, 0.25, 3.0 / 32.0, 1.0 / 16.0, 1.0 / 32.0];
        let got = [
            profile.delta1,
            profile.delta2,
            profile.delta3,
            profile.delta12,
            profile.delta13,
            profile.delta23,
        ];
        for (g, e) in got.iter().zip(expected) {
            assert!((g - e).abs() <= 1e-9, "{g} vs {e}");
        }
    }

    #[test]
    fn delta_profile_matches_exact_closed_forms_on_johnson() {
        use crate::analysis::{self, LaplacianPairData};
        use crate::classical::{self, ClassicalParams};
        use num_traits::ToPrimitive;

        let p = ClassicalParams::from_integers(3, 1, 1, 3);
        let array = classical::intersection_array(&p).unwrap();
        let ctx = analysis::context(
            array.degree.clone(),
            array.vertex_count.clone(),
            classical::laplacian_eigenvalues_sorted(&p).unwrap().as_array(),
        )
        .unwrap();

        let g = graph::construct(GraphKind::Johnson(6, 3)).unwrap();
        let dist = graph::distances(&g);
        let dec = eigendecompose(&laplacian(&g)).unwrap();
        for d in 1..=3u32 {
            let v = (1..g.vertex_count())
                .find(|&v| dist.get(0, v) == Some(d))
                .expect("pair at each distance");
            let exact = analysis::delta_closed_form(
                &ctx,
                &LaplacianPairData::at_distance(&array, d).unwrap(),
            );
            let float = delta_from_projections(&dec, 0, v).unwrap();
            let pairs = [
                (exact.delta1, float.delta1),
                (exact.delta2, float.delta2),
                (exact.delta3, float.delta3),
                (exact.delta12, float.delta12),
                (exact.delta13, float.delta13),
                (exact.delta23, float.delta23),
            ];
            for (e, f) in pairs {
                let e = e.to_f64().unwrap();
                assert!((e - f).abs() <= 1e-9, "distance {d}: exact {e} vs float {f}");
            }
        }
    }

    #[test]
    fn delta_profile_rejects_wrong_spectrum_sizes() {
        let (_, dec) = decompose(GraphKind::Complete(2));
        assert!(matches!(
            delta_from_projections(&dec, 0, 1),
            Err(SpectraError::WrongSpectrumSize(1))
        ));
        let (_, dec) = decompose(GraphKind::Cycle(5));
        assert!(matches!(
            delta_from_projections(&dec, 0, 1),
            Err(SpectraError::WrongSpectrumSize(2))
        ));
    }

    #[test]
    fn grid_shape() {
        let grid = GridSpec::default();
        let times = grid.times();
        assert_eq!(times.len(), 401);
        assert_eq!(times[0], 0.0);
        assert!((times[1] - 1e-3).abs() < 1e-15);
        assert!((times[400] - 1e2).abs() < 1e-10);
        assert!(times.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn scans_are_clean_on_fixtures() {
        for kind in [GraphKind::Hypercube(3), GraphKind::Cycle(6), GraphKind::Complete(4)] {
            let (g, dec) = decompose(kind);
            let grid = GridSpec::default();
            for v in 1..g.vertex_count() {
                let report =
                    monotonicity_scan(&dec, 0, v, &grid, DEFAULT_TOLERANCE).unwrap();
                assert!(report.clean(), "violations at pair (0,{v})");
                assert!(!report.refined);
                assert!(report.r_at_start.abs() <= 1e-12);
                assert!(report.r_end_deviation <= 1e-6);
                assert!(report.min_h >= -DEFAULT_TOLERANCE);
            }
        }
    }

    #[test]
    fn scan_flags_and_refines_synthetic_violations() {
        // Hand-built decomposition whose h dips negative: eigenvalues
        // {0, 1, 10} with Delta_1 < 0 makes the slow mode dominate late.
        let n = 4;
        let mut p1 = Matrix::zeros(n);
        p1.set(0, 0, 0.10);
        p1.set(0, 1, 0.15);
        p1.set(1, 0, 0.15);
        let mut p2 = Matrix::zeros(n);
        p2.set(0, 0, 0.90);
        p2.set(0, 1, -0.15);
        p2.set(1, 0, -0.15);
        let mut p0 = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                p0.set(i, j, 0.25);
            }
        }
        let dec = SpectralDecomposition {
            n,
            eigenvalues: vec![0.0, 1.0, 10.0],
            multiplicities: vec![1, 1, 2],
            projections: vec![p0, p1, p2],
        };
        let report =
            monotonicity_scan(&dec, 0, 1, &GridSpec::default(), DEFAULT_TOLERANCE).unwrap();
        assert!(!report.clean());
        assert!(report.refined);
        assert!(report.min_h < -DEFAULT_TOLERANCE);
        assert!(report.grid.len() > 401, "refinement must add samples");
        // violations and minimum agree with the report invariant
        assert!(report.violations.iter().any(|&(t, _)| (t - report.argmin_t).abs() < 1e-12));
        assert_eq!(report.clean(), report.min_h >= -DEFAULT_TOLERANCE);
    }

    #[test]
    fn jacobi_rejects_nothing_but_reports_convergence() {
        // 1x1 and diagonal matrices converge immediately
        let m = Matrix::identity(1);
        let dec = eigendecompose(&m).unwrap();
        assert_eq!(dec.eigenvalues.len(), 1);

        let mut d = Matrix::zeros(3);
        d.set(0, 0, 3.0);
        d.set(1, 1, 1.0);
        d.set(2, 2, 2.0);
        let dec = eigendecompose(&d).unwrap();
        assert_eq!(dec.eigenvalues.len(), 3);
        assert!(dec.eigenvalues.windows(2).all(|w| w[0] < w[1]));
    }
}
