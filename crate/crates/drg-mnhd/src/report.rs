//! Machine-readable reports and the pipelines behind each CLI command.
//!
//! Reports serialize every exact value as a canonical fraction string
//! `"p/q"` (quadratic irrationals keep their `a + c*sqrt(D)` rendering with
//! rational parts in the same form) and every float as a string with 17
//! significant digits, which round-trips to the identical bit pattern.

use std::fmt::Write as _;
use std::time::Instant;

use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::analysis::{
    self, ClassicalSweepSpec, DistanceWitness, LaplacianPairData, MnhdVerdict, PointOutcome,
};
use crate::antipodal::{self, AntipodalParams};
use crate::classical::{self, ClassicalParams, FeasibilityReport};
use crate::graph::{self, Graph};
use crate::quadratic::QuadraticNumber;
use crate::spectra::{self, GridSpec, Matrix};

/// Schema tag carried by every report.
pub const SCHEMA: &str = "drg-mnhd/1";

/// Process exit codes shared by all commands.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const INFEASIBLE: i32 = 2;
    pub const NOT_CERTIFIED: i32 = 3;
    pub const USAGE: i32 = 64;
    pub const MALFORMED: i32 = 65;
}

/// Exact values rendered for reports.
pub trait ExactValue {
    fn exact_string(&self) -> String;
}

impl ExactValue for BigRational {
    fn exact_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

impl ExactValue for QuadraticNumber {
    fn exact_string(&self) -> String {
        if self.is_rational() {
            self.rational_part().exact_string()
        } else {
            self.to_string()
        }
    }
}

/// Float wrapper serialized as a 17-significant-digit string, enough to
/// reproduce the exact `f64` on parse.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Float17(pub f64);

impl Serialize for Float17 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&format!("{:.16e}", self.0))
    }
}

impl<'de> Deserialize<'de> for Float17 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse::<f64>().map(Float17).map_err(D::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InputEcho {
    ClassicalParameters { diameter: u32, b: i64, alpha: String, beta: String },
    AntipodalParameters { d: u64, gamma: u64, m: u64 },
    GraphFile { path: String, vertices: usize, edges: usize },
    ClassicalSweep {
        b_min: i64,
        b_max: i64,
        scaled_alpha_min: i64,
        scaled_alpha_max: i64,
        beta_max: i64,
        parallelism: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ViolationEntry {
    pub constraint: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeasibilitySection {
    pub feasible: bool,
    pub violations: Vec<ViolationEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeltaStrings {
    pub delta1: String,
    pub delta2: String,
    pub delta3: String,
    pub delta12: String,
    pub delta13: String,
    pub delta23: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessSection {
    pub distance: u32,
    /// Which sufficient condition fired, if any.
    pub case: Option<String>,
    pub l: String,
    pub l2: String,
    pub deltas: DeltaStrings,
    /// `L^2 - L(lambda_a + lambda_b)` for the case pairs, in case order.
    pub case_conditions: [String; 3],
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictSection {
    pub status: String,
    pub intersection_array: String,
    pub vertex_count: String,
    pub degree: String,
    pub eigenvalues: [String; 3],
    pub eigenvalue_slack: String,
    pub per_distance: Vec<WitnessSection>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSection {
    pub vertices: usize,
    pub edges: usize,
    pub connected: bool,
    pub walk_regular: bool,
    pub distance_regular: bool,
    pub intersection_array: Option<String>,
    pub diameter: Option<u32>,
    pub distinct_eigenvalues: Vec<Float17>,
    pub multiplicities: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanSettings {
    pub t_min: Float17,
    pub t_max: Float17,
    pub points: usize,
    pub tolerance: Float17,
    pub pair: Option<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralCheckSection {
    /// `max |sum_l l P_l - L|` over entries.
    pub reconstruction_error: Float17,
    /// Largest gap between closed-form and projection-based deltas, when
    /// the graph has the four-eigenvalue diameter-3 shape.
    pub max_delta_deviation: Option<Float17>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub u: usize,
    pub v: usize,
    pub distance: Option<u32>,
    pub grid_points: usize,
    pub min_h: Float17,
    pub argmin_t: Float17,
    pub violations: Vec<[Float17; 2]>,
    pub r_at_start: Float17,
    pub r_end_deviation: Float17,
    pub refined: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnomalyEntry {
    pub params: String,
    pub outcome: String,
    pub witness: Option<VerdictSection>,
    pub failed_identities: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSection {
    pub total_points: usize,
    pub feasible: usize,
    pub infeasible: usize,
    pub certified: usize,
    pub not_certified: usize,
    pub errors: usize,
    pub anomalies: Vec<AnomalyEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    pub input: InputEcho,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub feasibility: Option<FeasibilitySection>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verdict: Option<VerdictSection>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub graph: Option<GraphSection>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub scan_settings: Option<ScanSettings>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub spectral_check: Option<SpectralCheckSection>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub scans: Option<Vec<ScanSummary>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sweep: Option<SweepSection>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
    pub elapsed_ms: Float17,
}

impl Report {
    fn skeleton(command: &str, input: InputEcho) -> Self {
        Self {
            schema: SCHEMA.to_string(),
            command: command.to_string(),
            input,
            feasibility: None,
            verdict: None,
            graph: None,
            scan_settings: None,
            spectral_check: None,
            scans: None,
            sweep: None,
            error: None,
            elapsed_ms: Float17(0.0),
        }
    }
}

fn feasibility_section(report: &FeasibilityReport) -> FeasibilitySection {
    FeasibilitySection {
        feasible: report.feasible(),
        violations: report
            .violations
            .iter()
            .map(|v| ViolationEntry { constraint: v.constraint.clone(), value: v.value.clone() })
            .collect(),
    }
}

fn witness_section<T: ExactValue>(w: &DistanceWitness<T>) -> WitnessSection {
    WitnessSection {
        distance: w.distance,
        case: w.case.map(|c| c.to_string()),
        l: w.pair.l.exact_string(),
        l2: w.pair.l2.exact_string(),
        deltas: DeltaStrings {
            delta1: w.deltas.delta1.exact_string(),
            delta2: w.deltas.delta2.exact_string(),
            delta3: w.deltas.delta3.exact_string(),
            delta12: w.deltas.delta12.exact_string(),
            delta13: w.deltas.delta13.exact_string(),
            delta23: w.deltas.delta23.exact_string(),
        },
        case_conditions: [
            w.case_conditions[0].exact_string(),
            w.case_conditions[1].exact_string(),
            w.case_conditions[2].exact_string(),
        ],
        notes: w.notes.clone(),
    }
}

fn verdict_section<T: ExactValue>(
    verdict: &MnhdVerdict<T>,
    array: &classical::IntersectionArray,
    eigenvalues: [String; 3],
) -> VerdictSection {
    VerdictSection {
        status: if verdict.certified() { "certified" } else { "not_certified" }.to_string(),
        intersection_array: array.to_string(),
        vertex_count: array.vertex_count.exact_string(),
        degree: array.degree.exact_string(),
        eigenvalues,
        eigenvalue_slack: verdict.eigenvalue_slack.exact_string(),
        per_distance: verdict.per_distance.iter().map(witness_section).collect(),
    }
}

fn finish(mut report: Report, start: Instant, code: i32) -> (Report, i32) {
    report.elapsed_ms = Float17(start.elapsed().as_secs_f64() * 1e3);
    (report, code)
}

/// Certifies classical parameters `(3, b, alpha, beta)`.
pub fn run_certify(p: &ClassicalParams) -> (Report, i32) {
    let start = Instant::now();
    let input = InputEcho::ClassicalParameters {
        diameter: p.diameter,
        b: p.b,
        alpha: p.alpha.exact_string(),
        beta: p.beta.exact_string(),
    };
    let mut report = Report::skeleton("certify", input);

    let feas = classical::validate(p);
    report.feasibility = Some(feasibility_section(&feas));
    if !feas.feasible() {
        return finish(report, start, exit::INFEASIBLE);
    }

    let verdict = match analysis::certify_classical(p) {
        Ok(v) => v,
        Err(e) => {
            report.error = Some(e.to_string());
            return finish(report, start, exit::NOT_CERTIFIED);
        }
    };
    let array = classical::intersection_array(p).expect("feasible parameters have an array");
    let eig = classical::laplacian_eigenvalues_sorted(p)
        .expect("feasible parameters have sorted eigenvalues");
    let eigenvalues = [
        eig.lambda1.exact_string(),
        eig.lambda2.exact_string(),
        eig.lambda3.exact_string(),
    ];
    let code = if verdict.certified() { exit::SUCCESS } else { exit::NOT_CERTIFIED };
    report.verdict = Some(verdict_section(&verdict, &array, eigenvalues));
    finish(report, start, code)
}

/// Certifies an antipodal parameter triple `(d, gamma, m)`.
pub fn run_antipodal(p: &AntipodalParams) -> (Report, i32) {
    let start = Instant::now();
    let input =
        InputEcho::AntipodalParameters { d: p.degree, gamma: p.gamma_c2, m: p.m };
    let mut report = Report::skeleton("antipodal", input);

    let feas = antipodal::validate(p);
    report.feasibility = Some(feasibility_section(&feas));
    if !feas.feasible() {
        return finish(report, start, exit::INFEASIBLE);
    }

    let verdict = match antipodal::certify_antipodal(p) {
        Ok(v) => v,
        Err(e) => {
            report.error = Some(e.to_string());
            return finish(report, start, exit::NOT_CERTIFIED);
        }
    };
    let array = antipodal::intersection_array(p).expect("feasible parameters have an array");
    let eig = antipodal::antipodal_eigenvalues(p).expect("feasible parameters have eigenvalues");
    let eigenvalues =
        [eig[0].exact_string(), eig[1].exact_string(), eig[2].exact_string()];
    let code = if verdict.certified() { exit::SUCCESS } else { exit::NOT_CERTIFIED };
    report.verdict = Some(verdict_section(&verdict, &array, eigenvalues));
    finish(report, start, code)
}

fn reconstruction_error(dec: &spectra::SpectralDecomposition, l: &Matrix) -> f64 {
    let n = dec.n;
    let mut rebuilt = Matrix::zeros(n);
    for (lambda, p) in dec.eigenvalues.iter().zip(&dec.projections) {
        for i in 0..n {
            for j in 0..n {
                rebuilt.set(i, j, rebuilt.get(i, j) + lambda * p.get(i, j));
            }
        }
    }
    rebuilt.sub(l).max_abs()
}

/// Closed-form deltas from the detected array and the computed eigenvalues
/// against the raw projection deltas; returns the worst deviation.
fn delta_deviation(
    dec: &spectra::SpectralDecomposition,
    array: &classical::IntersectionArray,
    dist: &graph::DistanceMatrix,
) -> Option<f64> {
    use num_traits::ToPrimitive;
    if array.diameter() != 3 || dec.nonzero_count() != 3 {
        return None;
    }
    let degree = array.degree.to_f64()?;
    let n = array.vertex_count.to_f64()?;
    let lambdas = [dec.eigenvalues[1], dec.eigenvalues[2], dec.eigenvalues[3]];
    let ctx = analysis::context(degree, n, lambdas).ok()?;
    let mut worst = 0.0f64;
    for d in 1..=3u32 {
        let v = (1..dec.n).find(|&v| dist.get(0, v) == Some(d))?;
        let l2 = analysis::l2_entry(array, d).ok()?.to_f64()?;
        let l = if d == 1 { -1.0 } else { 0.0 };
        let exact = analysis::delta_closed_form(&ctx, &LaplacianPairData { l, l2 });
        let float = spectra::delta_from_projections(dec, 0, v).ok()?;
        for (e, f) in [
            (exact.delta1, float.delta1),
            (exact.delta2, float.delta2),
            (exact.delta3, float.delta3),
            (exact.delta12, float.delta12),
            (exact.delta13, float.delta13),
            (exact.delta23, float.delta23),
        ] {
            worst = worst.max((e - f).abs());
        }
    }
    Some(worst)
}

/// Analyzes a concrete graph: regularity detection, spectra, cross-checks,
/// and monotonicity scans over all distance classes (distance-regular
/// input) or all vertex pairs, unless a single pair is requested.
pub fn run_analyze(
    g: &Graph,
    source: &str,
    pair: Option<(usize, usize)>,
    grid: &GridSpec,
    tol: f64,
) -> (Report, i32) {
    let start = Instant::now();
    let input = InputEcho::GraphFile {
        path: source.to_string(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
    };
    let mut report = Report::skeleton("analyze", input);
    report.scan_settings = Some(ScanSettings {
        t_min: Float17(grid.t_min),
        t_max: Float17(grid.t_max),
        points: grid.points,
        tolerance: Float17(tol),
        pair: pair.map(|(u, v)| [u, v]),
    });

    let dist = graph::distances(g);
    let connected = dist.is_connected();
    let walk_regular = connected && graph::check_walk_regular(g, g.vertex_count() as u32);
    let dr_array = if connected {
        graph::check_distance_regular(g).ok().flatten()
    } else {
        None
    };

    let mut section = GraphSection {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        connected,
        walk_regular,
        distance_regular: dr_array.is_some(),
        intersection_array: dr_array.as_ref().map(|a| a.to_string()),
        diameter: dist.diameter(),
        distinct_eigenvalues: Vec::new(),
        multiplicities: Vec::new(),
    };
    if !connected {
        report.graph = Some(section);
        report.error = Some("graph is disconnected".to_string());
        return finish(report, start, exit::INFEASIBLE);
    }

    let l = spectra::laplacian(g);
    let dec = match spectra::eigendecompose(&l) {
        Ok(dec) => dec,
        Err(e) => {
            report.graph = Some(section);
            report.error = Some(e.to_string());
            return finish(report, start, exit::MALFORMED);
        }
    };
    section.distinct_eigenvalues = dec.eigenvalues.iter().map(|&x| Float17(x)).collect();
    section.multiplicities = dec.multiplicities.clone();
    report.graph = Some(section);

    report.spectral_check = Some(SpectralCheckSection {
        reconstruction_error: Float17(reconstruction_error(&dec, &l)),
        max_delta_deviation: dr_array
            .as_ref()
            .and_then(|a| delta_deviation(&dec, a, &dist))
            .map(Float17),
    });

    // one representative pair per distance class when the graph is
    // distance-regular, every pair otherwise
    let pairs: Vec<(usize, usize)> = if let Some((u, v)) = pair {
        vec![(u, v)]
    } else if dr_array.is_some() {
        let diameter = dist.diameter().unwrap_or(0);
        (1..=diameter)
            .filter_map(|d| {
                (1..g.vertex_count()).find(|&v| dist.get(0, v) == Some(d)).map(|v| (0, v))
            })
            .collect()
    } else {
        let mut all = Vec::new();
        for u in 0..g.vertex_count() {
            for v in (u + 1)..g.vertex_count() {
                all.push((u, v));
            }
        }
        all
    };

    let mut scans = Vec::with_capacity(pairs.len());
    let mut any_violation = false;
    for (u, v) in pairs {
        let scan = match spectra::monotonicity_scan(&dec, u, v, grid, tol) {
            Ok(s) => s,
            Err(e) => {
                report.error = Some(e.to_string());
                return finish(report, start, exit::MALFORMED);
            }
        };
        any_violation |= !scan.clean();
        scans.push(ScanSummary {
            u,
            v,
            distance: dist.get(u, v),
            grid_points: scan.grid.len(),
            min_h: Float17(scan.min_h),
            argmin_t: Float17(scan.argmin_t),
            violations: scan
                .violations
                .iter()
                .map(|&(t, h)| [Float17(t), Float17(h)])
                .collect(),
            r_at_start: Float17(scan.r_at_start),
            r_end_deviation: Float17(scan.r_end_deviation),
            refined: scan.refined,
        });
    }
    report.scans = Some(scans);
    let code = if any_violation { exit::NOT_CERTIFIED } else { exit::SUCCESS };
    finish(report, start, code)
}

/// Exhaustive certification over the classical parameter grid.
pub fn run_sweep(spec: &ClassicalSweepSpec, parallelism: usize) -> (Report, i32) {
    let start = Instant::now();
    let input = InputEcho::ClassicalSweep {
        b_min: spec.b_min,
        b_max: spec.b_max,
        scaled_alpha_min: spec.scaled_alpha_min,
        scaled_alpha_max: spec.scaled_alpha_max,
        beta_max: spec.beta_max,
        parallelism,
    };
    let mut report = Report::skeleton("sweep", input);

    let points = analysis::sweep_classical(spec, parallelism);
    let mut section = SweepSection {
        total_points: points.len(),
        feasible: 0,
        infeasible: 0,
        certified: 0,
        not_certified: 0,
        errors: 0,
        anomalies: Vec::new(),
    };
    for point in &points {
        match &point.outcome {
            PointOutcome::Infeasible(_) => section.infeasible += 1,
            PointOutcome::Certified(_) => {
                section.feasible += 1;
                section.certified += 1;
            }
            PointOutcome::NotCertified(_) => {
                section.feasible += 1;
                section.not_certified += 1;
            }
            PointOutcome::Error(_) => {
                section.feasible += 1;
                section.errors += 1;
            }
        }
        if point.is_anomaly() {
            section.anomalies.push(anomaly_entry(point));
        }
    }
    let code = if section.anomalies.is_empty() { exit::SUCCESS } else { exit::NOT_CERTIFIED };
    report.sweep = Some(section);
    finish(report, start, code)
}

fn anomaly_entry(point: &analysis::SweepPoint) -> AnomalyEntry {
    let witness = match &point.outcome {
        PointOutcome::NotCertified(v) => {
            let array = classical::intersection_array(&point.params).ok();
            let eig = classical::laplacian_eigenvalues_sorted(&point.params).ok();
            match (array, eig) {
                (Some(array), Some(eig)) => Some(verdict_section(
                    v,
                    &array,
                    [
                        eig.lambda1.exact_string(),
                        eig.lambda2.exact_string(),
                        eig.lambda3.exact_string(),
                    ],
                )),
                _ => None,
            }
        }
        _ => None,
    };
    let outcome = match &point.outcome {
        PointOutcome::Infeasible(_) => "infeasible".to_string(),
        PointOutcome::Certified(_) => "certified".to_string(),
        PointOutcome::NotCertified(_) => "not_certified".to_string(),
        PointOutcome::Error(e) => format!("error: {e}"),
    };
    AnomalyEntry {
        params: point.params.to_string(),
        outcome,
        witness,
        failed_identities: Vec::new(),
    }
}

/// Human-readable rendering of a report, one fact per line.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        let _ = writeln!(out, "{s}");
    };

    match &report.input {
        InputEcho::ClassicalParameters { diameter, b, alpha, beta } => {
            line(format!("input: classical (D={diameter}, b={b}, alpha={alpha}, beta={beta})"));
        }
        InputEcho::AntipodalParameters { d, gamma, m } => {
            line(format!("input: antipodal (d={d}, gamma={gamma}, m={m})"));
        }
        InputEcho::GraphFile { path, vertices, edges } => {
            line(format!("input: graph {path} ({vertices} vertices, {edges} edges)"));
        }
        InputEcho::ClassicalSweep {
            b_min,
            b_max,
            scaled_alpha_min,
            scaled_alpha_max,
            beta_max,
            parallelism,
        } => {
            line(format!(
                "input: sweep b in [{b_min},{b_max}], (1+b)*alpha in \
                 [{scaled_alpha_min},{scaled_alpha_max}], beta <= {beta_max}, \
                 parallelism {parallelism}"
            ));
        }
    }

    if let Some(feas) = &report.feasibility {
        if feas.feasible {
            line("feasible: yes".to_string());
        } else {
            line("feasible: no".to_string());
            for v in &feas.violations {
                line(format!("  violated {} (value {})", v.constraint, v.value));
            }
        }
    }
    if let Some(verdict) = &report.verdict {
        line(format!("intersection array: {}", verdict.intersection_array));
        line(format!("vertices: {}", verdict.vertex_count));
        line(format!(
            "laplacian eigenvalues: 0, {}, {}, {}",
            verdict.eigenvalues[0], verdict.eigenvalues[1], verdict.eigenvalues[2]
        ));
        line(format!("eigenvalue slack: {}", verdict.eigenvalue_slack));
        for w in &verdict.per_distance {
            match &w.case {
                Some(case) => line(format!("distance {}: case {}", w.distance, case)),
                None => line(format!("distance {}: no sufficient case", w.distance)),
            }
            for note in &w.notes {
                line(format!("  note: {note}"));
            }
        }
        line(format!("verdict: {}", verdict.status));
    }
    if let Some(g) = &report.graph {
        line(format!("connected: {}", if g.connected { "yes" } else { "no" }));
        line(format!("walk-regular: {}", if g.walk_regular { "yes" } else { "no" }));
        match &g.intersection_array {
            Some(array) => line(format!("distance-regular: yes, array {array}")),
            None => line("distance-regular: no".to_string()),
        }
        if let Some(d) = g.diameter {
            line(format!("diameter: {d}"));
        }
        if !g.distinct_eigenvalues.is_empty() {
            let eigs: Vec<String> = g
                .distinct_eigenvalues
                .iter()
                .zip(&g.multiplicities)
                .map(|(e, m)| format!("{:.6} (x{m})", e.0))
                .collect();
            line(format!("distinct laplacian eigenvalues: {}", eigs.join(", ")));
        }
    }
    if let Some(check) = &report.spectral_check {
        line(format!("spectral reconstruction error: {:.3e}", check.reconstruction_error.0));
        if let Some(dev) = &check.max_delta_deviation {
            line(format!("closed-form delta deviation: {:.3e}", dev.0));
        }
    }
    if let Some(scans) = &report.scans {
        for s in scans {
            let dist = s.distance.map_or("?".to_string(), |d| d.to_string());
            line(format!(
                "scan ({},{}) distance {dist}: min h {:.6e} at t={:.6e}, {} violation(s){}",
                s.u,
                s.v,
                s.min_h.0,
                s.argmin_t.0,
                s.violations.len(),
                if s.refined { ", refined" } else { "" }
            ));
        }
        let clean = scans.iter().all(|s| s.violations.is_empty());
        line(format!(
            "monotonicity: {}",
            if clean { "no violations" } else { "VIOLATIONS FOUND" }
        ));
    }
    if let Some(sweep) = &report.sweep {
        line(format!(
            "points: {} total, {} feasible, {} infeasible",
            sweep.total_points, sweep.feasible, sweep.infeasible
        ));
        line(format!(
            "outcomes: {} certified, {} not certified, {} errors",
            sweep.certified, sweep.not_certified, sweep.errors
        ));
        if sweep.anomalies.is_empty() {
            line("anomalies: none".to_string());
        } else {
            for a in &sweep.anomalies {
                line(format!("anomaly: {} -> {}", a.params, a.outcome));
            }
        }
    }
    if let Some(err) = &report.error {
        line(format!("error: {err}"));
    }
    out
}
