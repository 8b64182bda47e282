//! Requests and JSON reports behind the `hidcor` binary.
//!
//! Exit-code contract of the binary: `0` every check holds, `1` some
//! inequality failed beyond its tolerance, `2` input or usage error.

use std::path::PathBuf;

use serde::Serialize;
use serde_json::{json, Value};

use crate::classical::{
    classical_ssa_check, relative_entropy_shannon, relative_entropy_tsallis,
    subadditivity_report, tsallis_entropy, JointView, ProbabilityVector, TsallisParam,
};
use crate::error::{Error, Result};
use crate::io::{self, DensityMatrixFile};
use crate::partition::{Factorization, QuditSplit};
use crate::probrep::{
    qubit_from_probabilities, qubit_inequality_xy, qubit_inequality_zx, qutrit_inequality_shannon,
    qutrit_inequality_tsallis,
};
use crate::quantum::{
    chsh_max, linear_entropy, mutual_quantum_information, partial_trace_left, partial_trace_right,
    separability_test, von_neumann_entropy, DensityMatrix, ReshapedState,
};
use crate::random;
use crate::tol;
use crate::tomography::{
    direction_sweep, mutual_tomographic_information, tomogram, tomographic_tsallis_report,
    Direction, DirectionRecord, Spin, SpinRep,
};

pub const TOOL: &str = "hidcor";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Seed used by `demo-four-level`.
pub const DEMO_SEED: u64 = 0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Subcommand {
    AnalyzeProb,
    AnalyzeDm,
    TomogramSweep,
    DemoFourLevel,
    Fuzz,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisRequest {
    pub subcommand: Subcommand,
    pub input: Option<PathBuf>,
    pub dims: Option<Factorization>,
    pub split: Option<usize>,
    pub q: Vec<f64>,
    /// Conditioning event as `(axis, value)` pairs, 1-based.
    pub given: Vec<(usize, usize)>,
    pub grid: Option<PathBuf>,
    pub seed: u64,
    pub count: usize,
}

impl AnalysisRequest {
    pub fn new(subcommand: Subcommand) -> Self {
        Self {
            subcommand,
            input: None,
            dims: None,
            split: None,
            q: Vec::new(),
            given: Vec::new(),
            grid: None,
            seed: 0,
            count: 10_000,
        }
    }

    fn input(&self) -> Result<&PathBuf> {
        self.input
            .as_ref()
            .ok_or_else(|| Error::Usage("--input is required".into()))
    }

    fn dims(&self) -> Result<&Factorization> {
        self.dims
            .as_ref()
            .ok_or_else(|| Error::Usage("--dims is required".into()))
    }

    fn split(&self) -> Result<QuditSplit> {
        QuditSplit::new(self.dims()?.clone(), self.split.unwrap_or(1))
    }

    fn tsallis(&self) -> Result<Vec<TsallisParam>> {
        self.q.iter().map(|&q| TsallisParam::new(q)).collect()
    }
}

/// One judged quantity. Infinite values serialize as `value: null,
/// infinite: true`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub value: Option<f64>,
    pub infinite: bool,
    pub holds: bool,
    pub tolerance: f64,
}

impl Check {
    /// `value ≥ −tolerance`, with `+∞` passing.
    pub fn nonnegative(name: impl Into<String>, value: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            value: value.is_finite().then_some(value),
            infinite: value.is_infinite(),
            holds: value >= -tolerance,
            tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub request: AnalysisRequest,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub results: Value,
}

impl Report {
    fn new(request: &AnalysisRequest, checks: Vec<Check>, results: Value) -> Self {
        Self {
            tool: TOOL,
            version: VERSION,
            request: request.clone(),
            seed: request.seed,
            checks,
            results,
        }
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

fn matrix_json(d: &DensityMatrix) -> Value {
    serde_json::to_value(DensityMatrixFile::from_matrix(d)).expect("plain data")
}

fn finite_or_null(v: f64) -> Value {
    if v.is_finite() {
        json!(v)
    } else {
        Value::Null
    }
}

/// Probability-vector pipeline.
pub fn analyze_prob(req: &AnalysisRequest) -> Result<Report> {
    let p = io::read_probability(req.input()?)?;
    analyze_prob_data(req, &p)
}

pub fn analyze_prob_data(req: &AnalysisRequest, p: &ProbabilityVector) -> Result<Report> {
    let f = req.dims()?;
    let view = JointView::new(p, f)?;
    let split = req.split()?;
    let qs = req.tsallis()?;

    let per_axis: Vec<ProbabilityVector> = (1..=f.arity())
        .map(|a| view.marginal(&[a]))
        .collect::<Result<_>>()?;
    let left = view.marginal(&split.left_axes())?;
    let right = view.marginal(&split.right_axes())?;
    let sub = subadditivity_report(&view, &split)?;

    let mut checks = vec![Check::nonnegative("subadditivity", sub.mutual_info, sub.tolerance)];
    let mut results = json!({
        "n": p.len(),
        "dims": f,
        "split": split.s(),
        "units": "nats",
        "marginals": per_axis,
        "marginal_left": left,
        "marginal_right": right,
        "s_left": sub.s_left,
        "s_right": sub.s_right,
        "s_joint": sub.s_joint,
        "mutual_info": sub.mutual_info,
    });

    if !req.given.is_empty() {
        let (given, values): (Vec<usize>, Vec<usize>) = req.given.iter().copied().unzip();
        let target: Vec<usize> = (1..=f.arity()).filter(|a| !given.contains(a)).collect();
        let cond = view.conditional(&given, &values, &target)?;
        results["conditional"] = json!({
            "given_axes": given,
            "given_values": values,
            "target_axes": target,
            "distribution": cond,
        });
    }

    if f.arity() >= 3 {
        let middle: Vec<usize> = (2..f.arity()).collect();
        let ssa = classical_ssa_check(&view, &[1], &middle, &[f.arity()])?;
        checks.push(Check::nonnegative("strong_subadditivity", ssa.lhs - ssa.rhs, ssa.tolerance));
        results["strong_subadditivity"] = json!({
            "blocks": [[1], middle, [f.arity()]],
            "lhs": ssa.lhs,
            "rhs": ssa.rhs,
        });
    }

    let mut tsallis = Vec::new();
    for q in qs {
        let s1 = tsallis_entropy(&left, q);
        let s2 = tsallis_entropy(&right, q);
        let s = tsallis_entropy(p, q);
        // subadditivity of Tsallis entropy is a theorem only for q > 1
        if q.q() > 1.0 {
            checks.push(Check::nonnegative(
                format!("tsallis_subadditivity_q={}", q.q()),
                s1 + s2 - s,
                tol::INEQUALITY,
            ));
        }
        tsallis.push(json!({"q": q, "s_q_left": s1, "s_q_right": s2, "s_q_joint": s}));
    }
    results["tsallis"] = Value::Array(tsallis);
    Ok(Report::new(req, checks, results))
}

/// Density-matrix pipeline.
pub fn analyze_dm(req: &AnalysisRequest) -> Result<Report> {
    let d = io::read_density_matrix(req.input()?)?;
    analyze_dm_data(req, &d)
}

pub fn analyze_dm_data(req: &AnalysisRequest, d: &DensityMatrix) -> Result<Report> {
    let f = req.dims()?;
    let rs = ReshapedState::new(d, f)?;
    let split = req.split()?;
    let qs = req.tsallis()?;

    let rho1 = partial_trace_right(&rs, &split)?;
    let rho2 = partial_trace_left(&rs, &split)?;
    let s = von_neumann_entropy(d);
    let s1 = von_neumann_entropy(&rho1);
    let s2 = von_neumann_entropy(&rho2);
    let info = mutual_quantum_information(&rs, &split)?;
    let lin = linear_entropy(&rs, &split)?;
    let sep = separability_test(&rs, &split)?;

    let checks = vec![Check::nonnegative("quantum_subadditivity", info, tol::QUANTUM_INFO)];
    let mut results = json!({
        "n": d.dim(),
        "dims": f,
        "split": split.s(),
        "units": "nats",
        "spectrum": d.eigenvalues(),
        "rho_1": matrix_json(&rho1),
        "rho_2": matrix_json(&rho2),
        "entropy": s,
        "entropy_1": s1,
        "entropy_2": s2,
        "mutual_information": info,
        "mutual_information_sign": "S(rho_1) + S(rho_2) - S(rho)",
        "linear_entropy": lin,
        "separability": sep,
    });
    if split.dim_left() == 2 && split.dim_right() == 2 {
        let chsh = chsh_max(&rs, &split)?;
        results["chsh_max"] = json!(chsh);
        results["bell_violation"] = json!(chsh > 2.0 + tol::INEQUALITY);
    }
    let tsallis: Vec<Value> = qs
        .iter()
        .map(|&q| {
            json!({
                "q": q,
                "s_q": crate::quantum::tsallis_entropy(d, q),
                "s_q_1": crate::quantum::tsallis_entropy(&rho1, q),
                "s_q_2": crate::quantum::tsallis_entropy(&rho2, q),
            })
        })
        .collect();
    results["tsallis"] = Value::Array(tsallis);
    Ok(Report::new(req, checks, results))
}

/// An evenly spaced `theta × phi` grid, `theta` in `[0, π]`, `phi` in `[0, 2π)`.
pub fn default_grid(n_theta: usize, n_phi: usize) -> Vec<Direction> {
    let mut grid = Vec::with_capacity(n_theta * n_phi);
    for a in 0..n_phi {
        for t in 0..n_theta {
            let theta = std::f64::consts::PI * t as f64 / (n_theta.max(2) - 1) as f64;
            let phi = std::f64::consts::TAU * a as f64 / n_phi as f64;
            grid.push(Direction::new(theta, phi));
        }
    }
    grid
}

/// Tomographic sweep. The input density matrix is in the `|m⟩` basis with
/// `m = j` first. Returns the per-direction records and a summary report.
pub fn tomogram_sweep(req: &AnalysisRequest) -> Result<(Vec<DirectionRecord>, Report)> {
    let d = io::read_density_matrix(req.input()?)?;
    let grid = match &req.grid {
        Some(path) => io::read_grid(path)?,
        None => default_grid(10, 10),
    };
    tomogram_sweep_data(req, &d, &grid)
}

pub fn tomogram_sweep_data(
    req: &AnalysisRequest,
    d: &DensityMatrix,
    grid: &[Direction],
) -> Result<(Vec<DirectionRecord>, Report)> {
    let f = req.dims()?;
    f.ensure_total(d.dim())?;
    let rep = SpinRep::new(Spin::from_dim(d.dim())?);
    let qs = req.tsallis()?;
    let records = direction_sweep(d, &rep, f, grid, &qs)?;

    let min_info = records
        .iter()
        .map(|r| r.mutual_information)
        .fold(f64::INFINITY, f64::min);
    let mut checks = vec![Check::nonnegative(
        "min_tomographic_mutual_information",
        min_info,
        tol::INEQUALITY,
    )];
    for (k, q) in qs.iter().enumerate().filter(|(_, q)| q.q() > 1.0) {
        let margin = records
            .iter()
            .map(|r| {
                let t = &r.tsallis[k];
                t.s_q1 + t.s_q2 - t.s_q
            })
            .fold(f64::INFINITY, f64::min);
        checks.push(Check::nonnegative(
            format!("min_tomographic_tsallis_subadditivity_q={}", q.q()),
            margin,
            tol::INEQUALITY,
        ));
    }
    let results = json!({
        "spin": rep.spin().to_string(),
        "directions": records.len(),
        "dims": f,
    });
    Ok((records, Report::new(req, checks, results)))
}

/// The four-level atom / spin-3/2 worked example.
pub fn demo_four_level() -> Result<Report> {
    let mut req = AnalysisRequest::new(Subcommand::DemoFourLevel);
    let f = Factorization::new(vec![2, 2])?;
    req.dims = Some(f.clone());
    req.split = Some(1);
    req.seed = DEMO_SEED;
    req.count = 0;
    let split = QuditSplit::new(f.clone(), 1)?;

    let mut compose = Vec::new();
    for x2 in 1..=2 {
        for x1 in 1..=2 {
            compose.push(json!({"x1": x1, "x2": x2, "y": f.compose(&[x1, x2])?}));
        }
    }
    let decomposed: Vec<_> = (1..=4).map(|y| f.decompose(y)).collect::<Result<_>>()?;
    let x1: Vec<usize> = decomposed.iter().map(|m| m.0[0]).collect();
    let x2: Vec<usize> = decomposed.iter().map(|m| m.0[1]).collect();

    // |3/2⟩ and |−3/2⟩ in the m-descending spin basis
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let zero = num_complex::Complex64::new(0.0, 0.0);
    let amp = num_complex::Complex64::new(h, 0.0);
    let spin_state = DensityMatrix::from_pure(&[amp, zero, zero, amp])?;
    // m = −3/2 → y = 1, …, m = 3/2 → y = 4
    let rho = spin_state.reversed();
    let rs = ReshapedState::new(&rho, &f)?;

    let rho1 = partial_trace_right(&rs, &split)?;
    let rho2 = partial_trace_left(&rs, &split)?;
    let info = mutual_quantum_information(&rs, &split)?;
    let sep = separability_test(&rs, &split)?;
    let chsh = chsh_max(&rs, &split)?;
    let lin = linear_entropy(&rs, &split)?;

    let rep = SpinRep::new(Spin::from_dim(4)?);
    let t = tomogram(&spin_state, &rep, Direction::new(0.0, 0.0))?;
    let tomo_info = mutual_tomographic_information(&t, &f)?;

    let checks = vec![
        Check::nonnegative("quantum_subadditivity", info, tol::QUANTUM_INFO),
        Check::nonnegative("tomographic_subadditivity_theta=0", tomo_info, tol::INEQUALITY),
    ];
    let results = json!({
        "system": "four-level atom = spin 3/2 = two artificial qubits",
        "relabeling": {"-3/2": 1, "-1/2": 2, "1/2": 3, "3/2": 4},
        "compose": compose,
        "x1_of_y": x1,
        "x2_of_y": x2,
        "state": "(|3/2> + |-3/2>)/sqrt(2)",
        "rho": matrix_json(&rho),
        "rho_1": matrix_json(&rho1),
        "rho_2": matrix_json(&rho2),
        "entropy": von_neumann_entropy(&rho),
        "entropy_1": von_neumann_entropy(&rho1),
        "entropy_2": von_neumann_entropy(&rho2),
        "mutual_information": info,
        "linear_entropy": lin,
        "separability": sep,
        "chsh_max": chsh,
        "chsh_classical_bound": 2.0,
        "bell_inequality": if chsh > 2.0 + tol::INEQUALITY { "violated" } else { "satisfied" },
        "tomogram_theta_0": t.values(),
        "tomographic_mutual_information_theta_0": tomo_info,
    });
    Ok(Report::new(&req, checks, results))
}

struct MinMargin {
    name: &'static str,
    tolerance: f64,
    min: f64,
    infinite: usize,
    samples: usize,
}

impl MinMargin {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Self {
            name,
            tolerance,
            min: f64::INFINITY,
            infinite: 0,
            samples: 0,
        }
    }

    fn push(&mut self, v: f64) {
        self.samples += 1;
        if v.is_infinite() {
            self.infinite += 1;
        } else {
            self.min = self.min.min(v);
        }
    }
}

/// Randomized sweep over every inequality with one seeded generator.
pub fn fuzz(req: &AnalysisRequest) -> Result<Report> {
    let count = req.count;
    if count == 0 {
        return Err(Error::Usage("--count must be positive".into()));
    }
    let qs = if req.q.is_empty() {
        vec![1.5, 2.0, 3.0]
    } else {
        req.q.clone()
    };
    let qs: Vec<TsallisParam> = qs
        .into_iter()
        .map(TsallisParam::new)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|q| q.q() > 1.0)
        .collect();
    let mut rng = random::seeded(req.seed);

    let mut classical = MinMargin::new("classical_subadditivity", tol::INEQUALITY);
    let mut kl = MinMargin::new("relative_entropy_shannon", tol::INEQUALITY);
    let mut kl_q = MinMargin::new("relative_entropy_tsallis", tol::INEQUALITY);
    for _ in 0..count {
        let f = random::factorization(&mut rng, 64);
        let p = random::dirichlet_uniform(&mut rng, f.total());
        let view = JointView::new(&p, &f)?;
        let split = QuditSplit::new(f.clone(), 1 + rand::Rng::random_range(&mut rng, 0..f.arity() - 1))?;
        classical.push(subadditivity_report(&view, &split)?.mutual_info);
        let r = random::dirichlet_uniform(&mut rng, f.total());
        kl.push(relative_entropy_shannon(&p, &r)?);
        for &q in &qs {
            kl_q.push(relative_entropy_tsallis(&p, &r, q)?);
        }
    }

    let mut zx = MinMargin::new("qubit_inequality_zx", tol::INEQUALITY);
    let mut xy = MinMargin::new("qubit_inequality_xy", tol::INEQUALITY);
    for _ in 0..count {
        let d = qubit_from_probabilities(random::bloch_ball(&mut rng))?;
        zx.push(qubit_inequality_zx(&d)?.value);
        xy.push(qubit_inequality_xy(&d)?.value);
    }

    let mut qutrit_s = MinMargin::new("qutrit_inequality_shannon", tol::INEQUALITY);
    let mut qutrit_q = MinMargin::new("qutrit_inequality_tsallis", tol::INEQUALITY);
    for _ in 0..count {
        let d = random::ginibre_state(&mut rng, 3);
        qutrit_s.push(qutrit_inequality_shannon(&d)?.value);
        for &q in &qs {
            qutrit_q.push(qutrit_inequality_tsallis(&d, q)?.value);
        }
    }

    let mut quantum = MinMargin::new("quantum_subadditivity", tol::QUANTUM_INFO);
    let f4 = Factorization::new(vec![2, 2])?;
    let split4 = QuditSplit::new(f4.clone(), 1)?;
    for _ in 0..count {
        let d = random::ginibre_state(&mut rng, 4);
        quantum.push(mutual_quantum_information(&ReshapedState::new(&d, &f4)?, &split4)?);
    }

    let mut tomo = MinMargin::new("tomographic_mutual_information", tol::INEQUALITY);
    let mut tomo_q = MinMargin::new("tomographic_tsallis_subadditivity", tol::INEQUALITY);
    let rep = SpinRep::new(Spin::from_dim(4)?);
    for _ in 0..count {
        let d = random::ginibre_state(&mut rng, 4);
        let t = tomogram(&d, &rep, random::direction(&mut rng))?;
        tomo.push(mutual_tomographic_information(&t, &f4)?);
        for &q in &qs {
            let r = tomographic_tsallis_report(&t, &f4, q)?;
            tomo_q.push(r.s_q1 + r.s_q2 - r.s_q);
        }
    }

    let sweeps = [classical, kl, kl_q, zx, xy, qutrit_s, qutrit_q, quantum, tomo, tomo_q];
    let checks = sweeps
        .iter()
        .map(|m| Check::nonnegative(format!("min_margin:{}", m.name), m.min, m.tolerance))
        .collect();
    let summary: Vec<Value> = sweeps
        .iter()
        .map(|m| {
            json!({
                "inequality": m.name,
                "samples": m.samples,
                "infinite": m.infinite,
                "min_margin": finite_or_null(m.min),
            })
        })
        .collect();
    let results = json!({
        "count": count,
        "q": qs,
        "sweeps": summary,
    });
    Ok(Report::new(req, checks, results))
}
