//! Classical hidden correlations: a single-variable distribution `P(y)` read
//! as a joint distribution `Π(x₁, …, x_M) = P(y(x₁, …, x_M))`.
//!
//! All entropies are in nats. `0 · ln 0 = 0`. Relative entropies return
//! `f64::INFINITY` when the support condition fails; they never return NaN.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{Factorization, QuditSplit};
use crate::tol;

/// Normalized nonnegative vector `P(y)`, `y = 1..=N`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct ProbabilityVector(Vec<f64>);

impl ProbabilityVector {
    /// Strict constructor for external input: the sum must be 1 within
    /// [`tol::NORMALIZATION`]. Entries in `[-tol::CLAMP, 0)` are clamped.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        Self::with_tolerance(values, tol::NORMALIZATION)
    }

    /// As [`new`](Self::new) with an explicit normalization tolerance.
    pub fn with_tolerance(mut values: Vec<f64>, sum_tolerance: f64) -> Result<Self> {
        clamp_entries(&mut values)?;
        let sum: f64 = values.iter().sum();
        if (sum - 1.0).abs() > sum_tolerance {
            return Err(Error::InvalidProbability(format!(
                "entries sum to {sum}, |sum - 1| exceeds {sum_tolerance:e}"
            )));
        }
        values.iter_mut().for_each(|v| *v /= sum);
        Ok(Self(values))
    }

    /// Normalizes arbitrary nonnegative weights.
    pub fn from_weights(mut values: Vec<f64>) -> Result<Self> {
        clamp_entries(&mut values)?;
        let sum: f64 = values.iter().sum();
        if sum <= 0.0 {
            return Err(Error::InvalidProbability("weights sum to zero".into()));
        }
        values.iter_mut().for_each(|v| *v /= sum);
        Ok(Self(values))
    }

    pub fn uniform(n: usize) -> Self {
        Self(vec![1.0 / n as f64; n])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

fn clamp_entries(values: &mut [f64]) -> Result<()> {
    if values.is_empty() {
        return Err(Error::InvalidProbability("empty vector".into()));
    }
    for (i, v) in values.iter_mut().enumerate() {
        if !v.is_finite() {
            return Err(Error::InvalidProbability(format!("entry {} is not finite", i + 1)));
        }
        if *v < -tol::CLAMP {
            return Err(Error::InvalidProbability(format!(
                "entry {} is negative ({v})",
                i + 1
            )));
        }
        if *v < 0.0 {
            *v = 0.0;
        }
    }
    Ok(())
}

/// Tsallis index `q > 0`, `q ≠ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(transparent)]
pub struct TsallisParam(f64);

impl TsallisParam {
    pub fn new(q: f64) -> Result<Self> {
        if !q.is_finite() || q <= 0.0 || q == 1.0 {
            return Err(Error::InvalidTsallis(q));
        }
        Ok(Self(q))
    }

    pub fn q(self) -> f64 {
        self.0
    }
}

/// `P(y)` seen through a factorization. Borrows; never copies values.
#[derive(Debug, Clone, Copy)]
pub struct JointView<'a> {
    base: &'a ProbabilityVector,
    factorization: &'a Factorization,
}

impl<'a> JointView<'a> {
    pub fn new(base: &'a ProbabilityVector, factorization: &'a Factorization) -> Result<Self> {
        factorization.ensure_total(base.len())?;
        Ok(Self { base, factorization })
    }

    pub fn factorization(&self) -> &'a Factorization {
        self.factorization
    }

    pub fn base(&self) -> &'a ProbabilityVector {
        self.base
    }

    /// `Π(x₁, …, x_M)` for 1-based coordinates.
    pub fn joint(&self, coords: &[usize]) -> Result<f64> {
        let y = self.factorization.compose(coords)?;
        Ok(self.base.0[y - 1])
    }

    /// Sums `Π` over every axis not in `keep` (1-based, ascending). The result
    /// is indexed through the partition map of the kept dimensions.
    pub fn marginal(&self, keep: &[usize]) -> Result<ProbabilityVector> {
        self.factorization.check_axes(keep)?;
        let kept = self.factorization.restrict(keep)?;
        let mut out = vec![0.0; kept.total()];
        let mut digits = vec![0; self.factorization.arity()];
        let mut sub = vec![0; keep.len()];
        for (flat, &p) in self.base.0.iter().enumerate() {
            self.factorization.digits_zero_based(flat, &mut digits);
            for (slot, &axis) in sub.iter_mut().zip(keep) {
                *slot = digits[axis - 1];
            }
            out[kept.flat_zero_based(&sub)] += p;
        }
        ProbabilityVector::from_weights(out)
    }

    /// Bayes ratio `p(target | given = values)`, marginalizing every axis in
    /// neither set. `given_values` are 1-based coordinates aligned with
    /// `given`.
    pub fn conditional(
        &self,
        given: &[usize],
        given_values: &[usize],
        target: &[usize],
    ) -> Result<ProbabilityVector> {
        self.factorization.check_axes(given)?;
        self.factorization.check_axes(target)?;
        if given.iter().any(|a| target.contains(a)) {
            return Err(Error::Usage("given and target axes overlap".into()));
        }
        if given_values.len() != given.len() {
            return Err(Error::DimensionMismatch {
                expected: given.len(),
                found: given_values.len(),
            });
        }
        for (&axis, &value) in given.iter().zip(given_values) {
            let max = self.factorization.dims()[axis - 1];
            if value == 0 || value > max {
                return Err(Error::CoordinateOutOfRange { axis, value, max });
            }
        }
        let kept = self.factorization.restrict(target)?;
        let mut out = vec![0.0; kept.total()];
        let mut digits = vec![0; self.factorization.arity()];
        let mut sub = vec![0; target.len()];
        for (flat, &p) in self.base.0.iter().enumerate() {
            self.factorization.digits_zero_based(flat, &mut digits);
            let matches = given
                .iter()
                .zip(given_values)
                .all(|(&axis, &value)| digits[axis - 1] + 1 == value);
            if !matches {
                continue;
            }
            for (slot, &axis) in sub.iter_mut().zip(target) {
                *slot = digits[axis - 1];
            }
            out[kept.flat_zero_based(&sub)] += p;
        }
        let event: f64 = out.iter().sum();
        if event <= 0.0 {
            return Err(Error::ConditioningOnNull);
        }
        ProbabilityVector::from_weights(out)
    }
}

pub(crate) fn shannon(p: &[f64]) -> f64 {
    -p.iter()
        .filter(|&&v| v > 0.0)
        .map(|&v| v * v.ln())
        .sum::<f64>()
}

pub(crate) fn tsallis(p: &[f64], q: f64) -> f64 {
    let power_sum: f64 = p.iter().filter(|&&v| v > 0.0).map(|&v| v.powf(q)).sum();
    (power_sum - 1.0) / (1.0 - q)
}

pub(crate) fn kl(p: &[f64], r: &[f64]) -> f64 {
    let mut acc = 0.0;
    for (&pi, &ri) in p.iter().zip(r) {
        if pi <= 0.0 {
            continue;
        }
        if ri <= 0.0 {
            return f64::INFINITY;
        }
        acc += pi * (pi / ri).ln();
    }
    acc
}

pub(crate) fn tsallis_divergence(p: &[f64], r: &[f64], q: f64) -> f64 {
    let mut acc = 0.0;
    for (&pi, &ri) in p.iter().zip(r) {
        if pi <= 0.0 {
            continue;
        }
        if ri <= 0.0 {
            if q > 1.0 {
                return f64::INFINITY;
            }
            continue;
        }
        acc += pi.powf(q) * ri.powf(1.0 - q);
    }
    (acc - 1.0) / (q - 1.0)
}

/// `-Σ p ln p` in nats.
pub fn shannon_entropy(p: &ProbabilityVector) -> f64 {
    shannon(&p.0)
}

/// `(Σ p^q − 1) / (1 − q)`.
pub fn tsallis_entropy(p: &ProbabilityVector, tq: TsallisParam) -> f64 {
    tsallis(&p.0, tq.0)
}

/// `Σ p ln(p / r)`; `+∞` when some `r_i = 0 < p_i`.
pub fn relative_entropy_shannon(p: &ProbabilityVector, r: &ProbabilityVector) -> Result<f64> {
    same_length(p, r)?;
    Ok(kl(&p.0, &r.0))
}

/// `(Σ p^q r^{1−q} − 1) / (q − 1)`; `+∞` when `q > 1` and some `r_i = 0 < p_i`.
pub fn relative_entropy_tsallis(
    p: &ProbabilityVector,
    r: &ProbabilityVector,
    tq: TsallisParam,
) -> Result<f64> {
    same_length(p, r)?;
    Ok(tsallis_divergence(&p.0, &r.0, tq.0))
}

fn same_length(p: &ProbabilityVector, r: &ProbabilityVector) -> Result<()> {
    if p.len() != r.len() {
        return Err(Error::Usage(format!(
            "relative entropy needs equal lengths, got {} and {}",
            p.len(),
            r.len()
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubadditivityReport {
    pub s_left: f64,
    pub s_right: f64,
    pub s_joint: f64,
    pub mutual_info: f64,
    pub holds: bool,
    pub tolerance: f64,
}

/// `S_left + S_right ≥ S_joint` for the two blocks of `split`. A violation is
/// reported through `holds`, never raised.
pub fn subadditivity_report(view: &JointView<'_>, split: &QuditSplit) -> Result<SubadditivityReport> {
    if split.factorization() != view.factorization() {
        return Err(Error::Usage("split was built for a different factorization".into()));
    }
    let s_left = shannon_entropy(&view.marginal(&split.left_axes())?);
    let s_right = shannon_entropy(&view.marginal(&split.right_axes())?);
    let s_joint = shannon_entropy(view.base());
    let mutual_info = s_left + s_right - s_joint;
    Ok(SubadditivityReport {
        s_left,
        s_right,
        s_joint,
        mutual_info,
        holds: mutual_info >= -tol::INEQUALITY,
        tolerance: tol::INEQUALITY,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StrongSubadditivityReport {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
    pub tolerance: f64,
}

/// Classical strong subadditivity `S(A,B) + S(B,C) ≥ S(A,B,C) + S(B)` for three
/// disjoint nonempty axis blocks; `b` is the shared middle block.
pub fn classical_ssa_check(
    view: &JointView<'_>,
    a: &[usize],
    b: &[usize],
    c: &[usize],
) -> Result<StrongSubadditivityReport> {
    if view.factorization().arity() < 3 {
        return Err(Error::Usage(format!(
            "strong subadditivity needs at least 3 factors, got {}",
            view.factorization().arity()
        )));
    }
    let sorted = |blocks: &[&[usize]]| {
        let mut v: Vec<usize> = blocks.iter().flat_map(|s| s.iter().copied()).collect();
        v.sort_unstable();
        v
    };
    let all = sorted(&[a, b, c]);
    // Overlaps show up as repeats, which check_axes rejects.
    view.factorization().check_axes(&all)?;
    for block in [a, b, c] {
        if block.is_empty() {
            return Err(Error::Usage("every block must be nonempty".into()));
        }
    }
    let entropy = |axes: Vec<usize>| -> Result<f64> { Ok(shannon_entropy(&view.marginal(&axes)?)) };
    let lhs = entropy(sorted(&[a, b]))? + entropy(sorted(&[b, c]))?;
    let rhs = entropy(all)? + entropy(sorted(&[b]))?;
    Ok(StrongSubadditivityReport {
        lhs,
        rhs,
        holds: lhs - rhs >= -tol::INEQUALITY,
        tolerance: tol::INEQUALITY,
    })
}
