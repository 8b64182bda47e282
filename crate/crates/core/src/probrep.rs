//! Qubit and qutrit density-matrix elements written through spin-projection
//! probabilities, and the entropic inequalities those probabilities imply.
//!
//! Basis order is `m = +1/2, −1/2`, so `ρ₁₁ = ρ_{1/2,1/2}` and
//! `ρ₁₂ = ρ_{1/2,−1/2}`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::classical::{kl, tsallis_divergence, TsallisParam};
use crate::error::{Error, Result};
use crate::quantum::DensityMatrix;
use crate::tol;

/// Probabilities of `m = +1/2` along x, y and z.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QubitProbabilities {
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
}

impl QubitProbabilities {
    pub fn bloch_radius(&self) -> f64 {
        [self.p1, self.p2, self.p3]
            .iter()
            .map(|p| (2.0 * p - 1.0).powi(2))
            .sum::<f64>()
            .sqrt()
    }
}

/// Outcome of one matrix-element inequality. `value` may be `+∞`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InequalityOutcome {
    pub value: f64,
    pub holds: bool,
    pub tolerance: f64,
}

impl InequalityOutcome {
    pub(crate) fn nonnegative(value: f64) -> Self {
        Self {
            value,
            holds: value >= -tol::INEQUALITY,
            tolerance: tol::INEQUALITY,
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.value.is_infinite()
    }
}

/// `ρ₁₁ = p₃`, `ρ₁₂ = p₁ − i p₂ − (1 − i)/2`, `ρ₂₂ = 1 − p₃`.
pub fn qubit_from_probabilities(qp: QubitProbabilities) -> Result<DensityMatrix> {
    for (name, p) in [("p1", qp.p1), ("p2", qp.p2), ("p3", qp.p3)] {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidProbability(format!("{name} = {p} not in [0, 1]")));
        }
    }
    let radius = qp.bloch_radius();
    if radius * radius > 1.0 + tol::INEQUALITY {
        return Err(Error::OutsideBlochBall { radius });
    }
    let off = Complex64::new(qp.p1 - 0.5, 0.5 - qp.p2);
    DensityMatrix::from_rows(
        2,
        &[
            Complex64::new(qp.p3, 0.0),
            off,
            off.conj(),
            Complex64::new(1.0 - qp.p3, 0.0),
        ],
    )
}

pub fn probabilities_from_qubit(d: &DensityMatrix) -> Result<QubitProbabilities> {
    expect_dim(d, 2)?;
    let off = d.element(1, 2);
    Ok(QubitProbabilities {
        p1: off.re + 0.5,
        p2: 0.5 - off.im,
        p3: d.element(1, 1).re,
    })
}

fn expect_dim(d: &DensityMatrix, n: usize) -> Result<()> {
    if d.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: d.dim(),
        });
    }
    Ok(())
}

fn x_distribution(d: &DensityMatrix) -> [f64; 2] {
    let re = d.element(1, 2).re;
    [0.5 + re, 0.5 - re]
}

/// `D((½ + Re ρ₁₂, ½ − Re ρ₁₂) ‖ (ρ₁₁, ρ₂₂)) ≥ 0`.
pub fn qubit_inequality_zx(d: &DensityMatrix) -> Result<InequalityOutcome> {
    expect_dim(d, 2)?;
    let z = [d.element(1, 1).re, d.element(2, 2).re];
    Ok(InequalityOutcome::nonnegative(kl(&x_distribution(d), &z)))
}

/// `D((½ + Re ρ₁₂, ½ − Re ρ₁₂) ‖ (½ + Im ρ₁₂, ½ − Im ρ₁₂)) ≥ 0`.
pub fn qubit_inequality_xy(d: &DensityMatrix) -> Result<InequalityOutcome> {
    expect_dim(d, 2)?;
    let im = d.element(1, 2).im;
    Ok(InequalityOutcome::nonnegative(kl(&x_distribution(d), &[0.5 + im, 0.5 - im])))
}

/// How to read the second logarithm of the qutrit Shannon inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QutritReading {
    /// `ρ₃₃ ln(ρ₃₃ / (½ − Re ρ₁₃))`, a true relative entropy.
    #[default]
    RelativeEntropy,
    /// `ρ₃₃ ln((ρ₃₃ + ρ₂₂) / (½ − Re ρ₁₃))` as typeset in the source.
    AsPrinted,
}

fn qutrit_parts(d: &DensityMatrix) -> Result<([f64; 2], [f64; 2])> {
    expect_dim(d, 3)?;
    let re13 = d.element(1, 3).re;
    // |ρ₁₃| ≤ √(ρ₁₁ρ₃₃) ≤ ½ for any valid state
    assert!(
        re13.abs() <= 0.5 + tol::PSD,
        "validated qutrit has |Re rho13| = {re13} > 1/2"
    );
    let p = [d.element(1, 1).re + d.element(2, 2).re, d.element(3, 3).re];
    let r = [0.5 + re13, 0.5 - re13];
    Ok((p, r))
}

/// `D((ρ₁₁ + ρ₂₂, ρ₃₃) ‖ (½ + Re ρ₁₃, ½ − Re ρ₁₃)) ≥ 0`.
pub fn qutrit_inequality_shannon(d: &DensityMatrix) -> Result<InequalityOutcome> {
    qutrit_inequality_shannon_with(d, QutritReading::RelativeEntropy)
}

pub fn qutrit_inequality_shannon_with(
    d: &DensityMatrix,
    reading: QutritReading,
) -> Result<InequalityOutcome> {
    let (p, r) = qutrit_parts(d)?;
    let value = match reading {
        QutritReading::RelativeEntropy => kl(&p, &r),
        QutritReading::AsPrinted => {
            let rho22 = d.element(2, 2).re;
            let term = |mass: f64, num: f64, den: f64| {
                if mass <= 0.0 {
                    0.0
                } else if den <= 0.0 {
                    f64::INFINITY
                } else {
                    mass * (num / den).ln()
                }
            };
            term(p[0], p[0], r[0]) + term(p[1], p[1] + rho22, r[1])
        }
    };
    Ok(InequalityOutcome::nonnegative(value))
}

/// Tsallis counterpart of [`qutrit_inequality_shannon`]; needs `q > 1`.
pub fn qutrit_inequality_tsallis(d: &DensityMatrix, tq: TsallisParam) -> Result<InequalityOutcome> {
    if tq.q() <= 1.0 {
        return Err(Error::Usage(format!(
            "qutrit Tsallis inequality needs q > 1, got {}",
            tq.q()
        )));
    }
    let (p, r) = qutrit_parts(d)?;
    Ok(InequalityOutcome::nonnegative(tsallis_divergence(&p, &r, tq.q())))
}

/// The nine probabilities `p_j^{(k)}`, stored as `p[k-1][j-1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QutritElements {
    pub p: [[f64; 3]; 3],
}

impl QutritElements {
    /// `p_j^{(k)}` with 1-based `j`, `k`.
    pub fn get(&self, j: usize, k: usize) -> f64 {
        self.p[k - 1][j - 1]
    }
}

/// The qutrit matrix elements recoverable from the nine probabilities.
/// `ρ₁₃`, `ρ₂₃` and their conjugates are not determined here.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PartialQutrit {
    pub rho11: f64,
    pub rho22: f64,
    pub rho33: f64,
    pub rho21: Complex64,
}

pub fn qutrit_elements_from_probabilities(qe: &QutritElements) -> Result<PartialQutrit> {
    for row in &qe.p {
        for &v in row {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::InvalidProbability(format!("{v} not in [0, 1]")));
            }
        }
    }
    let rho11 = qe.get(3, 2) + qe.get(3, 1) - 1.0;
    let rho22 = 1.0 - qe.get(3, 2);
    let rho33 = 1.0 - rho11 - rho22;
    for (name, v) in [("rho11", rho11), ("rho22", rho22), ("rho33", rho33)] {
        if !(-tol::CLAMP..=1.0 + tol::CLAMP).contains(&v) {
            return Err(Error::InvalidProbability(format!("{name} = {v} outside [0, 1]")));
        }
    }
    let rho21 = Complex64::new(qe.get(1, 2) - 0.5, qe.get(2, 2) - 0.5);
    Ok(PartialQutrit {
        rho11,
        rho22,
        rho33,
        rho21,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::LN_2;

    fn qp(p1: f64, p2: f64, p3: f64) -> QubitProbabilities {
        QubitProbabilities { p1, p2, p3 }
    }

    fn qubit(rho11: f64, off: Complex64) -> DensityMatrix {
        DensityMatrix::from_rows(
            2,
            &[Complex64::new(rho11, 0.0), off, off.conj(), Complex64::new(1.0 - rho11, 0.0)],
        )
        .unwrap()
    }

    #[test]
    fn qubit_from_probability_examples() {
        let mixed = qubit_from_probabilities(qp(0.5, 0.5, 0.5)).unwrap();
        assert_eq!(mixed.matrix(), DensityMatrix::maximally_mixed(2).matrix());

        let up = qubit_from_probabilities(qp(0.5, 0.5, 1.0)).unwrap();
        assert_eq!(up.element(1, 1).re, 1.0);
        assert_eq!(up.element(1, 2), Complex64::new(0.0, 0.0));

        let tilted = qubit_from_probabilities(qp(0.9, 0.5, 0.5)).unwrap();
        assert_abs_diff_eq!(tilted.element(1, 2).re, 0.4, epsilon = 1e-15);
        assert_eq!(tilted.element(1, 2).im, 0.0);
        assert_eq!(tilted.element(1, 1).re, 0.5);
    }

    #[test]
    fn bloch_violation_reports_radius() {
        match qubit_from_probabilities(qp(1.0, 1.0, 0.5)) {
            Err(Error::OutsideBlochBall { radius }) => assert_abs_diff_eq!(radius, 2f64.sqrt(), epsilon = 1e-15),
            other => panic!("unexpected {other:?}"),
        }
        assert!(qubit_from_probabilities(qp(1.2, 0.5, 0.5)).is_err());
    }

    #[test]
    fn probabilities_from_qubit_examples() {
        assert_eq!(
            probabilities_from_qubit(&DensityMatrix::maximally_mixed(2)).unwrap(),
            qp(0.5, 0.5, 0.5)
        );
        let up = DensityMatrix::diagonal(&[1.0, 0.0]).unwrap();
        assert_eq!(probabilities_from_qubit(&up).unwrap(), qp(0.5, 0.5, 1.0));
        let back = probabilities_from_qubit(&qubit(0.5, Complex64::new(0.4, 0.0))).unwrap();
        assert_abs_diff_eq!(back.p1, 0.9, epsilon = 1e-15);
        assert_eq!((back.p2, back.p3), (0.5, 0.5));
        assert!(probabilities_from_qubit(&DensityMatrix::maximally_mixed(3)).is_err());
    }

    #[test]
    fn zx_examples() {
        let v = qubit_inequality_zx(&DensityMatrix::maximally_mixed(2)).unwrap();
        assert_eq!(v.value, 0.0);
        assert!(v.holds);
        let tilted = qubit_from_probabilities(qp(0.9, 0.5, 0.5)).unwrap();
        assert_abs_diff_eq!(qubit_inequality_zx(&tilted).unwrap().value, 0.3680642071684971, epsilon = 1e-12);
        let up = DensityMatrix::diagonal(&[1.0, 0.0]).unwrap();
        let v = qubit_inequality_zx(&up).unwrap();
        assert!(v.is_infinite() && v.holds);
    }

    #[test]
    fn xy_examples() {
        assert_eq!(qubit_inequality_xy(&DensityMatrix::maximally_mixed(2)).unwrap().value, 0.0);
        let real = qubit(0.5, Complex64::new(0.4, 0.0));
        assert_abs_diff_eq!(qubit_inequality_xy(&real).unwrap().value, 0.3680642071684971, epsilon = 1e-12);
        // (0.7, 0.3) against (½ + Im, ½ − Im)
        let equal = qubit(0.5, Complex64::new(0.2, 0.2));
        assert_abs_diff_eq!(qubit_inequality_xy(&equal).unwrap().value, 0.0, epsilon = 1e-15);
        let opposite = qubit(0.5, Complex64::new(0.2, -0.2));
        assert_abs_diff_eq!(qubit_inequality_xy(&opposite).unwrap().value, 0.33891914415488145, epsilon = 1e-12);
    }

    #[test]
    fn qutrit_shannon_examples() {
        let v = qutrit_inequality_shannon(&DensityMatrix::maximally_mixed(3)).unwrap();
        assert_abs_diff_eq!(v.value, 0.056633012265132426, epsilon = 1e-12);
        let d = DensityMatrix::diagonal(&[0.5, 0.5, 0.0]).unwrap();
        assert_abs_diff_eq!(qutrit_inequality_shannon(&d).unwrap().value, LN_2, epsilon = 1e-15);
        // ρ₁₁ + ρ₂₂ = ½ + Re ρ₁₃ with Re ρ₁₃ = 0.1
        let z = Complex64::new(0.0, 0.0);
        let r = |v: f64| Complex64::new(v, 0.0);
        let eq = DensityMatrix::from_rows(3, &[r(0.3), z, r(0.1), z, r(0.3), z, r(0.1), z, r(0.4)]).unwrap();
        assert_abs_diff_eq!(qutrit_inequality_shannon(&eq).unwrap().value, 0.0, epsilon = 1e-15);
        for q in [1.5, 2.0, 3.0] {
            let v = qutrit_inequality_tsallis(&eq, TsallisParam::new(q).unwrap()).unwrap();
            assert_abs_diff_eq!(v.value, 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn qutrit_printed_reading_differs_when_rho22_nonzero() {
        let mixed = DensityMatrix::maximally_mixed(3);
        let printed = qutrit_inequality_shannon_with(&mixed, QutritReading::AsPrinted).unwrap();
        // (2/3) ln(4/3) + (1/3) ln((2/3)/(1/2))
        let expected = 2.0 / 3.0 * (4.0f64 / 3.0).ln() + 1.0 / 3.0 * (4.0f64 / 3.0).ln();
        assert_abs_diff_eq!(printed.value, expected, epsilon = 1e-15);
    }

    #[test]
    fn qutrit_tsallis_examples() {
        let q2 = TsallisParam::new(2.0).unwrap();
        let v = qutrit_inequality_tsallis(&DensityMatrix::maximally_mixed(3), q2).unwrap();
        assert_abs_diff_eq!(v.value, 1.0 / 9.0, epsilon = 1e-15);
        let d = DensityMatrix::diagonal(&[0.5, 0.5, 0.0]).unwrap();
        assert_abs_diff_eq!(qutrit_inequality_tsallis(&d, q2).unwrap().value, 1.0, epsilon = 1e-15);
        let low = TsallisParam::new(0.5).unwrap();
        assert!(qutrit_inequality_tsallis(&d, low).is_err());
        assert!(qutrit_inequality_tsallis(&DensityMatrix::maximally_mixed(2), q2).is_err());
    }

    #[test]
    fn qutrit_tsallis_near_one_matches_shannon() {
        let d = DensityMatrix::maximally_mixed(3);
        let t = qutrit_inequality_tsallis(&d, TsallisParam::new(1.0 + 1e-6).unwrap()).unwrap();
        let s = qutrit_inequality_shannon(&d).unwrap();
        assert_abs_diff_eq!(t.value, s.value, epsilon = 1e-4);
    }

    #[test]
    fn qutrit_elements_examples() {
        let halves = QutritElements { p: [[0.5; 3]; 3] };
        let e = qutrit_elements_from_probabilities(&halves).unwrap();
        assert_eq!((e.rho11, e.rho22, e.rho33), (0.0, 0.5, 0.5));
        assert_eq!(e.rho21, Complex64::new(0.0, 0.0));

        let mut top = halves;
        top.p[0][2] = 1.0;
        top.p[1][2] = 1.0;
        let e = qutrit_elements_from_probabilities(&top).unwrap();
        assert_eq!((e.rho11, e.rho22), (1.0, 0.0));

        let mut skew = halves;
        skew.p[1][0] = 0.8;
        skew.p[1][1] = 0.1;
        let e = qutrit_elements_from_probabilities(&skew).unwrap();
        assert_abs_diff_eq!(e.rho21.re, 0.3, epsilon = 1e-15);
        assert_abs_diff_eq!(e.rho21.im, -0.4, epsilon = 1e-15);

        let mut bad = halves;
        bad.p[0][2] = 0.1;
        bad.p[1][2] = 0.2;
        assert!(qutrit_elements_from_probabilities(&bad).is_err());
    }

    #[test]
    fn qubit_json_fields() {
        let q: QubitProbabilities = serde_json::from_str(r#"{"p1":0.9,"p2":0.5,"p3":0.5}"#).unwrap();
        assert_eq!(q, qp(0.9, 0.5, 0.5));
    }
}
