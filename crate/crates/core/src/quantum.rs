//! Density matrices of a single qudit read as states of artificial qudits.
//!
//! The reshaped matrix `R_{x…,x'…} = ρ_{y(x…), y(x'…)}` is the same numbers
//! under a different reading, so [`ReshapedState`] only borrows. Partial traces
//! keep either the leading block (`ρ(1)`) or the trailing block (`ρ(2)`) of a
//! [`QuditSplit`].

use nalgebra::{DMatrix, Matrix3};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{Factorization, QuditSplit};
use crate::tol;

pub type CMatrix = DMatrix<Complex64>;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Eigenvalues of a Hermitian matrix in ascending order. Only the lower
/// triangle is read.
pub fn hermitian_eigenvalues(m: &CMatrix) -> Vec<f64> {
    let mut ev: Vec<f64> = m.clone().symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(|a, b| a.total_cmp(b));
    ev
}

/// Hermitian, PSD, unit-trace matrix with its spectrum cached.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: CMatrix,
    eigenvalues: Vec<f64>,
}

impl DensityMatrix {
    /// Checks Hermiticity, unit trace and positivity, in that order.
    pub fn validate(matrix: CMatrix) -> Result<Self> {
        let (rows, cols) = matrix.shape();
        if rows != cols || rows == 0 {
            return Err(Error::NotSquare { rows, cols });
        }
        let mut deviation = 0.0f64;
        for i in 0..rows {
            for j in 0..=i {
                deviation = deviation.max((matrix[(i, j)] - matrix[(j, i)].conj()).norm());
            }
        }
        if deviation > tol::HERMITIAN || deviation.is_nan() {
            return Err(Error::NotHermitian {
                deviation,
                tolerance: tol::HERMITIAN,
            });
        }
        let trace = matrix.trace().re;
        if (trace - 1.0).abs() > tol::TRACE {
            return Err(Error::TraceNotOne {
                trace,
                tolerance: tol::TRACE,
            });
        }
        let eigenvalues = hermitian_eigenvalues(&matrix);
        let min_eigenvalue = eigenvalues[0];
        if min_eigenvalue < -tol::PSD {
            return Err(Error::NotPsd {
                min_eigenvalue,
                tolerance: tol::PSD,
            });
        }
        Ok(Self { matrix, eigenvalues })
    }

    /// Row-major entries.
    pub fn from_rows(n: usize, entries: &[Complex64]) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: entries.len(),
            });
        }
        Self::validate(CMatrix::from_row_slice(n, n, entries))
    }

    pub fn from_real_rows(n: usize, entries: &[f64]) -> Result<Self> {
        let c: Vec<Complex64> = entries.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        Self::from_rows(n, &c)
    }

    /// `|ψ⟩⟨ψ|` after normalizing `ψ`.
    pub fn from_pure(psi: &[Complex64]) -> Result<Self> {
        let norm = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if psi.is_empty() || norm == 0.0 || !norm.is_finite() {
            return Err(Error::Usage("state vector must be nonzero and finite".into()));
        }
        let n = psi.len();
        let m = CMatrix::from_fn(n, n, |i, j| psi[i] * psi[j].conj() / (norm * norm));
        Self::validate(m)
    }

    pub fn diagonal(probs: &[f64]) -> Result<Self> {
        let n = probs.len();
        Self::validate(CMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Complex64::new(probs[i], 0.0)
            } else {
                ZERO
            }
        }))
    }

    pub fn maximally_mixed(n: usize) -> Self {
        let m = CMatrix::identity(n, n) / Complex64::new(n as f64, 0.0);
        Self {
            matrix: m,
            eigenvalues: vec![1.0 / n as f64; n],
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    /// `ρ_{yy'}` with 1-based indices.
    pub fn element(&self, y: usize, y_prime: usize) -> Complex64 {
        self.matrix[(y - 1, y_prime - 1)]
    }

    /// Ascending spectrum as computed at validation.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Spectrum clamped into `[0, 1]`; validation bounds the excursion by the PSD tolerance.
    pub fn clamped_eigenvalues(&self) -> impl Iterator<Item = f64> + '_ {
        self.eigenvalues.iter().map(|&l| l.clamp(0.0, 1.0))
    }

    /// `Tr ρ²`.
    pub fn purity(&self) -> f64 {
        self.matrix.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Reverses the basis order (`y ↔ N + 1 − y`).
    pub fn reversed(&self) -> DensityMatrix {
        let n = self.dim();
        Self {
            matrix: CMatrix::from_fn(n, n, |i, j| self.matrix[(n - 1 - i, n - 1 - j)]),
            eigenvalues: self.eigenvalues.clone(),
        }
    }
}

/// `ρ` read through a factorization.
#[derive(Debug, Clone, Copy)]
pub struct ReshapedState<'a> {
    base: &'a DensityMatrix,
    factorization: &'a Factorization,
}

impl<'a> ReshapedState<'a> {
    pub fn new(base: &'a DensityMatrix, factorization: &'a Factorization) -> Result<Self> {
        factorization.ensure_total(base.dim())?;
        Ok(Self { base, factorization })
    }

    pub fn base(&self) -> &'a DensityMatrix {
        self.base
    }

    pub fn factorization(&self) -> &'a Factorization {
        self.factorization
    }

    /// `R_{x…, x'…}` for 1-based multi-indices.
    pub fn element(&self, x: &[usize], x_prime: &[usize]) -> Result<Complex64> {
        let y = self.factorization.compose(x)?;
        let yp = self.factorization.compose(x_prime)?;
        Ok(self.base.element(y, yp))
    }

    fn check_split(&self, split: &QuditSplit) -> Result<()> {
        if split.factorization() != self.factorization {
            return Err(Error::Usage("split was built for a different factorization".into()));
        }
        Ok(())
    }

    /// Entry `(a, b), (a', b')` in block coordinates, 0-based.
    fn block(&self, split: &QuditSplit, a: usize, b: usize, ap: usize, bp: usize) -> Complex64 {
        self.base.matrix[(split.join_zero_based(a, b), split.join_zero_based(ap, bp))]
    }
}

/// `ρ(1)_{a,a'} = Σ_b ρ_{y(a,b), y(a',b)}`: traces out the trailing block.
pub fn partial_trace_right(rs: &ReshapedState<'_>, split: &QuditSplit) -> Result<DensityMatrix> {
    rs.check_split(split)?;
    let (dl, dr) = (split.dim_left(), split.dim_right());
    let m = CMatrix::from_fn(dl, dl, |a, ap| (0..dr).map(|b| rs.block(split, a, b, ap, b)).sum());
    DensityMatrix::validate(m)
}

/// `ρ(2)_{b,b'} = Σ_a ρ_{y(a,b), y(a,b')}`: traces out the leading block.
pub fn partial_trace_left(rs: &ReshapedState<'_>, split: &QuditSplit) -> Result<DensityMatrix> {
    rs.check_split(split)?;
    let (dl, dr) = (split.dim_left(), split.dim_right());
    let m = CMatrix::from_fn(dr, dr, |b, bp| (0..dl).map(|a| rs.block(split, a, b, a, bp)).sum());
    DensityMatrix::validate(m)
}

/// `-Tr ρ ln ρ` in nats.
pub fn von_neumann_entropy(d: &DensityMatrix) -> f64 {
    // `+ 0.0` turns the `-0.0` of a pure state into `0.0`.
    -d.clamped_eigenvalues()
        .filter(|&l| l > 0.0)
        .map(|l| l * l.ln())
        .sum::<f64>()
        + 0.0
}

/// `(Tr ρ^q − 1) / (1 − q)`.
pub fn tsallis_entropy(d: &DensityMatrix, tq: crate::classical::TsallisParam) -> f64 {
    let spectrum: Vec<f64> = d.clamped_eigenvalues().collect();
    crate::classical::tsallis(&spectrum, tq.q())
}

/// `S(ρ(1)) + S(ρ(2)) − S(ρ)`.
pub fn mutual_quantum_information(rs: &ReshapedState<'_>, split: &QuditSplit) -> Result<f64> {
    let left = partial_trace_right(rs, split)?;
    let right = partial_trace_left(rs, split)?;
    Ok(von_neumann_entropy(&left) + von_neumann_entropy(&right) - von_neumann_entropy(rs.base))
}

/// `1 − Tr ρ(2)²`.
pub fn linear_entropy(rs: &ReshapedState<'_>, split: &QuditSplit) -> Result<f64> {
    Ok(1.0 - partial_trace_left(rs, split)?.purity())
}

/// Transpose over the trailing block, rows and columns in flat `y` order.
pub fn partial_transpose(rs: &ReshapedState<'_>, split: &QuditSplit) -> Result<CMatrix> {
    rs.check_split(split)?;
    let n = rs.base.dim();
    Ok(CMatrix::from_fn(n, n, |row, col| {
        let (a, b) = split.split_zero_based(row);
        let (ap, bp) = split.split_zero_based(col);
        rs.block(split, a, bp, ap, b)
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Separability {
    Separable,
    Entangled,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeparabilityVerdict {
    pub status: Separability,
    /// Smallest eigenvalue of the partial transpose.
    pub witness_value: f64,
    pub tolerance: f64,
}

/// Partial-transpose test. A negative eigenvalue proves entanglement; a
/// nonnegative spectrum proves separability only for `2⊗2`, `2⊗3`, `3⊗2`
/// and splits with a one-dimensional block.
pub fn separability_test(rs: &ReshapedState<'_>, split: &QuditSplit) -> Result<SeparabilityVerdict> {
    let pt = partial_transpose(rs, split)?;
    let witness_value = hermitian_eigenvalues(&pt)[0];
    let status = if witness_value < -tol::PSD {
        Separability::Entangled
    } else {
        match (split.dim_left(), split.dim_right()) {
            (1, _) | (_, 1) | (2, 2) | (2, 3) | (3, 2) => Separability::Separable,
            _ => Separability::Inconclusive,
        }
    };
    Ok(SeparabilityVerdict {
        status,
        witness_value,
        tolerance: tol::PSD,
    })
}

/// Pauli matrices `σ_x, σ_y, σ_z` in the `(1, 2)` block basis.
pub fn pauli() -> [[[Complex64; 2]; 2]; 3] {
    let o = ZERO;
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    [[[o, one], [one, o]], [[o, -i], [i, o]], [[one, o], [o, -one]]]
}

/// `T_{ij} = Tr ρ (σ_i ⊗ σ_j)` with `σ_i` on the leading block.
pub fn correlation_matrix(rs: &ReshapedState<'_>, split: &QuditSplit) -> Result<Matrix3<f64>> {
    rs.check_split(split)?;
    if split.dim_left() != 2 || split.dim_right() != 2 {
        return Err(Error::Usage(format!(
            "CHSH needs two qubit blocks, got {}x{}",
            split.dim_left(),
            split.dim_right()
        )));
    }
    let s = pauli();
    let mut t = Matrix3::zeros();
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = ZERO;
            for a in 0..2 {
                for b in 0..2 {
                    for ap in 0..2 {
                        for bp in 0..2 {
                            acc += rs.block(split, a, b, ap, bp) * s[i][ap][a] * s[j][bp][b];
                        }
                    }
                }
            }
            t[(i, j)] = acc.re;
        }
    }
    Ok(t)
}

/// Largest CHSH value over all measurement settings: `2 √(u₁ + u₂)` with
/// `u₁ ≥ u₂` the top eigenvalues of `TᵀT`.
pub fn chsh_max(rs: &ReshapedState<'_>, split: &QuditSplit) -> Result<f64> {
    let t = correlation_matrix(rs, split)?;
    let mut u: Vec<f64> = (t.transpose() * t).symmetric_eigenvalues().iter().copied().collect();
    u.sort_by(|a, b| b.total_cmp(a));
    Ok(2.0 * (u[0].max(0.0) + u[1].max(0.0)).sqrt())
}

/// `ρ_{y(a,b), y(a',b')} = A_{aa'} B_{bb'}`: the product state placed through
/// the index map.
pub fn compose_product(a: &DensityMatrix, b: &DensityMatrix, split: &QuditSplit) -> Result<DensityMatrix> {
    if a.dim() != split.dim_left() || b.dim() != split.dim_right() {
        return Err(Error::DimensionMismatch {
            expected: split.dim_left() * split.dim_right(),
            found: a.dim() * b.dim(),
        });
    }
    let n = split.factorization().total();
    let m = CMatrix::from_fn(n, n, |row, col| {
        let (i, k) = split.split_zero_based(row);
        let (ip, kp) = split.split_zero_based(col);
        a.matrix[(i, ip)] * b.matrix[(k, kp)]
    });
    DensityMatrix::validate(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_1_SQRT_2, LN_2};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn bell() -> DensityMatrix {
        let h = FRAC_1_SQRT_2;
        DensityMatrix::from_pure(&[c(h, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(h, 0.0)]).unwrap()
    }

    fn two_by_two() -> (Factorization, QuditSplit) {
        let f = Factorization::new(vec![2, 2]).unwrap();
        let s = QuditSplit::new(f.clone(), 1).unwrap();
        (f, s)
    }

    fn qubit_a() -> DensityMatrix {
        DensityMatrix::from_rows(2, &[c(0.7, 0.0), c(0.1, 0.2), c(0.1, -0.2), c(0.3, 0.0)]).unwrap()
    }

    fn qubit_b() -> DensityMatrix {
        DensityMatrix::from_rows(2, &[c(0.4, 0.0), c(-0.2, 0.1), c(-0.2, -0.1), c(0.6, 0.0)]).unwrap()
    }

    fn assert_matrix_eq(a: &CMatrix, b: &CMatrix, eps: f64) {
        assert_eq!(a.shape(), b.shape());
        for (x, y) in a.iter().zip(b.iter()) {
            assert!((x - y).norm() <= eps, "{a} vs {b}");
        }
    }

    #[test]
    fn validate_examples() {
        let mixed = DensityMatrix::maximally_mixed(4);
        let checked = DensityMatrix::validate(mixed.matrix().clone()).unwrap();
        for &l in checked.eigenvalues() {
            assert_abs_diff_eq!(l, 0.25, epsilon = 1e-15);
        }
        let pure = DensityMatrix::diagonal(&[1.0, 0.0, 0.0, 0.0]).unwrap();
        assert_abs_diff_eq!(pure.purity(), 1.0, epsilon = 1e-15);
        assert!(matches!(DensityMatrix::diagonal(&[1.5, -0.5]), Err(Error::NotPsd { .. })));
    }

    #[test]
    fn validate_errors_name_the_invariant() {
        let not_herm = DensityMatrix::from_rows(2, &[c(0.5, 0.0), c(0.3, 0.0), c(0.1, 0.0), c(0.5, 0.0)]);
        assert!(matches!(not_herm, Err(Error::NotHermitian { .. })));
        assert!(matches!(DensityMatrix::diagonal(&[0.5, 0.6]), Err(Error::TraceNotOne { .. })));
        let rect = CMatrix::zeros(2, 3);
        assert!(matches!(DensityMatrix::validate(rect), Err(Error::NotSquare { .. })));
        assert!(DensityMatrix::from_rows(2, &[c(1.0, 0.0)]).is_err());
    }

    #[test]
    fn partial_traces_of_generic_four_level_matrix() {
        // closed forms for dims (2,2): keeping x₁ sums y ∈ {1,3} and {2,4}
        let (f, split) = two_by_two();
        let h = 0.5;
        let psi = [c(h, 0.1), c(0.3, -0.2), c(-0.4, 0.0), c(0.2, 0.6)];
        let rho = DensityMatrix::from_pure(&psi).unwrap();
        let r = |i: usize, j: usize| rho.element(i, j);
        let rs = ReshapedState::new(&rho, &f).unwrap();
        let left = partial_trace_right(&rs, &split).unwrap();
        let expected_left = CMatrix::from_row_slice(
            2,
            2,
            &[r(1, 1) + r(3, 3), r(1, 2) + r(3, 4), r(2, 1) + r(4, 3), r(2, 2) + r(4, 4)],
        );
        assert_matrix_eq(left.matrix(), &expected_left, 0.0);
        let right = partial_trace_left(&rs, &split).unwrap();
        let expected_right = CMatrix::from_row_slice(
            2,
            2,
            &[r(1, 1) + r(2, 2), r(1, 3) + r(2, 4), r(3, 1) + r(4, 2), r(3, 3) + r(4, 4)],
        );
        assert_matrix_eq(right.matrix(), &expected_right, 0.0);
    }

    #[test]
    fn partial_traces_of_products_and_bell() {
        let (f, split) = two_by_two();
        let prod = compose_product(&qubit_a(), &qubit_b(), &split).unwrap();
        let rs = ReshapedState::new(&prod, &f).unwrap();
        assert_matrix_eq(partial_trace_right(&rs, &split).unwrap().matrix(), qubit_a().matrix(), 1e-15);
        assert_matrix_eq(partial_trace_left(&rs, &split).unwrap().matrix(), qubit_b().matrix(), 1e-15);

        let b = bell();
        let rs = ReshapedState::new(&b, &f).unwrap();
        let half = DensityMatrix::maximally_mixed(2);
        assert_matrix_eq(partial_trace_right(&rs, &split).unwrap().matrix(), half.matrix(), 1e-15);
        assert_matrix_eq(partial_trace_left(&rs, &split).unwrap().matrix(), half.matrix(), 1e-15);
    }

    #[test]
    fn entropy_examples() {
        assert_abs_diff_eq!(von_neumann_entropy(&bell()), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(von_neumann_entropy(&DensityMatrix::maximally_mixed(4)), 4f64.ln(), epsilon = 1e-15);
        let d = DensityMatrix::diagonal(&[0.5, 0.5, 0.0, 0.0]).unwrap();
        assert_abs_diff_eq!(von_neumann_entropy(&d), LN_2, epsilon = 1e-15);
    }

    #[test]
    fn mutual_information_examples() {
        let (f, split) = two_by_two();
        let prod = compose_product(&qubit_a(), &qubit_b(), &split).unwrap();
        let i = mutual_quantum_information(&ReshapedState::new(&prod, &f).unwrap(), &split).unwrap();
        assert_abs_diff_eq!(i, 0.0, epsilon = 1e-10);

        let b = bell();
        let i = mutual_quantum_information(&ReshapedState::new(&b, &f).unwrap(), &split).unwrap();
        assert_abs_diff_eq!(i, 2.0 * LN_2, epsilon = 1e-10);

        let classical = DensityMatrix::diagonal(&[0.5, 0.0, 0.0, 0.5]).unwrap();
        let i = mutual_quantum_information(&ReshapedState::new(&classical, &f).unwrap(), &split).unwrap();
        assert_abs_diff_eq!(i, LN_2, epsilon = 1e-12);
    }

    #[test]
    fn linear_entropy_examples() {
        let (f, split) = two_by_two();
        let pure_b = DensityMatrix::diagonal(&[0.0, 1.0]).unwrap();
        let prod = compose_product(&qubit_a(), &pure_b, &split).unwrap();
        assert_abs_diff_eq!(linear_entropy(&ReshapedState::new(&prod, &f).unwrap(), &split).unwrap(), 0.0, epsilon = 1e-15);
        let b = bell();
        assert_abs_diff_eq!(linear_entropy(&ReshapedState::new(&b, &f).unwrap(), &split).unwrap(), 0.5, epsilon = 1e-15);
        let mixed = DensityMatrix::maximally_mixed(4);
        assert_abs_diff_eq!(linear_entropy(&ReshapedState::new(&mixed, &f).unwrap(), &split).unwrap(), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn separability_examples() {
        let (f, split) = two_by_two();
        let prod = compose_product(&qubit_a(), &qubit_b(), &split).unwrap();
        let v = separability_test(&ReshapedState::new(&prod, &f).unwrap(), &split).unwrap();
        assert_eq!(v.status, Separability::Separable);

        let b = bell();
        let v = separability_test(&ReshapedState::new(&b, &f).unwrap(), &split).unwrap();
        assert_eq!(v.status, Separability::Entangled);
        assert_abs_diff_eq!(v.witness_value, -0.5, epsilon = 1e-12);

        let classical = DensityMatrix::diagonal(&[0.5, 0.0, 0.0, 0.5]).unwrap();
        let v = separability_test(&ReshapedState::new(&classical, &f).unwrap(), &split).unwrap();
        assert_eq!(v.status, Separability::Separable);
    }

    #[test]
    fn separability_is_inconclusive_beyond_six_dimensions() {
        let f = Factorization::new(vec![3, 3]).unwrap();
        let split = QuditSplit::new(f.clone(), 1).unwrap();
        let mixed = DensityMatrix::maximally_mixed(9);
        let v = separability_test(&ReshapedState::new(&mixed, &f).unwrap(), &split).unwrap();
        assert_eq!(v.status, Separability::Inconclusive);
    }

    #[test]
    fn chsh_examples() {
        let (f, split) = two_by_two();
        let b = bell();
        let v = chsh_max(&ReshapedState::new(&b, &f).unwrap(), &split).unwrap();
        assert_abs_diff_eq!(v, 2.0 * 2f64.sqrt(), epsilon = 1e-12);

        let prod = compose_product(&qubit_a(), &qubit_b(), &split).unwrap();
        assert!(chsh_max(&ReshapedState::new(&prod, &f).unwrap(), &split).unwrap() <= 2.0);

        let mixed = DensityMatrix::maximally_mixed(4);
        assert_abs_diff_eq!(chsh_max(&ReshapedState::new(&mixed, &f).unwrap(), &split).unwrap(), 0.0, epsilon = 1e-15);

        let g = Factorization::new(vec![2, 3]).unwrap();
        let s = QuditSplit::new(g.clone(), 1).unwrap();
        let m6 = DensityMatrix::maximally_mixed(6);
        assert!(chsh_max(&ReshapedState::new(&m6, &g).unwrap(), &s).is_err());
    }

    #[test]
    fn split_from_other_factorization_is_rejected() {
        let (f, _) = two_by_two();
        let other = QuditSplit::new(Factorization::new(vec![4, 1]).unwrap(), 1).unwrap();
        let b = bell();
        let rs = ReshapedState::new(&b, &f).unwrap();
        assert!(partial_trace_right(&rs, &other).is_err());
    }

    #[test]
    fn reversal_keeps_spectrum() {
        let d = DensityMatrix::diagonal(&[0.1, 0.2, 0.7]).unwrap();
        let r = d.reversed();
        assert_eq!(r.element(1, 1).re, 0.7);
        assert_eq!(r.eigenvalues(), d.eigenvalues());
    }
}
