//! # hidden-correlations
//!
//! Correlations inside systems that have no subsystems. A flat index
//! `y ∈ 1..=N` is relabeled as a multi-index `(x₁, …, x_M)` over a
//! factorization `N = X₁ ⋯ X_M`; a single distribution `P(y)` then reads as a
//! joint distribution, and a single-qudit density matrix `ρ_{yy'}` reads as the
//! state of `M` artificial qudits. Every multipartite diagnostic applies.
//!
//! | Module | Covers |
//! |--------|--------|
//! | [`partition`] | index bijection, bipartitions |
//! | [`classical`] | marginals, conditionals, Shannon/Tsallis entropies, subadditivity |
//! | [`quantum`] | density matrices, partial traces, mutual information, PPT, CHSH |
//! | [`probrep`] | qubit/qutrit elements from spin-projection probabilities and their inequalities |
//! | [`tomography`] | SU(2) rotations for spin `j`, spin tomograms, tomographic entropies |
//! | [`report`] | JSON requests/reports behind the `hidcor` binary |
//!
//! ```
//! use hidden_correlations::partition::{Factorization, QuditSplit};
//! use hidden_correlations::quantum::{mutual_quantum_information, DensityMatrix, ReshapedState};
//! use num_complex::Complex64;
//!
//! // spin-3/2 state (|3/2> + |-3/2>)/sqrt(2) read as two qubits
//! let h = std::f64::consts::FRAC_1_SQRT_2;
//! let psi = [h, 0.0, 0.0, h].map(|v| Complex64::new(v, 0.0));
//! let rho = DensityMatrix::from_pure(&psi).unwrap();
//! let f = Factorization::new(vec![2, 2]).unwrap();
//! let split = QuditSplit::new(f.clone(), 1).unwrap();
//! let info = mutual_quantum_information(&ReshapedState::new(&rho, &f).unwrap(), &split).unwrap();
//! assert!((info - 2.0 * 2f64.ln()).abs() < 1e-10);
//! ```

#![forbid(unsafe_code)]

pub mod classical;
pub mod error;
pub mod io;
pub mod partition;
pub mod probrep;
pub mod quantum;
pub mod random;
pub mod report;
pub mod tomography;

pub use error::{Error, Result};

/// The global tolerance ladder.
pub mod tol {
    /// `|Σ P − 1|` accepted for external probability vectors.
    pub const NORMALIZATION: f64 = 1e-12;
    /// Negative entries above `-CLAMP` are float noise and become 0.
    pub const CLAMP: f64 = 1e-12;
    /// Slack for every classical or matrix-element inequality.
    pub const INEQUALITY: f64 = 1e-10;
    pub const HERMITIAN: f64 = 1e-10;
    pub const TRACE: f64 = 1e-10;
    /// Eigenvalues in `[-PSD, 0)` are accepted and clamped for entropies.
    pub const PSD: f64 = 1e-10;
    /// Slack for quantum subadditivity `I_q ≥ 0`.
    pub const QUANTUM_INFO: f64 = 1e-9;
    /// `|Σ_m w(m|n) − 1|` accepted for tomograms.
    pub const TOMOGRAM: f64 = 1e-10;
}
