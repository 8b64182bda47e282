//! A single qudit of dimension 4 treated as two artificial qubits: partial
//! traces, entropies, entanglement and CHSH for a family of Werner-like states.
//!
//! `cargo run --example quantum_state`

use num_complex::Complex64;

use hidden_correlations::partition::{Factorization, QuditSplit};
use hidden_correlations::quantum::{
    chsh_max, linear_entropy, mutual_quantum_information, partial_trace_right, separability_test,
    CMatrix, DensityMatrix, ReshapedState,
};

fn werner(v: f64) -> hidden_correlations::Result<DensityMatrix> {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let psi = DensityMatrix::from_pure(&[h.into(), 0.0.into(), 0.0.into(), h.into()])?;
    let noise = CMatrix::identity(4, 4) * Complex64::from(0.25);
    DensityMatrix::validate(psi.matrix() * Complex64::from(v) + noise * Complex64::from(1.0 - v))
}

fn main() -> hidden_correlations::Result<()> {
    let f = Factorization::new(vec![2, 2])?;
    let split = QuditSplit::new(f.clone(), 1)?;
    println!("{:>5} {:>10} {:>10} {:>14} {:>8}", "v", "I_q", "S_lin", "separability", "CHSH");
    for k in 0..=10 {
        let v = k as f64 / 10.0;
        let d = werner(v)?;
        let rs = ReshapedState::new(&d, &f)?;
        let sep = separability_test(&rs, &split)?;
        println!(
            "{v:>5.1} {:>10.6} {:>10.6} {:>14} {:>8.5}",
            mutual_quantum_information(&rs, &split)?,
            linear_entropy(&rs, &split)?,
            format!("{:?}", sep.status),
            chsh_max(&rs, &split)?
        );
    }
    let d = werner(1.0)?;
    let rho1 = partial_trace_right(&ReshapedState::new(&d, &f)?, &split)?;
    println!("reduced state of the first artificial qubit at v = 1:\n{}", rho1.matrix());
    Ok(())
}
