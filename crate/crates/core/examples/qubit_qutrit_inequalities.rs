//! Entropic inequalities for one qubit written through measurable
//! probabilities, and for one qutrit in Shannon and Tsallis form.
//!
//! `cargo run --example qubit_qutrit_inequalities`

use hidden_correlations::classical::TsallisParam;
use hidden_correlations::probrep::{
    probabilities_from_qubit, qubit_from_probabilities, qubit_inequality_xy, qubit_inequality_zx,
    qutrit_inequality_shannon, qutrit_inequality_tsallis, QubitProbabilities,
};
use hidden_correlations::quantum::DensityMatrix;
use hidden_correlations::random;

fn main() -> hidden_correlations::Result<()> {
    let qp = QubitProbabilities { p1: 0.7, p2: 0.4, p3: 0.8 };
    let d = qubit_from_probabilities(qp)?;
    println!("qubit from (p1, p2, p3) = (0.7, 0.4, 0.8):\n{}", d.matrix());
    println!("  round trip: {:?}", probabilities_from_qubit(&d)?);
    println!("  zx inequality: {:.6}", qubit_inequality_zx(&d)?.value);
    println!("  xy inequality: {:.6}", qubit_inequality_xy(&d)?.value);

    let mixed = DensityMatrix::maximally_mixed(3);
    println!("qutrit I/3, Shannon form: {:.9}", qutrit_inequality_shannon(&mixed)?.value);
    for q in [1.5, 2.0, 3.0] {
        let v = qutrit_inequality_tsallis(&mixed, TsallisParam::new(q)?)?.value;
        println!("qutrit I/3, Tsallis q = {q}: {v:.9}");
    }

    let mut rng = random::seeded(1);
    let worst = (0..1000)
        .map(|_| qutrit_inequality_shannon(&random::ginibre_state(&mut rng, 3)).map(|o| o.value))
        .collect::<hidden_correlations::Result<Vec<_>>>()?
        .into_iter()
        .fold(f64::INFINITY, f64::min);
    println!("smallest Shannon-form value over 1000 random qutrits: {worst:.3e}");
    Ok(())
}
