//! Hidden correlations in a single random variable with six outcomes, read as
//! a pair (3 outcomes) x (2 outcomes).
//!
//! `cargo run --example classical_correlations`

use hidden_correlations::classical::{
    shannon_entropy, subadditivity_report, tsallis_entropy, JointView, ProbabilityVector,
    TsallisParam,
};
use hidden_correlations::partition::{Factorization, QuditSplit};

fn main() -> hidden_correlations::Result<()> {
    let p = ProbabilityVector::new(vec![0.30, 0.05, 0.05, 0.10, 0.15, 0.35])?;
    let f = Factorization::new(vec![3, 2])?;
    let split = QuditSplit::new(f.clone(), 1)?;
    let view = JointView::new(&p, &f)?;

    let left = view.marginal(&[1])?;
    let right = view.marginal(&[2])?;
    println!("P           = {:?}", p.as_slice());
    println!("P(x1)       = {:?}", left.as_slice());
    println!("P(x2)       = {:?}", right.as_slice());
    println!("P(x2|x1=1)  = {:?}", view.conditional(&[1], &[1], &[2])?.as_slice());

    let r = subadditivity_report(&view, &split)?;
    println!("H(x1) + H(x2) - H(x1,x2) = {:.6} nats (holds: {})", r.mutual_info, r.holds);
    println!("H(P) = {:.6}", shannon_entropy(&p));

    for q in [0.5, 2.0, 3.0] {
        let tq = TsallisParam::new(q)?;
        let gap = tsallis_entropy(&left, tq) + tsallis_entropy(&right, tq) - tsallis_entropy(&p, tq);
        println!("q = {q}: S_q(x1) + S_q(x2) - S_q(x1,x2) = {gap:.6}");
    }
    Ok(())
}
