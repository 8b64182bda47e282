//! Spin tomograms of a random spin-3/2 state and the mutual information of the
//! two artificial qubits hidden in each tomogram.
//!
//! `cargo run --example spin_tomography`

use hidden_correlations::classical::TsallisParam;
use hidden_correlations::partition::Factorization;
use hidden_correlations::random;
use hidden_correlations::report::default_grid;
use hidden_correlations::tomography::{direction_sweep, Spin, SpinRep};

fn main() -> hidden_correlations::Result<()> {
    let rep = SpinRep::new(Spin::from_twice(3)?);
    let f = Factorization::new(vec![2, 2])?;
    let mut rng = random::seeded(42);
    let d = random::haar_pure_state(&mut rng, rep.dim());

    let grid = default_grid(5, 4);
    let records = direction_sweep(&d, &rep, &f, &grid, &[TsallisParam::new(2.0)?])?;
    println!("spin {} state, {} directions", rep.spin(), grid.len());
    println!("{:>7} {:>7}  {:<44} {:>9} {:>9}", "theta", "phi", "w(m|n), m = -3/2 .. 3/2", "I(n)", "S2 gap");
    for r in &records {
        let w: Vec<String> = r.tomogram.iter().map(|x| format!("{x:.4}")).collect();
        let t = &r.tsallis[0];
        println!(
            "{:>7.4} {:>7.4}  {:<44} {:>9.6} {:>9.6}",
            r.direction.theta,
            r.direction.phi,
            w.join(" "),
            r.mutual_information,
            t.s_q1 + t.s_q2 - t.s_q
        );
    }
    Ok(())
}
