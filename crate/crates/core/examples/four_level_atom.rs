//! The four-level atom / spin-3/2 worked example: the state
//! (|3/2> + |-3/2>)/sqrt(2) seen as two artificial qubits is a Bell state.
//!
//! `cargo run --example four_level_atom`

use hidden_correlations::report::demo_four_level;

fn main() -> hidden_correlations::Result<()> {
    let report = demo_four_level()?;
    let r = &report.results;
    println!("y(x1, x2): {}", r["compose"]);
    println!("x1(y) = {}, x2(y) = {}", r["x1_of_y"], r["x2_of_y"]);
    println!("S(rho_1) = {}, S(rho_2) = {}, S(rho) = {}", r["entropy_1"], r["entropy_2"], r["entropy"]);
    println!("I = {} (2 ln 2 = {})", r["mutual_information"], 2.0 * std::f64::consts::LN_2);
    println!("separability: {}", r["separability"]["status"]);
    println!("CHSH max = {} -> Bell inequality {}", r["chsh_max"], r["bell_inequality"]);
    println!("all checks hold: {}", report.all_hold());
    Ok(())
}
