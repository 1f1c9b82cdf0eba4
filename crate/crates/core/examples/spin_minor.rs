//! Minors at positions carrying the short simple root use the spin
//! representation. Shows the sign-vector paths and the closed formula.

use bruhat_minors::closedform::{enumerate_spin_systems, thm2_term};
use bruhat_minors::pathsum::{enumerate_spin_paths, spin_path_sum};
use bruhat_minors::rootdata::make_minor_spec;

fn main() {
    let spec = make_minor_spec(3, 9, 6).unwrap();
    assert!(spec.is_spin());
    println!("{spec}");
    for p in enumerate_spin_paths(&spec).unwrap() {
        let steps: Vec<String> = p.tuples.iter().map(|t| format!("{t:?}")).collect();
        println!("  {}  label {}", steps.join(" -> "), p.label);
    }
    let systems = enumerate_spin_systems(&spec).unwrap();
    let total = systems.iter().fold(bruhat_minors::laurent::LaurentPoly::zero(), |acc, s| acc + thm2_term(&spec, s));
    println!("closed formula: {} systems", systems.len());
    println!("agrees with path sum: {}", total == spin_path_sum(&spec).unwrap());
}
