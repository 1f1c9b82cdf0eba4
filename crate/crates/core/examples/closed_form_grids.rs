//! Enumerates the integer grids of the closed formula and shows how each
//! one turns into a path with the same label.

use bruhat_minors::closedform::{enumerate_k_systems, system_to_path, thm1_term, CVariant};
use bruhat_minors::rootdata::make_minor_spec;

fn main() {
    let spec = make_minor_spec(4, 14, 6).unwrap();
    println!("{spec}  (d = {})", spec.d());
    let systems = enumerate_k_systems(&spec).unwrap();
    for sys in &systems {
        let rows: Vec<String> = sys
            .grid
            .iter()
            .map(|row| row.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        let term = thm1_term(&spec, sys, CVariant::Theorem);
        let path = system_to_path(&spec, sys);
        let bottom: Vec<String> = path.last().unwrap().iter().map(|j| j.to_string()).collect();
        println!("[{}]  -> ends at ({})  term {term}", rows.join(" | "), bottom.join(","));
    }
    println!("{} grids", systems.len());
}
