//! Lists the labelled paths of a minor and writes the path graph as DOT.
//!
//! Usage: cargo run --example path_graph_dot -- [rank] [length] [k] > paths.dot

use bruhat_minors::pathsum::{enumerate_vector_paths, export_dot};
use bruhat_minors::rootdata::make_minor_spec;

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (r, n, k) = match args.as_slice() {
        [r, n, k] => (*r as u32, *n as usize, *k),
        _ => (3, 9, 4),
    };
    let spec = make_minor_spec(r, n, k).expect("valid minor");
    let paths = enumerate_vector_paths(&spec).expect("vector representation minor");
    for (i, p) in paths.iter().enumerate() {
        let steps: Vec<String> = p
            .tuples
            .iter()
            .map(|t| t.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        eprintln!("path {}: ({})  label {}", i + 1, steps.join(") -> ("), p.label);
    }
    print!("{}", export_dot(&paths));
}
