//! Computes one generalized minor by the matrix action, by the path sum,
//! and by the closed formula, and checks they agree.
//!
//! Usage: cargo run --example minor_three_ways -- [rank] [length] [k]

use bruhat_minors::closedform::closed_minor;
use bruhat_minors::pathsum::{spin_path_sum, vector_path_sum};
use bruhat_minors::repb::{minor_g, minor_l};
use bruhat_minors::rootdata::make_minor_spec;

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (r, n, k) = match args.as_slice() {
        [r, n, k] => (*r as u32, *n as usize, *k),
        _ => (3, 8, 5),
    };
    let spec = make_minor_spec(r, n, k).expect("valid minor");
    let rep = minor_l(&spec);
    let paths = if spec.is_spin() { spin_path_sum(&spec) } else { vector_path_sum(&spec) }.unwrap();
    let closed = closed_minor(&spec).unwrap();
    println!("{spec}");
    println!("matrix action: {rep}");
    println!("path sum:      {} terms", paths.len());
    println!("closed form:   {} terms", closed.len());
    println!("agree: {}", rep == paths && rep == closed);
    println!("with torus factor: {}", minor_g(&spec));
}
