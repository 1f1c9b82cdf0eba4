//! Weyl group action on weights and the target tuple of a minor.

use bruhat_minors::repb::{u_target, u_target_by_operators};
use bruhat_minors::rootdata::{u_leq_weight, weyl_apply, CartanB, MinorSpec, Weight, Word};

fn main() {
    let r = 3;
    let cartan = CartanB::new(r).unwrap();
    println!("Cartan matrix of B{r}:");
    for row in cartan.matrix() {
        println!("  {row:?}");
    }

    let word = Word::new(r, 8).unwrap();
    println!("word: {:?}", word.letters());
    for k in 1..=word.n as i64 {
        let spec = MinorSpec::new(word, k).unwrap();
        let w = u_leq_weight(&spec);
        let target: Vec<String> = u_target(&spec).iter().map(|j| j.to_string()).collect();
        println!("k={k}  i_k={}  u_k(omega)={:?}  target=({})", spec.i_n(), w.coords, target.join(","));
        if !spec.is_spin() {
            // the same target, found by pushing the highest vector through the reflections
            assert_eq!(u_target_by_operators(&spec).len(), 1);
        }
    }

    let lambda = Weight::fundamental(r, 2);
    println!("s1 s2 s1 (omega_2) = {:?}", weyl_apply(&[1, 2, 1], &lambda).coords);
}
