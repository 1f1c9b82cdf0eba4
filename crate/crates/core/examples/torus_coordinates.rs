//! Random points of the torus, the two coordinate changes between
//! factorization parameters, and the operator identity relating them.

use bruhat_minors::factorize::{operator_identity_holds, phi, psi, TorusPoint};
use bruhat_minors::rootdata::Word;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let word = Word::new(2, 4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..3 {
        let p = TorusPoint::random(&word, &mut rng);
        let q = phi(&p, &word).unwrap();
        println!("point {}", p.to_json());
        println!("  phi {}", q.to_json());
        println!("  psi(phi) returns the point: {}", psi(&q, &word).unwrap() == p);
        println!("  operator identity: {}", operator_identity_holds(&p, &word).unwrap());
    }
}
