//! Prints the exchange matrix of a word and its symmetrizer.

use bruhat_minors::cluster::{build_bmatrix, find_symmetrizer};
use bruhat_minors::rootdata::Word;

fn main() {
    for (r, n) in [(2, 4), (3, 9), (4, 16)] {
        let word = Word::new(r, n).unwrap();
        let b = build_bmatrix(&word);
        println!("rank {r}, length {n}, frozen {:?}", b.frozen());
        print!("{b}");
        println!("symmetrizer: {:?}\n", find_symmetrizer(&b.principal_part()));
    }
}
