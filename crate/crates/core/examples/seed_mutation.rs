//! Starts from the seed of minors and mutates in a sequence of directions.
//! Every new variable is an exact quotient, so it stays a Laurent polynomial.

use bruhat_minors::cluster::{exchange_step, find_symmetrizer, initial_seed};
use bruhat_minors::rootdata::Word;

fn main() {
    let word = Word::new(3, 8).unwrap();
    let mut seed = initial_seed(&word);
    for k in [1, 2, 4, 1, 3] {
        seed = exchange_step(&seed, k).expect("exchange relation divides");
        let x = &seed.cluster[&k];
        println!("mutate at {k}: new variable has {} terms", x.len());
        assert!(find_symmetrizer(&seed.exchange.principal_part()).is_some());
    }
    print!("{}", seed.exchange);
}
