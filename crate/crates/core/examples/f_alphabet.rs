//! The map ρ into the f-alphabet and its compatibility with the coaction.
//!
//! cargo run --example f_alphabet

use zetagen::falphabet::{f_dimension, rho_word};
use zetagen::freealg::Word;

fn main() {
    for ks in [vec![3], vec![5], vec![3, 5], vec![5, 3], vec![3, 3, 5], vec![2, 3]] {
        let label: Vec<String> = ks.iter().map(|k| k.to_string()).collect();
        let f = rho_word(Word::of_mzv(&ks)).expect("rho");
        println!("rho(ζ({})) = {}", label.join(","), f);
    }
    for w in 2..=12 {
        println!("dim of weight {} in the f-alphabet: {}", w, f_dimension(w));
    }
}
