//! Dimensions of the formal MZV spaces and the chosen basis words.
//!
//! cargo run --example mzv_basis -- 10

use std::time::Instant;

use zetagen::freealg::Alphabet;
use zetagen::mzvspace::{reducible_span, weight_basis};

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(9);
    for w in 2..=max {
        let t = Instant::now();
        let b = weight_basis(w).expect("weight basis");
        let red = reducible_span(w).expect("reducibles").len();
        let words: Vec<String> = b.basis.iter().map(|u| u.spell(Alphabet::XY)).collect();
        println!("w={:2} dim={:2} reducible={:2} ({:.2?})  {}", w, b.dim(), red, t.elapsed(), words.join(" "));
    }
}
