//! Genus-one derivations σ_w, their ε-expansions and the pieces z_w.
//!
//! cargo run --example genus_one -- 3 12

use zetagen::genusone::{expansion, sigma, z_w};

fn main() {
    let mut args = std::env::args().skip(1).filter_map(|s| s.parse::<usize>().ok());
    let w = args.next().unwrap_or(3);
    let degree = args.next().unwrap_or(2 * w + 4);
    let s = sigma(w, degree).expect("sigma");
    println!("σ{} through degree {}: {}", w, degree, s);
    let ex = expansion(w, degree).expect("expansion");
    for (n, e) in &ex.parts {
        println!("  degree {}: {}", n, e);
    }
    let z = z_w(w).expect("z_w");
    println!("z{}(a) = {}", w, z.a());
    println!("z{}(b) = {}", w, z.b());
}
