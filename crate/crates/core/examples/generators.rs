//! Canonical genus-zero generators g_w and their images Z(g_w).
//!
//! cargo run --example generators -- 7

use zetagen::genuszero::{canonical_decomposition, canonical_gw, phi_coefficient};

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    for w in 2..=max {
        let g = canonical_gw(w).expect("generator");
        let z = canonical_decomposition(w).expect("decomposition").describe(&g.z_coords);
        let zs: Vec<String> = z.iter().map(|(l, q)| format!("{} {}", q, l)).collect();
        println!("g{} = {}", w, g.poly);
        println!("  Z(g{}) = {}", w, zs.join(" + ").replace("+ -", "- "));
        // second route through the coefficient of the Drinfeld associator
        let same = phi_coefficient(w).expect("phi") == g.poly;
        println!("  agrees with the associator coefficient: {}", same);
    }
}
