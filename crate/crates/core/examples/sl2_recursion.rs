//! The sl2 recursion: rebuild σ_w from its highest-weight pieces, check that
//! it commutes with N and print the brackets [z_w, ε_k] by depth.
//!
//! cargo run --example sl2_recursion -- 3 4

use zetagen::sl2recursion::{hw_from_sigma, n_commutator_defect, recurse, zw_bracket_depth2};

fn main() {
    let mut args = std::env::args().skip(1).filter_map(|s| s.parse::<usize>().ok());
    let w = args.next().unwrap_or(3);
    let k = args.next().unwrap_or(4);
    let max = 2 * w + k;
    let r = recurse(w, max, &hw_from_sigma(w).expect("highest weight")).expect("recursion");
    let d = r.sigma_derivation(max).expect("derivation");
    let defect = n_commutator_defect(&d, max);
    println!("[N, σ{}] through degree {}: {}", w, max, if defect.is_empty() { "0".into() } else { format!("nonzero in {:?}", defect) });
    for ((kk, m), e) in &r.zbr {
        if *kk == k {
            println!("[z{}, ε{}] depth {}: {}", w, k, m, e);
        }
    }
    println!("closed form in depth 2: {}", zw_bracket_depth2(w, k));
}
