//! The moulds pal and invpal, and the cross-check of T_w against
//! Ad_ari(invpal)(G_w).
//!
//! cargo run --example moulds -- 3 4

use zetagen::moulds::{cross_check_tw, invpal, pal};

fn main() {
    let mut args = std::env::args().skip(1).filter_map(|s| s.parse::<usize>().ok());
    let w = args.next().unwrap_or(3);
    let depth = args.next().unwrap_or(4);
    let (p, i) = (pal(depth), invpal(depth));
    for r in 1..=depth {
        println!("depth {}\n  pal    {}\n  invpal {}", r, p.part(r), i.part(r));
    }
    let rep = cross_check_tw(w, depth).expect("cross-check");
    println!("T{} to depth {}: {}", w, depth, if rep.passed() { "ok" } else { "FAILED" });
    for r in 1..=depth {
        println!("  depth {}: {}", r, rep.t.part(r));
    }
}
