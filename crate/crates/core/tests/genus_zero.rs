use zetagen::freealg::{is_primitive, parse_series, Alphabet, Series};
use zetagen::genuszero::expr::mzv_expr;
use zetagen::genuszero::{
    canonical_decomposition, canonical_gw, diamond_chain, gen_coords, ihara_bracket, phi_coefficient,
    phi_coefficient_of, Gen,
};
use zetagen::{reference, Q};

fn s(t: &str) -> Series {
    parse_series(t, Alphabet::XY).unwrap()
}

fn g(w: usize) -> Series {
    canonical_gw(w).unwrap().poly.clone()
}

fn q(t: &str) -> Q {
    t.parse().unwrap()
}

#[test]
fn gw_match_bracket_displays() {
    for &(w, text) in reference::GW_POLY {
        assert_eq!(g(w), s(text), "g{}", w);
    }
}

#[test]
fn z_of_gw_up_to_nine() {
    for w in 2..=9 {
        let (_, z) = mzv_expr(reference::z_gw(w).unwrap()).unwrap();
        assert_eq!(canonical_gw(w).unwrap().z_coords, z, "Z(g{})", w);
    }
}

#[test]
#[ignore = "slow: weights 10 and 11"]
fn z_of_gw_ten_eleven() {
    for w in 10..=11 {
        let (_, z) = mzv_expr(reference::z_gw(w).unwrap()).unwrap();
        assert_eq!(canonical_gw(w).unwrap().z_coords, z, "Z(g{})", w);
    }
}

#[test]
fn associator_coefficient_is_gw() {
    for w in 2..=9 {
        assert_eq!(phi_coefficient(w).unwrap(), g(w), "w={}", w);
    }
}

#[test]
fn odd_gw_are_symmetric_lie() {
    for w in [3, 5, 7, 9] {
        let p = g(w);
        assert!(is_primitive(&p), "g{} not Lie", w);
        assert_eq!(p.switch(), p, "g{} not symmetric", w);
    }
}

#[test]
fn z35_relation() {
    let z35 = gen_coords(&Gen::Irr(vec![3, 5])).unwrap();
    let (_, rhs) = mzv_expr(reference::Z35_RELATION).unwrap();
    assert_eq!(*z35, rhs);
}

#[test]
fn z37_relation() {
    let z37 = gen_coords(&Gen::Irr(vec![3, 7])).unwrap();
    let (_, rhs) = mzv_expr(reference::Z37_RELATION)
    .unwrap();
    assert_eq!(*z37, rhs);
}

fn coefficient(w: usize, label: &str) -> Series {
    let dec = canonical_decomposition(w).unwrap();
    let m = dec.monos.iter().find(|m| m.label() == label).unwrap_or_else(|| panic!("no {}", label));
    phi_coefficient_of(w, m).unwrap()
}

#[test]
fn associator_weight_eight() {
    let b35 = ihara_bracket(&g(3), &g(5));
    assert_eq!(coefficient(8, "Z35"), b35.scale(&q("1/24453")));
    let mut want = diamond_chain(&[g(3), g(5)]).unwrap().scale(&q("47/114"));
    want += &diamond_chain(&[g(5), g(3)]).unwrap().scale(&q("67/114"));
    assert_eq!(coefficient(8, "z3 z5"), want);
    let mut want = diamond_chain(&[g(3), g(3), g(2)]).unwrap().scale(&q("1/2"));
    want += &b35.scale(&q("17/247"));
    assert_eq!(coefficient(8, "z2 z3^2"), want);
}

#[test]
fn associator_low_products() {
    assert_eq!(coefficient(5, "z2 z3"), diamond_chain(&[g(3), g(2)]).unwrap());
    assert_eq!(coefficient(6, "z3^2"), diamond_chain(&[g(3), g(3)]).unwrap().scale(&q("1/2")));
    assert_eq!(coefficient(7, "z4 z3"), diamond_chain(&[g(3), g(4)]).unwrap());
}
