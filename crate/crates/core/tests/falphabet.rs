use std::collections::BTreeMap;

use zetagen::falphabet::{coaction, coaction_word, f_dimension, intertwines, polygons, rho, rho_matrix, FElem, Rho, Tensor};
use zetagen::genuszero::expr::mzv_expr;
use zetagen::genuszero::{gen_coords, Gen};
use zetagen::linalg;
use zetagen::mzvspace::{multiply, weight_basis};
use zetagen::{reference, Word, Q};

fn mzv(s: &str) -> (usize, Vec<Q>) {
    mzv_expr(s).unwrap()
}

fn f(s: &str) -> FElem {
    s.parse().unwrap()
}

/// Σ c · a ⊗ b from expression pairs; right factors projected mod ζ2.
fn tensor(terms: &[(&str, &str, Q)]) -> Tensor {
    let mut t = Tensor::default();
    for (a, b, c) in terms {
        let (wa, va) = if *a == "1" { (0, vec![Q::one()]) } else { mzv(a) };
        let (wb, vb) = if *b == "1" { (0, vec![Q::one()]) } else { mzv(b) };
        t.add_basis_outer(wa, &va, wb, &vb, c).unwrap();
    }
    t.normalized()
}

#[test]
fn coaction_xxyxy() {
    let w = Word::parse("xxyxy").unwrap().0;
    let got = coaction_word(w).unwrap();
    let want = tensor(&[("1", "z(2,3)", Q::one()), ("z(2,3)", "1", Q::one()), ("z2", "z3", Q::int(3))]);
    assert_eq!(got, want);
    // the factor 3: ζ(xy) ⊗ ζ(xxy) once directly, and −ζ(xy) ⊗ ζ(xyx) with ζ(xyx) = −2ζ(xxy)
    let xy = Word::parse("xy").unwrap().0;
    let quads: Vec<_> = polygons(w).into_iter().filter(|p| p.left == xy).collect();
    assert_eq!(quads.len(), 2);
    let mut three = vec![Q::zero()];
    for p in &quads {
        let r = weight_basis(3).unwrap().reduce_word(p.right[0]);
        three[0] += &(&r[0] * &Q::int(p.sign));
    }
    assert_eq!(three, mzv("3 z3").1);
}

#[test]
fn coaction_weight_eight() {
    let (_, z35) = mzv("z(3,5)");
    let want = tensor(&[("1", "z(3,5)", Q::one()), ("z(3,5)", "1", Q::one()), ("z3", "z5", Q::int(-5))]);
    assert_eq!(coaction(8, &z35).unwrap(), want);
    let (_, p) = mzv("z3 z5");
    let want = tensor(&[("1", "z3 z5", Q::one()), ("z3 z5", "1", Q::one()), ("z3", "z5", Q::one()), ("z5", "z3", Q::one())]);
    assert_eq!(coaction(8, &p).unwrap(), want);
    let (_, z26) = mzv("z(2,6)");
    let want = tensor(&[("1", "z(2,6)", Q::one()), ("z(2,6)", "1", Q::one()), ("z3", "z5", Q::int(4)), ("z5", "z3", Q::int(2))]);
    assert_eq!(coaction(8, &z26).unwrap(), want);
    assert_eq!(z26, mzv("-2/5 z(3,5) + 2 z3 z5 - 42/125 z2^4").1);
}

#[test]
fn coaction_z35() {
    let z = gen_coords(&Gen::Irr(vec![3, 5])).unwrap();
    let want = tensor(&[
        ("1", "Z35", Q::one()),
        ("Z35", "1", Q::one()),
        ("z3", "z5", "-20163/2".parse().unwrap()),
        ("z5", "z3", "28743/2".parse().unwrap()),
        ("z2 z3", "z3", Q::int(-3366)),
        ("z2", "z3^2", Q::int(-1683)),
    ]);
    assert_eq!(coaction(8, &z).unwrap(), want);
}

#[test]
fn rho_golden_values() {
    for &(x, want) in reference::RHO_VALUES {
        let (w, v) = mzv(x);
        assert_eq!(rho(w, &v).unwrap(), f(want), "rho({})", x);
    }
}

#[test]
fn rho_free_parameter() {
    let mut p = BTreeMap::new();
    p.insert(vec![3, 5], Q::new(7, 3));
    let r = Rho::with_params(p);
    let (w, v) = mzv("Z35");
    let want = f("-20163/2 f3 f5 + 28743/2 f5 f3 - 3366 f2 f3 f3 + 7/3 f8");
    assert_eq!(r.apply(w, &v).unwrap(), want);
    assert!(r.apply(w, &v).unwrap().deconcatenate() == r.tensor(&coaction(w, &v).unwrap()).unwrap());
}

#[test]
fn rho_intertwines_on_basis_words() {
    for w in 2..=10 {
        let d = weight_basis(w).unwrap().dim();
        for i in 0..d {
            let mut e = vec![Q::zero(); d];
            e[i] = Q::one();
            assert!(intertwines(w, &e).unwrap(), "weight {} basis {}", w, i);
        }
    }
}

#[test]
fn rho_is_multiplicative() {
    for w1 in 2..=6 {
        for w2 in 2..=(10 - w1) {
            let (d1, d2) = (weight_basis(w1).unwrap().dim(), weight_basis(w2).unwrap().dim());
            for i in 0..d1 {
                for j in 0..d2 {
                    let mut a = vec![Q::zero(); d1];
                    a[i] = Q::one();
                    let mut b = vec![Q::zero(); d2];
                    b[j] = Q::one();
                    let ab = multiply(w1, &a, w2, &b).unwrap();
                    let lhs = rho(w1 + w2, &ab).unwrap();
                    let rhs = rho(w1, &a).unwrap().shuffle(&rho(w2, &b).unwrap());
                    assert_eq!(lhs, rhs, "weights {} {}", w1, w2);
                }
            }
        }
    }
}

#[test]
fn rho_full_rank() {
    for w in 2..=10 {
        let (_, rows) = rho_matrix(w).unwrap();
        assert_eq!(linalg::rank(&rows), f_dimension(w), "w={}", w);
    }
}
