use zetagen::export::{self, ExportError, Object};
use zetagen::genusone::{expansion, sigma};
use zetagen::genuszero::canonical_gw;
use zetagen::moulds::{invpal, Mould};

fn round_trip(obj: Object) {
    let text = export::to_string(&obj);
    let back = export::from_str(&text).unwrap();
    assert_eq!(back, obj);
    // and the text is stable
    assert_eq!(export::to_string(&back), text);
}

#[test]
fn g7_round_trip() {
    round_trip(Object::Series(canonical_gw(7).unwrap().poly.clone()));
}

#[test]
fn sigma3_round_trip_through_degree_17() {
    round_trip(Object::Derivation((*sigma(3, 16).unwrap()).clone().truncate(16)));
    round_trip(Object::Eps(expansion(3, 16).unwrap().total()));
}

#[test]
fn mould_round_trip() {
    round_trip(Object::Mould((*invpal(4)).clone()));
    let g = Mould::ma(&canonical_gw(5).unwrap().poly, 5).unwrap();
    round_trip(Object::Mould(g));
}

#[test]
fn corrupt_files_are_rejected() {
    let good = export::to_string(&Object::Series(canonical_gw(3).unwrap().poly.clone()));
    assert!(matches!(export::from_str(&good[..good.len() / 2]), Err(ExportError::Json(_))));
    assert!(matches!(export::from_str("{\"format\": \"other\"}"), Err(ExportError::Format)));
    let v2 = good.replace("\"version\": 1", "\"version\": 2");
    assert!(matches!(export::from_str(&v2), Err(ExportError::Version(2))));
    let bad_word = good.replacen("xxy", "xxz", 1);
    assert!(matches!(export::from_str(&bad_word), Err(ExportError::Data(_))));
    let bad_kind = good.replace("\"kind\": \"series\"", "\"kind\": \"tensor\"");
    assert!(matches!(export::from_str(&bad_kind), Err(ExportError::Data(_))));
}
