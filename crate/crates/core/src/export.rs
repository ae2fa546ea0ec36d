//! Versioned JSON files for series, derivations, ε-expressions and moulds.
//!
//! Every file is an object `{"format": "zetagen", "version": 1, "kind": …, "data": …}`;
//! the layout of `data` per kind is described in `docs/json-schema.md`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::freealg::nc::NcPoly;
use crate::freealg::{Alphabet, Series};
use crate::genusone::{Derivation, EpsExpr, EpsSym};
use crate::moulds::frac::Lin;
use crate::moulds::poly::{Mono, MAX_VARS};
use crate::moulds::{Frac, Mould, Poly};
use crate::q::Q;

pub const FORMAT: &str = "zetagen";
pub const VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum ExportError {
    #[error("not a zetagen file")]
    Format,
    #[error("unsupported version {0} (expected {VERSION})")]
    Version(u32),
    #[error("expected a {expected} file, found {found}")]
    Kind { expected: &'static str, found: String },
    #[error("malformed data: {0}")]
    Data(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Object {
    Series(Series),
    Derivation(Derivation),
    Eps(EpsExpr),
    Mould(Mould),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Series(_) => "series",
            Object::Derivation(_) => "derivation",
            Object::Eps(_) => "eps",
            Object::Mould(_) => "mould",
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Envelope {
    format: String,
    version: u32,
    kind: String,
    data: Value,
}

fn data_err(e: impl ToString) -> ExportError {
    ExportError::Data(e.to_string())
}

fn series_json(s: &Series) -> Value {
    json!({ "alphabet": s.alpha.name(), "terms": s.to_json() })
}

fn series_from(v: &Value) -> Result<Series, ExportError> {
    let alpha = match v["alphabet"].as_str() {
        Some("xy") => Alphabet::XY,
        Some("ab") => Alphabet::AB,
        _ => return Err(data_err("alphabet must be \"xy\" or \"ab\"")),
    };
    Series::from_json(alpha, &v["terms"]).map_err(data_err)
}

fn eps_json(e: &EpsExpr) -> Value {
    let mut terms: Vec<(&Vec<EpsSym>, &Q)> = e.0.iter().collect();
    terms.sort();
    Value::Array(
        terms
            .into_iter()
            .map(|(w, q)| json!([q.to_string(), w.iter().map(|s| [s.k, s.j]).collect::<Vec<_>>()]))
            .collect(),
    )
}

fn eps_from(v: &Value) -> Result<EpsExpr, ExportError> {
    let mut p = NcPoly::zero();
    for t in v.as_array().ok_or_else(|| data_err("ε-expression must be an array"))? {
        let (q, w): (String, Vec<(u8, u8)>) = serde_json::from_value(t.clone())?;
        let q: Q = q.parse().map_err(data_err)?;
        let w: Vec<EpsSym> = w.into_iter().map(|(k, j)| EpsSym { k, j }).collect();
        if w.iter().any(|s| s.is_zero() || s.k % 2 == 1) {
            return Err(data_err("invalid ε-symbol"));
        }
        p.add_term(w, q);
    }
    Ok(EpsExpr(p))
}

fn frac_json(f: &Frac) -> Value {
    let num: Vec<Value> = f.num.sorted().into_iter().map(|(m, q)| json!([q.to_string(), m.exps(m.support())])).collect();
    let den: Vec<Value> = f.den.iter().map(|(l, m)| json!([l.coeffs(), m])).collect();
    json!({ "num": num, "den": den })
}

fn frac_from(v: &Value) -> Result<Frac, ExportError> {
    let mut num = Poly::zero();
    for t in v["num"].as_array().ok_or_else(|| data_err("num must be an array"))? {
        let (q, e): (String, Vec<u32>) = serde_json::from_value(t.clone())?;
        if e.len() > MAX_VARS || e.iter().any(|&x| x > 255) {
            return Err(data_err("monomial out of range"));
        }
        num.add_term(Mono::from_exps(&e), q.parse().map_err(data_err)?);
    }
    let mut den = BTreeMap::new();
    for t in v["den"].as_array().ok_or_else(|| data_err("den must be an array"))? {
        let (cs, m): (Vec<i64>, u32) = serde_json::from_value(t.clone())?;
        let (g, l) = Lin::normalize(&cs).ok_or_else(|| data_err("zero linear factor"))?;
        if g != 1 || cs.len() > MAX_VARS || m == 0 {
            return Err(data_err("linear factor must be primitive with positive leading coefficient"));
        }
        den.insert(l, m);
    }
    Ok(Frac { num, den })
}

/// The JSON value of an object inside its envelope.
pub fn to_value(obj: &Object) -> Value {
    let data = match obj {
        Object::Series(s) => series_json(s),
        Object::Derivation(d) => json!({ "max": d.max, "a": series_json(&d.a()), "b": series_json(&d.b()) }),
        Object::Eps(e) => eps_json(e),
        Object::Mould(m) => Value::Array(m.parts().iter().map(frac_json).collect()),
    };
    serde_json::to_value(Envelope { format: FORMAT.into(), version: VERSION, kind: obj.kind().into(), data }).unwrap()
}

pub fn to_string(obj: &Object) -> String {
    serde_json::to_string_pretty(&to_value(obj)).unwrap()
}

pub fn from_str(text: &str) -> Result<Object, ExportError> {
    let v: Value = serde_json::from_str(text)?;
    if v.get("format").and_then(Value::as_str) != Some(FORMAT) {
        return Err(ExportError::Format);
    }
    let env: Envelope = serde_json::from_value(v)?;
    if env.version != VERSION {
        return Err(ExportError::Version(env.version));
    }
    let d = &env.data;
    Ok(match env.kind.as_str() {
        "series" => Object::Series(series_from(d)?),
        "derivation" => {
            let max = d["max"].as_u64().ok_or_else(|| data_err("max must be an integer"))? as usize;
            Object::Derivation(Derivation::from_images(&series_from(&d["a"])?, &series_from(&d["b"])?, max))
        }
        "eps" => Object::Eps(eps_from(d)?),
        "mould" => {
            let parts = d.as_array().filter(|p| !p.is_empty()).ok_or_else(|| data_err("mould must be a nonempty array"))?;
            Object::Mould(Mould::from_parts(parts.iter().map(frac_from).collect::<Result<_, _>>()?))
        }
        k => return Err(data_err(format!("unknown kind {}", k))),
    })
}

pub fn write(path: &Path, obj: &Object) -> Result<(), ExportError> {
    Ok(std::fs::write(path, to_string(obj) + "\n")?)
}

pub fn read(path: &Path) -> Result<Object, ExportError> {
    from_str(&std::fs::read_to_string(path)?)
}

/// Read a file that must hold the given kind.
pub fn read_kind(path: &Path, kind: &'static str) -> Result<Object, ExportError> {
    let obj = read(path)?;
    if obj.kind() != kind {
        return Err(ExportError::Kind { expected: kind, found: obj.kind().into() });
    }
    Ok(obj)
}
