//! Versioned JSON persistence of weight bases.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{ideal_generators, Family, MzvError, WeightBasis};
use crate::freealg::word::convergent_words;
use crate::freealg::{Alphabet, Word};
use crate::q::Q;

pub const VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Stored {
    version: u32,
    weight: usize,
    family: Family,
    basis_convention: String,
    relation_hash: String,
    basis: Vec<String>,
    /// coordinates of each convergent word, in word order
    table: Vec<Vec<Q>>,
}

pub fn path_for(dir: &Path, w: usize, family: Family) -> PathBuf {
    dir.join(format!("fz_w{:02}_{}.json", w, family.name()))
}

pub fn to_json(b: &WeightBasis) -> String {
    let s = Stored {
        version: VERSION,
        weight: b.weight,
        family: b.family,
        basis_convention: "lexicographically last independent convergent words".into(),
        relation_hash: b.relation_hash.clone(),
        basis: b.basis.iter().map(|w| w.spell(Alphabet::XY)).collect(),
        table: convergent_words(b.weight).map(|c| b.coords_of_convergent(c).to_vec()).collect(),
    };
    serde_json::to_string(&s).unwrap()
}

pub fn from_json(text: &str) -> Result<WeightBasis, MzvError> {
    let s: Stored = serde_json::from_str(text).map_err(|e| MzvError::Cache(e.to_string()))?;
    if s.version != VERSION {
        return Err(MzvError::Cache(format!("version {} != {}", s.version, VERSION)));
    }
    let w = s.weight;
    if w < 2 || s.table.len() != 1 << (w - 2) {
        return Err(MzvError::Cache("table size mismatch".into()));
    }
    let mut basis = Vec::new();
    for t in &s.basis {
        match Word::parse(t) {
            Some((b, Some(Alphabet::XY))) if b.len() == w && b.is_convergent() => basis.push(b),
            _ => return Err(MzvError::Cache(format!("bad basis word {}", t))),
        }
    }
    if s.table.iter().any(|r| r.len() != basis.len()) {
        return Err(MzvError::Cache("row length mismatch".into()));
    }
    Ok(WeightBasis { weight: w, family: s.family, basis, coords: s.table, relation_hash: s.relation_hash })
}

/// Integrity check: a spread of generators must reduce to zero.
pub fn verify_sample(b: &WeightBasis, samples: usize) -> Result<(), MzvError> {
    let gens = ideal_generators(b.weight, b.family)?;
    if gens.is_empty() {
        return Ok(());
    }
    let step = (gens.len() / samples.max(1)).max(1);
    for g in gens.iter().step_by(step) {
        if b.reduce_convergent(g).iter().any(|q| !q.is_zero()) {
            return Err(MzvError::Cache("cached table does not annihilate the generators".into()));
        }
    }
    Ok(())
}

pub fn load(dir: &Path, w: usize, family: Family) -> Result<WeightBasis, MzvError> {
    let text = std::fs::read_to_string(path_for(dir, w, family)).map_err(|e| MzvError::Cache(e.to_string()))?;
    let b = from_json(&text)?;
    if b.weight != w || b.family != family {
        return Err(MzvError::Cache("key mismatch".into()));
    }
    verify_sample(&b, 100)?;
    Ok(b)
}

pub fn store(dir: &Path, b: &WeightBasis) -> Result<(), MzvError> {
    std::fs::create_dir_all(dir).map_err(|e| MzvError::Cache(e.to_string()))?;
    let p = path_for(dir, b.weight, b.family);
    let tmp = p.with_extension("tmp");
    std::fs::write(&tmp, to_json(b)).map_err(|e| MzvError::Cache(e.to_string()))?;
    std::fs::rename(&tmp, &p).map_err(|e| MzvError::Cache(e.to_string()))
}
