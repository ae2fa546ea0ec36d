//! Process-wide memo tables with one initialization per key.
//!
//! A key's value may depend on other keys; only the map lookup is locked, so
//! recursive initialization of distinct keys does not deadlock.

use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

use rustc_hash::FxHashMap;

pub struct Memo<K, V> {
    cells: Mutex<FxHashMap<K, Arc<OnceLock<V>>>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub fn new() -> Self {
        Memo { cells: Mutex::new(FxHashMap::default()) }
    }

    pub fn get_or_init(&self, k: &K, f: impl FnOnce() -> V) -> V {
        let cell = self.cells.lock().unwrap().entry(k.clone()).or_default().clone();
        cell.get_or_init(f).clone()
    }
}

impl<K: Eq + Hash + Clone, V: Clone> Default for Memo<K, V> {
    fn default() -> Self {
        Self::new()
    }
}
