use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

/// Values keyed by order, computed on first request and kept forever.
///
/// Concurrent first requests for the same key may each compute the value; the
/// results are identical and the first insert wins.
pub(crate) struct Memo<T> {
    map: RwLock<BTreeMap<usize, Arc<T>>>,
}

impl<T> Memo<T> {
    pub(crate) const fn new() -> Self {
        Self { map: RwLock::new(BTreeMap::new()) }
    }

    pub(crate) fn get_or_insert_with(&self, key: usize, f: impl FnOnce() -> T) -> Arc<T> {
        if let Some(v) = self.map.read().unwrap().get(&key) {
            return v.clone();
        }
        let value = Arc::new(f());
        self.map.write().unwrap().entry(key).or_insert(value).clone()
    }
}
