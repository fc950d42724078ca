//! Shared memo tables with a byte budget.
//!
//! The budget comes from `KRONKIT_CACHE_BYTES` (default 256 MiB). A table
//! that would exceed its budget is cleared before the insert. Cached values
//! are pure functions of their keys, so clearing never changes results.

use std::collections::HashMap;
use std::hash::Hash;

use once_cell::sync::Lazy;
use parking_lot::Mutex;

pub const CACHE_ENV: &str = "KRONKIT_CACHE_BYTES";
const DEFAULT_BUDGET: usize = 256 << 20;

static BUDGET: Lazy<usize> = Lazy::new(|| {
    std::env::var(CACHE_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
});

/// Byte budget shared by every memo table.
pub fn budget() -> usize {
    *BUDGET
}

pub(crate) struct Memo<K, V> {
    inner: Mutex<(HashMap<K, V>, usize)>,
    share: usize,
}

impl<K: Hash + Eq, V: Clone> Memo<K, V> {
    /// A table allowed `1/share` of the global budget.
    pub(crate) fn new(share: usize) -> Self {
        Memo {
            inner: Mutex::new((HashMap::new(), 0)),
            share: share.max(1),
        }
    }

    pub(crate) fn get(&self, key: &K) -> Option<V> {
        self.inner.lock().0.get(key).cloned()
    }

    pub(crate) fn insert(&self, key: K, value: V, bytes: usize) {
        let limit = budget() / self.share;
        if bytes > limit {
            return;
        }
        let mut guard = self.inner.lock();
        if guard.1 + bytes > limit {
            guard.0.clear();
            guard.1 = 0;
        }
        if guard.0.insert(key, value).is_none() {
            guard.1 += bytes;
        }
    }
}
