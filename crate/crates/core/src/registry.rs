//! Name-keyed tables of interchangeable strategies.

use std::collections::BTreeMap;
use std::fmt;

/// A strategy that can be looked up by name.
pub trait Named {
    fn name(&self) -> &'static str;
}

/// Strategies of one kind, keyed by [`Named::name`].
pub struct Registry<T: ?Sized + Named> {
    entries: BTreeMap<&'static str, Box<T>>,
}

impl<T: ?Sized + Named> Registry<T> {
    pub fn new() -> Self {
        Registry { entries: BTreeMap::new() }
    }

    /// Adds `strategy`, replacing and returning any entry with the same name.
    pub fn register(&mut self, strategy: Box<T>) -> Option<Box<T>> {
        self.entries.insert(strategy.name(), strategy)
    }

    pub fn get(&self, name: &str) -> Option<&T> {
        self.entries.get(name).map(|b| &**b)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.entries.contains_key(name)
    }

    /// Registered names in sorted order.
    pub fn names(&self) -> Vec<&'static str> {
        self.entries.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.entries.values().map(|b| &**b)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl<T: ?Sized + Named> Default for Registry<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: ?Sized + Named> fmt::Debug for Registry<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.entries.keys()).finish()
    }
}
