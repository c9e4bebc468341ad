//! Name-keyed registries of interchangeable algorithm variants.

use std::fmt;

use crate::error::{Error, Result};

/// Something selectable by name at runtime.
pub trait Strategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
}

/// Strategies of one kind, kept in registration order.
pub struct Registry<T: ?Sized + Strategy> {
    kind: &'static str,
    entries: Vec<Box<T>>,
}

impl<T: ?Sized + Strategy> Registry<T> {
    pub fn new(kind: &'static str) -> Self {
        Self {
            kind,
            entries: Vec::new(),
        }
    }

    /// Adds a strategy; a later registration under the same name replaces
    /// the earlier one.
    pub fn register(&mut self, s: Box<T>) -> &mut Self {
        self.entries.retain(|e| e.name() != s.name());
        self.entries.push(s);
        self
    }

    pub fn get(&self, name: &str) -> Result<&T> {
        self.entries
            .iter()
            .find(|e| e.name() == name)
            .map(|b| &**b)
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "unknown {} {name:?}; expected one of: {}",
                    self.kind,
                    self.names().join(", ")
                ))
            })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.entries.iter().map(|b| &**b)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl<T: ?Sized + Strategy> fmt::Debug for Registry<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Registry<{}>{:?}", self.kind, self.names())
    }
}

/// The built-in character methods.
pub fn character_methods() -> Registry<dyn crate::symgroup::CharacterMethod> {
    use crate::symgroup::{MurnaghanNakayama, ProjectorMethod};
    let mut r: Registry<dyn crate::symgroup::CharacterMethod> = Registry::new("character method");
    r.register(Box::new(ProjectorMethod)).register(Box::new(MurnaghanNakayama));
    r
}

/// The built-in trace kinds.
pub fn trace_kinds() -> Registry<dyn crate::traces::TraceKind> {
    use crate::traces::{DoublyKind, MurphyKind, ProductsKind, SimplyKind};
    let mut r: Registry<dyn crate::traces::TraceKind> = Registry::new("trace kind");
    r.register(Box::new(MurphyKind))
        .register(Box::new(SimplyKind))
        .register(Box::new(ProductsKind))
        .register(Box::new(DoublyKind));
    r
}

/// The built-in oracle checks, in the order `verify` runs them.
pub fn oracle_checks() -> Registry<dyn crate::checks::OracleCheck> {
    let mut r: Registry<dyn crate::checks::OracleCheck> = Registry::new("oracle check");
    for c in crate::checks::builtin() {
        r.register(c);
    }
    r
}
