//! Vocabularies: named relation and function symbols with finite arities.
//! Constants are functions of arity 0.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymbolKind {
    Relation,
    Function,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Vocabulary {
    symbols: BTreeMap<String, (SymbolKind, usize)>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VocabError {
    #[error("duplicate symbol {0}")]
    Duplicate(String),
    #[error("reserved name {0}: user identifiers may not start with '$'")]
    Reserved(String),
}

impl Vocabulary {
    pub fn new() -> Vocabulary {
        Vocabulary::default()
    }

    pub fn declare(
        &mut self,
        name: &str,
        kind: SymbolKind,
        arity: usize,
    ) -> Result<(), VocabError> {
        if name.starts_with('$') {
            return Err(VocabError::Reserved(name.to_string()));
        }
        self.declare_internal(name, kind, arity)
    }

    /// Used by the transformation passes for generated `$`-prefixed symbols.
    pub fn declare_internal(
        &mut self,
        name: &str,
        kind: SymbolKind,
        arity: usize,
    ) -> Result<(), VocabError> {
        if self.symbols.contains_key(name) {
            return Err(VocabError::Duplicate(name.to_string()));
        }
        self.symbols.insert(name.to_string(), (kind, arity));
        Ok(())
    }

    pub fn relation(&self, name: &str) -> Option<usize> {
        match self.symbols.get(name) {
            Some((SymbolKind::Relation, n)) => Some(*n),
            _ => None,
        }
    }

    pub fn function(&self, name: &str) -> Option<usize> {
        match self.symbols.get(name) {
            Some((SymbolKind::Function, n)) => Some(*n),
            _ => None,
        }
    }

    pub fn contains(&self, name: &str) -> bool {
        self.symbols.contains_key(name)
    }

    pub fn symbols(&self) -> impl Iterator<Item = (&str, SymbolKind, usize)> {
        self.symbols.iter().map(|(n, (k, a))| (n.as_str(), *k, *a))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// True iff every symbol of `self` is in `other` with the same kind and
    /// arity.
    pub fn is_sub_vocabulary_of(&self, other: &Vocabulary) -> bool {
        self.symbols
            .iter()
            .all(|(n, ka)| other.symbols.get(n) == Some(ka))
    }

    pub fn extended_with(&self, extra: &Vocabulary) -> Result<Vocabulary, VocabError> {
        let mut out = self.clone();
        for (n, (k, a)) in &extra.symbols {
            out.declare_internal(n, *k, *a)?;
        }
        Ok(out)
    }
}

impl fmt::Display for Vocabulary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (k, a)) in &self.symbols {
            let kind = match k {
                SymbolKind::Relation => "rel",
                SymbolKind::Function => "fun",
            };
            writeln!(f, "vocab {kind} {n} {a}")?;
        }
        Ok(())
    }
}
