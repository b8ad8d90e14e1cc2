use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered list of scalar variable names shared by a computation.
///
/// Two tables are compatible when one is a prefix of the other; arithmetic
/// between compatible polynomials takes the longer table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarTable(Arc<[String]>);

impl VarTable {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (k, n) in names.iter().enumerate() {
            if n.is_empty() || !n.chars().next().unwrap().is_ascii_alphabetic() {
                return Err(Error::Parse(format!("invalid variable name {n:?}")));
            }
            if names[..k].contains(n) {
                return Err(Error::Parse(format!("duplicate variable name {n:?}")));
            }
        }
        Ok(VarTable(names.into()))
    }

    /// The table `[q]`.
    pub fn q() -> Self {
        Self::new(&["q"]).unwrap()
    }

    /// The table `[q, u, v, w]` used for spectral parameters.
    pub fn quvw() -> Self {
        Self::new(&["q", "u", "v", "w"]).unwrap()
    }

    /// Extends the table with fresh names appended at the end.
    pub fn extended<S: AsRef<str>>(&self, extra: &[S]) -> Result<Self> {
        let mut names: Vec<String> = self.0.to_vec();
        names.extend(extra.iter().map(|s| s.as_ref().to_string()));
        Self::new(&names)
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn is_prefix_of(&self, other: &VarTable) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.len() <= other.0.len() && self.0.iter().zip(other.0.iter()).all(|(a, b)| a == b))
    }

    /// The longer of two compatible tables.
    pub fn join(&self, other: &VarTable) -> Result<VarTable> {
        if self.is_prefix_of(other) {
            Ok(other.clone())
        } else if other.is_prefix_of(self) {
            Ok(self.clone())
        } else {
            Err(Error::VarTableMismatch(format!("{self} vs {other}")))
        }
    }
}

impl fmt::Display for VarTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.join(","))
    }
}

impl fmt::Debug for VarTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
