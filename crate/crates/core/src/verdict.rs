//! Shared verdict/witness types used by every exhaustive axiom checker.

use std::fmt;

/// A named axiom instance that failed, with the elements that violate it.
/// Witnesses are stored as labels so they survive serialization and can be
/// replayed through the defining condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub axiom: String,
    pub elements: Vec<String>,
}

impl Witness {
    pub fn new(axiom: impl Into<String>, elements: Vec<String>) -> Self {
        Witness {
            axiom: axiom.into(),
            elements,
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at ({})", self.axiom, self.elements.join(", "))
    }
}

/// One verdict of an axiom group: holds, or fails with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub ok: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict {
            ok: true,
            witness: None,
        }
    }

    pub fn fail(w: Witness) -> Self {
        Verdict {
            ok: false,
            witness: Some(w),
        }
    }
}
