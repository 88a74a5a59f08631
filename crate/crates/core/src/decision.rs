use std::fmt;

/// Three-valued answer: a certificate, a total negative, or an honest bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision<C> {
    Yes(C),
    No,
    /// Nothing found with the search complete up to this bound.
    UnknownUpTo(u64),
}

impl<C> Decision<C> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }

    pub fn certificate(&self) -> Option<&C> {
        match self {
            Decision::Yes(c) => Some(c),
            _ => None,
        }
    }

    pub fn map<D>(self, f: impl FnOnce(C) -> D) -> Decision<D> {
        match self {
            Decision::Yes(c) => Decision::Yes(f(c)),
            Decision::No => Decision::No,
            Decision::UnknownUpTo(b) => Decision::UnknownUpTo(b),
        }
    }
}

impl<C: fmt::Display> fmt::Display for Decision<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decision::Yes(c) => write!(f, "YES {c}"),
            Decision::No => f.write_str("NO"),
            Decision::UnknownUpTo(b) => write!(f, "UNKNOWN up to {b}"),
        }
    }
}
