//! YES/NO answers that carry their evidence.

/// `Yes` holds a certificate, `No` a witness; either can be checked
/// independently of the search that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision<C, W> {
    Yes(C),
    No(W),
}

impl<C, W> Decision<C, W> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }

    pub fn certificate(&self) -> Option<&C> {
        match self {
            Decision::Yes(c) => Some(c),
            Decision::No(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Decision::Yes(_) => None,
            Decision::No(w) => Some(w),
        }
    }

    pub fn into_certificate(self) -> Option<C> {
        match self {
            Decision::Yes(c) => Some(c),
            Decision::No(_) => None,
        }
    }
}
