/// Outcome of an exhaustive check: passes, or fails with the first witness found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict<W> {
    pub witness: Option<W>,
}

impl<W> Verdict<W> {
    pub fn pass() -> Self {
        Verdict { witness: None }
    }

    pub fn fail(witness: W) -> Self {
        Verdict {
            witness: Some(witness),
        }
    }

    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

impl<W> From<Option<W>> for Verdict<W> {
    fn from(witness: Option<W>) -> Self {
        Verdict { witness }
    }
}
