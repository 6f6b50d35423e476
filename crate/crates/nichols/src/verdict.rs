use std::fmt;

/// Outcome of a verification suite: how many instances were checked and
/// the first counterexample, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub name: String,
    pub checked: usize,
    pub failure: Option<String>,
}

impl Verdict {
    pub fn new(name: impl Into<String>) -> Self {
        Verdict { name: name.into(), checked: 0, failure: None }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    /// Record one checked instance; the message is built only for the first
    /// failure.
    pub fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(msg());
        }
    }

    /// Record a failure that is not tied to a single instance.
    pub fn fail(&mut self, msg: impl Into<String>) {
        if self.failure.is_none() {
            self.failure = Some(msg.into());
        }
    }

    /// Fold another verdict's counts and first failure into this one.
    pub fn absorb(&mut self, other: Verdict) {
        self.checked += other.checked;
        if self.failure.is_none() {
            self.failure = other.failure.map(|f| format!("{}: {f}", other.name));
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "{}: pass ({} checked)", self.name, self.checked),
            Some(e) => write!(f, "{}: FAIL after {} checked: {e}", self.name, self.checked),
        }
    }
}
