//! Shared vocabulary for the exhaustive searches.

/// Result of an exhaustive search. Running out of budget is never reported
/// as [`Outcome::NoneExists`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T> {
    Found(T),
    NoneExists,
    BudgetExhausted,
}

impl<T> Outcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Outcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Outcome::Found(_))
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Found(t) => Outcome::Found(f(t)),
            Outcome::NoneExists => Outcome::NoneExists,
            Outcome::BudgetExhausted => Outcome::BudgetExhausted,
        }
    }
}

/// Cap on the number of search nodes a call may expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        max_nodes: u64::MAX,
    };

    pub fn nodes(max_nodes: u64) -> Self {
        Budget { max_nodes }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 200_000_000,
        }
    }
}

/// Node counter shared by a recursive search.
#[derive(Debug)]
pub(crate) struct Meter {
    used: u64,
    limit: u64,
}

impl Meter {
    pub(crate) fn new(budget: Budget) -> Self {
        Meter {
            used: 0,
            limit: budget.max_nodes,
        }
    }

    /// Counts one node; `false` once the budget is spent.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        self.used += 1;
        self.used <= self.limit
    }

    pub(crate) fn exhausted(&self) -> bool {
        self.used > self.limit
    }
}
