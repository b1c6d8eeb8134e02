use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

/// Search limits. Exceeding any of them makes a solver return bounds flagged inexact
/// instead of an exact answer.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn nodes(limit: u64) -> Self {
        Budget {
            node_limit: Some(limit),
            time_limit: None,
        }
    }

    pub(crate) fn meter(&self) -> Meter {
        Meter {
            nodes: 0,
            node_limit: self.node_limit,
            deadline: self.time_limit.map(|d| Instant::now() + d),
            exhausted: false,
        }
    }
}

/// Running node/time counter for one search.
#[derive(Debug)]
pub(crate) struct Meter {
    pub nodes: u64,
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    pub exhausted: bool,
}

impl Meter {
    /// Counts one node; returns `true` once the budget is used up.
    #[inline]
    pub fn tick(&mut self) -> bool {
        self.nodes += 1;
        if let Some(l) = self.node_limit {
            if self.nodes > l {
                self.exhausted = true;
            }
        }
        if self.nodes & 0x3ff == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.exhausted = true;
                }
            }
        }
        self.exhausted
    }
}

/// Size limit plus search budget for an exact solver. `max_vertices: None` selects the
/// solver's own default limit.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub max_vertices: Option<usize>,
    pub budget: Budget,
}

impl Limits {
    pub fn with_budget(budget: Budget) -> Self {
        Limits {
            max_vertices: None,
            budget,
        }
    }

    pub(crate) fn check(&self, what: &str, n: usize, default_max: usize) -> crate::error::Result<()> {
        let max = self.max_vertices.unwrap_or(default_max);
        if n > max {
            return Err(crate::error::Error::ExactModeRefused(format!(
                "{what} on {n} vertices exceeds the limit of {max}"
            )));
        }
        Ok(())
    }
}
