//! Knobs shared by the Ass enumeration, filtration and factorization code.

use crate::par::Exec;

/// Order used to pick among incomparable maximal associated primes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// Smallest canonical generator string first.
    #[default]
    Lex,
    /// Largest canonical generator string first.
    Revlex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub tie_break: TieBreak,
    /// Upper bound on filtration length.
    pub max_steps: usize,
    pub exec: Exec,
    /// Largest variable count for exhaustive monomial Ass enumeration.
    pub monomial_bound: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { tie_break: TieBreak::Lex, max_steps: 64, exec: Exec::default(), monomial_bound: 14 }
    }
}

impl Config {
    pub fn with_tie_break(mut self, tie_break: TieBreak) -> Self {
        self.tie_break = tie_break;
        self
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    pub fn with_max_steps(mut self, max_steps: usize) -> Self {
        self.max_steps = max_steps;
        self
    }
}
