//! Generalized sums of linear orders.
//!
//! The crate works with two kinds of values: ordinals below ε₀ in hereditary
//! Cantor normal form ([`Ordinal`]) and finite block sequences describing
//! countable linear orders ([`OrderTerm`]). On top of those sit the
//! generalized ordinal sums, instance enumeration, sum-generating classes,
//! sifted sums, rational shuffles, the binary-word encodings and product
//! bi-colorings.

pub mod bicolor;
pub mod complicated;
pub mod instances;
pub mod orderterm;
pub mod ordinal;
pub mod selftest;
pub mod sgc;
pub mod shuffle;
pub mod sift;

use thiserror::Error;

pub use bicolor::BiColoring;
pub use complicated::{BinaryWord, PieceWitness, SumTable};
pub use instances::InstanceSet;
pub use orderterm::{Block, OrderTerm};
pub use ordinal::Ordinal;
pub use sgc::{Decomposition, Sgc};
pub use shuffle::ShuffleList;
pub use sift::FiltrationScheme;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Outcome of a sample-based check: how many cases were examined and a
/// description of each failing case.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checked: usize,
    pub violations: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations.push(describe());
        }
    }
}

/// Bounds for the enumerating and searching operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Capacity {
    pub max_exponent: u64,
    pub max_coefficient: u64,
    /// Maximum nesting depth of composite class descriptors.
    pub search_depth: usize,
}

impl Default for Capacity {
    fn default() -> Self {
        Capacity {
            max_exponent: 5,
            max_coefficient: 6,
            search_depth: 8,
        }
    }
}
