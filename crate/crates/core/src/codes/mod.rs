//! Block codes over GF(q): explicit codeword lists and linear codes.

mod code;
mod io;
mod linear;
mod word;

pub use code::{floor_log, Code, SingletonDefect, LINEARITY_CHECK_LIMIT};
pub use io::{parse_code, read_code, write_code};
pub use linear::LinearCode;
pub use word::{hamming, index_to_word, weight, word_to_index, Word};

use crate::algebra::Field;
use crate::budget::Budget;
use crate::error::Result;

/// Either kind of code, as read from a file.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyCode {
    Linear(LinearCode),
    Explicit(Code),
}

impl AnyCode {
    pub fn field(&self) -> &Field {
        match self {
            AnyCode::Linear(c) => c.field(),
            AnyCode::Explicit(c) => c.field(),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            AnyCode::Linear(c) => c.n(),
            AnyCode::Explicit(c) => c.n(),
        }
    }

    /// Number of codewords when it fits in a `usize`.
    pub fn len_hint(&self) -> Option<usize> {
        match self {
            AnyCode::Linear(c) => c.field().q().checked_pow(c.k() as u32),
            AnyCode::Explicit(c) => Some(c.len()),
        }
    }

    pub fn min_distance(&self, budget: Budget) -> Result<usize> {
        match self {
            AnyCode::Linear(c) => c.min_distance(budget),
            AnyCode::Explicit(c) => c.min_distance(budget),
        }
    }

    pub fn weight_distribution(&self, budget: Budget) -> Result<Vec<u64>> {
        match self {
            AnyCode::Linear(c) => c.weight_distribution(budget),
            AnyCode::Explicit(c) => Ok(c.weight_distribution()),
        }
    }

    pub fn singleton_defect(&self, budget: Budget) -> Result<SingletonDefect> {
        match self {
            AnyCode::Linear(c) => c.singleton_defect(budget),
            AnyCode::Explicit(c) => c.singleton_defect(budget),
        }
    }

    /// Materialized codeword list.
    pub fn to_explicit(&self, budget: Budget) -> Result<Code> {
        match self {
            AnyCode::Linear(c) => c.to_code(budget),
            AnyCode::Explicit(c) => Ok(c.clone()),
        }
    }
}

impl From<LinearCode> for AnyCode {
    fn from(c: LinearCode) -> Self {
        AnyCode::Linear(c)
    }
}

impl From<Code> for AnyCode {
    fn from(c: Code) -> Self {
        AnyCode::Explicit(c)
    }
}
