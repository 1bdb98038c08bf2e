//! Upper bounds on code size and length. Values are exact integers or
//! symbolic powers; comparisons never go through floating point.

mod classic;
mod cover;
mod generalized;
mod ladder;
mod length;
mod value;

pub use classic::*;
pub use cover::*;
pub use generalized::*;
pub use ladder::{bound_ladder, sort_and_mark};
pub use length::*;
pub use value::{BoundResult, BoundValue, Quantity};
