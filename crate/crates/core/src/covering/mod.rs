//! Covering radius, the dual-weight bound, greedy covering codes and the
//! table of known covering-code values.

mod radius;
mod search;
pub mod table;

pub use radius::{
    covering_radius, covering_radius_with, delsarte_bound, delsarte_result, explicit_radius,
    linear_radius, MethodUsed, RadiusMethod, RadiusOptions, RadiusResult,
};
pub use search::greedy_covering_search;
pub(crate) use search::for_each_in_ball;
pub use table::{table_lookup, LookupKey, TableEntry, TableKind, TableValue};
