//! Finite-field arithmetic and linear algebra over GF(q), q <= 256.

mod field;
mod matrix;

pub use field::{is_prime, prime_power, Field, Symbol, MAX_FIELD_ORDER};
pub use matrix::{reduce_modulo, Echelon, Matrix};
