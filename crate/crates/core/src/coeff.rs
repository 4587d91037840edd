//! Coefficient scalar abstraction.
//!
//! All arithmetic in this crate is exact. The coefficient ring is Z[y], with
//! the integer scalar type pluggable through [`Coeff`]: machine integers for
//! desk-scale computations, `BigInt` when coefficient growth is a concern.

use num_integer::Integer;
use num_traits::Signed;
use std::fmt;
use std::hash::Hash;

/// An exact signed integer scalar usable as the base ring of coefficients.
///
/// Implemented by `i64`, `i128` and `num_bigint::BigInt` via the blanket impl.
pub trait Coeff:
    Integer + Signed + Clone + Ord + Hash + fmt::Debug + fmt::Display + From<i64> + Send + Sync + 'static
{
}

impl<T> Coeff for T where
    T: Integer
        + Signed
        + Clone
        + Ord
        + Hash
        + fmt::Debug
        + fmt::Display
        + From<i64>
        + Send
        + Sync
        + 'static
{
}
