//! Scalar abstraction: the feature and classifier math is generic over `Real`.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};

/// Floating-point scalar (`f32` or `f64`) the numeric pipeline runs on.
pub trait Real:
    Float
    + NumAssign
    + FromPrimitive
    + ToPrimitive
    + Sum
    + Default
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Conversion from `f64` literals and intermediate results.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("f64 value convertible to Real")
    }

    /// Conversion from counts.
    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("usize value convertible to Real")
    }

    /// Widening view for formatting and serialization.
    fn as_f64(self) -> f64 {
        self.to_f64().expect("Real value convertible to f64")
    }
}

impl<T> Real for T where
    T: Float
        + NumAssign
        + FromPrimitive
        + ToPrimitive
        + Sum
        + Default
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}
