//! Scalar abstraction for the numeric kernels.
//!
//! Everything numeric in this crate is generic over [`Float`] so the math
//! runs identically on `f32` and `f64`. The zoo files, the CLI, and every
//! persisted artifact use the `f64` instantiation (see the type aliases at
//! the crate root).

use std::fmt::{Debug, Display};

/// Floating-point scalar: `f32` or `f64`.
pub trait Float:
    num_traits::Float
    + num_traits::FromPrimitive
    + num_traits::ToPrimitive
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Convert an `f64` constant into the scalar type.
    fn cast(x: f64) -> Self {
        Self::from_f64(x).expect("constant representable in scalar type")
    }

    /// Convert a count into the scalar type.
    fn cast_usize(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in scalar type")
    }
}

impl Float for f32 {}
impl Float for f64 {}
