//! Scalar abstraction the numerical kernels are generic over.

use std::fmt;
use std::iter::Sum;

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar type for grids, fields and operators.
///
/// The library is written against this trait so that everything from the
/// Runge–Kutta integrator to the banded 2D solver works for both `f32`
/// and `f64`. The stated tolerances in the test suites assume `f64`;
/// `f32` instantiations are exercised only as smoke checks.
pub trait Scalar:
    Float + FromPrimitive + Sum + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Lifts an `f64` constant into the working scalar type.
pub(crate) fn real<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("constant not representable in scalar type")
}
