//! Scalar abstraction shared by every numeric routine in the crate.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};
use twofloat::TwoFloat;

/// Floating point type the physics is evaluated in.
///
/// Implemented for `f32`, `f64` and the double-double [`TwoFloat`]. The
/// compiled-in constants are `f64` literals, so `TwoFloat` buys extra
/// working precision in long chains of arithmetic rather than more
/// accurate fundamentals.
pub trait Scalar: Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static {
    /// Lift an `f64` literal into this type.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    /// Lossy view as `f64`, used for diagnostics and text output.
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Machine epsilon of the working precision.
    fn eps() -> Self {
        Self::epsilon()
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

impl Scalar for TwoFloat {
    // FromPrimitive::from_f64 on TwoFloat goes through an integer.
    fn lit(x: f64) -> Self {
        TwoFloat::from(x)
    }

    // TwoFloat::epsilon() reports f64 epsilon; the pair carries ~106 bits.
    fn eps() -> Self {
        TwoFloat::from(2f64.powi(-104))
    }
}

/// Shorthand for `T::lit`.
#[inline]
pub(crate) fn c<T: Scalar>(x: f64) -> T {
    T::lit(x)
}
