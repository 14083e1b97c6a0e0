//! Scalar abstraction shared by every model.

use std::fmt::Debug;

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating point type the models are generic over.
pub trait Real:
    Float + FloatConst + FromPrimitive + Copy + Debug + Default + Send + Sync + 'static
{
    /// Classification and feasibility slack.
    const EPS: Self;
    /// Tolerance for identities that should hold to rounding error.
    const TIGHT: Self;

    fn lit(v: f64) -> Self {
        <Self as FromPrimitive>::from_f64(v).expect("literal fits the scalar type")
    }

    fn to_f64_lossy(self) -> f64 {
        <Self as num_traits::ToPrimitive>::to_f64(&self).unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    const EPS: Self = 1e-9;
    const TIGHT: Self = 1e-12;
}

impl Real for f32 {
    const EPS: Self = 1e-5;
    const TIGHT: Self = 1e-6;
}

/// Square root of a radicand that may be slightly negative from rounding.
pub(crate) fn sqrt_clamped<F: Real>(v: F) -> F {
    if v <= F::zero() {
        F::zero()
    } else {
        v.sqrt()
    }
}

pub(crate) fn deg_to_rad<F: Real>(deg: F) -> F {
    deg * F::PI() / F::lit(180.0)
}

pub(crate) fn rad_to_deg<F: Real>(rad: F) -> F {
    rad * F::lit(180.0) / F::PI()
}
