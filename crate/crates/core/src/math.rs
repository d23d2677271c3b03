//! Float intrinsics routed through `std` or `libm`.

#[cfg(feature = "std")]
mod imp {
    #[inline]
    pub fn sqrt(x: f64) -> f64 {
        x.sqrt()
    }
    #[inline]
    pub fn sin(x: f64) -> f64 {
        x.sin()
    }
    #[inline]
    pub fn cos(x: f64) -> f64 {
        x.cos()
    }
    #[inline]
    pub fn atan2(y: f64, x: f64) -> f64 {
        y.atan2(x)
    }
    #[inline]
    pub fn atan(x: f64) -> f64 {
        x.atan()
    }
    #[inline]
    pub fn ln(x: f64) -> f64 {
        x.ln()
    }
    #[inline]
    pub fn log2(x: f64) -> f64 {
        x.log2()
    }
    #[inline]
    pub fn hypot(x: f64, y: f64) -> f64 {
        x.hypot(y)
    }
}

#[cfg(not(feature = "std"))]
mod imp {
    pub use libm::{atan, atan2, cos, hypot, log2, sin, sqrt};
    #[inline]
    pub fn ln(x: f64) -> f64 {
        libm::log(x)
    }
}

pub(crate) use imp::*;
