use std::fmt;
use std::ops::{Div, Mul};

use num_rational::Rational32;

use super::Dimension;
use crate::error::{EsfiError, Result};
use crate::scalar::Scalar;

/// A value in the canonical eV / V / nm / s system, tagged with its dimension.
#[derive(Clone, Copy, PartialEq)]
pub struct Quantity<T> {
    value: T,
    dim: Dimension,
}

impl<T: Scalar> Quantity<T> {
    pub fn new(value: T, dim: Dimension) -> Result<Self> {
        if !value.is_finite() {
            return Err(EsfiError::NonFinite(value.to_f64_lossy()));
        }
        Ok(Quantity { value, dim })
    }

    pub(crate) fn raw(value: T, dim: Dimension) -> Self {
        Quantity { value, dim }
    }

    pub fn dimensionless(value: T) -> Self {
        Self::raw(value, Dimension::DIMENSIONLESS)
    }

    /// Canonical-system value.
    pub fn value(&self) -> T {
        self.value
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn expect_dim(self, dim: Dimension) -> Result<Self> {
        if self.dim == dim {
            Ok(self)
        } else {
            Err(EsfiError::DimensionMismatch {
                expected: dim,
                found: self.dim,
            })
        }
    }

    pub fn try_add(self, rhs: Self) -> Result<Self> {
        let rhs = rhs.expect_dim(self.dim)?;
        Ok(Self::raw(self.value + rhs.value, self.dim))
    }

    pub fn try_sub(self, rhs: Self) -> Result<Self> {
        let rhs = rhs.expect_dim(self.dim)?;
        Ok(Self::raw(self.value - rhs.value, self.dim))
    }

    pub fn powr(self, p: Rational32) -> Self {
        Self::raw(pow_rational(self.value, p), self.dim.pow(p))
    }

    pub fn sqrt(self) -> Self {
        Self::raw(self.value.sqrt(), self.dim.pow(Rational32::new(1, 2)))
    }

    pub fn scale(self, k: T) -> Self {
        Self::raw(self.value * k, self.dim)
    }
}

/// `x^p` for rational `p`, using integer powers and square roots when the
/// denominator is 1 or 2 so that common exponents lose no precision to
/// `powf`.
pub(crate) fn pow_rational<T: Scalar>(x: T, p: Rational32) -> T {
    let p = p.reduced();
    let (n, d) = (*p.numer(), *p.denom());
    match d {
        1 => x.powi(n),
        2 => x.sqrt().powi(n),
        _ => x.powf(T::lit(n as f64) / T::lit(d as f64)),
    }
}

impl<T: Scalar> Mul for Quantity<T> {
    type Output = Quantity<T>;
    fn mul(self, rhs: Self) -> Self {
        Quantity::raw(self.value * rhs.value, self.dim * rhs.dim)
    }
}

impl<T: Scalar> Div for Quantity<T> {
    type Output = Quantity<T>;
    fn div(self, rhs: Self) -> Self {
        Quantity::raw(self.value / rhs.value, self.dim / rhs.dim)
    }
}

impl<T: Scalar> fmt::Debug for Quantity<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} [{}]", self.value, self.dim)
    }
}

impl<T: Scalar> fmt::Display for Quantity<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.value, self.dim)
    }
}
