use std::fmt;
use std::ops::{Div, Mul};

use num_rational::Rational32;
use num_traits::{One, Zero};

/// Base dimensions of the canonical eV / V / nm / s system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseDim {
    Energy,
    Voltage,
    Length,
    Time,
}

impl BaseDim {
    pub const ALL: [BaseDim; 4] = [BaseDim::Energy, BaseDim::Voltage, BaseDim::Length, BaseDim::Time];

    fn index(self) -> usize {
        match self {
            BaseDim::Energy => 0,
            BaseDim::Voltage => 1,
            BaseDim::Length => 2,
            BaseDim::Time => 3,
        }
    }
}

/// Exponents over {energy, voltage, length, time}, kept as exact rationals.
///
/// Half-integer exponents show up as soon as square roots of masses or
/// energies enter (σ is eV^-1/2 nm^-1).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dimension {
    exps: [Rational32; 4],
}

const fn r(n: i32) -> Rational32 {
    Rational32::new_raw(n, 1)
}

const fn half(n: i32) -> Rational32 {
    Rational32::new_raw(n, 2)
}

impl Dimension {
    pub const fn new(energy: Rational32, voltage: Rational32, length: Rational32, time: Rational32) -> Self {
        Dimension {
            exps: [energy, voltage, length, time],
        }
    }

    /// Integer exponents.
    pub const fn ints(energy: i32, voltage: i32, length: i32, time: i32) -> Self {
        Self::new(r(energy), r(voltage), r(length), r(time))
    }

    /// Exponents given in units of one half (left unreduced; comparisons
    /// and formatting work on values).
    pub const fn halves(energy: i32, voltage: i32, length: i32, time: i32) -> Self {
        Self::new(half(energy), half(voltage), half(length), half(time))
    }

    pub const DIMENSIONLESS: Dimension = Dimension::ints(0, 0, 0, 0);
    pub const ENERGY: Dimension = Dimension::ints(1, 0, 0, 0);
    pub const VOLTAGE: Dimension = Dimension::ints(0, 1, 0, 0);
    pub const LENGTH: Dimension = Dimension::ints(0, 0, 1, 0);
    pub const TIME: Dimension = Dimension::ints(0, 0, 0, 1);
    pub const FREQUENCY: Dimension = Dimension::ints(0, 0, 0, -1);
    /// eV V^-1
    pub const CHARGE: Dimension = Dimension::ints(1, -1, 0, 0);
    /// V nm^-1
    pub const FIELD: Dimension = Dimension::ints(0, 1, -1, 0);
    /// eV nm^-2 s^2
    pub const MASS: Dimension = Dimension::ints(1, 0, -2, 2);
    /// eV s
    pub const ACTION: Dimension = Dimension::ints(1, 0, 0, 1);
    /// eV V^-2 nm^-1
    pub const PERMITTIVITY: Dimension = Dimension::ints(1, -2, -1, 0);
    /// eV nm
    pub const ENERGY_LENGTH: Dimension = Dimension::ints(1, 0, 1, 0);
    /// Gaussian-form charge e/(4πε0)^1/2: eV^1/2 nm^1/2
    pub const GAUSSIAN_CHARGE: Dimension = Dimension::halves(1, 0, 1, 0);
    /// Gaussian-form field (4πε0)^1/2 F: eV^1/2 nm^-3/2
    pub const GAUSSIAN_FIELD: Dimension = Dimension::halves(1, 0, -3, 0);

    pub fn exponent(&self, base: BaseDim) -> Rational32 {
        self.exps[base.index()].reduced()
    }

    pub fn is_dimensionless(&self) -> bool {
        self.exps.iter().all(Zero::is_zero)
    }

    /// Raise to a rational power.
    pub fn pow(self, p: Rational32) -> Self {
        let mut exps = self.exps;
        for e in &mut exps {
            *e *= p;
        }
        Dimension { exps }
    }

    pub fn recip(self) -> Self {
        self.pow(-Rational32::one())
    }
}

impl Mul for Dimension {
    type Output = Dimension;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Dimension) -> Dimension {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(rhs.exps) {
            *e += o;
        }
        Dimension { exps }
    }
}

impl Div for Dimension {
    type Output = Dimension;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Dimension) -> Dimension {
        self * rhs.recip()
    }
}

/// Render a unit string such as `eV^-3/2 V nm^-1` given per-base symbols.
pub(crate) fn format_units(dim: &Dimension, symbols: [&str; 4]) -> String {
    let mut parts = Vec::new();
    for (exp, sym) in dim.exps.iter().map(Rational32::reduced).zip(symbols) {
        if exp.is_zero() {
            continue;
        }
        if exp.is_one() {
            parts.push(sym.to_string());
        } else if exp.is_integer() {
            parts.push(format!("{sym}^{}", exp.numer()));
        } else {
            parts.push(format!("{sym}^{}/{}", exp.numer(), exp.denom()));
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_units(self, ["eV", "V", "nm", "s"]))
    }
}

impl fmt::Debug for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dimension({self})")
    }
}
