use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{EsfiError, Result};
use crate::hydrogenic::HydrogenicAtom;
use crate::scalar::{c, Scalar};

/// Shape of the one-dimensional barrier the electron tunnels through.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MotiveKind {
    /// 𝕄(η) = I/4 − eFη/8 − B/4η − 1/(4σ²η²), along the parabolic coordinate η.
    TransformedParabolic,
    /// 𝕄(z) = I − eFz − Ze²/(8πε0 z) − ħ²/(8m_e z²), along the field axis.
    TransformedCartesian,
    /// M(z) = I − eFz − Ze²/(4πε0 z).
    Naive1D,
}

impl MotiveKind {
    pub const ALL: [MotiveKind; 3] = [
        MotiveKind::TransformedParabolic,
        MotiveKind::TransformedCartesian,
        MotiveKind::Naive1D,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MotiveKind::TransformedParabolic => "transformed-parabolic",
            MotiveKind::TransformedCartesian => "transformed-cartesian",
            MotiveKind::Naive1D => "naive-1d",
        }
    }
}

impl fmt::Display for MotiveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MotiveKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        MotiveKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown motive model '{s}'"))
    }
}

/// A motive-energy curve for one atom in one field (V/nm). Coordinates are
/// in nm and energies in eV.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MotiveModel<T> {
    kind: MotiveKind,
    atom: HydrogenicAtom<T>,
    field: T,
    // Coefficients of  c0 − c1·x − c2/x − c3/x².
    c0: T,
    c1: T,
    c2: T,
    c3: T,
}

impl<T: Scalar> MotiveModel<T> {
    pub fn new(kind: MotiveKind, atom: &HydrogenicAtom<T>, field: T) -> Result<Self> {
        if !field.is_finite() {
            return Err(EsfiError::NonFinite(field.to_f64_lossy()));
        }
        if field <= T::zero() {
            return Err(EsfiError::NonPositiveField(field.to_f64_lossy()));
        }
        let reg = atom.registry();
        let i = atom.ionization_energy();
        let e = reg.e();
        let (c0, c1, c2, c3) = match kind {
            MotiveKind::TransformedParabolic => {
                let s = reg.sigma();
                (
                    i / c(4.0),
                    e * field / c(8.0),
                    atom.coulomb_b() / c(4.0),
                    T::one() / (c::<T>(4.0) * s * s),
                )
            }
            MotiveKind::TransformedCartesian => {
                let h = reg.hbar();
                (
                    i,
                    e * field,
                    atom.z() * e * e / (c::<T>(8.0) * T::PI() * reg.epsilon_0()),
                    h * h / (c::<T>(8.0) * reg.m_e()),
                )
            }
            MotiveKind::Naive1D => (
                i,
                e * field,
                atom.z() * e * e / (c::<T>(4.0) * T::PI() * reg.epsilon_0()),
                T::zero(),
            ),
        };
        Ok(MotiveModel {
            kind,
            atom: *atom,
            field,
            c0,
            c1,
            c2,
            c3,
        })
    }

    pub fn kind(&self) -> MotiveKind {
        self.kind
    }

    pub fn atom(&self) -> &HydrogenicAtom<T> {
        &self.atom
    }

    pub fn field(&self) -> T {
        self.field
    }

    /// Motive energy at `coord` > 0.
    pub fn motive(&self, coord: T) -> Result<T> {
        if !(coord > T::zero()) || !coord.is_finite() {
            return Err(EsfiError::NonPositiveCoordinate(coord.to_f64_lossy()));
        }
        Ok(self.eval(coord))
    }

    pub(crate) fn eval(&self, x: T) -> T {
        let r = T::one() / x;
        self.c0 - self.c1 * x - r * (self.c2 + self.c3 * r)
    }

    /// dM/dx, strictly decreasing in x.
    pub(crate) fn slope(&self, x: T) -> T {
        let r = T::one() / x;
        -self.c1 + r * r * (self.c2 + c::<T>(2.0) * self.c3 * r)
    }

    /// The parabolic coordinate η corresponding to a model coordinate on
    /// the field axis.
    pub fn to_eta(&self, coord: T) -> T {
        match self.kind {
            MotiveKind::TransformedParabolic => coord,
            _ => c::<T>(2.0) * coord,
        }
    }

    /// Search interval for the peak and the turning points:
    /// (a_Z/100, 10·(2I/eF)) in η, halved for the axis coordinate.
    pub(crate) fn search_range(&self) -> (T, T) {
        let reg = self.atom.registry();
        let lo = self.atom.orbit_radius() / c(100.0);
        let hi = c::<T>(20.0) * self.atom.ionization_energy() / (reg.e() * self.field);
        match self.kind {
            MotiveKind::TransformedParabolic => (lo, hi),
            _ => (lo / c(2.0), hi / c(2.0)),
        }
    }

    pub(crate) fn energy_scale(&self) -> T {
        self.c0
    }
}
