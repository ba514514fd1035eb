//! One-electron atom with nuclear charge Ze in its ground state.

use crate::error::{EsfiError, Result};
use crate::scalar::{c, Scalar};
use crate::units::ConstantsRegistry;

/// Hydrogenic atom and its zero-field properties, canonical units.
///
/// The charge number need not be integral. When an ionization energy is
/// supplied explicitly it replaces Z²·I_H everywhere I appears, while the
/// Coulomb constant B and the orbit radius stay tied to Z, so identities
/// such as I = B²σ²/4 no longer hold for overridden atoms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HydrogenicAtom<T> {
    z: T,
    ionization_energy: T,
    coulomb_b: T,
    orbit_radius: T,
    orbital_frequency: T,
    overridden: bool,
    registry: ConstantsRegistry<T>,
}

impl<T: Scalar> HydrogenicAtom<T> {
    pub fn new(z: T, registry: &ConstantsRegistry<T>) -> Result<Self> {
        Self::build(z, None, registry)
    }

    /// Atom with an ionization energy (eV) that differs from Z²·I_H.
    pub fn with_ionization_energy(z: T, ionization_energy: T, registry: &ConstantsRegistry<T>) -> Result<Self> {
        Self::build(z, Some(ionization_energy), registry)
    }

    pub fn build(z: T, ionization_override: Option<T>, registry: &ConstantsRegistry<T>) -> Result<Self> {
        if !(z > T::zero()) || !z.is_finite() {
            return Err(EsfiError::NonPositiveZ(z.to_f64_lossy()));
        }
        if let Some(i) = ionization_override {
            if !(i > T::zero()) || !i.is_finite() {
                return Err(EsfiError::NonPositiveIonizationEnergy(i.to_f64_lossy()));
            }
        }
        let coulomb_b = z * registry.b_h();
        let ionization_energy = ionization_override.unwrap_or_else(|| z * z * registry.i_h());
        let sigma = registry.sigma();
        // a_Z = 2/(σ²B)
        let orbit_radius = c::<T>(2.0) / (sigma * sigma * coulomb_b);
        let orbital_frequency = ionization_energy / (T::PI() * registry.hbar());
        Ok(HydrogenicAtom {
            z,
            ionization_energy,
            coulomb_b,
            orbit_radius,
            orbital_frequency,
            overridden: ionization_override.is_some(),
            registry: *registry,
        })
    }

    pub fn z(&self) -> T {
        self.z
    }

    /// I, eV.
    pub fn ionization_energy(&self) -> T {
        self.ionization_energy
    }

    /// B = Z e²/4πε0, eV nm.
    pub fn coulomb_b(&self) -> T {
        self.coulomb_b
    }

    /// a_Z = a_0/Z, nm.
    pub fn orbit_radius(&self) -> T {
        self.orbit_radius
    }

    /// ν_Z = I/πħ, Hz.
    pub fn orbital_frequency(&self) -> T {
        self.orbital_frequency
    }

    /// ω_Z = 2πν_Z, rad/s.
    pub fn angular_frequency(&self) -> T {
        c::<T>(2.0) * T::PI() * self.orbital_frequency
    }

    pub fn is_overridden(&self) -> bool {
        self.overridden
    }

    pub fn registry(&self) -> &ConstantsRegistry<T> {
        &self.registry
    }

    /// 2I/B, the inverse decay length of the zero-field wave-function
    /// (equals 1/a_Z unless I was overridden).
    pub fn decay_constant(&self) -> T {
        c::<T>(2.0) * self.ionization_energy / self.coulomb_b
    }

    /// Field at which the two zeros of the naive barrier I − eFz − B/z
    /// merge: F = I²/(4eB).
    pub fn naive_suppression_field(&self) -> T {
        let i = self.ionization_energy;
        i * i / (c::<T>(4.0) * self.registry.e() * self.coulomb_b)
    }

    /// Upper end of the deep-tunnelling domain: half the naive suppression
    /// field.
    pub fn guard_field(&self) -> T {
        c::<T>(0.5) * self.naive_suppression_field()
    }
}

/// Cartesian point from modified parabolic coordinates, in which the
/// electron leaves along +z and +η:
/// x = √(ηξ) cos φ, y = √(ηξ) sin φ, z = (η − ξ)/2.
pub fn parabolic_to_cartesian<T: Scalar>(eta: T, xi: T, phi: T) -> Result<(T, T, T)> {
    if eta < T::zero() || !eta.is_finite() {
        return Err(EsfiError::NegativeCoordinate(eta.to_f64_lossy()));
    }
    if xi < T::zero() || !xi.is_finite() {
        return Err(EsfiError::NegativeCoordinate(xi.to_f64_lossy()));
    }
    let rho = (eta * xi).sqrt();
    let (s, co) = phi.sin_cos();
    Ok((rho * co, rho * s, (eta - xi) / c(2.0)))
}

/// η on the symmetry axis (ξ = 0) for a point at height z ≥ 0: η = 2z.
pub fn cartesian_axis_to_parabolic<T: Scalar>(z: T) -> Result<T> {
    if z < T::zero() || !z.is_finite() {
        return Err(EsfiError::NegativeCoordinate(z.to_f64_lossy()));
    }
    Ok(c::<T>(2.0) * z)
}
