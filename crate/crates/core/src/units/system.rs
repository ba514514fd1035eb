use std::fmt;
use std::str::FromStr;

use num_rational::Rational32;
use serde::{Deserialize, Serialize};

use super::dimension::{format_units, BaseDim};
use super::quantity::pow_rational;
use super::{ConstantsRegistry, Dimension, Quantity};
use crate::error::{EsfiError, Result};
use crate::scalar::{c, Scalar};

/// Unit systems a canonical quantity can be viewed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UnitSystem {
    /// SI units (J, V, m, s).
    Si,
    /// eV, V, nm, s: the canonical system.
    Evnm,
    /// Hartree atomic units (e = m_e = ħ = 4πε0 = 1).
    Au,
    /// Gaussian cgs, for charge and field only.
    Gaussian,
}

impl UnitSystem {
    pub fn name(self) -> &'static str {
        match self {
            UnitSystem::Si => "si",
            UnitSystem::Evnm => "evnm",
            UnitSystem::Au => "au",
            UnitSystem::Gaussian => "gaussian",
        }
    }
}

impl fmt::Display for UnitSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for UnitSystem {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "si" => Ok(UnitSystem::Si),
            "evnm" => Ok(UnitSystem::Evnm),
            "au" => Ok(UnitSystem::Au),
            "gaussian" => Ok(UnitSystem::Gaussian),
            other => Err(format!("unknown unit system '{other}'")),
        }
    }
}

/// A number expressed in some unit system, with a human-readable label.
#[derive(Debug, Clone, PartialEq)]
pub struct Converted<T> {
    pub value: T,
    pub units: String,
    pub system: UnitSystem,
}

/// Size of one canonical base unit measured in the target system.
fn base_scale<T: Scalar>(system: UnitSystem, base: BaseDim, reg: &ConstantsRegistry<T>) -> T {
    match (system, base) {
        (UnitSystem::Evnm, _) => T::one(),
        (UnitSystem::Si, BaseDim::Energy) => reg.ev_in_joules(),
        (UnitSystem::Si, BaseDim::Length) => c(1e-9),
        (UnitSystem::Si, _) => T::one(),
        (UnitSystem::Au, BaseDim::Energy) => reg.au_energy().recip(),
        (UnitSystem::Au, BaseDim::Voltage) => reg.au_voltage().recip(),
        (UnitSystem::Au, BaseDim::Length) => reg.au_length().recip(),
        (UnitSystem::Au, BaseDim::Time) => reg.au_time().recip(),
        // cgs: eV -> erg, nm -> cm
        (UnitSystem::Gaussian, BaseDim::Energy) => reg.ev_in_joules() * c(1e7),
        (UnitSystem::Gaussian, BaseDim::Length) => c(1e-7),
        (UnitSystem::Gaussian, _) => T::one(),
    }
}

/// Multiplier taking a canonical value of dimension `dim` into `system`.
///
/// Not defined for [`UnitSystem::Gaussian`] except on the Gaussian-form
/// dimensions; use [`convert`] for charge and field.
pub fn scale_factor<T: Scalar>(dim: Dimension, system: UnitSystem, reg: &ConstantsRegistry<T>) -> T {
    BaseDim::ALL.iter().fold(T::one(), |acc, &base| {
        let p = dim.exponent(base);
        if p == Rational32::from_integer(0) {
            acc
        } else {
            acc * pow_rational(base_scale(system, base, reg), p)
        }
    })
}

fn units_label(dim: Dimension, system: UnitSystem) -> String {
    match system {
        UnitSystem::Evnm => dim.to_string(),
        UnitSystem::Si => {
            if dim == Dimension::CHARGE {
                "C".into()
            } else if dim == Dimension::FIELD {
                "V m^-1".into()
            } else {
                format_units(&dim, ["J", "V", "m", "s"])
            }
        }
        UnitSystem::Au => {
            if dim.is_dimensionless() {
                "1".into()
            } else {
                "au".into()
            }
        }
        UnitSystem::Gaussian => {
            if dim == Dimension::CHARGE {
                "statC".into()
            } else {
                "statV cm^-1".into()
            }
        }
    }
}

/// Express a canonical quantity in another unit system.
pub fn convert<T: Scalar>(q: Quantity<T>, target: UnitSystem, reg: &ConstantsRegistry<T>) -> Result<Converted<T>> {
    if !q.value().is_finite() {
        return Err(EsfiError::NonFinite(q.value().to_f64_lossy()));
    }
    let value = match target {
        UnitSystem::Gaussian => {
            let gf = to_gaussian_form(q, reg)?;
            gf.value() * scale_factor(gf.dim(), UnitSystem::Gaussian, reg)
        }
        _ => q.value() * scale_factor(q.dim(), target, reg),
    };
    Ok(Converted {
        value,
        units: units_label(q.dim(), target),
        system: target,
    })
}

/// Inverse of [`convert`]: read a number given in `system` as a canonical
/// quantity of dimension `dim`.
pub fn from_system<T: Scalar>(
    value: T,
    dim: Dimension,
    system: UnitSystem,
    reg: &ConstantsRegistry<T>,
) -> Result<Quantity<T>> {
    if !value.is_finite() {
        return Err(EsfiError::NonFinite(value.to_f64_lossy()));
    }
    match system {
        UnitSystem::Gaussian => {
            let gdim = gaussian_form_dim(dim)?;
            let gf = Quantity::raw(value / scale_factor(gdim, UnitSystem::Gaussian, reg), gdim);
            if dim == Dimension::CHARGE {
                gaussian_charge_to_isq(gf, reg)
            } else {
                gaussian_field_to_isq(gf, reg)
            }
        }
        _ => Quantity::new(value / scale_factor(dim, system, reg), dim),
    }
}

fn gaussian_form_dim(dim: Dimension) -> Result<Dimension> {
    if dim == Dimension::CHARGE {
        Ok(Dimension::GAUSSIAN_CHARGE)
    } else if dim == Dimension::FIELD {
        Ok(Dimension::GAUSSIAN_FIELD)
    } else {
        Err(EsfiError::UnsupportedGaussianDimension(dim))
    }
}

fn to_gaussian_form<T: Scalar>(q: Quantity<T>, reg: &ConstantsRegistry<T>) -> Result<Quantity<T>> {
    if q.dim() == Dimension::CHARGE {
        isq_charge_to_gaussian(q, reg)
    } else if q.dim() == Dimension::FIELD {
        isq_field_to_gaussian(q, reg)
    } else {
        Err(EsfiError::UnsupportedGaussianDimension(q.dim()))
    }
}

/// F = F_s / (4πε0)^(1/2)
pub fn gaussian_field_to_isq<T: Scalar>(f_s: Quantity<T>, reg: &ConstantsRegistry<T>) -> Result<Quantity<T>> {
    let f_s = f_s.expect_dim(Dimension::GAUSSIAN_FIELD)?;
    Ok(f_s / reg.sqrt_four_pi_eps0())
}

/// F_s = (4πε0)^(1/2) F
pub fn isq_field_to_gaussian<T: Scalar>(f: Quantity<T>, reg: &ConstantsRegistry<T>) -> Result<Quantity<T>> {
    let f = f.expect_dim(Dimension::FIELD)?;
    Ok(f * reg.sqrt_four_pi_eps0())
}

/// e = e_s (4πε0)^(1/2)
pub fn gaussian_charge_to_isq<T: Scalar>(e_s: Quantity<T>, reg: &ConstantsRegistry<T>) -> Result<Quantity<T>> {
    let e_s = e_s.expect_dim(Dimension::GAUSSIAN_CHARGE)?;
    Ok(e_s * reg.sqrt_four_pi_eps0())
}

/// e_s = e / (4πε0)^(1/2)
pub fn isq_charge_to_gaussian<T: Scalar>(e: Quantity<T>, reg: &ConstantsRegistry<T>) -> Result<Quantity<T>> {
    let e = e.expect_dim(Dimension::CHARGE)?;
    Ok(e / reg.sqrt_four_pi_eps0())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::Symbol;

    fn reg() -> ConstantsRegistry<f64> {
        ConstantsRegistry::codata2010()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn au_values_of_defined_constants() {
        let r = reg();
        let au = |s| convert(r.get(s), UnitSystem::Au, &r).unwrap().value;
        assert!(rel(au(Symbol::Sigma), 2f64.sqrt()) < 1e-12);
        assert!(rel(au(Symbol::SecondFnConstant), 2f64.powf(2.5) / 3.0) < 1e-12);
        assert!(rel(au(Symbol::FieldIonizationConstant), 2f64.powf(4.5)) < 1e-12);
        assert!(
            rel(
                au(Symbol::AttemptFormulaConstant),
                2f64.powf(4.5) * std::f64::consts::PI
            ) < 1e-12
        );
        assert!(rel(au(Symbol::Epsilon0), 0.25 / std::f64::consts::PI) < 1e-12);
        assert!(rel(au(Symbol::OrbitalFrequencyH), 0.5 / std::f64::consts::PI) < 1e-12);
        assert!(rel(au(Symbol::IonizationEnergyH), 0.5) < 1e-12);
        for s in [
            Symbol::ElementaryCharge,
            Symbol::ElectronMass,
            Symbol::Hbar,
            Symbol::FourPiEpsilon0,
            Symbol::CoulombConstantH,
            Symbol::BohrRadius,
            Symbol::AngularFrequencyH,
        ] {
            assert!(rel(au(s), 1.0) < 1e-12, "{s:?}");
        }
    }

    #[test]
    fn si_values() {
        let r = reg();
        let si = |s| convert(r.get(s), UnitSystem::Si, &r).unwrap().value;
        assert!(rel(si(Symbol::ElectronMass), 9.109_382_91e-31) < 1e-14);
        assert!(rel(si(Symbol::Hbar), 1.054_571_726e-34) < 1e-14);
        assert!(rel(si(Symbol::Epsilon0), 8.854_187_817e-12) < 1e-14);
        assert!(rel(si(Symbol::ElementaryCharge), 1.602_176_565e-19) < 1e-14);
        // e²/4πε0 = 1.439964 eV nm expressed in J m
        assert!(rel(si(Symbol::CoulombConstantH), 2.307_077_35e-28) < 1e-8);
        assert!(rel(si(Symbol::BohrRadius), 5.291_772e-11) < 5e-7);
    }

    #[test]
    fn one_au_field_in_v_per_nm() {
        let r = reg();
        let q = from_system(1.0, Dimension::FIELD, UnitSystem::Au, &r).unwrap();
        let evnm = convert(q, UnitSystem::Evnm, &r).unwrap();
        assert!((evnm.value - 514.22).abs() < 0.01);
        assert_eq!(evnm.units, "V nm^-1");
    }

    #[test]
    fn gaussian_only_for_charge_and_field() {
        let r = reg();
        let err = convert(r.get(Symbol::BohrRadius), UnitSystem::Gaussian, &r).unwrap_err();
        assert!(matches!(err, EsfiError::UnsupportedGaussianDimension(_)));
        assert!(from_system(1.0, Dimension::LENGTH, UnitSystem::Gaussian, &r).is_err());
    }

    #[test]
    fn gaussian_cgs_values() {
        let r = reg();
        let e_s = convert(r.get(Symbol::ElementaryCharge), UnitSystem::Gaussian, &r).unwrap();
        // e·c/10 with c in cm/s
        assert!(rel(e_s.value, 1.602_176_565e-19 * 2.997_924_58e9) < 1e-9);
        assert_eq!(e_s.units, "statC");
        let one_v_per_nm = Quantity::new(1.0, Dimension::FIELD).unwrap();
        let f_s = convert(one_v_per_nm, UnitSystem::Gaussian, &r).unwrap();
        // 1 statV/cm = 29979.2458 V/m
        assert!(rel(f_s.value, 1e9 / 29_979.245_8) < 1e-8);
    }

    #[test]
    fn gaussian_field_definitional_inverse() {
        let r = reg();
        let f = Quantity::new(7.5, Dimension::FIELD).unwrap();
        let f_s = Quantity::new(r.sqrt_four_pi_eps0().value() * 7.5, Dimension::GAUSSIAN_FIELD).unwrap();
        let back = gaussian_field_to_isq(f_s, &r).unwrap();
        assert_eq!(back.dim(), Dimension::FIELD);
        assert!(rel(back.value(), f.value()) < 1e-15);
        assert!(gaussian_field_to_isq(f, &r).is_err());
    }

    #[test]
    fn gaussian_charge_round_trip() {
        let r = reg();
        let e = r.get(Symbol::ElementaryCharge);
        let e_s = isq_charge_to_gaussian(e, &r).unwrap();
        // e_s^2 = B_H in the canonical system
        assert!(rel(e_s.value() * e_s.value(), r.b_h()) < 1e-14);
        let back = gaussian_charge_to_isq(e_s, &r).unwrap();
        assert!(rel(back.value(), 1.0) < 1e-14);
    }

    #[test]
    fn parse_unit_system() {
        assert_eq!("AU".parse::<UnitSystem>().unwrap(), UnitSystem::Au);
        assert!("furlongs".parse::<UnitSystem>().is_err());
    }
}
