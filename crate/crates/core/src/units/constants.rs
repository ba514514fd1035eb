//! CODATA-2010 fundamentals and the defined constants built from them.
//!
//! Everything is held in the canonical field-emission system (eV, V, nm, s),
//! in which the elementary charge is exactly 1 eV/V.

use num_rational::Rational32;
use serde::{Deserialize, Serialize};

use super::{Dimension, Quantity};
use crate::scalar::{c, Scalar};

/// CODATA-2010 SI values. The electronvolt in joules is numerically equal to
/// the elementary charge in coulombs.
pub mod codata2010 {
    pub const ELEMENTARY_CHARGE_C: f64 = 1.602_176_565e-19;
    pub const ELECTRONVOLT_J: f64 = 1.602_176_565e-19;
    pub const ELECTRON_MASS_KG: f64 = 9.109_382_91e-31;
    pub const HBAR_J_S: f64 = 1.054_571_726e-34;
    pub const EPSILON_0_F_PER_M: f64 = 8.854_187_817e-12;
}

/// Every constant the registry can report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Symbol {
    Electronvolt,
    ElementaryCharge,
    ElectronMass,
    Hbar,
    Epsilon0,
    FourPiEpsilon0,
    CoulombConstantH,
    BohrRadius,
    OrbitalFrequencyH,
    AngularFrequencyH,
    IonizationEnergyH,
    Sigma,
    SecondFnConstant,
    FieldIonizationConstant,
    AttemptFormulaConstant,
}

impl Symbol {
    /// Table order used by dumps.
    pub const ALL: [Symbol; 15] = [
        Symbol::Electronvolt,
        Symbol::ElementaryCharge,
        Symbol::ElectronMass,
        Symbol::Hbar,
        Symbol::Epsilon0,
        Symbol::FourPiEpsilon0,
        Symbol::CoulombConstantH,
        Symbol::BohrRadius,
        Symbol::OrbitalFrequencyH,
        Symbol::AngularFrequencyH,
        Symbol::IonizationEnergyH,
        Symbol::Sigma,
        Symbol::SecondFnConstant,
        Symbol::FieldIonizationConstant,
        Symbol::AttemptFormulaConstant,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Symbol::Electronvolt => "eV",
            Symbol::ElementaryCharge => "e",
            Symbol::ElectronMass => "m_e",
            Symbol::Hbar => "hbar",
            Symbol::Epsilon0 => "epsilon_0",
            Symbol::FourPiEpsilon0 => "4pi_epsilon_0",
            Symbol::CoulombConstantH => "B_H",
            Symbol::BohrRadius => "a_0",
            Symbol::OrbitalFrequencyH => "nu_0",
            Symbol::AngularFrequencyH => "omega_0",
            Symbol::IonizationEnergyH => "I_H",
            Symbol::Sigma => "sigma",
            Symbol::SecondFnConstant => "b",
            Symbol::FieldIonizationConstant => "C_FI",
            Symbol::AttemptFormulaConstant => "pi_hbar_C_FI",
        }
    }

    pub fn from_name(name: &str) -> Option<Symbol> {
        Symbol::ALL.into_iter().find(|s| s.name() == name)
    }

    pub fn dimension(self) -> Dimension {
        match self {
            Symbol::Electronvolt | Symbol::IonizationEnergyH => Dimension::ENERGY,
            Symbol::ElementaryCharge => Dimension::CHARGE,
            Symbol::ElectronMass => Dimension::MASS,
            Symbol::Hbar => Dimension::ACTION,
            Symbol::Epsilon0 | Symbol::FourPiEpsilon0 => Dimension::PERMITTIVITY,
            Symbol::CoulombConstantH => Dimension::ENERGY_LENGTH,
            Symbol::BohrRadius => Dimension::LENGTH,
            Symbol::OrbitalFrequencyH | Symbol::AngularFrequencyH => Dimension::FREQUENCY,
            // eV^-1/2 nm^-1
            Symbol::Sigma => Dimension::halves(-1, 0, -2, 0),
            // eV^-3/2 V nm^-1
            Symbol::SecondFnConstant | Symbol::AttemptFormulaConstant => Dimension::halves(-3, 2, -2, 0),
            // eV^-5/2 V nm^-1 s^-1
            Symbol::FieldIonizationConstant => Dimension::halves(-5, 2, -2, -2),
        }
    }

    /// Unit label in the canonical system, as printed in the reference table.
    pub fn evnm_units(self) -> &'static str {
        match self {
            Symbol::Electronvolt | Symbol::IonizationEnergyH => "eV",
            Symbol::ElementaryCharge => "eV V^-1",
            Symbol::ElectronMass => "eV nm^-2 s^2",
            Symbol::Hbar => "eV s",
            Symbol::Epsilon0 | Symbol::FourPiEpsilon0 => "eV V^-2 nm^-1",
            Symbol::CoulombConstantH => "eV nm",
            Symbol::BohrRadius => "nm",
            Symbol::OrbitalFrequencyH => "Hz",
            Symbol::AngularFrequencyH => "rad/s",
            Symbol::Sigma => "eV^-1/2 nm^-1",
            Symbol::SecondFnConstant | Symbol::AttemptFormulaConstant => "eV^-3/2 V nm^-1",
            Symbol::FieldIonizationConstant => "eV^-5/2 V nm^-1 s^-1",
        }
    }

    /// SI unit label, or `None` for constants not customarily quoted in SI.
    pub fn si_units(self) -> Option<&'static str> {
        match self {
            Symbol::Electronvolt => Some("J"),
            Symbol::ElementaryCharge => Some("C"),
            Symbol::ElectronMass => Some("kg"),
            Symbol::Hbar => Some("J s"),
            Symbol::Epsilon0 | Symbol::FourPiEpsilon0 => Some("F m^-1"),
            Symbol::CoulombConstantH => Some("J m"),
            Symbol::BohrRadius => Some("m"),
            Symbol::OrbitalFrequencyH => Some("Hz"),
            Symbol::AngularFrequencyH => Some("rad/s"),
            Symbol::IonizationEnergyH
            | Symbol::Sigma
            | Symbol::SecondFnConstant
            | Symbol::FieldIonizationConstant
            | Symbol::AttemptFormulaConstant => None,
        }
    }

    /// Whether an atomic-units value is meaningful (the eV itself has none).
    pub fn has_au_value(self) -> bool {
        self != Symbol::Electronvolt
    }

    /// Fundamentals and their close relatives carry eight significant
    /// figures in SI; everything else seven.
    pub fn is_fundamental(self) -> bool {
        matches!(
            self,
            Symbol::Electronvolt
                | Symbol::ElementaryCharge
                | Symbol::ElectronMass
                | Symbol::Hbar
                | Symbol::Epsilon0
                | Symbol::FourPiEpsilon0
                | Symbol::CoulombConstantH
        )
    }
}

/// Immutable set of fundamental and derived constants in the canonical
/// system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantsRegistry<T> {
    ev_in_joules: T,
    e: T,
    m_e: T,
    hbar: T,
    epsilon_0: T,

    four_pi_eps0: T,
    b_h: T,
    a_0: T,
    i_h: T,
    nu_0: T,
    omega_0: T,
    sigma: T,
    fn_b: T,
    c_fi: T,
    pi_hbar_c_fi: T,
}

impl<T: Scalar> Default for ConstantsRegistry<T> {
    fn default() -> Self {
        Self::codata2010()
    }
}

impl<T: Scalar> ConstantsRegistry<T> {
    /// Build the registry from the compiled-in CODATA-2010 fundamentals.
    pub fn codata2010() -> Self {
        use codata2010::*;
        let ev_in_joules: T = c(ELECTRONVOLT_J);
        let e_coulomb: T = c(ELEMENTARY_CHARGE_C);

        // 1 kg = 1 J s^2 m^-2 = (1/eV_J) eV s^2 / (1e18 nm^2)
        let m_e = c::<T>(ELECTRON_MASS_KG) / (ev_in_joules * c(1e18));
        let hbar = c::<T>(HBAR_J_S) / ev_in_joules;
        // 1 F/m = 1 C V^-1 m^-1 = (1/e_C) eV V^-2 / (1e9 nm)
        let epsilon_0 = c::<T>(EPSILON_0_F_PER_M) / (e_coulomb * c(1e9));
        let e = T::one();

        let pi = T::PI();
        let two = c::<T>(2.0);
        let four_pi_eps0 = c::<T>(4.0) * pi * epsilon_0;
        let b_h = e * e / four_pi_eps0;
        let a_0 = four_pi_eps0 * hbar * hbar / (e * e * m_e);
        let i_h = e * e / (two * four_pi_eps0 * a_0);
        let nu_0 = i_h / (pi * hbar);
        let omega_0 = two * pi * nu_0;
        let sigma = (two * m_e).sqrt() / hbar;
        let fn_b = c::<T>(4.0) * sigma / (c::<T>(3.0) * e);
        // 2^(9/2) m_e^(1/2) / (e hbar^2)
        let c_fi = c::<T>(16.0) * two.sqrt() * m_e.sqrt() / (e * hbar * hbar);
        let pi_hbar_c_fi = pi * hbar * c_fi;

        ConstantsRegistry {
            ev_in_joules,
            e,
            m_e,
            hbar,
            epsilon_0,
            four_pi_eps0,
            b_h,
            a_0,
            i_h,
            nu_0,
            omega_0,
            sigma,
            fn_b,
            c_fi,
            pi_hbar_c_fi,
        }
    }

    pub fn value(&self, symbol: Symbol) -> T {
        match symbol {
            Symbol::Electronvolt => T::one(),
            Symbol::ElementaryCharge => self.e,
            Symbol::ElectronMass => self.m_e,
            Symbol::Hbar => self.hbar,
            Symbol::Epsilon0 => self.epsilon_0,
            Symbol::FourPiEpsilon0 => self.four_pi_eps0,
            Symbol::CoulombConstantH => self.b_h,
            Symbol::BohrRadius => self.a_0,
            Symbol::OrbitalFrequencyH => self.nu_0,
            Symbol::AngularFrequencyH => self.omega_0,
            Symbol::IonizationEnergyH => self.i_h,
            Symbol::Sigma => self.sigma,
            Symbol::SecondFnConstant => self.fn_b,
            Symbol::FieldIonizationConstant => self.c_fi,
            Symbol::AttemptFormulaConstant => self.pi_hbar_c_fi,
        }
    }

    pub fn get(&self, symbol: Symbol) -> Quantity<T> {
        Quantity::raw(self.value(symbol), symbol.dimension())
    }

    /// The electronvolt expressed in joules; the only link to SI energy.
    pub fn ev_in_joules(&self) -> T {
        self.ev_in_joules
    }

    pub fn e(&self) -> T {
        self.e
    }
    pub fn m_e(&self) -> T {
        self.m_e
    }
    pub fn hbar(&self) -> T {
        self.hbar
    }
    pub fn epsilon_0(&self) -> T {
        self.epsilon_0
    }
    pub fn four_pi_eps0(&self) -> T {
        self.four_pi_eps0
    }
    pub fn b_h(&self) -> T {
        self.b_h
    }
    pub fn a_0(&self) -> T {
        self.a_0
    }
    pub fn i_h(&self) -> T {
        self.i_h
    }
    pub fn nu_0(&self) -> T {
        self.nu_0
    }
    pub fn omega_0(&self) -> T {
        self.omega_0
    }
    pub fn sigma(&self) -> T {
        self.sigma
    }
    /// Second Fowler-Nordheim constant b.
    pub fn fn_b(&self) -> T {
        self.fn_b
    }
    /// Field ionization constant C_FI.
    pub fn c_fi(&self) -> T {
        self.c_fi
    }
    pub fn pi_hbar_c_fi(&self) -> T {
        self.pi_hbar_c_fi
    }

    /// Atomic unit of energy (Hartree) in eV: m_e e^4 / (4πε0)^2 ħ^2.
    pub fn au_energy(&self) -> T {
        let e2 = self.e * self.e;
        self.m_e * e2 * e2 / (self.four_pi_eps0 * self.four_pi_eps0 * self.hbar * self.hbar)
    }

    /// Atomic unit of length (Bohr radius) in nm.
    pub fn au_length(&self) -> T {
        self.a_0
    }

    /// Atomic unit of time ħ/E_h in s.
    pub fn au_time(&self) -> T {
        self.hbar / self.au_energy()
    }

    /// Atomic unit of electric potential E_h/e in V.
    pub fn au_voltage(&self) -> T {
        self.au_energy() / self.e
    }

    /// Atomic unit of field strength E_h/(e a_0) in V/nm (about 514.2).
    pub fn au_field(&self) -> T {
        self.au_voltage() / self.a_0
    }

    /// `(4πε0)^(1/2)` as a quantity, the Gaussian/ISQ bridge.
    pub fn sqrt_four_pi_eps0(&self) -> Quantity<T> {
        self.get(Symbol::FourPiEpsilon0).powr(Rational32::new(1, 2))
    }
}
