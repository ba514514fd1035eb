//! Closed-form rate constants for ground-state hydrogenic atoms.
//!
//! The central result is
//!
//! ```text
//! K_e = C_FI · (I^(5/2) / F) · exp(−b · I^(3/2) / F)
//! ```
//!
//! together with its Z-explicit form, the Gaussian-system form written out
//! in fundamentals, and the attempt-frequency decompositions
//! K_e = ν_Z · D_eff = ω_Z · T.
//!
//! Rates are returned with their natural logarithm alongside, since K_e
//! underflows `f64` for fields below roughly a thousandth of an atomic unit.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{EsfiError, Result};
use crate::hydrogenic::HydrogenicAtom;
use crate::scalar::{c, Scalar};
use crate::units::{convert, scale_factor, ConstantsRegistry, Dimension, Symbol, UnitSystem};

/// Which formula or barrier model produced a rate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Ll,
    ZForm,
    Gaussian,
    JwkbParabolic,
    JwkbCartesian,
    JwkbNaive,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Ll,
        Method::ZForm,
        Method::Gaussian,
        Method::JwkbParabolic,
        Method::JwkbCartesian,
        Method::JwkbNaive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Ll => "ll",
            Method::ZForm => "z-form",
            Method::Gaussian => "gaussian",
            Method::JwkbParabolic => "jwkb-parabolic",
            Method::JwkbCartesian => "jwkb-cartesian",
            Method::JwkbNaive => "jwkb-naive",
        }
    }

    pub fn is_jwkb(self) -> bool {
        matches!(self, Method::JwkbParabolic | Method::JwkbCartesian | Method::JwkbNaive)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method '{s}'"))
    }
}

/// Tunnelling regime a result was evaluated in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    /// Below the guard field.
    Deep,
    /// At or above the guard, evaluated on request.
    Extrapolated,
    /// Effective escape probability exceeds one.
    Shallow,
}

/// What to do with fields at or above the deep-tunnelling guard.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Guard {
    #[default]
    Enforce,
    Extrapolate,
}

/// A rate constant with its decomposition.
///
/// `k_e` and `pre_exponential` are in inverse time of `unit_system`;
/// the remaining fields are dimensionless.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RateResult<T> {
    #[serde(rename = "K_e")]
    pub k_e: T,
    /// ln K_e, finite even where `k_e` underflows.
    #[serde(rename = "ln_K_e")]
    pub ln_k_e: T,
    pub pre_exponential: T,
    pub exponent: T,
    #[serde(rename = "D_eff")]
    pub d_eff: T,
    #[serde(rename = "T")]
    pub barrier_term: T,
    pub method: Method,
    pub unit_system: UnitSystem,
    pub regime: Regime,
}

impl<T: Scalar> RateResult<T> {
    /// Re-express the rate fields in another unit system.
    pub fn in_system(mut self, target: UnitSystem, reg: &ConstantsRegistry<T>) -> Result<Self> {
        if target == UnitSystem::Gaussian {
            return Err(EsfiError::UnsupportedGaussianDimension(Dimension::FREQUENCY));
        }
        let k =
            scale_factor(Dimension::FREQUENCY, target, reg) / scale_factor(Dimension::FREQUENCY, self.unit_system, reg);
        self.k_e = self.k_e * k;
        self.pre_exponential = self.pre_exponential * k;
        self.ln_k_e = self.ln_k_e + k.ln();
        self.unit_system = target;
        Ok(self)
    }
}

/// Validate a field magnitude against the guard and classify it.
pub(crate) fn classify_field<T: Scalar>(field: T, guard_field: T, guard: Guard) -> Result<Regime> {
    if !field.is_finite() {
        return Err(EsfiError::NonFinite(field.to_f64_lossy()));
    }
    if field <= T::zero() {
        return Err(EsfiError::NonPositiveField(field.to_f64_lossy()));
    }
    if field >= guard_field {
        return match guard {
            Guard::Enforce => Err(EsfiError::ShallowTunnellingRegime {
                field: field.to_f64_lossy(),
                guard: guard_field.to_f64_lossy(),
            }),
            Guard::Extrapolate => Ok(Regime::Extrapolated),
        };
    }
    Ok(Regime::Deep)
}

/// b·I^(3/2)/F
pub fn ll_exponent<T: Scalar>(atom: &HydrogenicAtom<T>, field: T) -> T {
    let i = atom.ionization_energy();
    atom.registry().fn_b() * i * i.sqrt() / field
}

/// ln K_e of the closed-form rate, without any domain checks.
pub fn ln_rate_ll<T: Scalar>(atom: &HydrogenicAtom<T>, field: T) -> T {
    let i = atom.ionization_energy();
    let pre = atom.registry().c_fi() * i * i * i.sqrt() / field;
    pre.ln() - ll_exponent(atom, field)
}

/// Closed-form rate K_e = C_FI·(I^(5/2)/F)·exp(−b·I^(3/2)/F), field in V/nm.
pub fn rate_ll<T: Scalar>(atom: &HydrogenicAtom<T>, field: T, guard: Guard) -> Result<RateResult<T>> {
    let regime = classify_field(field, atom.guard_field(), guard)?;
    let reg = atom.registry();
    let i = atom.ionization_energy();
    let i_32 = i * i.sqrt();
    let exponent = ll_exponent(atom, field);
    let damping = (-exponent).exp();
    let pre_exponential = reg.c_fi() * i * i_32 / field;
    Ok(RateResult {
        k_e: pre_exponential * damping,
        ln_k_e: pre_exponential.ln() - exponent,
        pre_exponential,
        exponent,
        d_eff: reg.pi_hbar_c_fi() * i_32 / field * damping,
        barrier_term: atom.decay_constant() * c::<T>(8.0) * i / (reg.e() * field) * damping,
        method: Method::Ll,
        unit_system: UnitSystem::Evnm,
        regime,
    })
}

/// The handful of constants the Z-explicit formula needs, expressed in one
/// unit system. Atomic-units values come out of the general conversion
/// machinery rather than being typed in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FormulaConstants<T> {
    pub c_fi: T,
    pub fn_b: T,
    pub i_h: T,
    pub b_h: T,
    pub e: T,
    pub nu_0: T,
    pub system: UnitSystem,
}

impl<T: Scalar> FormulaConstants<T> {
    pub fn new(reg: &ConstantsRegistry<T>, system: UnitSystem) -> Result<Self> {
        let get = |s: Symbol| convert(reg.get(s), system, reg).map(|v| v.value);
        Ok(FormulaConstants {
            c_fi: get(Symbol::FieldIonizationConstant)?,
            fn_b: get(Symbol::SecondFnConstant)?,
            i_h: get(Symbol::IonizationEnergyH)?,
            b_h: get(Symbol::CoulombConstantH)?,
            e: get(Symbol::ElementaryCharge)?,
            nu_0: get(Symbol::OrbitalFrequencyH)?,
            system,
        })
    }

    /// Guard field (half the naive suppression field) for charge number Z.
    pub fn guard_field(&self, z: T) -> T {
        let i = z * z * self.i_h;
        c::<T>(0.125) * i * i / (self.e * z * self.b_h)
    }
}

/// K_e = C_FI·Z⁵·I_H^(5/2)·F^(−1)·exp(−b·Z³·I_H^(3/2)/F), with the field
/// and the result in `consts.system`.
pub fn rate_z_form<T: Scalar>(consts: &FormulaConstants<T>, z: T, field: T, guard: Guard) -> Result<RateResult<T>> {
    if !(z > T::zero()) || !z.is_finite() {
        return Err(EsfiError::NonPositiveZ(z.to_f64_lossy()));
    }
    let regime = classify_field(field, consts.guard_field(z), guard)?;
    let z2 = z * z;
    let z3 = z2 * z;
    let z5 = z3 * z2;
    let ih_32 = consts.i_h * consts.i_h.sqrt();
    let ih_52 = ih_32 * consts.i_h;
    let exponent = consts.fn_b * z3 * ih_32 / field;
    let pre_exponential = consts.c_fi * z5 * ih_52 / field;
    let damping = (-exponent).exp();
    let k_e = pre_exponential * damping;
    let nu_z = z2 * consts.nu_0;
    let i = z2 * consts.i_h;
    let b = z * consts.b_h;
    Ok(RateResult {
        k_e,
        ln_k_e: pre_exponential.ln() - exponent,
        pre_exponential,
        exponent,
        d_eff: pre_exponential / nu_z * damping,
        barrier_term: c::<T>(2.0) * i / b * c::<T>(8.0) * i / (consts.e * field) * damping,
        method: Method::ZForm,
        unit_system: consts.system,
        regime,
    })
}

/// Hydrogen (Z = 1) rate written directly in fundamentals:
/// K_e = {4 m_e³ e⁹ / ((4πε0)⁵ ħ⁷ F)} · exp[−(2/3) m_e² e⁵ / ((4πε0)³ ħ⁴ F)].
pub fn rate_gaussian_check<T: Scalar>(reg: &ConstantsRegistry<T>, field: T, guard: Guard) -> Result<RateResult<T>> {
    let (pre_coeff, exp_coeff) = gaussian_form_coefficients(reg);
    let i_h = reg.i_h();
    let guard_field = c::<T>(0.125) * i_h * i_h / (reg.e() * reg.b_h());
    let regime = classify_field(field, guard_field, guard)?;
    let exponent = exp_coeff / field;
    let pre_exponential = pre_coeff / field;
    let damping = (-exponent).exp();
    let k_e = pre_exponential * damping;
    Ok(RateResult {
        k_e,
        ln_k_e: pre_exponential.ln() - exponent,
        pre_exponential,
        exponent,
        d_eff: k_e / reg.nu_0(),
        barrier_term: k_e / reg.omega_0(),
        method: Method::Gaussian,
        unit_system: UnitSystem::Evnm,
        regime,
    })
}

/// Coefficients of F⁻¹ in the pre-exponential and in the exponent of the
/// fundamentals-only hydrogen formula.
pub fn gaussian_form_coefficients<T: Scalar>(reg: &ConstantsRegistry<T>) -> (T, T) {
    let m = reg.m_e();
    let e = reg.e();
    let k = reg.four_pi_eps0();
    let h = reg.hbar();
    let pre = c::<T>(4.0) * m.powi(3) * e.powi(9) / (k.powi(5) * h.powi(7));
    let expo = c::<T>(2.0) / c(3.0) * m.powi(2) * e.powi(5) / (k.powi(3) * h.powi(4));
    (pre, expo)
}

/// D_eff = πħC_FI·(I^(3/2)/F)·exp(−b·I^(3/2)/F) = K_e/ν_Z.
pub fn effective_escape_probability<T: Scalar>(atom: &HydrogenicAtom<T>, field: T, guard: Guard) -> Result<T> {
    rate_ll(atom, field, guard).map(|r| r.d_eff)
}

/// T = (2I/B)·(8I/eF)·exp(−b·I^(3/2)/F), dimensionless.
pub fn barrier_term<T: Scalar>(atom: &HydrogenicAtom<T>, field: T, guard: Guard) -> Result<T> {
    rate_ll(atom, field, guard).map(|r| r.barrier_term)
}

/// P_g = D_eff/T = 2π.
pub fn geometric_prefactor<T: Scalar>() -> T {
    c::<T>(2.0) * T::PI()
}

/// Where η0 sits relative to the heuristic window a_Z ≪ η0 ≪ 2I/eF.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Eta0Window {
    Inside,
    /// Closer to the nucleus than 5·a_Z.
    TooClose,
    /// Beyond 0.2·(2I/eF).
    TooFar,
}

pub fn eta0_window<T: Scalar>(atom: &HydrogenicAtom<T>, field: T, eta0: T) -> Eta0Window {
    let outer = c::<T>(2.0) * atom.ionization_energy() / (atom.registry().e() * field);
    if eta0 < c::<T>(5.0) * atom.orbit_radius() {
        Eta0Window::TooClose
    } else if eta0 > c::<T>(0.2) * outer {
        Eta0Window::TooFar
    } else {
        Eta0Window::Inside
    }
}

fn check_eta0_inputs<T: Scalar>(atom: &HydrogenicAtom<T>, field: T, eta0: T) -> Result<()> {
    if !(field > T::zero()) || !field.is_finite() {
        return Err(EsfiError::NonPositiveField(field.to_f64_lossy()));
    }
    if !(eta0 > T::zero()) || !eta0.is_finite() {
        return Err(EsfiError::NonPositiveCoordinate(eta0.to_f64_lossy()));
    }
    let window = eta0_window(atom, field, eta0);
    if window != Eta0Window::Inside {
        log::warn!(
            "eta0 = {} nm outside the quasi-classical window ({window:?})",
            eta0.to_f64_lossy()
        );
    }
    Ok(())
}

/// Leading part of the barrier integral from η0 outward:
/// g1 = b·I^(3/2)/F − σ·I^(1/2)·η0.
pub fn g1_analytic<T: Scalar>(atom: &HydrogenicAtom<T>, field: T, eta0: T) -> Result<T> {
    check_eta0_inputs(atom, field, eta0)?;
    let i = atom.ionization_energy();
    Ok(ll_exponent(atom, field) - atom.registry().sigma() * i.sqrt() * eta0)
}

/// Coulomb correction to the barrier integral: g2 = −ln(8I/(eF·η0)).
pub fn g2_analytic<T: Scalar>(atom: &HydrogenicAtom<T>, field: T, eta0: T) -> Result<T> {
    check_eta0_inputs(atom, field, eta0)?;
    let i = atom.ionization_energy();
    Ok(-(c::<T>(8.0) * i / (atom.registry().e() * field * eta0)).ln())
}

/// T assembled from its η0-dependent pieces:
/// (2I/B)·η0·exp(−(2I/B)·η0)·exp(−(g1 + g2)).
pub fn barrier_term_from_components<T: Scalar>(atom: &HydrogenicAtom<T>, field: T, eta0: T) -> Result<T> {
    let g = g1_analytic(atom, field, eta0)? + g2_analytic(atom, field, eta0)?;
    let k = atom.decay_constant();
    Ok(k * eta0 * (-(k * eta0) - g).exp())
}
