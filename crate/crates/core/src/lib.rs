//! Field ionization rates of hydrogenic atoms in deep tunnelling.
//!
//! Everything is generic over a [`Scalar`]; the aliases at the bottom fix
//! the common choices. Inputs and outputs are in the eV / V / nm / s system
//! unless a [`UnitSystem`] says otherwise.
//!
//! ```
//! use esfi_core::{Atom, Guard, Registry};
//!
//! let reg = Registry::codata2010();
//! let h = Atom::new(1.0, &reg).unwrap();
//! let r = esfi_core::rate_ll(&h, 10.0, Guard::Enforce).unwrap();
//! assert!(r.k_e > 0.0);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod barrier;
pub mod error;
pub mod hydrogenic;
pub mod invert;
pub mod rate_analytic;
mod scalar;
pub mod units;

pub use barrier::{
    attempt_frequency_rate, barrier_peak, barrier_strength, rate_by_method, rate_jwkb, suppression_field,
    turning_points, BarrierSolution, BarrierStrength, MotiveKind, MotiveModel, Prefactor,
};
pub use error::{EsfiError, Result};
pub use hydrogenic::{cartesian_axis_to_parabolic, parabolic_to_cartesian, HydrogenicAtom};
pub use invert::{invert_ln_rate, invert_rate, Inversion};
pub use rate_analytic::{
    barrier_term, effective_escape_probability, rate_gaussian_check, rate_ll, rate_z_form, FormulaConstants, Guard,
    Method, RateResult, Regime,
};
pub use scalar::Scalar;
pub use units::{convert, ConstantsRegistry, Dimension, Quantity, Symbol, UnitSystem};

pub use twofloat::TwoFloat;

pub type Registry = ConstantsRegistry<f64>;
pub type Atom = HydrogenicAtom<f64>;
pub type Rate = RateResult<f64>;
pub type Model = MotiveModel<f64>;
pub type Solution = BarrierSolution<f64>;

/// Double-double precision variants.
pub type RegistryDD = ConstantsRegistry<TwoFloat>;
pub type AtomDD = HydrogenicAtom<TwoFloat>;
pub type ModelDD = MotiveModel<TwoFloat>;

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
struct ReadmeDoctests;
