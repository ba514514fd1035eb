//! Constants and unit systems.
//!
//! Quantities live in the eV / V / nm / s system; SI, Hartree atomic units
//! and (for charge and field only) Gaussian cgs are views computed from the
//! same fundamentals.

mod constants;
mod dimension;
mod quantity;
mod system;

pub use constants::{codata2010, ConstantsRegistry, Symbol};
pub use dimension::{BaseDim, Dimension};
pub use quantity::Quantity;
pub use system::{
    convert, from_system, gaussian_charge_to_isq, gaussian_field_to_isq, isq_charge_to_gaussian, isq_field_to_gaussian,
    scale_factor, Converted, UnitSystem,
};
