//! Numeric JWKB treatment of the tunnelling barrier.
//!
//! Each [`MotiveModel`] has a single maximum, found as the zero of its
//! strictly decreasing slope. The turning points are then bracketed on
//! either side of that peak, and the barrier strength G = 2σ∫√M is
//! integrated after the substitution x = (a+b)/2 − (b−a)/2·cos θ, which
//! turns the square-root endpoints into smooth zeros.

mod motive;
pub mod quadrature;
pub mod roots;

pub use motive::{MotiveKind, MotiveModel};

use serde::{Deserialize, Serialize};

use crate::error::{EsfiError, Result};
use crate::hydrogenic::HydrogenicAtom;
use crate::rate_analytic::{self, Guard, Method, RateResult, Regime};
use crate::scalar::{c, Scalar};
use crate::units::UnitSystem;
use quadrature::{integrate, QuadratureOptions};
use roots::brent;

/// Tunnelling pre-factor used when assembling D from G.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Prefactor {
    /// P_eff = 2π·(2I/B)·η_in·exp(−(2I/B)·η_in).
    #[default]
    Effective,
    /// P_t = 1.
    Simple,
}

/// Turning points, barrier strength and the rate built from them.
/// Coordinates in nm, `k_e` in s⁻¹.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BarrierSolution<T> {
    pub model: MotiveKind,
    pub coord_in: T,
    pub coord_out: T,
    #[serde(rename = "G")]
    pub g: T,
    #[serde(rename = "P_jwkb")]
    pub p_jwkb: T,
    #[serde(rename = "P_eff")]
    pub p_eff: T,
    #[serde(rename = "D_eff")]
    pub d_eff: T,
    #[serde(rename = "K_e")]
    pub k_e: T,
    #[serde(rename = "ln_K_e")]
    pub ln_k_e: T,
    pub prefactor: Prefactor,
    pub regime: Regime,
}

impl<T: Scalar> BarrierSolution<T> {
    pub fn method(&self) -> Method {
        match self.model {
            MotiveKind::TransformedParabolic => Method::JwkbParabolic,
            MotiveKind::TransformedCartesian => Method::JwkbCartesian,
            MotiveKind::Naive1D => Method::JwkbNaive,
        }
    }

    /// The same rate as a [`RateResult`], in s⁻¹.
    pub fn to_rate_result(&self, atom: &HydrogenicAtom<T>) -> RateResult<T> {
        RateResult {
            k_e: self.k_e,
            ln_k_e: self.ln_k_e,
            pre_exponential: atom.orbital_frequency() * self.p_eff,
            exponent: self.g,
            d_eff: self.d_eff,
            barrier_term: self.d_eff / rate_analytic::geometric_prefactor::<T>(),
            method: self.method(),
            unit_system: UnitSystem::Evnm,
            regime: self.regime,
        }
    }
}

/// Location and height of the barrier maximum.
pub fn barrier_peak<T: Scalar>(model: &MotiveModel<T>) -> Result<(T, T)> {
    let (lo, hi) = model.search_range();
    if model.slope(hi) >= T::zero() {
        return Err(suppressed(model));
    }
    let x = brent(|x| model.slope(x), lo, hi, c::<T>(4.0) * T::eps(), "barrier peak")?;
    Ok((x, model.eval(x)))
}

fn peak_is_open<T: Scalar>(model: &MotiveModel<T>) -> Result<Option<T>> {
    let (x, top) = barrier_peak(model)?;
    let floor = c::<T>(64.0) * T::eps() * model.energy_scale();
    Ok((top > floor).then_some(x))
}

fn suppressed<T: Scalar>(model: &MotiveModel<T>) -> EsfiError {
    let fs = suppression_field(model.kind(), model.atom())
        .map(|f| f.to_f64_lossy())
        .unwrap_or(f64::NAN);
    EsfiError::BarrierSuppressed {
        field: model.field().to_f64_lossy(),
        suppression_field: fs,
    }
}

/// Field (V/nm) at which the barrier top reaches zero and the two turning
/// points merge.
pub fn suppression_field<T: Scalar>(kind: MotiveKind, atom: &HydrogenicAtom<T>) -> Result<T> {
    let naive = atom.naive_suppression_field();
    if kind == MotiveKind::Naive1D {
        return Ok(naive);
    }
    let top = |ln_f: T| -> T {
        MotiveModel::new(kind, atom, ln_f.exp())
            .and_then(|m| {
                let (lo, hi) = m.search_range();
                if m.slope(hi) >= T::zero() {
                    return Ok(-m.energy_scale());
                }
                let x = brent(|x| m.slope(x), lo, hi, c::<T>(4.0) * T::eps(), "barrier peak")?;
                Ok(m.eval(x))
            })
            .unwrap_or_else(|_| T::nan())
    };
    let ln_f = brent(
        top,
        (naive / c(16.0)).ln(),
        (naive * c(16.0)).ln(),
        c::<T>(4.0) * T::eps(),
        "suppression field",
    )?;
    Ok(ln_f.exp())
}

/// Inner and outer zeros of the motive energy.
pub fn turning_points<T: Scalar>(model: &MotiveModel<T>) -> Result<(T, T)> {
    let peak = peak_is_open(model)?.ok_or_else(|| suppressed(model))?;
    let (lo, hi) = model.search_range();
    let tol = c::<T>(4.0) * T::eps();
    let f = |x: T| model.eval(x);
    let inner = brent(f, lo, peak, tol, "inner turning point")?;
    let outer = brent(f, peak, hi, tol, "outer turning point")?;
    Ok((inner, outer))
}

/// G and its quadrature error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BarrierStrength<T> {
    pub g: T,
    pub error: T,
    pub coord_in: T,
    pub coord_out: T,
}

/// G = 2σ∫√M between the turning points.
pub fn barrier_strength<T: Scalar>(model: &MotiveModel<T>) -> Result<BarrierStrength<T>> {
    let (a, b) = turning_points(model)?;
    barrier_strength_between(model, a, b)
}

pub(crate) fn barrier_strength_between<T: Scalar>(model: &MotiveModel<T>, a: T, b: T) -> Result<BarrierStrength<T>> {
    let two_sigma = c::<T>(2.0) * model.atom().registry().sigma();
    let mid = c::<T>(0.5) * (a + b);
    let half = c::<T>(0.5) * (b - a);
    let integrand = |theta: T| {
        let (s, co) = theta.sin_cos();
        let m = model.eval(mid - half * co).max(T::zero());
        m.sqrt() * half * s
    };
    let opts = QuadratureOptions {
        abs_tol: c::<T>(1e-11) / two_sigma,
        ..QuadratureOptions::default()
    };
    let r = integrate(integrand, T::zero(), T::PI(), &opts)?;
    Ok(BarrierStrength {
        g: two_sigma * r.value,
        error: two_sigma * r.error,
        coord_in: a,
        coord_out: b,
    })
}

/// Assemble the JWKB rate K_e = ν_Z·P·exp(−G).
///
/// The naive model always uses P_t = 1.
pub fn rate_jwkb<T: Scalar>(model: &MotiveModel<T>, prefactor: Prefactor) -> Result<BarrierSolution<T>> {
    let bs = barrier_strength(model)?;
    let atom = model.atom();
    let prefactor = if model.kind() == MotiveKind::Naive1D {
        Prefactor::Simple
    } else {
        prefactor
    };
    let (p_jwkb, ln_p_eff) = match prefactor {
        Prefactor::Effective => {
            let u = atom.decay_constant() * model.to_eta(bs.coord_in);
            (
                u * (-u).exp(),
                u.ln() - u + rate_analytic::geometric_prefactor::<T>().ln(),
            )
        }
        Prefactor::Simple => (T::one(), T::zero()),
    };
    let p_eff = ln_p_eff.exp();
    let d_eff = p_eff * (-bs.g).exp();
    let ln_k_e = atom.orbital_frequency().ln() + ln_p_eff - bs.g;
    let regime = if d_eff > T::one() {
        log::warn!(
            "effective escape probability {} exceeds one at F = {} V/nm",
            d_eff.to_f64_lossy(),
            model.field().to_f64_lossy()
        );
        Regime::Shallow
    } else if model.field() >= atom.guard_field() {
        Regime::Extrapolated
    } else {
        Regime::Deep
    };
    Ok(BarrierSolution {
        model: model.kind(),
        coord_in: bs.coord_in,
        coord_out: bs.coord_out,
        g: bs.g,
        p_jwkb,
        p_eff,
        d_eff,
        k_e: attempt_frequency_rate(atom, d_eff),
        ln_k_e,
        prefactor,
        regime,
    })
}

/// K_e = ν_Z·D.
pub fn attempt_frequency_rate<T: Scalar>(atom: &HydrogenicAtom<T>, d: T) -> T {
    if d > T::one() {
        log::warn!("escape probability {} exceeds one", d.to_f64_lossy());
    }
    atom.orbital_frequency() * d
}

/// Rate in s⁻¹ by any [`Method`], field in V/nm.
///
/// The guard is applied to every method; JWKB results are additionally
/// labelled shallow when D_eff exceeds one.
pub fn rate_by_method<T: Scalar>(
    method: Method,
    atom: &HydrogenicAtom<T>,
    field: T,
    guard: Guard,
) -> Result<RateResult<T>> {
    rate_analytic::classify_field(field, atom.guard_field(), guard)?;
    let kind = match method {
        Method::Ll => return rate_analytic::rate_ll(atom, field, guard),
        Method::ZForm => {
            let consts = rate_analytic::FormulaConstants::new(atom.registry(), UnitSystem::Evnm)?;
            if atom.is_overridden() {
                return Err(EsfiError::InvalidArgument(
                    "z-form does not accept an ionization-energy override".into(),
                ));
            }
            return rate_analytic::rate_z_form(&consts, atom.z(), field, guard);
        }
        Method::Gaussian => {
            if atom.z() != T::one() || atom.is_overridden() {
                return Err(EsfiError::InvalidArgument(
                    "gaussian form is written for hydrogen (Z = 1) only".into(),
                ));
            }
            return rate_analytic::rate_gaussian_check(atom.registry(), field, guard);
        }
        Method::JwkbParabolic => MotiveKind::TransformedParabolic,
        Method::JwkbCartesian => MotiveKind::TransformedCartesian,
        Method::JwkbNaive => MotiveKind::Naive1D,
    };
    let model = MotiveModel::new(kind, atom, field)?;
    rate_jwkb(&model, Prefactor::Effective).map(|s| s.to_rate_result(atom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::ConstantsRegistry;
    use proptest::prelude::*;

    fn reg() -> ConstantsRegistry<f64> {
        ConstantsRegistry::codata2010()
    }

    fn hydrogen() -> HydrogenicAtom<f64> {
        HydrogenicAtom::new(1.0, &reg()).unwrap()
    }

    fn au_model(kind: MotiveKind, f_au: f64) -> MotiveModel<f64> {
        MotiveModel::new(kind, &hydrogen(), f_au * reg().au_field()).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn naive_roots_match_quadratic() {
        let m = au_model(MotiveKind::Naive1D, 0.03);
        let (a, b) = turning_points(&m).unwrap();
        let a0 = reg().a_0();
        // 0.03 z² − z/2 + 1 = 0
        assert!(rel(a / a0, 2.324_081_207_560_02) < 1e-12);
        assert!(rel(b / a0, 14.342_585_459_106_6) < 1e-12);
    }

    #[test]
    fn naive_suppression_closed_form() {
        let h = hydrogen();
        let fs = suppression_field(MotiveKind::Naive1D, &h).unwrap();
        assert!(rel(fs / reg().au_field(), 1.0 / 16.0) < 1e-14);
        let err = turning_points(&au_model(MotiveKind::Naive1D, 1.0 / 16.0)).unwrap_err();
        assert!(matches!(err, EsfiError::BarrierSuppressed { .. }));
        assert!(turning_points(&au_model(MotiveKind::Naive1D, 0.0624)).is_ok());
    }

    #[test]
    fn transformed_suppression_is_shared() {
        let h = hydrogen();
        let p = suppression_field(MotiveKind::TransformedParabolic, &h).unwrap();
        let c = suppression_field(MotiveKind::TransformedCartesian, &h).unwrap();
        assert!(rel(p, c) < 1e-10);
        assert!(matches!(
            turning_points(&MotiveModel::new(MotiveKind::TransformedParabolic, &h, 1.01 * p).unwrap()),
            Err(EsfiError::BarrierSuppressed { .. })
        ));
        assert!(turning_points(&MotiveModel::new(MotiveKind::TransformedParabolic, &h, 0.99 * p).unwrap()).is_ok());
    }

    #[test]
    fn parabolic_golden_values() {
        // Frozen from a 30-digit independent evaluation.
        let a0 = reg().a_0();
        for (f_au, eta_in, g) in [
            (1e-3, 2.419_210_563_22, 656.234_487_322_08),
            (1e-2, 2.466_292_856_31, 58.503_799_525_288_1),
        ] {
            let m = au_model(MotiveKind::TransformedParabolic, f_au);
            let bs = barrier_strength(&m).unwrap();
            assert!(rel(bs.coord_in / a0, eta_in) < 1e-10, "F = {f_au}");
            assert!((bs.g - g).abs() < 1e-8, "F = {f_au}: {} vs {g}", bs.g);
        }
    }

    #[test]
    fn jwkb_rate_at_25_v_per_nm() {
        let m = MotiveModel::new(MotiveKind::TransformedParabolic, &hydrogen(), 25.0).unwrap();
        let s = rate_jwkb(&m, Prefactor::Effective).unwrap();
        assert!(rel(s.g, 7.045_645_546_1) < 1e-9);
        assert!(rel(s.k_e, 6.419_029_09e12) < 1e-8);
        assert_eq!(s.regime, Regime::Extrapolated);
    }

    #[test]
    fn simple_prefactor_is_unity() {
        let h = hydrogen();
        let m = MotiveModel::new(MotiveKind::TransformedParabolic, &h, 5.0).unwrap();
        let s = rate_jwkb(&m, Prefactor::Simple).unwrap();
        assert_eq!(s.p_eff, 1.0);
        assert!(rel(s.k_e, h.orbital_frequency() * (-s.g).exp()) < 1e-14);
        let n = MotiveModel::new(MotiveKind::Naive1D, &h, 5.0).unwrap();
        assert_eq!(
            rate_jwkb(&n, Prefactor::Effective).unwrap().prefactor,
            Prefactor::Simple
        );
    }

    #[test]
    fn g_leading_behaviour() {
        let m = au_model(MotiveKind::TransformedParabolic, 1e-3);
        let g = barrier_strength(&m).unwrap().g;
        let lead = 2.0 / (3.0 * 1e-3);
        assert!(rel(g, lead) < 0.05);
    }

    #[test]
    fn attempt_frequency() {
        let h = hydrogen();
        assert_eq!(attempt_frequency_rate(&h, 0.0), 0.0);
        assert!(rel(attempt_frequency_rate(&h, 1.0), 6.579_684e15) < 5e-7);
        let r = rate_analytic::rate_ll(&h, 10.0, Guard::Enforce).unwrap();
        assert!(rel(attempt_frequency_rate(&h, r.d_eff), r.k_e) < 1e-14);
    }

    #[test]
    fn solution_serializes_with_public_names() {
        let m = MotiveModel::new(MotiveKind::TransformedCartesian, &hydrogen(), 8.0).unwrap();
        let s = rate_jwkb(&m, Prefactor::Effective).unwrap();
        let v = serde_json::to_value(s).unwrap();
        for key in ["coord_in", "coord_out", "G", "P_jwkb", "P_eff", "D_eff", "K_e"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        let back: BarrierSolution<f64> = serde_json::from_value(v).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn dispatch_guards_every_method() {
        let h = hydrogen();
        for m in Method::ALL {
            assert!(matches!(
                rate_by_method(m, &h, 20.0, Guard::Enforce),
                Err(EsfiError::ShallowTunnellingRegime { .. })
            ));
            assert!(rate_by_method(m, &h, 5.0, Guard::Enforce).is_ok(), "{m}");
        }
        let he = HydrogenicAtom::new(2.0, &reg()).unwrap();
        assert!(matches!(
            rate_by_method(Method::Gaussian, &he, 5.0, Guard::Enforce),
            Err(EsfiError::InvalidArgument(_))
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn turning_point_residuals(z in 0.5f64..3.0, frac in 0.02f64..0.98, k in 0usize..3) {
            let atom = HydrogenicAtom::new(z, &reg()).unwrap();
            let m = MotiveModel::new(MotiveKind::ALL[k], &atom, frac * atom.guard_field()).unwrap();
            let (a, b) = turning_points(&m).unwrap();
            prop_assert!(a < b);
            let i = atom.ionization_energy();
            prop_assert!(m.motive(a).unwrap().abs() < 1e-12 * i);
            prop_assert!(m.motive(b).unwrap().abs() < 1e-12 * i);
            prop_assert!(barrier_strength(&m).unwrap().g > 0.0);
        }

        #[test]
        fn parametrizations_agree(z in 0.5f64..3.0, frac in 0.02f64..0.98) {
            let atom = HydrogenicAtom::new(z, &reg()).unwrap();
            let f = frac * atom.guard_field();
            let p = MotiveModel::new(MotiveKind::TransformedParabolic, &atom, f).unwrap();
            let cz = MotiveModel::new(MotiveKind::TransformedCartesian, &atom, f).unwrap();
            let gp = barrier_strength(&p).unwrap();
            let gc = barrier_strength(&cz).unwrap();
            prop_assert!((gp.g - gc.g).abs() < 1e-9);
            prop_assert!(rel(gp.coord_in, 2.0 * gc.coord_in) < 1e-12);
        }

        #[test]
        fn ln_k_consistent(frac in 0.05f64..0.95) {
            let h = hydrogen();
            let m = MotiveModel::new(MotiveKind::TransformedParabolic, &h, frac * h.guard_field()).unwrap();
            let s = rate_jwkb(&m, Prefactor::Effective).unwrap();
            prop_assert!((s.ln_k_e - s.k_e.ln()).abs() < 1e-13 * s.g.max(1.0));
            prop_assert!(rel(s.p_eff, 2.0 * std::f64::consts::PI * s.p_jwkb) < 1e-13);
        }
    }
}
