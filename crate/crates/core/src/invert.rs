//! Field calibration: the field at which a rate constant takes a given value.

use serde::{Deserialize, Serialize};

use crate::barrier::rate_by_method;
use crate::error::{EsfiError, Result};
use crate::hydrogenic::HydrogenicAtom;
use crate::rate_analytic::{ln_rate_ll, Guard, Method};
use crate::scalar::{c, Scalar};

const MAX_ITER: usize = 100;
const BISECTIONS: usize = 6;

/// Default lower end of the search bracket, V/nm.
pub const DEFAULT_FIELD_MIN: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Inversion<T> {
    #[serde(rename = "F")]
    pub field: T,
    pub iterations: usize,
    /// |K(F) − target| / target
    pub residual: T,
}

/// Solve ln_rate(F) = ln(target) for F in `[lo, hi]`.
///
/// Works on u = ln F: a few bisections, then Newton steps with a
/// central-difference slope, falling back to bisection whenever a step
/// would leave the current bracket.
pub fn invert_ln_rate<T, F>(ln_rate: F, target: T, lo: T, hi: T) -> Result<Inversion<T>>
where
    T: Scalar,
    F: Fn(T) -> Result<T>,
{
    if !(target > T::zero()) || !target.is_finite() {
        return Err(EsfiError::InvalidArgument(format!(
            "target rate must be positive, got {}",
            target.to_f64_lossy()
        )));
    }
    if !(lo > T::zero()) || !(hi > lo) || !hi.is_finite() {
        return Err(EsfiError::InvalidArgument(format!(
            "field bracket must satisfy 0 < lo < hi, got [{}, {}]",
            lo.to_f64_lossy(),
            hi.to_f64_lossy()
        )));
    }
    let ln_t = target.ln();
    let y = |u: T| ln_rate(u.exp()).map(|l| l - ln_t);
    let (mut a, mut b) = (lo.ln(), hi.ln());
    let ya = y(a)?;
    let yb = y(b)?;
    if ya >= yb {
        return Err(EsfiError::NonMonotoneBracket {
            lo: lo.to_f64_lossy(),
            hi: hi.to_f64_lossy(),
        });
    }
    if ya > T::zero() || yb < T::zero() {
        return Err(EsfiError::TargetUnattainable {
            target: target.to_f64_lossy(),
            min: (ya + ln_t).exp().to_f64_lossy(),
            max: (yb + ln_t).exp().to_f64_lossy(),
        });
    }
    let half = c::<T>(0.5);
    let y_tol = c::<T>(1e-11).max(c::<T>(4.0) * T::eps() * ln_t.abs());
    let mut u = half * (a + b);
    for it in 1..=MAX_ITER {
        let yu = y(u)?;
        if yu.abs() <= y_tol || (b - a) <= c::<T>(4.0) * T::eps() * u.abs().max(T::one()) {
            return Ok(Inversion {
                field: u.exp(),
                iterations: it,
                residual: yu.exp_m1().abs(),
            });
        }
        if yu < T::zero() {
            a = u;
        } else {
            b = u;
        }
        let mut next = half * (a + b);
        if it > BISECTIONS {
            let h = c::<T>(1e-6) * u.abs().max(T::one());
            let slope = (y(u + h)? - y(u - h)?) / (h + h);
            if slope > T::zero() {
                let step = u - yu / slope;
                if step > a && step < b {
                    next = step;
                }
            } else {
                return Err(EsfiError::NonMonotoneBracket {
                    lo: a.exp().to_f64_lossy(),
                    hi: b.exp().to_f64_lossy(),
                });
            }
        }
        u = next;
    }
    Err(EsfiError::NoConvergence {
        what: "field inversion",
        iterations: MAX_ITER,
    })
}

/// Field (V/nm) at which `method` gives `target` (s⁻¹).
///
/// The default bracket runs from [`DEFAULT_FIELD_MIN`] up to the
/// deep-tunnelling guard field.
pub fn invert_rate<T: Scalar>(
    method: Method,
    atom: &HydrogenicAtom<T>,
    target: T,
    bracket: Option<(T, T)>,
) -> Result<Inversion<T>> {
    let (lo, hi) = bracket.unwrap_or((c(DEFAULT_FIELD_MIN), atom.guard_field()));
    match method {
        Method::Ll => invert_ln_rate(|f| Ok(ln_rate_ll(atom, f)), target, lo, hi),
        m => invert_ln_rate(
            |f| rate_by_method(m, atom, f, Guard::Extrapolate).map(|r| r.ln_k_e),
            target,
            lo,
            hi,
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rate_analytic::rate_ll;
    use crate::units::ConstantsRegistry;
    use proptest::prelude::*;

    fn atom(z: f64) -> HydrogenicAtom<f64> {
        HydrogenicAtom::new(z, &ConstantsRegistry::codata2010()).unwrap()
    }

    #[test]
    fn round_trip_at_25_v_per_nm() {
        let h = atom(1.0);
        let k = rate_ll(&h, 25.0, Guard::Extrapolate).unwrap().k_e;
        let inv = invert_rate(Method::Ll, &h, k, Some((1.0, 30.0))).unwrap();
        assert!(((inv.field - 25.0) / 25.0).abs() < 1e-10);
        assert!(inv.residual < 1e-10);
    }

    #[test]
    fn unattainable_target() {
        let h = atom(1.0);
        assert!(matches!(
            invert_rate(Method::Ll, &h, 1e99, None),
            Err(EsfiError::TargetUnattainable { .. })
        ));
        assert!(matches!(
            invert_rate(Method::Ll, &h, -1.0, None),
            Err(EsfiError::InvalidArgument(_))
        ));
    }

    #[test]
    fn decreasing_function_is_rejected() {
        let r = invert_ln_rate(|f: f64| Ok(-f.ln()), 1.0, 0.5, 2.0);
        assert!(matches!(r, Err(EsfiError::NonMonotoneBracket { .. })));
    }

    #[test]
    fn inverts_jwkb() {
        let h = atom(1.0);
        let k = rate_by_method(Method::JwkbParabolic, &h, 9.0, Guard::Enforce)
            .unwrap()
            .k_e;
        let inv = invert_rate(Method::JwkbParabolic, &h, k, Some((2.0, 15.0))).unwrap();
        assert!(((inv.field - 9.0) / 9.0).abs() < 1e-9);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]
        #[test]
        fn helium_like_round_trip(frac in 0.1f64..0.99) {
            let a = atom(2.0);
            let f = frac * a.guard_field();
            let k = rate_ll(&a, f, Guard::Enforce).unwrap().k_e;
            let inv = invert_rate(Method::Ll, &a, k, None).unwrap();
            prop_assert!(((inv.field - f) / f).abs() < 1e-10);
        }
    }
}
