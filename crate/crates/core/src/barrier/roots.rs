//! Bracketed scalar root finding.

use crate::error::{EsfiError, Result};
use crate::scalar::{c, Scalar};

const MAX_ITER: usize = 200;

/// Brent's method (bisection / secant / inverse quadratic) on `[a, b]`.
///
/// `f(a)` and `f(b)` must differ in sign. Converges when the bracket
/// shrinks below `rel_tol·|x|` (plus a few ulps) or `f` hits zero.
pub fn brent<T, F>(mut f: F, a: T, b: T, rel_tol: T, what: &'static str) -> Result<T>
where
    T: Scalar,
    F: FnMut(T) -> T,
{
    let (mut a, mut b) = (a, b);
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == T::zero() {
        return Ok(a);
    }
    if fb == T::zero() {
        return Ok(b);
    }
    if (fa > T::zero()) == (fb > T::zero()) || fa.is_nan() || fb.is_nan() {
        return Err(EsfiError::BracketingFailure {
            what,
            lo: a.to_f64_lossy(),
            hi: b.to_f64_lossy(),
        });
    }
    let two = c::<T>(2.0);
    let half = c::<T>(0.5);
    let (mut cc, mut fc) = (b, fb);
    let mut d = b - a;
    let mut e = d;
    for _ in 0..MAX_ITER {
        if (fb > T::zero()) == (fc > T::zero()) {
            cc = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = cc;
            cc = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = two * T::eps() * b.abs() + half * rel_tol * b.abs();
        let xm = half * (cc - b);
        if xm.abs() <= tol1 || fb == T::zero() {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == cc {
                p = two * xm * s;
                q = T::one() - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (two * xm * qa * (qa - r) - (b - a) * (r - T::one()));
                q = (qa - T::one()) * (r - T::one()) * (s - T::one());
            }
            if p > T::zero() {
                q = -q;
            }
            p = p.abs();
            let min1 = c::<T>(3.0) * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if two * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b = if d.abs() > tol1 { b + d } else { b + tol1.copysign(xm) };
        fb = f(b);
    }
    Err(EsfiError::NoConvergence {
        what,
        iterations: MAX_ITER,
    })
}
