//! Text formatting shared by the commands.

/// C-style `%.9e`: ten significant digits, signed two-digit exponent.
pub fn sci9(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let s = format!("{x:.9e}");
    let (mantissa, exp) = s.split_once('e').expect("exponent in {:e} output");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exp.abs())
}

/// Round to `figs` significant figures.
pub fn round_sig(x: f64, figs: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", figs.saturating_sub(1), x).parse().unwrap_or(x)
}

/// `x` written with exactly `figs` significant figures, in positional
/// notation for moderate magnitudes and `1.234e17` style otherwise.
pub fn with_sig_figs(x: f64, figs: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let figs = figs.max(1);
    let sci = format!("{:.*e}", figs - 1, x);
    let exp: i32 = sci.split_once('e').map(|(_, e)| e.parse().unwrap_or(0)).unwrap_or(0);
    if (-3..7).contains(&exp) {
        let decimals = (figs as i32 - 1 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        sci
    }
}

/// Shortest readable text for an already-rounded value.
pub fn plain(x: f64) -> String {
    let a = x.abs();
    if a != 0.0 && !(1e-3..1e7).contains(&a) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c_style_scientific() {
        assert_eq!(sci9(1.0), "1.000000000e+00");
        assert_eq!(sci9(-3.770_242_452_6e12), "-3.770242453e+12");
        assert_eq!(sci9(1.5e-300), "1.500000000e-300");
        assert_eq!(sci9(0.0), "0.000000000e+00");
        assert_eq!(sci9(f64::NAN), "nan");
    }

    #[test]
    fn significant_figures() {
        assert_eq!(round_sig(22.627_416_997_969_52, 8), 22.627417);
        assert_eq!(round_sig(6.830_890_4, 7), 6.83089);
        assert_eq!(plain(round_sig(1.245_354_1e17, 7)), "1.245354e17");
        assert_eq!(plain(6.83089), "6.83089");
    }

    #[test]
    fn fixed_significant_figures() {
        assert_eq!(with_sig_figs(6.830_890_4, 7), "6.830890");
        assert_eq!(with_sig_figs(22.627_416_997_969_52, 8), "22.627417");
        assert_eq!(with_sig_figs(1.245_354_1e17, 7), "1.245354e17");
        assert_eq!(with_sig_figs(5.291_772_1e-2, 7), "0.05291772");
        assert_eq!(with_sig_figs(1.0, 7), "1.000000");
    }

    #[test]
    fn quoting() {
        assert_eq!(csv_field("eV nm"), "eV nm");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
    }
}
