use std::fmt::Write as _;
use std::io::Write;

use indexmap::IndexMap;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use esfi_core::units::{from_system, scale_factor};
use esfi_core::{
    convert, invert::DEFAULT_FIELD_MIN, invert_rate, rate_by_method, rate_jwkb, Atom, BarrierSolution, Dimension,
    EsfiError, Guard, Inversion, Method, Model, MotiveKind, Prefactor, RateResult, Registry, Symbol, UnitSystem,
};

use crate::args::{AtomArgs, BarrierArgs, Command, ConstantsArgs, Format, InvertArgs, RateArgs, Spacing, SweepArgs};
use crate::format::{csv_field, plain, round_sig, sci9, with_sig_figs};
use crate::{emit, guard_override_from_env, Cli, CliError};

pub(crate) fn dispatch(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    let reg = Registry::codata2010();
    match cli.command {
        Command::Constants(a) => constants(&a, &reg, stdout),
        Command::Rate(a) => rate(&a, &reg, stdout),
        Command::Sweep(a) => sweep(&a, &reg, stdout, stderr),
        Command::Invert(a) => invert(&a, &reg, stdout),
        Command::Barrier(a) => barrier(&a, &reg, stdout),
    }
}

fn build_atom(a: &AtomArgs, reg: &Registry) -> Result<Atom, CliError> {
    Ok(Atom::build(a.z, a.ionization_energy, reg)?)
}

fn guard(extrapolate: bool) -> Guard {
    if extrapolate || guard_override_from_env() {
        Guard::Extrapolate
    } else {
        Guard::Enforce
    }
}

fn field_label(sys: UnitSystem) -> &'static str {
    match sys {
        UnitSystem::Si => "V/m",
        UnitSystem::Au => "au",
        _ => "V/nm",
    }
}

/// Field given on the command line, in V/nm.
fn canonical_field(value: f64, sys: UnitSystem, reg: &Registry) -> Result<f64, CliError> {
    if !value.is_finite() || value <= 0.0 {
        return Err(CliError::Validation(format!("field must be positive, got {value}")));
    }
    Ok(from_system(value, Dimension::FIELD, sys, reg)?.value())
}

fn field_in(f: f64, sys: UnitSystem, reg: &Registry) -> f64 {
    f * scale_factor(Dimension::FIELD, sys, reg)
}

/// Restate guard and suppression errors in the user's field units.
fn regime_error(e: EsfiError, sys: UnitSystem, reg: &Registry) -> CliError {
    let u = field_label(sys);
    match e {
        EsfiError::ShallowTunnellingRegime { field, guard } => CliError::Regime(format!(
            "field {} {u} is at or above the deep-tunnelling guard {} {u}; pass --extrapolate or set {}=1 to evaluate anyway",
            field_in(field, sys, reg),
            field_in(guard, sys, reg),
            crate::GUARD_OVERRIDE_ENV
        )),
        EsfiError::BarrierSuppressed {
            field,
            suppression_field,
        } => CliError::Regime(format!(
            "barrier suppressed at field {} {u}: turning points merge at the suppression field {} {u}",
            field_in(field, sys, reg),
            field_in(suppression_field, sys, reg)
        )),
        other => CliError::Core(other),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantRecord {
    pub value: f64,
    pub units: String,
    pub unit_system: UnitSystem,
    pub sig_figs: usize,
}

fn constant_rows(sys: UnitSystem, reg: &Registry) -> Result<Vec<(Symbol, ConstantRecord)>, CliError> {
    let mut rows = Vec::new();
    for s in Symbol::ALL {
        let (units, figs) = match sys {
            UnitSystem::Si => match s.si_units() {
                Some(u) => (u.to_string(), if s.is_fundamental() { 8 } else { 7 }),
                None => continue,
            },
            UnitSystem::Au => {
                if !s.has_au_value() {
                    continue;
                }
                ("au".to_string(), 8)
            }
            _ => (s.evnm_units().to_string(), 7),
        };
        let value = convert(reg.get(s), sys, reg)?.value;
        rows.push((
            s,
            ConstantRecord {
                value: round_sig(value, figs),
                units,
                unit_system: sys,
                sig_figs: figs,
            },
        ));
    }
    Ok(rows)
}

fn constants(a: &ConstantsArgs, reg: &Registry, stdout: &mut dyn Write) -> Result<(), CliError> {
    let rows = constant_rows(a.units.into(), reg)?;
    let text = match a.output.format {
        Format::Json => {
            let map: IndexMap<&str, ConstantRecord> = rows.into_iter().map(|(s, r)| (s.name(), r)).collect();
            serde_json::to_string_pretty(&map)? + "\n"
        }
        Format::Csv => {
            let mut t = String::from("symbol,value,units\n");
            for (s, r) in rows {
                let _ = writeln!(
                    t,
                    "{},{},{}",
                    csv_field(s.name()),
                    with_sig_figs(r.value, r.sig_figs),
                    csv_field(&r.units)
                );
            }
            t
        }
    };
    emit(&text, a.output.out.as_deref(), stdout)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RateRecord {
    #[serde(rename = "Z")]
    pub z: f64,
    pub ionization_energy: f64,
    pub field: f64,
    pub field_units: String,
    #[serde(flatten)]
    pub rate: RateResult<f64>,
}

fn rate(a: &RateArgs, reg: &Registry, stdout: &mut dyn Write) -> Result<(), CliError> {
    let sys: UnitSystem = a.units.into();
    let atom = build_atom(&a.atom, reg)?;
    let f = canonical_field(a.field, sys, reg)?;
    let r = rate_by_method(a.method.into(), &atom, f, guard(a.extrapolate))
        .map_err(|e| regime_error(e, sys, reg))?
        .in_system(sys, reg)?;
    let rec = RateRecord {
        z: atom.z(),
        ionization_energy: atom.ionization_energy(),
        field: a.field,
        field_units: field_label(sys).into(),
        rate: r,
    };
    let text = match a.output.format {
        Format::Json => serde_json::to_string_pretty(&rec)? + "\n",
        Format::Csv => {
            let r = &rec.rate;
            format!(
                "method,Z,field,unit_system,K_e,ln_K_e,pre_exponential,exponent,D_eff,T,regime\n\
                 {},{},{},{},{},{},{},{},{},{},{}\n",
                r.method,
                plain(rec.z),
                sci9(rec.field),
                r.unit_system,
                sci9(r.k_e),
                sci9(r.ln_k_e),
                sci9(r.pre_exponential),
                sci9(r.exponent),
                sci9(r.d_eff),
                sci9(r.barrier_term),
                regime_name(r.regime)
            )
        }
    };
    emit(&text, a.output.out.as_deref(), stdout)
}

fn regime_name(r: esfi_core::Regime) -> &'static str {
    match r {
        esfi_core::Regime::Deep => "deep",
        esfi_core::Regime::Extrapolated => "extrapolated",
        esfi_core::Regime::Shallow => "shallow",
    }
}

pub(crate) fn sweep_grid(lo: f64, hi: f64, points: usize, spacing: Spacing) -> Vec<f64> {
    let n = (points - 1) as f64;
    (0..points)
        .map(|k| {
            if k == points - 1 {
                return hi;
            }
            let t = k as f64 / n;
            match spacing {
                Spacing::Linear => lo + (hi - lo) * t,
                Spacing::Log => (lo.ln() + (hi / lo).ln() * t).exp(),
            }
        })
        .collect()
}

/// Field, (K, exponent) per method, notes for skipped points.
type SweepRow = (f64, Vec<(f64, f64)>, Vec<String>);

fn sweep(a: &SweepArgs, reg: &Registry, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    let sys: UnitSystem = a.units.into();
    if !(a.f_min > 0.0) || !a.f_min.is_finite() {
        return Err(CliError::Validation(format!("F_min must be positive, got {}", a.f_min)));
    }
    if !(a.f_max > a.f_min) || !a.f_max.is_finite() {
        return Err(CliError::Validation(format!(
            "F_min must be below F_max, got F_min = {}, F_max = {}",
            a.f_min, a.f_max
        )));
    }
    if !(2..=1_000_000).contains(&a.points) {
        return Err(CliError::Validation(format!(
            "points must be between 2 and 1000000, got {}",
            a.points
        )));
    }
    let mut methods: Vec<Method> = Vec::new();
    for m in &a.methods {
        let m = Method::from(*m);
        if !methods.contains(&m) {
            methods.push(m);
        }
    }
    let atom = build_atom(&a.atom, reg)?;
    let g = guard(a.extrapolate);
    let k_scale = scale_factor(Dimension::FREQUENCY, sys, reg);
    let grid = sweep_grid(a.f_min, a.f_max, a.points as usize, a.spacing);

    let rows: Vec<SweepRow> = grid
        .par_iter()
        .map(|&f_user| {
            let f = from_system(f_user, Dimension::FIELD, sys, reg).map(|q| q.value());
            let mut values = Vec::with_capacity(methods.len());
            let mut notes = Vec::new();
            for &m in &methods {
                match f.clone().and_then(|f| rate_by_method(m, &atom, f, g)) {
                    Ok(r) => values.push((r.k_e * k_scale, r.exponent)),
                    Err(e) => {
                        let e = regime_error(e, sys, reg);
                        notes.push(format!("F = {} {}, {m}: {e}", sci9(f_user), field_label(sys)));
                        values.push((f64::NAN, f64::NAN));
                    }
                }
            }
            (f_user, values, notes)
        })
        .collect();

    let mut text = String::from("F");
    for m in &methods {
        let _ = write!(text, ",K_e_{m}");
    }
    for m in &methods {
        let _ = write!(text, ",exponent_{m}");
    }
    text.push('\n');
    for (f, values, notes) in &rows {
        text.push_str(&sci9(*f));
        for (k, _) in values {
            text.push(',');
            text.push_str(&sci9(*k));
        }
        for (_, x) in values {
            text.push(',');
            text.push_str(&sci9(*x));
        }
        text.push('\n');
        for n in notes {
            let _ = writeln!(stderr, "note: {n}; written as nan");
        }
    }
    emit(&text, a.csv.as_deref(), stdout)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvertRecord {
    #[serde(flatten)]
    pub inversion: Inversion<f64>,
    pub field_units: String,
    pub method: Method,
}

fn invert(a: &InvertArgs, reg: &Registry, stdout: &mut dyn Write) -> Result<(), CliError> {
    let sys: UnitSystem = a.units.into();
    let atom = build_atom(&a.atom, reg)?;
    if !(a.target > 0.0) || !a.target.is_finite() {
        return Err(CliError::Validation(format!(
            "target rate must be positive, got {}",
            a.target
        )));
    }
    let target = a.target / scale_factor(Dimension::FREQUENCY, sys, reg);
    let bracket = match (a.f_lo, a.f_hi) {
        (None, None) => None,
        (lo, hi) => {
            let lo = match lo {
                Some(v) => canonical_field(v, sys, reg)?,
                None => DEFAULT_FIELD_MIN,
            };
            let hi = match hi {
                Some(v) => canonical_field(v, sys, reg)?,
                None => atom.guard_field(),
            };
            Some((lo, hi))
        }
    };
    let method: Method = a.method.into();
    let mut inv = invert_rate(method, &atom, target, bracket).map_err(|e| regime_error(e, sys, reg))?;
    inv.field = field_in(inv.field, sys, reg);
    let rec = InvertRecord {
        inversion: inv,
        field_units: field_label(sys).into(),
        method,
    };
    let text = match a.output.format {
        Format::Json => serde_json::to_string_pretty(&rec)? + "\n",
        Format::Csv => format!(
            "F,iterations,residual\n{},{},{}\n",
            sci9(inv.field),
            inv.iterations,
            sci9(inv.residual)
        ),
    };
    emit(&text, a.output.out.as_deref(), stdout)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BarrierRecord {
    #[serde(rename = "Z")]
    pub z: f64,
    pub field: f64,
    pub unit_system: UnitSystem,
    #[serde(flatten)]
    pub solution: BarrierSolution<f64>,
}

fn barrier(a: &BarrierArgs, reg: &Registry, stdout: &mut dyn Write) -> Result<(), CliError> {
    let sys: UnitSystem = a.units.into();
    let atom = build_atom(&a.atom, reg)?;
    let f = canonical_field(a.field, sys, reg)?;
    let kind: MotiveKind = a.model.into();
    let model = Model::new(kind, &atom, f)?;
    let prefactor = if a.simple {
        Prefactor::Simple
    } else {
        Prefactor::Effective
    };
    let mut s = rate_jwkb(&model, prefactor).map_err(|e| regime_error(e, sys, reg))?;
    let len = scale_factor(Dimension::LENGTH, sys, reg);
    let freq = scale_factor(Dimension::FREQUENCY, sys, reg);
    s.coord_in *= len;
    s.coord_out *= len;
    s.k_e *= freq;
    s.ln_k_e += freq.ln();
    let rec = BarrierRecord {
        z: atom.z(),
        field: a.field,
        unit_system: sys,
        solution: s,
    };
    let text = match a.output.format {
        Format::Json => serde_json::to_string_pretty(&rec)? + "\n",
        Format::Csv => format!(
            "model,coord_in,coord_out,G,P_jwkb,P_eff,D_eff,K_e,regime\n{},{},{},{},{},{},{},{},{}\n",
            kind,
            sci9(s.coord_in),
            sci9(s.coord_out),
            sci9(s.g),
            sci9(s.p_jwkb),
            sci9(s.p_eff),
            sci9(s.d_eff),
            sci9(s.k_e),
            regime_name(s.regime)
        ),
    };
    emit(&text, a.output.out.as_deref(), stdout)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids_hit_both_ends() {
        let g = sweep_grid(1.0, 100.0, 3, Spacing::Log);
        assert_eq!(g[0], 1.0);
        assert!((g[1] - 10.0).abs() < 1e-12);
        assert_eq!(g[2], 100.0);
        assert_eq!(
            sweep_grid(0.0, 1.0, 5, Spacing::Linear),
            vec![0.0, 0.25, 0.5, 0.75, 1.0]
        );
    }

    #[test]
    fn si_omits_unquoted_rows() {
        let reg = Registry::codata2010();
        let rows = constant_rows(UnitSystem::Si, &reg).unwrap();
        let names: Vec<_> = rows.iter().map(|(s, _)| s.name()).collect();
        for missing in ["sigma", "b", "C_FI", "I_H", "pi_hbar_C_FI"] {
            assert!(!names.contains(&missing), "{missing}");
        }
        let e = rows.iter().find(|(s, _)| *s == Symbol::ElementaryCharge).unwrap();
        assert_eq!(e.1.value, 1.602_176_6e-19);
    }

    #[test]
    fn au_rows() {
        let reg = Registry::codata2010();
        let rows = constant_rows(UnitSystem::Au, &reg).unwrap();
        let c = rows
            .iter()
            .find(|(s, _)| *s == Symbol::FieldIonizationConstant)
            .unwrap();
        assert_eq!(c.1.value, 22.627417);
        assert!(rows.iter().all(|(s, _)| *s != Symbol::Electronvolt));
    }

    #[test]
    fn regime_errors_use_user_units() {
        let reg = Registry::codata2010();
        let e = EsfiError::BarrierSuppressed {
            field: 0.0625 * reg.au_field(),
            suppression_field: 0.0625 * reg.au_field(),
        };
        let msg = regime_error(e, UnitSystem::Au, &reg).to_string();
        assert!(msg.contains("0.0625"), "{msg}");
        assert!(msg.contains("au"));
    }
}
