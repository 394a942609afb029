use hecke_core::genfun::{
    coefficient_table, default_basis, dimension, generating_function, normalization, representation,
    GeneratingFunction, EXACT_MAX_DIM,
};
use hecke_core::poly::{RatFunc, VarSet};
use hecke_core::qexp::{eisenstein_series, oracle_table, Form};
use hecke_core::table::{check_weight, CoefficientTable};
use hecke_core::torsion::BasisKind;
use hecke_core::Error;

use crate::cache::{Cache, Lookup};
use crate::envelope::{
    fraction, matrix_cells, parse_fraction, poly_from_terms, table_entries, table_from_entries, terms, Envelope,
    Mismatch, Payload,
};
use crate::job::JobSpec;
use crate::{Basis, FormArg, LevelArgs, Mode, TableArgs};

pub const SUCCESS: u8 = 0;
pub const MISMATCH: u8 = 1;
pub const USAGE: u8 = 2;
pub const EXACT_TOO_LARGE: u8 = 3;

/// Levels the command line accepts.
const LEVELS: [u32; 4] = [2, 3, 5, 7];

pub struct Outcome {
    pub status: u8,
    pub envelope: Envelope,
}

impl Outcome {
    fn success(envelope: Envelope) -> Outcome {
        Outcome {
            status: SUCCESS,
            envelope,
        }
    }
}

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: USAGE,
            message: message.into(),
        }
    }

    pub fn internal(message: impl Into<String>) -> Failure {
        Failure {
            code: MISMATCH,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::ExactDimensionUnsupported { .. } => EXACT_TOO_LARGE,
            Error::UnsupportedLevel(_)
            | Error::UnsupportedBasis { .. }
            | Error::InvalidWeight(_)
            | Error::InsufficientTruncation { .. } => USAGE,
            _ => MISMATCH,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

struct Level {
    level: u32,
    kind: BasisKind,
    dim: usize,
}

fn level(args: &LevelArgs) -> Result<Level, Failure> {
    if !LEVELS.contains(&args.level) {
        return Err(Failure::usage(format!(
            "level {} is not supported (expected one of 2, 3, 5, 7)",
            args.level
        )));
    }
    let kind = match args.basis {
        Some(Basis::Power) => BasisKind::Power,
        Some(Basis::Symmetric) => BasisKind::Symmetric,
        None => default_basis(args.level),
    };
    let dim = dimension(args.level, kind)?;
    Ok(Level {
        level: args.level,
        kind,
        dim,
    })
}

fn mode(args: &TableArgs, lv: &Level) -> Result<Mode, Failure> {
    let mode = args.mode.unwrap_or(if lv.dim <= EXACT_MAX_DIM {
        Mode::Exact
    } else {
        Mode::Series
    });
    if mode == Mode::Exact && lv.dim > EXACT_MAX_DIM {
        return Err(Error::ExactDimensionUnsupported {
            dim: lv.dim,
            max: EXACT_MAX_DIM,
        }
        .into());
    }
    Ok(mode)
}

fn fixtures_for(command: &str, lv: &Level) -> Vec<String> {
    let tags: &[&str] = match (command, lv.level, lv.kind) {
        ("genfun", 2, _) => &["level2-m-left", "level2-m-right"],
        ("matrices", 3, BasisKind::Power) => &["level3-aprime", "level3-bprime"],
        ("matrices", 5, BasisKind::Symmetric) => &["level5-aprime", "level5-bprime"],
        _ => &[],
    };
    tags.iter().map(|s| s.to_string()).collect()
}

/// Serve `job` from the cache when possible, otherwise compute and store.
/// A damaged entry is reported and replaced.
fn cached(
    cache: Option<&Cache>,
    job: &JobSpec,
    compute: impl FnOnce() -> Result<Envelope, Failure>,
) -> Result<Envelope, Failure> {
    if let Some(c) = cache {
        match c.get(job) {
            Lookup::Hit(env) => return Ok(env),
            Lookup::Miss => {}
            Lookup::Corrupt { reason, .. } => eprintln!("warning: discarding cache entry: {reason}"),
        }
    }
    let env = compute()?;
    if let Some(c) = cache {
        if let Err(e) = c.put(&env) {
            eprintln!("warning: cannot write cache entry: {e}");
        }
    }
    Ok(env)
}

fn genfun_job(lv: &Level, mode: Mode, w: u32) -> JobSpec {
    let mut job = JobSpec::new("genfun");
    job.level = Some(lv.level);
    job.basis = Some(lv.kind.name().to_string());
    job.mode = Some(mode.name().to_string());
    if mode == Mode::Series {
        job.max_weight = Some(w);
    }
    job
}

fn compute_genfun(job: JobSpec, lv: &Level, mode: Mode, w: u32) -> Result<Envelope, Failure> {
    let payload = match mode {
        Mode::Exact => {
            let f = generating_function(lv.level, lv.kind)?;
            Payload::GeneratingFunction {
                normalization: fraction(&f.normalization),
                numerator: terms(f.value.num()),
                denominator: terms(f.value.den()),
            }
        }
        Mode::Series => {
            let t = coefficient_table(lv.level, lv.kind, w)?;
            Payload::CoefficientTable {
                level: lv.level,
                max_weight: w,
                entries: table_entries(&t),
            }
        }
    };
    let fixtures = fixtures_for("genfun", lv);
    Ok(Envelope::new(job, fixtures, payload))
}

pub fn genfun(args: &TableArgs, cache: Option<&Cache>) -> Result<Outcome, Failure> {
    let lv = level(&args.level)?;
    let mode = mode(args, &lv)?;
    let w = check_weight(args.max_weight)?;
    let job = genfun_job(&lv, mode, w);
    let env = cached(cache, &job, || compute_genfun(job.clone(), &lv, mode, w))?;
    Ok(Outcome::success(env))
}

/// The coefficient table carried by a genfun envelope, truncated at `w`.
fn table_of(env: &Envelope, lv: &Level, w: u32) -> Result<CoefficientTable, String> {
    match &env.payload {
        Payload::GeneratingFunction {
            normalization: c,
            numerator,
            denominator,
        } => {
            let num = poly_from_terms(numerator, VarSet::AB_MARKED)?;
            let den = poly_from_terms(denominator, VarSet::AB_MARKED)?;
            let f = GeneratingFunction {
                level: lv.level,
                kind: lv.kind,
                normalization: parse_fraction(c)?,
                value: RatFunc::new(num, den).map_err(|e| e.to_string())?,
            };
            f.table(w).map_err(|e| e.to_string())
        }
        Payload::CoefficientTable {
            level,
            max_weight,
            entries,
        } => Ok(table_from_entries(*level, *max_weight, entries)?.truncated(w)),
        _ => Err("cache entry does not hold a generating function".to_string()),
    }
}

pub fn verify(args: &TableArgs, cache: Option<&Cache>) -> Result<Outcome, Failure> {
    let lv = level(&args.level)?;
    let mode = mode(args, &lv)?;
    let w = check_weight(args.max_weight)?;
    let gjob = genfun_job(&lv, mode, w);

    let mut problem = None;
    let mut from_cache = None;
    if let Some(c) = cache {
        match c.get(&gjob) {
            Lookup::Hit(env) => from_cache = Some(env),
            Lookup::Miss => {}
            Lookup::Corrupt { reason, envelope } => {
                problem = Some(format!("corrupt cache entry: {reason}"));
                from_cache = envelope;
            }
        }
    }
    let fresh = from_cache.is_none() && problem.is_none();
    let env = match from_cache {
        Some(env) => Some(env),
        None if fresh => Some(compute_genfun(gjob.clone(), &lv, mode, w)?),
        None => None,
    };
    if fresh {
        if let (Some(c), Some(env)) = (cache, &env) {
            if let Err(e) = c.put(env) {
                eprintln!("warning: cannot write cache entry: {e}");
            }
        }
    }

    let mut mismatch = None;
    let mut compared = 0;
    if let Some(env) = &env {
        match table_of(env, &lv, w) {
            Ok(table) => {
                let oracle = oracle_table(lv.level, w)?;
                compared = oracle.entries.values().map(|r| r.len()).sum();
                if let Some(((i, j, k, l), x, y)) = table.first_difference(&oracle) {
                    mismatch = Some(Mismatch {
                        index: [i, j, k, l],
                        genfun: fraction(&x),
                        oracle: fraction(&y),
                    });
                }
            }
            Err(e) => {
                let p = problem.take().map_or(String::new(), |p| format!("{p}; "));
                problem = Some(format!("{p}cannot read coefficient table: {e}"));
            }
        }
    }

    let status = if problem.is_none() && mismatch.is_none() {
        SUCCESS
    } else {
        MISMATCH
    };
    let mut job = JobSpec::new("verify");
    job.level = Some(lv.level);
    job.basis = Some(lv.kind.name().to_string());
    job.mode = Some(mode.name().to_string());
    job.max_weight = Some(w);
    let payload = Payload::Verification {
        level: lv.level,
        max_weight: w,
        compared,
        problem,
        mismatch,
    };
    Ok(Outcome {
        status,
        envelope: Envelope::new(job, Vec::new(), payload),
    })
}

pub fn matrices(args: &LevelArgs, cache: Option<&Cache>) -> Result<Outcome, Failure> {
    let lv = level(args)?;
    let mut job = JobSpec::new("matrices");
    job.level = Some(lv.level);
    job.basis = Some(lv.kind.name().to_string());
    let env = cached(cache, &job, || {
        let rep = representation(lv.level, lv.kind)?;
        let payload = Payload::Matrices {
            basis: lv.kind.name().to_string(),
            dimension: rep.dim(),
            aprime: matrix_cells(&rep.aprime.to_ratfunc()),
            bprime: matrix_cells(&rep.bprime.to_ratfunc()),
        };
        Ok(Envelope::new(job.clone(), fixtures_for("matrices", &lv), payload))
    })?;
    Ok(Outcome::success(env))
}

pub fn qexp(form: FormArg, count: u32, cache: Option<&Cache>) -> Result<Outcome, Failure> {
    let form = match form {
        FormArg::A => Form::A,
        FormArg::B => Form::B,
        FormArg::E => Form::E,
        FormArg::Delta => Form::Delta,
    };
    let mut job = JobSpec::new("qexp");
    job.form = Some(form.name().to_string());
    job.terms = Some(count);
    let env = cached(cache, &job, || {
        let coefficients = match count {
            0 => Vec::new(),
            n => eisenstein_series(form, n as usize - 1).coeffs()[..n as usize]
                .iter()
                .map(fraction)
                .collect(),
        };
        let payload = Payload::Series {
            form: form.name().to_string(),
            weight: form.weight(),
            coefficients,
        };
        Ok(Envelope::new(job.clone(), Vec::new(), payload))
    })?;
    Ok(Outcome::success(env))
}

pub fn trace(args: &LevelArgs, weight: i64, cache: Option<&Cache>) -> Result<Outcome, Failure> {
    let lv = level(args)?;
    let k = check_weight(weight)?;
    normalization(lv.level, lv.kind)?;
    let mut job = JobSpec::new("trace");
    job.level = Some(lv.level);
    job.basis = Some(lv.kind.name().to_string());
    job.weight = Some(k);
    let env = cached(cache, &job, || {
        let value = coefficient_table(lv.level, lv.kind, k)?.trace_on_weight(k as i64)?;
        let payload = Payload::Trace {
            level: lv.level,
            weight: k,
            value: fraction(&value),
        };
        Ok(Envelope::new(job.clone(), Vec::new(), payload))
    })?;
    Ok(Outcome::success(env))
}
