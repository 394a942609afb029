//! Serializable results. Every payload is plain strings and integers so
//! the same bytes come back from the cache, and text is rendered from the
//! payload rather than from the computation.

use std::fmt::Write as _;

use hecke_core::poly::{Matrix, Monomial, MultiPoly, PolyMatrix, RatFunc, Rational, Var, VarSet};
use hecke_core::table::CoefficientTable;
use serde::{Deserialize, Serialize};

use crate::job::JobSpec;

pub const ARTIFACT: &str = "hecke";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Exponent slots in `exps`.
const SLOTS: [Var; 4] = [Var::SmallA, Var::SmallB, Var::BigA, Var::BigB];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope {
    pub artifact: String,
    pub version: String,
    pub job: JobSpec,
    /// Reference matrices this payload can be compared against.
    pub fixtures: Vec<String>,
    pub payload: Payload,
}

impl Envelope {
    pub fn new(job: JobSpec, fixtures: Vec<String>, payload: Payload) -> Envelope {
        Envelope {
            artifact: ARTIFACT.to_string(),
            version: VERSION.to_string(),
            job,
            fixtures,
            payload,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub exps: [u32; 4],
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub numerator: Vec<Term>,
    pub denominator: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub i: u32,
    pub j: u32,
    pub k: u32,
    pub l: u32,
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub index: [u32; 4],
    pub genfun: Fraction,
    pub oracle: Fraction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    GeneratingFunction {
        normalization: Fraction,
        numerator: Vec<Term>,
        denominator: Vec<Term>,
    },
    CoefficientTable {
        level: u32,
        max_weight: u32,
        entries: Vec<Entry>,
    },
    Matrices {
        basis: String,
        dimension: usize,
        aprime: Vec<Vec<Cell>>,
        bprime: Vec<Vec<Cell>>,
    },
    Series {
        form: String,
        weight: u32,
        coefficients: Vec<Fraction>,
    },
    Trace {
        level: u32,
        weight: u32,
        value: Fraction,
    },
    Verification {
        level: u32,
        max_weight: u32,
        compared: usize,
        problem: Option<String>,
        mismatch: Option<Mismatch>,
    },
}

pub fn fraction(q: &Rational) -> Fraction {
    Fraction {
        num: q.numer().to_string(),
        den: q.denom().to_string(),
    }
}

pub fn parse_fraction(f: &Fraction) -> Result<Rational, String> {
    format!("{}/{}", f.num, f.den)
        .parse::<Rational>()
        .map_err(|e| format!("bad rational {}/{}: {e}", f.num, f.den))
}

pub fn terms(p: &MultiPoly) -> Vec<Term> {
    let vars = p.vars();
    p.terms()
        .iter()
        .map(|(m, c)| {
            let exps = SLOTS.map(|v| vars.index_of(v).map_or(0, |i| m.exponent(i)));
            Term {
                exps,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            }
        })
        .collect()
}

pub fn poly_from_terms(ts: &[Term], vars: VarSet) -> Result<MultiPoly, String> {
    let slots: Vec<Option<usize>> = SLOTS.iter().map(|&v| vars.index_of(v)).collect();
    let mut out = Vec::with_capacity(ts.len());
    for t in ts {
        let mut exps = vec![0u32; vars.len()];
        for (slot, &e) in slots.iter().zip(&t.exps) {
            match slot {
                Some(i) => exps[*i] = e,
                None if e == 0 => {}
                None => return Err(format!("exponent vector {:?} outside {vars:?}", t.exps)),
            }
        }
        let c = parse_fraction(&Fraction {
            num: t.num.clone(),
            den: t.den.clone(),
        })?;
        out.push((Monomial::from_exponents(&exps), c));
    }
    Ok(MultiPoly::from_terms(vars, out))
}

fn cell(f: &RatFunc) -> Cell {
    Cell {
        numerator: terms(f.num()),
        denominator: terms(f.den()),
    }
}

fn cell_value(c: &Cell) -> Result<RatFunc, String> {
    let num = poly_from_terms(&c.numerator, VarSet::AB)?;
    let den = poly_from_terms(&c.denominator, VarSet::AB)?;
    RatFunc::new(num, den).map_err(|e| e.to_string())
}

pub fn matrix_cells(m: &PolyMatrix) -> Vec<Vec<Cell>> {
    m.rows().map(|row| row.iter().map(cell).collect()).collect()
}

pub fn matrix_from_cells(cells: &[Vec<Cell>]) -> Result<PolyMatrix, String> {
    let rows = cells
        .iter()
        .map(|row| row.iter().map(cell_value).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(rows))
}

pub fn table_entries(t: &CoefficientTable) -> Vec<Entry> {
    let mut out = Vec::new();
    for (&(i, j), row) in &t.entries {
        for (&(k, l), c) in row {
            out.push(Entry {
                i,
                j,
                k,
                l,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            });
        }
    }
    out
}

/// Rebuild a table; rows with no nonzero entry are restored from the
/// weight bound.
pub fn table_from_entries(level: u32, max_weight: u32, entries: &[Entry]) -> Result<CoefficientTable, String> {
    let mut t = CoefficientTable::new(level, max_weight);
    for (i, j) in hecke_core::table::monomials_up_to(max_weight) {
        t.entries.insert((i, j), Default::default());
    }
    for e in entries {
        let c = parse_fraction(&Fraction {
            num: e.num.clone(),
            den: e.den.clone(),
        })?;
        t.entries.entry((e.i, e.j)).or_default().insert((e.k, e.l), c);
    }
    Ok(t)
}

fn show_fraction(f: &Fraction) -> String {
    if f.den == "1" {
        f.num.clone()
    } else {
        format!("{}/{}", f.num, f.den)
    }
}

impl Payload {
    /// Human-oriented rendering.
    pub fn to_text(&self) -> Result<String, String> {
        let mut s = String::new();
        match self {
            Payload::GeneratingFunction {
                normalization,
                numerator,
                denominator,
            } => {
                writeln!(s, "normalization: {}", show_fraction(normalization)).unwrap();
                writeln!(s, "numerator: {}", poly_from_terms(numerator, VarSet::AB_MARKED)?).unwrap();
                writeln!(s, "denominator: {}", poly_from_terms(denominator, VarSet::AB_MARKED)?).unwrap();
            }
            Payload::CoefficientTable { entries, .. } => {
                for e in entries {
                    let v = show_fraction(&Fraction {
                        num: e.num.clone(),
                        den: e.den.clone(),
                    });
                    writeln!(s, "c({},{},{},{}) = {v}", e.i, e.j, e.k, e.l).unwrap();
                }
            }
            Payload::Matrices { aprime, bprime, .. } => {
                writeln!(s, "rho(a') =").unwrap();
                write!(s, "{}", matrix_from_cells(aprime)?).unwrap();
                writeln!(s).unwrap();
                writeln!(s, "rho(b') =").unwrap();
                write!(s, "{}", matrix_from_cells(bprime)?).unwrap();
            }
            Payload::Series { coefficients, .. } => {
                let cells: Vec<String> = coefficients.iter().map(show_fraction).collect();
                writeln!(s, "{}", cells.join(", ")).unwrap();
            }
            Payload::Trace { value, .. } => {
                writeln!(s, "{}", show_fraction(value)).unwrap();
            }
            Payload::Verification {
                level,
                max_weight,
                compared,
                problem,
                mismatch,
            } => {
                if let Some(p) = problem {
                    writeln!(s, "error: {p}").unwrap();
                }
                match mismatch {
                    Some(m) => writeln!(
                        s,
                        "mismatch at c({},{},{},{}): genfun = {}, oracle = {}",
                        m.index[0],
                        m.index[1],
                        m.index[2],
                        m.index[3],
                        show_fraction(&m.genfun),
                        show_fraction(&m.oracle)
                    )
                    .unwrap(),
                    None if problem.is_none() => writeln!(
                        s,
                        "verified: {compared} coefficients agree for N={level} up to weight {max_weight}"
                    )
                    .unwrap(),
                    None => {}
                }
            }
        }
        Ok(s)
    }
}
