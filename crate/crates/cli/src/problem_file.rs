//! The JSON problem-file schema and its conversion into an analyzer
//! Problem. Rationals travel as strings ("3/4" or "3") so the format has
//! no numeric-precision ambiguity.

use serde::{Deserialize, Serialize};

use cantriv::analyzer::Problem;
use cantriv::lattice::Int;
use cantriv::lie::MatrixLieAlgebra;
use cantriv::linalg::{parse_rational, RatMatrix};
use cantriv::rep::{make_rep, RepKind, RepVector};

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum ProblemFile {
    Orbit(OrbitProblem),
    Direct(DirectProblem),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitProblem {
    pub n: usize,
    pub rep: RepSpec,
    pub vector: Vec<TermSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DirectProblem {
    pub n: usize,
    pub h_basis: Vec<Vec<Vec<String>>>,
    #[serde(default)]
    pub relations: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub g_characters: Option<Vec<Vec<i64>>>,
}

/// Representation selector: {"kind": "wedge2"} or {"kind": "sym", "k": 3}.
#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RepSpec {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
}

impl RepSpec {
    pub fn to_kind(&self) -> Result<RepKind, CliError> {
        let kind = match self.kind.as_str() {
            "standard" => RepKind::Standard,
            "dual" => RepKind::Dual,
            "wedge2" => RepKind::Wedge2,
            "sym" => {
                let k = self.k.ok_or_else(|| {
                    CliError::Usage("rep kind \"sym\" needs a power k".into())
                })?;
                return Ok(RepKind::Sym(k));
            }
            other => {
                return Err(CliError::Usage(format!(
                    "unknown rep kind {other:?}; expected standard, dual, wedge2 or sym"
                )))
            }
        };
        if self.k.is_some() {
            return Err(CliError::Usage(format!(
                "rep kind {:?} does not take a power k",
                self.kind
            )));
        }
        Ok(kind)
    }

    pub fn from_kind(kind: RepKind) -> RepSpec {
        match kind {
            RepKind::Standard => RepSpec { kind: "standard".into(), k: None },
            RepKind::Dual => RepSpec { kind: "dual".into(), k: None },
            RepKind::Wedge2 => RepSpec { kind: "wedge2".into(), k: None },
            RepKind::Sym(k) => RepSpec { kind: "sym".into(), k: Some(k) },
        }
    }
}

/// One term of the orbit vector: {"coeff": "1", "basis": "e1^e3"}.
#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub coeff: String,
    pub basis: String,
}

pub fn build_problem(file: ProblemFile) -> Result<Problem, CliError> {
    match file {
        ProblemFile::Orbit(orbit) => {
            let kind = orbit.rep.to_kind()?;
            let rep = make_rep(kind, orbit.n).map_err(CliError::from_core)?;
            if orbit.vector.is_empty() {
                return Err(CliError::Usage(
                    "orbit mode needs a nonempty vector".into(),
                ));
            }
            let mut terms = Vec::with_capacity(orbit.vector.len());
            for term in &orbit.vector {
                let idx = rep.parse_label(&term.basis).map_err(CliError::from_core)?;
                let coeff = parse_rational(&term.coeff).map_err(CliError::from_core)?;
                terms.push((idx, coeff));
            }
            let v = RepVector::from_terms(&rep, terms).map_err(CliError::from_core)?;
            Problem::from_orbit(&rep, &v).map_err(CliError::from_core)
        }
        ProblemFile::Direct(direct) => {
            let n = direct.n;
            let mut basis = Vec::with_capacity(direct.h_basis.len());
            for (m_idx, rows) in direct.h_basis.iter().enumerate() {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(CliError::Usage(format!(
                        "h_basis[{m_idx}] is not an {n}x{n} matrix"
                    )));
                }
                let mut parsed = Vec::with_capacity(n);
                for row in rows {
                    let mut out = Vec::with_capacity(n);
                    for entry in row {
                        out.push(parse_rational(entry).map_err(CliError::from_core)?);
                    }
                    parsed.push(out);
                }
                basis.push(RatMatrix::from_rows(parsed).map_err(CliError::from_core)?);
            }
            let h = MatrixLieAlgebra::new(n, basis).map_err(CliError::from_core)?;
            let relations = match direct.relations {
                Some(rows) => Some(int_rows(n, rows, "relations")?),
                None => None,
            };
            let g_characters = match direct.g_characters {
                Some(rows) => Some(int_rows(n, rows, "g_characters")?),
                None => None,
            };
            Problem::direct(h, relations, g_characters).map_err(CliError::from_core)
        }
    }
}

fn int_rows(n: usize, rows: Vec<Vec<i64>>, what: &str) -> Result<Vec<Vec<Int>>, CliError> {
    if let Some(bad) = rows.iter().position(|r| r.len() != n) {
        return Err(CliError::Usage(format!(
            "{what}[{bad}] has length {}, expected {n}",
            rows[bad].len()
        )));
    }
    Ok(rows
        .into_iter()
        .map(|r| r.into_iter().map(Int::from).collect())
        .collect())
}
