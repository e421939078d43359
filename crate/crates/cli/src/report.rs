//! Report serialization: a stable JSON shape for analysis results (integers
//! as decimal strings, fixed field order, canonical row order) plus the
//! human-readable text and table renderings. Emitted JSON round-trips
//! byte-identically through parse + re-emit.

use serde::{Deserialize, Serialize};

use cantriv::analyzer::{AnalysisReport, Provenance};
use cantriv::lattice::CharClass;

use crate::problem_file::{RepSpec, TermSpec};

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ReportFile {
    pub provenance: ProvenanceFile,
    pub dim_g: usize,
    pub dim_h: usize,
    pub dim_quotient: usize,
    pub character_group: GroupFile,
    pub multiplicities: Vec<MultiplicityEntry>,
    pub delta: ClassFile,
    pub strict_trivial: bool,
    pub det_class: ClassFile,
    pub g_multiple: Option<MultipleFile>,
    pub kappa_note: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum ProvenanceFile {
    Orbit(OrbitProvenance),
    Direct(DirectProvenance),
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct OrbitProvenance {
    pub n: usize,
    pub rep: RepSpec,
    pub vector: Vec<TermSpec>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct DirectProvenance {
    pub n: usize,
    pub dim_h: usize,
    pub relations: String,
}

/// X(T_H) = Z/d_1 x ... x Z/d_k x Z^free_rank.
#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub ambient_rank: usize,
    pub invariant_factors: Vec<String>,
    pub free_rank: usize,
}

/// Class coordinates: torsion entries against the invariant factors, then
/// free entries.
#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ClassFile {
    pub torsion: Vec<String>,
    pub free: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct MultiplicityEntry {
    pub class: ClassFile,
    pub count: usize,
}

/// All solutions of delta = m * det_class: m = m0 + period * Z, where
/// period "0" means the solution is unique.
#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct MultipleFile {
    pub m0: String,
    pub period: String,
}

impl ClassFile {
    fn build(c: &CharClass) -> ClassFile {
        ClassFile {
            torsion: c.torsion.iter().map(|x| x.to_string()).collect(),
            free: c.free.iter().map(|x| x.to_string()).collect(),
        }
    }

    pub fn render(&self) -> String {
        format!("t[{}] f[{}]", self.torsion.join(","), self.free.join(","))
    }
}

impl ProvenanceFile {
    pub fn build(p: &Provenance) -> ProvenanceFile {
        match p {
            Provenance::Orbit { kind, n, terms } => ProvenanceFile::Orbit(OrbitProvenance {
                n: *n,
                rep: RepSpec::from_kind(*kind),
                vector: terms
                    .iter()
                    .map(|(label, coeff)| TermSpec {
                        coeff: coeff.to_string(),
                        basis: label.to_string(),
                    })
                    .collect(),
            }),
            Provenance::Direct {
                n,
                dim_h,
                relations_given,
            } => ProvenanceFile::Direct(DirectProvenance {
                n: *n,
                dim_h: *dim_h,
                relations: if *relations_given {
                    "given".into()
                } else {
                    "connected-torus assumption".into()
                },
            }),
        }
    }

    fn render(&self) -> String {
        match self {
            ProvenanceFile::Orbit(o) => {
                let rep = match o.rep.k {
                    Some(k) => format!("{}^{k}", o.rep.kind),
                    None => o.rep.kind.clone(),
                };
                let terms: Vec<String> = o
                    .vector
                    .iter()
                    .map(|t| format!("{}*{}", t.coeff, t.basis))
                    .collect();
                format!("orbit of v = {} under GL({}) in {rep}", terms.join(" + "), o.n)
            }
            ProvenanceFile::Direct(d) => format!(
                "direct input: dim h = {} in gl({}), relations {}",
                d.dim_h, d.n, d.relations
            ),
        }
    }
}

impl ReportFile {
    pub fn build(provenance: &Provenance, report: &AnalysisReport) -> ReportFile {
        ReportFile {
            provenance: ProvenanceFile::build(provenance),
            dim_g: report.dim_g,
            dim_h: report.dim_h,
            dim_quotient: report.dim_quotient,
            character_group: GroupFile {
                ambient_rank: report.character_group.ambient_rank(),
                invariant_factors: report
                    .character_group
                    .invariant_factors()
                    .iter()
                    .map(|d| d.to_string())
                    .collect(),
                free_rank: report.character_group.free_rank(),
            },
            multiplicities: report
                .multiplicities
                .iter()
                .map(|(class, &count)| MultiplicityEntry {
                    class: ClassFile::build(class),
                    count,
                })
                .collect(),
            delta: ClassFile::build(&report.delta),
            strict_trivial: report.strict_trivial,
            det_class: ClassFile::build(&report.det_class),
            g_multiple: report.g_multiple.as_ref().map(|(m0, period)| MultipleFile {
                m0: m0.to_string(),
                period: period.to_string(),
            }),
            kappa_note: report.kappa_note.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render_group(&self) -> String {
        let g = &self.character_group;
        let mut parts: Vec<String> = g
            .invariant_factors
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect();
        match g.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        if parts.is_empty() {
            "trivial".into()
        } else {
            parts.join(" x ")
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("problem: {}", self.provenance.render()));
        line(format!(
            "dim g = {}, dim h = {}, dim g/h = {}",
            self.dim_g, self.dim_h, self.dim_quotient
        ));
        line(format!(
            "character group X(T_H) = {} (ambient rank {})",
            self.render_group(),
            self.character_group.ambient_rank
        ));
        line("weight multiplicities on g/h:".into());
        if self.multiplicities.is_empty() {
            line("  (none: g/h = 0)".into());
        }
        for entry in &self.multiplicities {
            line(format!("  {}  x {}", entry.class.render(), entry.count));
        }
        line(format!("delta = {}", self.delta.render()));
        line(format!("strict_trivial = {}", self.strict_trivial));
        line(format!("det_class = {}", self.det_class.render()));
        line(format!("g_multiple: {}", render_multiple(&self.g_multiple)));
        line(format!("note: {}", self.kappa_note));
        out
    }
}

pub fn render_multiple(m: &Option<MultipleFile>) -> String {
    match m {
        None => "none".into(),
        Some(m) if m.period == "0" => format!("delta = {} * det_class (unique)", m.m0),
        Some(m) => format!("delta = m * det_class for every m = {} (mod {})", m.m0, m.period),
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SweepFile {
    pub family: String,
    pub rows: Vec<SweepRow>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SweepRow {
    pub parameter: u64,
    pub dim_quotient: usize,
    pub delta: ClassFile,
    pub strict_trivial: bool,
    pub g_multiple: Option<MultipleFile>,
}

impl SweepRow {
    pub fn build(parameter: u64, report: &AnalysisReport) -> SweepRow {
        SweepRow {
            parameter,
            dim_quotient: report.dim_quotient,
            delta: ClassFile::build(&report.delta),
            strict_trivial: report.strict_trivial,
            g_multiple: report.g_multiple.as_ref().map(|(m0, period)| MultipleFile {
                m0: m0.to_string(),
                period: period.to_string(),
            }),
        }
    }
}

impl SweepFile {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("sweep serializes");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let param_head = match self.family.as_str() {
            "secant" => "n",
            "rnc" => "k",
            other => other,
        };
        let headers = [param_head, "dim_quotient", "delta", "strict_trivial", "g_multiple"];
        let rows: Vec<[String; 5]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.parameter.to_string(),
                    r.dim_quotient.to_string(),
                    r.delta.render(),
                    r.strict_trivial.to_string(),
                    match &r.g_multiple {
                        None => "none".into(),
                        Some(m) if m.period == "0" => format!("m = {}", m.m0),
                        Some(m) => format!("m = {} (mod {})", m.m0, m.period),
                    },
                ]
            })
            .collect();
        let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let mut out = String::new();
        let mut push_row = |cells: &[String]| {
            let line: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        };
        push_row(&headers.map(String::from));
        push_row(&widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>());
        for row in &rows {
            push_row(row);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cantriv::analyzer::{self, Problem};
    use cantriv::lie::MatrixLieAlgebra;
    use cantriv::linalg::RatMatrix;

    fn report_for(p: &Problem) -> ReportFile {
        ReportFile::build(p.provenance(), &analyzer::analyze(p).unwrap())
    }

    #[test]
    fn json_round_trips_byte_identically() {
        let secant = analyzer::builtin_secant(5).unwrap();
        let rnc = analyzer::builtin_rnc(3).unwrap();
        let e12 = RatMatrix::from_int_rows(&[&[0, 1], &[0, 0]]);
        let e22 = RatMatrix::from_int_rows(&[&[0, 0], &[0, 1]]);
        let h = MatrixLieAlgebra::new(2, vec![e12, e22]).unwrap();
        let direct = Problem::direct(h, None, None).unwrap();
        for p in [&secant, &rnc, &direct] {
            let file = report_for(p);
            let json = file.to_json();
            let parsed: ReportFile = serde_json::from_str(&json).unwrap();
            assert_eq!(parsed, file);
            assert_eq!(parsed.to_json(), json);
        }
    }

    #[test]
    fn group_rendering() {
        let secant = report_for(&analyzer::builtin_secant(5).unwrap());
        assert_eq!(secant.render_group(), "Z^3");
        let rnc = report_for(&analyzer::builtin_rnc(4).unwrap());
        assert_eq!(rnc.render_group(), "Z/4 x Z");
        let rnc1 = report_for(&analyzer::builtin_rnc(1).unwrap());
        assert_eq!(rnc1.render_group(), "Z");
    }

    #[test]
    fn text_report_carries_the_verdicts() {
        let file = report_for(&analyzer::builtin_rnc(2).unwrap());
        let text = file.to_text();
        assert!(text.contains("strict_trivial = false"));
        assert!(text.contains("delta = t[1] f[1]"));
        assert!(text.contains("delta = 1 * det_class (unique)"));
        assert!(text.contains("character group X(T_H) = Z/2 x Z"));
    }

    #[test]
    fn sweep_table_is_aligned_and_ordered() {
        let rows: Vec<SweepRow> = (1..=3)
            .map(|k| {
                let p = analyzer::builtin_rnc(k).unwrap();
                SweepRow::build(u64::from(k), &analyzer::analyze(&p).unwrap())
            })
            .collect();
        let table = SweepFile {
            family: "rnc".into(),
            rows,
        }
        .to_table();
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines[0].starts_with("k "));
        assert!(lines[2].starts_with("1 "));
        assert!(lines[3].starts_with("2 "));
        assert!(lines[4].starts_with("3 "));
        assert!(lines[4].contains("none"));
    }
}
