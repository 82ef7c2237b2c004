//! Report types, their JSON form and the fixed-width table form.
//!
//! The JSON schema is documented in `docs/report-schema.md`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "diopkit-report/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationInfo {
    pub name: String,
    pub digest: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimRow {
    pub arity: (usize, usize),
    pub free: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Homology {
    pub degree: i32,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexRow {
    pub arity: (usize, usize),
    pub lowest: i32,
    pub dims: Vec<usize>,
    pub homology: Vec<Homology>,
    pub euler: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CobarRow {
    pub complex: ComplexRow,
    pub h0: usize,
    pub dual_dim: usize,
    pub top_dim: usize,
    pub dual_free_dim: usize,
    pub h0_matches_dual: bool,
    pub concentrated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulRow {
    pub complex: ComplexRow,
    pub exact: bool,
    pub cobar_concentrated: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxRow {
    pub arity: (usize, usize),
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributiveRow {
    pub arity: (usize, usize),
    pub dim: usize,
    pub box_ab: usize,
    pub box_ba: usize,
    pub spanned_ab: usize,
    pub spanned_ba: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Distributive {
    pub verdict: String,
    pub rows: Vec<DistributiveRow>,
    pub dual_rows: Vec<DistributiveRow>,
    pub dual_holds: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorInfo {
    pub name: String,
    pub arity: (usize, usize),
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    Dims {
        rows: Vec<DimRow>,
    },
    Dual {
        name: String,
        generators: Vec<GeneratorInfo>,
        relation_dims: Vec<((usize, usize), usize)>,
        text: String,
    },
    Cobar {
        rows: Vec<CobarRow>,
    },
    Koszul {
        rows: Vec<KoszulRow>,
        first_nonexact: Option<(usize, usize)>,
    },
    Box {
        rows: Vec<BoxRow>,
    },
    Check {
        checks: Vec<CheckItem>,
        distributive: Distributive,
        koszul: Vec<KoszulRow>,
        first_nonexact: Option<(usize, usize)>,
    },
    VerifyAlgebra {
        symmetry_violations: Vec<String>,
        violated: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    pub args: BTreeMap<String, String>,
    pub presentations: Vec<PresentationInfo>,
    pub outcome: Outcome,
    pub verdict: String,
    pub exit_code: i32,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let names: Vec<&str> = self.presentations.iter().map(|p| p.name.as_str()).collect();
        let _ = writeln!(out, "{} {}", self.command, names.join(" "));
        match &self.outcome {
            Outcome::Dims { rows } => {
                let _ = writeln!(out, "{:>8} {:>10} {:>10}", "(m,n)", "free", "dim");
                for r in rows {
                    let _ = writeln!(out, "{:>8} {:>10} {:>10}", arity(r.arity), r.free, r.dim);
                }
            }
            Outcome::Dual { text, .. } => out.push_str(text),
            Outcome::Cobar { rows } => {
                let _ = writeln!(
                    out,
                    "{:>8} {:>24} {:>24} {:>5} {:>5}  verdict",
                    "(m,n)", "dims", "homology", "H0", "dual"
                );
                for r in rows {
                    let v = if r.h0_matches_dual && r.concentrated { "CONCENTRATED" } else { "NOT CONCENTRATED" };
                    let _ = writeln!(
                        out,
                        "{:>8} {:>24} {:>24} {:>5} {:>5}  {v}",
                        arity(r.complex.arity),
                        dims(&r.complex),
                        homology(&r.complex),
                        r.h0,
                        r.dual_dim
                    );
                }
            }
            Outcome::Koszul { rows, .. } => koszul_table(&mut out, rows),
            Outcome::Box { rows } => {
                let _ = writeln!(out, "{:>8} {:>10}", "(m,n)", "dim");
                for r in rows {
                    let _ = writeln!(out, "{:>8} {:>10}", arity(r.arity), r.dim);
                }
            }
            Outcome::Check { checks, distributive, koszul, .. } => {
                for c in checks {
                    let _ = writeln!(out, "{:<24} {:<4} {}", c.name, if c.passed { "ok" } else { "FAIL" }, c.detail);
                }
                let _ = writeln!(out, "distributive {}", distributive.verdict);
                let _ = writeln!(
                    out,
                    "{:>8} {:>6} {:>8} {:>8} {:>10} {:>10}",
                    "(m,n)", "dim", "A□B^op", "B^op□A", "span A□B", "span B□A"
                );
                for r in &distributive.rows {
                    let _ = writeln!(
                        out,
                        "{:>8} {:>6} {:>8} {:>8} {:>10} {:>10}",
                        arity(r.arity),
                        r.dim,
                        r.box_ab,
                        r.box_ba,
                        r.spanned_ab,
                        r.spanned_ba
                    );
                }
                if let Some(d) = distributive.dual_holds {
                    let _ = writeln!(out, "dual decomposes in the flipped order: {}", if d { "yes" } else { "no" });
                }
                koszul_table(&mut out, koszul);
            }
            Outcome::VerifyAlgebra { symmetry_violations, violated } => {
                for s in symmetry_violations {
                    let _ = writeln!(out, "not equivariant: {s}");
                }
                for s in violated {
                    let _ = writeln!(out, "violated relation: {s}");
                }
            }
        }
        let _ = writeln!(out, "verdict: {}", self.verdict);
        out
    }
}

pub fn homology_list(h: &BTreeMap<i32, usize>) -> Vec<Homology> {
    h.iter().map(|(&degree, &dim)| Homology { degree, dim }).collect()
}

fn arity(a: (usize, usize)) -> String {
    format!("({},{})", a.0, a.1)
}

fn dims(c: &ComplexRow) -> String {
    c.dims.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn homology(c: &ComplexRow) -> String {
    let nz: Vec<String> = c.homology.iter().filter(|h| h.dim > 0).map(|h| format!("H{}={}", h.degree, h.dim)).collect();
    if nz.is_empty() {
        "0".into()
    } else {
        nz.join(" ")
    }
}

fn koszul_table(out: &mut String, rows: &[KoszulRow]) {
    let _ = writeln!(out, "{:>8} {:>24} {:>24} {:>6}  verdict", "(m,n)", "dims", "homology", "euler");
    for r in rows {
        let mut v = String::from(if r.exact { "EXACT" } else { "NONEXACT" });
        if let Some(c) = r.cobar_concentrated {
            v.push_str(if c { " (cobar concentrated)" } else { " (cobar not concentrated)" });
        }
        let _ = writeln!(
            out,
            "{:>8} {:>24} {:>24} {:>6}  {v}",
            arity(r.complex.arity),
            dims(&r.complex),
            homology(&r.complex),
            r.complex.euler
        );
    }
}
