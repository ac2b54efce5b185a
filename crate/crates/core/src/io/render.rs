//! Document writers and machine-readable reports.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use crate::classical::Af;
use crate::extension::{FExtension, FExtensionKind};
use crate::fas::Fas;
use crate::labeling::FuzzyLabeling;
use crate::postulates::{PostulateId, PostulateReport};
use crate::principles::{Outcome, SweepTable};
use crate::semantics::{CharacteristicValueSet, LabelingSet, SemanticsId};

pub fn render_fas(fas: &Fas) -> String {
    let mut out = String::new();
    for (id, d) in fas.arguments() {
        writeln!(out, "arg({id}, {d}).").unwrap();
    }
    for (from, to, w) in fas.attacks() {
        writeln!(out, "att({from}, {to}, {w}).").unwrap();
    }
    out
}

pub fn render_labeling(lab: &FuzzyLabeling) -> String {
    let mut out = String::new();
    for (id, t) in lab.iter() {
        writeln!(out, "lab({id}, {}, {}, {}).", t.accept, t.reject, t.undec).unwrap();
    }
    out
}

pub fn render_extension(ext: &FExtension) -> String {
    let mut out = String::new();
    for (id, d) in ext.iter() {
        writeln!(out, "ext({id}, {d}).").unwrap();
    }
    out
}

pub fn render_af(af: &Af) -> String {
    let mut out = String::new();
    for id in af.arguments() {
        writeln!(out, "arg({id}).").unwrap();
    }
    for (from, to) in af.attacks() {
        writeln!(out, "att({from}, {to}).").unwrap();
    }
    out
}

/// Columns padded to their widest cell, separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let parts: Vec<String> = cells.zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(&mut header.iter().copied());
    for row in rows {
        line(&mut row.iter().map(String::as_str));
    }
    out
}

fn labeling_table(lab: &FuzzyLabeling) -> String {
    let rows: Vec<Vec<String>> = lab
        .iter()
        .map(|(id, t)| {
            vec![
                id.to_string(),
                t.accept.to_string(),
                t.reject.to_string(),
                t.undec.to_string(),
            ]
        })
        .collect();
    table(&["argument", "a", "r", "u"], &rows)
}

/// A result that renders as JSON or as aligned text.
pub trait Report: Serialize {
    fn pretty(&self) -> String;

    /// True when the result records a failed check.
    fn has_findings(&self) -> bool {
        false
    }
}

pub fn render_report<R: Report + ?Sized>(report: &R, pretty: bool) -> String {
    if pretty {
        report.pretty()
    } else {
        let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
        s.push('\n');
        s
    }
}

pub const GRID_DOMAIN: &str = "complete labelings over the characteristic grid";

#[derive(Debug, Clone, Serialize)]
pub struct LabelingSetReport {
    pub semantics: SemanticsId,
    pub domain: &'static str,
    pub count: usize,
    pub labelings: LabelingSet,
}

impl LabelingSetReport {
    pub fn new(semantics: SemanticsId, labelings: LabelingSet) -> Self {
        let domain = match semantics {
            SemanticsId::Grounded => "least fixpoint",
            SemanticsId::ConflictFree
            | SemanticsId::Admissible
            | SemanticsId::JvAdmissible
            | SemanticsId::VjAdmissible => "labelings with grid-valued acceptability and rejectability",
            _ => GRID_DOMAIN,
        };
        LabelingSetReport {
            semantics,
            domain,
            count: labelings.len(),
            labelings,
        }
    }
}

impl Report for LabelingSetReport {
    fn pretty(&self) -> String {
        let mut out = format!("{} ({})\ncount: {}\n", self.semantics, self.domain, self.count);
        for (i, lab) in self.labelings.iter().enumerate() {
            writeln!(out, "\n#{}", i + 1).unwrap();
            out.push_str(&labeling_table(lab));
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub semantics: Option<SemanticsId>,
    pub member: Option<bool>,
    pub postulates: BTreeMap<PostulateId, PostulateReport>,
}

impl Report for CheckReport {
    fn pretty(&self) -> String {
        let mut out = String::new();
        if let (Some(s), Some(m)) = (self.semantics, self.member) {
            writeln!(out, "{s}: {}", if m { "yes" } else { "no" }).unwrap();
        }
        let rows: Vec<Vec<String>> = self
            .postulates
            .values()
            .map(|r| {
                let witnesses: Vec<String> = r
                    .witnesses
                    .iter()
                    .map(|w| format!("{} ({} vs {})", w.argument, w.lhs, w.rhs))
                    .collect();
                vec![
                    r.postulate.to_string(),
                    if r.satisfied { "ok" } else { "violated" }.to_string(),
                    witnesses.join(", "),
                ]
            })
            .collect();
        out.push_str(&table(&["postulate", "status", "witnesses"], &rows));
        out
    }

    fn has_findings(&self) -> bool {
        self.member == Some(false) || self.postulates.values().any(|r| !r.satisfied)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtensionSetReport {
    pub kind: FExtensionKind,
    pub domain: &'static str,
    pub count: usize,
    pub extensions: Vec<FExtension>,
}

impl ExtensionSetReport {
    pub fn new(kind: FExtensionKind, extensions: Vec<FExtension>) -> Self {
        ExtensionSetReport {
            kind,
            domain: "fuzzy sets over the characteristic grid",
            count: extensions.len(),
            extensions,
        }
    }
}

impl Report for ExtensionSetReport {
    fn pretty(&self) -> String {
        let mut out = format!("{} f-extensions ({})\ncount: {}\n", self.kind, self.domain, self.count);
        for ext in &self.extensions {
            let parts: Vec<String> = ext.iter().map(|(id, d)| format!("({id}, {d})")).collect();
            writeln!(out, "{{{}}}", parts.join(", ")).unwrap();
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ValuesReport {
    pub count: usize,
    pub values: CharacteristicValueSet,
}

impl ValuesReport {
    pub fn new(values: CharacteristicValueSet) -> Self {
        ValuesReport {
            count: values.len(),
            values,
        }
    }
}

impl Report for ValuesReport {
    fn pretty(&self) -> String {
        let parts: Vec<String> = self.values.values().iter().map(|d| d.to_string()).collect();
        format!("{} values: {}\n", self.count, parts.join(" "))
    }
}

impl Report for SweepTable {
    fn pretty(&self) -> String {
        let mut header = vec!["semantics"];
        header.extend(self.principles.iter().map(|p| p.abbreviation()));
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| {
                let mut cells = vec![row.semantics.to_string()];
                cells.extend(row.cells.iter().map(|c| match c.outcome {
                    Outcome::NoViolationFound => "-".to_string(),
                    Outcome::Violated => "violated".to_string(),
                }));
                cells
            })
            .collect();
        format!(
            "seed {}, {} instances, up to {} arguments\n{}\n- : {}\n",
            self.family.seed,
            self.family.count,
            self.family.max_args,
            table(&header, &rows),
            self.note
        )
    }
}
