//! Report values shared by the text and JSON outputs.
//!
//! The JSON form is the serde encoding of [`Report`]; the text form is
//! rendered from the same value, so both carry the same facts. Every text
//! line that states a number ends in a `[label]` naming where it comes from:
//! a result label from the bounds engine, or one of the labels below.

use serde::{Deserialize, Serialize};

/// Echo of the input.
pub const INPUT: &str = "input";
/// Height computed from a Groebner basis.
pub const GROEBNER_HEIGHT: &str = "groebner-height";
/// Closed-form maximal height of the ideal.
pub const GENERIC_HEIGHT: &str = "generic-height";
/// Heights demanded by the condition G_s.
pub const GS_THRESHOLD: &str = "gs-threshold";
/// Closed-form largest `s` with G_s for the generic matrix.
pub const GS_GENERIC: &str = "gs-generic";
/// Closed-form minimal number of generators for the generic matrix.
pub const GENERATOR_COUNT: &str = "generator-count";
/// Height requirements capped at the number of variables.
pub const CAPPED_HYPOTHESES: &str = "capped-height-hypotheses";
/// Known properties of the generic Rees algebra.
pub const GENERIC_STATUS: &str = "generic-status";
pub const PFAFFIAN: &str = "pfaffian";
/// A failed precondition that stopped an analysis.
pub const PRECONDITION: &str = "precondition";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub field: String,
    pub order: String,
    pub matrix: String,
    pub sections: Vec<Section>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "section", rename_all = "snake_case")]
pub enum Section {
    Height(HeightSection),
    Generic(GenericSection),
    Gs(GsSection),
    Specialization(SpecializationSection),
    Bounds(BoundsSection),
    Classification(ClassificationSection),
    Pfaffian(PfaffianSection),
    Skipped(SkippedSection),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeightSection {
    pub ideal: String,
    pub height: String,
    pub expected: u64,
    pub generic_height: bool,
}

/// Closed-form facts about the generic matrix of the same shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericSection {
    pub shape: String,
    pub max_gs: String,
    pub min_generators: u64,
    pub linear_type: bool,
    pub fiber_type: bool,
    pub td_finite_all_k: bool,
    pub td_infinite_some_k: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GsRow {
    pub j: u32,
    pub ideal: String,
    pub threshold: u64,
    pub required: u64,
    pub height: String,
    pub satisfied: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GsSection {
    pub requested_s: String,
    pub rows: Vec<GsRow>,
    pub satisfied: bool,
    pub max_s: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisRow {
    pub j: u32,
    pub ideal: String,
    pub required: u64,
    pub height: String,
    pub satisfied: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecializationSection {
    pub case: String,
    pub source: String,
    pub rows: Vec<HypothesisRow>,
    pub specializes: bool,
    pub cohen_macaulay: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRow {
    pub k: u32,
    pub source: String,
    /// `None` when the result gives no bound for this power.
    pub b0: Option<String>,
    pub td: Option<String>,
    pub b0_tag: Option<String>,
    pub td_tag: Option<String>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsSection {
    pub instance: String,
    pub source: String,
    pub hypotheses: Vec<HypothesisRow>,
    pub rows: Vec<BoundRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConclusionRow {
    pub claim: String,
    pub statement: String,
    pub source: String,
    pub hypotheses_verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationSection {
    pub instance: String,
    pub conclusions: Vec<ConclusionRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PfaffianSection {
    pub pfaffian: String,
    pub square_equals_determinant: bool,
    pub adjoint: Vec<Vec<String>>,
    pub adjoint_identity: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedSection {
    pub analysis: String,
    pub reason: String,
}

struct Text {
    out: String,
}

impl Text {
    fn heading(&mut self, title: &str) {
        self.out.push_str(&format!("\n== {title} ==\n"));
    }

    fn line(&mut self, text: impl AsRef<str>, label: &str) {
        self.out.push_str(&format!("{}  [{label}]\n", text.as_ref()));
    }

    fn plain(&mut self, text: impl AsRef<str>) {
        self.out.push_str(text.as_ref());
        self.out.push('\n');
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn mark(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILS"
    }
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut t = Text { out: String::new() };
        t.line(format!("field: {}", self.field), INPUT);
        t.plain(format!("order: {}", self.order));
        for row in self.matrix.lines() {
            t.line(format!("  {row}"), INPUT);
        }
        for section in &self.sections {
            section.render(&mut t);
        }
        t.out
    }
}

fn hypothesis_rows(t: &mut Text, rows: &[HypothesisRow], label: &str) {
    for r in rows {
        t.line(
            format!("j = {}: ht {} = {} >= {} required: {}", r.j, r.ideal, r.height, r.required, mark(r.satisfied)),
            label,
        );
    }
}

impl Section {
    fn render(&self, t: &mut Text) {
        match self {
            Section::Height(s) => {
                t.heading("height");
                t.line(format!("ht {} = {}", s.ideal, s.height), GROEBNER_HEIGHT);
                t.line(format!("generic height = {}", s.expected), GENERIC_HEIGHT);
                t.plain(format!("of generic height: {}", yes_no(s.generic_height)));
            }
            Section::Generic(s) => {
                t.heading("generic matrix");
                t.line(format!("shape: {}", s.shape), INPUT);
                t.line(format!("max s with G_s = {}", s.max_gs), GS_GENERIC);
                t.line(format!("minimal number of generators = {}", s.min_generators), GENERATOR_COUNT);
                t.line(format!("linear type: {}", yes_no(s.linear_type)), GENERIC_STATUS);
                t.line(format!("fiber type: {}", yes_no(s.fiber_type)), GENERIC_STATUS);
                t.line(format!("td(A_k(J)) finite for all k: {}", yes_no(s.td_finite_all_k)), GENERIC_STATUS);
                t.line(format!("td(A_k(J)) infinite for some k: {}", yes_no(s.td_infinite_some_k)), GENERIC_STATUS);
            }
            Section::Gs(s) => {
                t.heading("G_s");
                t.line(format!("requested s = {}", s.requested_s), INPUT);
                for r in &s.rows {
                    t.line(
                        format!(
                            "j = {}: ht {} = {} >= min(threshold {}, s) = {}: {}",
                            r.j,
                            r.ideal,
                            r.height,
                            r.threshold,
                            r.required,
                            mark(r.satisfied)
                        ),
                        GS_THRESHOLD,
                    );
                }
                t.line(format!("G_{} holds: {}", s.requested_s, yes_no(s.satisfied)), GS_THRESHOLD);
                t.line(format!("max_s = {}", s.max_s), GS_THRESHOLD);
            }
            Section::Specialization(s) => {
                t.heading("specialization");
                t.plain(format!("case: {}", s.case));
                hypothesis_rows(t, &s.rows, &s.source);
                t.line(format!("generic Rees algebra specializes: {}", yes_no(s.specializes)), &s.source);
                t.line(format!("Cohen-Macaulay: {}", s.cohen_macaulay), &s.source);
            }
            Section::Bounds(s) => {
                t.heading("degree bounds");
                t.line(format!("instance: {}", s.instance), INPUT);
                hypothesis_rows(t, &s.hypotheses, CAPPED_HYPOTHESES);
                for r in &s.rows {
                    match (&r.b0, &r.td) {
                        (Some(b0), Some(td)) => t.line(format!("k = {}: b0 <= {b0}, td <= {td}", r.k), &r.source),
                        _ => t.line(format!("k = {}: no bound", r.k), &r.source),
                    }
                    for note in &r.notes {
                        t.line(format!("  k = {}: {note}", r.k), &r.source);
                    }
                }
            }
            Section::Classification(s) => {
                t.heading("classification");
                t.line(format!("instance: {}", s.instance), INPUT);
                if s.conclusions.is_empty() {
                    t.plain("no conclusions");
                }
                for c in &s.conclusions {
                    t.line(format!("{}: {}", c.claim, c.statement), &c.source);
                }
            }
            Section::Pfaffian(s) => {
                t.heading("Pfaffian");
                t.line(format!("Pf(M) = {}", s.pfaffian), PFAFFIAN);
                t.line(format!("Pf(M)^2 = det(M): {}", yes_no(s.square_equals_determinant)), PFAFFIAN);
                t.plain("Pfaffian adjoint:");
                for row in &s.adjoint {
                    t.line(format!("  [{}]", row.join(", ")), PFAFFIAN);
                }
                t.line(format!("pfadj(M) * M = Pf(M) * I: {}", yes_no(s.adjoint_identity)), PFAFFIAN);
            }
            Section::Skipped(s) => {
                t.heading(&s.analysis);
                t.line(format!("not evaluated: {}", s.reason), PRECONDITION);
            }
        }
    }
}
