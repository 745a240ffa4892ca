//! Runs the core analyses on one matrix and packs the results into report
//! sections.

use reesbound::bounds::{
    classify, degree_bounds, generic_status, hypothesis_check, specialization_check, Attestation, BoundsOutcome,
    CohenMacaulay, HeightRequirement, HypothesisMode,
};
use reesbound::groebner::{is_generic_height, ComputeOptions};
use reesbound::gs::{check_gs, max_gs_generic, min_gens_generic, SValue};
use reesbound::instance::ProblemInstance;
use reesbound::matrix::{determinant, pfaffian, pfaffian_adjoint, MatrixKind, PolyMatrix};

use crate::problem::{PowerRange, Request};
use crate::report::{
    BoundRow, BoundsSection, ClassificationSection, ConclusionRow, GenericSection, GsRow, GsSection, HeightSection,
    HypothesisRow, PfaffianSection, Report, Section, SkippedSection, SpecializationSection,
};
use crate::CliError;

/// The analyses run when a problem file requests none.
pub const DEFAULT_REQUESTS: [Request; 5] = [
    Request::Height,
    Request::Gs(SValue::Infinite),
    Request::Specialize,
    Request::Bounds(PowerRange { first: 1, last: 5 }),
    Request::Classify,
];

pub struct Session {
    pub matrix: PolyMatrix,
    pub t: u32,
    pub opts: ComputeOptions,
}

impl Session {
    pub fn report(&self, sections: Vec<Section>) -> Report {
        let ring = self.matrix.ring();
        let field = match ring.field().characteristic() {
            0 => "rationals (characteristic 0)".to_string(),
            p => format!("F_{p} (use --field rationals for characteristic 0)"),
        };
        Report {
            field,
            order: ring.order().name().to_string(),
            matrix: format!("{} matrix, t = {}\n{}", self.matrix.kind(), self.t, self.matrix).trim_end().to_string(),
            sections,
        }
    }

    fn ideal(&self, j: u32) -> String {
        match self.matrix.kind() {
            MatrixKind::Alternating => format!("Pf_{}(M)", 2 * j),
            _ => format!("I_{j}(M)"),
        }
    }

    pub fn run(&self, request: Request) -> Result<Section, CliError> {
        match request {
            Request::Height => self.height(),
            Request::Gs(s) => self.gs(s),
            Request::Specialize => self.specialization(),
            Request::Bounds(range) => self.bounds(range),
            Request::Classify => self.classification(),
        }
    }

    /// Runs every request, turning precondition failures into skipped
    /// sections. Returns whether any section was skipped.
    pub fn run_all(&self, requests: &[Request]) -> Result<(Vec<Section>, bool), CliError> {
        let mut sections = vec![self.generic()?];
        let mut skipped = false;
        for &r in requests {
            match self.run(r) {
                Ok(s) => sections.push(s),
                Err(CliError::Precondition(reason)) => {
                    skipped = true;
                    sections.push(Section::Skipped(SkippedSection { analysis: request_name(r).into(), reason }));
                }
                Err(e) => return Err(e),
            }
        }
        Ok((sections, skipped))
    }

    pub fn height(&self) -> Result<Section, CliError> {
        let r = is_generic_height(&self.matrix, self.t as usize, &self.opts)?;
        Ok(Section::Height(HeightSection {
            ideal: self.ideal(self.t),
            height: r.actual.to_string(),
            expected: r.expected,
            generic_height: r.holds,
        }))
    }

    pub fn generic(&self) -> Result<Section, CliError> {
        let m = &self.matrix;
        let characteristic = m.ring().field().characteristic();
        let inst = ProblemInstance::generic(m.kind(), m.nrows() as u32, m.ncols() as u32, self.t, characteristic)
            .map_err(|e| CliError::Input(e.to_string()))?;
        let status = generic_status(&inst);
        let max_gs = match max_gs_generic(&inst) {
            SValue::Infinite => "+inf".to_string(),
            s => s.to_string(),
        };
        Ok(Section::Generic(GenericSection {
            shape: inst.to_string(),
            max_gs,
            min_generators: min_gens_generic(&inst),
            linear_type: status.linear_type,
            fiber_type: status.fiber_type,
            td_finite_all_k: status.td_finite_all_k,
            td_infinite_some_k: status.td_infinite_some_k,
        }))
    }

    pub fn gs(&self, s: SValue) -> Result<Section, CliError> {
        let r = check_gs(&self.matrix, self.t, s, &self.opts)?;
        let rows = r
            .per_j
            .iter()
            .map(|c| GsRow {
                j: c.j,
                ideal: self.ideal(c.j),
                threshold: c.threshold,
                required: c.required,
                height: c.actual.to_string(),
                satisfied: c.satisfied,
            })
            .collect();
        let max_s = match r.max_s {
            SValue::Infinite => "+inf".to_string(),
            v => v.to_string(),
        };
        Ok(Section::Gs(GsSection { requested_s: s.to_string(), rows, satisfied: r.satisfied, max_s }))
    }

    fn hypothesis_rows(&self, per_j: &[HeightRequirement]) -> Vec<HypothesisRow> {
        per_j
            .iter()
            .map(|h| HypothesisRow {
                j: h.j,
                ideal: self.ideal(h.j),
                required: h.required,
                height: h.actual.to_string(),
                satisfied: h.satisfied,
            })
            .collect()
    }

    pub fn specialization(&self) -> Result<Section, CliError> {
        let r = specialization_check(&self.matrix, self.t, &self.opts)?;
        Ok(Section::Specialization(SpecializationSection {
            case: r.hypotheses.case.to_string(),
            source: r.source.label().to_string(),
            rows: self.hypothesis_rows(&r.hypotheses.per_j),
            specializes: r.specializes,
            cohen_macaulay: match r.cohen_macaulay {
                CohenMacaulay::Yes => "yes",
                CohenMacaulay::Unknown => "unknown",
            }
            .to_string(),
        }))
    }

    pub fn bounds(&self, range: PowerRange) -> Result<Section, CliError> {
        let inst =
            ProblemInstance::from_matrix(&self.matrix, self.t).map_err(|e| CliError::Precondition(e.to_string()))?;
        // Surfaces shape and characteristic errors before any Groebner work.
        let source = degree_bounds(&inst, range.first, &Attestation::assumed(&inst))?.source();
        let report = hypothesis_check(&self.matrix, self.t, HypothesisMode::Bounds, &self.opts)?;
        let Some(attestation) = Attestation::from_report(&report) else {
            let failed: Vec<String> = report
                .per_j
                .iter()
                .filter(|h| !h.satisfied)
                .map(|h| format!("ht {} = {} < {}", self.ideal(h.j), h.actual, h.required))
                .collect();
            return Err(CliError::Precondition(format!("height hypotheses fail: {}", failed.join(", "))));
        };
        let mut rows = Vec::new();
        for k in range.iter() {
            rows.push(match degree_bounds(&inst, k, &attestation)? {
                BoundsOutcome::Bounds(b) => BoundRow {
                    k,
                    source: b.source.label().into(),
                    b0: Some(b.b0.to_string()),
                    td: Some(b.td.to_string()),
                    b0_tag: Some(b.b0.tag().into()),
                    td_tag: Some(b.td.tag().into()),
                    notes: b.notes,
                },
                BoundsOutcome::NotApplicable { k, source, reason } => BoundRow {
                    k,
                    source: source.label().into(),
                    b0: None,
                    td: None,
                    b0_tag: None,
                    td_tag: None,
                    notes: vec![reason],
                },
            });
        }
        Ok(Section::Bounds(BoundsSection {
            instance: inst.to_string(),
            source: source.label().into(),
            hypotheses: self.hypothesis_rows(&report.per_j),
            rows,
        }))
    }

    pub fn classification(&self) -> Result<Section, CliError> {
        let r = classify(&self.matrix, self.t, &self.opts)?;
        let conclusions = r
            .conclusions
            .iter()
            .map(|c| ConclusionRow {
                claim: c.claim.tag().into(),
                statement: c.claim.to_string(),
                source: c.source.label().into(),
                hypotheses_verified: c.hypotheses_verified,
            })
            .collect();
        Ok(Section::Classification(ClassificationSection { instance: r.instance.to_string(), conclusions }))
    }

    pub fn pfaffian(&self) -> Result<Section, CliError> {
        let m = &self.matrix;
        let pf = pfaffian(m)?;
        let det = determinant(m)?;
        let adj = pfaffian_adjoint(m)?;
        let product = adj.mul(m)?;
        let identity = product == PolyMatrix::scalar(m.ring(), m.nrows(), &pf);
        Ok(Section::Pfaffian(PfaffianSection {
            pfaffian: pf.to_string(),
            square_equals_determinant: &pf * &pf == det,
            adjoint: adj.row_vecs().iter().map(|row| row.iter().map(ToString::to_string).collect()).collect(),
            adjoint_identity: identity,
        }))
    }
}

pub fn request_name(r: Request) -> &'static str {
    match r {
        Request::Height => "height",
        Request::Gs(_) => "G_s",
        Request::Specialize => "specialization",
        Request::Bounds(_) => "degree bounds",
        Request::Classify => "classification",
    }
}
