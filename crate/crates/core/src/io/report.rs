use serde::{Deserialize, Serialize};

use crate::belief::MassFunction;
use crate::fusion::FusionReport;

use super::FORMAT_VERSION;

/// One focal entry of a serialized mass. Elements of a product frame are
/// written as label tuples, `["Person", "Friendly"]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MassEntry {
    pub focal: Vec<ElementRef>,
    pub mass: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRef {
    Label(String),
    Tuple(Vec<String>),
}

pub(crate) fn mass_entries(m: &MassFunction) -> Vec<MassEntry> {
    let frame = m.frame();
    m.focals()
        .map(|(set, mass)| MassEntry {
            focal: set
                .elements()
                .map(|e| {
                    if frame.is_product() {
                        ElementRef::Tuple(frame.element_path(e))
                    } else {
                        ElementRef::Label(frame.label(e).to_string())
                    }
                })
                .collect(),
            mass,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportOptions {
    pub gamma_strategy: String,
    pub rule: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SourceDoc {
    pub message: String,
    pub sender: String,
    pub network: Vec<MassEntry>,
    pub gamma: Vec<MassEntry>,
    pub fused: Vec<MassEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BetPEntry {
    pub label: String,
    pub probability: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecisionDoc {
    pub label: String,
    pub probability: f64,
    pub ambiguous: bool,
}

/// Serialized [`FusionReport`] with every intermediate mass.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: String,
    pub target: String,
    pub options: ReportOptions,
    pub sources: Vec<SourceDoc>,
    pub global: Vec<MassEntry>,
    pub conflict: f64,
    pub betp: Vec<BetPEntry>,
    pub decision: DecisionDoc,
}

impl ReportDocument {
    pub fn from_report(report: &FusionReport) -> Self {
        ReportDocument {
            version: FORMAT_VERSION.to_string(),
            target: report.target.clone(),
            options: ReportOptions {
                gamma_strategy: report.options.strategy.as_str().to_string(),
                rule: report.options.rules.as_str().to_string(),
            },
            sources: report
                .sources
                .iter()
                .map(|s| SourceDoc {
                    message: s.message.clone(),
                    sender: s.sender.clone(),
                    network: mass_entries(&s.network),
                    gamma: mass_entries(&s.gamma),
                    fused: mass_entries(&s.fused),
                })
                .collect(),
            global: mass_entries(&report.global),
            conflict: report.conflict,
            betp: report
                .decision
                .betp
                .iter()
                .map(|(label, probability)| BetPEntry {
                    label: label.to_string(),
                    probability,
                })
                .collect(),
            decision: DecisionDoc {
                label: report.decision.label.clone(),
                probability: report.decision.probability(),
                ambiguous: report.decision.ambiguous,
            },
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// `decision: <label> (BetP=<p>, conflict=<k>)`
    pub fn decision_line(&self) -> String {
        format!(
            "decision: {} (BetP={:.6}, conflict={:.6})",
            self.decision.label, self.decision.probability, self.conflict
        )
    }
}
