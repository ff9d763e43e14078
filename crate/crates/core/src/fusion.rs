//! Message classification at a receiving node.
//!
//! For every message addressed to the target:
//!
//! 1. network belief: sender node mass and edge mass, vacuously extended to
//!    `Ω_N × Ω_L` and combined (Dempster by default);
//! 2. Γ passage: the network belief transported to `Ω_Mess`;
//! 3. message fusion: the message mass combined with the Γ passage
//!    (conjunctive by default, conflict kept).
//!
//! The per-message results are then fused conjunctively in message-id
//! order and the pignistic probability picks the label.

use thiserror::Error;

use crate::belief::{
    conjunctive_combine, dempster_combine, mv_transport, pignistic, vacuous_extend, BeliefError,
    Frame, MassFunction, PignisticDistribution, TransportStrategy,
};
use crate::graph::{validate_graph, Diagnostic, EvidentialGraph, GammaTable};

/// Top-two BetP values closer than this flag the decision as ambiguous.
pub const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FusionError {
    #[error("unknown target node `{0}`")]
    UnknownTarget(String),
    #[error("node `{0}` has no incoming messages")]
    NoIncomingMessages(String),
    #[error("nothing to fuse")]
    EmptyInput,
    #[error("graph failed validation with {} diagnostic(s)", .0.len())]
    InvalidGraph(Vec<Diagnostic>),
    #[error("{0} is not defined on the expected frame")]
    WrongFrame(&'static str),
    #[error(transparent)]
    Belief(#[from] BeliefError),
}

/// Which combination rule each pipeline stage uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RuleSet {
    /// Dempster for the network belief, conjunctive for message and global
    /// fusion.
    #[default]
    Mixed,
    /// Conjunctive everywhere.
    Conjunctive,
    /// Dempster everywhere.
    Dempster,
}

impl RuleSet {
    pub fn as_str(self) -> &'static str {
        match self {
            RuleSet::Mixed => "mixed",
            RuleSet::Conjunctive => "conjunctive",
            RuleSet::Dempster => "dempster",
        }
    }

    fn network_rule(self) -> Rule {
        match self {
            RuleSet::Mixed | RuleSet::Dempster => Rule::Dempster,
            RuleSet::Conjunctive => Rule::Conjunctive,
        }
    }

    fn fusion_rule(self) -> Rule {
        match self {
            RuleSet::Mixed | RuleSet::Conjunctive => Rule::Conjunctive,
            RuleSet::Dempster => Rule::Dempster,
        }
    }
}

impl std::str::FromStr for RuleSet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "mixed" => Ok(RuleSet::Mixed),
            "conjunctive" => Ok(RuleSet::Conjunctive),
            "dempster" => Ok(RuleSet::Dempster),
            other => Err(format!("unknown rule set `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rule {
    Conjunctive,
    Dempster,
}

impl Rule {
    fn combine(self, a: &MassFunction, b: &MassFunction) -> Result<MassFunction, BeliefError> {
        match self {
            Rule::Conjunctive => conjunctive_combine(a, b),
            Rule::Dempster => dempster_combine(a, b),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FusionOptions {
    pub strategy: TransportStrategy,
    pub rules: RuleSet,
}

/// Sender node ⊕ edge on `product`. Both extensions are cylinders over
/// different axes, so their conjunctive combination never conflicts.
pub fn network_belief(
    node_mass: &MassFunction,
    edge_mass: &MassFunction,
    product: &Frame,
) -> Result<MassFunction, FusionError> {
    network_belief_with(node_mass, edge_mass, product, RuleSet::Mixed)
}

fn network_belief_with(
    node_mass: &MassFunction,
    edge_mass: &MassFunction,
    product: &Frame,
    rules: RuleSet,
) -> Result<MassFunction, FusionError> {
    match product.constituents() {
        [n, l] if n == node_mass.frame() && l == edge_mass.frame() => {}
        _ => return Err(FusionError::WrongFrame("node or edge mass")),
    }
    let node = vacuous_extend(node_mass, product)?;
    let edge = vacuous_extend(edge_mass, product)?;
    let m = rules.network_rule().combine(&node, &edge)?;
    debug_assert!(m.conflict() == 0.0, "network belief produced conflict");
    Ok(m)
}

/// Transports a network belief through Γ onto the message frame.
pub fn gamma_passage(
    network: &MassFunction,
    gamma: &GammaTable,
    strategy: TransportStrategy,
) -> Result<MassFunction, FusionError> {
    let mapping = gamma
        .to_mapping(network.frame())
        .map_err(|_| FusionError::WrongFrame("network belief"))?;
    Ok(mv_transport(network, &mapping, strategy)?)
}

/// Message mass ⊚ Γ passage; conflict is kept on ∅.
pub fn message_fusion(
    message: &MassFunction,
    gamma_mass: &MassFunction,
) -> Result<MassFunction, FusionError> {
    Ok(conjunctive_combine(message, gamma_mass)?)
}

/// Left fold of the conjunctive rule over the per-message results.
pub fn global_fusion(results: &[MassFunction]) -> Result<MassFunction, FusionError> {
    global_fusion_with(results, RuleSet::Mixed)
}

fn global_fusion_with(
    results: &[MassFunction],
    rules: RuleSet,
) -> Result<MassFunction, FusionError> {
    let (first, rest) = results.split_first().ok_or(FusionError::EmptyInput)?;
    let rule = rules.fusion_rule();
    rest.iter()
        .try_fold(first.clone(), |acc, m| rule.combine(&acc, m))
        .map_err(FusionError::from)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Decision {
    pub betp: PignisticDistribution,
    pub index: usize,
    pub label: String,
    /// Set when the two largest BetP values differ by less than
    /// [`TIE_TOLERANCE`].
    pub ambiguous: bool,
}

impl Decision {
    pub fn probability(&self) -> f64 {
        self.betp.probabilities()[self.index]
    }
}

/// Pignistic decision. Ties go to the first label in frame order.
pub fn decide(m: &MassFunction) -> Result<Decision, FusionError> {
    let betp = pignistic(m)?;
    let probs = betp.probabilities();
    let mut best = 0;
    for (i, &p) in probs.iter().enumerate().skip(1) {
        if p > probs[best] + TIE_TOLERANCE {
            best = i;
        }
    }
    let ambiguous = probs
        .iter()
        .enumerate()
        .any(|(i, &p)| i != best && (probs[best] - p).abs() < TIE_TOLERANCE);
    Ok(Decision {
        label: betp.frame().label(best).to_string(),
        index: best,
        ambiguous,
        betp,
    })
}

/// Intermediate masses for one incoming message.
#[derive(Debug, Clone, PartialEq)]
pub struct SourceTrace {
    pub message: String,
    pub sender: String,
    /// Network belief on `Ω_N × Ω_L`.
    pub network: MassFunction,
    /// Γ passage on `Ω_Mess`.
    pub gamma: MassFunction,
    /// Message fused with the Γ passage.
    pub fused: MassFunction,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FusionReport {
    pub target: String,
    pub options: FusionOptions,
    pub sources: Vec<SourceTrace>,
    pub global: MassFunction,
    pub conflict: f64,
    pub decision: Decision,
}

/// Runs the full pipeline for every message received by `target`.
pub fn fuse_at_node(
    graph: &EvidentialGraph,
    target: &str,
    options: FusionOptions,
) -> Result<FusionReport, FusionError> {
    let diagnostics = validate_graph(graph);
    if !diagnostics.is_empty() {
        return Err(FusionError::InvalidGraph(diagnostics));
    }
    if graph.node(target).is_none() {
        return Err(FusionError::UnknownTarget(target.to_string()));
    }
    let mut sources = Vec::new();
    for msg in graph.incoming_messages(target) {
        let sender = graph.node(&msg.from).expect("validated");
        let edge = graph.edge(&msg.from, &msg.to).expect("validated");
        let network = network_belief_with(
            &sender.mass,
            &edge.mass,
            graph.product_frame(),
            options.rules,
        )?;
        let gamma = mv_transport(&network, graph.gamma_mapping(), options.strategy)?;
        let fused = options.rules.fusion_rule().combine(&msg.mass, &gamma)?;
        sources.push(SourceTrace {
            message: msg.id.clone(),
            sender: msg.from.clone(),
            network,
            gamma,
            fused,
        });
    }
    if sources.is_empty() {
        return Err(FusionError::NoIncomingMessages(target.to_string()));
    }
    let fused: Vec<MassFunction> = sources.iter().map(|s| s.fused.clone()).collect();
    let global = global_fusion_with(&fused, options.rules)?;
    let decision = decide(&global)?;
    Ok(FusionReport {
        target: target.to_string(),
        options,
        sources,
        conflict: global.conflict(),
        global,
        decision,
    })
}
