//! Belief functions (Dempster–Shafer / transferable belief model) and an
//! evidential social-network fusion engine.
//!
//! The crate is organised bottom-up:
//!
//! - [`belief`]: frames of discernment, focal sets, mass functions, the
//!   conjunctive and Dempster rules, pignistic probabilities, vacuous
//!   extension, marginalization, multi-valued mappings and coarsening.
//! - [`graph`]: the evidential graph whose nodes, edges and messages each
//!   carry a mass function, together with the Γ correspondence table.
//! - [`fusion`]: the per-node pipeline that classifies received messages.
//! - [`oracle`]: a dense brute-force reference used to cross-check the
//!   sparse implementation, plus seeded random mass generation.
//! - [`io`]: JSON graph/report documents, validation diagnostics and
//!   random graph generation backing the command-line tool.

pub mod belief;
pub mod fusion;
pub mod graph;
pub mod io;
pub mod oracle;

pub use belief::{
    BeliefError, FocalSet, Frame, MassFunction, MultiValuedMapping, PignisticDistribution,
    TransportStrategy,
};
pub use fusion::{fuse_at_node, FusionOptions, FusionReport, RuleSet};
pub use graph::{EvidentialGraph, GammaTable};
