//! Core belief-function machinery.
//!
//! Subsets of a frame are bitsets over the frame's element order and mass
//! functions store only their focal sets, so a 12-element product frame
//! (4096 subsets) costs nothing when a mass has four focals.

mod combine;
mod error;
mod focal;
mod frame;
mod mass;
mod pignistic;
mod transform;

pub use combine::{conjunctive_combine, dempster_combine, TOTAL_CONFLICT_EPS};
pub use error::BeliefError;
pub use focal::FocalSet;
pub use frame::{Frame, FrameKind, MAX_ATOMIC_ELEMENTS, MAX_PRODUCT_ELEMENTS};
pub use mass::{MassFunction, SUM_TOLERANCE};
pub use pignistic::{pignistic, PignisticDistribution};
pub use transform::{
    coarsen, marginalize, mv_transport, vacuous_extend, MultiValuedMapping, TransportStrategy,
};
