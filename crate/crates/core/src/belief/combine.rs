use std::collections::BTreeMap;

use super::{BeliefError, MassFunction};

/// Conflict at or above `1 - TOTAL_CONFLICT_EPS` counts as total conflict.
pub const TOTAL_CONFLICT_EPS: f64 = 1e-12;

/// Unnormalized conjunctive rule: m(A) = Σ_{B∩C=A} m1(B)·m2(C).
///
/// Conflict stays on the empty set.
pub fn conjunctive_combine(
    m1: &MassFunction,
    m2: &MassFunction,
) -> Result<MassFunction, BeliefError> {
    if m1.frame() != m2.frame() {
        return Err(BeliefError::FrameMismatch);
    }
    let mut out = BTreeMap::new();
    for (b, mb) in m1.focals() {
        for (c, mc) in m2.focals() {
            *out.entry(b.intersection(c)).or_insert(0.0) += mb * mc;
        }
    }
    Ok(MassFunction::from_parts(m1.frame(), out))
}

/// Dempster's rule: the conjunctive result renormalized by 1 − m(∅).
pub fn dempster_combine(m1: &MassFunction, m2: &MassFunction) -> Result<MassFunction, BeliefError> {
    conjunctive_combine(m1, m2)?.normalized()
}
