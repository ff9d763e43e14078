use std::collections::BTreeMap;
use std::fmt;

use super::{BeliefError, FocalSet, Frame};

/// Tolerance on Σm = 1 for user-supplied masses.
pub const SUM_TOLERANCE: f64 = 1e-9;

/// A basic belief assignment: masses on the focal sets of one frame.
///
/// Only strictly positive masses are stored. Masses built with
/// [`MassFunction::new`] are normal (no mass on ∅); combination outputs may
/// carry conflict mass on ∅.
#[derive(Clone, PartialEq)]
pub struct MassFunction {
    frame: Frame,
    focals: BTreeMap<FocalSet, f64>,
}

impl MassFunction {
    /// Builds a normal mass function. Repeated focal sets accumulate.
    pub fn new<I>(frame: &Frame, assignments: I) -> Result<Self, BeliefError>
    where
        I: IntoIterator<Item = (FocalSet, f64)>,
    {
        Self::build(frame, assignments, false)
    }

    /// Like [`MassFunction::new`] but accepts mass on the empty set, for
    /// reading back open-world results.
    pub fn new_open_world<I>(frame: &Frame, assignments: I) -> Result<Self, BeliefError>
    where
        I: IntoIterator<Item = (FocalSet, f64)>,
    {
        Self::build(frame, assignments, true)
    }

    fn build<I>(frame: &Frame, assignments: I, allow_empty: bool) -> Result<Self, BeliefError>
    where
        I: IntoIterator<Item = (FocalSet, f64)>,
    {
        let mut focals = BTreeMap::new();
        for (set, mass) in assignments {
            if set.is_empty() && !allow_empty {
                return Err(BeliefError::EmptyFocal);
            }
            if !frame.contains_set(set) {
                return Err(BeliefError::ForeignFocal(set.bits()));
            }
            if !(mass.is_finite() && mass > 0.0 && mass <= 1.0 + SUM_TOLERANCE) {
                return Err(BeliefError::InvalidMass(mass));
            }
            *focals.entry(set).or_insert(0.0) += mass;
        }
        let total: f64 = focals.values().sum();
        if (total - 1.0).abs() > SUM_TOLERANCE {
            return Err(BeliefError::BadSum(total));
        }
        Ok(MassFunction {
            frame: frame.clone(),
            focals,
        })
    }

    /// Convenience constructor from label lists.
    pub fn from_labels<S: AsRef<str>>(
        frame: &Frame,
        assignments: &[(&[S], f64)],
    ) -> Result<Self, BeliefError> {
        let sets = assignments
            .iter()
            .map(|(labels, mass)| Ok((frame.set_of(labels)?, *mass)))
            .collect::<Result<Vec<_>, BeliefError>>()?;
        Self::new(frame, sets)
    }

    /// All mass on the whole frame.
    pub fn vacuous(frame: &Frame) -> Self {
        MassFunction {
            frame: frame.clone(),
            focals: BTreeMap::from([(frame.full_set(), 1.0)]),
        }
    }

    /// Assembles an operation result. Zero masses are dropped; entries for
    /// the same set must already be merged by the caller.
    pub(crate) fn from_parts(frame: &Frame, focals: BTreeMap<FocalSet, f64>) -> Self {
        let mut focals = focals;
        focals.retain(|_, m| *m != 0.0);
        MassFunction {
            frame: frame.clone(),
            focals,
        }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn mass(&self, set: FocalSet) -> f64 {
        self.focals.get(&set).copied().unwrap_or(0.0)
    }

    /// m(∅).
    pub fn conflict(&self) -> f64 {
        self.mass(FocalSet::EMPTY)
    }

    pub fn total(&self) -> f64 {
        self.focals.values().sum()
    }

    /// Focal sets with their masses, in ascending bitset order.
    pub fn focals(&self) -> impl ExactSizeIterator<Item = (FocalSet, f64)> + '_ {
        self.focals.iter().map(|(&s, &m)| (s, m))
    }

    pub fn focal_count(&self) -> usize {
        self.focals.len()
    }

    pub fn is_vacuous(&self) -> bool {
        self.focals.len() == 1 && self.mass(self.frame.full_set()) > 0.0
    }

    pub fn is_normal(&self) -> bool {
        self.conflict() == 0.0
    }

    /// Dempster normalization: drops ∅ and rescales by 1 − m(∅).
    pub fn normalized(&self) -> Result<Self, BeliefError> {
        let conflict = self.conflict();
        if conflict >= 1.0 - super::TOTAL_CONFLICT_EPS {
            return Err(BeliefError::TotalConflict);
        }
        let scale = 1.0 - conflict;
        let focals = self
            .focals
            .iter()
            .filter(|(s, _)| !s.is_empty())
            .map(|(&s, &m)| (s, m / scale))
            .collect();
        Ok(MassFunction::from_parts(&self.frame, focals))
    }

    /// Largest absolute mass difference over the union of both focal sets.
    pub fn max_abs_diff(&self, other: &MassFunction) -> f64 {
        self.focals
            .keys()
            .chain(other.focals.keys())
            .map(|&s| (self.mass(s) - other.mass(s)).abs())
            .fold(0.0, f64::max)
    }
}

impl fmt::Debug for MassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut map = f.debug_map();
        for (set, mass) in self.focals() {
            map.entry(&self.frame.display_set(set), &mass);
        }
        map.finish()
    }
}

impl fmt::Display for MassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (set, mass)) in self.focals().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}={:.6}", self.frame.display_set(set), mass)?;
        }
        Ok(())
    }
}
