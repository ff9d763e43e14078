use super::{BeliefError, FocalSet, Frame, MassFunction, TOTAL_CONFLICT_EPS};

/// Pignistic probabilities on the singletons of a frame, in frame order.
#[derive(Debug, Clone, PartialEq)]
pub struct PignisticDistribution {
    frame: Frame,
    probs: Vec<f64>,
}

impl PignisticDistribution {
    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probs
    }

    pub fn get(&self, label: &str) -> Option<f64> {
        self.frame.index_of(label).map(|i| self.probs[i])
    }

    /// BetP(A) = Σ_{ω∈A} BetP(ω).
    pub fn probability_of(&self, set: FocalSet) -> f64 {
        set.elements().map(|i| self.probs[i]).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, f64)> + '_ {
        self.frame
            .labels()
            .iter()
            .map(String::as_str)
            .zip(self.probs.iter().copied())
    }
}

/// BetP(ω) = Σ_{B∋ω} m(B) / (|B|·(1 − m(∅))).
pub fn pignistic(m: &MassFunction) -> Result<PignisticDistribution, BeliefError> {
    let conflict = m.conflict();
    if conflict >= 1.0 - TOTAL_CONFLICT_EPS {
        return Err(BeliefError::TotalConflict);
    }
    let scale = 1.0 - conflict;
    let mut probs = vec![0.0; m.frame().len()];
    for (set, mass) in m.focals().filter(|(s, _)| !s.is_empty()) {
        let share = mass / (set.len() as f64 * scale);
        for i in set.elements() {
            probs[i] += share;
        }
    }
    Ok(PignisticDistribution {
        frame: m.frame().clone(),
        probs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn messages() -> Frame {
        Frame::atomic(&["PC", "PNC", "IC", "INC"]).unwrap()
    }

    #[test]
    fn message_only_case() {
        let f = messages();
        let m = MassFunction::new(&f, [(f.singleton(1), 0.6), (f.full_set(), 0.4)]).unwrap();
        let p = pignistic(&m).unwrap();
        assert!((p.get("PNC").unwrap() - 0.7).abs() < 1e-12);
        assert!((p.get("PC").unwrap() - 0.1).abs() < 1e-12);
    }

    #[test]
    fn first_case_after_network() {
        let f = messages();
        let m = MassFunction::new(&f, [(f.singleton(1), 0.825), (f.full_set(), 0.175)]).unwrap();
        let p = pignistic(&m).unwrap();
        for (label, want) in [
            ("PC", 0.0438),
            ("PNC", 0.8687),
            ("IC", 0.0438),
            ("INC", 0.0438),
        ] {
            assert!((p.get(label).unwrap() - want).abs() < 1e-4, "{label}");
        }
    }

    #[test]
    fn vacuous_is_uniform() {
        let f = messages();
        let p = pignistic(&MassFunction::vacuous(&f)).unwrap();
        assert!(p.probabilities().iter().all(|&x| (x - 0.25).abs() < 1e-15));
        assert!((p.probability_of(f.full_set()) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn table_two_mass() {
        let f = messages();
        let m = MassFunction::new_open_world(
            &f,
            [
                (FocalSet::EMPTY, 0.5540625),
                (f.singleton(1), 0.369375),
                (f.singleton(0), 0.0459375),
                (f.full_set(), 0.030625),
            ],
        )
        .unwrap();
        let p = pignistic(&m).unwrap();
        for (label, want) in [
            ("PC", 0.1202),
            ("IC", 0.0172),
            ("PNC", 0.8455),
            ("INC", 0.0172),
        ] {
            assert!((p.get(label).unwrap() - want).abs() < 1e-4, "{label}");
        }
    }

    #[test]
    fn all_mass_on_empty_set() {
        let f = messages();
        let m = MassFunction::new_open_world(&f, [(FocalSet::EMPTY, 1.0)]).unwrap();
        assert_eq!(pignistic(&m), Err(BeliefError::TotalConflict));
    }
}
