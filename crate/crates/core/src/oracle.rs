//! Dense brute-force reference implementation.
//!
//! A [`DenseMass`] stores one mass per subset of a small frame, indexed by
//! subset rank in binary counting order (bit `i` of the rank is element `i`),
//! the same order the sparse core uses for its bitsets. Every rule here is a
//! full loop over all subsets or subset pairs and shares no code with
//! [`crate::belief`] beyond reading a mass function's focal entries.
//!
//! [`random_bba`] lives here too: seeded, reproducible normal masses for the
//! property suites and the random graph generator.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::belief::{BeliefError, FocalSet, Frame, MassFunction};

/// Largest frame the dense oracle accepts.
pub const ORACLE_MAX_ELEMENTS: usize = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct DenseMass {
    frame_len: usize,
    masses: Vec<f64>,
}

impl DenseMass {
    pub fn zeros(frame_len: usize) -> Result<Self, BeliefError> {
        if frame_len > ORACLE_MAX_ELEMENTS {
            return Err(BeliefError::OracleFrameTooLarge {
                size: frame_len,
                cap: ORACLE_MAX_ELEMENTS,
            });
        }
        Ok(DenseMass {
            frame_len,
            masses: vec![0.0; 1 << frame_len],
        })
    }

    pub fn from_mass(m: &MassFunction) -> Result<Self, BeliefError> {
        let mut dense = Self::zeros(m.frame().len())?;
        for (set, mass) in m.focals() {
            dense.masses[set.bits() as usize] += mass;
        }
        Ok(dense)
    }

    pub fn frame_len(&self) -> usize {
        self.frame_len
    }

    pub fn masses(&self) -> &[f64] {
        &self.masses
    }

    pub fn get(&self, rank: usize) -> f64 {
        self.masses[rank]
    }

    pub fn total(&self) -> f64 {
        self.masses.iter().sum()
    }

    /// Largest |dense(A) − sparse(A)| over every subset A.
    pub fn max_abs_diff(&self, m: &MassFunction) -> f64 {
        assert_eq!(self.frame_len, m.frame().len(), "frame size mismatch");
        (0..self.masses.len())
            .map(|rank| (self.masses[rank] - m.mass(FocalSet::from_bits(rank as u32))).abs())
            .fold(0.0, f64::max)
    }
}

/// m(A) = Σ over every (B, C) with B∩C = A of m1(B)·m2(C), optionally
/// followed by Dempster normalization.
pub fn dense_combine(
    v1: &DenseMass,
    v2: &DenseMass,
    normalized: bool,
) -> Result<DenseMass, BeliefError> {
    if v1.frame_len != v2.frame_len {
        return Err(BeliefError::FrameMismatch);
    }
    let mut out = DenseMass::zeros(v1.frame_len)?;
    let n = v1.masses.len();
    for b in 0..n {
        for c in 0..n {
            out.masses[b & c] += v1.masses[b] * v2.masses[c];
        }
    }
    if normalized {
        let k = out.masses[0];
        if k >= 1.0 - 1e-12 {
            return Err(BeliefError::TotalConflict);
        }
        out.masses[0] = 0.0;
        for m in &mut out.masses[1..] {
            *m /= 1.0 - k;
        }
    }
    Ok(out)
}

/// BetP per element by looping over all non-empty subsets.
pub fn dense_pignistic(v: &DenseMass) -> Result<Vec<f64>, BeliefError> {
    let k = v.masses[0];
    if k >= 1.0 - 1e-12 {
        return Err(BeliefError::TotalConflict);
    }
    let mut probs = vec![0.0; v.frame_len];
    for (rank, &mass) in v.masses.iter().enumerate().skip(1) {
        let size = (0..v.frame_len).filter(|i| rank >> i & 1 == 1).count();
        for (i, p) in probs.iter_mut().enumerate() {
            if rank >> i & 1 == 1 {
                *p += mass / (size as f64 * (1.0 - k));
            }
        }
    }
    Ok(probs)
}

/// Marginalizes a dense mass on an `rows × cols` product frame (element
/// `r * cols + c`) onto the rows (`axis = 0`) or the columns (`axis = 1`).
pub fn dense_marginalize(
    v: &DenseMass,
    rows: usize,
    cols: usize,
    axis: usize,
) -> Result<DenseMass, BeliefError> {
    assert_eq!(v.frame_len, rows * cols, "product shape mismatch");
    let target_len = if axis == 0 { rows } else { cols };
    let mut out = DenseMass::zeros(target_len)?;
    for (rank, &mass) in v.masses.iter().enumerate() {
        let mut projected = 0usize;
        for e in 0..v.frame_len {
            if rank >> e & 1 == 1 {
                let coord = if axis == 0 { e / cols } else { e % cols };
                projected |= 1 << coord;
            }
        }
        out.masses[projected] += mass;
    }
    Ok(out)
}

/// A reproducible random normal mass function with `focal_count` distinct
/// non-empty focal sets.
pub fn random_bba(
    frame: &Frame,
    seed: u64,
    focal_count: usize,
) -> Result<MassFunction, BeliefError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_bba_with(frame, &mut rng, focal_count)
}

/// [`random_bba`] drawing from a caller-owned generator.
pub fn random_bba_with<R: Rng + ?Sized>(
    frame: &Frame,
    rng: &mut R,
    focal_count: usize,
) -> Result<MassFunction, BeliefError> {
    let max = (1usize << frame.len()) - 1;
    if focal_count == 0 || focal_count > max {
        return Err(BeliefError::FocalCountOutOfRange {
            count: focal_count,
            max,
        });
    }
    let mut ranks: Vec<usize> = index::sample(rng, max, focal_count)
        .into_iter()
        .map(|r| r + 1)
        .collect();
    ranks.sort_unstable();
    // 1 - U[0,1) keeps every weight strictly positive
    let weights: Vec<f64> = ranks.iter().map(|_| 1.0 - rng.gen::<f64>()).collect();
    let total: f64 = weights.iter().sum();
    MassFunction::new(
        frame,
        ranks
            .iter()
            .zip(&weights)
            .map(|(&r, &w)| (FocalSet::from_bits(r as u32), w / total)),
    )
}
