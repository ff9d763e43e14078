use std::fmt;

/// A subset of a frame's elements, as a bitset over the frame's element
/// order. Bit `i` set means element `i` is a member.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FocalSet(u32);

impl FocalSet {
    pub const EMPTY: FocalSet = FocalSet(0);

    pub const fn from_bits(bits: u32) -> Self {
        FocalSet(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// All elements of an `n`-element frame.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 32);
        if n >= 32 {
            FocalSet(u32::MAX)
        } else {
            FocalSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(index: usize) -> Self {
        FocalSet(1 << index)
    }

    pub fn with(self, index: usize) -> Self {
        FocalSet(self.0 | (1 << index))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_singleton(self) -> bool {
        self.0.is_power_of_two()
    }

    pub fn contains(self, index: usize) -> bool {
        index < 32 && self.0 & (1 << index) != 0
    }

    pub fn intersection(self, other: FocalSet) -> FocalSet {
        FocalSet(self.0 & other.0)
    }

    pub fn union(self, other: FocalSet) -> FocalSet {
        FocalSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: FocalSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Member indices in ascending order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        })
    }
}

impl fmt::Debug for FocalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements()).finish()
    }
}

impl FromIterator<usize> for FocalSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(FocalSet::EMPTY, FocalSet::with)
    }
}
