use std::fmt;
use std::sync::Arc;

use super::{BeliefError, FocalSet};

/// Largest atomic frame accepted by [`Frame::atomic`].
pub const MAX_ATOMIC_ELEMENTS: usize = 16;
/// Largest product frame accepted by [`Frame::product`].
pub const MAX_PRODUCT_ELEMENTS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrameKind {
    Atomic,
    /// Cartesian product of the listed constituents, in order.
    Product(Vec<Frame>),
}

#[derive(Debug, PartialEq, Eq)]
struct FrameInner {
    labels: Vec<String>,
    kind: FrameKind,
}

/// An ordered, labeled, finite frame of discernment.
///
/// Frames are cheap to clone and compare structurally: two frames built from
/// the same labels (and constituents) are the same frame.
#[derive(Clone, PartialEq, Eq)]
pub struct Frame(Arc<FrameInner>);

impl Frame {
    pub fn atomic<S: AsRef<str>>(labels: &[S]) -> Result<Self, BeliefError> {
        if labels.is_empty() {
            return Err(BeliefError::EmptyFrame);
        }
        if labels.len() > MAX_ATOMIC_ELEMENTS {
            return Err(BeliefError::FrameTooLarge {
                size: labels.len(),
                cap: MAX_ATOMIC_ELEMENTS,
            });
        }
        let mut owned: Vec<String> = Vec::with_capacity(labels.len());
        for label in labels {
            let label = label.as_ref();
            if label.is_empty() {
                return Err(BeliefError::EmptyLabel);
            }
            if owned.iter().any(|l| l == label) {
                return Err(BeliefError::DuplicateLabel(label.to_string()));
            }
            owned.push(label.to_string());
        }
        Ok(Frame(Arc::new(FrameInner {
            labels: owned,
            kind: FrameKind::Atomic,
        })))
    }

    /// Cartesian product `self × other`. Elements are ordered
    /// lexicographically by (index in `self`, index in `other`).
    pub fn product(&self, other: &Frame) -> Result<Self, BeliefError> {
        let size = self.len() * other.len();
        if size > MAX_PRODUCT_ELEMENTS {
            return Err(BeliefError::FrameTooLarge {
                size,
                cap: MAX_PRODUCT_ELEMENTS,
            });
        }
        let mut labels = Vec::with_capacity(size);
        for a in self.labels() {
            for b in other.labels() {
                labels.push(format!("({a},{b})"));
            }
        }
        Ok(Frame(Arc::new(FrameInner {
            labels,
            kind: FrameKind::Product(vec![self.clone(), other.clone()]),
        })))
    }

    pub fn len(&self) -> usize {
        self.0.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.0.labels[index]
    }

    pub fn kind(&self) -> &FrameKind {
        &self.0.kind
    }

    pub fn constituents(&self) -> &[Frame] {
        match &self.0.kind {
            FrameKind::Atomic => &[],
            FrameKind::Product(parts) => parts,
        }
    }

    pub fn is_product(&self) -> bool {
        matches!(self.0.kind, FrameKind::Product(_))
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.0.labels.iter().position(|l| l == label)
    }

    /// Position of `part` among this product's constituents.
    pub fn constituent_index(&self, part: &Frame) -> Option<usize> {
        self.constituents().iter().position(|c| c == part)
    }

    /// Per-constituent element indices of a product element. For an atomic
    /// frame this is just `[index]`.
    pub fn coordinates(&self, index: usize) -> Vec<usize> {
        let parts = self.constituents();
        if parts.is_empty() {
            return vec![index];
        }
        let mut coords = vec![0; parts.len()];
        let mut rest = index;
        for (slot, part) in coords.iter_mut().zip(parts).rev() {
            *slot = rest % part.len();
            rest /= part.len();
        }
        coords
    }

    /// Inverse of [`Frame::coordinates`].
    pub fn element_at(&self, coords: &[usize]) -> usize {
        let parts = self.constituents();
        if parts.is_empty() {
            return coords[0];
        }
        coords
            .iter()
            .zip(parts)
            .fold(0, |acc, (&c, part)| acc * part.len() + c)
    }

    /// Labels naming an element: the constituent labels for a product
    /// element, the element's own label otherwise.
    pub fn element_path(&self, index: usize) -> Vec<String> {
        let parts = self.constituents();
        if parts.is_empty() {
            return vec![self.label(index).to_string()];
        }
        self.coordinates(index)
            .into_iter()
            .zip(parts)
            .flat_map(|(c, part)| part.element_path(c))
            .collect()
    }

    /// Resolves an element from the labels returned by [`Frame::element_path`].
    pub fn element_from_path<S: AsRef<str>>(&self, path: &[S]) -> Result<usize, BeliefError> {
        let parts = self.constituents();
        if parts.is_empty() {
            return match path {
                [one] => self
                    .index_of(one.as_ref())
                    .ok_or_else(|| BeliefError::UnknownLabel(one.as_ref().to_string())),
                _ => Err(BeliefError::UnknownLabel(join_path(path))),
            };
        }
        let mut coords = Vec::with_capacity(parts.len());
        let mut rest = path;
        for part in parts {
            let width = part.path_width();
            if rest.len() < width {
                return Err(BeliefError::UnknownLabel(join_path(path)));
            }
            coords.push(part.element_from_path(&rest[..width])?);
            rest = &rest[width..];
        }
        if !rest.is_empty() {
            return Err(BeliefError::UnknownLabel(join_path(path)));
        }
        Ok(self.element_at(&coords))
    }

    fn path_width(&self) -> usize {
        match &self.0.kind {
            FrameKind::Atomic => 1,
            FrameKind::Product(parts) => parts.iter().map(Frame::path_width).sum(),
        }
    }

    pub fn full_set(&self) -> FocalSet {
        FocalSet::full(self.len())
    }

    pub fn singleton(&self, index: usize) -> FocalSet {
        assert!(index < self.len(), "element index out of range");
        FocalSet::singleton(index)
    }

    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<FocalSet, BeliefError> {
        labels.iter().try_fold(FocalSet::EMPTY, |acc, label| {
            let label = label.as_ref();
            self.index_of(label)
                .map(|i| acc.with(i))
                .ok_or_else(|| BeliefError::UnknownLabel(label.to_string()))
        })
    }

    pub fn contains_set(&self, set: FocalSet) -> bool {
        set.is_subset(self.full_set())
    }

    pub fn set_labels(&self, set: FocalSet) -> Vec<&str> {
        set.elements().map(|i| self.label(i)).collect()
    }

    /// `{a,b}` style rendering, `∅` for the empty set and `Ω` for the full frame.
    pub fn display_set(&self, set: FocalSet) -> String {
        if set.is_empty() {
            "∅".to_string()
        } else if set == self.full_set() && self.len() > 1 {
            "Ω".to_string()
        } else {
            format!("{{{}}}", self.set_labels(set).join(","))
        }
    }
}

fn join_path<S: AsRef<str>>(path: &[S]) -> String {
    path.iter().map(AsRef::as_ref).collect::<Vec<_>>().join(",")
}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Frame{:?}", self.0.labels)
    }
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.labels.join(","))
    }
}
