//! Moving mass between frames: vacuous extension, marginalization,
//! multi-valued mappings and coarsening.

use std::collections::BTreeMap;

use super::{BeliefError, FocalSet, Frame, MassFunction};

/// Cylinder sets of each element of constituent `k` inside `product`.
fn cylinders(product: &Frame, k: usize) -> Vec<FocalSet> {
    let mut cyl = vec![FocalSet::EMPTY; product.constituents()[k].len()];
    for e in 0..product.len() {
        let c = product.coordinates(e)[k];
        cyl[c] = cyl[c].with(e);
    }
    cyl
}

/// Extends `m` to `product`: each focal A becomes A crossed with the full
/// frames of the other constituents.
pub fn vacuous_extend(m: &MassFunction, product: &Frame) -> Result<MassFunction, BeliefError> {
    let k = product
        .constituent_index(m.frame())
        .ok_or(BeliefError::NotAConstituent)?;
    let cyl = cylinders(product, k);
    let focals = m
        .focals()
        .map(|(a, mass)| {
            let b = a
                .elements()
                .fold(FocalSet::EMPTY, |acc, i| acc.union(cyl[i]));
            (b, mass)
        })
        .collect();
    Ok(MassFunction::from_parts(product, focals))
}

/// Projects a mass on a product frame onto one of its constituents.
pub fn marginalize(m: &MassFunction, target: &Frame) -> Result<MassFunction, BeliefError> {
    let product = m.frame();
    let k = product
        .constituent_index(target)
        .ok_or(BeliefError::NotAConstituent)?;
    let mut out = BTreeMap::new();
    for (b, mass) in m.focals() {
        let a: FocalSet = b.elements().map(|e| product.coordinates(e)[k]).collect();
        *out.entry(a).or_insert(0.0) += mass;
    }
    Ok(MassFunction::from_parts(target, out))
}

/// How a non-singleton focal set travels through a [`MultiValuedMapping`],
/// which is only defined on elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TransportStrategy {
    /// Send the mass to the whole target frame.
    #[default]
    Ignorance,
    /// Send the mass to the union of the members' images.
    Union,
}

impl TransportStrategy {
    pub fn as_str(self) -> &'static str {
        match self {
            TransportStrategy::Ignorance => "ignorance",
            TransportStrategy::Union => "union",
        }
    }
}

impl std::str::FromStr for TransportStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ignorance" => Ok(TransportStrategy::Ignorance),
            "union" => Ok(TransportStrategy::Union),
            other => Err(format!("unknown transport strategy `{other}`")),
        }
    }
}

/// Γ: source element → non-empty subset of the target frame.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiValuedMapping {
    source: Frame,
    target: Frame,
    images: Vec<FocalSet>,
}

impl MultiValuedMapping {
    pub fn new(source: &Frame, target: &Frame, images: Vec<FocalSet>) -> Result<Self, BeliefError> {
        if images.len() != source.len() {
            return Err(BeliefError::MappingArity {
                expected: source.len(),
                got: images.len(),
            });
        }
        for &img in &images {
            if img.is_empty() {
                return Err(BeliefError::EmptyFocal);
            }
            if !target.contains_set(img) {
                return Err(BeliefError::ForeignFocal(img.bits()));
            }
        }
        Ok(MultiValuedMapping {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    pub fn identity(frame: &Frame) -> Self {
        MultiValuedMapping {
            source: frame.clone(),
            target: frame.clone(),
            images: (0..frame.len()).map(FocalSet::singleton).collect(),
        }
    }

    pub fn source(&self) -> &Frame {
        &self.source
    }

    pub fn target(&self) -> &Frame {
        &self.target
    }

    pub fn image(&self, element: usize) -> FocalSet {
        self.images[element]
    }

    pub fn images(&self) -> &[FocalSet] {
        &self.images
    }

    /// Union of the images of every member of `set`.
    pub fn image_of(&self, set: FocalSet) -> FocalSet {
        set.elements()
            .fold(FocalSet::EMPTY, |acc, e| acc.union(self.images[e]))
    }
}

/// m_Γ(B) = Σ_{Γ(e)=B} m(e), with non-singleton focals handled by `strategy`.
/// Mass on ∅ stays on ∅.
pub fn mv_transport(
    m: &MassFunction,
    mapping: &MultiValuedMapping,
    strategy: TransportStrategy,
) -> Result<MassFunction, BeliefError> {
    if m.frame() != mapping.source() {
        return Err(BeliefError::FrameMismatch);
    }
    let full = mapping.target().full_set();
    let mut out = BTreeMap::new();
    for (set, mass) in m.focals() {
        let image = if set.len() <= 1 {
            mapping.image_of(set)
        } else {
            match strategy {
                TransportStrategy::Ignorance => full,
                TransportStrategy::Union => mapping.image_of(set),
            }
        };
        *out.entry(image).or_insert(0.0) += mass;
    }
    Ok(MassFunction::from_parts(mapping.target(), out))
}

/// Coarsening: `partition` sends every fine element to exactly one coarse
/// element and every coarse element receives at least one fine element.
pub fn coarsen(
    m: &MassFunction,
    partition: &MultiValuedMapping,
) -> Result<MassFunction, BeliefError> {
    let source = partition.source();
    for (e, img) in partition.images().iter().enumerate() {
        if !img.is_singleton() {
            return Err(BeliefError::NotAPartition(format!(
                "`{}` maps to {} coarse elements",
                source.label(e),
                img.len()
            )));
        }
    }
    let covered = partition.image_of(source.full_set());
    if covered != partition.target().full_set() {
        let missing: Vec<&str> = partition.target().set_labels(FocalSet::from_bits(
            partition.target().full_set().bits() & !covered.bits(),
        ));
        return Err(BeliefError::NotAPartition(format!(
            "empty blocks: {}",
            missing.join(",")
        )));
    }
    mv_transport(m, partition, TransportStrategy::Union)
}
