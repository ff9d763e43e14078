//! The evidential (belief) social network: nodes, directed edges and
//! messages, each carrying a mass function over its own frame, plus the Γ
//! table linking node/link pairs to message classes.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::belief::{
    BeliefError, FocalSet, Frame, MassFunction, MultiValuedMapping, SUM_TOLERANCE,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("unknown node `{0}`")]
    UnknownNode(String),
    #[error("duplicate node id `{0}`")]
    DuplicateNode(String),
    #[error("duplicate edge `{0}` -> `{1}`")]
    DuplicateEdge(String, String),
    #[error("duplicate message id `{0}`")]
    DuplicateMessage(String),
    #[error("no edge `{from}` -> `{to}` for message `{message}`")]
    MissingEdge {
        message: String,
        from: String,
        to: String,
    },
    #[error("{role} mass is not defined on the {role} frame")]
    WrongFrame { role: &'static str },
    #[error("{role} mass must not carry mass on the empty set")]
    OpenWorldInput { role: &'static str },
    #[error("Γ table is missing {} cell(s), first ({}, {})", .0.len(), .0[0].0, .0[0].1)]
    IncompleteGamma(Vec<(String, String)>),
    #[error("Γ table frames differ from the graph frames")]
    GammaFrameMismatch,
    #[error(transparent)]
    Belief(#[from] BeliefError),
}

/// Stable validation codes shared by the graph and document validators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DiagnosticCode {
    BadSum,
    BadMass,
    UnknownLabel,
    MissingGammaCell,
    DanglingEdge,
    MissingEdge,
    EmptyFocal,
    DuplicateId,
    BadFrame,
    UnsupportedVersion,
}

impl DiagnosticCode {
    pub fn as_str(self) -> &'static str {
        match self {
            DiagnosticCode::BadSum => "BAD_SUM",
            DiagnosticCode::BadMass => "BAD_MASS",
            DiagnosticCode::UnknownLabel => "UNKNOWN_LABEL",
            DiagnosticCode::MissingGammaCell => "MISSING_GAMMA_CELL",
            DiagnosticCode::DanglingEdge => "DANGLING_EDGE",
            DiagnosticCode::MissingEdge => "MISSING_EDGE",
            DiagnosticCode::EmptyFocal => "EMPTY_FOCAL",
            DiagnosticCode::DuplicateId => "DUPLICATE_ID",
            DiagnosticCode::BadFrame => "BAD_FRAME",
            DiagnosticCode::UnsupportedVersion => "UNSUPPORTED_VERSION",
        }
    }
}

impl fmt::Display for DiagnosticCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub code: DiagnosticCode,
    /// Where the problem is, e.g. `nodes[n1].mass`.
    pub location: String,
    pub message: String,
}

impl Diagnostic {
    pub fn new(
        code: DiagnosticCode,
        location: impl Into<String>,
        message: impl Into<String>,
    ) -> Self {
        Diagnostic {
            code,
            location: location.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: {}", self.code, self.location, self.message)
    }
}

/// Γ: (node class, link class) → subset of message classes.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaTable {
    nodes: Frame,
    links: Frame,
    messages: Frame,
    cells: Vec<Option<FocalSet>>,
}

impl GammaTable {
    /// A table with every cell unset.
    pub fn new(nodes: &Frame, links: &Frame, messages: &Frame) -> Self {
        GammaTable {
            nodes: nodes.clone(),
            links: links.clone(),
            messages: messages.clone(),
            cells: vec![None; nodes.len() * links.len()],
        }
    }

    pub fn set<S: AsRef<str>>(
        &mut self,
        node: &str,
        link: &str,
        image: &[S],
    ) -> Result<(), GraphError> {
        let image = self.messages.set_of(image)?;
        let (n, l) = self.cell_index(node, link)?;
        self.set_image(n, l, image)
    }

    pub fn set_image(
        &mut self,
        node: usize,
        link: usize,
        image: FocalSet,
    ) -> Result<(), GraphError> {
        if image.is_empty() {
            return Err(BeliefError::EmptyFocal.into());
        }
        if !self.messages.contains_set(image) {
            return Err(BeliefError::ForeignFocal(image.bits()).into());
        }
        self.cells[node * self.links.len() + link] = Some(image);
        Ok(())
    }

    fn cell_index(&self, node: &str, link: &str) -> Result<(usize, usize), GraphError> {
        let n = self
            .nodes
            .index_of(node)
            .ok_or_else(|| BeliefError::UnknownLabel(node.to_string()))?;
        let l = self
            .links
            .index_of(link)
            .ok_or_else(|| BeliefError::UnknownLabel(link.to_string()))?;
        Ok((n, l))
    }

    pub fn get(&self, node: &str, link: &str) -> Option<FocalSet> {
        let (n, l) = self.cell_index(node, link).ok()?;
        self.cells[n * self.links.len() + l]
    }

    /// Image labels of a cell, in message-frame order.
    pub fn image_labels(&self, node: &str, link: &str) -> Option<Vec<&str>> {
        self.get(node, link).map(|s| self.messages.set_labels(s))
    }

    pub fn node_frame(&self) -> &Frame {
        &self.nodes
    }

    pub fn link_frame(&self) -> &Frame {
        &self.links
    }

    pub fn message_frame(&self) -> &Frame {
        &self.messages
    }

    /// Unset (node, link) cells in row-major order.
    pub fn missing_cells(&self) -> Vec<(String, String)> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_none())
            .map(|(i, _)| {
                let (n, l) = (i / self.links.len(), i % self.links.len());
                (
                    self.nodes.label(n).to_string(),
                    self.links.label(l).to_string(),
                )
            })
            .collect()
    }

    /// The table as a mapping from `Ω_N × Ω_L` to `Ω_Mess`.
    pub fn to_mapping(&self, product: &Frame) -> Result<MultiValuedMapping, GraphError> {
        let missing = self.missing_cells();
        if !missing.is_empty() {
            return Err(GraphError::IncompleteGamma(missing));
        }
        if product.constituents() != [self.nodes.clone(), self.links.clone()] {
            return Err(GraphError::GammaFrameMismatch);
        }
        let images = self
            .cells
            .iter()
            .map(|c| c.expect("checked complete"))
            .collect();
        Ok(MultiValuedMapping::new(product, &self.messages, images)?)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BeliefNode {
    pub id: String,
    pub mass: MassFunction,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BeliefEdge {
    pub from: String,
    pub to: String,
    pub mass: MassFunction,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Message {
    pub id: String,
    pub from: String,
    pub to: String,
    pub mass: MassFunction,
}

/// Evidential graph over fixed node, link and message frames.
///
/// Edges are ordered pairs; at most one edge per pair. Any number of
/// messages may travel along an edge.
#[derive(Debug, Clone, PartialEq)]
pub struct EvidentialGraph {
    node_frame: Frame,
    link_frame: Frame,
    message_frame: Frame,
    product_frame: Frame,
    gamma: GammaTable,
    mapping: MultiValuedMapping,
    nodes: BTreeMap<String, BeliefNode>,
    edges: BTreeMap<(String, String), BeliefEdge>,
    messages: BTreeMap<String, Message>,
}

impl EvidentialGraph {
    /// An empty graph. `gamma` must be complete and use the same frames.
    pub fn new(gamma: GammaTable) -> Result<Self, GraphError> {
        let node_frame = gamma.node_frame().clone();
        let link_frame = gamma.link_frame().clone();
        let message_frame = gamma.message_frame().clone();
        let product_frame = node_frame.product(&link_frame)?;
        let mapping = gamma.to_mapping(&product_frame)?;
        Ok(EvidentialGraph {
            node_frame,
            link_frame,
            message_frame,
            product_frame,
            gamma,
            mapping,
            nodes: BTreeMap::new(),
            edges: BTreeMap::new(),
            messages: BTreeMap::new(),
        })
    }

    fn check_mass(
        mass: &MassFunction,
        frame: &Frame,
        role: &'static str,
    ) -> Result<(), GraphError> {
        if mass.frame() != frame {
            return Err(GraphError::WrongFrame { role });
        }
        if !mass.is_normal() {
            return Err(GraphError::OpenWorldInput { role });
        }
        Ok(())
    }

    pub fn add_node(&mut self, id: &str, mass: MassFunction) -> Result<(), GraphError> {
        Self::check_mass(&mass, &self.node_frame, "node")?;
        if self.nodes.contains_key(id) {
            return Err(GraphError::DuplicateNode(id.to_string()));
        }
        self.nodes.insert(
            id.to_string(),
            BeliefNode {
                id: id.to_string(),
                mass,
            },
        );
        Ok(())
    }

    pub fn add_edge(&mut self, from: &str, to: &str, mass: MassFunction) -> Result<(), GraphError> {
        Self::check_mass(&mass, &self.link_frame, "edge")?;
        for end in [from, to] {
            if !self.nodes.contains_key(end) {
                return Err(GraphError::UnknownNode(end.to_string()));
            }
        }
        let key = (from.to_string(), to.to_string());
        if self.edges.contains_key(&key) {
            return Err(GraphError::DuplicateEdge(key.0, key.1));
        }
        self.edges.insert(
            key,
            BeliefEdge {
                from: from.to_string(),
                to: to.to_string(),
                mass,
            },
        );
        Ok(())
    }

    /// Adds both `a -> b` and `b -> a` carrying the same mass.
    pub fn add_undirected_edge(
        &mut self,
        a: &str,
        b: &str,
        mass: MassFunction,
    ) -> Result<(), GraphError> {
        let reverse = (b.to_string(), a.to_string());
        if a != b && self.edges.contains_key(&reverse) {
            return Err(GraphError::DuplicateEdge(reverse.0, reverse.1));
        }
        self.add_edge(a, b, mass.clone())?;
        if a != b {
            self.add_edge(b, a, mass)?;
        }
        Ok(())
    }

    pub fn attach_message(
        &mut self,
        id: &str,
        from: &str,
        to: &str,
        mass: MassFunction,
    ) -> Result<(), GraphError> {
        Self::check_mass(&mass, &self.message_frame, "message")?;
        if self.messages.contains_key(id) {
            return Err(GraphError::DuplicateMessage(id.to_string()));
        }
        if !self.edges.contains_key(&(from.to_string(), to.to_string())) {
            return Err(GraphError::MissingEdge {
                message: id.to_string(),
                from: from.to_string(),
                to: to.to_string(),
            });
        }
        self.messages.insert(
            id.to_string(),
            Message {
                id: id.to_string(),
                from: from.to_string(),
                to: to.to_string(),
                mass,
            },
        );
        Ok(())
    }

    pub fn node_frame(&self) -> &Frame {
        &self.node_frame
    }

    pub fn link_frame(&self) -> &Frame {
        &self.link_frame
    }

    pub fn message_frame(&self) -> &Frame {
        &self.message_frame
    }

    /// `Ω_N × Ω_L`.
    pub fn product_frame(&self) -> &Frame {
        &self.product_frame
    }

    pub fn gamma(&self) -> &GammaTable {
        &self.gamma
    }

    pub fn gamma_mapping(&self) -> &MultiValuedMapping {
        &self.mapping
    }

    pub fn node(&self, id: &str) -> Option<&BeliefNode> {
        self.nodes.get(id)
    }

    pub fn edge(&self, from: &str, to: &str) -> Option<&BeliefEdge> {
        self.edges.get(&(from.to_string(), to.to_string()))
    }

    pub fn nodes(&self) -> impl Iterator<Item = &BeliefNode> {
        self.nodes.values()
    }

    pub fn edges(&self) -> impl Iterator<Item = &BeliefEdge> {
        self.edges.values()
    }

    /// Messages in id order.
    pub fn messages(&self) -> impl Iterator<Item = &Message> {
        self.messages.values()
    }

    /// Messages addressed to `target`, in id order.
    pub fn incoming_messages<'a>(
        &'a self,
        target: &'a str,
    ) -> impl Iterator<Item = &'a Message> + 'a {
        self.messages.values().filter(move |m| m.to == target)
    }
}

/// Re-checks every graph invariant. Empty iff the graph is consistent.
pub fn validate_graph(graph: &EvidentialGraph) -> Vec<Diagnostic> {
    use DiagnosticCode::*;

    let mut out = Vec::new();
    for (node, link) in graph.gamma.missing_cells() {
        out.push(Diagnostic::new(
            MissingGammaCell,
            format!("gamma[{node},{link}]"),
            "cell has no image",
        ));
    }
    let mut check = |mass: &MassFunction, frame: &Frame, location: String| {
        if mass.frame() != frame {
            out.push(Diagnostic::new(
                BadFrame,
                location.clone(),
                "mass on the wrong frame",
            ));
        }
        if mass.conflict() > 0.0 {
            out.push(Diagnostic::new(
                EmptyFocal,
                location.clone(),
                "mass on the empty set",
            ));
        }
        let total = mass.total();
        if (total - 1.0).abs() > SUM_TOLERANCE {
            out.push(Diagnostic::new(
                BadSum,
                location,
                format!("masses sum to {total}"),
            ));
        }
    };
    for node in graph.nodes.values() {
        check(
            &node.mass,
            &graph.node_frame,
            format!("nodes[{}].mass", node.id),
        );
    }
    for edge in graph.edges.values() {
        check(
            &edge.mass,
            &graph.link_frame,
            format!("edges[{}->{}].mass", edge.from, edge.to),
        );
    }
    for msg in graph.messages.values() {
        check(
            &msg.mass,
            &graph.message_frame,
            format!("messages[{}].mass", msg.id),
        );
    }
    for edge in graph.edges.values() {
        for end in [&edge.from, &edge.to] {
            if !graph.nodes.contains_key(end) {
                out.push(Diagnostic::new(
                    DanglingEdge,
                    format!("edges[{}->{}]", edge.from, edge.to),
                    format!("endpoint `{end}` is not a node"),
                ));
            }
        }
    }
    for msg in graph.messages.values() {
        if graph.edge(&msg.from, &msg.to).is_none() {
            out.push(Diagnostic::new(
                MissingEdge,
                format!("messages[{}]", msg.id),
                format!("no edge {} -> {}", msg.from, msg.to),
            ));
        }
    }
    out
}
