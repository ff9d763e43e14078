use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::belief::{FocalSet, Frame, MassFunction, SUM_TOLERANCE};
use crate::graph::{Diagnostic, DiagnosticCode, EvidentialGraph, GammaTable, GraphError};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("graph document has {} problem(s)", .0.len())]
    Invalid(Vec<Diagnostic>),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl LoadError {
    pub fn diagnostics(&self) -> &[Diagnostic] {
        match self {
            LoadError::Invalid(d) => d,
            _ => &[],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub version: String,
    pub frames: FramesDoc,
    pub gamma: Vec<GammaCell>,
    pub nodes: Vec<NodeDoc>,
    #[serde(default)]
    pub edges: Vec<EdgeDoc>,
    #[serde(default)]
    pub messages: Vec<MessageDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FramesDoc {
    pub nodes: Vec<String>,
    pub links: Vec<String>,
    pub messages: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GammaCell {
    pub node: String,
    pub link: String,
    pub image: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NodeDoc {
    pub id: String,
    pub mass: MassSpec,
}

fn is_true(b: &bool) -> bool {
    *b
}

fn default_true() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub from: String,
    pub to: String,
    /// `false` adds the edge in both directions with the same mass.
    #[serde(default = "default_true", skip_serializing_if = "is_true")]
    pub directed: bool,
    pub mass: MassSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MessageDoc {
    pub id: String,
    pub from: String,
    pub to: String,
    pub mass: MassSpec,
}

/// Either the keyword `"vacuous"` or a list of focal entries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MassSpec {
    Keyword(String),
    Focals(Vec<FocalEntry>),
}

impl MassSpec {
    pub fn vacuous() -> Self {
        MassSpec::Keyword("vacuous".to_string())
    }

    pub fn from_mass(m: &MassFunction) -> Self {
        if m.is_vacuous() {
            return MassSpec::vacuous();
        }
        MassSpec::Focals(
            m.focals()
                .map(|(set, mass)| FocalEntry {
                    focal: m
                        .frame()
                        .set_labels(set)
                        .into_iter()
                        .map(str::to_string)
                        .collect(),
                    mass,
                })
                .collect(),
        )
    }

    /// Resolves the spec against `frame`, pushing diagnostics on failure.
    pub fn resolve(
        &self,
        frame: &Frame,
        location: &str,
        diags: &mut Vec<Diagnostic>,
    ) -> Option<MassFunction> {
        resolve_mass(self, frame, location, false, diags)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FocalEntry {
    pub focal: Vec<String>,
    pub mass: f64,
}

/// Shared by graph documents and the inline masses of `betp`.
pub(crate) fn resolve_mass(
    spec: &MassSpec,
    frame: &Frame,
    location: &str,
    allow_empty: bool,
    diags: &mut Vec<Diagnostic>,
) -> Option<MassFunction> {
    use DiagnosticCode::*;

    let entries = match spec {
        MassSpec::Keyword(k) if k == "vacuous" => return Some(MassFunction::vacuous(frame)),
        MassSpec::Keyword(k) => {
            diags.push(Diagnostic::new(
                BadMass,
                location,
                format!("unknown mass keyword `{k}`, only \"vacuous\" is allowed"),
            ));
            return None;
        }
        MassSpec::Focals(entries) => entries,
    };
    let before = diags.len();
    let mut sets = Vec::with_capacity(entries.len());
    let mut total = 0.0;
    for (i, entry) in entries.iter().enumerate() {
        let at = format!("{location}[{i}]");
        if entry.focal.is_empty() && !allow_empty {
            diags.push(Diagnostic::new(EmptyFocal, &at, "focal set is empty"));
        }
        let mut set = FocalSet::EMPTY;
        for label in &entry.focal {
            match frame.index_of(label) {
                Some(e) => set = set.with(e),
                None => diags.push(Diagnostic::new(
                    UnknownLabel,
                    &at,
                    format!("`{label}` is not in frame {frame}"),
                )),
            }
        }
        if !(entry.mass.is_finite() && entry.mass > 0.0 && entry.mass <= 1.0 + SUM_TOLERANCE) {
            diags.push(Diagnostic::new(
                BadMass,
                &at,
                format!("mass {} is not in (0, 1]", entry.mass),
            ));
        } else {
            total += entry.mass;
        }
        sets.push((set, entry.mass));
    }
    if diags.len() == before && (total - 1.0).abs() > SUM_TOLERANCE {
        diags.push(Diagnostic::new(
            BadSum,
            location,
            format!("masses sum to {total}"),
        ));
    }
    if diags.len() > before {
        return None;
    }
    let built = if allow_empty {
        MassFunction::new_open_world(frame, sets)
    } else {
        MassFunction::new(frame, sets)
    };
    match built {
        Ok(m) => Some(m),
        Err(e) => {
            diags.push(Diagnostic::new(BadMass, location, e.to_string()));
            None
        }
    }
}

fn frame_or_diag(labels: &[String], name: &str, diags: &mut Vec<Diagnostic>) -> Option<Frame> {
    match Frame::atomic(labels) {
        Ok(f) => Some(f),
        Err(e) => {
            diags.push(Diagnostic::new(
                DiagnosticCode::BadFrame,
                format!("frames.{name}"),
                e.to_string(),
            ));
            None
        }
    }
}

impl GraphDocument {
    /// Checks the document and builds the graph, or returns every problem
    /// found.
    pub fn to_graph(&self) -> Result<EvidentialGraph, LoadError> {
        use DiagnosticCode::*;

        let mut diags = Vec::new();
        if self.version != FORMAT_VERSION {
            diags.push(Diagnostic::new(
                UnsupportedVersion,
                "version",
                format!("expected \"{FORMAT_VERSION}\", got \"{}\"", self.version),
            ));
        }
        let nodes_frame = frame_or_diag(&self.frames.nodes, "nodes", &mut diags);
        let links_frame = frame_or_diag(&self.frames.links, "links", &mut diags);
        let messages_frame = frame_or_diag(&self.frames.messages, "messages", &mut diags);
        let (Some(nf), Some(lf), Some(mf)) = (nodes_frame, links_frame, messages_frame) else {
            return Err(LoadError::Invalid(diags));
        };
        if let Err(e) = nf.product(&lf) {
            diags.push(Diagnostic::new(BadFrame, "frames", e.to_string()));
            return Err(LoadError::Invalid(diags));
        }

        let mut gamma = GammaTable::new(&nf, &lf, &mf);
        let mut seen_cells = BTreeSet::new();
        for cell in &self.gamma {
            let at = format!("gamma[{},{}]", cell.node, cell.link);
            let mut ok = true;
            for (label, frame) in [(&cell.node, &nf), (&cell.link, &lf)] {
                if frame.index_of(label).is_none() {
                    diags.push(Diagnostic::new(
                        UnknownLabel,
                        &at,
                        format!("`{label}` is not in frame {frame}"),
                    ));
                    ok = false;
                }
            }
            if cell.image.is_empty() {
                diags.push(Diagnostic::new(EmptyFocal, &at, "image is empty"));
                ok = false;
            }
            for label in &cell.image {
                if mf.index_of(label).is_none() {
                    diags.push(Diagnostic::new(
                        UnknownLabel,
                        &at,
                        format!("`{label}` is not in frame {mf}"),
                    ));
                    ok = false;
                }
            }
            if !seen_cells.insert((cell.node.clone(), cell.link.clone())) {
                diags.push(Diagnostic::new(DuplicateId, &at, "cell defined twice"));
                ok = false;
            }
            if ok {
                gamma.set(&cell.node, &cell.link, &cell.image)?;
            }
        }
        for (node, link) in gamma.missing_cells() {
            if !seen_cells.contains(&(node.clone(), link.clone())) {
                diags.push(Diagnostic::new(
                    MissingGammaCell,
                    format!("gamma[{node},{link}]"),
                    "cell is not defined",
                ));
            }
        }

        let mut nodes = BTreeMap::new();
        for node in &self.nodes {
            let at = format!("nodes[{}].mass", node.id);
            let mass = node.mass.resolve(&nf, &at, &mut diags);
            if nodes.contains_key(&node.id) {
                diags.push(Diagnostic::new(
                    DuplicateId,
                    format!("nodes[{}]", node.id),
                    "duplicate node id",
                ));
                continue;
            }
            nodes.insert(node.id.clone(), mass);
        }

        let mut edges = BTreeMap::new();
        for edge in &self.edges {
            let at = format!("edges[{}->{}]", edge.from, edge.to);
            let mass = edge.mass.resolve(&lf, &format!("{at}.mass"), &mut diags);
            for end in [&edge.from, &edge.to] {
                if !nodes.contains_key(end) {
                    diags.push(Diagnostic::new(
                        DanglingEdge,
                        &at,
                        format!("endpoint `{end}` is not a node"),
                    ));
                }
            }
            let mut pairs = vec![(edge.from.clone(), edge.to.clone())];
            if !edge.directed && edge.from != edge.to {
                pairs.push((edge.to.clone(), edge.from.clone()));
            }
            for pair in pairs {
                let msg = format!("edge {} -> {} defined twice", pair.0, pair.1);
                match edges.entry(pair) {
                    Entry::Occupied(_) => diags.push(Diagnostic::new(DuplicateId, &at, msg)),
                    Entry::Vacant(slot) => {
                        slot.insert(mass.clone());
                    }
                }
            }
        }

        let mut messages = BTreeMap::new();
        for msg in &self.messages {
            let at = format!("messages[{}]", msg.id);
            let mass = msg.mass.resolve(&mf, &format!("{at}.mass"), &mut diags);
            if !edges.contains_key(&(msg.from.clone(), msg.to.clone())) {
                diags.push(Diagnostic::new(
                    MissingEdge,
                    &at,
                    format!("no edge {} -> {}", msg.from, msg.to),
                ));
            }
            if messages.contains_key(&msg.id) {
                diags.push(Diagnostic::new(DuplicateId, &at, "duplicate message id"));
                continue;
            }
            messages.insert(msg.id.clone(), (msg, mass));
        }

        if !diags.is_empty() {
            return Err(LoadError::Invalid(diags));
        }

        let mut graph = EvidentialGraph::new(gamma)?;
        for (id, mass) in nodes {
            graph.add_node(&id, mass.expect("validated"))?;
        }
        for ((from, to), mass) in edges {
            graph.add_edge(&from, &to, mass.expect("validated"))?;
        }
        for (id, (msg, mass)) in messages {
            graph.attach_message(&id, &msg.from, &msg.to, mass.expect("validated"))?;
        }
        Ok(graph)
    }

    /// Serializable form of `graph`. Edges are written as directed pairs.
    pub fn from_graph(graph: &EvidentialGraph) -> Self {
        let labels = |f: &Frame| f.labels().to_vec();
        let gamma_table = graph.gamma();
        let mut gamma = Vec::new();
        for node in graph.node_frame().labels() {
            for link in graph.link_frame().labels() {
                let image = gamma_table
                    .image_labels(node, link)
                    .expect("graph gamma is complete")
                    .into_iter()
                    .map(str::to_string)
                    .collect();
                gamma.push(GammaCell {
                    node: node.clone(),
                    link: link.clone(),
                    image,
                });
            }
        }
        GraphDocument {
            version: FORMAT_VERSION.to_string(),
            frames: FramesDoc {
                nodes: labels(graph.node_frame()),
                links: labels(graph.link_frame()),
                messages: labels(graph.message_frame()),
            },
            gamma,
            nodes: graph
                .nodes()
                .map(|n| NodeDoc {
                    id: n.id.clone(),
                    mass: MassSpec::from_mass(&n.mass),
                })
                .collect(),
            edges: graph
                .edges()
                .map(|e| EdgeDoc {
                    from: e.from.clone(),
                    to: e.to.clone(),
                    directed: true,
                    mass: MassSpec::from_mass(&e.mass),
                })
                .collect(),
            messages: graph
                .messages()
                .map(|m| MessageDoc {
                    id: m.id.clone(),
                    from: m.from.clone(),
                    to: m.to.clone(),
                    mass: MassSpec::from_mass(&m.mass),
                })
                .collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, LoadError> {
        serde_json::from_str(text).map_err(|e| LoadError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}

/// Parses and validates a graph document held in memory.
pub fn parse_graph(text: &str) -> Result<EvidentialGraph, LoadError> {
    GraphDocument::from_json(text)?.to_graph()
}

pub fn load_graph(path: impl AsRef<Path>) -> Result<EvidentialGraph, LoadError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_graph(&text)
}


/// A single mass function with its frame, as read by `betp`. Mass on the
/// empty set (`"focal": []`) is accepted so conflicting results can be fed
/// back in.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MassDocument {
    pub frame: Vec<String>,
    pub mass: MassSpec,
}

impl MassDocument {
    pub fn to_mass(&self) -> Result<MassFunction, LoadError> {
        let mut diags = Vec::new();
        let frame = frame_or_diag(&self.frame, "frame", &mut diags)
            .ok_or_else(|| LoadError::Invalid(diags.clone()))?;
        resolve_mass(&self.mass, &frame, "mass", true, &mut diags).ok_or(LoadError::Invalid(diags))
    }

    pub fn from_json(text: &str) -> Result<Self, LoadError> {
        serde_json::from_str(text).map_err(|e| LoadError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }
}
