#![allow(dead_code)]

use std::path::PathBuf;

use evidnet::belief::{FocalSet, Frame, MassFunction};
use evidnet::graph::GammaTable;
use evidnet::io::MassEntry;
use evidnet::oracle::random_bba;

pub const GOLDEN_TOL: f64 = 1e-4;
pub const ORACLE_TOL: f64 = 1e-12;

pub struct Social {
    pub nodes: Frame,
    pub links: Frame,
    pub messages: Frame,
    pub product: Frame,
}

pub fn social() -> Social {
    let nodes = Frame::atomic(&["Person", "Company", "Association", "Place"]).unwrap();
    let links = Frame::atomic(&["Friendly", "Family", "Professional"]).unwrap();
    let messages = Frame::atomic(&["PC", "PNC", "IC", "INC"]).unwrap();
    let product = nodes.product(&links).unwrap();
    Social {
        nodes,
        links,
        messages,
        product,
    }
}

/// The Γ table exactly as printed: rows are links, columns are nodes.
pub type GammaRow = [(&'static str, &'static [&'static str]); 4];

pub const GAMMA_PRINTED: [(&str, GammaRow); 3] = [
    (
        "Friendly",
        [
            ("Person", &["PNC"]),
            ("Association", &["PNC", "INC"]),
            ("Company", &["PC", "IC"]),
            ("Place", &["INC", "IC"]),
        ],
    ),
    (
        "Family",
        [
            ("Person", &["PNC", "INC"]),
            ("Association", &["PNC", "INC"]),
            ("Company", &["PC", "IC"]),
            ("Place", &["INC", "IC"]),
        ],
    ),
    (
        "Professional",
        [
            ("Person", &["PNC", "IC"]),
            ("Association", &["IC"]),
            ("Company", &["IC"]),
            ("Place", &["IC"]),
        ],
    ),
];

pub fn gamma_table(s: &Social) -> GammaTable {
    let mut g = GammaTable::new(&s.nodes, &s.links, &s.messages);
    for (link, row) in GAMMA_PRINTED {
        for (node, image) in row {
            g.set(node, link, image).unwrap();
        }
    }
    g
}

pub fn person(s: &Social) -> MassFunction {
    MassFunction::new(
        &s.nodes,
        [(s.nodes.singleton(0), 0.75), (s.nodes.full_set(), 0.25)],
    )
    .unwrap()
}

pub fn friendly(s: &Social) -> MassFunction {
    MassFunction::new(
        &s.links,
        [(s.links.singleton(0), 0.75), (s.links.full_set(), 0.25)],
    )
    .unwrap()
}

pub fn message(s: &Social, label: &str) -> MassFunction {
    let one = s.messages.set_of(&[label]).unwrap();
    MassFunction::new(&s.messages, [(one, 0.6), (s.messages.full_set(), 0.4)]).unwrap()
}

/// The four network-belief focal sets, in the order they are printed.
pub fn network_focals(s: &Social) -> [(FocalSet, f64); 4] {
    let p = &s.product;
    let cell = |n: &str, l: &str| p.singleton(p.element_from_path(&[n, l]).unwrap());
    let row = s
        .links
        .labels()
        .iter()
        .fold(FocalSet::EMPTY, |acc, l| acc.union(cell("Person", l)));
    let column = s
        .nodes
        .labels()
        .iter()
        .fold(FocalSet::EMPTY, |acc, n| acc.union(cell(n, "Friendly")));
    [
        (cell("Person", "Friendly"), 0.5625),
        (row, 0.1875),
        (column, 0.1875),
        (p.full_set(), 0.0625),
    ]
}

pub fn frame_of(n: usize) -> Frame {
    let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    Frame::atomic(&labels).unwrap()
}

/// Seeded BBA with a seed-dependent focal count.
pub fn seeded_bba(frame: &Frame, seed: u64) -> MassFunction {
    let max = (1u64 << frame.len()) - 1;
    let count = 1 + (seed.wrapping_mul(2654435761) >> 7) % max.min(8);
    random_bba(frame, seed, count as usize).unwrap()
}

pub fn example_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples")
        .join(name)
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

/// Mass of the entry whose focal set, as JSON, equals `focal`.
pub fn entry_mass(entries: &[MassEntry], focal: serde_json::Value) -> f64 {
    let want = normalize_focal(&focal);
    entries
        .iter()
        .find(|e| normalize_focal(&serde_json::to_value(&e.focal).unwrap()) == want)
        .map(|e| e.mass)
        .unwrap_or(0.0)
}

fn normalize_focal(v: &serde_json::Value) -> Vec<String> {
    let mut items: Vec<String> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.to_string())
        .collect();
    items.sort();
    items
}
