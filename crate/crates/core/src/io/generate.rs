//! Seeded random graph documents for stress testing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::belief::Frame;
use crate::oracle::random_bba_with;

use super::{
    EdgeDoc, FramesDoc, GammaCell, GraphDocument, MassSpec, MessageDoc, NodeDoc, FORMAT_VERSION,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenerateOptions {
    pub nodes: usize,
    /// Probability that any ordered pair of distinct nodes is linked.
    pub density: f64,
    pub seed: u64,
}

/// Social-network frames and the matching Γ table
/// (person/company/association/place × friendly/family/professional →
/// personal/impersonal × commercial/not commercial).
pub fn social_template() -> (FramesDoc, Vec<GammaCell>) {
    let frames = FramesDoc {
        nodes: ["Person", "Company", "Association", "Place"]
            .map(String::from)
            .to_vec(),
        links: ["Friendly", "Family", "Professional"]
            .map(String::from)
            .to_vec(),
        messages: ["PC", "PNC", "IC", "INC"].map(String::from).to_vec(),
    };
    let table: [(&str, [&[&str]; 3]); 4] = [
        ("Person", [&["PNC"], &["PNC", "INC"], &["PNC", "IC"]]),
        ("Company", [&["PC", "IC"], &["PC", "IC"], &["IC"]]),
        ("Association", [&["PNC", "INC"], &["PNC", "INC"], &["IC"]]),
        ("Place", [&["INC", "IC"], &["INC", "IC"], &["IC"]]),
    ];
    let mut gamma = Vec::with_capacity(12);
    for (node, row) in table {
        for (link, image) in frames.links.iter().zip(row) {
            gamma.push(GammaCell {
                node: node.to_string(),
                link: link.clone(),
                image: image.iter().map(|s| s.to_string()).collect(),
            });
        }
    }
    (frames, gamma)
}

/// A random graph over the social template: random node and edge masses,
/// each ordered pair linked with probability `density`, one random message
/// per edge. Identical options give identical documents.
pub fn generate_graph(opts: &GenerateOptions) -> GraphDocument {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let (frames, gamma) = social_template();
    let nf = Frame::atomic(&frames.nodes).expect("template frame");
    let lf = Frame::atomic(&frames.links).expect("template frame");
    let mf = Frame::atomic(&frames.messages).expect("template frame");
    let random_mass = |frame: &Frame, rng: &mut ChaCha8Rng| {
        let count = rng.gen_range(1..=3);
        MassSpec::from_mass(&random_bba_with(frame, rng, count).expect("count within range"))
    };

    let ids: Vec<String> = (1..=opts.nodes).map(|i| format!("n{i}")).collect();
    let nodes = ids
        .iter()
        .map(|id| NodeDoc {
            id: id.clone(),
            mass: random_mass(&nf, &mut rng),
        })
        .collect();
    let mut edges = Vec::new();
    let mut messages = Vec::new();
    for from in &ids {
        for to in &ids {
            if from == to || rng.gen::<f64>() >= opts.density {
                continue;
            }
            edges.push(EdgeDoc {
                from: from.clone(),
                to: to.clone(),
                directed: true,
                mass: random_mass(&lf, &mut rng),
            });
            messages.push(MessageDoc {
                id: format!("m{}", messages.len() + 1),
                from: from.clone(),
                to: to.clone(),
                mass: random_mass(&mf, &mut rng),
            });
        }
    }
    GraphDocument {
        version: FORMAT_VERSION.to_string(),
        frames,
        gamma,
        nodes,
        edges,
        messages,
    }
}
