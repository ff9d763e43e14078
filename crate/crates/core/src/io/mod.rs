//! JSON documents and the operations behind the command-line tool.

mod document;
mod generate;
mod report;

pub use document::{
    load_graph, parse_graph, EdgeDoc, FocalEntry, FramesDoc, GammaCell, GraphDocument, LoadError,
    MassDocument, MassSpec, MessageDoc, NodeDoc, FORMAT_VERSION,
};
pub use generate::{generate_graph, social_template, GenerateOptions};
pub use report::{MassEntry, ReportDocument};
