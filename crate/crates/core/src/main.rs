use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use evidnet::belief::{pignistic, FocalSet, Frame, MassFunction, TransportStrategy};
use evidnet::fusion::{fuse_at_node, FusionError, FusionOptions, RuleSet};
use evidnet::io::{
    generate_graph, load_graph, GenerateOptions, LoadError, MassDocument, ReportDocument,
};

const EXIT_INVALID: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "evidnet",
    version,
    about = "Evidential fusion of messages on a belief social network"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a graph document and list every problem found.
    Validate { path: PathBuf },
    /// Classify the messages received by one node.
    Fuse {
        path: PathBuf,
        /// Receiving node id.
        #[arg(long)]
        target: String,
        /// How non-singleton focals cross the Γ table: ignorance or union.
        #[arg(long, default_value = "ignorance")]
        gamma_strategy: TransportStrategy,
        /// Combination rules: mixed, conjunctive or dempster.
        #[arg(long, default_value = "mixed")]
        rule: RuleSet,
        /// Write the JSON report here instead of printing a summary.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pignistic probabilities of a mass function.
    Betp {
        /// JSON file `{"frame": [...], "mass": [...]}`.
        #[arg(conflicts_with_all = ["frame", "mass"])]
        path: Option<PathBuf>,
        /// Comma-separated frame labels for an inline mass.
        #[arg(long, value_delimiter = ',', requires = "mass")]
        frame: Vec<String>,
        /// Inline focal entry `a+b=0.4`; `*` is the whole frame, `{}` the empty set.
        #[arg(long, requires = "frame")]
        mass: Vec<String>,
    },
    /// Emit a reproducible random graph document.
    Gen {
        #[arg(long)]
        nodes: usize,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Validate { path } => validate(&path),
        Command::Fuse {
            path,
            target,
            gamma_strategy,
            rule,
            out,
        } => fuse(
            &path,
            &target,
            FusionOptions {
                strategy: gamma_strategy,
                rules: rule,
            },
            out.as_deref(),
        ),
        Command::Betp { path, frame, mass } => betp(path.as_deref(), &frame, &mass),
        Command::Gen {
            nodes,
            density,
            seed,
            out,
        } => gen(nodes, density, seed, out.as_deref()),
    }
}

fn report_load_error(err: &LoadError) -> ExitCode {
    eprintln!("error: {err}");
    for d in err.diagnostics() {
        eprintln!("  {d}");
    }
    ExitCode::from(EXIT_INVALID)
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), ExitCode> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", path.display());
            ExitCode::from(EXIT_INVALID)
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn validate(path: &Path) -> ExitCode {
    match load_graph(path) {
        Ok(g) => {
            println!(
                "ok: {} nodes, {} edges, {} messages",
                g.nodes().count(),
                g.edges().count(),
                g.messages().count()
            );
            ExitCode::SUCCESS
        }
        Err(err) => {
            for d in err.diagnostics() {
                println!("{d}");
            }
            report_load_error(&err)
        }
    }
}

fn fuse(path: &Path, target: &str, options: FusionOptions, out: Option<&Path>) -> ExitCode {
    let graph = match load_graph(path) {
        Ok(g) => g,
        Err(err) => return report_load_error(&err),
    };
    let report = match fuse_at_node(&graph, target, options) {
        Ok(r) => r,
        Err(err @ FusionError::UnknownTarget(_)) => {
            eprintln!("error: {err}");
            return ExitCode::from(EXIT_USAGE);
        }
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(EXIT_INVALID);
        }
    };
    let doc = ReportDocument::from_report(&report);
    match out {
        Some(_) => {
            if let Err(code) = write_output(out, &doc.to_json()) {
                return code;
            }
        }
        None => {
            for s in &report.sources {
                println!("message {} from {}:", s.message, s.sender);
                println!("  network  {}", s.network);
                println!("  gamma    {}", s.gamma);
                println!("  fused    {}", s.fused);
            }
            println!("global     {}", report.global);
            for (label, p) in report.decision.betp.iter() {
                println!("BetP({label}) = {p:.6}");
            }
        }
    }
    println!("{}", doc.decision_line());
    ExitCode::SUCCESS
}

fn parse_inline_mass(frame_labels: &[String], entries: &[String]) -> Result<MassFunction, String> {
    let frame = Frame::atomic(frame_labels).map_err(|e| e.to_string())?;
    let mut focals = Vec::with_capacity(entries.len());
    for entry in entries {
        let (set, mass) = entry
            .rsplit_once('=')
            .ok_or_else(|| format!("`{entry}` is not of the form labels=mass"))?;
        let mass: f64 = mass
            .trim()
            .parse()
            .map_err(|_| format!("bad mass in `{entry}`"))?;
        let set = match set.trim() {
            "*" => frame.full_set(),
            "{}" => FocalSet::EMPTY,
            labels => frame
                .set_of(&labels.split('+').map(str::trim).collect::<Vec<_>>())
                .map_err(|e| e.to_string())?,
        };
        focals.push((set, mass));
    }
    MassFunction::new_open_world(&frame, focals).map_err(|e| e.to_string())
}

fn betp(path: Option<&Path>, frame: &[String], mass: &[String]) -> ExitCode {
    let m = match path {
        Some(path) => {
            let parsed = fs::read_to_string(path)
                .map_err(|source| LoadError::Io {
                    path: path.to_path_buf(),
                    source,
                })
                .and_then(|text| MassDocument::from_json(&text))
                .and_then(|doc| doc.to_mass());
            match parsed {
                Ok(m) => m,
                Err(err) => return report_load_error(&err),
            }
        }
        None if !mass.is_empty() => match parse_inline_mass(frame, mass) {
            Ok(m) => m,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_USAGE);
            }
        },
        None => {
            eprintln!("error: give a mass file or --frame with --mass");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match pignistic(&m) {
        Ok(p) => {
            for (label, prob) in p.iter() {
                println!("{label}\t{prob:.6}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}

fn gen(nodes: usize, density: f64, seed: u64, out: Option<&Path>) -> ExitCode {
    if !(0.0..=1.0).contains(&density) {
        eprintln!("error: --density must be within [0, 1]");
        return ExitCode::from(EXIT_USAGE);
    }
    let doc = generate_graph(&GenerateOptions {
        nodes,
        density,
        seed,
    });
    match write_output(out, &doc.to_json()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => code,
    }
}
