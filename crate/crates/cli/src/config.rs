use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dischargekit::Limits;

#[derive(Debug, Parser)]
#[command(name = "dischargekit", version, about = "List-coloring and discharging checks for plane graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    EmbeddingJson,
    OrientationJson,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Input file(s); `-` reads standard input.
    #[arg(long = "input", short = 'i')]
    pub inputs: Vec<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the JSON report here instead of standard output.
    #[arg(long, short = 'o')]
    pub output: Option<PathBuf>,
    /// Print a human-readable table.
    #[arg(long)]
    pub summary: bool,
    /// Arc cap for Eulerian counting.
    #[arg(long, default_value_t = Limits::default().max_arcs)]
    pub limit_arcs: usize,
    /// Vertex cap for choosability and extension checks.
    #[arg(long, default_value_t = Limits::default().max_vertices)]
    pub limit_n: usize,
}

impl Common {
    pub fn limits(&self) -> Limits {
        Limits {
            max_arcs: self.limit_arcs,
            max_vertices: self.limit_n,
            ..Limits::default()
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cycle conditions, trios with roles, and fixed configurations.
    Detect(Common),
    /// Decide k-choosability.
    Choosable {
        #[command(flatten)]
        common: Common,
        #[arg(long, short = 'k', default_value_t = 4)]
        k: usize,
    },
    /// Eulerian counts of orientations, or certificate search on graphs.
    AlonTarsi {
        #[command(flatten)]
        common: Common,
        /// Uniform list size for certificate search on graph input.
        #[arg(long, short = 'k', default_value_t = 4)]
        k: usize,
    },
    /// Extension checks for the built-in configurations or config files.
    Reduce(Common),
    /// Discharging ledger and final report for embeddings.
    Discharge {
        #[command(flatten)]
        common: Common,
        /// JSON rule-set overrides.
        #[arg(long)]
        rules: Option<PathBuf>,
    },
    /// Run every bundled check and print a pass/fail table.
    ReproPaper(Common),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Detect,
    Choosable,
    AlonTarsi,
    Reduce,
    Discharge,
    ReproPaper,
}

/// One fully resolved invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CommandKind,
    pub inputs: Vec<PathBuf>,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub summary: bool,
    pub limits: Limits,
    pub k: usize,
    pub rules: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, String> {
        let (command, common, k, rules) = match cli.command {
            Command::Detect(c) => (CommandKind::Detect, c, 4, None),
            Command::Choosable { common, k } => (CommandKind::Choosable, common, k, None),
            Command::AlonTarsi { common, k } => (CommandKind::AlonTarsi, common, k, None),
            Command::Reduce(c) => (CommandKind::Reduce, c, 4, None),
            Command::Discharge { common, rules } => (CommandKind::Discharge, common, 4, rules),
            Command::ReproPaper(c) => (CommandKind::ReproPaper, c, 4, None),
        };
        let default_format = match command {
            CommandKind::AlonTarsi => Format::OrientationJson,
            CommandKind::Discharge => Format::EmbeddingJson,
            _ => Format::Graph6,
        };
        let format = common.format.unwrap_or(default_format);
        let compatible = match command {
            CommandKind::Detect | CommandKind::Choosable => format != Format::OrientationJson,
            CommandKind::Discharge => format == Format::EmbeddingJson,
            CommandKind::AlonTarsi | CommandKind::Reduce | CommandKind::ReproPaper => true,
        };
        if !compatible {
            return Err(format!("format {format:?} is not accepted by {command:?}"));
        }
        let needs_input = matches!(
            command,
            CommandKind::Detect | CommandKind::Choosable | CommandKind::AlonTarsi | CommandKind::Discharge
        );
        if needs_input && common.inputs.is_empty() {
            return Err("--input is required".into());
        }
        if k == 0 {
            return Err("k must be at least 1".into());
        }
        Ok(RunConfig {
            command,
            limits: common.limits(),
            inputs: common.inputs,
            format,
            output: common.output,
            summary: common.summary,
            k,
            rules,
        })
    }
}
