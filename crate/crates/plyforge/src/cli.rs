//! Command-line interface.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use plyforge_core::logply::{assemble_heavy_path_drawing_with, layered_tree_layout, ScalePolicy};
use plyforge_core::lowerbound::{
    build_instance, certify_lower_bound, radial_instance_layout, random_instance_layout,
};
use plyforge_core::oneply::{layout_one_ply, OnePlyParams};
use plyforge_core::ply::{ply_disks, sample_disks, DEFAULT_CELL_BUDGET};
use plyforge_core::{Drawing, HeavyPathDecomposition, RootedTree, TreeFamily};

use crate::formats::{
    self, CertificateReport, DecompositionFile, FormatError, PlyMethod, PlyReport,
};
use crate::parallel::ply_number_exact_parallel;
use crate::svg::{render_svg, RenderOptions};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] plyforge_core::Error),
    #[error("{what}: {source}")]
    Format {
        what: String,
        #[source]
        source: FormatError,
    },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
}

impl CliError {
    /// 1 for invalid input, 2 for I/O failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "plyforge",
    version,
    about = "Low-ply tree drawings and exact ply numbers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a tree or a lower-bound instance as JSON.
    Generate(GenerateArgs),
    /// Draw a tree (or a lower-bound instance) and emit drawing JSON.
    Layout(LayoutArgs),
    /// Compute the ply number of a drawing.
    Ply(PlyArgs),
    /// Certify a ply lower bound for a drawing of a lower-bound instance.
    Bound(BoundArgs),
    /// Heavy path decomposition of a tree.
    Decompose(DecomposeArgs),
    /// Render a drawing as SVG.
    Render(RenderArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    CompleteKary,
    Random,
    Path,
    Caterpillar,
    Lowerbound,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Children per internal vertex (complete-kary).
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Height (complete-kary).
    #[arg(long, default_value_t = 4)]
    pub height: usize,
    /// Number of vertices, or the target size for lowerbound.
    #[arg(long, default_value_t = 100)]
    pub n: usize,
    #[arg(long, default_value_t = 3)]
    pub max_degree: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Oneply,
    Layered,
    Heavypath,
    RadialInstance,
    RandomInstance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scaling {
    Fitted,
    Uniform,
}

#[derive(Debug, Args)]
pub struct LayoutArgs {
    /// Tree JSON (instance JSON for the instance algorithms); stdin if absent.
    pub input: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub algorithm: Algorithm,
    /// Degree bound for oneply; defaults to max(3, the tree's max degree).
    #[arg(long)]
    pub delta: Option<usize>,
    /// Axis-parallel oneply layout (delta 4).
    #[arg(long)]
    pub manhattan: bool,
    /// Ply ratio; defaults to 0.5, or the largest safe value for oneply.
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Length of the root's edges (oneply, layered).
    #[arg(long, default_value_t = 1.0)]
    pub root_edge: f64,
    #[arg(long, value_enum, default_value_t = Scaling::Fitted)]
    pub scaling: Scaling,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PlyArgs {
    /// Drawing JSON; stdin if absent.
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = PlyMethod::Exact)]
    pub method: PlyMethod,
    /// Grid step for the sampled method; defaults to the smallest radius / 50.
    #[arg(long)]
    pub grid_step: Option<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl ValueEnum for PlyMethod {
    fn value_variants<'a>() -> &'a [Self] {
        &[PlyMethod::Exact, PlyMethod::Sampled]
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(match self {
            PlyMethod::Exact => "exact",
            PlyMethod::Sampled => "sampled",
        }))
    }
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    /// Drawing JSON to certify.
    #[arg(long)]
    pub certify: PathBuf,
    /// Instance JSON the drawing belongs to.
    #[arg(long, conflicts_with = "n", required_unless_present = "n")]
    pub instance: Option<PathBuf>,
    /// Rebuild the instance from its target size instead.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    /// Tree JSON; stdin if absent.
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    /// Drawing JSON; stdin if absent.
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub show_ply_disks: bool,
    #[arg(long)]
    pub hide_edges: bool,
    #[arg(long)]
    pub highlight_overlaps: bool,
    #[arg(long, default_value_t = 1.0)]
    pub stroke_width: f64,
    #[arg(long, default_value_t = 800.0)]
    pub canvas_size: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `argv` and runs the command. Help and version requests are
/// reported through `Ok` after printing.
pub fn run<I, T>(argv: I) -> Result<(), CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return Ok(());
        }
        Err(e) => return Err(CliError::Usage(e.render().to_string())),
    };
    match cli.command {
        Command::Generate(a) => generate(a),
        Command::Layout(a) => layout(a),
        Command::Ply(a) => ply(a),
        Command::Bound(a) => bound(a),
        Command::Decompose(a) => decompose(a),
        Command::Render(a) => render(a),
    }
}

fn generate(a: GenerateArgs) -> Result<(), CliError> {
    let json = match a.family {
        Family::Lowerbound => formats::instance_json(&build_instance(a.n)?),
        family => {
            let family = match family {
                Family::CompleteKary => TreeFamily::CompleteKary {
                    k: a.k,
                    height: a.height,
                },
                Family::Random => TreeFamily::Random {
                    n: a.n,
                    max_degree: a.max_degree,
                    seed: a.seed,
                },
                Family::Path => TreeFamily::Path { n: a.n },
                Family::Caterpillar => TreeFamily::Caterpillar {
                    n: a.n,
                    max_degree: a.max_degree,
                },
                Family::Lowerbound => unreachable!(),
            };
            formats::tree_json(&family.generate()?)
        }
    };
    write_output(a.out.as_deref(), &json)
}

fn layout(a: LayoutArgs) -> Result<(), CliError> {
    let text = read_input(a.input.as_deref())?;
    let alpha = a.alpha.unwrap_or(0.5);
    let drawing = match a.algorithm {
        Algorithm::Oneply => {
            let tree = parse(&text, "tree", formats::parse_tree)?;
            let delta = a.delta.unwrap_or_else(|| tree.max_degree().max(3));
            let params = if a.manhattan {
                if delta != 4 {
                    return Err(plyforge_core::Error::InvalidParameter {
                        name: "manhattan",
                        reason: "the axis-parallel layout needs delta = 4".into(),
                    }
                    .into());
                }
                OnePlyParams::manhattan()
            } else {
                OnePlyParams::new(delta)?
            };
            let params = match a.alpha {
                Some(alpha) => params.with_alpha(alpha)?,
                None => params,
            };
            layout_one_ply(&tree, &params, a.root_edge)?
        }
        Algorithm::Layered => {
            let tree = parse(&text, "tree", formats::parse_tree)?;
            layered_tree_layout(&tree, a.root_edge)?.with_alpha(alpha)?
        }
        Algorithm::Heavypath => {
            let tree = parse(&text, "tree", formats::parse_tree)?;
            let policy = match a.scaling {
                Scaling::Fitted => ScalePolicy::Fitted,
                Scaling::Uniform => ScalePolicy::Uniform,
            };
            assemble_heavy_path_drawing_with(&tree, policy)?.with_alpha(alpha)?
        }
        Algorithm::RadialInstance => {
            let inst = parse(&text, "instance", formats::parse_instance)?;
            radial_instance_layout(&inst, alpha)?
        }
        Algorithm::RandomInstance => {
            let inst = parse(&text, "instance", formats::parse_instance)?;
            random_instance_layout(&inst, alpha, a.seed)?
        }
    };
    write_output(a.out.as_deref(), &formats::drawing_json(&drawing))
}

fn ply(a: PlyArgs) -> Result<(), CliError> {
    let d = read_drawing(a.input.as_deref())?;
    let report = match a.method {
        PlyMethod::Exact => {
            let r = ply_number_exact_parallel(&d)?;
            if r.closed_ply != r.ply {
                eprintln!(
                    "note: some disks are tangent; as closed disks the ply would be {}",
                    r.closed_ply
                );
            }
            PlyReport::exact(&r)
        }
        PlyMethod::Sampled => {
            let disks = ply_disks(&d).disks;
            let step = match a.grid_step {
                Some(s) => s,
                None => disks.iter().map(|k| k.radius).fold(f64::INFINITY, f64::min) / 50.0,
            };
            let s = sample_disks(&disks, step, DEFAULT_CELL_BUDGET)?;
            PlyReport {
                ply: s.ply,
                witness: [s.witness.x, s.witness.y],
                method: PlyMethod::Sampled,
            }
        }
    };
    write_output(a.out.as_deref(), &formats::to_json(&report))
}

fn bound(a: BoundArgs) -> Result<(), CliError> {
    let d = read_drawing(Some(&a.certify))?;
    let inst = match (&a.instance, a.n) {
        (Some(path), _) => parse(
            &read_input(Some(path))?,
            "instance",
            formats::parse_instance,
        )?,
        (None, Some(n)) => build_instance(n)?,
        (None, None) => return Err(CliError::Usage("bound needs --instance or --n".into())),
    };
    let cert = certify_lower_bound(&d, &inst)?;
    write_output(
        a.out.as_deref(),
        &formats::to_json(&CertificateReport::new(&cert, &inst)),
    )
}

fn decompose(a: DecomposeArgs) -> Result<(), CliError> {
    let tree: RootedTree = parse(
        &read_input(a.input.as_deref())?,
        "tree",
        formats::parse_tree,
    )?;
    let file = DecompositionFile::from_decomposition(&HeavyPathDecomposition::new(&tree));
    write_output(a.out.as_deref(), &formats::to_json(&file))
}

fn render(a: RenderArgs) -> Result<(), CliError> {
    let d = read_drawing(a.input.as_deref())?;
    if !(a.stroke_width > 0.0 && a.canvas_size > 0.0) {
        return Err(CliError::Usage(
            "--stroke-width and --canvas-size must be positive".into(),
        ));
    }
    let opts = RenderOptions {
        show_ply_disks: a.show_ply_disks,
        show_edges: !a.hide_edges,
        highlight_overlaps: a.highlight_overlaps,
        stroke_width: a.stroke_width,
        canvas_size: a.canvas_size,
    };
    write_output(a.out.as_deref(), &render_svg(&d, &opts))
}

fn read_drawing(path: Option<&Path>) -> Result<Drawing, CliError> {
    parse(&read_input(path)?, "drawing", formats::parse_drawing)
}

fn parse<T>(
    text: &str,
    what: &str,
    f: impl Fn(&str) -> Result<T, FormatError>,
) -> Result<T, CliError> {
    f(text).map_err(|source| CliError::Format {
        what: format!("invalid {what} input"),
        source,
    })
}

fn read_input(path: Option<&Path>) -> Result<String, CliError> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|source| CliError::Io {
                    path: "<stdin>".into(),
                    source,
                })?;
            Ok(s)
        }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    let newline = if text.ends_with('\n') { "" } else { "\n" };
    match path {
        Some(p) if p != Path::new("-") => {
            fs::write(p, format!("{text}{newline}")).map_err(|source| CliError::Io {
                path: p.display().to_string(),
                source,
            })
        }
        _ => {
            let mut out = io::stdout().lock();
            write!(out, "{text}{newline}")
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}
