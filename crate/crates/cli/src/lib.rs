//! The `aperiodic` command line: patch generation, degree statistics, the
//! A2 closed forms, extrapolation and renderings.

pub mod error;
pub mod patch_file;
pub mod render;

use std::io::Write;
use std::path::{Path, PathBuf};

use aperiodic::a2_analysis::{limit_avg_degree, A2Counts};
use aperiodic::coords::PlanePoint;
use aperiodic::graph::{DegreeSummary, TilingGraph, Window, WindowMode};
use aperiodic::regression::{fit_ols, round_to, DegreeSeries};
use aperiodic::substitution::{AnyPatch, Family, Patch, TileKind};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use error::{CliError, Result};
use patch_file::PatchFile;

#[derive(Debug, Parser)]
#[command(
    name = "aperiodic",
    version,
    about = "Aperiodic substitution tilings and their vertex degrees"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Grow a patch from one prototile and write it as JSON.
    Generate {
        #[arg(long, value_parser = clap::value_parser!(Family))]
        family: Family,
        #[arg(long, value_parser = clap::value_parser!(TileKind))]
        seed: TileKind,
        #[arg(long = "gen")]
        generation: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Vertex count, total degree, average and histogram of patch files.
    Stats {
        #[arg(required = true)]
        patches: Vec<PathBuf>,
        #[arg(long, default_value = "full", value_parser = clap::value_parser!(WindowMode))]
        window: WindowMode,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Exact A2 vertex and degree counts, or the limiting average degree.
    A2 {
        /// First index of the table.
        #[arg(long, default_value_t = 1)]
        from: u32,
        /// Last index of the table.
        #[arg(long, default_value_t = 6)]
        to: u32,
        /// Print only the limiting average degree.
        #[arg(long)]
        limit: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Fit degree against successive differences and report the intercept.
    Extrapolate {
        series: PathBuf,
        /// First generation used when no explicit list is given.
        #[arg(long, default_value_t = 3)]
        start: u32,
        /// Comma-separated generations to fit, each needing its predecessor.
        #[arg(long, value_delimiter = ',')]
        use_generations: Option<Vec<u32>>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Draw a patch file as SVG.
    RenderSvg {
        patch: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0.02)]
        stroke: f64,
        #[arg(long)]
        fill_by_kind: bool,
    },
    /// Write a patch in another text format.
    Dump {
        patch: PathBuf,
        /// Four "x y" corner lines per tile, closed by "0 0".
        #[arg(long, required = true)]
        compat_quad: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub fn window_name(mode: WindowMode) -> &'static str {
    match mode {
        WindowMode::Full => "full",
        WindowMode::MiddleThird => "middle-third",
        WindowMode::InteriorBBoxCompat => "compat",
    }
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::data(path.display(), e)),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::data("stdout", e)),
    }
}

pub fn read_patch(path: &Path) -> Result<AnyPatch> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::data(path.display(), e))?;
    PatchFile::from_json(&text)
        .and_then(|f| f.to_patch())
        .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

fn summarize_patch<P: PlanePoint>(p: &Patch<P>, mode: WindowMode) -> Result<DegreeSummary> {
    let graph = TilingGraph::from_patch(p);
    Ok(graph.summarize(&Window::of_patch(p, mode))?)
}

pub fn summarize(patch: &AnyPatch, mode: WindowMode) -> Result<DegreeSummary> {
    match patch {
        AnyPatch::KiteDart(p) | AnyPatch::Rhombs(p) => summarize_patch(p, mode),
        AnyPatch::Beenker(p) => summarize_patch(p, mode),
        AnyPatch::A2(p) => summarize_patch(p, mode),
    }
}

fn stats(paths: &[PathBuf], mode: WindowMode, format: Format) -> Result<String> {
    let mut rows = Vec::new();
    for path in paths {
        let patch = read_patch(path)?;
        let s = summarize(&patch, mode)
            .map_err(|e| CliError::Degenerate(format!("{}: {e}", path.display())))?;
        rows.push((patch, s));
    }
    Ok(match format {
        Format::Csv => {
            let mut out = String::from("generation,V,T,avg\n");
            for (p, s) in &rows {
                out += &format!(
                    "{},{},{},{:.6}\n",
                    p.generation(),
                    s.vertex_count,
                    s.total_degree,
                    s.average()
                );
            }
            out
        }
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(p, s)| {
                    let histogram: serde_json::Map<String, serde_json::Value> = s
                        .histogram
                        .iter()
                        .map(|(d, c)| (d.to_string(), json!(c)))
                        .collect();
                    json!({
                        "family": p.family().name(),
                        "seed": p.seed().name(),
                        "generation": p.generation(),
                        "window": window_name(mode),
                        "V": s.vertex_count,
                        "T": s.total_degree,
                        "avg": round_to(s.average(), 6),
                        "ratio": s.ratio().to_string(),
                        "histogram": histogram,
                    })
                })
                .collect();
            let value = if items.len() == 1 {
                items[0].clone()
            } else {
                json!(items)
            };
            serde_json::to_string_pretty(&value).expect("json values serialize") + "\n"
        }
    })
}

fn a2_table(from: u32, to: u32, limit: bool, format: Format) -> Result<String> {
    if limit {
        let (exact, value) = limit_avg_degree();
        return Ok(match format {
            Format::Csv => format!("{value}\n"),
            Format::Json => format!(
                "{}\n",
                json!({ "limit": value, "exact": exact.to_string() })
            ),
        });
    }
    if from == 0 || from > to {
        return Err(CliError::Usage(format!(
            "need 1 <= from <= to, got {from}..{to}"
        )));
    }
    let rows = (from..=to)
        .map(|k| A2Counts::of(k).map_err(|e| CliError::Usage(e.to_string())))
        .collect::<Result<Vec<_>>>()?;
    Ok(match format {
        Format::Csv => {
            let mut out = String::from("k,V,T,avg\n");
            for c in &rows {
                out += &format!(
                    "{},{},{},{}\n",
                    c.k,
                    c.vertices,
                    c.total_degree,
                    c.average()
                );
            }
            out
        }
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|c| {
                    json!({
                        "k": c.k,
                        "V": c.vertices.to_string(),
                        "T": c.total_degree.to_string(),
                        "avg": c.average().to_string(),
                    })
                })
                .collect();
            serde_json::to_string_pretty(&items).expect("json values serialize") + "\n"
        }
    })
}

fn extrapolate(path: &Path, start: u32, gens: Option<&[u32]>, format: Format) -> Result<String> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::data(path.display(), e))?;
    let series: DegreeSeries = text.parse()?;
    let pairs = series.difference_pairs(start, gens)?;
    let fit = fit_ols(&pairs)?;
    Ok(match format {
        Format::Csv => format!(
            "slope,intercept,limit,points\n{:.6},{:.6},{:.3},{}\n",
            fit.slope,
            fit.intercept,
            round_to(fit.limit(), 3),
            fit.point_count
        ),
        Format::Json => {
            let pairs: Vec<_> = pairs
                .iter()
                .map(|(x, y)| json!([round_to(*x, 6), y]))
                .collect();
            let value = json!({
                "slope": round_to(fit.slope, 6),
                "intercept": round_to(fit.intercept, 6),
                "limit": round_to(fit.limit(), 6),
                "residualSumSquares": fit.residual_sum_squares,
                "pairs": pairs,
            });
            serde_json::to_string_pretty(&value).expect("json values serialize") + "\n"
        }
    })
}

pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Generate {
            family,
            seed,
            generation,
            out,
        } => {
            let patch = AnyPatch::generate(family, seed, generation)?;
            emit(
                out.as_deref(),
                &PatchFile::from_patch(&patch).to_json(),
                stdout,
            )
        }
        Command::Stats {
            patches,
            window,
            format,
        } => emit(None, &stats(&patches, window, format)?, stdout),
        Command::A2 {
            from,
            to,
            limit,
            format,
        } => emit(None, &a2_table(from, to, limit, format)?, stdout),
        Command::Extrapolate {
            series,
            start,
            use_generations,
            format,
        } => emit(
            None,
            &extrapolate(&series, start, use_generations.as_deref(), format)?,
            stdout,
        ),
        Command::RenderSvg {
            patch,
            out,
            stroke,
            fill_by_kind,
        } => {
            if !(stroke.is_finite() && stroke >= 0.0) {
                return Err(CliError::Usage(format!(
                    "stroke width must be a non-negative number, got {stroke}"
                )));
            }
            let p = read_patch(&patch)?;
            emit(
                out.as_deref(),
                &render::svg(
                    &p,
                    render::SvgStyle {
                        stroke,
                        fill_by_kind,
                    },
                ),
                stdout,
            )
        }
        Command::Dump {
            patch,
            compat_quad: _,
            out,
        } => {
            let p = read_patch(&patch)?;
            emit(out.as_deref(), &render::compat_quad(&p)?, stdout)
        }
    }
}
