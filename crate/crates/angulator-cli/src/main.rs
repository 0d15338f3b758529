//! `angulator`: enumerate angulations of `P(p,q,m)`, compute their bound
//! quivers, check and realize quivers, classify diagonals and draw SVGs.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 enumeration cap hit,
//! 3 quiver rejected, 4 quiver outside the realizable shapes.

mod svg;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use angulator::oracle::{crossing_oracle, default_window, face_count_oracle};
use angulator::{
    bound_quiver, classify, crosses, enumerate, realize_with, recognize_with, Angulation,
    AngulationError, AnnulusConfig, BoundQuiver, EnumerateOptions, MDiagonal, RealizeError,
    RealizeOptions, RecognizeOptions,
};
use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

const CAP_HIT: u8 = 2;
const REJECTED: u8 = 3;
const UNSUPPORTED: u8 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "angulator",
    version,
    about = "Angulations of the annulus and their gentle bound quivers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Svg,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stream every angulation of P(p,q,m) as JSON lines.
    Enumerate {
        #[arg(long)]
        config: AnnulusConfig,
        /// Stop (exit 2) once more than this many angulations exist.
        #[arg(long)]
        cap: Option<usize>,
        /// Largest type-1 winding considered.
        #[arg(long, default_value_t = 1)]
        winding_bound: i64,
        /// Print only the number of angulations.
        #[arg(long)]
        count: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bound quiver of an angulation file.
    Quiver {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the recognizer on a bound quiver file (exit 3 when rejected).
    Check {
        input: PathBuf,
        #[arg(long)]
        m: usize,
        /// Traverse the root so that this arrow points clockwise.
        #[arg(long)]
        clockwise_arrow: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build an angulation whose bound quiver is the given one.
    Realize {
        input: PathBuf,
        #[arg(long)]
        m: usize,
        /// Require the annulus P(p,q,m) for this `p,q`.
        #[arg(long, value_parser = parse_shape)]
        shape: Option<(usize, usize)>,
        /// Search nodes before giving up (exit 4).
        #[arg(long, default_value_t = RealizeOptions::default().node_budget)]
        budget: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Component, degree and level of a diagonal such as `T2(0,1)`.
    Classify {
        diagonal: MDiagonal,
        #[arg(long)]
        config: AnnulusConfig,
    },
    /// Draw an angulation file as SVG.
    Render {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Brute-force cross-checks.
    #[command(hide = true, subcommand)]
    Oracle(OracleCommand),
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Compare the crossing predicate with the segment oracle.
    Crossing {
        a: MDiagonal,
        b: MDiagonal,
        #[arg(long)]
        config: AnnulusConfig,
    },
    /// Compare traced faces with the Euler count.
    Faces { input: PathBuf },
}

fn parse_shape(s: &str) -> Result<(usize, usize), String> {
    let (p, q) = s.split_once(',').ok_or("expected `p,q`")?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((parse(p)?, parse(q)?))
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return Ok(text);
    }
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn check_output(out: &Option<PathBuf>) -> Result<()> {
    if let Some(parent) = out.as_ref().and_then(|p| p.parent()) {
        if !parent.as_os_str().is_empty() && !parent.is_dir() {
            bail!("output directory {} does not exist", parent.display());
        }
    }
    Ok(())
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
        }
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn load_angulation(path: &Path) -> Result<Angulation> {
    Angulation::from_json(&read_input(path)?)
        .with_context(|| format!("invalid angulation in {}", path.display()))
}

fn load_quiver(path: &Path) -> Result<BoundQuiver> {
    BoundQuiver::from_json(&read_input(path)?)
        .with_context(|| format!("invalid quiver in {}", path.display()))
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Enumerate {
            config,
            cap,
            winding_bound,
            count,
            out,
        } => {
            check_output(&out)?;
            let options = EnumerateOptions { winding_bound, cap };
            let mut text = String::new();
            let mut total = 0usize;
            let mut status = 0;
            for item in enumerate(&config, options) {
                match item {
                    Ok(a) => {
                        total += 1;
                        if !count {
                            text.push_str(&a.to_json().to_string());
                            text.push('\n');
                        }
                    }
                    Err(AngulationError::LimitExceeded { cap }) => {
                        eprintln!("cap of {cap} angulations reached");
                        status = CAP_HIT;
                        break;
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            if count {
                text = format!("{total}\n");
            }
            emit(&out, &text)?;
            Ok(status)
        }
        Command::Quiver { input, format, out } => {
            check_output(&out)?;
            let q = bound_quiver(&load_angulation(&input)?);
            let text = match format {
                Format::Json => pretty(&q.to_json()),
                Format::Dot => q.to_dot(),
                Format::Svg => bail!("quivers are written as json or dot"),
            };
            emit(&out, &text)?;
            Ok(0)
        }
        Command::Check {
            input,
            m,
            clockwise_arrow,
            out,
        } => {
            check_output(&out)?;
            let q = load_quiver(&input)?;
            let options = RecognizeOptions { clockwise_arrow };
            let parts = q.components();
            let mut reports = Vec::new();
            let mut accepted = true;
            for part in &parts {
                let options = if parts.len() == 1 {
                    options.clone()
                } else {
                    RecognizeOptions {
                        clockwise_arrow: options
                            .clockwise_arrow
                            .clone()
                            .filter(|id| part.arrow_index(id).is_some()),
                    }
                };
                let report = recognize_with(part, m, &options)?;
                accepted &= report.verdict.is_accepted();
                reports.push(report.to_json());
            }
            let value = if reports.len() == 1 {
                reports.pop().expect("one report")
            } else {
                serde_json::json!({ "components": reports })
            };
            emit(&out, &pretty(&value))?;
            Ok(if accepted { 0 } else { REJECTED })
        }
        Command::Realize {
            input,
            m,
            shape,
            budget,
            format,
            out,
        } => {
            check_output(&out)?;
            let q = load_quiver(&input)?;
            let options = RealizeOptions {
                shape,
                node_budget: budget,
            };
            match realize_with(&q, m, &options) {
                Ok(r) => {
                    let text = match format {
                        Format::Json => pretty(&r.angulation.to_json()),
                        Format::Svg => svg::render(&r.angulation),
                        Format::Dot => bail!("realizations are written as json or svg"),
                    };
                    emit(&out, &text)?;
                    for (v, d) in &r.placement {
                        eprintln!("{v} ↦ {d}");
                    }
                    Ok(0)
                }
                Err(e @ RealizeError::NotAccepted { .. }) => {
                    eprintln!("{e}");
                    Ok(REJECTED)
                }
                Err(e @ RealizeError::UnsupportedShape { .. }) => {
                    eprintln!("{e}");
                    Ok(UNSUPPORTED)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Classify { diagonal, config } => {
            diagonal.check(&config)?;
            println!("{}", classify(&config, &diagonal));
            Ok(0)
        }
        Command::Render { input, format, out } => {
            check_output(&out)?;
            if format != Format::Svg {
                bail!("render only writes svg");
            }
            let a = load_angulation(&input)?;
            emit(&out, &svg::render(&a))?;
            Ok(0)
        }
        Command::Oracle(OracleCommand::Crossing { a, b, config }) => {
            let fast = crosses(&config, &a, &b)?;
            let slow = crossing_oracle(&config, &a, &b, default_window(&config, &a, &b));
            println!("predicate {fast}, oracle {slow}");
            Ok(if fast == slow { 0 } else { 1 })
        }
        Command::Oracle(OracleCommand::Faces { input }) => {
            let a = load_angulation(&input)?;
            let (traced, euler) = (a.faces().len(), face_count_oracle(&a));
            println!("traced {traced}, euler {euler}");
            Ok(if traced == euler { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
