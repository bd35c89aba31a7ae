use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use cubecover::bounds::{BoundPipeline, ProgramKind};
use cubecover::counting::{FaceCounts, VTable, VTABLE_ENV};
use cubecover::verify::{
    enumerate_simplices, verify_theorems, CensusOptions, VerifyOptions, DEFAULT_SEED, HEAVY_CENSUS_DIM,
};
use cubecover::{Class, Execution, MAX_DIM};

mod render;

use render::Format;

#[derive(Parser)]
#[command(
    name = "cubecover",
    version,
    about = "Exact lower bounds for simplicial covers of the cube"
)]
struct Cli {
    /// Run every computation on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Program {
    Reduced,
    General,
}

impl From<Program> for ProgramKind {
    fn from(p: Program) -> Self {
        match p {
            Program::Reduced => ProgramKind::Reduced,
            Program::General => ProgramKind::General,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    /// Recurrence upper bound.
    Bound,
    /// Closed form for c' = c.
    Closed,
    /// Maximum over the census.
    Exact,
}

#[derive(Subcommand)]
enum Command {
    /// Lower bound on the covering number of one cube.
    Bound {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=MAX_DIM as u64))]
        dim: u64,
        #[arg(long, value_enum, default_value = "reduced")]
        program: Program,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// File of `d V(d)` lines overriding the built-in table.
        #[arg(long, env = VTABLE_ENV)]
        vtable: Option<PathBuf>,
        /// Print the linear program before the result.
        #[arg(long)]
        show_lp: bool,
    },
    /// Comparison table for dimensions 2..=max-dim.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=MAX_DIM as u64))]
        max_dim: u64,
        #[arg(long, value_enum, default_value = "reduced")]
        program: Program,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, env = VTABLE_ENV)]
        vtable: Option<PathBuf>,
    },
    /// Check the structural statements against the census of the d-cube.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=HEAVY_CENSUS_DIM as u64))]
        dim: u64,
        /// Permit the 5-cube census (several minutes in debug builds).
        #[arg(long)]
        heavy: bool,
        /// Seed for the sampled checks.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Maximum number F(d,c,d',c') of exterior (d',c')-faces of a class-c simplex.
    Fcount {
        d: u64,
        c: u64,
        d_face: u64,
        c_face: u64,
        #[arg(long, value_enum, default_value = "bound")]
        mode: Mode,
        #[arg(long)]
        heavy: bool,
        #[arg(long, env = VTABLE_ENV)]
        vtable: Option<PathBuf>,
    },
    /// Every nondegenerate simplex of the d-cube as JSON lines.
    Census {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=HEAVY_CENSUS_DIM as u64))]
        dim: u64,
        #[arg(long)]
        heavy: bool,
        #[arg(long)]
        max_class: Option<u64>,
    },
}

enum Outcome {
    Ok,
    Failed,
    Usage(String),
}

fn load_vtable(path: Option<&PathBuf>) -> Result<VTable> {
    match path {
        None => Ok(VTable::default()),
        Some(p) => VTable::from_file(p).with_context(|| format!("reading V table {}", p.display())),
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<Outcome> {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    match cli.command {
        Command::Bound {
            dim,
            program,
            format,
            vtable,
            show_lp,
        } => {
            let vtable = match load_vtable(vtable.as_ref()) {
                Ok(t) => t,
                Err(e) => return Ok(Outcome::Usage(format!("{e:#}"))),
            };
            let pipeline = BoundPipeline::new(vtable);
            let kind = program.into();
            if show_lp {
                write!(out, "{}", pipeline.build_program(dim as usize, kind, true)?)?;
            }
            let report = pipeline.cover_lower_bound(dim as usize, kind)?;
            render::reports(out, &[report], format, false)?;
        }
        Command::Table {
            max_dim,
            program,
            format,
            vtable,
        } => {
            let vtable = match load_vtable(vtable.as_ref()) {
                Ok(t) => t,
                Err(e) => return Ok(Outcome::Usage(format!("{e:#}"))),
            };
            let reports = BoundPipeline::new(vtable).bounds_table(max_dim as usize, program.into(), exec)?;
            render::reports(out, &reports, format, true)?;
        }
        Command::Verify { dim, heavy, seed } => {
            if dim as usize == HEAVY_CENSUS_DIM && !heavy {
                return Ok(Outcome::Usage(format!(
                    "verifying the {dim}-cube enumerates about 906k vertex subsets; pass --heavy to run it"
                )));
            }
            let report = verify_theorems(dim as usize, VerifyOptions { seed, heavy, exec })?;
            write!(out, "{report}")?;
            if !report.passed() {
                return Ok(Outcome::Failed);
            }
        }
        Command::Fcount {
            d,
            c,
            d_face,
            c_face,
            mode,
            heavy,
            vtable,
        } => {
            let (d, dp) = (d as usize, d_face as usize);
            let (c, cp) = (c as Class, c_face as Class);
            if d == 0 || d > MAX_DIM || dp > d || c == 0 || cp == 0 {
                return Ok(Outcome::Usage(format!(
                    "need 1 <= d <= {MAX_DIM}, d' <= d and positive classes"
                )));
            }
            let key = format!("F({d},{c},{dp},{cp})");
            match mode {
                Mode::Bound => {
                    let vtable = match load_vtable(vtable.as_ref()) {
                        Ok(t) => t,
                        Err(e) => return Ok(Outcome::Usage(format!("{e:#}"))),
                    };
                    let v = FaceCounts::new(vtable).f_bound(d, c, dp, cp);
                    writeln!(out, "{key} <= {v} [recurrence bound]")?;
                }
                Mode::Closed => {
                    if c != cp {
                        return Ok(Outcome::Usage("the closed form needs c' = c".into()));
                    }
                    let vtable = match load_vtable(vtable.as_ref()) {
                        Ok(t) => t,
                        Err(e) => return Ok(Outcome::Usage(format!("{e:#}"))),
                    };
                    let v = FaceCounts::new(vtable).f_closed(d, c, dp);
                    writeln!(out, "{key} <= {v} [closed form]")?;
                }
                Mode::Exact => {
                    let limit = if heavy { HEAVY_CENSUS_DIM } else { HEAVY_CENSUS_DIM - 1 };
                    if !(2..=limit).contains(&d) {
                        return Ok(Outcome::Usage(format!(
                            "exact counts need a census: 2 <= d <= {} ({HEAVY_CENSUS_DIM} with --heavy)",
                            HEAVY_CENSUS_DIM - 1
                        )));
                    }
                    let census = enumerate_simplices(
                        d,
                        CensusOptions {
                            max_class: Some(c),
                            heavy,
                            exec,
                        },
                    )?;
                    writeln!(out, "{key} = {} [census maximum]", census.exact_f(c, dp, cp))?;
                }
            }
        }
        Command::Census { dim, heavy, max_class } => {
            if dim as usize == HEAVY_CENSUS_DIM && !heavy {
                return Ok(Outcome::Usage(format!("the {dim}-cube census needs --heavy")));
            }
            let census = enumerate_simplices(
                dim as usize,
                CensusOptions {
                    max_class: max_class.map(Class::from),
                    heavy,
                    exec,
                },
            )?;
            for e in census.entries() {
                serde_json::to_writer(&mut *out, &e.record())?;
                writeln!(out)?;
            }
        }
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match result {
        Ok(Outcome::Ok) if flushed.is_ok() => ExitCode::SUCCESS,
        Ok(Outcome::Ok) => ExitCode::from(1),
        Ok(Outcome::Failed) => ExitCode::from(1),
        Ok(Outcome::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
