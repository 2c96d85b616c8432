//! `gl11`: compute gl(1|1)-Alexander invariants of links, surgery
//! presentations and lens spaces, and run the built-in checks.

mod commands;
mod omega;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use gl11::Error;
use serde_json::{json, Value as Json};

use commands::{Method, OmegaArgs};
use report::{write_report, Format, RunReport, Status};

#[derive(Parser, Debug)]
#[command(name = "gl11", version, about = "gl(1|1)-Alexander invariants of 3-manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Include wall-clock timings (the report is then no longer reproducible).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Args, Debug, Clone)]
struct OmegaOpts {
    /// Meridian images such as `m2=zeta5` or `m1=t^-2,m2=t`; missing
    /// meridians are solved from the linking relations.
    #[arg(long)]
    omega: Vec<String>,
    /// Order m of the torsion part Z/m of the target group.
    #[arg(long = "torsion-order")]
    torsion_order: Option<u64>,
    /// Keep t as a formal variable instead of a root of unity.
    #[arg(long)]
    symbolic: bool,
}

#[derive(Args, Debug, Clone, Copy)]
#[group(multiple = false)]
struct MethodOpts {
    #[arg(long)]
    kirby: bool,
    #[arg(long)]
    refined: bool,
    /// Compute both and report whether they agree.
    #[arg(long)]
    both: bool,
}

impl MethodOpts {
    fn method(self) -> Method {
        if self.both {
            Method::Both
        } else if self.kirby {
            Method::Kirby
        } else {
            Method::Refined
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Conway function, Delta_c and linking matrix of a link file.
    Link {
        file: PathBuf,
        /// Per-component weights (0 or 1), e.g. `0,1`.
        #[arg(long)]
        colors: Option<String>,
    },
    /// Delta(M, omega) of the manifold obtained by surgery on a link file.
    Manifold {
        file: PathBuf,
        #[command(flatten)]
        omega: OmegaOpts,
        /// Every nontrivial class into Z + Z/m (needs --torsion-order).
        #[arg(long)]
        enumerate: bool,
        #[command(flatten)]
        method: MethodOpts,
    },
    /// Closed formula against the HJ chain for L(p, q), every q if omitted.
    Lens {
        p: i64,
        q: Option<i64>,
        #[arg(long = "torsion-order")]
        torsion_order: Option<u64>,
    },
    /// Partition of the q's by the invariant, against the arithmetic one.
    Classify { p: i64 },
    /// Surgery torsion against Delta for a charge vector.
    Torsion {
        file: PathBuf,
        #[command(flatten)]
        omega: OmegaOpts,
        /// Charge vector `k1,k2,...`.
        #[arg(long)]
        charge: String,
    },
    /// Runs the acceptance checks.
    Selftest {
        /// Criteria to leave out, e.g. `4` or `4,5`.
        #[arg(long, value_delimiter = ',')]
        skip: Vec<u32>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Link { .. } => "link",
            Command::Manifold { .. } => "manifold",
            Command::Lens { .. } => "lens",
            Command::Classify { .. } => "classify",
            Command::Torsion { .. } => "torsion",
            Command::Selftest { .. } => "selftest",
        }
    }

    fn inputs(&self) -> Json {
        match self {
            Command::Link { file, colors } => json!({ "file": file, "colors": colors }),
            Command::Manifold {
                file,
                omega,
                enumerate,
                method,
            } => json!({
                "file": file,
                "omega": omega.omega,
                "torsion_order": omega.torsion_order,
                "symbolic": omega.symbolic,
                "enumerate": enumerate,
                "method": format!("{:?}", method.method()).to_lowercase(),
            }),
            Command::Lens { p, q, torsion_order } => json!({ "p": p, "q": q, "torsion_order": torsion_order }),
            Command::Classify { p } => json!({ "p": p }),
            Command::Torsion { file, omega, charge } => json!({
                "file": file,
                "omega": omega.omega,
                "torsion_order": omega.torsion_order,
                "symbolic": omega.symbolic,
                "charge": charge,
            }),
            Command::Selftest { skip } => json!({ "skip": skip }),
        }
    }
}

fn omega_args(o: &OmegaOpts) -> OmegaArgs<'_> {
    OmegaArgs {
        omega: &o.omega,
        torsion_order: o.torsion_order,
        symbolic: o.symbolic,
    }
}

fn dispatch(cmd: &Command, timing: bool) -> gl11::Result<report::Outcome> {
    match cmd {
        Command::Link { file, colors } => commands::link(file, colors.as_deref()),
        Command::Manifold {
            file,
            omega,
            enumerate,
            method,
        } => {
            if *enumerate {
                if !omega.omega.is_empty() {
                    return Err(Error::Validation("--enumerate and --omega are exclusive".into()));
                }
                let m = omega
                    .torsion_order
                    .ok_or_else(|| Error::Validation("--enumerate needs --torsion-order".into()))?;
                commands::manifold_enumerate(file, m, omega.symbolic, method.method())
            } else {
                commands::manifold(file, &omega_args(omega), method.method())
            }
        }
        Command::Lens { p, q, torsion_order } => commands::lens(*p, *q, *torsion_order),
        Command::Classify { p } => commands::classify(*p),
        Command::Torsion { file, omega, charge } => commands::torsion(file, &omega_args(omega), charge),
        Command::Selftest { skip } => commands::selftest(skip, timing),
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("GL11_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("GL11_THREADS={v:?} is not a positive integer"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("gl11: {e}");
        return ExitCode::from(Status::InvalidInput.exit_code() as u8);
    }
    let start = Instant::now();
    let result = dispatch(&cli.command, cli.timing);
    let (outputs, table, status, error) = match result {
        Ok(o) => (o.outputs, o.table, o.status, None),
        Err(e) => (Json::Null, None, Status::of(&e), Some(e.to_string())),
    };
    if let Some(e) = &error {
        eprintln!("gl11: {e}");
    }
    let mut report = RunReport {
        command: cli.command.name().into(),
        inputs: cli.command.inputs(),
        outputs,
        status,
        error,
        timing: None,
    };
    if cli.timing {
        report.timing_seconds(start.elapsed().as_secs_f64());
    }
    let written = match &cli.output {
        Some(path) => std::fs::File::create(path).and_then(|mut f| {
            write_report(&mut f, cli.format, &report, table.as_ref())?;
            f.flush()
        }),
        None => write_report(&mut std::io::stdout().lock(), cli.format, &report, table.as_ref()),
    };
    if let Err(e) = written {
        eprintln!("gl11: cannot write report: {e}");
        return ExitCode::from(Status::InvalidInput.exit_code() as u8);
    }
    ExitCode::from(status.exit_code() as u8)
}
