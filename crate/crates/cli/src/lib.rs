//! Argument parsing, configuration, and exit codes for the `hypvol` binary.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hypvol_core::certify::{
    self, certify_lemma, certify_tail, certify_window, replay, verify_table, Certificate, LemmaId,
    LemmaOptions, Status, VOLUME_TARGET,
};
use hypvol_core::{set_precision, Precision};
use serde::Deserialize;

pub mod report;

pub const EXIT_CERTIFIED: i32 = 0;
pub const EXIT_FALSIFIED: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_SOFTWARE: i32 = 70;
pub const EXIT_IO: i32 = 74;

pub fn exit_code(s: Status) -> i32 {
    match s {
        Status::Certified => EXIT_CERTIFIED,
        Status::Falsified => EXIT_FALSIFIED,
        Status::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Md,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "hypvol",
    version,
    about = "Certified volume bounds for hyperbolic 3-manifolds with genus-2 geodesic boundary"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Output format [default: md for verify, json for certify]
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for bisection (default: all cores)
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..=1024))]
    pub threads: Option<u32>,
    /// Bisection depth limit
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..=64))]
    pub max_depth: Option<u32>,
    /// Relative tolerance for clamping onto a domain edge
    #[arg(long, global = true)]
    pub clamp_tol: Option<f64>,
    /// Representable steps of slack around each libm call
    #[arg(long, global = true)]
    pub slack_steps: Option<u32>,
    /// TOML file with defaults for the flags above
    #[arg(long, global = true, env = "HYPVOL_CONFIG")]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Recompute published tables
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Produce certificates
    #[command(subcommand)]
    Certify(CertifyCmd),
}

#[derive(Debug, Subcommand)]
pub enum VerifyCmd {
    /// One table of volume bounds
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        id: u8,
    },
    /// Every lemma, both tables, the window and the tail
    All,
}

#[derive(Debug, Subcommand)]
pub enum CertifyCmd {
    /// Volume bound above a target over a range of cosh ℓ₁
    Window {
        #[arg(long, default_value = VOLUME_TARGET)]
        target: String,
        #[arg(long, default_value = "1.215")]
        lo: String,
        #[arg(long, default_value = "1.439")]
        hi: String,
    },
    /// One named lemma
    Lemma {
        #[arg(long, value_parser = parse_lemma)]
        id: LemmaId,
    },
    /// The large-ℓ₁ tail argument
    Tail,
    /// Re-evaluate a saved certificate
    Replay {
        #[arg(long)]
        cert: PathBuf,
    },
}

fn parse_lemma(s: &str) -> Result<LemmaId, String> {
    s.parse().map_err(|_| {
        let ids: Vec<&str> = LemmaId::ALL.iter().map(|l| l.as_str()).collect();
        format!("expected one of {}", ids.join(", "))
    })
}

/// Defaults read from the `--config` / `HYPVOL_CONFIG` file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub format: Option<Format>,
    pub max_depth: Option<u32>,
    pub threads: Option<u32>,
    pub clamp_tol: Option<f64>,
    pub slack_steps: Option<u32>,
}

/// Effective settings after merging flags over the config file.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub threads: Option<u32>,
    pub max_depth: u32,
    pub precision: Precision,
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Io(String),
    Internal(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Io(_) => EXIT_IO,
            Failure::Internal(_) => EXIT_SOFTWARE,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Io(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<hypvol_core::Error> for Failure {
    fn from(e: hypvol_core::Error) -> Self {
        use hypvol_core::Error as E;
        match e {
            E::ParseDecimal(_) | E::Range { .. } | E::Precision(_) | E::Certificate(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Internal(e.to_string()),
        }
    }
}

impl RunConfig {
    pub fn resolve(g: &GlobalArgs) -> Result<RunConfig, Failure> {
        let file = match &g.config {
            Some(p) => {
                let text = fs::read_to_string(p)
                    .map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?;
                toml::from_str::<FileConfig>(&text)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?
            }
            None => FileConfig::default(),
        };
        let base = Precision::default();
        let max_depth = g
            .max_depth
            .or(file.max_depth)
            .unwrap_or(certify::DEFAULT_MAX_DEPTH);
        if !(1..=64).contains(&max_depth) {
            return Err(Failure::Usage(format!(
                "max_depth {max_depth} outside [1, 64]"
            )));
        }
        let threads = g.threads.or(file.threads);
        if threads == Some(0) {
            return Err(Failure::Usage("threads must be positive".into()));
        }
        let precision = Precision {
            clamp_tol: g.clamp_tol.or(file.clamp_tol).unwrap_or(base.clamp_tol),
            slack_steps: g
                .slack_steps
                .or(file.slack_steps)
                .unwrap_or(base.slack_steps),
        };
        Ok(RunConfig {
            format: g.format.or(file.format),
            out: g.out.clone(),
            threads,
            max_depth,
            precision,
        })
    }
}

/// Parses `argv`, runs the command and writes the report to `--out` or
/// `stdout`. Diagnostics go to `stderr`. Returns the process exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    match execute(&cli) {
        Ok((bytes, status)) => match write_report(&cli.global.out, &bytes, stdout) {
            Ok(()) => exit_code(status),
            Err(f) => {
                let _ = writeln!(stderr, "error: {}", f.message());
                f.code()
            }
        },
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message());
            f.code()
        }
    }
}

fn write_report(
    out: &Option<PathBuf>,
    bytes: &[u8],
    stdout: &mut dyn Write,
) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, bytes).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => stdout
            .write_all(bytes)
            .and_then(|_| stdout.flush())
            .map_err(|e| Failure::Io(format!("stdout: {e}"))),
    }
}

/// Runs the parsed command and returns the rendered report with its status.
pub fn execute(cli: &Cli) -> Result<(Vec<u8>, Status), Failure> {
    let cfg = RunConfig::resolve(&cli.global)?;
    set_precision(cfg.precision)?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cfg.threads {
        builder = builder.num_threads(n as usize);
    }
    let pool = builder
        .build()
        .map_err(|e| Failure::Internal(format!("thread pool: {e}")))?;
    pool.install(|| dispatch(&cli.command, &cfg))
}

fn dispatch(cmd: &Command, cfg: &RunConfig) -> Result<(Vec<u8>, Status), Failure> {
    let opts = LemmaOptions {
        max_depth: cfg.max_depth,
        ..LemmaOptions::default()
    };
    match cmd {
        Command::Verify(VerifyCmd::Table { id }) => {
            let (rows, cert) = verify_table(*id)?;
            let fmt = cfg.format.unwrap_or(Format::Md);
            Ok((report::table(*id, &rows, &cert, fmt)?, cert.status))
        }
        Command::Verify(VerifyCmd::All) => {
            let reports = LemmaId::ALL
                .iter()
                .map(|&id| certify_lemma(id, &opts))
                .collect::<hypvol_core::Result<Vec<_>>>()?;
            let status = Status::combine(reports.iter().map(|r| r.verdict));
            let fmt = cfg.format.unwrap_or(Format::Md);
            Ok((report::summary(&reports, status, fmt)?, status))
        }
        Command::Certify(c) => {
            let fmt = cfg.format.unwrap_or(Format::Json);
            match c {
                CertifyCmd::Window { target, lo, hi } => {
                    let cert = certify_window(target, lo, hi, cfg.max_depth)?;
                    Ok((report::certificate(&cert, fmt)?, cert.status))
                }
                CertifyCmd::Lemma { id } => {
                    let r = certify_lemma(*id, &opts)?;
                    Ok((report::lemma(&r, fmt)?, r.verdict))
                }
                CertifyCmd::Tail => {
                    let r = certify_tail(&opts)?;
                    Ok((report::lemma(&r, fmt)?, r.verdict))
                }
                CertifyCmd::Replay { cert } => {
                    let text = fs::read_to_string(cert)
                        .map_err(|e| Failure::Io(format!("{}: {e}", cert.display())))?;
                    let parsed = Certificate::from_json(&text)?;
                    let status = replay(&parsed)?;
                    Ok((report::replayed(&parsed, status, fmt)?, status))
                }
            }
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<Cli, clap::Error> {
        Cli::try_parse_from(std::iter::once("hypvol").chain(args.iter().copied()))
    }

    #[test]
    fn grammar() {
        assert!(parse(&["verify", "table", "--id", "1"]).is_ok());
        assert!(parse(&["verify", "table", "--id", "3"]).is_err());
        assert!(parse(&["verify", "all", "--format", "csv"]).is_ok());
        assert!(parse(&[
            "certify",
            "window",
            "--target",
            "6.89",
            "--lo",
            "1.215",
            "--hi",
            "1.439",
            "--max-depth",
            "12"
        ])
        .is_ok());
        assert!(parse(&["--max-depth", "65", "certify", "tail"]).is_err());
        assert!(parse(&["--max-depth", "0", "certify", "tail"]).is_err());
        assert!(parse(&["certify", "lemma", "--id", "no111"]).is_ok());
        assert!(parse(&["certify", "lemma", "--id", "nope"]).is_err());
        assert!(parse(&["certify", "tail", "--bogus"]).is_err());
        assert!(parse(&["--format", "xml", "certify", "tail"]).is_err());
    }

    #[test]
    fn flags_override_file() {
        let dir = std::env::temp_dir().join(format!("hypvol-cfg-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("c.toml");
        fs::write(&path, "format = \"csv\"\nmax_depth = 12\nslack_steps = 3\n").unwrap();
        let cli = parse(&[
            "--config",
            path.to_str().unwrap(),
            "--max-depth",
            "20",
            "certify",
            "tail",
        ])
        .unwrap();
        let cfg = RunConfig::resolve(&cli.global).unwrap();
        assert_eq!(cfg.format, Some(Format::Csv));
        assert_eq!(cfg.max_depth, 20);
        assert_eq!(cfg.precision.slack_steps, 3);

        fs::write(&path, "colour = \"red\"\n").unwrap();
        let cli = parse(&["--config", path.to_str().unwrap(), "certify", "tail"]).unwrap();
        assert!(matches!(
            RunConfig::resolve(&cli.global),
            Err(Failure::Usage(_))
        ));
        fs::write(&path, "max_depth = 99\n").unwrap();
        let cli = parse(&["--config", path.to_str().unwrap(), "certify", "tail"]).unwrap();
        assert!(matches!(
            RunConfig::resolve(&cli.global),
            Err(Failure::Usage(_))
        ));
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(Status::Certified), 0);
        assert_eq!(exit_code(Status::Falsified), 1);
        assert_eq!(exit_code(Status::Inconclusive), 2);
        let e: Failure = hypvol_core::Error::ParseDecimal("x".into()).into();
        assert_eq!(e.code(), EXIT_USAGE);
    }
}
