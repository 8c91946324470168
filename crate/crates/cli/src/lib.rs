//! Command-line front end: single evaluations, tables, verification suites,
//! conjecture scans, bound reports and limit-shape samples.

mod output;
mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use sncoef::characters::{character_table_with, DEFAULT_TABLE_CAP};
use sncoef::dimensions::{dim_irrep, max_dim};
use sncoef::extremal::{self, ScanOptions};
use sncoef::kronecker::{kronecker, saxl_scan};
use sncoef::lr::lr_coefficient;
use sncoef::shapes;
use sncoef::skew::skew_syt_count;
use sncoef::{Error, Partition, SkewShape};

use output::{Format, Table};

pub use verify::Suite;

/// Environment variable naming the character-table cache directory.
pub const CACHE_ENV: &str = "SNCOEF_CACHE_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "sncoef", about = "Exact symmetric-group structure constants", version)]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

/// Flags shared by every subcommand.
#[derive(Debug, Clone, clap::Args)]
pub struct RunConfig {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Directory for cached character tables; overrides $SNCOEF_CACHE_DIR.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads; defaults to the number of logical cores.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Allow C(n,k) tables up to n = 23.
    #[arg(long, global = true)]
    pub stretch: bool,
    /// Wall-clock budget for scans, in seconds.
    #[arg(long, global = true)]
    pub time_budget: Option<u64>,
}

impl RunConfig {
    fn scan_options(&self) -> ScanOptions {
        ScanOptions {
            stretch: self.stretch,
            time_budget: self.time_budget.map(Duration::from_secs),
        }
    }

    fn cache_dir(&self) -> Option<PathBuf> {
        self.cache_dir
            .clone()
            .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
    }

    /// Loads or writes the cached table of S_n when a cache directory is set.
    fn warm_characters(&self, n: usize) -> sncoef::Result<()> {
        if let Some(dir) = self.cache_dir() {
            character_table_with(n, DEFAULT_TABLE_CAP, Some(&dir))?;
        }
        Ok(())
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// f^λ.
    Dim { lambda: String },
    /// f^{λ/μ}.
    Skew { lambda: String, mu: String },
    /// g(λ, μ, ν).
    Kron { lambda: String, mu: String, nu: String },
    /// c^λ_{μν}.
    Lr { lambda: String, mu: String, nu: String },
    /// Tables of C(n,k), D(n) or C(n).
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long)]
        n_max: usize,
    },
    /// Exhaustive identity and inequality suites.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        n_max: usize,
    },
    /// Conjecture and structure scans.
    Scan {
        #[arg(value_enum)]
        name: ScanName,
        /// n for containment and zeta-rho; largest n for non-unimodal.
        #[arg(long)]
        n: Option<usize>,
        /// k for stabilization and saxl.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Exact value against its bound expressions.
    Bounds {
        #[arg(value_enum)]
        target: BoundTarget,
        n: usize,
        /// k for lr, m for skew; unused for kron.
        k: Option<usize>,
    },
    /// Limit-shape numerics.
    Shape {
        #[arg(value_enum)]
        what: ShapeWhat,
        /// Partition size for upsilon.
        #[arg(long, default_value_t = 10_000)]
        n: usize,
        /// Sample count for curve.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableKind {
    Cnk,
    Dn,
    Cn,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ScanName {
    Containment,
    Stabilization,
    Saxl,
    ZetaRho,
    NonUnimodal,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BoundTarget {
    Lr,
    Skew,
    Kron,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ShapeWhat {
    Curve,
    Upsilon,
    Constants,
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let pool = match cli.config.threads {
        Some(0) => {
            let _ = writeln!(err, "error: --threads must be at least 1");
            return EXIT_USAGE;
        }
        Some(t) => rayon::ThreadPoolBuilder::new().num_threads(t).build(),
        None => rayon::ThreadPoolBuilder::new().build(),
    };
    let pool = match pool {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_RESOURCE;
        }
    };
    let mut buf = Vec::new();
    let result = pool.install(|| dispatch(&cli.command, &cli.config, &mut buf));
    let _ = out.write_all(&buf);
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Verification { .. } => EXIT_VERIFICATION,
        Error::ResourceLimit { .. } | Error::TimeBudget(_) => EXIT_RESOURCE,
        Error::Argument(_) | Error::Parse { .. } | Error::Io(_) => EXIT_USAGE,
    }
}

fn parse(text: &str) -> sncoef::Result<Partition> {
    text.parse()
}

fn dispatch(command: &Command, config: &RunConfig, out: &mut Vec<u8>) -> sncoef::Result<()> {
    let format = config.format;
    match command {
        Command::Dim { lambda } => {
            let l = parse(lambda)?;
            output::scalar(out, format, &[("lambda", l.to_string())], "dim", &dim_irrep(&l).to_string())
        }
        Command::Skew { lambda, mu } => {
            let shape = SkewShape::new(parse(lambda)?, parse(mu)?)?;
            let v = skew_syt_count(&shape);
            output::scalar(out, format, &[("shape", shape.to_string())], "count", &v.to_string())
        }
        Command::Kron { lambda, mu, nu } => {
            let (l, m, v) = (parse(lambda)?, parse(mu)?, parse(nu)?);
            config.warm_characters(l.size())?;
            let g = kronecker(&l, &m, &v)?;
            let key = [("lambda", l.to_string()), ("mu", m.to_string()), ("nu", v.to_string())];
            output::scalar(out, format, &key, "g", &g.to_string())
        }
        Command::Lr { lambda, mu, nu } => {
            let (l, m, v) = (parse(lambda)?, parse(mu)?, parse(nu)?);
            let c = lr_coefficient(&l, &m, &v)?;
            let key = [("lambda", l.to_string()), ("mu", m.to_string()), ("nu", v.to_string())];
            output::scalar(out, format, &key, "c", &c.to_string())
        }
        Command::Table { kind, n_max } => table(out, config, *kind, *n_max),
        Command::Verify { suite, n_max } => {
            let summary = verify::run_suite(*suite, *n_max, config)?;
            output::lines(out, format, "verify", &summary)
        }
        Command::Scan { name, n, k } => scan(out, config, *name, *n, *k),
        Command::Bounds { target, n, k } => {
            let report = match target {
                BoundTarget::Lr => {
                    let k = k.ok_or_else(|| Error::Argument("bounds lr needs n and k".into()))?;
                    extremal::lr_bounds_report_with(*n, k, &config.scan_options())?
                }
                BoundTarget::Skew => {
                    let m = k.ok_or_else(|| Error::Argument("bounds skew needs n and m".into()))?;
                    sncoef::skew::skew_bounds_report(*n, m)?
                }
                BoundTarget::Kron => {
                    config.warm_characters(*n)?;
                    sncoef::kronecker::kron_bounds_report(*n)?
                }
            };
            output::bound_report(out, format, &report)?;
            if report.pass {
                Ok(())
            } else {
                let failed: Vec<_> = report
                    .checks
                    .iter()
                    .filter(|c| c.asserted && !c.pass)
                    .map(|c| c.name.clone())
                    .collect();
                Err(Error::Verification {
                    check: failed.join("; "),
                    witness: report.subject.clone(),
                })
            }
        }
        Command::Shape { what, n, samples } => shape(out, format, *what, *n, *samples),
    }
}

fn table(out: &mut Vec<u8>, config: &RunConfig, kind: TableKind, n_max: usize) -> sncoef::Result<()> {
    if n_max == 0 {
        return Err(Error::Argument("--n-max must be at least 1".into()));
    }
    let mut t = match kind {
        TableKind::Cnk => Table::new(&["n", "k", "C", "lambda", "mu", "nu"]),
        TableKind::Dn => Table::new(&["n", "D", "lambda"]),
        TableKind::Cn => Table::new(&["n", "C", "lambda", "mu", "nu"]),
    };
    match kind {
        TableKind::Cnk | TableKind::Cn => {
            let table = extremal::table_cnk_with(n_max, &config.scan_options())?;
            for n in 1..=n_max {
                let row = table.row(n);
                if let TableKind::Cnk = kind {
                    for (k, rec) in row.iter().enumerate() {
                        let (l, m, v) = rec.first();
                        t.push(vec![n.to_string(), k.to_string(), rec.value.to_string(), l.to_string(), m.to_string(), v.to_string()]);
                    }
                } else {
                    let value = row.iter().map(|r| &r.value).max().expect("row nonempty");
                    let top = row.iter().filter(|r| &r.value == value).map(|r| r.first()).min().expect("attained");
                    t.push(vec![n.to_string(), value.to_string(), top.0.to_string(), top.1.to_string(), top.2.to_string()]);
                }
            }
            if let (TableKind::Cnk, Format::Text) = (kind, config.format) {
                for n in 1..=n_max {
                    let vals: Vec<String> = table.row(n).iter().map(|r| r.value.to_string()).collect();
                    writeln!(out, "{n}: {}", vals.join(" ")).map_err(Error::from)?;
                }
                return Ok(());
            }
        }
        TableKind::Dn => {
            for n in 1..=n_max {
                let rec = max_dim(n)?;
                t.push(vec![n.to_string(), rec.value.to_string(), rec.first().to_string()]);
            }
        }
    }
    t.write(out, config.format)
}

fn scan(out: &mut Vec<u8>, config: &RunConfig, name: ScanName, n: Option<usize>, k: Option<usize>) -> sncoef::Result<()> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| Error::Argument(format!("this scan needs --{flag}")));
    let opts = config.scan_options();
    let format = config.format;
    match name {
        ScanName::Containment => {
            let r = extremal::containment_scan_with(need(n, "n")?, &opts)?;
            let (l, m, v) = &r.flag_witness;
            let lines = vec![
                format!("n {}", r.n),
                format!("C(n) {}", r.value),
                format!("maximizers {}", r.maximizers),
                format!("flag_witness ({l}; {m}; {v})"),
                format!("counterexamples {}", r.counterexamples.len()),
                format!("conjecture_holds {}", r.conjecture_holds()),
            ];
            output::lines(out, format, "containment", &lines)
        }
        ScanName::Stabilization => {
            let k = need(k, "k")?;
            let r = match n {
                Some(n_max) => extremal::stabilization_index_with(k, n_max, &opts)?,
                None => extremal::stabilization_index(k)?,
            };
            let (l, m, v) = &r.witness;
            let column: Vec<String> = r.column.iter().map(|c| c.to_string()).collect();
            let lines = vec![
                format!("k {}", r.k),
                format!("D(k) {}", r.target),
                format!("n0 {}", r.n0),
                format!("matches_binomial {}", r.matches_binomial),
                format!("column n={}..{} {}", r.k, r.scanned_to, column.join(" ")),
                format!("witness ({l}; {m}; {v})"),
            ];
            output::lines(out, format, "stabilization", &lines)
        }
        ScanName::Saxl => {
            let k = need(k, "k")?;
            config.warm_characters(k * k.saturating_sub(1) / 2)?;
            let r = saxl_scan(k)?;
            let zeros: Vec<String> = r.zeros.iter().map(|z| z.to_string()).collect();
            let lines = vec![
                format!("k {}", r.k),
                format!("n {}", r.n),
                format!("zeros {}", zeros.len()),
                format!("zero_list {}", zeros.join(" ")),
                format!("self_coefficient {}", r.self_coefficient),
            ];
            output::lines(out, format, "saxl", &lines)
        }
        ScanName::ZetaRho => {
            let n = need(n, "n")?;
            let (zeta, rho) = extremal::zeta_rho_with(n, &opts)?;
            output::lines(out, format, "zeta-rho", &[format!("n {n}"), format!("zeta {zeta}"), format!("rho {rho}")])
        }
        ScanName::NonUnimodal => {
            let r = extremal::monotonicity_scan_with(need(n, "n")?, &opts)?;
            let maxima: Vec<String> = r.maxima.iter().map(|c| c.to_string()).collect();
            let mut lines = vec![format!("C(n) {}", maxima.join(" "))];
            for v in &r.valleys {
                lines.push(format!("valley n={} k={} left={} right={}", v.n, v.k, v.left, v.right));
            }
            output::lines(out, format, "non-unimodal", &lines)
        }
    }
}

fn shape(out: &mut Vec<u8>, format: Format, what: ShapeWhat, n: usize, samples: usize) -> sncoef::Result<()> {
    match what {
        ShapeWhat::Curve => {
            let mut t = Table::new(&["u", "psi(u)"]);
            for (u, v) in shapes::vkls_samples(samples) {
                t.push(vec![output::sig6(u), output::sig6(v)]);
            }
            let format = if let Format::Text = format { Format::Csv } else { format };
            t.write(out, format)
        }
        ShapeWhat::Upsilon => {
            if n == 0 {
                return Err(Error::Argument("--n must be at least 1".into()));
            }
            let l = shapes::vkls_partition(n);
            let lines = vec![
                format!("n {n}"),
                format!("rows {}", l.len()),
                format!("upsilon {}", output::sig6(shapes::hook_integral_partition(&l))),
                format!("distance {}", output::sig6(shapes::vkls_distance(&l))),
            ];
            output::lines(out, format, "upsilon", &lines)
        }
        ShapeWhat::Constants => {
            let c = shapes::constants();
            let lines = vec![
                format!("c1 {}", output::sig(c.c1, 12)),
                format!("c2 {}", output::sig(c.c2, 12)),
                format!("d {}", output::sig(c.d, 12)),
                format!("K {}", output::sig(c.k, 12)),
            ];
            output::lines(out, format, "constants", &lines)
        }
    }
}
