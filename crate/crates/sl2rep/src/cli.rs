//! Command-line driver: inventory construction, character tables, spectral
//! experiments and the verification suite, with reproducible CSV/JSON/SVG
//! artifacts.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 numerical
//! error.

use crate::baseline::BaselineError;
use crate::fourier::{self, GroupFunction};
use crate::linalg::max_distance;
use crate::modarith::PrimePower;
use crate::plot::{Scatter, VLine};
use crate::repbuilder::{
    character_table, ChiLabel, Inventory, RepBuildOptions, RepError, RepLabel,
};
use crate::sl2group::{
    conjugacy_classes, group_order, random_element, standard_generators, GenSetName, GroupError,
    GroupIndex, SL2Elem,
};
use crate::spectra::{
    self, cayley_adjacency_spectrum, cayley_spectrum, monochromatic, ramanujan_bound,
    schreier_graph, SpectraError, IMAG_TOL, MONO_TOL,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

pub const SCHEMA_VERSION: u32 = 1;

const EXIT_OK: i32 = 0;
const EXIT_VERIFY: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_NUMERICAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "sl2rep",
    about = "Irreducible representations, Fourier transforms and Cayley/Schreier spectra \
             on SL2(Z/p^n Z)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
    Svg,
}

impl std::fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OutputFormat::Csv => write!(f, "csv"),
            OutputFormat::Json => write!(f, "json"),
            OutputFormat::Svg => write!(f, "svg"),
        }
    }
}

#[derive(Args, Debug, Clone)]
struct CommonArgs {
    /// odd prime p
    #[arg(long)]
    p: u64,
    /// exponent n of the modulus p^n
    #[arg(long, default_value_t = 2)]
    n: u32,
    /// output directory for artifacts
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// tolerance override (clustering for spectra; check tolerances for
    /// verify)
    #[arg(long)]
    tol: Option<f64>,
    /// worker threads (0 = library default); PNH_JOBS is the env default
    #[arg(long, env = "PNH_JOBS", default_value_t = 0)]
    jobs: usize,
    /// comma-separated artifact formats
    #[arg(long, value_delimiter = ',', default_values_t = vec![OutputFormat::Csv, OutputFormat::Json, OutputFormat::Svg])]
    format: Vec<OutputFormat>,
}

impl CommonArgs {
    /// Data formats, honoring the rule that a plot is never the only
    /// artifact: requesting svg alone also emits the CSV.
    fn wants(&self, f: OutputFormat) -> bool {
        if f == OutputFormat::Csv
            && self.format.contains(&OutputFormat::Svg)
            && !self.format.contains(&OutputFormat::Json)
        {
            return true;
        }
        self.format.contains(&f)
    }
}

#[derive(Args, Debug, Clone)]
struct SetArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// named generating set
    #[arg(long, value_enum, default_value_t = GenSetName::G1)]
    set: GenSetName,
}

#[derive(Args, Debug, Clone)]
struct RandomArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// number of random generator pairs
    #[arg(long, default_value_t = 100)]
    count: usize,
    /// RNG seed
    #[arg(long, default_value_t = 7)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build and serialize the representation inventory
    Reps(CommonArgs),
    /// Emit the character table of the non-quotient representations
    Chartable(CommonArgs),
    /// Per-representation Cayley spectra for a named generating set
    Spectrum(SetArgs),
    /// Schreier graph on the projective line G/B
    Schreier(SetArgs),
    /// Random generator-pair sweep over Schreier graphs
    Random(RandomArgs),
    /// Run the invariant suite and report pass/fail per check
    Verify(CommonArgs),
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Numerical(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::TooLarge { .. } | GroupError::BadModulus { .. } => {
                CliError::Usage(e.to_string())
            }
            GroupError::ModArith(_) | GroupError::NotUnimodular(..) => {
                CliError::Usage(e.to_string())
            }
        }
    }
}

impl From<RepError> for CliError {
    fn from(e: RepError) -> Self {
        match e {
            RepError::ModArith(_) | RepError::GRing(_) => CliError::Usage(e.to_string()),
            RepError::Unsupported(_) | RepError::UnsupportedLevel(_) => {
                CliError::Usage(e.to_string())
            }
            RepError::Group(g) => CliError::from(g),
            RepError::Baseline(b) => CliError::from(b),
        }
    }
}

impl From<BaselineError> for CliError {
    fn from(e: BaselineError) -> Self {
        match e {
            BaselineError::TooLarge(_) => CliError::Usage(e.to_string()),
            BaselineError::NumericalFailure(_) => CliError::Numerical(e.to_string()),
            BaselineError::Group(g) => CliError::from(g),
        }
    }
}

impl From<SpectraError> for CliError {
    fn from(e: SpectraError) -> Self {
        match e {
            SpectraError::NonRealSpectrum { .. } => CliError::Numerical(e.to_string()),
            SpectraError::TooLarge { .. } => CliError::Usage(e.to_string()),
            SpectraError::Group(g) => CliError::from(g),
            SpectraError::Rep(r) => CliError::from(r),
        }
    }
}

/// Entry point; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.exit_code() == 0 {
                EXIT_OK
            } else {
                EXIT_USAGE
            };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Reps(args) => with_pool(&args, cmd_reps),
        Command::Chartable(args) => with_pool(&args, cmd_chartable),
        Command::Spectrum(args) => with_pool(&args.common, |c| cmd_spectrum(c, args.set)),
        Command::Schreier(args) => with_pool(&args.common, |c| cmd_schreier(c, args.set)),
        Command::Random(args) => with_pool(&args.common, |c| cmd_random(c, args.count, args.seed)),
        Command::Verify(args) => {
            return match with_pool(&args, cmd_verify) {
                Ok(true) => EXIT_OK,
                Ok(false) => EXIT_VERIFY,
                Err(e) => report_error(e),
            };
        }
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => report_error(e),
    }
}

fn report_error(e: CliError) -> i32 {
    match e {
        CliError::Usage(msg) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        CliError::Numerical(msg) => {
            eprintln!("numerical error: {msg}");
            EXIT_NUMERICAL
        }
        CliError::Io(err) => {
            eprintln!("io error: {err}");
            EXIT_NUMERICAL
        }
    }
}

fn with_pool<T>(
    args: &CommonArgs,
    f: impl FnOnce(&CommonArgs) -> Result<T, CliError>,
) -> Result<T, CliError> {
    if args.jobs > 0 {
        // the global pool can only be installed once per process
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(args.jobs)
            .build_global();
    }
    f(args)
}

fn prime_power(args: &CommonArgs) -> Result<PrimePower, CliError> {
    PrimePower::new(args.p, args.n).map_err(|e| CliError::Usage(e.to_string()))
}

fn ensure_out(dir: &Path) -> Result<(), CliError> {
    std::fs::create_dir_all(dir)?;
    Ok(())
}

fn fmt_f(x: f64) -> String {
    format!("{x:.12e}")
}

fn fmt_c(z: Complex64) -> String {
    format!("{:.10e}{:+.10e}i", z.re, z.im)
}

fn label_columns(label: &RepLabel) -> (String, String, String, String) {
    match label {
        RepLabel::NonQuotient {
            k,
            chi,
            delta_idx,
            sigma_idx,
            ..
        } => {
            let chi_s = match chi {
                ChiLabel::Ell(l) => l.to_string(),
                ChiLabel::Eps(e) => format!("{e:+}"),
            };
            (
                k.to_string(),
                chi_s,
                delta_idx.to_string(),
                sigma_idx.to_string(),
            )
        }
        RepLabel::Quotient { base_index, .. } => {
            ("q".into(), base_index.to_string(), "-".into(), "-".into())
        }
        RepLabel::Trivial => ("q".into(), "1".into(), "-".into(), "-".into()),
    }
}

// ---------------------------------------------------------------- reps

fn cmd_reps(args: &CommonArgs) -> Result<(), CliError> {
    let pp = prime_power(args)?;
    let inv = Inventory::build(pp, RepBuildOptions::default())?;
    println!(
        "SL2(Z/{}Z): |G| = {}, {} non-quotient + {} quotient representations{}",
        pp.modulus(),
        group_order(pp),
        inv.nonquotient_count(),
        inv.quotient().len(),
        if inv.is_complete() { "" } else { " (partial)" }
    );
    println!("{:>5}  {:<14} {:>4}  kind", "index", "label", "dim");
    for (i, rep) in inv.entries().iter().enumerate() {
        let kind = if i < inv.nonquotient_count() {
            "non-quotient"
        } else {
            "quotient"
        };
        println!(
            "{:>5}  {:<14} {:>4}  {kind}",
            i + 1,
            rep.label.to_string(),
            rep.dim
        );
    }
    if args.wants(OutputFormat::Json) {
        ensure_out(&args.out)?;
        #[derive(serde::Serialize)]
        struct Entry {
            index: usize,
            label: RepLabel,
            display: String,
            dim: usize,
            quotient: bool,
        }
        #[derive(serde::Serialize)]
        struct Doc {
            schema_version: u32,
            p: u64,
            n: u32,
            group_order: u128,
            nonquotient_count: usize,
            complete: bool,
            entries: Vec<Entry>,
        }
        let doc = Doc {
            schema_version: SCHEMA_VERSION,
            p: pp.p(),
            n: pp.n(),
            group_order: group_order(pp),
            nonquotient_count: inv.nonquotient_count(),
            complete: inv.is_complete(),
            entries: inv
                .entries()
                .iter()
                .enumerate()
                .map(|(i, r)| Entry {
                    index: i + 1,
                    label: r.label.clone(),
                    display: r.label.to_string(),
                    dim: r.dim,
                    quotient: i >= inv.nonquotient_count(),
                })
                .collect(),
        };
        let path = args
            .out
            .join(format!("inventory_p{}_n{}.json", pp.p(), pp.n()));
        std::fs::write(&path, serde_json::to_string_pretty(&doc).unwrap())?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

// ---------------------------------------------------------------- chartable

fn cmd_chartable(args: &CommonArgs) -> Result<(), CliError> {
    let pp = prime_power(args)?;
    if pp.n() != 2 {
        return Err(CliError::Usage("chartable requires n = 2".into()));
    }
    let inv = Inventory::build(pp, RepBuildOptions::default())?;
    let classes = conjugacy_classes(pp)?;
    let reps: Vec<_> = inv.nonquotient().iter().collect();
    let table = character_table(&reps, &classes);
    println!(
        "character table: {} classes x {} non-quotient representations",
        table.class_reps.len(),
        table.labels.len()
    );
    ensure_out(&args.out)?;
    if args.wants(OutputFormat::Csv) {
        let mut csv = String::new();
        writeln!(csv, "# schema_version {SCHEMA_VERSION}").unwrap();
        let mut header = String::from("class,size");
        for l in &table.labels {
            write!(header, ",{l}").unwrap();
        }
        writeln!(csv, "{header}").unwrap();
        for (i, rep) in table.class_reps.iter().enumerate() {
            let mut row = format!("{rep},{}", table.class_sizes[i]);
            for v in &table.entries[i] {
                write!(row, ",{}", fmt_c(*v)).unwrap();
            }
            writeln!(csv, "{row}").unwrap();
        }
        let path = args
            .out
            .join(format!("character_table_p{}_n{}.csv", pp.p(), pp.n()));
        std::fs::write(&path, csv)?;
        println!("wrote {}", path.display());
    }
    if args.wants(OutputFormat::Json) {
        #[derive(serde::Serialize)]
        struct Doc {
            schema_version: u32,
            p: u64,
            n: u32,
            class_reps: Vec<String>,
            class_sizes: Vec<usize>,
            labels: Vec<String>,
            dims: Vec<usize>,
            /// entries[row][col] as [re, im]
            entries: Vec<Vec<[f64; 2]>>,
        }
        let doc = Doc {
            schema_version: SCHEMA_VERSION,
            p: pp.p(),
            n: pp.n(),
            class_reps: table.class_reps.iter().map(|c| c.to_string()).collect(),
            class_sizes: table.class_sizes.clone(),
            labels: table.labels.iter().map(|l| l.to_string()).collect(),
            dims: table.dims.clone(),
            entries: table
                .entries
                .iter()
                .map(|row| row.iter().map(|z| [z.re, z.im]).collect())
                .collect(),
        };
        let path = args
            .out
            .join(format!("character_table_p{}_n{}.json", pp.p(), pp.n()));
        std::fs::write(&path, serde_json::to_string_pretty(&doc).unwrap())?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

// ---------------------------------------------------------------- spectrum

fn cmd_spectrum(args: &CommonArgs, set: GenSetName) -> Result<(), CliError> {
    let pp = prime_power(args)?;
    let inv = Inventory::build(pp, RepBuildOptions::default())?;
    let s = standard_generators(set, pp);
    let report = cayley_spectrum(&s, &inv, IMAG_TOL)?;
    let tol = args.tol.unwrap_or(MONO_TOL);
    let clusters = monochromatic(&report, tol);
    println!(
        "spectrum p={} n={} set={}: leading = {:.6}, lambda1 {}= {:.6}, ramanujan = {:.6}",
        pp.p(),
        pp.n(),
        s.name,
        report.leading,
        if report.lower_bound { ">" } else { "" },
        report.lambda1,
        report.ramanujan
    );
    ensure_out(&args.out)?;
    let stem = format!("spectrum_{}_p{}_n{}", s.name, pp.p(), pp.n());
    if args.wants(OutputFormat::Csv) {
        let mut csv = String::new();
        writeln!(csv, "# schema_version {SCHEMA_VERSION}").unwrap();
        writeln!(
            csv,
            "rep_index,k,chi,delta,sigma,eigenvalue,multiplicity,monochromatic"
        )
        .unwrap();
        for rs in &report.per_rep {
            // group repeated values within the representation
            let mut i = 0;
            while i < rs.eigenvalues.len() {
                let mut j = i + 1;
                while j < rs.eigenvalues.len()
                    && (rs.eigenvalues[j] - rs.eigenvalues[i]).abs() <= tol
                {
                    j += 1;
                }
                let value = rs.eigenvalues[i..j].iter().sum::<f64>() / (j - i) as f64;
                let mono = clusters
                    .iter()
                    .find(|c| (c.value - value).abs() <= tol.max(1e-12) * 2.0 + tol)
                    .map(|c| c.monochromatic)
                    .unwrap_or(true);
                let (k, chi, delta, sigma) = label_columns(&rs.label);
                writeln!(
                    csv,
                    "{},{k},{chi},{delta},{sigma},{},{},{}",
                    rs.rep_index,
                    fmt_f(value),
                    (j - i) * rs.dim,
                    mono
                )
                .unwrap();
                i = j;
            }
        }
        let path = args.out.join(format!("{stem}.csv"));
        std::fs::write(&path, csv)?;
        println!("wrote {}", path.display());
    }
    if args.wants(OutputFormat::Json) {
        #[derive(serde::Serialize)]
        struct Doc<'a> {
            schema_version: u32,
            report: &'a spectra::SpectrumReport,
        }
        let path = args.out.join(format!("{stem}.json"));
        std::fs::write(
            &path,
            serde_json::to_string_pretty(&Doc {
                schema_version: SCHEMA_VERSION,
                report: &report,
            })
            .unwrap(),
        )?;
        println!("wrote {}", path.display());
    }
    if args.wants(OutputFormat::Svg) {
        let points: Vec<(f64, f64)> = report
            .per_rep
            .iter()
            .flat_map(|rs| {
                rs.eigenvalues
                    .iter()
                    .map(move |&v| (v, rs.rep_index as f64))
            })
            .collect();
        let plot = Scatter {
            title: format!(
                "Cayley spectra by representation, p = {}, n = {}, {}",
                pp.p(),
                pp.n(),
                s.name
            ),
            x_label: "eigenvalue".into(),
            y_label: "representation index".into(),
            points,
            vlines: vec![
                VLine {
                    x: report.leading,
                    color: "black",
                    label: "leading".into(),
                },
                VLine {
                    x: report.ramanujan,
                    color: "red",
                    label: "2 sqrt(deg-1)".into(),
                },
                VLine {
                    x: report.lambda1,
                    color: "green",
                    label: "lambda1".into(),
                },
            ],
        };
        let path = args.out.join(format!("{stem}.svg"));
        std::fs::write(&path, plot.render())?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

// ---------------------------------------------------------------- schreier

fn cmd_schreier(args: &CommonArgs, set: GenSetName) -> Result<(), CliError> {
    let pp = prime_power(args)?;
    let s = standard_generators(set, pp);
    let g = schreier_graph(&s, pp);
    println!(
        "schreier p={} n={} set={}: {} vertices, lambda1 = {:.6}, ramanujan = {:.6}",
        pp.p(),
        pp.n(),
        s.name,
        g.points.len(),
        g.lambda1(),
        ramanujan_bound(g.degree)
    );
    ensure_out(&args.out)?;
    let stem = format!("schreier_{}_p{}_n{}", s.name, pp.p(), pp.n());
    if args.wants(OutputFormat::Csv) {
        let mut csv = String::new();
        writeln!(csv, "# schema_version {SCHEMA_VERSION}").unwrap();
        writeln!(csv, "index,eigenvalue,normalized").unwrap();
        for (i, v) in g.spectrum.iter().enumerate() {
            writeln!(csv, "{},{},{}", i, fmt_f(*v), fmt_f(v / g.degree as f64)).unwrap();
        }
        let path = args.out.join(format!("{stem}.csv"));
        std::fs::write(&path, csv)?;
        println!("wrote {}", path.display());
    }
    if args.wants(OutputFormat::Json) {
        #[derive(serde::Serialize)]
        struct Doc {
            schema_version: u32,
            p: u64,
            n: u32,
            set: String,
            vertices: usize,
            degree: usize,
            lambda1: f64,
            ramanujan: f64,
            spectrum: Vec<f64>,
        }
        let doc = Doc {
            schema_version: SCHEMA_VERSION,
            p: pp.p(),
            n: pp.n(),
            set: s.name.clone(),
            vertices: g.points.len(),
            degree: g.degree,
            lambda1: g.lambda1(),
            ramanujan: ramanujan_bound(g.degree),
            spectrum: g.spectrum.clone(),
        };
        let path = args.out.join(format!("{stem}.json"));
        std::fs::write(&path, serde_json::to_string_pretty(&doc).unwrap())?;
        println!("wrote {}", path.display());
    }
    if args.wants(OutputFormat::Svg) {
        let points: Vec<(f64, f64)> = g
            .spectrum
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i as f64))
            .collect();
        let plot = Scatter {
            title: format!(
                "Schreier spectrum on P^1, p = {}, n = {}, {}",
                pp.p(),
                pp.n(),
                s.name
            ),
            x_label: "eigenvalue".into(),
            y_label: "sorted index".into(),
            points,
            vlines: vec![
                VLine {
                    x: g.degree as f64,
                    color: "black",
                    label: "degree".into(),
                },
                VLine {
                    x: ramanujan_bound(g.degree),
                    color: "red",
                    label: "2 sqrt(deg-1)".into(),
                },
            ],
        };
        let path = args.out.join(format!("{stem}.svg"));
        std::fs::write(&path, plot.render())?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

// ---------------------------------------------------------------- random

fn cmd_random(args: &CommonArgs, count: usize, seed: u64) -> Result<(), CliError> {
    let pp = prime_power(args)?;
    let sweep = spectra::random_pair_experiment(pp, count, seed);
    println!(
        "random sweep p={} n={} count={} seed={}: mean lambda1 = {:.4} (ramanujan {:.4})",
        pp.p(),
        pp.n(),
        count,
        seed,
        sweep.mean,
        sweep.ramanujan
    );
    ensure_out(&args.out)?;
    let stem = format!("random_p{}_n{}_seed{}", pp.p(), pp.n(), seed);
    if args.wants(OutputFormat::Csv) {
        let mut csv = String::new();
        writeln!(csv, "# schema_version {SCHEMA_VERSION}").unwrap();
        writeln!(csv, "pair,lambda1,normalized").unwrap();
        for (i, v) in sweep.lambda1s.iter().enumerate() {
            writeln!(csv, "{},{},{}", i, fmt_f(*v), fmt_f(v / 4.0)).unwrap();
        }
        let path = args.out.join(format!("{stem}.csv"));
        std::fs::write(&path, csv)?;
        println!("wrote {}", path.display());
    }
    if args.wants(OutputFormat::Json) {
        #[derive(serde::Serialize)]
        struct Doc<'a> {
            schema_version: u32,
            sweep: &'a spectra::RandomSweep,
        }
        let path = args.out.join(format!("{stem}.json"));
        std::fs::write(
            &path,
            serde_json::to_string_pretty(&Doc {
                schema_version: SCHEMA_VERSION,
                sweep: &sweep,
            })
            .unwrap(),
        )?;
        println!("wrote {}", path.display());
    }
    if args.wants(OutputFormat::Svg) {
        let points: Vec<(f64, f64)> = sweep
            .lambda1s
            .iter()
            .enumerate()
            .map(|(i, &v)| (v / 4.0, i as f64))
            .collect();
        let plot = Scatter {
            title: format!(
                "Random generator pairs on P^1, p = {}, n = {} ({} pairs)",
                pp.p(),
                pp.n(),
                count
            ),
            x_label: "normalized second eigenvalue".into(),
            y_label: "pair".into(),
            points,
            vlines: vec![
                VLine {
                    x: 1.0,
                    color: "black",
                    label: "1".into(),
                },
                VLine {
                    x: 3f64.sqrt() / 2.0,
                    color: "red",
                    label: "sqrt(3)/2".into(),
                },
                VLine {
                    x: sweep.mean / 4.0,
                    color: "green",
                    label: "mean".into(),
                },
            ],
        };
        let path = args.out.join(format!("{stem}.svg"));
        std::fs::write(&path, plot.render())?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

// ---------------------------------------------------------------- verify

struct Check {
    passed: bool,
}

fn check(list: &mut Vec<Check>, name: &'static str, passed: bool, detail: String) {
    println!(
        "{}: {} ({detail})",
        name,
        if passed { "PASS" } else { "FAIL" }
    );
    list.push(Check { passed });
}

/// The invariant suite: orders, inventory bookkeeping, homomorphism,
/// orthogonality, Fourier inversion and the Wedderburn union. Heavy checks
/// are limited to p <= 5.
fn cmd_verify(args: &CommonArgs) -> Result<bool, CliError> {
    let pp = prime_power(args)?;
    if pp.p() > 5 || pp.n() > 2 {
        return Err(CliError::Usage(
            "verify runs the full suite at p <= 5, n <= 2".into(),
        ));
    }
    let mut checks = Vec::new();
    let tol = |default: f64| args.tol.unwrap_or(default);

    // group order
    let order = group_order(pp);
    let count = crate::sl2group::enumerate(pp)?.count() as u128;
    check(
        &mut checks,
        "group-order",
        count == order,
        format!("enumerated {count}, formula {order}"),
    );

    // inventory bookkeeping
    let inv = Inventory::build(pp, RepBuildOptions::default())?;
    let sum = inv.sum_dim_sq();
    check(
        &mut checks,
        "completeness",
        sum == order,
        format!("sum dim^2 = {sum}, |G| = {order}"),
    );

    // homomorphism residual
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst = 0f64;
    for rep in inv.entries() {
        for _ in 0..10 {
            let a = random_element(pp, &mut rng);
            let b = random_element(pp, &mut rng);
            let lhs = rep.evaluate(&a.mul(&b));
            let rhs = rep.evaluate(&a) * rep.evaluate(&b);
            worst = worst.max(max_distance(&lhs, &rhs));
        }
    }
    check(
        &mut checks,
        "homomorphism",
        worst <= tol(1e-9),
        format!("max residual {worst:.2e}, tol {:.1e}", tol(1e-9)),
    );

    // orthogonality of the full character system
    let classes = conjugacy_classes(pp)?;
    let reps: Vec<_> = inv.entries().iter().collect();
    let table = character_table(&reps, &classes);
    let mut worst_orth = 0f64;
    for i in 0..table.labels.len() {
        for j in 0..table.labels.len() {
            let ip = table.inner_product(i, j);
            let want = if i == j { 1.0 } else { 0.0 };
            worst_orth = worst_orth.max((ip - Complex64::new(want, 0.0)).norm());
        }
    }
    check(
        &mut checks,
        "orthogonality",
        worst_orth <= tol(1e-8),
        format!("max deviation {worst_orth:.2e}, tol {:.1e}", tol(1e-8)),
    );

    // Fourier inversion + Plancherel
    let index = GroupIndex::build(pp)?;
    let mut worst_inv = 0f64;
    let mut worst_pl = 0f64;
    for _ in 0..3 {
        let f = GroupFunction::random(&index, &mut rng);
        let ft = fourier::fourier_transform(&f, &inv, &index);
        let back = fourier::inverse_fourier(&ft, &inv, &index)
            .map_err(|e| CliError::Numerical(e.to_string()))?;
        worst_inv = worst_inv.max(back.max_distance(&f));
        let (lhs, rhs) = fourier::plancherel_sides(&f, &ft, &inv);
        worst_pl = worst_pl.max((lhs - rhs).abs() / lhs.max(1.0));
    }
    check(
        &mut checks,
        "fourier-inversion",
        worst_inv <= tol(1e-8),
        format!(
            "max round-trip error {worst_inv:.2e}, tol {:.1e}",
            tol(1e-8)
        ),
    );
    check(
        &mut checks,
        "plancherel",
        worst_pl <= tol(1e-8),
        format!(
            "max relative residual {worst_pl:.2e}, tol {:.1e}",
            tol(1e-8)
        ),
    );

    // Wedderburn union against the dense adjacency oracle
    if order <= spectra::ADJACENCY_GUARD {
        let mut worst_w = 0f64;
        for name in [GenSetName::G1, GenSetName::G2, GenSetName::G3] {
            let s = standard_generators(name, pp);
            let report = cayley_spectrum(&s, &inv, IMAG_TOL)?;
            let mut union = report.union_with_multiplicity();
            let mut direct = cayley_adjacency_spectrum(&s, pp)?;
            union.sort_by(|a, b| a.partial_cmp(b).unwrap());
            direct.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let d = union
                .iter()
                .zip(&direct)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            worst_w = worst_w.max(d);
        }
        check(
            &mut checks,
            "wedderburn-union",
            worst_w <= tol(1e-6),
            format!(
                "max eigenvalue deviation {worst_w:.2e}, tol {:.1e}",
                tol(1e-6)
            ),
        );
    }

    // unitarity spot check
    let mut worst_u = 0f64;
    for rep in inv.entries().iter().take(6) {
        let g = random_element(pp, &mut rng);
        let u = rep.evaluate(&g);
        let gram = &u * u.adjoint();
        worst_u = worst_u.max(max_distance(
            &gram,
            &crate::linalg::CMat::identity(rep.dim, rep.dim),
        ));
    }
    check(
        &mut checks,
        "unitarity",
        worst_u <= tol(1e-9),
        format!("max deviation {worst_u:.2e}, tol {:.1e}", tol(1e-9)),
    );

    let all = checks.iter().all(|c| c.passed);
    println!(
        "verify p={} n={}: {}",
        pp.p(),
        pp.n(),
        if all {
            "all checks passed"
        } else {
            "FAILURES present"
        }
    );
    let _ = SL2Elem::identity(pp);
    Ok(all)
}
