use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use cgmat::central::classify_parity;
use cgmat::families::{self, DiagonalKind, FamilyType};
use cgmat::lattice;
use cgmat::scan;
use cgmat::suites::{self, Checks, SuiteOutcome};
use cgmat::symmetry::{d12_orbit, full_orbit, orbit_json, star_points};
use cgmat::{build_matrix, eval_c, from_regge, to_regge, CgError, ParamPoint, ReggeSymbol};

#[derive(Parser)]
#[command(
    name = "cgmat",
    version,
    about = "Exact Clebsch-Gordan coordinate matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print M(m, n, k).
    Matrix {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Write to a file instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print c_{m,n,k}(i, j).
    Value {
        #[command(flatten)]
        point: Point,
    },
    /// Print the Regge symbol of a point, or with --inverse the point of a symbol.
    Regge {
        /// m n k i j, or nine symbol entries row by row with --inverse.
        #[arg(allow_negative_numbers = true, required = true)]
        values: Vec<i64>,
        #[arg(long)]
        inverse: bool,
    },
    /// Orbit of a point under the 72 symmetries (or the 12-element subgroup).
    Orbit {
        #[command(flatten)]
        point: Point,
        #[arg(long)]
        d12: bool,
        #[arg(long)]
        json: bool,
    },
    /// The 36-point star of zeros around the centre of M(2k, 2k, k), k odd.
    Star {
        k: i64,
        #[arg(long)]
        json: bool,
    },
    /// Multiplier lattice around the centre.
    Lattice {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, default_value_t = 3)]
        radius: usize,
        /// Every polygon cell within the radius, by symmetry transport.
        #[arg(long)]
        window: bool,
        #[arg(long)]
        json: bool,
    },
    /// Zero families.
    Families {
        #[command(subcommand)]
        command: FamiliesCommand,
    },
    /// Range scans and the M(2k, 2k, k) checks.
    Scan {
        #[command(subcommand)]
        command: ScanCommand,
    },
    /// Identity suites; exit code 2 on any failure.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Largest even m, n, k for dixon; largest m + n otherwise.
        #[arg(long, default_value_t = 40)]
        max: i64,
    },
}

#[derive(Args)]
struct Shape {
    m: i64,
    n: i64,
    k: i64,
}

#[derive(Args)]
struct Point {
    #[arg(allow_negative_numbers = true)]
    m: i64,
    #[arg(allow_negative_numbers = true)]
    n: i64,
    #[arg(allow_negative_numbers = true)]
    k: i64,
    #[arg(allow_negative_numbers = true)]
    i: i64,
    #[arg(allow_negative_numbers = true)]
    j: i64,
}

impl Point {
    fn get(&self) -> ParamPoint {
        ParamPoint::new(self.m, self.n, self.k, self.i, self.j)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
    PgmZeromap,
}

#[derive(Clone, Copy, ValueEnum)]
enum CatalogFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    /// n = 2k, m + k odd; FREE is m.
    N2k,
    /// m = 2k, n + k odd; FREE is n.
    M2k,
    /// m = n, k odd; FREE is m.
    Mn,
}

#[derive(Subcommand)]
enum FamiliesCommand {
    /// Type I or II solutions up to max N.
    Enumerate {
        #[arg(long = "type")]
        family: String,
        #[arg(long = "max-N")]
        max_n: i64,
        #[arg(long, value_enum, default_value = "csv")]
        format: CatalogFormat,
    },
    /// Proper zeros on a diagonal.
    Diagonal {
        #[arg(long, value_enum)]
        kind: Kind,
        free: i64,
        k: i64,
    },
    /// Entry below the t-th diagonal zero of M(m, 2k, k).
    Below { m: i64, k: i64, t: i64 },
    /// Odd A, B, C > 2 with A^2 + offset = B^2 + C^2, B <= bound.
    Squares {
        #[arg(long)]
        offset: i64,
        #[arg(long)]
        bound: i64,
    },
}

#[derive(Subcommand)]
enum ScanCommand {
    /// All proper zeros with J <= max J; summary JSON on stdout.
    Range {
        #[arg(long = "max-j", default_value_t = 300)]
        max_j: i64,
        /// Catalog as JSON lines.
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Zeros of M(2k, 2k, k) for k <= max k; exit code 2 on a counterexample.
    Conjectures {
        #[arg(long = "max-k", default_value_t = 200)]
        max_k: i64,
        #[arg(long)]
        json: bool,
    },
    /// Classify one zero.
    Classify {
        #[command(flatten)]
        point: Point,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Dixon,
    NearCentral,
    Lemma1,
    Recurrences,
    Censorship,
}

macro_rules! outln {
    ($o:ident $(, $($t:tt)*)?) => {{
        let _ = writeln!($o $(, $($t)*)?);
    }};
}

macro_rules! outs {
    ($o:ident, $($t:tt)*) => {{
        let _ = write!($o, $($t)*);
    }};
}

/// Failure that maps to exit code 2.
#[derive(Debug)]
struct Failed(String);

impl std::fmt::Display for Failed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Failed {}

fn emit(out: &mut String, output: Option<&PathBuf>, text: &str) -> anyhow::Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            out.push_str(text);
            Ok(())
        }
    }
}

fn pretty(v: &impl serde::Serialize) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn matrix_cmd(
    out: &mut String,
    shape: &Shape,
    format: Format,
    output: Option<&PathBuf>,
) -> anyhow::Result<()> {
    let mat = build_matrix(shape.m, shape.n, shape.k)?;
    let text = match format {
        Format::Text => mat.render_text(),
        Format::Csv => mat.to_csv(),
        Format::Json => pretty(&mat.to_json())?,
        Format::PgmZeromap => mat.zeromap_pgm(),
    };
    emit(out, output, &text)
}

fn regge_cmd(out: &mut String, values: &[i64], inverse: bool) -> anyhow::Result<()> {
    if inverse {
        if values.len() != 9 {
            bail!(CgError::MalformedSymbol(format!(
                "expected 9 entries, got {}",
                values.len()
            )));
        }
        let mut e = [[0i64; 3]; 3];
        for (t, v) in values.iter().enumerate() {
            e[t / 3][t % 3] = *v;
        }
        let p = from_regge(&ReggeSymbol::new(e))?;
        outln!(out, "{} {} {} {} {}", p.m, p.n, p.k, p.i, p.j);
    } else {
        if values.len() != 5 {
            bail!(CgError::MalformedSymbol(format!(
                "expected m n k i j, got {} numbers",
                values.len()
            )));
        }
        let p = ParamPoint::new(values[0], values[1], values[2], values[3], values[4]);
        let text = to_regge(&p)?.to_string();
        outs!(out, "{text}");
        if !text.ends_with('\n') {
            outln!(out);
        }
    }
    Ok(())
}

fn orbit_cmd(out: &mut String, p: ParamPoint, d12: bool, json: bool) -> anyhow::Result<()> {
    let orbit = if d12 { d12_orbit(&p)? } else { full_orbit(&p)? };
    let all_zero = orbit
        .iter()
        .all(|q| eval_c(q).map(|v| v == 0.into()).unwrap_or(false));
    if json {
        outs!(out, "{}", pretty(&orbit_json(orbit.iter()))?);
    } else {
        for q in &orbit {
            outln!(out, "{q}");
        }
        outln!(
            out,
            "{} points{}",
            orbit.len(),
            if all_zero { ", all zero" } else { "" }
        );
    }
    Ok(())
}

fn star_cmd(out: &mut String, k: i64, json: bool) -> anyhow::Result<()> {
    let points = star_points(k)?;
    if json {
        outs!(out, "{}", pretty(&orbit_json(points.iter()))?);
    } else {
        for q in &points {
            outln!(out, "{q}");
        }
        outln!(out, "{} points", points.len());
    }
    Ok(())
}

fn lattice_cmd(
    out: &mut String,
    shape: &Shape,
    radius: usize,
    window: bool,
    json: bool,
) -> anyhow::Result<()> {
    let parity = classify_parity(shape.m, shape.n, shape.k)?;
    let (m, n, k) = parity.canonical;
    if (m, n, k) != (shape.m, shape.n, shape.k) {
        eprintln!(
            "normalised ({}, {}, {}) to ({m}, {n}, {k}) by {}",
            shape.m,
            shape.n,
            shape.k,
            parity.normalization.name()
        );
    }
    if window {
        let cells = lattice::lattice_window(m, n, k, radius)?;
        if json {
            outs!(out, "{}", pretty(&cells)?);
        } else {
            outln!(out, "offset\tposition\tlabel\tmultiplier\tvia");
            for c in &cells {
                let mult = c
                    .multiplier
                    .as_ref()
                    .map(|r| r.to_string())
                    .unwrap_or_else(|| "-".into());
                outln!(
                    out,
                    "({}, {})\t({}, {})\t{}\t{}\t{}",
                    c.offset.0,
                    c.offset.1,
                    c.position.0,
                    c.position.1,
                    c.label,
                    mult,
                    c.via.as_deref().unwrap_or("-")
                );
            }
        }
        return Ok(());
    }
    let lat = lattice::lattice(m, n, k, radius)?;
    if json {
        outs!(out, "{}", pretty(&lat.to_json())?);
        return Ok(());
    }
    outln!(
        out,
        "case {:?}, anchor {} = {}",
        lat.case,
        lat.anchor,
        lat.anchor_value
    );
    outln!(
        out,
        "cell\toffset\tposition\tmultiplier\tnumerator\tdenominator\tlabel"
    );
    for c in &lat.cells {
        let pos = c
            .position
            .map(|(r, c)| format!("({r}, {c})"))
            .unwrap_or_else(|| "outside".into());
        outln!(
            out,
            "{}\t({}, {})\t{}\t{}\t{}\t{}\t{}",
            c.name,
            c.offset.0,
            c.offset.1,
            pos,
            c.multiplier,
            c.unreduced_numerator,
            c.unreduced_denominator,
            c.label
        );
    }
    Ok(())
}

fn families_cmd(out: &mut String, cmd: &FamiliesCommand) -> anyhow::Result<()> {
    match cmd {
        FamiliesCommand::Enumerate {
            family,
            max_n,
            format,
        } => {
            let family: FamilyType = family.parse()?;
            let sols = match family {
                FamilyType::I => families::enumerate_type_I(*max_n),
                FamilyType::II => families::enumerate_type_II(*max_n),
            };
            match format {
                CatalogFormat::Csv => outs!(out, "{}", families::catalog_csv(&sols)),
                CatalogFormat::Json => outs!(out, "{}", pretty(&families::catalog_json(&sols))?),
            }
        }
        FamiliesCommand::Diagonal { kind, free, k } => {
            let kind = match kind {
                Kind::N2k => DiagonalKind::NEqualsTwoK,
                Kind::M2k => DiagonalKind::MEqualsTwoK,
                Kind::Mn => DiagonalKind::MEqualsN,
            };
            let fam = families::diagonal_zeros(kind, *free, *k)?;
            outln!(
                out,
                "M({}, {}, {}): {} proper zeros, lower-left to upper-right",
                fam.m,
                fam.n,
                fam.k,
                fam.zero_positions.len()
            );
            for p in &fam.zero_positions {
                let (r, c) = p.position();
                outln!(out, "{p}\tat ({r}, {c})");
            }
        }
        FamiliesCommand::Below { m, k, t } => {
            outln!(out, "{}", families::below_diagonal_value(*m, *k, *t)?);
        }
        FamiliesCommand::Squares { offset, bound } => {
            outln!(out, "A,B,C,m,n,k,family");
            for t in families::sum_of_squares_solver(*offset, *bound)? {
                let (a, b, c) = t;
                let (m, n, mp) = (b - 1, c - 1, a - 1);
                let fam = families::triple_to_solution(*offset, t)
                    .map(|s| s.family.to_string())
                    .unwrap_or_else(|| "-".into());
                outln!(out, "{a},{b},{c},{m},{n},{},{fam}", (m + n - mp) / 2);
            }
        }
    }
    Ok(())
}

fn scan_cmd(out: &mut String, cmd: &ScanCommand) -> anyhow::Result<()> {
    match cmd {
        ScanCommand::Range {
            max_j,
            catalog,
            summary,
        } => {
            let (report, records) = scan::scan_range(*max_j)?;
            if let Some(path) = catalog {
                emit(out, Some(path), &scan::catalog_jsonl(&records))?;
            }
            let text = pretty(&report)?;
            if let Some(path) = summary {
                emit(out, Some(path), &text)?;
            }
            outs!(out, "{text}");
            if report.closure_violations > 0 {
                return Err(Failed(format!(
                    "{} orbit images missing from the catalog",
                    report.closure_violations
                ))
                .into());
            }
        }
        ScanCommand::Conjectures { max_k, json } => {
            let verdicts = scan::check_conjectures(*max_k)?;
            if *json {
                outs!(out, "{}", pretty(&verdicts)?);
            } else {
                for v in &verdicts {
                    outln!(
                        out,
                        "k = {}: {} proper zeros, {} ({})",
                        v.k,
                        v.proper_zeros,
                        if v.holds { "holds" } else { "COUNTEREXAMPLE" },
                        v.detail
                    );
                }
            }
            let bad: Vec<i64> = verdicts.iter().filter(|v| !v.holds).map(|v| v.k).collect();
            if !bad.is_empty() {
                return Err(Failed(format!("counterexamples at k = {bad:?}")).into());
            }
        }
        ScanCommand::Classify { point } => {
            let rec = scan::classify_zero(&point.get())?;
            outs!(out, "{}", pretty(&rec)?);
        }
    }
    Ok(())
}

fn verify_cmd(out: &mut String, suite: Suite, max: i64) -> anyhow::Result<()> {
    let outcomes: Vec<SuiteOutcome> = match suite {
        Suite::Dixon => vec![suites::dixon_suite(max)],
        Suite::NearCentral => vec![suites::near_central_suite(max)],
        Suite::Lemma1 => suites::recurrence_suite(
            max,
            Checks {
                lemma1: true,
                ..Checks::NONE
            },
        ),
        Suite::Censorship => suites::recurrence_suite(
            max,
            Checks {
                censorship: true,
                ..Checks::NONE
            },
        ),
        Suite::Recurrences => suites::recurrence_suite(
            max,
            Checks {
                censorship: false,
                lemma1: false,
                ..Checks::ALL
            },
        ),
    };
    let identities: u64 = outcomes.iter().map(|o| o.identities).sum();
    let failures: u64 = outcomes.iter().map(|o| o.failure_count).sum();
    if failures == 0 {
        outln!(out, "OK (identities: {identities})");
        return Ok(());
    }
    for o in &outcomes {
        for f in &o.failures {
            eprintln!("{}: {f}", o.name);
        }
    }
    outln!(out, "FAIL ({failures} of {identities} identities)");
    Err(Failed(format!("{failures} failures")).into())
}

fn run(out: &mut String, cli: Cli) -> anyhow::Result<()> {
    match &cli.command {
        Command::Matrix {
            shape,
            format,
            output,
        } => matrix_cmd(out, shape, *format, output.as_ref()),
        Command::Value { point } => {
            outln!(out, "{}", eval_c(&point.get())?);
            Ok(())
        }
        Command::Regge { values, inverse } => regge_cmd(out, values, *inverse),
        Command::Orbit { point, d12, json } => orbit_cmd(out, point.get(), *d12, *json),
        Command::Star { k, json } => star_cmd(out, *k, *json),
        Command::Lattice {
            shape,
            radius,
            window,
            json,
        } => lattice_cmd(out, shape, *radius, *window, *json),
        Command::Families { command } => families_cmd(out, command),
        Command::Scan { command } => scan_cmd(out, command),
        Command::Verify { suite, max } => verify_cmd(out, *suite, *max),
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<Failed>().is_some() {
        return 2;
    }
    match err.downcast_ref::<CgError>() {
        Some(CgError::Resource { .. }) => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut out = String::new();
    let result = run(&mut out, cli);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout
        .write_all(out.as_bytes())
        .and_then(|_| stdout.flush());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
