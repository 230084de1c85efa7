//! Command definitions and execution.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lyubeznik_core::fsing::{
    fedder_is_fpure, is_compatible, ncm_ideal, sdim_within_budget, splitting_prime, SplittingDimension, DEFAULT_E_MAX,
};
use lyubeznik_core::lyubeznik::{
    check_projective_duality, check_sheaf_cohomology, lyubeznik_table, projective_table, raw_double_ext,
    standard_checks, CellSource, CellStore, CheckReport, CheckStatus, LyubeznikTable, NoStore, TableMode, TableOptions,
};
use lyubeznik_core::oracle::strand_double_ext;
use lyubeznik_core::parse::parse_polynomial;
use lyubeznik_core::{format_polynomial, Ideal};
use serde::Serialize;

use crate::checkpoint::{job_key, FileStore};
use crate::error::{exit, CliError};
use crate::input::{canonical, Job, JobSpec};

/// Default S-pair allowance for the splitting chain behind the vanishing
/// check; running out leaves `sdim` uncertified instead of stalling the table.
pub const DEFAULT_SDIM_BUDGET: u64 = 10_000;

#[derive(Parser, Debug)]
#[command(
    name = "lyubeznik",
    version,
    about = "Lyubeznik tables and F-splitting diagnostics over prime fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Cap on processed S-pairs for the whole job.
    #[arg(long, global = true)]
    pub budget: Option<u64>,

    /// Worker threads for table cells (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Check every Gröbner basis, resolution and degree-zero Ext rank as it is built.
    #[arg(long, global = true)]
    pub verify: bool,

    /// Largest Frobenius exponent for splitting chains and compatibility.
    #[arg(long, global = true, default_value_t = DEFAULT_E_MAX)]
    pub e_max: u32,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Fedder's F-purity test.
    Fpure { input: PathBuf },
    /// Lyubeznik table of the local ring at the homogeneous maximal ideal.
    Table {
        input: PathBuf,
        #[command(flatten)]
        table: TableArgs,
    },
    /// Lyubeznik table of the projective scheme, with the duality checks.
    Projective {
        input: PathBuf,
        #[command(flatten)]
        table: TableArgs,
        /// Assert the scheme is Cohen-Macaulay; enables the duality checks.
        #[arg(long)]
        assert_cm: bool,
        /// Assert the scheme is equidimensional; needed for the Stanley-Reisner clause checks.
        #[arg(long)]
        assert_equidim: bool,
    },
    /// Splitting dimension.
    Sdim { input: PathBuf },
    /// The chain of splitting ideals and the splitting prime it gives.
    SplittingPrime { input: PathBuf },
    /// Whether a second ideal containing the first is compatible.
    Compatible {
        input: PathBuf,
        /// Generators of the second ideal, comma separated.
        #[arg(long = "with")]
        other: String,
    },
    /// The ideal cutting out the non-Cohen-Macaulay locus.
    Ncm { input: PathBuf },
    /// Degree-zero double Ext at (i, j), with no F-purity requirement.
    RawExt {
        input: PathBuf,
        i: usize,
        j: usize,
        #[arg(long)]
        no_minimalize: bool,
    },
    /// Cross-checks against linear algebra on a Stanley-Reisner input.
    Oracle { input: PathBuf },
}

#[derive(Args, Debug, Clone)]
pub struct TableArgs {
    /// Also compute cells that vanish for formal reasons; any failed check exits 1.
    #[arg(long)]
    pub strict: bool,
    /// Skip cells the vanishing theorem forces to zero.
    #[arg(long)]
    pub fast: bool,
    /// Keep non-minimal resolutions.
    #[arg(long)]
    pub no_minimalize: bool,
    /// Resume from and record cells in this file.
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    /// S-pair allowance for the splitting chain behind the vanishing check.
    #[arg(long, default_value_t = DEFAULT_SDIM_BUDGET)]
    pub sdim_budget: u64,
}

/// What a run printed and how it ended.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn failed(err: &CliError) -> Outcome {
        Outcome {
            stderr: format!("error: {err}\n"),
            code: err.exit_code(),
            ..Default::default()
        }
    }
}

#[derive(Serialize)]
struct Header<'a> {
    char: u32,
    vars: &'a [String],
    generators: Vec<String>,
}

#[derive(Serialize)]
struct Doc<'a, T: Serialize> {
    #[serde(flatten)]
    header: Header<'a>,
    #[serde(flatten)]
    body: T,
}

fn header(job: &Job) -> Header<'_> {
    Header {
        char: job.ring.characteristic(),
        vars: job.ring.names(),
        generators: job.generators(),
    }
}

fn json<T: Serialize>(job: &Job, body: T) -> String {
    let doc = Doc {
        header: header(job),
        body,
    };
    inline_flat_arrays(&serde_json::to_string_pretty(&doc).expect("documents serialize")) + "\n"
}

/// Puts arrays of scalars on one line: `[0, 2, 1]` rather than five lines.
fn inline_flat_arrays(pretty: &str) -> String {
    let lines: Vec<&str> = pretty.lines().collect();
    let mut out: Vec<String> = Vec::with_capacity(lines.len());
    let mut k = 0;
    while k < lines.len() {
        let line = lines[k];
        if line.ends_with('[') {
            let close = lines[k + 1..].iter().position(|l| {
                let t = l.trim_start();
                t.starts_with(']') || t.ends_with('[') || t.ends_with('{')
            });
            if let Some(off) = close {
                let end = k + 1 + off;
                if lines[end].trim_start().starts_with(']') {
                    let items: Vec<&str> = lines[k + 1..end].iter().map(|l| l.trim()).collect();
                    out.push(format!("{}{}{}", line, items.join(" "), lines[end].trim_start()));
                    k = end + 1;
                    continue;
                }
            }
        }
        out.push(line.to_string());
        k += 1;
    }
    out.join("\n")
}

fn gens(ideal: &Ideal) -> Vec<String> {
    ideal.generators().iter().map(format_polynomial).collect()
}

fn load(path: &PathBuf) -> Result<(JobSpec, Job), CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let spec = JobSpec::parse(&text)?;
    let job = spec.build()?;
    Ok((spec, job))
}

pub fn run(cli: &Cli) -> Outcome {
    if let Some(n) = cli.threads {
        // fails only if a pool already exists, which keeps its size
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match execute(cli) {
        Ok(out) => out,
        Err(e) => Outcome::failed(&e),
    }
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let input = match &cli.command {
        Command::Fpure { input }
        | Command::Table { input, .. }
        | Command::Projective { input, .. }
        | Command::Sdim { input }
        | Command::SplittingPrime { input }
        | Command::Compatible { input, .. }
        | Command::Ncm { input }
        | Command::RawExt { input, .. }
        | Command::Oracle { input } => input,
    };
    let (spec, job) = load(input)?;
    let settings = job.ring.settings();
    if let Some(b) = cli.budget {
        settings.set_pair_limit(b);
    }
    settings.set_verify(cli.verify);
    if cli.e_max == 0 {
        return Err(CliError::Usage("--e-max must be at least 1".into()));
    }
    match &cli.command {
        Command::Fpure { .. } => fpure(cli, &job),
        Command::Table { table, .. } => table_cmd(cli, &spec, &job, table, None),
        Command::Projective {
            table,
            assert_cm,
            assert_equidim,
            ..
        } => table_cmd(cli, &spec, &job, table, Some((*assert_cm, *assert_equidim))),
        Command::Sdim { .. } => sdim_cmd(cli, &job),
        Command::SplittingPrime { .. } => splitting_cmd(cli, &job),
        Command::Compatible { other, .. } => compatible_cmd(cli, &job, other),
        Command::Ncm { .. } => ncm_cmd(cli, &job),
        Command::RawExt {
            i, j, no_minimalize, ..
        } => raw_cmd(cli, &job, *i, *j, *no_minimalize),
        Command::Oracle { .. } => oracle_cmd(cli, &job),
    }
}

fn ok(stdout: String) -> Result<Outcome, CliError> {
    Ok(Outcome {
        stdout,
        ..Default::default()
    })
}

fn fpure(cli: &Cli, job: &Job) -> Result<Outcome, CliError> {
    let verdict = fedder_is_fpure(&job.ideal)?;
    match cli.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Body {
                fpure: bool,
            }
            ok(json(job, Body { fpure: verdict }))
        }
        Format::Text => ok(format!("F-pure: {verdict}\n")),
    }
}

#[derive(Serialize)]
struct TableBody<'a> {
    d: usize,
    mode: TableMode,
    fpure: bool,
    sdim: Option<SplittingDimension>,
    entries: Vec<(usize, usize, Option<u64>)>,
    theorem_derived: Vec<(usize, usize)>,
    missing: Vec<(usize, usize)>,
    checks: &'a CheckReport,
}

fn not_fpure(cli: &Cli, job: &Job) -> Result<Outcome, CliError> {
    let stdout = match cli.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Body {
                fpure: bool,
                error: &'static str,
            }
            json(
                job,
                Body {
                    fpure: false,
                    error: "NOT_F_PURE",
                },
            )
        }
        Format::Text => "F-pure: false\n".to_string(),
    };
    Ok(Outcome {
        stdout,
        stderr: "error: NOT_F_PURE: the ring is not F-pure, so degree-zero double Ext does not compute Lyubeznik numbers; `raw-ext` reports the raw dimensions\n".into(),
        code: exit::NOT_F_PURE,
    })
}

fn table_cmd(
    cli: &Cli,
    spec: &JobSpec,
    job: &Job,
    args: &TableArgs,
    projective: Option<(bool, bool)>,
) -> Result<Outcome, CliError> {
    if !fedder_is_fpure(&job.ideal)? {
        return not_fpure(cli, job);
    }
    let sdim = sdim_within_budget(&job.ideal, cli.e_max, args.sdim_budget)?;
    let opts = TableOptions {
        strict: args.strict,
        fast: args.fast,
        no_minimalize: args.no_minimalize,
        sdim: sdim.filter(|s| s.certified),
    };
    let label = if projective.is_some() { "projective" } else { "table" };
    let file_store;
    let store: &dyn CellStore = match &args.checkpoint {
        Some(path) => {
            let key = job_key(&canonical(spec, job), &format!("{label} strict={}", args.strict));
            file_store = FileStore::open(path, key)?;
            &file_store
        }
        None => &NoStore,
    };
    let table = match projective {
        None => lyubeznik_table(&job.ideal, &opts, store)?,
        Some(_) => projective_table(&job.ideal, &opts, store)?,
    };
    let mut report = standard_checks(&table, sdim);
    if let Some((cm, equidim)) = projective {
        report.push(check_projective_duality(&table, cm));
        if let Some(c) = &job.complex {
            report.push(check_sheaf_cohomology(&table, c, job.ring.field(), cm && equidim));
        }
    }
    let stdout = match cli.format {
        Format::Json => json(job, table_body(&table, sdim, &report)),
        Format::Text => table_text(&table, sdim, &report),
    };
    let code = if !table.is_complete() {
        exit::BUDGET_EXCEEDED
    } else if args.strict && report.any_failed() {
        exit::FAILURE
    } else {
        exit::OK
    };
    let stderr = match code {
        exit::BUDGET_EXCEEDED => "error: BUDGET_EXCEEDED: some cells are missing\n".to_string(),
        exit::FAILURE => "error: a check failed in strict mode\n".to_string(),
        _ => String::new(),
    };
    Ok(Outcome { stdout, stderr, code })
}

fn table_body<'a>(t: &LyubeznikTable, sdim: Option<SplittingDimension>, report: &'a CheckReport) -> TableBody<'a> {
    let listed = t
        .cells
        .iter()
        .chain(&t.out_of_range)
        .filter(|c| c.source != CellSource::Triangular);
    let pick = |src: CellSource| -> Vec<(usize, usize)> {
        t.cells.iter().filter(|c| c.source == src).map(|c| (c.i, c.j)).collect()
    };
    TableBody {
        d: t.d,
        mode: t.mode,
        fpure: t.fpure,
        sdim,
        entries: {
            let mut e: Vec<_> = listed.map(|c| (c.i, c.j, c.value)).collect();
            e.sort_unstable_by_key(|c| (c.0, c.1));
            e
        },
        theorem_derived: pick(CellSource::Theorem),
        missing: pick(CellSource::Missing),
        checks: report,
    }
}

fn sdim_text(sdim: Option<SplittingDimension>) -> String {
    match sdim {
        Some(s) if s.certified => format!("sdim = {}", s.value),
        Some(s) => format!(
            "sdim = {} (UNCERTIFIED: the splitting chain did not stabilize)",
            s.value
        ),
        None => "sdim unknown (splitting chain budget exhausted)".to_string(),
    }
}

fn table_text(t: &LyubeznikTable, sdim: Option<SplittingDimension>, report: &CheckReport) -> String {
    let mut out = String::new();
    let (what, dim) = match t.mode {
        TableMode::LocalCone => ("local", format!("dim R = {}", t.d)),
        TableMode::Projective => ("projective", format!("dim X = {}", t.d)),
    };
    let _ = writeln!(out, "Lyubeznik table ({what}, {dim}, char {})", t.characteristic);
    out.push_str(&t.render());
    let _ = writeln!(out, "{}", sdim_text(sdim));
    out.push_str(&report_text(report));
    out
}

fn report_text(report: &CheckReport) -> String {
    let width = report.entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
    let mut out = String::from("checks:\n");
    for e in &report.entries {
        let status = match e.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "skip",
        };
        let _ = writeln!(out, "  {:<width$}  {status}  {}", e.name, e.details);
    }
    out
}

fn sdim_cmd(cli: &Cli, job: &Job) -> Result<Outcome, CliError> {
    let data = splitting_prime(&job.ideal, cli.e_max)?;
    let s = SplittingDimension {
        value: data.sdim,
        certified: data.certified(),
    };
    match cli.format {
        Format::Json => ok(json(job, s)),
        Format::Text => ok(sdim_text(Some(s)) + "\n"),
    }
}

fn splitting_cmd(cli: &Cli, job: &Job) -> Result<Outcome, CliError> {
    let data = splitting_prime(&job.ideal, cli.e_max)?;
    #[derive(Serialize)]
    struct Body {
        chain: Vec<Vec<String>>,
        stabilized_at: Option<u32>,
        candidate: Vec<String>,
        sdim: i64,
        certified: bool,
        regular: bool,
        e_max: u32,
    }
    let body = Body {
        chain: data.chain.iter().map(gens).collect(),
        stabilized_at: data.stabilized_at,
        candidate: gens(&data.candidate),
        sdim: data.sdim,
        certified: data.certified(),
        regular: data.regular,
        e_max: data.e_max,
    };
    match cli.format {
        Format::Json => ok(json(job, body)),
        Format::Text => {
            let mut out = String::new();
            if body.regular {
                out.push_str("regular ring: the splitting prime is the defining ideal\n");
            }
            for (k, c) in body.chain.iter().enumerate() {
                let _ = writeln!(out, "I_{} = ({})", k + 1, c.join(", "));
            }
            match body.stabilized_at {
                Some(e) => {
                    let _ = writeln!(out, "stable from e = {e}");
                }
                None if !body.regular => {
                    let _ = writeln!(out, "UNCERTIFIED: no stabilization up to e = {}", body.e_max);
                }
                None => {}
            }
            let _ = writeln!(out, "splitting prime = ({})", body.candidate.join(", "));
            let _ = writeln!(out, "sdim = {}", body.sdim);
            ok(out)
        }
    }
}

fn parse_ideal(job: &Job, text: &str) -> Result<Ideal, CliError> {
    let polys = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|g| parse_polynomial(&job.ring, g))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Ideal::new(&job.ring, polys)?)
}

fn compatible_cmd(cli: &Cli, job: &Job, other: &str) -> Result<Outcome, CliError> {
    let j = parse_ideal(job, other)?;
    let c = is_compatible(&job.ideal, &j, cli.e_max)?;
    match cli.format {
        Format::Json => ok(json(job, c)),
        Format::Text => ok(format!(
            "compatible: {} (checked e = 1..{})\n",
            c.holds, c.checked_up_to
        )),
    }
}

fn ncm_cmd(cli: &Cli, job: &Job) -> Result<Outcome, CliError> {
    let a = ncm_ideal(&job.ideal)?;
    let radical = a.monomial_radical()?;
    let radical_compatible = match &radical {
        Some(r) if !r.is_unit()? => Some(is_compatible(&job.ideal, r, cli.e_max)?),
        _ => None,
    };
    #[derive(Serialize)]
    struct Body {
        ncm: Vec<String>,
        cohen_macaulay: bool,
        radical: Option<Vec<String>>,
        radical_compatible: Option<lyubeznik_core::fsing::Compatibility>,
    }
    let body = Body {
        cohen_macaulay: a.is_unit()?,
        ncm: gens(&a),
        radical: radical.as_ref().map(gens),
        radical_compatible,
    };
    match cli.format {
        Format::Json => ok(json(job, body)),
        Format::Text => {
            let mut out = if body.cohen_macaulay {
                "Cohen-Macaulay: the ideal is the unit ideal\n".to_string()
            } else {
                format!("ncm = ({})\n", body.ncm.join(", "))
            };
            if let (Some(r), Some(c)) = (&body.radical, &body.radical_compatible) {
                let _ = writeln!(
                    out,
                    "radical = ({}) compatible: {} (e = 1..{})",
                    r.join(", "),
                    c.holds,
                    c.checked_up_to
                );
            }
            ok(out)
        }
    }
}

fn raw_cmd(cli: &Cli, job: &Job, i: usize, j: usize, no_minimalize: bool) -> Result<Outcome, CliError> {
    let value = raw_double_ext(&job.ideal, i, j, no_minimalize)?;
    let fpure = fedder_is_fpure(&job.ideal)?;
    #[derive(Serialize)]
    struct Body {
        i: usize,
        j: usize,
        value: u64,
        fpure: bool,
    }
    match cli.format {
        Format::Json => ok(json(job, Body { i, j, value, fpure })),
        Format::Text => {
            let n = job.ring.nvars();
            let mut out = format!(
                "dim Ext^{}(Ext^{}(R, S), S)_0 = {value}  (i = {i}, j = {j})\n",
                n.saturating_sub(i),
                n.saturating_sub(j)
            );
            if !fpure {
                out.push_str("note: the ring is not F-pure, so this need not be a Lyubeznik number\n");
            }
            ok(out)
        }
    }
}

fn oracle_cmd(cli: &Cli, job: &Job) -> Result<Outcome, CliError> {
    let complex = job
        .complex
        .as_ref()
        .ok_or_else(|| CliError::Usage("`oracle` needs a `facets:` input".into()))?;
    let d = job.ideal.krull_dimension()? as usize;
    let field = job.ring.field();
    #[derive(Serialize)]
    struct Body {
        components: usize,
        reduced_cohomology: Vec<u64>,
        cells: Vec<(usize, usize, u64, u64)>,
        agree: bool,
    }
    let mut cells = Vec::new();
    for j in 0..=d {
        for i in 0..=j {
            cells.push((
                i,
                j,
                raw_double_ext(&job.ideal, i, j, false)?,
                strand_double_ext(&job.ideal, i, j)?,
            ));
        }
    }
    let body = Body {
        components: complex.connected_components(),
        reduced_cohomology: complex.reduced_cohomology(field),
        agree: cells.iter().all(|c| c.2 == c.3),
        cells,
    };
    let code = if body.agree { exit::OK } else { exit::FAILURE };
    let stdout = match cli.format {
        Format::Json => json(job, &body),
        Format::Text => {
            let mut out = format!(
                "components = {}\nreduced cohomology (from degree -1) = {:?}\n",
                body.components, body.reduced_cohomology
            );
            for (i, j, a, b) in &body.cells {
                let mark = if a == b { "ok" } else { "MISMATCH" };
                let _ = writeln!(out, "({i}, {j}): module {a}, strand {b}  {mark}");
            }
            out
        }
    };
    Ok(Outcome {
        stdout,
        code,
        ..Default::default()
    })
}
