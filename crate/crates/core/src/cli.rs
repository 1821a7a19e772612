//! Command-line front end. Parsing lives in [`Cli`]; [`run`] turns a parsed
//! command into output text and an exit code so it can be tested in-process.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::constructions::{chen_lev_pair, dombi_partition, finite_tm_partition, lift_chen_lev};
use crate::error::{invalid, Error, Result};
use crate::exec::Exec;
use crate::repfn::{cross_rep_table_with, repfn_table_with};
use crate::sets::{evil_set, odious_set, IntSet, IntersectionKind, IntersectionSpec, PartitionPair};
use crate::verifier::{
    claim34_check, classify_theorem3_with, classify_theorem6_with, corollary1_sweep_with, eq4_campaign, eq5_campaign,
    forced_extension, lemma1_campaign, progression_search, Claim34Report, Corollary1Report, Eq4Report, Eq5Report,
    ForcingOutcome, Lemma1Report, ProgressionReport, Theorem3Report, Theorem6Report, DEFAULT_PROGRESSION_CAP,
    DEFAULT_SEED,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERTION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "samerep", version, about = "Partitions with equal representation functions")]
pub struct Cli {
    /// Run every loop on the calling thread.
    #[arg(long, global = true)]
    pub sequential: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a construction.
    Gen(GenArgs),
    /// Run a verification campaign; exit 1 if any assertion fails.
    Verify(VerifyArgs),
    /// Force a finite overlap or search a periodic one.
    Search(SearchArgs),
    /// Tabulate R_S(n), or the cross count with --with.
    Rep(RepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Evil,
    Odious,
    Dombi,
    TmPair,
    ChenLev,
    Lift,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    pub kind: GenKind,
    /// Level for evil, odious, tm-pair, chen-lev and lift.
    #[arg(long)]
    pub l: Option<u32>,
    /// Universe bound for dombi.
    #[arg(long)]
    pub n: Option<usize>,
    /// Block count for lift.
    #[arg(long)]
    pub blocks: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Thm3,
    Thm6,
    Cor1,
    Claims34,
    Eq4,
    Eq5,
    Lemma1,
}

impl Target {
    fn default_range(self) -> usize {
        match self {
            Target::Thm3 => 64,
            Target::Thm6 => 40,
            Target::Cor1 => 256,
            Target::Claims34 => 1 << 16,
            Target::Eq4 => 1000,
            Target::Eq5 | Target::Lemma1 => 3,
        }
    }

    fn default_cap(self) -> usize {
        match self {
            Target::Thm3 => 8192,
            Target::Thm6 => 512,
            Target::Cor1 => 1 << 16,
            Target::Claims34 => 1 << 24,
            Target::Eq4 => 100_000,
            Target::Eq5 | Target::Lemma1 => 6,
        }
    }

    fn range_name(self) -> &'static str {
        match self {
            Target::Thm3 | Target::Thm6 | Target::Cor1 => "m-max",
            Target::Claims34 => "M-max",
            Target::Eq4 => "count",
            Target::Eq5 | Target::Lemma1 => "l-max",
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub target: Target,
    /// Sweep range: m_max (thm3, thm6, cor1), M_max (claims34).
    #[arg(long)]
    pub m_max: Option<usize>,
    /// Largest level (eq5, lemma1).
    #[arg(long)]
    pub l_max: Option<u32>,
    /// Random sets to test (eq4).
    #[arg(long)]
    pub count: Option<usize>,
    /// Largest random set bound (eq4).
    #[arg(long, default_value_t = 256)]
    pub bound: usize,
    /// Single-point toggles (eq5).
    #[arg(long, default_value_t = 100)]
    pub perturbations: usize,
    /// Block count (lemma1).
    #[arg(long, default_value_t = 32)]
    pub blocks: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Force every r in thm6 instead of reflecting r <= m/2.
    #[arg(long)]
    pub no_symmetry: bool,
    /// Override the target's range cap.
    #[arg(long)]
    pub cap: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// `finite:r1,r2,...` or `periodic:r,p`.
    pub spec: IntersectionSpec,
    /// Horizon for finite specs, universe bound N for periodic ones.
    #[arg(long)]
    pub n: usize,
    /// Universe bound for finite specs.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_PROGRESSION_CAP)]
    pub cap: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct RepArgs {
    /// Canonical comma-separated set.
    pub set: IntSet,
    /// Second set for cross counts.
    #[arg(long = "with")]
    pub other: Option<IntSet>,
    /// Last n tabulated; defaults to the largest sum.
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::Verification { .. } => EXIT_ASSERTION,
        Error::InvalidArgument(_) | Error::Precondition { .. } | Error::Parse(_) => EXIT_USAGE,
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::default()
    };
    let result = match &cli.command {
        Command::Gen(args) => gen(args).map(Outcome::ok),
        Command::Verify(args) => verify(args, exec),
        Command::Search(args) => search(args).map(Outcome::ok),
        Command::Rep(args) => rep(args, exec).map(Outcome::ok),
    };
    result.unwrap_or_else(|err| Outcome {
        stdout: String::new(),
        stderr: format!("error: {err}\n"),
        code: exit_code(&err),
    })
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn need<T>(value: Option<T>, flag: &str) -> Result<T> {
    value.ok_or_else(|| invalid(format!("--{flag} is required here")))
}

fn gen(args: &GenArgs) -> Result<String> {
    if args.format == Format::Csv {
        return Err(invalid("gen prints text or json"));
    }
    let as_json = args.format == Format::Json;
    let show_set = |s: IntSet| if as_json { json(&s) } else { format!("{s}\n") };
    let show_pair = |p: PartitionPair| if as_json { json(&p) } else { format!("{p}\n") };
    Ok(match args.kind {
        GenKind::Evil => show_set(evil_set(need(args.l, "l")?)?),
        GenKind::Odious => show_set(odious_set(need(args.l, "l")?)?),
        GenKind::Dombi => show_pair(dombi_partition(need(args.n, "n")?)),
        GenKind::TmPair => show_pair(finite_tm_partition(need(args.l, "l")?)?),
        GenKind::ChenLev => show_pair(chen_lev_pair(need(args.l, "l")?)?),
        GenKind::Lift => show_pair(lift_chen_lev(need(args.l, "l")?, need(args.blocks, "blocks")?)?),
    })
}

/// Aligned columns, right-justified.
fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let line = |out: &mut String, cells: &mut dyn Iterator<Item = &str>| {
        let parts: Vec<String> = cells.zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(&mut out, &mut headers.iter().copied());
    for row in rows {
        line(&mut out, &mut row.iter().map(String::as_str));
    }
    out
}

fn csv(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = headers.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

/// Reports printable as JSON, CSV or an aligned table.
trait Report: Serialize {
    fn passed(&self) -> bool;
    fn title(&self) -> String;
    fn headers(&self) -> Vec<&'static str>;
    fn rows(&self) -> Vec<Vec<String>>;

    fn render(&self, format: Format) -> String {
        let (headers, rows) = (self.headers(), self.rows());
        match format {
            Format::Json => json(self),
            Format::Csv => csv(&headers, &rows),
            Format::Text => {
                let verdict = if self.passed() { "PASS" } else { "FAIL" };
                format!("{}\n{}{verdict}\n", self.title(), table(&headers, &rows))
            }
        }
    }
}

impl Report for Theorem3Report {
    fn passed(&self) -> bool {
        self.passed
    }
    fn title(&self) -> String {
        format!(
            "thm3 m_max={} horizon={} cells={} version={}",
            self.m_max, self.horizon, self.cells, self.version
        )
    }
    fn headers(&self) -> Vec<&'static str> {
        vec!["m", "l", "equals_tm", "size_c", "size_d"]
    }
    fn rows(&self) -> Vec<Vec<String>> {
        self.hits
            .iter()
            .map(|h| {
                vec![
                    h.m.to_string(),
                    opt(h.level),
                    h.equals_tm.to_string(),
                    h.c.len().to_string(),
                    h.d.len().to_string(),
                ]
            })
            .collect()
    }
}

impl Report for Theorem6Report {
    fn passed(&self) -> bool {
        self.passed
    }
    fn title(&self) -> String {
        format!(
            "thm6 m_max={} horizon={} symmetric={} cells={} reflection_failures={} version={}",
            self.m_max,
            self.horizon,
            self.symmetric,
            self.cells,
            self.reflection_failures.len(),
            self.version
        )
    }
    fn headers(&self) -> Vec<&'static str> {
        vec!["m", "r", "reflected", "matches_chen_lev", "size_c", "size_d"]
    }
    fn rows(&self) -> Vec<Vec<String>> {
        self.hits
            .iter()
            .map(|h| {
                vec![
                    h.m.to_string(),
                    h.r.to_string(),
                    h.reflected.to_string(),
                    h.matches_chen_lev.to_string(),
                    h.c.len().to_string(),
                    h.d.len().to_string(),
                ]
            })
            .collect()
    }
}

impl Report for Corollary1Report {
    fn passed(&self) -> bool {
        self.passed
    }
    fn title(&self) -> String {
        format!(
            "cor1 m_max={} failures={} version={}",
            self.m_max,
            self.failures.len(),
            self.version
        )
    }
    fn headers(&self) -> Vec<&'static str> {
        vec!["m", "witness"]
    }
    fn rows(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| vec![r.m.to_string(), opt(r.witness)])
            .collect()
    }
}

impl Report for Claim34Report {
    fn passed(&self) -> bool {
        self.passed
    }
    fn title(&self) -> String {
        format!(
            "claims34 M_max={} violations={} version={}",
            self.big_m_max,
            self.violations.len(),
            self.version
        )
    }
    fn headers(&self) -> Vec<&'static str> {
        vec!["M", "u", "side"]
    }
    fn rows(&self) -> Vec<Vec<String>> {
        self.hits
            .iter()
            .map(|h| vec![h.big_m.to_string(), h.u.to_string(), format!("{:?}", h.side)])
            .collect()
    }
}

impl Report for Eq4Report {
    fn passed(&self) -> bool {
        self.passed
    }
    fn title(&self) -> String {
        format!(
            "eq4 count={} max_bound={} seed={} failures={} version={}",
            self.count,
            self.max_bound,
            self.seed,
            self.failures.len(),
            self.version
        )
    }
    fn headers(&self) -> Vec<&'static str> {
        vec!["trial", "k", "size"]
    }
    fn rows(&self) -> Vec<Vec<String>> {
        self.failures
            .iter()
            .map(|f| vec![f.trial.to_string(), f.k.to_string(), f.set.len().to_string()])
            .collect()
    }
}

impl Report for Eq5Report {
    fn passed(&self) -> bool {
        self.passed
    }
    fn title(&self) -> String {
        let bases: Vec<String> = self
            .bases
            .iter()
            .map(|b| format!("l={} zero={} relations={}", b.l, b.residual_zero, b.relations_hold))
            .collect();
        format!(
            "eq5 l_max={} seed={} perturbations={} distinct_positions={} version={}\n{}",
            self.l_max,
            self.seed,
            self.perturbations.len(),
            self.distinct_positions,
            self.version,
            bases.join("\n")
        )
    }
    fn headers(&self) -> Vec<&'static str> {
        vec!["draw", "position", "residual_terms", "first_mismatch"]
    }
    fn rows(&self) -> Vec<Vec<String>> {
        self.perturbations
            .iter()
            .enumerate()
            .map(|(i, p)| {
                vec![
                    i.to_string(),
                    p.position.to_string(),
                    p.residual_terms.to_string(),
                    opt(p.first_mismatch),
                ]
            })
            .collect()
    }
}

impl Report for Lemma1Report {
    fn passed(&self) -> bool {
        self.passed
    }
    fn title(&self) -> String {
        format!(
            "lemma1 l_max={} blocks={} version={}",
            self.l_max, self.blocks, self.version
        )
    }
    fn headers(&self) -> Vec<&'static str> {
        vec![
            "l",
            "m",
            "r",
            "universe_max",
            "covers",
            "overlap_matches",
            "first_mismatch",
        ]
    }
    fn rows(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| {
                vec![
                    r.l.to_string(),
                    r.m.to_string(),
                    r.r.to_string(),
                    r.universe_max.to_string(),
                    r.covers.to_string(),
                    r.overlap_matches.to_string(),
                    opt(r.first_mismatch),
                ]
            })
            .collect()
    }
}

fn finish<R: Report>(report: R, format: Format) -> Outcome {
    let passed = report.passed();
    Outcome {
        stdout: report.render(format),
        stderr: if passed {
            String::new()
        } else {
            "assertion failed\n".into()
        },
        code: if passed { EXIT_OK } else { EXIT_ASSERTION },
    }
}

fn verify(args: &VerifyArgs, exec: Exec) -> Result<Outcome> {
    let t = args.target;
    let range = match t {
        Target::Eq5 | Target::Lemma1 => args.l_max.map(|l| l as usize),
        Target::Eq4 => args.count,
        _ => args.m_max,
    }
    .unwrap_or(t.default_range());
    let cap = args.cap.unwrap_or(t.default_cap());
    if range > cap {
        return Err(Error::CapExceeded {
            what: t.range_name(),
            requested: range,
            cap,
        });
    }
    let f = args.format;
    Ok(match t {
        Target::Thm3 => finish(classify_theorem3_with(range, exec)?, f),
        Target::Thm6 => finish(classify_theorem6_with(range, exec, !args.no_symmetry)?, f),
        Target::Cor1 => finish(corollary1_sweep_with(range, exec)?, f),
        Target::Claims34 => finish(claim34_check(range)?, f),
        Target::Eq4 => finish(eq4_campaign(range, args.bound, args.seed)?, f),
        Target::Eq5 => finish(eq5_campaign(range as u32, args.perturbations, args.seed)?, f),
        Target::Lemma1 => finish(lemma1_campaign(range as u32, args.blocks)?, f),
    })
}

fn search(args: &SearchArgs) -> Result<String> {
    match args.spec.kind() {
        IntersectionKind::Finite { .. } => {
            let m = need(args.m, "m")?;
            let outcome = forced_extension(m, &args.spec, args.n)?;
            Ok(match args.format {
                Format::Json => json(&outcome),
                Format::Csv => return Err(invalid("search prints text or json")),
                Format::Text => forcing_text(&outcome),
            })
        }
        IntersectionKind::Periodic { .. } => {
            if args.m.is_some() {
                return Err(invalid("--m applies to finite specs only"));
            }
            let report = progression_search(&args.spec, args.n, args.cap)?;
            Ok(match args.format {
                Format::Json => json(&report),
                Format::Csv => return Err(invalid("search prints text or json")),
                Format::Text => progression_text(&report),
            })
        }
    }
}

fn forcing_text(outcome: &ForcingOutcome) -> String {
    match outcome {
        ForcingOutcome::Unique { pair } => format!("unique {pair}\n"),
        ForcingOutcome::Contradiction { failure_index, reason } => {
            format!("contradiction at {failure_index}: {reason:?}\n")
        }
    }
}

fn progression_text(report: &ProgressionReport) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "spec={} N={} n*={} complete={} nodes={} pruned={} cap={} version={}",
        report.spec, report.n, report.n_star, report.complete, report.nodes, report.pruned, report.cap, report.version
    )
    .unwrap();
    writeln!(out, "witness {}", report.witness).unwrap();
    out
}

fn rep(args: &RepArgs, exec: Exec) -> Result<String> {
    let top = args.set.max().unwrap_or(0)
        + args
            .other
            .as_ref()
            .map_or(args.set.max().unwrap_or(0), |o| o.max().unwrap_or(0));
    let n_max = args.n_max.unwrap_or(top);
    let counts = match &args.other {
        Some(other) => cross_rep_table_with(&args.set, other, n_max, exec),
        None => repfn_table_with(&args.set, n_max, exec),
    };
    Ok(match args.format {
        Format::Csv => counts.to_csv(),
        Format::Json => json(&counts),
        Format::Text => {
            let rows: Vec<Vec<String>> = counts
                .values()
                .iter()
                .enumerate()
                .map(|(n, v)| vec![n.to_string(), v.to_string()])
                .collect();
            table(&["n", "count"], &rows)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> Outcome {
        let cli = Cli::try_parse_from(std::iter::once("samerep").chain(args.iter().copied())).unwrap();
        run(&cli)
    }

    #[test]
    fn gen_examples() {
        assert_eq!(
            call(&["gen", "chen-lev", "--l", "1"]).stdout,
            "C=0,3,4,5 D=1,2,3,6 r=3 m=6\n"
        );
        assert_eq!(call(&["gen", "evil", "--l", "3"]).stdout, "0,3,5,6\n");
        let lift = call(&["gen", "lift", "--l", "1", "--blocks", "4"]);
        assert!(lift.stdout.contains(" r=3,10,17,24 m=27"), "{}", lift.stdout);
        assert_eq!(call(&["gen", "evil"]).code, EXIT_USAGE);
        assert_eq!(call(&["gen", "evil", "--l", "40"]).code, EXIT_USAGE);
    }

    #[test]
    fn verify_exit_codes() {
        let out = call(&["verify", "thm6", "--m-max", "40"]);
        assert_eq!(out.code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        let hits: Vec<(u64, u64)> = v["hits"]
            .as_array()
            .unwrap()
            .iter()
            .map(|h| (h["m"].as_u64().unwrap(), h["r"].as_u64().unwrap()))
            .collect();
        assert_eq!(hits, [(6, 3), (30, 15)]);
        assert_eq!(call(&["verify", "thm6", "--m-max", "600"]).code, EXIT_CAP);
        assert_eq!(call(&["verify", "thm3", "--m-max", "20", "--cap", "10"]).code, EXIT_CAP);
    }

    #[test]
    fn verify_formats_are_deterministic() {
        for format in ["json", "csv", "text"] {
            let a = call(&["verify", "cor1", "--m-max", "64", "--format", format]);
            let b = call(&["--sequential", "verify", "cor1", "--m-max", "64", "--format", format]);
            assert_eq!(a, b);
        }
        let csv = call(&["verify", "thm3", "--m-max", "16", "--format", "csv"]).stdout;
        assert_eq!(
            csv,
            "m,l,equals_tm,size_c,size_d\n1,1,true,1,1\n3,2,true,2,2\n7,3,true,4,4\n15,4,true,8,8\n"
        );
    }

    #[test]
    fn search_examples() {
        assert!(call(&["search", "periodic:3,7", "--n", "27"])
            .stdout
            .contains("n*=27 complete=true"));
        let out = call(&["search", "periodic:0,4", "--n", "24", "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["n_star"], 0);
        assert_eq!(
            call(&["search", "finite:3", "--n", "12", "--m", "6"]).stdout,
            "unique C=0,3,4,5 D=1,2,3,6 r=3 m=6\n"
        );
        assert_eq!(call(&["search", "finite:3", "--n", "12"]).code, EXIT_USAGE);
        assert!(Cli::try_parse_from(["samerep", "search", "cyclic:1", "--n", "3"]).is_err());
    }

    #[test]
    fn rep_tables() {
        assert_eq!(call(&["rep", "0,1,2"]).stdout, "n,count\n0,0\n1,1\n2,1\n3,1\n4,0\n");
        assert_eq!(
            call(&["rep", "0,1", "--with", "0,2"]).stdout,
            "n,count\n0,1\n1,1\n2,1\n3,1\n"
        );
    }
}
