use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use sylreg::ctable::{direct_product, CharacterTable};
use sylreg::hookfam::{verify_family, GammaVariant};
use sylreg::psl2gen::{psl2, sl2};
use sylreg::search::{enumerate, Mode, SearchQuery, SearchReport};
use sylreg::sylow::{
    audit_inequality, mu_degrees, sylow_order, sylow_order_shortcut, AuditGrid, AuditId, AuditReport, Family,
    GroupFamilySpec,
};
use sylreg::symmchar::{an_table, sn_table};
use sylreg::weil::{verify as verify_weil, WeilKind, WeilReport, WeilSpec};
use sylreg::Error;

#[derive(Parser)]
#[command(name = "sylreg", version, about = "Character tables and searches for Sylow-regular characters")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Human-readable output instead of compact JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Sn,
    An,
    Psl2,
    Sl2,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a character table.
    Gen {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate characters vanishing on p-elements or p-singular classes.
    Search {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        p: u64,
        /// steinberg, sylreg, pvanish or sylvanish.
        #[arg(long)]
        mode: Mode,
        #[arg(long, default_value_t = 1)]
        level: u64,
        #[arg(long)]
        max_solutions: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a hook-character family on S_n or A_n.
    VerifyGamma {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        variant: GammaVariant,
    },
    /// Order of a Sylow p-subgroup, by two independent routes.
    Sylow {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        p: u64,
    },
    /// The three smallest nontrivial irreducible degrees.
    Mu {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: Option<u64>,
    },
    /// Check a degree/Sylow inequality over a parameter grid.
    Audit {
        #[arg(long)]
        lemma: AuditId,
        #[arg(long, default_value_t = 13)]
        pmax: u64,
        #[arg(long, default_value_t = 16)]
        qmax: u64,
        #[arg(long, default_value_t = 12)]
        nmax: u32,
    },
    /// Weil-module eigenvalue multiplicities and traces of h.
    Weil {
        #[arg(long)]
        kind: WeilKind,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
    },
    /// Validate a table file.
    Check {
        #[arg(long)]
        table: PathBuf,
    },
    /// Direct product of two tables.
    Product {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Usage and I/O problems, as opposed to failed assertions.
struct Failure {
    kind: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let kind = match e {
            Error::Io(_) => "io",
            Error::Json(_) | Error::Malformed(_) => "malformed",
            Error::Invalid(_) => "invalid",
            Error::Identity(_) => "identity",
            _ => "parameter",
        };
        Failure { kind, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { kind: "usage", message: message.into() }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("invalid arguments").trim_start_matches("error: ");
            return report_failure(&usage(first));
        }
    };
    if let Some(n) = cli.threads {
        if n == 0 {
            return report_failure(&usage("--threads must be positive"));
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            return report_failure(&usage(e.to_string()));
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(f) => report_failure(&f),
    }
}

fn report_failure(f: &Failure) -> ExitCode {
    eprintln!("{}", json!({ "error": f.kind, "message": f.message }));
    ExitCode::from(1)
}

fn run(cli: &Cli) -> Outcome {
    let pretty = cli.pretty;
    match &cli.command {
        Command::Gen { kind, n, q, out } => {
            let table = match kind {
                TableKind::Sn => sn_table(need(*n, "--n")?)?,
                TableKind::An => an_table(need(*n, "--n")?)?,
                TableKind::Psl2 => psl2(need(*q, "--q")?)?,
                TableKind::Sl2 => sl2(need(*q, "--q")?)?,
            };
            emit_table(&table, out.as_deref(), pretty)?;
            Ok(true)
        }
        Command::Search { table, p, mode, level, max_solutions, out } => {
            let t = load(table)?.validated()?;
            let mut q = SearchQuery::new(*p, *mode, *level);
            if let Some(cap) = max_solutions {
                q = q.with_max_solutions(*cap);
            }
            let report = enumerate(&t, &q)?;
            let text = if pretty { search_text(&report) } else { report.to_json() + "\n" };
            write_out(out.as_deref(), &text)?;
            Ok(true)
        }
        Command::VerifyGamma { n, variant } => {
            let r = verify_family(*n, *variant)?;
            print_doc(&r, pretty)?;
            Ok(r.ok)
        }
        Command::Sylow { family, n, q, p } => {
            let g = GroupFamilySpec::new(*family, *n, *q)?;
            let exact = sylow_order(&g, *p)?;
            let shortcut = sylow_order_shortcut(&g, *p)?;
            let agree = exact == shortcut;
            let doc = json!({
                "group": g.to_string(),
                "p": p,
                "sylow_order": exact.to_string(),
                "shortcut": shortcut.to_string(),
                "agree": agree,
            });
            print_doc(&doc, pretty)?;
            Ok(agree)
        }
        Command::Mu { family, n, q } => {
            let g = GroupFamilySpec::new(*family, *n, *q)?;
            let doc = json!({ "group": g.to_string(), "mu": mu_degrees(&g) });
            print_doc(&doc, pretty)?;
            Ok(true)
        }
        Command::Audit { lemma, pmax, qmax, nmax } => {
            let r = audit_inequality(*lemma, AuditGrid { pmax: *pmax, qmax: *qmax, nmax: *nmax });
            let text = if pretty { audit_text(&r) } else { r.to_json_lines() };
            write_out(None, &text)?;
            Ok(r.ok)
        }
        Command::Weil { kind, p, q } => {
            let r = verify_weil(&WeilSpec::new(*kind, *p, *q)?)?;
            let text = if pretty { weil_text(&r) } else { r.to_json_lines() };
            write_out(None, &text)?;
            Ok(r.summary.ok)
        }
        Command::Check { table } => {
            let report = load(table)?.validate();
            print_doc(&report, pretty)?;
            Ok(report.ok)
        }
        Command::Product { a, b, out } => {
            let t = direct_product(&load(a)?, &load(b)?);
            emit_table(&t, out.as_deref(), pretty)?;
            Ok(true)
        }
    }
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, Failure> {
    v.ok_or_else(|| usage(format!("{flag} is required for this table kind")))
}

fn load(path: &Path) -> Result<CharacterTable, Failure> {
    CharacterTable::ingest_path(path).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

fn emit_table(t: &CharacterTable, out: Option<&Path>, pretty: bool) -> Result<(), Failure> {
    let text = if pretty { t.to_json_pretty() } else { t.to_json() };
    write_out(out, &(text + "\n"))
}

fn print_doc<T: Serialize>(v: &T, pretty: bool) -> Result<(), Failure> {
    let text = if pretty { serde_json::to_string_pretty(v) } else { serde_json::to_string(v) };
    write_out(None, &(text.map_err(Error::from)? + "\n"))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    let res = match path {
        Some(p) => fs::write(p, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    };
    res.map_err(|e| Failure { kind: "io", message: e.to_string() })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "-"
    }
}

fn search_text(r: &SearchReport) -> String {
    let q = &r.query;
    let mut s = format!(
        "{}  |G| = {}  p = {}  |S| = {}  mode = {}  level = {}\n",
        q.table, q.order, q.query.p, q.sylow_order, q.query.mode, q.query.level
    );
    s += &format!("{} solution(s){}\n", r.solutions.len(), if r.exhaustive { "" } else { " (truncated)" });
    s += &format!("{:>12} {:>6} {:>6} {:>10}  constituents\n", "degree", "level", "syl", "steinberg");
    for sol in &r.solutions {
        let level = sol.flags.level.as_ref().map_or("-".to_string(), |l| l.to_string());
        s += &format!(
            "{:>12} {:>6} {:>6} {:>10}  {}\n",
            sol.flags.degree,
            level,
            yes(sol.flags.is_syl_regular),
            yes(sol.flags.is_steinberg_like),
            sol.constituents.join(" + ")
        );
    }
    s
}

fn audit_text(r: &AuditReport) -> String {
    let mut s = format!("{}: {}\n", r.audit, r.claim);
    for rec in r.records.iter().filter(|x| x.holds == Some(false)) {
        let params: Vec<String> = rec.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        s += &format!(
            "  fails {} ({} vs {}){}\n",
            params.join(" "),
            rec.lhs.as_deref().unwrap_or("?"),
            rec.rhs.as_deref().unwrap_or("?"),
            if rec.exception_expected { " [listed exception]" } else { "" }
        );
    }
    s += &format!(
        "checked {}  skipped {}  exceptions {}  failures {}  {}\n",
        r.checked,
        r.skipped,
        r.exceptions,
        r.failures,
        if r.ok { "OK" } else { "FAILED" }
    );
    s
}

fn weil_text(r: &WeilReport) -> String {
    let m = &r.summary;
    let mut s = format!("{} p = {} q = {}  |X| = {}  dim = {}\n", m.kind, m.p, m.q, m.x_order, m.dimension);
    s += &format!("{:>5} {:>5} {:>6} {:>9}  multiplicities of ν^1..ν^p\n", "ζ", "Z_p=1", "ρ(h)", "expected");
    for rec in &r.records {
        s += &format!(
            "{:>5} {:>5} {:>6} {:>9}  {}{}\n",
            rec.zeta,
            yes(rec.trivial_on_zp),
            rec.rho,
            rec.expected_rho,
            rec.multiplicities.join(" "),
            if rec.holds { "" } else { "  FAIL" }
        );
    }
    s += &format!("total {}  failures {}  {}\n", m.multiplicity_total, m.failures, if m.ok { "OK" } else { "FAILED" });
    s
}
