//! `gassner`: command-line front end for the Gassner-representation toolkit.
//!
//! Exit codes: 0 on success, 1 when a verification reports a mismatch (or a
//! computation hits a domain error), 2 on usage and syntax errors.

use std::process::ExitCode;

use clap::builder::TypedValueParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use gassner::braid::{self, MAX_STRANDS};
use gassner::graded::{self, KernelReport};
use gassner::hall::{self, MAX_WEIGHT};
use gassner::search::{self, SearchConfig};
use gassner::{Error, LaurentMatrix, LaurentPoly, SeriesMatrix};
use num_bigint::{BigInt, Sign};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "gassner", version, about = "Exact computations with the Gassner representation of pure braids")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Worker threads for graded and search workloads (output order does
    /// not depend on it).
    #[arg(long, global = true, env = "GASSNER_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Print the matrix of a generator A(r,s) (or of its inverse).
    Gen {
        #[arg(long, value_parser = strands())]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        inverse: bool,
    },
    /// Evaluate a word such as "x1 x2^-1 [x2,x1]" or "A(1,4)^2".
    Eval {
        #[arg(long, value_parser = strands())]
        n: usize,
        /// Work modulo J^(D+1), J the augmentation ideal; entries are shown
        /// expanded in the t variables.
        #[arg(long, value_name = "D")]
        truncate: Option<u32>,
        /// Specialize every t_i to 1 before printing.
        #[arg(long)]
        at_one: bool,
        word: String,
    },
    /// Rank of the graded map on the basic commutators of one weight.
    Rank(GradedArgs),
    /// Integer kernel basis of the graded map on one weight.
    Kernel(GradedArgs),
    /// Run a verification suite; exits 1 on any mismatch.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 4, value_parser = strands())]
        n: usize,
        /// Weight used by the s-fold suite.
        #[arg(long, default_value_t = 5, value_parser = weights())]
        weight: usize,
    },
    /// Bounded search for identities among kernel combinations; one JSON
    /// object per line in json format.
    Search {
        #[arg(long, default_value_t = 4, value_parser = strands())]
        n: usize,
        #[arg(long, default_value_t = 5, value_parser = weights())]
        weight: usize,
        #[arg(long, default_value_t = 1)]
        coeff_bound: u32,
        #[arg(long, default_value_t = 2)]
        support: usize,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
        #[arg(long, default_value_t = 8)]
        degree_probe: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct GradedArgs {
    #[arg(long, value_parser = strands())]
    n: usize,
    #[arg(long, value_parser = weights())]
    weight: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Tables,
    Sfold,
    /// The four-strand weight-5 pair with equal graded classes.
    #[value(name = "section4")]
    Pair,
    All,
}

fn strands() -> impl TypedValueParser<Value = usize> {
    clap::value_parser!(u64).range(2..=MAX_STRANDS as u64).map(|v| v as usize)
}

fn weights() -> impl TypedValueParser<Value = usize> {
    clap::value_parser!(u64).range(1..=MAX_WEIGHT as u64).map(|v| v as usize)
}

/// What a subcommand produced: the rendered text and whether it passed.
struct Outcome {
    text: String,
    passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, passed: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: cannot start {jobs} worker threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Usage(_) | Error::Syntax { .. } => ExitCode::from(2),
                Error::Domain(_) => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: &Cli) -> gassner::Result<Outcome> {
    let f = cli.format;
    match &cli.command {
        Command::Gen { n, r, s, inverse } => cmd_gen(f, *n, *r, *s, *inverse),
        Command::Eval { n, truncate, at_one, word } => cmd_eval(f, *n, *truncate, *at_one, word),
        Command::Rank(a) => cmd_graded(f, a, false),
        Command::Kernel(a) => cmd_graded(f, a, true),
        Command::Verify { suite, n, weight } => cmd_verify(f, *suite, *n, *weight),
        Command::Search { n, weight, coeff_bound, support, budget, degree_probe, seed } => {
            let cfg = SearchConfig {
                n: *n,
                weight: *weight,
                coeff_bound: *coeff_bound,
                support_bound: *support,
                degree_probe: *degree_probe,
                budget: *budget,
                seed: *seed,
            };
            cmd_search(f, &cfg)
        }
    }
}

/// Renders `sum c_i * label_i` as `c1*l1 - c2*l2 + ...`.
fn signed_sum<'a, L: std::fmt::Display + 'a>(terms: impl Iterator<Item = (&'a L, &'a BigInt)>) -> String {
    let mut out = String::new();
    for (label, c) in terms {
        let text = format!("{}*{label}", c.magnitude());
        match (out.is_empty(), c.sign() == Sign::Minus) {
            (true, false) => out += &text,
            (true, true) => out += &format!("-{text}"),
            (false, false) => out += &format!(" + {text}"),
            (false, true) => out += &format!(" - {text}"),
        }
    }
    out
}

fn json_text(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("serializable"))
}

fn cmd_gen(f: Format, n: usize, r: usize, s: usize, inverse: bool) -> gassner::Result<Outcome> {
    if !(1 <= r && r < s && s <= n) {
        return Err(Error::Usage(format!("need 1 <= r < s <= n, got r = {r}, s = {s}, n = {n}")));
    }
    let m = if inverse { braid::gassner_generator_inverse(n, r, s)? } else { braid::gassner_generator(n, r, s)? };
    Ok(Outcome::ok(match f {
        Format::Json => json_text(&json!({ "n": n, "r": r, "s": s, "inverse": inverse, "matrix": m })),
        Format::Pretty => m.to_string(),
    }))
}

fn cmd_eval(f: Format, n: usize, truncate: Option<u32>, at_one: bool, text: &str) -> gassner::Result<Outcome> {
    let word = braid::parse_word(text, n)?;
    let (matrix, series): (LaurentMatrix, Option<SeriesMatrix>) = match truncate {
        Some(d) => {
            let m = braid::evaluate_truncated(&word, d);
            (m.map(|e| e.to_t_polynomial()), Some(m))
        }
        None => (braid::evaluate_exact(&word), None),
    };
    let matrix = if at_one { matrix.map(|p| LaurentPoly::constant(n, p.augmentation())) } else { matrix };
    let is_identity = matrix.is_identity();
    Ok(Outcome::ok(match f {
        Format::Json => {
            let mut v = json!({ "n": n, "word": word.to_string(), "truncate": truncate, "at_one": at_one,
                "is_identity": is_identity });
            match (&series, at_one) {
                (Some(s), false) => v["matrix"] = json!(s),
                _ => v["matrix"] = json!(&matrix),
            }
            json_text(&v)
        }
        Format::Pretty => {
            let mut out = String::new();
            if let Some(d) = truncate {
                out += &format!("# modulo J^{}\n", d + 1);
            }
            out += &matrix.to_string();
            out
        }
    }))
}

/// Explains the indexing gap between weight 5 and weight 6 ranks of the free
/// Lie algebra on three generators.
fn witt_notice(n: usize, weight: usize) -> Option<String> {
    (n == 4 && (weight == 5 || weight == 6)).then(|| {
        format!(
            "the free Lie algebra on 3 generators has rank {} in weight 5 and {} in weight 6; a rank of 116 belongs to weight 6, not weight 5",
            hall::witt_rank(3, 5),
            hall::witt_rank(3, 6)
        )
    })
}

fn cmd_graded(f: Format, a: &GradedArgs, with_kernel: bool) -> gassner::Result<Outcome> {
    if a.n < 3 {
        return Err(Error::Usage("graded maps need n >= 3".into()));
    }
    let report: KernelReport = graded::kernel_report(a.n, a.weight)?;
    let notice = witt_notice(a.n, a.weight);
    Ok(Outcome::ok(match f {
        Format::Json => {
            let mut v = json!(&report);
            if !with_kernel {
                v.as_object_mut().expect("object").remove("kernel");
            }
            if let Some(msg) = &notice {
                v["notice"] = msg.clone().into();
            }
            json_text(&v)
        }
        Format::Pretty => {
            let mut out = format!(
                "n = {}, weight = {}: {} basic commutators, rank {}, expected {}, {}\n",
                report.n,
                report.weight,
                report.rows.len(),
                report.rank,
                report.expected,
                if report.injective() { "injective" } else { "not injective" }
            );
            if with_kernel {
                if report.kernel.is_empty() {
                    out += "kernel: empty\n";
                }
                for (i, k) in report.kernel.iter().enumerate() {
                    out += &format!("kernel[{i}] = {}\n", signed_sum(k.labeled(&report.rows)));
                }
            }
            if let Some(msg) = notice {
                out += &format!("note: {msg}\n");
            }
            out
        }
    }))
}

fn cmd_verify(f: Format, suite: Suite, n: usize, weight: usize) -> gassner::Result<Outcome> {
    let mut sections: Vec<(&str, bool, Value, String)> = Vec::new();
    if matches!(suite, Suite::Tables | Suite::All) {
        let r = graded::verify_tables(n)?;
        let mut text = String::new();
        for s in &r.shapes {
            text += &format!(
                "  weight {} {}: {} commutators, {}/{} cells mismatched ({} commutators), {} table classes with nonzero column sums\n",
                s.weight,
                s.shape,
                s.commutators,
                s.mismatched_cells,
                s.cells,
                s.mismatched_commutators,
                s.table_column_sum_violations
            );
        }
        text += &format!("  duplicated term reading: {:?}\n", r.duplicate_reading);
        for c in r.cells.iter().filter(|c| !c.matches) {
            text += &format!(
                "  mismatch {} at factor {:?}:e({},{}): table {}, computed {}\n",
                c.commutator, c.mono, c.row, c.col, c.expected, c.computed
            );
        }
        sections.push(("tables", r.passed(), json!(&r), text));
    }
    if matches!(suite, Suite::Sfold | Suite::All) {
        let r = graded::sfold_property_check(n, weight)?;
        let text = format!(
            "  {} left-normed, {} other, left-normed rank {}, {} top-factor failures, {} t_n-free failures\n",
            r.left_normed,
            r.other,
            r.left_normed_rank,
            r.top_factor_failures.len(),
            r.tn_free_failures.len()
        );
        sections.push(("sfold", r.passed(), json!(&r), text));
    }
    if matches!(suite, Suite::Pair | Suite::All) {
        let (passed, value, text) = match search::weight_five_pair_regression() {
            Ok(r) => {
                let text = format!(
                    "  truncations equal mod J^6: {}, exact matrices equal: {}, classes equal: {}, first differing degree: {:?}\n",
                    r.truncations_equal_at_5, r.exact_equal, r.classes_equal, r.first_differing_degree
                );
                (true, json!(&r), text)
            }
            Err(Error::Domain(msg)) => (false, json!({ "error": msg }), format!("  {msg}\n")),
            Err(e) => return Err(e),
        };
        sections.push(("section4", passed, value, text));
    }
    let passed = sections.iter().all(|s| s.1);
    let text = match f {
        Format::Json => {
            let suites: serde_json::Map<String, Value> = sections
                .iter()
                .map(|(name, ok, report, _)| (name.to_string(), json!({ "passed": ok, "report": report })))
                .collect();
            json_text(&json!({ "passed": passed, "suites": suites }))
        }
        Format::Pretty => sections
            .iter()
            .map(|(name, ok, _, text)| format!("{name}: {}\n{text}", if *ok { "PASS" } else { "FAIL" }))
            .collect(),
    };
    Ok(Outcome { text, passed })
}

fn cmd_search(f: Format, cfg: &SearchConfig) -> gassner::Result<Outcome> {
    let report = search::run_search(cfg)?;
    Ok(Outcome::ok(match f {
        Format::Json => report.to_json_lines(),
        Format::Pretty => {
            let mut out = String::new();
            for c in &report.candidates {
                out += &format!(
                    "#{:<5} {:<40} length {:>5}  {}  first degree {}\n",
                    c.index,
                    signed_sum(c.coefficients.iter().map(|(l, k)| (l, k))),
                    c.word_length,
                    if c.is_identity { "IDENTITY" } else { "non-identity" },
                    c.first_nonvanishing_degree.map_or("-".into(), |d| d.to_string())
                );
            }
            let s = &report.summary;
            out += &format!(
                "kernel dimension {}, tested {}, identities {} (certified: {} modular, {} exact)\n",
                s.kernel_dimension, s.tested, s.identities, s.certified_modular, s.certified_exact
            );
            if let Some(n) = &s.notice {
                out += &format!("note: {n}\n");
            }
            out
        }
    }))
}
