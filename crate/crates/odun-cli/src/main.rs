//! `odun` — exact calculator for symmetric functions and partial
//! transformation semigroups.
//!
//! Subcommands cover Schur arithmetic (`mult`, `expand-skew`, `plethysm`),
//! forest characters and dimensions (`forest-char`, `dim`, `sign-census`),
//! semigroup structure (`idem-std`, `oracle`), the plethysm coefficient
//! comparison (`foulkes`), and the built-in verification suite (`verify`).
//!
//! Machine output goes to stdout and is byte-identical across reruns; timing
//! goes to stderr. Exit codes: 0 success, 1 failed verification, 2 usage.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use odun_core::characters::{
    dim_loop, dim_odun, frobenius_forest, frobenius_loop, sign_census, Mode,
};
use odun_core::forest::{LoopAugmentedForest, RootedForest};
use odun_core::foulkes::{degree_cap, foulkes_compare};
use odun_core::oracle::{orbit, orbit_character, stabilizer_bruteforce};
use odun_core::partition::Partition;
use odun_core::schur::{dim_rep, int_json, multiply, skew_expand, SchurPolynomial};
use odun_core::transform::{
    cycle_string, stabilizer_of_idempotent, standardize_idempotent, PartialTransformation,
};
use odun_core::verify;

mod expr;

#[derive(Parser)]
#[command(
    name = "odun",
    version,
    about = "Exact symmetric-function and transformation-semigroup calculator",
    long_about = "Exact-arithmetic calculator for symmetric functions (Schur basis, plethysm) \
                  and partial transformation semigroups (forest characters, idempotent \
                  standardization, brute-force oracles), with a built-in verification suite."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Output format for machine-readable results.
#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

/// Character evaluation mode for loop-augmented forests.
#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Closed product formula: the cycle part contributes the Schur function
    /// of its type.
    Paper,
    /// Conjugation-orbit character: the cycle part contributes the centralizer
    /// cycle index.
    Exact,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Paper => Mode::Paper,
            ModeArg::Exact => Mode::Exact,
        }
    }
}

/// What the brute-force oracle should report.
#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    /// All maps in the conjugation orbit.
    Orbit,
    /// The orbit permutation character in the Schur basis.
    Char,
    /// All permutations fixing the map under conjugation.
    Stab,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two symmetric-function expressions; result in the Schur basis
    Mult {
        /// Left factor, e.g. "s[2,2]" or "h[2]*e[3]+p[2]"
        #[arg(long)]
        lhs: String,
        /// Right factor
        #[arg(long)]
        rhs: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Expand a skew Schur function s_{outer/inner} in the Schur basis
    ExpandSkew {
        /// Outer partition, e.g. "4,3,2,2"
        #[arg(long)]
        outer: String,
        /// Inner partition, contained in the outer one, e.g. "2,2,1"
        #[arg(long)]
        inner: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Plethysm outer[inner] of two symmetric-function expressions
    Plethysm {
        /// Outer expression, e.g. "h[2]"
        #[arg(long)]
        outer: String,
        /// Inner expression, e.g. "h[1]*h[2]"; must be nonzero
        #[arg(long)]
        inner: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Frobenius character of a forest, optionally loop-augmented
    ForestChar {
        /// Forest in nested-parenthesis encoding, e.g. "(())()"
        #[arg(long)]
        forest: String,
        /// Number of loops to attach (omit for the plain forest character)
        #[arg(long)]
        loops: Option<u32>,
        /// Evaluation mode; only meaningful together with --loops
        #[arg(long, value_enum, default_value = "paper")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Dimension of the representation attached to a forest
    Dim {
        /// Forest in nested-parenthesis encoding
        #[arg(long)]
        forest: String,
        /// Number of loops to attach (omit for the plain forest)
        #[arg(long)]
        loops: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Census of sign-representation multiplicities at total size n
    SignCensus {
        /// Total size (loops + forest vertices), at least 2
        #[arg(long)]
        n: u32,
        /// paper: closed-form counts; exact: per-item multiplicities (n <= 8)
        #[arg(long, value_enum, default_value = "paper")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Standardize an idempotent partial map by conjugation
    IdemStd {
        /// Image list with 0 for undefined, e.g. "3,0,3"
        #[arg(long)]
        map: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Brute-force conjugation oracle for a partial map (n <= 8)
    Oracle {
        /// Image list with 0 for undefined, e.g. "1,1,0"
        #[arg(long)]
        map: String,
        /// What to compute: the orbit, its character, or the stabilizer
        #[arg(long, value_enum)]
        what: What,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compare the plethysm coefficients of h_n[h_1*h_{m-1}] and h_m[h_1*h_{n-1}]
    Foulkes {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the full verification suite; exits 1 if any check fails
    Verify {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}

fn run(command: Command) -> Result<i32, String> {
    match command {
        Command::Mult { lhs, rhs, format } => cmd_mult(&lhs, &rhs, format),
        Command::ExpandSkew {
            outer,
            inner,
            format,
        } => cmd_expand_skew(&outer, &inner, format),
        Command::Plethysm {
            outer,
            inner,
            format,
        } => cmd_plethysm(&outer, &inner, format),
        Command::ForestChar {
            forest,
            loops,
            mode,
            format,
        } => cmd_forest_char(&forest, loops, mode, format),
        Command::Dim {
            forest,
            loops,
            format,
        } => cmd_dim(&forest, loops, format),
        Command::SignCensus { n, mode, format } => cmd_sign_census(n, mode, format),
        Command::IdemStd { map, format } => cmd_idem_std(&map, format),
        Command::Oracle { map, what, format } => cmd_oracle(&map, what, format),
        Command::Foulkes { m, n, format } => cmd_foulkes(m, n, format),
        Command::Verify { format } => cmd_verify(format),
    }
}

// ---------------------------------------------------------------------------
// output helpers

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

/// Quote a CSV field, doubling embedded quotes.
fn csv_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

fn poly_csv(f: &SchurPolynomial) -> String {
    let mut out = String::from("partition,coeff\n");
    for (lam, c) in f.terms() {
        out.push_str(&format!("{},{}\n", csv_quote(&lam.to_string()), c));
    }
    out
}

fn emit_poly(f: &SchurPolynomial, format: Format) {
    match format {
        Format::Text => println!("{f}"),
        Format::Json => print_json(&f.to_json()),
        Format::Csv => print!("{}", poly_csv(f)),
    }
}

fn json_object(fields: Vec<(&str, Value)>) -> Value {
    let mut map = serde_json::Map::new();
    for (k, v) in fields {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}

// ---------------------------------------------------------------------------
// input helpers

fn parse_partition(flag: &str, s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| format!("{flag}: {e}"))
}

fn parse_forest(s: &str) -> Result<RootedForest, String> {
    s.parse::<RootedForest>()
        .map_err(|e| format!("--forest: {e}"))
}

fn parse_map(s: &str) -> Result<PartialTransformation, String> {
    s.parse::<PartialTransformation>()
        .map_err(|e| format!("--map: {e}"))
}

/// Largest term weight, i.e. the degree of the highest homogeneous component.
fn max_weight(f: &SchurPolynomial) -> u64 {
    f.terms().map(|(lam, _)| lam.weight()).max().unwrap_or(0)
}

// ---------------------------------------------------------------------------
// subcommands

fn cmd_mult(lhs: &str, rhs: &str, format: Format) -> Result<i32, String> {
    let f = expr::eval(lhs).map_err(|e| format!("--lhs: {e}"))?;
    let g = expr::eval(rhs).map_err(|e| format!("--rhs: {e}"))?;
    emit_poly(&multiply(&f, &g), format);
    Ok(0)
}

fn cmd_expand_skew(outer: &str, inner: &str, format: Format) -> Result<i32, String> {
    let lam = parse_partition("--outer", outer)?;
    let mu = parse_partition("--inner", inner)?;
    if !lam.contains(&mu) {
        return Err(format!(
            "inner shape ({mu}) is not contained in outer shape ({lam})"
        ));
    }
    emit_poly(&skew_expand(&lam, &mu), format);
    Ok(0)
}

fn cmd_plethysm(outer: &str, inner: &str, format: Format) -> Result<i32, String> {
    let f = expr::eval(outer).map_err(|e| format!("--outer: {e}"))?;
    let g = expr::eval(inner).map_err(|e| format!("--inner: {e}"))?;
    if g.is_zero() {
        return Err("--inner must be a nonzero symmetric function".into());
    }
    let degree = max_weight(&f) * max_weight(&g);
    let cap = degree_cap();
    if degree > cap {
        return Err(format!(
            "degree cap exceeded: result degree {degree} > {cap} (set ODUN_DEGREE_CAP to raise)"
        ));
    }
    let start = std::time::Instant::now();
    let result = odun_core::power::plethysm(&f, &g);
    eprintln!("# computed in {} ms", start.elapsed().as_millis());
    emit_poly(&result, format);
    Ok(0)
}

fn cmd_forest_char(
    forest: &str,
    loops: Option<u32>,
    mode: ModeArg,
    format: Format,
) -> Result<i32, String> {
    let tau = parse_forest(forest)?;
    let encoding = tau.encoding();
    match loops {
        None => {
            let chi = frobenius_forest(&tau);
            let n = tau.size() as u64;
            let dim = dim_rep(&chi, n);
            match format {
                Format::Text => {
                    println!("forest: {encoding}");
                    println!("n: {n}");
                    println!("dim: {dim}");
                    println!("character: {chi}");
                }
                Format::Json => print_json(&json_object(vec![
                    ("forest", encoding.into()),
                    ("n", n.into()),
                    ("dim", int_json(&dim)),
                    ("character", chi.to_json()),
                ])),
                Format::Csv => print!("{}", poly_csv(&chi)),
            }
        }
        Some(k) => {
            let laf = LoopAugmentedForest::new(k, tau);
            let n = laf.total_size();
            let oc = frobenius_loop(&laf, mode.into());
            let mode_name = oc.mode.to_string();
            match format {
                Format::Text => {
                    println!("forest: {encoding}");
                    println!("loops: {k}");
                    println!("mode: {mode_name}");
                    println!("n: {n}");
                    println!("dim: {}", oc.dim);
                    println!("character: {}", oc.character);
                }
                Format::Json => print_json(&json_object(vec![
                    ("forest", encoding.into()),
                    ("loops", k.into()),
                    ("mode", mode_name.into()),
                    ("n", n.into()),
                    ("dim", int_json(&oc.dim)),
                    ("character", oc.character.to_json()),
                ])),
                Format::Csv => print!("{}", poly_csv(&oc.character)),
            }
        }
    }
    Ok(0)
}

fn cmd_dim(forest: &str, loops: Option<u32>, format: Format) -> Result<i32, String> {
    let tau = parse_forest(forest)?;
    let encoding = tau.encoding();
    let (n, dim, loops_field) = match loops {
        None => (tau.size(), dim_odun(&tau), Value::Null),
        Some(k) => {
            let laf = LoopAugmentedForest::new(k, tau);
            (laf.total_size(), dim_loop(&laf), k.into())
        }
    };
    match format {
        Format::Text => println!("{dim}"),
        Format::Json => print_json(&json_object(vec![
            ("forest", encoding.into()),
            ("loops", loops_field),
            ("n", n.into()),
            ("dim", int_json(&dim)),
        ])),
        Format::Csv => print!("dim\n{dim}\n"),
    }
    Ok(0)
}

fn cmd_sign_census(n: u32, mode: ModeArg, format: Format) -> Result<i32, String> {
    if n < 2 {
        return Err(format!("--n must be at least 2 (got {n})"));
    }
    if mode == ModeArg::Exact && n > 8 {
        return Err(format!(
            "exact mode evaluates every character and is supported for n <= 8 (got {n})"
        ));
    }
    let census = sign_census(n, mode.into());
    match format {
        Format::Text => {
            println!("sign census: n = {}, mode = {}", census.n, census.mode);
            for e in &census.per_k {
                let note = if e.in_total {
                    ""
                } else {
                    " (excluded from total)"
                };
                println!("  k = {}: count {}{}", e.k, e.count, note);
            }
            println!("total: {}", census.total);
            if census.discrepancies.is_empty() {
                println!("discrepancies: none");
            } else {
                println!("discrepancies ({}):", census.discrepancies.len());
                for d in &census.discrepancies {
                    println!(
                        "  k = {}, forest \"{}\": paper {}, exact {}",
                        d.k, d.forest, d.paper, d.exact
                    );
                }
            }
        }
        Format::Json => print_json(&census.to_json()),
        Format::Csv => {
            print!("k,count,in_total\n");
            for e in &census.per_k {
                print!("{},{},{}\n", e.k, e.count, e.in_total);
            }
        }
    }
    Ok(0)
}

fn cmd_idem_std(map: &str, format: Format) -> Result<i32, String> {
    let e = parse_map(map)?;
    if !e.is_idempotent() {
        return Err(format!(
            "--map: {e} is not idempotent (its square differs); idem-std requires e*e = e"
        ));
    }
    let st = standardize_idempotent(&e);
    let stab_order = stabilizer_of_idempotent(&e).order();
    match format {
        Format::Text => {
            println!("map: {e}");
            println!("descriptor: {}", st.descriptor);
            println!("standard: {}", st.standard);
            println!("witness: {}", st.witness_factors);
            println!("stabilizer order: {stab_order}");
        }
        Format::Json => print_json(&json_object(vec![
            ("map", e.to_string().into()),
            ("descriptor", st.descriptor.clone().into()),
            ("standard", st.standard.to_string().into()),
            ("witness", st.witness_factors.clone().into()),
            (
                "witness_images",
                Value::Array(st.witness.iter().map(|&v| v.into()).collect()),
            ),
            (
                "blocks",
                Value::Array(st.blocks.iter().map(|&b| b.into()).collect()),
            ),
            ("zero_rank", st.zero_rank.into()),
            ("stabilizer_order", int_json(&stab_order)),
        ])),
        Format::Csv => {
            print!("descriptor,standard,witness,zero_rank,stabilizer_order\n");
            print!(
                "{},{},{},{},{}\n",
                csv_quote(&st.descriptor),
                csv_quote(&st.standard.to_string()),
                csv_quote(&st.witness_factors),
                st.zero_rank,
                stab_order
            );
        }
    }
    Ok(0)
}

fn cmd_oracle(map: &str, what: What, format: Format) -> Result<i32, String> {
    let f = parse_map(map)?;
    let n = f.n();
    if n > 8 {
        return Err(format!(
            "the oracle enumerates all of S_n and is supported for n <= 8 (got {n})"
        ));
    }
    match what {
        What::Orbit => {
            let orb = orbit(&f);
            match format {
                Format::Text => {
                    println!("orbit size: {}", orb.len());
                    for g in &orb {
                        println!("{g}");
                    }
                }
                Format::Json => print_json(&json_object(vec![
                    ("map", f.to_string().into()),
                    ("n", n.into()),
                    ("size", orb.len().into()),
                    (
                        "elements",
                        Value::Array(orb.iter().map(|g| g.to_string().into()).collect()),
                    ),
                ])),
                Format::Csv => {
                    print!("map\n");
                    for g in &orb {
                        print!("{}\n", csv_quote(&g.to_string()));
                    }
                }
            }
        }
        What::Char => {
            let chi = orbit_character(&f);
            let dim = dim_rep(&chi, n as u64);
            match format {
                Format::Text => {
                    println!("dim: {dim}");
                    println!("character: {chi}");
                }
                Format::Json => print_json(&json_object(vec![
                    ("map", f.to_string().into()),
                    ("n", n.into()),
                    ("dim", int_json(&dim)),
                    ("character", chi.to_json()),
                ])),
                Format::Csv => print!("{}", poly_csv(&chi)),
            }
        }
        What::Stab => {
            let elems = stabilizer_bruteforce(&f);
            match format {
                Format::Text => {
                    println!("stabilizer order: {}", elems.len());
                    for pi in &elems {
                        println!("{}", cycle_string(pi));
                    }
                }
                Format::Json => print_json(&json_object(vec![
                    ("map", f.to_string().into()),
                    ("n", n.into()),
                    ("order", elems.len().into()),
                    (
                        "elements",
                        Value::Array(elems.iter().map(|pi| cycle_string(pi).into()).collect()),
                    ),
                ])),
                Format::Csv => {
                    print!("permutation\n");
                    for pi in &elems {
                        print!("{}\n", csv_quote(&cycle_string(pi)));
                    }
                }
            }
        }
    }
    Ok(0)
}

fn cmd_foulkes(m: u32, n: u32, format: Format) -> Result<i32, String> {
    if !(2 <= m && m <= n) {
        return Err(format!("require 2 <= m <= n (got m = {m}, n = {n})"));
    }
    let cap = degree_cap();
    let degree = u64::from(m) * u64::from(n);
    if degree > cap {
        return Err(format!(
            "degree cap exceeded: m*n = {degree} > {cap} (set ODUN_DEGREE_CAP to raise)"
        ));
    }
    let report = foulkes_compare(m, n);
    eprintln!("# computed in {} ms", report.millis);
    match format {
        Format::Text => {
            println!("foulkes comparison: m = {}, n = {}", report.m, report.n);
            for row in &report.rows {
                println!(
                    "  ({}): lhs {}, rhs {} [{}]",
                    row.lambda, row.lhs, row.rhs, row.verdict
                );
            }
            if report.exceptions.is_empty() {
                println!("exceptions: none");
            } else {
                let list: Vec<String> = report
                    .exceptions
                    .iter()
                    .map(|lam| format!("({lam})"))
                    .collect();
                println!("exceptions: {}", list.join(", "));
            }
        }
        Format::Json => print_json(&report.to_json()),
        Format::Csv => print!("{}", report.to_csv()),
    }
    Ok(0)
}

fn cmd_verify(format: Format) -> Result<i32, String> {
    let results = verify::run_all();
    let all_passed = results.iter().all(|r| r.passed);
    for (i, r) in results.iter().enumerate() {
        eprintln!(
            "# criterion {}: {} ms (budget {} ms)",
            i + 1,
            r.millis,
            r.budget_millis
        );
    }
    match format {
        Format::Text => {
            for (i, r) in results.iter().enumerate() {
                println!(
                    "criterion {:2}: {} - {} ({})",
                    i + 1,
                    if r.passed { "PASS" } else { "FAIL" },
                    r.name,
                    r.details
                );
            }
            println!("result: {}", if all_passed { "PASS" } else { "FAIL" });
        }
        Format::Json => {
            let criteria: Vec<Value> = results
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    json_object(vec![
                        ("index", (i + 1).into()),
                        ("name", r.name.clone().into()),
                        ("passed", r.passed.into()),
                        ("details", r.details.clone().into()),
                    ])
                })
                .collect();
            print_json(&json_object(vec![
                ("criteria", Value::Array(criteria)),
                ("passed", all_passed.into()),
            ]));
        }
        Format::Csv => {
            print!("index,passed,name,details\n");
            for (i, r) in results.iter().enumerate() {
                print!(
                    "{},{},{},{}\n",
                    i + 1,
                    r.passed,
                    csv_quote(&r.name),
                    csv_quote(&r.details)
                );
            }
        }
    }
    Ok(if all_passed { 0 } else { 1 })
}
