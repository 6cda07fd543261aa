//! Command-line front end: every library capability as a subcommand with
//! JSON (default) or CSV output. `verify-all` runs the full oracle-vs-formula
//! suite for one configuration and exits nonzero on any failure.

use std::io::{BufRead, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use escalier::decoder::{Code, Strategy, Word};
use escalier::gf2m::Field;
use escalier::json as ejson;
use escalier::locator;
use escalier::macaulay;
use escalier::monomial::VarOrder;
use escalier::pointideal::{cm_correspondence, escalier_of_points, lex_gb_of_points};
use escalier::report;
use escalier::variety::{self, SyndromeConfig, VarietyKind};
use escalier::PrimeField;

#[derive(Parser)]
#[command(name = "escalier", version, about = "Gröbner escaliers, Cerlienco-Mureddu correspondences and a weight-≤2 cyclic-code decoder over GF(2^m)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Clone)]
struct FieldArgs {
    /// Extension degree of GF(2^m)
    #[arg(long)]
    m: u32,
    /// Primitive polynomial bitmask (hex or decimal); default per m
    #[arg(long, value_parser = parse_mask)]
    poly: Option<u32>,
}

impl FieldArgs {
    fn field(&self) -> Result<Field, String> {
        Field::new(self.m, self.poly).map_err(|e| e.to_string())
    }
}

#[derive(Args, Clone)]
struct CodeArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Code length, a divisor of 2^m - 1
    #[arg(long)]
    n: u32,
    /// Second defining exponent (odd, not 1 mod n)
    #[arg(long)]
    l: u64,
}

impl CodeArgs {
    fn cfg(&self) -> Result<SyndromeConfig, String> {
        SyndromeConfig::new(self.field.field()?, self.n, self.l).map_err(|e| e.to_string())
    }
}

fn parse_mask(s: &str) -> Result<u32, String> {
    let s = s.trim();
    if let Some(hex) = s.strip_prefix("0x") {
        u32::from_str_radix(hex, 16).map_err(|e| e.to_string())
    } else {
        s.parse().map_err(|e: std::num::ParseIntError| e.to_string())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Gröbner escalier of the ideal of a finite point set
    Escalier {
        #[command(flatten)]
        field: FieldArgs,
        /// Points as JSON, e.g. '[["0","a^1"],["a^0","0"]]'
        #[arg(long)]
        points: String,
        /// Variable names, comma separated, smallest first
        #[arg(long, default_value = "x1,x2")]
        vars: String,
    },
    /// Reduced lex Gröbner basis of the ideal of a finite point set
    Gb {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        points: String,
        #[arg(long, default_value = "x1,x2")]
        vars: String,
    },
    /// Error/syndrome variety structures (formulas, oracle, or both compared)
    Variety {
        #[command(flatten)]
        code: CodeArgs,
        /// Which variety: two | plus | ns | e
        #[arg(long)]
        kind: VarietyKind,
        /// Emit the explicit formula structures (error variety) in place of the oracle
        #[arg(long)]
        formulas: bool,
        /// Run the point-ideal oracle and emit its structures
        #[arg(long)]
        oracle: bool,
        /// Compare formula and oracle routes and report
        #[arg(long)]
        verify: bool,
        /// Include the raw point list
        #[arg(long)]
        with_points: bool,
    },
    /// Macaulay's construction over a prime field
    Macaulay {
        /// Minimal generators as JSON exponent arrays, e.g. '[[2,0],[1,1],[0,2]]'
        #[arg(long)]
        gens: String,
        /// Prime p >= max generator degree
        #[arg(long)]
        prime: u64,
        /// Also run the verification report
        #[arg(long)]
        verify: bool,
    },
    /// Lazard's two-variable correspondence from the column profile
    Lazard {
        /// Points as JSON; integers with --prime, "a^k" strings with --m
        #[arg(long)]
        points: String,
        #[arg(long)]
        prime: Option<u64>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, value_parser = parse_mask)]
        poly: Option<u32>,
    },
    /// Zech sequence (and optional tableau) of a gap set
    Zech {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: u32,
        /// Gap set, comma separated, subset of 1..=n
        #[arg(long)]
        set: String,
        /// Also emit the tableau (sorted classes + staircase escalier)
        #[arg(long)]
        tableau: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Exhaustive syndrome-map facts for one configuration
    Trivialities {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Error locator polynomials (GELP / sparse HELP / general HELP)
    Locator {
        #[command(flatten)]
        code: CodeArgs,
        /// Interpolate the general error locator polynomial
        #[arg(long)]
        gelp: bool,
        /// GELP interpolation domain: two | plus | ns
        #[arg(long, default_value = "plus")]
        kind: VarietyKind,
        /// Sparse half error locator (full-length codes)
        #[arg(long = "help-sparse")]
        help_sparse: bool,
        /// General half error locator (any length)
        #[arg(long = "help-general")]
        help_general: bool,
    },
    /// Decode one word or a batch of newline-delimited bitstrings
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, default_value = "gelp")]
        strategy: Strategy,
        /// Word as bitstring (position 0 first) or hex with 0x prefix
        #[arg(long)]
        word: Option<String>,
        /// Batch file of bitstrings, "-" for standard input
        #[arg(long)]
        batch: Option<String>,
    },
    /// Run every verification check for one configuration
    VerifyAll {
        #[command(flatten)]
        code: CodeArgs,
        /// Only print failures and the summary line
        #[arg(long)]
        quiet: bool,
        /// Emit the whole report as JSON
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_vars(vars: &str) -> Result<VarOrder, String> {
    VarOrder::new(vars.split(',').map(str::trim).map(String::from).collect())
        .map_err(|e| e.to_string())
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn run(cmd: Command) -> Result<ExitCode, String> {
    match cmd {
        Command::Escalier { field, points, vars } => {
            let f = field.field()?;
            let order = parse_vars(&vars)?;
            let val: Value = serde_json::from_str(&points).map_err(|e| e.to_string())?;
            let pts = ejson::points_from_json(&f, &val, order.clone()).map_err(|e| e.to_string())?;
            let esc = escalier_of_points(&f, &pts).map_err(|e| e.to_string())?;
            print_json(&ejson::escalier_to_json(&esc, &order));
        }
        Command::Gb { field, points, vars } => {
            let f = field.field()?;
            let order = parse_vars(&vars)?;
            let val: Value = serde_json::from_str(&points).map_err(|e| e.to_string())?;
            let pts = ejson::points_from_json(&f, &val, order.clone()).map_err(|e| e.to_string())?;
            let gb = lex_gb_of_points(&f, &pts).map_err(|e| e.to_string())?;
            let phi = cm_correspondence(&f, &pts).map_err(|e| e.to_string())?;
            print_json(&ejson::obj(vec![
                ("basis", ejson::polys_to_json(&f, &gb, &order)),
                ("correspondence", ejson::correspondence_to_json(&f, &phi)),
            ]));
        }
        Command::Variety { code, kind, formulas, oracle, verify, with_points } => {
            return run_variety(code, kind, formulas, oracle, verify, with_points);
        }
        Command::Macaulay { gens, prime, verify } => {
            let val: Value = serde_json::from_str(&gens).map_err(|e| e.to_string())?;
            let gens = ejson::terms_from_json(&val).map_err(|e| e.to_string())?;
            let out = macaulay::macaulay_construct(&gens, prime).map_err(|e| e.to_string())?;
            let order = VarOrder::numbered(gens.first().map(|t| t.arity()).unwrap_or(1));
            let mut entries = vec![
                ("prime", json!(prime)),
                ("gens", Value::Array(out.gens.iter().map(ejson::term_to_json).collect())),
                ("escalier", ejson::escalier_to_json(&out.escalier, &order)),
                (
                    "points",
                    Value::Array(out.points.points().iter().map(|p| json!(p)).collect()),
                ),
                (
                    "ideal_gens",
                    Value::Array(out.ideal_gens.iter().map(|p| ejson::prime_poly_to_json(p, &order)).collect()),
                ),
                (
                    "triangular",
                    Value::Array(out.triangular.iter().map(|p| ejson::prime_poly_to_json(p, &order)).collect()),
                ),
                ("correspondence", ejson::prime_correspondence_to_json(&out.correspondence)),
            ];
            if verify {
                let rep = macaulay::macaulay_verify(&out).map_err(|e| e.to_string())?;
                entries.push((
                    "verify",
                    json!({
                        "ideals_match": rep.ideals_match,
                        "cm_ok": rep.cm_ok,
                        "leading_terms_ok": rep.leading_terms_ok,
                        "triangular_ok": rep.triangular_ok,
                    }),
                ));
            }
            print_json(&ejson::obj(entries));
        }
        Command::Lazard { points, prime, m, poly } => {
            let val: Value = serde_json::from_str(&points).map_err(|e| e.to_string())?;
            let order = VarOrder::numbered(2);
            match (prime, m) {
                (Some(p), None) => {
                    let f = PrimeField::new(p).map_err(|e| e.to_string())?;
                    let pts = ejson::prime_points_from_json(&f, &val, order.clone())
                        .map_err(|e| e.to_string())?;
                    let out = macaulay::lazard_correspondence(&f, &pts).map_err(|e| e.to_string())?;
                    print_json(&ejson::obj(vec![
                        ("column_counts", json!(out.column_counts)),
                        ("escalier", ejson::escalier_to_json(&out.escalier, &order)),
                        ("correspondence", ejson::prime_correspondence_to_json(&out.correspondence)),
                    ]));
                }
                (None, Some(m)) => {
                    let f = Field::new(m, poly).map_err(|e| e.to_string())?;
                    let pts = ejson::points_from_json(&f, &val, order.clone()).map_err(|e| e.to_string())?;
                    let out = macaulay::lazard_correspondence(&f, &pts).map_err(|e| e.to_string())?;
                    print_json(&ejson::obj(vec![
                        ("column_counts", json!(out.column_counts)),
                        ("escalier", ejson::escalier_to_json(&out.escalier, &order)),
                        ("correspondence", ejson::correspondence_to_json(&f, &out.correspondence)),
                    ]));
                }
                _ => return Err("pass exactly one of --prime or --m".into()),
            }
        }
        Command::Zech { field, n, set, tableau, format } => {
            let f = field.field()?;
            let set: Vec<u32> = set
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse().map_err(|e: std::num::ParseIntError| e.to_string()))
                .collect::<Result<_, _>>()?;
            let seq = escalier::zech_sequence(&f, n, &set).map_err(|e| e.to_string())?;
            if format == Format::Csv {
                println!("{}", seq.iter().map(u32::to_string).collect::<Vec<_>>().join(","));
            } else if tableau {
                let t = variety::zech_tableau(&f, n, &set).map_err(|e| e.to_string())?;
                print_json(&ejson::obj(vec![
                    ("alpha", json!(seq.len())),
                    ("zech_sequence", json!(t.sequence)),
                    (
                        "classes",
                        Value::Array(t.classes.iter().map(|&(i, z)| json!([i, z])).collect()),
                    ),
                    ("escalier", ejson::escalier_to_json(&t.escalier, &VarOrder::numbered(2))),
                ]));
            } else {
                print_json(&ejson::obj(vec![
                    ("alpha", json!(seq.len())),
                    ("zech_sequence", json!(seq)),
                ]));
            }
        }
        Command::Trivialities { code } => {
            let cfg = code.cfg()?;
            let rep = variety::syndrome_map_report(&cfg);
            print_json(&ejson::obj(vec![
                (
                    "claims",
                    Value::Array(
                        rep.claims
                            .iter()
                            .map(|c| json!({"name": c.name, "holds": c.holds, "detail": c.detail}))
                            .collect(),
                    ),
                ),
                ("image_size_enumerated", json!(rep.image_size_enumerated)),
                ("image_size_reported", json!(rep.image_size_reported)),
                ("image_sizes_agree", json!(rep.image_sizes_agree)),
                ("image_size_stable", json!(rep.image_size_stable)),
            ]));
            if !rep.all_hold() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Locator { code, gelp, kind, help_sparse, help_general } => {
            let cfg = code.cfg()?;
            let order = VarOrder::syndrome();
            let f = &cfg.field;
            let mut entries: Vec<(&str, Value)> = Vec::new();
            let mut ok = true;
            if gelp {
                let base = variety::base_structures(&cfg).map_err(|e| e.to_string())?;
                let structs = variety::derive_structures(kind, &base, &cfg).map_err(|e| e.to_string())?;
                let g = locator::gelp_interpolate(&cfg, &structs).map_err(|e| e.to_string())?;
                let sweep = locator::gelp_root_sweep(&cfg, &g);
                ok &= sweep.ok();
                entries.push(("gelp", ejson::poly_to_json(f, &g.poly, &order)));
                entries.push((
                    "gelp_sweep",
                    json!({"checked": sweep.checked, "failures": sweep.failures}),
                ));
            }
            if help_sparse {
                let h = locator::help_sparse(&cfg).map_err(|e| e.to_string())?;
                ok &= h.sweep.ok();
                entries.push(("help_sparse", ejson::poly_to_json(f, &h.poly, &order)));
                entries.push((
                    "help_sparse_sweep",
                    json!({"checked": h.sweep.checked, "failures": h.sweep.failures}),
                ));
            }
            if help_general {
                let h = locator::help_general(&cfg, &variety::z2_odd_gap_points(&cfg))
                    .map_err(|e| e.to_string())?;
                ok &= h.sweep.ok();
                entries.push(("help_general", ejson::poly_to_json(f, &h.poly, &order)));
                entries.push((
                    "help_general_sweep",
                    json!({"checked": h.sweep.checked, "failures": h.sweep.failures}),
                ));
            }
            if entries.is_empty() {
                return Err("pass at least one of --gelp, --help-sparse, --help-general".into());
            }
            print_json(&ejson::obj(entries));
            if !ok {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Decode { code, strategy, word, batch } => {
            let n = code.n;
            let c = Code::with_field(code.field.field()?, n, code.l).map_err(|e| e.to_string())?;
            let decode_one = |s: &str| -> Value {
                let parsed = if s.starts_with("0x") {
                    Word::from_hex(s, n)
                } else {
                    Word::from_bitstring(s, n)
                };
                match parsed.and_then(|w| c.decode(&w, strategy)) {
                    Ok(out) => ejson::obj(vec![
                        ("word", json!(s)),
                        ("syndrome", json!([
                            c.cfg().field.format_elem(out.syndrome.0),
                            c.cfg().field.format_elem(out.syndrome.1),
                        ])),
                        ("error_positions", json!(out.error_positions)),
                        ("corrected", json!(out.corrected.to_bitstring())),
                    ]),
                    Err(e) => ejson::obj(vec![("word", json!(s)), ("error", json!(e.to_string()))]),
                }
            };
            match (word, batch) {
                (Some(w), None) => print_json(&decode_one(&w)),
                (None, Some(path)) => {
                    let reader: Box<dyn BufRead> = if path == "-" {
                        Box::new(std::io::stdin().lock())
                    } else {
                        Box::new(std::io::BufReader::new(
                            std::fs::File::open(&path).map_err(|e| e.to_string())?,
                        ))
                    };
                    let stdout = std::io::stdout();
                    let mut out = stdout.lock();
                    for line in reader.lines() {
                        let line = line.map_err(|e| e.to_string())?;
                        let line = line.trim();
                        if line.is_empty() {
                            continue;
                        }
                        writeln!(out, "{}", decode_one(line)).map_err(|e| e.to_string())?;
                    }
                }
                _ => return Err("pass exactly one of --word or --batch".into()),
            }
        }
        Command::VerifyAll { code, quiet, json } => {
            let rep = report::verify_config(code.field.m, code.n, code.l).map_err(|e| e.to_string())?;
            if json {
                print_json(&rep.to_json());
                return Ok(if rep.pass() { ExitCode::SUCCESS } else { ExitCode::from(1) });
            }
            if quiet {
                for c in rep.checks.iter().filter(|c| !c.pass) {
                    println!("FAIL {} -- {}", c.name, c.detail);
                }
            } else {
                print!("{}", rep.render_lines());
            }
            println!(
                "{}: {} checks, {} failed (m={}, n={}, l={})",
                if rep.pass() { "PASS" } else { "FAIL" },
                rep.checks.len(),
                rep.checks.iter().filter(|c| !c.pass).count(),
                rep.m,
                rep.n,
                rep.l
            );
            if !rep.pass() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_variety(
    code: CodeArgs,
    kind: VarietyKind,
    formulas: bool,
    oracle: bool,
    verify: bool,
    with_points: bool,
) -> Result<ExitCode, String> {
    let cfg = code.cfg()?;
    let f = cfg.field.clone();
    let order4 = VarOrder::syndrome();
    let order2 = VarOrder::error_pair();
    let mut entries: Vec<(&str, Value)> = vec![
        ("kind", json!(kind.tag())),
        ("cardinality", json!(kind.cardinality(cfg.n() as u64))),
    ];
    let mut pass = true;
    if with_points {
        entries.push((
            "points",
            ejson::pointset_to_json(&f, &variety::syndrome_variety_points(&cfg, kind)),
        ));
        entries.push((
            "error_points",
            ejson::pointset_to_json(&f, &variety::error_variety_points(&cfg.roots, kind)),
        ));
    }
    if formulas || verify {
        let (esc, basis) = variety::error_formulas(&f, kind, cfg.n()).map_err(|e| e.to_string())?;
        entries.push(("error_escalier", ejson::escalier_to_json(&esc, &order2)));
        entries.push(("error_basis", ejson::polys_to_json(&f, &basis, &order2)));
    }
    if oracle || verify {
        let base = variety::base_structures(&cfg).map_err(|e| e.to_string())?;
        let s = variety::derive_structures(kind, &base, &cfg).map_err(|e| e.to_string())?;
        entries.push(("escalier", ejson::escalier_to_json(&s.escalier, &order4)));
        entries.push(("basis", ejson::polys_to_json(&f, &s.basis, &order4)));
        entries.push(("correspondence", ejson::correspondence_to_json(&f, &s.correspondence)));
        if verify {
            let err_pts = variety::error_variety_points(&cfg.roots, kind);
            let (fesc, fbasis) = variety::error_formulas(&f, kind, cfg.n()).map_err(|e| e.to_string())?;
            let err_oracle = escalier::pointideal::incremental_basis(&f, &err_pts, &[])
                .map_err(|e| e.to_string())?;
            let err_ok = err_oracle.escalier() == fesc && err_oracle.basis == fbasis;
            let syn_pts = variety::syndrome_variety_points(&cfg, kind);
            let syn_oracle = escalier::pointideal::incremental_basis(&f, &syn_pts, &[])
                .map_err(|e| e.to_string())?;
            let syn_ok = syn_oracle.escalier() == s.escalier && syn_oracle.basis == s.basis;
            let pulled = s
                .correspondence
                .lex_pullback_points(order4.clone())
                .map_err(|e| e.to_string())?;
            let cm_ok = escalier::pointideal::verify_cm(&f, &pulled, &s.correspondence)
                .map_err(|e| e.to_string())?
                .ok;
            pass = err_ok && syn_ok && cm_ok;
            entries.push((
                "report",
                json!({
                    "error_variety_formulas_match_oracle": err_ok,
                    "syndrome_structures_match_oracle": syn_ok,
                    "correspondence_prefixes_ok": cm_ok,
                }),
            ));
        }
    }
    print_json(&ejson::obj(entries));
    Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
