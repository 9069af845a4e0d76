use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use factcert::bounds::factor_coeff_bound;
use factcert::certificate::Document;
use factcert::certify::{factor_and_certify, factor_z, CertifyOptions, DEFAULT_PRIME_BUDGET, DEFAULT_TRIALS};
use factcert::modfactor::factor_mod_p;
use factcert::subsets::DEFAULT_SUBSET_CEILING;
use factcert::verify::{verify_document, VerifyOptions};
use factcert::{parse_poly, Error, IntPoly, ModPoly, Modulus};

const EXIT_REJECTED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

/// Factor integer polynomials and check irreducibility certificates.
#[derive(Parser)]
#[command(name = "factcert", version)]
struct Cli {
    /// Worker threads for parallel checks (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Factor a polynomial and write certificates for every factor.
    Certify {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Write the certificate document here instead of stdout.
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Check a certificate document. A bare certificate needs the polynomial.
    Verify {
        /// `[POLY] CERT_FILE`
        #[arg(num_args = 1..=2, required = true, allow_hyphen_values = true, value_names = ["POLY", "CERT"])]
        inputs: Vec<String>,
    },
    /// Factor a polynomial over the integers.
    Factor {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Factor a polynomial modulo a prime.
    Modfactor {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(short, long)]
        p: BigInt,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Print the coefficient bound for factors of a polynomial.
    Bound {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Primes tried for a simple certificate.
    #[arg(long, default_value_t = DEFAULT_PRIME_BUDGET)]
    primes_budget: usize,
    /// Primes used for degree analysis.
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
}

impl SearchArgs {
    fn options(&self) -> CertifyOptions {
        CertifyOptions {
            prime_budget: self.primes_budget,
            trials: self.trials,
            seed: self.seed,
            ..CertifyOptions::default()
        }
    }
}

/// A failure that ends the process with a message and exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ConstantPolynomial
            | Error::ZeroPolynomial
            | Error::InvalidModulus(_)
            | Error::CompositeModulus(..)
            | Error::PrimeDividesLeading(_) => EXIT_USAGE,
            _ => EXIT_INTERNAL,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<ExitCode, Failure>;

fn parse(text: &str) -> Result<IntPoly, Failure> {
    parse_poly(text).map_err(|e| Failure::usage(format!("cannot parse {text:?}: {e}")))
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("output serializes")
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure {
            code: EXIT_INTERNAL,
            message: format!("cannot write {}: {e}", path.display()),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn subset_ceiling() -> Result<u64, Failure> {
    match std::env::var("FACTCERT_MAX_SUBSETS") {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::usage(format!(
                "FACTCERT_MAX_SUBSETS must be a non-negative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_SUBSET_CEILING),
    }
}

fn cmd_certify(poly: &str, out: Option<&Path>, search: &SearchArgs) -> CmdResult {
    let f = parse(poly)?;
    let result = factor_and_certify(&f, &search.options())?;
    write_output(out, &result.to_json())?;
    if let Some(path) = out {
        let kinds: Vec<&str> = result.factors.iter().map(|c| c.certificate.kind()).collect();
        println!(
            "wrote {} ({} factor(s): {})",
            path.display(),
            kinds.len(),
            kinds.join(", ")
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(inputs: &[String]) -> CmdResult {
    let (poly, cert_path) = match inputs {
        [cert] => (None, cert),
        [poly, cert] => (Some(parse(poly)?), cert),
        _ => return Err(Failure::usage("expected [POLY] CERT")),
    };
    let text = fs::read_to_string(cert_path).map_err(|e| Failure::usage(format!("cannot read {cert_path}: {e}")))?;
    let doc = Document::from_json(&text).map_err(|e| Failure::usage(format!("malformed certificate: {e}")))?;
    if poly.is_none() && matches!(doc, Document::Certificate(_)) {
        return Err(Failure::usage("a bare certificate needs the polynomial it certifies"));
    }
    let opts = VerifyOptions {
        max_subsets: subset_ceiling()?,
    };
    let report = verify_document(&doc, poly.as_ref(), &opts);
    println!("{}", to_json(&report));
    if report.accepted() {
        Ok(ExitCode::SUCCESS)
    } else {
        for c in report.failures() {
            eprintln!("failed {}", c.assertion);
        }
        Ok(ExitCode::from(EXIT_REJECTED))
    }
}

fn factor_display(g: &IntPoly, e: usize) -> String {
    let base = if g
        .coeffs()
        .iter()
        .filter(|c| c.sign() != num_bigint::Sign::NoSign)
        .count()
        > 1
    {
        format!("({g})")
    } else {
        g.to_string()
    };
    if e > 1 {
        format!("{base}^{e}")
    } else {
        base
    }
}

#[derive(Serialize)]
struct FactorEntry<'a> {
    poly: &'a IntPoly,
    multiplicity: usize,
}

#[derive(Serialize)]
struct FactorOutput<'a> {
    content: String,
    factors: Vec<FactorEntry<'a>>,
}

fn cmd_factor(poly: &str, json: bool, search: &SearchArgs) -> CmdResult {
    let f = parse(poly)?;
    let (content, factors) = factor_z(&f, &search.options())?;
    if json {
        let out = FactorOutput {
            content: content.to_string(),
            factors: factors
                .iter()
                .map(|(poly, multiplicity)| FactorEntry {
                    poly,
                    multiplicity: *multiplicity,
                })
                .collect(),
        };
        println!("{}", to_json(&out));
    } else {
        let mut parts: Vec<String> = factors.iter().map(|(g, e)| factor_display(g, *e)).collect();
        if content != BigInt::from(1) {
            parts.insert(0, content.to_string());
        }
        println!("{}", parts.join("*"));
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct ModFactorOutput<'a> {
    p: String,
    unit: String,
    factors: Vec<FactorEntry<'a>>,
}

fn cmd_modfactor(poly: &str, p: &BigInt, seed: u64, json: bool) -> CmdResult {
    let f = parse(poly)?;
    let m = Modulus::prime(p.clone())?;
    let fp = ModPoly::from_int(&f, &m);
    if fp.degree().unwrap_or(0) == 0 {
        return Err(Failure::usage(format!("polynomial is constant modulo {p}")));
    }
    let fac = factor_mod_p(&fp, seed)?;
    let lifted: Vec<(IntPoly, usize)> = fac.factors.iter().map(|(g, e)| (g.to_int_poly(), *e)).collect();
    if json {
        let out = ModFactorOutput {
            p: p.to_string(),
            unit: fac.unit.to_string(),
            factors: lifted
                .iter()
                .map(|(poly, multiplicity)| FactorEntry {
                    poly,
                    multiplicity: *multiplicity,
                })
                .collect(),
        };
        println!("{}", to_json(&out));
    } else {
        let mut parts: Vec<String> = lifted.iter().map(|(g, e)| factor_display(g, *e)).collect();
        if fac.unit != BigInt::from(1) {
            parts.insert(0, fac.unit.to_string());
        }
        println!("{}  (mod {p})", parts.join("*"));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bound(poly: &str, json: bool) -> CmdResult {
    let f = parse(poly)?;
    let b = factor_coeff_bound(&f)?;
    if json {
        println!("{}", to_json(&b));
    } else {
        println!("B = {}", b.bound);
        println!("formula_id = {}", b.formula_id);
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> CmdResult {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::usage(format!("cannot configure {n} threads: {e}")))?;
    }
    match &cli.command {
        Command::Certify { poly, out, search } => cmd_certify(poly, out.as_deref(), search),
        Command::Verify { inputs } => cmd_verify(inputs),
        Command::Factor { poly, json, search } => cmd_factor(poly, *json, search),
        Command::Modfactor { poly, p, seed, json } => cmd_modfactor(poly, p, *seed, *json),
        Command::Bound { poly, json } => cmd_bound(poly, *json),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
