//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on validation errors, 2 when `verify` finds a
//! failing check, 64 on usage errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use serde_json::json;

use crate::error::{Error, Result};
use crate::gaussian::{gauss_forward_threaded, gauss_inverse_threaded, make_gaussian_plan, GaussianElement};
use crate::io;
use crate::pairs::{pair_diagnostic, pair_plan, pair_pow, PairElement, Variant};
use crate::plan::{make_plan, Regime};
use crate::rebase::{rebase_image, rebase_original, reference_image, reference_original, RebasePair};
use crate::theorems::{convolve_exact_integers, convolve_exact_with_plan};
use crate::transform::{dump_weights, forward_threaded, inverse_threaded, write_weights_csv};
use crate::verify::{run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "sntt", version, about = "Exact generalized number-theoretic transforms")]
struct Cli {
    /// Worker threads for per-index work; defaults to NTT_THREADS or 1.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Structured JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RegimeArg {
    Prime,
    PrimePower,
    TwoP,
    PseudoFermat,
    Mersenne,
    Fermat,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DirectionArg {
    Image,
    Original,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Fundamental,
    Transform,
    Theorems,
    Rebase,
    Gaussian,
    Duality,
    Pairs,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build and validate a plan, print it as JSON.
    Plan {
        #[arg(long)]
        s: BigUint,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        regime: RegimeArg,
        /// Prime of a prime-power or two-p plan; derived from N when omitted.
        #[arg(long)]
        p: Option<u64>,
        /// Exponent of a prime-power plan; derived from N when omitted.
        #[arg(long)]
        nn: Option<u32>,
    },
    /// Forward (or inverse) transform of a sequence file.
    Transform {
        #[arg(long)]
        plan: PathBuf,
        #[arg(long)]
        inverse: bool,
        seqfile: PathBuf,
    },
    /// Exact linear convolution of two integer sequence files.
    Conv {
        /// Use this plan instead of searching for the smallest one.
        #[arg(long)]
        plan: Option<PathBuf>,
        a: PathBuf,
        b: PathBuf,
    },
    /// Move a base-s2 image (or original) to base s1.
    Rebase {
        #[arg(long)]
        plan1: PathBuf,
        #[arg(long)]
        plan2: PathBuf,
        #[arg(long, value_enum, default_value = "image")]
        direction: DirectionArg,
        /// Go through the original instead of the kernel.
        #[arg(long)]
        reference: bool,
        seqfile: PathBuf,
    },
    /// Gaussian-integer transform of a `re,im` file.
    Gtransform {
        #[arg(long, allow_hyphen_values = true)]
        s_re: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        s_im: BigInt,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        inverse: bool,
        gseqfile: PathBuf,
    },
    /// Ordered-pair arithmetic.
    Pairs {
        #[command(subcommand)]
        command: PairsCommand,
    },
    /// Run a seeded verification suite.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print S(i, k) = s^{(i·k) mod N} as CSV.
    DumpWeights {
        #[arg(long)]
        plan: PathBuf,
        #[arg(long = "i", value_delimiter = ',', allow_hyphen_values = true, required = true)]
        i: Vec<i64>,
    },
}

#[derive(Subcommand, Debug)]
enum PairsCommand {
    /// Powers, modulus pair and transform diagnostic for one base.
    Demo {
        #[arg(long, allow_hyphen_values = true)]
        a: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        b: BigInt,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        variant: u8,
    },
}

fn threads(arg: Option<usize>) -> Result<usize> {
    if let Some(t) = arg {
        return Ok(t.max(1));
    }
    match std::env::var("NTT_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(|t| t.max(1))
            .map_err(|_| Error::InvalidArgument(format!("NTT_THREADS = '{v}' is not a count"))),
        Err(_) => Ok(1),
    }
}

fn regime(arg: RegimeArg, n: usize, p: Option<u64>, nn: Option<u32>) -> Result<Regime> {
    Ok(match arg {
        RegimeArg::Prime => Regime::PrimeN,
        RegimeArg::Mersenne => Regime::Mersenne,
        RegimeArg::Fermat => Regime::Fermat,
        RegimeArg::PseudoFermat => Regime::PseudoFermat,
        RegimeArg::TwoP => match p {
            Some(p) => Regime::TwoP { p },
            None => Regime::from_name("two-p", n)?,
        },
        RegimeArg::PrimePower => match (p, nn) {
            (Some(p), Some(nn)) => Regime::PrimePower { p, n: nn },
            (None, None) => Regime::from_name("prime-power", n)?,
            _ => return Err(Error::InvalidArgument("--p and --nn go together".into())),
        },
    })
}

fn suite(arg: SuiteArg) -> Suite {
    match arg {
        SuiteArg::Fundamental => Suite::Fundamental,
        SuiteArg::Transform => Suite::Transform,
        SuiteArg::Theorems => Suite::Theorems,
        SuiteArg::Rebase => Suite::Rebase,
        SuiteArg::Gaussian => Suite::Gaussian,
        SuiteArg::Duality => Suite::Duality,
        SuiteArg::Pairs => Suite::Pairs,
        SuiteArg::All => Suite::All,
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| Error::InvalidArgument(format!("write failed: {e}")))
}

fn emit_json(out: &mut dyn Write, value: &serde_json::Value) -> Result<()> {
    emit(out, &format!("{}\n", serde_json::to_string_pretty(value).expect("json serializes")))
}

fn pairs_demo(out: &mut dyn Write, json_out: bool, a: BigInt, b: BigInt, n: usize, variant: u8) -> Result<()> {
    let variant = Variant::from_index(variant)?;
    let s = PairElement { first: a, second: b };
    let powers: Vec<PairElement> = (0..n as u64).map(|m| pair_pow(&s, m, variant)).collect();
    let plan = match variant {
        Variant::V2 | Variant::V3 | Variant::V4 => Some(pair_plan(s.clone(), n, variant)?),
        _ => None,
    };
    let probe: Vec<PairElement> = (0..n as i64).map(|i| PairElement::new(i + 1, 2 * i + 1)).collect();
    let diagnostic = plan.as_ref().map(|p| pair_diagnostic(p, &probe)).transpose()?;
    if json_out {
        let mut value = json!({
            "s": s.to_string(),
            "variant": variant.index(),
            "n": n,
            "powers": powers.iter().map(ToString::to_string).collect::<Vec<_>>(),
        });
        if let (Some(plan), Some(d)) = (&plan, &diagnostic) {
            value["modulus_pair"] = json!(plan.modulus_pair().to_string());
            value["scalar_modulus"] = json!(plan.scalar_modulus().to_string());
            value["weight_sums"] = json!(d.weight_sums.iter().map(|(_, p)| p.to_string()).collect::<Vec<_>>());
            value["round_trip_plain"] = json!(d.round_trip_plain);
            value["round_trip_normalized"] = json!(d.round_trip_normalized);
        }
        return emit_json(out, &value);
    }
    let m = variant.matrix(&s.first, &s.second);
    let mut text = format!("variant {}: [[{}, {}], [{}, {}]]\n", variant.index(), m[0][0], m[0][1], m[1][0], m[1][1]);
    for (e, p) in powers.iter().enumerate() {
        text += &format!("s^{e} = <{p}>\n");
    }
    match (&plan, &diagnostic) {
        (Some(plan), Some(d)) => {
            text += &format!("modulus pair <{}>, scalar modulus {}\n", plan.modulus_pair(), plan.scalar_modulus());
            for (dd, sum) in &d.weight_sums {
                text += &format!("weight sum d={dd}: <{sum}>\n");
            }
            let normalized = d.round_trip_normalized.map_or("n/a".to_string(), |b| b.to_string());
            text += &format!("round trip: plain {}, with 1/N {}\n", d.round_trip_plain, normalized);
        }
        _ => text += "the transform is defined for variants 2, 3 and 4 only\n",
    }
    emit(out, &text)
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let threads = threads(cli.threads)?;
    match cli.command {
        Command::Plan { s, n, regime: r, p, nn } => {
            let plan = make_plan(s, n, regime(r, n, p, nn)?)?;
            emit_json(out, &io::plan_json(&plan))?;
        }
        Command::Transform { plan, inverse, seqfile } => {
            let plan = io::read_plan(&plan)?;
            let seq = io::sequence_for_plan(&io::read_sequence(&seqfile)?, &plan)?;
            let result =
                if inverse { inverse_threaded(&plan, &seq, threads)? } else { forward_threaded(&plan, &seq, threads)? };
            if cli.json {
                emit_json(out, &io::sequence_json(&result))?;
            } else {
                emit(out, &io::format_values(result.values()))?;
            }
        }
        Command::Conv { plan, a, b } => {
            let a = io::read_sequence(&a)?.elements;
            let b = io::read_sequence(&b)?.elements;
            let result = match plan {
                Some(path) => convolve_exact_with_plan(&io::read_plan(&path)?, &a, &b)?,
                None => convolve_exact_integers(&a, &b)?,
            };
            if cli.json {
                emit_json(out, &json!(result.iter().map(ToString::to_string).collect::<Vec<_>>()))?;
            } else {
                emit(out, &io::format_values(&result))?;
            }
        }
        Command::Rebase { plan1, plan2, direction, reference, seqfile } => {
            let pair = RebasePair::new(io::read_plan(&plan1)?, io::read_plan(&plan2)?)?;
            let input = io::sequence_for_plan(&io::read_sequence(&seqfile)?, pair.plan2())?;
            let result = match (direction, reference) {
                (DirectionArg::Image, false) => rebase_image(&pair, &input)?,
                (DirectionArg::Image, true) => reference_image(&pair, &input)?,
                (DirectionArg::Original, false) => rebase_original(&pair, &input)?,
                (DirectionArg::Original, true) => reference_original(&pair, &input)?,
            };
            if cli.json {
                emit_json(out, &io::sequence_json(&result))?;
            } else {
                emit(out, &io::format_values(result.values()))?;
            }
        }
        Command::Gtransform { s_re, s_im, n, inverse, gseqfile } => {
            let plan = make_gaussian_plan(GaussianElement { re: s_re, im: s_im }, n)?;
            let z = io::read_gaussian(&gseqfile)?;
            let result = if inverse {
                gauss_inverse_threaded(&plan, &z, threads)?
            } else {
                gauss_forward_threaded(&plan, &z, threads)?
            };
            if cli.json {
                let items: Vec<_> = result.iter().map(|g| json!([g.re.to_string(), g.im.to_string()])).collect();
                emit_json(out, &json!({ "modulus": plan.modulus().to_string(), "elements": items }))?;
            } else {
                emit(out, &io::format_lines(&result))?;
            }
        }
        Command::Pairs { command: PairsCommand::Demo { a, b, n, variant } } => {
            pairs_demo(out, cli.json, a, b, n, variant)?
        }
        Command::Verify { suite: s, seed } => {
            let report = run_suite(suite(s), seed)?;
            if cli.json {
                let rows: Vec<_> = report
                    .rows
                    .iter()
                    .map(|r| json!({ "suite": r.suite, "name": r.name, "status": r.status.to_string(), "detail": r.detail }))
                    .collect();
                emit_json(out, &json!({ "seed": seed, "passed": report.passed(), "rows": rows }))?;
            } else {
                emit(out, &format!("{report}\n"))?;
            }
            if !report.passed() {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
        Command::DumpWeights { plan, i } => {
            let plan = io::read_plan(&plan)?;
            let rows = dump_weights(&plan, &i);
            let mut buf = Vec::new();
            write_weights_csv(&rows, &mut buf).expect("writing to memory");
            out.write_all(&buf).map_err(|e| Error::InvalidArgument(format!("write failed: {e}")))?;
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("sntt").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn plan_prints_json() {
        let (code, out, _) = call(&["plan", "--s", "2", "--n", "5", "--regime", "prime"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["m"], "31");
    }

    #[test]
    fn usage_and_validation_codes() {
        assert_eq!(call(&["plan", "--s", "2"]).0, EXIT_USAGE);
        assert_eq!(call(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(call(&[]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
        assert_eq!(call(&["pairs", "demo", "--a", "2", "--b", "1", "--n", "3", "--variant", "5"]).0, EXIT_USAGE);
        let (code, _, err) = call(&["plan", "--s", "3", "--n", "4", "--regime", "prime"]);
        assert_eq!(code, EXIT_INVALID);
        assert!(err.contains("existence"), "{err}");
    }

    #[test]
    fn prime_power_parts() {
        let (code, out, _) =
            call(&["plan", "--s", "2", "--n", "9", "--regime", "prime-power", "--p", "3", "--nn", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"73\""));
        assert_eq!(call(&["plan", "--s", "2", "--n", "9", "--regime", "prime-power", "--p", "3"]).0, EXIT_INVALID);
    }

    #[test]
    fn pairs_demo_variants() {
        let (code, out, _) = call(&["pairs", "demo", "--a", "2", "--b", "1", "--n", "3", "--variant", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("modulus pair <8,1>, scalar modulus 65"), "{out}");
        let (code, out, _) = call(&["pairs", "demo", "--a", "2", "--b", "1", "--n", "3", "--variant", "1"]);
        assert_eq!(code, 0);
        assert!(out.contains("s^2 = <3,4>"), "{out}");
    }
}
