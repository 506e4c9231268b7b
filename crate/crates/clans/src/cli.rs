//! Argument parsing and command dispatch for the `clans` binary.

use std::fs;
use std::path::PathBuf;

use clans_core::curves::{curve_check, default_samples, standard_cases};
use clans_core::flag::{in_closure, orbit_of, yamamoto_representative, SplitSpaces};
use clans_core::poset::{build_poset, interval, poset_properties};
use clans_core::{compare, enumerate_clans, rank_profile, Clan, Error, Rational, Signature};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::formats;
use crate::verify::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "clans", version, about = "Bruhat order on (p,q)-clans", long_about = None)]
pub struct Cli {
    #[arg(long, short, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the result here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Largest p + q accepted by exhaustive commands.
    #[arg(long, global = true, default_value_t = 9)]
    pub max_size: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List all clans of signature (p,q) in canonical order.
    Enumerate { p: usize, q: usize },
    /// Print the rank numbers γ(i;+), γ(i;-), γ(i;j).
    Rank {
        clan: String,
        #[arg(long, short, value_parser = parse_signature)]
        signature: Option<Signature>,
    },
    /// Compare two clans; exit status 0 iff A <= B.
    Compare {
        a: String,
        b: String,
        #[arg(long, short, value_parser = parse_signature)]
        signature: Option<Signature>,
    },
    /// Hasse diagram of the whole poset.
    Poset { p: usize, q: usize },
    /// Report on the interval [BOTTOM, TOP].
    Interval {
        p: usize,
        q: usize,
        bottom: String,
        top: String,
    },
    /// Purity, extremes, thinness and Eulerian checks.
    Properties { p: usize, q: usize },
    /// The default orbit representative flag of a clan.
    Rep {
        clan: String,
        #[arg(long, short, value_parser = parse_signature)]
        signature: Option<Signature>,
    },
    /// The clan whose orbit contains the flag in FLAGFILE.
    Orbit {
        flagfile: PathBuf,
        p: usize,
        q: usize,
    },
    /// Whether the flag in FLAGFILE lies in the closure of CLAN's orbit.
    Closure {
        flagfile: PathBuf,
        clan: String,
        p: usize,
        q: usize,
    },
    /// Replay the degeneration curve of every move kind.
    Curves {
        /// Comma-separated nonzero rationals.
        #[arg(long, value_delimiter = ',', value_parser = parse_sample)]
        samples: Option<Vec<Rational>>,
    },
    /// Full cross-validation sweep for one signature.
    Verify { p: usize, q: usize },
}

fn parse_signature(text: &str) -> Result<Signature, String> {
    let (p, q) = text
        .trim_matches(|c| c == '(' || c == ')')
        .split_once(',')
        .ok_or_else(|| format!("expected p,q, got {text:?}"))?;
    let p = p.trim().parse().map_err(|_| format!("bad p in {text:?}"))?;
    let q = q.trim().parse().map_err(|_| format!("bad q in {text:?}"))?;
    Signature::new(p, q).map_err(|e| e.to_string())
}

fn parse_sample(text: &str) -> Result<Rational, String> {
    formats::parse_rational(text).ok_or_else(|| format!("{text:?} is not a rational number"))
}

/// Exit status and the text that was (or would be) printed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Self {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Self {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::OrderMismatch(_) | Error::CaseMismatch(_) => EXIT_VERIFICATION,
            _ => EXIT_INPUT,
        };
        Failure(code, format!("error: {e}"))
    }
}

fn input(message: impl Into<String>) -> Failure {
    Failure(EXIT_INPUT, format!("error: {}", message.into()))
}

type Step = Result<(i32, String), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome::fail(code, text)
            } else {
                Outcome::ok(code, text)
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok((code, text)) => match &cli.output {
            Some(path) => match fs::write(path, &text) {
                Ok(()) => Outcome::ok(code, String::new()),
                Err(e) => Outcome::fail(
                    EXIT_INPUT,
                    format!("error: cannot write {}: {e}", path.display()),
                ),
            },
            None => Outcome::ok(code, text),
        },
        Err(Failure(code, message)) => Outcome::fail(code, message),
    }
}

fn signature(p: usize, q: usize) -> Result<Signature, Failure> {
    Ok(Signature::new(p, q)?)
}

fn guarded(cli: &Cli, p: usize, q: usize) -> Result<Signature, Failure> {
    let sig = signature(p, q)?;
    if sig.n() > cli.max_size {
        return Err(input(format!(
            "p + q = {} exceeds the size guard {}; pass --max-size to allow it",
            sig.n(),
            cli.max_size
        )));
    }
    Ok(sig)
}

fn clan_arg(text: &str, sig: Option<Signature>) -> Result<Clan, Failure> {
    Ok(match sig {
        Some(s) => Clan::parse(text, s)?,
        None => Clan::parse_inferred(text)?,
    })
}

fn read_flag(path: &PathBuf) -> Result<clans_core::Flag, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| input(format!("cannot read {}: {e}", path.display())))?;
    formats::read_flag(&text).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn json_text(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values serialize");
    s.push('\n');
    s
}

fn no_dot(cli: &Cli, command: &str) -> Result<(), Failure> {
    if cli.format == Format::Dot {
        return Err(input(format!(
            "--format dot is only available for `poset`, not `{command}`"
        )));
    }
    Ok(())
}

fn render(cli: &Cli, text: impl FnOnce() -> String, value: impl FnOnce() -> Value) -> String {
    match cli.format {
        Format::Json => json_text(&value()),
        _ => text(),
    }
}

fn dispatch(cli: &Cli) -> Step {
    match &cli.command {
        Command::Enumerate { p, q } => {
            no_dot(cli, "enumerate")?;
            let sig = guarded(cli, *p, *q)?;
            let clans = enumerate_clans(sig);
            Ok((
                EXIT_OK,
                render(
                    cli,
                    || formats::enumeration_text(&clans),
                    || formats::enumeration_json(sig, &clans),
                ),
            ))
        }
        Command::Rank { clan, signature } => {
            no_dot(cli, "rank")?;
            let clan = clan_arg(clan, *signature)?;
            let profile = rank_profile(&clan);
            Ok((
                EXIT_OK,
                render(
                    cli,
                    || formats::profile_text(&clan, &profile),
                    || formats::profile_json(&clan, &profile),
                ),
            ))
        }
        Command::Compare { a, b, signature } => {
            no_dot(cli, "compare")?;
            let a = clan_arg(a, *signature)?;
            let b = clan_arg(b, Some(signature.unwrap_or(a.signature())))?;
            let (relation, text) = match compare(&a, &b)? {
                Some(std::cmp::Ordering::Less) => ("less", format!("{a} < {b}")),
                Some(std::cmp::Ordering::Greater) => ("greater", format!("{b} < {a}")),
                Some(std::cmp::Ordering::Equal) => ("equal", format!("{a} = {b}")),
                None => ("incomparable", format!("{a} and {b} are incomparable")),
            };
            let code = if matches!(relation, "less" | "equal") {
                EXIT_OK
            } else {
                EXIT_FALSE
            };
            let out = render(
                cli,
                || format!("{text}\n"),
                || json!({ "a": a.to_string(), "b": b.to_string(), "relation": relation }),
            );
            Ok((code, out))
        }
        Command::Poset { p, q } => {
            let sig = guarded(cli, *p, *q)?;
            let poset = build_poset(sig)?;
            Ok((
                EXIT_OK,
                match cli.format {
                    Format::Text => formats::hasse_text(&poset),
                    Format::Json => json_text(&formats::hasse_json(&poset)),
                    Format::Dot => formats::hasse_dot(&poset),
                },
            ))
        }
        Command::Interval { p, q, bottom, top } => {
            no_dot(cli, "interval")?;
            let sig = guarded(cli, *p, *q)?;
            let (bottom, top) = (clan_arg(bottom, Some(sig))?, clan_arg(top, Some(sig))?);
            let poset = build_poset(sig)?;
            let report = interval(&poset, &bottom, &top)?;
            Ok((
                EXIT_OK,
                render(
                    cli,
                    || formats::interval_text(&report),
                    || formats::interval_json(&report),
                ),
            ))
        }
        Command::Properties { p, q } => {
            no_dot(cli, "properties")?;
            let sig = guarded(cli, *p, *q)?;
            let props = poset_properties(&build_poset(sig)?);
            Ok((
                EXIT_OK,
                render(
                    cli,
                    || formats::properties_text(&props),
                    || formats::properties_json(&props),
                ),
            ))
        }
        Command::Rep { clan, signature } => {
            no_dot(cli, "rep")?;
            let clan = clan_arg(clan, *signature)?;
            let flag = yamamoto_representative(&clan);
            Ok((
                EXIT_OK,
                match cli.format {
                    Format::Json => {
                        let mut s = formats::write_flag(&flag);
                        s.push('\n');
                        s
                    }
                    _ => format!("{}\n", formats::flag_text(&flag)),
                },
            ))
        }
        Command::Orbit { flagfile, p, q } => {
            no_dot(cli, "orbit")?;
            let sig = signature(*p, *q)?;
            let flag = read_flag(flagfile)?;
            let clan = orbit_of(&flag, &SplitSpaces::new(sig))?;
            Ok((
                EXIT_OK,
                render(
                    cli,
                    || format!("{clan}\n"),
                    || json!({ "clan": clan.to_string() }),
                ),
            ))
        }
        Command::Closure {
            flagfile,
            clan,
            p,
            q,
        } => {
            no_dot(cli, "closure")?;
            let sig = signature(*p, *q)?;
            let tau = clan_arg(clan, Some(sig))?;
            let flag = read_flag(flagfile)?;
            let member = in_closure(&flag, &tau, &SplitSpaces::new(sig))?;
            let text = if member {
                format!("flag lies in the closure of the orbit of {tau}\n")
            } else {
                format!("flag does not lie in the closure of the orbit of {tau}\n")
            };
            let out = render(
                cli,
                || text,
                || json!({ "clan": tau.to_string(), "in_closure": member }),
            );
            Ok((if member { EXIT_OK } else { EXIT_FALSE }, out))
        }
        Command::Curves { samples } => {
            no_dot(cli, "curves")?;
            let samples = samples.clone().unwrap_or_else(default_samples);
            run_curves(cli, &samples)
        }
        Command::Verify { p, q } => {
            no_dot(cli, "verify")?;
            let sig = guarded(cli, *p, *q)?;
            let report = verify(sig);
            let code = if report.passed() {
                EXIT_OK
            } else {
                EXIT_VERIFICATION
            };
            let out = render(
                cli,
                || {
                    let mut s = format!("verification of signature {sig}\n");
                    for suite in &report.suites {
                        s.push_str(&format!("{suite}\n"));
                    }
                    s
                },
                || {
                    json!({
                        "signature": { "p": sig.p(), "q": sig.q() },
                        "passed": report.passed(),
                        "suites": report.suites.iter().map(|s| json!({
                            "name": s.name,
                            "passed": s.passed,
                            "checks": s.checks,
                            "detail": s.detail,
                        })).collect::<Vec<_>>(),
                    })
                },
            );
            Ok((code, out))
        }
    }
}

fn run_curves(cli: &Cli, samples: &[Rational]) -> Step {
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    let mut all_passed = true;
    for case in standard_cases() {
        let label = format!("{} on {}", case.instance(), case.source());
        match curve_check(&case, samples) {
            Ok(report) => {
                lines.push(format!(
                    "PASS {label}: E = {}, F = {}",
                    formats::flag_text(&report.lower),
                    formats::flag_text(&report.upper)
                ));
                rows.push(
                    json!({ "case": label, "target": report.target.to_string(), "passed": true }),
                );
            }
            Err(Error::ZeroSample) => return Err(input("curve parameters must be nonzero")),
            Err(e) => {
                all_passed = false;
                lines.push(format!("FAIL {label}: {e}"));
                rows.push(json!({ "case": label, "passed": false, "error": e.to_string() }));
            }
        }
    }
    let samples_text: Vec<String> = samples.iter().map(ToString::to_string).collect();
    let out = render(
        cli,
        || {
            format!(
                "samples t = {}\n{}\n",
                samples_text.join(", "),
                lines.join("\n")
            )
        },
        || json!({ "samples": samples_text, "cases": rows, "passed": all_passed }),
    );
    Ok((
        if all_passed {
            EXIT_OK
        } else {
            EXIT_VERIFICATION
        },
        out,
    ))
}
