//! `skb`: command line access to the skew brace toolkit.
//!
//! Exit codes: 0 when the check holds, 1 on a negative verdict, 2 on usage,
//! parse or validation errors.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use skb_core::brace::check_brace_axiom;
use skb_core::commutator::{center, centralizer, huq_commutator};
use skb_core::congruence::quotient_brace;
use skb_core::enumerate::enumerate_braces;
use skb_core::format::{parse_brace_file, serialize_brace, serialize_ybe};
use skb_core::ideal::all_ideals;
use skb_core::smith::{verify_huq_equals_smith, verify_huq_equals_smith_digroup, HuqSmithEntry};
use skb_core::theta::{counterexample_report, ThetaTwistSpec};
use skb_core::ybe::build_r;
use skb_core::{Digroup, FiniteGroup, Limits, SkewBrace, Subset};

#[derive(Parser)]
#[command(
    name = "skb",
    version,
    about = "Finite skew braces: verification, ideals, commutators, YBE solutions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the brace identity.
    Verify {
        file: PathBuf,
    },
    /// List every ideal.
    Ideals {
        file: PathBuf,
    },
    /// Huq commutator of two ideals.
    Commutator {
        file: PathBuf,
        #[arg(long)]
        ideal_a: String,
        #[arg(long)]
        ideal_b: String,
    },
    /// Largest ideal commuting with the given one.
    Centralizer {
        file: PathBuf,
        #[arg(long)]
        ideal: String,
    },
    Center {
        file: PathBuf,
    },
    /// Compare Smith connectors with Huq commutation on every congruence pair.
    HuqSmith {
        file: PathBuf,
    },
    /// Check the induced Yang–Baxter solution.
    Ybe {
        file: PathBuf,
        #[arg(long)]
        export: Option<PathBuf>,
    },
    Quotient {
        file: PathBuf,
        #[arg(long)]
        ideal: String,
    },
    /// Huq and Smith on the θ-twisted digroup over Z/base.
    Counterexample {
        #[arg(long)]
        base: usize,
        #[arg(long)]
        a: usize,
    },
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        up_to_iso: bool,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

/// Printed report and exit code.
struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }

    fn negative(text: String) -> Self {
        Outcome { text, code: 1 }
    }
}

type Failure = String;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = Limits::from_env();
    match run(cli.command, &limits) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            ExitCode::from(outcome.code)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path, limits: &Limits) -> Result<Digroup, Failure> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_brace_file(&text, limits).map_err(|e| format!("{}: {e}", path.display()))
}

/// Loads a brace, or the negative verdict when the file is a digroup only.
fn load_brace(path: &Path, limits: &Limits) -> Result<Result<SkewBrace, Outcome>, Failure> {
    let d = load(path, limits)?;
    if let Some([a, b, c]) = check_brace_axiom(&d).witness {
        return Ok(Err(Outcome::negative(format!(
            "brace: FAIL; witness: {a},{b},{c}\n"
        ))));
    }
    SkewBrace::with_limits(d, *limits)
        .map(Ok)
        .map_err(|e| e.to_string())
}

fn parse_set(csv: &str, n: usize) -> Result<Subset, Failure> {
    let elements = csv
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("malformed element list {csv:?}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Subset::new(n, elements).map_err(|e| e.to_string())
}

macro_rules! brace_or_verdict {
    ($path:expr, $limits:expr) => {
        match load_brace($path, $limits)? {
            Ok(b) => b,
            Err(outcome) => return Ok(outcome),
        }
    };
}

fn run(command: Command, limits: &Limits) -> Result<Outcome, Failure> {
    let err = |e: skb_core::Error| e.to_string();
    match command {
        Command::Verify { file } => {
            let _ = brace_or_verdict!(&file, limits);
            Ok(Outcome::ok("brace: OK\n".into()))
        }
        Command::Ideals { file } => {
            let b = brace_or_verdict!(&file, limits);
            let ideals = all_ideals(&b).map_err(err)?;
            let mut out = String::new();
            for ideal in ideals {
                writeln!(out, "{}", ideal.to_csv()).unwrap();
            }
            Ok(Outcome::ok(out))
        }
        Command::Commutator {
            file,
            ideal_a,
            ideal_b,
        } => {
            let b = brace_or_verdict!(&file, limits);
            let (i, j) = (
                parse_set(&ideal_a, b.order())?,
                parse_set(&ideal_b, b.order())?,
            );
            let report = huq_commutator(&b, &i, &j).map_err(err)?;
            let g = &report.generators;
            Ok(Outcome::ok(format!(
                "set1: {}\nset2: {}\nset3: {}\ncommutator: {}\n",
                g.circ_commutators.to_csv(),
                g.star_commutators.to_csv(),
                g.mixed.to_csv(),
                report.commutator.to_csv()
            )))
        }
        Command::Centralizer { file, ideal } => {
            let b = brace_or_verdict!(&file, limits);
            let i = parse_set(&ideal, b.order())?;
            Ok(Outcome::ok(format!(
                "centralizer: {}\n",
                centralizer(&b, &i).map_err(err)?.to_csv()
            )))
        }
        Command::Center { file } => {
            let b = brace_or_verdict!(&file, limits);
            Ok(Outcome::ok(format!(
                "center: {}\n",
                center(&b).map_err(err)?.to_csv()
            )))
        }
        Command::HuqSmith { file } => {
            let d = load(&file, limits)?;
            let (mode, entries) = if check_brace_axiom(&d).holds() {
                let b = SkewBrace::with_limits(d, *limits).map_err(err)?;
                ("brace", verify_huq_equals_smith(&b).map_err(err)?)
            } else {
                (
                    "digroup",
                    verify_huq_equals_smith_digroup(&d, limits).map_err(err)?,
                )
            };
            Ok(huq_smith_outcome(mode, &entries))
        }
        Command::Ybe { file, export } => {
            let b = brace_or_verdict!(&file, limits);
            let report = build_r(&b);
            if let Some(path) = export {
                fs::write(&path, serialize_ybe(&report.map))
                    .map_err(|e| format!("{}: {e}", path.display()))?;
            }
            let mut out = format!("bijective: {}\n", report.is_bijection);
            match report.braid.witness {
                None => out.push_str("braid: true\n"),
                Some([x, y, z]) => writeln!(out, "braid: false; witness: {x},{y},{z}").unwrap(),
            }
            match report.nondegenerate.witness {
                None => out.push_str("nondegenerate: true\n"),
                Some(w) => writeln!(out, "nondegenerate: false; witness: {w:?}").unwrap(),
            }
            Ok(if report.is_solution() {
                Outcome::ok(out)
            } else {
                Outcome::negative(out)
            })
        }
        Command::Quotient { file, ideal } => {
            let b = brace_or_verdict!(&file, limits);
            let i = parse_set(&ideal, b.order())?;
            let q = quotient_brace(&b, &i).map_err(err)?;
            let projection: Vec<String> = q.projection.iter().map(usize::to_string).collect();
            Ok(Outcome::ok(format!(
                "projection: {}\n{}",
                projection.join(","),
                serialize_brace(q.brace.digroup())
            )))
        }
        Command::Counterexample { base, a } => counterexample(base, a),
        Command::Enumerate {
            order,
            up_to_iso,
            out_dir,
        } => {
            let braces = enumerate_braces(order, up_to_iso, limits).map_err(err)?;
            if let Some(dir) = &out_dir {
                fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
                for (k, b) in braces.iter().enumerate() {
                    let path = dir.join(format!("brace_n{order}_k{}.skb", k + 1));
                    fs::write(&path, serialize_brace(b.digroup()))
                        .map_err(|e| format!("{}: {e}", path.display()))?;
                }
            }
            let kind = if up_to_iso {
                "isomorphism classes"
            } else {
                "labelled braces"
            };
            Ok(Outcome::ok(format!(
                "order {order}: {} {kind}\n",
                braces.len()
            )))
        }
    }
}

fn huq_smith_outcome(mode: &str, entries: &[HuqSmithEntry]) -> Outcome {
    let mut out = String::new();
    for e in entries {
        writeln!(
            out,
            "R: {}; S: {}; huq: {}; smith: {}",
            e.r.zero_class().to_csv(),
            e.s.zero_class().to_csv(),
            e.huq,
            e.smith
        )
        .unwrap();
    }
    let failures = entries.iter().filter(|e| !e.agrees()).count();
    if failures == 0 {
        writeln!(out, "Huq=Smith ({mode}): holds on {} pairs", entries.len()).unwrap();
        Outcome::ok(out)
    } else {
        writeln!(
            out,
            "Huq=Smith ({mode}): fails on {failures} of {} pairs",
            entries.len()
        )
        .unwrap();
        Outcome::negative(out)
    }
}

fn counterexample(base: usize, a: usize) -> Result<Outcome, Failure> {
    if base == 0 {
        return Err("base must be positive".into());
    }
    let spec = ThetaTwistSpec::new(FiniteGroup::cyclic(base), a).map_err(|e| e.to_string())?;
    let report = counterexample_report(&spec).map_err(|e| e.to_string())?;
    let pair = |p: usize| {
        let (x, z) = spec.unpair(p);
        format!("({x},{z})")
    };
    let mut out = format!(
        "Huq: commute = {}; Smith connector: {}",
        report.huq_commutes,
        if report.connector_exists() {
            "present"
        } else {
            "absent"
        }
    );
    match report.witnesses().next() {
        Some(w) => {
            let [x, y, z] = w.triple;
            write!(
                out,
                "; witness: x = {}, y = {}, z = {}, x*y^-1*z = {}, x o y^-1 o z = {}",
                pair(x),
                pair(y),
                pair(z),
                pair(w.star_value),
                pair(w.circ_value)
            )
            .unwrap();
        }
        None => out.push_str("; witness: none"),
    }
    out.push('\n');
    Ok(if report.confirms_counterexample() {
        Outcome::ok(out)
    } else {
        Outcome::negative(out)
    })
}
