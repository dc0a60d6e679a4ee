//! `tmat`: verify and transform matroids over tracts from JSON files.
//!
//! Exit codes: 0 pass, 1 verified failure (witness in the report), 2 invalid
//! input or usage.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tract_matroids::axioms::{
    check_circuit_axioms, check_dual_pair, circuit_minor, cocircuits_checked, cocircuits_of,
    pushforward_circuits, AxiomMode, CircuitSet, CocircuitStrategy,
};
use tract_matroids::catalog::{run_example, EXAMPLE_NAMES};
use tract_matroids::gp::{
    check_gp, circuits_from_gp, dual_gp, enumerate_gp, gp_from_circuits, gp_minor, EnumCaps, GpMode,
};
use tract_matroids::homs;
use tract_matroids::io::{self, CircuitFile, GpFile};
use tract_matroids::matroid::MinorOp;
use tract_matroids::tract::{
    is_doubly_distributive, verify_tract_axioms, CheckBudget, Status, Tract, TractHom,
};
use tract_matroids::tracts::{
    Boundary, DyadicPartialField, FieldTract, Fp, InitialTract, Krasner, PhaseHyperfield,
    RegularPartialField, SignHyperfield, TriangleHyperfield, TropicalHyperfield,
    WeakSignHyperfield,
};
use tract_matroids::Rational;

#[derive(Parser)]
#[command(name = "tmat", version, about = "Matroids over tracts")]
struct Cli {
    /// Print single-line JSON instead of pretty-printed JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for sampled checks, in hex.
    #[arg(long, global = true, default_value = "0xB0B1")]
    seed: String,
    /// Null tolerance for the phase hyperfield.
    #[arg(long, global = true, default_value_t = 1e-6)]
    tol: f64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Tract axioms and double distributivity.
    #[command(subcommand)]
    Tract(TractCmd),
    /// Grassmann-Plücker functions.
    #[command(subcommand)]
    Gp(GpCmd),
    /// Circuit sets.
    #[command(subcommand)]
    Matroid(MatroidCmd),
    /// All weak GP functions of a given rank and size, up to scaling.
    Enumerate {
        #[arg(long)]
        tract: String,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        elements: usize,
    },
    /// Bundled examples.
    #[command(subcommand)]
    Examples(ExamplesCmd),
}

#[derive(Subcommand)]
enum TractCmd {
    Verify {
        #[arg(long)]
        tract: String,
    },
    Ddcheck {
        #[arg(long)]
        tract: String,
    },
}

#[derive(Args)]
struct Input {
    /// JSON file, or `-` for stdin.
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args)]
struct MinorArgs {
    /// Comma-separated 1-based elements.
    #[arg(long, default_value = "")]
    set: String,
    #[arg(long, value_enum)]
    op: Op,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Delete,
    Contract,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Weak,
    Strong,
    C3pp,
}

#[derive(Subcommand)]
enum GpCmd {
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "strong")]
        mode: Mode,
    },
    Circuits {
        #[command(flatten)]
        input: Input,
        /// List every unit multiple (finite tracts).
        #[arg(long)]
        orbit: bool,
    },
    Dual {
        #[command(flatten)]
        input: Input,
    },
    Minor {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        minor: MinorArgs,
    },
    /// GP function from a circuit-set file.
    Reconstruct {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Subcommand)]
enum MatroidCmd {
    CheckCircuits {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "strong")]
        mode: Mode,
    },
    Cocircuits {
        #[command(flatten)]
        input: Input,
        /// dual_gp, signature, brute, or all (cross-checked).
        #[arg(long, default_value = "all")]
        strategy: String,
    },
    DualPair {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        cocircuits: PathBuf,
        #[arg(long, value_enum, default_value = "strong")]
        mode: Mode,
    },
    Minor {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        minor: MinorArgs,
    },
    Pushforward {
        #[command(flatten)]
        input: Input,
        /// psi, sigma, u0-sign, u0-gf2, u0-gf3, vp:<p>, sign-weak, identity
        #[arg(long)]
        hom: String,
    },
}

#[derive(Subcommand)]
enum ExamplesCmd {
    List,
    Run { name: String },
}

struct Opts {
    tol: f64,
    budget: CheckBudget,
}

/// Report plus exit code.
struct Outcome {
    report: Value,
    code: u8,
}

impl Outcome {
    fn data(report: Value) -> Self {
        Outcome { report, code: 0 }
    }

    fn verdict(report: Value, pass: bool) -> Self {
        Outcome {
            report,
            code: if pass { 0 } else { 1 },
        }
    }
}

/// Binds `$t` to the tract named `$id` and evaluates `$body` for it.
macro_rules! with_tract {
    ($id:expr, $opts:expr, |$t:ident| $body:expr) => {{
        let id: &str = $id;
        match id {
            "krasner" => {
                let $t = Krasner;
                $body
            }
            "sign" => {
                let $t = SignHyperfield;
                $body
            }
            "weaksign" => {
                let $t = WeakSignHyperfield;
                $body
            }
            "initial" => {
                let $t = InitialTract;
                $body
            }
            "pf:regular" => {
                let $t = RegularPartialField;
                $body
            }
            "pf:dyadic" => {
                let $t = DyadicPartialField;
                $body
            }
            "field:gf2" => {
                let $t = FieldTract::<Fp<2>>::new();
                $body
            }
            "field:gf3" => {
                let $t = FieldTract::<Fp<3>>::new();
                $body
            }
            "field:q" => {
                let $t = FieldTract::<Rational>::new();
                $body
            }
            "tropical" => {
                let $t = TropicalHyperfield::<Rational>::new();
                $body
            }
            "triangle" => {
                let $t = TriangleHyperfield::<Rational>::new();
                $body
            }
            "phase" | "phase:closed" => {
                let mut $t = PhaseHyperfield::<f64>::with_null_tol($opts.tol);
                if id == "phase:closed" {
                    $t.boundary = Boundary::Closed;
                }
                $body
            }
            other => Err(anyhow!("unknown tract identifier `{other}`")),
        }
    }};
}

fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load<D: for<'de> serde::Deserialize<'de>>(path: &PathBuf) -> Result<D> {
    Ok(io::from_json(&read_input(path)?)?)
}

fn parse_seed(s: &str) -> Result<u64> {
    let digits = s.trim_start_matches("0x").trim_start_matches("0X");
    u64::from_str_radix(digits, 16).map_err(|_| anyhow!("seed `{s}` is not hexadecimal"))
}

fn parse_set(s: &str, m: usize) -> Result<tract_matroids::Subset> {
    Ok(io::subset_from_key(s, m)?)
}

fn minor_op(op: Op) -> MinorOp {
    match op {
        Op::Delete => MinorOp::Delete,
        Op::Contract => MinorOp::Contract,
    }
}

fn axiom_mode(mode: Mode) -> AxiomMode {
    match mode {
        Mode::Weak => AxiomMode::Weak,
        Mode::Strong => AxiomMode::Strong,
        Mode::C3pp => AxiomMode::C3pp,
    }
}

fn to_value<S: serde::Serialize>(s: &S) -> Value {
    serde_json::to_value(s).expect("serializable report")
}

fn load_circuits<T: Tract>(t: &T, f: &CircuitFile) -> Result<CircuitSet<T::Unit>> {
    Ok(io::circuits_from_file(t, f)?)
}

fn orbit_file<T: Tract>(t: &T, c: &CircuitSet<T::Unit>) -> Result<Value> {
    let all = c.orbit(t)?;
    Ok(json!({
        "tract": t.id(),
        "ground_set": c.ground_size(),
        "circuits": all.iter().map(|x| x.format(t)).collect::<Vec<_>>(),
    }))
}

fn tract_cmd(cmd: TractCmd, opts: &Opts) -> Result<Outcome> {
    match cmd {
        TractCmd::Verify { tract } => with_tract!(&tract, opts, |t| {
            let r = verify_tract_axioms(&t, &opts.budget);
            Ok(Outcome::verdict(to_value(&r), !r.status.is_failure()))
        }),
        TractCmd::Ddcheck { tract } => with_tract!(&tract, opts, |t| {
            let v = is_doubly_distributive(&t, &opts.budget);
            Ok(Outcome::verdict(v.to_json(&t), v.status != Status::Fail))
        }),
    }
}

fn gp_cmd(cmd: GpCmd, opts: &Opts) -> Result<Outcome> {
    match cmd {
        GpCmd::Check { input, mode } => {
            let f: GpFile = load(&input.input)?;
            let mode = match mode {
                Mode::Weak => GpMode::Weak,
                Mode::Strong => GpMode::Strong,
                Mode::C3pp => bail!("mode c3pp applies to circuit sets"),
            };
            with_tract!(&f.tract, opts, |t| {
                let phi = io::gp_from_file(&t, &f)?;
                let r = check_gp(&t, &phi, mode);
                Ok(Outcome::verdict(to_value(&r), r.passed()))
            })
        }
        GpCmd::Circuits { input, orbit } => {
            let f: GpFile = load(&input.input)?;
            with_tract!(&f.tract, opts, |t| {
                let phi = io::gp_from_file(&t, &f)?;
                let c = CircuitSet::new(&t, phi.ground_size(), circuits_from_gp(&t, &phi)?)?;
                let v = if orbit {
                    orbit_file(&t, &c)?
                } else {
                    to_value(&io::circuits_to_file(&t, &c))
                };
                Ok(Outcome::data(v))
            })
        }
        GpCmd::Dual { input } => {
            let f: GpFile = load(&input.input)?;
            with_tract!(&f.tract, opts, |t| {
                let phi = io::gp_from_file(&t, &f)?;
                Ok(Outcome::data(to_value(&io::gp_to_file(
                    &t,
                    &dual_gp(&t, &phi),
                ))))
            })
        }
        GpCmd::Minor { input, minor } => {
            let f: GpFile = load(&input.input)?;
            let a = parse_set(&minor.set, f.ground_set)?;
            with_tract!(&f.tract, opts, |t| {
                let phi = io::gp_from_file(&t, &f)?;
                let out = gp_minor(&t, &phi, a, minor_op(minor.op))?;
                Ok(Outcome::data(to_value(&io::gp_to_file(&t, &out))))
            })
        }
        GpCmd::Reconstruct { input } => {
            let f: CircuitFile = load(&input.input)?;
            with_tract!(&f.tract, opts, |t| {
                let c = load_circuits(&t, &f)?;
                let phi = gp_from_circuits(&t, c.ground_size(), c.reps())?;
                Ok(Outcome::data(to_value(&io::gp_to_file(&t, &phi))))
            })
        }
    }
}

fn pushforward<H: TractHom>(h: &H, f: &CircuitFile) -> Result<Outcome> {
    let c = load_circuits(h.source(), f)?;
    let out = pushforward_circuits(h, &c)?;
    Ok(Outcome::data(to_value(&io::circuits_to_file(
        h.target(),
        &out,
    ))))
}

fn require(f: &CircuitFile, id: &str, hom: &str) -> Result<()> {
    if f.tract != id {
        bail!(
            "homomorphism `{hom}` needs a `{id}` circuit set, got `{}`",
            f.tract
        );
    }
    Ok(())
}

fn pushforward_cmd(f: &CircuitFile, hom: &str, opts: &Opts) -> Result<Outcome> {
    match hom {
        "psi" => with_tract!(&f.tract, opts, |t| pushforward(&homs::psi(t), f)),
        "identity" => with_tract!(&f.tract, opts, |t| pushforward(&homs::identity(t), f)),
        "sigma" => {
            require(f, "field:q", hom)?;
            pushforward(&homs::sigma(), f)
        }
        "u0-sign" | "u0-gf2" | "u0-gf3" => {
            require(f, "pf:regular", hom)?;
            match hom {
                "u0-sign" => pushforward(&homs::from_regular(SignHyperfield), f),
                "u0-gf2" => pushforward(&homs::from_regular(FieldTract::<Fp<2>>::new()), f),
                _ => pushforward(&homs::from_regular(FieldTract::<Fp<3>>::new()), f),
            }
        }
        "sign-weak" => {
            require(f, "sign", hom)?;
            pushforward(&homs::sign_to_weak(), f)
        }
        _ => match hom.strip_prefix("vp:").map(str::parse::<u32>) {
            Some(Ok(p)) if p >= 2 => {
                require(f, "field:q", hom)?;
                pushforward(&homs::vp(p), f)
            }
            _ => bail!("unknown homomorphism `{hom}`"),
        },
    }
}

fn matroid_cmd(cmd: MatroidCmd, opts: &Opts) -> Result<Outcome> {
    match cmd {
        MatroidCmd::CheckCircuits { input, mode } => {
            let f: CircuitFile = load(&input.input)?;
            with_tract!(&f.tract, opts, |t| {
                let c = load_circuits(&t, &f)?;
                let r = check_circuit_axioms(&t, &c, axiom_mode(mode));
                Ok(Outcome::verdict(to_value(&r), r.passed()))
            })
        }
        MatroidCmd::Cocircuits { input, strategy } => {
            let f: CircuitFile = load(&input.input)?;
            with_tract!(&f.tract, opts, |t| {
                let c = load_circuits(&t, &f)?;
                let d = if strategy == "all" {
                    cocircuits_checked(&t, &c)?
                } else {
                    cocircuits_of(&t, &c, CocircuitStrategy::parse(&strategy)?)?
                };
                Ok(Outcome::data(to_value(&io::circuits_to_file(&t, &d))))
            })
        }
        MatroidCmd::DualPair {
            input,
            cocircuits,
            mode,
        } => {
            let f: CircuitFile = load(&input.input)?;
            let g: CircuitFile = load(&cocircuits)?;
            if f.tract != g.tract {
                bail!("tracts differ: `{}` and `{}`", f.tract, g.tract);
            }
            let mode = match mode {
                Mode::Weak => AxiomMode::Weak,
                Mode::Strong => AxiomMode::Strong,
                Mode::C3pp => bail!("mode c3pp applies to circuit axioms"),
            };
            with_tract!(&f.tract, opts, |t| {
                let c = load_circuits(&t, &f)?;
                let d = load_circuits(&t, &g)?;
                let r = check_dual_pair(&t, &c, &d, mode);
                Ok(Outcome::verdict(to_value(&r), r.passed()))
            })
        }
        MatroidCmd::Minor { input, minor } => {
            let f: CircuitFile = load(&input.input)?;
            let a = parse_set(&minor.set, f.ground_set)?;
            with_tract!(&f.tract, opts, |t| {
                let c = load_circuits(&t, &f)?;
                let out = circuit_minor(&t, &c, a, minor_op(minor.op));
                Ok(Outcome::data(to_value(&io::circuits_to_file(&t, &out))))
            })
        }
        MatroidCmd::Pushforward { input, hom } => {
            let f: CircuitFile = load(&input.input)?;
            pushforward_cmd(&f, &hom, opts)
        }
    }
}

fn enumerate_cmd(tract: &str, rank: usize, elements: usize, opts: &Opts) -> Result<Outcome> {
    with_tract!(tract, opts, |t| {
        let found = enumerate_gp(&t, rank, elements, &EnumCaps::default())?;
        let strong = found.iter().filter(|g| g.strong).count();
        let list: Vec<Value> = found
            .iter()
            .map(|g| json!({ "values": io::gp_to_file(&t, &g.phi).values, "strong": g.strong }))
            .collect();
        Ok(Outcome::data(json!({
            "tract": t.id(),
            "rank": rank,
            "ground_set": elements,
            "classes": found.len(),
            "strong_classes": strong,
            "functions": list,
        })))
    })
}

fn examples_cmd(cmd: ExamplesCmd) -> Result<Outcome> {
    match cmd {
        ExamplesCmd::List => Ok(Outcome::data(json!(EXAMPLE_NAMES))),
        ExamplesCmd::Run { name } => {
            let out = run_example(&name)?;
            let ok = out.matches();
            Ok(Outcome::verdict(to_value(&out), ok))
        }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    let opts = Opts {
        tol: cli.tol,
        budget: CheckBudget {
            seed: parse_seed(&cli.seed)?,
            ..CheckBudget::default()
        },
    };
    match cli.cmd {
        Cmd::Tract(c) => tract_cmd(c, &opts),
        Cmd::Gp(c) => gp_cmd(c, &opts),
        Cmd::Matroid(c) => matroid_cmd(c, &opts),
        Cmd::Enumerate {
            tract,
            rank,
            elements,
        } => enumerate_cmd(&tract, rank, elements, &opts),
        Cmd::Examples(c) => examples_cmd(c),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let compact = cli.json;
    match run(cli) {
        Ok(out) => {
            let text = if compact {
                serde_json::to_string(&out.report)
            } else {
                serde_json::to_string_pretty(&out.report)
            };
            println!("{}", text.expect("json"));
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
