//! `mcq`: Hilbert series, Frobenius series and Charney–Davis quantities of
//! (augmented) Chow rings of matroids, plus the verification suites.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mcq_core::charney::{cd_descents, cd_determinant, cd_eval, cd_secant, CdReport};
use mcq_core::chowfy::{cd_of_hilbert, grfrob_uniform, hilb, hilb_q_uniform, MatroidFlats};
use mcq_core::eulerian::{q0, q_eulerian, qtilde};
use mcq_core::permstat::{eulerian_a_q, eulerian_binomial_q, eulerian_d_q};
use mcq_core::rankselect::{cd_character, flag_h, GroundPerm};
use mcq_core::render::{self, OutFormat};
use mcq_core::verify::{self, Config, Suite};
use mcq_core::{Error, LaurentQT, Subset, Variant};

#[derive(Parser)]
#[command(
    name = "mcq",
    version,
    about = "Exact invariants of Chow rings of matroids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert series of a Chow ring or augmented Chow ring.
    Hilb(HilbArgs),
    /// Graded Frobenius series of a uniform matroid, in the fundamental basis.
    Frob(FrobArgs),
    /// Eulerian polynomials and Eulerian quasisymmetric functions.
    Eulerian(EulerianArgs),
    /// Charney–Davis quantity of a q-uniform matroid by several routes.
    Cd(CdArgs),
    /// Validate a matroid file and print its invariants.
    Matroid(MatroidArgs),
    /// Run verification suites; prints a JSON report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Uniform,
    Quniform,
    File,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Chow,
    Aug,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Chow => Variant::Chow,
            VariantArg::Aug => Variant::Augmented,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Out {
    Json,
    Csv,
    Latex,
}

impl From<Out> for OutFormat {
    fn from(o: Out) -> Self {
        match o {
            Out::Json => OutFormat::Json,
            Out::Csv => OutFormat::Csv,
            Out::Latex => OutFormat::Latex,
        }
    }
}

#[derive(Args)]
struct HilbArgs {
    #[arg(long, value_enum, default_value = "uniform")]
    family: Family,
    #[arg(short)]
    r: Option<usize>,
    #[arg(short)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value = "chow")]
    variant: VariantArg,
    /// Matroid file (`--family file`).
    #[arg(long)]
    flats: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "latex")]
    out: Out,
}

#[derive(Args)]
struct FrobArgs {
    #[arg(short)]
    r: usize,
    #[arg(short)]
    n: usize,
    #[arg(long, value_enum, default_value = "chow")]
    variant: VariantArg,
    #[arg(long, value_enum, default_value = "latex")]
    out: Out,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    /// `A_n`
    A,
    /// `d_n`
    D,
    /// binomial Eulerian polynomial
    Binomial,
    /// `Q_n(x,t)`
    Q,
    /// `Q_n^0(x,t)`
    Q0,
    /// binomial Eulerian quasisymmetric function
    Qtilde,
}

#[derive(Args)]
struct EulerianArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(short)]
    n: usize,
    /// Keep q symbolic (polynomial kinds only); otherwise q = 1.
    #[arg(long)]
    q: bool,
    #[arg(long, value_enum, default_value = "latex")]
    out: Out,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Eval,
    Descents,
    Secant,
    Determinant,
    All,
}

#[derive(Args)]
struct CdArgs {
    #[arg(short)]
    r: usize,
    #[arg(short)]
    n: usize,
    #[arg(long, value_enum, default_value = "chow")]
    variant: VariantArg,
    #[arg(long, value_enum, default_value = "all")]
    method: Method,
    #[arg(long, value_enum, default_value = "latex")]
    out: Out,
}

#[derive(Args)]
struct MatroidArgs {
    #[arg(long)]
    flats: PathBuf,
    #[arg(long, value_enum, default_value = "chow")]
    variant: VariantArg,
    /// Automorphism in cycle notation, e.g. "(1 2)(3 4)"; repeatable.
    /// Defaults to the file's "automorphisms" list.
    #[arg(long = "aut")]
    auts: Vec<String>,
    #[arg(long, value_enum, default_value = "latex")]
    out: Out,
}

#[derive(Args)]
struct VerifyArgs {
    /// all, arith, perms, qsym, eulerian, hilbert, frobenius, rankselect or cd.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Omit per-check timings so repeated runs print identical reports.
    #[arg(long)]
    no_timing: bool,
}

enum Failure {
    Usage(String),
    Input(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(v) = std::env::var("MCQ_MAX_N") {
        match v.trim().parse::<usize>() {
            Ok(n) => mcq_core::guard::set_override(Some(n)),
            Err(_) => {
                eprintln!("mcq: MCQ_MAX_N must be a nonnegative integer, got {v:?}");
                return ExitCode::from(2);
            }
        }
    }
    match run(cli.command) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("mcq: usage: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("mcq: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Core(e)) => {
            let (module, code) = match &e {
                Error::Identity { .. } => ("identity", 1),
                Error::Internal(_) => ("exactalg", 1),
                Error::Argument(_) => ("input", 3),
                Error::Matroid(_) => ("chowfy", 3),
                Error::Guard { .. } => ("guard", 4),
            };
            eprintln!("mcq: [{module}] {e}");
            ExitCode::from(code)
        }
    }
}

/// Rendered output and exit status.
fn run(cmd: Command) -> Result<(String, u8), Failure> {
    let text = match cmd {
        Command::Hilb(a) => cmd_hilb(a),
        Command::Frob(a) => {
            let x = grfrob_uniform(a.r, a.n, a.variant.into())?;
            Ok(render::qsym(&x, a.out.into()))
        }
        Command::Eulerian(a) => cmd_eulerian(a),
        Command::Cd(a) => cmd_cd(a),
        Command::Matroid(a) => cmd_matroid(a),
        Command::Verify(a) => return cmd_verify(a),
    };
    text.map(|t| (t, 0))
}

fn read_matroid(path: &PathBuf) -> Result<(MatroidFlats, Vec<GroundPerm>), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    Ok(verify::load_matroid(&text)?)
}

fn cmd_hilb(a: HilbArgs) -> Result<String, Failure> {
    let v: Variant = a.variant.into();
    let h = match a.family {
        Family::File => {
            if a.r.is_some() || a.n.is_some() {
                return Err(Failure::Usage(
                    "-r and -n do not apply to --family file".into(),
                ));
            }
            let path = a
                .flats
                .ok_or_else(|| Failure::Usage("--family file needs --flats PATH".into()))?;
            hilb(&read_matroid(&path)?.0, v)?
        }
        family => {
            if a.flats.is_some() {
                return Err(Failure::Usage("--flats needs --family file".into()));
            }
            let r = a.r.ok_or_else(|| Failure::Usage("missing -r".into()))?;
            let n = a.n.ok_or_else(|| Failure::Usage("missing -n".into()))?;
            match family {
                Family::Quniform => hilb_q_uniform(r, n, v)?,
                _ => hilb(&MatroidFlats::uniform(r, n)?, v)?,
            }
        }
    };
    Ok(render::laurent(&h, a.out.into()))
}

fn cmd_eulerian(a: EulerianArgs) -> Result<String, Failure> {
    let n = a.n;
    let poly = |p: LaurentQT| if a.q { p } else { p.eval_q_one() };
    let out = a.out.into();
    match a.kind {
        Kind::A => Ok(render::laurent(&poly(eulerian_a_q(n)?), out)),
        Kind::D => Ok(render::laurent(&poly(eulerian_d_q(n)?), out)),
        Kind::Binomial => Ok(render::laurent(&poly(eulerian_binomial_q(n)?), out)),
        kind => {
            if a.q {
                return Err(Failure::Usage(
                    "--q applies only to the kinds a, d and binomial".into(),
                ));
            }
            let x = match kind {
                Kind::Q => q_eulerian(n)?,
                Kind::Q0 => q0(n)?,
                _ => qtilde(n)?,
            };
            Ok(render::qsym(&x, out))
        }
    }
}

fn cmd_cd(a: CdArgs) -> Result<String, Failure> {
    let v: Variant = a.variant.into();
    let out = a.out.into();
    let single = match a.method {
        Method::All => return Ok(render::cd_report(&CdReport::compute(a.r, a.n, v)?, out)),
        Method::Eval => cd_eval(a.r, a.n, v)?,
        Method::Descents => cd_descents(a.r, a.n, v)?,
        Method::Secant => cd_secant(a.r, a.n, v)?,
        Method::Determinant => cd_determinant(a.r, a.n, v)?,
    };
    Ok(render::laurent(&single, out))
}

fn cmd_matroid(a: MatroidArgs) -> Result<String, Failure> {
    let v: Variant = a.variant.into();
    let (m, listed) = read_matroid(&a.flats)?;
    let auts = if a.auts.is_empty() {
        if listed.is_empty() {
            vec![GroundPerm::identity(m.ground_size())]
        } else {
            listed
        }
    } else {
        a.auts
            .iter()
            .map(|s| GroundPerm::parse_cycles(s, m.ground_size()))
            .collect::<Result<_, _>>()?
    };
    let deg = v.top_degree(m.rank());
    let h = hilb(&m, v)?;
    let cd = cd_of_hilbert(&h, deg);
    let flag: Vec<(Subset, i128)> = Subset::all_of(m.rank().saturating_sub(1))
        .map(|s| flag_h(&m, s).map(|x| (s, x)))
        .collect::<Result<_, _>>()?;
    let sign = if (deg / 2) % 2 == 1 { -1 } else { 1 };
    let chars: Vec<(String, i128)> = auts
        .iter()
        .map(|g| cd_character(&m, g, v).map(|x| (g.to_string(), sign * x)))
        .collect::<Result<_, _>>()?;

    Ok(match a.out {
        Out::Json => render::json(&json!({
            "ground": m.ground_size(),
            "flats": m.num_flats(),
            "rank": m.rank(),
            "variant": v.name(),
            "valid": true,
            "hilbert": h.to_json(),
            "cd": cd.to_json(),
            "flag_h": flag.iter().map(|(s, x)| json!({"set": s.elems(), "value": x.to_string()})).collect::<Vec<Value>>(),
            "characters": chars.iter().map(|(g, x)| json!({"element": g, "cd": x.to_string()})).collect::<Vec<Value>>(),
        })),
        Out::Csv => {
            let mut s = String::from("section,key,value\n");
            s += &format!(
                "summary,ground,{}\nsummary,flats,{}\nsummary,rank,{}\n",
                m.ground_size(),
                m.num_flats(),
                m.rank()
            );
            s += &format!("summary,hilbert,{h}\nsummary,cd,{cd}\n");
            for (set, x) in &flag {
                s += &format!("flag_h,{set},{x}\n");
            }
            for (g, x) in &chars {
                s += &format!("character,{g},{x}\n");
            }
            s
        }
        Out::Latex => {
            let mut s = format!(
                "valid matroid on {} elements with {} flats\nrank: {}\nvariant: {v}\nhilbert: {h}\ncd: {cd}\nflag h-vector:\n",
                m.ground_size(),
                m.num_flats(),
                m.rank()
            );
            for (set, x) in &flag {
                s += &format!("  {set}: {x}\n");
            }
            s += "cd character:\n";
            for (g, x) in &chars {
                s += &format!("  {g}: {x}\n");
            }
            s
        }
    })
}

fn cmd_verify(a: VerifyArgs) -> Result<(String, u8), Failure> {
    let suites = Suite::parse_selection(&a.suite).map_err(|e| Failure::Usage(e.to_string()))?;
    let report = verify::run(
        &suites,
        &Config {
            max_n: a.max_n,
            seed: a.seed,
        },
    );
    let code = if report.passed() {
        0
    } else if report.hit_guard() {
        4
    } else {
        1
    };
    Ok((render::json(&report.to_json(!a.no_timing)), code))
}
