use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hypergruss::inequality::CheckConfig;
use hypergruss::{EvalConfig, QuadConfig};
use hypergruss_cli::eval::{run_eval, EvalInput, EvalMethod, EvalSettings, Function};
use hypergruss_cli::golden::{cmd_mint, cmd_verify};
use hypergruss_cli::grid::Range;
use hypergruss_cli::report::{write_records, Format};
use hypergruss_cli::sweep::{run_sweep, Checker, GridArgs, GrussArgs};
use hypergruss_cli::{exit, init_thread_pool};

#[derive(Parser)]
#[command(name = "hypergruss", version, about = "Hypergeometric evaluation and Grüss-type inequality sweeps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function at one point.
    Eval(EvalCmd),
    /// Certify an inequality family over a parameter grid.
    Check(Box<CheckCmd>),
    /// Mint or verify a golden reference file.
    Golden(GoldenCmd),
}

#[derive(Clone, Copy, ValueEnum)]
enum FunctionArg {
    #[value(name = "2f1")]
    Gauss2F1,
    #[value(name = "1f1")]
    Kummer1F1,
    Gghf,
    Gchf,
    Genbeta,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Series,
    Integral,
    Both,
}

#[derive(Args)]
struct EvalCmd {
    function: FunctionArg,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    z: Option<f64>,
    /// First generalized-beta argument.
    #[arg(long)]
    x: Option<f64>,
    /// Second generalized-beta argument.
    #[arg(long)]
    y: Option<f64>,
    #[arg(long, value_enum, default_value = "series")]
    method: MethodArg,
    /// Relative tolerance of series truncation.
    #[arg(long)]
    rel_tol: Option<f64>,
    #[arg(long)]
    max_terms: Option<usize>,
    /// Relative tolerance of the quadrature.
    #[arg(long)]
    quad_tol: Option<f64>,
    /// Deepest quadrature refinement level.
    #[arg(long)]
    max_level: Option<u32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Args)]
struct CheckCmd {
    /// prop, corollary-prop, thm-a, thm-i0, thm-b, thm-c, corollaries-p0 or gruss-random.
    #[arg(value_parser = parse_checker)]
    checker: Checker,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<Range>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<Range>,
    /// c = b + offset.
    #[arg(long, allow_hyphen_values = true)]
    c_offset: Option<Range>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<Range>,
    /// beta = alpha + offset.
    #[arg(long, allow_hyphen_values = true)]
    beta_offset: Option<Range>,
    #[arg(long, allow_hyphen_values = true)]
    p: Option<Range>,
    #[arg(long, allow_hyphen_values = true)]
    z: Option<Range>,
    #[arg(long, allow_hyphen_values = true)]
    z0: Option<Range>,
    #[arg(long, allow_hyphen_values = true)]
    z1: Option<Range>,
    #[arg(long, allow_hyphen_values = true)]
    z2: Option<Range>,
    #[arg(long, allow_hyphen_values = true)]
    z3: Option<Range>,
    /// Interior points for the pointwise kernel bounds of `prop`.
    #[arg(long)]
    t: Option<Range>,
    /// Records file. Without it only the summary is printed.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    /// Largest sequence length for gruss-random.
    #[arg(long, default_value_t = 200)]
    n: usize,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum GoldenAction {
    Mint,
    Verify,
}

#[derive(Args)]
struct GoldenCmd {
    action: GoldenAction,
    #[arg(long)]
    file: PathBuf,
    /// Multiply every recorded resolution when minting.
    #[arg(long, default_value_t = 1)]
    scale: u64,
}

fn parse_checker(s: &str) -> Result<Checker, String> {
    Checker::from_name(s).ok_or_else(|| {
        let names: Vec<_> = Checker::ALL.iter().map(|c| c.name()).collect();
        format!("unknown checker {s:?}; expected one of {}", names.join(", "))
    })
}

fn eval(cmd: EvalCmd) -> i32 {
    let function = match cmd.function {
        FunctionArg::Gauss2F1 => Function::Gauss2F1,
        FunctionArg::Kummer1F1 => Function::Kummer1F1,
        FunctionArg::Gghf => Function::Gghf,
        FunctionArg::Gchf => Function::Gchf,
        FunctionArg::Genbeta => Function::GenBeta,
    };
    let method = match cmd.method {
        MethodArg::Series => EvalMethod::Series,
        MethodArg::Integral => EvalMethod::Integral,
        MethodArg::Both => EvalMethod::Both,
    };
    let mut settings = EvalSettings::default();
    let EvalConfig { rel_tol, max_terms, .. } = settings.series;
    settings.series.rel_tol = cmd.rel_tol.unwrap_or(rel_tol);
    settings.series.max_terms = cmd.max_terms.unwrap_or(max_terms);
    let QuadConfig { rel_tol, max_level, .. } = settings.quad;
    settings.quad.rel_tol = cmd.quad_tol.unwrap_or(rel_tol);
    settings.quad.max_level = cmd.max_level.unwrap_or(max_level);
    let input = EvalInput {
        a: cmd.a,
        b: cmd.b,
        c: cmd.c,
        alpha: cmd.alpha,
        beta: cmd.beta,
        p: cmd.p,
        z: cmd.z,
        x: cmd.x,
        y: cmd.y,
    };
    let out = run_eval(function, &input, method, &settings);
    print!("{}", out.text);
    out.code
}

fn check(cmd: CheckCmd) -> i32 {
    let grid = GridArgs {
        a: cmd.a,
        b: cmd.b,
        c_offset: cmd.c_offset,
        alpha: cmd.alpha,
        beta_offset: cmd.beta_offset,
        p: cmd.p,
        z: cmd.z,
        z0: cmd.z0,
        z1: cmd.z1,
        z2: cmd.z2,
        z3: cmd.z3,
        t: cmd.t,
    };
    let gruss = GrussArgs { n: cmd.n, trials: cmd.trials, seed: cmd.seed };
    let out = run_sweep(cmd.checker, &grid, &gruss, &CheckConfig::default());
    if let Some(path) = &cmd.output {
        let format = match cmd.format {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        };
        let written = File::create(path).and_then(|f| write_records(BufWriter::new(f), format, &out.records));
        if let Err(e) = written {
            eprintln!("error: {}: {e}", path.display());
            return exit::IO;
        }
    }
    print!("{}", out.report.render());
    if out.report.failed == 0 {
        exit::OK
    } else {
        exit::FAILURE
    }
}

fn golden(cmd: GoldenCmd) -> i32 {
    match cmd.action {
        GoldenAction::Mint => match cmd_mint(&cmd.file, cmd.scale) {
            Ok(n) => {
                println!("minted {n} records into {}", cmd.file.display());
                exit::OK
            }
            Err(e) => {
                eprintln!("error: {e}");
                e.code
            }
        },
        GoldenAction::Verify => match cmd_verify(&cmd.file) {
            Ok((text, ok)) => {
                print!("{text}");
                if ok {
                    exit::OK
                } else {
                    exit::FAILURE
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                e.code
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = init_thread_pool() {
        eprintln!("error: {e}");
        return ExitCode::from(exit::DOMAIN as u8);
    }
    let code = match cli.command {
        Command::Eval(c) => eval(c),
        Command::Check(c) => check(*c),
        Command::Golden(c) => golden(c),
    };
    ExitCode::from(code as u8)
}
