use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use umbra::cli::{
    error_record, execute, parse_complex, parse_param_list, Command, Family, Format, Method, RangeSpec, RunConfig,
};
use umbra::verify::TolProfile;
use umbra::{Complex64, Number};

/// Umbral calculus on lattices: tabulate umbral special functions, map
/// hypergeometric specs, and check difference equations.
#[derive(Parser, Debug)]
#[command(name = "umbra", version, about)]
struct Cli {
    /// TOML file with run parameters; flags override it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// csv or json (default depends on the command).
    #[arg(long, global = true)]
    format: Option<Format>,

    /// Write here (atomically) instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Tabulate a function family over an x range.
    Eval(EvalArgs),
    /// Map x^γ e^{λx} pFq(α; β; c·x^k) to its lattice image.
    Map(MapArgs),
    /// Run difference-equation residual suites; exit 1 on any failure.
    Verify(VerifyArgs),
    /// Umbral Toda soliton on an (n, m) grid.
    Toda(TodaArgs),
    /// Umbral harmonic oscillator trajectory.
    Oscillator(OscillatorArgs),
    /// Umbral plane wave on a spacetime grid.
    Wave(WaveArgs),
    /// Run whatever the --config file describes.
    Run,
}

#[derive(Clone, Debug)]
struct ParamList(Vec<Number>);

fn param_list(s: &str) -> Result<ParamList, umbra::UmbraError> {
    parse_param_list(s).map(ParamList)
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[arg(long)]
    family: Option<Family>,
    /// quadrature, series, u-identity or both.
    #[arg(long)]
    method: Option<Method>,
    /// Lattice spacing.
    #[arg(long, short)]
    a: Option<Number>,
    /// start:stop[:count]; without a count the step is the spacing.
    #[arg(long, short, allow_hyphen_values = true)]
    x: Option<RangeSpec>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<Number>,
    #[arg(long, allow_hyphen_values = true)]
    kappa: Option<Number>,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<Number>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    c1: Option<Complex64>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    c2: Option<Complex64>,
}

#[derive(Args, Debug)]
struct MapArgs {
    /// Comma-separated numerator parameters.
    #[arg(long, value_parser = param_list, allow_hyphen_values = true)]
    numerator: Option<ParamList>,
    #[arg(long, value_parser = param_list, allow_hyphen_values = true)]
    denominator: Option<ParamList>,
    /// Coefficient c of c·x^k.
    #[arg(long, allow_hyphen_values = true)]
    argument: Option<Number>,
    #[arg(long, short)]
    k: Option<u32>,
    /// Overall power γ in x^γ.
    #[arg(long, allow_hyphen_values = true)]
    gamma_exp: Option<Number>,
    /// λ in e^{λx}.
    #[arg(long, allow_hyphen_values = true)]
    lambda_exp: Option<Number>,
    #[arg(long, short)]
    a: Option<Number>,
    #[arg(long, short, allow_hyphen_values = true)]
    x: Option<RangeSpec>,
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// `all` or a comma-separated list of suite names.
    #[arg(long)]
    suite: Option<String>,
    #[arg(long, env = "UMBRA_TOL_PROFILE")]
    tol_profile: Option<TolProfile>,
    #[arg(long, short)]
    a: Option<Number>,
    #[arg(long, allow_hyphen_values = true)]
    kappa: Option<Number>,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<Number>,
    #[arg(long)]
    points: Option<usize>,
    /// Exact rational arithmetic where possible (default true).
    #[arg(long)]
    exact: Option<bool>,
}

#[derive(Args, Debug)]
struct TodaArgs {
    #[arg(long, short, allow_hyphen_values = true)]
    n: Option<RangeSpec>,
    #[arg(long, short)]
    m: Option<RangeSpec>,
    /// Time step.
    #[arg(long, short)]
    a: Option<Number>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    q0: Option<f64>,
    /// +1 or -1.
    #[arg(long, allow_hyphen_values = true)]
    branch: Option<i8>,
    /// Also tabulate the continuum soliton at these times.
    #[arg(long, allow_hyphen_values = true)]
    continuum_t: Option<RangeSpec>,
    /// Closed form vs series agreement required when |z| < 1.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args, Debug)]
struct OscillatorArgs {
    #[arg(long, allow_hyphen_values = true)]
    x0: Option<Number>,
    #[arg(long, allow_hyphen_values = true)]
    p0: Option<Number>,
    #[arg(long, short)]
    a: Option<Number>,
    #[arg(long)]
    steps: Option<usize>,
}

#[derive(Args, Debug)]
struct WaveArgs {
    #[arg(long, allow_hyphen_values = true)]
    omega: Option<f64>,
    #[arg(long, short, allow_hyphen_values = true)]
    k: Option<f64>,
    /// Time spacing.
    #[arg(long, short)]
    a: Option<Number>,
    /// Space spacing.
    #[arg(long, short)]
    b: Option<Number>,
    #[arg(long, short, allow_hyphen_values = true)]
    x: Option<RangeSpec>,
    #[arg(long, short, allow_hyphen_values = true)]
    t: Option<RangeSpec>,
}

impl Cli {
    fn flags(self) -> (Option<PathBuf>, RunConfig) {
        let mut c = RunConfig {
            format: self.format,
            output: self.output,
            ..Default::default()
        };
        match self.command {
            Cmd::Eval(e) => {
                c.command = Some(Command::Eval);
                c.family = e.family;
                c.method = e.method;
                c.a = e.a;
                c.x = e.x;
                c.lambda = e.lambda;
                c.kappa = e.kappa;
                c.mu = e.mu;
                c.c1 = e.c1;
                c.c2 = e.c2;
            }
            Cmd::Map(m) => {
                c.command = Some(Command::Map);
                c.numerator = m.numerator.map(|p| p.0);
                c.denominator = m.denominator.map(|p| p.0);
                c.argument = m.argument;
                c.k = m.k;
                c.gamma_exp = m.gamma_exp;
                c.lambda_exp = m.lambda_exp;
                c.a = m.a;
                c.x = m.x;
                c.tol = m.tol;
            }
            Cmd::Verify(v) => {
                c.command = Some(Command::Verify);
                c.suite = v.suite;
                c.tol_profile = v.tol_profile;
                c.a = v.a;
                c.kappa = v.kappa;
                c.mu = v.mu;
                c.points = v.points;
                c.exact = v.exact;
            }
            Cmd::Toda(t) => {
                c.command = Some(Command::Toda);
                c.n = t.n;
                c.m = t.m;
                c.a = t.a;
                c.alpha = t.alpha;
                c.beta = t.beta;
                c.q0 = t.q0;
                c.branch = t.branch;
                c.continuum_t = t.continuum_t;
                c.tol = t.tol;
            }
            Cmd::Oscillator(o) => {
                c.command = Some(Command::Oscillator);
                c.x0 = o.x0;
                c.p0 = o.p0;
                c.a = o.a;
                c.steps = o.steps;
            }
            Cmd::Wave(w) => {
                c.command = Some(Command::Wave);
                c.omega = w.omega;
                c.wavenumber = w.k;
                c.a = w.a;
                c.b = w.b;
                c.x = w.x;
                c.t = w.t;
            }
            Cmd::Run => {}
        }
        (self.config, c)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let message = e.to_string();
            let first = message.lines().next().unwrap_or_default().trim_start_matches("error: ");
            eprintln!("{}", error_record("usage", first));
            return ExitCode::from(2);
        }
    };
    let (config_path, flags) = cli.flags();
    let base = match config_path {
        Some(p) => match RunConfig::load(&p) {
            Ok(c) => c,
            Err(e) => {
                eprintln!("{}", error_record(e.kind(), &e.to_string()));
                return ExitCode::from(2);
            }
        },
        None => RunConfig::default(),
    };
    let cfg = base.merge(flags);
    let code = execute(&cfg, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    let _ = std::io::stdout().flush();
    ExitCode::from(code as u8)
}
