//! Command runners: configuration in, rendered artifact out.

use std::io::Write;

use num::complex::Complex64;
use serde_json::{json, Map, Value};

use super::config::{Command, Family, Format, Method, RunConfig};
use super::output::{error_record, json_document, to_pretty, write_atomic, Cell, Table};
use super::parse::RangeSpec;
use crate::error::UmbraError;
use crate::quad::QuadBudget;
use crate::solutions::{
    inverse_square_closed, oscillator_energy, oscillator_evolve, oscillator_frequency, phase_velocity, plane_wave,
    refraction_index, toda_continuum, toda_umbral, toda_umbral_continued, toda_umbral_momentum, um_airy, um_gaussian,
    um_whittaker_m, whittaker_a2_closed, whittaker_a2_pole, whittaker_half_closed, AiryMethod, GaussianMethod,
    OscillatorState, PhaseConvention, TodaParams, WaveParams, WhittakerParams,
};
use crate::specfun::{airy_ai_ref, pfq_classify, pfq_eval, EvalMode, HyperSpec};
use crate::umbral_core::{umbral_exp, umbral_trig, Number};
use crate::umbral_map::{
    fourier_umbral_transform, rational_geom_transform, sampling_function, umbral_hyper_map, LemmaInput, Spectrum,
};
use crate::verify::{run_suite, Suite, SuiteConfig};

/// A failed run: exit code 2 for bad input, 1 for numerical failure.
#[derive(Clone, Debug, PartialEq)]
pub struct CliError {
    pub code: i32,
    pub kind: String,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            kind: "usage".into(),
            message: message.into(),
        }
    }

    pub fn record(&self) -> Value {
        error_record(&self.kind, &self.message)
    }
}

impl From<UmbraError> for CliError {
    fn from(e: UmbraError) -> Self {
        let code = if matches!(e, UmbraError::Parse(_)) { 2 } else { 1 };
        CliError {
            code,
            kind: e.kind().into(),
            message: e.to_string(),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Rendered output. `ok` is false when the run completed but a check
/// failed (verify).
#[derive(Clone, Debug, PartialEq)]
pub struct Artifact {
    pub format: Format,
    pub body: String,
    pub ok: bool,
}

pub fn render(cfg: &RunConfig) -> CliResult<Artifact> {
    let command = cfg.command()?;
    let format = cfg.format()?;
    let (doc, table, ok) = match command {
        Command::Eval => eval(cfg)?,
        Command::Map => map(cfg)?,
        Command::Verify => verify(cfg)?,
        Command::Toda => toda(cfg)?,
        Command::Oscillator => oscillator(cfg)?,
        Command::Wave => wave(cfg)?,
    };
    let body = match format {
        Format::Json => to_pretty(&json_document(command.name(), table.as_ref(), doc)),
        Format::Csv => match table {
            Some(t) => t.to_csv(),
            None => return Err(CliError::usage(format!("{} produces JSON only", command.name()))),
        },
    };
    Ok(Artifact { format, body, ok })
}

/// Renders and writes to `cfg.output` (atomically) or `stdout`. Errors go
/// to `stderr` as a JSON record. Returns the exit code.
pub fn execute(cfg: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = render(cfg).and_then(|art| {
        match &cfg.output {
            Some(path) => write_atomic(path, &art.body)?,
            None => stdout
                .write_all(art.body.as_bytes())
                .map_err(|e| CliError::from(UmbraError::Precondition(format!("cannot write output: {e}"))))?,
        }
        Ok(art.ok)
    });
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(stderr, "{}", e.record());
            e.code
        }
    }
}

type Rendered = (Map<String, Value>, Option<Table>, bool);

fn f(v: &Number) -> f64 {
    v.to_f64()
}

fn need_range<'a>(r: &'a Option<RangeSpec>, name: &str) -> CliResult<&'a RangeSpec> {
    r.as_ref()
        .ok_or_else(|| CliError::usage(format!("missing --{name} range")))
}

fn range_or(r: &Option<RangeSpec>, default: &str) -> RangeSpec {
    r.clone()
        .unwrap_or_else(|| default.parse().expect("valid default range"))
}

fn parameters(cfg: &RunConfig) -> Value {
    let mut v = serde_json::to_value(cfg).expect("config serializes");
    if let Value::Object(m) = &mut v {
        m.retain(|k, v| !v.is_null() && !matches!(k.as_str(), "output" | "format" | "command"));
    }
    v
}

fn complex_cells(z: Complex64) -> [Cell; 2] {
    [Cell::Float(z.re), Cell::Float(z.im)]
}

fn eval(cfg: &RunConfig) -> CliResult<Rendered> {
    let family = cfg.family.ok_or_else(|| CliError::usage("eval needs --family"))?;
    let a = cfg.spacing();
    let af = f(&a);
    let method = cfg.method;
    let allowed: &[Method] = match family {
        Family::UmAiry => &[Method::Quadrature, Method::Series, Method::Both],
        Family::UmGaussian => &[Method::Series, Method::UIdentity, Method::Both],
        _ => &[],
    };
    if let Some(m) = method {
        if !allowed.contains(&m) {
            return Err(CliError::usage(format!("family {family} has no method {m:?}")));
        }
    }
    let step = match family {
        Family::WhittakerA2 | Family::WhittakerHalf => Number::int(2),
        _ => a.clone(),
    };
    let xs = need_range(&cfg.x, "x")?.points(&step)?;
    let (kappa, mu) = (f(&cfg.kappa()), f(&cfg.mu()));
    let (c1, c2) = (cfg.c1(), cfg.c2());

    let mut table;
    match family {
        Family::UmbralExp => {
            table = Table::new(&["x", "re", "im"]);
            for x in &xs {
                let z = umbral_exp(&cfg.lambda(), x, &a)?.to_complex();
                let [re, im] = complex_cells(z);
                table.push(vec![Cell::Float(f(x)), re, im]);
            }
        }
        Family::UmbralTrig => {
            table = Table::new(&["x", "sin", "cos"]);
            for x in &xs {
                let (s, c) = umbral_trig(x, &a)?;
                table.push(vec![Cell::Float(f(x)), Cell::Float(f(&s)), Cell::Float(f(&c))]);
            }
        }
        Family::UmAiry => match method.unwrap_or(Method::Quadrature) {
            Method::Both => {
                table = Table::new(&["x", "quadrature", "series", "abs_diff"]);
                for x in &xs {
                    let q = um_airy(f(x), af, AiryMethod::Quadrature)?;
                    let s = optional(um_airy(f(x), af, AiryMethod::Series))?;
                    table.push(vec![
                        Cell::Float(f(x)),
                        q.into(),
                        s.into(),
                        s.map(|s| (s - q).abs()).into(),
                    ]);
                }
            }
            m => {
                let m = if m == Method::Series {
                    AiryMethod::Series
                } else {
                    AiryMethod::Quadrature
                };
                table = Table::new(&["x", "value"]);
                for x in &xs {
                    table.push(vec![Cell::Float(f(x)), um_airy(f(x), af, m)?.into()]);
                }
            }
        },
        Family::UmGaussian => match method.unwrap_or(Method::Series) {
            Method::Both => {
                table = Table::new(&["x", "series", "u_identity", "abs_diff"]);
                for x in &xs {
                    let s = optional(um_gaussian(f(x), af, GaussianMethod::Series))?;
                    let u = um_gaussian(f(x), af, GaussianMethod::UIdentity)?;
                    table.push(vec![
                        Cell::Float(f(x)),
                        s.into(),
                        u.into(),
                        s.map(|s| (s - u).abs()).into(),
                    ]);
                }
            }
            m => {
                let m = if m == Method::UIdentity {
                    GaussianMethod::UIdentity
                } else {
                    GaussianMethod::Series
                };
                table = Table::new(&["x", "value"]);
                for x in &xs {
                    table.push(vec![Cell::Float(f(x)), um_gaussian(f(x), af, m)?.into()]);
                }
            }
        },
        Family::UmWhittakerM => {
            table = Table::new(&["x", "value"]);
            for x in &xs {
                table.push(vec![Cell::Float(f(x)), um_whittaker_m(kappa, mu, f(x), af)?.into()]);
            }
        }
        Family::WhittakerA2 => {
            let p = WhittakerParams::new(kappa, mu, c1, c2);
            table = Table::new(&["x", "re", "im", "pole"]);
            for x in &xs {
                let pole = whittaker_a2_pole(&p, f(x));
                let [re, im] = if pole {
                    [Cell::Empty, Cell::Empty]
                } else {
                    complex_cells(whittaker_a2_closed(&p, f(x)))
                };
                table.push(vec![Cell::Float(f(x)), re, im, pole.into()]);
            }
        }
        Family::WhittakerHalf => {
            table = Table::new(&["x", "re", "im"]);
            for x in &xs {
                let [re, im] = complex_cells(whittaker_half_closed(kappa, f(x), c1, c2));
                table.push(vec![Cell::Float(f(x)), re, im]);
            }
        }
        Family::InverseSquare => {
            table = Table::new(&["x", "re", "im"]);
            for x in &xs {
                let [re, im] = complex_cells(inverse_square_closed(kappa, af, f(x), c1, c2)?);
                table.push(vec![Cell::Float(f(x)), re, im]);
            }
        }
        Family::Delta => {
            table = Table::new(&["x", "closed_form", "quadrature", "abs_diff"]);
            for x in &xs {
                let c = sampling_function(f(x), af);
                let q = fourier_umbral_transform(&Spectrum::Delta, f(x), af, QuadBudget::default())?.re;
                table.push(vec![Cell::Float(f(x)), c.into(), q.into(), (c - q).abs().into()]);
            }
        }
        Family::Geometric => {
            table = Table::new(&["x", "value"]);
            for x in &xs {
                table.push(vec![Cell::Float(f(x)), rational_geom_transform(f(x), af)?.into()]);
            }
        }
        Family::Airy => {
            table = Table::new(&["x", "value"]);
            for x in &xs {
                table.push(vec![Cell::Float(f(x)), airy_ai_ref(f(x))?.into()]);
            }
        }
    }
    let mut doc = Map::new();
    doc.insert("family".into(), json!(family.name()));
    doc.insert("parameters".into(), parameters(cfg));
    Ok((doc, Some(table), true))
}

/// Precondition failures become a missing value; anything else propagates.
fn optional(r: crate::Result<f64>) -> CliResult<Option<f64>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(UmbraError::Precondition(_)) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn number_json(v: &Number) -> Value {
    let mut m = Map::new();
    if v.is_exact() {
        m.insert("exact".into(), json!(v.to_string()));
    }
    let z = v.to_complex();
    m.insert(
        "re".into(),
        serde_json::Number::from_f64(z.re).map_or(Value::Null, Value::Number),
    );
    m.insert(
        "im".into(),
        serde_json::Number::from_f64(z.im).map_or(Value::Null, Value::Number),
    );
    Value::Object(m)
}

fn map(cfg: &RunConfig) -> CliResult<Rendered> {
    let numerator = cfg.numerator.clone().unwrap_or_default();
    let denominator = cfg.denominator.clone().unwrap_or_default();
    let argument = cfg.argument.clone().unwrap_or_else(Number::one);
    let hyper = HyperSpec::new(numerator, denominator, argument)?;
    let a = cfg.spacing();
    let xs = need_range(&cfg.x, "x")?.points(&a)?;
    let mut results = Vec::new();
    for x in xs {
        let input = LemmaInput::plain(hyper.clone(), a.clone(), x.clone())
            .with_power_argument(cfg.k.unwrap_or(1))
            .with_exponential(cfg.lambda_exp.clone().unwrap_or_else(Number::zero))
            .with_overall_power(cfg.gamma_exp.clone().unwrap_or_else(Number::zero));
        let mut entry = Map::new();
        entry.insert("x".into(), json!(x));
        let mapped = umbral_hyper_map(&input)?;
        entry.insert("class".into(), json!(pfq_classify(&mapped)));
        let value =
            pfq_eval(&mapped, EvalMode::Exact, cfg.tol()).or_else(|_| pfq_eval(&mapped, EvalMode::Float, cfg.tol()));
        match value {
            Ok(v) => {
                entry.insert("value".into(), number_json(&v));
            }
            Err(e) => {
                entry.insert("value".into(), Value::Null);
                entry.insert("value_error".into(), CliError::from(e).record()["error"].clone());
            }
        }
        entry.insert("mapped".into(), json!(mapped));
        results.push(Value::Object(entry));
    }
    let mut doc = Map::new();
    let base = LemmaInput::plain(hyper, a, Number::zero())
        .with_power_argument(cfg.k.unwrap_or(1))
        .with_exponential(cfg.lambda_exp.clone().unwrap_or_else(Number::zero))
        .with_overall_power(cfg.gamma_exp.clone().unwrap_or_else(Number::zero));
    let mut input = serde_json::to_value(&base).expect("input serializes");
    if let Value::Object(m) = &mut input {
        m.remove("x");
    }
    doc.insert("input".into(), input);
    doc.insert("results".into(), Value::Array(results));
    Ok((doc, None, true))
}

fn suite_list(cfg: &RunConfig) -> CliResult<Vec<Suite>> {
    match cfg.suite.as_deref().unwrap_or("all") {
        "all" => Ok(Suite::ALL.to_vec()),
        names => names.split(',').map(|s| s.parse().map_err(CliError::from)).collect(),
    }
}

fn verify(cfg: &RunConfig) -> CliResult<Rendered> {
    let suites = suite_list(cfg)?;
    let sc = SuiteConfig {
        profile: cfg.tol_profile.unwrap_or_default(),
        a: cfg.a.clone(),
        kappa: cfg.kappa.as_ref().map(f),
        mu: cfg.mu.as_ref().map(f),
        points: cfg.points,
        exact: cfg.exact,
    };
    let mut table = Table::new(&[
        "suite",
        "bound_kind",
        "bound",
        "max_abs",
        "relative",
        "exact_zero",
        "passed",
        "error",
    ]);
    let mut outcomes = Vec::new();
    let mut all = true;
    for suite in suites {
        match run_suite(suite, &sc) {
            Ok(o) => {
                let (kind, value) = match o.bound {
                    crate::verify::Bound::ExactZero => ("exact_zero", Cell::Empty),
                    crate::verify::Bound::Absolute(v) => ("absolute", Cell::Float(v)),
                    crate::verify::Bound::Relative(v) => ("relative", Cell::Float(v)),
                };
                all &= o.passed;
                table.push(vec![
                    Cell::Text(suite.name().into()),
                    Cell::Text(kind.into()),
                    value,
                    o.report.max_abs.into(),
                    o.report.relative().into(),
                    o.report.exact_zero.into(),
                    o.passed.into(),
                    Cell::Empty,
                ]);
                outcomes.push(json!(o));
            }
            Err(e) => {
                all = false;
                let err = CliError::from(e);
                table.push(vec![
                    Cell::Text(suite.name().into()),
                    Cell::Empty,
                    Cell::Empty,
                    Cell::Empty,
                    Cell::Empty,
                    Cell::Empty,
                    false.into(),
                    Cell::Text(err.message.clone()),
                ]);
                outcomes.push(json!({ "suite": suite, "passed": false, "error": err.record()["error"] }));
            }
        }
    }
    let mut doc = Map::new();
    doc.insert("profile".into(), json!(sc.profile));
    doc.insert("passed".into(), json!(all));
    doc.insert("suites".into(), Value::Array(outcomes));
    Ok((doc, Some(table), all))
}

fn toda(cfg: &RunConfig) -> CliResult<Rendered> {
    let p = TodaParams::new(
        cfg.q0.unwrap_or(0.0),
        cfg.alpha.unwrap_or(1.0),
        cfg.beta.unwrap_or(1.0),
        cfg.branch.unwrap_or(1),
    )?;
    let a = f(&cfg.spacing());
    let ns = range_or(&cfg.n, "-5:5").integers()?;
    let ms = range_or(&cfg.m, "0:4").integers()?;
    let tol = cfg.tol.unwrap_or(1e-9);
    let mut table = Table::new(&["n", "m", "t", "q", "p", "Q", "P", "continued"]);
    for &n in &ns {
        for &m in &ms {
            let m = u32::try_from(m).map_err(|_| CliError::usage(format!("time index m must be ≥ 0, got {m}")))?;
            let t = m as f64 * a;
            let (q, pc) = toda_continuum(n, t, &p);
            let continued = p.z(n).abs() >= 1.0;
            let big_q = if continued {
                toda_umbral_continued(n, m, a, &p)?
            } else {
                toda_umbral(n, m, a, &p, tol)?
            };
            let big_p = toda_umbral_momentum(n, m, a, &p)?;
            table.push(vec![
                Cell::Int(n),
                Cell::Int(m as i64),
                t.into(),
                q.into(),
                pc.into(),
                big_q.into(),
                big_p.into(),
                continued.into(),
            ]);
        }
    }
    let mut doc = Map::new();
    doc.insert("gamma".into(), json!(p.gamma()));
    doc.insert("velocity".into(), json!(p.velocity()));
    doc.insert("parameters".into(), parameters(cfg));
    if let Some(ts) = &cfg.continuum_t {
        let ts = ts.points(&Number::real(a))?;
        let mut curve = Table::new(&["n", "t", "q", "p"]);
        for &n in &ns {
            for t in &ts {
                let (q, pc) = toda_continuum(n, f(t), &p);
                curve.push(vec![Cell::Int(n), Cell::Float(f(t)), q.into(), pc.into()]);
            }
        }
        doc.insert("continuum".into(), curve.to_json_rows());
    }
    Ok((doc, Some(table), true))
}

fn oscillator(cfg: &RunConfig) -> CliResult<Rendered> {
    let a = cfg.spacing();
    let s0 = OscillatorState::new(
        cfg.x0.clone().unwrap_or_else(Number::one),
        cfg.p0.clone().unwrap_or_else(Number::zero),
        a.clone(),
    );
    let steps = cfg.steps.unwrap_or(16);
    let mut table = Table::new(&["m", "t", "X", "P", "energy"]);
    let mut energies = Vec::with_capacity(steps + 1);
    for m in 0..=steps as i64 {
        let t = &a * &Number::int(m);
        let s = oscillator_evolve(&s0, &t)?;
        let e = oscillator_energy(&s)?;
        table.push(vec![
            Cell::Int(m),
            Cell::Float(f(&t)),
            Cell::Float(f(&s.x)),
            Cell::Float(f(&s.p)),
            Cell::Float(f(&e)),
        ]);
        energies.push(e);
    }
    let exact = energies.iter().all(Number::is_exact);
    let conserved = if exact {
        energies.windows(2).all(|w| w[0] == w[1])
    } else {
        let e0 = f(&energies[0]);
        energies.iter().all(|e| (f(e) - e0).abs() <= 1e-12 * e0.abs().max(1.0))
    };
    let mut doc = Map::new();
    doc.insert("frequency".into(), json!(oscillator_frequency(f(&a))));
    doc.insert("exact".into(), json!(exact));
    doc.insert("energy_conserved".into(), json!(conserved));
    doc.insert("parameters".into(), parameters(cfg));
    Ok((doc, Some(table), true))
}

fn wave(cfg: &RunConfig) -> CliResult<Rendered> {
    let a = cfg.spacing();
    let b = cfg.b.clone().unwrap_or_else(Number::one);
    let p = WaveParams::new(cfg.omega.unwrap_or(1.0), cfg.wavenumber.unwrap_or(1.0), f(&a), f(&b))?;
    let xs = range_or(&cfg.x, "0:4").points(&b)?;
    let ts = range_or(&cfg.t, "0:4").points(&a)?;
    let mut table = Table::new(&["x", "t", "re", "im"]);
    for t in &ts {
        for x in &xs {
            let [re, im] = complex_cells(plane_wave(&p, x, t)?.to_complex());
            table.push(vec![Cell::Float(f(x)), Cell::Float(f(t)), re, im]);
        }
    }
    let opt = |r: crate::Result<f64>| r.ok().map_or(Value::Null, |v| json!(v));
    let mut doc = Map::new();
    doc.insert("refraction_index".into(), opt(refraction_index(&p)));
    doc.insert(
        "phase_velocity_arcsin".into(),
        opt(phase_velocity(&p, PhaseConvention::Arcsin)),
    );
    doc.insert(
        "phase_velocity_arctan".into(),
        opt(phase_velocity(&p, PhaseConvention::Arctan)),
    );
    doc.insert("parameters".into(), parameters(cfg));
    Ok((doc, Some(table), true))
}
