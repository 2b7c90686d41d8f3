//! Single-point evaluation for the `eval` subcommand.

use std::fmt::Write as _;

use hypergruss::{
    gauss_2f1, gauss_2f1_integral, gchf_integral, gchf_series, gen_beta, gghf_integral, gghf_series, kummer_1f1,
    kummer_1f1_integral, EvalConfig, EvalResult, GenBetaEngine, HgError, ParamSet, QuadConfig,
};

use crate::{exit, exit_code_for, fmt17};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Function {
    Gauss2F1,
    Kummer1F1,
    Gghf,
    Gchf,
    GenBeta,
}

impl Function {
    pub fn name(self) -> &'static str {
        match self {
            Function::Gauss2F1 => "2f1",
            Function::Kummer1F1 => "1f1",
            Function::Gghf => "gghf",
            Function::Gchf => "gchf",
            Function::GenBeta => "genbeta",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalMethod {
    Series,
    Integral,
    Both,
}

/// Values given on the command line; each function reads what it needs.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct EvalInput {
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub c: Option<f64>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub p: Option<f64>,
    pub z: Option<f64>,
    pub x: Option<f64>,
    pub y: Option<f64>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct EvalSettings {
    pub series: EvalConfig,
    pub quad: QuadConfig,
}

/// Text to print and the exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalOutcome {
    pub text: String,
    pub code: i32,
}

fn need(v: Option<f64>, flag: &str, f: Function) -> Result<f64, HgError> {
    v.ok_or_else(|| HgError::Domain(format!("{} needs --{flag}", f.name())))
}

fn generalized(inp: &EvalInput, f: Function, with_a: bool) -> Result<ParamSet, HgError> {
    let a = if with_a { need(inp.a, "a", f)? } else { inp.a.unwrap_or(0.0) };
    Ok(ParamSet::new(
        a,
        need(inp.b, "b", f)?,
        need(inp.c, "c", f)?,
        need(inp.alpha, "alpha", f)?,
        need(inp.beta, "beta", f)?,
        need(inp.p, "p", f)?,
    ))
}

fn series(f: Function, inp: &EvalInput, s: &EvalSettings) -> Result<EvalResult, HgError> {
    let z = need(inp.z, "z", f)?;
    match f {
        Function::Gauss2F1 => gauss_2f1(need(inp.a, "a", f)?, need(inp.b, "b", f)?, need(inp.c, "c", f)?, z, &s.series),
        Function::Kummer1F1 => kummer_1f1(need(inp.b, "b", f)?, need(inp.c, "c", f)?, z, &s.series),
        Function::Gghf => {
            let ps = generalized(inp, f, true)?;
            gghf_series(&ps, z, &GenBetaEngine::for_params(&ps, &s.quad)?, &s.series)
        }
        Function::Gchf => {
            let ps = generalized(inp, f, false)?;
            gchf_series(&ps, z, &GenBetaEngine::for_params(&ps, &s.quad)?, &s.series)
        }
        Function::GenBeta => unreachable!("genbeta has no series form"),
    }
}

fn integral(f: Function, inp: &EvalInput, s: &EvalSettings) -> Result<EvalResult, HgError> {
    let z = need(inp.z, "z", f)?;
    match f {
        Function::Gauss2F1 => {
            gauss_2f1_integral(need(inp.a, "a", f)?, need(inp.b, "b", f)?, need(inp.c, "c", f)?, z, &s.quad)
        }
        Function::Kummer1F1 => kummer_1f1_integral(need(inp.b, "b", f)?, need(inp.c, "c", f)?, z, &s.quad),
        Function::Gghf => gghf_integral(&generalized(inp, f, true)?, z, &s.quad),
        Function::Gchf => gchf_integral(&generalized(inp, f, false)?, z, &s.quad),
        Function::GenBeta => unreachable!("genbeta is handled separately"),
    }
}

fn write_result(out: &mut String, r: &EvalResult) {
    let _ = writeln!(out, "method        {}", r.method.as_str());
    let _ = writeln!(out, "value         {}", fmt17(r.value));
    let _ = writeln!(out, "err_estimate  {}", fmt17(r.err_estimate));
    let _ = writeln!(out, "terms_used    {}", r.terms_used);
    let _ = writeln!(out, "converged     {}", r.converged);
    let _ = writeln!(out, "cancellation  {}", r.cancellation);
}

fn code_for(r: &EvalResult) -> i32 {
    if r.converged {
        exit::OK
    } else {
        exit::CONVERGENCE
    }
}

fn fail(mut text: String, e: &HgError) -> EvalOutcome {
    let _ = writeln!(text, "error         {e}");
    EvalOutcome { text, code: exit_code_for(e) }
}

/// Evaluate one function at one point.
pub fn run_eval(f: Function, inp: &EvalInput, method: EvalMethod, s: &EvalSettings) -> EvalOutcome {
    let mut text = format!("function      {}\n", f.name());
    if f == Function::GenBeta {
        let res = (|| {
            let x = need(inp.x, "x", f)?;
            let y = need(inp.y, "y", f)?;
            gen_beta(x, y, need(inp.alpha, "alpha", f)?, need(inp.beta, "beta", f)?, need(inp.p, "p", f)?, &s.quad)
        })();
        return match res {
            Ok(v) => {
                let _ = writeln!(text, "method        quadrature");
                let _ = writeln!(text, "value         {}", fmt17(v.raw));
                let _ = writeln!(text, "normalized    {}", fmt17(v.normalized));
                let _ = writeln!(text, "err_estimate  {}", fmt17(v.err_estimate));
                EvalOutcome { text, code: exit::OK }
            }
            Err(e) => fail(text, &e),
        };
    }

    let mut results = Vec::new();
    if matches!(method, EvalMethod::Series | EvalMethod::Both) {
        results.push(series(f, inp, s));
    }
    if matches!(method, EvalMethod::Integral | EvalMethod::Both) {
        results.push(integral(f, inp, s));
    }
    let mut code = exit::OK;
    let mut ok = Vec::new();
    for r in results {
        match r {
            Ok(r) => {
                write_result(&mut text, &r);
                code = code.max(code_for(&r));
                ok.push(r);
            }
            Err(e) => return fail(text, &e),
        }
    }
    if let [s, i] = ok.as_slice() {
        let _ = writeln!(text, "difference    {}", fmt17(s.value - i.value));
        let _ = writeln!(text, "combined_err  {}", fmt17(s.err_estimate + i.err_estimate));
    }
    EvalOutcome { text, code }
}
