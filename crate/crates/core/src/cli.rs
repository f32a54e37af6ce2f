//! Command-line front end. Every command produces one document (JSON by
//! default) and an exit code: 0 on success, 1 when a verified mismatch
//! between the brute-force determinant and a closed form is found, 2 on
//! usage errors.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{parse_rational_list, ExactRing, Rational};
use crate::formulas::{
    det_corollary, det_schur_expansion, discrepancy_report, discrepancy_report_symbolic, duality_check, ec2_check,
    SplitForms,
};
use crate::json::SCHEMA;
use crate::partitions::Partition;
use crate::ring::{det_direct, slp_check, FormList, RingParams};
use crate::symfunc::{schur, schur_bialternant, schur_tableaux, ValueVector};
use crate::verify::{run_sweep, to_csv, SweepConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable holding the worker count for sweeps.
pub const THREADS_ENV: &str = "LEFDET_THREADS";

#[derive(Debug, Parser)]
#[command(name = "lefdet", version, about = "Exact determinants of multiplication maps in K[x,y]/<x^(d+1), y^(q+1)>")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Output format (default: csv for `sweep`, json otherwise).
    #[arg(long, global = true, value_enum)]
    pub output: Option<OutputFormat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Determinant of multiplication by the given forms from R_k to R_{d+q-k}.
    Det(DetArgs),
    /// Seeded comparison of brute force against the closed forms (JSON table).
    Verify(SweepArgs),
    /// Same sweep as `verify`, emitted as CSV rows.
    Sweep(SweepArgs),
    /// Per-degree determinants of powers of one linear form.
    Slp(SlpArgs),
    /// Schur polynomial by Jacobi-Trudi, bialternant and tableaux.
    Schur(SchurArgs),
    /// Schur duality identities.
    Duality(DualityArgs),
    /// Direct, expansion, corollary and literal values for one instance.
    Report(ReportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Direct,
    Expansion,
    Corollary,
}

#[derive(Debug, Args)]
pub struct DetArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub q: usize,
    #[arg(long)]
    pub k: usize,
    /// Forms as `a1,b1;a2,b2;...`.
    #[arg(long, default_value = "")]
    pub forms: String,
    #[arg(long, value_enum, default_value = "direct")]
    pub method: Method,
    /// Size of the check group for `--method expansion` (default: all forms).
    #[arg(long)]
    pub u: Option<usize>,
    /// Use indeterminate coefficients a1.., b1.. instead of `--forms`.
    #[arg(long)]
    pub symbolic: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Largest d.
    #[arg(long)]
    pub dmax: Option<usize>,
    /// Largest socle degree d+q.
    #[arg(long, default_value_t = 10)]
    pub smax: usize,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub u: Option<usize>,
    /// Fixed forms for a single (d, q, k, u) cell.
    #[arg(long)]
    pub forms: Option<String>,
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Let random coefficients be zero.
    #[arg(long)]
    pub allow_zero: bool,
    /// Worker count (overrides LEFDET_THREADS).
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SlpArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub q: usize,
    /// A single form `a,b`.
    #[arg(long, default_value = "1,1")]
    pub forms: String,
}

#[derive(Debug, Args)]
pub struct SchurArgs {
    /// Partition, e.g. `[2,1]`.
    #[arg(long)]
    pub partition: String,
    /// Point, e.g. `2,1/3`.
    #[arg(long, allow_hyphen_values = true)]
    pub values: String,
}

#[derive(Debug, Args)]
pub struct DualityArgs {
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    /// Switches to the rectangle-complement identity for this partition.
    #[arg(long)]
    pub partition: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub y: Option<String>,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub q: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub u: usize,
    #[arg(long, default_value = "")]
    pub forms: String,
    #[arg(long)]
    pub symbolic: bool,
}

/// Rendered output and exit code of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

fn doc(command: &str, body: Value) -> Value {
    let mut v = json!({ "schema": SCHEMA, "command": command });
    if let (Value::Object(out), Value::Object(body)) = (&mut v, body) {
        out.extend(body);
    }
    v
}

fn error_doc(kind: &str, message: &str) -> Value {
    json!({ "schema": SCHEMA, "error": { "kind": kind, "message": message } })
}

fn to_value<S: Serialize>(s: &S) -> Value {
    serde_json::to_value(s).expect("report types serialize")
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) if !is_flat(val) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(val, indent + 2, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(val))),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                out.push_str(&format!("{pad}-\n"));
                render_text(item, indent + 2, out);
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|i| !i.is_object() && !i.is_array()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}

fn render(v: &Value, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => {
            let mut out = String::new();
            render_text(v, 0, &mut out);
            out
        }
        _ => {
            let mut s = serde_json::to_string_pretty(v).expect("json");
            s.push('\n');
            s
        }
    }
}

fn usage(e: Error) -> Outcome {
    Outcome {
        stdout: render(&error_doc("usage", &e.to_string()), OutputFormat::Json),
        code: EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => run(&cfg),
        Err(e) => match e.kind() {
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                stdout: e.to_string(),
                code: EXIT_OK,
            },
            _ => Outcome {
                stdout: render(&error_doc("usage", e.to_string().trim()), OutputFormat::Json),
                code: EXIT_USAGE,
            },
        },
    }
}

pub fn run(cfg: &RunConfig) -> Outcome {
    match dispatch(cfg) {
        Ok(o) => o,
        Err(e) => usage(e),
    }
}

fn dispatch(cfg: &RunConfig) -> Result<Outcome> {
    let format = cfg.output;
    let simple = |name: &str, body: Value| -> Result<Outcome> {
        match format.unwrap_or(OutputFormat::Json) {
            OutputFormat::Csv => Err(Error::Parse(format!("csv output is only available for sweep and verify, not {name}"))),
            f => Ok(Outcome {
                stdout: render(&doc(name, body), f),
                code: EXIT_OK,
            }),
        }
    };
    match &cfg.command {
        Command::Det(a) => simple("det", cmd_det(a)?),
        Command::Slp(a) => simple("slp", cmd_slp(a)?),
        Command::Schur(a) => simple("schur", cmd_schur(a)?),
        Command::Duality(a) => simple("duality", cmd_duality(a)?),
        Command::Report(a) => simple("report", cmd_report(a)?),
        Command::Verify(a) => cmd_sweep("verify", a, format.unwrap_or(OutputFormat::Json)),
        Command::Sweep(a) => cmd_sweep("sweep", a, format.unwrap_or(OutputFormat::Csv)),
    }
}

fn ring(d: usize, q: usize) -> Result<RingParams> {
    RingParams::new(d, q)
}

pub fn cmd_det(a: &DetArgs) -> Result<Value> {
    let rp = ring(a.d, a.q)?;
    let k = a.k as i64;
    if 2 * a.k > rp.socle() {
        return Err(Error::DegreeOutOfRange {
            degree: k,
            top: rp.socle() / 2,
        });
    }
    let n = rp.socle() - 2 * a.k;
    if a.symbolic {
        let forms = FormList::symbolic(n);
        det_body(&rp, k, a, &forms, "symbolic".into())
    } else {
        let forms = FormList::parse(&a.forms)?;
        let wire = forms.to_wire();
        det_body(&rp, k, a, &forms, wire)
    }
}

fn det_body<T: ExactRing>(rp: &RingParams, k: i64, a: &DetArgs, forms: &FormList<T>, wire: String) -> Result<Value> {
    let direct = det_direct(rp, k, forms)?;
    let mut body = json!({
        "d": a.d, "q": a.q, "k": a.k, "forms": wire, "method": a.method,
    });
    let obj = body.as_object_mut().expect("object");
    match a.method {
        Method::Direct => {
            obj.insert("det".into(), direct.to_string().into());
        }
        Method::Corollary => {
            let value = det_corollary(rp, k, forms)?;
            obj.insert("match_direct".into(), (value == direct).into());
            obj.insert("det".into(), value.to_string().into());
        }
        Method::Expansion => {
            let u = a.u.unwrap_or(forms.len());
            let ex = det_schur_expansion(rp, k, &SplitForms::at(forms, u)?)?;
            obj.insert("u".into(), u.into());
            obj.insert("match_direct".into(), (ex.value == direct).into());
            obj.insert("det".into(), ex.value.to_string().into());
            obj.insert("terms".into(), to_value(&ex.terms));
        }
    }
    Ok(body)
}

pub fn cmd_slp(a: &SlpArgs) -> Result<Value> {
    let rp = ring(a.d, a.q)?;
    let forms = FormList::parse(&a.forms)?;
    let [form] = forms.forms() else {
        return Err(Error::Parse(format!("slp takes exactly one form, got {}", forms.len())));
    };
    let report = slp_check(&rp, form)?;
    let mut body = to_value(&report);
    let obj = body.as_object_mut().expect("object");
    obj.insert("d".into(), a.d.into());
    obj.insert("q".into(), a.q.into());
    obj.insert("form".into(), forms.to_wire().into());
    Ok(body)
}

fn outcome_field(r: Result<Rational>) -> (Value, Option<String>) {
    match r {
        Ok(v) => (v.to_string().into(), None),
        Err(e) => (Value::Null, Some(e.to_string())),
    }
}

pub fn cmd_schur(a: &SchurArgs) -> Result<Value> {
    let lam: Partition = a.partition.parse()?;
    let x = ValueVector::new(parse_rational_list(&a.values)?);
    let jt = schur(&lam, &x);
    let (bi, bi_err) = outcome_field(schur_bialternant(&lam, &x));
    let (tab, tab_err) = outcome_field(schur_tableaux(&lam, &x));
    let jt_text = Value::from(jt.to_string());
    let agree = [&bi, &tab].iter().all(|v| v.is_null() || **v == jt_text);
    Ok(json!({
        "partition": lam.to_string(),
        "values": a.values.trim(),
        "jacobi_trudi_of_conjugate": jt_text,
        "bialternant": bi,
        "bialternant_error": bi_err,
        "tableaux": tab,
        "tableaux_error": tab_err,
        "agree": agree,
    }))
}

fn required<'a>(v: &'a Option<String>, flag: &str) -> Result<&'a str> {
    v.as_deref().ok_or_else(|| Error::Parse(format!("missing --{flag}")))
}

pub fn cmd_duality(a: &DualityArgs) -> Result<Value> {
    if let Some(p) = &a.partition {
        let lam: Partition = p.parse()?;
        let x = parse_rational_list(required(&a.x, "x")?)?;
        let y = parse_rational_list(required(&a.y, "y")?)?;
        let n = x.len();
        let check = ec2_check(&lam, a.r, n, &x, &y)?;
        let mut body = to_value(&check);
        let obj = body.as_object_mut().expect("object");
        obj.insert("identity".into(), "rectangle_complement".into());
        obj.insert("partition".into(), lam.to_string().into());
        obj.insert("complement".into(), lam.complement(a.r, n)?.to_string().into());
        obj.insert("r".into(), a.r.into());
        obj.insert("n".into(), n.into());
        Ok(body)
    } else {
        let m = a.m.ok_or_else(|| Error::Parse("missing --m".into()))?;
        let av = parse_rational_list(required(&a.a, "a")?)?;
        let bv = parse_rational_list(required(&a.b, "b")?)?;
        let check = duality_check(a.r, m, &av, &bv)?;
        let mut body = to_value(&check);
        let obj = body.as_object_mut().expect("object");
        obj.insert("identity".into(), "rectangle_duality".into());
        obj.insert("r".into(), a.r.into());
        obj.insert("m".into(), m.into());
        Ok(body)
    }
}

pub fn cmd_report(a: &ReportArgs) -> Result<Value> {
    let rp = ring(a.d, a.q)?;
    let k = a.k as i64;
    let (forms, report) = if a.symbolic {
        ("symbolic".to_string(), to_value(&discrepancy_report_symbolic(&rp, k, a.u)?))
    } else {
        let forms = FormList::parse(&a.forms)?;
        (forms.to_wire(), to_value(&discrepancy_report(&rp, k, a.u, &forms)?))
    };
    let mut body = report;
    body.as_object_mut()
        .expect("object")
        .insert("forms".into(), forms.into());
    Ok(body)
}

fn threads_from(flag: Option<usize>) -> Result<Option<usize>> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var(THREADS_ENV) {
        Ok(s) => s
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .map(Some)
            .ok_or_else(|| Error::Parse(format!("{THREADS_ENV} must be a positive integer, got {s:?}"))),
        Err(_) => Ok(None),
    }
}

pub fn sweep_config(a: &SweepArgs) -> Result<SweepConfig> {
    let forms = a.forms.as_deref().map(FormList::parse).transpose()?;
    Ok(SweepConfig {
        max_socle: a.smax,
        max_d: a.dmax,
        d: a.d,
        q: a.q,
        k: a.k,
        u: a.u,
        trials: a.trials,
        seed: a.seed,
        allow_zero: a.allow_zero,
        forms,
        threads: threads_from(a.threads)?,
    })
}

fn cmd_sweep(name: &str, a: &SweepArgs, format: OutputFormat) -> Result<Outcome> {
    let cfg = sweep_config(a)?;
    let result = run_sweep(&cfg)?;
    let code = if result.summary.all_match { EXIT_OK } else { EXIT_MISMATCH };
    let stdout = match format {
        OutputFormat::Csv => to_csv(cfg.seed, &result.records),
        f => render(
            &doc(
                name,
                json!({
                    "config": to_value(&cfg),
                    "summary": to_value(&result.summary),
                    "trials": to_value(&result.records),
                }),
            ),
            f,
        ),
    };
    Ok(Outcome { stdout, code })
}
