//! The `qlat` command line.
//!
//! Exit codes: 0 for success or no counterexample, 1 for a counterexample
//! or a violated bound, 2 for usage, parse and input errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::formula::{alpha_iter, law, m_distributive, parse, Assignment, Evaluator, Law, Parsed};
use crate::search::{
    audit_invariants, falsify_with, qubit_alpha_separator, separate_dims, FalsifyParams, SearchConfig, SearchError,
    SeparationRoute, Verdict, VERSION,
};
use crate::tl::{
    chebyshev, delta, eval_at_root, generator_e, jones_wenzl, markov_trace, relation_checks, root_params,
    NumericTLElement, RationalFunction, TlError,
};

/// Largest strand count accepted by the `tl` commands.
pub const MAX_TL_STRANDS: usize = 7;

/// Largest printed size accepted by `alpha`.
pub const MAX_PRINTED_NODES: u128 = 2_000_000;

#[derive(Debug, Parser)]
#[command(name = "qlat", version, about = "Quantum logic of subspace lattices and the Temperley-Lieb algebra")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Ambient dimension n of ℂⁿ.
    #[arg(long, global = true, default_value_t = 2)]
    pub dim: usize,
    /// Number of random trials.
    #[arg(long, global = true, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Bound on the real and imaginary parts of sampled entries.
    #[arg(long, global = true, default_value_t = crate::lattice::DEFAULT_ENTRY_BOUND)]
    pub entry_bound: i64,
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Run trials on all cores; results are unchanged.
    #[arg(long, global = true)]
    pub parallel: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a formula or equation at an assignment file and audit it.
    Eval {
        formula: String,
        /// JSON map from variable to subspace, or a verdict with a witness.
        assignment: std::path::PathBuf,
    },
    /// Search for a counterexample to a named law or an equation.
    CheckLaw { law: String },
    /// Search for a counterexample to an equation (a bare formula means φ = 1).
    Falsify { equation: String },
    /// Certify that the logics of ℂᵐ and ℂⁿ differ.
    Separate { m: usize, n: usize },
    /// Print the iterated distribution test formula αᵐ.
    Alpha { m: usize },
    /// Print the m-distributive law.
    Mdist { m: usize },
    /// Temperley-Lieb computations.
    #[command(subcommand)]
    Tl(TlCommand),
}

#[derive(Debug, Subcommand)]
pub enum TlCommand {
    /// Check the defining relations of TLₙ symbolically.
    Relations {
        #[arg(long)]
        n: usize,
    },
    /// Build the Jones-Wenzl projector pₙ, optionally at d = 2cos(π/r).
    Jw {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<u32>,
    },
    /// Markov traces of the generators and of pₙ.
    Trace {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<u32>,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Bound(String),
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::AlphaBound { .. } | SearchError::HoldsEvidenceFailed { .. } => CliError::Bound(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<TlError> for CliError {
    fn from(e: TlError) -> Self {
        match e {
            TlError::BeyondRootBound { .. } | TlError::Pole { .. } | TlError::VerificationFailed { .. } => {
                CliError::Bound(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

macro_rules! usage_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Usage(e.to_string())
            }
        }
    )*};
}
usage_from!(
    crate::formula::ParseError,
    crate::formula::EvalError,
    crate::formula::GeneratorError,
    crate::lattice::LatticeError
);

struct Report {
    code: i32,
    json: Value,
    human: String,
}

/// Parses `args` (program name first), runs the command and writes the
/// report to `out`, errors to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    let json_mode = cli.global.json;
    let seed = cli.global.seed;
    match dispatch(&cli) {
        Ok(report) => {
            let _ = if json_mode {
                writeln!(out, "{}", serde_json::to_string_pretty(&report.json).expect("report serializes"))
            } else {
                write!(out, "{}", report.human)
            };
            report.code
        }
        Err(e) => {
            let (code, kind, msg) = match e {
                CliError::Usage(m) => (2, "usage_error", m),
                CliError::Bound(m) => (1, "bound_violation", m),
            };
            if json_mode {
                let v = json!({"status": kind, "error": msg, "seed": seed, "version": VERSION});
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("report serializes"));
            }
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Report, CliError> {
    let mut config = SearchConfig::from_env().map_err(CliError::Usage)?;
    config.entry_bound = cli.global.entry_bound;
    config.parallel = cli.global.parallel;
    if cli.global.entry_bound < 1 {
        return Err(CliError::Usage("--entry-bound must be at least 1".into()));
    }
    let g = &cli.global;
    match &cli.command {
        Command::Eval { formula, assignment } => cmd_eval(formula, assignment, g, &config),
        Command::CheckLaw { law } => cmd_check_law(law, g, &config),
        Command::Falsify { equation } => {
            let eq = crate::formula::parse_equation(equation)?;
            run_falsify(eq, g, &config)
        }
        Command::Separate { m, n } => cmd_separate(*m, *n, g, &config),
        Command::Alpha { m } => cmd_alpha(*m, g),
        Command::Mdist { m } => {
            let eq = m_distributive(*m)?;
            let text = eq.to_string();
            Ok(Report {
                code: 0,
                json: json!({"command": "mdist", "m": m, "equation": text, "seed": g.seed, "version": VERSION}),
                human: format!("{text}\n"),
            })
        }
        Command::Tl(sub) => cmd_tl(sub, g),
    }
}

fn check_dim(dim: usize, config: &SearchConfig) -> Result<(), CliError> {
    if dim == 0 {
        return Err(CliError::Usage("--dim must be at least 1".into()));
    }
    if dim > config.size_cap {
        return Err(SearchError::SizeCap { requested: dim, cap: config.size_cap }.into());
    }
    Ok(())
}

fn load_assignment(path: &std::path::Path) -> Result<Assignment, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("malformed assignment: {e}")))?;
    let value = match value {
        Value::Object(mut map) if map.contains_key("witness") => map.remove("witness").unwrap_or(Value::Null),
        v => v,
    };
    serde_json::from_value(value).map_err(|e| CliError::Usage(format!("malformed assignment: {e}")))
}

fn cmd_eval(formula: &str, path: &std::path::Path, g: &GlobalOpts, config: &SearchConfig) -> Result<Report, CliError> {
    let parsed = parse(formula)?;
    let assignment = load_assignment(path)?;
    if assignment.ambient() > config.size_cap {
        return Err(SearchError::SizeCap { requested: assignment.ambient(), cap: config.size_cap }.into());
    }
    let audit = audit_invariants(&assignment)?;
    let mut human = String::new();
    let mut json = json!({
        "command": "eval",
        "formula": formula,
        "ambient": assignment.ambient(),
        "audit": audit,
        "audit_passed": audit.all_passed(),
        "seed": g.seed,
        "version": VERSION,
    });
    let mut ev = Evaluator::new(&assignment);
    match &parsed {
        Parsed::Formula(f) => {
            let value = ev.eval(f)?;
            let _ = writeln!(human, "{f}\n  = {value}");
            json["value"] = serde_json::to_value(&value).expect("subspace serializes");
            json["dim"] = json!(value.dim());
        }
        Parsed::Equation(eq) => {
            let v = ev.eval_equation(eq)?;
            let _ = writeln!(human, "{eq}\n  lhs = {}\n  rhs = {}\n  holds: {}", v.lhs, v.rhs, v.holds);
            json["lhs"] = serde_json::to_value(&v.lhs).expect("subspace serializes");
            json["rhs"] = serde_json::to_value(&v.rhs).expect("subspace serializes");
            json["holds"] = json!(v.holds);
        }
    }
    let _ = writeln!(human, "invariant audit: {}", if audit.all_passed() { "all passed" } else { "FAILED" });
    let _ = write!(human, "{audit}");
    Ok(Report { code: if audit.all_passed() { 0 } else { 1 }, json, human })
}

fn cmd_check_law(name: &str, g: &GlobalOpts, config: &SearchConfig) -> Result<Report, CliError> {
    let is_name = name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-');
    let eq = if is_name {
        law(name).map_err(|_| {
            let known: Vec<&str> = Law::ALL.iter().map(|l| l.name()).collect();
            CliError::Usage(format!("unknown law {name:?}; known laws: {}", known.join(", ")))
        })?
    } else {
        crate::formula::parse_equation(name)?
    };
    run_falsify(eq, g, config)
}

fn run_falsify(eq: crate::formula::Equation, g: &GlobalOpts, config: &SearchConfig) -> Result<Report, CliError> {
    check_dim(g.dim, config)?;
    let params = FalsifyParams::new(g.dim, g.trials, g.seed).entry_bound(g.entry_bound).parallel(g.parallel);
    let verdict = falsify_with(&eq, &params, None)?;
    Ok(Report {
        code: if verdict.is_counterexample() { 1 } else { 0 },
        json: verdict.to_json_value(),
        human: render_verdict(&verdict),
    })
}

fn render_verdict(v: &Verdict) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}: {} in C^{}", v.status, v.equation, v.ambient);
    let _ = writeln!(s, "  trials: {}, seed: {}", v.trials_run, v.seed);
    if let (Some(w), Some(gap)) = (&v.witness, &v.gap) {
        let _ = writeln!(s, "  witness:");
        for (name, value) in w.iter() {
            let _ = writeln!(s, "    {name} = {value}");
        }
        let _ = writeln!(s, "  lhs = {}\n  rhs = {}", gap.lhs, gap.rhs);
    }
    s
}

fn cmd_separate(m: usize, n: usize, g: &GlobalOpts, config: &SearchConfig) -> Result<Report, CliError> {
    if m == 0 || m >= n {
        return Err(SearchError::BadOrder { low: m, high: n }.into());
    }
    let qubit = m.is_power_of_two() && n == 2 * m;
    let result = if qubit {
        qubit_alpha_separator(m.trailing_zeros(), g.seed, config)
    } else {
        separate_dims(m, n, g.seed, config)
    };
    let cert = match result {
        Ok(c) => c,
        Err(SearchError::Inconclusive { ambient, trials, seed }) => {
            let msg = format!("no counterexample in C^{ambient} after {trials} trials (seed {seed})");
            return Ok(Report {
                code: 1,
                json: json!({"status": "inconclusive", "low_dim": m, "high_dim": n, "trials": trials, "seed": seed, "version": VERSION}),
                human: format!("inconclusive: {msg}\n"),
            });
        }
        Err(e) => return Err(e.into()),
    };
    let mut json = cert.to_json_value();
    json["status"] = json!("separated");
    let route = match cert.route {
        SeparationRoute::Alpha { levels } => format!("alpha^{levels} = 0"),
        SeparationRoute::MDistributive { m } => format!("{m}-distributivity"),
    };
    let mut human = String::new();
    let _ = writeln!(human, "C^{} and C^{} are separated by {route}:", cert.low_dim, cert.high_dim);
    if cert.separator.to_string().len() <= 200 {
        let _ = writeln!(human, "  {}", cert.separator);
    }
    let _ = writeln!(
        human,
        "  holds in C^{}: {} trials without a counterexample",
        cert.low_dim, cert.holds_evidence.trials_run
    );
    let gap = cert.fails_witness.gap.as_ref().expect("certificate carries a gap");
    let _ = writeln!(
        human,
        "  fails in C^{}: lhs dim {}, rhs dim {} (trial {}, seed {})",
        cert.high_dim,
        gap.lhs.dim(),
        gap.rhs.dim(),
        cert.fails_witness.trials_run,
        cert.fails_witness.seed
    );
    Ok(Report { code: 0, json, human })
}

fn cmd_alpha(m: usize, g: &GlobalOpts) -> Result<Report, CliError> {
    let f = alpha_iter(m)?;
    let size = f.tree_size();
    if size > MAX_PRINTED_NODES {
        return Err(CliError::Usage(format!(
            "alpha^{m} has {size} nodes when printed (limit {MAX_PRINTED_NODES})"
        )));
    }
    let text = f.to_string();
    Ok(Report {
        code: 0,
        json: json!({
            "command": "alpha",
            "m": m,
            "formula": text,
            "tree_size": size.to_string(),
            "dag_size": f.dag_size(),
            "vars": f.vars(),
            "seed": g.seed,
            "version": VERSION,
        }),
        human: format!("{text}\n"),
    })
}

fn check_strands(n: usize) -> Result<(), CliError> {
    if n == 0 || n > MAX_TL_STRANDS {
        return Err(CliError::Usage(format!("--n must be in 1..={MAX_TL_STRANDS}, got {n}")));
    }
    Ok(())
}

fn rf_json(f: &RationalFunction) -> Value {
    json!({"exact": serde_json::to_value(f).expect("serializes"), "text": f.to_string()})
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * (1.0 + b.abs())
}

fn cmd_tl(sub: &TlCommand, g: &GlobalOpts) -> Result<Report, CliError> {
    match *sub {
        TlCommand::Relations { n } => {
            check_strands(n)?;
            let checks = relation_checks(n)?;
            let all = checks.iter().all(|c| c.holds);
            let mut human = String::new();
            for c in &checks {
                let _ = writeln!(human, "  [{}] {} e_{} e_{}", if c.holds { "pass" } else { "FAIL" }, c.relation, c.i, c.j);
            }
            let _ = writeln!(human, "TL_{n}: {} of {} relation checks hold", checks.iter().filter(|c| c.holds).count(), checks.len());
            Ok(Report {
                code: if all { 0 } else { 1 },
                json: json!({"command": "tl relations", "n": n, "checks": checks, "all_hold": all, "seed": g.seed, "version": VERSION}),
                human,
            })
        }
        TlCommand::Jw { n, r } => {
            check_strands(n)?;
            if let Some(r) = r {
                root_params(r)?;
                if n > r as usize - 1 {
                    return Err(TlError::BeyondRootBound { n, r }.into());
                }
            }
            let p = jones_wenzl(n)?;
            let tr = markov_trace(&p);
            let expected = &delta(n) * &RationalFunction::d_pow(-(n as i64));
            let mut ok = tr == expected;
            let mut human = String::new();
            let _ = writeln!(human, "p_{n} = {p}");
            let _ = writeln!(human, "tr(p_{n}) = {tr}  (Delta_{n}(d)/d^{n}: {})", if ok { "match" } else { "MISMATCH" });
            let mut json = json!({
                "command": "tl jw",
                "n": n,
                "projector": serde_json::to_value(&p).expect("serializes"),
                "trace": rf_json(&tr),
                "trace_matches": ok,
                "seed": g.seed,
                "version": VERSION,
            });
            if let Some(r) = r {
                let params = root_params(r)?;
                let num = NumericTLElement::specialize(&p, params.d)?;
                let tr_num = num.markov_trace();
                let exp_num = chebyshev(n).eval_f64(params.d) / params.d.powi(n as i32);
                let num_ok = close(tr_num, exp_num);
                ok &= num_ok;
                let _ = writeln!(human, "at r = {r}, d = {:.12}:", params.d);
                for (g, c) in &num.terms {
                    let _ = writeln!(human, "  {c:+.12} {g}");
                }
                let _ = writeln!(human, "  tr(p_{n}) = {tr_num:.12}, Delta_{n}(d)/d^{n} = {exp_num:.12} ({})", if num_ok { "match" } else { "MISMATCH" });
                json["root"] = json!({
                    "r": r,
                    "params": params,
                    "projector": num.to_json_value(),
                    "trace": tr_num,
                    "expected_trace": exp_num,
                    "trace_matches": num_ok,
                });
                json["trace_matches"] = json!(ok);
            }
            Ok(Report { code: if ok { 0 } else { 1 }, json, human })
        }
        TlCommand::Trace { n, r } => {
            check_strands(n)?;
            let params = r.map(root_params).transpose()?;
            let inv_d2 = RationalFunction::d_pow(-2);
            let mut ok = true;
            let mut human = String::new();
            let mut gens = Vec::new();
            for i in 1..n {
                let t = markov_trace(&generator_e(n, i)?);
                let holds = t == inv_d2;
                ok &= holds;
                let mut entry = json!({"i": i, "trace": rf_json(&t), "equals_inv_d2": holds});
                let _ = write!(human, "tr(e_{i}) = {t}");
                if let Some(p) = &params {
                    let v = eval_at_root(&t, p.r)?;
                    let quarter_sec2 = 0.25 / (std::f64::consts::PI / p.r as f64).cos().powi(2);
                    let num_ok = close(v, quarter_sec2);
                    ok &= num_ok;
                    entry["at_root"] = json!({"value": v, "quarter_sec_squared": quarter_sec2, "matches": num_ok});
                    let _ = write!(human, " = {v:.12} at r = {}", p.r);
                }
                let _ = writeln!(human);
                gens.push(entry);
            }
            let t1 = markov_trace(&crate::tl::TLElement::identity(n));
            ok &= t1.is_one();
            let _ = writeln!(human, "tr(1) = {t1}");
            let mut json = json!({"command": "tl trace", "n": n, "identity": rf_json(&t1), "generators": gens, "seed": g.seed, "version": VERSION});
            let p = jones_wenzl(n)?;
            let tp = markov_trace(&p);
            let expected = &delta(n) * &RationalFunction::d_pow(-(n as i64));
            ok &= tp == expected;
            let _ = writeln!(human, "tr(p_{n}) = {tp}");
            json["projector_trace"] = rf_json(&tp);
            json["projector_trace_matches"] = json!(tp == expected);
            if let Some(p) = &params {
                json["r"] = json!(p.r);
                json["d"] = json!(p.d);
                let dr = chebyshev(p.r as usize - 1).eval_f64(p.d);
                json["delta_r_minus_1"] = json!(dr);
                let _ = writeln!(human, "Delta_{}(d) = {dr:.3e} at d = {:.12}", p.r - 1, p.d);
                if n < p.r as usize {
                    let v = eval_at_root(&tp, p.r)?;
                    let _ = writeln!(human, "tr(p_{n}) = {v:.12} at r = {}", p.r);
                    json["projector_trace_at_root"] = json!(v);
                } else {
                    let _ = writeln!(human, "p_{n} does not exist at r = {} (needs n <= {})", p.r, p.r - 1);
                    json["projector_trace_at_root"] = Value::Null;
                }
            }
            json["all_match"] = json!(ok);
            Ok(Report { code: if ok { 0 } else { 1 }, json, human })
        }
    }
}
