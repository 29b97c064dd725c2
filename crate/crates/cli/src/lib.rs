//! Command-line front end for `casimir-core`.
//!
//! [`run`] executes one parsed command and returns the rendered output with
//! an exit status; `main.rs` only parses arguments and prints.

pub mod cache;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use casimir_core::capelli::capelli_poly;
use casimir_core::central::{
    auto_samples, braided_casimir, charpoly_interpolate, conjecture_scan, gl2_hc_formula, rep_for, shifted_determinant,
    CentralPolynomial, Gl2Kind, HcImagePoly, PolyKind,
};
use casimir_core::irreps::DominantWeight;
use casimir_core::ncla::{upoly_display, UeaMatrix};
use casimir_core::report::CheckReport;
use casimir_core::verify::{run_suite, Suite};
use casimir_core::{parse_element, Error as CoreError};

pub use cache::{CacheKey, CacheStore, CACHE_ENV};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BOUND: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("resource bound exceeded: {0}")]
    Bound(String),
    #[error(transparent)]
    Engine(CoreError),
    #[error("cache: {0}")]
    Io(#[from] std::io::Error),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::TermBound { .. } | CoreError::TensorBound { .. } => CliError::Bound(e.to_string()),
            CoreError::NotDominant(_)
            | CoreError::WeightLength { .. }
            | CoreError::Syntax { .. }
            | CoreError::IndexOutOfRange { .. } => CliError::Usage(e.to_string()),
            other => CliError::Engine(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Bound(_) => EXIT_BOUND,
            CliError::Engine(_) | CliError::Io(_) => EXIT_FAILED,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "casimir", version, about = "Central polynomials of braided Casimir elements over U(gl_n)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Result cache file.
    #[arg(long, global = true, env = CACHE_ENV)]
    pub cache: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub parallelism: u16,
    /// Largest number of terms a single UEA product may produce.
    #[arg(long, global = true, default_value_t = casimir_core::pbw::DEFAULT_TERM_BOUND)]
    pub term_bound: usize,
}

#[derive(Debug, Args)]
pub struct WeightArgs {
    /// Rank of gl_n.
    #[arg(long)]
    pub n: usize,
    /// Dominant weight, comma separated, n entries.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The braided Casimir matrix Ω_λ.
    Omega(WeightArgs),
    /// The shifted determinant D_λ(u).
    Sdet {
        #[command(flatten)]
        weight: WeightArgs,
        /// Also print the Harish-Chandra image.
        #[arg(long)]
        hc: bool,
    },
    /// Harish-Chandra image of the characteristic polynomial, by interpolation.
    Charpoly {
        #[command(flatten)]
        weight: WeightArgs,
        /// `auto` or weights separated by `;`, e.g. `4,1;5,1;6,2`.
        #[arg(long, default_value = "auto", allow_hyphen_values = true)]
        mu_samples: String,
    },
    /// Harish-Chandra image of a central element, or the gl_2 closed forms for λ.
    Hc {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Element in generator syntax, e.g. `E[1,1]E[2,2] - E[2,2] - E[1,2]E[2,1]`.
        #[arg(long, allow_hyphen_values = true)]
        element: Option<String>,
    },
    /// The Capelli polynomial tr S_λ(u).
    Capelli(WeightArgs),
    /// Run an identity suite.
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(Suite::NAMES))]
        suite: String,
        #[arg(long)]
        n: usize,
    },
    /// Experimental: centrality of D_λ across basis orders.
    ConjectureScan {
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Weights to scan; repeatable. Defaults to (1,1,0,…) and (2,0,0,…).
        #[arg(long, allow_hyphen_values = true)]
        lambda: Vec<String>,
        /// Try every basis order when dim V_λ is at most this.
        #[arg(long, default_value_t = 6)]
        permute_up_to: usize,
    },
}

/// The validated settings for one invocation.
#[derive(Debug)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub cache_path: Option<PathBuf>,
    pub parallelism: usize,
    pub term_bound: usize,
}

impl From<Cli> for RunConfig {
    fn from(c: Cli) -> Self {
        Self {
            command: c.command,
            format: c.format,
            cache_path: c.cache,
            parallelism: c.parallelism as usize,
            term_bound: c.term_bound,
        }
    }
}

/// What a command produced: the JSON document, its text rendering, and
/// whether every checked identity held.
pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub all_pass: bool,
}

impl Outcome {
    fn ok(json: Value, text: String) -> Self {
        Self { json, text, all_pass: true }
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_pass {
            EXIT_OK
        } else {
            EXIT_FAILED
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("JSON values serialize");
                s.push('\n');
                s
            }
            Format::Text => self.text.clone(),
        }
    }
}

fn check_rank(n: usize) -> Result<(), CliError> {
    if n < 2 {
        return Err(CliError::Usage(format!("--n must be at least 2, got {n}")));
    }
    Ok(())
}

fn weight(args: &WeightArgs) -> Result<DominantWeight, CliError> {
    check_rank(args.n)?;
    DominantWeight::parse(&args.lambda, args.n).map_err(|e| CliError::Usage(e.to_string()))
}

fn parse_samples(text: &str, n: usize) -> Result<Vec<DominantWeight>, CliError> {
    text.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| DominantWeight::parse(s, n).map_err(|e| CliError::Usage(e.to_string())))
        .collect()
}

/// `(coefficient)·u^k + …`, highest degree first.
pub fn hc_text(hc: &HcImagePoly) -> String {
    let parts: Vec<String> = hc.iter().collect::<Vec<_>>().into_iter().rev().map(|(k, c)| format!("({c})·u^{k}")).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn central_json(p: &CentralPolynomial) -> Value {
    serde_json::to_value(p.to_json()).expect("JSON values serialize")
}

fn central_text(label: &str, p: &CentralPolynomial) -> String {
    let mut t = format!("{label} = {}\n", upoly_display(&p.poly));
    for (d, c) in &p.centrality {
        let _ = writeln!(t, "  u^{d}: {}", if *c { "central" } else { "NOT central" });
    }
    t
}

fn matrix_text(m: &UeaMatrix) -> String {
    let mut t = String::new();
    for r in 0..m.size() {
        let row: Vec<String> = (0..m.size()).map(|c| upoly_display(m.get(r, c))).collect();
        let _ = writeln!(t, "[{}]", row.join(", "));
    }
    t
}

fn omega(w: &DominantWeight) -> Result<Outcome, CliError> {
    let m = braided_casimir(&rep_for(w)?);
    Ok(Outcome::ok(serde_json::to_value(m.to_json()).expect("serializes"), matrix_text(&m)))
}

fn sdet(w: &DominantWeight, hc: bool) -> Result<Outcome, CliError> {
    let d = shifted_determinant(&rep_for(w)?)?;
    let mut json = json!({ "command": "sdet", "result": central_json(&d) });
    let mut text = central_text(&format!("D_{w}(u)"), &d);
    if hc {
        match d.hc_image() {
            Ok(img) => {
                json["hc"] = serde_json::to_value(img.to_json()).expect("serializes");
                let _ = writeln!(text, "chi(D) = {}", hc_text(&img));
                if w.n() == 2 {
                    let matches = img == gl2_hc_formula(Gl2Kind::D, w)?;
                    json["matches_gl2_product_form"] = json!(matches);
                    let _ = writeln!(text, "matches the gl_2 product form: {matches}");
                }
            }
            Err(_) => {
                json["hc"] = Value::Null;
                let _ = writeln!(text, "chi(D) undefined: some coefficient is not central");
            }
        }
    }
    Ok(Outcome::ok(json, text))
}

fn charpoly(w: &DominantWeight, samples: &str) -> Result<Outcome, CliError> {
    let n = w.n();
    let dim = rep_for(w)?.dim() as u32;
    let comps = w.components();
    let gap = comps[0] - comps[n - 1] + 1;
    let (samples, holdouts) = if samples.trim() == "auto" {
        (auto_samples(n, dim, gap), auto_samples(n, 1, gap + 2))
    } else {
        (parse_samples(samples, n)?, Vec::new())
    };
    let fit = charpoly_interpolate(w, &samples, &holdouts, None)?;
    let mut json = json!({
        "command": "charpoly",
        "lambda": comps,
        "hc": fit.hc.to_json(),
        "samples_used": fit.used.len(),
        "discarded": fit.discarded.iter().map(|(mu, d)| json!({"mu": mu.components(), "min_poly_degree": d})).collect::<Vec<_>>(),
        "holdouts": fit.holdouts.iter().map(|(mu, ok)| json!({"mu": mu.components(), "annihilates": ok})).collect::<Vec<_>>(),
    });
    let mut text = format!("chi(P_{w}) = {}\n", hc_text(&fit.hc));
    let _ = writeln!(text, "samples used: {}, discarded: {}", fit.used.len(), fit.discarded.len());
    for (mu, ok) in &fit.holdouts {
        let _ = writeln!(text, "holdout {mu}: {}", if *ok { "annihilates" } else { "FAILS" });
    }
    let mut all_pass = fit.holdouts.iter().all(|(_, ok)| *ok);
    if n == 2 {
        let matches = fit.hc == gl2_hc_formula(Gl2Kind::P, w)?;
        json["matches_gl2_product_form"] = json!(matches);
        let _ = writeln!(text, "matches the gl_2 product form: {matches}");
        all_pass &= matches;
    }
    Ok(Outcome { json, text, all_pass })
}

fn hc(n: usize, lambda: Option<&str>, element: Option<&str>) -> Result<Outcome, CliError> {
    check_rank(n)?;
    if let Some(src) = element {
        let x = parse_element(src, n).map_err(|e| CliError::Usage(e.to_string()))?;
        let central = x.is_central()?;
        let img = x.highest_weight_functional();
        let json = json!({"command": "hc", "element": x.to_json(), "central": central, "hc": img});
        let mut text = format!("chi({x}) = {img}\n");
        if !central {
            text.push_str("warning: the element is not central; the value is the highest-weight functional\n");
        }
        return Ok(Outcome::ok(json, text));
    }
    let Some(lambda) = lambda else {
        return Err(CliError::Usage("hc needs --element, or --lambda with --n 2".into()));
    };
    if n != 2 {
        return Err(CliError::Usage("closed forms exist for n = 2; use sdet --hc or charpoly for n ≥ 3".into()));
    }
    let w = DominantWeight::parse(lambda, n).map_err(|e| CliError::Usage(e.to_string()))?;
    let d = gl2_hc_formula(Gl2Kind::D, &w)?;
    let p = gl2_hc_formula(Gl2Kind::P, &w)?;
    let json = json!({"command": "hc", "lambda": w.components(), "D": d.to_json(), "P": p.to_json()});
    let text = format!("chi(D_{w}) = {}\nchi(P_{w}) = {}\n", hc_text(&d), hc_text(&p));
    Ok(Outcome::ok(json, text))
}

fn capelli(w: &DominantWeight) -> Result<Outcome, CliError> {
    if !w.is_partition() || w.size() == 0 {
        return Err(CliError::Usage(format!("capelli needs a nonzero partition, got {w}")));
    }
    let c = CentralPolynomial::new(capelli_poly(w, w.n())?, w.clone(), PolyKind::Capelli)?;
    let mut json = json!({"command": "capelli", "result": central_json(&c)});
    let mut text = central_text(&format!("c_{w}(u)"), &c);
    if let Ok(img) = c.hc_image() {
        json["hc"] = serde_json::to_value(img.to_json()).expect("serializes");
        let _ = writeln!(text, "chi(c) = {}", hc_text(&img));
    }
    let all_pass = c.all_central();
    Ok(Outcome { json, text, all_pass })
}

fn reports_outcome(suite: &str, n: usize, reports: Vec<CheckReport>) -> Outcome {
    let all_pass = reports.iter().all(|r| r.pass);
    let failed = reports.iter().filter(|r| !r.pass).count();
    let mut text: String = reports.iter().map(|r| r.line() + "\n").collect();
    let _ = writeln!(text, "{suite} n={n}: {} checks, {failed} failed", reports.len());
    let json = json!({"suite": suite, "n": n, "pass": all_pass, "reports": reports});
    Outcome { json, text, all_pass }
}

fn scan(n: usize, lambdas: &[String], permute_up_to: usize) -> Result<Outcome, CliError> {
    check_rank(n)?;
    let weights: Vec<DominantWeight> = if lambdas.is_empty() {
        let mut a = vec![1, 1];
        a.resize(n, 0);
        let mut b = vec![2];
        b.resize(n, 0);
        vec![DominantWeight::new(a)?, DominantWeight::new(b)?]
    } else {
        lambdas.iter().map(|l| DominantWeight::parse(l, n).map_err(|e| CliError::Usage(e.to_string()))).collect::<Result<_, _>>()?
    };
    let mut results = Vec::new();
    let mut text = String::from("experimental: evidence only, never a pass/fail verdict\n");
    for w in &weights {
        let s = conjecture_scan(w, permute_up_to)?;
        let central: Vec<String> = s.default_basis.iter().map(|(k, c)| format!("u^{k}:{}", if *c { "central" } else { "not central" })).collect();
        let _ = writeln!(text, "lambda={w} dim={} default basis [{}]", s.dim, central.join(" "));
        if s.permutations_tried > 0 {
            let _ = writeln!(
                text,
                "  basis orders: {} tried, {} with all coefficients central",
                s.permutations_tried, s.permutations_all_central
            );
        }
        results.push(serde_json::to_value(&s).expect("serializes"));
    }
    Ok(Outcome::ok(json!({"command": "conjecture-scan", "experimental": true, "n": n, "results": results}), text))
}

/// Arguments that identify a cached result, if the command is cacheable.
fn cache_key(cmd: &Command) -> Option<CacheKey> {
    let key = |name: &str, w: &WeightArgs, extra: &str| {
        let lambda = DominantWeight::parse(&w.lambda, w.n).ok()?;
        Some(CacheKey::new(name, w.n, lambda.components(), extra))
    };
    match cmd {
        Command::Omega(w) => key("omega", w, ""),
        Command::Sdet { weight, hc } => key("sdet", weight, if *hc { "hc" } else { "" }),
        Command::Charpoly { weight, mu_samples } => key("charpoly", weight, mu_samples.trim()),
        Command::Capelli(w) => key("capelli", w, ""),
        _ => None,
    }
}

fn dispatch(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Omega(w) => omega(&weight(w)?),
        Command::Sdet { weight: w, hc } => sdet(&weight(w)?, *hc),
        Command::Charpoly { weight: w, mu_samples } => charpoly(&weight(w)?, mu_samples),
        Command::Hc { n, lambda, element } => hc(*n, lambda.as_deref(), element.as_deref()),
        Command::Capelli(w) => capelli(&weight(w)?),
        Command::Verify { suite, n } => {
            check_rank(*n)?;
            let s: Suite = suite.parse().map_err(|e: CoreError| CliError::Usage(e.to_string()))?;
            let reports = run_suite(s, *n).map_err(|e| match e {
                CoreError::Invalid(m) => CliError::Usage(m),
                other => other.into(),
            })?;
            Ok(reports_outcome(suite, *n, reports))
        }
        Command::ConjectureScan { n, lambda, permute_up_to } => scan(*n, lambda, *permute_up_to),
    }
}

/// Executes one command inside a pool of `parallelism` workers.
pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    casimir_core::pbw::set_term_bound(config.term_bound);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {} workers: {e}", config.parallelism)))?;
    pool.install(|| {
        let store = config.cache_path.as_ref().map(CacheStore::new);
        let key = cache_key(&config.command);
        if let (Some(store), Some(key)) = (&store, &key) {
            if let Some(cached) = store.get(key)? {
                if let Ok(outcome) = outcome_from_cache(cached) {
                    log::debug!("cache hit for {key:?}");
                    return Ok(outcome);
                }
            }
        }
        let outcome = dispatch(&config.command)?;
        if let (Some(store), Some(key)) = (&store, &key) {
            store.put(key, &outcome_to_cache(&outcome))?;
        }
        Ok(outcome)
    })
}

fn outcome_to_cache(o: &Outcome) -> Value {
    json!({"json": o.json, "text": o.text, "all_pass": o.all_pass})
}

fn outcome_from_cache(v: Value) -> Result<Outcome, ()> {
    let json = v.get("json").cloned().ok_or(())?;
    let text = v.get("text").and_then(Value::as_str).ok_or(())?.to_string();
    let all_pass = v.get("all_pass").and_then(Value::as_bool).ok_or(())?;
    Ok(Outcome { json, text, all_pass })
}
