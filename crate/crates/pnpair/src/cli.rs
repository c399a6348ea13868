//! The `pnpair` command-line front end.
//!
//! Every command is deterministic given its flags (and seed, where sampling
//! is involved); identical invocations produce byte-identical JSON apart
//! from the `timestamp` field, which `--no-timestamp` suppresses.
//!
//! Exit codes: 0 success, 1 computational fault, 2 usage error, 3 a search
//! or verification found exceptional quintuples (reserved, not an error).

use crate::error::{Error, Result};
use crate::factorize::{self, FactorBudget, FactorCache};
use crate::freeness::{self, EDivisor, FreenessSpec, GDivisor, RationalMap};
use crate::gf2::{make_ctx, FieldCtx, FieldElement};
use crate::gf2x;
use crate::report::{option_rational_json, RationalJson};
use crate::search::{self, SearchOptions, Shard};
use crate::sieve;
use crate::tables::{self, TableId};
use crate::xm1::{self, XmFactors};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "pnpair",
    version,
    about = "Primitive normal pairs (α, f(α)) over fields of even characteristic: bounds, sieves, counts and searches"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format (csv only for table-shaped results).
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,

    /// Omit the timestamp field for byte-identical reruns.
    #[arg(long, global = true)]
    pub no_timestamp: bool,

    /// Worker threads (default: hardware parallelism).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Factorization cache file.
    #[arg(long, global = true, env = "PNPAIR_CACHE")]
    pub cache: Option<PathBuf>,

    /// Rho iteration cap per attempt in the factoring pipeline.
    #[arg(long, global = true)]
    pub factor_budget: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Describe F_{q^m}: modulus, group order factorization, structure of
    /// x^m−1 and the first primitive element.
    FieldInfo {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
        /// Monic irreducible modulus over F_2 as a monomial list,
        /// e.g. "x^6+x^4+x^3+x+1" (default: lexicographically smallest).
        #[arg(long)]
        modulus: Option<String>,
    },
    /// Factor a positive integer completely.
    Factor { n: String },
    /// Structure of x^m−1 over F_q: m′, multiplicity, factor degrees, σ.
    Xm1 {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
    },
    /// The plain sufficient condition at full divisor strength.
    Bound {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
    },
    /// Evaluate the sieve condition for a divisor d and a g selection.
    Sieve {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
        /// Divisor of q^m−1 (decimal) or "qm-1".
        #[arg(long)]
        d: String,
        /// "1", "x+1", "x^R-1" or "degs:1,2,..." selecting distinct factors.
        #[arg(long)]
        g: String,
    },
    /// Closed-form sieve value for the m′ | q−1 regime.
    Lemma53 {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        a: u64,
    },
    /// Exhaustively count α with α e₁/g₁-free and f(α) e₂/g₂-free.
    CountM {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        modulus: Option<String>,
        /// Quintuple a,b,c,d,e as comma-separated hex element values.
        #[arg(long)]
        quintuple: String,
        /// "full", "1" or a decimal divisor of q^m−1.
        #[arg(long, default_value = "full")]
        e1: String,
        #[arg(long, default_value = "full")]
        e2: String,
        /// "full", "1", "x+1" or "x^R-1".
        #[arg(long, default_value = "full")]
        g1: String,
        #[arg(long, default_value = "full")]
        g2: String,
        /// Largest admissible field size q^m.
        #[arg(long, default_value_t = 1 << 24)]
        cap: u128,
    },
    /// Search quintuples for witnesses; exhaustive or budgeted sampling.
    Search {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        modulus: Option<String>,
        #[arg(long, conflicts_with_all = ["budget", "seed"])]
        exhaustive: bool,
        /// Number of distinct random quintuples to test.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Round-robin shard "I/T" of the exhaustive enumeration.
        #[arg(long)]
        shard: Option<String>,
        /// Checkpoint file to write while searching.
        #[arg(long, conflicts_with = "resume")]
        checkpoint: Option<PathBuf>,
        /// Checkpoint file to resume from (and keep updating).
        #[arg(long)]
        resume: Option<PathBuf>,
        /// Stop after this many quintuples (checkpoint first).
        #[arg(long)]
        limit: Option<u64>,
        /// Include the exceptional quintuples in the report.
        #[arg(long)]
        emit_exceptional: bool,
        /// Largest admissible field size q^m for exhaustive runs.
        #[arg(long, default_value_t = 1 << 24)]
        exhaustive_cap: u128,
    },
    /// Re-verify counter-example quintuples (shipped rows by default).
    VerifyCounterexample {
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        modulus: Option<String>,
        /// Quintuple a,b,c,d,e as comma-separated hex element values.
        #[arg(long)]
        quintuple: Option<String>,
    },
    /// Recompute the shipped bound tables and the exception-pair lists.
    ReproduceTables {
        /// Restrict to one table (1 or 2).
        #[arg(long)]
        table: Option<u8>,
        /// Recompute rows from a custom CSV file instead of the shipped
        /// table (same columns; requires --table).
        #[arg(long, requires = "table")]
        table_file: Option<PathBuf>,
        /// Skip the exception-pair matrix and the (32,31) check.
        #[arg(long)]
        tables_only: bool,
    },
    /// Sweep W(n) < c·n^(1/alpha) up to n-max.
    CheckWbound {
        #[arg(long)]
        n_max: u64,
        #[arg(long)]
        alpha: u32,
        #[arg(long)]
        constant: String,
        #[arg(long)]
        odd_only: bool,
    },
}

fn q_to_k(q: u64) -> Result<u32> {
    if q < 2 || !q.is_power_of_two() {
        return Err(Error::InvalidParameter(format!(
            "q must be a power of two >= 2, got {q}"
        )));
    }
    Ok(q.trailing_zeros())
}

fn check_m(m: u32) -> Result<()> {
    if m == 0 || m > 1_000_000 {
        return Err(Error::InvalidParameter(format!(
            "m = {m} is outside the supported range 1..=1000000"
        )));
    }
    Ok(())
}

fn parse_modulus(s: &str) -> Result<u128> {
    gf2x::parse(s).ok_or_else(|| Error::Parse(format!("bad modulus {s:?}")))
}

fn ctx_from(q: u64, m: u32, modulus: &Option<String>) -> Result<FieldCtx> {
    let k = q_to_k(q)?;
    let modulus = modulus.as_deref().map(parse_modulus).transpose()?;
    make_ctx(k, m, modulus)
}

fn parse_quintuple(ctx: &FieldCtx, s: &str) -> Result<RationalMap> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 5 {
        return Err(Error::Parse(
            "quintuple must be five comma-separated hex values".into(),
        ));
    }
    let mut vals = [FieldElement::ZERO; 5];
    for (i, p) in parts.iter().enumerate() {
        let e = FieldElement::from_hex(p)?;
        vals[i] = ctx.element_from_bits(e.bits())?;
    }
    RationalMap::new(vals[0], vals[1], vals[2], vals[3], vals[4])
}

fn parse_e_selector(ctx: &FieldCtx, s: &str) -> Result<EDivisor> {
    match s {
        "full" => Ok(EDivisor::full(ctx)),
        "1" => Ok(EDivisor::trivial()),
        _ => {
            let d: BigUint = s
                .parse()
                .map_err(|_| Error::Parse(format!("bad e divisor {s:?}")))?;
            EDivisor::from_divisor(ctx, &d)
        }
    }
}

fn parse_g_selector(ctx: &FieldCtx, xf: &XmFactors, s: &str) -> Result<GDivisor> {
    match s {
        "full" => GDivisor::full(ctx, xf),
        "1" => Ok(GDivisor::trivial()),
        _ => {
            // select the factors dividing x^R−1
            let r: u32 = if s == "x+1" || s == "x-1" {
                1
            } else {
                s.strip_prefix("x^")
                    .and_then(|rest| rest.strip_suffix("-1"))
                    .and_then(|v| v.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("bad g selector {s:?}")))?
            };
            if r == 0 || xf.structure.m_prime() % r != 0 {
                return Err(Error::InvalidParameter(format!(
                    "x^{r}-1 does not divide x^{}-1",
                    xf.structure.m_prime()
                )));
            }
            let xr1 = xm1::PolyExt::x_pow_minus_one(r);
            let mut indices = Vec::new();
            for (i, f) in xf.factors.iter().enumerate() {
                if xr1.rem(ctx, f)?.is_zero() {
                    indices.push(i);
                }
            }
            GDivisor::from_indices(ctx, xf, &indices)
        }
    }
}

fn g_degrees_from_selector(k: u32, m: u32, s: &str) -> Result<Vec<u32>> {
    let xm = xm1::xm_structure(k, m);
    if let Some(rest) = s.strip_prefix("degs:") {
        let mut degs = Vec::new();
        for part in rest.split(',') {
            degs.push(
                part.trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad degree list {s:?}")))?,
            );
        }
        return Ok(degs);
    }
    tables::g_spec_degrees(s, k, &xm)
}

struct Runtime {
    budget: FactorBudget,
    cache: Option<FactorCache>,
}

impl Runtime {
    fn order_factors(&self, k: u32, m: u32) -> Result<factorize::IntFactorization> {
        let n = k
            .checked_mul(m)
            .ok_or_else(|| Error::InvalidParameter("k·m overflows".into()))?;
        factorize::factor_two_pow_minus_1_with(n, &self.budget, self.cache.as_ref())
    }
}

/// Execute a parsed invocation; returns the rendered report and exit code.
pub fn execute(cli: &Cli) -> Result<(String, i32)> {
    let runtime = Runtime {
        budget: {
            let mut b = FactorBudget::default();
            if let Some(iters) = cli.factor_budget {
                b.rho_max_iterations = iters;
            }
            b
        },
        cache: cli
            .cache
            .as_ref()
            .map(|p| FactorCache::open(p))
            .transpose()?,
    };
    let mut exit = 0;
    let value: Value =
        match &cli.command {
            Command::FieldInfo { q, m, modulus } => {
                let ctx = ctx_from(*q, *m, modulus)?;
                let xm = xm1::xm_structure(ctx.k(), ctx.m());
                let alpha = ctx.find_primitive();
                json!({
                    "q": q,
                    "m": m,
                    "n": ctx.n(),
                    "modulus": ctx.modulus_string(),
                    "group_order": ctx.group_order().to_string(),
                    "group_order_factors": factor_json(ctx.group_order_factors()),
                    "primitive_element": alpha.to_hex(),
                    "xm1": xm_json(&xm),
                })
            }
            Command::Factor { n } => {
                let n: BigUint = n
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad integer {n:?}")))?;
                let fac = match &runtime.cache {
                    Some(cache) => match cache.get(&n) {
                        Some(hit) => hit,
                        None => {
                            let f = factorize::factor_with_budget(&n, &runtime.budget)?;
                            cache.insert(&f);
                            f
                        }
                    },
                    None => factorize::factor_with_budget(&n, &runtime.budget)?,
                };
                factor_json(&fac)
            }
            Command::Xm1 { q, m } => {
                let k = q_to_k(*q)?;
                check_m(*m)?;
                let xm = xm1::xm_structure(k, *m);
                xm_json(&xm)
            }
            Command::Bound { q, m } => {
                let k = q_to_k(*q)?;
                check_m(*m)?;
                let order = runtime.order_factors(k, *m)?;
                let xm = xm1::xm_structure(k, *m);
                let pc = sieve::plain_condition_full(k, *m, &order, &xm);
                json!({
                    "q": q,
                    "m": m,
                    "omega": order.omega(),
                    "w": order.w_value().to_string(),
                    "distinct_factors": xm.distinct_factor_count(),
                    "omega_xm": xm.omega_xm().to_string(),
                    "lhs_approx": pc.lhs,
                    "rhs": pc.rhs.to_string(),
                    "passes": pc.passes,
                })
            }
            Command::Sieve { q, m, d, g } => {
                let k = q_to_k(*q)?;
                check_m(*m)?;
                let order = runtime.order_factors(k, *m)?;
                let xm = xm1::xm_structure(k, *m);
                let dspec = tables::parse_d_spec(d)?;
                let degrees = g_degrees_from_selector(k, *m, g)?;
                let choice = sieve::SieveChoice::new(&order, &xm, &dspec, degrees)?;
                let ev = sieve::sieve_eval(&choice, k, *m);
                json!({
                    "q": q,
                    "m": m,
                    "d": d,
                    "g": g,
                    "n": ev.n,
                    "k": ev.k,
                    "w_d": ev.w_d.to_string(),
                    "omega_g": ev.omega_g.to_string(),
                    "theta": RationalJson::from(&ev.theta),
                    "s": option_rational_json(&ev.s),
                    "rhs": option_rational_json(&ev.rhs),
                    "lhs_approx": ev.lhs,
                    "passes": ev.passes,
                })
            }
            Command::Lemma53 { q, a } => {
                let k = q_to_k(*q)?;
                let s = sieve::lemma53_s(k, *a)?;
                json!({
                    "q": q,
                    "a": a,
                    "m_prime": (q - 1) / a,
                    "valid": s.is_some(),
                    "s": option_rational_json(&s),
                })
            }
            Command::CountM {
                q,
                m,
                modulus,
                quintuple,
                e1,
                e2,
                g1,
                g2,
                cap,
            } => {
                let ctx = ctx_from(*q, *m, modulus)?;
                let map = parse_quintuple(&ctx, quintuple)?;
                let xf = xm1::explicit_factors(&ctx)?;
                let spec1 = FreenessSpec {
                    e: parse_e_selector(&ctx, e1)?,
                    g: parse_g_selector(&ctx, &xf, g1)?,
                };
                let spec2 = FreenessSpec {
                    e: parse_e_selector(&ctx, e2)?,
                    g: parse_g_selector(&ctx, &xf, g2)?,
                };
                let r = freeness::count_m(&ctx, &map, &spec1, &spec2, *cap)?;
                json!({
                    "q": q,
                    "m": m,
                    "modulus": ctx.modulus_string(),
                    "quintuple": map.to_hex(),
                    "count": r.count,
                    "poles_skipped": r.poles_skipped,
                })
            }
            Command::Search {
                q,
                m,
                modulus,
                exhaustive,
                budget,
                seed,
                shard,
                checkpoint,
                resume,
                limit,
                emit_exceptional,
                exhaustive_cap,
            } => {
                let ctx = ctx_from(*q, *m, modulus)?;
                let report = if *exhaustive {
                    let options = SearchOptions {
                        exhaustive_cap: *exhaustive_cap,
                        emit_exceptional: *emit_exceptional,
                        checkpoint_path: resume.clone().or_else(|| checkpoint.clone()),
                        checkpoint_every: 1_000_000,
                        resume: resume.is_some(),
                        max_quintuples: *limit,
                    };
                    match shard {
                        Some(s) => {
                            let shard: Shard = s.parse()?;
                            search::exhaustive_search(&ctx, shard, &options)?
                        }
                        None => {
                            let workers = cli
                                .threads
                                .unwrap_or_else(rayon::current_num_threads)
                                .max(1) as u32;
                            search::exhaustive_search_parallel(&ctx, workers, &options)?
                        }
                    }
                } else {
                    let budget = budget.ok_or_else(|| {
                        Error::InvalidParameter("need --exhaustive or --budget N".into())
                    })?;
                    search::sampled_search(&ctx, budget, *seed)?
                };
                if report.exceptional > 0 {
                    exit = 3;
                }
                serde_json::to_value(&report).expect("serializable")
            }
            Command::VerifyCounterexample {
                q,
                m,
                modulus,
                quintuple,
            } => {
                let mut confirmations = Vec::new();
                match (q, m, quintuple) {
                    (Some(q), Some(m), Some(quintuple)) => {
                        let ctx = ctx_from(*q, *m, modulus)?;
                        let map = parse_quintuple(&ctx, quintuple)?;
                        let confirmed = search::verify_counterexample(&ctx, &map, 1 << 24)?;
                        confirmations.push(json!({
                            "q": q,
                            "m": m,
                            "modulus": ctx.modulus_string(),
                            "quintuple": map.to_hex(),
                            "exceptional": confirmed,
                        }));
                        if confirmed {
                            exit = 3;
                        }
                    }
                    (None, None, None) => {
                        for row in search::counterexample_rows()? {
                            let ctx = row.ctx()?;
                            let map = row.quintuple(&ctx)?;
                            let confirmed = search::verify_counterexample(&ctx, &map, 1 << 24)?;
                            confirmations.push(json!({
                                "q": row.q,
                                "m": row.m,
                                "modulus": ctx.modulus_string(),
                                "quintuple": map.to_hex(),
                                "exceptional": confirmed,
                            }));
                            if confirmed {
                                exit = 3;
                            }
                        }
                    }
                    _ => {
                        return Err(Error::InvalidParameter(
                            "give --q, --m and --quintuple together, or none for the shipped rows"
                                .into(),
                        ))
                    }
                }
                json!({ "confirmations": confirmations })
            }
            Command::ReproduceTables {
                table,
                table_file,
                tables_only,
            } => match (table, table_file) {
                (Some(t), Some(path)) => {
                    if !matches!(t, 1 | 2) {
                        return Err(Error::InvalidParameter(format!("no table {t}; use 1 or 2")));
                    }
                    let csv = std::fs::read_to_string(path)?;
                    serde_json::to_value(tables::reproduce_table_csv(&csv)?).expect("serializable")
                }
                (Some(1), None) => serde_json::to_value(tables::reproduce_table(TableId::One)?)
                    .expect("serializable"),
                (Some(2), None) => serde_json::to_value(tables::reproduce_table(TableId::Two)?)
                    .expect("serializable"),
                (Some(t), None) => {
                    return Err(Error::InvalidParameter(format!("no table {t}; use 1 or 2")))
                }
                (None, _) => {
                    if *tables_only {
                        json!({
                            "table1": tables::reproduce_table(TableId::One)?,
                            "table2": tables::reproduce_table(TableId::Two)?,
                        })
                    } else {
                        serde_json::to_value(tables::reproduce_all()?).expect("serializable")
                    }
                }
            },
            Command::CheckWbound {
                n_max,
                alpha,
                constant,
                odd_only,
            } => {
                let r = factorize::check_w_bound(*n_max, *alpha, constant, *odd_only)?;
                serde_json::to_value(&r).expect("serializable")
            }
        };
    let rendered = render(cli, value)?;
    Ok((rendered, exit))
}

fn factor_json(f: &factorize::IntFactorization) -> Value {
    json!({
        "value": f.value().to_string(),
        "primes": f
            .primes()
            .iter()
            .map(|(p, e)| json!({"p": p.to_string(), "e": e}))
            .collect::<Vec<_>>(),
        "omega": f.omega(),
        "W": f.w_value().to_string(),
    })
}

fn xm_json(xm: &xm1::XmStructure) -> Value {
    let sigma = xm.sigma();
    json!({
        "m_prime": xm.m_prime(),
        "a": xm.a(),
        "u": xm.u(),
        "multiplicity": xm.multiplicity(),
        "degrees": xm.factor_degrees(),
        "omega_xm": xm.omega_xm().to_string(),
        "sigma": RationalJson::from(&sigma),
    })
}

fn render(cli: &Cli, mut value: Value) -> Result<String> {
    if !cli.no_timestamp {
        if let Value::Object(map) = &mut value {
            let now = std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0);
            map.insert("timestamp".into(), json!(now));
        }
    }
    match cli.output {
        OutputFormat::Json => Ok(serde_json::to_string_pretty(&value).expect("serializable")),
        OutputFormat::Csv => render_csv(&value),
        OutputFormat::Text => Ok(render_text(&value)),
    }
}

fn render_csv(value: &Value) -> Result<String> {
    // table-shaped results only: an array of row objects
    let rows = match value {
        Value::Array(rows) => rows,
        _ => {
            return Err(Error::InvalidParameter(
                "csv output is only available for table-shaped results \
                 (reproduce-tables --table 1|2)"
                    .into(),
            ))
        }
    };
    let mut out = String::new();
    let header: Vec<String> = match rows.first() {
        Some(Value::Object(m)) => m.keys().cloned().collect(),
        _ => return Ok(out),
    };
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        let fields: Vec<String> = header
            .iter()
            .map(|h| match row.get(h) {
                Some(Value::String(s)) => s.clone(),
                Some(Value::Null) | None => String::new(),
                Some(Value::Array(a)) => format!(
                    "\"{}\"",
                    a.iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(";")
                ),
                Some(v) => v.to_string(),
            })
            .collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    Ok(out)
}

fn render_text(value: &Value) -> String {
    fn walk(v: &Value, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent);
        match v {
            Value::Object(map) => {
                for (k, val) in map {
                    match val {
                        Value::Object(_) | Value::Array(_) => {
                            out.push_str(&format!("{pad}{k}:\n"));
                            walk(val, indent + 1, out);
                        }
                        _ => out.push_str(&format!("{pad}{k}: {val}\n")),
                    }
                }
            }
            Value::Array(items) => {
                for (i, item) in items.iter().enumerate() {
                    out.push_str(&format!("{pad}- [{i}]\n"));
                    walk(item, indent + 1, out);
                }
            }
            other => out.push_str(&format!("{pad}{other}\n")),
        }
    }
    let mut out = String::new();
    walk(value, 0, &mut out);
    out
}

/// Parse and run; prints the report to stdout and errors to stderr.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap uses exit code 2 for usage errors and 0 for --help/--version
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Some(threads) = cli.threads {
        // best effort: the global pool can only be initialized once
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match execute(&cli) {
        Ok((output, code)) => {
            println!("{output}");
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_json(args: &[&str]) -> (Value, i32) {
        let mut full = vec!["pnpair"];
        full.extend_from_slice(args);
        full.push("--no-timestamp");
        let cli = Cli::try_parse_from(&full).expect("parse");
        let (out, code) = execute(&cli).expect("execute");
        (serde_json::from_str(&out).expect("json"), code)
    }

    #[test]
    fn factor_command_shape() {
        let (v, code) = run_json(&["factor", "1"]);
        assert_eq!(code, 0);
        assert_eq!(v["value"], "1");
        assert_eq!(v["omega"], 0);
        assert_eq!(v["primes"].as_array().unwrap().len(), 0);
        let (v, _) = run_json(&["factor", "268435455"]);
        assert_eq!(v["omega"], 6);
        assert_eq!(v["W"], "64");
    }

    #[test]
    fn xm1_command_shape() {
        let (v, _) = run_json(&["xm1", "--q", "2", "--m", "17"]);
        assert_eq!(v["m_prime"], 17);
        assert_eq!(v["a"], 0);
        assert_eq!(v["u"], 8);
        assert_eq!(v["degrees"], json!([1, 8, 8]));
        assert_eq!(v["sigma"]["num"], "1");
        assert_eq!(v["sigma"]["den"], "17");
    }

    #[test]
    fn sieve_command_table_row() {
        let (v, _) = run_json(&["sieve", "--q", "128", "--m", "4", "--d", "3", "--g", "x+1"]);
        let s = v["s"]["approx"].as_f64().unwrap();
        assert!((s - 21.9523).abs() < 5e-4);
        assert_eq!(v["passes"], true);
    }

    #[test]
    fn search_exhaustive_f4() {
        let (v, code) = run_json(&[
            "search",
            "--q",
            "2",
            "--m",
            "2",
            "--modulus",
            "x^2+x+1",
            "--exhaustive",
        ]);
        assert_eq!(v["checked"], 720);
        assert_eq!(v["exceptional"], 252);
        assert_eq!(code, 3);
    }

    #[test]
    fn search_requires_a_mode() {
        let cli = Cli::try_parse_from(["pnpair", "search", "--q", "2", "--m", "2"]).unwrap();
        assert!(execute(&cli).is_err());
    }

    #[test]
    fn verify_single_counterexample() {
        let (v, code) = run_json(&[
            "verify-counterexample",
            "--q",
            "2",
            "--m",
            "2",
            "--modulus",
            "x^2+x+1",
            "--quintuple",
            "2,0,0,2,2",
        ]);
        assert_eq!(code, 3);
        assert_eq!(v["confirmations"][0]["exceptional"], true);
    }

    #[test]
    fn count_m_command() {
        let (v, _) = run_json(&[
            "count-m",
            "--q",
            "2",
            "--m",
            "2",
            "--modulus",
            "x^2+x+1",
            "--quintuple",
            "2,0,0,2,2",
        ]);
        assert_eq!(v["count"], 0);
        assert_eq!(v["poles_skipped"], 1);
        let (v, _) = run_json(&[
            "count-m",
            "--q",
            "2",
            "--m",
            "2",
            "--modulus",
            "x^2+x+1",
            "--quintuple",
            "2,0,0,2,2",
            "--e1",
            "1",
            "--e2",
            "1",
            "--g1",
            "1",
            "--g2",
            "1",
        ]);
        assert_eq!(v["count"], 3);
    }

    #[test]
    fn deterministic_json_with_no_timestamp() {
        let (a, _) = run_json(&["bound", "--q", "2", "--m", "16"]);
        let (b, _) = run_json(&["bound", "--q", "2", "--m", "16"]);
        assert_eq!(a, b);
        // 65535 = 3·5·17·257 so W = 16 and the bound is 4·16²·2² = 4096 > 256
        assert_eq!(a["rhs"], "4096");
        assert_eq!(a["passes"], false);
    }

    #[test]
    fn lemma53_command() {
        let (v, _) = run_json(&["lemma53", "--q", "8", "--a", "7"]);
        assert_eq!(v["s"]["num"], "10");
        assert_eq!(v["s"]["den"], "3");
        let (v, _) = run_json(&["lemma53", "--q", "8", "--a", "1"]);
        assert_eq!(v["valid"], false);
    }

    #[test]
    fn csv_output_for_table_rows() {
        let cli = Cli::try_parse_from([
            "pnpair",
            "reproduce-tables",
            "--table",
            "2",
            "--output",
            "csv",
            "--no-timestamp",
        ])
        .unwrap();
        let (out, _) = execute(&cli).unwrap();
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 39); // header + 38 rows
        assert!(lines[0].contains("matches_paper_s"));
    }
}
