//! Quintuple searches: for a fixed primitive α, test whether some power α^i
//! with gcd(i, q^m−1) = 1 has α^i normal and f(α^i) primitive and normal,
//! for every valid quintuple (a,b,c,d,e) — exhaustively over small fields or
//! on a seeded sample — and independently re-verify claimed counter-examples.

use crate::error::{Error, Result};
use crate::freeness::{eval_map, is_normal, MapValue, RationalMap};
use crate::gf2::{FieldCtx, FieldElement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::path::{Path, PathBuf};

/// Outcome of testing one quintuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuintupleStatus {
    /// First witness exponent i (ascending), with gcd(i, q^m−1) = 1, α^i
    /// normal and f(α^i) primitive normal.
    Witness(u128),
    /// No coprime power works: a genuine counter-example quintuple.
    Exceptional,
}

/// Degenerate-form markers. Flagged quintuples are still searched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Degeneracy {
    /// f reduces to y·x.
    pub is_yx: bool,
    /// f reduces to y·x².
    pub is_yx2: bool,
    /// The coefficient matrix (1 1 0 / 0 1 0) with q = 2 and m odd, which
    /// cannot produce a simultaneous normal pair and is reported separately.
    pub is_excluded_matrix: bool,
}

#[derive(Debug, Clone)]
pub struct QuintupleResult {
    pub quintuple: RationalMap,
    pub status: QuintupleStatus,
    pub degeneracy: Degeneracy,
}

pub fn degeneracy_of(ctx: &FieldCtx, map: &RationalMap) -> Degeneracy {
    let one = FieldElement::ONE;
    let zero = FieldElement::ZERO;
    let excluded =
        ctx.k() == 1 && ctx.m() % 2 == 1 && map.as_tuple() == (one, one, zero, one, zero);
    Degeneracy {
        is_yx: map.is_yx(ctx),
        is_yx2: map.is_yx2(),
        is_excluded_matrix: excluded,
    }
}

/// Test one quintuple by iterating i ascending over 1 ≤ i < q^m−1 with
/// gcd(i, q^m−1) = 1; α^i is primitive automatically, so the checks are
/// normality of α^i and primitivity+normality of f(α^i).
pub fn test_quintuple(ctx: &FieldCtx, alpha: FieldElement, map: &RationalMap) -> QuintupleResult {
    let order = ctx.group_order_u128();
    let mut status = QuintupleStatus::Exceptional;
    let mut power = alpha;
    let mut i = 1u128;
    while i < order {
        if i > 1 {
            power = ctx.mul(power, alpha);
        }
        if num_integer::gcd(i, order) == 1 && is_normal(ctx, power) {
            if let MapValue::Value(v) = eval_map(ctx, map, power) {
                if ctx.is_primitive(v) && is_normal(ctx, v) {
                    status = QuintupleStatus::Witness(i);
                    break;
                }
            }
        }
        i += 1;
    }
    QuintupleResult {
        quintuple: *map,
        status,
        degeneracy: degeneracy_of(ctx, map),
    }
}

/// Re-run the four predicate checks for a claimed witness exponent.
pub fn recheck_witness(ctx: &FieldCtx, alpha: FieldElement, map: &RationalMap, i: u128) -> bool {
    let order = ctx.group_order_u128();
    if i == 0 || i >= order || num_integer::gcd(i, order) != 1 {
        return false;
    }
    let power = ctx.pow_u128(alpha, i).expect("nonzero base");
    if !is_normal(ctx, power) {
        return false;
    }
    match eval_map(ctx, map, power) {
        MapValue::Pole => false,
        MapValue::Value(v) => ctx.is_primitive(v) && is_normal(ctx, v),
    }
}

/// Independently confirm that a quintuple admits no witness at all.
pub fn verify_counterexample(ctx: &FieldCtx, map: &RationalMap, cap: u128) -> Result<bool> {
    if ctx.field_size() > cap {
        return Err(Error::FieldTooLarge { n: ctx.n() as u64 });
    }
    let alpha = ctx.find_primitive();
    Ok(matches!(
        test_quintuple(ctx, alpha, map).status,
        QuintupleStatus::Exceptional
    ))
}

/// A 1-based round-robin shard assignment over the quintuple enumeration
/// index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shard {
    pub index: u32,
    pub total: u32,
}

impl Shard {
    pub fn full() -> Shard {
        Shard { index: 1, total: 1 }
    }

    pub fn new(index: u32, total: u32) -> Result<Shard> {
        if total == 0 || index == 0 || index > total {
            return Err(Error::InvalidParameter(format!(
                "bad shard {index}/{total}"
            )));
        }
        Ok(Shard { index, total })
    }

    fn owns(&self, enum_index: u64) -> bool {
        enum_index % self.total as u64 == (self.index - 1) as u64
    }
}

impl std::str::FromStr for Shard {
    type Err = Error;
    fn from_str(s: &str) -> Result<Shard> {
        let (i, t) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("shard must be I/T, got {s:?}")))?;
        Shard::new(
            i.parse()
                .map_err(|_| Error::Parse("bad shard index".into()))?,
            t.parse()
                .map_err(|_| Error::Parse("bad shard total".into()))?,
        )
    }
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Maximum q^m for exhaustive quintuple enumeration.
    pub exhaustive_cap: u128,
    /// Record the exceptional quintuples, not just their count.
    pub emit_exceptional: bool,
    pub checkpoint_path: Option<PathBuf>,
    /// Write a checkpoint after this many processed quintuples.
    pub checkpoint_every: u64,
    /// Resume from the checkpoint file if present.
    pub resume: bool,
    /// Stop after processing this many quintuples in this invocation
    /// (checkpoint first); None runs the shard to completion.
    pub max_quintuples: Option<u64>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            exhaustive_cap: 1 << 24,
            emit_exceptional: false,
            checkpoint_path: None,
            checkpoint_every: 1_000_000,
            resume: false,
            max_quintuples: None,
        }
    }
}

/// Aggregated outcome of a search run.
#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub q: u64,
    pub m: u32,
    pub modulus: String,
    pub alpha: String,
    pub checked: u64,
    pub exceptional: u64,
    pub shard: Shard,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rng_seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exceptional_list: Option<Vec<String>>,
}

/// Merge shard reports: counts add, lists concatenate. Shards must cover
/// disjoint slices of the same run.
pub fn merge_reports(mut reports: Vec<SearchReport>) -> Result<SearchReport> {
    if reports.is_empty() {
        return Err(Error::InvalidParameter("nothing to merge".into()));
    }
    reports.sort_by_key(|r| r.shard.index);
    let first = reports[0].clone();
    let mut checked = 0u64;
    let mut exceptional = 0u64;
    let mut list = first.exceptional_list.as_ref().map(|_| Vec::new());
    for r in &reports {
        if (r.q, r.m, &r.modulus) != (first.q, first.m, &first.modulus) {
            return Err(Error::InvalidParameter(
                "cannot merge reports from different runs".into(),
            ));
        }
        checked += r.checked;
        exceptional += r.exceptional;
        if let (Some(acc), Some(part)) = (list.as_mut(), r.exceptional_list.as_ref()) {
            acc.extend(part.iter().cloned());
        }
    }
    Ok(SearchReport {
        shard: Shard::full(),
        checked,
        exceptional,
        exceptional_list: list,
        ..first
    })
}

/// Resumable snapshot of one shard's progress.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Checkpoint {
    pub q: u64,
    pub m: u32,
    pub modulus: String,
    pub shard: Shard,
    /// Next global enumeration index to process.
    pub next_index: u64,
    pub checked: u64,
    pub exceptional: u64,
    pub exceptional_list: Vec<String>,
}

impl Checkpoint {
    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, serde_json::to_vec_pretty(self).expect("serializable"))?;
        std::fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Checkpoint> {
        let data = std::fs::read_to_string(path)?;
        serde_json::from_str(&data).map_err(|e| Error::Parse(format!("bad checkpoint: {e}")))
    }
}

/// Everything the inner loop needs, precomputed once per field: primitive-
/// normal membership per element, inverses, and the witness candidates
/// (i, α^i, α^(2i)) for coprime i with α^i normal, ascending in i.
struct SearchTables {
    alpha: FieldElement,
    pn: Vec<bool>,
    inverse: Vec<u128>,
    witnesses: Vec<(u128, FieldElement, FieldElement)>,
}

fn build_tables(ctx: &FieldCtx) -> SearchTables {
    let size = ctx.field_size() as usize;
    let alpha = ctx.find_primitive();
    let order = ctx.group_order_u128();
    let pn: Vec<bool> = (0..size)
        .into_par_iter()
        .map(|bits| {
            let u = FieldElement(bits as u128);
            !u.is_zero() && ctx.is_primitive(u) && is_normal(ctx, u)
        })
        .collect();
    let inverse: Vec<u128> = (0..size)
        .into_par_iter()
        .map(|bits| {
            if bits == 0 {
                0
            } else {
                ctx.inv(FieldElement(bits as u128)).expect("nonzero").bits()
            }
        })
        .collect();
    let mut witnesses = Vec::new();
    let mut power = alpha;
    for i in 1..order {
        if i > 1 {
            power = ctx.mul(power, alpha);
        }
        if num_integer::gcd(i, order) == 1 && pn[power.bits() as usize] {
            witnesses.push((i, power, ctx.sqr(power)));
        }
    }
    SearchTables {
        alpha,
        pn,
        inverse,
        witnesses,
    }
}

/// Table-driven equivalent of [`test_quintuple`]: first witness index or
/// None. Agreement of the two paths is covered by tests.
fn first_witness(ctx: &FieldCtx, t: &SearchTables, map: &RationalMap) -> Option<u128> {
    for (i, beta, beta_sq) in &t.witnesses {
        let den = ctx.add(ctx.mul(map.d, *beta), map.e);
        if den.is_zero() {
            continue;
        }
        let num = ctx.add(
            ctx.add(ctx.mul(map.a, *beta_sq), ctx.mul(map.b, *beta)),
            map.c,
        );
        let img = ctx.mul(num, FieldElement(t.inverse[den.bits() as usize]));
        if t.pn[img.bits() as usize] {
            return Some(*i);
        }
    }
    None
}

/// Exhaustively enumerate all valid quintuples (ascending hex order of
/// (a,b,c,d,e)), restricted to `shard` by round-robin on the enumeration
/// index, and test each one.
pub fn exhaustive_search(
    ctx: &FieldCtx,
    shard: Shard,
    options: &SearchOptions,
) -> Result<SearchReport> {
    let size = ctx.field_size();
    if size > options.exhaustive_cap {
        return Err(Error::FieldTooLarge { n: ctx.n() as u64 });
    }
    let tables = build_tables(ctx);
    let mut checked = 0u64;
    let mut exceptional = 0u64;
    let mut list: Vec<String> = Vec::new();
    let mut start_index = 0u64;
    if options.resume {
        if let Some(path) = &options.checkpoint_path {
            if path.exists() {
                let cp = Checkpoint::load(path)?;
                if cp.q != 1 << ctx.k() as u64
                    || cp.m != ctx.m()
                    || cp.modulus != ctx.modulus_string()
                    || cp.shard != shard
                {
                    return Err(Error::InvalidParameter(
                        "checkpoint does not match this run".into(),
                    ));
                }
                start_index = cp.next_index;
                checked = cp.checked;
                exceptional = cp.exceptional;
                list = cp.exceptional_list;
            }
        }
    }
    let save_checkpoint =
        |next_index: u64, checked: u64, exceptional: u64, list: &[String]| -> Result<()> {
            if let Some(path) = &options.checkpoint_path {
                Checkpoint {
                    q: 1 << ctx.k() as u64,
                    m: ctx.m(),
                    modulus: ctx.modulus_string(),
                    shard,
                    next_index,
                    checked,
                    exceptional,
                    exceptional_list: list.to_vec(),
                }
                .save(path)?;
            }
            Ok(())
        };
    let mut enum_index = 0u64;
    let mut processed = 0u64;
    let mut since_checkpoint = 0u64;
    let mut stopped_early = false;
    'outer: for a in 1..size {
        for b in 0..size {
            for c in 0..size {
                for d in 0..size {
                    for e in 0..size {
                        if d == 0 && e == 0 {
                            continue;
                        }
                        let idx = enum_index;
                        enum_index += 1;
                        if !shard.owns(idx) || idx < start_index {
                            continue;
                        }
                        let map = RationalMap {
                            a: FieldElement(a),
                            b: FieldElement(b),
                            c: FieldElement(c),
                            d: FieldElement(d),
                            e: FieldElement(e),
                        };
                        checked += 1;
                        processed += 1;
                        if first_witness(ctx, &tables, &map).is_none() {
                            exceptional += 1;
                            if options.emit_exceptional {
                                list.push(map.to_hex());
                            }
                        }
                        since_checkpoint += 1;
                        if since_checkpoint >= options.checkpoint_every {
                            since_checkpoint = 0;
                            save_checkpoint(idx + 1, checked, exceptional, &list)?;
                        }
                        if options.max_quintuples.is_some_and(|cap| processed >= cap) {
                            save_checkpoint(idx + 1, checked, exceptional, &list)?;
                            stopped_early = true;
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    if !stopped_early {
        save_checkpoint(enum_index, checked, exceptional, &list)?;
    }
    Ok(SearchReport {
        q: 1 << ctx.k() as u64,
        m: ctx.m(),
        modulus: ctx.modulus_string(),
        alpha: tables.alpha.to_hex(),
        checked,
        exceptional,
        shard,
        rng_seed: None,
        exceptional_list: options.emit_exceptional.then_some(list),
    })
}

/// Full exhaustive run split over `workers` round-robin shards executed in
/// parallel and merged; equals the single-shard run by construction.
pub fn exhaustive_search_parallel(
    ctx: &FieldCtx,
    workers: u32,
    options: &SearchOptions,
) -> Result<SearchReport> {
    let workers = workers.max(1);
    if workers == 1 {
        return exhaustive_search(ctx, Shard::full(), options);
    }
    if options.checkpoint_path.is_some() {
        return Err(Error::InvalidParameter(
            "checkpointing requires running one shard per invocation".into(),
        ));
    }
    let shards: Vec<Shard> = (1..=workers)
        .map(|i| Shard::new(i, workers).expect("valid"))
        .collect();
    let reports: Result<Vec<SearchReport>> = shards
        .par_iter()
        .map(|s| exhaustive_search(ctx, *s, options))
        .collect();
    merge_reports(reports?)
}

/// Count the valid quintuples of the field without testing them.
pub fn valid_quintuple_count(ctx: &FieldCtx) -> u128 {
    let size = ctx.field_size();
    (size - 1) * size * size * (size * size - 1)
}

/// Test `budget` distinct valid quintuples drawn by a seeded deterministic
/// generator; reproducible given (seed, budget).
pub fn sampled_search(ctx: &FieldCtx, budget: u64, seed: u64) -> Result<SearchReport> {
    let alpha = ctx.find_primitive();
    let size = ctx.field_size();
    if u128::from(budget) > valid_quintuple_count(ctx) {
        return Err(Error::InvalidParameter(
            "budget exceeds the number of valid quintuples".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: HashSet<(u128, u128, u128, u128, u128)> = HashSet::new();
    let mut quintuples = Vec::with_capacity(budget as usize);
    while quintuples.len() < budget as usize {
        let a = rng.gen_range(1..size);
        let b = rng.gen_range(0..size);
        let c = rng.gen_range(0..size);
        let d = rng.gen_range(0..size);
        let e = rng.gen_range(0..size);
        if d == 0 && e == 0 {
            continue;
        }
        if !seen.insert((a, b, c, d, e)) {
            continue;
        }
        quintuples.push(RationalMap {
            a: FieldElement(a),
            b: FieldElement(b),
            c: FieldElement(c),
            d: FieldElement(d),
            e: FieldElement(e),
        });
    }
    let results: Vec<(bool, String)> = quintuples
        .par_iter()
        .map(|map| {
            let r = test_quintuple(ctx, alpha, map);
            (
                matches!(r.status, QuintupleStatus::Exceptional),
                map.to_hex(),
            )
        })
        .collect();
    let exceptional_list: Vec<String> = results
        .iter()
        .filter(|(exc, _)| *exc)
        .map(|(_, hex)| hex.clone())
        .collect();
    Ok(SearchReport {
        q: 1 << ctx.k() as u64,
        m: ctx.m(),
        modulus: ctx.modulus_string(),
        alpha: alpha.to_hex(),
        checked: budget,
        exceptional: exceptional_list.len() as u64,
        shard: Shard::full(),
        rng_seed: Some(seed),
        exceptional_list: Some(exceptional_list),
    })
}

// ---- shipped counter-example data ----

/// One published counter-example row: field, modulus and quintuple, plus the
/// published checked/exceptional counts (exact targets only for the
/// exhaustive rows).
#[derive(Debug, Clone)]
pub struct CounterExampleRow {
    pub q: u64,
    pub m: u32,
    pub modulus: String,
    pub quintuple_hex: [String; 5],
    pub checked: u64,
    pub exceptional: u64,
    pub exhaustive: bool,
}

pub fn counterexample_rows() -> Result<Vec<CounterExampleRow>> {
    let mut out = Vec::new();
    for (i, line) in crate::tables::TABLE3_CSV.lines().enumerate() {
        let line = line.trim();
        if i == 0 || line.is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 11 {
            return Err(Error::Parse(format!(
                "counter-example row {i}: bad field count"
            )));
        }
        out.push(CounterExampleRow {
            q: f[0].parse().map_err(|_| Error::Parse("bad q".into()))?,
            m: f[1].parse().map_err(|_| Error::Parse("bad m".into()))?,
            modulus: f[2].to_string(),
            quintuple_hex: [
                f[3].to_string(),
                f[4].to_string(),
                f[5].to_string(),
                f[6].to_string(),
                f[7].to_string(),
            ],
            checked: f[8]
                .parse()
                .map_err(|_| Error::Parse("bad checked".into()))?,
            exceptional: f[9]
                .parse()
                .map_err(|_| Error::Parse("bad exceptional".into()))?,
            exhaustive: f[10] == "true",
        });
    }
    Ok(out)
}

impl CounterExampleRow {
    pub fn ctx(&self) -> Result<FieldCtx> {
        let k = self.q.trailing_zeros();
        let modulus = crate::gf2x::parse(&self.modulus)
            .ok_or_else(|| Error::Parse(format!("bad modulus {}", self.modulus)))?;
        crate::gf2::make_ctx(k, self.m, Some(modulus))
    }

    pub fn quintuple(&self, ctx: &FieldCtx) -> Result<RationalMap> {
        let parse = |s: &str| -> Result<FieldElement> {
            let e = FieldElement::from_hex(s)?;
            ctx.element_from_bits(e.bits())
        };
        RationalMap::new(
            parse(&self.quintuple_hex[0])?,
            parse(&self.quintuple_hex[1])?,
            parse(&self.quintuple_hex[2])?,
            parse(&self.quintuple_hex[3])?,
            parse(&self.quintuple_hex[4])?,
        )
    }
}
