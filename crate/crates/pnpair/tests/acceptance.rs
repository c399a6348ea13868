//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! The oracles used here are deliberately independent of the library's
//! decision paths: normality is re-decided by F_2 rank of the conjugates
//! against a kernel-computed subfield basis, multiplicative order by plain
//! repeated multiplication, and counts by Euler's totient from the
//! factorization.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use pnpair::factorize::{self, check_w_bound};
use pnpair::freeness::{self, count_m, FreenessSpec, RationalMap};
use pnpair::gf2::{make_ctx, FieldCtx, FieldElement};
use pnpair::search::{
    counterexample_rows, exhaustive_search, merge_reports, test_quintuple, verify_counterexample,
    QuintupleStatus, SearchOptions, Shard,
};
use pnpair::sieve::{lemma53_generic, lemma53_s, plain_condition_full};
use pnpair::tables::{self, TableId};
use pnpair::xm1::{explicit_factors, xm_structure};
use std::time::Instant;

fn status(criterion: u32, name: &str, pass: bool, detail: &str) {
    println!(
        "criterion {criterion} ({name}): {} — {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
}

// ---- independent oracles ----

/// F_2-basis of the subfield F_q inside F_{q^m}: kernel of x ↦ x^q − x,
/// computed by Gaussian elimination over F_2. Independent of the primitive-
/// element machinery.
fn subfield_basis(ctx: &FieldCtx) -> Vec<FieldElement> {
    let n = ctx.n();
    // images of the monomial basis under Frobenius − id
    let images: Vec<u128> = (0..n)
        .map(|j| {
            let e = FieldElement::from_bits(1u128 << j);
            ctx.frobenius_q(e).bits() ^ e.bits()
        })
        .collect();
    // solve: find all x with Σ x_j · images[j] = 0
    // row-reduce the transposed system over F_2
    let mut rows: Vec<(u128, u128)> = (0..n).map(|j| (images[j as usize], 1u128 << j)).collect();
    let mut basis = Vec::new();
    let mut used = vec![false; rows.len()];
    for bit in (0..n).rev() {
        let mut pivot = None;
        for (i, (img, _)) in rows.iter().enumerate() {
            if !used[i] && (img >> bit) & 1 == 1 {
                pivot = Some(i);
                break;
            }
        }
        if let Some(p) = pivot {
            used[p] = true;
            let (pi, pc) = rows[p];
            for (i, (img, comb)) in rows.iter_mut().enumerate() {
                if i != p && (*img >> bit) & 1 == 1 {
                    *img ^= pi;
                    *comb ^= pc;
                }
            }
        }
    }
    for (i, (img, comb)) in rows.iter().enumerate() {
        let _ = i;
        if *img == 0 {
            basis.push(FieldElement::from_bits(*comb));
        }
    }
    assert_eq!(basis.len(), ctx.k() as usize, "subfield dimension");
    basis
}

/// Rank-oracle normality: the m conjugates are F_q-linearly independent iff
/// the k·m products (basis element)·(conjugate) span F_2^n.
fn normal_by_rank(ctx: &FieldCtx, basis: &[FieldElement], u: FieldElement) -> bool {
    let mut vecs = Vec::with_capacity(ctx.n() as usize);
    for conj in ctx.conjugates(u) {
        for b in basis {
            vecs.push(ctx.mul(*b, conj).bits());
        }
    }
    let mut rank = 0u32;
    let mut pivots: Vec<u128> = Vec::new();
    for mut v in vecs {
        for p in &pivots {
            let high = 127 - p.leading_zeros();
            if (v >> high) & 1 == 1 {
                v ^= p;
            }
        }
        if v != 0 {
            pivots.push(v);
            pivots.sort_unstable_by(|a, b| b.cmp(a));
            rank += 1;
        }
    }
    rank == ctx.n()
}

/// Multiplicative order by repeated multiplication.
fn order_brute_force(ctx: &FieldCtx, u: FieldElement) -> u128 {
    assert!(!u.is_zero());
    let mut acc = u;
    let mut steps = 1u128;
    while acc != FieldElement::ONE {
        acc = ctx.mul(acc, u);
        steps += 1;
    }
    steps
}

/// Φ_q(x^m−1): the polynomial-Euler count of normal elements, from the
/// distinct factor degrees and their common multiplicity.
fn normal_element_count(ctx: &FieldCtx) -> BigUint {
    let xm = xm_structure(ctx.k(), ctx.m());
    let mult = xm.multiplicity();
    let mut phi = BigUint::one();
    for &d in xm.factor_degrees() {
        let qd = BigUint::one() << (ctx.k() as u64 * d as u64);
        phi *= qd.pow(mult) - qd.pow(mult - 1);
    }
    phi
}

fn all_fields_with_n_up_to(limit: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for k in 1..=limit {
        for m in 2..=limit {
            if k * m <= limit {
                out.push((k, m));
            }
        }
    }
    out
}

// ---- criteria ----

#[test]
fn criterion_01_exhaustive_2_2() {
    let t = Instant::now();
    let ctx = make_ctx(1, 2, Some(0b111)).unwrap();
    let r = exhaustive_search(&ctx, Shard::full(), &SearchOptions::default()).unwrap();
    let elapsed = t.elapsed();
    let pass = r.checked == 720 && r.exceptional == 252 && elapsed.as_secs() < 10;
    status(
        1,
        "exhaustive (2,2)",
        pass,
        &format!(
            "checked={} exceptional={} elapsed={elapsed:.2?}",
            r.checked, r.exceptional
        ),
    );
    assert_eq!((r.checked, r.exceptional), (720, 252));
    assert!(elapsed.as_secs() < 10, "runtime bound");
}

#[test]
fn criterion_02_exhaustive_2_3_with_shard_merge() {
    let t = Instant::now();
    let ctx = make_ctx(1, 3, Some(0b1011)).unwrap();
    let full = exhaustive_search(&ctx, Shard::full(), &SearchOptions::default()).unwrap();
    let single_thread_elapsed = t.elapsed();
    let parts: Vec<_> = (1..=4u32)
        .map(|i| {
            exhaustive_search(&ctx, Shard::new(i, 4).unwrap(), &SearchOptions::default()).unwrap()
        })
        .collect();
    let part_counts: Vec<(u64, u64)> = parts.iter().map(|r| (r.checked, r.exceptional)).collect();
    let merged = merge_reports(parts).unwrap();
    let pass = full.checked == 28224
        && full.exceptional == 8295
        && merged.checked == full.checked
        && merged.exceptional == full.exceptional
        && single_thread_elapsed.as_secs() < 900;
    status(
        2,
        "exhaustive (2,3) + shard merge",
        pass,
        &format!(
            "checked={} exceptional={} shards={part_counts:?} elapsed={single_thread_elapsed:.2?}",
            full.checked, full.exceptional
        ),
    );
    assert_eq!((full.checked, full.exceptional), (28224, 8295));
    assert_eq!(
        (merged.checked, merged.exceptional),
        (full.checked, full.exceptional)
    );
    assert!(single_thread_elapsed.as_secs() < 900, "runtime bound");
}

#[test]
fn criterion_03_all_published_counterexamples_confirmed() {
    let rows = counterexample_rows().unwrap();
    assert_eq!(rows.len(), 7);
    let mut all_ok = true;
    let mut details = Vec::new();
    for row in &rows {
        let t = Instant::now();
        let ctx = row.ctx().unwrap();
        let map = row.quintuple(&ctx).unwrap();
        let confirmed = verify_counterexample(&ctx, &map, 1 << 24).unwrap();
        let elapsed = t.elapsed();
        let ok = confirmed && elapsed.as_secs() < 5;
        all_ok &= ok;
        details.push(format!(
            "({},{}) {} in {elapsed:.2?}",
            row.q,
            row.m,
            if confirmed {
                "exceptional"
            } else {
                "HAS WITNESS"
            }
        ));
        assert!(confirmed, "({},{}) must be exceptional", row.q, row.m);
        assert!(
            elapsed.as_secs() < 5,
            "runtime bound for ({},{})",
            row.q,
            row.m
        );
    }
    status(
        3,
        "counter-example verification",
        all_ok,
        &details.join("; "),
    );
}

#[test]
fn criterion_04_table1_reproduction() {
    let t = Instant::now();
    let reports = tables::reproduce_table(TableId::One).unwrap();
    let elapsed = t.elapsed();
    let mut failures = Vec::new();
    for r in &reports {
        if !(r.matches_paper_s && r.matches_paper_rhs && r.condition_passes) {
            failures.push(format!(
                "({},{}): S {:?} vs printed {}, bound {:?} vs printed {}, passes={} [{}]",
                r.q,
                r.m,
                r.s_recomputed,
                r.s_paper,
                r.rhs_recomputed,
                r.rhs_paper,
                r.condition_passes,
                r.notes.join("; ")
            ));
        }
    }
    let pass = failures.is_empty() && elapsed.as_secs() < 120;
    status(
        4,
        "table 1 reproduction",
        pass,
        &format!(
            "{} rows recomputed in {elapsed:.2?}; {} rows diverge from the printed values{}{}",
            reports.len(),
            failures.len(),
            if failures.is_empty() { "" } else { ": " },
            failures.join(" | ")
        ),
    );
    assert!(elapsed.as_secs() < 120, "runtime bound");
    assert!(
        failures.is_empty(),
        "every row must match the printed S and bound and pass the condition; divergent rows:\n{}",
        failures.join("\n")
    );
}

#[test]
fn criterion_05_table2_reproduction_with_stable_flags() {
    let run = || {
        let reports = tables::reproduce_table(TableId::Two).unwrap();
        let mut matched = Vec::new();
        let mut flagged = Vec::new();
        for r in &reports {
            if r.flagged() {
                flagged.push((r.q, r.m));
            } else {
                matched.push((r.q, r.m));
            }
        }
        (reports, matched, flagged)
    };
    let (reports, matched, flagged) = run();
    let (_, matched2, flagged2) = run();
    // stability across runs
    assert_eq!(matched, matched2);
    assert_eq!(flagged, flagged2);
    // the printed bound of (2,17) follows the 4W²Ω²S convention and must
    // match; (8,6) is a known flagged row
    let r_2_17 = reports.iter().find(|r| (r.q, r.m) == (2, 17)).unwrap();
    assert!(r_2_17.matches_paper_s && r_2_17.matches_paper_rhs);
    assert!((r_2_17.rhs_recomputed.unwrap() - 323.048).abs() < 0.5);
    assert!(flagged.contains(&(8, 6)));
    // every matched row reproduces within tolerance by construction; make
    // sure the split is exhaustive
    assert_eq!(matched.len() + flagged.len(), reports.len());
    status(
        5,
        "table 2 reproduction",
        true,
        &format!(
            "{} rows match the 4W²Ω²S convention, {} flagged (stable): {flagged:?}",
            matched.len(),
            flagged.len()
        ),
    );
}

#[test]
fn criterion_06_exception_pairs_fail_plain_condition_and_32_31_sieve() {
    let pairs = tables::exception_pairs().unwrap();
    assert_eq!(pairs.len(), 52);
    let mut all_fail = true;
    for p in &pairs {
        let c = tables::check_exception_pair(p).unwrap();
        all_fail &= !c.plain_condition_passes;
        assert!(
            !c.plain_condition_passes,
            "({},{}) unexpectedly satisfies the plain condition",
            p.q, p.m
        );
    }
    // the quoted (2,4) sides: q^(m/2) = 4 against 256
    let k = 1;
    let order = factorize::factor_qm_minus_1(k, 4).unwrap();
    let xm = xm_structure(k, 4);
    let pc = plain_condition_full(k, 4, &order, &xm);
    assert_eq!(pc.rhs, BigUint::from(256u32));
    assert!((pc.lhs - 4.0).abs() < 1e-9);
    // (32,31): recomputed ω and a passing sieve choice
    let c = tables::check_pair_32_31().unwrap();
    let pass = all_fail && c.condition_passes;
    status(
        6,
        "exception lists + (32,31)",
        pass,
        &format!(
            "52/52 pairs fail the plain bound; (32,31) sieve passes with recomputed ω = {}",
            c.recomputed_omega
        ),
    );
    assert!(c.condition_passes);
    assert_eq!(c.recomputed_omega, 7);
}

#[test]
fn criterion_07_sigma_reference_values() {
    let cases: [(u64, u32, u64, u64); 8] = [
        (2, 3, 1, 3),
        (2, 5, 1, 5),
        (2, 9, 2, 9),
        (2, 21, 4, 21),
        (4, 9, 1, 3),
        (4, 45, 11, 45),
        (8, 3, 1, 3),
        (8, 21, 1, 3),
    ];
    for (q, m, num, den) in cases {
        let k = q.trailing_zeros();
        let s = xm_structure(k, m).sigma();
        let expect = num_rational::BigRational::new(
            num_bigint::BigInt::from(num),
            num_bigint::BigInt::from(den),
        );
        assert_eq!(s, expect, "sigma({q},{m})");
    }
    status(
        7,
        "σ(q,m) exact rationals",
        true,
        "all 8 listed values match exactly",
    );
}

#[test]
fn criterion_08_w_bound_sweeps() {
    let t = Instant::now();
    let a = check_w_bound(1_000_000, 5, "6.46", true).unwrap();
    let b = check_w_bound(1_000_000, 6, "37.4683", false).unwrap();
    let c = check_w_bound(1_000_000, 8, "4514.7", false).unwrap();
    let elapsed = t.elapsed();
    let pass = a.violations.is_empty()
        && b.violations.is_empty()
        && c.violations.is_empty()
        && elapsed.as_secs() < 60;
    status(
        8,
        "W(n) bound sweeps",
        pass,
        &format!(
            "odd n ≤ 1e6 vs 6.46·n^(1/5): 0 violations (max ratio {:.4}); \
             n ≤ 1e6 vs 37.4683·n^(1/6) and 4514.7·n^(1/8): 0 violations; elapsed={elapsed:.2?}",
            a.max_ratio
        ),
    );
    assert!(a.violations.is_empty());
    assert!(b.violations.is_empty());
    assert!(c.violations.is_empty());
    assert!(elapsed.as_secs() < 60, "runtime bound");
}

#[test]
fn criterion_09_closed_form_sieve_identity() {
    let mut checked = 0u32;
    for k in 1..=10u32 {
        let q: u64 = 1 << k;
        for a in 1..=q - 1 {
            if (q - 1) % a != 0 {
                continue;
            }
            let closed = lemma53_s(k, a).unwrap();
            let generic = lemma53_generic(k, a).unwrap();
            assert_eq!(closed.is_some(), generic.is_some(), "q={q} a={a}");
            if let (Some(c), Some(g)) = (closed, generic) {
                assert_eq!(c, g, "exact rational equality for q={q} a={a}");
                checked += 1;
            }
        }
    }
    status(
        9,
        "closed-form 𝔖 identity",
        true,
        &format!("exact equality for {checked} (q,a) pairs with positive denominator"),
    );
}

#[test]
fn criterion_10_oracle_equivalences() {
    // gcd-normality ≡ rank oracle, primitive count = φ, e-free(full) ≡
    // ord = q^m−1, and #normal = Φ_q(x^m−1), exhaustively for n ≤ 12
    for (k, m) in all_fields_with_n_up_to(12) {
        let ctx = make_ctx(k, m, None).unwrap();
        let basis = subfield_basis(&ctx);
        let full_e = freeness::EDivisor::full(&ctx);
        let phi = ctx.group_order_factors().euler_phi().to_u128().unwrap();
        let expected_normal = normal_element_count(&ctx).to_u128().unwrap();
        let order = ctx.group_order_u128();
        let mut primitive_count = 0u128;
        let mut normal_count = 0u128;
        for bits in 0..ctx.field_size() {
            let u = FieldElement::from_bits(bits);
            let by_gcd = freeness::is_normal(&ctx, u);
            let by_rank = normal_by_rank(&ctx, &basis, u);
            assert_eq!(
                by_gcd, by_rank,
                "normality oracles disagree at {bits:#x} in ({k},{m})"
            );
            if by_gcd {
                normal_count += 1;
            }
            let efree = freeness::is_e_free(&ctx, u, &full_e);
            let prim = !u.is_zero() && order_brute_force(&ctx, u) == order;
            assert_eq!(
                efree, prim,
                "e-free ≢ primitivity at {bits:#x} in ({k},{m})"
            );
            if prim {
                primitive_count += 1;
            }
        }
        assert_eq!(primitive_count, phi, "primitive count in ({k},{m})");
        assert_eq!(normal_count, expected_normal, "normal count in ({k},{m})");
    }

    // count_M ⟺ test_quintuple, fields with q^m ≤ 2^6: the witness set
    // {α^i : gcd(i,q^m−1)=1, α^i normal} must equal the primitive normal
    // set, and the two exceptionality formulations must agree
    for (k, m) in all_fields_with_n_up_to(6) {
        let ctx = make_ctx(k, m, None).unwrap();
        let xf = explicit_factors(&ctx).unwrap();
        let full = FreenessSpec::full(&ctx, &xf).unwrap();
        let alpha = ctx.find_primitive();
        let order = ctx.group_order_u128();
        let mut witness_set = std::collections::BTreeSet::new();
        for i in 1..order {
            if num_integer::gcd(i, order) == 1 {
                let p = ctx.pow_u128(alpha, i).unwrap();
                if freeness::is_normal(&ctx, p) {
                    witness_set.insert(p.bits());
                }
            }
        }
        let mut pn_set = std::collections::BTreeSet::new();
        for bits in 0..ctx.field_size() {
            let u = FieldElement::from_bits(bits);
            if !u.is_zero() && ctx.is_primitive(u) && freeness::is_normal(&ctx, u) {
                pn_set.insert(bits);
            }
        }
        assert_eq!(witness_set, pn_set, "witness set ≠ PN set in ({k},{m})");

        // deterministic quintuple sample: all quintuples for q^m ≤ 8, a
        // seeded slice otherwise
        let size = ctx.field_size();
        let mut quintuples = Vec::new();
        if size <= 8 {
            for a in 1..size {
                for b in 0..size {
                    for c in 0..size {
                        for d in 0..size {
                            for e in 0..size {
                                if d == 0 && e == 0 {
                                    continue;
                                }
                                quintuples.push([a, b, c, d, e]);
                            }
                        }
                    }
                }
            }
        } else {
            let mut state = 0x6a09e667f3bcc908u64 ^ ((k as u64) << 32 | m as u64);
            let mut next = move || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                state
            };
            while quintuples.len() < 60 {
                let a = next() as u128 % (size - 1) + 1;
                let b = next() as u128 % size;
                let c = next() as u128 % size;
                let d = next() as u128 % size;
                let e = next() as u128 % size;
                if d == 0 && e == 0 {
                    continue;
                }
                quintuples.push([a, b, c, d, e]);
            }
        }
        for [a, b, c, d, e] in quintuples {
            let map = RationalMap::new(
                FieldElement::from_bits(a),
                FieldElement::from_bits(b),
                FieldElement::from_bits(c),
                FieldElement::from_bits(d),
                FieldElement::from_bits(e),
            )
            .unwrap();
            let by_search = matches!(
                test_quintuple(&ctx, alpha, &map).status,
                QuintupleStatus::Exceptional
            );
            let by_count = count_m(&ctx, &map, &full.clone(), &full, 1 << 24)
                .unwrap()
                .count
                == 0;
            assert_eq!(by_search, by_count, "formulations disagree in ({k},{m})");
        }
    }
    status(
        10,
        "oracle equivalences",
        true,
        "normality/primitivity/count oracles agree on every field with n ≤ 12 (count_M vs search: n ≤ 6)",
    );
}
