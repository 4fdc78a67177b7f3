//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::time::{Duration, Instant};

use srgswitch::analysis::DEFAULT_PRIMES;
use srgswitch::explore::ExploreOptions;
use srgswitch::prelude::*;

use common::{build, random_perm, Built};

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: String) -> Outcome {
    Outcome { ok: true, detail }
}

fn fail(detail: String) -> Outcome {
    Outcome { ok: false, detail }
}

/// Builds and checks parameters, returning the build and the time taken.
fn built_with_params(h: u32, m: u32) -> (Built, Result<SrgParams, String>, Duration) {
    let start = Instant::now();
    let b = build(h, m);
    let params = srg_check(&b.gamma).map_err(|e| e.to_string());
    (b, params, start.elapsed())
}

fn criterion_params(h: u32, m: u32, expected: SrgParams, budget: Duration) -> Outcome {
    let (_, params, elapsed) = built_with_params(h, m);
    let detail = format!("({h},{m}) -> {params:?} in {elapsed:.2?} (budget {budget:?})");
    if params == Ok(expected) && elapsed < budget {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn criterion_1() -> Outcome {
    criterion_params(2, 1, SrgParams::new(96, 20, 4, 4), Duration::from_secs(5))
}

fn criterion_2() -> Outcome {
    let a = criterion_params(
        3,
        1,
        SrgParams::new(640, 72, 8, 8),
        Duration::from_secs(120),
    );
    let b = criterion_params(
        3,
        2,
        SrgParams::new(1792, 216, 40, 24),
        Duration::from_secs(600),
    );
    Outcome {
        ok: a.ok && b.ok,
        detail: format!("{}; {}", a.detail, b.detail),
    }
}

fn criterion_3(cases: &[Built]) -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for b in cases {
        let report = verify_wqh_hypotheses(&b.gamma, &b.partition);
        // move one vertex of C1 out, bring the least vertex of D in
        let outsider = (0..b.gamma.order())
            .find(|v| !b.partition.c1.contains(v) && !b.partition.c2.contains(v))
            .unwrap();
        let mut c1 = b.partition.c1.clone();
        c1[0] = outsider;
        let moved = PartitionSpec::new(b.gamma.order(), c1, b.partition.c2.clone()).unwrap();
        let control = verify_wqh_hypotheses(&b.gamma, &moved);
        ok &= report.passed && !control.passed;
        notes.push(format!(
            "({},{}) built={} moved={} [{}]",
            b.h,
            b.m,
            report.passed,
            control.passed,
            control.summary()
        ));
    }
    Outcome {
        ok,
        detail: notes.join("; "),
    }
}

fn criterion_4(cases: &[Built]) -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for b in cases {
        let gp = apply_switch(&b.gamma, &b.partition).expect("hypotheses hold");
        let same = srg_check(&gp).ok() == srg_check(&b.gamma).ok();
        let connected = gp.is_connected();
        let differs = gp != b.gamma;
        ok &= same && connected && differs;
        notes.push(format!(
            "({},{}) differs={differs} same_params={same} connected={connected}",
            b.h, b.m
        ));
    }
    let small = &cases[0];
    let gp = apply_switch(&small.gamma, &small.partition).unwrap();
    let a = char_poly_mod(&small.gamma, &DEFAULT_PRIMES).unwrap();
    let c = char_poly_mod(&gp, &DEFAULT_PRIMES).unwrap();
    ok &= a == c;
    notes.push(format!(
        "charpoly equal mod {:?}: {}",
        DEFAULT_PRIMES,
        a == c
    ));
    Outcome {
        ok,
        detail: notes.join("; "),
    }
}

fn criterion_5(b: &Built) -> Outcome {
    let start = Instant::now();
    let t = b.t();
    let q3 = b.q().pow(3);
    let gp = apply_switch(&b.gamma, &b.partition).unwrap();
    let before = geometricity_report(&b.gamma, t);
    let after = geometricity_report(&gp, t);
    let witness = proposition_witness(&b.config, &b.lines, &b.gamma, &gp);
    let elapsed = start.elapsed();
    let failed: Vec<&str> = witness
        .checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.name)
        .collect();
    let ok = before.failing_edges.is_empty()
        && before.pencil_count == q3
        && !after.failing_edges.is_empty()
        && witness.passed()
        && witness.max_clique_switched <= t
        && witness.pencils_original == 1
        && elapsed < Duration::from_secs(10);
    let detail = format!(
        "Gamma: {} failing, {} pencils (q^3 = {q3}); Gamma': {} failing; witness max clique {} -> {} (t = {t}), {} (t+1)-clique before, failed checks {:?}; {elapsed:.2?}",
        before.failing_edges.len(),
        before.pencil_count,
        after.failing_edges.len(),
        witness.max_clique_original,
        witness.max_clique_switched,
        witness.pencils_original,
        failed,
    );
    if ok {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn criterion_6(cases: &[Built]) -> Outcome {
    let small = &cases[0];
    let report = verify_wqh_hypotheses(&small.gamma, &small.partition);
    let gp = apply_switch(&small.gamma, &small.partition).unwrap();
    let flipped = small.gamma.symmetric_difference(&gp);
    let mut ok = report.switched.len() == 8 && flipped.len() == 64;
    let mut involution = Vec::new();
    for b in cases {
        let gp = apply_switch(&b.gamma, &b.partition).unwrap();
        let back = apply_switch(&gp, &b.partition)
            .map(|g| g == b.gamma)
            .unwrap_or(false);
        ok &= back;
        involution.push(format!("({},{})={back}", b.h, b.m));
    }
    let detail = format!(
        "switched vertices {}, flipped pairs {}; involution {}",
        report.switched.len(),
        flipped.len(),
        involution.join(" ")
    );
    if ok {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn criterion_7() -> Outcome {
    let mut ok = true;
    let mut checked = 0;
    for h in 2..=4u32 {
        let f = Field::new(h).unwrap();
        for m in 1..h {
            let arc = denniston_arc(&f, m).unwrap();
            let size = ((1usize << h) + 1) * ((1usize << m) - 1) + 1;
            let profile = srgswitch::arcs::intersection_profile(&f, &arc);
            ok &= arc.len() == size && profile.histogram.keys().all(|&c| c == 0 || c == 1 << m);
            checked += 1;
        }
    }
    let detail = format!("{checked} arcs with 0 < m < h <= 4");
    if ok {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn criterion_8(b: &Built) -> Outcome {
    let opts = ExploreOptions {
        depth: 1,
        limit: 8,
        seed: 0,
        t: b.t(),
        cell_size: b.q(),
    };
    let census = explore(&b.gamma, &opts).unwrap();
    let all_srg = census
        .entries
        .iter()
        .all(|e| srg_check(&e.graph).ok() == Some(SrgParams::new(96, 20, 4, 4)));
    let invariant = census.entries.iter().all(|e| {
        (0..100).all(|s| {
            Fingerprint::of(&e.graph.permuted(&random_perm(96, s)), b.t()) == e.fingerprint
        })
    });
    let detail = format!(
        "{} fingerprint-distinct graphs (lower bound), all SRG(96,20,4,4)={all_srg}, relabelling-invariant={invariant}",
        census.distinct
    );
    if census.distinct >= 2 && all_srg && invariant {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn criterion_9(cases: &[Built]) -> Outcome {
    let k3 = Graph::complete(3);
    let k3_code = graph6_encode(&k3);
    let mut graphs: Vec<Graph> = vec![k3];
    for b in cases {
        graphs.push(b.gamma.clone());
        graphs.push(apply_switch(&b.gamma, &b.partition).unwrap());
    }
    let small = &cases[0];
    let census = explore(
        &small.gamma,
        &ExploreOptions {
            depth: 1,
            limit: 8,
            seed: 0,
            t: 5,
            cell_size: 4,
        },
    )
    .unwrap();
    let census_ok = census
        .entries
        .iter()
        .all(|e| graph6_decode(&e.graph6).ok().as_ref() == Some(&e.graph));
    let round = graphs
        .iter()
        .all(|g| graph6_decode(&graph6_encode(g)).ok().as_ref() == Some(g));
    let detail = format!(
        "K3 -> {k3_code:?}; {} graphs + {} census entries round-trip",
        graphs.len(),
        census.entries.len()
    );
    if k3_code == "Bw" && round && census_ok {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn main() {
    let started = Instant::now();
    let mut results: Vec<(u32, Outcome)> = vec![(1, criterion_1()), (2, criterion_2())];
    let cases: Vec<Built> = [(2, 1), (3, 1), (3, 2)]
        .into_iter()
        .map(|(h, m)| build(h, m))
        .collect();
    results.push((3, criterion_3(&cases)));
    results.push((4, criterion_4(&cases)));
    results.push((5, criterion_5(&cases[0])));
    results.push((6, criterion_6(&cases)));
    results.push((7, criterion_7()));
    results.push((8, criterion_8(&cases[0])));
    results.push((9, criterion_9(&cases)));

    let mut failures = 0;
    for (n, r) in &results {
        println!(
            "criterion {n}: {} {}",
            if r.ok { "PASS" } else { "FAIL" },
            r.detail
        );
        failures += usize::from(!r.ok);
    }
    println!(
        "acceptance: {} passed, {failures} failed in {:.2?}",
        results.len() - failures,
        started.elapsed()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
