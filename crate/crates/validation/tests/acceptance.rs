//! One check per acceptance criterion. Every check prints a PASS or FAIL
//! line; the process exits non-zero when any check fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use svcp::covers::path::{path_canonical_cover, weight};
use svcp::covers::{alpha_s, enumerate_secure_covers, is_secure_vertex_cover};
use svcp::formulas::{f_svcp_complete, f_svcp_multipartite, f_svcp_wheel, wn};
use svcp::graph::*;
use svcp::pebbling::{can_reach_set, Distribution};
use svcp::reductions::verify_clique_layer_correspondence;
use svcp::solver::{check_sandwich, compute_f_svcp, compute_sigma, SolverConfig};

const SEED: u64 = 0x05EC_07E8;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn f(g: &Graph) -> u64 {
    compute_f_svcp(g, &SolverConfig::default()).unwrap().value
}

fn sigma(g: &Graph) -> u64 {
    compute_sigma(g, &SolverConfig::default()).unwrap().value
}

fn p6_minimal_covers() -> Outcome {
    let out = svcp::cli::run([
        "svcp",
        "secure-covers",
        "--family",
        "path",
        "--n",
        "6",
        "--minimal",
    ]);
    let json: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let labels: Vec<&str> = json["covers"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["label"].as_str().unwrap())
        .collect();
    let expected = [
        "1245", "1246", "1345", "1346", "1356", "2345", "2346", "2356",
    ];
    outcome(
        out.code == 0 && labels == expected,
        format!("minimal secure covers of P_6: {labels:?}"),
    )
}

fn complete_graphs() -> Outcome {
    let got: Vec<u64> = (2..=5).map(|n| f(&make_complete(n).unwrap())).collect();
    let want: Vec<u64> = (2..=5)
        .map(|n| f_svcp_complete(n).value_u64().unwrap())
        .collect();
    outcome(
        got == want,
        format!("K_2..K_5 oracle {got:?}, formula {want:?}"),
    )
}

fn paths() -> Outcome {
    let got: Vec<u64> = (2..=6).map(|n| f(&make_path(n).unwrap())).collect();
    let want: Vec<u64> = (2..=6).map(|n| u64::try_from(wn(n)).unwrap()).collect();
    let weights_ok = (2..=40).all(|n| weight(path_canonical_cover(n).unwrap()) == wn(n));
    let mut unique_min = true;
    for n in 2..=14 {
        let covers = enumerate_secure_covers(&make_path(n).unwrap(), false).unwrap();
        let min = covers.iter().map(|c| weight(c.members)).min().unwrap();
        let argmin: Vec<VertexSet> = covers
            .iter()
            .filter(|c| weight(c.members) == min)
            .map(|c| c.members)
            .collect();
        unique_min &= min == wn(n) && argmin == [path_canonical_cover(n).unwrap()];
    }
    outcome(
        got == want && weights_ok && unique_min && want == [1, 3, 6, 13, 27],
        format!(
            "P_2..P_6 oracle {got:?}, w_n {want:?}; weight(S_n)=w_n for n<=40: {weights_ok}; unique minimum S_n for n<=14: {unique_min}"
        ),
    )
}

fn multipartite() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for parts in [vec![2, 2], vec![3, 1], vec![2, 1, 1], vec![2, 2, 1]] {
        let g = make_complete_multipartite(&parts).unwrap();
        let (fv, a) = (f(&g), alpha_s(&g).unwrap());
        let want = f_svcp_multipartite(&parts).value_u64().unwrap();
        ok &= fv == want && a == g.n() - 1;
        detail.push(format!(
            "{parts:?}: f={fv} (formula {want}), alpha_s={a} (n-1={})",
            g.n() - 1
        ));
    }
    outcome(ok, detail.join("; "))
}

fn friendship() -> Outcome {
    let f2 = f(&make_friendship(2).unwrap());
    let alphas: Vec<usize> = (1..=3)
        .map(|n| alpha_s(&make_friendship(n).unwrap()).unwrap())
        .collect();
    outcome(
        f2 == 7 && alphas == [2, 3, 4],
        format!("f(F_2)={f2}, alpha_s(F_1..F_3)={alphas:?}"),
    )
}

fn wheels() -> Outcome {
    let w5 = f(&make_wheel(5).unwrap());
    let w6 = f(&make_wheel(6).unwrap());
    let k4 = f(&make_complete(4).unwrap());
    let (c5, c6) = (
        f_svcp_wheel(5).value_u64().unwrap(),
        f_svcp_wheel(6).value_u64().unwrap(),
    );
    let rim3_case = f_svcp_wheel(3).value_u64().unwrap();
    let complete4 = f_svcp_complete(4).value_u64().unwrap();
    outcome(
        w5 == 11 && w6 == 15 && k4 == 5,
        format!(
            "f(W_5)={w5} (expected {c5}), f(W_6)={w6} (expected {c6}); rim 3: oracle f(K_4)={k4}, complete-graph formula {complete4}, wheel case formula {rim3_case}"
        ),
    )
}

fn sandwich() -> Outcome {
    let cfg = SolverConfig::default();
    let (mut graphs, mut chain_bad, mut bound_bad) = (0, 0, 0);
    let mut examples = Vec::new();
    for n in 1..=5 {
        for g in connected_graphs(n).unwrap() {
            graphs += 1;
            let r = check_sandwich(&g, &cfg).unwrap();
            chain_bad += usize::from(!r.chain_holds);
            bound_bad += usize::from(!r.bounds_hold);
            if !r.holds() && examples.len() < 4 {
                examples.push(format!(
                    "n={} d={} {}",
                    r.n,
                    r.diameter,
                    r.violations.join(", ")
                ));
            }
        }
    }
    outcome(
        chain_bad == 0 && bound_bad == 0,
        format!(
            "{graphs} graphs; chain violations {chain_bad}, bound violations {bound_bad}; e.g. {}",
            examples.join(" | ")
        ),
    )
}

fn sigma_equalities() -> Outcome {
    let stars: Vec<(u64, u64)> = (2..=3)
        .map(|l| {
            let g = make_star(l).unwrap();
            (sigma(&g), f(&g))
        })
        .collect();
    let paths: Vec<(u64, u64)> = (1..=5)
        .map(|n| {
            let g = make_path(n).unwrap();
            (sigma(&g), f(&g))
        })
        .collect();
    let stars_ok = stars.iter().all(|(s, v)| s == v);
    let paths_ok = paths[..2].iter().all(|(s, v)| s == v) && paths[2..].iter().all(|(s, v)| s < v);
    outcome(
        stars_ok && paths_ok,
        format!("(sigma, f) for K_(1,2), K_(1,3): {stars:?}; for P_1..P_5: {paths:?}"),
    )
}

fn reduction() -> Outcome {
    let (mut graphs, mut bad) = (0, 0);
    for n in 1..=5 {
        for g in connected_graphs(n).unwrap() {
            graphs += 1;
            bad += verify_clique_layer_correspondence(&g)
                .unwrap()
                .counterexamples
                .len();
        }
    }
    outcome(bad == 0, format!("{graphs} graphs, {bad} counterexamples"))
}

fn engine_soundness() -> Outcome {
    let mut graphs = Vec::new();
    for n in 1..=4 {
        graphs.extend(connected_graphs(n).unwrap());
    }
    let mut queries = 0u64;
    let mut disagreements = 0u64;
    for g in &graphs {
        let n = g.n();
        for m in 0..=8 {
            for counts in common::compositions(n, m) {
                let d = Distribution::new(counts.clone());
                for bits in 1..1u64 << n {
                    let t = VertexSet::from_bits(bits);
                    queries += 1;
                    let fast = can_reach_set(g, &d, t).unwrap().reachable;
                    if fast != common::bfs_reaches(g, &counts, t) {
                        disagreements += 1;
                    }
                }
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut pool = Vec::new();
    for n in 2..=6 {
        pool.extend(connected_graphs(n).unwrap());
    }
    let mut monotone_bad = 0;
    for _ in 0..10_000 {
        let g = &pool[rng.gen_range(0..pool.len())];
        let n = g.n();
        let mut d = Distribution::new((0..n).map(|_| rng.gen_range(0..4)).collect());
        let t = VertexSet::from_bits(rng.gen_range(1..1u64 << n));
        let before = can_reach_set(g, &d, t).unwrap().reachable;
        d.add(rng.gen_range(0..n), 1);
        let after = can_reach_set(g, &d, t).unwrap().reachable;
        monotone_bad += u64::from(before && !after);
    }
    outcome(
        disagreements == 0 && monotone_bad == 0,
        format!("{queries} queries vs unpruned BFS, {disagreements} disagreements; 10000 pebble additions, {monotone_bad} monotonicity failures"),
    )
}

fn superset_closure() -> Outcome {
    let (mut graphs, mut checked, mut bad) = (0, 0u64, 0u64);
    for n in 1..=6 {
        for g in all_graphs(n).unwrap() {
            graphs += 1;
            for bits in 0..1u64 << n {
                let s = VertexSet::from_bits(bits);
                if !is_secure_vertex_cover(&g, s).unwrap() {
                    continue;
                }
                for v in g.vertices().difference(s).iter() {
                    checked += 1;
                    bad += u64::from(!is_secure_vertex_cover(&g, s.with(v)).unwrap());
                }
            }
        }
    }
    outcome(
        bad == 0,
        format!("{graphs} graphs, {checked} one-vertex extensions, {bad} violations"),
    )
}

fn main() {
    type Check = (u32, &'static str, u64, fn() -> Outcome);
    let checks: [Check; 11] = [
        (1, "P_6 minimal secure covers", 1, p6_minimal_covers),
        (2, "complete graphs", 60, complete_graphs),
        (3, "paths and w_n", 600, paths),
        (4, "complete multipartite graphs", 600, multipartite),
        (5, "friendship graphs", 60, friendship),
        (6, "wheels", 900, wheels),
        (
            7,
            "sandwich bounds on connected graphs up to 5 vertices",
            1800,
            sandwich,
        ),
        (
            8,
            "sigma against f_svcp on stars and paths",
            600,
            sigma_equalities,
        ),
        (
            9,
            "clique-layer correspondence up to 5 vertices",
            600,
            reduction,
        ),
        (
            10,
            "engine soundness and monotonicity",
            600,
            engine_soundness,
        ),
        (
            11,
            "superset closure up to 6 vertices",
            300,
            superset_closure,
        ),
    ];
    let mut failed = 0;
    for (id, name, limit, check) in checks {
        let started = Instant::now();
        let result = check();
        let elapsed = started.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let ok = result.ok && in_time;
        failed += usize::from(!ok);
        let timing = if in_time {
            format!("{:.2}s", elapsed.as_secs_f64())
        } else {
            format!("{:.2}s, over the {limit}s limit", elapsed.as_secs_f64())
        };
        println!(
            "{} criterion {id:>2}: {name} ({timing}): {}",
            if ok { "PASS" } else { "FAIL" },
            result.detail
        );
    }
    println!("acceptance: {} passed, {failed} failed", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
