//! Exhaustive computation of cover-type pebbling invariants.
//!
//! For a target family `F`, the invariant is the least `m` such that every
//! distribution of `m` pebbles reaches some member of `F`:
//!
//! | invariant | family                               |
//! |-----------|--------------------------------------|
//! | `gamma`   | `{V(G)}`                             |
//! | `sigma`   | inclusion-minimal vertex covers      |
//! | `f_svcp`  | inclusion-minimal secure covers      |
//!
//! Reaching a superset of a target means reaching the target, so minimal
//! sets suffice. Solvability is monotone in `m`: any `m + 1` pebble
//! distribution dominates an `m` pebble one. The scan therefore starts at a
//! certified lower bound (the worst single-vertex stack) and walks upward
//! until a level is entirely solvable.
//!
//! Distributions of a level are visited in decreasing lexicographic order,
//! `(m, 0, ..., 0)` first. They are split into chunks by their first two
//! coordinates; workers take whole chunks, and the reported witness is the
//! first failure in that order regardless of scheduling.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::covers::{minimal_secure_covers, minimal_vertex_covers, DEFAULT_ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::pebbling::{Distribution, Engine, MoveCertificate, TargetFamily};

/// Default limit on the number of distributions in one scan level.
pub const DEFAULT_DISTRIBUTION_CAP: u128 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    Gamma,
    Sigma,
    FSvcp,
}

impl std::fmt::Display for Invariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.pad(match self {
            Invariant::Gamma => "gamma",
            Invariant::Sigma => "sigma",
            Invariant::FSvcp => "f_svcp",
        })
    }
}

#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Largest admissible `C(m + n - 1, n - 1)` for a scanned level.
    pub distribution_cap: u128,
    pub enumeration_cap: usize,
    /// Worker threads; `None` uses rayon's global pool.
    pub jobs: Option<usize>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            distribution_cap: DEFAULT_DISTRIBUTION_CAP,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            jobs: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolverStats {
    pub distributions_examined: u64,
    pub states_expanded: u64,
    pub levels_scanned: u32,
}

/// A solvable distribution together with the moves that solve it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleSolution {
    pub distribution: Distribution,
    pub target: VertexSet,
    pub certificate: MoveCertificate,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub invariant: Invariant,
    pub value: u64,
    /// First unsolvable distribution of `value - 1` pebbles in scan order.
    pub witness: Option<Distribution>,
    /// The extremal stack with `value` pebbles, solved.
    pub certificate: Option<SampleSolution>,
    pub stats: SolverStats,
    /// Excluded from serialized output to keep it reproducible.
    #[serde(skip)]
    pub wall_time: Duration,
}

/// Minimal target sets for `invariant` on `g`.
pub fn target_family(
    g: &Graph,
    invariant: Invariant,
    enumeration_cap: usize,
) -> Result<Vec<VertexSet>> {
    match invariant {
        Invariant::Gamma => Ok(vec![g.vertices()]),
        Invariant::Sigma => minimal_vertex_covers(g, enumeration_cap),
        Invariant::FSvcp => {
            let covers = minimal_secure_covers(g, enumeration_cap)?;
            if covers.is_empty() {
                Err(Error::NoSecureCover)
            } else {
                Ok(covers)
            }
        }
    }
}

/// `C(m + n - 1, n - 1)`, saturating.
pub fn distribution_count(n: usize, m: u64) -> u128 {
    if n == 0 {
        return u128::from(m == 0);
    }
    let k = (n - 1) as u128;
    let mut acc: u128 = 1;
    for i in 1..=k {
        let top = u128::from(m) + i;
        acc = match acc.checked_mul(top) {
            Some(x) => x / i,
            None => return u128::MAX,
        };
    }
    acc
}

/// Iterates the distributions of `m` pebbles over `len` slots in decreasing
/// lexicographic order.
struct Compositions {
    current: Vec<u32>,
    done: bool,
}

impl Compositions {
    fn new(len: usize, m: u32) -> Self {
        let mut current = vec![0; len];
        let done = if len == 0 {
            m != 0
        } else {
            current[0] = m;
            false
        };
        Compositions { current, done }
    }

    fn advance(&mut self) {
        let k = self.current.len();
        if k <= 1 {
            self.done = true;
            return;
        }
        let tail = std::mem::take(&mut self.current[k - 1]);
        match (0..k - 1).rev().find(|&i| self.current[i] > 0) {
            Some(i) => {
                self.current[i] -= 1;
                self.current[i + 1] = tail + 1;
            }
            None => self.done = true,
        }
    }
}

impl Iterator for Compositions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        self.advance();
        Some(out)
    }
}

/// Every distribution of `m` pebbles on `n` vertices in scan order.
pub fn distributions(n: usize, m: u32) -> impl Iterator<Item = Distribution> {
    Compositions::new(n, m).map(Distribution::new)
}

/// Chunk prefixes: the first `min(2, n - 1)` coordinates.
fn chunk_prefixes(n: usize, m: u32) -> Vec<Vec<u32>> {
    let p = n.saturating_sub(1).min(2);
    let mut out = Vec::new();
    for used in (0..=m).rev() {
        out.extend(Compositions::new(p, used));
    }
    // Decreasing lexicographic order across different prefix sums.
    out.sort_by(|a, b| b.cmp(a));
    out
}

#[derive(Default)]
struct ChunkOutcome {
    examined: u64,
    expanded: u64,
    failure: Option<Vec<u32>>,
    skipped: bool,
}

fn scan_chunk(
    engine: &mut Engine,
    family: &TargetFamily,
    prefix: &[u32],
    n: usize,
    m: u32,
) -> ChunkOutcome {
    let used: u32 = prefix.iter().sum();
    let mut out = ChunkOutcome::default();
    let mut counts = prefix.to_vec();
    counts.resize(n, 0);
    for rest in Compositions::new(n - prefix.len(), m - used) {
        counts[prefix.len()..].copy_from_slice(&rest);
        out.examined += 1;
        let support = VertexSet::from_bits(
            counts
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .fold(0, |acc, (v, _)| acc | 1 << v),
        );
        if family.sets().iter().any(|t| t.is_subset(support)) {
            continue;
        }
        let r = engine.reach(&counts, family);
        out.expanded += r.states_expanded;
        if !r.reachable {
            out.failure = Some(counts.clone());
            break;
        }
    }
    out
}

struct LevelOutcome {
    examined: u64,
    expanded: u64,
    failure: Option<Distribution>,
}

fn scan_level(engine: &Engine, family: &TargetFamily, n: usize, m: u32) -> LevelOutcome {
    let prefixes = chunk_prefixes(n, m);
    let first_failure = AtomicUsize::new(usize::MAX);
    let outcomes: Vec<ChunkOutcome> = prefixes
        .par_iter()
        .enumerate()
        .map_init(
            || engine.clone(),
            |eng, (i, prefix)| {
                if i > first_failure.load(Ordering::Relaxed) {
                    return ChunkOutcome {
                        skipped: true,
                        ..Default::default()
                    };
                }
                let out = scan_chunk(eng, family, prefix, n, m);
                if out.failure.is_some() {
                    first_failure.fetch_min(i, Ordering::Relaxed);
                }
                out
            },
        )
        .collect();

    // Only chunks up to the first failing one count, so the statistics do
    // not depend on scheduling.
    let mut level = LevelOutcome {
        examined: 0,
        expanded: 0,
        failure: None,
    };
    for out in outcomes {
        debug_assert!(!out.skipped || level.failure.is_some());
        level.examined += out.examined;
        level.expanded += out.expanded;
        if let Some(f) = out.failure {
            level.failure = Some(Distribution::new(f));
            break;
        }
    }
    level
}

/// Smallest `k` such that `k` pebbles stacked on `v` reach some target.
fn min_solvable_stack(engine: &mut Engine, family: &TargetFamily, v: Vertex) -> u64 {
    let n = engine.n();
    // Sending pebbles to each target vertex separately always works.
    let mut hi: u64 = family
        .sets()
        .iter()
        .map(|s| s.iter().map(|t| 1u64 << engine.distance(v, t)).sum())
        .min()
        .unwrap();
    let mut lo: u64 = 0;
    let solvable = |engine: &mut Engine, k: u64| {
        let d = Distribution::stacked(n, v, k as u32);
        engine.reach(d.counts(), family).reachable
    };
    if solvable(engine, 0) {
        return 0;
    }
    // Invariant: lo unsolvable, hi solvable.
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if solvable(engine, mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Largest over vertices of the smallest solvable stack, with the first
/// vertex attaining it.
fn stacked_bound(engine: &mut Engine, family: &TargetFamily) -> (u64, Vertex) {
    (0..engine.n())
        .map(|v| (min_solvable_stack(engine, family, v), v))
        .fold(
            (0, 0),
            |best, (k, v)| if k > best.0 { (k, v) } else { best },
        )
}

/// A lower bound for the invariant of `targets`: the worst single-vertex
/// stack. Stacking `bound - 1` pebbles on the right vertex fails.
pub fn stacked_lower_bound(g: &Graph, targets: &[VertexSet]) -> Result<u64> {
    let mut engine = Engine::new(g)?;
    let family = engine.targets(targets.to_vec())?;
    Ok(stacked_bound(&mut engine, &family).0)
}

fn check_cap(n: usize, m: u64, cap: u128) -> Result<()> {
    let count = distribution_count(n, m);
    if count > cap {
        Err(Error::CapExceeded {
            pebbles: m,
            count,
            cap,
        })
    } else {
        Ok(())
    }
}

/// Computes `invariant` for the connected graph `g` exactly.
pub fn compute(g: &Graph, invariant: Invariant, config: &SolverConfig) -> Result<InvariantReport> {
    match config.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?
            .install(|| compute_in_pool(g, invariant, config)),
        None => compute_in_pool(g, invariant, config),
    }
}

fn compute_in_pool(
    g: &Graph,
    invariant: Invariant,
    config: &SolverConfig,
) -> Result<InvariantReport> {
    let started = Instant::now();
    g.require_connected()?;
    let n = g.n();
    let sets = target_family(g, invariant, config.enumeration_cap)?;
    let mut engine = Engine::new(g)?;
    let family = engine.targets(sets)?;
    let (lower, stack_vertex) = stacked_bound(&mut engine, &family);

    let mut stats = SolverStats::default();
    let mut last_failure = None;
    let mut m = lower;
    loop {
        check_cap(n, m, config.distribution_cap)?;
        let level = scan_level(&engine, &family, n, m as u32);
        stats.levels_scanned += 1;
        stats.distributions_examined += level.examined;
        stats.states_expanded += level.expanded;
        match level.failure {
            Some(f) => {
                last_failure = Some(f);
                m += 1;
            }
            None => break,
        }
    }
    let value = m;

    let witness = if value == 0 {
        None
    } else if value > lower {
        last_failure
    } else {
        let level = scan_level(&engine, &family, n, (value - 1) as u32);
        stats.levels_scanned += 1;
        stats.distributions_examined += level.examined;
        stats.states_expanded += level.expanded;
        level.failure
    };

    let stack = Distribution::stacked(n, stack_vertex, value as u32);
    let solved = engine.reach(stack.counts(), &family);
    let certificate = solved.certificate.map(|certificate| SampleSolution {
        target: family.sets()[solved.target_index.unwrap()],
        distribution: stack,
        certificate,
    });

    Ok(InvariantReport {
        invariant,
        value,
        witness,
        certificate,
        stats,
        wall_time: started.elapsed(),
    })
}

pub fn compute_f_svcp(g: &Graph, config: &SolverConfig) -> Result<InvariantReport> {
    compute(g, Invariant::FSvcp, config)
}

pub fn compute_gamma(g: &Graph, config: &SolverConfig) -> Result<InvariantReport> {
    compute(g, Invariant::Gamma, config)
}

pub fn compute_sigma(g: &Graph, config: &SolverConfig) -> Result<InvariantReport> {
    compute(g, Invariant::Sigma, config)
}

/// The three invariants of a graph checked against the two bound chains
/// `sigma <= f_svcp <= gamma` and `n - 1 <= f_svcp <= (n - 1) 2^(d - 1)`.
#[derive(Clone, Debug, Serialize)]
pub struct SandwichReport {
    pub n: usize,
    pub diameter: usize,
    pub sigma: u64,
    pub f_svcp: u64,
    pub gamma: u64,
    pub lower_bound: u64,
    /// `(n - 1) 2^(d - 1)`; fractional only for `K_1`.
    pub upper_bound: f64,
    pub chain_holds: bool,
    pub bounds_hold: bool,
    pub violations: Vec<String>,
}

impl SandwichReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_sandwich(g: &Graph, config: &SolverConfig) -> Result<SandwichReport> {
    g.require_connected()?;
    let sigma = compute_sigma(g, config)?.value;
    let f_svcp = compute_f_svcp(g, config)?.value;
    let gamma = compute_gamma(g, config)?.value;
    let n = g.n();
    let d = g.diameter().expect("connected");
    let lower_bound = (n - 1) as u64;
    // f <= (n-1) 2^(d-1)  <=>  2f <= (n-1) 2^d
    let upper_doubled = ((n - 1) as u128) << d;
    let upper_bound = (n - 1) as f64 * 2f64.powi(d as i32 - 1);

    let chain_holds = sigma <= f_svcp && f_svcp <= gamma;
    let bounds_hold = f_svcp >= lower_bound && 2 * u128::from(f_svcp) <= upper_doubled;

    let mut violations = Vec::new();
    if sigma > f_svcp {
        violations.push(format!("sigma {sigma} > f_svcp {f_svcp}"));
    }
    if f_svcp > gamma {
        violations.push(format!("f_svcp {f_svcp} > gamma {gamma}"));
    }
    if f_svcp < lower_bound {
        violations.push(format!("f_svcp {f_svcp} < n-1 = {lower_bound}"));
    }
    if 2 * u128::from(f_svcp) > upper_doubled {
        violations.push(format!("f_svcp {f_svcp} > (n-1)2^(d-1) = {upper_bound}"));
    }
    Ok(SandwichReport {
        n,
        diameter: d,
        sigma,
        f_svcp,
        gamma,
        lower_bound,
        upper_bound,
        chain_holds,
        bounds_hold,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_path};

    #[test]
    fn compositions_in_decreasing_lex_order() {
        let all: Vec<Vec<u32>> = Compositions::new(3, 2).collect();
        assert_eq!(
            all,
            [
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 2, 0],
                vec![0, 1, 1],
                vec![0, 0, 2]
            ]
        );
        assert_eq!(Compositions::new(1, 5).count(), 1);
        assert_eq!(Compositions::new(0, 0).count(), 1);
        assert_eq!(Compositions::new(0, 1).count(), 0);
        for n in 1..6 {
            for m in 0..7 {
                assert_eq!(
                    Compositions::new(n, m).count() as u128,
                    distribution_count(n, m.into())
                );
            }
        }
    }

    #[test]
    fn chunks_cover_each_level_in_order() {
        for n in 1..6 {
            for m in 0..6u32 {
                let mut chunked = Vec::new();
                for prefix in chunk_prefixes(n, m) {
                    let used: u32 = prefix.iter().sum();
                    for rest in Compositions::new(n - prefix.len(), m - used) {
                        let mut d = prefix.clone();
                        d.extend(rest);
                        chunked.push(d);
                    }
                }
                let direct: Vec<Vec<u32>> = Compositions::new(n, m).collect();
                assert_eq!(chunked, direct, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn distribution_count_values() {
        assert_eq!(distribution_count(6, 27), 201_376);
        assert_eq!(distribution_count(1, 100), 1);
        assert_eq!(distribution_count(60, 1000), u128::MAX);
    }

    #[test]
    fn small_values() {
        let cfg = SolverConfig::default();
        assert_eq!(
            compute_gamma(&make_complete(2).unwrap(), &cfg)
                .unwrap()
                .value,
            3
        );
        assert_eq!(
            compute_gamma(&make_complete(3).unwrap(), &cfg)
                .unwrap()
                .value,
            5
        );
        assert_eq!(
            compute_gamma(&make_path(3).unwrap(), &cfg).unwrap().value,
            7
        );
        assert_eq!(
            compute_f_svcp(&make_complete(4).unwrap(), &cfg)
                .unwrap()
                .value,
            5
        );
    }

    #[test]
    fn cap_is_enforced() {
        let cfg = SolverConfig {
            distribution_cap: 10,
            ..Default::default()
        };
        assert!(matches!(
            compute_f_svcp(&make_path(5).unwrap(), &cfg),
            Err(Error::CapExceeded { .. })
        ));
    }
}
