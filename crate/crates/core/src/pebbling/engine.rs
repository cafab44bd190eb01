//! Exact reachability search.
//!
//! Depth-first search over pebble distributions. Every move removes one
//! pebble from the board, so the search space is finite and acyclic. Dead
//! states are memoized per call. A state is cut off when no target can
//! still be reached according to two necessary conditions that no pebbling
//! move can improve:
//!
//! * for every root `r`, `sum_v c(v) 2^-d(v,r) >= sum_{t in T} 2^-d(t,r)`;
//! * `sum_v c(v) 2^-d(v,T) >= |T|`, where `d(v,T)` is the distance to the
//!   nearest member of `T`.
//!
//! Each left-hand side is a weight function `w` with `w(b) <= 2 w(a)` on
//! every edge, so it never increases under a move, and a final state that
//! pebbles all of `T` already meets the right-hand side. The cut-offs
//! therefore never discard a solvable state. Taking `r = t` for an
//! unpebbled target `t` recovers the classical single-target condition.

use rustc_hash::FxHashSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

use super::{Distribution, Move, MoveCertificate};

/// Outcome of a reachability query.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reach {
    pub reachable: bool,
    /// Index into the queried family of the target that was reached.
    pub target_index: Option<usize>,
    pub certificate: Option<MoveCertificate>,
    pub states_expanded: u64,
}

/// A family of target sets with precomputed vertex-to-set distances.
#[derive(Clone, Debug)]
pub struct TargetFamily {
    sets: Vec<VertexSet>,
    dist_to_set: Vec<Vec<u32>>,
    /// `sum_{t in T} 2^(D - d(t,r))` per set and root `r`.
    root_demand: Vec<Vec<u128>>,
}

impl TargetFamily {
    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }
}

/// Reusable search state for one connected graph.
///
/// Cloning an engine is cheap enough to hand one to each worker; the memo
/// table is cleared at the start of every query.
#[derive(Clone)]
pub struct Engine {
    n: usize,
    diameter: u32,
    dist: Vec<Vec<u32>>,
    neighbors: Vec<Vec<Vertex>>,
    memo: FxHashSet<Vec<u32>>,
    path: Vec<Move>,
    expanded: u64,
}

impl Engine {
    pub fn new(g: &Graph) -> Result<Self> {
        let dist: Vec<Vec<u32>> = g
            .distance_matrix()?
            .into_iter()
            .map(|row| row.into_iter().map(|d| d as u32).collect())
            .collect();
        let diameter = dist.iter().flatten().copied().max().unwrap_or(0);
        Ok(Engine {
            n: g.n(),
            diameter,
            dist,
            neighbors: (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect(),
            memo: FxHashSet::default(),
            path: Vec::new(),
            expanded: 0,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> u32 {
        self.dist[u][v]
    }

    pub fn targets(&self, sets: Vec<VertexSet>) -> Result<TargetFamily> {
        if sets.is_empty() {
            return Err(Error::EmptyTargetFamily);
        }
        if let Some(s) = sets.iter().find(|s| s.span() > self.n) {
            return Err(Error::VertexOutOfRange {
                vertex: s.span() - 1,
                n: self.n,
            });
        }
        let dist_to_set = sets
            .iter()
            .map(|s| {
                (0..self.n)
                    .map(|v| s.iter().map(|t| self.dist[v][t]).min().unwrap_or(0))
                    .collect()
            })
            .collect();
        let root_demand = sets
            .iter()
            .map(|s| {
                (0..self.n)
                    .map(|r| {
                        s.iter()
                            .map(|t| 1u128 << (self.diameter - self.dist[t][r]))
                            .sum()
                    })
                    .collect()
            })
            .collect();
        Ok(TargetFamily {
            sets,
            dist_to_set,
            root_demand,
        })
    }

    /// Decides whether `counts` can reach some member of `family`.
    pub fn reach(&mut self, counts: &[u32], family: &TargetFamily) -> Reach {
        assert_eq!(counts.len(), self.n, "distribution length");
        self.memo.clear();
        self.path.clear();
        self.expanded = 0;

        let order = self.order_targets(counts, family);
        let mut state = counts.to_vec();
        let total = counts.iter().map(|&c| u64::from(c)).sum();
        let hit = self.dfs(&mut state, total, family, &order);
        Reach {
            reachable: hit.is_some(),
            target_index: hit,
            certificate: hit.map(|_| MoveCertificate {
                moves: std::mem::take(&mut self.path),
            }),
            states_expanded: self.expanded,
        }
    }

    /// Cheapest targets first: each target vertex costs `2^d` where `d` is
    /// its distance to the nearest pebble.
    fn order_targets(&self, counts: &[u32], family: &TargetFamily) -> Vec<usize> {
        let pebbled: Vec<Vertex> = (0..self.n).filter(|&v| counts[v] > 0).collect();
        let cost = |s: VertexSet| -> u128 {
            s.iter()
                .map(|t| {
                    pebbled
                        .iter()
                        .map(|&v| 1u128 << self.dist[v][t].min(100))
                        .min()
                        .unwrap_or(u128::MAX >> 8)
                })
                .sum()
        };
        let mut order: Vec<(u128, usize)> = family
            .sets
            .iter()
            .enumerate()
            .map(|(i, &s)| (cost(s), i))
            .collect();
        order.sort();
        order.into_iter().map(|(_, i)| i).collect()
    }

    fn covered(state: &[u32]) -> VertexSet {
        VertexSet::from_bits(
            state
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .fold(0u64, |acc, (v, _)| acc | 1 << v),
        )
    }

    /// `sum_v c(v) 2^(D - d(v))` for a distance profile `d`, `D` the diameter.
    fn scaled_potential(&self, state: &[u32], dist: impl Fn(Vertex) -> u32) -> u128 {
        state
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(v, &c)| u128::from(c) << (self.diameter - dist(v)))
            .sum()
    }

    /// First target in `order` that both pruning conditions leave alive.
    fn first_alive(
        &self,
        state: &[u32],
        total: u64,
        covered: VertexSet,
        family: &TargetFamily,
        order: &[usize],
    ) -> Option<usize> {
        let one = 1u128 << self.diameter;
        // Root potentials are shared by all targets; computed on first use.
        let mut root_supply: Option<Vec<u128>> = None;
        order.iter().copied().find(|&i| {
            let set = family.sets[i];
            let missing = set.difference(covered);
            if missing.len() as u64 > total {
                return false;
            }
            let set_potential = self.scaled_potential(state, |v| family.dist_to_set[i][v]);
            if set_potential < one * set.len() as u128 {
                return false;
            }
            let supply = root_supply.get_or_insert_with(|| {
                (0..self.n)
                    .map(|r| self.scaled_potential(state, |v| self.dist[v][r]))
                    .collect()
            });
            supply
                .iter()
                .zip(&family.root_demand[i])
                .all(|(s, d)| s >= d)
        })
    }

    fn dfs(
        &mut self,
        state: &mut Vec<u32>,
        total: u64,
        family: &TargetFamily,
        order: &[usize],
    ) -> Option<usize> {
        let covered = Self::covered(state);
        if let Some(&i) = order.iter().find(|&&i| family.sets[i].is_subset(covered)) {
            return Some(i);
        }
        let guide = self.first_alive(state, total, covered, family, order)?;
        if self.memo.contains(state.as_slice()) {
            return None;
        }
        self.expanded += 1;

        // Moves toward the guiding target's unpebbled vertices go first.
        let missing = family.sets[guide].difference(covered);
        let to_missing = |x: Vertex| missing.iter().map(|t| self.dist[x][t]).min().unwrap_or(0);
        let mut moves: Vec<(bool, u32, Move)> = Vec::new();
        for (from, _) in state.iter().enumerate().filter(|(_, &c)| c >= 2) {
            let here = to_missing(from);
            for &to in &self.neighbors[from] {
                let there = to_missing(to);
                moves.push((there >= here, there, Move { from, to }));
            }
        }
        moves.sort_by_key(|&(away, d, m)| (away, d, m.from, m.to));

        for (_, _, m) in moves {
            state[m.from] -= 2;
            state[m.to] += 1;
            self.path.push(m);
            let hit = self.dfs(state, total - 1, family, order);
            if hit.is_some() {
                return hit;
            }
            self.path.pop();
            state[m.from] += 2;
            state[m.to] -= 1;
        }
        self.memo.insert(state.clone());
        None
    }
}

/// Can `d` place at least one pebble on every vertex of `target` at once?
pub fn can_reach_set(g: &Graph, d: &Distribution, target: VertexSet) -> Result<Reach> {
    can_reach_any(g, d, &[target])
}

/// Can `d` reach at least one of `targets`? On success the reached target's
/// index and a replayable certificate are returned.
pub fn can_reach_any(g: &Graph, d: &Distribution, targets: &[VertexSet]) -> Result<Reach> {
    d.check_graph(g)?;
    let mut engine = Engine::new(g)?;
    let family = engine.targets(targets.to_vec())?;
    Ok(engine.reach(d.counts(), &family))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covers::{minimal_secure_covers, path::path_canonical_cover, path::weight};
    use crate::graph::{disjoint_union, make_complete, make_path};

    fn set(labels: &[usize]) -> VertexSet {
        VertexSet::from_one_based(labels.iter().copied())
    }

    fn check(g: &Graph, d: &Distribution, targets: &[VertexSet]) -> bool {
        let r = can_reach_any(g, d, targets).unwrap();
        if let Some(cert) = &r.certificate {
            let t = targets[r.target_index.unwrap()];
            assert!(cert.verify(g, d, t).unwrap(), "certificate fails to replay");
        }
        r.reachable
    }

    #[test]
    fn p3_examples() {
        let p3 = make_path(3).unwrap();
        let d = Distribution::new(vec![3, 0, 0]);
        let r = can_reach_set(&p3, &d, set(&[1, 2])).unwrap();
        assert!(r.reachable);
        assert_eq!(r.certificate.unwrap().moves, [Move { from: 0, to: 1 }]);
        let d = Distribution::new(vec![2, 0, 0]);
        assert!(!check(&p3, &d, &[set(&[1, 2])]));
    }

    #[test]
    fn p6_stack_on_first_vertex() {
        let p6 = make_path(6).unwrap();
        let s6 = path_canonical_cover(6).unwrap();
        assert!(check(&p6, &Distribution::stacked(6, 0, 27), &[s6]));
        assert!(!check(&p6, &Distribution::stacked(6, 0, 26), &[s6]));
    }

    #[test]
    fn any_target() {
        let p6 = make_path(6).unwrap();
        let sec6 = minimal_secure_covers(&p6, 24).unwrap();
        let d = Distribution::new(vec![1, 1, 0, 1, 1, 0]);
        let r = can_reach_any(&p6, &d, &sec6).unwrap();
        assert!(r.reachable);
        assert!(r.certificate.unwrap().is_empty());
        assert_eq!(sec6[r.target_index.unwrap()], set(&[1, 2, 4, 5]));

        assert!(check(
            &p6,
            &Distribution::new(vec![0, 0, 26, 0, 0, 0]),
            &sec6
        ));

        let k2 = make_complete(2).unwrap();
        assert!(check(
            &k2,
            &Distribution::new(vec![0, 1]),
            &[set(&[1]), set(&[2])]
        ));
    }

    #[test]
    fn errors() {
        let p3 = make_path(3).unwrap();
        let d = Distribution::zeros(3);
        assert!(matches!(
            can_reach_any(&p3, &d, &[]),
            Err(Error::EmptyTargetFamily)
        ));
        assert!(matches!(
            can_reach_set(&p3, &d, set(&[4])),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            can_reach_set(&p3, &Distribution::zeros(2), set(&[1])),
            Err(Error::DistributionLength { .. })
        ));
        let split = disjoint_union(&p3, &p3).unwrap();
        assert!(matches!(
            can_reach_set(&split, &Distribution::zeros(6), set(&[1])),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn empty_target_is_trivially_reached() {
        let p3 = make_path(3).unwrap();
        assert!(check(&p3, &Distribution::zeros(3), &[VertexSet::EMPTY]));
    }

    #[test]
    fn stack_on_first_vertex_needs_exactly_the_weight() {
        for n in 2..=7 {
            let g = make_path(n).unwrap();
            for bits in 1..1u64 << n {
                let s = VertexSet::from_bits(bits);
                let w: u32 = weight(s).try_into().unwrap();
                assert!(
                    check(&g, &Distribution::stacked(n, 0, w), &[s]),
                    "n={n} {s:?}"
                );
                assert!(
                    !check(&g, &Distribution::stacked(n, 0, w - 1), &[s]),
                    "n={n} {s:?}"
                );
            }
        }
    }
}
