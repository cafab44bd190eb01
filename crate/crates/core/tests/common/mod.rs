#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use svcp::graph::{Graph, VertexSet};

/// Breadth-first enumeration of every distribution reachable from `start`,
/// with no pruning and no move ordering. Returns true when some reachable
/// distribution pebbles all of `target`.
pub fn bfs_reaches(g: &Graph, start: &[u32], target: VertexSet) -> bool {
    let pebbled = |d: &[u32]| target.iter().all(|t| d[t] > 0);
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut queue = VecDeque::from([start.to_vec()]);
    seen.insert(start.to_vec());
    while let Some(d) = queue.pop_front() {
        if pebbled(&d) {
            return true;
        }
        for &(u, v) in g.edges() {
            for (from, to) in [(u, v), (v, u)] {
                if d[from] >= 2 {
                    let mut next = d.clone();
                    next[from] -= 2;
                    next[to] += 1;
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    false
}

/// All distributions of exactly `m` pebbles on `n` vertices.
pub fn compositions(n: usize, m: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if m == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=m {
        for mut rest in compositions(n - 1, m - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
