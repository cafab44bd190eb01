//! Generators for the graph families used throughout the crate.
//!
//! Hub and apex vertices are always vertex 0.

use crate::error::{Error, Result};

use super::Graph;

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

/// `P_n`: vertex `i` adjacent to `i + 1`.
pub fn make_path(n: usize) -> Result<Graph> {
    require(n >= 1, || "path needs at least one vertex".into())?;
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

/// `C_n` for `n >= 3`.
pub fn make_cycle(n: usize) -> Result<Graph> {
    require(n >= 3, || {
        format!("cycle needs at least 3 vertices, got {n}")
    })?;
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `K_n` for `n >= 1`.
pub fn make_complete(n: usize) -> Result<Graph> {
    require(n >= 1, || "complete graph needs at least one vertex".into())?;
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{1,leaves}` with the centre at vertex 0.
pub fn make_star(leaves: usize) -> Result<Graph> {
    require(leaves >= 1, || "star needs at least one leaf".into())?;
    Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

/// `K_{p_1, ..., p_r}`. Parts are laid out consecutively, largest first.
pub fn make_complete_multipartite(parts: &[usize]) -> Result<Graph> {
    require(!parts.is_empty(), || "no parts given".into())?;
    require(parts.iter().all(|&p| p > 0), || {
        format!("part sizes must be positive: {parts:?}")
    })?;
    require(parts.windows(2).all(|w| w[0] >= w[1]), || {
        format!("part sizes must be non-increasing: {parts:?}")
    })?;
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, p));
    }
    let part_of = &part_of;
    Graph::new(
        n,
        (0..n).flat_map(|u| {
            (u + 1..n)
                .filter(move |&v| part_of[u] != part_of[v])
                .map(move |v| (u, v))
        }),
    )
}

/// `F_n`: `n` triangles sharing apex 0; triangle `i` (1-based) uses
/// vertices `2i - 1` and `2i`.
pub fn make_friendship(n: usize) -> Result<Graph> {
    require(n >= 1, || {
        "friendship graph needs at least one triangle".into()
    })?;
    Graph::new(
        2 * n + 1,
        (1..=n).flat_map(|i| [(0, 2 * i - 1), (0, 2 * i), (2 * i - 1, 2 * i)]),
    )
}

/// `W_rim = K_1 + C_rim` with hub 0 and rim vertices `1..=rim` in cyclic order.
pub fn make_wheel(rim: usize) -> Result<Graph> {
    require(rim >= 3, || {
        format!("wheel rim must have at least 3 vertices, got {rim}")
    })?;
    let spokes = (1..=rim).map(|v| (0, v));
    let rim_edges = (1..=rim).map(|v| (v, v % rim + 1));
    Graph::new(rim + 1, spokes.chain(rim_edges))
}

/// Vertices of `g1` keep their labels; those of `g2` are shifted by `g1.n()`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let off = g1.n();
    Graph::new(
        g1.n() + g2.n(),
        g1.edges()
            .iter()
            .copied()
            .chain(g2.edges().iter().map(|&(u, v)| (u + off, v + off))),
    )
}

/// `g1 + g2`: the disjoint union plus every edge between the two vertex sets.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let off = g1.n();
    let cross = (0..g1.n()).flat_map(|u| (0..g2.n()).map(move |v| (u, v + off)));
    Graph::new(
        g1.n() + g2.n(),
        g1.edges()
            .iter()
            .copied()
            .chain(g2.edges().iter().map(|&(u, v)| (u + off, v + off)))
            .chain(cross),
    )
}
