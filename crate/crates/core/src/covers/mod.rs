//! Vertex covers and secure vertex covers.
//!
//! A set `S` is a *secure* vertex cover when it is a vertex cover and every
//! vertex `u` outside `S` has a neighbour `v` in `S` such that swapping `v`
//! out for `u` still leaves a vertex cover. Only vertices outside `S` are
//! quantified over; vertices of `S` are never asked to swap.

pub mod path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default limit on the vertex count for subset enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 24;

pub fn is_vertex_cover(g: &Graph, s: VertexSet) -> Result<bool> {
    g.check_set(s)?;
    Ok(vertex_cover_unchecked(g, s))
}

pub fn is_secure_vertex_cover(g: &Graph, s: VertexSet) -> Result<bool> {
    g.check_set(s)?;
    Ok(secure_cover_unchecked(g, s))
}

/// Every vertex outside `s` must have its whole neighbourhood inside `s`.
pub(crate) fn vertex_cover_unchecked(g: &Graph, s: VertexSet) -> bool {
    g.vertices()
        .difference(s)
        .iter()
        .all(|v| g.neighbors(v).is_subset(s))
}

pub(crate) fn secure_cover_unchecked(g: &Graph, s: VertexSet) -> bool {
    vertex_cover_unchecked(g, s)
        && g.vertices().difference(s).iter().all(|u| {
            g.neighbors(u)
                .intersection(s)
                .iter()
                .any(|v| vertex_cover_unchecked(g, s.without(v).with(u)))
        })
}

/// A vertex set evaluated against a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverSet {
    pub members: VertexSet,
    pub label: String,
    pub is_vc: bool,
    pub is_secure: bool,
    pub is_minimal_secure: bool,
}

impl CoverSet {
    pub fn evaluate(g: &Graph, members: VertexSet) -> Result<Self> {
        g.check_set(members)?;
        let is_vc = vertex_cover_unchecked(g, members);
        let is_secure = is_vc && secure_cover_unchecked(g, members);
        // Supersets of secure covers are secure, so single-vertex removals
        // decide minimality.
        let is_minimal_secure = is_secure
            && members
                .iter()
                .all(|v| !secure_cover_unchecked(g, members.without(v)));
        Ok(CoverSet {
            members,
            label: members.label(),
            is_vc,
            is_secure,
            is_minimal_secure,
        })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Calls `visit` on every `k`-subset of `{0..n}` in lexicographic order of
/// the ascending member lists. Stops early when `visit` returns `false`.
pub(crate) fn for_each_k_subset(n: usize, k: usize, mut visit: impl FnMut(VertexSet) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !visit(idx.iter().copied().collect()) {
            return;
        }
        // Rightmost position that can still advance.
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All subsets satisfying `pred`, ordered by size then lexicographically.
/// With `minimal_only`, only inclusion-minimal ones are kept.
pub(crate) fn enumerate_sets<P>(
    g: &Graph,
    cap: usize,
    minimal_only: bool,
    pred: P,
) -> Result<Vec<VertexSet>>
where
    P: Fn(VertexSet) -> bool,
{
    let n = g.n();
    if n > cap {
        return Err(Error::EnumerationCap { n, cap });
    }
    let mut found: Vec<VertexSet> = Vec::new();
    for k in 0..=n {
        let level_start = found.len();
        for_each_k_subset(n, k, |s| {
            // A set containing an already found one cannot be minimal.
            let dominated = minimal_only && found[..level_start].iter().any(|m| m.is_subset(s));
            if !dominated && pred(s) {
                found.push(s);
            }
            true
        });
    }
    Ok(found)
}

pub fn enumerate_secure_covers(g: &Graph, minimal_only: bool) -> Result<Vec<CoverSet>> {
    enumerate_secure_covers_with_cap(g, minimal_only, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_secure_covers_with_cap(
    g: &Graph,
    minimal_only: bool,
    cap: usize,
) -> Result<Vec<CoverSet>> {
    let sets = enumerate_sets(g, cap, minimal_only, |s| secure_cover_unchecked(g, s))?;
    let minimal = if minimal_only {
        sets.clone()
    } else {
        enumerate_sets(g, cap, true, |s| secure_cover_unchecked(g, s))?
    };
    Ok(sets
        .into_iter()
        .map(|s| CoverSet {
            members: s,
            label: s.label(),
            is_vc: true,
            is_secure: true,
            is_minimal_secure: minimal.contains(&s),
        })
        .collect())
}

/// Inclusion-minimal secure vertex covers as bare sets.
pub fn minimal_secure_covers(g: &Graph, cap: usize) -> Result<Vec<VertexSet>> {
    enumerate_sets(g, cap, true, |s| secure_cover_unchecked(g, s))
}

/// Inclusion-minimal vertex covers.
pub fn minimal_vertex_covers(g: &Graph, cap: usize) -> Result<Vec<VertexSet>> {
    enumerate_sets(g, cap, true, |s| vertex_cover_unchecked(g, s))
}

/// A smallest secure vertex cover, the lexicographically first among those
/// of minimum size.
pub fn minimum_secure_cover(g: &Graph) -> Result<CoverSet> {
    let n = g.n();
    if n > DEFAULT_ENUMERATION_CAP {
        return Err(Error::EnumerationCap {
            n,
            cap: DEFAULT_ENUMERATION_CAP,
        });
    }
    for k in 0..=n {
        let mut hit = None;
        for_each_k_subset(n, k, |s| {
            if secure_cover_unchecked(g, s) {
                hit = Some(s);
                false
            } else {
                true
            }
        });
        if let Some(s) = hit {
            return CoverSet::evaluate(g, s);
        }
    }
    Err(Error::NoSecureCover)
}

/// The secure vertex cover number.
pub fn alpha_s(g: &Graph) -> Result<usize> {
    minimum_secure_cover(g).map(|c| c.len())
}
