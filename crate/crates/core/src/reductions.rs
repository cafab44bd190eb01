//! Gadget constructions that carry vertex covers to secure vertex covers,
//! with exhaustive checks of the claimed correspondences on small graphs.

use rayon::prelude::*;
use serde::Serialize;

use crate::covers::{alpha_s, secure_cover_unchecked, vertex_cover_unchecked};
use crate::error::{Error, Result};
use crate::graph::{join, make_complete, Graph, Vertex, VertexSet, MAX_VERTICES};
use crate::solver::{compute_f_svcp, SolverConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionKind {
    CliqueLayer,
    Apex,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionInstance {
    pub kind: ReductionKind,
    pub source: Graph,
    pub graph: Graph,
    /// Index in `graph` of each source vertex.
    pub original: Vec<Vertex>,
    /// Clique copy `v'` of each source vertex (clique layer only).
    pub copies: Vec<Vertex>,
    /// The added universal vertex (apex only).
    pub apex: Option<Vertex>,
}

impl ReductionInstance {
    /// Image of a source vertex set in the constructed graph.
    pub fn lift(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|v| self.original[v]).collect()
    }

    pub fn copy_set(&self) -> VertexSet {
        self.copies.iter().copied().collect()
    }
}

/// `G*`: `G` on `0..n`, a clique on the copies `n..2n`, and the matching `v v'`.
pub fn build_clique_layer(g: &Graph) -> Result<ReductionInstance> {
    let n = g.n();
    if 2 * n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n: 2 * n,
            max: MAX_VERTICES,
        });
    }
    let clique = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u + n, v + n)));
    let matching = (0..n).map(|v| (v, v + n));
    let graph = Graph::new(
        2 * n,
        g.edges().iter().copied().chain(clique).chain(matching),
    )?;
    Ok(ReductionInstance {
        kind: ReductionKind::CliqueLayer,
        source: g.clone(),
        graph,
        original: (0..n).collect(),
        copies: (n..2 * n).collect(),
        apex: None,
    })
}

/// `K_1 + G` with the apex at index 0 and source vertex `v` at `v + 1`.
pub fn build_apex(g: &Graph) -> Result<ReductionInstance> {
    let graph = join(&make_complete(1)?, g)?;
    Ok(ReductionInstance {
        kind: ReductionKind::Apex,
        source: g.clone(),
        graph,
        original: (1..=g.n()).collect(),
        copies: Vec::new(),
        apex: Some(0),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorrespondenceViolation {
    pub subset: VertexSet,
    pub is_vertex_cover: bool,
    pub lifted_is_secure: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorrespondenceReport {
    pub n: usize,
    pub subsets_checked: u64,
    pub holds: bool,
    pub counterexamples: Vec<CorrespondenceViolation>,
}

pub const CORRESPONDENCE_MAX_VERTICES: usize = 8;

/// Checks, for every `S` of the source graph, that `S` is a vertex cover
/// exactly when `S` together with all clique copies is a secure cover of `G*`.
pub fn verify_clique_layer_correspondence(g: &Graph) -> Result<CorrespondenceReport> {
    let n = g.n();
    if n > CORRESPONDENCE_MAX_VERTICES {
        return Err(Error::EnumerationCap {
            n,
            cap: CORRESPONDENCE_MAX_VERTICES,
        });
    }
    let inst = build_clique_layer(g)?;
    let copies = inst.copy_set();
    let counterexamples: Vec<CorrespondenceViolation> = (0..1u64 << n)
        .into_par_iter()
        .filter_map(|bits| {
            let s = VertexSet::from_bits(bits);
            let is_vertex_cover = vertex_cover_unchecked(g, s);
            let lifted = inst.lift(s).union(copies);
            let lifted_is_secure = secure_cover_unchecked(&inst.graph, lifted);
            (is_vertex_cover != lifted_is_secure).then_some(CorrespondenceViolation {
                subset: s,
                is_vertex_cover,
                lifted_is_secure,
            })
        })
        .collect();
    Ok(CorrespondenceReport {
        n,
        subsets_checked: 1 << n,
        holds: counterexamples.is_empty(),
        counterexamples,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ApexProbe {
    pub k: usize,
    pub alpha_s: usize,
    pub oracle: u64,
    /// `l + 4(k - 1) + 2` for `l = 1, 2, 3`.
    pub window: Vec<i64>,
    pub in_window: bool,
    /// `3 + 4(k - 2) + 2`, when `k >= 2`.
    pub alternative: Option<i64>,
    pub matches_alternative: bool,
}

/// Computes `f_svcp(K_1 + G)` and reports where it falls relative to the
/// pebble counts claimed for a secure cover of size `k` in `G`.
pub fn probe_apex_pebble_counts(g: &Graph, k: usize, config: &SolverConfig) -> Result<ApexProbe> {
    let alpha = alpha_s(g)?;
    if alpha > k {
        return Err(Error::InvalidParameter(format!(
            "graph has no secure vertex cover of size <= {k} (minimum is {alpha})"
        )));
    }
    let inst = build_apex(g)?;
    let oracle = compute_f_svcp(&inst.graph, config)?.value;
    let k = k as i64;
    let window: Vec<i64> = (1..=3).map(|l| l + 4 * (k - 1) + 2).collect();
    let alternative = (k >= 2).then(|| 3 + 4 * (k - 2) + 2);
    let o = oracle as i64;
    Ok(ApexProbe {
        k: k as usize,
        alpha_s: alpha,
        oracle,
        in_window: window.contains(&o),
        window,
        matches_alternative: alternative == Some(o),
        alternative,
    })
}
