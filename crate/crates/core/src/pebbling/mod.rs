//! Pebble distributions, pebbling moves and exact reachability.

mod engine;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

pub use engine::{can_reach_any, can_reach_set, Engine, Reach, TargetFamily};

/// Pebble counts indexed by vertex.
///
/// Serializes as a plain JSON array of counts.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<u32>", into = "Vec<u32>")]
pub struct Distribution {
    counts: Vec<u32>,
    total: u64,
}

impl Distribution {
    pub fn new(counts: Vec<u32>) -> Self {
        let total = counts.iter().map(|&c| u64::from(c)).sum();
        Distribution { counts, total }
    }

    pub fn zeros(n: usize) -> Self {
        Distribution::new(vec![0; n])
    }

    /// `pebbles` pebbles on vertex `v`, nothing elsewhere.
    pub fn stacked(n: usize, v: Vertex, pebbles: u32) -> Self {
        let mut counts = vec![0; n];
        counts[v] = pebbles;
        Distribution::new(counts)
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn get(&self, v: Vertex) -> u32 {
        self.counts[v]
    }

    /// Vertices holding at least one pebble.
    pub fn support(&self) -> VertexSet {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn add(&mut self, v: Vertex, pebbles: u32) {
        self.counts[v] += pebbles;
        self.total += u64::from(pebbles);
    }

    /// True when every count is at least the corresponding count of `other`.
    pub fn dominates(&self, other: &Distribution) -> bool {
        self.counts.len() == other.counts.len()
            && self.counts.iter().zip(&other.counts).all(|(a, b)| a >= b)
    }

    pub(crate) fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.counts.len() == g.n() {
            Ok(())
        } else {
            Err(Error::DistributionLength {
                expected: g.n(),
                got: self.counts.len(),
            })
        }
    }

    /// Parses `vertex:count` pairs separated by commas (`"0:27,3:1"`), or a
    /// JSON array of `n` counts. Unlisted vertices get zero pebbles.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        if text.starts_with('[') {
            let counts: Vec<u32> = serde_json::from_str(text)?;
            if counts.len() != n {
                return Err(Error::DistributionLength {
                    expected: n,
                    got: counts.len(),
                });
            }
            return Ok(Distribution::new(counts));
        }
        let mut counts = vec![0u32; n];
        for pair in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let bad = || Error::Parse {
                line: 1,
                msg: format!("expected vertex:count, found {pair:?}"),
            };
            let (v, c) = pair.split_once(':').ok_or_else(bad)?;
            let v: Vertex = v.trim().parse().map_err(|_| bad())?;
            let c: u32 = c.trim().parse().map_err(|_| bad())?;
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            counts[v] += c;
        }
        Ok(Distribution::new(counts))
    }

    /// Inverse of [`Distribution::parse`] for the pair format; empty
    /// vertices are omitted.
    pub fn to_text(&self) -> String {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(v, c)| format!("{v}:{c}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl From<Vec<u32>> for Distribution {
    fn from(counts: Vec<u32>) -> Self {
        Distribution::new(counts)
    }
}

impl From<Distribution> for Vec<u32> {
    fn from(d: Distribution) -> Self {
        d.counts
    }
}

impl fmt::Debug for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.counts)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    pub from: Vertex,
    pub to: Vertex,
}

/// Removes two pebbles from `from` and adds one to the adjacent `to`.
pub fn apply_move(g: &Graph, d: &Distribution, from: Vertex, to: Vertex) -> Result<Distribution> {
    d.check_graph(g)?;
    g.check_vertex(from)?;
    g.check_vertex(to)?;
    if !g.is_adjacent(from, to) {
        return Err(Error::IllegalMove {
            from,
            to,
            reason: "vertices are not adjacent",
        });
    }
    if d.counts[from] < 2 {
        return Err(Error::IllegalMove {
            from,
            to,
            reason: "fewer than two pebbles on the source",
        });
    }
    let mut counts = d.counts.clone();
    counts[from] -= 2;
    counts[to] += 1;
    Ok(Distribution {
        counts,
        total: d.total - 1,
    })
}

/// A sequence of pebbling moves witnessing that a target was reached.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveCertificate {
    pub moves: Vec<Move>,
}

impl MoveCertificate {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Replays the moves from `start`, failing on the first illegal one.
    pub fn replay(&self, g: &Graph, start: &Distribution) -> Result<Distribution> {
        self.moves
            .iter()
            .try_fold(start.clone(), |d, m| apply_move(g, &d, m.from, m.to))
    }

    /// Replays the moves and checks that every target vertex ends up pebbled.
    pub fn verify(&self, g: &Graph, start: &Distribution, target: VertexSet) -> Result<bool> {
        let end = self.replay(g, start)?;
        Ok(target.is_subset(end.support()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_path};

    #[test]
    fn moves() {
        let p3 = make_path(3).unwrap();
        let d = Distribution::new(vec![4, 0, 0]);
        let after = apply_move(&p3, &d, 0, 1).unwrap();
        assert_eq!(after.counts(), &[2, 1, 0]);
        assert_eq!(after.total(), 3);

        let d = Distribution::new(vec![1, 0, 0]);
        assert!(matches!(
            apply_move(&p3, &d, 0, 1),
            Err(Error::IllegalMove { .. })
        ));
        let d = Distribution::new(vec![4, 0, 0]);
        assert!(matches!(
            apply_move(&p3, &d, 0, 2),
            Err(Error::IllegalMove { .. })
        ));

        let k3 = make_complete(3).unwrap();
        let d = Distribution::new(vec![2, 0, 0]);
        assert_eq!(apply_move(&k3, &d, 0, 2).unwrap().counts(), &[0, 0, 1]);
        assert!(apply_move(&k3, &Distribution::zeros(4), 0, 1).is_err());
    }

    #[test]
    fn parse_formats() {
        let d = Distribution::parse("0:27", 6).unwrap();
        assert_eq!(d.counts(), &[27, 0, 0, 0, 0, 0]);
        assert_eq!(d.to_text(), "0:27");
        let d = Distribution::parse(" 1:2, 3:1 ,1:1", 4).unwrap();
        assert_eq!(d.counts(), &[0, 3, 0, 1]);
        assert_eq!(Distribution::parse("", 3).unwrap().total(), 0);
        let d = Distribution::parse("[1,1,0,1,1,0]", 6).unwrap();
        assert_eq!(d.support(), VertexSet::from_one_based([1, 2, 4, 5]));
        assert!(Distribution::parse("[1,2]", 3).is_err());
        assert!(Distribution::parse("5:1", 3).is_err());
        assert!(Distribution::parse("1-2", 3).is_err());
        assert!(Distribution::parse("1:x", 3).is_err());
        assert_eq!(serde_json::to_string(&d).unwrap(), "[1,1,0,1,1,0]");
    }

    #[test]
    fn certificate_replay() {
        let p3 = make_path(3).unwrap();
        let cert = MoveCertificate {
            moves: vec![Move { from: 0, to: 1 }, Move { from: 1, to: 2 }],
        };
        let start = Distribution::new(vec![4, 1, 0]);
        assert_eq!(cert.replay(&p3, &start).unwrap().counts(), &[2, 0, 1]);
        assert!(cert
            .verify(&p3, &start, VertexSet::from_one_based([1, 3]))
            .unwrap());
        assert!(!cert
            .verify(&p3, &start, VertexSet::from_one_based([2]))
            .unwrap());
        assert!(cert.replay(&p3, &Distribution::new(vec![2, 0, 0])).is_err());
    }
}
