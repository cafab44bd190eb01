use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Vertex, MAX_VERTICES};

/// A set of vertices stored as a 64-bit mask.
///
/// Serializes as a sorted list of 1-based labels, so `{0, 1, 3, 4}` becomes
/// `[1, 2, 4, 5]`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(1 << v)
    }

    /// Builds a set from 1-based labels, as used in the literature (`v_1` is vertex 0).
    pub fn from_one_based<I: IntoIterator<Item = usize>>(labels: I) -> Self {
        labels.into_iter().map(|l| l - 1).collect()
    }

    pub fn contains(self, v: Vertex) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: Vertex) {
        self.0 &= !(1 << v);
    }

    pub fn with(self, v: Vertex) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: Vertex) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Largest member plus one, or zero for the empty set.
    pub fn span(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }

    /// Concatenated 1-based labels, e.g. `"1245"`. Labels above 9 are
    /// separated by commas to stay unambiguous.
    pub fn label(self) -> String {
        let labels = self.to_one_based();
        if labels.iter().all(|&l| l < 10) {
            labels.iter().map(|l| l.to_string()).collect()
        } else {
            labels
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    /// Orders by size, then lexicographically on the ascending member lists.
    pub fn cmp_size_lex(&self, other: &VertexSet) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = Vertex;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_one_based().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let labels = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = labels.iter().find(|&&l| l == 0 || l > MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!(
                "vertex label {bad} outside 1..={MAX_VERTICES}"
            )));
        }
        Ok(VertexSet::from_one_based(labels))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_based_round_trip() {
        let s = VertexSet::from_one_based([1, 2, 4, 5]);
        assert_eq!(s.to_vec(), vec![0, 1, 3, 4]);
        assert_eq!(s.label(), "1245");
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "[1,2,4,5]");
        let back: VertexSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<VertexSet>("[0]").is_err());
    }

    #[test]
    fn size_lex_order_matches_label_order() {
        let mut sets: Vec<VertexSet> = [
            "2356", "1245", "1346", "1356", "1246", "2345", "1345", "2346",
        ]
        .iter()
        .map(|s| VertexSet::from_one_based(s.chars().map(|c| c.to_digit(10).unwrap() as usize)))
        .collect();
        sets.sort_by(VertexSet::cmp_size_lex);
        let labels: Vec<String> = sets.iter().map(|s| s.label()).collect();
        assert_eq!(
            labels,
            ["1245", "1246", "1345", "1346", "1356", "2345", "2346", "2356"]
        );
    }

    #[test]
    fn full_and_span() {
        assert_eq!(VertexSet::full(0), VertexSet::EMPTY);
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::from_one_based([3]).span(), 3);
        assert_eq!(VertexSet::EMPTY.span(), 0);
        assert_eq!(VertexSet::from_one_based([10, 11]).label(), "10,11");
    }
}
