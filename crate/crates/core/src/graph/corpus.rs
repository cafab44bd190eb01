//! Exhaustive corpora of small graphs, one representative per isomorphism class.
//!
//! A graph on `n` vertices is encoded as a bitmask over the `n(n-1)/2`
//! vertex pairs; the representative of a class is its numerically smallest
//! mask under all relabelings. Brute force over `n!` permutations, so this
//! is meant for `n <= 7`.

use crate::error::{Error, Result};

use super::Graph;

const MAX_CORPUS_N: usize = 7;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Every graph on `n` vertices up to isomorphism, connected or not, in
/// ascending order of canonical mask.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_CORPUS_N {
        return Err(Error::InvalidParameter(format!(
            "graph corpus limited to {MAX_CORPUS_N} vertices, asked for {n}"
        )));
    }
    let pairs = pairs(n);
    let index_of = |u: usize, v: usize| {
        let (a, b) = (u.min(v), u.max(v));
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    // Image of each pair index under each non-identity permutation.
    let maps: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .skip(1)
        .map(|p| pairs.iter().map(|&(u, v)| index_of(p[u], p[v])).collect())
        .collect();

    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let canonical = maps.iter().all(|map| {
            let mut image = 0u64;
            let mut bits = mask;
            while bits != 0 {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                image |= 1 << map[e];
            }
            image >= mask
        });
        if canonical {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(e, _)| mask >> e & 1 == 1)
                .map(|(_, &p)| p);
            out.push(Graph::new(n, edges)?);
        }
    }
    Ok(out)
}

/// Connected graphs on `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_known_sequences() {
        // OEIS A000088 and A001349.
        let all = [1, 1, 2, 4, 11, 34];
        let connected = [0, 1, 1, 2, 6, 21];
        for n in 0..=5 {
            assert_eq!(all_graphs(n).unwrap().len(), all[n], "n={n}");
            assert_eq!(connected_graphs(n).unwrap().len(), connected[n], "n={n}");
        }
    }

    #[test]
    fn corpus_is_deterministic() {
        assert_eq!(connected_graphs(4).unwrap(), connected_graphs(4).unwrap());
    }

    #[test]
    fn rejects_large_n() {
        assert!(all_graphs(8).is_err());
    }
}
