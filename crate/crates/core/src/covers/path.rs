//! Secure vertex covers of paths.
//!
//! Vertex `i` (0-based) of `P_n` is `v_{i+1}` in 1-based notation. The
//! weight of a set is `sum 2^(j-1)` over its 1-based members, which is the
//! number of pebbles a stack on `v_1` needs to reach the set.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{VertexSet, MAX_VERTICES};

/// Membership of `v_{n-4}, ..., v_n` in the canonical cover.
const TOP_BLOCK: [bool; 5] = [true, false, true, true, false];

/// The canonical minimum-weight secure cover `S_n` of `P_n`, `n >= 2`.
///
/// The last five vertices follow a fixed pattern, each earlier `v_k`
/// (`k >= 2`) copies the membership of `v_{k+5}`, and for `n >= 6` the
/// first vertex is included unless `n = 4 (mod 5)`.
pub fn path_canonical_cover(n: usize) -> Result<VertexSet> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "canonical path cover needs n >= 2, got {n}"
        )));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    // member[j] for 1-based j.
    let mut member = vec![false; n + 1];
    for j in (1..=n).rev() {
        member[j] = if j + 4 >= n {
            TOP_BLOCK[j + 4 - n]
        } else if j >= 2 {
            member[j + 5]
        } else {
            n % 5 != 4
        };
    }
    Ok((1..=n).filter(|&j| member[j]).map(|j| j - 1).collect())
}

pub fn weight(s: VertexSet) -> BigUint {
    s.iter()
        .fold(BigUint::zero(), |acc, v| acc + (BigUint::one() << v))
}

/// `S'`: vertex `i` is in the result iff `i + 1` is in `s`. Vertex 0 drops out.
pub fn shift(s: VertexSet) -> VertexSet {
    VertexSet::from_bits(s.bits() >> 1)
}

/// `S^-`: the mirror image of `s` inside `P_n`.
pub fn reverse(s: VertexSet, n: usize) -> VertexSet {
    s.iter().filter(|&v| v < n).map(|v| n - 1 - v).collect()
}
