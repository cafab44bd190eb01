//! Closed-form values for the graph families with known secure vertex cover
//! pebbling numbers, evaluated from family parameters alone.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::Serialize;

use crate::error::Result;
use crate::graph::FamilySpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    FSvcp,
    Sigma,
    AlphaS,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Quantity::FSvcp => "f_svcp",
            Quantity::Sigma => "sigma",
            Quantity::AlphaS => "alpha_s",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Exact,
    UpperBound,
}

/// Which closed form produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Complete,
    JoinBound,
    CompleteJoin,
    MultipartiteCover,
    Multipartite,
    Path,
    FriendshipCover,
    Friendship,
    Wheel,
    Star,
    FriendshipAlpha,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = serde_json::to_value(self).expect("unit variant");
        f.write_str(text.as_str().unwrap_or_default())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub family: FamilySpec,
    pub quantity: Quantity,
    pub kind: Kind,
    pub source: Source,
    #[serde(serialize_with = "serialize_big")]
    pub value: Option<BigInt>,
    pub applicable: bool,
    /// Violated hypothesis when not applicable, or a warning when it is.
    pub note: Option<String>,
}

impl FormulaResult {
    fn exact(
        family: FamilySpec,
        quantity: Quantity,
        source: Source,
        value: impl Into<BigInt>,
    ) -> Self {
        FormulaResult {
            family,
            quantity,
            kind: Kind::Exact,
            source,
            value: Some(value.into()),
            applicable: true,
            note: None,
        }
    }

    fn inapplicable(
        family: FamilySpec,
        quantity: Quantity,
        source: Source,
        reason: String,
    ) -> Self {
        FormulaResult {
            family,
            quantity,
            kind: Kind::Exact,
            source,
            value: None,
            applicable: false,
            note: Some(reason),
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// The value as a `u64` when present and in range.
    pub fn value_u64(&self) -> Option<u64> {
        self.value.as_ref().and_then(|v| u64::try_from(v).ok())
    }
}

/// Small values become JSON numbers, larger ones decimal strings.
fn serialize_big<S: serde::Serializer>(
    value: &Option<BigInt>,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    match value.as_ref().map(|v| (i64::try_from(v), v)) {
        None => ser.serialize_none(),
        Some((Ok(small), _)) => ser.serialize_i64(small),
        Some((Err(_), big)) => ser.serialize_str(&big.to_string()),
    }
}

fn linear(a: i64, b: i64, x: usize) -> BigInt {
    BigInt::from(a) * BigInt::from(x) + BigInt::from(b)
}

pub fn f_svcp_complete(n: usize) -> FormulaResult {
    let family = FamilySpec::Complete { n };
    if n < 2 {
        return FormulaResult::inapplicable(
            family,
            Quantity::FSvcp,
            Source::Complete,
            format!("needs n >= 2, got {n}"),
        );
    }
    FormulaResult::exact(family, Quantity::FSvcp, Source::Complete, linear(2, -3, n))
}

fn check_parts(parts: &[usize]) -> std::result::Result<(), String> {
    if parts.is_empty() {
        return Err("needs at least one part".into());
    }
    if parts.contains(&0) {
        return Err("part sizes must be positive".into());
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err("part sizes must be non-increasing".into());
    }
    Ok(())
}

/// `4 p_1 + 2 (p_2 + ... + p_r) - 7` for `p_1 >= 2`. All-ones parts fall back
/// to the complete graph formula.
pub fn f_svcp_multipartite(parts: &[usize]) -> FormulaResult {
    let family = FamilySpec::CompleteMultipartite {
        parts: parts.to_vec(),
    };
    if let Err(reason) = check_parts(parts) {
        return FormulaResult::inapplicable(family, Quantity::FSvcp, Source::Multipartite, reason);
    }
    if parts[0] < 2 {
        let fallback = f_svcp_complete(parts.len());
        return FormulaResult { family, ..fallback }
            .with_note("largest part is 1; the graph is complete, complete-graph formula used");
    }
    let rest: usize = parts[1..].iter().sum();
    let value = BigInt::from(4 * parts[0] + 2 * rest) - 7;
    FormulaResult::exact(family, Quantity::FSvcp, Source::Multipartite, value)
}

/// `f_svcp(K_{1,n}) = 4n - 5`, the multipartite formula at parts `[n, 1]`.
pub fn f_svcp_star(leaves: usize) -> FormulaResult {
    let family = FamilySpec::Star { leaves };
    if leaves < 2 {
        return FormulaResult::inapplicable(
            family,
            Quantity::FSvcp,
            Source::Star,
            format!("needs at least 2 leaves, got {leaves}"),
        );
    }
    FormulaResult::exact(family, Quantity::FSvcp, Source::Star, linear(4, -5, leaves))
}

/// The claimed covering cover pebbling number of a star, equal to its
/// secure vertex cover pebbling number.
pub fn sigma_star_claim(leaves: usize) -> FormulaResult {
    let f = f_svcp_star(leaves);
    FormulaResult {
        quantity: Quantity::Sigma,
        ..f
    }
}

const WN_BASE: [u32; 5] = [0, 1, 1, 3, 6];

/// `w_n` from the closed form `2^l * 13 q_s + w_l`, `q_s = (2^(5s) - 1) / 31`.
pub fn wn(n: usize) -> BigUint {
    if n < 5 {
        return WN_BASE[n].into();
    }
    let (s, l) = (n / 5, n % 5);
    let q = ((BigUint::one() << (5 * s)) - 1u32) / 31u32;
    ((q * 13u32) << l) + WN_BASE[l]
}

/// `w_n` from `w_n = w_(n-5) + 13 * 2^l * 2^(5(s-1))`.
pub fn wn_by_recurrence(n: usize) -> BigUint {
    let mut value = BigUint::from(WN_BASE[n % 5]);
    let l = n % 5;
    for s in 1..=n / 5 {
        value += BigUint::from(13u32) << (l + 5 * (s - 1));
    }
    value
}

pub fn f_svcp_path(n: usize) -> FormulaResult {
    let family = FamilySpec::Path { n };
    if n == 0 {
        return FormulaResult::inapplicable(
            family,
            Quantity::FSvcp,
            Source::Path,
            "needs n >= 1".into(),
        );
    }
    FormulaResult::exact(family, Quantity::FSvcp, Source::Path, BigInt::from(wn(n)))
}

/// Whether the covering cover pebbling number of `P_n` is claimed to equal
/// its secure vertex cover pebbling number (otherwise it is claimed smaller).
pub fn path_sigma_equals_f_svcp_claim(n: usize) -> bool {
    n <= 2
}

pub fn f_svcp_friendship(n: usize) -> FormulaResult {
    let family = FamilySpec::Friendship { n };
    if n == 0 {
        return FormulaResult::inapplicable(
            family,
            Quantity::FSvcp,
            Source::Friendship,
            "needs n >= 1".into(),
        );
    }
    FormulaResult::exact(
        family,
        Quantity::FSvcp,
        Source::Friendship,
        linear(4, -1, n),
    )
}

/// Both sides of the claimed identity between the vertex cover number
/// `n + 1` and the pebbling number `4(n - 1) + 3` of `F_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FriendshipSides {
    pub n: usize,
    pub alpha_s: FormulaResult,
    pub f_svcp: FormulaResult,
}

pub fn friendship_alpha_claim(n: usize) -> FriendshipSides {
    let mut alpha_s = alpha_s_formula(&FamilySpec::Friendship { n });
    alpha_s.source = Source::FriendshipAlpha;
    FriendshipSides {
        n,
        alpha_s,
        f_svcp: f_svcp_friendship(n),
    }
}

/// Case formula for `W_(5s+l)`.
pub fn f_svcp_wheel(rim: usize) -> FormulaResult {
    let family = FamilySpec::Wheel { rim };
    if rim < 3 {
        return FormulaResult::inapplicable(
            family,
            Quantity::FSvcp,
            Source::Wheel,
            format!("needs rim >= 3, got {rim}"),
        );
    }
    let (s, l) = (rim / 5, rim % 5);
    let offset = [-1, 3, 7, 7, 11][l];
    let result = FormulaResult::exact(
        family,
        Quantity::FSvcp,
        Source::Wheel,
        linear(12, offset, s),
    );
    if rim == 3 {
        result.with_note("conflicts with the complete-graph formula at rim 3 (W_3 = K_4); brute force adjudicates")
    } else {
        result
    }
}

/// `f_svcp(G + G') <= gamma(G + G') - 4`.
pub fn f_svcp_join_bound(left: &FamilySpec, right: &FamilySpec, gamma_join: u64) -> FormulaResult {
    let family = FamilySpec::join(left.clone(), right.clone());
    FormulaResult {
        kind: Kind::UpperBound,
        ..FormulaResult::exact(
            family,
            Quantity::FSvcp,
            Source::JoinBound,
            BigInt::from(gamma_join) - 4,
        )
    }
}

/// `f_svcp(K_m + K_n) = f_svcp(K_m) + f_svcp(K_n) + 3 = 2(m + n) - 3`.
pub fn f_svcp_join_complete(m: usize, n: usize) -> FormulaResult {
    let family = FamilySpec::join(FamilySpec::Complete { n: m }, FamilySpec::Complete { n });
    if m == 0 || n == 0 {
        return FormulaResult::inapplicable(
            family,
            Quantity::FSvcp,
            Source::CompleteJoin,
            "needs m, n >= 1".into(),
        );
    }
    FormulaResult::exact(
        family,
        Quantity::FSvcp,
        Source::CompleteJoin,
        linear(2, -3, m + n),
    )
}

/// Secure vertex cover numbers of complete multipartite (`n - 1`) and
/// friendship (`n + 1`) graphs.
pub fn alpha_s_formula(spec: &FamilySpec) -> FormulaResult {
    let family = spec.clone();
    let multipartite = |total: usize, r: usize| {
        if r < 2 {
            FormulaResult::inapplicable(
                family.clone(),
                Quantity::AlphaS,
                Source::MultipartiteCover,
                "needs at least two parts".into(),
            )
        } else {
            FormulaResult::exact(
                family.clone(),
                Quantity::AlphaS,
                Source::MultipartiteCover,
                BigInt::from(total) - 1,
            )
        }
    };
    match spec {
        FamilySpec::CompleteMultipartite { parts } => match check_parts(parts) {
            Ok(()) => multipartite(parts.iter().sum(), parts.len()),
            Err(reason) => FormulaResult::inapplicable(
                family,
                Quantity::AlphaS,
                Source::MultipartiteCover,
                reason,
            ),
        },
        FamilySpec::Complete { n } => multipartite(*n, *n),
        FamilySpec::Star { leaves } => multipartite(leaves + 1, if *leaves > 0 { 2 } else { 1 }),
        FamilySpec::Friendship { n } if *n >= 1 => FormulaResult::exact(
            family,
            Quantity::AlphaS,
            Source::FriendshipCover,
            BigInt::from(n + 1),
        ),
        _ => FormulaResult::inapplicable(
            family,
            Quantity::AlphaS,
            Source::MultipartiteCover,
            format!("no closed form for {spec}"),
        ),
    }
}

/// The secure vertex cover pebbling formula for a family, when one exists.
pub fn f_svcp_formula(spec: &FamilySpec) -> FormulaResult {
    match spec {
        FamilySpec::Path { n } => f_svcp_path(*n),
        FamilySpec::Complete { n } => f_svcp_complete(*n),
        FamilySpec::Star { leaves } => f_svcp_star(*leaves),
        FamilySpec::CompleteMultipartite { parts } => f_svcp_multipartite(parts),
        FamilySpec::Friendship { n } => f_svcp_friendship(*n),
        FamilySpec::Wheel { rim } => f_svcp_wheel(*rim),
        FamilySpec::Join { left, right } => match (left.as_ref(), right.as_ref()) {
            (FamilySpec::Complete { n: m }, FamilySpec::Complete { n }) => {
                f_svcp_join_complete(*m, *n)
            }
            _ => FormulaResult::inapplicable(
                spec.clone(),
                Quantity::FSvcp,
                Source::CompleteJoin,
                "only joins of two complete graphs have a closed form".into(),
            ),
        },
        _ => FormulaResult::inapplicable(
            spec.clone(),
            Quantity::FSvcp,
            Source::Complete,
            format!("no closed form for {spec}"),
        ),
    }
}

/// One row of a family table: a formula value beside an optional oracle value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyRow {
    pub family: String,
    pub parameters: FamilySpec,
    pub quantity: Quantity,
    pub source: Source,
    pub kind: Kind,
    pub value: Option<String>,
    pub oracle: Option<u64>,
    pub matches: Option<bool>,
    pub note: Option<String>,
}

impl FamilyRow {
    pub fn new(result: &FormulaResult, oracle: Option<u64>) -> Self {
        let matches = match (result.value_u64(), oracle, result.kind) {
            (Some(v), Some(o), Kind::Exact) => Some(v == o),
            (_, Some(o), Kind::UpperBound) => result.value.as_ref().map(|v| BigInt::from(o) <= *v),
            _ => None,
        };
        FamilyRow {
            family: result.family.to_string(),
            parameters: result.family.clone(),
            quantity: result.quantity,
            source: result.source,
            kind: result.kind,
            value: result.value.as_ref().map(BigInt::to_string),
            oracle,
            matches,
            note: result.note.clone(),
        }
    }
}

pub const CSV_HEADER: [&str; 8] = [
    "family", "quantity", "source", "kind", "value", "oracle", "match", "note",
];

/// Renders rows as CSV with a header line.
pub fn rows_to_csv(rows: &[FamilyRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for r in rows {
        let opt = |o: Option<String>| o.unwrap_or_default();
        w.write_record([
            r.family.clone(),
            r.quantity.to_string(),
            r.source.to_string(),
            match r.kind {
                Kind::Exact => "exact".to_string(),
                Kind::UpperBound => "upper_bound".to_string(),
            },
            opt(r.value.clone()),
            opt(r.oracle.map(|o| o.to_string())),
            opt(r.matches.map(|m| m.to_string())),
            opt(r.note.clone()),
        ])?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| std::io::Error::other(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
