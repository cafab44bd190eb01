use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::generators::*;
use super::Graph;

/// A named graph family together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    Star {
        leaves: usize,
    },
    CompleteMultipartite {
        parts: Vec<usize>,
    },
    Friendship {
        n: usize,
    },
    Wheel {
        rim: usize,
    },
    Join {
        left: Box<FamilySpec>,
        right: Box<FamilySpec>,
    },
    Union {
        left: Box<FamilySpec>,
        right: Box<FamilySpec>,
    },
}

impl FamilySpec {
    pub fn join(left: FamilySpec, right: FamilySpec) -> Self {
        FamilySpec::Join {
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn union(left: FamilySpec, right: FamilySpec) -> Self {
        FamilySpec::Union {
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    /// Checks the family's parameter constraints without building the graph.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        match self {
            FamilySpec::Path { n } | FamilySpec::Complete { n } if *n == 0 => {
                bad(format!("{self} needs at least one vertex"))
            }
            FamilySpec::Cycle { n } if *n < 3 => bad(format!("cycle length {n} < 3")),
            FamilySpec::Star { leaves: 0 } => bad("star needs a leaf".into()),
            FamilySpec::Friendship { n: 0 } => bad("friendship graph needs a triangle".into()),
            FamilySpec::Wheel { rim } if *rim < 3 => bad(format!("wheel rim {rim} < 3")),
            FamilySpec::CompleteMultipartite { parts } => {
                if parts.is_empty() || parts.contains(&0) {
                    bad(format!("invalid part sizes {parts:?}"))
                } else if parts.windows(2).any(|w| w[0] < w[1]) {
                    bad(format!("part sizes must be non-increasing: {parts:?}"))
                } else {
                    Ok(())
                }
            }
            FamilySpec::Join { left, right } | FamilySpec::Union { left, right } => {
                left.validate()?;
                right.validate()
            }
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        match self {
            FamilySpec::Path { n } => make_path(*n),
            FamilySpec::Cycle { n } => make_cycle(*n),
            FamilySpec::Complete { n } => make_complete(*n),
            FamilySpec::Star { leaves } => make_star(*leaves),
            FamilySpec::CompleteMultipartite { parts } => make_complete_multipartite(parts),
            FamilySpec::Friendship { n } => make_friendship(*n),
            FamilySpec::Wheel { rim } => make_wheel(*rim),
            FamilySpec::Join { left, right } => join(&left.build()?, &right.build()?),
            FamilySpec::Union { left, right } => disjoint_union(&left.build()?, &right.build()?),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path { n } => write!(f, "P_{n}"),
            FamilySpec::Cycle { n } => write!(f, "C_{n}"),
            FamilySpec::Complete { n } => write!(f, "K_{n}"),
            FamilySpec::Star { leaves } => write!(f, "K_{{1,{leaves}}}"),
            FamilySpec::CompleteMultipartite { parts } => {
                let p: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "K_{{{}}}", p.join(","))
            }
            FamilySpec::Friendship { n } => write!(f, "F_{n}"),
            FamilySpec::Wheel { rim } => write!(f, "W_{rim}"),
            FamilySpec::Join { left, right } => write!(f, "({left} + {right})"),
            FamilySpec::Union { left, right } => write!(f, "({left} u {right})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_and_names() {
        let w = FamilySpec::join(FamilySpec::Complete { n: 1 }, FamilySpec::Cycle { n: 5 });
        assert_eq!(w.build().unwrap(), make_wheel(5).unwrap());
        assert_eq!(w.to_string(), "(K_1 + C_5)");
        let kp = FamilySpec::CompleteMultipartite {
            parts: vec![2, 2, 1],
        };
        assert_eq!(kp.to_string(), "K_{2,2,1}");
        assert_eq!(kp.build().unwrap().n(), 5);
    }

    #[test]
    fn rejects_bad_parameters() {
        for spec in [
            FamilySpec::Path { n: 0 },
            FamilySpec::Cycle { n: 2 },
            FamilySpec::Wheel { rim: 2 },
            FamilySpec::Friendship { n: 0 },
            FamilySpec::CompleteMultipartite { parts: vec![1, 2] },
            FamilySpec::CompleteMultipartite { parts: vec![] },
            FamilySpec::join(FamilySpec::Complete { n: 0 }, FamilySpec::Complete { n: 1 }),
        ] {
            assert!(spec.build().is_err(), "{spec:?}");
        }
    }

    #[test]
    fn json_shape() {
        let s = FamilySpec::Wheel { rim: 5 };
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"family":"wheel","rim":5}"#
        );
    }
}
