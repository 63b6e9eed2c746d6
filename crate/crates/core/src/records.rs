//! JSON records for partitions, ideals, vectors, words, and verdicts.
//!
//! Every record is one JSON object carrying `schema_version` and a `kind`
//! tag; the remaining fields depend on the kind:
//!
//! ```text
//! {"schema_version":1,"kind":"nc-partition","n":3,"blocks":[[1,4],[2,3]]}
//! {"schema_version":1,"kind":"ideal","n":2,"roots":[[1,2],[2,3],[1,3]]}
//! {"schema_version":1,"kind":"ideal-b","n":2,"roots":[{"kind":"e","i":2}]}
//! {"schema_version":1,"kind":"vector","entries":[1,3,2]}
//! ```
//!
//! Blocks of an `nc-partition` are cycles, listed in cycle order. For the
//! linear Coxeter element every cycle is increasing, so blocks and cycles
//! coincide.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::general::CoxeterElement;
use crate::noncrossing::NoncrossingPartition;
use crate::nonnesting::{OrderIdeal, Root};
use crate::perm::{Permutation, SWord};
use crate::type_b::{BIdeal, RootB, SignedPermutation};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonRecord {
    pub schema_version: u32,
    #[serde(flatten)]
    pub payload: Payload,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    NcPartition {
        n: usize,
        blocks: Vec<Vec<usize>>,
    },
    Ideal {
        n: usize,
        roots: Vec<[usize; 2]>,
    },
    IdealB {
        n: usize,
        roots: Vec<RootBRecord>,
    },
    SignedPermutation {
        n: usize,
        images: Vec<i32>,
    },
    Vector {
        entries: Vec<usize>,
    },
    Word {
        n: usize,
        letters: Vec<usize>,
    },
    CoxeterElement {
        n: usize,
        word: Vec<usize>,
        cycle: Vec<usize>,
    },
    Verdict(Verdict),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootBRecord {
    pub kind: String,
    pub i: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
}

/// Outcome of a verification suite.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub check: String,
    pub n: usize,
    pub passed: bool,
    /// What was checked and what was found, including expected negatives.
    pub findings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl From<Payload> for JsonRecord {
    fn from(payload: Payload) -> Self {
        JsonRecord {
            schema_version: SCHEMA_VERSION,
            payload,
        }
    }
}

impl JsonRecord {
    pub fn parse(s: &str) -> Result<Self> {
        let rec: JsonRecord = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if rec.schema_version != SCHEMA_VERSION {
            return Err(Error::Parse(format!(
                "unsupported schema_version {} (expected {SCHEMA_VERSION})",
                rec.schema_version
            )));
        }
        Ok(rec)
    }

    /// Single-line JSON.
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    pub fn kind(&self) -> &'static str {
        match self.payload {
            Payload::NcPartition { .. } => "nc-partition",
            Payload::Ideal { .. } => "ideal",
            Payload::IdealB { .. } => "ideal-b",
            Payload::SignedPermutation { .. } => "signed-permutation",
            Payload::Vector { .. } => "vector",
            Payload::Word { .. } => "word",
            Payload::CoxeterElement { .. } => "coxeter-element",
            Payload::Verdict(_) => "verdict",
        }
    }

    fn wrong_kind(&self, want: &str) -> Error {
        Error::Parse(format!("expected a {want} record, got {}", self.kind()))
    }

    pub fn nc(x: &NoncrossingPartition) -> Self {
        Payload::NcPartition {
            n: x.rank(),
            blocks: x.to_blocks(),
        }
        .into()
    }

    /// A permutation written by its cycles.
    pub fn cycles_of(w: &Permutation) -> Self {
        Payload::NcPartition {
            n: w.rank(),
            blocks: w.cycles(),
        }
        .into()
    }

    pub fn ideal(p: &OrderIdeal) -> Self {
        Payload::Ideal {
            n: p.rank(),
            roots: p.roots().iter().map(|r| [r.i, r.j]).collect(),
        }
        .into()
    }

    pub fn ideal_b(p: &BIdeal) -> Self {
        let roots = p
            .roots()
            .iter()
            .map(|&r| match r {
                RootB::Minus(i, j) | RootB::Plus(i, j) => RootBRecord {
                    kind: r.kind_name().to_string(),
                    i,
                    j: Some(j),
                },
                RootB::Short(i) => RootBRecord {
                    kind: "e".into(),
                    i,
                    j: None,
                },
            })
            .collect();
        Payload::IdealB { n: p.rank(), roots }.into()
    }

    pub fn signed(w: &SignedPermutation) -> Self {
        Payload::SignedPermutation {
            n: w.rank(),
            images: w.images().to_vec(),
        }
        .into()
    }

    pub fn vector(entries: &[usize]) -> Self {
        Payload::Vector {
            entries: entries.to_vec(),
        }
        .into()
    }

    pub fn word(n: usize, w: &SWord) -> Self {
        Payload::Word {
            n,
            letters: w.letters().to_vec(),
        }
        .into()
    }

    pub fn coxeter(c: &CoxeterElement) -> Self {
        Payload::CoxeterElement {
            n: c.rank(),
            word: c.word().letters().to_vec(),
            cycle: c.cycle(),
        }
        .into()
    }

    pub fn verdict(v: Verdict) -> Self {
        Payload::Verdict(v).into()
    }

    /// The permutation whose cycles are the record's blocks.
    pub fn to_permutation(&self) -> Result<Permutation> {
        match &self.payload {
            Payload::NcPartition { n, blocks } => Permutation::from_cycles(*n, blocks),
            _ => Err(self.wrong_kind("nc-partition")),
        }
    }

    pub fn to_nc(&self) -> Result<NoncrossingPartition> {
        match &self.payload {
            Payload::NcPartition { n, blocks } => NoncrossingPartition::from_blocks(*n, blocks),
            _ => Err(self.wrong_kind("nc-partition")),
        }
    }

    pub fn to_ideal(&self) -> Result<OrderIdeal> {
        match &self.payload {
            Payload::Ideal { n, roots } => {
                let roots = roots
                    .iter()
                    .map(|&[i, j]| Root::new(*n, i, j))
                    .collect::<Result<Vec<_>>>()?;
                OrderIdeal::new(*n, roots)
            }
            _ => Err(self.wrong_kind("ideal")),
        }
    }

    pub fn to_ideal_b(&self) -> Result<BIdeal> {
        match &self.payload {
            Payload::IdealB { n, roots } => {
                let n = *n;
                let roots = roots
                    .iter()
                    .map(|r| match (r.kind.as_str(), r.j) {
                        ("e-e", Some(j)) => RootB::new_minus(n, r.i, j),
                        ("e+e", Some(j)) => RootB::new_plus(n, r.i, j),
                        ("e", None) => RootB::new_short(n, r.i),
                        _ => Err(Error::Parse(format!("bad type-B root {r:?}"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                BIdeal::new(n, roots)
            }
            _ => Err(self.wrong_kind("ideal-b")),
        }
    }

    pub fn to_signed(&self) -> Result<SignedPermutation> {
        match &self.payload {
            Payload::SignedPermutation { images, .. } => {
                SignedPermutation::from_images(images.clone())
            }
            _ => Err(self.wrong_kind("signed-permutation")),
        }
    }

    pub fn to_vector(&self) -> Result<Vec<usize>> {
        match &self.payload {
            Payload::Vector { entries } => Ok(entries.clone()),
            _ => Err(self.wrong_kind("vector")),
        }
    }
}

/// Parses `e1-e3`, `e1+e3`, or `e2` for rank `n`.
pub fn parse_root_b(n: usize, s: &str) -> Result<RootB> {
    let bad = || Error::Parse(format!("cannot parse type-B root {s:?}"));
    let body = s.trim().strip_prefix('e').ok_or_else(bad)?;
    let index = |t: &str| {
        t.trim_start_matches('e')
            .parse::<usize>()
            .map_err(|_| bad())
    };
    if let Some((a, b)) = body.split_once('-') {
        RootB::new_minus(n, index(a)?, index(b)?)
    } else if let Some((a, b)) = body.split_once('+') {
        RootB::new_plus(n, index(a)?, index(b)?)
    } else {
        RootB::new_short(n, index(body)?)
    }
}

/// Parses `e1-e3` or `1,3` for rank `n`.
pub fn parse_root(n: usize, s: &str) -> Result<Root> {
    let bad = || Error::Parse(format!("cannot parse root {s:?}"));
    let s = s.trim();
    let (a, b) = s
        .strip_prefix('e')
        .and_then(|t| t.split_once('-'))
        .or_else(|| s.split_once(','))
        .ok_or_else(bad)?;
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b
        .trim()
        .trim_start_matches('e')
        .parse()
        .map_err(|_| bad())?;
    Root::new(n, a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn module_doc_samples_parse() {
        let nc = JsonRecord::parse(
            r#"{"schema_version":1,"kind":"nc-partition","n":3,"blocks":[[1,4],[2,3]]}"#,
        )
        .unwrap();
        assert_eq!(
            nc.to_nc().unwrap().to_blocks(),
            vec![vec![2, 3], vec![1, 4]]
        );
        let p = JsonRecord::parse(
            r#"{"schema_version":1,"kind":"ideal","n":2,"roots":[[1,2],[2,3],[1,3]]}"#,
        )
        .unwrap();
        assert_eq!(p.to_ideal().unwrap(), OrderIdeal::full(2));
        let b = JsonRecord::parse(
            r#"{"schema_version":1,"kind":"ideal-b","n":2,"roots":[{"kind":"e","i":2}]}"#,
        )
        .unwrap();
        assert_eq!(b.to_ideal_b().unwrap().roots(), &[RootB::Short(2)]);
        assert!(JsonRecord::parse(r#"{"schema_version":2,"kind":"vector","entries":[]}"#).is_err());
    }

    #[test]
    fn roots_parse() {
        assert_eq!(parse_root(3, "e1-e3").unwrap(), Root { i: 1, j: 3 });
        assert_eq!(parse_root(3, "2,4").unwrap(), Root { i: 2, j: 4 });
        assert!(parse_root(3, "e1-e5").is_err());
        assert_eq!(parse_root_b(3, "e1+e3").unwrap(), RootB::Plus(1, 3));
        assert_eq!(parse_root_b(3, "e2").unwrap(), RootB::Short(2));
        assert_eq!(parse_root_b(3, "e1-e2").unwrap(), RootB::Minus(1, 2));
    }
}
