//! r-minimality: the only r-realizable vector `y <= x` of length at least 2
//! is `x` itself.

use super::census::{census, CensusOptions, RFilter};
use super::enumerate::MAX_CAP;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vector::RankVector;
use serde::{Serialize, Serializer};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityVerdict {
    pub vector: RankVector,
    pub r: u8,
    /// No tested proper predecessor is r-realizable.
    pub minimal: bool,
    /// First r-realizable proper predecessor found, with a realizer.
    #[serde(serialize_with = "witness_compact")]
    pub witness: Option<(RankVector, Graph)>,
    /// Proper predecessors with sum above the cap, left untested.
    pub residual: Vec<RankVector>,
    /// Number of proper predecessors that were checked.
    pub tested: usize,
    /// Whether `vector` itself is r-realizable; `None` above the cap.
    pub self_realizable: Option<bool>,
    pub sum_cap_used: usize,
}

fn witness_compact<S: Serializer>(
    w: &Option<(RankVector, Graph)>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match w {
        Some((v, g)) => s.collect_map([("vector", v.to_string()), ("graph", g.to_compact())]),
        None => s.serialize_none(),
    }
}

impl MinimalityVerdict {
    /// Minimal, and nothing was left untested.
    pub fn is_conclusive(&self) -> bool {
        !self.minimal || self.residual.is_empty()
    }
}

/// Proper predecessors of length at least 2, smallest sum first, then by
/// length and entries.
pub fn proper_predecessors(x: &RankVector) -> Vec<RankVector> {
    let mut out: Vec<RankVector> = x.predecessors(2).into_iter().filter(|y| y != x).collect();
    out.sort_by(|a, b| (a.sum(), a).cmp(&(b.sum(), b)));
    out
}

pub fn check_minimal(x: &RankVector, r: u8, sum_cap: usize) -> Result<MinimalityVerdict> {
    let filter = RFilter::from_r(r)?;
    if sum_cap > MAX_CAP {
        return Err(Error::Resource {
            requested: sum_cap,
            cap: MAX_CAP,
        });
    }
    let opts = CensusOptions::with_cap(sum_cap);
    let mut verdict = MinimalityVerdict {
        vector: x.clone(),
        r,
        minimal: true,
        witness: None,
        residual: Vec::new(),
        tested: 0,
        self_realizable: None,
        sum_cap_used: sum_cap,
    };
    for y in proper_predecessors(x) {
        if y.sum() > sum_cap {
            verdict.residual.push(y);
            continue;
        }
        if verdict.witness.is_some() {
            continue;
        }
        verdict.tested += 1;
        let c = census(&y, filter, &opts)?;
        if let Some(g) = c.realizers.into_iter().next() {
            verdict.minimal = false;
            verdict.witness = Some((y, g));
        }
    }
    if x.sum() <= sum_cap {
        verdict.self_realizable = Some(census(x, filter, &opts)?.count() > 0);
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rv;

    #[test]
    fn small_verdicts() {
        let v = check_minimal(&rv![1, 2], 1, 9).unwrap();
        assert!(v.minimal && v.residual.is_empty());
        assert_eq!(v.self_realizable, Some(true));
        let v = check_minimal(&rv![2, 2], 0, 9).unwrap();
        assert!(v.minimal);
        let v = check_minimal(&rv![2, 2, 2, 1, 1, 1], 1, 9).unwrap();
        assert!(!v.minimal);
        assert_eq!(v.witness.unwrap().0, rv![2, 2, 2, 1]);
    }

    #[test]
    fn witness_order_prefers_small_sums() {
        let order = proper_predecessors(&rv![2, 7, 2, 1]);
        let a = order.iter().position(|y| *y == rv![2, 2, 2, 1]).unwrap();
        let b = order.iter().position(|y| *y == rv![1, 4, 2, 1]).unwrap();
        assert!(a < b);
        assert!(check_minimal(&rv![1, 2], 2, 9).is_err());
    }
}
