//! Realizer census: every connected graph, up to isomorphism, whose rank
//! cardinality vector and top class match a request.
//!
//! Two routes. Up to order 9 the census is a lookup in an index built by
//! ranking every connected graph of that order once. Above that, realizers
//! are grown from the realizers of the initial segment `(x_α, ..., x_2)`:
//! a realizer `G` of `x` has `G^(2)` realizing the segment, and `G` is
//! `G^(2)` plus `x_1` new vertices, so trying every attachment of `x_1`
//! vertices to every segment realizer and filtering by the full ranking
//! finds all of them.

use super::enumerate::{canonical_key, connected_keys, graph_from_key, DEFAULT_CAP, MAX_CAP};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rank::{corner_rank, top_heaviness, TopHeaviness};
use crate::vector::RankVector;
use serde::{Serialize, Serializer};
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RFilter {
    Any,
    Top0,
    Top1,
}

impl RFilter {
    pub fn accepts(self, t: TopHeaviness, include_cliques: bool) -> bool {
        match (self, t) {
            (_, TopHeaviness::CliqueRank1) => self == RFilter::Any && include_cliques,
            (RFilter::Any, _) => true,
            (RFilter::Top0, TopHeaviness::Top0) | (RFilter::Top1, TopHeaviness::Top1) => true,
            _ => false,
        }
    }

    pub fn from_r(r: u8) -> Result<Self> {
        match r {
            0 => Ok(RFilter::Top0),
            1 => Ok(RFilter::Top1),
            _ => Err(Error::argument(format!("r must be 0 or 1, got {r}"))),
        }
    }
}

impl FromStr for RFilter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "any" => Ok(RFilter::Any),
            "0" => Ok(RFilter::Top0),
            "1" => Ok(RFilter::Top1),
            _ => Err(Error::argument(format!("r filter must be 0, 1 or any, got {s:?}"))),
        }
    }
}

impl fmt::Display for RFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RFilter::Any => "any",
            RFilter::Top0 => "0",
            RFilter::Top1 => "1",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Enumeration up to order 9, lift above.
    #[default]
    Auto,
    Enumerate,
    Lift,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusOptions {
    pub cap: usize,
    /// Count `K_n` as realizing `(n)`. Off by default: the vector results
    /// only concern graphs of rank at least 2.
    pub include_cliques: bool,
    pub method: Method,
    /// Refuse lifts expected to build more candidate graphs than this.
    pub lift_budget: u64,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            cap: DEFAULT_CAP,
            include_cliques: false,
            method: Method::Auto,
            lift_budget: 50_000_000,
        }
    }
}

impl CensusOptions {
    pub fn with_cap(cap: usize) -> Self {
        CensusOptions {
            cap,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealizationCensus {
    pub vector: RankVector,
    pub r_filter: RFilter,
    #[serde(serialize_with = "compact_graphs")]
    pub realizers: Vec<Graph>,
    /// Every connected graph of order `sum(vector)` was ranked.
    pub exhaustive: bool,
    pub method: Method,
}

fn compact_graphs<S: Serializer>(gs: &[Graph], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(gs.iter().map(Graph::to_compact))
}

impl RealizationCensus {
    pub fn count(&self) -> usize {
        self.realizers.len()
    }
}

/// Canonical keys of all connected graphs of one order, grouped by vector
/// and top class. Non-cop-win graphs are counted but not stored.
pub struct CensusIndex {
    pub n: usize,
    groups: HashMap<RankVector, [Vec<u64>; 3]>,
    pub non_cop_win: usize,
}

fn class_slot(t: TopHeaviness) -> usize {
    match t {
        TopHeaviness::Top0 => 0,
        TopHeaviness::Top1 => 1,
        TopHeaviness::CliqueRank1 => 2,
    }
}

impl CensusIndex {
    fn build(n: usize, keys: &[u64]) -> Self {
        let mut groups: HashMap<RankVector, [Vec<u64>; 3]> = HashMap::new();
        let mut non_cop_win = 0;
        for &key in keys {
            let g = graph_from_key(n, key);
            let r = corner_rank(&g);
            match (r.vector(), top_heaviness(&g, &r)) {
                (Ok(v), Ok(t)) => groups.entry(v).or_default()[class_slot(t)].push(key),
                _ => non_cop_win += 1,
            }
        }
        CensusIndex { n, groups, non_cop_win }
    }

    /// Keys in ascending order.
    pub fn keys(&self, v: &RankVector, filter: RFilter, include_cliques: bool) -> Vec<u64> {
        let Some(slots) = self.groups.get(v) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        for t in [TopHeaviness::Top0, TopHeaviness::Top1, TopHeaviness::CliqueRank1] {
            if filter.accepts(t, include_cliques) {
                out.extend_from_slice(&slots[class_slot(t)]);
            }
        }
        out.sort_unstable();
        out
    }

    /// Every `(vector, class)` present, sorted, with its size.
    pub fn classes(&self) -> Vec<(RankVector, TopHeaviness, usize)> {
        let mut out = Vec::new();
        for (v, slots) in &self.groups {
            for t in [TopHeaviness::Top0, TopHeaviness::Top1, TopHeaviness::CliqueRank1] {
                let k = slots[class_slot(t)].len();
                if k > 0 {
                    out.push((v.clone(), t, k));
                }
            }
        }
        out.sort_by(|a, b| (&a.0, class_slot(a.1)).cmp(&(&b.0, class_slot(b.1))));
        out
    }

    pub fn cop_win_count(&self) -> usize {
        self.groups.values().flat_map(|s| s.iter()).map(Vec::len).sum()
    }
}

pub fn census_index(n: usize, cap: usize) -> Result<Arc<CensusIndex>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CensusIndex>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(ix) = cache.lock().unwrap().get(&n) {
        return Ok(Arc::clone(ix));
    }
    let keys = connected_keys(n, cap)?;
    let ix = Arc::new(CensusIndex::build(n, &keys));
    cache.lock().unwrap().insert(n, Arc::clone(&ix));
    Ok(ix)
}

pub fn census(v: &RankVector, filter: RFilter, opts: &CensusOptions) -> Result<RealizationCensus> {
    let n = v.sum();
    let cap = opts.cap.min(MAX_CAP);
    if n > cap {
        return Err(Error::Resource { requested: n, cap });
    }
    let method = match opts.method {
        Method::Auto if n <= DEFAULT_CAP => Method::Enumerate,
        Method::Auto => Method::Lift,
        m => m,
    };
    let keys = match method {
        Method::Enumerate => census_index(n, cap)?.keys(v, filter, opts.include_cliques),
        _ => lift_keys(v, filter, opts)?,
    };
    Ok(RealizationCensus {
        vector: v.clone(),
        r_filter: filter,
        realizers: keys.iter().map(|&k| graph_from_key(n, k)).collect(),
        exhaustive: method == Method::Enumerate,
        method,
    })
}

/// Number of realizers, via the cheapest available route.
pub fn census_count(v: &RankVector, filter: RFilter, opts: &CensusOptions) -> Result<usize> {
    census(v, filter, opts).map(|c| c.count())
}

fn lift_keys(x: &RankVector, filter: RFilter, opts: &CensusOptions) -> Result<Vec<u64>> {
    let n = x.sum();
    if x.len() == 1 {
        // Only K_n has vector (n).
        let k = Graph::complete(n)?;
        let ok = filter.accepts(TopHeaviness::CliqueRank1, opts.include_cliques);
        return Ok(if ok { vec![canonical_key(&k)] } else { Vec::new() });
    }
    let segment = x.initial_segment(2)?;
    let m = segment.sum();
    let add = x.last() as usize;
    let bases = segment_realizers(&segment, opts)?;

    let subsets = (1u64 << m) - 1;
    let estimate = bases.len() as u64
        * multichoose(subsets, add as u64).unwrap_or(u64::MAX)
        * (1u64 << (add * (add - 1) / 2).min(63));
    if estimate > opts.lift_budget {
        return Err(Error::Budget {
            estimate,
            budget: opts.lift_budget,
        });
    }

    let mut found = BTreeSet::new();
    for base in &bases {
        let mut choice = vec![1u64; add];
        'multisets: loop {
            for internal in 0u64..1 << (add * (add - 1) / 2) {
                let g = attach(base, &choice, internal);
                if !g.is_connected() {
                    continue;
                }
                let r = corner_rank(&g);
                if r.vector().ok().as_ref() != Some(x) {
                    continue;
                }
                let t = top_heaviness(&g, &r)?;
                if filter.accepts(t, opts.include_cliques) {
                    found.insert(canonical_key(&g));
                }
            }
            // Next non-decreasing sequence of nonempty subsets.
            for i in (0..add).rev() {
                if choice[i] < subsets {
                    choice[i] += 1;
                    let v = choice[i];
                    choice[i + 1..].fill(v);
                    continue 'multisets;
                }
            }
            break;
        }
    }
    Ok(found.into_iter().collect())
}

/// All graphs with vector `segment`, any top class, cliques included.
fn segment_realizers(segment: &RankVector, opts: &CensusOptions) -> Result<Vec<Graph>> {
    let inner = CensusOptions {
        include_cliques: true,
        ..*opts
    };
    Ok(census(segment, RFilter::Any, &inner)?.realizers)
}

/// `base` plus one new vertex per entry of `choice`, joined to the base
/// vertices in that bitmask; `internal` selects edges among the new ones.
fn attach(base: &Graph, choice: &[u64], internal: u64) -> Graph {
    let m = base.n();
    let mut rows: Vec<VertexSet> = (0..m).map(|v| base.neighbors(v)).collect();
    rows.resize(m + choice.len(), VertexSet::EMPTY);
    for (i, &mask) in choice.iter().enumerate() {
        for v in VertexSet::from_bits(mask).iter() {
            rows[v].insert(m + i);
            rows[m + i].insert(v);
        }
    }
    let mut bit = 0;
    for i in 0..choice.len() {
        for j in i + 1..choice.len() {
            if internal >> bit & 1 == 1 {
                rows[m + i].insert(m + j);
                rows[m + j].insert(m + i);
            }
            bit += 1;
        }
    }
    Graph::from_rows(rows)
}

fn multichoose(n: u64, k: u64) -> Option<u64> {
    // C(n + k - 1, k)
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n + i)? / (i + 1);
    }
    Some(acc)
}
