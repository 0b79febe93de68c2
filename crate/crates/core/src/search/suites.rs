//! Verification suites. Each suite is a list of named checks; a report prints
//! one `SUITE <name> CHECK <id> PASS|FAIL [witness=<graph>]` line per check.

use super::census::{census, census_index, CensusOptions, RFilter};
use super::construct::{add_twin, extend_tail, truncate};
use super::enumerate::{enumerate_connected, DEFAULT_CAP, MAX_CAP};
use super::minimal::check_minimal;
use crate::catalog::corpus::{load_corpus, Fixture};
use crate::catalog::named::h7;
use crate::error::{Error, Result};
use crate::game::{capture_time_by_game, max_capture_time};
use crate::graph::{canonical_form, CanonicalForm, Graph, VertexSet};
use crate::projection::{build_projections, check_path_contraction};
use crate::rank::{capture_time_by_rank, corner_rank, top_heaviness, CornerRanking, TopHeaviness};
use crate::vector::{compositions_of, RankVector};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::PathBuf;

pub const SCHEMA_VERSION: u32 = 1;

/// Suite names accepted by [`verify_suite`].
pub const SUITES: &[&str] = &[
    "table1",
    "uniqueness",
    "nonrealizable",
    "minimality",
    "structure",
    "n5-constituents",
    "fixtures",
    "oracle",
    "constructive",
    "projection",
];

/// Largest order for the per-graph sweeps (oracle, structure, projection).
pub const SWEEP_N: usize = 7;
/// Largest order for the constructive sweep over every class.
pub const CONSTRUCT_N: usize = 6;
/// Random instances for the constructive sweep.
pub const RANDOM_INSTANCES: usize = 500;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub pass: bool,
    /// Compact form of a counterexample or of the graph the check is about.
    pub witness: Option<String>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub suite: String,
    pub cap: usize,
    pub pass: bool,
    pub checks: Vec<Check>,
    /// Checks not run because they need an order above the cap.
    pub skipped: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str, cap: usize) -> Self {
        SuiteReport {
            schema_version: SCHEMA_VERSION,
            suite: suite.to_string(),
            cap,
            pass: true,
            checks: Vec::new(),
            skipped: Vec::new(),
        }
    }

    fn push(&mut self, id: impl Into<String>, pass: bool, witness: Option<&Graph>, detail: impl Into<String>) {
        self.pass &= pass;
        self.checks.push(Check {
            id: id.into(),
            pass,
            witness: witness.map(Graph::to_compact),
            detail: detail.into(),
        });
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// The line-oriented form.
    pub fn lines(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = write!(out, "SUITE {} CHECK {} {}", self.suite, c.id, if c.pass { "PASS" } else { "FAIL" });
            if let Some(w) = &c.witness {
                let _ = write!(out, " witness={w}");
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub cap: usize,
    pub corpus: Option<PathBuf>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            cap: DEFAULT_CAP,
            corpus: None,
        }
    }
}

pub fn verify_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteReport> {
    if opts.cap > MAX_CAP {
        return Err(Error::Resource {
            requested: opts.cap,
            cap: MAX_CAP,
        });
    }
    let mut rep = SuiteReport::new(name, opts.cap);
    match name {
        "table1" => table1(&mut rep, opts)?,
        "uniqueness" => uniqueness(&mut rep, opts)?,
        "nonrealizable" => nonrealizable(&mut rep, opts)?,
        "minimality" => minimality(&mut rep, opts)?,
        "structure" => structure(&mut rep, opts)?,
        "n5-constituents" => n5_constituents(&mut rep, opts)?,
        "fixtures" => fixtures(&mut rep, opts)?,
        "oracle" => oracle(&mut rep, opts)?,
        "constructive" => constructive(&mut rep)?,
        "projection" => projection(&mut rep, opts)?,
        _ => {
            return Err(Error::argument(format!(
                "unknown suite {name:?}; expected one of {}",
                SUITES.join(", ")
            )))
        }
    }
    Ok(rep)
}

fn rv(entries: &[u32]) -> RankVector {
    RankVector::new(entries.to_vec()).expect("positive entries")
}

fn opts_for(cap: usize) -> CensusOptions {
    CensusOptions::with_cap(cap)
}

fn forms(graphs: &[Graph]) -> BTreeSet<CanonicalForm> {
    graphs.iter().map(canonical_form).collect()
}

fn filter_name(f: RFilter) -> &'static str {
    match f {
        RFilter::Any => "any",
        RFilter::Top0 => "r0",
        RFilter::Top1 => "r1",
    }
}

// ---- table1 ----

/// CT-maximal classes for `n <= 9`, built from paths, cliques and census
/// classes named in the table.
fn table1_expected(n: usize, cap: usize) -> Result<(u32, BTreeSet<CanonicalForm>)> {
    let o = opts_for(cap);
    let zero = |v: &[u32]| census(&rv(v), RFilter::Top0, &o).map(|c| c.realizers);
    let mut set: BTreeSet<CanonicalForm> = BTreeSet::new();
    set.insert(canonical_form(&Graph::path(n)?));
    let capt = [0, 1, 1, 2, 2, 3, 3, 4, 5][n - 1];
    match n {
        3 => {
            set.insert(canonical_form(&Graph::complete(3)?));
        }
        5 => {
            set.extend(forms(&zero(&[2, 3])?));
            set.extend(forms(&zero(&[3, 2])?));
        }
        7 => {
            set.insert(canonical_form(&h7().graph));
            for v in [[2, 2, 3], [2, 3, 2], [3, 2, 2]] {
                set.extend(forms(&zero(&v)?));
            }
        }
        8 => set.extend(forms(&census(&rv(&[2, 2, 2, 1, 1]), RFilter::Any, &o)?.realizers)),
        // From n = 9 on, only the extensions of H7 attain the maximum.
        9 => set = forms(&census(&rv(&[2, 2, 2, 1, 1, 1]), RFilter::Any, &o)?.realizers),
        _ => {}
    }
    Ok((capt, set))
}

fn table1(rep: &mut SuiteReport, opts: &SuiteOptions) -> Result<()> {
    for n in 1..=9 {
        if n > opts.cap.min(DEFAULT_CAP) {
            rep.skipped.push(format!("n={n}"));
            continue;
        }
        let graphs = enumerate_connected(n, opts.cap)?;
        let (capt, attaining) = max_capture_time(graphs)?;
        let (want_capt, want) = table1_expected(n, opts.cap)?;
        let got: BTreeSet<CanonicalForm> = attaining.into_iter().collect();
        let extra = got.difference(&want).next().map(CanonicalForm::to_graph);
        let missing = want.difference(&got).next().map(CanonicalForm::to_graph);
        rep.push(
            format!("n={n}/capt"),
            capt == want_capt,
            None,
            format!("capt={capt}, expected {want_capt}"),
        );
        rep.push(
            format!("n={n}/classes"),
            got == want,
            extra.as_ref().or(missing.as_ref()),
            format!("{} attaining classes, expected {}", got.len(), want.len()),
        );
        if n == 5 || n == 7 {
            // The table names the classes; the totals come from the figure
            // captions (one plus three graphs, five plus one plus one).
            let total = if n == 5 { 5 } else { 9 };
            rep.push(
                format!("n={n}/total"),
                got.len() == total,
                None,
                format!("{} classes, caption count {total}", got.len()),
            );
        }
    }
    Ok(())
}

// ---- uniqueness ----

/// Vectors with one 3 among 2s, the 3 not in the last position.
fn one_three_vectors(max_sum: usize) -> Vec<RankVector> {
    let mut out = Vec::new();
    for len in 2..=max_sum / 2 {
        for j in 0..len - 1 {
            let mut e = vec![2u32; len];
            e[j] = 3;
            if e.iter().sum::<u32>() as usize <= max_sum {
                out.push(rv(&e));
            }
        }
    }
    out
}

fn prepend_one(v: &RankVector) -> RankVector {
    let mut e = vec![1];
    e.extend_from_slice(v.entries());
    rv(&e)
}

fn append_one(v: &RankVector) -> RankVector {
    let mut e = v.entries().to_vec();
    e.push(1);
    rv(&e)
}

fn uniqueness(rep: &mut SuiteReport, opts: &SuiteOptions) -> Result<()> {
    let cap = opts.cap;
    let o = opts_for(cap);
    let unique = |rep: &mut SuiteReport, v: RankVector, f: RFilter, want: Option<Graph>| -> Result<()> {
        let id = format!("{v}/{}", filter_name(f));
        if v.sum() > cap {
            rep.skipped.push(id);
            return Ok(());
        }
        let c = census(&v, f, &o)?;
        let ok = c.count() == 1 && want.as_ref().is_none_or(|w| canonical_form(w) == canonical_form(&c.realizers[0]));
        let witness = c.realizers.first().cloned();
        rep.push(id, ok, witness.as_ref(), format!("{} realizers", c.count()));
        Ok(())
    };
    // Odd paths: (1,2,...,2) of length a, 2 <= a <= 4.
    for a in 2..=4usize {
        let mut e = vec![1];
        e.extend(std::iter::repeat_n(2, a - 1));
        let v = rv(&e);
        let p = Graph::path(v.sum())?;
        unique(rep, v, RFilter::Any, Some(p))?;
    }
    // Even paths: (2,...,2) of length a, 2 <= a <= 4, 0-top. P2 is a clique.
    for a in 2..=4usize {
        let v = rv(&vec![2; a]);
        let p = Graph::path(v.sum())?;
        unique(rep, v, RFilter::Top0, Some(p))?;
    }
    unique(rep, rv(&[2, 2, 2, 1]), RFilter::Any, Some(h7().graph))?;
    let budget = cap.min(DEFAULT_CAP);
    for v in one_three_vectors(budget) {
        if v.sum() < budget {
            unique(rep, prepend_one(&v), RFilter::Any, None)?;
        }
        unique(rep, v, RFilter::Top0, None)?;
    }
    Ok(())
}

// ---- nonrealizable ----

fn nonrealizable_list(cap: usize) -> BTreeMap<(RankVector, RFilter), Vec<&'static str>> {
    let mut m: BTreeMap<(RankVector, RFilter), Vec<&'static str>> = BTreeMap::new();
    let mut add = |v: RankVector, f: RFilter, why: &'static str| {
        if v.sum() <= cap {
            m.entry((v, f)).or_default().push(why);
        }
    };
    let sweep = cap.min(DEFAULT_CAP);
    for n in 2..=sweep {
        for v in compositions_of(n) {
            let e = v.entries();
            if e.len() >= 2 && e[1] == 1 {
                add(v.clone(), RFilter::Any, "second entry 1");
            }
            if e.len() >= 3 && e[2] == 1 {
                add(v.clone(), RFilter::Any, "third entry 1");
            }
        }
    }
    for len in 3..=MAX_CAP {
        let mut e = vec![1u32];
        e.extend(std::iter::repeat_n(2, len - 2));
        e.push(1);
        add(rv(&e), RFilter::Any, "(1,2,...,2,1)");
    }
    for len in 2..=MAX_CAP {
        let mut e = vec![2u32; len - 1];
        e.push(1);
        add(rv(&e), RFilter::Top0, "(2,...,2,1) 0-top");
    }
    for k in 1..=MAX_CAP as u32 {
        add(rv(&[1, 2, k, 1]), RFilter::Any, "(1,2,k,1)");
        add(rv(&[1, 3, k, 1]), RFilter::Any, "(1,3,k,1)");
        add(rv(&[2, 4, k, 1]), RFilter::Top0, "(2,4,k,1) 0-top");
        for m in 1..=MAX_CAP as u32 {
            add(rv(&[m, 2, k, 1]), RFilter::Top0, "(m,2,k,1) 0-top");
        }
    }
    add(rv(&[2, 5, 2, 1]), RFilter::Top0, "(2,5,2,1) 0-top");
    add(rv(&[2, 2, 2, 3, 1]), RFilter::Top0, "(2,2,2,3,1) 0-top");
    for v in one_three_vectors(MAX_CAP) {
        add(append_one(&prepend_one(&v)), RFilter::Any, "(1,x,1), x one 3 among 2s");
        add(append_one(&v), RFilter::Top0, "(x,1) 0-top, x one 3 among 2s");
    }
    m
}

fn nonrealizable(rep: &mut SuiteReport, opts: &SuiteOptions) -> Result<()> {
    let o = opts_for(opts.cap);
    for ((v, f), why) in nonrealizable_list(opts.cap) {
        let c = census(&v, f, &o)?;
        rep.push(
            format!("{v}/{}", filter_name(f)),
            c.count() == 0,
            c.realizers.first(),
            format!("{} realizers ({}; {:?} route)", c.count(), why.join(", "), c.method),
        );
    }
    if opts.cap < MAX_CAP {
        rep.skipped.push(format!("instances with sum above {}", opts.cap));
    }
    Ok(())
}

// ---- minimality ----

fn minimality(rep: &mut SuiteReport, opts: &SuiteOptions) -> Result<()> {
    let cases: [(&[u32], u8, bool); 9] = [
        (&[1, 2], 1, true),
        (&[1, 4, 2, 1], 1, true),
        (&[2, 2, 2, 1], 1, true),
        (&[2, 2], 0, true),
        (&[2, 5, 3, 1], 0, true),
        (&[2, 6, 2, 1], 0, true),
        (&[3, 3, 2, 1], 0, true),
        (&[2, 7, 2, 1], 1, false),
        (&[2, 2, 2, 1, 1, 1], 1, false),
    ];
    for (e, r, want_minimal) in cases {
        let x = rv(e);
        let sum_cap = x.sum().min(opts.cap);
        let v = check_minimal(&x, r, sum_cap)?;
        let id = format!("{x}/r{r}");
        if want_minimal {
            let self_ok = v.self_realizable.is_none_or(|b| b);
            let detail = if v.residual.is_empty() {
                format!("minimal over {} predecessors", v.tested)
            } else {
                let res: Vec<String> = v.residual.iter().map(ToString::to_string).collect();
                format!(
                    "{} predecessors tested, none realizable; untested above sum {sum_cap}: {}",
                    v.tested,
                    res.join(" ")
                )
            };
            let witness = v.witness.as_ref().map(|w| &w.1);
            rep.push(id, v.minimal && self_ok, witness, detail);
        } else {
            let ok = !v.minimal && v.witness.as_ref().is_some_and(|w| w.0 == rv(&[2, 2, 2, 1]));
            let detail = match &v.witness {
                Some((y, _)) => format!("not minimal, witness {y}"),
                None => "no witness found".into(),
            };
            rep.push(id, ok, v.witness.as_ref().map(|w| &w.1), detail);
        }
    }
    Ok(())
}

// ---- structure ----

/// Every cop-win graph of order `n` with its ranking.
fn cop_win_graphs(n: usize, cap: usize) -> Result<Vec<(Graph, CornerRanking)>> {
    Ok(enumerate_connected(n, cap)?
        .into_par_iter()
        .filter_map(|g| {
            let r = corner_rank(&g);
            r.is_cop_win().then_some((g, r))
        })
        .collect())
}

fn rank_of(r: &CornerRanking, v: usize) -> u32 {
    r.rank(v).finite().expect("cop-win")
}

/// Vertices of rank `k > 1` have a neighbor of rank `k - 1`; a lone vertex of
/// rank `k < α` sees all of rank `k + 1`.
fn xk1_violation(g: &Graph, r: &CornerRanking) -> Option<String> {
    let alpha = rank_of_alpha(r);
    for v in g.vertices().iter() {
        let k = rank_of(r, v);
        if k > 1 && !g.neighbors(v).iter().any(|u| rank_of(r, u) == k - 1) {
            return Some(format!("vertex {} of rank {k} has no neighbor of rank {}", v + 1, k - 1));
        }
    }
    for k in 1..alpha {
        let level = r.level(k as usize);
        if level.len() == 1 {
            let v = level.iter().next().unwrap();
            if !r.level(k as usize + 1).is_subset(g.closed_neighborhood(v).unwrap()) {
                return Some(format!("lone rank-{k} vertex {} misses rank {}", v + 1, k + 1));
            }
        }
    }
    None
}

fn rank_of_alpha(r: &CornerRanking) -> u32 {
    r.alpha().finite().expect("cop-win")
}

/// Within `G^(k)`, closed neighborhoods restricted to `G^(k)`.
fn nbhd_in(g: &Graph, s: VertexSet, v: usize) -> VertexSet {
    g.closed_neighborhood(v).unwrap() & s
}

fn nbrrank_violation(g: &Graph, r: &CornerRanking) -> Option<String> {
    for v in g.vertices().iter() {
        let k = rank_of(r, v);
        if k <= 1 {
            continue;
        }
        let s = r.level_set(k as usize);
        let nv = nbhd_in(g, s, v);
        for w in s.iter().filter(|&w| w != v) {
            if !nv.is_proper_subset(nbhd_in(g, s, w)) {
                continue;
            }
            let nw = g.closed_neighborhood(w).unwrap();
            if !g.neighbors(v).iter().any(|u| rank_of(r, u) == k - 1 && !nw.contains(u)) {
                return Some(format!("vertex {} cornered by {} in G^({k})", v + 1, w + 1));
            }
        }
    }
    None
}

fn nox2d_violation(g: &Graph, r: &CornerRanking) -> Option<String> {
    let alpha = rank_of_alpha(r) as usize;
    if alpha < 2 {
        return None;
    }
    let top = r.level_set(alpha - 1);
    r.level(alpha - 1)
        .iter()
        .find(|&v| top.is_subset(g.closed_neighborhood(v).unwrap()))
        .map(|v| format!("rank-{} vertex {} dominates X_{}", alpha - 1, v + 1, alpha - 1))
}

fn higran_violation(g: &Graph, r: &CornerRanking) -> Option<String> {
    let alpha = rank_of_alpha(r);
    for v in g.vertices().iter() {
        let k = rank_of(r, v);
        if k >= alpha {
            continue;
        }
        let s = r.level_set(k as usize);
        let nv = nbhd_in(g, s, v);
        let ok = s
            .iter()
            .any(|w| rank_of(r, w) > k && nv.is_proper_subset(nbhd_in(g, s, w)));
        if !ok {
            return Some(format!("vertex {} of rank {k} not cornered from above", v + 1));
        }
    }
    None
}

fn structure(rep: &mut SuiteReport, opts: &SuiteOptions) -> Result<()> {
    let top = SWEEP_N.min(opts.cap);
    type Sweep = fn(&Graph, &CornerRanking) -> Option<String>;
    let sweeps: [(&str, Sweep); 4] = [
        ("lower-neighbor", xk1_violation),
        ("corner-has-private-lower-neighbor", nbrrank_violation),
        ("no-dominating-second-level", nox2d_violation),
        ("cornered-from-above", higran_violation),
    ];
    let mut all: Vec<(Graph, CornerRanking)> = Vec::new();
    for n in 1..=top {
        all.extend(cop_win_graphs(n, opts.cap)?);
    }
    for (name, f) in sweeps {
        let bad = all.par_iter().find_map_first(|(g, r)| f(g, r).map(|m| (g.clone(), m)));
        let detail = match &bad {
            Some((_, m)) => m.clone(),
            None => format!("{} cop-win graphs, n <= {top}", all.len()),
        };
        rep.push(format!("{name}/n<={top}"), bad.is_none(), bad.as_ref().map(|b| &b.0), detail);
    }

    // Rank-3 vertices of a (1,m,k,1) realizer induce a connected graph.
    let o = opts_for(opts.cap);
    let sweep = opts.cap.min(DEFAULT_CAP);
    let mut checked = 0;
    let mut bad: Option<(Graph, RankVector)> = None;
    for m in 1..sweep as u32 {
        for k in 1..sweep as u32 {
            let v = rv(&[1, m, k, 1]);
            if v.sum() > sweep {
                continue;
            }
            for g in census(&v, RFilter::Any, &o)?.realizers {
                checked += 1;
                let r = corner_rank(&g);
                let (h, _) = g.induced(r.level(3))?;
                if !h.is_connected() && bad.is_none() {
                    bad = Some((g, v.clone()));
                }
            }
        }
    }
    rep.push(
        format!("rank3-connected-1mk1/sum<={sweep}"),
        bad.is_none(),
        bad.as_ref().map(|b| &b.0),
        format!("{checked} realizers of (1,m,k,1)"),
    );

    // Every vector realized at order <= 7 has a 1-top realizer.
    let mut missing: Option<RankVector> = None;
    let mut vectors = 0;
    for n in 1..=top {
        let ix = census_index(n, opts.cap)?;
        // Vector -> has a 1-top realizer. Cliques are left out.
        let mut by_vector: BTreeMap<RankVector, bool> = BTreeMap::new();
        for (v, t, _) in ix.classes() {
            if t != TopHeaviness::CliqueRank1 {
                *by_vector.entry(v).or_default() |= t == TopHeaviness::Top1;
            }
        }
        for (v, has_top1) in by_vector {
            vectors += 1;
            if !has_top1 && missing.is_none() {
                missing = Some(v);
            }
        }
    }
    rep.push(
        format!("realizable-is-1-realizable/n<={top}"),
        missing.is_none(),
        None,
        match &missing {
            Some(v) => format!("{v} has no 1-top realizer"),
            None => format!("{vectors} realizable vectors"),
        },
    );
    Ok(())
}

// ---- n5-constituents ----

fn n5_constituents(rep: &mut SuiteReport, opts: &SuiteOptions) -> Result<()> {
    let o = opts_for(opts.cap);
    let realizable: [(&[u32], RFilter); 3] = [
        (&[3, 3, 2, 1], RFilter::Top0),
        (&[1, 4, 2, 1], RFilter::Top1),
        (&[2, 2, 2, 1], RFilter::Top1),
    ];
    let empty: [(&[u32], RFilter); 17] = [
        (&[2, 2, 2, 2, 2, 1], RFilter::Top0),
        (&[3, 2, 2, 2, 1], RFilter::Top0),
        (&[2, 3, 2, 2, 1], RFilter::Top0),
        (&[2, 2, 3, 2, 1], RFilter::Top0),
        (&[2, 2, 2, 3, 1], RFilter::Top0),
        (&[3, 2, 3, 1], RFilter::Top0),
        (&[2, 3, 3, 1], RFilter::Top0),
        (&[4, 2, 2, 1], RFilter::Top0),
        (&[2, 4, 2, 1], RFilter::Top0),
        (&[2, 2, 4, 1], RFilter::Top0),
        (&[1, 2, 2, 2, 2, 1], RFilter::Any),
        (&[1, 3, 2, 2, 1], RFilter::Any),
        (&[1, 2, 3, 2, 1], RFilter::Any),
        (&[1, 2, 2, 3, 1], RFilter::Any),
        (&[1, 2, 4, 1], RFilter::Any),
        (&[1, 3, 3, 1], RFilter::Any),
        (&[1, 2, 2, 1], RFilter::Any),
    ];
    for (e, f) in realizable {
        let v = rv(e);
        let id = format!("{v}/{}/realizable", filter_name(f));
        if v.sum() > opts.cap {
            rep.skipped.push(id);
            continue;
        }
        let c = census(&v, f, &o)?;
        rep.push(id, c.count() > 0, c.realizers.first(), format!("{} realizers", c.count()));
    }
    for (e, f) in empty {
        let v = rv(e);
        let id = format!("{v}/{}/empty", filter_name(f));
        if v.sum() > opts.cap {
            rep.skipped.push(id);
            continue;
        }
        let c = census(&v, f, &o)?;
        rep.push(id, c.count() == 0, c.realizers.first(), format!("{} realizers", c.count()));
    }
    Ok(())
}

// ---- fixtures ----

pub fn corpus_dir(opts: &SuiteOptions) -> PathBuf {
    opts.corpus
        .clone()
        .or_else(|| std::env::var_os("COPWIN_CORPUS").map(PathBuf::from))
        .unwrap_or_else(crate::catalog::default_corpus_dir)
}

fn fixtures(rep: &mut SuiteReport, opts: &SuiteOptions) -> Result<()> {
    let corpus = load_corpus(corpus_dir(opts))?;
    if corpus.is_empty() {
        rep.push("corpus-nonempty", false, None, "no fixtures found");
    }
    for f in &corpus {
        let c = f.check();
        let mut detail = c.detail.clone();
        if c.ranks_ok == Some(false) {
            detail.push_str("; printed ranks differ");
        }
        rep.push(f.name.clone(), c.pass(), Some(&f.graph), detail);
    }
    // Groups marked complete must equal the census.
    let mut groups: BTreeMap<&str, Vec<&Fixture>> = BTreeMap::new();
    for f in &corpus {
        if let Some(g) = &f.group {
            groups.entry(g).or_default().push(f);
        }
    }
    for (name, members) in groups {
        let Some(filter) = members.iter().find_map(|f| f.complete) else {
            continue;
        };
        let v = &members[0].declared_vector;
        let id = format!("group-{name}");
        if v.sum() > opts.cap.min(DEFAULT_CAP) {
            rep.skipped.push(id);
            continue;
        }
        let listed: Vec<CanonicalForm> = members.iter().map(|f| canonical_form(&f.graph)).collect();
        let set: BTreeSet<CanonicalForm> = listed.iter().cloned().collect();
        let want = forms(&census(v, filter, &opts_for(opts.cap))?.realizers);
        let same_vector = members.iter().all(|f| &f.declared_vector == v);
        let ok = same_vector && set.len() == listed.len() && set == want;
        let stray = set.symmetric_difference(&want).next().map(CanonicalForm::to_graph);
        rep.push(
            id,
            ok,
            stray.as_ref(),
            format!("{} listed, {} distinct, census {} ({v} {})", listed.len(), set.len(), want.len(), filter_name(filter)),
        );
    }
    Ok(())
}

// ---- oracle ----

fn oracle(rep: &mut SuiteReport, opts: &SuiteOptions) -> Result<()> {
    let top = SWEEP_N.min(opts.cap);
    let mut total = 0;
    for n in 1..=top {
        let graphs = enumerate_connected(n, opts.cap)?;
        total += graphs.len();
        let bad = graphs.par_iter().find_map_first(|g| {
            let by_rank = capture_time_by_rank(g, &corner_rank(g));
            let by_game = capture_time_by_game(g);
            (by_rank != by_game).then(|| (g.clone(), by_rank, by_game))
        });
        let detail = match &bad {
            Some((_, a, b)) => format!("rank says {a}, game says {b}"),
            None => format!("{} graphs agree", graphs.len()),
        };
        rep.push(format!("n={n}"), bad.is_none(), bad.as_ref().map(|b| &b.0), detail);
    }
    if top == SWEEP_N {
        rep.push("total-classes", total == 996, None, format!("{total} classes, expected 996"));
    }
    Ok(())
}

// ---- constructive ----

fn twin_violation(g: &Graph, r: &CornerRanking, v: usize) -> Option<String> {
    let h = add_twin(g, v).ok()?;
    let rh = corner_rank(&h);
    let x = r.vector().ok()?;
    let mut want = x.entries().to_vec();
    let alpha = rank_of_alpha(r) as usize;
    want[alpha - rank_of(r, v) as usize] += 1;
    if rh.vector().ok().as_ref().map(RankVector::entries) != Some(&want[..]) {
        return Some(format!("twin of {}: vector {:?}", v + 1, rh.vector().ok()));
    }
    if top_heaviness(g, r).ok() != top_heaviness(&h, &rh).ok() {
        return Some(format!("twin of {} changes the top class", v + 1));
    }
    None
}

fn tail_violation(g: &Graph, r: &CornerRanking, l: usize) -> Option<String> {
    let h = match extend_tail(g, l) {
        Ok(h) => h,
        Err(e) => return Some(format!("extend_tail({l}) failed: {e}")),
    };
    let rh = corner_rank(&h);
    let x = r.vector().ok()?;
    if rh.vector().ok() != Some(x.standard_extension(l)) {
        return Some(format!("extend_tail({l}) gives {:?}", rh.vector().ok()));
    }
    let back = rh.level_graph(&h, l + 1).ok()?.0;
    if canonical_form(&back) != canonical_form(g) {
        return Some(format!("G^({}) of extend_tail({l}) is not the original", l + 1));
    }
    None
}

fn truncate_violation(g: &Graph, r: &CornerRanking) -> Option<String> {
    let x = r.vector().ok()?;
    for k in 1..=x.len() {
        let t = match truncate(g, r, k) {
            Ok(t) => t,
            Err(e) => return Some(format!("truncate({k}) failed: {e}")),
        };
        if corner_rank(&t).vector().ok() != x.initial_segment(k).ok() {
            return Some(format!("truncate({k}) does not realize the initial segment"));
        }
    }
    None
}

fn construct_violation(g: &Graph, r: &CornerRanking, vertices: &[usize], tails: &[usize]) -> Option<String> {
    vertices
        .iter()
        .find_map(|&v| twin_violation(g, r, v))
        .or_else(|| {
            // K1 grows into K2, which is a clique and has vector (2).
            if g.n() == 1 {
                return None;
            }
            tails.iter().find_map(|&l| tail_violation(g, r, l))
        })
        .or_else(|| truncate_violation(g, r))
}

/// A random cop-win graph: every new vertex is dominated by an old one.
pub fn random_cop_win(rng: &mut impl Rng, n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new()];
    for x in 1..n {
        let u = rng.gen_range(0..x);
        let mut chosen = vec![u];
        chosen.extend(nbrs[u].iter().copied().filter(|_| rng.gen_bool(0.5)));
        nbrs.push(Vec::new());
        for &w in &chosen {
            edges.push((w, x));
            nbrs[w].push(x);
            nbrs[x].push(w);
        }
    }
    Graph::from_edges(n, &edges).expect("valid edges")
}

fn constructive(rep: &mut SuiteReport) -> Result<()> {
    let mut classes = 0;
    for n in 1..=CONSTRUCT_N {
        let graphs = cop_win_graphs(n, CONSTRUCT_N)?;
        classes += graphs.len();
        let bad = graphs.par_iter().find_map_first(|(g, r)| {
            let vs: Vec<usize> = g.vertices().iter().collect();
            construct_violation(g, r, &vs, &[0, 1, 2]).map(|m| (g.clone(), m))
        });
        let detail = match &bad {
            Some((_, m)) => m.clone(),
            None => format!("{} cop-win classes", graphs.len()),
        };
        rep.push(format!("n={n}"), bad.is_none(), bad.as_ref().map(|b| &b.0), detail);
    }
    let mut rng = StdRng::seed_from_u64(0x5eed_c0b5);
    let instances: Vec<Graph> = (0..RANDOM_INSTANCES)
        .map(|_| {
            let n = rng.gen_range(CONSTRUCT_N + 1..=14);
            random_cop_win(&mut rng, n)
        })
        .collect();
    let picks: Vec<usize> = (0..RANDOM_INSTANCES).map(|_| rng.gen_range(0..64)).collect();
    let bad = instances.par_iter().zip(&picks).find_map_first(|(g, &p)| {
        let r = corner_rank(g);
        if !r.is_cop_win() {
            return Some((g.clone(), "generator produced a non-cop-win graph".to_string()));
        }
        construct_violation(g, &r, &[p % g.n()], &[1]).map(|m| (g.clone(), m))
    });
    let detail = match &bad {
        Some((_, m)) => m.clone(),
        None => format!("{RANDOM_INSTANCES} random cop-win graphs, orders {}..=14 ({classes} classes above)", CONSTRUCT_N + 1),
    };
    rep.push("random", bad.is_none(), bad.as_ref().map(|b| &b.0), detail);
    Ok(())
}

// ---- projection ----

/// A shortest path from `v` to `w`, if any.
fn shortest_path(g: &Graph, v: usize, w: usize) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.n()];
    let mut seen = VertexSet::singleton(v);
    let mut queue = std::collections::VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        if u == w {
            let mut path = vec![w];
            while *path.last().unwrap() != v {
                path.push(prev[*path.last().unwrap()]);
            }
            path.reverse();
            return Some(path);
        }
        for x in g.neighbors(u).iter() {
            if !seen.contains(x) {
                seen.insert(x);
                prev[x] = u;
                queue.push_back(x);
            }
        }
    }
    None
}

fn projection_violation(g: &Graph, r: &CornerRanking) -> Option<String> {
    let p = build_projections(g, r).ok()?;
    let alpha = p.alpha();
    for k in 1..alpha {
        match p.homomorphism_violation(k) {
            Ok(None) => {}
            Ok(Some((u, v, a, b))) => {
                return Some(format!("f_{k}: edge {}-{} maps to {} and {}", u + 1, v + 1, a + 1, b + 1))
            }
            Err(e) => return Some(e.to_string()),
        }
    }
    // F_k on G: adjacent vertices go to equal or adjacent vertices.
    for k in 2..=alpha {
        let images: Vec<VertexSet> = match g.vertices().iter().map(|v| p.F(k, v)).collect() {
            Ok(x) => x,
            Err(e) => return Some(e.to_string()),
        };
        for (u, v) in g.edges().chain(g.vertices().iter().map(|v| (v, v))) {
            for a in images[u].iter() {
                if let Some(b) = images[v].iter().find(|&b| !g.closed(a).contains(b)) {
                    return Some(format!("F_{k}: {}-{} maps to {} and {}", u + 1, v + 1, a + 1, b + 1));
                }
            }
        }
    }
    for v in g.vertices().iter() {
        for w in g.vertices().iter().filter(|&w| w > v) {
            let (kv, kw) = (rank_of(r, v), rank_of(r, w));
            if kv == kw && !check_path_contraction(g, r, v, w).unwrap_or(false) {
                return Some(format!("{} and {} of rank {kv} are closer in G than in G^({kv})", v + 1, w + 1));
            }
            let path = shortest_path(g, v, w)?;
            for k in 1..=kv.min(kw) as usize {
                if !p.path_projects(k, &path).unwrap_or(false) {
                    return Some(format!("path {}..{} does not project to G^({k})", v + 1, w + 1));
                }
            }
        }
    }
    None
}

fn projection(rep: &mut SuiteReport, opts: &SuiteOptions) -> Result<()> {
    let top = SWEEP_N.min(opts.cap);
    for n in 1..=top {
        let graphs = cop_win_graphs(n, opts.cap)?;
        let bad = graphs
            .par_iter()
            .find_map_first(|(g, r)| projection_violation(g, r).map(|m| (g.clone(), m)));
        let detail = match &bad {
            Some((_, m)) => m.clone(),
            None => format!("{} cop-win classes", graphs.len()),
        };
        rep.push(format!("n={n}"), bad.is_none(), bad.as_ref().map(|b| &b.0), detail);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert!(matches!(verify_suite("nope", &SuiteOptions::default()), Err(Error::Argument(_))));
    }

    #[test]
    fn line_format() {
        let mut rep = SuiteReport::new("demo", 9);
        rep.push("a", true, None, "");
        rep.push("b", false, Some(&Graph::path(2).unwrap()), "");
        assert_eq!(rep.lines(), "SUITE demo CHECK a PASS\nSUITE demo CHECK b FAIL witness=2:1-2\n");
        assert!(!rep.pass);
    }

    #[test]
    fn one_three_family() {
        let v: Vec<String> = one_three_vectors(7).iter().map(ToString::to_string).collect();
        assert_eq!(v, ["(3,2)", "(3,2,2)", "(2,3,2)"]);
    }

    #[test]
    fn random_graphs_are_cop_win() {
        let mut rng = StdRng::seed_from_u64(1);
        for _ in 0..50 {
            let g = random_cop_win(&mut rng, 12);
            assert!(g.is_connected() && corner_rank(&g).is_cop_win());
        }
    }
}
