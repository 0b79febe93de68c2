//! Fixture corpus: one graph per file, with its declared rank vector and top
//! class.
//!
//! ```text
//! # comment
//! name = v3_3_2_1
//! vector = (3,3,2,1)
//! r = 0
//! source = free text
//! ranks = 4 4 4 3 3 3 2 2 1      (optional, ranks drawn in the figure)
//! group = r3_2_2_3               (optional)
//! complete = any|r0|r1           (optional, the group lists every realizer)
//! edges = (1,2) (1,3) ...
//! ```
//!
//! Labels run over `1..=sum(vector)`.

use crate::error::{Error, Result};
use crate::graph::{parse_pairs, Graph};
use crate::rank::{corner_rank, top_heaviness, TopHeaviness};
use crate::search::RFilter;
use crate::vector::RankVector;
use serde::Serialize;
use std::collections::{BTreeMap, HashSet};
use std::path::{Path, PathBuf};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fixture {
    pub name: String,
    pub declared_vector: RankVector,
    pub declared_r: u8,
    #[serde(serialize_with = "compact")]
    pub graph: Graph,
    pub source: String,
    pub printed_ranks: Option<Vec<u32>>,
    pub group: Option<String>,
    /// Set when the group claims to list every realizer under this filter.
    pub complete: Option<RFilter>,
    #[serde(skip)]
    pub path: PathBuf,
}

fn compact<S: serde::Serializer>(g: &Graph, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&g.to_compact())
}

/// Outcome of re-ranking one fixture.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureCheck {
    pub name: String,
    pub vector_ok: bool,
    pub r_ok: bool,
    /// `None` when the fixture has no printed ranks.
    pub ranks_ok: Option<bool>,
    pub detail: String,
}

impl FixtureCheck {
    pub fn pass(&self) -> bool {
        self.vector_ok && self.r_ok && self.ranks_ok != Some(false)
    }
}

impl Fixture {
    pub fn check(&self) -> FixtureCheck {
        let r = corner_rank(&self.graph);
        let vector = r.vector().ok();
        let top = top_heaviness(&self.graph, &r).ok();
        let want_top = if self.declared_r == 1 { TopHeaviness::Top1 } else { TopHeaviness::Top0 };
        let ranks_ok = self.printed_ranks.as_ref().map(|p| {
            r.ranks().iter().zip(p).all(|(a, &b)| a.finite() == Some(b))
        });
        let detail = match &vector {
            Some(v) => format!(
                "computed {v} {}",
                top.map_or("not cop-win".to_string(), |t| format!("top={t}"))
            ),
            None => "not cop-win".into(),
        };
        FixtureCheck {
            name: self.name.clone(),
            vector_ok: vector.as_ref() == Some(&self.declared_vector),
            r_ok: top == Some(want_top),
            ranks_ok,
            detail,
        }
    }
}

/// Parses one corpus file.
pub fn parse_fixture(text: &str, path: &Path) -> Result<Fixture> {
    let wrap = |e: Error| Error::Corpus {
        file: path.display().to_string(),
        source: Box::new(e),
    };
    let mut fields: BTreeMap<&str, (usize, usize, &str)> = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let eq = line
            .find('=')
            .ok_or_else(|| wrap(Error::parse(i + 1, 1, "expected `key = value`")))?;
        let key = line[..eq].trim();
        let value_start = raw.len() - raw.trim_start().len() + eq + 1;
        let value = line[eq + 1..].trim();
        let col = value_start + (line[eq + 1..].len() - line[eq + 1..].trim_start().len()) + 1;
        if !matches!(key, "name" | "vector" | "r" | "source" | "ranks" | "group" | "complete" | "edges") {
            return Err(wrap(Error::parse(i + 1, 1, format!("unknown key {key:?}"))));
        }
        if fields.insert(key, (i + 1, col, value)).is_some() {
            return Err(wrap(Error::parse(i + 1, 1, format!("duplicate key {key:?}"))));
        }
    }
    let get = |key: &str| {
        fields
            .get(key)
            .copied()
            .ok_or_else(|| wrap(Error::parse(0, 0, format!("missing key {key:?}"))))
    };
    let (_, _, name) = get("name")?;
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-') {
        let (l, c, _) = get("name")?;
        return Err(wrap(Error::parse(l, c, format!("bad fixture name {name:?}"))));
    }
    let (vl, vc, vtext) = get("vector")?;
    let declared_vector: RankVector = vtext
        .parse()
        .map_err(|e: Error| wrap(Error::parse(vl, vc, e.to_string())))?;
    let (rl, rc, rtext) = get("r")?;
    let declared_r = match rtext {
        "0" => 0,
        "1" => 1,
        _ => return Err(wrap(Error::parse(rl, rc, "r must be 0 or 1"))),
    };
    let (_, _, source) = get("source")?;
    let n = declared_vector.sum();
    let (el, ec, etext) = get("edges")?;
    let graph = parse_pairs(etext, Some(n))
        .map_err(|e| match e {
            Error::Parse { line, column, message } => wrap(Error::parse(
                el + line - 1,
                if line == 1 { ec + column - 1 } else { column },
                message,
            )),
            other => wrap(other),
        })?
        .graph;
    let printed_ranks = match fields.get("ranks") {
        None => None,
        Some(&(l, c, t)) => {
            let ranks = t
                .split_whitespace()
                .map(|s| s.parse::<u32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| wrap(Error::parse(l, c, e.to_string())))?;
            if ranks.len() != n {
                return Err(wrap(Error::parse(l, c, format!("{} ranks for {n} vertices", ranks.len()))));
            }
            Some(ranks)
        }
    };
    let complete = match fields.get("complete") {
        None => None,
        Some(&(l, c, t)) => Some(match t {
            "any" => RFilter::Any,
            "r0" => RFilter::Top0,
            "r1" => RFilter::Top1,
            _ => return Err(wrap(Error::parse(l, c, "complete must be any, r0 or r1"))),
        }),
    };
    if complete.is_some() && !fields.contains_key("group") {
        return Err(wrap(Error::argument("`complete` needs a `group`")));
    }
    Ok(Fixture {
        name: name.to_string(),
        declared_vector,
        declared_r,
        graph,
        source: source.to_string(),
        printed_ranks,
        group: fields.get("group").map(|g| g.2.to_string()),
        complete,
        path: path.to_path_buf(),
    })
}

/// Loads every `*.txt` file in `dir`, sorted by file name.
pub fn load_corpus(dir: impl AsRef<Path>) -> Result<Vec<Fixture>> {
    let dir = dir.as_ref();
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "txt"))
        .collect();
    paths.sort();
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(paths.len());
    for p in paths {
        let text = std::fs::read_to_string(&p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
        let f = parse_fixture(&text, &p)?;
        if !seen.insert(f.name.clone()) {
            return Err(Error::Corpus {
                file: p.display().to_string(),
                source: Box::new(Error::argument(format!("duplicate fixture name {:?}", f.name))),
            });
        }
        out.push(f);
    }
    Ok(out)
}

/// The corpus shipped with this crate.
pub fn default_corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}
