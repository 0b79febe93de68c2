//! Rank cardinality vectors `(x_α, ..., x_1)`, stored top-first.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct RankVector(Vec<u32>);

impl RankVector {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::argument("a rank vector has at least one entry"));
        }
        if entries.contains(&0) {
            return Err(Error::argument("rank vector entries are positive"));
        }
        Ok(RankVector(entries))
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(!entries.is_empty() && !entries.contains(&0));
        RankVector(entries)
    }

    /// Top-first entries.
    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// `α`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sum(&self) -> usize {
        self.0.iter().map(|&x| x as usize).sum()
    }

    /// `x_k` for `1 <= k <= α`.
    pub fn x(&self, k: usize) -> u32 {
        self.0[self.0.len() - k]
    }

    /// `x_1`, the bottom entry.
    pub fn last(&self) -> u32 {
        *self.0.last().unwrap()
    }

    /// Same length, pointwise `self >= x`. Equality counts.
    pub fn is_augmentation_of(&self, x: &RankVector) -> bool {
        self.len() == x.len() && self.0.iter().zip(&x.0).all(|(y, x)| y >= x)
    }

    /// `(x_α, ..., x_k)`.
    pub fn initial_segment(&self, k: usize) -> Result<RankVector> {
        if k == 0 || k > self.len() {
            return Err(Error::argument(format!(
                "initial segment index {k} outside 1..={}",
                self.len()
            )));
        }
        Ok(RankVector(self.0[..=self.len() - k].to_vec()))
    }

    /// Appends `l` copies of `x_1`.
    pub fn standard_extension(&self, l: usize) -> RankVector {
        let mut v = self.0.clone();
        v.extend(std::iter::repeat_n(self.last(), l));
        RankVector(v)
    }

    /// `self` is `x` followed by any entries (possibly none).
    pub fn is_extension_of(&self, x: &RankVector) -> bool {
        self.len() >= x.len() && self.0[..x.len()] == x.0[..]
    }

    /// `self <= y`: `y` augments a standard extension of `self`.
    pub fn leq(&self, y: &RankVector) -> bool {
        let m = self.len();
        y.len() >= m
            && self.0.iter().zip(&y.0).all(|(a, b)| a <= b)
            && y.0[m..].iter().all(|&b| b >= self.last())
    }

    /// Every `y <= self` with `len(y) >= min_len`, in canonical order.
    pub fn predecessors(&self, min_len: usize) -> Vec<RankVector> {
        let mut out = Vec::new();
        let min_len = min_len.max(1);
        for m in min_len..=self.len() {
            // Top m-1 entries are bounded pointwise; the last one also has to
            // stay below every entry it would be extended over.
            let tail_min = *self.0[m - 1..].iter().min().unwrap();
            let mut bounds: Vec<u32> = self.0[..m - 1].to_vec();
            bounds.push(tail_min);
            let mut cur = vec![1u32; m];
            'odometer: loop {
                out.push(RankVector(cur.clone()));
                for i in (0..m).rev() {
                    if cur[i] < bounds[i] {
                        cur[i] += 1;
                        cur[i + 1..].fill(1);
                        continue 'odometer;
                    }
                }
                break;
            }
        }
        out.sort();
        out
    }
}

/// Vectors with sum `n` and length at least `min_len` whose second and third
/// entries are at least 2 whenever the length is at least 3.
pub fn candidate_vectors(n: usize, min_len: usize) -> Vec<RankVector> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    compositions(n, &mut cur, &mut out);
    out.retain(|v: &RankVector| v.len() >= min_len && (v.len() < 3 || (v.0[1] >= 2 && v.0[2] >= 2)));
    out.sort();
    out
}

/// Every vector with sum `n`, in canonical order.
pub fn compositions_of(n: usize) -> Vec<RankVector> {
    let mut out = Vec::new();
    compositions(n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

fn compositions(left: usize, cur: &mut Vec<u32>, out: &mut Vec<RankVector>) {
    if left == 0 {
        if !cur.is_empty() {
            out.push(RankVector(cur.clone()));
        }
        return;
    }
    for first in 1..=left {
        cur.push(first as u32);
        compositions(left - first, cur, out);
        cur.pop();
    }
}

impl Ord for RankVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for RankVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RankVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RankVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RankVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::parse(1, 1, format!("expected `(a,b,...)`, found {s:?}")))?;
        let mut entries = Vec::new();
        let mut col = s.find('(').unwrap_or(0) + 2;
        for item in inner.split(',') {
            let value: u32 = item
                .trim()
                .parse()
                .map_err(|_| Error::parse(1, col, format!("bad vector entry {:?}", item.trim())))?;
            if value == 0 {
                return Err(Error::parse(1, col, "vector entries are positive"));
            }
            entries.push(value);
            col += item.len() + 1;
        }
        Ok(RankVector(entries))
    }
}

impl TryFrom<Vec<u32>> for RankVector {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        RankVector::new(v)
    }
}

impl From<RankVector> for Vec<u32> {
    fn from(v: RankVector) -> Vec<u32> {
        v.0
    }
}

/// `rv![2, 2, 2, 1]`
#[macro_export]
macro_rules! rv {
    ($($x:expr),+ $(,)?) => {
        $crate::vector::RankVector::new(vec![$($x),+]).expect("valid rank vector")
    };
}
