//! Text formats.
//!
//! `adjlist`: optional `n=<int>` header, then one `u v` pair per line, 1-indexed.
//! `pairs`: whitespace-separated `(u,v)` tokens; `&` and `\` count as
//! whitespace so LaTeX table rows paste in unchanged. Both accept `#` comments.
//!
//! The compact form `n:u-v,u-v,...` (1-indexed, no spaces) is what reports
//! embed as witnesses.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::fmt::Write as _;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphFormat {
    Adjlist,
    Pairs,
}

impl FromStr for GraphFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "adjlist" => Ok(GraphFormat::Adjlist),
            "pairs" => Ok(GraphFormat::Pairs),
            _ => Err(Error::argument(format!("unknown graph format {s:?}"))),
        }
    }
}

/// A parsed graph plus the input label of each vertex index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<u64>,
}

impl LabeledGraph {
    pub fn label(&self, v: usize) -> u64 {
        self.labels[v]
    }

    pub fn index_of(&self, label: u64) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<LabeledGraph> {
    match format {
        GraphFormat::Adjlist => parse_adjlist(text),
        GraphFormat::Pairs => parse_pairs(text, None),
    }
}

/// Guesses the format from the first significant character.
pub fn sniff_format(text: &str) -> GraphFormat {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty() && !l.starts_with("n="));
    match first {
        Some(l) if l.starts_with('(') => GraphFormat::Pairs,
        _ => GraphFormat::Adjlist,
    }
}

/// Collects edges against either a fixed range `1..=n` or labels in order of
/// first appearance.
struct Builder {
    fixed_n: Option<usize>,
    labels: Vec<u64>,
    index: HashMap<u64, usize>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new(fixed_n: Option<usize>) -> Self {
        Builder {
            fixed_n,
            labels: Vec::new(),
            index: HashMap::new(),
            edges: Vec::new(),
        }
    }

    fn vertex(&mut self, label: u64, line: usize, col: usize) -> Result<usize> {
        if label == 0 {
            return Err(Error::parse(line, col, "vertex labels start at 1"));
        }
        if let Some(n) = self.fixed_n {
            if label as usize > n {
                return Err(Error::parse(line, col, format!("vertex {label} exceeds n={n}")));
            }
            return Ok(label as usize - 1);
        }
        if let Some(&i) = self.index.get(&label) {
            return Ok(i);
        }
        let i = self.labels.len();
        if i == MAX_VERTICES {
            return Err(Error::parse(line, col, format!("more than {MAX_VERTICES} vertices")));
        }
        self.labels.push(label);
        self.index.insert(label, i);
        Ok(i)
    }

    fn edge(&mut self, u: (u64, usize), v: (u64, usize), line: usize) -> Result<()> {
        if u.0 == v.0 {
            return Err(Error::parse(line, u.1, format!("self-pair ({0},{0}); loops are implicit", u.0)));
        }
        let a = self.vertex(u.0, line, u.1)?;
        let b = self.vertex(v.0, line, v.1)?;
        self.edges.push((a, b));
        Ok(())
    }

    fn finish(self, line: usize) -> Result<LabeledGraph> {
        let (n, labels) = match self.fixed_n {
            Some(n) => (n, (1..=n as u64).collect()),
            None => (self.labels.len(), self.labels),
        };
        if n == 0 {
            return Err(Error::parse(line, 1, "no vertices (add an n=<int> header for edgeless graphs)"));
        }
        let graph = Graph::from_edges(n, &self.edges).map_err(|e| Error::parse(line, 1, e.to_string()))?;
        Ok(LabeledGraph { graph, labels })
    }
}

fn parse_header(body: &str, line: usize, col: usize) -> Result<usize> {
    let value = body.trim();
    let n: usize = value
        .parse()
        .map_err(|_| Error::parse(line, col, format!("bad vertex count {value:?}")))?;
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::parse(line, col, format!("vertex count must be in 1..={MAX_VERTICES}")));
    }
    Ok(n)
}

fn parse_adjlist(text: &str) -> Result<LabeledGraph> {
    let mut header: Option<usize> = None;
    let mut pairs: Vec<((u64, usize), (u64, usize), usize)> = Vec::new();
    let mut last_line = 1;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.len() - trimmed.len();
        if let Some(rest) = trimmed.strip_prefix("n=") {
            if header.is_some() || !pairs.is_empty() {
                return Err(Error::parse(line, indent + 1, "the n= header must come first"));
            }
            header = Some(parse_header(rest, line, indent + 3)?);
            continue;
        }
        let mut fields = Vec::new();
        let mut offset = 0;
        for tok in content.split_whitespace() {
            let col = content[offset..].find(tok).unwrap() + offset;
            offset = col + tok.len();
            let value: u64 = tok
                .parse()
                .map_err(|_| Error::parse(line, col + 1, format!("expected a vertex number, found {tok:?}")))?;
            fields.push((value, col + 1));
        }
        if fields.len() != 2 {
            return Err(Error::parse(line, indent + 1, format!("expected `u v`, found {} fields", fields.len())));
        }
        pairs.push((fields[0], fields[1], line));
    }
    // Without a header the labels are still 1-indexed, so n is the largest one.
    let n = header.or_else(|| pairs.iter().map(|(u, v, _)| u.0.max(v.0) as usize).max());
    let n = match n {
        Some(n) if n > MAX_VERTICES => {
            return Err(Error::parse(last_line, 1, format!("more than {MAX_VERTICES} vertices")))
        }
        other => other,
    };
    let mut b = Builder::new(n);
    for (u, v, line) in pairs {
        b.edge(u, v, line)?;
    }
    b.finish(last_line)
}

/// `pairs` format. With `fixed_n` the labels must lie in `1..=n` and map to
/// `label - 1`; an `n=` token before the first pair has the same effect.
pub(crate) fn parse_pairs(text: &str, fixed_n: Option<usize>) -> Result<LabeledGraph> {
    let mut lexer = Lexer::new(text);
    let mut builder: Option<Builder> = fixed_n.map(|n| Builder::new(Some(n)));
    loop {
        lexer.skip_blank();
        let (line, col) = lexer.pos();
        match lexer.peek() {
            None => break,
            Some('(') => {
                lexer.bump();
                lexer.skip_spaces();
                let u = lexer.number()?;
                lexer.skip_spaces();
                lexer.expect(',')?;
                lexer.skip_spaces();
                let v = lexer.number()?;
                lexer.skip_spaces();
                lexer.expect(')')?;
                builder.get_or_insert_with(|| Builder::new(None)).edge(u, v, line)?;
            }
            Some('n') if builder.is_none() => {
                lexer.bump();
                lexer.expect('=')?;
                let (n, c) = lexer.number()?;
                builder = Some(Builder::new(Some(parse_header(&n.to_string(), line, c)?)));
            }
            Some(ch) => {
                return Err(Error::parse(line, col, format!("unexpected {ch:?}; expected `(u,v)`")));
            }
        }
    }
    let (line, _) = lexer.pos();
    builder.unwrap_or_else(|| Builder::new(None)).finish(line)
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.chars().peekable(),
            line: 1,
            col: 1,
        }
    }

    fn pos(&self) -> (usize, usize) {
        (self.line, self.col)
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_spaces(&mut self) {
        while matches!(self.peek(), Some(c) if c == ' ' || c == '\t') {
            self.bump();
        }
    }

    fn skip_blank(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() || c == '&' || c == '\\' {
                self.bump();
            } else if c == '#' {
                while !matches!(self.peek(), None | Some('\n')) {
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        let (line, col) = self.pos();
        match self.bump() {
            Some(c) if c == want => Ok(()),
            Some(c) => Err(Error::parse(line, col, format!("expected {want:?}, found {c:?}"))),
            None => Err(Error::parse(line, col, format!("expected {want:?}, found end of input"))),
        }
    }

    /// A positive integer and the column it starts at.
    fn number(&mut self) -> Result<(u64, usize)> {
        let (line, col) = self.pos();
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.bump();
        }
        if digits.is_empty() {
            return Err(Error::parse(line, col, "expected a vertex number"));
        }
        let value = digits
            .parse()
            .map_err(|_| Error::parse(line, col, "vertex number too large"))?;
        Ok((value, col))
    }
}

/// Parses `n:u-v,u-v,...` (1-indexed).
pub fn parse_compact(text: &str) -> Result<Graph> {
    let text = text.trim();
    let (head, body) = text
        .split_once(':')
        .ok_or_else(|| Error::parse(1, 1, "expected `n:` prefix"))?;
    let n = parse_header(head, 1, 1)?;
    let mut edges = Vec::new();
    let mut col = head.len() + 2;
    if !body.is_empty() {
        for item in body.split(',') {
            let bad = || Error::parse(1, col, format!("bad edge {item:?}"));
            let (u, v) = item.split_once('-').ok_or_else(bad)?;
            let u: usize = u.parse().map_err(|_| bad())?;
            let v: usize = v.parse().map_err(|_| bad())?;
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::parse(1, col, format!("edge {item:?} out of range 1..={n}")));
            }
            if u == v {
                return Err(Error::parse(1, col, format!("self-pair {item:?}")));
            }
            edges.push((u - 1, v - 1));
            col += item.len() + 1;
        }
    }
    Graph::from_edges(n, &edges)
}

impl Graph {
    /// `n=<n>` header plus sorted 1-indexed edges, one per line.
    pub fn to_adjlist(&self) -> String {
        let mut out = format!("n={}\n", self.n());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{} {}", u + 1, v + 1);
        }
        out
    }

    /// Single-line `n:u-v,...` form (1-indexed, sorted edges).
    pub fn to_compact(&self) -> String {
        let mut out = format!("{}:", self.n());
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{}-{}", u + 1, v + 1);
        }
        out
    }

    /// `(u,v)` tokens, 1-indexed.
    pub fn to_pairs(&self) -> String {
        let tokens: Vec<String> = self.edges().map(|(u, v)| format!("({},{})", u + 1, v + 1)).collect();
        tokens.join(" ")
    }
}
