//! Text and JSON file formats: polynomials and ideals, matrices, graphs,
//! Betti tables and monomial orders.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use pfrees_core::covergraph::LabeledGraph;
use pfrees_core::matalg::{PolyMatrix, SkewMatrix};
use pfrees_core::resolution::BettiTable;
use pfrees_core::{Monomial, MonomialOrder, OrderKind, Polynomial, Ring, RingDescriptor, VarBlock};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const SCHEMA: u32 = 1;

/// One term: numerator, denominator (decimal strings) and exponents.
pub type TermJson = (String, String, Vec<u32>);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub ring: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<String>>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub schema: u32,
    pub ring: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<String>>,
    pub gens: Vec<Vec<TermJson>>,
}

fn block_name(b: VarBlock) -> &'static str {
    match b {
        VarBlock::X => "X",
        VarBlock::Y => "Y",
        VarBlock::E => "E",
    }
}

fn blocks_of(ring: &Ring) -> Option<Vec<String>> {
    if ring.blocks().iter().all(|&b| b == VarBlock::X) {
        None
    } else {
        Some(ring.blocks().iter().map(|&b| block_name(b).to_string()).collect())
    }
}

pub fn ring_from_json(names: &[String], blocks: Option<&[String]>) -> Result<Ring, CliError> {
    let blocks = match blocks {
        None => vec![VarBlock::X; names.len()],
        Some(bs) => bs
            .iter()
            .map(|b| match b.as_str() {
                "X" => Ok(VarBlock::X),
                "Y" => Ok(VarBlock::Y),
                "E" => Ok(VarBlock::E),
                other => Err(CliError::Parse(format!("unknown block `{other}`"))),
            })
            .collect::<Result<_, _>>()?,
    };
    Ok(RingDescriptor::new(names.to_vec(), blocks)?)
}

fn terms_to_json(p: &Polynomial) -> Vec<TermJson> {
    p.terms().iter().map(|(c, m)| (c.numer().to_string(), c.denom().to_string(), m.exps().to_vec())).collect()
}

fn terms_from_json(ring: &Ring, terms: &[TermJson]) -> Result<Polynomial, CliError> {
    let mut out = Vec::with_capacity(terms.len());
    for (n, d, e) in terms {
        let n: BigInt = n.parse().map_err(|_| CliError::Parse(format!("bad numerator `{n}`")))?;
        let d: BigInt = d.parse().map_err(|_| CliError::Parse(format!("bad denominator `{d}`")))?;
        if d == BigInt::from(0) {
            return Err(CliError::Parse(String::from("zero denominator")));
        }
        if e.len() != ring.nvars() {
            return Err(CliError::Parse(format!("exponent vector of length {} for {} variables", e.len(), ring.nvars())));
        }
        out.push((BigRational::new(n, d), Monomial::new(ring, e.clone())));
    }
    Ok(Polynomial::from_terms(ring, out))
}

pub fn poly_to_json(p: &Polynomial) -> PolyJson {
    PolyJson { ring: p.ring().names().to_vec(), blocks: blocks_of(p.ring()), terms: terms_to_json(p) }
}

pub fn poly_from_json(j: &PolyJson) -> Result<Polynomial, CliError> {
    let ring = ring_from_json(&j.ring, j.blocks.as_deref())?;
    terms_from_json(&ring, &j.terms)
}

pub fn ideal_to_json(ring: &Ring, gens: &[Polynomial]) -> IdealJson {
    IdealJson {
        schema: SCHEMA,
        ring: ring.names().to_vec(),
        blocks: blocks_of(ring),
        gens: gens.iter().map(terms_to_json).collect(),
    }
}

pub fn ideal_from_json(j: &IdealJson) -> Result<(Ring, Vec<Polynomial>), CliError> {
    let ring = ring_from_json(&j.ring, j.blocks.as_deref())?;
    let gens = j.gens.iter().map(|t| terms_from_json(&ring, t)).collect::<Result<_, _>>()?;
    Ok((ring, gens))
}

/// Identifiers in order of first appearance.
fn identifiers(text: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let b = text.as_bytes();
    let mut i = 0;
    while i < b.len() {
        if b[i].is_ascii_alphabetic() || b[i] == b'_' {
            let s = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            let id = &text[s..i];
            if !out.iter().any(|o| o == id) {
                out.push(id.to_string());
            }
        } else if b[i].is_ascii_digit() {
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
        } else {
            i += 1;
        }
    }
    out
}

/// Matrix text: rows separated by `;` or newlines, entries by whitespace or
/// commas, each entry a polynomial without spaces. `#` starts a comment.
/// Variables are the identifiers in order of first appearance.
pub fn parse_matrix(text: &str) -> Result<PolyMatrix, CliError> {
    let body: String = text.lines().map(|l| l.split('#').next().unwrap_or("")).collect::<Vec<_>>().join("\n");
    let rows: Vec<Vec<&str>> = body
        .split([';', '\n'])
        .map(|r| r.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()).collect::<Vec<_>>())
        .filter(|r| !r.is_empty())
        .collect();
    let names = identifiers(&body);
    let ring = RingDescriptor::new(names.clone(), vec![VarBlock::X; names.len()])?;
    let cols = rows.first().map_or(0, |r| r.len());
    if rows.iter().any(|r| r.len() != cols) {
        return Err(CliError::Parse(String::from("rows of different lengths")));
    }
    let mut entries = Vec::with_capacity(rows.len() * cols);
    for r in &rows {
        for e in r {
            entries.push(Polynomial::parse(&ring, e)?);
        }
    }
    Ok(PolyMatrix::new(&ring, rows.len(), cols, entries)?)
}

pub fn parse_skew_matrix(text: &str) -> Result<SkewMatrix, CliError> {
    Ok(SkewMatrix::new(parse_matrix(text)?)?)
}

pub fn format_matrix(m: &PolyMatrix) -> String {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|p| p.to_string().replace(' ', "")).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(";\n")
}

fn parse_label(s: &str) -> Result<usize, CliError> {
    let inner = s.trim().strip_prefix('(').and_then(|t| t.strip_suffix(')'));
    let parts: Vec<&str> = inner.map(|t| t.split_whitespace().collect()).unwrap_or_default();
    match parts.as_slice() {
        [a, b] => {
            let a: usize = a.parse().map_err(|_| CliError::Parse(format!("bad label `{s}`")))?;
            let b: usize = b.parse().map_err(|_| CliError::Parse(format!("bad label `{s}`")))?;
            if b != a + 1 {
                return Err(CliError::Parse(format!("label `{s}` is not of the form (i i+1)")));
            }
            Ok(a)
        }
        _ => Err(CliError::Parse(format!("bad label `{s}`"))),
    }
}

/// One edge per line, `(i i+1) -- (j j+1)`. A line `n = N` fixes the
/// number of labels; otherwise it is the largest label end.
pub fn parse_edge_list(text: &str) -> Result<LabeledGraph, CliError> {
    let mut edges = Vec::new();
    let mut n = None;
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(v) = line.strip_prefix("n").map(str::trim).and_then(|t| t.strip_prefix('=')) {
            n = Some(v.trim().parse::<usize>().map_err(|_| CliError::Parse(format!("bad line `{line}`")))?);
            continue;
        }
        let (a, b) = line.split_once("--").ok_or_else(|| CliError::Parse(format!("bad edge `{line}`")))?;
        edges.push((parse_label(a)?, parse_label(b)?));
    }
    let n = n.unwrap_or_else(|| edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(1));
    Ok(LabeledGraph::new(n, &edges)?)
}

pub fn format_edge_list(g: &LabeledGraph) -> String {
    let mut s = format!("n = {}\n", g.n());
    for (a, b) in g.edges() {
        s.push_str(&format!("({} {}) -- ({} {})\n", a, a + 1, b, b + 1));
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[[usize; 2]; 2]>,
}

pub fn graph_to_json(g: &LabeledGraph) -> GraphJson {
    GraphJson { n: g.n(), edges: g.edges().into_iter().map(|(a, b)| [[a, a + 1], [b, b + 1]]).collect() }
}

pub fn graph_from_json(j: &GraphJson) -> Result<LabeledGraph, CliError> {
    let mut edges = Vec::with_capacity(j.edges.len());
    for [[a, a1], [b, b1]] in &j.edges {
        if *a1 != a + 1 || *b1 != b + 1 {
            return Err(CliError::Parse(String::from("labels must be of the form (i i+1)")));
        }
        edges.push((*a, *b));
    }
    Ok(LabeledGraph::new(j.n, &edges)?)
}

/// Edge-list text, or JSON when the text starts with `{`.
pub fn parse_graph(text: &str) -> Result<LabeledGraph, CliError> {
    if text.trim_start().starts_with('{') {
        let j: GraphJson = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        graph_from_json(&j)
    } else {
        parse_edge_list(text)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: u32,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub schema: u32,
    pub entries: Vec<BettiEntry>,
}

pub fn betti_to_json(b: &BettiTable) -> BettiJson {
    BettiJson {
        schema: SCHEMA,
        entries: b.entries.iter().map(|(&(i, j), &rank)| BettiEntry { i, j, rank }).collect(),
    }
}

pub fn betti_from_json(j: &BettiJson) -> BettiTable {
    BettiTable { entries: j.entries.iter().filter(|e| e.rank > 0).map(|e| ((e.i, e.j), e.rank)).collect::<BTreeMap<_, _>>() }
}

/// `kind` or `kind:a>b>c`; listed variables come first, the rest follow in
/// declared order.
pub fn parse_order(spec: &str, ring: &Ring) -> Result<MonomialOrder, CliError> {
    let (kind, vars) = match spec.split_once(':') {
        Some((k, v)) => (k, Some(v)),
        None => (spec, None),
    };
    let kind = match kind.trim() {
        "lex" => OrderKind::Lex,
        "grlex" => OrderKind::GrLex,
        "grevlex" => OrderKind::GRevLex,
        other => return Err(CliError::Usage(format!("unknown order `{other}`"))),
    };
    let mut priority = Vec::with_capacity(ring.nvars());
    if let Some(v) = vars {
        for name in v.split('>').map(str::trim).filter(|s| !s.is_empty()) {
            let i = ring.index_of(name).ok_or_else(|| CliError::Usage(format!("unknown variable `{name}`")))?;
            if priority.contains(&i) {
                return Err(CliError::Usage(format!("variable `{name}` listed twice")));
            }
            priority.push(i);
        }
    }
    for v in 0..ring.nvars() {
        if !priority.contains(&v) {
            priority.push(v);
        }
    }
    Ok(MonomialOrder::with_priority(kind, priority)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderJson {
    pub kind: String,
    /// Variable names, largest first.
    pub priority: Vec<String>,
}

pub fn order_to_json(o: &MonomialOrder, ring: &Ring) -> Result<OrderJson, CliError> {
    if o.blocks().is_some() {
        return Err(CliError::Internal(String::from("block orders are not serialized")));
    }
    Ok(OrderJson { kind: o.kind().name().to_string(), priority: o.priority().iter().map(|&v| ring.name(v).to_string()).collect() })
}

pub fn order_from_json(j: &OrderJson, ring: &Ring) -> Result<MonomialOrder, CliError> {
    parse_order(&format!("{}:{}", j.kind, j.priority.join(">")), ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use pfrees_core::ring_make;

    #[test]
    fn poly_json_round_trip() {
        let ring = ring_make(&["x1_2", "y1"], 1, 1, 0).unwrap();
        let p = Polynomial::parse(&ring, "3/7*x1_2^2*y1 - 123456789012345678901234567890*y1").unwrap();
        let j = poly_to_json(&p);
        let text = serde_json::to_string(&j).unwrap();
        let back = poly_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, p);
        assert_eq!(back.ring().blocks(), p.ring().blocks());
    }

    #[test]
    fn matrix_text() {
        let m = parse_skew_matrix("0 a b; -a 0 c; -b -c 0").unwrap();
        assert_eq!(m.ring().names(), ["a", "b", "c"]);
        let again = parse_skew_matrix(&format_matrix(m.as_matrix())).unwrap();
        assert_eq!(again, m);
        assert_eq!(parse_matrix("").unwrap().rows(), 0);
        assert!(parse_matrix("0 a; b").is_err());
        assert!(parse_skew_matrix("0 a; a 0").is_err());
    }

    #[test]
    fn edge_lists() {
        let g = parse_edge_list("(1 2) -- (2 3)\n(1 2) -- (4 5)\n# c\n(3 4) -- (4 5)\n").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(parse_edge_list(&format_edge_list(&g)).unwrap(), g);
        let j = serde_json::to_string(&graph_to_json(&g)).unwrap();
        assert_eq!(parse_graph(&j).unwrap(), g);
        assert!(parse_edge_list("(1 3) -- (2 3)").is_err());
    }

    #[test]
    fn orders() {
        let ring = ring_make(&["a", "b", "c"], 3, 0, 0).unwrap();
        let o = parse_order("grlex:c>a", &ring).unwrap();
        assert_eq!(o.priority(), [2, 0, 1]);
        assert_eq!(order_from_json(&order_to_json(&o, &ring).unwrap(), &ring).unwrap(), o);
        assert!(parse_order("weird", &ring).is_err());
        assert!(parse_order("lex:d", &ring).is_err());
    }
}
