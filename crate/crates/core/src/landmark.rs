//! Named networks and landmark tables.
//!
//! A network file lists nodes and undirected links, one per line:
//!
//! ```text
//! # comment
//! node "Field 1"
//! node depot
//! link "Field 1" depot
//! ```
//!
//! Names are bare words or double-quoted strings (`\"` and `\\` escape inside
//! quotes). `#` outside quotes starts a comment. See `docs/network-format.md`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::closed_form::{closed_form_basis, TheoremCase};
use crate::graph::{Graph, GraphError, Vertex};
use crate::resolver::{
    check_resolving, metric_dimension_oracle_with, representation, OracleConfig, Resolution,
    ResolveError,
};
use crate::theta::{detect_theta, ThetaParams};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unknown keyword `{0}` (expected `node` or `link`)")]
    UnknownKeyword(String),
    #[error("`{keyword}` takes {expected} name(s), found {found}")]
    Arity {
        keyword: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("unterminated quoted name")]
    UnterminatedQuote,
    #[error("invalid escape `\\{0}` in quoted name")]
    BadEscape(char),
    #[error("quote inside a bare name")]
    StrayQuote,
    #[error("empty node name")]
    EmptyName,
    #[error("node `{0}` is declared twice")]
    DuplicateNode(String),
    #[error("link names undeclared node `{0}`")]
    UnknownNode(String),
    #[error("link joins `{0}` to itself")]
    SelfLink(String),
    #[error("link between `{0}` and `{1}` is listed twice")]
    DuplicateLink(String, String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

/// Nodes in declaration order and links between declared names.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct NetworkSpec {
    pub nodes: Vec<String>,
    pub links: Vec<(String, String)>,
}

fn tokenize(line: &str) -> Result<Vec<String>, ParseErrorKind> {
    let mut tokens = Vec::new();
    let mut chars = line.chars().peekable();
    loop {
        while chars.next_if(|c| c.is_whitespace()).is_some() {}
        match chars.peek() {
            None | Some('#') => break,
            Some('"') => {
                chars.next();
                let mut tok = String::new();
                loop {
                    match chars.next() {
                        None => return Err(ParseErrorKind::UnterminatedQuote),
                        Some('"') => break,
                        Some('\\') => match chars.next() {
                            Some(c @ ('"' | '\\')) => tok.push(c),
                            Some(c) => return Err(ParseErrorKind::BadEscape(c)),
                            None => return Err(ParseErrorKind::UnterminatedQuote),
                        },
                        Some(c) => tok.push(c),
                    }
                }
                if chars
                    .peek()
                    .is_some_and(|c| !c.is_whitespace() && *c != '#')
                {
                    return Err(ParseErrorKind::StrayQuote);
                }
                tokens.push(tok);
            }
            Some(_) => {
                let mut tok = String::new();
                while let Some(c) = chars.next_if(|c| !c.is_whitespace() && *c != '#') {
                    if c == '"' {
                        return Err(ParseErrorKind::StrayQuote);
                    }
                    tok.push(c);
                }
                tokens.push(tok);
            }
        }
    }
    Ok(tokens)
}

/// Parse the network text format.
pub fn parse_network(text: &str) -> Result<NetworkSpec, ParseError> {
    let mut spec = NetworkSpec::default();
    let mut declared = HashSet::new();
    let mut linked = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |kind| ParseError { line, kind };
        let tokens = tokenize(raw).map_err(err)?;
        let Some((keyword, names)) = tokens.split_first() else {
            continue;
        };
        let arity = |keyword, expected| {
            if names.len() == expected {
                Ok(())
            } else {
                Err(err(ParseErrorKind::Arity {
                    keyword,
                    expected,
                    found: names.len(),
                }))
            }
        };
        if names.iter().any(String::is_empty) {
            return Err(err(ParseErrorKind::EmptyName));
        }
        match keyword.as_str() {
            "node" => {
                arity("node", 1)?;
                let name = &names[0];
                if !declared.insert(name.clone()) {
                    return Err(err(ParseErrorKind::DuplicateNode(name.clone())));
                }
                spec.nodes.push(name.clone());
            }
            "link" => {
                arity("link", 2)?;
                let (a, b) = (&names[0], &names[1]);
                for name in [a, b] {
                    if !declared.contains(name) {
                        return Err(err(ParseErrorKind::UnknownNode(name.clone())));
                    }
                }
                if a == b {
                    return Err(err(ParseErrorKind::SelfLink(a.clone())));
                }
                let key = if a < b { (a, b) } else { (b, a) };
                if !linked.insert((key.0.clone(), key.1.clone())) {
                    return Err(err(ParseErrorKind::DuplicateLink(a.clone(), b.clone())));
                }
                spec.links.push((a.clone(), b.clone()));
            }
            other => return Err(err(ParseErrorKind::UnknownKeyword(other.to_string()))),
        }
    }
    Ok(spec)
}

fn needs_quotes(name: &str) -> bool {
    name.is_empty()
        || name
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '"' | '#' | '\\'))
}

fn write_name(out: &mut String, name: &str) {
    if needs_quotes(name) {
        out.push('"');
        for c in name.chars() {
            if matches!(c, '"' | '\\') {
                out.push('\\');
            }
            out.push(c);
        }
        out.push('"');
    } else {
        out.push_str(name);
    }
}

/// Render a spec in the text format; [`parse_network`] reads it back.
pub fn emit_network(spec: &NetworkSpec) -> String {
    let mut out = String::new();
    for name in &spec.nodes {
        out.push_str("node ");
        write_name(&mut out, name);
        out.push('\n');
    }
    for (a, b) in &spec.links {
        out.push_str("link ");
        write_name(&mut out, a);
        out.push(' ');
        write_name(&mut out, b);
        out.push('\n');
    }
    out
}

impl NetworkSpec {
    /// Vertex label of each node: declaration index plus one.
    pub fn index(&self) -> HashMap<&str, Vertex> {
        self.nodes
            .iter()
            .enumerate()
            .map(|(i, name)| (name.as_str(), i + 1))
            .collect()
    }

    /// Graph on `1..=nodes.len()`. Panics on links to undeclared names, which
    /// [`parse_network`] never produces.
    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        let index = self.index();
        let label = |name: &String| {
            *index
                .get(name.as_str())
                .unwrap_or_else(|| panic!("link names undeclared node `{name}`"))
        };
        Graph::new(
            self.nodes.len(),
            self.links.iter().map(|(a, b)| (label(a), label(b))),
        )
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.nodes[v - 1]
    }
}

/// How a landmark set was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LandmarkMethod {
    ClosedForm {
        case: TheoremCase,
        /// The theta reading of the network the formula was applied to.
        params: ThetaParams,
    },
    Oracle,
}

impl fmt::Display for LandmarkMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LandmarkMethod::ClosedForm { case, params } => {
                write!(f, "closed-form {case} on {params}")
            }
            LandmarkMethod::Oracle => f.write_str("oracle"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LandmarkTable {
    /// Landmark names in node declaration order.
    pub landmarks: Vec<String>,
    /// Every node with its distances to the landmarks, in declaration order.
    pub codes: Vec<(String, Vec<u32>)>,
    pub method: LandmarkMethod,
}

impl LandmarkTable {
    pub fn code_of(&self, name: &str) -> Option<&[u32]> {
        self.codes
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, c)| c.as_slice())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LandmarkError {
    #[error("network has no nodes")]
    Empty,
    #[error("network is disconnected")]
    Disconnected,
    #[error("network has {n} nodes and is not a theta graph; the oracle accepts at most {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("codes of `{0}` and `{1}` coincide")]
    CodesCollide(String, String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn assign_landmarks(spec: &NetworkSpec) -> Result<LandmarkTable, LandmarkError> {
    assign_landmarks_with(spec, &OracleConfig::default())
}

/// Closed-form basis when the network is a theta graph, oracle otherwise.
pub fn assign_landmarks_with(
    spec: &NetworkSpec,
    oracle: &OracleConfig,
) -> Result<LandmarkTable, LandmarkError> {
    if spec.nodes.is_empty() {
        return Err(LandmarkError::Empty);
    }
    let g = spec.to_graph()?;
    if !g.is_connected() {
        return Err(LandmarkError::Disconnected);
    }

    let closed_form = detect_theta(&g).and_then(|shape| {
        shape.embeddings().into_iter().find_map(|emb| {
            let result = closed_form_basis(emb.params);
            let back = emb.relabeling.inverse();
            let basis: Vec<Vertex> = result.basis.iter().map(|&w| back.apply(w)).collect();
            let ok = matches!(check_resolving(&g, &basis), Ok(Resolution::Resolving));
            ok.then_some((
                basis,
                LandmarkMethod::ClosedForm {
                    case: result.case,
                    params: emb.params,
                },
            ))
        })
    });

    let (mut basis, method) = match closed_form {
        Some(found) => found,
        None => {
            let best = metric_dimension_oracle_with(&g, oracle).map_err(|e| match e {
                ResolveError::OverCap { n, cap } => LandmarkError::TooLarge { n, cap },
                _ => LandmarkError::Disconnected,
            })?;
            (best.witness, LandmarkMethod::Oracle)
        }
    };
    basis.sort_unstable();

    let d = g.all_pairs();
    let codes: Vec<(String, Vec<u32>)> = g
        .vertices()
        .map(|v| {
            let rep = representation(d, v, &basis).expect("connected graph, valid landmarks");
            (spec.name(v).to_string(), rep.coords)
        })
        .collect();

    let mut seen: HashMap<&[u32], &str> = HashMap::new();
    for (name, code) in &codes {
        if let Some(prev) = seen.insert(code.as_slice(), name.as_str()) {
            return Err(LandmarkError::CodesCollide(prev.to_string(), name.clone()));
        }
    }

    Ok(LandmarkTable {
        landmarks: basis.iter().map(|&w| spec.name(w).to_string()).collect(),
        codes,
        method,
    })
}
