//! Closed-form metric bases for `C(p, q, r)`.
//!
//! Every valid triple falls into exactly one of the cases below, possibly after exchanging the outer paths. Each case fixes a
//! landmark set `W` given by index formulas and a predicted dimension of 2
//! or 3, and most cases come with a partition of the vertices into cells
//! together with a per-cell formula for the distance vector. The partition
//! tables live in [`tables`]; the sweep treats them as claims and checks
//! them against breadth-first search.
//!
//! Dispatch order:
//!
//! 1. `p = 0` or `r = 0`: hub-edge case, after moving the empty path to `r`.
//! 2. `p = r`: the symmetric case, split on `q - r`.
//! 3. Otherwise exchange outer paths so that `p > r`, then split on `q`
//!    against `p`: `q > p` (T1), `q = p` (T2), `q < p` (T3).

pub mod tables;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::Vertex;
use crate::theta::{swap_isomorphism, ThetaParams};

pub use tables::{
    formula_representation, partition_index, table_fidelity, Table, TableError, TableMismatch,
};

/// Case of the closed-form analysis governing a triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseTag {
    #[serde(rename = "ZeroPath-P1")]
    ZeroPathP1,
    #[serde(rename = "ZeroPath-P2")]
    ZeroPathP2,
    #[serde(rename = "T1-P1")]
    T1P1,
    #[serde(rename = "T1-P2")]
    T1P2,
    #[serde(rename = "T1-P3")]
    T1P3,
    #[serde(rename = "T2-P1")]
    T2P1,
    #[serde(rename = "T2-P2")]
    T2P2,
    #[serde(rename = "T2-P3")]
    T2P3,
    #[serde(rename = "T3-P1")]
    T3P1,
    #[serde(rename = "T3-P2")]
    T3P2,
    #[serde(rename = "T3-P3")]
    T3P3,
    #[serde(rename = "T4-P1")]
    T4P1,
    #[serde(rename = "T4-P2")]
    T4P2,
    #[serde(rename = "T4-P3a")]
    T4P3a,
    #[serde(rename = "T4-P3b")]
    T4P3b,
}

impl CaseTag {
    pub const ALL: [CaseTag; 15] = [
        CaseTag::ZeroPathP1,
        CaseTag::ZeroPathP2,
        CaseTag::T1P1,
        CaseTag::T1P2,
        CaseTag::T1P3,
        CaseTag::T2P1,
        CaseTag::T2P2,
        CaseTag::T2P3,
        CaseTag::T3P1,
        CaseTag::T3P2,
        CaseTag::T3P3,
        CaseTag::T4P1,
        CaseTag::T4P2,
        CaseTag::T4P3a,
        CaseTag::T4P3b,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::ZeroPathP1 => "ZeroPath-P1",
            CaseTag::ZeroPathP2 => "ZeroPath-P2",
            CaseTag::T1P1 => "T1-P1",
            CaseTag::T1P2 => "T1-P2",
            CaseTag::T1P3 => "T1-P3",
            CaseTag::T2P1 => "T2-P1",
            CaseTag::T2P2 => "T2-P2",
            CaseTag::T2P3 => "T2-P3",
            CaseTag::T3P1 => "T3-P1",
            CaseTag::T3P2 => "T3-P2",
            CaseTag::T3P3 => "T3-P3",
            CaseTag::T4P1 => "T4-P1",
            CaseTag::T4P2 => "T4-P2",
            CaseTag::T4P3a => "T4-P3a",
            CaseTag::T4P3b => "T4-P3b",
        }
    }

    /// Metric dimension the case predicts.
    pub fn dimension(&self) -> usize {
        match self {
            CaseTag::T2P2 | CaseTag::T4P1 => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownCaseTag(pub String);

impl fmt::Display for UnknownCaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown case tag `{}`", self.0)
    }
}

impl std::error::Error for UnknownCaseTag {}

impl FromStr for CaseTag {
    type Err = UnknownCaseTag;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CaseTag::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownCaseTag(s.to_string()))
    }
}

/// Case tag plus whether the outer paths were exchanged before dispatch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TheoremCase {
    pub tag: CaseTag,
    pub swapped: bool,
}

impl fmt::Display for TheoremCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.swapped {
            write!(f, "{} (swapped)", self.tag)
        } else {
            write!(f, "{}", self.tag)
        }
    }
}

pub fn dispatch_case(params: ThetaParams) -> TheoremCase {
    let (p, q, r) = params.as_tuple();
    if p == 0 || r == 0 {
        let (outer, swapped) = if p == 0 { (r, true) } else { (p, false) };
        let tag = if outer == 1 {
            CaseTag::ZeroPathP1
        } else {
            CaseTag::ZeroPathP2
        };
        return TheoremCase { tag, swapped };
    }

    let gap = |q: usize, r: usize| q as i64 - r as i64;
    if p == r {
        let tag = match gap(q, r) {
            2 | 4 => CaseTag::T4P1,
            d if d > 2 => CaseTag::T4P2,
            1 => CaseTag::T4P3a,
            _ => CaseTag::T4P3b,
        };
        return TheoremCase {
            tag,
            swapped: false,
        };
    }

    let swapped = p < r;
    let (p, r) = if swapped { (r, p) } else { (p, r) };
    let d = gap(q, r);
    let tag = if q > p {
        if d == 2 {
            CaseTag::T1P1
        } else if p - r == 1 {
            CaseTag::T1P2
        } else {
            CaseTag::T1P3
        }
    } else if q == p {
        match d {
            d if d < 2 => CaseTag::T2P1,
            2 => CaseTag::T2P2,
            _ => CaseTag::T2P3,
        }
    } else {
        match d {
            d if d < 2 => CaseTag::T3P1,
            2 => CaseTag::T3P2,
            _ => CaseTag::T3P3,
        }
    };
    TheoremCase { tag, swapped }
}

/// The triple the case formulas are evaluated in.
pub fn working_params(params: ThetaParams, case: TheoremCase) -> ThetaParams {
    if case.swapped {
        params.swapped()
    } else {
        params
    }
}

/// Landmark indices exactly as the case formula writes them, in the working
/// labelling. May repeat an index when the formula degenerates.
pub fn formula_landmarks(tag: CaseTag, working: ThetaParams) -> Vec<Vertex> {
    let (p, q, r) = working.as_tuple();
    let s = (p + r) / 2;
    match tag {
        CaseTag::ZeroPathP1 => vec![1, 2],
        CaseTag::ZeroPathP2 => vec![1, p / 2 + 1],
        CaseTag::T1P1 | CaseTag::T3P2 | CaseTag::T4P2 => vec![1, p + 2],
        CaseTag::T1P2 | CaseTag::T1P3 | CaseTag::T2P3 | CaseTag::T3P3 => vec![1, s + 1],
        CaseTag::T2P1 => vec![1, p],
        CaseTag::T2P2 => vec![1, 2, p + 2],
        CaseTag::T3P1 | CaseTag::T4P3a | CaseTag::T4P3b => vec![1, (p + q) / 2],
        CaseTag::T4P1 => vec![1, 2, (q - r) / 2 + p + 1],
    }
}

/// The case's landmark formula pulled back to the caller's labelling, with
/// repeats kept.
pub fn literal_basis(params: ThetaParams) -> Vec<Vertex> {
    let case = dispatch_case(params);
    let working = working_params(params, case);
    let landmarks = formula_landmarks(case.tag, working);
    if case.swapped {
        let back = swap_isomorphism(working);
        landmarks.into_iter().map(|v| back.apply(v)).collect()
    } else {
        landmarks
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormResult {
    pub case: TheoremCase,
    /// Landmarks in formula order, in the caller's labelling.
    pub basis: Vec<Vertex>,
    pub dimension: usize,
    /// The formula named the same vertex twice and a repeat was replaced by
    /// the smallest unused label.
    pub repaired: bool,
}

impl ClosedFormResult {
    pub fn sorted_basis(&self) -> Vec<Vertex> {
        let mut b = self.basis.clone();
        b.sort_unstable();
        b
    }
}

/// Closed-form metric basis of `C(p, q, r)`.
///
/// The only triple where the formula repeats a landmark is `C(1, 2, 1)`
/// (symmetric case, `q - r = 1`, where `⌊(p+q)/2⌋ = 1`); there the repeat is
/// replaced so the basis keeps the predicted size.
pub fn closed_form_basis(params: ThetaParams) -> ClosedFormResult {
    let case = dispatch_case(params);
    let literal = literal_basis(params);
    let mut used = vec![false; params.n() + 1];
    let mut basis = Vec::with_capacity(literal.len());
    let mut repaired = false;
    for v in literal {
        if used[v] {
            let fresh = (1..=params.n())
                .find(|&u| !used[u])
                .expect("basis is smaller than the vertex set");
            used[fresh] = true;
            basis.push(fresh);
            repaired = true;
        } else {
            used[v] = true;
            basis.push(v);
        }
    }
    ClosedFormResult {
        case,
        dimension: basis.len(),
        basis,
        repaired,
    }
}

/// Predicted metric dimension via case dispatch.
pub fn dimension_formula(params: ThetaParams) -> usize {
    dispatch_case(params).tag.dimension()
}

/// Predicted metric dimension from the theta path lengths alone: 3 when the
/// three lengths are all equal, or two are equal and the third exceeds them
/// by exactly two; otherwise 2.
pub fn dimension_from_lengths(a: usize, b: usize, c: usize) -> usize {
    let mut l = [a, b, c];
    l.sort_unstable();
    let [x, y, z] = l;
    if x == y && (z == x || z == x + 2) {
        3
    } else {
        2
    }
}
