//! Acceptance gate. Runs every criterion at its stated tolerance and time
//! budget, prints one PASS/FAIL line per criterion and exits non-zero if any
//! criterion fails.

use std::collections::HashSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use thetadim::closed_form::table_fidelity;
use thetadim::graph::families;
use thetadim::resolver::representation;
use thetadim::sweep::{sweep, SweepOptions};
use thetadim::{
    build_c, detect_theta, dispatch_case, is_minimal_resolving, is_resolving, literal_basis,
    metric_dimension_oracle, parse_network, swap_isomorphism, CaseTag, Graph, ThetaParams,
};

type Outcome = Result<String, String>;
type Designated = (CaseTag, (usize, usize, usize), &'static [usize]);
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn t(p: usize, q: usize, r: usize) -> ThetaParams {
    ThetaParams::new(p, q, r).expect("valid designated triple")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn counterexample() -> Outcome {
    let g = build_c(t(3, 7, 3));
    let best = metric_dimension_oracle(&g).map_err(|e| e.to_string())?;
    ensure(best.dimension == 3, || {
        format!("oracle dimension {}", best.dimension)
    })?;
    let w = [1, 2, 6];
    ensure(is_resolving(&g, &w) == Ok(true), || {
        "{1,2,6} does not resolve".into()
    })?;
    ensure(is_minimal_resolving(&g, &w) == Ok(true), || {
        "{1,2,6} is not minimal".into()
    })?;
    let mut pairs = 0;
    for a in 1..=g.n() {
        for b in a + 1..=g.n() {
            pairs += 1;
            ensure(is_resolving(&g, &[a, b]) == Ok(false), || {
                format!("{{{a},{b}}} resolves")
            })?;
        }
    }
    Ok(format!(
        "β(C(3,7,3)) = 3, {{1,2,6}} minimal, none of {pairs} pairs resolves"
    ))
}

fn closed_form_sweep() -> Outcome {
    let report = sweep(&SweepOptions::up_to(16)).map_err(|e| e.to_string())?;
    let s = report.summary;
    let mut failures = Vec::new();
    for rec in &report.records {
        if rec.formula_dim != rec.oracle_dim {
            failures.push(format!(
                "{}: formula {} oracle {} (witness {:?})",
                rec.params, rec.formula_dim, rec.oracle_dim, rec.oracle_witness
            ));
        }
        if !rec.basis_ok || rec.basis.len() != rec.formula_dim {
            failures.push(format!(
                "{}: basis {:?} fails, collision {:?}",
                rec.params, rec.basis, rec.basis_collision
            ));
        }
    }
    ensure(failures.is_empty(), || failures.join("; "))?;
    let literal: Vec<String> = report
        .records
        .iter()
        .filter(|r| !r.literal_basis_ok)
        .map(|r| {
            format!(
                "{} literal {:?} repaired to {:?}",
                r.params, r.literal_basis, r.basis
            )
        })
        .collect();
    Ok(format!(
        "{} triples, {} agreements, 0 basis failures; literal-formula defects: {}",
        s.records,
        s.agreements,
        if literal.is_empty() {
            "none".to_string()
        } else {
            literal.join(", ")
        }
    ))
}

fn family_anchors() -> Outcome {
    let mut checked = 0;
    for p in 2..=5 {
        for (a, b, c) in [(p, p, p), (p, p, p + 2), (p, p + 2, p)] {
            let params = ThetaParams::from_theta_lengths(a, b, c).map_err(|e| e.to_string())?;
            let best = metric_dimension_oracle(&build_c(params)).map_err(|e| e.to_string())?;
            ensure(best.dimension == 3, || {
                format!("Θ({a},{b},{c}) = {params}: oracle {}", best.dimension)
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} theta graphs, all β = 3"))
}

fn preliminaries() -> Outcome {
    let dim = |g: &Graph| {
        metric_dimension_oracle(g)
            .map(|b| b.dimension)
            .map_err(|e| e.to_string())
    };
    for n in 2..=10 {
        ensure(dim(&families::path(n))? == 1, || format!("path P{n}"))?;
    }
    for n in 3..=10 {
        ensure(dim(&families::cycle(n))? == 2, || format!("cycle C{n}"))?;
    }
    for n in 3..=7 {
        ensure(dim(&families::complete(n))? == n - 1, || {
            format!("complete K{n}")
        })?;
    }
    ensure(dim(&families::complete_bipartite(2, 3))? == 3, || {
        "K2,3".into()
    })?;
    Ok("paths 1, cycles 2, K_n n-1, K2,3 3".into())
}

/// One instance per case; the tables for two of them disagree with BFS at
/// the listed vertices, as recorded in docs/table-discrepancies.md.
const DESIGNATED: [Designated; 15] = [
    (CaseTag::ZeroPathP1, (1, 5, 0), &[5]),
    (CaseTag::ZeroPathP2, (4, 5, 0), &[]),
    (CaseTag::T1P1, (3, 4, 2), &[]),
    (CaseTag::T1P2, (3, 6, 2), &[]),
    (CaseTag::T1P3, (4, 7, 1), &[]),
    (CaseTag::T2P1, (4, 4, 3), &[]),
    (CaseTag::T2P2, (4, 4, 2), &[]),
    (CaseTag::T2P3, (5, 5, 1), &[]),
    (CaseTag::T3P1, (5, 3, 4), &[7, 8]),
    (CaseTag::T3P2, (6, 4, 2), &[]),
    (CaseTag::T3P3, (7, 5, 1), &[]),
    (CaseTag::T4P1, (3, 7, 3), &[]),
    (CaseTag::T4P2, (2, 7, 2), &[]),
    (CaseTag::T4P3a, (3, 4, 3), &[]),
    (CaseTag::T4P3b, (4, 3, 4), &[]),
];

fn table_fidelity_check() -> Outcome {
    let doc = std::fs::read_to_string(root().join("docs/table-discrepancies.md"))
        .map_err(|e| format!("docs/table-discrepancies.md: {e}"))?;
    let mut tags = HashSet::new();
    let mut divergent = Vec::new();
    for (tag, (p, q, r), expected) in DESIGNATED {
        let params = t(p, q, r);
        ensure(dispatch_case(params).tag == tag, || {
            format!("{params} dispatches to {}", dispatch_case(params))
        })?;
        tags.insert(tag);
        let found: Vec<usize> = table_fidelity(params).iter().map(|m| m.vertex).collect();
        ensure(found == expected, || {
            format!("{params} ({tag}): mismatches at {found:?}, recorded {expected:?}")
        })?;
        if !found.is_empty() {
            ensure(doc.contains(&params.to_string()), || {
                format!("{params} divergence is not documented")
            })?;
            divergent.push(format!("{params} {tag} at v{found:?}"));
        }
    }
    ensure(tags.len() == CaseTag::ALL.len(), || {
        "a case has no instance".into()
    })?;

    // Independent cross-check over every triple with n ≤ 16: a vertex not
    // flagged by table_fidelity must have a formula value equal to its BFS
    // representation with respect to the literal landmarks.
    let mut flagged = 0;
    for params in ThetaParams::enumerate(4, 16) {
        let g = build_c(params);
        let d = g.all_pairs();
        let case = dispatch_case(params);
        let landmarks = literal_basis(params);
        let bad: HashSet<usize> = table_fidelity(params).iter().map(|m| m.vertex).collect();
        flagged += bad.len();
        for v in g.vertices().filter(|v| !bad.contains(v)) {
            let formula = thetadim::closed_form::formula_representation(params, case, v)
                .map_err(|e| format!("{params} v{v}: {e}"))?;
            let bfs: Vec<i64> = landmarks
                .iter()
                .map(|&w| i64::from(d.get(v, w).expect("connected")))
                .collect();
            ensure(formula == bfs, || {
                format!("{params} v{v}: unflagged mismatch {formula:?} vs {bfs:?}")
            })?;
        }
    }
    Ok(format!(
        "15 cases covered; divergences recorded: {}; {flagged} flagged vertices over n ≤ 16",
        divergent.join(", ")
    ))
}

fn field_network() -> Outcome {
    let fixture = root().join("data/fields.net");
    let output = Command::new(env!("CARGO_BIN_EXE_thetadim"))
        .arg("landmarks")
        .arg(&fixture)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(output.status.success(), || {
        format!(
            "exit {:?}: {}",
            output.status.code(),
            String::from_utf8_lossy(&output.stderr)
        )
    })?;
    let text = String::from_utf8(output.stdout).map_err(|e| e.to_string())?;
    let landmarks: Vec<&str> = text
        .lines()
        .find_map(|l| l.strip_prefix("landmarks\t"))
        .ok_or("no landmarks line")?
        .split('\t')
        .collect();
    ensure(landmarks == ["Field 1", "Field 4"], || {
        format!("landmarks {landmarks:?}")
    })?;
    let codes: Vec<&str> = text
        .lines()
        .filter_map(|l| l.strip_prefix("code\t"))
        .filter_map(|l| l.split_once('\t').map(|(_, c)| c))
        .collect();
    let distinct: HashSet<&str> = codes.iter().copied().collect();
    ensure(codes.len() == 12 && distinct.len() == 12, || {
        format!("{} codes, {} distinct", codes.len(), distinct.len())
    })?;

    let spec = parse_network(&std::fs::read_to_string(&fixture).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let g = spec.to_graph().map_err(|e| e.to_string())?;
    let best = metric_dimension_oracle(&g).map_err(|e| e.to_string())?;
    ensure(best.dimension == 2 && best.exhausted_below == 1, || {
        format!("oracle dimension {}", best.dimension)
    })?;
    Ok("landmarks {Field 1, Field 4}, 12 distinct codes, no single landmark resolves".into())
}

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    (0u32..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).expect("valid edges")
    })
}

fn property_suites() -> Outcome {
    let mut graphs = 0;
    for n in 1..=5 {
        for g in all_graphs(n) {
            graphs += 1;
            let d = g.all_pairs();
            for u in g.vertices() {
                for v in g.vertices() {
                    let duv = d.get(u, v);
                    ensure(duv == d.get(v, u), || format!("asymmetric {g:?}"))?;
                    ensure((duv == Some(0)) == (u == v), || format!("identity {g:?}"))?;
                    for w in g.vertices() {
                        if let (Some(a), Some(b)) = (duv, d.get(v, w)) {
                            ensure(d.get(u, w).is_some_and(|c| c <= a + b), || {
                                format!("triangle inequality {g:?}")
                            })?;
                        }
                    }
                }
            }
        }
    }

    let mut supersets = 0;
    for params in ThetaParams::enumerate(4, 9) {
        let g = build_c(params);
        let n = g.n();
        for a in 1..=n {
            for b in a + 1..=n {
                if is_resolving(&g, &[a, b]) != Ok(true) {
                    continue;
                }
                for c in (1..=n).filter(|&c| c != a && c != b) {
                    supersets += 1;
                    ensure(is_resolving(&g, &[a, b, c]) == Ok(true), || {
                        format!("{params}: {{{a},{b}}} resolves but adding {c} does not")
                    })?;
                }
            }
        }
    }

    let mut thetas = 0;
    for params in ThetaParams::enumerate(4, 16) {
        thetas += 1;
        let (g, h) = (build_c(params), build_c(params.swapped()));
        let sigma = swap_isomorphism(params);
        ensure(sigma.is_isomorphism(&g, &h), || {
            format!("swap fails on {params}")
        })?;
        let shape = detect_theta(&g).ok_or_else(|| format!("{params} not detected"))?;
        let readings: Vec<ThetaParams> = shape.embeddings().iter().map(|e| e.params).collect();
        ensure(
            readings.contains(&params) || readings.contains(&params.swapped()),
            || format!("{params} read back as {readings:?}"),
        )?;
    }

    // representation sanity on the counterexample
    let g = build_c(t(3, 7, 3));
    let rep = representation(g.all_pairs(), 13, &[1, 2, 6]).map_err(|e| e.to_string())?;
    ensure(rep.coords == [4, 3, 5], || {
        format!("R(v13) = {:?}", rep.coords)
    })?;

    Ok(format!(
        "distance axioms on {graphs} graphs, {supersets} superset checks, swap and detection on {thetas} triples"
    ))
}

fn main() {
    let criteria: [Criterion; 7] = [
        (
            "1 counterexample reproduction",
            Duration::from_secs(1),
            counterexample,
        ),
        (
            "2 closed-form sweep n <= 16",
            Duration::from_secs(300),
            closed_form_sweep,
        ),
        (
            "3 known-family anchors",
            Duration::from_secs(30),
            family_anchors,
        ),
        (
            "4 preliminaries suite",
            Duration::from_secs(10),
            preliminaries,
        ),
        (
            "5 table fidelity",
            Duration::from_secs(10),
            table_fidelity_check,
        ),
        (
            "6 field network landmarks",
            Duration::from_secs(1),
            field_network,
        ),
        (
            "7 property suites",
            Duration::from_secs(60),
            property_suites,
        ),
    ];
    let mut failed = 0;
    for (name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > budget => {
                Err(format!("{detail}; took {elapsed:.2?}, budget {budget:?}"))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {name} [{elapsed:.2?}]: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name} [{elapsed:.2?}]: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 7 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
