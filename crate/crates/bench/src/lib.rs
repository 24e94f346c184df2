//! Shared inputs for the criterion benches.

use thetadim::ThetaParams;

/// Triples with dimension 2 and 3 and up to 18 vertices.
pub fn oracle_inputs() -> Vec<ThetaParams> {
    [(3, 7, 3), (4, 4, 2), (5, 3, 4), (5, 6, 5), (6, 6, 6)]
        .into_iter()
        .map(|(p, q, r)| ThetaParams::new(p, q, r).expect("valid bench triple"))
        .collect()
}

/// Every valid triple with `4 ≤ n ≤ max_n`.
pub fn all_triples(max_n: usize) -> Vec<ThetaParams> {
    ThetaParams::enumerate(4, max_n)
}
