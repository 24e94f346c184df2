//! Metric dimension of theta graphs `C(p, q, r)`: graph construction,
//! resolving-set checks, a brute-force oracle, the closed-form case analysis
//! and its partition tables, a verification sweep, and landmark assignment
//! for small networks.

pub mod closed_form;
pub mod graph;
pub mod landmark;
pub mod resolver;
pub mod sweep;
pub mod theta;

pub use closed_form::{
    closed_form_basis, dimension_formula, dimension_from_lengths, dispatch_case, literal_basis,
    CaseTag, ClosedFormResult, TheoremCase,
};
pub use graph::{DistanceMatrix, Graph, GraphError, Vertex};
pub use landmark::{
    assign_landmarks, assign_landmarks_with, emit_network, parse_network, LandmarkError,
    LandmarkMethod, LandmarkTable, NetworkSpec, ParseError,
};
pub use resolver::{
    check_resolving, is_minimal_resolving, is_resolving, metric_dimension_oracle,
    metric_dimension_oracle_with, BasisResult, OracleConfig, Resolution, ResolveError,
    DEFAULT_VERTEX_CAP,
};
pub use sweep::{
    emit_report, sweep, ReportFormat, SweepError, SweepOptions, SweepRecord, SweepReport,
};
pub use theta::{build_c, detect_theta, swap_isomorphism, ParamViolation, Relabeling, ThetaParams};
