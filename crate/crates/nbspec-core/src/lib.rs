//! Non-backtracking matrices of Erdős–Rényi graphs and their 2n×2n spectrum
//! operators.
//!
//! The crate samples G(n,p), builds the non-backtracking matrix `B` on
//! directed edges together with the block operators `H`, `H0` and their
//! rescaled forms, computes dense spectra, and evaluates every closed-form
//! quantity those operators admit: the per-eigenvalue quadratic pairs of the
//! partly averaged operator, its explicit left/right eigenvector matrices and
//! condition number, singular-value formulas for shifted resolvents, and the
//! concentration/radius bounds used to compare the random and derandomized
//! spectra.
//!
//! Modules mirror the pipeline:
//!
//! - [`rng`]: seeded, platform-stable random streams with per-trial splitting
//! - [`graph`]: G(n,p) sampling, degrees, directed-edge indexing, edge-list IO
//! - [`operators`]: `B`, `H`, `H0`, rescaled operators, and the
//!   spectrum-identity oracle relating `B` to `H`
//! - [`spectral`]: dense symmetric/general eigenvalue and singular-value
//!   kernels with fixed ordering contracts
//! - [`closed_form`]: every explicit formula (eigenvalue pairs, `Y`/`X`
//!   matrices, condition number, singular-value formula, lower-bound
//!   constants, concentration bounds)
//! - [`esd`]: empirical spectral measures, spectral variation,
//!   Kolmogorov–Smirnov distance to the semicircle law, a bounded-Lipschitz
//!   surrogate distance, and replacement-principle diagnostics
//! - [`parallel`]: trial-level parallel map (rayon) with a sequential
//!   fallback when the `parallel` feature is disabled
//!
//! Eigensolver kernels are pinned to sequential execution; parallelism is
//! meant to happen across trials, each with its own derived random stream.

pub mod closed_form;
pub mod esd;
pub mod graph;
pub mod operators;
pub mod parallel;
pub mod rng;
pub mod spectral;

pub use closed_form::{
    bounds_report, build_y_x, char_poly_eval, condition_number_y, cz_case_constants, g_eval,
    h0_pair_from_lambda, singular_values_formula, BoundsReport, CaseConstants, ClosedFormError,
    H0ClosedForm,
};
pub use esd::{
    bl_distance, esd, ks_vs_semicircle, replacement_diagnostics, semicircle_cdf,
    spectral_variation, EmpiricalSpectralMeasure, EsdError, ReplacementDiagnostics,
};
pub use graph::{
    degree_extremes, directed_edges, sample_gnp, DirectedEdgeIndex, Graph, GraphError,
};
pub use operators::{
    build_b, build_h, build_operators, ihara_bass_oracle, multiset_match_error, IharaBassReport,
    NonBacktrackingMatrix, OperatorBundle, OperatorError, OracleError,
};
pub use rng::SeededRng;
pub use spectral::{
    gen_eig, svdvals, svdvals_complex, sym_eig, sym_eigenvalues, ComplexSpectrum, SpectralError,
    SymmetricSpectrum,
};
