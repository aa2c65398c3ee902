//! Named tolerances for the convergence checks.
//!
//! The asymptotic expansions come with no explicit error bounds beyond
//! their order in 1/n, so every acceptance threshold is a configuration
//! constant collected here rather than a magic number at a call site.

/// Relative error allowed between a fitted leading coefficient and its
/// closed-form limit (checked at sample points around n = 200).
pub const FIT_LEADING_REL_TOL: f64 = 1e-3;

/// Relative gap allowed between the rigid fit's first-order coefficient
/// and the value predicted from the unlabelled fit.
pub const D1_RELATIVE_GAP_TOL: f64 = 0.05;

/// Absolute gap allowed between r_n/i_n and its limit e^{−π²/6} at the
/// largest computed n.
pub const RIGID_PROPORTION_TOL: f64 = 0.01;

/// Relative deviation from 1 allowed for matchings_lower(n,j)/S(n,n−j)
/// at the largest computed n with j ≤ 3.
pub const MATCHINGS_REL_TOL: f64 = 0.05;

/// Minimum factor by which the first-order Stirling correction must
/// shrink the approximation error at j ∈ {2, 3}.
pub const HSU_IMPROVEMENT_FACTOR: f64 = 10.0;

/// Maximum allowed ratio defect(2n)/defect(n) for the pair laws; the
/// defect is O(1/n), so doubling n must shed at least a quarter of it.
pub const DEFECT_HALVING_FACTOR: f64 = 0.75;
