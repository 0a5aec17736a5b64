//! Exact instability data for projective hypersurfaces.
//!
//! A hypersurface `V(f) ⊂ P^r` is represented by a homogeneous polynomial
//! with rational coefficients. The crate computes its state polytope at the
//! Hilbert-point degrees `d` and `d + D`, the nearest point of that polytope
//! to the barycenter, the worst torus one-parameter subgroup, a searched
//! stratum label `([λ], δ)` with certificate, and the two-sided bound that
//! ties `δ` to the maximal multiplicity of the hypersurface.
//!
//! Everything is exact: coefficients, distances (stored squared) and bounds
//! are `BigRational`s and no floating point value is used in any decision.

pub mod algebra;
pub mod error;
pub mod group_action;
pub mod instability;
pub mod linalg;
pub mod multiplicity;
pub mod state_polytope;

pub use algebra::{enumerate_monomials, hilbert_values, ExponentVector, HilbertData, HomogeneousPolynomial};
pub use error::{Error, Result};
pub use group_action::{
    act, act_point, canonical_class_rep, conjugate_by_permutation, monomial_cmp, mu, norm_squared, pairing, primitive,
    GroupElement, OneParamSubgroup, Permutation, ProjectivePoint,
};
pub use instability::{
    check_lower_triangular_invariance, classify, destabilize_at_point, move_point_to_e, Classification, SearchConfig,
    SemistableVerdict, StratumLabel,
};
pub use multiplicity::{
    check_firststep, check_singular_if_unstable, hesselink_bounds, max_multiplicity, multiplicity_at, BoundsReport,
    MultiplicityReport,
};
pub use state_polytope::{
    maxmin_delta, multiplication_matrix, nearest_point, state_degree_d, state_degree_d_plus, tau, verify_theorem1,
    MultiplicationMatrix, PolytopeAnalysis, SignedSquare, StateSet, Theorem1Report,
};

/// Exact rational scalar used throughout.
pub type Rational = num_rational::BigRational;
