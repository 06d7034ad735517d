//! Exact gamma vectors of polynomials.
//!
//! For a polynomial `h` of formal degree `n`, the gamma vector is the unique
//! `gamma` with `h(t) = (1 + t)^n gamma(t / (1 + t)^2)`. Reciprocal inputs give
//! a polynomial; other inputs give a power series that is truncated on request.
//! Four independent routes compute it ([`gamma_by_basis`], [`gamma_extended`],
//! [`gamma_catalan_formula`] with [`gamma_matrix`], and
//! [`gamma_derivative_formula`]), and the crate checks their agreement.
//!
//! Around that core sit Catalan and Lagrange coefficient identities,
//! f/h-vectors of simplicial complexes and their link identities, sign
//! classifiers for coefficient patterns and volume polynomials, and seeded
//! randomized suites in [`verify`].
//!
//! All arithmetic is exact over [`Rational`].

pub mod bounds;
pub mod catalan;
pub mod error;
pub mod gamma;
pub mod rational;
pub mod series;
pub mod simplicial;
pub mod verify;
pub mod volume;

pub use bounds::{
    alternating_sum_sign, boundgam_classify, ftypesum_gamma, ftypesum_gamma_printed, shifted_gamma,
    shiftgam_classify, shiftgam_gamma, AlternatingReport, Monotonicity, Quantity, Sign, SignClaim,
};
pub use catalan::{
    catalan, catalan_convolution_shifted, catalan_convolution_unified,
    catalan_convolution_unshifted, catalan_power_coeff, catalan_power_coeff_printed,
    lagrange_coefficient, lagrange_fixed_point, printed_catalan_disagreements,
};
pub use error::{Error, Result};
pub use gamma::{
    gamma_by_basis, gamma_catalan_formula, gamma_derivative_formula, gamma_extended, gamma_matrix,
    h_from_gamma, GammaMatrix, GammaVector,
};
pub use rational::{format_rational, parse_rational, Rational};
pub use series::{
    expand_binomial_power, series_compose, series_divide, Polynomial, TruncatedSeries,
};
pub use simplicial::{
    f_vector, fhex_realizable, gamauxpo_decompose, link, verify_h_link_identity,
    verify_link_f_identity, AuxDecomposition, AuxVariant, FHVectors, SimplicialComplex,
};
pub use verify::{run_suite, Suite, SuiteReport, VerifyOptions};
pub use volume::{
    constant_ratio_classify, log_concave_check, volbd_classify, volume_gamma, volume_polynomial,
    volume_q, IntersectionSequence, LogConcaveReport, QNumerator,
};
