//! Exact commutative algebra in characteristic p.
//!
//! The crate computes with sparse multivariate polynomials over prime fields:
//! reduced Groebner bases and the ideal operations they enable (membership,
//! colon, intersection, elimination), Frobenius bracket powers, tight closure
//! in Stanley-Reisner quotients, test ideals and parameter test ideals,
//! integral-dependence certificates via the determinant trick, and a
//! direct-limit model of top local cohomology with its Frobenius action.
//!
//! The `charp-closure-lab` binary fronts everything with a small command
//! language (`run`, `repl`) and a one-shot `reproduce` subcommand that drives
//! the bundled Stanley-Reisner F-stability demonstration end to end.

pub mod closure;
pub mod config;
pub mod dsl;
pub mod error;
pub mod fp;
pub mod groebner;
pub mod ideal;
pub mod local_cohomology;
pub mod monomial;
pub mod poly;
pub mod ring;

pub use closure::{
    bracket_power, integral_dependence_certificate, minimal_primes, parameter_test_ideal,
    tc_membership_bounded, tc_membership_sr, test_ideal_sr, tight_closure_sr, ClosureOracle,
    ClosureVerdict, IntegralDependenceCertificate, ParameterTestIdeal, VerdictStatus,
};
pub use config::Config;
pub use error::{Error, Result};
pub use groebner::{buchberger, express_in_terms, normal_form, GbBudget, GroebnerBasis};
pub use ideal::{is_zero_dimensional, quotient_vector_basis, Ideal};
pub use local_cohomology::{
    annihilates, class_is_zero, classes_equal, frobenius_class, fstability_counterexample,
    make_class, three_plane_ring, AuditRecord, FStabilityReport, LocalCohomClass, SopData,
};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::Polynomial;
pub use ring::{PolyRing, RingSpec};
pub use strong_test::{
    build_param_family, check_strong_property, find_parameter_test_elements,
    search_param_families, verify_lemma_containment, FamilySearchOutcome, ParamFamilyIdeal,
    StrongTestReport,
};
