//! Exact construction, verification and classification of Leonard systems.
//!
//! Everything is computed over an exact field ([`field::FieldSpec`]): the
//! rationals, a prime field GF(p) or a binary field GF(2^k). A
//! [`parray::ParameterArray`] is the central object; the other modules derive
//! scalars, polynomials, matrix realizations, identity checks and family
//! labels from it.

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod families;
pub mod field;
pub mod formulas;
pub mod json;
pub mod linalg;
pub mod parray;
pub mod realize;
pub mod verify;

pub use error::{Error, Result};
pub use field::{field_char, field_sqrt, Elem, FieldSpec};
pub use linalg::{mat_poly_eval, poly_three_term, solve_linear, structure_check, Matrix, Poly, Shape};
pub use parray::{beta_plus_one, d4_apply, d4_orbit, pa_bidiagonal_g, pa_poly_characterization, validate, D4Element, Generator, PaRule, PaViolation, ParameterArray};
pub use formulas::{derived_scalars, polynomial_set, u_table, DerivedScalars, PolynomialSet};
pub use families::{
    classify, family_conditions, hypergeom, make_family, make_family_unchecked, u_hypergeometric, Case, ClassificationResult,
    Condition, FamilyParams, FamilyTag, HyperKind,
};
pub use verify::{
    check_tridiag_diag, recognize_bidiagonal, solve_askey_wilson, verify_identities, AWParams, AwSolution, Check, Relation,
    VerificationReport, Witness, CHECK_NAMES,
};
