//! Gröbner escaliers of ideals of points over GF(2^m), Cerlienco-Mureddu
//! correspondences, and the algebraic structures behind a complete weight-≤2
//! syndrome decoder for binary cyclic codes with primary defining set {1, l}.
//!
//! The crate is organized around a brute-force oracle ([`pointideal`]) that
//! computes escaliers, reduced lex bases and correspondences for arbitrary
//! finite point sets, and structural constructors ([`variety`], [`locator`])
//! that build the same objects for the error and syndrome varieties from
//! closed forms and staircase derivations. The two routes are compared by
//! the verification suite (`verify-all` in the CLI, `tests/acceptance.rs`).
//!
//! Every runnable capability has an example under `examples/`.

pub mod decoder;
pub mod field;
pub mod gf2m;
pub mod json;
pub mod locator;
pub mod macaulay;
pub mod monomial;
pub mod pointideal;
pub mod poly;
pub mod report;
pub mod variety;

pub use field::{FieldOps, PrimeField};
pub use gf2m::{roots_of_unity, zech_sequence, Field, FieldElem, RootSets};
pub use monomial::{escalier_from_minimal_basis, lex_cmp, minimal_basis_from_escalier, Escalier, Term, VarOrder};
pub use pointideal::{
    cm_correspondence, escalier_of_points, incremental_basis, interpolate, lex_gb_of_points,
    verify_cm, Correspondence, PointSet,
};
pub use poly::SparsePoly;
pub use variety::{SyndromeConfig, VarietyKind};

