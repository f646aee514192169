//! Exact computations with finite-dimensional Lie algebras on which the Taft
//! algebra H_{m^2} acts.
//!
//! Everything is computed over the cyclotomic field Q(ζ_m) with arbitrary
//! precision rationals, so every verdict is a proof for the given input.
//!
//! ## Examples
//!
//! - **`cyclotomic_arithmetic`** - field elements, ζ-integers and ζ-binomials
//! - **`taft_hopf_axioms`** - Hopf axioms and iterated coproducts of H_{m^2}
//! - **`build_families`** - the algebras L_α(B) and L(B, γ)
//! - **`graded_lemmas`** - the structure of an H-simple algebra along its grading
//! - **`h_simplicity`** - certified H-simplicity verdicts
//! - **`isomorphisms`** - explicit isomorphisms between family members
//! - **`classify_corpus`** - recovering the case and the invariant γ
//! - **`codimensions`** - H-codimensions and their exponential bound
//!
//! ```bash
//! cargo run --example classify_corpus
//! ```
//!
//! The `taftlie` binary exposes the same operations as JSON-producing
//! subcommands; see [`cli`].

pub mod cyclotomic;
pub mod error;
pub mod exactla;
pub mod liealg;
pub mod report;
pub mod hopf;
pub mod hmod;
pub mod construct;
pub mod classify;
pub mod codim;
pub mod cli;

pub use cyclotomic::{CycNum, CyclotomicField, Field};
pub use error::{Error, Result};
pub use hmod::HModuleLie;
pub use liealg::LieAlgebra;
