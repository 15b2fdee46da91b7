//! Exact computation of graded characters of the symmetric-group
//! multiplicity spaces inside tensor powers of current-algebra modules.
//!
//! For a simple Lie algebra `g`, a finite-dimensional `g`-module `V` and a
//! positive integer `m`, the bimodule `M = (V ⊗ C[t])^⊗m` carries commuting
//! actions of the current algebra `g[t]` and of `S_m` (place permutation).
//! The multiplicity space attached to the simple `S_m`-module `S(γ)` is a
//! graded `g[t]`-module `B(γ, V)`; its localization at the graded maximal
//! ideal of symmetric polynomials is the finite-dimensional module
//! `B_loc(γ, V)`.  This crate computes, in exact integer arithmetic,
//!
//! ```text
//! ch_gr B_loc(γ, V) = Σ_{μ ∈ P⁺} Σ_{σ,τ ⊢ m} s_μ(τ, V) · c^γ_{τσ} · f_σ(u) · e(O(μ))
//! ```
//!
//! together with the `H(A_m)`-expanded character of `B(γ, V)`, the graded
//! dual, and the duality `ch B_loc(γ, V) = u^C(m,2) · ch B_loc(γ∨, V*)*`.
//!
//! Module map:
//! - [`poly`]: sparse Laurent polynomials over arbitrary-precision integers.
//! - [`partitions`]: partitions, standard Young tableaux, major index, and
//!   the fake-degree polynomials `f_σ(u)` of the coinvariant ring.
//! - [`symgroup`]: `S_m` character tables (Murnaghan–Nakayama), Kronecker
//!   coefficients `c^γ_{τσ}`, Kostka numbers, class sizes.
//! - [`lie`]: root systems, Weyl orbits, dual weights, Freudenthal
//!   characters, and the weight-space multiplicities `s_μ(τ, V)`.
//! - [`bchar`]: assembly of the graded characters and the duality check.
//! - [`oracle`]: independent brute-force construction of
//!   `V^⊗m ⊗ A_m^coin` with explicit commuting actions, used to verify the
//!   closed formulas at small scale.
//!
//! Everything is exact: no floating point anywhere.  All functions are pure;
//! the only mutable state is the optional [`symgroup::TableStore`] memo,
//! which is confined to the thread that owns it.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod bchar;
pub mod error;
pub mod lie;
pub mod oracle;
pub mod partitions;
pub mod poly;
pub mod ratmat;
pub mod symgroup;

pub use bchar::{GradedCharacter, ModuleSpec};
pub use error::Error;
pub use lie::{RootSystem, TypeLabel, Weight, WeightMultiset};
pub use partitions::{Partition, StandardTableau};
pub use poly::LaurentPolynomial;
pub use symgroup::CharacterTable;
