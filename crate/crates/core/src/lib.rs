//! Erdős–Gallai difference lists of degree sequences.
//!
//! For a nonincreasing list `d = (d_1, …, d_n)` the `k`th Erdős–Gallai
//! difference is
//!
//! ```text
//! Δ_k(d) = k(k−1) + Σ_{i>k} min{k, d_i} − Σ_{i≤k} d_i
//! ```
//!
//! and the principal differences are `Δ_1 … Δ_m` with `m` the modified
//! Durfee number. This crate computes them and the structures built on
//! them: graphicality, the Ferrers/difference matrices, complements,
//! split/threshold recognition, the dominance and Rao orders, plus a layer
//! of brute-force realization oracles for small sequences.
//!
//! Positions into a sequence (`k`, partition members, the `r`/`t` of a unit
//! transformation) are 1-based throughout, matching the `Δ_k` index.
//! Graph vertices in [`realize`] are 0-based.

pub mod classes;
pub mod complement;
mod error;
pub mod matrix;
pub mod posets;
pub mod realize;
mod sequence;

pub use error::{Error, Result};
pub use sequence::{
    eg_difference, is_graphical_full, is_graphical_li, max_difference, modified_durfee,
    principal_differences, DegreeSequence, DifferenceList, ParseSequenceError,
};
