//! Exact spectral bounds for regular graphs.
//!
//! The central question: how many vertices can a connected k-regular graph
//! have if its second-largest adjacency eigenvalue is at most a given λ?
//! This crate computes the linear-programming upper bound for that question
//! with exact arithmetic (rationals, quadratic surds, and isolated algebraic
//! roots), provides a catalog of the graphs known to attain it, and contains
//! an isomorph-free exhaustive search for extremal graphs at small orders.

pub mod error;
pub mod exact;
pub mod expr;
pub mod graph;
pub mod lpbound;
pub mod search;
mod matrix;
pub mod orthopoly;
mod serde_util;

pub use error::{Error, Result};
pub use exact::{AlgebraicReal, IntPoly, Rat, Scalar, Surd};
pub use graph::Graph;
