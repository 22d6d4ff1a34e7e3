//! Exact scalar arithmetic: arbitrary-precision rationals, quadratic surds,
//! and general real algebraic numbers represented by integer polynomials
//! with isolating intervals. Every comparison and sign decision in the crate
//! bottoms out here, with no floating-point rounding anywhere.

mod algebraic;
mod intpoly;
mod rat;
mod scalar;
mod sturm;
mod surd;

pub use algebraic::AlgebraicReal;
pub use intpoly::IntPoly;
pub use rat::{rat, rat_decimal_exact, rat_display, rat_i, rat_pq, rat_to_f64, Int, Rat};
pub use scalar::{largest_real_root, real_root_in, Scalar};
pub use sturm::{
    count_real_roots, count_roots_gt, count_roots_gt_surd, count_roots_in, isolate_real_roots,
    split_rational_roots, RootBracket,
};
pub use surd::{Surd, MAX_RADICAND};
