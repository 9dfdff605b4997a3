//! Decides whether a polynomial correspondence `f(x, y) = 0` of degree `d` in
//! each variable is a map of `d`-tuples, using exact Gaussian-rational algebra
//! for the decision and a floating-point oracle for confirmation.

pub mod algebra;
pub mod cli;
pub mod correspondence;
pub mod io;
pub mod oracle;
