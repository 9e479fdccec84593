//! Exact solvers for combinatorial optimization problems with ordinal objectives.
//!
//! Every element of a ground set is assigned to one of `K` ordered categories
//! `eta1 < eta2 < ... < etaK` (category 1 is the most preferred). A solution is
//! described by its counting vector `c`, and ordinal dominance between two
//! solutions coincides with Pareto dominance between their incremental tail
//! counting vectors `A * c`, where `A` is the upper-triangular matrix of ones.
//! The crate builds on that reduction:
//!
//! * [`ordinal`] holds the vector types, the transformation matrices, the
//!   dominance predicates and numerical-representation certificates.
//! * [`nondominance`] filters finite point sets under Pareto and ordinal cones
//!   and decides supportedness exactly.
//! * [`solvers`] contains label-correcting shortest path search and dynamic
//!   programming for knapsack instances, plus the mixed and weighted variants.
//! * [`scalarization`] covers weighted sums and weight space decompositions.
//! * [`oracle`] enumerates feasible sets exhaustively for cross-checking.
//! * [`io`] reads instance files and serializes results.
//!
//! All arithmetic is exact (machine integers or arbitrary precision rationals).

pub mod error;
pub mod io;
pub mod linalg;
pub mod lp;
pub mod nondominance;
pub mod oracle;
pub mod ordinal;
pub mod rational;
pub mod scalarization;
pub mod solvers;

pub use error::{Error, Result};
pub use rational::Rational;
