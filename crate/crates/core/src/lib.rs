//! Exact combinatorics of `(m,n)`-rational Dyck paths.
//!
//! The crate models the `(m,n)` rank diagram, Dyck paths as Ferrers shapes,
//! their area/dinv/skips statistics, rank words, the trivariate generating
//! function `W_{m,n}(b,q,t)` and the rational `q,t`-Catalan polynomial
//! `C_{m,n}(q,t)`. The [`three_n`] module holds everything specific to `m = 3`:
//! Dyck triples, the rank word construction algorithm, the Schur expansion and
//! the bijection exchanging area and dinv.

pub mod error;
pub mod lattice;
pub mod polynomial;
pub mod rankword;
pub mod statistics;
pub mod three_n;
mod unionfind;

pub use error::{Error, Result};
pub use lattice::{
    enumerate_paths, gamma, is_above_diagonal, rational_catalan, Cell, CoprimePair, DyckPath,
    PathSide, RankDiagram,
};
pub use polynomial::{catalan_c, genfun_w, schur_two_var, BqtPolynomial, Exponents, Var};
pub use rankword::{enumerate_rank_words, Letter, RankWord, SkipPair};
pub use statistics::{stat_triple, CellPartition, StatTriple};
pub use three_n::{DyckTriple, FirstColumnSkip};
