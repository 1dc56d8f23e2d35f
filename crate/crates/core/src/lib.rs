//! Combinatorics of the orthosymplectic Satake correspondence for
//! `osp(2n+1|2n)`: odd root data, the `q`-graded vector partition function
//! `L_α(q)`, super Kostka polynomials and IC-stalk Poincaré polynomials, the
//! closure order on relevant orbits, and the `f(4)`/`g(3)` dimension checks.
//!
//! Everything is exact integer arithmetic.

pub mod check;
pub mod cli;
pub mod error;
pub mod exceptional;
pub mod kostka;
pub mod orbits;
pub mod partfn;
pub mod rootdata;
pub mod weyl;

pub use error::{Error, Result};
pub use kostka::{kostka_poly, stalk_poincare, support_check, KostkaCalculator, KostkaOptions};
pub use partfn::{l_oracle, l_poly, LaurentPolynomial, PartitionEngine, QPolynomial};
pub use rootdata::{dominance_ge, odd_positive_roots, rho, rho0, DominantWeightPair, OddRootSystem, WeightVector};
pub use weyl::SignedPermutation;
