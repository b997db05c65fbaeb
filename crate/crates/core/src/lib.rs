//! Exact computation of chromatic quasi-polynomials, G-Tutte polynomials and
//! characteristic polynomials for finite lists of elements in finitely
//! generated abelian groups, with brute-force counting oracles to check them.

pub mod abelian;
pub mod error;
pub mod group;
pub mod io;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod quasi;
pub mod snf;
pub mod transforms;
pub mod tutte;

pub use abelian::{hom_count, lcm_period, multiplicity, quotient, subgroup_rank, CosetMap, Quotient, SubsetTable};
pub use error::{Error, Result};
pub use group::{ElementList, FgAbelianGroup, GSpec, GroupElement, Mask};
pub use matrix::IntMatrix;
pub use poly::{BivariatePolynomial, IntPolynomial};
pub use quasi::QuasiPolynomial;
pub use snf::{snf, SnfResult};
pub use transforms::{CwInstance, Graph, Lifting};

pub const DEFAULT_SUBSET_CAP: usize = 24;
pub const DEFAULT_ENUM_CAP: u64 = 10_000_000;

/// Size guards for exponential work.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest list length for which all sublists are enumerated.
    pub subset_cap: usize,
    /// Largest number of homomorphisms or residue vectors an oracle may visit.
    pub enum_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { subset_cap: DEFAULT_SUBSET_CAP, enum_cap: DEFAULT_ENUM_CAP }
    }
}
