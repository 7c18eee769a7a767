//! Exact computational group theory at desk scale: finite fields of
//! characteristic 2, fully enumerated permutation and matrix groups, Suzuki
//! groups Sz(q) with their maximal subgroups, character tables by the
//! Dixon-Schneider method over a prime field, and decision procedures for
//! Gelfand and strong Gelfand pairs with independent Schur-ring and
//! double-coset oracles.
//!
//! Everything is exact (no floating point, no randomness) and deterministic:
//! identical inputs produce identical results, down to row and class ordering.
//!
//! The typical pipeline:
//!
//! ```
//! use szgelfand::{groups, chartab, gelfand, suzuki};
//!
//! // Sz(2), a Frobenius group of order 20, acting on the 5-point ovoid.
//! let sz = suzuki::Suzuki::build(1).unwrap();
//! let g = sz.perm_group();
//! assert_eq!(g.order(), 20);
//!
//! // Its character table has degrees 1, 1, 1, 1, 4.
//! let table = chartab::character_table(g).unwrap();
//! assert_eq!(table.degrees(), &[1, 1, 1, 1, 4]);
//!
//! // The cyclic subgroup generated by an order-5 element is a strong
//! // Gelfand subgroup.
//! let x = g.first_element_of_order(5).unwrap();
//! let emb = groups::subgroup_embed(g, &[g.elements()[x as usize].clone()], 1 << 20).unwrap();
//! let th = chartab::character_table_with(emb.sub(), table.context()).unwrap();
//! let report = gelfand::is_strong_gelfand(&table, &emb, &th, false).unwrap();
//! assert!(report.verdict);
//! ```

pub mod chartab;
pub mod corpus;
pub mod error;
pub mod ff2m;
pub mod gelfand;
pub mod groups;
pub mod io;
pub mod lattice;
pub mod modlin;
pub mod suzuki;

pub use error::{Error, Result};

/// Default resource caps used by library entry points and the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of elements a closure may enumerate.
    pub closure: usize,
    /// Maximum group order for exhaustive subgroup-lattice enumeration.
    pub lattice: usize,
    /// Maximum group order for the Schur-ring commutativity oracle.
    pub oracle: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { closure: 2_000_000, lattice: 500, oracle: 5000 }
    }
}
