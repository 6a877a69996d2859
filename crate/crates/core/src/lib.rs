//! Z2 homology of anchored configuration spaces.
//!
//! The central object is the cubical complex `Ω_n` of configurations of `n`
//! labeled points on a circle that cover two fixed anchor points. Cells are
//! ordered set partitions `(A, B, C, D)` of `[n]` with `A` and `C` non-empty
//! (see [`omega`]).
//!
//! The crate computes the Betti numbers of `Ω_n` three ways and checks that
//! they agree:
//!
//! * the closed formula ([`omega::betti_formula`]),
//! * an explicit acyclic matching and its Morse complex ([`morse`]),
//! * brute-force Gaussian elimination over GF(2) ([`gf2`]).
//!
//! [`basis`] builds explicit homology generators and certifies them against
//! the critical cells of the matching; [`graph_acs`] generalizes the cell
//! structure to anchored configuration spaces of arbitrary finite graphs.

pub mod basis;
pub mod error;
pub mod gf2;
pub mod graph_acs;
pub mod morse;
pub mod omega;
pub mod subset;

pub use error::{Error, Result};
pub use omega::{Chain, CubeLabel};
pub use subset::Subset;
