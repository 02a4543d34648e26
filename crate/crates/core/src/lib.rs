//! Rowmotion and toggle dynamics on finite posets.
//!
//! Four realms share one poset model: subsets ([`comb`]), piecewise-linear
//! labelings ([`pl`]), and labelings valued in an [`algebra::AlgebraBackend`]
//! ([`dynamics`]), which covers commutative fields, matrix rings and the
//! max-plus semiring with a single implementation.

pub mod algebra;
pub mod comb;
pub mod dynamics;
pub mod error;
pub mod harness;
pub mod pl;
pub mod poset;

pub use error::{Error, Result};
pub use poset::{ChainIndex, Poset};

/// The five transfer maps shared by the piecewise-linear and algebraic realms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Transfer {
    /// Complement.
    Theta,
    /// Down transfer: each label against the labels it covers.
    Down,
    /// Up transfer: each label against the labels covering it.
    Up,
    InvDown,
    InvUp,
}
