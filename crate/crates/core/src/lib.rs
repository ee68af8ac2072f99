//! Cobordism invariants of free knots computed on Gauss diagrams.
//!
//! A free knot is given by a one-circle Gauss diagram. Smoothing every even
//! chord in the way that splits its circle defines a map `Δ` on Z₂-linear
//! combinations of diagrams; iterating it and reading off the parity graph
//! of the resulting circles yields `I⁽ⁿ⁾`, which is unchanged by third
//! Reidemeister moves and elementary cobordisms. A non-zero value therefore
//! certifies a free knot that is not cobordant to the trivial one.
//!
//! ```
//! use freeknot_core::{i_n, parse_gauss_words};
//!
//! let k = parse_gauss_words("1 2 3 1 2 3").unwrap();
//! assert!(i_n(&k, 1).unwrap().is_zero());
//! ```
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod invariant;
pub mod moves;
pub mod oracle;

pub use diagram::{canonical_key, parse_gauss_words, CanonicalKey, ChordDiagram, Label, Slot};
pub use error::{Error, Result};
pub use invariant::{
    delta, delta_levels, delta_n, gamma_graph, i_levels, i_n, i_of_combination, i_of_diagram, j_number, split_smooth,
    GammaGraph, InvariantValue, LinearCombination,
};
pub use moves::{Gap, MoveKind, MoveSite, Segment, SymmetricConfiguration};
pub use oracle::{gf2_nullity, nullity_components, trace_components, Gf2Matrix};
