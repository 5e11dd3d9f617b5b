//! Exact commuting, annihilating and `f`-probabilities for finite groups and
//! finite (not necessarily associative) rings, together with the
//! constructions that move these probabilities between groups and rings and
//! a small-ring enumerator for sampling probability spectra.
//!
//! Every probability is an exact [`Rational`]; nothing here uses floating
//! point.

pub mod constructions;
pub mod error;
pub mod group;
pub mod json;
pub mod probability;
pub mod rational;
pub mod ring;
pub mod spectrum;
pub mod structure;
pub mod verify;

pub use constructions::catalog::{CatalogName, Structure};
pub use error::{Error, Result};
pub use group::{Element, FiniteGroup};
pub use probability::{Method, ProbabilityResult};
pub use rational::Rational;
pub use ring::{FiniteRing, PolySpec};
pub use spectrum::Spectrum;

/// Size limits shared by constructions and enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// largest order a construction may produce
    pub order_cap: usize,
    /// largest ring order for exhaustive structure-constant search
    pub general_order_cap: usize,
    /// largest ring order for bilinear families
    pub bilinear_order_cap: usize,
    /// largest number of candidate tensors an enumeration may visit
    pub candidate_budget: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            order_cap: 4096,
            general_order_cap: 64,
            bilinear_order_cap: 256,
            candidate_budget: 1 << 30,
        }
    }
}
