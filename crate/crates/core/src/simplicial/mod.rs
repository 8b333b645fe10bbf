//! Finite-type truncated simplicial vector spaces, the Dold–Kan pair
//! `(N, Γ)`, homotopy groups by two routes, and shuffle combinatorics.

mod gamma;
mod pointed;
pub mod simplex;
mod shuffle;
mod space;

pub use gamma::{gamma, gamma_action, gamma_with_levels, GammaAction, GammaLevel};
pub use pointed::{disk_chains, reduced_chains_quotient, sphere_chains};
pub use shuffle::{enumerate_shuffles, Shuffle};
pub use simplex::{binomial, MonotoneMap, Surjection};
pub use space::{
    homotopy_moore, homotopy_normalized, normalized_chains, NormalizedChains, SimplicialVectorSpace,
};
