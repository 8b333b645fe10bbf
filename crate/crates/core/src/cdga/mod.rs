//! Semifree graded-commutative DG algebras over the rationals.

mod algebra;
mod koszul;
mod morphism;
mod parse;
mod poly;

pub use algebra::{coordinates, AlgebraSpec, BigradedHomology, FreeCdga, Generator, WeightSlice};
pub use koszul::{koszul_algebra, koszul_complex, koszul_complex_weight, koszul_tensored, tor_dimensions};
pub use morphism::{CdgaMorphism, MorphismSpec, WeightedQuasiIsoReport};
pub use parse::{format_monomial, format_poly, parse_poly};
pub use poly::{Monomial, Poly};
