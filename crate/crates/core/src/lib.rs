//! Exact finite-truncation machinery for the monoidal Dold–Kan
//! correspondence between simplicial commutative algebras and
//! graded-commutative DG algebras over the rationals.
//!
//! Modules, bottom up:
//!
//! * [`linear`]: rational scalars, sparse matrices, chain complexes.
//! * [`simplicial`]: simplicial vector spaces, `N`, `Γ`, shuffles.
//! * [`cdga`]: semifree weight-graded DG algebras, Koszul complexes.
//! * [`scdga`]: levelwise polynomial simplicial algebras, `Q`, the
//!   Eilenberg–Zilber product on normalized chains and the unit `β`.
//! * [`cartesian`]: semifree algebras as derived Cartesian spaces.

pub mod cartesian;
pub mod cdga;
pub mod error;
pub mod linear;
pub mod scdga;
pub mod simplicial;

pub use error::{DkError, Result};
