//! Simplicial commutative algebras with polynomial levels: free algebras on
//! simplicial vector spaces, the left adjoint `Q` from DG algebras, the
//! normalized DG algebra with its shuffle product, and the unit map.

mod algebra;
mod beta;
mod connectivity;
mod qfunctor;
mod quotient;
mod theta;

pub use algebra::{LevelGenerator, SimplicialPolynomialAlgebra};
pub use beta::{BidegreeMatrix, BidegreeReport, IndecomposablesRow, UnitMapCertificate};
pub use connectivity::{
    connectivity_check, face_kernel_ideal_check, ConnectivityReport, HomotopyRow, KernelIdealReport, KernelIdealRow,
};
pub use qfunctor::{q_functor, QAlgebra, QKey};
pub use quotient::{monomials_of_weight, QuotientModel, Slice};
pub use theta::{induced_theta, multiplicative_extension, ThetaMap};
