//! Semifree DG algebras as derived Cartesian spaces: classical points,
//! tangent complexes, weak equivalences, fibrations and forms.

mod maps;
mod space;

pub use maps::{
    is_fibration_at, is_weak_equivalence, tangent_functoriality, GeometricMap, PointComparison,
    WeakEquivalenceReport,
};
pub use space::{
    DerivedCartesianSpace, FormDimension, FormGenerator, FormsReport, Point, TangentComplex,
};
