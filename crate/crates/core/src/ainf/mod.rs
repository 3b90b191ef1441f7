//! Finite strictly unital A∞-categories over F₂.

pub mod catalog;
mod category;
mod cohomology;
mod extension;
mod functor;
mod mutation;
mod relations;

pub use category::{AInfCategory, BasisId, CategoryJson, MuJson};
pub use cohomology::{cohomology, CohomologyCategory, HomCohomology};
pub use extension::{degenerate_extension, full_subcategory, Extension, Origin};
pub use functor::{is_fully_faithful_embedding, is_quasi_equivalence, FunctorJson, StrictFunctor};
pub use mutation::{mutation_sites, MutationJson, MutationSite};
pub use relations::{
    check_ainf_relations, check_strict_units, relation_residual, sufficient_dmax, RelationViolation, UnitViolation,
};
