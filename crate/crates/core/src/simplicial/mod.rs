//! Finitely presented simplicial sets in Eilenberg–Zilber normal form,
//! standard simplices and horns, simplicial maps, pullbacks along simplices
//! and the category of simplices.

mod category;
mod map;
mod ordinal;
mod pullback;
mod set;
mod standard;

pub use category::{SimplexCategory, SimplexMorphism};
pub use map::{classifying_map, SimplicialMap};
pub use ordinal::OrdinalMap;
pub use pullback::{pullback_along_simplex, Pullback};
pub use set::{build_from_model, Cell, FaceJson, SimplexRef, SimplicialSet, SimplicialSetJson};
pub use standard::{boundary, horn, standard_simplex, subset_id, try_horn};
