//! The A∞-nerve: simplices as coherent families `f_j` over vertex subsets,
//! their enumeration, inner-horn fillers and truncated nerves.

mod enumerate;
mod fill;
mod functor;
mod simplex;
mod truncation;
mod wedge;

pub use enumerate::{enumerate_simplices, Constraints, Enumerator};
pub use fill::{fill_inner_horn, horn_missing};
pub use functor::{nerve_of_functor, nerve_of_strict_functor, FunctorComponents, Strict};
pub use simplex::{is_nerve_simplex, nerve_violation, simplex_residual, NerveSimplex, NerveSimplexJson};
pub use truncation::{nerve_from_cells, nerve_truncation, NerveTruncation, NerveTruncationJson};
pub use wedge::{wedge_decompositions, WedgeDecomposition};
