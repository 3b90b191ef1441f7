//! Horn-filling checks, the homotopy category of a quasi-category
//! truncation, equivalences and the maximal Kan subcomplex.

mod horn;
mod tau;

pub use horn::{horn_has_filler, is_kan, is_quasi_category, CheckReport, HornWitness};
pub use tau::{
    is_equivalence_edge, maximal_kan_subcomplex, tau, tau0, HoCategory, HoCategoryJson, MorphismClass, MorphismJson,
};

pub(crate) use horn::{face_json, find_horn, from_face_json, tables, SimplexTable};
