//! Finite strictly unital A∞-categories over F₂, their nerves, horn filling,
//! homotopy categories, and colimits of nerves over finite simplicial bases
//! together with bounded-dimension fibration checks.
//!
//! All hom spaces are ungraded and composition is written in diagrammatic
//! order: `μ²(f, g)` is "first `f`, then `g`".

pub mod ainf;
pub mod colimit;
pub mod error;
pub mod fibration;
pub mod gf2;
pub mod homotopy;
pub mod nerve;
pub mod simplicial;

pub use error::{Error, Result};
