//! Symplecticity obstructions, census enumeration and circle-fibering
//! certificates for small covers over simplicial spheres.
//!
//! A small cover is given by a simplicial sphere `K` on `m` vertices and an
//! `n x m` characteristic matrix over Z/2. See the `examples/` directory for
//! one runnable program per capability.

pub mod catalog;
pub mod charmap;
pub mod cohomology;
pub mod enumeration;
pub mod error;
pub mod fibering;
pub mod gf2;
pub mod homology;
pub mod io;
pub mod obstructions;
pub mod simplicial;
pub mod validate;
pub mod verify;

pub use charmap::{CharacteristicCheck, CharacteristicMap};
pub use error::{Error, Result};
pub use gf2::{Gf2Matrix, Gf2Vector};
pub use simplicial::SimplicialComplex;
