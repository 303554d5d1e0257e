//! Highest weight categories, Kazhdan-Lusztig combinatorics and BGG-type
//! resolutions of highest weight modules.

pub mod bgg;
pub mod coxeter;
pub mod homology;
pub mod klpoly;
pub mod linalg;
pub mod qha;
