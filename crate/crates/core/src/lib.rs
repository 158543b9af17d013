//! Exact combinatorics of Coxeter polar data for polar actions on closed,
//! simply connected manifolds of dimension 4 and 5.
//!
//! The data types are the boundary forests of T² actions on 5-manifolds
//! ([`forest5`]), the marked polygons of SO(3) actions on 5-manifolds
//! ([`polygon5`]) and the slope cycles of T² actions on 4-manifolds
//! ([`cycle4`]). Each comes with validation, a canonical form, the
//! equivariant connected sums, and the topological invariants that
//! identify the manifold. [`catalog`] lists the known actions, and
//! [`enumerate`] tabulates every class within size bounds.
//!
//! ```
//! use polar_core::forest5::{self, ForestData};
//!
//! let f = ForestData::path(&[[1, 0], [0, 1], [1, 3]]);
//! assert_eq!(forest5::diffeo_type(&f).unwrap().to_string(), "S3~xS2");
//! ```

pub mod catalog;
pub mod cli;
pub mod cycle4;
pub mod cyclic;
pub mod data;
pub mod diffeo;
pub mod enumerate;
pub mod error;
pub mod forest5;
pub mod lattice;
pub mod polygon5;

pub use data::Data;
pub use diffeo::DiffeoType5;
pub use error::{Error, Result, Violation};
