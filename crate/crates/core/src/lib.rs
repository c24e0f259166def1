//! Exact combinatorics for quasitoric manifolds and torus manifolds.

pub mod charmap;
pub mod charsearch;
pub mod cli;
pub mod complexes;
pub mod cyclic;
pub mod error;
pub mod exactnum;
pub mod fanchk;

pub use error::{Error, Result};
