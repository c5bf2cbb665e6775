//! Khovanov homology ranks over Z/2, reduced Burau matrices and Alexander
//! polynomials of braid-axis links, plus checkers for the classification of
//! links with small Khovanov rank.

pub mod alexander;
pub mod braid;
pub mod cli;
pub mod classify;
pub mod dataset;
pub mod error;
pub mod gf2;
pub mod khovanov;
pub mod laurent;
pub mod linkdiag;

pub use error::{Error, Result};
