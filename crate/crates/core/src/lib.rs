//! Exact parameter calculus for parabolically induced representations of
//! Sp(p,q) and SO*(2n) from quaternionic Speh representations.

pub mod cartan;
pub mod checks;
pub mod decompose;
pub mod error;
pub mod json;
pub mod num;
pub mod parabolic;
pub mod polarization;
pub mod repparams;
pub mod rootsys;
pub mod sweep;
pub mod weylrep;

pub use error::{Error, Result};
