//! Burnside rings, tables of marks and orbit-type counts of colorings for
//! finite permutation groups, computed exactly.

pub mod burnside;
pub mod cli;
pub mod colorings;
pub mod error;
pub mod group;
pub mod gset;
pub mod oracle;
pub mod series;

pub use error::{Error, Result};
