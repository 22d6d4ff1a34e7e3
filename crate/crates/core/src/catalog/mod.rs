//! Registry of named graphs with certified spectral metadata.

pub mod builders;
pub mod field;
