pub mod atiyah;
pub mod dimension;
pub mod error;
pub mod group;
pub mod group_ring;
pub mod homology;
pub mod localization;
pub mod scalars;

pub use error::{Error, Result};
