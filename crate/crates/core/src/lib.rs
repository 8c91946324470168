//! Exact computation of symmetric-group structure constants: characters,
//! dimensions, Kronecker and Littlewood-Richardson coefficients, skew
//! tableau counts, their maxima over partitions of n, and limit-shape numerics.

pub mod characters;
pub mod dimensions;
pub mod error;
pub mod extremal;
pub mod kronecker;
pub mod logspace;
pub mod lr;
pub mod partition;
mod serde_big;
pub mod shapes;
pub mod skew;

pub use dimensions::MaxRecord;
pub use error::{Error, Result};
pub use extremal::{BoundCheck, BoundReport};
pub use partition::Partition;
pub use skew::SkewShape;
