//! Exact scalar arithmetic and geometric predicates.
//!
//! All operations here are pure functions on immutable values and are safe
//! to call concurrently from any number of threads.

mod cm;
mod embed;
mod rat;
mod surd;

pub use cm::{cm3, cm3_int, cm4, cm4_int, ExactError};
pub use embed::{embed, NotRealizable, PlanarEmbedding, PlanarPoints, TriangleId};
pub use rat::Rat;
pub use surd::{sign_of, sqrt_decompose, Surd};
