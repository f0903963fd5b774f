//! Schubert coefficients of matroids.
//!
//! A matroid `M` of rank `r` on `[n]` determines a class `Sc(M)` in the Chow
//! ring of the Grassmannian `G(r,n)`. This crate expands that class in the
//! Schubert basis with exact integer arithmetic for uniform, minimal and
//! sparse paving matroids and their direct sums, and checks the result against
//! the normalized volume of the matroid polytope.

pub mod cli;
pub mod error;
pub mod io;
pub mod matroid;
pub mod orbit;
pub mod partition;
pub mod polytope;
pub mod schubert;

pub use error::{Error, Result};
pub use matroid::{Classification, Matroid};
pub use orbit::{sc, ScResult};
pub use partition::{Partition, Rectangle};
pub use schubert::{Ambient, ChowClass};
