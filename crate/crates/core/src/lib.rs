//! Outward-rounded interval arithmetic, and certified lower bounds for the
//! volume of a hyperbolic 3-manifold with totally geodesic genus-2 boundary
//! in terms of the length of its shortest return path.

pub mod bounds;
pub mod certify;
pub mod error;
pub mod hyptrig;
pub mod interval;
pub mod packing;
pub mod scalar;

pub use bounds::{CoshL1, Ell2Family, HProfile, KmBound, QuantityId};
pub use error::{Error, Result};
pub use interval::{precision, set_precision, Interval, Precision};
pub use scalar::{Dual, Scalar};
