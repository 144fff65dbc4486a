//! Exact coordinate rings, planar points over them, and discrete isometries.

mod isometry;
mod point;
mod scalar;

pub use isometry::Isometry;
pub use point::{A2Point, CycloPoint, PlanePoint, Point10, Point8};
pub use scalar::{
    golden, golden_inverse, lambda, lambda_value, psi, silver, silver_inverse, Cyclo10, Cyclo8,
    Cyclotomic, Lambda, RingSpec, Scalar,
};
