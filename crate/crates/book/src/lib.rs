//! The guide in `book/`, one module per chapter, so that `cargo test` runs
//! every listing.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}
#[doc = include_str!("../../../book/src/exact-coordinates.md")]
pub mod exact_coordinates {}
#[doc = include_str!("../../../book/src/substitution.md")]
pub mod substitution {}
#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}
#[doc = include_str!("../../../book/src/a2.md")]
pub mod a2 {}
#[doc = include_str!("../../../book/src/extrapolation.md")]
pub mod extrapolation {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
