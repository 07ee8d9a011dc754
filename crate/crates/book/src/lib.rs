//! The guide in `book/src`, one module per chapter, so that `cargo test`
//! compiles and runs every listing.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/counting.md")]
pub mod counting {}

#[doc = include_str!("../../../book/src/caterpillars.md")]
pub mod caterpillars {}

#[doc = include_str!("../../../book/src/decomposition.md")]
pub mod decomposition {}

#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}

#[doc = include_str!("../../../book/src/generating_functions.md")]
pub mod generating_functions {}

#[doc = include_str!("../../../book/src/multi_statistics.md")]
pub mod multi_statistics {}

#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}

#[doc = include_str!("../../../book/src/command_line.md")]
pub mod command_line {}

#[doc = include_str!("../../../README.md")]
pub mod readme {}
