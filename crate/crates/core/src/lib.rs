//! Parking distributions on m-regular caterpillar trees.
//!
//! The crate enumerates nondecreasing preference sequences on the caterpillar
//! `Cat_m(n)` and on their isomorphic "u-parking" form (sequences with
//! `p_i <= m(i - 1) + 1`), implements the bijections between them, the
//! first-return decomposition with its involution τ and the bijection η, and
//! computes the luck / frequency statistics as exact multivariate polynomials
//! and truncated power series. Every generating-function identity is checked
//! coefficient by coefficient against brute-force enumeration in [`verify`].
//!
//! ```
//! use catpark::{enumerate_u_pk, fuss_catalan, theta, BoundFamily};
//!
//! let family = BoundFamily::canonical(2)?;
//! let all: Vec<_> = enumerate_u_pk(3, &family)?.collect();
//! assert_eq!(all.len() as u64, 12);
//! assert_eq!(fuss_catalan(2, 3), 12u32.into());
//! assert_eq!(theta(&all[0], 2)?.to_string(), "(1, 1, 1, 2, 4)");
//! # Ok::<(), catpark::Error>(())
//! ```
//!
//! The guide in `book/` walks through the constructions with runnable
//! listings.

pub mod bijections;
pub mod caterpillar;
pub mod decomposition;
pub mod enumerate;
mod error;
pub mod gf;
pub mod lattice;
pub mod poly;
pub mod sequence;
pub mod series;
pub mod statistics;
pub mod tables;
pub mod verify;

pub use bijections::{eta, eta_inv, tau};
pub use caterpillar::{
    build_caterpillar, enumerate_caterpillar_pk, is_tree_pk, luck_tree, omega_tree, simulate,
    theta, theta_inv, CaterpillarTree, ParkingOutcome,
};
pub use decomposition::{
    decompose, first_fixed_point, fixed_points, recompose, FirstReturnDecomposition,
    FixedPointIndices,
};
pub use enumerate::{
    count_u_pk, enumerate_u_pk, enumerate_u_pk_with_cap, fuss_catalan, is_u_pk, UParkingIter,
    DEFAULT_CAP,
};
pub use error::{Error, Result};
pub use gf::{
    fuss_catalan_series, gamma_poly_brute, gamma_series_closed, h_decompose, h_expand, h_series,
    multi_stat_poly_brute, multi_stat_series_closed, r_poly_brute, r_series_closed, GammaForm,
    JointCountTensor, LuckSeriesForm, ProductForm,
};
pub use lattice::{from_lattice_path, to_lattice_path, LatticePath, Step};
pub use poly::{complete_homogeneous, Monomial, MultiPoly};
pub use sequence::{bound, BoundFamily, ParkingSeq};
pub use series::TruncatedSeries;
pub use statistics::{
    check_statistic_compatibility, f_stat, g_stat, u_luck, u_omega, CompatibilityReport,
};
pub use tables::{table, Table};
pub use verify::{VerificationReport, VerifyConfig};
