//! Turaev-Viro-Ocneanu invariants of closed 3-manifolds.
//!
//! Modular data goes in, complex numbers come out. The [`surgery`] module
//! evaluates lens spaces, Brieskorn manifolds and plumbing trees from an
//! `(S, T)` pair; [`statesum`] sums over colorings of a triangulation for
//! pointed 6j data; [`tube`] rebuilds the modular data of a twisted double
//! from its tube algebra. [`catalog`] holds generators, file IO and the
//! brute-force oracles everything is checked against.
//!
//! ```
//! use tvo::{catalog, surgery};
//!
//! let toric = catalog::toric_code();
//! let z = surgery::lens_p1(&toric, 3).unwrap();
//! assert!((z.value.re - 0.5).abs() < 1e-12);
//! ```

pub mod catalog;
pub mod error;
pub mod modular;
pub mod numeric;
pub mod statesum;
pub mod surgery;
pub mod tube;

pub use error::{Error, Result};
pub use modular::{
    charge_conjugation, conjugate_equivalent, double_data, fusion_from_s, global_index,
    verify_verlinde, FusionTable, Label, ModularData, VerificationReport,
};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/modular-data.md")]
    mod modular_data {}
    #[doc = include_str!("../../../book/src/catalog.md")]
    mod catalog {}
    #[doc = include_str!("../../../book/src/surgery.md")]
    mod surgery {}
    #[doc = include_str!("../../../book/src/state-sums.md")]
    mod state_sums {}
    #[doc = include_str!("../../../book/src/tube.md")]
    mod tube {}
}
