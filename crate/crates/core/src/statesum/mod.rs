//! Triangulation state sums for pointed 6j data.
//!
//! For a closed oriented triangulation with `V` vertices,
//!
//! ```text
//! Z = λ^{−V} Σ_{edge colorings} Π_E [X_E]^{1/2} Π_τ W(τ)^{ε_τ}
//! ```
//!
//! where each tetrahedron is read in the order of its vertex classes and
//! `ε_τ = ±1` compares that order with the orientation. Only pointed data
//! (`Vec_G^ω`) is evaluated; there every admissible face has a unique
//! coloring and the sum is the Dijkgraaf–Witten invariant.

mod evaluate;
mod moves;
mod sixj;
mod triangulation;

pub use evaluate::{tv_evaluate, tv_evaluate_with, Strategy};
pub use moves::{pachner_14, pachner_23};
pub use sixj::{pointed_sixj, verify_pentagon, PentagonReport, SixJData};
pub use triangulation::{
    compose, edge_index, face_vertices, inverse, sign, Gluing, Perm, Triangulation, EDGES, IDENTITY,
};
