//! Dehn surgery formulas.
//!
//! For a manifold obtained by surgery on a framed link `L` with `r`
//! components,
//!
//! ```text
//! Z(M) = Σ_{i₁…i_r} S_{i₁0} ⋯ S_{i_r0} · J(L; i₁, …, i_r).
//! ```
//!
//! Only plumbing trees are supported. For a tree the colored link value is
//!
//! ```text
//! J(tree; i) = Π_v t_{i_v}^{a_v} · Π_{(u,v)} S_{i_u i_v} · Π_v S_{0 i_v}^{1 − deg v}
//! ```
//!
//! which reduces to the three closed formulas for `L(p,1)`, `L(p,2)` and
//! `M(p,q,r)`. Those three are also evaluated directly, term for term.

mod plumbing;

use std::fmt;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::catalog::gcd;
use crate::error::{Error, Result};
use crate::modular::ModularData;
use crate::numeric::{cpow, pairwise_sum};

pub use plumbing::PlumbingTree;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    LensP1,
    LensP2,
    Brieskorn,
    Plumbing,
    LensChain,
    StateSum,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::LensP1 => "lens-p1",
            Method::LensP2 => "lens-p2",
            Method::Brieskorn => "brieskorn",
            Method::Plumbing => "plumbing",
            Method::LensChain => "lens-chain",
            Method::StateSum => "state-sum",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InvariantValue {
    pub value: Complex64,
    pub method: Method,
}

impl InvariantValue {
    pub(crate) fn new(value: Complex64, method: Method) -> Result<Self> {
        if !(value.re.is_finite() && value.im.is_finite()) {
            return Err(Error::Degenerate(format!("{method} produced a non-finite value")));
        }
        Ok(Self { value, method })
    }
}

/// A closed 3-manifold the surgery module knows how to present.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Manifold {
    Lens { p: u64, q: u64 },
    Brieskorn { p: u64, q: u64, r: u64 },
}

impl Manifold {
    /// `L(p,1)` and odd `L(p,2)` use their closed formulas, other lens
    /// spaces go through the continued-fraction chain.
    pub fn evaluate(&self, data: &ModularData) -> Result<InvariantValue> {
        match *self {
            Manifold::Lens { p, q: 1 } => lens_p1(data, p),
            Manifold::Lens { p, q: 2 } if p % 2 == 1 => lens_p2(data, p),
            Manifold::Lens { p, q } => lens_general(data, p, q),
            Manifold::Brieskorn { p, q, r } => brieskorn(data, p, q, r),
        }
    }
}

impl fmt::Display for Manifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Manifold::Lens { p, q } => write!(f, "L({p},{q})"),
            Manifold::Brieskorn { p, q, r } => write!(f, "M({p},{q},{r})"),
        }
    }
}

fn t_pow(data: &ModularData, i: usize, e: i64) -> Complex64 {
    cpow(data.t()[i], e)
}

/// `Z(L(p,1)) = Σ_i t_i^p S_{i0}²`. `p = 0` gives `S¹ × S²`.
pub fn lens_p1(data: &ModularData, p: u64) -> Result<InvariantValue> {
    let s = data.s();
    let terms: Vec<Complex64> =
        (0..data.rank()).map(|i| t_pow(data, i, p as i64) * s[(i, 0)] * s[(i, 0)]).collect();
    InvariantValue::new(pairwise_sum(&terms), Method::LensP1)
}

/// `Z(L(p,2)) = Σ_{i,j} t_i^{(p+1)/2} t_j² S_{i0} S_{j0} S_{ij}` for odd `p`.
pub fn lens_p2(data: &ModularData, p: u64) -> Result<InvariantValue> {
    if p.is_multiple_of(2) {
        return Err(Error::Precondition(format!("L(p,2) formula needs odd p, got {p}")));
    }
    let s = data.s();
    let r = data.rank();
    let half = p.div_ceil(2) as i64;
    let inner: Vec<Complex64> = (0..r).map(|j| t_pow(data, j, 2) * s[(j, 0)]).collect();
    let terms: Vec<Complex64> = (0..r)
        .map(|i| {
            let row: Vec<Complex64> = (0..r).map(|j| inner[j] * s[(i, j)]).collect();
            t_pow(data, i, half) * s[(i, 0)] * pairwise_sum(&row)
        })
        .collect();
    InvariantValue::new(pairwise_sum(&terms), Method::LensP2)
}

/// `Z(M(p,q,r)) = Σ_{i,j,k,l} t_i^p t_j^q t_k^r t_l · S_{i0}S_{j0}S_{k0}S_{il}S_{jl}S_{kl} / S_{l0}`.
///
/// The sums over `i`, `j`, `k` factor for fixed `l`; the outer sum is
/// split across threads and merged in label order.
pub fn brieskorn(data: &ModularData, p: u64, q: u64, r: u64) -> Result<InvariantValue> {
    if p < 2 || q < 2 || r < 2 {
        return Err(Error::Precondition(format!(
            "Brieskorn exponents must be at least 2, got ({p},{q},{r})"
        )));
    }
    let s = data.s();
    let n = data.rank();
    let tol = data.tolerance();
    if let Some(l) = (0..n).find(|&l| s[(l, 0)].norm() <= tol) {
        return Err(Error::Degenerate(format!("S_{l}0 vanishes")));
    }
    let leg = |e: u64, l: usize| {
        let terms: Vec<Complex64> =
            (0..n).map(|i| t_pow(data, i, e as i64) * s[(i, 0)] * s[(i, l)]).collect();
        pairwise_sum(&terms)
    };
    let terms: Vec<Complex64> = (0..n)
        .into_par_iter()
        .map(|l| data.t()[l] * leg(p, l) * leg(q, l) * leg(r, l) / s[(l, 0)])
        .collect();
    InvariantValue::new(pairwise_sum(&terms), Method::Brieskorn)
}

/// Surgery formula on a plumbing tree, by message passing from the leaves.
pub fn plumbing_invariant(data: &ModularData, tree: &PlumbingTree) -> Result<InvariantValue> {
    let s = data.s();
    let n = data.rank();
    let tol = data.tolerance();
    let deg = tree.degrees();
    let adj = tree.neighbours();
    if deg.iter().any(|&d| d >= 2) {
        if let Some(i) = (0..n).find(|&i| s[(0, i)].norm() <= tol) {
            return Err(Error::Degenerate(format!("S_0{i} vanishes")));
        }
    }

    // Vertex weight S_{i0} · t_i^a · S_{0i}^{1 - deg}.
    let weight = |v: usize, i: usize| {
        let base = s[(i, 0)] * t_pow(data, i, tree.framings()[v]);
        match deg[v] {
            0 => base * s[(0, i)],
            1 => base,
            d => base / cpow(s[(0, i)], d as i64 - 1),
        }
    };

    // Post-order traversal from vertex 0.
    let mut order = Vec::with_capacity(tree.len());
    let mut parent = vec![usize::MAX; tree.len()];
    let mut stack = vec![0usize];
    parent[0] = 0;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in &adj[v] {
            if parent[w] == usize::MAX {
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    // local[v][i] = weight(v,i) · Π_children message(i)
    let mut local: Vec<Vec<Complex64>> =
        (0..tree.len()).map(|v| (0..n).map(|i| weight(v, i)).collect()).collect();
    for &v in order.iter().rev() {
        if v == 0 {
            continue;
        }
        let message: Vec<Complex64> = (0..n)
            .map(|j| {
                let terms: Vec<Complex64> = (0..n).map(|i| local[v][i] * s[(i, j)]).collect();
                pairwise_sum(&terms)
            })
            .collect();
        let p = parent[v];
        for (slot, m) in local[p].iter_mut().zip(message) {
            *slot *= m;
        }
    }
    InvariantValue::new(pairwise_sum(&local[0]), Method::Plumbing)
}

/// `p/q = a₁ − 1/(a₂ − 1/(⋯ − 1/a_k))` with every `a_i ≥ 2`, for `0 < q < p`.
pub fn negative_continued_fraction(p: u64, q: u64) -> Vec<i64> {
    let (mut p, mut q) = (p, q);
    let mut out = Vec::new();
    while q > 0 {
        let a = p.div_ceil(q);
        out.push(a as i64);
        (p, q) = (q, a * q - p);
    }
    out
}

/// `L(p,q)` as surgery on the unknot chain of its negative continued fraction.
pub fn lens_general(data: &ModularData, p: u64, q: u64) -> Result<InvariantValue> {
    if p == 0 || q == 0 || gcd(p, q) != 1 {
        return Err(Error::Precondition(format!("L({p},{q}) needs gcd(p,q) = 1 and p, q > 0")));
    }
    let framings = if p == 1 {
        vec![1]
    } else if q < p {
        negative_continued_fraction(p, q)
    } else {
        return Err(Error::Precondition(format!("L({p},{q}) needs 0 < q < p")));
    };
    let value = plumbing_invariant(data, &PlumbingTree::chain(&framings))?;
    InvariantValue::new(value.value, Method::LensChain)
}

/// `Σ_i S_{i0}²`, the `p = 0` case of [`lens_p1`].
pub fn s1_x_s2(data: &ModularData) -> Complex64 {
    let s = data.s();
    let terms: Vec<Complex64> = (0..data.rank()).map(|i| s[(i, 0)] * s[(i, 0)]).collect();
    pairwise_sum(&terms)
}
