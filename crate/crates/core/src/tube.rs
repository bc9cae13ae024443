//! Tube algebras of pointed categories.
//!
//! For `Vec_{ℤ/n}^ω` the tube algebra is the twisted double `D^ω(ℤ/n)`:
//! basis `(g, x)`, product
//!
//! ```text
//! (g, x)·(h, y) = δ_{g,h} θ_g(x, y) (g, x + y),
//! θ_g(x, y) = ω(g, x, y) ω(x, y, g) / ω(x, g, y).
//! ```
//!
//! Its minimal central projections form the torus basis; [`tube_modular_data`]
//! reads `S` and `T` off them.

use nalgebra::DVector;
use num_complex::Complex64;

use crate::catalog::cyclic_cocycle;
use crate::error::{Error, Result};
use crate::modular::ModularData;
use crate::numeric::{root_of_unity, CMatrix, DEFAULT_TOLERANCE, ONE, ZERO};

/// A finite-dimensional algebra with monomial structure constants: each
/// product of basis elements is a multiple of one basis element, or zero.
#[derive(Clone, Debug)]
pub struct TubeAlgebra {
    n: usize,
    /// `products[a·dim + b] = Some((c, coefficient))`.
    products: Vec<Option<(usize, Complex64)>>,
    /// `star[a] = (b, coefficient)` with `e_a* = coefficient · e_b`.
    star: Vec<(usize, Complex64)>,
}

/// Minimal central projections with the data needed to label them.
#[derive(Clone, Debug)]
pub struct CenterBasis {
    pub idempotents: Vec<DVector<Complex64>>,
    /// Flux sector `g` carrying each projection.
    pub sectors: Vec<usize>,
    /// `d_i` with `d_i²` the dimension of the block `p_i·A`.
    pub block_dims: Vec<usize>,
}

impl TubeAlgebra {
    pub fn dim(&self) -> usize {
        self.star.len()
    }

    /// Order of the group.
    pub fn group_order(&self) -> usize {
        self.n
    }

    /// Index of the basis element `(g, x)`.
    pub fn basis_index(&self, g: usize, x: usize) -> usize {
        g * self.n + x
    }

    pub fn basis_product(&self, a: usize, b: usize) -> Option<(usize, Complex64)> {
        self.products[a * self.dim() + b]
    }

    pub fn unit(&self) -> DVector<Complex64> {
        let mut u = DVector::zeros(self.dim());
        for g in 0..self.n {
            u[self.basis_index(g, 0)] = ONE;
        }
        u
    }

    pub fn mul(&self, a: &DVector<Complex64>, b: &DVector<Complex64>) -> DVector<Complex64> {
        let d = self.dim();
        let mut out = DVector::zeros(d);
        for i in (0..d).filter(|&i| a[i] != ZERO) {
            for j in (0..d).filter(|&j| b[j] != ZERO) {
                if let Some((c, w)) = self.products[i * d + j] {
                    out[c] += a[i] * b[j] * w;
                }
            }
        }
        out
    }

    pub fn star(&self, a: &DVector<Complex64>) -> DVector<Complex64> {
        let mut out = DVector::zeros(self.dim());
        for (i, &(j, w)) in self.star.iter().enumerate() {
            out[j] += a[i].conj() * w;
        }
        out
    }

    /// Matrix of `x ↦ a·x`.
    pub fn left_multiplication(&self, a: &DVector<Complex64>) -> CMatrix {
        let d = self.dim();
        let mut m = CMatrix::zeros(d, d);
        for i in (0..d).filter(|&i| a[i] != ZERO) {
            for j in 0..d {
                if let Some((c, w)) = self.products[i * d + j] {
                    m[(c, j)] += a[i] * w;
                }
            }
        }
        m
    }

    /// Largest deviation from `(e_a e_b) e_c = e_a (e_b e_c)`.
    pub fn associativity_residual(&self) -> f64 {
        let d = self.dim();
        let mut worst = 0.0f64;
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    let left = self.products[a * d + b]
                        .and_then(|(ab, w)| self.products[ab * d + c].map(|(x, v)| (x, w * v)));
                    let right = self.products[b * d + c]
                        .and_then(|(bc, w)| self.products[a * d + bc].map(|(x, v)| (x, w * v)));
                    let r = match (left, right) {
                        (None, None) => 0.0,
                        (Some((_, w)), None) | (None, Some((_, w))) => w.norm(),
                        (Some((x, w)), Some((y, v))) if x == y => (w - v).norm(),
                        (Some((_, w)), Some((_, v))) => w.norm().max(v.norm()),
                    };
                    worst = worst.max(r);
                }
            }
        }
        worst
    }

    /// Largest deviation from `(e_a e_b)* = e_b* e_a*` and `e_a** = e_a`.
    pub fn star_residual(&self) -> f64 {
        let d = self.dim();
        let basis = |i: usize| {
            let mut v = DVector::zeros(d);
            v[i] = ONE;
            v
        };
        let mut worst = 0.0f64;
        for a in 0..d {
            let ea = basis(a);
            worst = worst.max((self.star(&self.star(&ea)) - &ea).norm());
            for b in 0..d {
                let eb = basis(b);
                let lhs = self.star(&self.mul(&ea, &eb));
                let rhs = self.mul(&self.star(&eb), &self.star(&ea));
                worst = worst.max((lhs - rhs).norm());
            }
        }
        worst
    }
}

fn theta(n: u64, k: u64, g: u64, x: u64, y: u64) -> Complex64 {
    cyclic_cocycle(n, k, g, x, y) * cyclic_cocycle(n, k, x, y, g) / cyclic_cocycle(n, k, x, g, y)
}

/// Tube algebra of `Vec_{ℤ/n}^{ω_k}`.
pub fn tube_pointed(n: u64, k: u64) -> TubeAlgebra {
    assert!(n > 0, "n must be positive");
    let m = n as usize;
    let d = m * m;
    let mut products = vec![None; d * d];
    let mut star = Vec::with_capacity(d);
    for g in 0..m {
        for x in 0..m {
            let a = g * m + x;
            for y in 0..m {
                let b = g * m + y;
                let c = g * m + (x + y) % m;
                products[a * d + b] = Some((c, theta(n, k, g as u64, x as u64, y as u64)));
            }
            let neg = (m - x) % m;
            star.push((g * m + neg, theta(n, k, g as u64, x as u64, neg as u64).conj()));
        }
    }
    TubeAlgebra { n: m, products, star }
}

/// Orthonormal basis of the null space of `m`, as columns.
fn null_space(m: &CMatrix, tol: f64) -> CMatrix {
    let cols = m.ncols();
    if m.nrows() == 0 {
        return CMatrix::identity(cols, cols);
    }
    // Pad to at least square so the thin SVD returns every right vector.
    let padded = if m.nrows() < cols {
        let mut p = CMatrix::zeros(cols, cols);
        p.view_mut((0, 0), (m.nrows(), cols)).copy_from(m);
        p
    } else {
        m.clone()
    };
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("requested");
    let scale = svd.singular_values.max().max(1.0);
    let keep: Vec<usize> =
        (0..svd.singular_values.len()).filter(|&i| svd.singular_values[i] <= tol * scale).collect();
    CMatrix::from_fn(cols, keep.len(), |r, c| v_t[(keep[c], r)].conj())
}

/// Deterministic coefficients with no accidental relations.
fn generic_coefficients(len: usize, attempt: usize) -> Vec<Complex64> {
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    let s2 = 2f64.sqrt();
    (0..len)
        .map(|j| {
            let t = (j + 1) as f64 * (attempt + 1) as f64;
            root_of_unity((t * phi).fract()) * (1.0 + (t * s2).fract())
        })
        .collect()
}

/// Minimal central projections of a semisimple tube algebra.
///
/// The center is the joint null space of all commutators. Left
/// multiplication by a generic central element, restricted to the center,
/// has one eigenvalue per block; each eigenvector is a multiple of a
/// minimal projection and is rescaled so that `p² = p`.
pub fn center_idempotents(alg: &TubeAlgebra) -> Result<CenterBasis> {
    let d = alg.dim();
    let tol = DEFAULT_TOLERANCE;
    let assoc = alg.associativity_residual();
    if assoc > tol {
        return Err(Error::Decomposition(format!(
            "algebra is not associative (residual {assoc:.3e})"
        )));
    }
    let mut commutators = CMatrix::zeros(d * d, d);
    for j in 0..d {
        for l in 0..d {
            if let Some((c, w)) = alg.basis_product(j, l) {
                commutators[(l * d + c, j)] += w;
            }
            if let Some((c, w)) = alg.basis_product(l, j) {
                commutators[(l * d + c, j)] -= w;
            }
        }
    }
    let center = null_space(&commutators, tol);
    let m = center.ncols();

    for attempt in 0..8 {
        let coeffs = DVector::from_vec(generic_coefficients(m, attempt));
        let c = &center * coeffs;
        let restricted = center.adjoint() * alg.left_multiplication(&c) * &center;
        let Some(eigen) = restricted.clone().schur().eigenvalues() else {
            continue;
        };
        let separated = (0..m).all(|i| (i + 1..m).all(|j| (eigen[i] - eigen[j]).norm() > 1e-6));
        if !separated {
            continue;
        }
        let mut idempotents = Vec::with_capacity(m);
        for &lambda in eigen.iter() {
            let shifted = &restricted - CMatrix::identity(m, m) * lambda;
            let kernel = null_space(&shifted, 1e-7);
            if kernel.ncols() != 1 {
                return Err(Error::Decomposition(format!(
                    "eigenvalue {lambda} has a {}-dimensional eigenspace",
                    kernel.ncols()
                )));
            }
            let v = &center * kernel.column(0);
            let v2 = alg.mul(&v, &v);
            let alpha = v.dotc(&v2) / v.dotc(&v);
            if alpha.norm() <= tol {
                return Err(Error::Decomposition("central eigenvector is nilpotent".into()));
            }
            let p = v / alpha;
            let residual = (alg.mul(&p, &p) - &p).norm();
            if residual > 1e-8 {
                return Err(Error::Decomposition(format!("idempotent residual {residual:.3e}")));
            }
            idempotents.push(p);
        }
        let total: DVector<Complex64> =
            idempotents.iter().fold(DVector::zeros(d), |acc, p| acc + p);
        let completeness = (total - alg.unit()).norm();
        if completeness > 1e-8 {
            return Err(Error::Decomposition(format!(
                "projections sum to the unit only within {completeness:.3e}"
            )));
        }
        let n = alg.group_order();
        let mut sectors = Vec::with_capacity(m);
        let mut block_dims = Vec::with_capacity(m);
        for p in &idempotents {
            let weight =
                |g: usize| (0..n).map(|x| p[alg.basis_index(g, x)].norm_sqr()).sum::<f64>();
            let g = (0..n).max_by(|&a, &b| weight(a).total_cmp(&weight(b))).expect("n > 0");
            if (0..n).any(|h| h != g && weight(h) > tol) {
                return Err(Error::Decomposition("projection spans several flux sectors".into()));
            }
            let trace = alg.left_multiplication(p).trace();
            let dsq = trace.re.round();
            if (trace.re - dsq).abs() > 1e-6 || trace.im.abs() > 1e-6 || dsq < 1.0 {
                return Err(Error::Decomposition(format!(
                    "block trace {trace} is not a positive integer"
                )));
            }
            sectors.push(g);
            block_dims.push((dsq.sqrt().round()) as usize);
        }
        return Ok(CenterBasis { idempotents, sectors, block_dims });
    }
    Err(Error::Decomposition("no generic central element separates the blocks".into()))
}

/// Modular data on the minimal central projections.
///
/// Each projection in sector `g` is `(1/n) Σ_x conj(χ(x))·(g, x)` for a
/// projective character `χ`; then `S = conj(χ_a(h_b) χ_b(g_a))/n` and
/// `t_a = χ_a(g_a)`. Labels are ordered by sector and then by the phase of
/// `χ(1)`; the vacuum `(0, χ ≡ 1)` comes first.
pub fn tube_modular_data(alg: &TubeAlgebra) -> Result<ModularData> {
    let basis = center_idempotents(alg)?;
    let n = alg.group_order();
    if basis.block_dims.iter().any(|&d| d != 1) {
        return Err(Error::Unsupported("tube algebra has non-abelian blocks".into()));
    }
    let chars: Vec<Vec<Complex64>> = basis
        .idempotents
        .iter()
        .zip(&basis.sectors)
        .map(|(p, &g)| (0..n).map(|x| (p[alg.basis_index(g, x)] * n as f64).conj()).collect())
        .collect();
    let denom = (n * n) as f64;
    let phase_index = |z: Complex64| {
        let turns = z.arg() / std::f64::consts::TAU;
        ((turns * denom).round() as i64).rem_euclid((n * n) as i64)
    };
    let mut order: Vec<usize> = (0..chars.len()).collect();
    let key = |i: usize| (basis.sectors[i], phase_index(chars[i][1 % n]));
    order.sort_by_key(|&i| key(i));
    let vacuum = order
        .iter()
        .position(|&i| basis.sectors[i] == 0 && chars[i].iter().all(|&z| (z - ONE).norm() < 1e-6))
        .ok_or_else(|| Error::Decomposition("no vacuum projection".into()))?;
    let v = order.remove(vacuum);
    order.insert(0, v);

    let r = order.len();
    let s = CMatrix::from_fn(r, r, |a, b| {
        let (i, j) = (order[a], order[b]);
        (chars[i][basis.sectors[j]] * chars[j][basis.sectors[i]]).conj() / n as f64
    });
    let t = order.iter().map(|&i| chars[i][basis.sectors[i]]).collect();
    let names = order.iter().map(|&i| {
        let (g, j) = key(i);
        format!("[{g}|{j}/{}]", n * n)
    });
    Ok(ModularData::new(s, t)?.with_names(names))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{quantum_double_abelian, twisted_double_cyclic, FiniteAbelianGroup};
    use crate::modular::{permutation_equivalent, verify_verlinde};

    #[test]
    fn algebra_axioms() {
        for n in 1..=4 {
            for k in 0..n {
                let a = tube_pointed(n, k);
                assert_eq!(a.dim(), (n * n) as usize);
                assert!(a.associativity_residual() < 1e-12);
                assert!(a.star_residual() < 1e-12, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn untwisted_product_is_the_group_algebra() {
        let a = tube_pointed(3, 0);
        for g in 0..3 {
            for x in 0..3 {
                for y in 0..3 {
                    let (c, w) = a.basis_product(a.basis_index(g, x), a.basis_index(g, y)).unwrap();
                    assert_eq!(c, a.basis_index(g, (x + y) % 3));
                    assert_eq!(w, ONE);
                }
                assert!(a
                    .basis_product(a.basis_index(g, x), a.basis_index((g + 1) % 3, x))
                    .is_none());
            }
        }
    }

    #[test]
    fn idempotent_counts() {
        for (n, k) in [(1, 0), (2, 0), (2, 1), (3, 0), (3, 2)] {
            let c = center_idempotents(&tube_pointed(n, k)).unwrap();
            assert_eq!(c.idempotents.len(), (n * n) as usize);
            assert_eq!(c.block_dims.iter().map(|d| d * d).sum::<usize>(), (n * n) as usize);
        }
        let one = center_idempotents(&tube_pointed(1, 5)).unwrap();
        assert!((&one.idempotents[0] - tube_pointed(1, 5).unit()).norm() < 1e-12);
    }

    #[test]
    fn projections_are_self_adjoint_and_orthogonal() {
        let alg = tube_pointed(3, 1);
        let c = center_idempotents(&alg).unwrap();
        for (i, p) in c.idempotents.iter().enumerate() {
            assert!((alg.star(p) - p).norm() < 1e-9);
            for q in &c.idempotents[i + 1..] {
                assert!(alg.mul(p, q).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn modular_data_matches_generators() {
        let toric = tube_modular_data(&tube_pointed(2, 0)).unwrap();
        let qd = quantum_double_abelian(&FiniteAbelianGroup::cyclic(2));
        assert!(permutation_equivalent(&toric, &qd).unwrap().is_some());

        let semion = tube_modular_data(&tube_pointed(2, 1)).unwrap();
        assert!(verify_verlinde(&semion).unwrap().is_strict(1e-9));
        assert!(permutation_equivalent(&semion, &twisted_double_cyclic(2, 1)).unwrap().is_some());
        assert_eq!(semion.labels()[0].name, "[0|0/4]");
    }
}
