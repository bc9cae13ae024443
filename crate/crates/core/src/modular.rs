//! Modular data and the Verlinde-basis axioms.
//!
//! A [`ModularData`] value is the pair `(S, T)` presenting the action of
//! `SL₂(ℤ)` on the torus space in an orthonormal basis `v₀, …, v_m`, with
//! `v₀` the vacuum. Everything downstream (fusion rules, surgery formulas,
//! comparisons) is computed from these two matrices alone.

use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numeric::{
    approx_eq, max_abs_diff, pairwise_sum, CMatrix, DEFAULT_TOLERANCE, INTEGER_TOLERANCE, ONE, ZERO,
};

/// Largest class of indistinguishable labels the permutation search will explore.
pub const MAX_SEARCH_BLOCK: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Label {
    pub index: usize,
    pub name: String,
}

/// Unitary symmetric `S`, diagonal unitary `T`, and the tolerance used to
/// judge both.
///
/// Construction only checks shapes. The axioms are checked by
/// [`verify_verlinde`], so that malformed data can still be loaded and
/// reported on.
#[derive(Clone, Debug)]
pub struct ModularData {
    labels: Vec<Label>,
    s: CMatrix,
    t: Vec<Complex64>,
    tolerance: f64,
}

impl ModularData {
    pub fn new(s: CMatrix, t: Vec<Complex64>) -> Result<Self> {
        if s.nrows() != s.ncols() {
            return Err(Error::Dimension(format!(
                "S is {}x{}, expected square",
                s.nrows(),
                s.ncols()
            )));
        }
        if s.nrows() != t.len() {
            return Err(Error::Dimension(format!(
                "S has rank {} but T has {} entries",
                s.nrows(),
                t.len()
            )));
        }
        if t.is_empty() {
            return Err(Error::Dimension("rank must be positive".into()));
        }
        let labels = (0..t.len()).map(|index| Label { index, name: index.to_string() }).collect();
        Ok(Self { labels, s, t, tolerance: DEFAULT_TOLERANCE })
    }

    /// Builds from a row-major closure `S(i, j)`.
    pub fn from_fn(
        rank: usize,
        s: impl FnMut(usize, usize) -> Complex64,
        t: Vec<Complex64>,
    ) -> Result<Self> {
        Self::new(DMatrix::from_fn(rank, rank, s), t)
    }

    pub fn with_names<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Self {
        for (label, name) in self.labels.iter_mut().zip(names) {
            label.name = name.into();
        }
        self
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn rank(&self) -> usize {
        self.t.len()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn s(&self) -> &CMatrix {
        &self.s
    }

    pub fn t(&self) -> &[Complex64] {
        &self.t
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// Entrywise complex conjugate `(S̄, T̄)`, the data of the mirror theory.
    pub fn conjugate(&self) -> Self {
        Self {
            labels: self.labels.clone(),
            s: self.s.map(|z| z.conj()),
            t: self.t.iter().map(|z| z.conj()).collect(),
            tolerance: self.tolerance,
        }
    }

    /// Relabels so that new label `i` is old label `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let r = self.rank();
        assert_eq!(perm.len(), r, "permutation length");
        Self {
            labels: perm
                .iter()
                .enumerate()
                .map(|(index, &p)| Label { index, name: self.labels[p].name.clone() })
                .collect(),
            s: DMatrix::from_fn(r, r, |i, j| self.s[(perm[i], perm[j])]),
            t: perm.iter().map(|&p| self.t[p]).collect(),
            tolerance: self.tolerance,
        }
    }

    fn t_matrix(&self) -> CMatrix {
        CMatrix::from_diagonal(&nalgebra::DVector::from_column_slice(&self.t))
    }
}

/// Non-negative integer structure constants `N_ij^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionTable {
    rank: usize,
    n: Vec<u32>,
}

impl FusionTable {
    pub fn from_fn(rank: usize, mut f: impl FnMut(usize, usize, usize) -> u32) -> Self {
        let mut n = Vec::with_capacity(rank * rank * rank);
        for i in 0..rank {
            for j in 0..rank {
                for k in 0..rank {
                    n.push(f(i, j, k));
                }
            }
        }
        Self { rank, n }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u32 {
        self.n[(i * self.rank + j) * self.rank + k]
    }

    /// `N_0j^k = δ_jk`.
    pub fn has_unit(&self) -> bool {
        let r = self.rank;
        (0..r).all(|j| (0..r).all(|k| self.get(0, j, k) == u32::from(j == k)))
    }

    pub fn is_commutative(&self) -> bool {
        let r = self.rank;
        (0..r).all(|i| (0..r).all(|j| (0..r).all(|k| self.get(i, j, k) == self.get(j, i, k))))
    }

    /// `Σ_x N_ij^x N_xk^l = Σ_y N_jk^y N_iy^l` for all `i, j, k, l`.
    pub fn is_associative(&self) -> bool {
        let r = self.rank;
        // Sparse rows: products of fusion tables are mostly zero.
        let rows: Vec<Vec<(usize, u64)>> = (0..r * r)
            .map(|ij| {
                (0..r)
                    .filter_map(|k| {
                        let v = self.n[ij * r + k];
                        (v != 0).then_some((k, u64::from(v)))
                    })
                    .collect()
            })
            .collect();
        (0..r).into_par_iter().all(|i| {
            let mut left = vec![0u64; r];
            let mut right = vec![0u64; r];
            for j in 0..r {
                for k in 0..r {
                    left.iter_mut().for_each(|x| *x = 0);
                    right.iter_mut().for_each(|x| *x = 0);
                    for &(x, a) in &rows[i * r + j] {
                        for &(l, b) in &rows[x * r + k] {
                            left[l] += a * b;
                        }
                    }
                    for &(y, a) in &rows[j * r + k] {
                        for &(l, b) in &rows[i * r + y] {
                            right[l] += a * b;
                        }
                    }
                    if left != right {
                        return false;
                    }
                }
            }
            true
        })
    }
}

/// Outcome of one numerical check.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Check {
    pub passed: bool,
    pub residual: f64,
}

impl Check {
    fn within(residual: f64, tol: f64) -> Self {
        Self { passed: residual <= tol, residual }
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    /// `v₀` is the unit of the fusion algebra.
    pub unit: Check,
    /// `S` unitary.
    pub s_unitary: Check,
    /// `S` symmetric.
    pub s_symmetric: Check,
    /// `|t_i| = 1`.
    pub t_unitary: Check,
    /// `S²` a permutation matrix fixing the vacuum.
    pub s_squared_permutation: Check,
    /// Residual is `min_i |S_0i|`; passes when above tolerance.
    pub s0_nonzero: Check,
    /// Verlinde sums are non-negative integers.
    pub fusion_integral: Check,
    /// The rounded table is a unital commutative associative algebra.
    pub fusion_algebra: Check,
    /// `S⁴ = I` and `(ST)³ = u·S²` for some scalar `u`.
    pub sl2_relations: Check,
    pub anomaly_phase: Complex64,
}

impl VerificationReport {
    pub fn checks(&self) -> [(&'static str, Check); 9] {
        [
            ("vacuum is the fusion unit", self.unit),
            ("S unitary", self.s_unitary),
            ("S symmetric", self.s_symmetric),
            ("T unitary", self.t_unitary),
            ("S^2 permutation fixing v0", self.s_squared_permutation),
            ("S_0i nonzero", self.s0_nonzero),
            ("Verlinde sums integral", self.fusion_integral),
            ("fusion algebra axioms", self.fusion_algebra),
            ("S^4 = I, (ST)^3 = u S^2", self.sl2_relations),
        ]
    }

    /// All axioms hold, allowing a nontrivial anomaly phase.
    pub fn matrix_axioms_pass(&self) -> bool {
        self.checks().iter().all(|(_, c)| c.passed)
    }

    /// All axioms hold and `(ST)³ = S²` exactly.
    pub fn is_strict(&self, tol: f64) -> bool {
        self.matrix_axioms_pass() && (self.anomaly_phase - ONE).norm() <= tol
    }
}

/// Raw Verlinde sums `Σ_l S_il S_jl conj(S_lk) / S_0l`, indexed `(i·r + j)·r + k`.
///
/// Each entry is summed serially in label order; parallelism is over `i`
/// only, so the output does not depend on the thread count.
pub fn verlinde_sums(data: &ModularData) -> Result<Vec<Complex64>> {
    let r = data.rank();
    let s = data.s();
    let tol = data.tolerance();
    let mut inv_s0 = Vec::with_capacity(r);
    for l in 0..r {
        let s0l = s[(0, l)];
        if s0l.norm() <= tol {
            return Err(Error::Degenerate(format!("S_0{l} vanishes")));
        }
        inv_s0.push(s0l.inv());
    }
    let out: Vec<Vec<Complex64>> = (0..r)
        .into_par_iter()
        .map(|i| {
            let mut block = Vec::with_capacity(r * r);
            let mut terms = vec![ZERO; r];
            let weighted: Vec<Complex64> = (0..r).map(|l| s[(i, l)] * inv_s0[l]).collect();
            for j in 0..r {
                let wij: Vec<Complex64> = (0..r).map(|l| weighted[l] * s[(j, l)]).collect();
                for k in 0..r {
                    for l in 0..r {
                        terms[l] = wij[l] * s[(l, k)].conj();
                    }
                    block.push(pairwise_sum(&terms));
                }
            }
            block
        })
        .collect();
    Ok(out.concat())
}

fn integrality_residual(z: Complex64) -> (f64, f64) {
    let rounded = z.re.round();
    ((z - Complex64::new(rounded, 0.0)).norm(), rounded)
}

/// Fusion rules from the Verlinde formula.
pub fn fusion_from_s(data: &ModularData) -> Result<FusionTable> {
    let r = data.rank();
    let sums = verlinde_sums(data)?;
    let mut n = Vec::with_capacity(sums.len());
    for (idx, &z) in sums.iter().enumerate() {
        let (residual, rounded) = integrality_residual(z);
        if residual > INTEGER_TOLERANCE || rounded < 0.0 {
            return Err(Error::FusionIntegrality {
                i: idx / (r * r),
                j: (idx / r) % r,
                k: idx % r,
                value: format!("{:.9}{:+.9}i", z.re, z.im),
            });
        }
        n.push(rounded as u32);
    }
    Ok(FusionTable { rank: r, n })
}

/// Reads the permutation `i ↦ ī` off `S²`.
pub fn charge_conjugation(data: &ModularData) -> Result<Vec<usize>> {
    let tol = data.tolerance();
    let s2 = data.s() * data.s();
    let (perm, residual) = nearest_permutation(&s2);
    match perm {
        Some(p) if residual <= tol && p[0] == 0 => Ok(p),
        _ => Err(Error::Conjugation { residual }),
    }
}

/// Closest permutation matrix by row argmax, and `max |M - P|`.
fn nearest_permutation(m: &CMatrix) -> (Option<Vec<usize>>, f64) {
    let r = m.nrows();
    let mut perm = Vec::with_capacity(r);
    let mut seen = vec![false; r];
    let mut residual = 0f64;
    let mut is_perm = true;
    for i in 0..r {
        let j = (0..r).max_by(|&a, &b| m[(i, a)].norm().total_cmp(&m[(i, b)].norm())).unwrap_or(0);
        if seen[j] {
            is_perm = false;
        }
        seen[j] = true;
        perm.push(j);
        for c in 0..r {
            let target = if c == j { ONE } else { ZERO };
            residual = residual.max((m[(i, c)] - target).norm());
        }
    }
    (is_perm.then_some(perm), residual)
}

/// Scalar `u` minimising `|A - u·B|` in the Frobenius norm, with the
/// remaining maximum residual.
fn scalar_ratio(a: &CMatrix, b: &CMatrix) -> (Complex64, f64) {
    let num = a.iter().zip(b.iter()).fold(ZERO, |acc, (x, y)| acc + x * y.conj());
    let den: f64 = b.iter().map(|y| y.norm_sqr()).sum();
    let u = if den > 0.0 { num / den } else { ZERO };
    (u, max_abs_diff(a, &b.map(|y| u * y)))
}

/// Checks the four Verlinde-basis axioms and the `SL₂(ℤ)` relations.
pub fn verify_verlinde(data: &ModularData) -> Result<VerificationReport> {
    let r = data.rank();
    let tol = data.tolerance();
    let s = data.s();
    let id = CMatrix::identity(r, r);

    let s_unitary = Check::within(max_abs_diff(&(s * s.adjoint()), &id), tol);
    let s_symmetric = Check::within(max_abs_diff(s, &s.transpose()), tol);
    let t_unitary =
        Check::within(data.t().iter().map(|z| (z.norm() - 1.0).abs()).fold(0.0, f64::max), tol);

    let s2 = s * s;
    let (perm, perm_residual) = nearest_permutation(&s2);
    let fixes_vacuum = (s2[(0, 0)] - ONE).norm() <= tol;
    let s_squared_permutation = Check {
        passed: perm.is_some() && perm_residual <= tol && fixes_vacuum,
        residual: perm_residual,
    };

    let min_s0 = (0..r).map(|i| s[(0, i)].norm()).fold(f64::INFINITY, f64::min);
    let s0_nonzero = Check { passed: min_s0 > tol, residual: min_s0 };

    let (unit, fusion_integral, fusion_algebra) = if s0_nonzero.passed {
        let sums = verlinde_sums(data)?;
        let mut unit_res = 0f64;
        for j in 0..r {
            for k in 0..r {
                let target = if j == k { ONE } else { ZERO };
                unit_res = unit_res.max((sums[j * r + k] - target).norm());
            }
        }
        let mut int_res = 0f64;
        let mut negative = false;
        let mut n = Vec::with_capacity(sums.len());
        for &z in &sums {
            let (res, rounded) = integrality_residual(z);
            int_res = int_res.max(res);
            negative |= rounded < 0.0;
            n.push(rounded.max(0.0) as u32);
        }
        let integral =
            Check { passed: int_res <= INTEGER_TOLERANCE && !negative, residual: int_res };
        let table = FusionTable { rank: r, n };
        let algebra_ok =
            integral.passed && table.has_unit() && table.is_commutative() && table.is_associative();
        (
            Check::within(unit_res, INTEGER_TOLERANCE),
            integral,
            Check { passed: algebra_ok, residual: if algebra_ok { 0.0 } else { 1.0 } },
        )
    } else {
        let failed = Check { passed: false, residual: f64::INFINITY };
        (failed, failed, failed)
    };

    let st = s * data.t_matrix();
    let st3 = &st * &st * &st;
    let (anomaly_phase, anomaly_residual) = scalar_ratio(&st3, &s2);
    let s4_residual = max_abs_diff(&(&s2 * &s2), &id);
    let sl2_relations = Check::within(s4_residual.max(anomaly_residual), tol);

    Ok(VerificationReport {
        unit,
        s_unitary,
        s_symmetric,
        t_unitary,
        s_squared_permutation,
        s0_nonzero,
        fusion_integral,
        fusion_algebra,
        sl2_relations,
        anomaly_phase,
    })
}

/// `C ⊠ C̄`: labels are pairs `(i, j)` stored at `i·r + j`, with
/// `S' = S_ik·conj(S_jl)` and `t' = t_i·conj(t_j)`.
pub fn double_data(data: &ModularData) -> ModularData {
    let r = data.rank();
    let s = data.s();
    let t = data.t();
    let big = r * r;
    let doubled = DMatrix::from_fn(big, big, |a, b| {
        let (i, j) = (a / r, a % r);
        let (k, l) = (b / r, b % r);
        s[(i, k)] * s[(j, l)].conj()
    });
    let tt = (0..big).map(|a| t[a / r] * t[a % r].conj()).collect();
    let names: Vec<String> = (0..big)
        .map(|a| format!("({},{})", data.labels()[a / r].name, data.labels()[a % r].name))
        .collect();
    ModularData::new(doubled, tt)
        .expect("doubling preserves shape")
        .with_names(names)
        .with_tolerance(data.tolerance())
}

/// `λ = 1/S₀₀²`, the total dimension of the category.
pub fn global_index(data: &ModularData) -> Result<f64> {
    let s00 = data.s()[(0, 0)];
    let tol = data.tolerance();
    if s00.re <= tol || s00.im.abs() > tol {
        return Err(Error::Degenerate(format!("S_00 = {s00} is not a positive real number")));
    }
    Ok(1.0 / (s00.re * s00.re))
}

/// A relabelling witnessing that two data sets agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equivalence {
    /// `perm[i]` is the label of the second data set matched to label `i` of the first.
    pub perm: Vec<usize>,
    pub conjugate: bool,
}

impl fmt::Display for Equivalence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> =
            self.perm.iter().enumerate().map(|(i, p)| format!("{i}->{p}")).collect();
        write!(f, "{}", body.join(" "))
    }
}

/// Searches for `π` with `π(0) = 0`, `S^a_ij = conj(S^b_{π(i)π(j)})` and
/// `t^a_i = conj(t^b_{π(i)})`.
pub fn conjugate_equivalent(a: &ModularData, b: &ModularData) -> Result<Option<Equivalence>> {
    find_equivalence(a, b, true)
}

/// Same search without conjugation: plain relabelling.
pub fn permutation_equivalent(a: &ModularData, b: &ModularData) -> Result<Option<Equivalence>> {
    find_equivalence(a, b, false)
}

/// Grid used to compare floating values as hash keys during refinement.
const COLOR_GRID: f64 = 1e-7;

fn grid(z: Complex64) -> (i64, i64) {
    ((z.re / COLOR_GRID).round() as i64, (z.im / COLOR_GRID).round() as i64)
}

/// Colour refinement on the labels of both data sets at once.
///
/// Start from `(vacuum?, t_i, S_ii, S_0i)` and repeatedly extend each colour
/// by the multiset of `(colour_j, S_ij)` over its row until the partition
/// stops splitting. Labels that can correspond under a relabelling always
/// share a colour.
fn refine_colors(
    a: &ModularData,
    b: &ModularData,
    map: impl Fn(Complex64) -> Complex64,
) -> (Vec<usize>, Vec<usize>) {
    use std::collections::BTreeMap;

    let r = a.rank();
    let side = |d: &ModularData, conj: bool| -> (CMatrix, Vec<Complex64>) {
        if conj {
            (d.s().map(&map), d.t().iter().map(|&z| map(z)).collect())
        } else {
            (d.s().clone(), d.t().to_vec())
        }
    };
    let sides = [side(a, false), side(b, true)];

    let mut keys: Vec<Vec<i64>> = Vec::with_capacity(2 * r);
    for (s, t) in &sides {
        for i in 0..r {
            let (t1, t2) = grid(t[i]);
            let (d1, d2) = grid(s[(i, i)]);
            let (z1, z2) = grid(s[(0, i)]);
            keys.push(vec![(i == 0) as i64, t1, t2, d1, d2, z1, z2]);
        }
    }
    let assign = |keys: &[Vec<i64>]| -> Vec<usize> {
        let mut ids = BTreeMap::new();
        keys.iter()
            .map(|k| {
                let next = ids.len();
                *ids.entry(k.clone()).or_insert(next)
            })
            .collect()
    };
    let mut colors = assign(&keys);
    let mut count = colors.iter().max().map_or(0, |m| m + 1);
    loop {
        let keys: Vec<Vec<i64>> = (0..2 * r)
            .map(|node| {
                let (s, _) = &sides[node / r];
                let (off, i) = ((node / r) * r, node % r);
                let mut row: Vec<(i64, i64, i64)> = (0..r)
                    .map(|j| {
                        let (x, y) = grid(s[(i, j)]);
                        (colors[off + j] as i64, x, y)
                    })
                    .collect();
                row.sort_unstable();
                let mut key = vec![colors[node] as i64];
                key.extend(row.into_iter().flat_map(|(c, x, y)| [c, x, y]));
                key
            })
            .collect();
        let next = assign(&keys);
        let next_count = next.iter().max().map_or(0, |m| m + 1);
        colors = next;
        if next_count == count {
            break;
        }
        count = next_count;
    }
    let b_colors = colors.split_off(r);
    (colors, b_colors)
}

fn find_equivalence(
    a: &ModularData,
    b: &ModularData,
    conjugate: bool,
) -> Result<Option<Equivalence>> {
    let r = a.rank();
    if r != b.rank() {
        return Ok(None);
    }
    let tol = a.tolerance().max(b.tolerance());
    let map = |z: Complex64| if conjugate { z.conj() } else { z };

    let (color_a, color_b) = refine_colors(a, b, map);
    let candidates: Vec<Vec<usize>> =
        (0..r).map(|i| (0..r).filter(|&j| color_b[j] == color_a[i]).collect()).collect();
    for (i, c) in candidates.iter().enumerate() {
        // Class sizes must agree on both sides.
        let peers = color_a.iter().filter(|&&x| x == color_a[i]).count();
        if c.is_empty() || peers != c.len() {
            return Ok(None);
        }
        if c.len() > MAX_SEARCH_BLOCK {
            return Err(Error::Capacity(format!(
                "label {i} has {} indistinguishable candidates (limit {MAX_SEARCH_BLOCK})",
                c.len()
            )));
        }
    }

    let mut perm = vec![usize::MAX; r];
    let mut used = vec![false; r];
    let ok = |perm: &[usize], i: usize, j_img: usize| -> bool {
        if !approx_eq(a.s()[(i, i)], map(b.s()[(j_img, j_img)]), tol) {
            return false;
        }
        (0..i).all(|p| approx_eq(a.s()[(p, i)], map(b.s()[(perm[p], j_img)]), tol))
    };

    fn search(
        i: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        candidates: &[Vec<usize>],
        ok: &dyn Fn(&[usize], usize, usize) -> bool,
    ) -> bool {
        if i == perm.len() {
            return true;
        }
        for &c in &candidates[i] {
            if used[c] || (i == 0 && c != 0) || !ok(perm, i, c) {
                continue;
            }
            perm[i] = c;
            used[c] = true;
            if search(i + 1, perm, used, candidates, ok) {
                return true;
            }
            used[c] = false;
            perm[i] = usize::MAX;
        }
        false
    }

    if search(0, &mut perm, &mut used, &candidates, &ok) {
        Ok(Some(Equivalence { perm, conjugate }))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn structural_errors_are_not_reports() {
        let s = CMatrix::identity(2, 2);
        assert!(matches!(ModularData::new(s.clone(), vec![ONE]), Err(Error::Dimension(_))));
        let rect = CMatrix::zeros(2, 3);
        assert!(ModularData::new(rect, vec![ONE, ONE]).is_err());
    }

    #[test]
    fn trivial_data_is_strict() {
        let d = catalog::trivial_data();
        let rep = verify_verlinde(&d).unwrap();
        assert!(rep.is_strict(1e-12));
        assert_eq!(rep.anomaly_phase, ONE);
        let f = fusion_from_s(&d).unwrap();
        assert_eq!(f.get(0, 0, 0), 1);
        assert_eq!(charge_conjugation(&d).unwrap(), vec![0]);
        assert_eq!(global_index(&d).unwrap(), 1.0);
    }

    #[test]
    fn toric_code_axioms() {
        let d = catalog::toric_code();
        let rep = verify_verlinde(&d).unwrap();
        assert!(rep.is_strict(1e-9), "{rep:?}");
        let f = fusion_from_s(&d).unwrap();
        // Z/2 x Z/2 group law: every product has exactly one channel.
        for i in 0..4 {
            for j in 0..4 {
                let row: Vec<u32> = (0..4).map(|k| f.get(i, j, k)).collect();
                assert_eq!(row.iter().sum::<u32>(), 1);
                assert!(row.iter().all(|&x| x <= 1));
            }
            assert_eq!(f.get(i, i, 0), 1);
        }
        assert_eq!(charge_conjugation(&d).unwrap(), vec![0, 1, 2, 3]);
        assert!((global_index(&d).unwrap() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn fibonacci_is_anomalous() {
        let d = catalog::fibonacci();
        let rep = verify_verlinde(&d).unwrap();
        assert!(rep.matrix_axioms_pass());
        assert!(!rep.is_strict(1e-9));
        assert!((rep.anomaly_phase.norm() - 1.0).abs() < 1e-9);
        // (ST)^3 S^-2 for Fibonacci is exp(7πi/10).
        let expected = Complex64::from_polar(1.0, 0.7 * std::f64::consts::PI);
        assert!(approx_eq(rep.anomaly_phase, expected, 1e-9));

        let f = fusion_from_s(&d).unwrap();
        assert_eq!(f.get(1, 1, 0), 1);
        assert_eq!(f.get(1, 1, 1), 1);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((global_index(&d).unwrap() - (2.0 + phi)).abs() < 1e-9);
        assert!((global_index(&d).unwrap() - 3.6180339887).abs() < 1e-9);
    }

    #[test]
    fn cyclic_conjugation_swaps_inverse_pairs() {
        let d = catalog::pointed_cyclic(3, 2).unwrap();
        assert_eq!(charge_conjugation(&d).unwrap(), vec![0, 2, 1]);
    }

    #[test]
    fn non_permutation_s_squared_is_an_error() {
        let h = 1.0 / 2f64.sqrt();
        // A unitary symmetric matrix whose square is not a permutation.
        let s = CMatrix::from_row_slice(2, 2, &[c(h, 0.0), c(0.0, h), c(0.0, h), c(h, 0.0)]);
        let d = ModularData::new(s, vec![ONE, ONE]).unwrap();
        assert!(matches!(charge_conjugation(&d), Err(Error::Conjugation { .. })));
        let rep = verify_verlinde(&d).unwrap();
        assert!(!rep.s_squared_permutation.passed);
    }

    #[test]
    fn fusion_integrality_error_names_indices() {
        let h = 1.0 / 2f64.sqrt();
        let s = CMatrix::from_row_slice(2, 2, &[c(h, 0.0), c(0.0, h), c(0.0, h), c(h, 0.0)]);
        let d = ModularData::new(s, vec![ONE, ONE]).unwrap();
        match fusion_from_s(&d) {
            Err(Error::FusionIntegrality { i, j, k, .. }) => assert!(i < 2 && j < 2 && k < 2),
            other => panic!("expected integrality error, got {other:?}"),
        }
    }

    #[test]
    fn doubling() {
        let t = catalog::trivial_data();
        let dt = double_data(&t);
        assert_eq!(dt.rank(), 1);
        assert!(approx_eq(dt.s()[(0, 0)], ONE, 1e-15));

        let toric = double_data(&catalog::toric_code());
        assert_eq!(toric.rank(), 16);
        assert!(verify_verlinde(&toric).unwrap().is_strict(1e-9));

        let fib = double_data(&catalog::fibonacci());
        assert_eq!(fib.rank(), 4);
        let rep = verify_verlinde(&fib).unwrap();
        assert!(rep.is_strict(1e-9), "{:?}", rep.anomaly_phase);
    }

    #[test]
    fn equivalence_search() {
        let toric = catalog::toric_code();
        let e = conjugate_equivalent(&toric, &toric).unwrap().unwrap();
        assert_eq!(e.perm, vec![0, 1, 2, 3]);

        let ds = catalog::twisted_double_cyclic(3, 1);
        let e = conjugate_equivalent(&ds, &ds.conjugate()).unwrap().unwrap();
        assert_eq!(e.perm, (0..9).collect::<Vec<_>>());

        let semion = catalog::pointed_cyclic(2, 1).unwrap();
        assert!(conjugate_equivalent(&catalog::fibonacci(), &semion).unwrap().is_none());
        assert!(conjugate_equivalent(&catalog::fibonacci(), &catalog::ising()).unwrap().is_none());

        // A shuffled copy is found again.
        let shuffled = ds.permuted(&[0, 4, 2, 8, 1, 5, 3, 7, 6]);
        let e = permutation_equivalent(&shuffled, &ds).unwrap().unwrap();
        assert_eq!(e.perm, vec![0, 4, 2, 8, 1, 5, 3, 7, 6]);
    }

    #[test]
    fn equivalence_rejects_large_blocks() {
        let d = catalog::quantum_double_abelian(&catalog::FiniteAbelianGroup::new(vec![2, 2, 2]));
        // 64 labels, T = ±1 only.
        assert!(matches!(permutation_equivalent(&d, &d), Err(Error::Capacity(_))));
    }

    #[test]
    fn fusion_table_invariants_detect_breakage() {
        let good = FusionTable::from_fn(2, |i, j, k| u32::from((i + j) % 2 == k));
        assert!(good.has_unit() && good.is_commutative() && good.is_associative());
        // Fibonacci-like table with the wrong tau x tau channel count.
        let bad = FusionTable::from_fn(2, |i, j, k| match (i, j, k) {
            (0, j, k) => u32::from(j == k),
            (i, 0, k) => u32::from(i == k),
            (1, 1, 0) => 1,
            (1, 1, 1) => 2,
            _ => 0,
        });
        assert!(bad.has_unit() && bad.is_commutative());
        assert!(bad.is_associative());
        let noncomm = FusionTable::from_fn(3, |i, j, k| match (i, j) {
            (0, j) => u32::from(j == k),
            (i, 0) => u32::from(i == k),
            (1, 2) => u32::from(k == 1),
            (2, 1) => u32::from(k == 2),
            (1, 1) => u32::from(k == 0),
            (2, 2) => u32::from(k == 0),
            _ => 0,
        });
        assert!(!noncomm.is_commutative());
        assert!(!noncomm.is_associative());
    }
}
