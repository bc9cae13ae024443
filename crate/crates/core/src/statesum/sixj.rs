use num_complex::Complex64;

use crate::catalog::cyclic_cocycle;
use crate::error::{Error, Result};
use crate::numeric::{DEFAULT_TOLERANCE, ZERO};

/// Tetrahedron weights on a label set.
///
/// A labeled tetrahedron with ordered vertices `0 < 1 < 2 < 3` is indexed
/// by its edge labels `[g01, g12, g23, g02, g13, g03]`. Face `abc` is
/// admissible when `g_ac` occurs in `g_ab ⊗ g_bc`, written
/// `is_admissible(g_ab, g_bc, g_ac)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SixJData {
    names: Vec<String>,
    dims: Vec<f64>,
    admissible: Vec<bool>,
    weights: Vec<Complex64>,
}

impl SixJData {
    /// `admissible` has `r³` entries indexed `(a·r + b)·r + c`; `weights`
    /// has `r⁶` entries in edge order `[g01, g12, g23, g02, g13, g03]`,
    /// most significant first.
    pub fn new(
        names: Vec<String>,
        dims: Vec<f64>,
        admissible: Vec<bool>,
        weights: Vec<Complex64>,
    ) -> Result<Self> {
        let r = names.len();
        if r == 0 || dims.len() != r || admissible.len() != r.pow(3) || weights.len() != r.pow(6) {
            return Err(Error::Dimension(format!(
                "6j data of rank {r} needs {r} dimensions, {} admissibility flags and {} weights",
                r.pow(3),
                r.pow(6)
            )));
        }
        if (dims[0] - 1.0).abs() > DEFAULT_TOLERANCE {
            return Err(Error::Structure(format!("vacuum dimension is {}, not 1", dims[0])));
        }
        if let Some(x) = dims.iter().position(|&d| !(d > 0.0 && d.is_finite())) {
            return Err(Error::Structure(format!("label {x} has non-positive dimension")));
        }
        Ok(Self { names, dims, admissible, weights })
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn dims(&self) -> &[f64] {
        &self.dims
    }

    /// `λ = Σ_X [X]`.
    pub fn global_index(&self) -> f64 {
        self.dims.iter().sum()
    }

    pub fn is_admissible(&self, a: usize, b: usize, c: usize) -> bool {
        let r = self.rank();
        self.admissible[(a * r + b) * r + c]
    }

    fn weight_index(&self, e: [usize; 6]) -> usize {
        let r = self.rank();
        e.iter().fold(0, |acc, &x| acc * r + x)
    }

    pub fn weight(&self, edges: [usize; 6]) -> Complex64 {
        self.weights[self.weight_index(edges)]
    }

    pub fn set_weight(&mut self, edges: [usize; 6], value: Complex64) {
        let i = self.weight_index(edges);
        self.weights[i] = value;
    }

    /// The unique admissible `c` for each `(a, b)`, if the data is pointed.
    pub(crate) fn fusion_table(&self) -> Option<Vec<usize>> {
        let r = self.rank();
        let mut out = Vec::with_capacity(r * r);
        for a in 0..r {
            for b in 0..r {
                let mut cs = (0..r).filter(|&c| self.is_admissible(a, b, c));
                let c = cs.next()?;
                if cs.next().is_some() {
                    return None;
                }
                out.push(c);
            }
        }
        Some(out)
    }

    /// Every dimension is 1 and every product has exactly one admissible
    /// outcome, forming a group with the vacuum as identity.
    pub fn is_pointed(&self) -> bool {
        let r = self.rank();
        if self.dims.iter().any(|&d| (d - 1.0).abs() > DEFAULT_TOLERANCE) {
            return false;
        }
        let Some(f) = self.fusion_table() else {
            return false;
        };
        let unit = (0..r).all(|a| f[a] == a && f[a * r] == a);
        let latin = (0..r).all(|a| {
            let mut row: Vec<usize> = (0..r).map(|b| f[a * r + b]).collect();
            let mut col: Vec<usize> = (0..r).map(|b| f[b * r + a]).collect();
            row.sort_unstable();
            col.sort_unstable();
            row.iter().copied().eq(0..r) && col.iter().copied().eq(0..r)
        });
        unit && latin
    }
}

/// `Vec_{ℤ/n}^ω` with the cyclic cocycle of parameter `k`.
pub fn pointed_sixj(n: u64, k: u64) -> SixJData {
    let r = n as usize;
    let names = (0..n).map(|g| g.to_string()).collect();
    let mut admissible = vec![false; r.pow(3)];
    for a in 0..r {
        for b in 0..r {
            admissible[(a * r + b) * r + (a + b) % r] = true;
        }
    }
    let mut weights = vec![ZERO; r.pow(6)];
    for g01 in 0..r {
        for g12 in 0..r {
            for g23 in 0..r {
                let g02 = (g01 + g12) % r;
                let g13 = (g12 + g23) % r;
                let g03 = (g02 + g23) % r;
                let e = [g01, g12, g23, g02, g13, g03];
                let idx = e.iter().fold(0, |acc, &x| acc * r + x);
                weights[idx] = cyclic_cocycle(n, k, g01 as u64, g12 as u64, g23 as u64);
            }
        }
    }
    SixJData::new(names, vec![1.0; r], admissible, weights).expect("consistent sizes")
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PentagonReport {
    pub passed: bool,
    pub residual: f64,
    /// Number of admissible boundary colorings checked.
    pub checked: usize,
}

/// Edge labels of the 4-simplex, `g[a][b]` for `a < b`.
type Board = [[usize; 5]; 5];

// 4-simplex edges other than 04, in assignment order.
const PENTAGON_EDGES: [(usize, usize); 9] =
    [(0, 1), (1, 2), (0, 2), (2, 3), (1, 3), (0, 3), (3, 4), (2, 4), (1, 4)];

/// Checks the 2-3 identity on the boundary of a 4-simplex `01234`:
///
/// ```text
/// W(1234)·W(0123) = Σ_{g04} [g04] · W(0234) · conj(W(0134)) · W(0124)
/// ```
///
/// over every coloring of the other nine edges whose faces avoiding `04`
/// are admissible. For pointed data this is the cocycle condition.
pub fn verify_pentagon(sixj: &SixJData) -> PentagonReport {
    let r = sixj.rank();
    let mut g = [[0usize; 5]; 5];
    let mut worst = 0.0f64;
    let mut checked = 0;

    let tet = |g: &Board, v: [usize; 4]| {
        let [a, b, c, d] = v;
        sixj.weight([g[a][b], g[b][c], g[c][d], g[a][c], g[b][d], g[a][d]])
    };
    let face_ok =
        |g: &Board, a: usize, b: usize, c: usize| sixj.is_admissible(g[a][b], g[b][c], g[a][c]);

    fn recurse(
        depth: usize,
        g: &mut Board,
        r: usize,
        visit: &mut dyn FnMut(&Board),
        face_ok: &dyn Fn(&Board, usize, usize, usize) -> bool,
    ) {
        if depth == PENTAGON_EDGES.len() {
            visit(g);
            return;
        }
        let (a, b) = PENTAGON_EDGES[depth];
        for x in 0..r {
            g[a][b] = x;
            let ok = match depth {
                2 => face_ok(g, 0, 1, 2),
                4 => face_ok(g, 1, 2, 3),
                5 => face_ok(g, 0, 2, 3) && face_ok(g, 0, 1, 3),
                7 => face_ok(g, 2, 3, 4),
                8 => face_ok(g, 1, 2, 4) && face_ok(g, 1, 3, 4),
                _ => true,
            };
            if ok {
                recurse(depth + 1, g, r, visit, face_ok);
            }
        }
    }

    let mut visit = |g: &Board| {
        let lhs = tet(g, [1, 2, 3, 4]) * tet(g, [0, 1, 2, 3]);
        let mut g = *g;
        let mut rhs = ZERO;
        for x in 0..r {
            g[0][4] = x;
            if face_ok(&g, 0, 1, 4) && face_ok(&g, 0, 2, 4) && face_ok(&g, 0, 3, 4) {
                rhs += sixj.dims()[x]
                    * tet(&g, [0, 2, 3, 4])
                    * tet(&g, [0, 1, 3, 4]).conj()
                    * tet(&g, [0, 1, 2, 4]);
            }
        }
        worst = worst.max((lhs - rhs).norm());
        checked += 1;
    };
    recurse(0, &mut g, r, &mut visit, &face_ok);
    PentagonReport { passed: worst <= DEFAULT_TOLERANCE, residual: worst, checked }
}

/// Weight of a tetrahedron under its orientation sign; reversal conjugates.
pub(crate) fn oriented(w: Complex64, sign: i8) -> Complex64 {
    if sign > 0 {
        w
    } else {
        w.conj()
    }
}
