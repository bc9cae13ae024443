use std::borrow::Cow;
use std::collections::VecDeque;

use num_complex::Complex64;
use rayon::prelude::*;

use super::sixj::{oriented, SixJData};
use super::triangulation::{edge_index, face_vertices, sign, Perm, Triangulation};
use crate::error::{Error, Result};
use crate::numeric::{pairwise_sum, ONE};
use crate::surgery::{InvariantValue, Method};

const UNSET: usize = usize::MAX;

/// How the edge colorings are enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Fix a spanning tree of the 1-skeleton to the vacuum and multiply by
    /// the gauge orbit size `|G|^{V−1}`.
    #[default]
    GaugeFixed,
    /// Every edge is free.
    Exhaustive,
}

struct Problem<'a> {
    sixj: &'a SixJData,
    r: usize,
    fuse: Vec<usize>,
    ldiv: Vec<usize>,
    rdiv: Vec<usize>,
    /// Edge classes `(ab, bc, ac)` of each face, vertices in class order.
    faces: Vec<[usize; 3]>,
    edge_faces: Vec<Vec<usize>>,
    /// Edge classes in sorted-vertex order and the orientation sign.
    tets: Vec<([usize; 6], i8)>,
    /// Edge classes in the order the search assigns them.
    order: Vec<usize>,
}

impl Problem<'_> {
    fn set(&self, e: usize, x: usize, colors: &mut [usize], trail: &mut Vec<usize>) -> bool {
        let r = self.r;
        let mut stack = vec![(e, x)];
        while let Some((e, x)) = stack.pop() {
            if colors[e] != UNSET {
                if colors[e] != x {
                    return false;
                }
                continue;
            }
            colors[e] = x;
            trail.push(e);
            for &f in &self.edge_faces[e] {
                let [ab, bc, ac] = self.faces[f];
                let (p, q, s) = (colors[ab], colors[bc], colors[ac]);
                match (p != UNSET, q != UNSET, s != UNSET) {
                    (true, true, true) => {
                        if self.fuse[p * r + q] != s {
                            return false;
                        }
                    }
                    (true, true, false) => stack.push((ac, self.fuse[p * r + q])),
                    (true, false, true) => stack.push((bc, self.ldiv[p * r + s])),
                    (false, true, true) => stack.push((ab, self.rdiv[q * r + s])),
                    _ => {}
                }
            }
        }
        true
    }

    fn undo(colors: &mut [usize], trail: &mut Vec<usize>, mark: usize) {
        while trail.len() > mark {
            let e = trail.pop().expect("above mark");
            colors[e] = UNSET;
        }
    }

    fn term(&self, colors: &[usize]) -> Complex64 {
        let dims = self.sixj.dims();
        let mut z = ONE;
        for (edges, eps) in &self.tets {
            z *= oriented(self.sixj.weight(edges.map(|e| colors[e])), *eps);
        }
        let edge_dims: f64 = colors.iter().map(|&c| dims[c].sqrt()).product();
        z * edge_dims
    }

    fn search(&self, colors: &mut [usize], trail: &mut Vec<usize>, out: &mut Vec<Complex64>) {
        let Some(&e) = self.order.iter().find(|&&e| colors[e] == UNSET) else {
            out.push(self.term(colors));
            return;
        };
        for x in 0..self.r {
            let mark = trail.len();
            if self.set(e, x, colors, trail) {
                self.search(colors, trail, out);
            }
            Self::undo(colors, trail, mark);
        }
    }
}

/// `Z = λ^{−V} Σ_colorings Π_E [X]^{1/2} Π_τ W(τ)^{±1}` for pointed 6j data.
pub fn tv_evaluate(sixj: &SixJData, tri: &Triangulation) -> Result<InvariantValue> {
    tv_evaluate_with(sixj, tri, Strategy::GaugeFixed)
}

pub fn tv_evaluate_with(
    sixj: &SixJData,
    tri: &Triangulation,
    strategy: Strategy,
) -> Result<InvariantValue> {
    if !sixj.is_pointed() {
        return Err(Error::Unsupported(
            "state sums need pointed 6j data (all dimensions 1, multiplicity free)".into(),
        ));
    }
    // Local vertex orders come from the global order on vertex classes,
    // which needs four distinct classes per tetrahedron.
    let tri: Cow<Triangulation> = if tri.has_distinct_vertices() {
        Cow::Borrowed(tri)
    } else {
        Cow::Owned(tri.barycentric_subdivision())
    };
    let r = sixj.rank();
    let fuse = sixj.fusion_table().expect("pointed");
    let mut ldiv = vec![0; r * r];
    let mut rdiv = vec![0; r * r];
    for a in 0..r {
        for b in 0..r {
            let c = fuse[a * r + b];
            ldiv[a * r + c] = b;
            rdiv[b * r + c] = a;
        }
    }

    let vc = tri.vertex_class();
    let ec = tri.edge_class();
    let ne = tri.num_edges();
    let mut tets = Vec::with_capacity(tri.len());
    let mut order = Vec::with_capacity(ne);
    let mut seen = vec![false; ne];
    let mut ends = vec![(0, 0); ne];
    for t in 0..tri.len() {
        let mut sigma: Perm = [0, 1, 2, 3];
        sigma.sort_by_key(|&v| vc[t][v as usize]);
        let s = sigma.map(usize::from);
        let e = |i: usize, j: usize| ec[t][edge_index(s[i], s[j])];
        let edges = [e(0, 1), e(1, 2), e(2, 3), e(0, 2), e(1, 3), e(0, 3)];
        tets.push((edges, tri.orientation()[t] * sign(sigma)));
        for (i, j) in [(0, 1), (1, 2), (2, 3), (0, 2), (1, 3), (0, 3)] {
            let id = e(i, j);
            ends[id] = (vc[t][s[i]], vc[t][s[j]]);
            if !std::mem::replace(&mut seen[id], true) {
                order.push(id);
            }
        }
    }
    let mut faces = Vec::with_capacity(tri.num_faces());
    let mut edge_faces = vec![Vec::new(); ne];
    for class in 0..tri.num_faces() {
        let (t, f) = tri.face_slot(class).expect("every class has a slot");
        let mut v = face_vertices(f);
        v.sort_by_key(|&x| vc[t][x]);
        let [a, b, c] = v;
        let face = [ec[t][edge_index(a, b)], ec[t][edge_index(b, c)], ec[t][edge_index(a, c)]];
        for &e in &face {
            if !edge_faces[e].contains(&faces.len()) {
                edge_faces[e].push(faces.len());
            }
        }
        faces.push(face);
    }
    let problem = Problem { sixj, r, fuse, ldiv, rdiv, faces, edge_faces, tets, order };

    let nv = tri.num_vertices();
    let mut colors = vec![UNSET; ne];
    let mut trail = Vec::new();
    let mut gauge = 1.0;
    if strategy == Strategy::GaugeFixed {
        let mut adj = vec![Vec::new(); nv];
        for (e, &(u, v)) in ends.iter().enumerate() {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        let mut reached = vec![false; nv];
        reached[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for &(v, e) in &adj[u] {
                if !reached[v] {
                    reached[v] = true;
                    queue.push_back(v);
                    if !problem.set(e, 0, &mut colors, &mut trail) {
                        return Err(Error::Structure(
                            "spanning tree forces an inadmissible face".into(),
                        ));
                    }
                }
            }
        }
        gauge = (r as f64).powi(nv as i32 - 1);
    }

    let total = match problem.order.iter().find(|&&e| colors[e] == UNSET) {
        None => problem.term(&colors),
        Some(&first) => {
            let branches: Vec<Complex64> = (0..r)
                .into_par_iter()
                .map(|x| {
                    let mut colors = colors.clone();
                    let mut trail = Vec::new();
                    let mut terms = Vec::new();
                    if problem.set(first, x, &mut colors, &mut trail) {
                        problem.search(&mut colors, &mut trail, &mut terms);
                    }
                    pairwise_sum(&terms)
                })
                .collect();
            pairwise_sum(&branches)
        }
    };
    let lambda = sixj.global_index();
    let value = total * gauge / lambda.powi(nv as i32);
    InvariantValue::new(value, Method::StateSum)
}
