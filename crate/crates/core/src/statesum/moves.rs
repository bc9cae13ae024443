//! Bistellar 1-4 and 2-3 moves.
//!
//! Untouched tetrahedra keep their index and local labels. New
//! tetrahedra take the orientation of the tetrahedron they were carved
//! from, so the manifold orientation survives every move.

use super::triangulation::{compose, face_vertices, inverse, sign, Gluing, Perm, Triangulation};
use crate::error::{Error, Result};

fn transposition(i: usize, j: usize) -> Perm {
    let mut p = [0, 1, 2, 3];
    p.swap(i, j);
    p
}

fn old_gluings(tri: &Triangulation, extra: usize) -> Vec<[Option<Gluing>; 4]> {
    let mut out: Vec<[Option<Gluing>; 4]> = tri.gluings().iter().map(|row| row.map(Some)).collect();
    out.extend(std::iter::repeat_n([None; 4], extra));
    out
}

/// Cone a tetrahedron from a new interior vertex.
///
/// `N_i` is the old tetrahedron with local vertex `i` replaced by the new
/// vertex; `N_0` keeps the old index and `N_1..N_3` are appended.
pub fn pachner_14(tri: &Triangulation, tet: usize) -> Result<Triangulation> {
    let n = tri.len();
    if tet >= n {
        return Err(Error::Structure(format!("no tetrahedron {tet} (have {n})")));
    }
    let idx = |i: usize| if i == 0 { tet } else { n + i - 1 };
    let mut gluings = old_gluings(tri, 3);
    let mut orientation = tri.orientation().to_vec();
    orientation.extend([orientation[tet]; 3]);

    for (u, row) in gluings.iter_mut().enumerate().take(n) {
        if u == tet {
            continue;
        }
        for slot in row.iter_mut() {
            let g = slot.as_mut().expect("closed");
            if g.tet == tet {
                g.tet = idx(g.face);
            }
        }
    }
    for i in 0..4 {
        let mut row = [None; 4];
        let old = tri.gluing(tet, i);
        row[i] = Some(if old.tet == tet { Gluing { tet: idx(old.face), ..old } } else { old });
        for (j, slot) in row.iter_mut().enumerate() {
            if j != i {
                *slot = Some(Gluing { tet: idx(j), face: i, perm: transposition(i, j) });
            }
        }
        gluings[idx(i)] = row;
    }
    Triangulation::build(gluings, Some(orientation))
}

/// Replace the two tetrahedra on either side of face class `face` by
/// three around a new edge joining their apexes.
///
/// With `A` the first slot of the face, apex `a` opposite it and `T` the
/// shared triangle, `C_k` for `k ∈ T` has local vertices `(a, b, u, w)`
/// where `{u, w} = T \ {k}`. `C_k`'s face 1 inherits `A`'s face `k`, its
/// face 0 inherits the matching face of `B`.
pub fn pachner_23(tri: &Triangulation, face: usize) -> Result<Triangulation> {
    let n = tri.len();
    let (ta, fa) = tri
        .face_slot(face)
        .ok_or_else(|| Error::Structure(format!("no face {face} (have {})", tri.num_faces())))?;
    let Gluing { tet: tb, face: fb, perm: p } = tri.gluing(ta, fa);
    if tb == ta {
        return Err(Error::Structure(format!(
            "face {face} joins tetrahedron {ta} to itself; a 2-3 move needs two tetrahedra"
        )));
    }
    let tri_verts = face_vertices(fa);
    let slot_of = |k: usize| tri_verts.iter().position(|&x| x == k).expect("k in T");
    let idx = |k: usize| [ta, tb, n][slot_of(k)];
    let others = |k: usize| -> [usize; 2] {
        let mut o = [0; 2];
        let mut c = 0;
        for &x in &tri_verts {
            if x != k {
                o[c] = x;
                c += 1;
            }
        }
        o
    };
    let pos = |k: usize, m: usize| if others(k)[0] == m { 2 } else { 3 };
    // C_k local -> A local and C_k local -> B local.
    let phi = |k: usize| -> Perm {
        let [u, w] = others(k);
        [fa as u8, k as u8, u as u8, w as u8]
    };
    let psi = |k: usize| -> Perm {
        let [u, w] = others(k);
        [p[k], fb as u8, p[u], p[w]]
    };
    let pinv = inverse(p);
    let translate = |g: Gluing| -> Gluing {
        if g.tet == ta {
            let k = g.face;
            Gluing { tet: idx(k), face: 1, perm: compose(inverse(phi(k)), g.perm) }
        } else if g.tet == tb {
            let k = pinv[g.face] as usize;
            Gluing { tet: idx(k), face: 0, perm: compose(inverse(psi(k)), g.perm) }
        } else {
            g
        }
    };

    let mut gluings = old_gluings(tri, 1);
    let mut orientation = tri.orientation().to_vec();
    orientation.push(0);
    let sa = tri.orientation()[ta];

    for (u, row) in gluings.iter_mut().enumerate().take(n) {
        if u == ta || u == tb {
            continue;
        }
        for slot in row.iter_mut() {
            *slot = slot.map(&translate);
        }
    }
    for &k in &tri_verts {
        let mut row = [None; 4];
        let ga = tri.gluing(ta, k);
        row[1] = Some(translate(Gluing { perm: compose(ga.perm, phi(k)), ..ga }));
        let gb = tri.gluing(tb, p[k] as usize);
        row[0] = Some(translate(Gluing { perm: compose(gb.perm, psi(k)), ..gb }));
        for m in others(k) {
            let third = others(k).into_iter().find(|&x| x != m).expect("two others");
            let mut r: Perm = [0, 1, 0, 0];
            r[pos(k, m)] = pos(m, k) as u8;
            r[pos(k, third)] = pos(m, third) as u8;
            row[pos(k, m)] = Some(Gluing { tet: idx(m), face: pos(m, k), perm: r });
        }
        gluings[idx(k)] = row;
        orientation[idx(k)] = sa * sign(phi(k));
    }
    Triangulation::build(gluings, Some(orientation))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_four_counts() {
        let s3 = Triangulation::boundary_of_4_simplex();
        let t = pachner_14(&s3, 2).unwrap();
        assert_eq!(t.len(), 8);
        assert_eq!(t.num_vertices(), 6);
        assert_eq!(t.euler_characteristic(), 0);
        assert!(pachner_14(&s3, 5).is_err());
    }

    #[test]
    fn two_three_counts() {
        let s3 = Triangulation::boundary_of_4_simplex();
        for f in 0..s3.num_faces() {
            let t = pachner_23(&s3, f).unwrap();
            assert_eq!(t.len(), 6);
            assert_eq!(t.num_edges(), s3.num_edges() + 1);
            assert_eq!(t.num_vertices(), 5);
            assert_eq!(t.euler_characteristic(), 0);
        }
        assert!(pachner_23(&s3, 99).is_err());
    }

    #[test]
    fn moves_compose() {
        let mut t = Triangulation::boundary_of_4_simplex();
        for step in 0..12 {
            t = if step % 3 == 0 {
                pachner_14(&t, step % t.len()).unwrap()
            } else {
                pachner_23(&t, (7 * step) % t.num_faces()).unwrap()
            };
            assert_eq!(t.euler_characteristic(), 0);
        }
    }
}
