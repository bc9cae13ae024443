use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};

/// Permutation of the four local vertex positions.
pub type Perm = [u8; 4];

pub const IDENTITY: Perm = [0, 1, 2, 3];

/// Local edges in a fixed order; `edge_class()[t][e]` follows it.
pub const EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

pub fn edge_index(a: usize, b: usize) -> usize {
    let (a, b) = (a.min(b), a.max(b));
    EDGES.iter().position(|&e| e == (a, b)).expect("distinct positions below 4")
}

/// Vertices of face `f` in increasing order.
pub fn face_vertices(f: usize) -> [usize; 3] {
    let mut out = [0; 3];
    let mut k = 0;
    for v in 0..4 {
        if v != f {
            out[k] = v;
            k += 1;
        }
    }
    out
}

pub fn inverse(p: Perm) -> Perm {
    let mut q = [0; 4];
    for (i, &pi) in p.iter().enumerate() {
        q[pi as usize] = i as u8;
    }
    q
}

/// `(p ∘ q)(i) = p(q(i))`.
pub fn compose(p: Perm, q: Perm) -> Perm {
    [p[q[0] as usize], p[q[1] as usize], p[q[2] as usize], p[q[3] as usize]]
}

pub fn sign(p: Perm) -> i8 {
    let mut s = 1;
    for i in 0..4 {
        for j in i + 1..4 {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

fn is_perm(p: Perm) -> bool {
    let mut seen = [false; 4];
    p.iter().all(|&x| x < 4 && !std::mem::replace(&mut seen[x as usize], true))
}

/// Face `face` of tetrahedron `tet`, reached through `perm`, which maps
/// local vertices of the source tetrahedron to those of `tet`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gluing {
    pub tet: usize,
    pub face: usize,
    pub perm: Perm,
}

/// A closed, connected, oriented 3-dimensional gluing complex.
///
/// Faces are glued in pairs by affine maps; several vertices (or edges) of
/// one tetrahedron may be identified. Each tetrahedron carries an
/// orientation sign for its local vertex order `0123`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    gluings: Vec<[Gluing; 4]>,
    orientation: Vec<i8>,
    vertex_class: Vec<[usize; 4]>,
    edge_class: Vec<[usize; 6]>,
    face_class: Vec<[usize; 4]>,
    counts: [usize; 3],
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut x = x;
        while self.0[x] != r {
            x = std::mem::replace(&mut self.0[x], r);
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }

    /// Dense class ids in order of first appearance.
    fn classes(&mut self) -> (Vec<usize>, usize) {
        let n = self.0.len();
        let mut id = HashMap::new();
        let out = (0..n)
            .map(|x| {
                let r = self.find(x);
                let next = id.len();
                *id.entry(r).or_insert(next)
            })
            .collect();
        (out, id.len())
    }
}

impl Triangulation {
    /// Validates the gluing involution, closedness, connectivity and
    /// orientability, then orients every tetrahedron consistently with
    /// tetrahedron 0 taken positive.
    pub fn new(gluings: Vec<[Option<Gluing>; 4]>) -> Result<Self> {
        Self::build(gluings, None)
    }

    /// As [`Triangulation::new`] but with orientations given; they must be
    /// consistent with the gluings.
    pub(crate) fn build(
        gluings: Vec<[Option<Gluing>; 4]>,
        orientation: Option<Vec<i8>>,
    ) -> Result<Self> {
        let n = gluings.len();
        if n == 0 {
            return Err(Error::Structure("triangulation has no tetrahedra".into()));
        }
        let mut full = Vec::with_capacity(n);
        for (t, faces) in gluings.iter().enumerate() {
            let mut row = [Gluing { tet: 0, face: 0, perm: IDENTITY }; 4];
            for (f, g) in faces.iter().enumerate() {
                let Some(g) = *g else {
                    return Err(Error::Structure(format!(
                        "face {f} of tetrahedron {t} is not glued"
                    )));
                };
                if g.tet >= n || g.face >= 4 || !is_perm(g.perm) || g.perm[f] as usize != g.face {
                    return Err(Error::Structure(format!(
                        "gluing ({t},{f}) -> ({},{}) is malformed",
                        g.tet, g.face
                    )));
                }
                if g.tet == t && g.face == f {
                    return Err(Error::Structure(format!(
                        "face {f} of tetrahedron {t} is glued to itself"
                    )));
                }
                row[f] = g;
            }
            full.push(row);
        }
        for (t, row) in full.iter().enumerate() {
            for (f, g) in row.iter().enumerate() {
                let back = full[g.tet][g.face];
                if back.tet != t || back.face != f || back.perm != inverse(g.perm) {
                    return Err(Error::Structure(format!(
                        "gluing involution fails: ({t},{f}) -> ({},{}) is not matched by its reverse",
                        g.tet, g.face
                    )));
                }
            }
        }

        let orientation = match orientation {
            Some(o) => {
                if o.len() != n || o.iter().any(|&s| s != 1 && s != -1) {
                    return Err(Error::Structure("orientation vector is malformed".into()));
                }
                o
            }
            None => Self::orient(&full)?,
        };
        for (t, row) in full.iter().enumerate() {
            for (f, g) in row.iter().enumerate() {
                if orientation[g.tet] != -orientation[t] * sign(g.perm) {
                    return Err(Error::Structure(format!(
                        "orientation is inconsistent across ({t},{f}) -> ({},{})",
                        g.tet, g.face
                    )));
                }
            }
        }

        let mut vuf = UnionFind::new(4 * n);
        let mut euf = UnionFind::new(6 * n);
        let mut fuf = UnionFind::new(4 * n);
        for (t, row) in full.iter().enumerate() {
            for (f, g) in row.iter().enumerate() {
                fuf.union(4 * t + f, 4 * g.tet + g.face);
                let fv = face_vertices(f);
                for &v in &fv {
                    vuf.union(4 * t + v, 4 * g.tet + g.perm[v] as usize);
                }
                for (i, &a) in fv.iter().enumerate() {
                    for &b in &fv[i + 1..] {
                        let (pa, pb) = (g.perm[a] as usize, g.perm[b] as usize);
                        euf.union(6 * t + edge_index(a, b), 6 * g.tet + edge_index(pa, pb));
                    }
                }
            }
        }
        let (vc, nv) = vuf.classes();
        let (ec, ne) = euf.classes();
        let (fc, nf) = fuf.classes();
        let chi = nv as i64 - ne as i64 + nf as i64 - n as i64;
        if chi != 0 {
            return Err(Error::Structure(format!(
                "not a closed 3-manifold: V - E + F - T = {chi}"
            )));
        }
        Ok(Self {
            vertex_class: (0..n).map(|t| std::array::from_fn(|v| vc[4 * t + v])).collect(),
            edge_class: (0..n).map(|t| std::array::from_fn(|e| ec[6 * t + e])).collect(),
            face_class: (0..n).map(|t| std::array::from_fn(|f| fc[4 * t + f])).collect(),
            gluings: full,
            orientation,
            counts: [nv, ne, nf],
        })
    }

    fn orient(full: &[[Gluing; 4]]) -> Result<Vec<i8>> {
        let mut s = vec![0i8; full.len()];
        s[0] = 1;
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(t) = queue.pop_front() {
            for g in &full[t] {
                let want = -s[t] * sign(g.perm);
                if s[g.tet] == 0 {
                    s[g.tet] = want;
                    queue.push_back(g.tet);
                } else if s[g.tet] != want {
                    return Err(Error::Structure("triangulation is not orientable".into()));
                }
            }
        }
        if let Some(t) = s.iter().position(|&x| x == 0) {
            return Err(Error::Structure(format!(
                "tetrahedron {t} is not connected to tetrahedron 0"
            )));
        }
        Ok(s)
    }

    /// Glues tetrahedra given by their global vertex labels along faces
    /// with equal label sets. Every face must occur exactly twice.
    pub fn from_simplices(simplices: &[[usize; 4]]) -> Result<Self> {
        let mut by_face: HashMap<[usize; 3], Vec<(usize, usize)>> = HashMap::new();
        for (t, s) in simplices.iter().enumerate() {
            for f in 0..4 {
                let mut key = face_vertices(f).map(|v| s[v]);
                key.sort_unstable();
                by_face.entry(key).or_default().push((t, f));
            }
        }
        let mut gluings = vec![[None; 4]; simplices.len()];
        for (key, slots) in &by_face {
            let [(t, f), (u, g)] = slots[..] else {
                return Err(Error::Structure(format!("face {key:?} occurs {} times", slots.len())));
            };
            let local = |tet: usize, label: usize| simplices[tet].iter().position(|&x| x == label);
            let mut p = [0u8; 4];
            let mut q = [0u8; 4];
            for v in 0..4 {
                p[v] = match local(u, simplices[t][v]) {
                    Some(w) => w as u8,
                    None => g as u8,
                };
                q[v] = match local(t, simplices[u][v]) {
                    Some(w) => w as u8,
                    None => f as u8,
                };
            }
            gluings[t][f] = Some(Gluing { tet: u, face: g, perm: p });
            gluings[u][g] = Some(Gluing { tet: t, face: f, perm: q });
        }
        Self::new(gluings)
    }

    /// The boundary of the 4-simplex: `S³` from five tetrahedra.
    pub fn boundary_of_4_simplex() -> Self {
        let simplices: Vec<[usize; 4]> = (0..5)
            .map(|skip| {
                let mut s = [0; 4];
                let mut k = 0;
                for v in 0..5 {
                    if v != skip {
                        s[k] = v;
                        k += 1;
                    }
                }
                s
            })
            .collect();
        Self::from_simplices(&simplices).expect("boundary of the 4-simplex is closed")
    }

    /// The layered lens space `L(p,q)` from `p` tetrahedra around a common
    /// edge; `p = 1` gives the 4-simplex boundary.
    pub fn lens_space(p: u64, q: u64) -> Result<Self> {
        if p == 0 || crate::catalog::gcd(p, q % p) != 1 {
            return Err(Error::Precondition(format!("L({p},{q}) needs p ≥ 1 and gcd(p, q) = 1")));
        }
        if p == 1 {
            return Ok(Self::boundary_of_4_simplex());
        }
        let (n, q) = (p as usize, (q % p) as usize);
        let mut gluings = vec![[None; 4]; n];
        for i in 0..n {
            let next = (i + 1) % n;
            let twist = (i + q) % n;
            gluings[i][2] = Some(Gluing { tet: next, face: 3, perm: [0, 1, 3, 2] });
            gluings[next][3] = Some(Gluing { tet: i, face: 2, perm: [0, 1, 3, 2] });
            gluings[i][1] = Some(Gluing { tet: twist, face: 0, perm: [1, 0, 2, 3] });
            gluings[twist][0] = Some(Gluing { tet: i, face: 1, perm: [1, 0, 2, 3] });
        }
        Self::new(gluings)
    }

    pub fn len(&self) -> usize {
        self.gluings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gluings.is_empty()
    }

    pub fn gluing(&self, tet: usize, face: usize) -> Gluing {
        self.gluings[tet][face]
    }

    pub fn gluings(&self) -> &[[Gluing; 4]] {
        &self.gluings
    }

    pub fn orientation(&self) -> &[i8] {
        &self.orientation
    }

    pub fn num_vertices(&self) -> usize {
        self.counts[0]
    }

    pub fn num_edges(&self) -> usize {
        self.counts[1]
    }

    pub fn num_faces(&self) -> usize {
        self.counts[2]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.counts[0] as i64 - self.counts[1] as i64 + self.counts[2] as i64 - self.len() as i64
    }

    pub fn vertex_class(&self) -> &[[usize; 4]] {
        &self.vertex_class
    }

    pub fn edge_class(&self) -> &[[usize; 6]] {
        &self.edge_class
    }

    pub fn face_class(&self) -> &[[usize; 4]] {
        &self.face_class
    }

    /// One `(tetrahedron, face)` slot of each face class.
    pub fn face_slot(&self, class: usize) -> Option<(usize, usize)> {
        (0..self.len())
            .flat_map(|t| (0..4).map(move |f| (t, f)))
            .find(|&(t, f)| self.face_class[t][f] == class)
    }

    /// True when every tetrahedron has four distinct vertex classes.
    pub fn has_distinct_vertices(&self) -> bool {
        self.vertex_class.iter().all(|vc| (0..4).all(|i| (i + 1..4).all(|j| vc[i] != vc[j])))
    }

    /// Barycentric subdivision: tetrahedron `(t, π)` has vertices
    /// `π₀`, the midpoint of `π₀π₁`, the barycenter of `π₀π₁π₂` and the
    /// center of `t`. All gluing maps become the identity.
    pub fn barycentric_subdivision(&self) -> Self {
        let perms = all_perms();
        let index: HashMap<Perm, usize> = perms.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let id = |t: usize, p: Perm| 24 * t + index[&p];
        let mut gluings = vec![[None; 4]; 24 * self.len()];
        let mut orientation = vec![0i8; 24 * self.len()];
        for t in 0..self.len() {
            for &p in &perms {
                let me = id(t, p);
                orientation[me] = self.orientation[t] * sign(p);
                for (j, slot) in gluings[me].iter_mut().take(3).enumerate() {
                    let mut q = p;
                    q.swap(j, j + 1);
                    *slot = Some(Gluing { tet: id(t, q), face: j, perm: IDENTITY });
                }
                let g = self.gluings[t][p[3] as usize];
                let q = compose(g.perm, p);
                gluings[me][3] = Some(Gluing { tet: id(g.tet, q), face: 3, perm: IDENTITY });
            }
        }
        Self::build(gluings, Some(orientation)).expect("subdivision of a valid triangulation")
    }

    /// Parses `tets <T>` followed by `glue t f t' f' v0 v1 v2` lines. Both
    /// directions of every gluing must be listed.
    pub fn parse(text: &str, origin: impl AsRef<Path>) -> Result<Self> {
        let origin = origin.as_ref();
        let err = |line: usize, msg: String| Error::Parse { path: origin.to_path_buf(), line, msg };
        let mut count: Option<usize> = None;
        let mut gluings: Vec<[Option<Gluing>; 4]> = Vec::new();
        let mut last = 0;
        for (n, raw) in text.lines().enumerate() {
            let lineno = n + 1;
            last = lineno;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| -> Result<usize> {
                s.parse().map_err(|_| err(lineno, format!("bad integer '{s}'")))
            };
            match (count, fields.as_slice()) {
                (None, ["tets", t]) => {
                    let t = num(t)?;
                    if t == 0 {
                        return Err(err(lineno, "tetrahedron count must be positive".into()));
                    }
                    count = Some(t);
                    gluings = vec![[None; 4]; t];
                }
                (None, _) => return Err(err(lineno, "expected 'tets <T>' first".into())),
                (Some(_), ["tets", ..]) => return Err(err(lineno, "tets given twice".into())),
                (Some(total), ["glue", t, f, u, g, v0, v1, v2]) => {
                    let (t, f, u, g) = (num(t)?, num(f)?, num(u)?, num(g)?);
                    if t >= total || u >= total || f >= 4 || g >= 4 {
                        return Err(err(lineno, "tetrahedron or face index out of range".into()));
                    }
                    let images = [num(v0)?, num(v1)?, num(v2)?];
                    let mut perm = [0u8; 4];
                    perm[f] = g as u8;
                    for (&v, &w) in face_vertices(f).iter().zip(&images) {
                        if w >= 4 {
                            return Err(err(lineno, format!("vertex {w} out of range")));
                        }
                        perm[v] = w as u8;
                    }
                    if !is_perm(perm) {
                        return Err(err(lineno, "vertex images do not form a face map".into()));
                    }
                    if gluings[t][f].is_some() {
                        return Err(err(lineno, format!("face ({t},{f}) glued twice")));
                    }
                    gluings[t][f] = Some(Gluing { tet: u, face: g, perm });
                }
                _ => return Err(err(lineno, format!("unrecognised line '{line}'"))),
            }
        }
        if count.is_none() {
            return Err(err(last.max(1), "missing 'tets' line".into()));
        }
        Self::new(gluings).map_err(|e| match e {
            Error::Structure(msg) => err(last.max(1), msg),
            other => other,
        })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
        Self::parse(&text, path)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("tets {}\n", self.len());
        for (t, row) in self.gluings.iter().enumerate() {
            for (f, g) in row.iter().enumerate() {
                let [a, b, c] = face_vertices(f).map(|v| g.perm[v]);
                writeln!(out, "glue {t} {f} {} {} {a} {b} {c}", g.tet, g.face).unwrap();
            }
        }
        out
    }
}

pub(crate) fn all_perms() -> Vec<Perm> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                for d in 0..4u8 {
                    let p = [a, b, c, d];
                    if is_perm(p) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perm_helpers() {
        let p = [1, 0, 3, 2];
        assert_eq!(compose(p, inverse(p)), IDENTITY);
        assert_eq!(sign(p), 1);
        assert_eq!(sign([1, 0, 2, 3]), -1);
        assert_eq!(all_perms().len(), 24);
        assert_eq!(face_vertices(2), [0, 1, 3]);
        assert_eq!(edge_index(3, 1), 4);
    }

    #[test]
    fn four_simplex_counts() {
        let s3 = Triangulation::boundary_of_4_simplex();
        assert_eq!(s3.len(), 5);
        assert_eq!(s3.num_vertices(), 5);
        assert_eq!(s3.num_edges(), 10);
        assert_eq!(s3.num_faces(), 10);
        assert_eq!(s3.euler_characteristic(), 0);
        assert!(s3.has_distinct_vertices());
    }

    #[test]
    fn text_round_trip() {
        let s3 = Triangulation::boundary_of_4_simplex();
        let back = Triangulation::parse(&s3.to_text(), "s3.tri").unwrap();
        assert_eq!(back, s3);
    }

    #[test]
    fn broken_involution_is_named() {
        let text = Triangulation::boundary_of_4_simplex().to_text();
        let broken: String = text
            .lines()
            .map(|l| if l.starts_with("glue 0 0 ") { "glue 0 0 1 0 2 3 1" } else { l })
            .map(|l| format!("{l}\n"))
            .collect();
        let e = Triangulation::parse(&broken, "bad.tri").unwrap_err();
        assert!(e.to_string().contains("involution"), "{e}");
    }

    #[test]
    fn open_triangulation_is_rejected() {
        let text = "tets 1\nglue 0 0 0 1 0 2 3\nglue 0 1 0 0 1 2 3\n";
        assert!(Triangulation::parse(text, "x").unwrap_err().to_string().contains("not glued"));
    }

    #[test]
    fn subdivision_multiplies_by_24() {
        let s3 = Triangulation::boundary_of_4_simplex();
        let b = s3.barycentric_subdivision();
        assert_eq!(b.len(), 120);
        assert_eq!(b.num_vertices(), 5 + 10 + 10 + 5);
        assert_eq!(b.euler_characteristic(), 0);
        assert!(b.has_distinct_vertices());
    }

    #[test]
    fn lens_spaces() {
        for (p, q) in [(2, 1), (3, 1), (5, 2), (7, 3), (8, 3)] {
            let t = Triangulation::lens_space(p, q).unwrap();
            assert_eq!(t.len(), p as usize);
            assert_eq!(t.euler_characteristic(), 0);
        }
        assert_eq!(Triangulation::lens_space(1, 0).unwrap().len(), 5);
        assert!(Triangulation::lens_space(4, 2).is_err());
        assert!(Triangulation::lens_space(0, 1).is_err());
    }
}
