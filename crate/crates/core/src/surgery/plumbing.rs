use std::collections::HashMap;
use std::path::Path;

use crate::error::{Error, Result};

/// Framed unknots plumbed along a tree.
///
/// Vertex `v` is an unknot with framing `framings()[v]`; each edge is a
/// Hopf clasp between two unknots. Lens spaces are chains and the
/// Brieskorn manifolds are three-legged stars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlumbingTree {
    ids: Vec<u64>,
    framings: Vec<i64>,
    edges: Vec<(usize, usize)>,
}

impl PlumbingTree {
    /// `vertices` are `(id, framing)`; `edges` refer to ids.
    pub fn new(vertices: &[(u64, i64)], edges: &[(u64, u64)]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Structure("plumbing tree has no vertices".into()));
        }
        let mut index = HashMap::new();
        for (pos, &(id, _)) in vertices.iter().enumerate() {
            if index.insert(id, pos).is_some() {
                return Err(Error::Structure(format!("duplicate vertex id {id}")));
            }
        }
        let mut resolved = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            let (Some(&u), Some(&v)) = (index.get(&a), index.get(&b)) else {
                return Err(Error::Structure(format!("edge ({a},{b}) names an unknown vertex")));
            };
            if u == v {
                return Err(Error::Structure(format!("self-loop at vertex {a}")));
            }
            resolved.push((u.min(v), u.max(v)));
        }
        let n = vertices.len();
        if resolved.len() + 1 != n {
            return Err(Error::Structure(format!(
                "{} vertices and {} edges cannot form a tree",
                n,
                resolved.len()
            )));
        }
        // n - 1 edges and connected implies acyclic.
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for &(u, v) in &resolved {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return Err(Error::Structure("edge set contains a cycle".into()));
            }
            parent[ru] = rv;
        }
        Ok(Self {
            ids: vertices.iter().map(|&(id, _)| id).collect(),
            framings: vertices.iter().map(|&(_, a)| a).collect(),
            edges: resolved,
        })
    }

    /// Linear chain with the given framings, vertex ids `0..`.
    pub fn chain(framings: &[i64]) -> Self {
        let vertices: Vec<(u64, i64)> =
            framings.iter().enumerate().map(|(i, &a)| (i as u64, a)).collect();
        let edges: Vec<(u64, u64)> = (1..framings.len() as u64).map(|i| (i - 1, i)).collect();
        Self::new(&vertices, &edges).expect("a chain is a tree")
    }

    /// Star with the center (id 0) framed `center` and one leaf per entry of `legs`.
    pub fn star(center: i64, legs: &[i64]) -> Self {
        let mut vertices = vec![(0u64, center)];
        vertices.extend(legs.iter().enumerate().map(|(i, &a)| (i as u64 + 1, a)));
        let edges: Vec<(u64, u64)> = (1..=legs.len() as u64).map(|i| (0, i)).collect();
        Self::new(&vertices, &edges).expect("a star is a tree")
    }

    pub fn len(&self) -> usize {
        self.framings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.framings.is_empty()
    }

    pub fn ids(&self) -> &[u64] {
        &self.ids
    }

    pub fn framings(&self) -> &[i64] {
        &self.framings
    }

    /// Edges as vertex positions.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.len()];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.len()];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Reads `vertex <id> <framing>` and `edge <id> <id>` lines; `#` comments.
    pub fn parse(text: &str, origin: impl AsRef<Path>) -> Result<Self> {
        let origin = origin.as_ref();
        let err = |line: usize, msg: String| Error::Parse { path: origin.to_path_buf(), line, msg };
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                ["vertex", id, a] => {
                    let id = id.parse().map_err(|_| err(n + 1, format!("bad id '{id}'")))?;
                    let a = a.parse().map_err(|_| err(n + 1, format!("bad framing '{a}'")))?;
                    vertices.push((id, a));
                }
                ["edge", u, v] => {
                    let u = u.parse().map_err(|_| err(n + 1, format!("bad id '{u}'")))?;
                    let v = v.parse().map_err(|_| err(n + 1, format!("bad id '{v}'")))?;
                    edges.push((u, v));
                }
                _ => return Err(err(n + 1, format!("unrecognised line '{line}'"))),
            }
        }
        Self::new(&vertices, &edges)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
        Self::parse(&text, path)
    }
}
