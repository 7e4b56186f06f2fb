use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// A simplex as its ascending list of vertex ids.
pub type Simplex = Vec<u32>;

/// A finite abstract simplicial complex, closed under faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<u32>,
    /// `by_dim[k]` lists the k-simplices in lexicographic order.
    by_dim: Vec<Vec<Simplex>>,
    index: Vec<BTreeMap<Simplex, usize>>,
}

impl SimplicialComplex {
    /// Builds the face closure of `simplices`. Isolated vertices may be listed
    /// in `vertices`; every vertex of a simplex must be listed as well.
    pub fn new(vertices: &[u32], simplices: &[Vec<u32>]) -> Result<Self> {
        let vset: BTreeSet<u32> = vertices.iter().copied().collect();
        if vset.len() != vertices.len() {
            return Err(Error::InvalidComplex(format!("duplicate vertex ids in {vertices:?}")));
        }
        let mut all: BTreeSet<Simplex> = vset.iter().map(|&v| vec![v]).collect();
        for s in simplices {
            let mut s = s.clone();
            s.sort_unstable();
            if s.is_empty() {
                return Err(Error::InvalidComplex("empty simplex".into()));
            }
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidComplex(format!("repeated vertex in simplex {s:?}")));
            }
            if let Some(v) = s.iter().find(|v| !vset.contains(v)) {
                return Err(Error::InvalidComplex(format!("simplex uses undeclared vertex {v}")));
            }
            if s.len() > 20 {
                return Err(Error::InvalidComplex("simplex dimension too large".into()));
            }
            let k = s.len();
            for mask in 1u32..(1u32 << k) {
                let face: Simplex = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| s[i]).collect();
                all.insert(face);
            }
        }
        let max_len = all.iter().map(Vec::len).max().unwrap_or(0);
        let mut by_dim: Vec<Vec<Simplex>> = vec![Vec::new(); max_len];
        for s in all {
            by_dim[s.len() - 1].push(s);
        }
        let index = by_dim
            .iter()
            .map(|list| list.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        Ok(Self { vertices: vset.into_iter().collect(), by_dim, index })
    }

    /// Single vertex.
    pub fn point() -> Self {
        Self::new(&[0], &[]).expect("valid built-in")
    }

    /// Boundary of a triangle: 3 vertices, 3 edges.
    pub fn circle() -> Self {
        Self::new(&[0, 1, 2], &[vec![0, 1], vec![1, 2], vec![0, 2]]).expect("valid built-in")
    }

    /// Möbius' 7-vertex torus.
    pub fn torus() -> Self {
        let mut tris = Vec::new();
        for i in 0..7u32 {
            tris.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
            tris.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
        }
        Self::new(&(0..7).collect::<Vec<_>>(), &tris).expect("valid built-in")
    }

    /// Minimal 6-vertex real projective plane.
    pub fn rp2() -> Self {
        let tris = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 5, 1],
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 1],
            [4, 5, 2],
            [5, 1, 3],
        ];
        let tris: Vec<Vec<u32>> = tris.iter().map(|t| t.to_vec()).collect();
        Self::new(&(0..6).collect::<Vec<_>>(), &tris).expect("valid built-in")
    }

    /// Boundary of the tetrahedron.
    pub fn sphere() -> Self {
        let tris = vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]];
        Self::new(&[0, 1, 2, 3], &tris).expect("valid built-in")
    }

    /// Looks up a built-in complex by name.
    pub fn builtin(name: &str) -> Option<Self> {
        Some(match name {
            "point" => Self::point(),
            "circle" => Self::circle(),
            "torus" => Self::torus(),
            "rp2" => Self::rp2(),
            "sphere" | "s2" => Self::sphere(),
            _ => return None,
        })
    }

    pub const BUILTIN_NAMES: [&'static str; 5] = ["point", "circle", "torus", "rp2", "sphere"];

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    /// Top dimension, or `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.by_dim.len().checked_sub(1)
    }

    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.by_dim.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn count(&self, k: usize) -> usize {
        self.simplices(k).len()
    }

    pub fn index_of(&self, s: &[u32]) -> Option<usize> {
        let k = s.len().checked_sub(1)?;
        self.index.get(k)?.get(s).copied()
    }

    /// Position of a vertex id among the vertices.
    pub fn vertex_index(&self, v: u32) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.by_dim
            .iter()
            .enumerate()
            .map(|(k, l)| if k % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) })
            .sum()
    }

    /// Indices of the faces of the `k`-simplex `idx`: entry `i` omits vertex `i`.
    pub fn faces(&self, k: usize, idx: usize) -> Vec<usize> {
        if k == 0 {
            return Vec::new();
        }
        let s = &self.by_dim[k][idx];
        (0..=k)
            .map(|i| {
                let face: Simplex =
                    s.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
                self.index[k - 1][&face]
            })
            .collect()
    }

    /// Integer matrix of `δ: C^k → C^{k+1}`, rows indexed by (k+1)-simplices.
    pub fn coboundary_matrix(&self, k: usize) -> Vec<Vec<i128>> {
        let rows = self.count(k + 1);
        let cols = self.count(k);
        let mut m = vec![vec![0i128; cols]; rows];
        for (r, row) in m.iter_mut().enumerate() {
            for (i, f) in self.faces(k + 1, r).into_iter().enumerate() {
                row[f] += if i % 2 == 0 { 1 } else { -1 };
            }
        }
        m
    }

    /// Number of connected components (of the 1-skeleton).
    pub fn components(&self) -> usize {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in self.simplices(1) {
            let a = find(&mut parent, self.vertex_index(e[0]).unwrap());
            let b = find(&mut parent, self.vertex_index(e[1]).unwrap());
            if a != b {
                parent[a] = b;
            }
        }
        (0..n).filter(|&i| find(&mut parent, i) == i).count()
    }

    /// The maximal simplices.
    pub fn facets(&self) -> Vec<Simplex> {
        let mut covered = BTreeSet::new();
        for k in 1..self.by_dim.len() {
            for idx in 0..self.by_dim[k].len() {
                for f in self.faces(k, idx) {
                    covered.insert((k - 1, f));
                }
            }
        }
        let mut out = Vec::new();
        for (k, list) in self.by_dim.iter().enumerate() {
            for (i, s) in list.iter().enumerate() {
                if !covered.contains(&(k, i)) {
                    out.push(s.clone());
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_counts() {
        let c = SimplicialComplex::circle();
        assert_eq!((c.count(0), c.count(1), c.count(2)), (3, 3, 0));
        let t = SimplicialComplex::torus();
        assert_eq!((t.count(0), t.count(1), t.count(2)), (7, 21, 14));
        assert_eq!(t.euler_characteristic(), 0);
        let p = SimplicialComplex::rp2();
        assert_eq!((p.count(0), p.count(1), p.count(2)), (6, 15, 10));
        assert_eq!(p.euler_characteristic(), 1);
        let s = SimplicialComplex::sphere();
        assert_eq!(s.euler_characteristic(), 2);
        assert_eq!(SimplicialComplex::point().euler_characteristic(), 1);
    }

    #[test]
    fn surfaces_are_closed_pseudomanifolds() {
        for x in [SimplicialComplex::torus(), SimplicialComplex::rp2(), SimplicialComplex::sphere()] {
            let mut uses = vec![0usize; x.count(1)];
            for t in 0..x.count(2) {
                for f in x.faces(2, t) {
                    uses[f] += 1;
                }
            }
            assert!(uses.iter().all(|&u| u == 2));
            assert_eq!(x.components(), 1);
        }
    }

    #[test]
    fn closure_and_validation() {
        let x = SimplicialComplex::new(&[0, 1, 2], &[vec![2, 0, 1]]).unwrap();
        assert_eq!(x.count(1), 3);
        assert_eq!(x.facets(), vec![vec![0, 1, 2]]);
        assert!(SimplicialComplex::new(&[0, 1], &[vec![0, 2]]).is_err());
        assert!(SimplicialComplex::new(&[0, 0], &[]).is_err());
        assert!(SimplicialComplex::new(&[0, 1], &[vec![1, 1]]).is_err());
    }

    #[test]
    fn face_order_omits_each_vertex() {
        let x = SimplicialComplex::new(&[0, 1, 2], &[vec![0, 1, 2]]).unwrap();
        let f = x.faces(2, 0);
        let names: Vec<_> = f.iter().map(|&i| x.simplices(1)[i].clone()).collect();
        assert_eq!(names, vec![vec![1, 2], vec![0, 2], vec![0, 1]]);
    }
}
