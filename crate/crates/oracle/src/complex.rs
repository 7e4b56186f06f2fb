use std::collections::{BTreeMap, BTreeSet};

/// A simplicial complex as sorted lists of sorted simplices per dimension.
#[derive(Clone, Debug)]
pub struct Cx {
    pub simplices: Vec<Vec<Vec<u32>>>,
    index: Vec<BTreeMap<Vec<u32>, usize>>,
}

impl Cx {
    /// Closure of the given facets under taking faces.
    pub fn from_facets(facets: &[Vec<u32>]) -> Cx {
        let mut by_dim: Vec<BTreeSet<Vec<u32>>> = Vec::new();
        for f in facets {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            let k = f.len();
            for mask in 1u32..(1 << k) {
                let s: Vec<u32> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                let d = s.len() - 1;
                if by_dim.len() <= d {
                    by_dim.resize(d + 1, BTreeSet::new());
                }
                by_dim[d].insert(s);
            }
        }
        let simplices: Vec<Vec<Vec<u32>>> = by_dim.into_iter().map(|s| s.into_iter().collect()).collect();
        let index = simplices
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        Cx { simplices, index }
    }

    pub fn count(&self, k: usize) -> usize {
        self.simplices.get(k).map_or(0, Vec::len)
    }

    pub fn index(&self, s: &[u32]) -> usize {
        self.index[s.len() - 1][s]
    }

    pub fn vertices(&self) -> Vec<u32> {
        self.simplices[0].iter().map(|v| v[0]).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        (0..self.simplices.len()).map(|k| if k % 2 == 0 { 1 } else { -1 } * self.count(k) as i64).sum()
    }

    /// Edges of a spanning forest of the 1-skeleton.
    pub fn spanning_forest(&self) -> BTreeSet<usize> {
        let verts = self.vertices();
        let mut parent: BTreeMap<u32, u32> = verts.iter().map(|&v| (v, v)).collect();
        fn find(p: &mut BTreeMap<u32, u32>, v: u32) -> u32 {
            let mut r = v;
            while p[&r] != r {
                r = p[&r];
            }
            p.insert(v, r);
            r
        }
        let mut tree = BTreeSet::new();
        for (i, e) in self.simplices.get(1).into_iter().flatten().enumerate() {
            let (a, b) = (find(&mut parent, e[0]), find(&mut parent, e[1]));
            if a != b {
                parent.insert(a, b);
                tree.insert(i);
            }
        }
        tree
    }

    pub fn is_connected(&self) -> bool {
        self.spanning_forest().len() + 1 == self.count(0)
    }
}
