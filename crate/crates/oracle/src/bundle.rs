use std::collections::{BTreeMap, VecDeque};

use crate::cochain::{coboundary, tree_gauged_primitives};
use crate::group::Grp;
use crate::Cx;

/// Per-edge group elements (coordinate vectors), indexed like `cx.simplices[1]`.
pub type EdgeValues = Vec<Vec<u64>>;

/// `(g ∪ χ)(v₀v₁v₂) = ⟨g(v₀v₁), χ(v₁v₂)⟩` as residues mod `n`.
pub fn cup11(cx: &Cx, grp: &Grp, n: u64, g: &EdgeValues, chi: &EdgeValues) -> Vec<u64> {
    cx.simplices
        .get(2)
        .into_iter()
        .flatten()
        .map(|t| grp.pair(&g[cx.index(&[t[0], t[1]])], &chi[cx.index(&[t[1], t[2]])], n))
        .collect()
}

pub fn is_cocycle(cx: &Cx, grp: &Grp, g: &EdgeValues) -> bool {
    cx.simplices.get(2).into_iter().flatten().all(|t| {
        let a = &g[cx.index(&[t[0], t[1]])];
        let b = &g[cx.index(&[t[1], t[2]])];
        let c = &g[cx.index(&[t[0], t[2]])];
        grp.add(a, b) == *c
    })
}

/// The covering space of a `G`-valued 1-cocycle: vertex `(v, h)` is
/// numbered `pos(v)·|G| + h`, and a simplex `v₀…v_k` lifts to
/// `(v_i, h + g(v₀v_i))` on sheet `h`.
pub fn total_space(cx: &Cx, grp: &Grp, g: &EdgeValues) -> Cx {
    let verts = cx.vertices();
    let pos = |v: u32| verts.binary_search(&v).unwrap();
    let order = grp.order();
    let mut facets = Vec::new();
    for dim in &cx.simplices {
        for s in dim {
            for h in 0..order {
                let hc = grp.decode(h);
                let lifted: Vec<u32> = s
                    .iter()
                    .map(|&v| {
                        let shift = if v == s[0] { vec![0; grp.factors.len()] } else { g[cx.index(&[s[0], v])].clone() };
                        (pos(v) * order + grp.encode(&grp.add(&hc, &shift))) as u32
                    })
                    .collect();
                facets.push(lifted);
            }
        }
    }
    Cx::from_facets(&facets)
}

/// Whether the `μ_N` cocycle on the total space of `g` whose lifted edge
/// `((a, h), (b, h + g_ba))` carries `zeta[e][h]` is a coboundary.
pub fn lifted_phases_trivial(cx: &Cx, grp: &Grp, n: u64, g: &EdgeValues, zeta: &[Vec<u64>]) -> bool {
    let verts = cx.vertices();
    let pos = |v: u32| verts.binary_search(&v).unwrap();
    let order = grp.order();
    let total = verts.len() * order;
    let mut adj: Vec<Vec<(usize, u64)>> = vec![Vec::new(); total];
    for (e, s) in cx.simplices.get(1).into_iter().flatten().enumerate() {
        for h in 0..order {
            let a = pos(s[0]) * order + h;
            let b = pos(s[1]) * order + grp.encode(&grp.add(&grp.decode(h), &g[e]));
            let z = zeta[e][h] % n;
            adj[a].push((b, z));
            adj[b].push((a, (n - z) % n));
        }
    }
    let mut u: Vec<Option<u64>> = vec![None; total];
    for root in 0..total {
        if u[root].is_some() {
            continue;
        }
        u[root] = Some(0);
        let mut q = VecDeque::from([root]);
        while let Some(a) = q.pop_front() {
            let ua = u[a].unwrap();
            for &(b, d) in &adj[a] {
                let want = (ua + d) % n;
                match u[b] {
                    None => {
                        u[b] = Some(want);
                        q.push_back(b);
                    }
                    Some(x) if x != want => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// `ζ(x) = s − ⟨x, χ̂⟩` for every `x`, by enumeration index.
pub fn triple_zeta(grp: &Grp, n: u64, chi_hat: &[u64], s: u64) -> Vec<u64> {
    (0..grp.order()).map(|x| (s + n - grp.pair(&grp.decode(x), chi_hat, n)) % n).collect()
}

/// `ζ̂(ξ) = s + ⟨g, ξ⟩ + ⟨g, χ̂⟩`.
pub fn triple_zeta_hat(grp: &Grp, n: u64, g: &[u64], chi_hat: &[u64], s: u64) -> Vec<u64> {
    (0..grp.order()).map(|xi| (s + grp.pair(g, &grp.decode(xi), n) + grp.pair(g, chi_hat, n)) % n).collect()
}

/// An element `(g, t, χ)` acting by `(h, z) ↦ (h + g, t⟨h, χ⟩ z)`, with `t`
/// a residue mod `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Apon {
    pub g: Vec<u64>,
    pub t: u64,
    pub chi: Vec<u64>,
}

impl Apon {
    /// `self ∘ first`.
    pub fn after(&self, first: &Apon, grp: &Grp, n: u64) -> Apon {
        Apon {
            g: grp.add(&self.g, &first.g),
            t: (self.t + first.t + grp.pair(&first.g, &self.chi, n)) % n,
            chi: grp.add(&self.chi, &first.chi),
        }
    }

    pub fn inverse(&self, grp: &Grp, n: u64) -> Apon {
        Apon { g: grp.neg(&self.g), t: (n - self.t % n + grp.pair(&self.g, &self.chi, n)) % n, chi: grp.neg(&self.chi) }
    }

    /// Checks the action formula pointwise against `after`.
    pub fn act(&self, grp: &Grp, n: u64, h: &[u64], z: u64) -> (Vec<u64>, u64) {
        (grp.add(h, &self.g), (self.t + grp.pair(h, &self.chi, n) + z) % n)
    }
}

/// Transition data of a triple with cocycles `g`, `χ̂` and phases `s`.
fn transitions(grp: &Grp, g: &EdgeValues, chi_hat: &EdgeValues, s: &[u64]) -> Vec<Apon> {
    g.iter().zip(chi_hat).zip(s).map(|((g, c), &t)| Apon { g: g.clone(), t, chi: grp.neg(c) }).collect()
}

fn all_apon(grp: &Grp, n: u64) -> Vec<Apon> {
    let mut out = Vec::new();
    for g in 0..grp.order() {
        for chi in 0..grp.order() {
            for t in 0..n {
                out.push(Apon { g: grp.decode(g), t, chi: grp.decode(chi) });
            }
        }
    }
    out
}

/// Classes of full extensions by brute force, for tiny bases.
///
/// Enumerates every `s` with `δs = g ∪ χ̂`, keeps those whose pair and dual
/// pair are isomorphic to those of `s0` over the identity, and groups them
/// under all vertex-wise automorphisms that fix `g` and `χ̂`.
pub fn full_classes_bruteforce(cx: &Cx, grp: &Grp, n: u64, g: &EdgeValues, chi_hat: &EdgeValues, s0: &[u64]) -> Vec<Vec<Vec<u64>>> {
    let cup = cup11(cx, grp, n, g, chi_hat);
    let candidates = crate::cochain::all_primitives_1(cx, n, &cup);
    let top_valid: Vec<Vec<u64>> = candidates
        .into_iter()
        .filter(|s| {
            let diff: Vec<Vec<u64>> = s.iter().zip(s0).map(|(a, b)| vec![(a + n - b) % n; grp.order()]).collect();
            lifted_phases_trivial(cx, grp, n, g, &diff) && lifted_phases_trivial(cx, grp, n, chi_hat, &diff)
        })
        .collect();

    let verts = cx.vertices();
    let pos = |v: u32| verts.binary_search(&v).unwrap();
    let local = all_apon(grp, n);
    let nv = verts.len();
    let lookup: BTreeMap<Vec<u64>, usize> = top_valid.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
    let mut parent: Vec<usize> = (0..top_valid.len()).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }

    let mut choice = vec![0usize; nv];
    loop {
        let gauge: Vec<&Apon> = choice.iter().map(|&c| &local[c]).collect();
        for (i, s) in top_valid.iter().enumerate() {
            let mut image = Vec::with_capacity(s.len());
            let mut fixed = true;
            for ((e, edge), t) in cx.simplices[1].iter().enumerate().zip(transitions(grp, g, chi_hat, s)) {
                let (a, b) = (pos(edge[0]), pos(edge[1]));
                let new = gauge[b].after(&t, grp, n).after(&gauge[a].inverse(grp, n), grp, n);
                if new.g != g[e] || new.chi != grp.neg(&chi_hat[e]) {
                    fixed = false;
                    break;
                }
                image.push(new.t);
            }
            if !fixed {
                break;
            }
            if let Some(&j) = lookup.get(&image) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri] = rj;
            }
        }
        let mut k = 0;
        loop {
            if k == nv {
                let mut classes: BTreeMap<usize, Vec<Vec<u64>>> = BTreeMap::new();
                for i in 0..top_valid.len() {
                    let r = find(&mut parent, i);
                    classes.entry(r).or_default().push(top_valid[i].clone());
                }
                return classes.into_values().collect();
            }
            choice[k] += 1;
            if choice[k] < local.len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Whether some triple over `(g, χ̂)` has pair isomorphic to `(g, ζ_F)`.
/// Searches one primitive of the cup per cohomology class.
pub fn extends_to_triple(cx: &Cx, grp: &Grp, n: u64, g: &EdgeValues, zeta_f: &[Vec<u64>], chi_hat: &EdgeValues) -> bool {
    let cup = cup11(cx, grp, n, g, chi_hat);
    let prims = tree_gauged_primitives(cx, n, &cup, usize::MAX);
    prims.iter().any(|s| {
        let diff: Vec<Vec<u64>> = (0..s.len())
            .map(|e| {
                let zt = triple_zeta(grp, n, &chi_hat[e], s[e]);
                zt.iter().zip(&zeta_f[e]).map(|(a, b)| (a + n - b % n) % n).collect()
            })
            .collect();
        lifted_phases_trivial(cx, grp, n, g, &diff)
    })
}

/// All `ℤ/m`-valued 1-cocycles vanishing on a spanning forest, one per class.
pub fn cyclic_h1_representatives(cx: &Cx, m: u64) -> Vec<Vec<u64>> {
    tree_gauged_primitives(cx, m, &vec![0; cx.count(2)], usize::MAX)
}

/// `δ` of a 0-cochain, re-exported for gauge construction in tests.
pub fn gauge(cx: &Cx, n: u64, u: &[u64]) -> Vec<u64> {
    coboundary(cx, 0, n, u)
}
