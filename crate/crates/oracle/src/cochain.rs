use std::collections::{BTreeSet, VecDeque};

use crate::Cx;

/// `(δc)(v₀…v_{k+1}) = Σ_i (−1)^i c(v₀…v̂_i…v_{k+1})` with `ℤ/n` values.
pub fn coboundary(cx: &Cx, k: usize, n: u64, c: &[u64]) -> Vec<u64> {
    cx.simplices
        .get(k + 1)
        .into_iter()
        .flatten()
        .map(|s| {
            let mut acc = 0u64;
            for i in 0..s.len() {
                let mut face = s.clone();
                face.remove(i);
                let v = c[cx.index(&face)] % n;
                acc = if i % 2 == 0 { (acc + v) % n } else { (acc + n - v) % n };
            }
            acc
        })
        .collect()
}

/// Rank of an integer matrix reduced mod the prime `p`.
pub fn rank_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let pow = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    };
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| m[r][c] % p != 0) else { continue };
        m.swap(rank, piv);
        let inv = pow(m[rank][c], p - 2);
        for x in &mut m[rank] {
            *x = *x * inv % p;
        }
        for r in 0..rows {
            if r != rank && m[r][c] % p != 0 {
                let f = m[r][c] % p;
                for j in 0..cols {
                    m[r][j] = (m[r][j] + p * p - f * m[rank][j] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Matrix of `δ: C^k → C^{k+1}` over `ℤ/n`, rows indexed by `(k+1)`-simplices.
pub fn coboundary_matrix(cx: &Cx, k: usize, n: u64) -> Vec<Vec<u64>> {
    let cols = cx.count(k);
    let mut cols_out: Vec<Vec<u64>> = Vec::with_capacity(cols);
    for j in 0..cols {
        let mut e = vec![0u64; cols];
        e[j] = 1;
        cols_out.push(coboundary(cx, k, n, &e));
    }
    let rows = cx.count(k + 1);
    (0..rows).map(|r| (0..cols).map(|j| cols_out[j][r]).collect()).collect()
}

/// `dim H^k(X; F_p)` by ranks of coboundary matrices.
pub fn cohomology_dim_mod_p(cx: &Cx, k: usize, p: u64) -> usize {
    let ck = cx.count(k);
    let r_out = rank_mod_p(coboundary_matrix(cx, k, p), p);
    let r_in = if k == 0 { 0 } else { rank_mod_p(coboundary_matrix(cx, k - 1, p), p) };
    ck - r_out - r_in
}

fn for_each_cochain(len: usize, n: u64, mut f: impl FnMut(&[u64])) {
    let mut c = vec![0u64; len];
    loop {
        f(&c);
        let mut i = 0;
        loop {
            if i == len {
                return;
            }
            c[i] += 1;
            if c[i] < n {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

/// `|H^k(X; ℤ/n)|` as (#cocycles) / (#coboundaries), enumerating every cochain.
pub fn cohomology_order_exhaustive(cx: &Cx, k: usize, n: u64) -> usize {
    let mut cocycles = 0usize;
    for_each_cochain(cx.count(k), n, |c| {
        if coboundary(cx, k, n, c).iter().all(|&x| x == 0) {
            cocycles += 1;
        }
    });
    let mut bounds = BTreeSet::new();
    if k == 0 {
        bounds.insert(vec![0u64; cx.count(0)]);
    } else {
        for_each_cochain(cx.count(k - 1), n, |c| {
            bounds.insert(coboundary(cx, k - 1, n, c));
        });
    }
    cocycles / bounds.len()
}

/// All 1-cochains `s` vanishing on a spanning forest with `δs = alpha`.
/// Every primitive of `alpha` is gauge equivalent to exactly one of these
/// when the complex is connected. Stops after `limit` solutions.
pub fn tree_gauged_primitives(cx: &Cx, n: u64, alpha: &[u64], limit: usize) -> Vec<Vec<u64>> {
    let tree = cx.spanning_forest();
    let free: Vec<usize> = (0..cx.count(1)).filter(|e| !tree.contains(e)).collect();
    let mut order = vec![usize::MAX; cx.count(1)];
    for (pos, &e) in free.iter().enumerate() {
        order[e] = pos;
    }
    // Each triangle is checked once its last free edge is assigned.
    let mut checks: Vec<Vec<usize>> = vec![Vec::new(); free.len() + 1];
    let mut edges_of = Vec::new();
    for (t, s) in cx.simplices.get(2).into_iter().flatten().enumerate() {
        let es = [cx.index(&[s[1], s[2]]), cx.index(&[s[0], s[2]]), cx.index(&[s[0], s[1]])];
        let last = es.iter().filter(|&&e| order[e] != usize::MAX).map(|&e| order[e] + 1).max().unwrap_or(0);
        checks[last].push(t);
        edges_of.push(es);
    }
    let ok = |s: &[u64], t: usize| {
        let [a, b, c] = edges_of[t];
        (s[a] + n - s[b] + s[c]) % n == alpha[t] % n
    };
    let mut s = vec![0u64; cx.count(1)];
    let mut out = Vec::new();
    if !checks[0].iter().all(|&t| ok(&s, t)) {
        return out;
    }
    fn dfs(
        pos: usize,
        free: &[usize],
        n: u64,
        s: &mut Vec<u64>,
        checks: &[Vec<usize>],
        ok: &dyn Fn(&[u64], usize) -> bool,
        out: &mut Vec<Vec<u64>>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if pos == free.len() {
            out.push(s.clone());
            return;
        }
        for v in 0..n {
            s[free[pos]] = v;
            if checks[pos + 1].iter().all(|&t| ok(s, t)) {
                dfs(pos + 1, free, n, s, checks, ok, out, limit);
            }
        }
        s[free[pos]] = 0;
    }
    dfs(0, &free, n, &mut s, &checks, &ok, &mut out, limit);
    out
}

/// Some 1-cochain with `δs = alpha`, found by exhaustive gauged search.
pub fn find_primitive_1(cx: &Cx, n: u64, alpha: &[u64]) -> Option<Vec<u64>> {
    tree_gauged_primitives(cx, n, alpha, 1).pop()
}

/// Some 0-cochain with `δu = alpha`, by propagation along the 1-skeleton.
pub fn find_primitive_0(cx: &Cx, n: u64, alpha: &[u64]) -> Option<Vec<u64>> {
    let nv = cx.count(0);
    let verts = cx.vertices();
    let pos = |v: u32| verts.binary_search(&v).unwrap();
    let mut adj: Vec<Vec<(usize, u64)>> = vec![Vec::new(); nv];
    for (i, e) in cx.simplices.get(1).into_iter().flatten().enumerate() {
        let (a, b) = (pos(e[0]), pos(e[1]));
        // u(b) − u(a) = alpha(e)
        adj[a].push((b, alpha[i] % n));
        adj[b].push((a, (n - alpha[i] % n) % n));
    }
    let mut u: Vec<Option<u64>> = vec![None; nv];
    for root in 0..nv {
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
                    Some(x) if x != want => return None,
                    _ => {}
                }
            }
        }
    }
    Some(u.into_iter().map(Option::unwrap).collect())
}

/// All 0-cochains `u` with `δu = alpha`, by enumerating `n^V` candidates.
pub fn all_primitives_0(cx: &Cx, n: u64, alpha: &[u64]) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for_each_cochain(cx.count(0), n, |u| {
        if coboundary(cx, 0, n, u).iter().zip(alpha).all(|(a, b)| a == &(b % n)) {
            out.push(u.to_vec());
        }
    });
    out
}

/// Partition of `candidates` into classes modulo `δ(C⁰)`, by exhaustive
/// enumeration of gauges.
pub fn classes_mod_coboundaries(cx: &Cx, n: u64, candidates: &[Vec<u64>]) -> Vec<Vec<usize>> {
    let mut gauges = BTreeSet::new();
    for_each_cochain(cx.count(0), n, |u| {
        gauges.insert(coboundary(cx, 0, n, u));
    });
    let mut class_of = vec![usize::MAX; candidates.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..candidates.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = Vec::new();
        for j in i..candidates.len() {
            let diff: Vec<u64> = candidates[j].iter().zip(&candidates[i]).map(|(a, b)| (a + n - b) % n).collect();
            if class_of[j] == usize::MAX && gauges.contains(&diff) {
                class_of[j] = id;
                members.push(j);
            }
        }
        classes.push(members);
    }
    classes
}

/// Every 1-cochain over `ℤ/n` with `δs = alpha`.
pub fn all_primitives_1(cx: &Cx, n: u64, alpha: &[u64]) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for_each_cochain(cx.count(1), n, |s| {
        if coboundary(cx, 1, n, s).iter().zip(alpha).all(|(a, b)| a == &(b % n)) {
            out.push(s.to_vec());
        }
    });
    out
}
