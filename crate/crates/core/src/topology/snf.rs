//! Smith normal form over the integers with full transformation tracking.
//!
//! For an `m × n` matrix `A` the decomposition satisfies `U · A · V = D`
//! where `D` is diagonal with nonnegative entries `d_0 | d_1 | …`, and
//! `U`, `V` are unimodular. Inverses of both are tracked alongside.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

pub type Matrix = Vec<Vec<i128>>;

#[derive(Clone, Debug)]
pub struct Snf {
    pub rows: usize,
    pub cols: usize,
    /// Diagonal of `D`, length `min(rows, cols)`.
    pub diag: Vec<i128>,
    /// Number of nonzero diagonal entries.
    pub rank: usize,
    pub u: Matrix,
    pub u_inv: Matrix,
    pub v: Matrix,
    pub v_inv: Matrix,
}

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect()
}

fn mul_add(a: i128, c: i128, b: i128) -> Result<i128> {
    c.checked_mul(b).and_then(|p| a.checked_add(p)).ok_or(Error::Overflow)
}

struct Work {
    a: Matrix,
    u: Matrix,
    u_inv: Matrix,
    v: Matrix,
    v_inv: Matrix,
    m: usize,
    n: usize,
}

impl Work {
    /// row_i += c · row_j
    fn row_add(&mut self, i: usize, j: usize, c: i128) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        for k in 0..self.n {
            self.a[i][k] = mul_add(self.a[i][k], c, self.a[j][k])?;
        }
        for k in 0..self.m {
            self.u[i][k] = mul_add(self.u[i][k], c, self.u[j][k])?;
        }
        for k in 0..self.m {
            self.u_inv[k][j] = mul_add(self.u_inv[k][j], -c, self.u_inv[k][i])?;
        }
        Ok(())
    }

    fn row_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        self.u.swap(i, j);
        for row in &mut self.u_inv {
            row.swap(i, j);
        }
    }

    fn row_neg(&mut self, i: usize) {
        for x in &mut self.a[i] {
            *x = -*x;
        }
        for x in &mut self.u[i] {
            *x = -*x;
        }
        for row in &mut self.u_inv {
            row[i] = -row[i];
        }
    }

    /// col_i += c · col_j
    fn col_add(&mut self, i: usize, j: usize, c: i128) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        for k in 0..self.m {
            self.a[k][i] = mul_add(self.a[k][i], c, self.a[k][j])?;
        }
        for k in 0..self.n {
            self.v[k][i] = mul_add(self.v[k][i], c, self.v[k][j])?;
        }
        for k in 0..self.n {
            self.v_inv[j][k] = mul_add(self.v_inv[j][k], -c, self.v_inv[i][k])?;
        }
        Ok(())
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in &mut self.a {
            row.swap(i, j);
        }
        for row in &mut self.v {
            row.swap(i, j);
        }
        self.v_inv.swap(i, j);
    }

    fn min_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, i128)> = None;
        for i in t..self.m {
            for j in t..self.n {
                let x = self.a[i][j].abs();
                if x != 0 && best.map_or(true, |(_, _, b)| x < b) {
                    best = Some((i, j, x));
                    if x == 1 {
                        return Some((i, j));
                    }
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    /// Smallest nonzero entry on row `t` or column `t` from position `t` on.
    fn min_on_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (t, t, self.a[t][t].abs());
        for i in t + 1..self.m {
            let x = self.a[i][t].abs();
            if x != 0 && (best.2 == 0 || x < best.2) {
                best = (i, t, x);
            }
        }
        for j in t + 1..self.n {
            let x = self.a[t][j].abs();
            if x != 0 && (best.2 == 0 || x < best.2) {
                best = (t, j, x);
            }
        }
        (best.0, best.1)
    }
}

/// Computes the Smith normal form of an `rows × cols` matrix.
pub fn smith_normal_form(a: &[Vec<i128>], rows: usize, cols: usize) -> Result<Snf> {
    let mut w = Work {
        a: a.to_vec(),
        u: identity(rows),
        u_inv: identity(rows),
        v: identity(cols),
        v_inv: identity(cols),
        m: rows,
        n: cols,
    };
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = w.min_in_block(t) else { break };
        w.row_swap(t, pi);
        w.col_swap(t, pj);
        loop {
            let p = w.a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                if w.a[i][t] != 0 {
                    let q = w.a[i][t] / p;
                    w.row_add(i, t, -q)?;
                    clean &= w.a[i][t] == 0;
                }
            }
            for j in t + 1..cols {
                if w.a[t][j] != 0 {
                    let q = w.a[t][j] / p;
                    w.col_add(j, t, -q)?;
                    clean &= w.a[t][j] == 0;
                }
            }
            if !clean {
                let (i, j) = w.min_on_cross(t);
                w.row_swap(t, i);
                w.col_swap(t, j);
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| w.a[i][j] % p != 0));
            match bad {
                Some(i) => w.row_add(t, i, 1)?,
                None => break,
            }
        }
        if w.a[t][t] < 0 {
            w.row_neg(t);
        }
        t += 1;
    }
    let diag = (0..rows.min(cols)).map(|i| w.a[i][i]).collect();
    Ok(Snf { rows, cols, diag, rank: t, u: w.u, u_inv: w.u_inv, v: w.v, v_inv: w.v_inv })
}

/// `M · x` over the integers.
pub fn mat_vec(m: &[Vec<i128>], x: &[i128]) -> Result<Vec<i128>> {
    m.iter()
        .map(|row| row.iter().zip(x).try_fold(0i128, |acc, (&a, &b)| mul_add(acc, a, b)))
        .collect()
}

/// `M · x mod n` with entries reduced to `[0, n)`.
pub fn mat_vec_mod(m: &[Vec<i128>], x: &[i128], n: i128) -> Vec<i128> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .fold(0i128, |acc, (&a, &b)| (acc + a.rem_euclid(n) * b.rem_euclid(n)) % n)
        })
        .collect()
}

/// `A · B` over the integers; `A` is `r × k`, `B` is `k × c`.
pub fn mat_mul(a: &[Vec<i128>], b: &[Vec<i128>], c: usize) -> Result<Matrix> {
    let mut out = vec![vec![0i128; c]; a.len()];
    for (i, row) in a.iter().enumerate() {
        for (k, &x) in row.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for j in 0..c {
                out[i][j] = mul_add(out[i][j], x, b[k][j])?;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: Matrix, rows: usize, cols: usize) -> Snf {
        let s = smith_normal_form(&a, rows, cols).unwrap();
        let uav = mat_mul(&mat_mul(&s.u, &a, cols).unwrap(), &s.v, cols).unwrap();
        for i in 0..rows {
            for j in 0..cols {
                let want = if i == j { s.diag[i] } else { 0 };
                assert_eq!(uav[i][j], want);
            }
        }
        assert_eq!(mat_mul(&s.u, &s.u_inv, rows).unwrap(), identity(rows));
        assert_eq!(mat_mul(&s.v, &s.v_inv, cols).unwrap(), identity(cols));
        for w in s.diag[..s.rank].windows(2) {
            assert_eq!(w[1] % w[0], 0);
        }
        s
    }

    #[test]
    fn classic_example() {
        let a = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        let s = check(a, 3, 3);
        assert_eq!(s.diag, vec![2, 6, 12]);
    }

    #[test]
    fn rectangular_and_zero() {
        let s = check(vec![vec![0, 0, 0], vec![0, 0, 0]], 2, 3);
        assert_eq!(s.rank, 0);
        let s = check(vec![vec![2, 3], vec![4, 5], vec![6, 7]], 3, 2);
        assert_eq!(s.diag, vec![1, 2]);
        let s = check(vec![], 0, 4);
        assert!(s.diag.is_empty());
    }

    #[test]
    fn divisibility_fix_up() {
        let s = check(vec![vec![2, 0], vec![0, 3]], 2, 2);
        assert_eq!(s.diag, vec![1, 6]);
    }
}
