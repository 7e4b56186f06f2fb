use num_complex::Complex64;

/// A product of cyclic groups `ℤ/n₁ ⊕ … ⊕ ℤ/n_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grp {
    pub factors: Vec<u64>,
}

impl Grp {
    pub fn new(factors: &[u64]) -> Grp {
        Grp { factors: factors.to_vec() }
    }

    pub fn order(&self) -> usize {
        self.factors.iter().product::<u64>() as usize
    }

    pub fn exponent(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.factors.iter().fold(1, |a, &b| a / gcd(a, b) * b)
    }

    pub fn decode(&self, mut i: usize) -> Vec<u64> {
        let mut c = vec![0; self.factors.len()];
        for k in (0..self.factors.len()).rev() {
            let n = self.factors[k] as usize;
            c[k] = (i % n) as u64;
            i /= n;
        }
        c
    }

    pub fn encode(&self, c: &[u64]) -> usize {
        c.iter().zip(&self.factors).fold(0, |acc, (&x, &n)| acc * n as usize + (x % n) as usize)
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).zip(&self.factors).map(|((x, y), n)| (x + y) % n).collect()
    }

    pub fn neg(&self, a: &[u64]) -> Vec<u64> {
        a.iter().zip(&self.factors).map(|(x, n)| (n - x % n) % n).collect()
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.add(a, &self.neg(b))
    }

    /// `⟨a, b⟩` as a residue mod `n`; `n` must be a multiple of every factor.
    pub fn pair(&self, a: &[u64], b: &[u64], n: u64) -> u64 {
        a.iter()
            .zip(b)
            .zip(&self.factors)
            .map(|((x, y), f)| (x * y % f) * (n / f))
            .fold(0, |acc, v| (acc + v) % n)
    }

    pub fn phase(&self, a: &[u64], b: &[u64]) -> Complex64 {
        let turns: f64 = a.iter().zip(b).zip(&self.factors).map(|((x, y), f)| ((x * y) % f) as f64 / *f as f64).sum();
        Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * turns)
    }
}

/// `f̂(χ) = Σ_g f(g) ⟨g, χ⟩`.
pub fn dft(g: &Grp, f: &[Complex64]) -> Vec<Complex64> {
    (0..g.order())
        .map(|chi| {
            let c = g.decode(chi);
            (0..g.order()).map(|x| f[x] * g.phase(&g.decode(x), &c)).sum()
        })
        .collect()
}

/// `f(g) = |G|⁻¹ Σ_χ f̂(χ) conj⟨g, χ⟩`.
pub fn idft(g: &Grp, f: &[Complex64]) -> Vec<Complex64> {
    let scale = 1.0 / g.order() as f64;
    (0..g.order())
        .map(|x| {
            let c = g.decode(x);
            (0..g.order()).map(|chi| f[chi] * g.phase(&c, &g.decode(chi)).conj()).sum::<Complex64>() * scale
        })
        .collect()
}

/// `(a ∗ b)(x) = Σ_h a(x − h) b(h) ⟨h, twist⟩`.
pub fn twisted_convolve(g: &Grp, a: &[Complex64], b: &[Complex64], twist: &[u64]) -> Vec<Complex64> {
    (0..g.order())
        .map(|x| {
            let xc = g.decode(x);
            (0..g.order())
                .map(|h| {
                    let hc = g.decode(h);
                    a[g.encode(&g.sub(&xc, &hc))] * b[h] * g.phase(&hc, twist)
                })
                .sum()
        })
        .collect()
}

pub fn convolve(g: &Grp, a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    twisted_convolve(g, a, b, &vec![0; g.factors.len()])
}

/// `Σ_h conj(a(h)) b(h + x)`.
pub fn correlate(g: &Grp, a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    (0..g.order())
        .map(|x| {
            let xc = g.decode(x);
            (0..g.order()).map(|h| a[h].conj() * b[g.encode(&g.add(&g.decode(h), &xc))]).sum()
        })
        .collect()
}
