use std::path::Path;
use std::sync::Arc;

use num_complex::Complex64;
use pontryagin_core::abelian::FiniteAbelianGroup;
use pontryagin_core::bundles::{
    enumerate_triples, full_extension_classes, random_triple, triple_exists, triples_extending_pair, PairData,
    TorsorReport, TripleData, TripleExistence,
};
use pontryagin_core::cstar::verify_main_theorem;
use pontryagin_core::fourier::{convolve, fast_ft, ft, ift, GroupFunction};
use pontryagin_core::topology::{cohomology, cup11, Cochain, CoboundarySolver, SimplicialComplex};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};
use crate::input::{self, BundleFile, InputLog};

fn num(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

fn complex_list(v: &[Complex64]) -> Value {
    Value::Array(v.iter().map(|z| json!([num(z.re), num(z.im)])).collect())
}

fn max_dev(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

fn coords(c: &Cochain) -> Value {
    Value::Array(c.values().iter().map(|v| json!(v.coords())).collect())
}

fn residues(c: &Cochain) -> Value {
    json!(c.residues())
}

pub fn fourier(group: &FiniteAbelianGroup, input: &Path, kernel: Option<&Path>, log: &mut InputLog) -> CliResult<Value> {
    let values = input::load_vector(input, log)?;
    if values.is_empty() {
        return Err(CliError::Validation("input vector is empty".into()));
    }
    let f = GroupFunction::new(group.clone(), values)?;
    let fh = ft(&f);
    let back = ift(&fh);
    let mut out = json!({
        "group": group.factors(),
        "order": group.order(),
        "transform": complex_list(fh.values()),
        "inverse": complex_list(ift(&f).values()),
        "round_trip_max_deviation": max_dev(back.values(), f.values()),
        "fast_vs_dense_max_deviation": max_dev(fast_ft(&f).values(), fh.values()),
    });
    if let Some(k) = kernel {
        let h = GroupFunction::new(group.clone(), input::load_vector(k, log)?)?;
        let c = convolve(&f, &h)?;
        let prod = fh.pointwise(&ft(&h))?;
        out["convolution"] = complex_list(c.values());
        out["convolution_theorem_max_deviation"] = json!(max_dev(ft(&c).values(), prod.values()));
    }
    Ok(out)
}

pub fn cohomology_report(x: &Arc<SimplicialComplex>, group: &FiniteAbelianGroup, degree: usize) -> CliResult<Value> {
    let h = cohomology(x, degree, group)?;
    Ok(json!({
        "degree": degree,
        "coefficients": group.factors(),
        "invariant_factors": h.invariant_factors(),
        "order": h.order(),
        "generators": h.representatives().iter().map(coords).collect::<Vec<_>>(),
        "euler_characteristic": x.euler_characteristic(),
    }))
}

/// Cocycles `g`, `χ̂` and the optional extra data of a bundle job.
pub struct BundleInputs {
    pub base: Arc<SimplicialComplex>,
    pub group: FiniteAbelianGroup,
    pub order_n: u64,
    pub g: Cochain,
    pub chi_hat: Cochain,
    pub file: BundleFile,
}

impl BundleInputs {
    fn h2(&self) -> CliResult<pontryagin_core::topology::CohomologyGroup> {
        Ok(cohomology(&self.base, 2, &FiniteAbelianGroup::cyclic(self.order_n)?)?)
    }

    fn explicit_triple(&self) -> CliResult<Option<TripleData>> {
        match &self.file.s {
            None => Ok(None),
            Some(s) => {
                let s = Cochain::from_residues(self.base.clone(), 1, self.order_n, s)?;
                Ok(Some(TripleData::new(&self.g, &self.chi_hat, &s, self.order_n)?))
            }
        }
    }
}

pub fn cup(b: &BundleInputs) -> CliResult<Value> {
    let c = cup11(&b.g, &b.chi_hat, b.order_n)?;
    let h2 = b.h2()?;
    let primitive = CoboundarySolver::new(&b.base, 2)?.solve(&c)?;
    Ok(json!({
        "cup": residues(&c),
        "class": h2.reduce(&c)?.coords(),
        "h2_invariant_factors": h2.invariant_factors(),
        "is_coboundary": primitive.is_some(),
        "primitive": primitive.as_ref().map(residues),
    }))
}

fn obstruction(b: &BundleInputs) -> CliResult<Result<TripleData, Value>> {
    match triple_exists(&b.g, &b.chi_hat, b.order_n)? {
        TripleExistence::Exists(t) => Ok(Ok(t)),
        TripleExistence::Obstructed { gerbe_class } => Ok(Err(json!({
            "decision": "NO",
            "gerbe_class": gerbe_class.coords(),
            "h2_invariant_factors": b.h2()?.invariant_factors(),
        }))),
    }
}

pub fn check(b: &BundleInputs) -> CliResult<Value> {
    Ok(match obstruction(b)? {
        Ok(t) => json!({
            "decision": "YES",
            "gerbe_class": null,
            "h2_invariant_factors": b.h2()?.invariant_factors(),
            "witness": triple_json(&t),
        }),
        Err(no) => no,
    })
}

fn triple_json(t: &TripleData) -> Value {
    json!({ "g": coords(t.g()), "chi_hat": coords(t.chi_hat()), "s": residues(t.s()) })
}

fn torsor_json(r: &TorsorReport) -> Value {
    json!({
        "class_count": r.class_count(),
        "acting_order": r.acting_order,
        "acting_invariant_factors": r.acting_factors,
        "free": r.free,
        "transitive": r.transitive,
        "orbit_stabilizer_holds": r.orbit_stabilizer_holds(),
        "classes": r.representatives.iter().zip(&r.coordinates).map(|(s, c)| json!({
            "coordinates": c.coords(),
            "s": residues(s),
        })).collect::<Vec<_>>(),
        "orbits": r.orbits.iter().map(|o| json!({
            "representative": o.representative,
            "size": o.size,
            "stabilizer": o.stabilizer,
        })).collect::<Vec<_>>(),
    })
}

pub fn enumerate(b: &BundleInputs) -> CliResult<Value> {
    Ok(match obstruction(b)? {
        Ok(_) => {
            let mut v = torsor_json(&enumerate_triples(&b.g, &b.chi_hat, b.order_n)?);
            v["decision"] = json!("YES");
            v
        }
        Err(no) => no,
    })
}

pub fn classify(b: &BundleInputs) -> CliResult<Value> {
    let t0 = match b.explicit_triple()? {
        Some(t) => t,
        None => match obstruction(b)? {
            Ok(t) => t,
            Err(no) => return Ok(no),
        },
    };
    let r = full_extension_classes(&t0)?;
    let mut v = torsor_json(&r);
    v["decision"] = json!("YES");
    v["base_triple"] = triple_json(&t0);
    if let Some(full) = &r.full {
        v["h1_invariant_factors"] = json!(full.h1_factors);
        v["kernel"] = json!(full.kernel.iter().map(|c| c.coords().to_vec()).collect::<Vec<_>>());
        v["image"] = json!(full.image.iter().map(|c| c.coords().to_vec()).collect::<Vec<_>>());
    }
    Ok(v)
}

pub fn extend(b: &BundleInputs) -> CliResult<Value> {
    let pair = match &b.file.zeta {
        Some(z) => PairData::new(b.g.clone(), b.order_n, z.iter().map(|row| row.iter().map(|&v| v % b.order_n).collect()).collect())?,
        None => PairData::trivial_phases(b.g.clone(), b.order_n)?,
    };
    let found = triples_extending_pair(&pair)?;
    Ok(json!({
        "candidate_count": found.len(),
        "candidates": found.iter().map(|c| json!({
            "dual_class": c.dual_class.coords(),
            "witness": triple_json(&c.witness),
            "classes": torsor_json(&c.classes),
        })).collect::<Vec<_>>(),
    }))
}

pub fn verify(b: &BundleInputs, seed: u64, trials: usize, random: bool) -> CliResult<Value> {
    let t = if let Some(t) = b.explicit_triple()? {
        t
    } else if random {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_triple(&b.base, &b.group, b.order_n, &mut rng)?
    } else {
        match obstruction(b)? {
            Ok(t) => t,
            Err(no) => return Ok(no),
        }
    };
    let r = verify_main_theorem(&t, trials, seed.wrapping_add(1))?;
    Ok(json!({
        "decision": "YES",
        "triple": triple_json(&t),
        "trials": r.trials,
        "checks": r.checks.iter().map(|c| json!({ "name": c.name, "max_deviation": c.max_deviation })).collect::<Vec<_>>(),
        "max_deviation": r.max_deviation(),
        "passed": r.passed(1e-10),
        "tolerance": 1e-10,
    }))
}
