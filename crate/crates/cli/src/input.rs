use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use num_complex::Complex64;
use pontryagin_core::abelian::FiniteAbelianGroup;
use pontryagin_core::topology::{cohomology, Cochain, SimplicialComplex};
use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::error::{CliError, CliResult};

/// Every input the job read, recorded for the provenance hash.
#[derive(Default)]
pub struct InputLog {
    pub entries: Vec<(String, Vec<u8>)>,
}

impl InputLog {
    pub fn read(&mut self, path: &Path) -> CliResult<Vec<u8>> {
        let bytes = fs::read(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })?;
        self.entries.push((path.display().to_string(), bytes.clone()));
        Ok(bytes)
    }

    pub fn read_json<T: DeserializeOwned>(&mut self, path: &Path) -> CliResult<T> {
        let bytes = self.read(path)?;
        serde_json::from_slice(&bytes).map_err(|source| CliError::Json { path: path.to_path_buf(), source })
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexFile {
    vertices: Option<Vec<u32>>,
    simplices: Vec<Vec<u32>>,
}

/// A built-in name or a JSON file `{"vertices": [...], "simplices": [[...], ...]}`.
pub fn load_complex(spec: &str, log: &mut InputLog) -> CliResult<Arc<SimplicialComplex>> {
    if let Some(x) = SimplicialComplex::builtin(spec) {
        return Ok(Arc::new(x));
    }
    let path = PathBuf::from(spec);
    if !path.exists() {
        return Err(CliError::Validation(format!(
            "unknown complex {spec:?}: not a file and not one of {:?}",
            SimplicialComplex::BUILTIN_NAMES
        )));
    }
    let file: ComplexFile = log.read_json(&path)?;
    let vertices = file.vertices.unwrap_or_else(|| {
        let mut v: Vec<u32> = file.simplices.iter().flatten().copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    });
    Ok(Arc::new(SimplicialComplex::new(&vertices, &file.simplices)?))
}

pub fn group(factors: &[u64]) -> CliResult<FiniteAbelianGroup> {
    Ok(FiniteAbelianGroup::new(factors)?)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Pair([f64; 2]),
    Real(f64),
}

/// A vector of complex numbers, each `[re, im]` or a bare real.
pub fn load_vector(path: &Path, log: &mut InputLog) -> CliResult<Vec<Complex64>> {
    let entries: Vec<Entry> = log.read_json(path)?;
    Ok(entries
        .into_iter()
        .map(|e| match e {
            Entry::Pair([re, im]) => Complex64::new(re, im),
            Entry::Real(re) => Complex64::new(re, 0.0),
        })
        .collect())
}

/// A 1-cocycle given by class coordinates in `H¹(B; A)` or by its values
/// on the edges (one coordinate list per edge, signed entries allowed).
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum CocycleSpec {
    Class { class: Vec<i64> },
    Values { values: Vec<Vec<i64>> },
}

#[derive(Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleFile {
    pub g: Option<CocycleSpec>,
    pub chi_hat: Option<CocycleSpec>,
    /// `μ_N` phases of a triple, one residue per edge.
    pub s: Option<Vec<i64>>,
    /// Pair phases `ζ_e(x)` mod `N`, one row per edge.
    pub zeta: Option<Vec<Vec<u64>>>,
}

pub fn cocycle(x: &Arc<SimplicialComplex>, coeffs: &FiniteAbelianGroup, spec: Option<&CocycleSpec>) -> CliResult<Cochain> {
    match spec {
        None => Ok(Cochain::zero(x.clone(), 1, coeffs.clone())),
        Some(CocycleSpec::Class { class }) => {
            let h = cohomology(x, 1, coeffs)?;
            let classes = h.class_group();
            if class.len() != classes.rank() {
                return Err(CliError::Validation(format!(
                    "class needs {} coordinates for H¹ with invariant factors {:?}",
                    classes.rank(),
                    h.invariant_factors()
                )));
            }
            let c = classes.element_signed(class)?;
            Ok(h.representative(&c)?)
        }
        Some(CocycleSpec::Values { values }) => {
            let elems = values.iter().map(|v| coeffs.element_signed(v)).collect::<Result<Vec<_>, _>>()?;
            let c = Cochain::from_values(x.clone(), 1, coeffs.clone(), elems)?;
            if !c.is_cocycle() {
                return Err(CliError::Validation("given values do not form a 1-cocycle".into()));
            }
            Ok(c)
        }
    }
}
