use std::path::Path;

use tvo::catalog::{self, FiniteAbelianGroup};
use tvo::statesum::{pointed_sixj, SixJData, Triangulation};
use tvo::tube::{tube_modular_data, tube_pointed};
use tvo::ModularData;

/// Name patterns accepted after `builtin:`, with a description.
pub const MODULAR_BUILTINS: &[(&str, &str)] = &[
    ("trivial", "rank 1, S = (1), T = (1)"),
    ("fibonacci", "Fibonacci (Lee-Yang conjugate) data, anomalous"),
    ("ising", "Ising data, anomalous"),
    ("su2-<k>", "SU(2) at level k >= 1"),
    ("pointed-<n>-<q>", "pointed Z/n with quadratic form exp(2 pi i q a^2 / 2n)"),
    ("toric-code", "quantum double of Z/2"),
    ("double-semion", "twisted double of Z/2 with the nontrivial cocycle"),
    ("quantum-double-z<n>", "quantum double of Z/n"),
    ("twisted-double-<n>-<k>", "twisted double of Z/n with cocycle parameter k"),
    ("tube-<n>-<k>", "modular data read off the tube algebra of Vec(Z/n) with cocycle k"),
];

pub const SIXJ_BUILTINS: &[(&str, &str)] =
    &[("vec-z<n>[-<k>]", "pointed 6j data of Z/n with cocycle k")];

pub const TRIANGULATION_BUILTINS: &[(&str, &str)] = &[
    ("s3", "boundary of the 4-simplex"),
    ("lens-<p>-<q>", "layered lens space L(p,q) with p tetrahedra"),
];

fn numbers(rest: &str) -> Option<Vec<u64>> {
    rest.split('-').map(|p| p.parse().ok()).collect()
}

fn builtin_modular(name: &str) -> Result<ModularData, String> {
    let bad = || format!("unknown builtin '{name}' (see --list-builtins)");
    match name {
        "trivial" => Ok(catalog::trivial_data()),
        "fibonacci" => Ok(catalog::fibonacci()),
        "ising" => Ok(catalog::ising()),
        "toric-code" => Ok(catalog::toric_code()),
        "double-semion" => Ok(catalog::twisted_double_cyclic(2, 1)),
        _ => {
            if let Some(rest) = name.strip_prefix("su2-") {
                let [k] = numbers(rest).ok_or_else(bad)?[..] else { return Err(bad()) };
                catalog::su2_level_k(k as usize).map_err(|e| e.to_string())
            } else if let Some(rest) = name.strip_prefix("pointed-") {
                let [n, q] = numbers(rest).ok_or_else(bad)?[..] else { return Err(bad()) };
                catalog::pointed_cyclic(n, q).map_err(|e| e.to_string())
            } else if let Some(rest) = name.strip_prefix("quantum-double-z") {
                let [n] = numbers(rest).ok_or_else(bad)?[..] else { return Err(bad()) };
                if n == 0 {
                    return Err(bad());
                }
                Ok(catalog::quantum_double_abelian(&FiniteAbelianGroup::cyclic(n)))
            } else if let Some(rest) = name.strip_prefix("twisted-double-") {
                let [n, k] = numbers(rest).ok_or_else(bad)?[..] else { return Err(bad()) };
                if n == 0 {
                    return Err(bad());
                }
                Ok(catalog::twisted_double_cyclic(n, k))
            } else if let Some(rest) = name.strip_prefix("tube-") {
                let [n, k] = numbers(rest).ok_or_else(bad)?[..] else { return Err(bad()) };
                if n == 0 {
                    return Err(bad());
                }
                tube_modular_data(&tube_pointed(n, k)).map_err(|e| e.to_string())
            } else {
                Err(bad())
            }
        }
    }
}

/// `builtin:NAME` or a path to a modular data file.
pub fn resolve_modular(source: &str) -> Result<ModularData, String> {
    match source.strip_prefix("builtin:") {
        Some(name) => builtin_modular(name),
        None => catalog::load_modular_file(Path::new(source)).map_err(|e| e.to_string()),
    }
}

pub fn resolve_sixj(source: &str) -> Result<SixJData, String> {
    let bad = || format!("unknown 6j source '{source}' (expected builtin:vec-z<n>[-<k>])");
    let name = source.strip_prefix("builtin:").ok_or_else(bad)?;
    let rest = name.strip_prefix("vec-z").ok_or_else(bad)?;
    match numbers(rest).ok_or_else(bad)?[..] {
        [n] if n > 0 => Ok(pointed_sixj(n, 0)),
        [n, k] if n > 0 => Ok(pointed_sixj(n, k)),
        _ => Err(bad()),
    }
}

pub fn resolve_triangulation(source: &str) -> Result<Triangulation, String> {
    let Some(name) = source.strip_prefix("builtin:") else {
        return Triangulation::load(source).map_err(|e| e.to_string());
    };
    let bad = || format!("unknown triangulation '{source}' (see --list-builtins)");
    if name == "s3" {
        return Ok(Triangulation::boundary_of_4_simplex());
    }
    let rest = name.strip_prefix("lens-").ok_or_else(bad)?;
    let [p, q] = numbers(rest).ok_or_else(bad)?[..] else { return Err(bad()) };
    Triangulation::lens_space(p, q).map_err(|e| e.to_string())
}
