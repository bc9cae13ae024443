//! Built-in modular data, independent oracles and reference values.

mod fixtures;
mod group;
mod io;
mod oracle;

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::modular::ModularData;
use crate::numeric::{root_of_unity, ONE};

pub use fixtures::{fixtures_for, fixtures_table, golden_fixtures, FixtureSource, GoldenFixture};
pub use group::{cyclic_cocycle, FiniteAbelianGroup};
pub use io::{load_modular_file, parse_modular, save_modular_file, write_modular};
pub use oracle::{
    dw_brieskorn_oracle, dw_lens_oracle, dw_plumbing_oracle, e6_lens_reference, ratio_to_f64,
};

/// Rank one, `S = T = (1)`.
pub fn trivial_data() -> ModularData {
    ModularData::from_fn(1, |_, _| ONE, vec![ONE]).expect("shape").with_names(["1"])
}

/// Fibonacci anyons `{1, τ}` with `t_τ = exp(4πi/5)`.
pub fn fibonacci() -> ModularData {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let d = (2.0 + phi).sqrt();
    let s = [[1.0, phi], [phi, -1.0]];
    ModularData::from_fn(2, |i, j| Complex64::new(s[i][j] / d, 0.0), vec![ONE, root_of_unity(0.4)])
        .expect("shape")
        .with_names(["1", "tau"])
}

/// Ising anyons `{1, σ, ψ}` with `t_σ = exp(πi/8)`, `t_ψ = −1`.
pub fn ising() -> ModularData {
    let r2 = 2f64.sqrt();
    let s = [[1.0, r2, 1.0], [r2, 0.0, -r2], [1.0, -r2, 1.0]];
    ModularData::from_fn(
        3,
        |i, j| Complex64::new(s[i][j] / 2.0, 0.0),
        vec![ONE, root_of_unity(1.0 / 16.0), -ONE],
    )
    .expect("shape")
    .with_names(["1", "sigma", "psi"])
}

/// `SU(2)` at level `k`: labels `0..=k` (twice the spin),
/// `S_ij = √(2/(k+2))·sin((i+1)(j+1)π/(k+2))`, `t_j = exp(2πi·j(j+2)/(4(k+2)))`.
pub fn su2_level_k(k: usize) -> Result<ModularData> {
    if k == 0 {
        return Err(Error::Generator("SU(2) level must be at least 1".into()));
    }
    let r = k + 1;
    let kk = (k + 2) as f64;
    let norm = (2.0 / kk).sqrt();
    let t = (0..r).map(|j| root_of_unity((j * (j + 2)) as f64 / (4.0 * kk))).collect();
    Ok(ModularData::from_fn(
        r,
        |i, j| Complex64::new(norm * (((i + 1) * (j + 1)) as f64 * PI / kk).sin(), 0.0),
        t,
    )?
    .with_names((0..r).map(|j| j.to_string())))
}

/// Pointed data on `ℤ/n` from the quadratic form `θ(a) = exp(2πi·q·a²/(2n))`.
///
/// `S_ab = exp(−2πi·q·ab/n)/√n`, `t_a = θ(a)`. The form is well defined
/// on `ℤ/n` only when `q·n` is even, and non-degenerate iff `gcd(q, n) = 1`.
pub fn pointed_cyclic(n: u64, q: u64) -> Result<ModularData> {
    if n == 0 {
        return Err(Error::Generator("n must be positive".into()));
    }
    let q = q % (2 * n);
    if !(q * n).is_multiple_of(2) {
        return Err(Error::Generator(format!(
            "q = {q} does not define a quadratic form on Z/{n} (q·n must be even)"
        )));
    }
    if gcd(q, n) != 1 {
        return Err(Error::Generator(format!(
            "form q = {q} on Z/{n} is degenerate (gcd(q, n) = {})",
            gcd(q, n)
        )));
    }
    let r = n as usize;
    let norm = (n as f64).sqrt();
    let t =
        (0..n).map(|a| root_of_unity(((q * a * a) % (2 * n)) as f64 / (2 * n) as f64)).collect();
    Ok(ModularData::from_fn(
        r,
        |a, b| root_of_unity(-(((q * (a * b) as u64) % n) as f64) / n as f64) / norm,
        t,
    )?
    .with_names((0..n).map(|a| a.to_string())))
}

/// Quantum double `D(G)` of a finite abelian group.
///
/// Labels are `(g, χ)` at index `g·|G| + χ`, characters indexed by the
/// group itself. `S = conj(χ(h)·ψ(g))/|G|`, `t = χ(g)`.
pub fn quantum_double_abelian(group: &FiniteAbelianGroup) -> ModularData {
    let order = group.order();
    let elems: Vec<Vec<u64>> = group.elements().collect();
    let r = order * order;
    let s = |a: usize, b: usize| {
        let (g, chi) = (&elems[a / order], &elems[a % order]);
        let (h, psi) = (&elems[b / order], &elems[b % order]);
        (group.character(chi, h) * group.character(psi, g)).conj() / order as f64
    };
    let t = (0..r).map(|a| group.character(&elems[a % order], &elems[a / order])).collect();
    let names: Vec<String> = (0..r)
        .map(|a| {
            format!(
                "({}|{})",
                group.display_element(&elems[a / order]),
                group.display_element(&elems[a % order])
            )
        })
        .collect();
    ModularData::from_fn(r, s, t).expect("shape").with_names(names)
}

/// `D(ℤ/2)`, labels `1, e, m, f`.
pub fn toric_code() -> ModularData {
    quantum_double_abelian(&FiniteAbelianGroup::cyclic(2)).with_names(["1", "e", "m", "f"])
}

/// The projective character of `ℤ/n` twisted by `ω_k`, attached to flux `g`
/// and charge `m`: `χ(x) = exp(2πi·(k·g·x/n² + m·x/n))` on `x ∈ 0..n`.
pub(crate) fn twisted_character(n: u64, k: u64, g: u64, m: u64, x: u64) -> Complex64 {
    let (g, x) = (g % n, x % n);
    let n2 = (n * n) as f64;
    root_of_unity(((k % n) * g * x) as f64 / n2 + ((m * x) % n) as f64 / n as f64)
}

/// Twisted double `D^ω(ℤ/n)` for the cocycle `ω_k` of [`cyclic_cocycle`].
///
/// Labels `(g, m)` at index `g·n + m`; `S = conj(χ_{g,m}(h)·χ_{h,m'}(g))/n`,
/// `t = χ_{g,m}(g)`. With `k = 0` this is exactly
/// `quantum_double_abelian(ℤ/n)` in the same label order.
pub fn twisted_double_cyclic(n: u64, k: u64) -> ModularData {
    assert!(n > 0, "n must be positive");
    let r = (n * n) as usize;
    let split = |a: usize| (a as u64 / n, a as u64 % n);
    let s = |a: usize, b: usize| {
        let ((g, m), (h, mm)) = (split(a), split(b));
        (twisted_character(n, k, g, m, h) * twisted_character(n, k, h, mm, g)).conj() / n as f64
    };
    let t = (0..r)
        .map(|a| {
            let (g, m) = split(a);
            twisted_character(n, k, g, m, g)
        })
        .collect();
    ModularData::from_fn(r, s, t).expect("shape").with_names((0..r).map(|a| {
        let (g, m) = split(a);
        format!("({g}|{m})")
    }))
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
