//! Acceptance run: one line per criterion.
//!
//! Exits non-zero if a criterion fails, unless it is listed in `KNOWN_RED`
//! and fails exactly in the listed cases. A known-red criterion that starts
//! passing also fails the run, so the list cannot go stale.

mod common;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use common::{cocycles, random_walk};
use num_complex::Complex64;
use tvo::catalog::{
    dw_lens_oracle, e6_lens_reference, fibonacci, fixtures_for, ising, load_modular_file,
    pointed_cyclic, quantum_double_abelian, ratio_to_f64, su2_level_k, toric_code,
    twisted_double_cyclic, FiniteAbelianGroup, FixtureSource,
};
use tvo::modular::{permutation_equivalent, verlinde_sums};
use tvo::statesum::{pointed_sixj, tv_evaluate, Triangulation};
use tvo::surgery::{brieskorn, lens_general, lens_p1, lens_p2, Manifold};
use tvo::tube::{tube_modular_data, tube_pointed};
use tvo::{conjugate_equivalent, double_data, fusion_from_s, verify_verlinde, ModularData};

const TOL: f64 = 1e-9;
const GOLDEN_TOL: f64 = 1e-6;
const TRIPLES: [(u64, u64, u64); 4] = [(2, 3, 5), (2, 3, 7), (2, 5, 7), (3, 5, 7)];

/// Criteria expected to fail, with the exact failing cases (text before `:`).
const KNOWN_RED: &[(u32, &[&str])] = &[(3, &["Z/2 M(3,5,7)"])];

type Criterion = (u32, &'static str, fn() -> Outcome);

enum Outcome {
    Pass(String),
    Fail(Vec<String>),
    Skipped(String),
}

/// Collects failing cases and a count of checks.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, case: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(case());
        }
    }

    fn close(&mut self, got: Complex64, want: Complex64, tol: f64, case: impl FnOnce() -> String) {
        let err = (got - want).norm();
        self.check(err <= tol, || format!("{}: got {got:.12}, want {want:.12}", case()));
    }

    fn error(&mut self, case: String) {
        self.checks += 1;
        self.failures.push(case);
    }

    fn outcome(self) -> Outcome {
        if self.failures.is_empty() {
            Outcome::Pass(format!("{} checks", self.checks))
        } else {
            Outcome::Fail(self.failures)
        }
    }
}

fn case_key(case: &str) -> &str {
    case.split(':').next().unwrap_or(case)
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn group_name(g: &FiniteAbelianGroup) -> String {
    let parts: Vec<String> = g.factors().iter().map(|n| format!("Z/{n}")).collect();
    parts.join("x")
}

fn criterion_1() -> Outcome {
    let mut t = Tally::default();
    for factors in [vec![2], vec![3], vec![4], vec![2, 2]] {
        let g = FiniteAbelianGroup::new(factors);
        let data = quantum_double_abelian(&g);
        for p in 1..=12u64 {
            let want = real(ratio_to_f64(dw_lens_oracle(&g, p)));
            for q in (1..=p).filter(|&q| gcd(p, q) == 1) {
                match lens_general(&data, p, q) {
                    Ok(v) => {
                        t.close(v.value, want, TOL, || format!("{} L({p},{q})", group_name(&g)))
                    }
                    Err(e) => t.error(format!("{} L({p},{q}): {e}", group_name(&g))),
                }
            }
        }
    }
    let tc = toric_code();
    for p in 1..=12u64 {
        let want = real((3.0 + if p % 2 == 0 { 1.0 } else { -1.0 }) / 4.0);
        let got = lens_general(&tc, p, 1).expect("q = 1").value;
        t.close(got, want, TOL, || format!("toric code L({p},1) closed form"));
    }
    t.outcome()
}

fn criterion_2() -> Outcome {
    let mut inputs: Vec<(String, ModularData)> =
        vec![("fibonacci".into(), fibonacci()), ("ising".into(), ising())];
    for k in 1..=8 {
        inputs.push((format!("su2_{k}"), su2_level_k(k).expect("k >= 1")));
    }
    for n in 1..=5u64 {
        for q in 0..2 * n {
            if let Ok(d) = pointed_cyclic(n, q) {
                inputs.push((format!("pointed({n},{q})"), d));
            }
        }
    }
    let mut t = Tally::default();
    for (name, c) in &inputs {
        let dd = double_data(c);
        for p in 1..=12 {
            let z = lens_p1(c, p).expect("lens").value;
            let got = lens_p1(&dd, p).expect("lens").value;
            t.close(got, real(z.norm_sqr()), TOL, || format!("{name} L({p},1)"));
        }
        for (p, q, r) in TRIPLES {
            let z = brieskorn(c, p, q, r).expect("coprime").value;
            let got = brieskorn(&dd, p, q, r).expect("coprime").value;
            t.close(got, real(z.norm_sqr()), TOL, || format!("{name} M({p},{q},{r})"));
        }
    }
    let spot = lens_p1(&double_data(&fibonacci()), 3).expect("lens").value;
    t.close(spot, real((5.0 + 5f64.sqrt()) / 10.0), TOL, || "spot D(fib) L(3,1)".into());
    t.outcome()
}

fn criterion_3() -> Outcome {
    let mut t = Tally::default();
    for n in [2u64, 3] {
        let g = FiniteAbelianGroup::cyclic(n);
        let data = quantum_double_abelian(&g);
        for (p, q, r) in TRIPLES {
            let got = brieskorn(&data, p, q, r).expect("coprime").value;
            t.close(got, real(1.0 / n as f64), TOL, || format!("Z/{n} M({p},{q},{r})"));
        }
    }
    t.outcome()
}

fn doubled_and_twisted() -> Vec<(String, ModularData)> {
    let mut out: Vec<(String, ModularData)> = Vec::new();
    out.push(("D(fibonacci)".into(), double_data(&fibonacci())));
    out.push(("D(ising)".into(), double_data(&ising())));
    for k in 1..=4 {
        out.push((format!("D(su2_{k})"), double_data(&su2_level_k(k).expect("k >= 1"))));
    }
    for n in 2..=4u64 {
        for q in 0..2 * n {
            if let Ok(d) = pointed_cyclic(n, q) {
                out.push((format!("D(pointed({n},{q}))"), double_data(&d)));
            }
        }
    }
    for (n, k) in cocycles(6) {
        out.push((format!("twisted_double({n},{k})"), twisted_double_cyclic(n, k)));
    }
    for factors in [vec![2, 2], vec![2, 4], vec![3, 3]] {
        let g = FiniteAbelianGroup::new(factors);
        out.push((format!("D({})", group_name(&g)), quantum_double_abelian(&g)));
    }
    out
}

fn criterion_4() -> Outcome {
    let mut t = Tally::default();
    for (name, d) in doubled_and_twisted() {
        match verify_verlinde(&d) {
            Ok(rep) => t.check(rep.is_strict(TOL), || {
                format!("{name}: not strict (phase {:.12})", rep.anomaly_phase)
            }),
            Err(e) => t.error(format!("{name}: {e}")),
        }
        match verlinde_sums(&d) {
            Ok(sums) => {
                let worst = sums
                    .iter()
                    .map(|z| (z - real(z.re.round().max(0.0))).norm())
                    .fold(0.0, f64::max);
                t.check(worst <= 1e-6, || format!("{name}: fusion off integers by {worst:.3e}"));
            }
            Err(e) => t.error(format!("{name}: {e}")),
        }
        match fusion_from_s(&d) {
            Ok(f) => t.check(f.is_associative(), || format!("{name}: fusion not associative")),
            Err(e) => t.error(format!("{name}: {e}")),
        }
    }
    t.outcome()
}

fn criterion_5() -> Outcome {
    let mut t = Tally::default();
    let s3 = Triangulation::boundary_of_4_simplex();
    for n in 1..=5u64 {
        let got = tv_evaluate(&pointed_sixj(n, 0), &s3).expect("pointed").value;
        t.close(got, real(1.0 / n as f64), TOL, || format!("S3 n={n}"));
    }
    let walk = random_walk(s3.clone(), 24, 2024);
    for (n, k) in cocycles(4) {
        let sixj = pointed_sixj(n, k);
        let base = tv_evaluate(&sixj, &s3).expect("pointed").value;
        for (step, tri) in walk.iter().enumerate() {
            match tv_evaluate(&sixj, tri) {
                Ok(v) => t.close(v.value, base, TOL, || {
                    format!("n={n} k={k} after {} moves ({} tets)", 4 * (step + 1), tri.len())
                }),
                Err(e) => t.error(format!("n={n} k={k}: {e}")),
            }
        }
    }
    t.outcome()
}

fn criterion_6() -> Outcome {
    let mut t = Tally::default();
    for (n, k) in cocycles(4) {
        let reference = twisted_double_cyclic(n, k);
        let tube = match tube_modular_data(&tube_pointed(n, k)) {
            Ok(d) => d,
            Err(e) => {
                t.error(format!("tube({n},{k}): {e}"));
                continue;
            }
        };
        let equal = matches!(permutation_equivalent(&tube, &reference), Ok(Some(_)));
        let conj = matches!(conjugate_equivalent(&tube, &reference), Ok(Some(_)));
        t.check(equal || conj, || format!("tube({n},{k}) not equivalent to the twisted double"));
        if k == 0 {
            for p in 1..=12 {
                let got = lens_p1(&tube, p).expect("lens").value;
                let want = real(gcd(p, n) as f64 / n as f64);
                t.close(got, want, TOL, || format!("tube({n},0) L({p},1)"));
            }
        }
    }
    t.outcome()
}

fn criterion_7() -> Outcome {
    let mut t = Tally::default();
    for (name, d) in doubled_and_twisted() {
        let strict = verify_verlinde(&d).map(|r| r.is_strict(TOL)).unwrap_or(false);
        if !strict {
            continue;
        }
        let p1 = lens_p1(&d, 3).expect("lens").value;
        let p2 = lens_p2(&d, 3).expect("odd p").value;
        t.close(p2, p1.conj(), TOL, || name.to_string());
    }
    t.outcome()
}

fn golden_against(source: FixtureSource, path: &PathBuf, t: &mut Tally) {
    let data = match load_modular_file(path) {
        Ok(d) => d,
        Err(e) => return t.error(format!("{source}: {e}")),
    };
    for f in fixtures_for(source) {
        match f.manifold.evaluate(&data) {
            Ok(v) => {
                t.close(v.value, f.expected, GOLDEN_TOL, || format!("{source} {}", f.manifold))
            }
            Err(e) => t.error(format!("{source} {}: {e}", f.manifold)),
        }
    }
    if source == FixtureSource::E6 {
        for p in 1..=12 {
            let want = e6_lens_reference(p, 1).expect("q = 1");
            let m = Manifold::Lens { p, q: 1 };
            match m.evaluate(&data) {
                Ok(v) => t.close(v.value, want, GOLDEN_TOL, || format!("e6 reference {m}")),
                Err(e) => t.error(format!("e6 {m}: {e}")),
            }
        }
    }
}

fn criterion_8() -> Outcome {
    let sources = [
        ("TVO_HAAGERUP_DATA", FixtureSource::Haagerup),
        ("TVO_E6_DATA", FixtureSource::E6),
        ("TVO_D5_DATA", FixtureSource::D5),
        ("TVO_E6_Z3_DATA", FixtureSource::E6Z3),
        ("TVO_E6_Z4_DATA", FixtureSource::E6Z4),
        ("TVO_E6_Z5_DATA", FixtureSource::E6Z5),
        ("TVO_E6_Z2XZ2_DATA", FixtureSource::E6Z2xZ2),
    ];
    let mut t = Tally::default();
    let mut used = Vec::new();
    for (var, source) in sources {
        if let Some(path) = std::env::var_os(var) {
            golden_against(source, &PathBuf::from(path), &mut t);
            used.push(source.name());
        }
    }
    if used.is_empty() {
        let names: Vec<&str> = sources.iter().map(|(v, _)| *v).collect();
        return Outcome::Skipped(format!("no external data ({} unset)", names.join(", ")));
    }
    match t.outcome() {
        Outcome::Pass(s) => Outcome::Pass(format!("{s} on {}", used.join(", "))),
        other => other,
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (1, "Dijkgraaf-Witten oracle on lens spaces", criterion_1),
        (2, "doubling identity", criterion_2),
        (3, "Brieskorn spheres give 1/|G|", criterion_3),
        (4, "Verlinde axioms for doubles and twisted doubles", criterion_4),
        (5, "state sum values and Pachner invariance", criterion_5),
        (6, "tube algebra pipeline", criterion_6),
        (7, "L(3,2) is the conjugate of L(3,1)", criterion_7),
        (8, "subfactor reference values", criterion_8),
    ];
    let mut ok = true;
    for (id, title, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let known: Option<BTreeSet<&str>> = KNOWN_RED
            .iter()
            .find(|(k, _)| *k == id)
            .map(|(_, cases)| cases.iter().copied().collect());
        match (&outcome, &known) {
            (Outcome::Pass(detail), None) => {
                println!("criterion {id} PASS    {title} ({detail}, {secs:.2}s)");
            }
            (Outcome::Skipped(why), _) => {
                println!("criterion {id} SKIPPED {title}: {why}");
            }
            (Outcome::Fail(cases), known) => {
                println!("criterion {id} FAIL    {title} ({} failing, {secs:.2}s)", cases.len());
                for case in cases {
                    println!("    {case}");
                }
                let expected = known.as_ref().is_some_and(|k| {
                    cases.iter().map(|c| case_key(c)).collect::<BTreeSet<_>>() == *k
                });
                if expected {
                    println!("    (known red: failing cases match the recorded defect)");
                } else {
                    ok = false;
                }
            }
            (Outcome::Pass(detail), Some(_)) => {
                println!("criterion {id} PASS    {title} ({detail}); listed as known red, update the list");
                ok = false;
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
