mod common;

use common::{cocycles, random_walk};
use num_complex::Complex64;
use tvo::catalog::{dw_lens_oracle, ratio_to_f64, twisted_double_cyclic, FiniteAbelianGroup};
use tvo::statesum::{pachner_23, pointed_sixj, tv_evaluate, Triangulation};
use tvo::surgery::lens_general;

const TOL: f64 = 1e-9;

fn state_sum(n: u64, k: u64, tri: &Triangulation) -> Complex64 {
    tv_evaluate(&pointed_sixj(n, k), tri).unwrap().value
}

#[test]
fn lens_state_sums_match_surgery_on_twisted_doubles() {
    for (p, q) in [(2, 1), (3, 1), (4, 1), (5, 1), (5, 2), (6, 1), (7, 2), (7, 3), (8, 3)] {
        let tri = Triangulation::lens_space(p, q).unwrap();
        for (n, k) in cocycles(4) {
            let z = state_sum(n, k, &tri);
            let want = lens_general(&twisted_double_cyclic(n, k), p, q).unwrap().value;
            assert!((z - want).norm() < TOL, "L({p},{q}) n={n} k={k}: {z} vs {want}");
        }
    }
}

#[test]
fn untwisted_lens_state_sums_count_homomorphisms() {
    for p in 1..=8 {
        let tri = Triangulation::lens_space(p, 1).unwrap();
        for n in 1..=5 {
            let want = ratio_to_f64(dw_lens_oracle(&FiniteAbelianGroup::cyclic(n), p));
            let z = state_sum(n, 0, &tri);
            assert!((z - Complex64::new(want, 0.0)).norm() < TOL, "L({p},1) n={n}: {z}");
        }
    }
}

#[test]
fn random_pachner_moves_on_lens_spaces() {
    for (seed, (p, q)) in [(3, 1), (5, 2)].into_iter().enumerate() {
        let base = Triangulation::lens_space(p, q).unwrap();
        let walk = random_walk(base.clone(), 20, seed as u64);
        for (n, k) in cocycles(4) {
            let want = state_sum(n, k, &base);
            for tri in &walk {
                let z = state_sum(n, k, tri);
                assert!((z - want).norm() < TOL, "L({p},{q}) n={n} k={k} {} tets", tri.len());
            }
        }
    }
}

#[test]
fn text_round_trip_preserves_the_value() {
    let tri = pachner_23(&Triangulation::lens_space(5, 2).unwrap(), 2).unwrap();
    let back = Triangulation::parse(&tri.to_text(), "memory").unwrap();
    assert_eq!(back.len(), tri.len());
    for (n, k) in [(3, 1), (4, 3)] {
        assert!((state_sum(n, k, &tri) - state_sum(n, k, &back)).norm() < TOL);
    }
}
