#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tvo::statesum::{pachner_14, pachner_23, Triangulation};

/// `(n, k)` for every cyclic group up to `max_n` and every cocycle class.
pub fn cocycles(max_n: u64) -> impl Iterator<Item = (u64, u64)> {
    (1..=max_n).flat_map(|n| (0..n).map(move |k| (n, k)))
}

/// Applies `moves` random 1-4 and 2-3 moves, keeping every fourth result.
pub fn random_walk(start: Triangulation, moves: usize, seed: u64) -> Vec<Triangulation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tri = start;
    let mut kept = Vec::new();
    let mut done = 0;
    while done < moves {
        let next = if rng.random_bool(0.3) {
            pachner_14(&tri, rng.random_range(0..tri.len()))
        } else {
            pachner_23(&tri, rng.random_range(0..tri.num_faces()))
        };
        let Ok(next) = next else { continue };
        tri = next;
        done += 1;
        if done % 4 == 0 {
            kept.push(tri.clone());
        }
    }
    kept
}
