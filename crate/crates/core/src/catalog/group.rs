use num_complex::Complex64;

use crate::numeric::root_of_unity;

/// `ℤ/n₁ × ⋯ × ℤ/n_k`, elements encoded as residue tuples.
///
/// Elements are also addressed by a mixed-radix index in `0..order()`,
/// last factor fastest, which is the label order used by the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    factors: Vec<u64>,
}

impl FiniteAbelianGroup {
    /// Factors of order 1 are dropped; an empty list is the trivial group.
    pub fn new(factors: Vec<u64>) -> Self {
        assert!(factors.iter().all(|&n| n > 0), "cyclic factors must be positive");
        Self { factors: factors.into_iter().filter(|&n| n > 1).collect() }
    }

    pub fn cyclic(n: u64) -> Self {
        Self::new(vec![n])
    }

    pub fn trivial() -> Self {
        Self::new(Vec::new())
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.factors.iter().product::<u64>() as usize
    }

    pub fn identity(&self) -> Vec<u64> {
        vec![0; self.factors.len()]
    }

    pub fn element(&self, mut index: usize) -> Vec<u64> {
        let mut out = vec![0; self.factors.len()];
        for (slot, &n) in out.iter_mut().zip(&self.factors).rev() {
            *slot = index as u64 % n;
            index /= n as usize;
        }
        out
    }

    pub fn index_of(&self, element: &[u64]) -> usize {
        element
            .iter()
            .zip(&self.factors)
            .fold(0usize, |acc, (&x, &n)| acc * n as usize + (x % n) as usize)
    }

    pub fn elements(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        (0..self.order()).map(|i| self.element(i))
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).zip(&self.factors).map(|((&x, &y), &n)| (x + y) % n).collect()
    }

    pub fn scale(&self, k: u64, a: &[u64]) -> Vec<u64> {
        a.iter().zip(&self.factors).map(|(&x, &n)| (x % n) * (k % n) % n).collect()
    }

    /// Value of the character indexed by `chi` (itself a tuple of
    /// residues) on `g`: `Π exp(2πi·χ_j·g_j / n_j)`.
    pub fn character(&self, chi: &[u64], g: &[u64]) -> Complex64 {
        let phase: f64 = chi
            .iter()
            .zip(g)
            .zip(&self.factors)
            .map(|((&c, &x), &n)| ((c * x) % n) as f64 / n as f64)
            .sum();
        root_of_unity(phase)
    }

    pub fn display_element(&self, g: &[u64]) -> String {
        let parts: Vec<String> = g.iter().map(u64::to_string).collect();
        parts.join(",")
    }
}

/// The standard representative of `H³(ℤ/n, U(1)) ≅ ℤ/n`:
/// `ω_k(a, b, c) = exp(2πi·k·a·(b + c − [(b + c) mod n]) / n²)` on
/// residues `a, b, c ∈ 0..n`.
pub fn cyclic_cocycle(n: u64, k: u64, a: u64, b: u64, c: u64) -> Complex64 {
    let (a, b, c) = (a % n, b % n, c % n);
    let carry = (b + c) / n; // 0 or 1
    root_of_unity(((k % n) * a * carry) as f64 / n as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::approx_eq;

    #[test]
    fn mixed_radix_round_trip() {
        let g = FiniteAbelianGroup::new(vec![2, 3, 1, 4]);
        assert_eq!(g.factors(), &[2, 3, 4]);
        assert_eq!(g.order(), 24);
        for i in 0..g.order() {
            assert_eq!(g.index_of(&g.element(i)), i);
        }
        assert_eq!(g.identity(), g.element(0));
        assert_eq!(FiniteAbelianGroup::trivial().order(), 1);
    }

    #[test]
    fn cocycle_condition_holds() {
        for n in 1..=6u64 {
            for k in 0..n {
                let w = |a, b, c| cyclic_cocycle(n, k, a, b, c);
                for a in 0..n {
                    for b in 0..n {
                        for c in 0..n {
                            for d in 0..n {
                                let lhs = w(b, c, d) * w(a, (b + c) % n, d) * w(a, b, c);
                                let rhs = w((a + b) % n, c, d) * w(a, b, (c + d) % n);
                                assert!(approx_eq(lhs, rhs, 1e-12), "n={n} k={k}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn z2_cocycle_values() {
        // ω₁(a,b,c) = (−1)^{a·⌊(b+c)/2⌋}
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    let sign = if a * ((b + c) / 2) == 1 { -1.0 } else { 1.0 };
                    assert!(approx_eq(
                        cyclic_cocycle(2, 1, a, b, c),
                        Complex64::new(sign, 0.0),
                        1e-15
                    ));
                }
            }
        }
    }
}
