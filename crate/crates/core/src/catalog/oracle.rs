//! Brute-force Dijkgraaf–Witten counts and the E₆ lens-space closed forms.
//!
//! None of these read modular data; they exist to be compared against the
//! surgery evaluators.

use num_complex::Complex64;
use num_rational::Rational64;

use super::{gcd, FiniteAbelianGroup};
use crate::error::{Error, Result};
use crate::surgery::PlumbingTree;

pub fn ratio_to_f64(r: Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Untwisted Dijkgraaf–Witten invariant of `L(p, q)`:
/// `|Hom(ℤ/p, G)| / |G| = |{g : p·g = 0}| / |G|`, independent of `q`.
pub fn dw_lens_oracle(group: &FiniteAbelianGroup, p: u64) -> Rational64 {
    let zero = group.identity();
    let count = group.elements().filter(|g| group.scale(p, g) == zero).count();
    Rational64::new(count as i64, group.order() as i64)
}

/// Untwisted Dijkgraaf–Witten invariant of the Brieskorn homology sphere
/// `Σ(p, q, r)`: only the trivial homomorphism exists, giving `1/|G|`.
pub fn dw_brieskorn_oracle(
    group: &FiniteAbelianGroup,
    p: u64,
    q: u64,
    r: u64,
) -> Result<Rational64> {
    if p < 2 || q < 2 || r < 2 {
        return Err(Error::Precondition(format!(
            "Brieskorn exponents must be at least 2, got ({p},{q},{r})"
        )));
    }
    if gcd(p, q) != 1 || gcd(q, r) != 1 || gcd(p, r) != 1 {
        return Err(Error::Unsupported(format!(
            "({p},{q},{r}) is not pairwise coprime; H1 is not trivial"
        )));
    }
    Ok(Rational64::new(1, group.order() as i64))
}

/// Untwisted Dijkgraaf–Witten invariant of the plumbed manifold of `tree`,
/// counted directly: `|{x ∈ G^V : Λx = 0}| / |G|` where `Λ` is the linking
/// matrix (framings on the diagonal, `1` per edge).
///
/// Enumerates `n^V` vectors per cyclic factor; intended for small trees.
pub fn dw_plumbing_oracle(group: &FiniteAbelianGroup, tree: &PlumbingTree) -> Rational64 {
    let v = tree.len();
    let mut linking = vec![vec![0i64; v]; v];
    for (i, &a) in tree.framings().iter().enumerate() {
        linking[i][i] = a;
    }
    for &(a, b) in tree.edges() {
        linking[a][b] += 1;
        linking[b][a] += 1;
    }
    let mut homs: i64 = 1;
    for &n in group.factors() {
        let n = n as i64;
        let total = (n as usize).pow(v as u32);
        let mut count = 0i64;
        let mut x = vec![0i64; v];
        for code in 0..total {
            let mut c = code;
            for slot in x.iter_mut() {
                *slot = (c % n as usize) as i64;
                c /= n as usize;
            }
            let kernel = linking
                .iter()
                .all(|row| row.iter().zip(&x).map(|(a, b)| a * b).sum::<i64>().rem_euclid(n) == 0);
            if kernel {
                count += 1;
            }
        }
        homs *= count;
    }
    Rational64::new(homs, group.order() as i64)
}

/// Closed forms for the E₆ subfactor double:
///
/// `Z(L(p,1)) = (1/12)·{((−1)^p + 1)·e^{−pπi/3} + 2e^{−5pπi/6} + i^p + 2(−1)^p + 5}`
///
/// `Z(L(p,2)) = 1/4 + (−1)^{(p+1)/2}·i/12 − ((√3 + i)/12)·e^{−(p+1)πi/6}` for odd `p`.
pub fn e6_lens_reference(p: u64, q: u64) -> Result<Complex64> {
    let pi = std::f64::consts::PI;
    let i = Complex64::i();
    let sign = |e: u64| if e.is_multiple_of(2) { 1.0 } else { -1.0 };
    match q {
        1 => {
            let pf = p as f64;
            let z = Complex64::from_polar(1.0, -pf * pi / 3.0) * (sign(p) + 1.0)
                + Complex64::from_polar(2.0, -5.0 * pf * pi / 6.0)
                + i.powu(p as u32)
                + 2.0 * sign(p)
                + 5.0;
            Ok(z / 12.0)
        }
        2 => {
            if p.is_multiple_of(2) {
                return Err(Error::Precondition(format!("L(p,2) needs odd p, got {p}")));
            }
            let half = p.div_ceil(2);
            let z = Complex64::new(0.25, 0.0) + i * sign(half) / 12.0
                - (Complex64::new(3f64.sqrt(), 1.0) / 12.0)
                    * Complex64::from_polar(1.0, -((p + 1) as f64) * pi / 6.0);
            Ok(z)
        }
        _ => Err(Error::Precondition(format!("closed forms exist for q = 1, 2 only, got {q}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::approx_eq;

    fn z(n: u64) -> FiniteAbelianGroup {
        FiniteAbelianGroup::cyclic(n)
    }

    #[test]
    fn lens_oracle_examples() {
        assert_eq!(dw_lens_oracle(&z(2), 3), Rational64::new(1, 2));
        assert_eq!(dw_lens_oracle(&z(2), 4), Rational64::new(1, 1));
        assert_eq!(dw_lens_oracle(&FiniteAbelianGroup::trivial(), 7), Rational64::new(1, 1));
    }

    #[test]
    fn lens_oracle_is_gcd_over_n() {
        for n in 1..=20 {
            for p in 1..=20 {
                assert_eq!(
                    dw_lens_oracle(&z(n), p),
                    Rational64::new(gcd(p, n) as i64, n as i64),
                    "n={n} p={p}"
                );
            }
        }
    }

    #[test]
    fn brieskorn_oracle() {
        assert_eq!(dw_brieskorn_oracle(&z(2), 2, 3, 5).unwrap(), Rational64::new(1, 2));
        assert_eq!(dw_brieskorn_oracle(&z(3), 2, 3, 7).unwrap(), Rational64::new(1, 3));
        assert_eq!(
            dw_brieskorn_oracle(&FiniteAbelianGroup::trivial(), 3, 5, 7).unwrap(),
            Rational64::new(1, 1)
        );
        assert!(matches!(dw_brieskorn_oracle(&z(2), 2, 4, 5), Err(Error::Unsupported(_))));
    }

    #[test]
    fn plumbing_oracle_counts_linking_kernel() {
        // Star (1; p, q, r) has |H1| = |pqr − pq − qr − rp|.
        let orders = [((2, 3, 5), 1), ((2, 3, 7), 1), ((2, 5, 7), 11), ((3, 5, 7), 34)];
        for ((p, q, r), h1) in orders {
            let tree = PlumbingTree::star(1, &[p, q, r]);
            for n in [2u64, 3, 11, 17] {
                let expect = Rational64::new(gcd(h1, n) as i64, n as i64);
                assert_eq!(dw_plumbing_oracle(&z(n), &tree), expect, "({p},{q},{r}) n={n}");
            }
        }
        let single = PlumbingTree::chain(&[6]);
        assert_eq!(dw_plumbing_oracle(&z(4), &single), dw_lens_oracle(&z(4), 6));
    }

    #[test]
    fn e6_spot_values() {
        let c = Complex64::new;
        assert!(approx_eq(e6_lens_reference(2, 1).unwrap(), c(0.5, 0.0), 1e-15));
        assert!(approx_eq(e6_lens_reference(3, 1).unwrap(), c(0.25, -0.25), 1e-15));
        // L(1,2) and L(1,1) are both S³: (3 − √3)/12.
        let s3 = c((3.0 - 3f64.sqrt()) / 12.0, 0.0);
        assert!(approx_eq(e6_lens_reference(1, 2).unwrap(), s3, 1e-15));
        assert!(approx_eq(e6_lens_reference(1, 1).unwrap(), s3, 1e-15));
        assert!(e6_lens_reference(4, 2).is_err());
        assert!(e6_lens_reference(4, 3).is_err());
    }
}
