//! Reference invariant values for subfactor data sets.
//!
//! Apart from the E₆ lens spaces, these can only be reproduced by supplying
//! the corresponding modular data file.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use super::e6_lens_reference;
use crate::surgery::Manifold;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixtureSource {
    Haagerup,
    E6,
    D5,
    E6Z3,
    E6Z4,
    E6Z5,
    E6Z2xZ2,
}

impl FixtureSource {
    pub const ALL: [FixtureSource; 7] =
        [Self::Haagerup, Self::E6, Self::D5, Self::E6Z3, Self::E6Z4, Self::E6Z5, Self::E6Z2xZ2];

    pub fn name(self) -> &'static str {
        match self {
            Self::Haagerup => "haagerup",
            Self::E6 => "e6",
            Self::D5 => "d5",
            Self::E6Z3 => "e6-z3",
            Self::E6Z4 => "e6-z4",
            Self::E6Z5 => "e6-z5",
            Self::E6Z2xZ2 => "e6-z2xz2",
        }
    }
}

impl fmt::Display for FixtureSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FixtureSource {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL.into_iter().find(|src| src.name() == s).ok_or_else(|| {
            let names: Vec<_> = Self::ALL.iter().map(|s| s.name()).collect();
            format!("unknown fixture source '{s}' (expected one of {})", names.join(", "))
        })
    }
}

#[derive(Clone, Debug)]
pub struct GoldenFixture {
    pub source: FixtureSource,
    pub manifold: Manifold,
    pub expected: Complex64,
    /// The closed form the value was evaluated from.
    pub expression: &'static str,
}

fn lens(p: u64, q: u64) -> Manifold {
    Manifold::Lens { p, q }
}

fn brieskorn(p: u64, q: u64, r: u64) -> Manifold {
    Manifold::Brieskorn { p, q, r }
}

/// Every reference value, grouped by source.
pub fn golden_fixtures() -> Vec<GoldenFixture> {
    let s3 = 3f64.sqrt();
    let s2 = 2f64.sqrt();
    let s5 = 5f64.sqrt();
    let s7 = 7f64.sqrt();
    let s13 = 13f64.sqrt();
    let s21 = 21f64.sqrt();
    let c = Complex64::new;
    let real = |x: f64| c(x, 0.0);

    let mut out = Vec::new();
    let mut push = |source, manifold, expected, expression| {
        out.push(GoldenFixture { source, manifold, expected, expression })
    };

    use FixtureSource::*;

    // Haagerup
    let h = real((13.0 + 3.0 * s13) / 78.0);
    push(Haagerup, lens(7, 1), h, "(13+3*sqrt(13))/78");
    push(Haagerup, lens(7, 2), h, "(13+3*sqrt(13))/78");
    push(Haagerup, brieskorn(2, 3, 5), real(-s13 / 26.0 + 7.0 / 6.0), "-sqrt(13)/26+7/6");

    // D5^(1); w is the primitive cube root exp(2πi/3).
    let w2 = Complex64::from_polar(1.0, 4.0 * std::f64::consts::PI / 3.0);
    let d5_l31 = (1.0 + 2.0 * w2) / 6.0;
    push(D5, lens(3, 1), d5_l31, "(1+2w^2)/6, w=exp(2pi i/3)");
    push(D5, lens(3, 2), d5_l31.conj(), "conj((1+2w^2)/6)");
    for m in [lens(5, 1), lens(5, 2), lens(7, 1), lens(7, 2)] {
        push(D5, m, real(1.0 / 6.0), "1/6");
    }

    // E6: lens spaces from the closed forms, Brieskorn values as exact expressions.
    for p in 1..=12 {
        push(E6, lens(p, 1), e6_lens_reference(p, 1).expect("q=1"), "E6 L(p,1) closed form");
    }
    for p in (1..=11).step_by(2) {
        push(E6, lens(p, 2), e6_lens_reference(p, 2).expect("odd p"), "E6 L(p,2) closed form");
    }
    let e6_235 = c(6.0 + 2.0 * s3, 3.0 - 3.0 * s3) / 12.0;
    push(E6, brieskorn(2, 3, 5), e6_235, "((6+2sqrt3)+(3-3sqrt3)i)/12");
    push(E6, brieskorn(2, 3, 7), e6_235, "((6+2sqrt3)+(3-3sqrt3)i)/12");
    push(E6, brieskorn(2, 5, 7), c(9.0 - s3, 6.0) / 12.0, "(-sqrt3+9+6i)/12");
    push(E6, brieskorn(3, 5, 7), c(2.0, -s3) / 2.0, "(2-sqrt3 i)/2");

    // Generalized E6 with G = Z/3
    let z3_l3 = c(7.0, -s7) / 14.0;
    push(E6Z3, lens(3, 1), z3_l3, "(7-sqrt7 i)/14");
    push(E6Z3, lens(3, 2), z3_l3.conj(), "conj((7-sqrt7 i)/14)");
    push(E6Z3, lens(5, 1), real((7.0 - s21) / 42.0), "(7-sqrt21)/42");
    push(E6Z3, lens(5, 2), real((7.0 - s21) / 42.0), "(7-sqrt21)/42");
    push(E6Z3, lens(7, 1), c(1.0, s3) / 6.0, "(1+sqrt3 i)/6");
    push(E6Z3, lens(7, 2), c(1.0, s3) / 6.0, "(1+sqrt3 i)/6");

    // Generalized E6 with G = Z/4 and G = Z/2 x Z/2 share their values.
    for src in [E6Z4, E6Z2xZ2] {
        for p in [3, 5] {
            for q in [1, 2] {
                push(src, lens(p, q), real((2.0 + s2) / 16.0), "(2+sqrt2)/16");
            }
        }
        for q in [1, 2] {
            push(src, lens(7, q), real((2.0 - s2) / 16.0), "(2-sqrt2)/16");
        }
    }

    // Generalized E6 with G = Z/5
    push(E6Z5, lens(3, 1), real((1.0 - s5) / 10.0), "(1-sqrt5)/10");
    push(E6Z5, lens(3, 2), real((1.0 - s5) / 10.0), "(1-sqrt5)/10");
    push(E6Z5, lens(5, 1), real(1.0 / 3.0), "1/3");
    push(E6Z5, lens(5, 2), real(2.0 / 3.0), "2/3");
    push(E6Z5, lens(7, 1), real((3.0 + s5) / 30.0), "(3+sqrt5)/30");
    push(E6Z5, lens(7, 2), real((3.0 + s5) / 30.0), "(3+sqrt5)/30");

    out
}

pub fn fixtures_for(source: FixtureSource) -> Vec<GoldenFixture> {
    golden_fixtures().into_iter().filter(|f| f.source == source).collect()
}

/// Plain-text export: `source manifold re im  # expression`.
pub fn fixtures_table() -> String {
    let mut out = String::from("# source manifold re im  # closed form\n");
    for f in golden_fixtures() {
        out.push_str(&format!(
            "{} {} {:.15e} {:.15e}  # {}\n",
            f.source, f.manifold, f.expected.re, f.expected.im, f.expression
        ));
    }
    out
}
