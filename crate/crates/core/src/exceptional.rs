//! Borel data and Hesselink-resolution dimension counts for the exceptional
//! Lie superalgebras `f(4)` and `g(3)`.
//!
//! `f(4)`: even part `so(7) ⊕ sl(2)`, odd part `spin₇ ⊗ 2` with weights
//! `½(±δ ± ε₁ ± ε₂ ± ε₃)`. Coordinates are `(δ, ε₁, ε₂, ε₃)`.
//!
//! `g(3)`: even part `G₂ ⊕ sl(2)`, odd part `7 ⊗ 2` with weights `±δ` and
//! `±δ ± εᵢ`, where `ε₁ + ε₂ + ε₃ = 0`. Coordinates are `(δ, ε₁, ε₂)` and
//! `ε₃` is stored as `−ε₁ − ε₂`.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootdata::cartan::{self, CartanMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CaseName {
    F4,
    G3,
}

impl FromStr for CaseName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['(', ')'], "").as_str() {
            "f4" => Ok(CaseName::F4),
            "g3" => Ok(CaseName::G3),
            _ => Err(Error::UnknownCase(s.to_string())),
        }
    }
}

impl fmt::Display for CaseName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseName::F4 => "F4",
            CaseName::G3 => "G3",
        })
    }
}

/// A weight stored with doubled coordinates in the case's basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ExceptionalWeight {
    pub doubled: Vec<i64>,
}

impl ExceptionalWeight {
    fn half(coords: &[i64]) -> Self {
        Self {
            doubled: coords.to_vec(),
        }
    }

    fn whole(coords: &[i64]) -> Self {
        Self {
            doubled: coords.iter().map(|x| 2 * x).collect(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.doubled.iter().all(|x| x % 2 == 0)
    }
}

/// A reductive factor of the even part, with the simple roots spanning the
/// Levi of the parabolic used in the resolution.
#[derive(Clone, Debug)]
pub struct EvenFactor {
    pub name: &'static str,
    pub cartan: CartanMatrix,
    pub levi: Vec<usize>,
}

impl EvenFactor {
    /// `dim G/P = |R⁺(G)| − |R⁺(L)|`.
    pub fn flag_dim(&self) -> usize {
        self.cartan.positive_root_count() - self.cartan.restrict(&self.levi).positive_root_count()
    }
}

#[derive(Clone, Debug)]
pub struct ExceptionalCase {
    pub name: CaseName,
    pub basis: Vec<&'static str>,
    pub even_factors: Vec<EvenFactor>,
    pub borel_simple_roots: Vec<ExceptionalWeight>,
    /// Weights of the subspace of the odd nilradical the resolution is
    /// built from.
    pub odd_fiber_weights: Vec<ExceptionalWeight>,
}

pub fn case_data(name: CaseName) -> ExceptionalCase {
    match name {
        CaseName::F4 => f4(),
        CaseName::G3 => g3(),
    }
}

fn f4() -> ExceptionalCase {
    let h = ExceptionalWeight::half;
    // Spin(7) simple roots α₁ = ε₁−ε₂, α₂ = ε₂−ε₃, α₃ = ε₃; the parabolic P'
    // keeps the long middle root α₂.
    let spin7 = EvenFactor {
        name: "Spin(7)",
        cartan: cartan::type_b(3).expect("rank 3"),
        levi: vec![1],
    };
    let sl2 = EvenFactor {
        name: "SL(2)",
        cartan: cartan::type_a(1).expect("rank 1"),
        levi: vec![],
    };
    ExceptionalCase {
        name: CaseName::F4,
        basis: vec!["δ", "ε₁", "ε₂", "ε₃"],
        even_factors: vec![spin7, sl2],
        borel_simple_roots: vec![
            h(&[1, 1, -1, -1]),
            h(&[1, -1, 1, 1]),
            h(&[-1, 1, -1, 1]),
            ExceptionalWeight::whole(&[0, 0, 1, -1]),
        ],
        odd_fiber_weights: vec![
            h(&[1, 1, -1, -1]),
            h(&[1, -1, 1, 1]),
            h(&[1, 1, -1, 1]),
            h(&[1, 1, 1, -1]),
            h(&[1, 1, 1, 1]),
            h(&[-1, 1, 1, 1]),
        ],
    }
}

fn g3() -> ExceptionalCase {
    let w = ExceptionalWeight::whole;
    // G₂ simple roots: index 0 short, index 1 long. The parabolic P' contains
    // the negative short simple root space.
    let g2 = EvenFactor {
        name: "G2",
        cartan: cartan::type_g2(),
        levi: vec![0],
    };
    let sl2 = EvenFactor {
        name: "SL(2)",
        cartan: cartan::type_a(1).expect("rank 1"),
        levi: vec![],
    };
    let borel_simple_roots = vec![w(&[1, 0, 0]), w(&[-1, 1, 0]), w(&[0, -1, 1])];
    // The whole odd nilradical is used: the positive weights of 7 ⊗ 2.
    let odd_fiber_weights = positive_subset(&g3_odd_weights(), &borel_simple_roots);
    ExceptionalCase {
        name: CaseName::G3,
        basis: vec!["δ", "ε₁", "ε₂"],
        even_factors: vec![g2, sl2],
        borel_simple_roots,
        odd_fiber_weights,
    }
}

/// All 14 weights of `7 ⊗ 2` for `g(3)`: `±δ` and `±δ ± εᵢ`.
pub fn g3_odd_weights() -> Vec<ExceptionalWeight> {
    let eps = [[1, 0], [0, 1], [-1, -1]];
    let mut out = Vec::new();
    for d in [1, -1] {
        out.push(ExceptionalWeight::whole(&[d, 0, 0]));
        for e in eps {
            for s in [1, -1] {
                out.push(ExceptionalWeight::whole(&[d, s * e[0], s * e[1]]));
            }
        }
    }
    out
}

/// All 16 weights `½(±δ ± ε₁ ± ε₂ ± ε₃)` of `spin₇ ⊗ 2` for `f(4)`.
pub fn f4_odd_weights() -> Vec<ExceptionalWeight> {
    (0..16u32)
        .map(|mask| {
            let c: Vec<i64> = (0..4).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            ExceptionalWeight::half(&c)
        })
        .collect()
}

/// Weights that are nonnegative integer combinations of the simple roots.
pub fn positive_subset(weights: &[ExceptionalWeight], simple: &[ExceptionalWeight]) -> Vec<ExceptionalWeight> {
    weights
        .iter()
        .filter(|w| {
            simple_root_coefficients(simple, w).is_some_and(|c| {
                c.iter().all(|x| x.is_integer() && !x.is_negative())
            })
        })
        .cloned()
        .collect()
}

/// Coefficients of `target` in the span of `simple`, if it lies there.
pub fn simple_root_coefficients(
    simple: &[ExceptionalWeight],
    target: &ExceptionalWeight,
) -> Option<Vec<Ratio<i64>>> {
    let rows = target.doubled.len();
    let cols = simple.len();
    // augmented matrix, one row per coordinate
    let mut m: Vec<Vec<Ratio<i64>>> = (0..rows)
        .map(|r| {
            simple
                .iter()
                .map(|s| Ratio::from_integer(s.doubled[r]))
                .chain(std::iter::once(Ratio::from_integer(target.doubled[r])))
                .collect()
        })
        .collect();
    let pivots = row_reduce(&mut m, cols);
    if m.iter().skip(pivots.len()).any(|row| !row[cols].is_zero()) {
        return None;
    }
    if pivots.len() < cols {
        // not independent; the representation is not unique
        return None;
    }
    let mut out = vec![Ratio::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        out[c] = m[r][cols];
    }
    Some(out)
}

/// Rank of a list of weights.
pub fn weight_rank(weights: &[ExceptionalWeight]) -> usize {
    let Some(first) = weights.first() else {
        return 0;
    };
    let mut m: Vec<Vec<Ratio<i64>>> = (0..first.doubled.len())
        .map(|r| weights.iter().map(|w| Ratio::from_integer(w.doubled[r])).collect())
        .collect();
    row_reduce(&mut m, weights.len()).len()
}

/// Gauss-Jordan on the first `cols` columns; returns pivot columns.
fn row_reduce(m: &mut [Vec<Ratio<i64>>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let lead = m[row][col];
        for x in m[row].iter_mut() {
            *x /= lead;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in 0..m[r].len() {
                    let sub = f * m[row][c];
                    m[r][c] -= sub;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Dimension of the resolution `Ñ₁ → N₁`: the base flag variety (one
/// factor per even simple factor) plus the fiber.
pub fn hesselink_dim_of(case: &ExceptionalCase) -> usize {
    case.even_factors.iter().map(EvenFactor::flag_dim).sum::<usize>() + case.odd_fiber_weights.len()
}

pub fn hesselink_dim(name: CaseName) -> usize {
    hesselink_dim_of(&case_data(name))
}

impl fmt::Display for ExceptionalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // G3 uses the first three symbols.
        let basis = ["δ", "ε₁", "ε₂", "ε₃"];
        let halves = !self.is_integral();
        let mut body = String::new();
        for (c, sym) in self.doubled.iter().zip(basis) {
            let k = if halves { *c } else { c / 2 };
            if k == 0 {
                continue;
            }
            let sign = if k < 0 { "−" } else if body.is_empty() { "" } else { "+" };
            let mag = if k.abs() == 1 { String::new() } else { k.abs().to_string() };
            body.push_str(&format!("{sign}{mag}{sym}"));
        }
        match (halves, body.is_empty()) {
            (_, true) => f.write_str("0"),
            (true, false) => write!(f, "½({body})"),
            (false, false) => f.write_str(&body),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        assert_eq!("F4".parse::<CaseName>().unwrap(), CaseName::F4);
        assert_eq!("g(3)".parse::<CaseName>().unwrap(), CaseName::G3);
        assert!(matches!("E8".parse::<CaseName>(), Err(Error::UnknownCase(_))));
    }

    #[test]
    fn f4_data() {
        let c = case_data(CaseName::F4);
        assert_eq!(c.borel_simple_roots.len(), 4);
        assert_eq!(c.odd_fiber_weights.len(), 6);
        assert_eq!(c.borel_simple_roots[0].to_string(), "½(δ+ε₁−ε₂−ε₃)");
        assert_eq!(c.borel_simple_roots[3].to_string(), "ε₂−ε₃");
        assert!(c.odd_fiber_weights.contains(&ExceptionalWeight::half(&[-1, 1, 1, 1])));
        assert_eq!(weight_rank(&c.borel_simple_roots), 4);
    }

    #[test]
    fn f4_fiber_is_inside_the_odd_nilradical() {
        let c = case_data(CaseName::F4);
        let positive = positive_subset(&f4_odd_weights(), &c.borel_simple_roots);
        assert_eq!(positive.len(), 8);
        for w in &c.odd_fiber_weights {
            assert!(positive.contains(w), "{w}");
        }
    }

    #[test]
    fn g3_data() {
        let c = case_data(CaseName::G3);
        let shown: Vec<String> = c.borel_simple_roots.iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, ["δ", "−δ+ε₁", "−ε₁+ε₂"]);
        assert_eq!(g3_odd_weights().len(), 14);
        assert_eq!(c.odd_fiber_weights.len(), 7);
        assert_eq!(weight_rank(&c.borel_simple_roots), 3);
        // δ+ε₃ = δ−ε₁−ε₂ is negative for this Borel, its opposite is positive
        assert!(!c.odd_fiber_weights.contains(&ExceptionalWeight::whole(&[1, -1, -1])));
        assert!(c.odd_fiber_weights.contains(&ExceptionalWeight::whole(&[-1, 1, 1])));
    }

    #[test]
    fn flag_dimensions() {
        let f = case_data(CaseName::F4);
        assert_eq!(f.even_factors[0].cartan.positive_root_count(), 9);
        assert_eq!(f.even_factors[0].flag_dim(), 8);
        assert_eq!(f.even_factors[1].flag_dim(), 1);
        let g = case_data(CaseName::G3);
        assert_eq!(g.even_factors[0].cartan.positive_root_count(), 6);
        assert_eq!(g.even_factors[0].flag_dim(), 5);
    }

    #[test]
    fn dimensions() {
        assert_eq!(hesselink_dim(CaseName::F4), 15);
        assert_eq!(hesselink_dim(CaseName::G3), 13);
    }

    #[test]
    fn dimension_tracks_fiber_length() {
        let mut c = case_data(CaseName::F4);
        c.odd_fiber_weights.pop();
        assert_eq!(hesselink_dim_of(&c), 14);
        let mut g = case_data(CaseName::G3);
        g.odd_fiber_weights.push(ExceptionalWeight::whole(&[1, 0, 0]));
        assert_eq!(hesselink_dim_of(&g), 14);
    }
}
