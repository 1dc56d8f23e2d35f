use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of the weight space spanned by `δ₁..δₙ` (symplectic side) and
/// `ε₁..εₙ` (orthogonal side).
///
/// Coordinates are stored doubled, so half-integral weights such as `ρ₀`
/// are represented exactly. A weight is integral iff every stored value is
/// even.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Deserialize)]
#[serde(try_from = "WeightJson")]
pub struct WeightVector {
    delta2: Vec<i64>,
    eps2: Vec<i64>,
}

impl WeightVector {
    pub fn zero(n: usize) -> Result<Self> {
        check_rank(n)?;
        Ok(Self {
            delta2: vec![0; n],
            eps2: vec![0; n],
        })
    }

    /// Builds an integral weight from plain integer coordinates.
    pub fn new(delta: &[i64], eps: &[i64]) -> Result<Self> {
        Self::from_doubled(
            delta.iter().map(|x| 2 * x).collect(),
            eps.iter().map(|x| 2 * x).collect(),
        )
    }

    pub fn from_doubled(delta2: Vec<i64>, eps2: Vec<i64>) -> Result<Self> {
        check_rank(delta2.len())?;
        if delta2.len() != eps2.len() {
            return Err(Error::LengthMismatch {
                expected: delta2.len(),
                got: eps2.len(),
            });
        }
        Ok(Self { delta2, eps2 })
    }

    /// `δᵢ` with a 1-based index.
    pub fn delta_unit(n: usize, i: usize) -> Result<Self> {
        let mut w = Self::zero(n)?;
        w.delta2[unit_index(n, i)?] = 2;
        Ok(w)
    }

    /// `εᵢ` with a 1-based index.
    pub fn eps_unit(n: usize, i: usize) -> Result<Self> {
        let mut w = Self::zero(n)?;
        w.eps2[unit_index(n, i)?] = 2;
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.delta2.len()
    }

    pub fn delta_doubled(&self) -> &[i64] {
        &self.delta2
    }

    pub fn eps_doubled(&self) -> &[i64] {
        &self.eps2
    }

    pub fn is_integral(&self) -> bool {
        self.delta2.iter().chain(&self.eps2).all(|x| x % 2 == 0)
    }

    pub fn is_zero(&self) -> bool {
        self.delta2.iter().chain(&self.eps2).all(|&x| x == 0)
    }

    pub fn delta(&self) -> Result<Vec<i64>> {
        halve(&self.delta2).ok_or_else(|| Error::NonIntegral(self.to_string()))
    }

    pub fn eps(&self) -> Result<Vec<i64>> {
        halve(&self.eps2).ok_or_else(|| Error::NonIntegral(self.to_string()))
    }

    /// Integer coordinates, δ-block first then ε-block.
    pub fn coords(&self) -> Result<Vec<i64>> {
        let mut out = self.delta()?;
        out.extend(self.eps()?);
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self {
            delta2: self.delta2.iter().map(|x| k * x).collect(),
            eps2: self.eps2.iter().map(|x| k * x).collect(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        same_rank(self, other)?;
        Ok(zip_with(self, other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        same_rank(self, other)?;
        Ok(zip_with(self, other, |a, b| a - b))
    }
}

fn check_rank(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidRank(0))
    } else {
        Ok(())
    }
}

fn unit_index(n: usize, i: usize) -> Result<usize> {
    if i == 0 || i > n {
        return Err(Error::InvalidWeight(format!("basis index {i} out of range 1..={n}")));
    }
    Ok(i - 1)
}

fn halve(v: &[i64]) -> Option<Vec<i64>> {
    v.iter().map(|&x| (x % 2 == 0).then_some(x / 2)).collect()
}

pub(crate) fn same_rank(a: &WeightVector, b: &WeightVector) -> Result<()> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch {
            left: a.rank(),
            right: b.rank(),
        });
    }
    Ok(())
}

fn zip_with(a: &WeightVector, b: &WeightVector, f: impl Fn(i64, i64) -> i64) -> WeightVector {
    WeightVector {
        delta2: a.delta2.iter().zip(&b.delta2).map(|(&x, &y)| f(x, y)).collect(),
        eps2: a.eps2.iter().zip(&b.eps2).map(|(&x, &y)| f(x, y)).collect(),
    }
}

// Operator impls panic on rank mismatch; use `checked_add`/`checked_sub`
// on unvalidated input.
impl Add for &WeightVector {
    type Output = WeightVector;
    fn add(self, rhs: Self) -> WeightVector {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch in weight addition");
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl Sub for &WeightVector {
    type Output = WeightVector;
    fn sub(self, rhs: Self) -> WeightVector {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch in weight subtraction");
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl Neg for &WeightVector {
    type Output = WeightVector;
    fn neg(self) -> WeightVector {
        self.scale(-1)
    }
}

const SUBSCRIPTS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];

fn subscript(i: usize) -> String {
    i.to_string()
        .chars()
        .map(|c| SUBSCRIPTS[c.to_digit(10).unwrap() as usize])
        .collect()
}

impl fmt::Display for WeightVector {
    /// Terms are interleaved by index (`ε₁, δ₁, ε₂, δ₂, …`), so odd roots
    /// print the way they are usually written, e.g. `δ₁−ε₂`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in 0..self.rank() {
            for (c2, sym) in [(self.eps2[i], 'ε'), (self.delta2[i], 'δ')] {
                if c2 == 0 {
                    continue;
                }
                let sign = if c2 < 0 { "−" } else if first { "" } else { "+" };
                let mag = c2.unsigned_abs();
                let coeff = match (mag % 2, mag / 2) {
                    (0, 1) => String::new(),
                    (0, k) => k.to_string(),
                    (_, 0) => "½".to_string(),
                    (_, _) => format!("{mag}/2"),
                };
                write!(f, "{sign}{coeff}{sym}{}", subscript(i + 1))?;
                first = false;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// External JSON form of an integral weight.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WeightJson {
    pub n: usize,
    pub delta: Vec<i64>,
    pub eps: Vec<i64>,
}

impl TryFrom<WeightJson> for WeightVector {
    type Error = Error;
    fn try_from(j: WeightJson) -> Result<Self> {
        check_rank(j.n)?;
        for part in [&j.delta, &j.eps] {
            if part.len() != j.n {
                return Err(Error::LengthMismatch {
                    expected: j.n,
                    got: part.len(),
                });
            }
        }
        WeightVector::new(&j.delta, &j.eps)
    }
}

impl TryFrom<&WeightVector> for WeightJson {
    type Error = Error;
    fn try_from(w: &WeightVector) -> Result<Self> {
        match (w.delta(), w.eps()) {
            (Ok(delta), Ok(eps)) => Ok(WeightJson { n: w.rank(), delta, eps }),
            _ => Err(Error::NonIntegral(w.to_string())),
        }
    }
}

/// Half-integral weights have no external form and fail to serialize.
impl Serialize for WeightVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WeightJson::try_from(self)
            .map_err(serde::ser::Error::custom)?
            .serialize(s)
    }
}

impl WeightVector {
    /// JSON encoding; fails on half-integral weights.
    pub fn to_json(&self) -> Result<serde_json::Value> {
        let j = WeightJson::try_from(self)?;
        serde_json::to_value(j).map_err(|e| Error::Internal(e.to_string()))
    }
}

/// A pair `(λ₁, λ₀)` of dominant weights: `λ₁` for `Sp(2n)` on the δ-side,
/// `λ₀` for `SO(2n+1)` on the ε-side. Both are partitions of length `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantWeightPair {
    lam1: Vec<i64>,
    lam0: Vec<i64>,
}

impl DominantWeightPair {
    pub fn new(lam1: &[i64], lam0: &[i64]) -> Result<Self> {
        check_rank(lam1.len())?;
        if lam1.len() != lam0.len() {
            return Err(Error::RankMismatch {
                left: lam1.len(),
                right: lam0.len(),
            });
        }
        for (name, part) in [("lam1", lam1), ("lam0", lam0)] {
            if !is_partition(part) {
                return Err(Error::InvalidWeight(format!(
                    "{name} = {part:?} is not a weakly decreasing sequence of nonnegative integers"
                )));
            }
        }
        Ok(Self {
            lam1: lam1.to_vec(),
            lam0: lam0.to_vec(),
        })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(&vec![0; n], &vec![0; n])
    }

    pub fn rank(&self) -> usize {
        self.lam1.len()
    }

    pub fn lam1(&self) -> &[i64] {
        &self.lam1
    }

    pub fn lam0(&self) -> &[i64] {
        &self.lam0
    }

    /// The weight `λ₁ + λ₀` in the ambient space.
    pub fn weight(&self) -> WeightVector {
        WeightVector::new(&self.lam1, &self.lam0).expect("validated at construction")
    }
}

pub(crate) fn is_partition(p: &[i64]) -> bool {
    p.iter().all(|&x| x >= 0) && p.windows(2).all(|w| w[0] >= w[1])
}

impl fmt::Display for DominantWeightPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "(({}),({}))", join(&self.lam1), join(&self.lam0))
    }
}
