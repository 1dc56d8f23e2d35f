//! Exact integer polynomials in `q` and Laurent polynomials in `q⁻¹`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

/// `Σ coeffs[d]·q^d` with arbitrary-precision coefficients. Trailing zeros
/// are always trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QPolynomial {
    #[serde(serialize_with = "ser_coeffs", deserialize_with = "de_coeffs")]
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(degree: usize, c: i64) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = BigInt::from(c);
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `p(1)`.
    pub fn coeff_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// `self += sign · q^shift · other`.
    pub fn add_shifted(&mut self, other: &Self, shift: usize, sign: i8) {
        if other.is_zero() {
            return;
        }
        let need = other.coeffs.len() + shift;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, BigInt::zero());
        }
        for (d, c) in other.coeffs.iter().enumerate() {
            if sign < 0 {
                self.coeffs[d + shift] -= c;
            } else {
                self.coeffs[d + shift] += c;
            }
        }
        trim(&mut self.coeffs);
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }
}

impl std::ops::Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: Self) -> QPolynomial {
        let mut out = self.clone();
        out.add_shifted(rhs, 0, 1);
        out
    }
}

impl std::ops::Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: Self) -> QPolynomial {
        let mut out = self.clone();
        out.add_shifted(rhs, 0, -1);
        out
    }
}

fn trim(coeffs: &mut Vec<BigInt>) {
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
}

/// `Σ coeffs[i]·q^(offset+i)`. Normalized so that the first and last stored
/// coefficients are nonzero; the zero polynomial has offset 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentPolynomial {
    offset: i64,
    #[serde(serialize_with = "ser_coeffs", deserialize_with = "de_coeffs")]
    coeffs: Vec<BigInt>,
}

impl LaurentPolynomial {
    pub fn new(offset: i64, mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::default();
        }
        coeffs.drain(..lead);
        Self {
            offset: offset + lead as i64,
            coeffs,
        }
    }

    /// `q^shift · p(q⁻¹)`.
    pub fn from_inverted(p: &QPolynomial, shift: i64) -> Self {
        match p.degree() {
            None => Self::default(),
            Some(deg) => {
                let coeffs = p.coeffs().iter().rev().cloned().collect();
                Self::new(shift - deg as i64, coeffs)
            }
        }
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `q^exp`.
    pub fn coeff(&self, exp: i64) -> BigInt {
        usize::try_from(exp - self.offset)
            .ok()
            .and_then(|i| self.coeffs.get(i).cloned())
            .unwrap_or_default()
    }

    /// `(exponent, coefficient)` pairs with nonzero coefficient, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.offset + i as i64, c))
    }
}

fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (i64, &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (exp, c) in terms {
        let sep = match (first, c.is_negative()) {
            (true, false) => "",
            (true, true) => "-",
            (false, false) => " + ",
            (false, true) => " - ",
        };
        let mag = c.abs();
        let coeff = if mag.is_one() && exp != 0 { String::new() } else { mag.to_string() };
        let var = match exp {
            0 => String::new(),
            1 => "q".into(),
            e => format!("q^{e}"),
        };
        write!(f, "{sep}{coeff}{var}")?;
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(d, c)| (d as i64, c)),
        )
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms())
    }
}

// Coefficients that fit in i64 are plain JSON numbers; larger ones are
// decimal strings so no precision is lost.
fn ser_coeffs<S: Serializer>(coeffs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(coeffs.len()))?;
    for c in coeffs {
        match c.to_i64() {
            Some(x) => seq.serialize_element(&x)?,
            None => seq.serialize_element(&c.to_string())?,
        }
    }
    seq.end()
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Int(i64),
    Big(u64),
    Str(String),
}

fn de_coeffs<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
    let raw = Vec::<CoeffRepr>::deserialize(d)?;
    raw.into_iter()
        .map(|c| match c {
            CoeffRepr::Int(x) => Ok(BigInt::from(x)),
            CoeffRepr::Big(x) => Ok(BigInt::from(x)),
            CoeffRepr::Str(s) => s
                .parse::<BigInt>()
                .map_err(|_| de::Error::custom(format!("invalid integer coefficient {s:?}"))),
        })
        .collect()
}

impl QPolynomial {
    /// Deserialization does not see the trim invariant; re-establish it.
    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        let p: Self = serde_json::from_str(s)?;
        Ok(Self::from_coeffs(p.coeffs))
    }
}

impl LaurentPolynomial {
    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        let p: Self = serde_json::from_str(s)?;
        Ok(Self::new(p.offset, p.coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_zero() {
        assert!(QPolynomial::from_i64s(&[0, 0, 0]).is_zero());
        assert_eq!(QPolynomial::from_i64s(&[0, 0]), QPolynomial::zero());
        assert_eq!(QPolynomial::zero().degree(), None);
        assert_eq!(serde_json::to_string(&QPolynomial::zero()).unwrap(), r#"{"coeffs":[]}"#);
    }

    #[test]
    fn arithmetic() {
        let a = QPolynomial::from_i64s(&[1, 1]);
        let b = QPolynomial::from_i64s(&[1, -1]);
        assert_eq!(a.mul(&b), QPolynomial::from_i64s(&[1, 0, -1]));
        assert_eq!(&a - &a, QPolynomial::zero());
        let mut c = QPolynomial::one();
        c.add_shifted(&a, 2, -1);
        assert_eq!(c, QPolynomial::from_i64s(&[1, 0, -1, -1]));
        assert_eq!(c.to_string(), "1 - q^2 - q^3");
        assert_eq!(QPolynomial::from_i64s(&[0, 1, 0, 1]).to_string(), "q + q^3");
        assert_eq!(QPolynomial::from_i64s(&[-2]).to_string(), "-2");
    }

    #[test]
    fn json_big_coefficients() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let p = QPolynomial::from_coeffs(vec![BigInt::from(0), big.clone()]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"coeffs":[0,"123456789012345678901234567890"]}"#);
        assert_eq!(QPolynomial::from_json(&s).unwrap(), p);
        assert_eq!(
            QPolynomial::from_json(r#"{"coeffs":[1,0,0]}"#).unwrap(),
            QPolynomial::one()
        );
        assert!(QPolynomial::from_json(r#"{"coeffs":["x"]}"#).is_err());
    }

    #[test]
    fn laurent_inversion() {
        let q = QPolynomial::monomial(1, 1);
        let l = LaurentPolynomial::from_inverted(&q, 0);
        assert_eq!((l.offset(), l.coeffs().len()), (-1, 1));
        assert_eq!(l.to_string(), "q^-1");
        let one = LaurentPolynomial::from_inverted(&QPolynomial::one(), -5);
        assert_eq!(one.offset(), -5);
        assert_eq!(one.coeff(-5), BigInt::from(1));
        let p = QPolynomial::from_i64s(&[0, 2, 0, 1]);
        let l = LaurentPolynomial::from_inverted(&p, -1);
        // q^-1 (2q^-1 + q^-3) = q^-4 + 2q^-2
        assert_eq!(l.to_string(), "q^-4 + 2q^-2");
        assert!(LaurentPolynomial::from_inverted(&QPolynomial::zero(), -3).is_zero());
        let s = serde_json::to_string(&l).unwrap();
        assert_eq!(s, r#"{"offset":-4,"coeffs":[1,0,2]}"#);
        assert_eq!(LaurentPolynomial::from_json(&s).unwrap(), l);
    }

    #[test]
    fn laurent_normalizes() {
        let l = LaurentPolynomial::new(-3, vec![0.into(), 0.into(), 4.into(), 0.into()]);
        assert_eq!((l.offset(), l.coeffs().len()), (-1, 1));
        assert_eq!(LaurentPolynomial::new(7, vec![0.into()]), LaurentPolynomial::default());
    }
}
