//! Finite-type Cartan matrices and positive-root generation.
//!
//! Positive roots are produced in simple-root coordinates by the usual
//! root-string construction, processed height by height: `β + αᵢ` is a root
//! iff `p − ⟨β, αᵢ^∨⟩ > 0`, where `p` is the length of the `αᵢ`-string
//! below `β`.

use std::collections::HashSet;

use crate::error::{Error, Result};

/// `entries[i][j] = ⟨αᵢ^∨, αⱼ⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let r = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != r {
                return Err(Error::LengthMismatch {
                    expected: r,
                    got: row.len(),
                });
            }
            for (j, &a) in row.iter().enumerate() {
                let ok = if i == j {
                    a == 2
                } else {
                    a <= 0 && (a == 0) == (entries[j][i] == 0)
                };
                if !ok {
                    return Err(Error::InvalidWeight(format!(
                        "not a Cartan matrix: entry ({i},{j}) = {a}"
                    )));
                }
            }
        }
        Ok(Self { entries })
    }

    /// Cartan matrix of the given simple roots under the Euclidean form.
    pub fn from_simple_roots(roots: &[Vec<i64>]) -> Result<Self> {
        let dot = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>();
        let mut entries = vec![vec![0; roots.len()]; roots.len()];
        for (i, ai) in roots.iter().enumerate() {
            let norm = dot(ai, ai);
            if norm == 0 {
                return Err(Error::InvalidWeight("zero simple root".into()));
            }
            for (j, aj) in roots.iter().enumerate() {
                let num = 2 * dot(ai, aj);
                if num % norm != 0 {
                    return Err(Error::InvalidWeight(format!(
                        "non-integral Cartan entry at ({i},{j})"
                    )));
                }
                entries[i][j] = num / norm;
            }
        }
        Self::new(entries)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// The sub-diagram on the given simple roots (e.g. a Levi subalgebra).
    pub fn restrict(&self, indices: &[usize]) -> Self {
        Self {
            entries: indices
                .iter()
                .map(|&i| indices.iter().map(|&j| self.entries[i][j]).collect())
                .collect(),
        }
    }

    /// Positive roots in simple-root coordinates, ordered by height.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        let r = self.rank();
        let unit = |i: usize| {
            let mut v = vec![0; r];
            v[i] = 1;
            v
        };
        let mut all: Vec<Vec<i64>> = (0..r).map(unit).collect();
        let mut seen: HashSet<Vec<i64>> = all.iter().cloned().collect();
        let mut layer = all.clone();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for beta in &layer {
                for i in 0..r {
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if seen.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i64 = (0..r).map(|j| beta[j] * self.entries[i][j]).sum();
                    if p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if seen.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            all.extend(next.iter().cloned());
            layer = next;
        }
        all
    }

    pub fn positive_root_count(&self) -> usize {
        self.positive_roots().len()
    }
}

/// `A_n`, simple roots `eᵢ − eᵢ₊₁` in `ℤⁿ⁺¹`.
pub fn type_a(n: usize) -> Result<CartanMatrix> {
    nonzero(n)?;
    let roots: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n + 1];
            v[i] = 1;
            v[i + 1] = -1;
            v
        })
        .collect();
    CartanMatrix::from_simple_roots(&roots)
}

/// `B_n = so(2n+1)`, simple roots `εᵢ − εᵢ₊₁` and `εₙ`.
pub fn type_b(n: usize) -> Result<CartanMatrix> {
    nonzero(n)?;
    CartanMatrix::from_simple_roots(&chain_with_last(n, 1))
}

/// `C_n = sp(2n)`, simple roots `δᵢ − δᵢ₊₁` and `2δₙ`.
pub fn type_c(n: usize) -> Result<CartanMatrix> {
    nonzero(n)?;
    CartanMatrix::from_simple_roots(&chain_with_last(n, 2))
}

/// `G₂` in the plane `x₁+x₂+x₃ = 0`: short `e₁ − e₂`, long `−2e₁ + e₂ + e₃`.
pub fn type_g2() -> CartanMatrix {
    CartanMatrix::from_simple_roots(&[vec![1, -1, 0], vec![-2, 1, 1]])
        .expect("G2 simple roots are well formed")
}

fn chain_with_last(n: usize, last: i64) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            if i + 1 < n {
                v[i] = 1;
                v[i + 1] = -1;
            } else {
                v[i] = last;
            }
            v
        })
        .collect()
}

fn nonzero(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidRank(0))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_counts() {
        for n in 1..=6 {
            assert_eq!(type_a(n).unwrap().positive_root_count(), n * (n + 1) / 2);
            assert_eq!(type_b(n).unwrap().positive_root_count(), n * n);
            assert_eq!(type_c(n).unwrap().positive_root_count(), n * n);
        }
    }

    #[test]
    fn g2() {
        let g = type_g2();
        assert_eq!(g.entry(0, 1), -3);
        assert_eq!(g.entry(1, 0), -1);
        let roots = g.positive_roots();
        assert_eq!(roots.len(), 6);
        assert!(roots.contains(&vec![3, 2]));
    }

    #[test]
    fn b3_cartan_and_levi() {
        let b3 = type_b(3).unwrap();
        assert_eq!(b3.entry(1, 2), -1);
        assert_eq!(b3.entry(2, 1), -2);
        assert_eq!(b3.restrict(&[1]).positive_root_count(), 1);
        assert_eq!(b3.restrict(&[0, 1]).positive_root_count(), 3);
    }

    #[test]
    fn rejects_non_cartan() {
        assert!(CartanMatrix::new(vec![vec![2, 1], vec![1, 2]]).is_err());
        assert!(CartanMatrix::new(vec![vec![2, -1], vec![0, 2]]).is_err());
        assert!(type_b(0).is_err());
    }
}
