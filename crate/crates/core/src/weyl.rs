//! Hyperoctahedral groups `W(sp(2n)) ≅ W(so(2n+1)) ≅ (ℤ/2)ⁿ ⋊ Sₙ` acting on
//! one coordinate block by permutations and sign changes.

use std::fmt;
use std::ops::Neg;

use crate::error::{Error, Result};

/// Default cap on the rank accepted by [`enumerate`].
pub const DEFAULT_ENUMERATION_LIMIT: usize = 8;

/// A signed permutation acting by `(w·v)_{perm(i)} = signs(i)·vᵢ`.
/// Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    negated: Vec<bool>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, signs: &[i8]) -> Result<Self> {
        let n = perm.len();
        if n == 0 {
            return Err(Error::InvalidRank(0));
        }
        if signs.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: signs.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidPermutation(format!("{perm:?} is not a bijection")));
            }
        }
        let negated = signs
            .iter()
            .map(|&s| match s {
                1 => Ok(false),
                -1 => Ok(true),
                _ => Err(Error::InvalidPermutation(format!("sign {s} is not ±1"))),
            })
            .collect::<Result<_>>()?;
        Ok(Self { perm, negated })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            perm: (0..n).collect(),
            negated: vec![false; n],
        }
    }

    /// Swap of coordinates `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut w = Self::identity(n);
        w.perm.swap(i, j);
        w
    }

    /// Sign change of coordinate `i`.
    pub fn flip(n: usize, i: usize) -> Self {
        let mut w = Self::identity(n);
        w.negated[i] = true;
        w
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> Vec<i8> {
        self.negated.iter().map(|&b| if b { -1 } else { 1 }).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && !self.negated.iter().any(|&b| b)
    }

    pub fn act<T: Copy + Neg<Output = T>>(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.rank() {
            return Err(Error::LengthMismatch {
                expected: self.rank(),
                got: v.len(),
            });
        }
        let mut out = v.to_vec();
        for (i, &x) in v.iter().enumerate() {
            out[self.perm[i]] = if self.negated[i] { -x } else { x };
        }
        Ok(out)
    }

    /// `self ∘ other`, i.e. act by `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        let perm = other.perm.iter().map(|&p| self.perm[p]).collect();
        let negated = (0..self.rank())
            .map(|i| other.negated[i] ^ self.negated[other.perm[i]])
            .collect();
        Ok(Self { perm, negated })
    }

    pub fn inverse(&self) -> Self {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut negated = vec![false; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            negated[self.perm[i]] = self.negated[i];
        }
        Self { perm, negated }
    }

    /// `(−1)^{ℓ(w)}`: the determinant of the signed permutation matrix.
    pub fn sign(&self) -> i8 {
        let n = self.rank();
        let mut visited = vec![false; n];
        let mut parity = self.negated.iter().filter(|&&b| b).count();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                i = self.perm[i];
                len += 1;
            }
            parity += len - 1;
        }
        if parity % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rank() {
            if i > 0 {
                write!(f, " ")?;
            }
            let s = if self.negated[i] { "-" } else { "" };
            write!(f, "{}↦{s}{}", i + 1, self.perm[i] + 1)?;
        }
        write!(f, "]")
    }
}

/// `2ⁿ·n!`, or `None` on overflow.
pub fn group_order(n: usize) -> Option<u128> {
    (1..=n as u128).try_fold(1u128 << n.min(127), |acc, k| acc.checked_mul(k))
}

/// Streams every element of the rank-`n` hyperoctahedral group exactly once:
/// permutations in lexicographic order, and for each, sign patterns as an
/// `n`-bit counter (bit `i` set = coordinate `i` negated).
pub fn enumerate(n: usize, limit: usize) -> Result<WeylIter> {
    if n == 0 {
        return Err(Error::InvalidRank(0));
    }
    if n > limit {
        return Err(Error::RankOverLimit { n, limit });
    }
    Ok(WeylIter {
        perm: Some((0..n).collect()),
        mask: 0,
        n,
    })
}

/// Element `index` of the sequence produced by [`enumerate`], for splitting
/// the stream into deterministic chunks.
pub fn unrank(n: usize, index: u128) -> Result<SignedPermutation> {
    if n == 0 {
        return Err(Error::InvalidRank(0));
    }
    let order = group_order(n).ok_or(Error::RankOverLimit { n, limit: n - 1 })?;
    if index >= order {
        return Err(Error::InvalidPermutation(format!("index {index} out of range for rank {n}")));
    }
    let mask = index % (1u128 << n);
    let mut code = index >> n;
    let mut pool: Vec<usize> = (0..n).collect();
    let mut fact: u128 = (1..n as u128).product();
    let mut perm = Vec::with_capacity(n);
    for k in (1..=n).rev() {
        let pos = (code / fact) as usize;
        code %= fact;
        perm.push(pool.remove(pos));
        if k > 1 {
            fact /= (k - 1) as u128;
        }
    }
    Ok(SignedPermutation {
        perm,
        negated: (0..n).map(|i| mask >> i & 1 == 1).collect(),
    })
}

pub struct WeylIter {
    perm: Option<Vec<usize>>,
    mask: u64,
    n: usize,
}

impl Iterator for WeylIter {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        let perm = self.perm.as_mut()?;
        let item = SignedPermutation {
            perm: perm.clone(),
            negated: (0..self.n).map(|i| self.mask >> i & 1 == 1).collect(),
        };
        self.mask += 1;
        if self.mask == 1 << self.n {
            self.mask = 0;
            if !next_permutation(perm) {
                self.perm = None;
            }
        }
        Some(item)
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    fn all(n: usize) -> Vec<SignedPermutation> {
        enumerate(n, DEFAULT_ENUMERATION_LIMIT).unwrap().collect()
    }

    #[test]
    fn group_sizes() {
        for (n, size) in [(1, 2), (2, 8), (3, 48), (4, 384)] {
            let elems = all(n);
            assert_eq!(elems.len(), size);
            assert_eq!(group_order(n), Some(size as u128));
            assert_eq!(elems.iter().collect::<HashSet<_>>().len(), size);
        }
    }

    #[test]
    fn enumeration_guards() {
        assert!(matches!(enumerate(0, 8), Err(Error::InvalidRank(0))));
        assert!(matches!(enumerate(9, 8), Err(Error::RankOverLimit { n: 9, limit: 8 })));
    }

    #[test]
    fn unrank_matches_stream() {
        for n in 1..=4 {
            for (k, w) in all(n).into_iter().enumerate() {
                assert_eq!(unrank(n, k as u128).unwrap(), w);
            }
            assert!(unrank(n, group_order(n).unwrap()).is_err());
        }
    }

    #[test]
    fn action_examples() {
        let id = SignedPermutation::identity(2);
        assert_eq!(id.act(&[3, 1]).unwrap(), vec![3, 1]);
        let flip = SignedPermutation::flip(2, 0);
        assert_eq!(flip.act(&[3, 1]).unwrap(), vec![-3, 1]);
        let swap = SignedPermutation::transposition(2, 0, 1);
        let both = flip.compose(&swap).unwrap();
        assert_eq!(flip.act(&swap.act(&[3, 1]).unwrap()).unwrap(), vec![-1, 3]);
        assert_eq!(both.act(&[3, 1]).unwrap(), vec![-1, 3]);
        assert!(id.act(&[1, 2, 3]).is_err());
    }

    #[test]
    fn sign_examples() {
        assert_eq!(SignedPermutation::identity(3).sign(), 1);
        assert_eq!(SignedPermutation::flip(3, 1).sign(), -1);
        assert_eq!(SignedPermutation::transposition(3, 0, 2).sign(), -1);
    }

    #[test]
    fn composition_law_and_homomorphism() {
        let v = [5i64, -2, 7];
        let elems = all(3);
        for a in &elems {
            for b in &elems {
                let ab = a.compose(b).unwrap();
                assert_eq!(ab.act(&v).unwrap(), a.act(&b.act(&v).unwrap()).unwrap());
                assert_eq!(ab.sign(), a.sign() * b.sign());
            }
            assert!(a.compose(&a.inverse()).unwrap().is_identity());
        }
    }

    #[test]
    fn sign_is_determinant() {
        for w in all(3) {
            let mut m = [[0i64; 3]; 3];
            for (i, s) in w.signs().iter().enumerate() {
                m[w.perm()[i]][i] = *s as i64;
            }
            let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
            assert_eq!(det, w.sign() as i64);
        }
    }

    #[test]
    fn signs_cancel_and_abs_preserved() {
        for n in 1..=4 {
            let elems = all(n);
            assert_eq!(elems.iter().map(|w| w.sign() as i64).sum::<i64>(), 0);
            let v: Vec<i64> = (1..=n as i64).map(|k| 3 * k - 7).collect();
            let mut abs: Vec<i64> = v.iter().map(|x| x.abs()).collect();
            abs.sort();
            for w in &elems {
                let mut got: Vec<i64> = w.act(&v).unwrap().iter().map(|x| x.abs()).collect();
                got.sort();
                assert_eq!(got, abs);
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(SignedPermutation::new(vec![0, 0], &[1, 1]).is_err());
        assert!(SignedPermutation::new(vec![1, 0], &[1, 2]).is_err());
        assert!(SignedPermutation::new(vec![1, 0], &[1]).is_err());
        assert!(SignedPermutation::new(vec![], &[]).is_err());
        assert!(SignedPermutation::new(vec![1, 0], &[-1, 1]).is_ok());
    }
}
