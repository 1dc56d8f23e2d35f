//! The `q`-graded vector partition function `L_α(q)` over the odd positive
//! roots: the coefficient of `q^d` counts size-`d` multisets of roots
//! summing to `α`.
//!
//! The roots have entries of both signs, so a plain componentwise DP is not
//! well founded. Every root has height at least 1 under the ladder
//! functional, which bounds the number of parts by `h(α)` and makes a
//! depth-first search over `(root index, remaining weight)` terminate.

mod oracle;
mod poly;

pub use oracle::{l_oracle, DEFAULT_ORACLE_BOUND};
pub use poly::{LaurentPolynomial, QPolynomial};

use dashmap::DashMap;

use crate::error::{Error, Result};
use crate::rootdata::{odd_positive_roots, DominantWeightPair, OddRootSystem, WeightVector};

pub const DEFAULT_CACHE_CAP: usize = 1 << 21;

type MemoKey = (usize, Box<[i64]>);

/// Per-suffix feasibility data: which signs each coordinate can still
/// receive from roots `i..`.
#[derive(Clone, Debug)]
struct SuffixSupport {
    can_pos: Vec<bool>,
    can_neg: Vec<bool>,
}

/// Evaluates `L_α` for a fixed rank, caching subproblems across calls.
///
/// The caches are keyed by `(root index, remaining weight)`, which does not
/// depend on the starting weight, so one engine can be shared by every term
/// of a Kostka sum and across threads. Inserts are idempotent; a lost race
/// only recomputes the same value.
pub struct PartitionEngine {
    system: OddRootSystem,
    vecs: Vec<Vec<i64>>,
    heights: Vec<i64>,
    suffix: Vec<SuffixSupport>,
    memo: DashMap<MemoKey, QPolynomial>,
    reach: DashMap<MemoKey, bool>,
    cache_cap: usize,
}

impl PartitionEngine {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_system(odd_positive_roots(n)?, DEFAULT_CACHE_CAP)
    }

    pub fn with_system(system: OddRootSystem, cache_cap: usize) -> Result<Self> {
        let vecs = system
            .roots()
            .iter()
            .map(WeightVector::coords)
            .collect::<Result<Vec<_>>>()?;
        let heights = vecs.iter().map(|v| system.height().eval_coords(v)).collect();
        let dim = 2 * system.rank();
        let mut suffix = vec![
            SuffixSupport {
                can_pos: vec![false; dim],
                can_neg: vec![false; dim],
            };
            vecs.len() + 1
        ];
        for i in (0..vecs.len()).rev() {
            let mut s = suffix[i + 1].clone();
            for (c, &x) in vecs[i].iter().enumerate() {
                s.can_pos[c] |= x > 0;
                s.can_neg[c] |= x < 0;
            }
            suffix[i] = s;
        }
        Ok(Self {
            system,
            vecs,
            heights,
            suffix,
            memo: DashMap::new(),
            reach: DashMap::new(),
            cache_cap,
        })
    }

    pub fn system(&self) -> &OddRootSystem {
        &self.system
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn cache_len(&self) -> usize {
        self.memo.len() + self.reach.len()
    }

    fn integral_coords(&self, alpha: &WeightVector) -> Result<Vec<i64>> {
        if alpha.rank() != self.rank() {
            return Err(Error::RankMismatch {
                left: alpha.rank(),
                right: self.rank(),
            });
        }
        alpha.coords()
    }

    /// `L_α(q)`.
    pub fn l_poly(&self, alpha: &WeightVector) -> Result<QPolynomial> {
        let mut rem = self.integral_coords(alpha)?;
        Ok(self.l_poly_coords(&mut rem))
    }

    /// `L_α(q)` on integer coordinates (δ-block then ε-block). The buffer is
    /// restored before returning.
    pub(crate) fn l_poly_coords(&self, rem: &mut [i64]) -> QPolynomial {
        let h = self.system.height().eval_coords(rem);
        if h < 0 {
            return QPolynomial::zero();
        }
        self.count(0, rem, h)
    }

    fn feasible(&self, i: usize, rem: &[i64]) -> bool {
        let s = &self.suffix[i];
        rem.iter()
            .enumerate()
            .all(|(c, &x)| x == 0 || (x > 0 && s.can_pos[c]) || (x < 0 && s.can_neg[c]))
    }

    fn count(&self, i: usize, rem: &mut [i64], h: i64) -> QPolynomial {
        if h == 0 {
            // every root has positive height, so nothing more can be added
            return if rem.iter().all(|&x| x == 0) {
                QPolynomial::one()
            } else {
                QPolynomial::zero()
            };
        }
        if i == self.vecs.len() || !self.feasible(i, rem) {
            return QPolynomial::zero();
        }
        let key: MemoKey = (i, rem.to_vec().into_boxed_slice());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }

        let root = &self.vecs[i];
        let step = self.heights[i];
        let mut out = QPolynomial::zero();
        let mut k = 0usize;
        let mut budget = h;
        loop {
            let sub = self.count(i + 1, rem, budget);
            out.add_shifted(&sub, k, 1);
            if budget < step {
                break;
            }
            sub_assign(rem, root, 1);
            budget -= step;
            k += 1;
        }
        sub_assign(rem, root, -(k as i64));

        if self.memo.len() < self.cache_cap {
            self.memo.insert(key, out.clone());
        }
        out
    }

    /// Whether `α ∈ ℕ⟨R¯₁⁺⟩` (the zero weight included).
    pub fn is_representable(&self, alpha: &WeightVector) -> Result<bool> {
        let mut rem = self.integral_coords(alpha)?;
        let h = self.system.height().eval_coords(&rem);
        Ok(h >= 0 && self.reachable(0, &mut rem, h))
    }

    fn reachable(&self, i: usize, rem: &mut [i64], h: i64) -> bool {
        if rem.iter().all(|&x| x == 0) {
            return true;
        }
        if h <= 0 || i == self.vecs.len() || !self.feasible(i, rem) {
            return false;
        }
        let key: MemoKey = (i, rem.to_vec().into_boxed_slice());
        if let Some(hit) = self.reach.get(&key) {
            return *hit;
        }
        let root = &self.vecs[i];
        let step = self.heights[i];
        let mut budget = h;
        let mut k = 0i64;
        let found = loop {
            if self.reachable(i + 1, rem, budget) {
                break true;
            }
            if budget < step {
                break false;
            }
            sub_assign(rem, root, 1);
            budget -= step;
            k += 1;
        };
        sub_assign(rem, root, -k);
        if self.reach.len() < self.cache_cap {
            self.reach.insert(key, found);
        }
        found
    }

    /// `(λ₁,λ₀) ≥ (μ₁,μ₀)`: the difference is a nonnegative integer
    /// combination of odd positive roots.
    pub fn dominance_ge(&self, a: &DominantWeightPair, b: &DominantWeightPair) -> Result<bool> {
        let diff = a.weight().checked_sub(&b.weight())?;
        self.is_representable(&diff)
    }
}

fn sub_assign(rem: &mut [i64], root: &[i64], times: i64) {
    for (r, x) in rem.iter_mut().zip(root) {
        *r -= times * x;
    }
}

/// `L_α(q)` with a fresh engine for `α`'s rank.
pub fn l_poly(alpha: &WeightVector, system: &OddRootSystem) -> Result<QPolynomial> {
    if alpha.rank() != system.rank() {
        return Err(Error::RankMismatch {
            left: alpha.rank(),
            right: system.rank(),
        });
    }
    PartitionEngine::with_system(system.clone(), DEFAULT_CACHE_CAP)?.l_poly(alpha)
}
