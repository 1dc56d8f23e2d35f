//! Root and weight data for `so(2n+1)`, `sp(2n)` and the odd part of
//! `osp(2n+1|2n)` with respect to the mixed Borel subalgebra.

pub mod cartan;
mod weight;

pub use weight::{DominantWeightPair, WeightJson, WeightVector};
pub(crate) use weight::is_partition as weight_is_partition;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partfn::PartitionEngine;

/// A linear functional on the weight space, stored by its values on the
/// basis vectors `δᵢ` and `εᵢ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeightFunctional {
    pub delta: Vec<i64>,
    pub eps: Vec<i64>,
}

impl HeightFunctional {
    /// `h(εᵢ) = 2(n−i)+2`, `h(δᵢ) = 2(n−i)+1`: one interleaved, strictly
    /// decreasing ladder `ε₁ > δ₁ > ε₂ > … > δₙ = 1`.
    pub fn ladder(n: usize) -> Self {
        Self {
            delta: (1..=n).map(|i| 2 * (n - i) as i64 + 1).collect(),
            eps: (1..=n).map(|i| 2 * (n - i) as i64 + 2).collect(),
        }
    }

    /// `2·h(w)`, exact for half-integral weights.
    pub fn eval_doubled(&self, w: &WeightVector) -> i64 {
        dot(&self.delta, w.delta_doubled()) + dot(&self.eps, w.eps_doubled())
    }

    /// `h(w)` on integer coordinates laid out δ-block first.
    pub fn eval_coords(&self, coords: &[i64]) -> i64 {
        let n = self.delta.len();
        dot(&self.delta, &coords[..n]) + dot(&self.eps, &coords[n..])
    }

    pub fn eval(&self, w: &WeightVector) -> Result<i64> {
        let h2 = self.eval_doubled(w);
        if h2 % 2 != 0 {
            return Err(Error::NonIntegral(w.to_string()));
        }
        Ok(h2 / 2)
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// The odd positive roots `R¯₁⁺` in canonical order together with the
/// height functional that bounds partitions into them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddRootSystem {
    n: usize,
    roots: Vec<WeightVector>,
    height: HeightFunctional,
}

impl OddRootSystem {
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn roots(&self) -> &[WeightVector] {
        &self.roots
    }

    pub fn height(&self) -> &HeightFunctional {
        &self.height
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

/// `R¯₁⁺` for `osp(2n+1|2n)`, in the order
/// `{εᵢ+δⱼ}`, `{εᵢ−δⱼ}_{i≤j}`, `{δᵢ−εⱼ}_{i<j}`, `{δᵢ}`, lexicographic in
/// `(i, j)` within each block.
pub fn odd_positive_roots(n: usize) -> Result<OddRootSystem> {
    if n == 0 {
        return Err(Error::InvalidRank(0));
    }
    let d = |i| WeightVector::delta_unit(n, i);
    let e = |i| WeightVector::eps_unit(n, i);
    let mut roots = Vec::with_capacity(2 * n * n + n);
    for i in 1..=n {
        for j in 1..=n {
            roots.push(&e(i)? + &d(j)?);
        }
    }
    for i in 1..=n {
        for j in i..=n {
            roots.push(&e(i)? - &d(j)?);
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            roots.push(&d(i)? - &e(j)?);
        }
    }
    for i in 1..=n {
        roots.push(d(i)?);
    }

    let height = HeightFunctional::ladder(n);
    for r in &roots {
        if height.eval(r)? < 1 {
            return Err(Error::Internal(format!("height functional is not positive on {r}")));
        }
    }
    Ok(OddRootSystem { n, roots, height })
}

/// Positive roots of `sp(2n)` on the δ-side: `δᵢ±δⱼ (i<j)`, `2δᵢ`.
pub fn positive_roots_c(n: usize) -> Result<Vec<WeightVector>> {
    let d = |i| WeightVector::delta_unit(n, i);
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(&d(i)? - &d(j)?);
            out.push(&d(i)? + &d(j)?);
        }
        out.push(d(i)?.scale(2));
    }
    if out.is_empty() {
        return Err(Error::InvalidRank(n));
    }
    Ok(out)
}

/// Positive roots of `so(2n+1)` on the ε-side: `εᵢ±εⱼ (i<j)`, `εᵢ`.
pub fn positive_roots_b(n: usize) -> Result<Vec<WeightVector>> {
    let e = |i| WeightVector::eps_unit(n, i);
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(&e(i)? - &e(j)?);
            out.push(&e(i)? + &e(j)?);
        }
        out.push(e(i)?);
    }
    if out.is_empty() {
        return Err(Error::InvalidRank(n));
    }
    Ok(out)
}

/// Half-sum of the given roots. Exact, since weights are stored doubled.
fn half_sum(roots: &[WeightVector]) -> WeightVector {
    let n = roots[0].rank();
    let mut delta2 = vec![0; n];
    let mut eps2 = vec![0; n];
    for r in roots {
        for (acc, x) in delta2.iter_mut().zip(r.delta_doubled()) {
            *acc += x;
        }
        for (acc, x) in eps2.iter_mut().zip(r.eps_doubled()) {
            *acc += x;
        }
    }
    // 2·(½Σ) = Σ, and Σ is stored doubled, so halve once.
    WeightVector::from_doubled(
        delta2.into_iter().map(|x| x / 2).collect(),
        eps2.into_iter().map(|x| x / 2).collect(),
    )
    .expect("rank is positive")
}

/// `ρ` of `sp(2n)`: `(n, n−1, …, 1)` on the δ-side.
pub fn rho(n: usize) -> Result<WeightVector> {
    Ok(half_sum(&positive_roots_c(n)?))
}

/// `ρ₀` of `so(2n+1)`: `(n−½, …, ½)` on the ε-side.
pub fn rho0(n: usize) -> Result<WeightVector> {
    Ok(half_sum(&positive_roots_b(n)?))
}

/// `(λ₁,λ₀) ≥ (μ₁,μ₀)` iff the difference lies in `ℕ⟨R¯₁⁺⟩`.
///
/// Builds a throwaway search engine; callers comparing many pairs should
/// use [`PartitionEngine::dominance_ge`] to share its cache.
pub fn dominance_ge(a: &DominantWeightPair, b: &DominantWeightPair) -> Result<bool> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch {
            left: a.rank(),
            right: b.rank(),
        });
    }
    PartitionEngine::new(a.rank())?.dominance_ge(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(delta: &[i64], eps: &[i64]) -> WeightVector {
        WeightVector::new(delta, eps).unwrap()
    }

    #[test]
    fn rank_one_roots() {
        let sys = odd_positive_roots(1).unwrap();
        let shown: Vec<String> = sys.roots().iter().map(|r| r.to_string()).collect();
        assert_eq!(shown, ["ε₁+δ₁", "ε₁−δ₁", "δ₁"]);
    }

    #[test]
    fn root_counts() {
        for (n, count) in [(1, 3), (2, 10), (3, 21), (4, 36), (5, 55), (6, 78)] {
            let sys = odd_positive_roots(n).unwrap();
            assert_eq!(sys.len(), count);
            assert_eq!(count, 2 * n * n + n);
            // n² + n(n+1)/2 + n(n−1)/2 + n
            assert_eq!(count, n * n + n * (n + 1) / 2 + n * (n - 1) / 2 + n);
        }
        assert_eq!(odd_positive_roots(0), Err(Error::InvalidRank(0)));
    }

    #[test]
    fn rank_two_canonical_order() {
        let sys = odd_positive_roots(2).unwrap();
        let shown: Vec<String> = sys.roots().iter().map(|r| r.to_string()).collect();
        assert_eq!(
            shown,
            [
                "ε₁+δ₁", "ε₁+δ₂", "δ₁+ε₂", "ε₂+δ₂", "ε₁−δ₁", "ε₁−δ₂", "ε₂−δ₂", "δ₁−ε₂", "δ₁",
                "δ₂"
            ]
        );
    }

    #[test]
    fn heights_positive() {
        for n in 1..=6 {
            let sys = odd_positive_roots(n).unwrap();
            for r in sys.roots() {
                assert!(sys.height().eval(r).unwrap() >= 1, "{r}");
            }
        }
        assert_eq!(HeightFunctional::ladder(2).delta, vec![3, 1]);
        assert_eq!(HeightFunctional::ladder(2).eps, vec![4, 2]);
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho(1).unwrap(), w(&[1], &[0]));
        assert_eq!(rho0(1).unwrap(), WeightVector::from_doubled(vec![0], vec![1]).unwrap());
        assert_eq!(rho(2).unwrap(), w(&[2, 1], &[0, 0]));
        assert_eq!(rho0(2).unwrap(), WeightVector::from_doubled(vec![0, 0], vec![3, 1]).unwrap());
        for n in 1..=6 {
            let r = rho(n).unwrap();
            let expect: Vec<i64> = (1..=n as i64).rev().collect();
            assert_eq!(r.delta().unwrap(), expect);
            // doubled ρ pairs with δᵢ to 2(n−i+1)
            let doubled: Vec<i64> = expect.iter().map(|x| 2 * x).collect();
            assert_eq!(r.delta_doubled(), &doubled[..]);
            let r0 = rho0(n).unwrap();
            let expect0: Vec<i64> = (0..n as i64).map(|k| 2 * (n as i64 - k) - 1).collect();
            assert_eq!(r0.eps_doubled(), &expect0[..]);
            assert!(!r0.is_integral());
        }
        assert!(rho(0).is_err());
    }

    #[test]
    fn classical_lists_match_cartan_counts() {
        for n in 1..=5 {
            assert_eq!(positive_roots_c(n).unwrap().len(), cartan::type_c(n).unwrap().positive_root_count());
            assert_eq!(positive_roots_b(n).unwrap().len(), cartan::type_b(n).unwrap().positive_root_count());
        }
    }

    #[test]
    fn dominance_examples() {
        let p = |a: &[i64], b: &[i64]| DominantWeightPair::new(a, b).unwrap();
        assert!(dominance_ge(&p(&[1], &[0]), &p(&[1], &[0])).unwrap());
        assert!(dominance_ge(&p(&[1], &[0]), &p(&[0], &[0])).unwrap());
        assert!(dominance_ge(&p(&[0], &[1]), &p(&[0], &[0])).unwrap());
        assert!(!dominance_ge(&p(&[0], &[0]), &p(&[1], &[0])).unwrap());
        assert!(matches!(
            dominance_ge(&p(&[0], &[0]), &p(&[0, 0], &[0, 0])),
            Err(Error::RankMismatch { .. })
        ));
    }
}
