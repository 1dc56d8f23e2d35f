//! Super Kostka polynomials for `osp(2n+1|2n)` as an alternating sum of
//! partition functions over `W × W₀`:
//!
//! ```text
//! K_{(λ₁,λ₀),(μ₁,μ₀)}(q) = Σ_{w,w₀} (−1)^{w₀}(−1)^w L_{(w(λ₁+ρ)−ρ−μ₁, w₀(λ₀+ρ₀)−ρ₀−μ₀)}(q)
//! ```
//!
//! and the IC-stalk Poincaré polynomial `q^{−dim 𝕆_μ} K(q⁻¹)`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partfn::{LaurentPolynomial, PartitionEngine, QPolynomial};
use crate::rootdata::{rho, rho0, DominantWeightPair, WeightVector};
use crate::weyl::{self, SignedPermutation};

pub const DEFAULT_MAX_RANK: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KostkaOptions {
    /// Worker threads for the Weyl-pair reduction; 1 runs inline.
    pub jobs: usize,
    pub max_rank: usize,
}

impl Default for KostkaOptions {
    fn default() -> Self {
        Self {
            jobs: 1,
            max_rank: DEFAULT_MAX_RANK,
        }
    }
}

/// One surviving term of the Weyl-pair sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylTerm {
    pub w: SignedPermutation,
    pub w0: SignedPermutation,
    pub sign: i8,
    pub argument: WeightVector,
    pub value: QPolynomial,
}

#[derive(Clone, Debug)]
struct SideTerm {
    index: usize,
    sign: i8,
    coords: Vec<i64>,
    height: i64,
}

/// Holds the partition engine and the enumerated Weyl group for one rank.
pub struct KostkaCalculator {
    engine: PartitionEngine,
    group: Vec<SignedPermutation>,
    rho: Vec<i64>,
    rho0_doubled: Vec<i64>,
    pool: Option<rayon::ThreadPool>,
}

impl KostkaCalculator {
    pub fn new(n: usize, opts: KostkaOptions) -> Result<Self> {
        let group: Vec<_> = weyl::enumerate(n, opts.max_rank)?.collect();
        let pool = if opts.jobs > 1 {
            Some(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(opts.jobs)
                    .build()
                    .map_err(|e| Error::Internal(e.to_string()))?,
            )
        } else {
            None
        };
        Ok(Self {
            engine: PartitionEngine::new(n)?,
            group,
            rho: rho(n)?.delta()?,
            rho0_doubled: rho0(n)?.eps_doubled().to_vec(),
            pool,
        })
    }

    pub fn rank(&self) -> usize {
        self.engine.rank()
    }

    pub fn engine(&self) -> &PartitionEngine {
        &self.engine
    }

    fn check(&self, lam: &DominantWeightPair, mu: &DominantWeightPair) -> Result<()> {
        for r in [lam.rank(), mu.rank()] {
            if r != self.rank() {
                return Err(Error::RankMismatch {
                    left: r,
                    right: self.rank(),
                });
            }
        }
        Ok(())
    }

    /// `w(λ₁+ρ)−ρ−μ₁` for every `w`, δ-side.
    fn delta_terms(&self, lam: &DominantWeightPair, mu: &DominantWeightPair) -> Result<Vec<SideTerm>> {
        let h = &self.engine.system().height().delta;
        let shifted: Vec<i64> = lam.lam1().iter().zip(&self.rho).map(|(a, b)| a + b).collect();
        self.group
            .iter()
            .enumerate()
            .map(|(index, w)| {
                let coords: Vec<i64> = w
                    .act(&shifted)?
                    .iter()
                    .zip(&self.rho)
                    .zip(mu.lam1())
                    .map(|((x, r), m)| x - r - m)
                    .collect();
                let height = dot(h, &coords);
                Ok(SideTerm {
                    index,
                    sign: w.sign(),
                    coords,
                    height,
                })
            })
            .collect()
    }

    /// `w₀(λ₀+ρ₀)−ρ₀−μ₀` for every `w₀`, ε-side, computed doubled and then
    /// halved. A half-integral result means the conventions are wrong.
    fn eps_terms(&self, lam: &DominantWeightPair, mu: &DominantWeightPair) -> Result<Vec<SideTerm>> {
        let h = &self.engine.system().height().eps;
        let shifted: Vec<i64> = lam
            .lam0()
            .iter()
            .zip(&self.rho0_doubled)
            .map(|(a, r)| 2 * a + r)
            .collect();
        self.group
            .iter()
            .enumerate()
            .map(|(index, w0)| {
                let doubled: Vec<i64> = w0
                    .act(&shifted)?
                    .iter()
                    .zip(&self.rho0_doubled)
                    .zip(mu.lam0())
                    .map(|((x, r), m)| x - r - 2 * m)
                    .collect();
                if doubled.iter().any(|x| x % 2 != 0) {
                    return Err(Error::Internal(format!(
                        "non-integral partition-function argument {doubled:?}/2 for w₀ = {w0}"
                    )));
                }
                let coords: Vec<i64> = doubled.iter().map(|x| x / 2).collect();
                let height = dot(h, &coords);
                Ok(SideTerm {
                    index,
                    sign: w0.sign(),
                    coords,
                    height,
                })
            })
            .collect()
    }

    /// Sum over `w₀` for a fixed `w`. `eps` is sorted by descending height so
    /// the scan stops at the first pair with negative total height.
    fn row_sum(&self, d: &SideTerm, eps: &[SideTerm]) -> QPolynomial {
        let n = self.rank();
        let mut buf = vec![0i64; 2 * n];
        buf[..n].copy_from_slice(&d.coords);
        let mut acc = QPolynomial::zero();
        for e in eps {
            if d.height + e.height < 0 {
                break;
            }
            buf[n..].copy_from_slice(&e.coords);
            let value = self.engine.l_poly_coords(&mut buf);
            acc.add_shifted(&value, 0, d.sign * e.sign);
        }
        acc
    }

    pub fn kostka(&self, lam: &DominantWeightPair, mu: &DominantWeightPair) -> Result<QPolynomial> {
        self.check(lam, mu)?;
        let delta = self.delta_terms(lam, mu)?;
        let mut eps = self.eps_terms(lam, mu)?;
        eps.sort_by(|a, b| b.height.cmp(&a.height).then(a.index.cmp(&b.index)));

        let sum = |acc: QPolynomial, p: QPolynomial| &acc + &p;
        Ok(match &self.pool {
            None => delta
                .iter()
                .map(|d| self.row_sum(d, &eps))
                .fold(QPolynomial::zero(), sum),
            Some(pool) => pool.install(|| {
                delta
                    .par_iter()
                    .map(|d| self.row_sum(d, &eps))
                    .reduce(QPolynomial::zero, sum)
            }),
        })
    }

    /// Every Weyl pair whose argument has nonnegative height, with its
    /// signed contribution. Terms outside this list are zero.
    pub fn expansion(&self, lam: &DominantWeightPair, mu: &DominantWeightPair) -> Result<Vec<WeylTerm>> {
        self.check(lam, mu)?;
        let delta = self.delta_terms(lam, mu)?;
        let eps = self.eps_terms(lam, mu)?;
        let mut out = Vec::new();
        for d in &delta {
            for e in &eps {
                if d.height + e.height < 0 {
                    continue;
                }
                let argument = WeightVector::new(&d.coords, &e.coords)?;
                let value = self.engine.l_poly(&argument)?;
                out.push(WeylTerm {
                    w: self.group[d.index].clone(),
                    w0: self.group[e.index].clone(),
                    sign: d.sign * e.sign,
                    argument,
                    value,
                });
            }
        }
        Ok(out)
    }

    /// `q^{−dim} · K(q⁻¹)`: the Poincaré polynomial of the IC-stalks of
    /// `IC_λ` along the orbit of `μ`, whose dimension the caller supplies.
    pub fn stalk(&self, lam: &DominantWeightPair, mu: &DominantWeightPair, dim_mu: i64) -> Result<LaurentPolynomial> {
        if dim_mu < 0 {
            return Err(Error::NegativeDimension(dim_mu));
        }
        Ok(LaurentPolynomial::from_inverted(&self.kostka(lam, mu)?, -dim_mu))
    }

    /// Closure relation of relevant orbits: `𝕆_μ ⊂ closure(𝕆_λ)` iff `λ ≥ μ`.
    pub fn support_check(&self, lam: &DominantWeightPair, mu: &DominantWeightPair) -> Result<bool> {
        self.check(lam, mu)?;
        self.engine.dominance_ge(lam, mu)
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn rank_of(lam: &DominantWeightPair, mu: &DominantWeightPair) -> Result<usize> {
    if lam.rank() != mu.rank() {
        return Err(Error::RankMismatch {
            left: lam.rank(),
            right: mu.rank(),
        });
    }
    Ok(lam.rank())
}

pub fn kostka_poly(lam: &DominantWeightPair, mu: &DominantWeightPair) -> Result<QPolynomial> {
    KostkaCalculator::new(rank_of(lam, mu)?, KostkaOptions::default())?.kostka(lam, mu)
}

pub fn stalk_poincare(lam: &DominantWeightPair, mu: &DominantWeightPair, dim_mu: i64) -> Result<LaurentPolynomial> {
    if dim_mu < 0 {
        return Err(Error::NegativeDimension(dim_mu));
    }
    KostkaCalculator::new(rank_of(lam, mu)?, KostkaOptions::default())?.stalk(lam, mu, dim_mu)
}

pub fn support_check(lam: &DominantWeightPair, mu: &DominantWeightPair) -> Result<bool> {
    crate::rootdata::dominance_ge(lam, mu)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: &[i64], b: &[i64]) -> DominantWeightPair {
        DominantWeightPair::new(a, b).unwrap()
    }

    #[test]
    fn rank_one_examples() {
        assert_eq!(kostka_poly(&p(&[1], &[0]), &p(&[1], &[0])).unwrap(), QPolynomial::one());
        assert_eq!(kostka_poly(&p(&[1], &[0]), &p(&[0], &[0])).unwrap(), QPolynomial::monomial(1, 1));
        assert_eq!(kostka_poly(&p(&[0], &[1]), &p(&[0], &[0])).unwrap(), QPolynomial::monomial(2, 1));
    }

    #[test]
    fn identity_is_the_only_surviving_diagonal_term() {
        let calc = KostkaCalculator::new(2, KostkaOptions::default()).unwrap();
        let lam = p(&[2, 1], &[1, 0]);
        let terms = calc.expansion(&lam, &lam).unwrap();
        let nonzero: Vec<_> = terms.iter().filter(|t| !t.value.is_zero()).collect();
        assert_eq!(nonzero.len(), 1);
        assert!(nonzero[0].w.is_identity() && nonzero[0].w0.is_identity());
        assert!(nonzero[0].argument.is_zero());
    }

    #[test]
    fn stalk_examples() {
        let lam = p(&[1], &[0]);
        let zero = p(&[0], &[0]);
        let s = stalk_poincare(&lam, &lam, 4).unwrap();
        assert_eq!(s, LaurentPolynomial::new(-4, vec![1.into()]));
        let s = stalk_poincare(&lam, &zero, 0).unwrap();
        assert_eq!(s, LaurentPolynomial::new(-1, vec![1.into()]));
        assert!(stalk_poincare(&zero, &lam, 3).unwrap().is_zero());
        assert_eq!(stalk_poincare(&lam, &zero, -1), Err(Error::NegativeDimension(-1)));
    }

    #[test]
    fn support_examples() {
        let zero = p(&[0], &[0]);
        let one = p(&[1], &[0]);
        assert!(support_check(&one, &one).unwrap());
        assert!(support_check(&one, &zero).unwrap());
        assert!(!support_check(&zero, &one).unwrap());
    }

    #[test]
    fn limits_and_mismatch() {
        let opts = KostkaOptions { jobs: 1, max_rank: 2 };
        assert!(matches!(
            KostkaCalculator::new(3, opts),
            Err(Error::RankOverLimit { n: 3, limit: 2 })
        ));
        assert!(matches!(
            kostka_poly(&p(&[0], &[0]), &p(&[0, 0], &[0, 0])),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn parallel_matches_sequential() {
        let seq = KostkaCalculator::new(2, KostkaOptions::default()).unwrap();
        let par = KostkaCalculator::new(2, KostkaOptions { jobs: 4, max_rank: 4 }).unwrap();
        let lam = p(&[2, 1], &[2, 0]);
        for mu in [p(&[0, 0], &[0, 0]), p(&[1, 0], &[1, 0]), p(&[1, 1], &[0, 0])] {
            assert_eq!(seq.kostka(&lam, &mu).unwrap(), par.kostka(&lam, &mu).unwrap());
        }
    }
}
