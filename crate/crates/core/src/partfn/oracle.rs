//! Exhaustive reference for `L_α`: walks every nondecreasing sequence of
//! root indices whose total height fits in `h(α)` and tallies the ones that
//! sum to `α` by length. Shares nothing with the memoized engine beyond the
//! root list itself.

use num_bigint::BigInt;

use super::QPolynomial;
use crate::error::{Error, Result};
use crate::rootdata::{OddRootSystem, WeightVector};

pub const DEFAULT_ORACLE_BOUND: i64 = 12;

pub fn l_oracle(alpha: &WeightVector, system: &OddRootSystem, bound: i64) -> Result<QPolynomial> {
    if alpha.rank() != system.rank() {
        return Err(Error::RankMismatch {
            left: alpha.rank(),
            right: system.rank(),
        });
    }
    let target = alpha.coords()?;
    let budget = system.height().eval(alpha)?;
    if budget < 0 {
        return Ok(QPolynomial::zero());
    }
    if budget > bound {
        return Err(Error::OracleBudget {
            height: budget,
            bound,
        });
    }
    let roots: Vec<(Vec<i64>, i64)> = system
        .roots()
        .iter()
        .map(|r| Ok((r.coords()?, system.height().eval(r)?)))
        .collect::<Result<_>>()?;

    let mut counts = vec![0u64; budget as usize + 1];
    let mut sum = vec![0i64; target.len()];
    walk(&roots, 0, budget, 0, &mut sum, &target, &mut counts);
    Ok(QPolynomial::from_coeffs(counts.into_iter().map(BigInt::from).collect()))
}

fn walk(
    roots: &[(Vec<i64>, i64)],
    start: usize,
    budget: i64,
    len: usize,
    sum: &mut [i64],
    target: &[i64],
    counts: &mut [u64],
) {
    if sum == target {
        counts[len] += 1;
    }
    for (idx, (root, h)) in roots.iter().enumerate().skip(start) {
        if *h > budget {
            continue;
        }
        for (s, x) in sum.iter_mut().zip(root) {
            *s += x;
        }
        walk(roots, idx, budget - h, len + 1, sum, target, counts);
        for (s, x) in sum.iter_mut().zip(root) {
            *s -= x;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::odd_positive_roots;

    #[test]
    fn rank_one() {
        let sys = odd_positive_roots(1).unwrap();
        let w = |d, e| WeightVector::new(&[d], &[e]).unwrap();
        assert_eq!(l_oracle(&w(0, 0), &sys, 12).unwrap(), QPolynomial::one());
        assert_eq!(l_oracle(&w(1, 1), &sys, 12).unwrap(), QPolynomial::from_i64s(&[0, 1, 0, 1]));
        assert_eq!(l_oracle(&w(2, 0), &sys, 12).unwrap(), QPolynomial::monomial(2, 1));
        assert!(l_oracle(&w(-1, 0), &sys, 12).unwrap().is_zero());
    }

    #[test]
    fn budget_guard() {
        let sys = odd_positive_roots(1).unwrap();
        let big = WeightVector::new(&[13], &[0]).unwrap();
        assert_eq!(
            l_oracle(&big, &sys, 12),
            Err(Error::OracleBudget { height: 13, bound: 12 })
        );
    }
}
