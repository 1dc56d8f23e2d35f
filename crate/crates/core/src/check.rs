//! Self-check suites behind `osp-kostka check`. Each suite is a list of
//! named identities evaluated at small scale.

use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exceptional::{self, CaseName};
use crate::kostka::{KostkaCalculator, KostkaOptions};
use crate::orbits;
use crate::partfn::{l_oracle, PartitionEngine, QPolynomial};
use crate::rootdata::{odd_positive_roots, rho, rho0, DominantWeightPair, WeightVector};
use crate::weyl;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Roots,
    Weyl,
    Partfn,
    Kostka,
    Orbits,
    Exceptional,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = ["all", "roots", "weyl", "partfn", "kostka", "orbits", "exceptional"];
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "roots" => Suite::Roots,
            "weyl" => Suite::Weyl,
            "partfn" => Suite::Partfn,
            "kostka" => Suite::Kostka,
            "orbits" => Suite::Orbits,
            "exceptional" => Suite::Exceptional,
            _ => return Err(Error::Parse(format!("unknown suite {s:?}"))),
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRow {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

struct Recorder {
    suite: &'static str,
    rows: Vec<CheckRow>,
}

impl Recorder {
    fn new(suite: &'static str) -> Self {
        Self { suite, rows: Vec::new() }
    }

    fn record(&mut self, name: impl Into<String>, outcome: Result<(bool, String)>) {
        let (passed, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
        self.rows.push(CheckRow {
            suite: self.suite,
            name: name.into(),
            passed,
            detail,
        });
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, name: impl Into<String>, got: Result<T>, want: T) {
        self.record(
            name,
            got.map(|g| (g == want, format!("got {g:?}, expected {want:?}"))),
        );
    }
}

pub fn run_suite(suite: Suite, oracle_bound: i64) -> Vec<CheckRow> {
    match suite {
        Suite::All => [Suite::Roots, Suite::Weyl, Suite::Partfn, Suite::Kostka, Suite::Orbits, Suite::Exceptional]
            .into_iter()
            .flat_map(|s| run_suite(s, oracle_bound))
            .collect(),
        Suite::Roots => roots(),
        Suite::Weyl => weyl_suite(),
        Suite::Partfn => partfn(oracle_bound),
        Suite::Kostka => kostka(),
        Suite::Orbits => orbits_suite(),
        Suite::Exceptional => exceptional_suite(),
    }
}

fn roots() -> Vec<CheckRow> {
    let mut r = Recorder::new("roots");
    for n in 1..=6 {
        r.eq(format!("|R1+| = 2n²+n at n={n}"), odd_positive_roots(n).map(|s| s.len()), 2 * n * n + n);
    }
    for n in 1..=4 {
        r.record(
            format!("h ≥ 1 on every odd root at n={n}"),
            odd_positive_roots(n).and_then(|s| {
                let min = s.roots().iter().map(|x| s.height().eval(x)).collect::<Result<Vec<_>>>()?;
                let m = min.into_iter().min().unwrap_or(0);
                Ok((m >= 1, format!("min height {m}")))
            }),
        );
        r.eq(
            format!("ρ = (n,…,1) at n={n}"),
            rho(n).and_then(|w| w.delta()),
            (1..=n as i64).rev().collect(),
        );
        r.eq(
            format!("2ρ₀ = (2n−1,…,1) at n={n}"),
            rho0(n).map(|w| w.eps_doubled().to_vec()),
            (0..n as i64).map(|k| 2 * (n as i64 - k) - 1).collect(),
        );
    }
    r.rows
}

fn weyl_suite() -> Vec<CheckRow> {
    let mut r = Recorder::new("weyl");
    for n in 1..=4 {
        r.eq(
            format!("|W| = 2ⁿn! at n={n}"),
            weyl::enumerate(n, weyl::DEFAULT_ENUMERATION_LIMIT).map(|it| it.count() as u128),
            weyl::group_order(n).unwrap_or(0),
        );
    }
    r.record(
        "sign is a homomorphism at n=3",
        weyl::enumerate(3, weyl::DEFAULT_ENUMERATION_LIMIT).and_then(|it| {
            let elems: Vec<_> = it.collect();
            for a in &elems {
                for b in &elems {
                    if a.compose(b)?.sign() != a.sign() * b.sign() {
                        return Ok((false, format!("fails at {a} ∘ {b}")));
                    }
                }
            }
            Ok((true, format!("{} pairs", elems.len() * elems.len())))
        }),
    );
    r.eq(
        "Σ sign(w) = 0 at n=3",
        weyl::enumerate(3, 8).map(|it| it.map(|w| w.sign() as i64).sum::<i64>()),
        0,
    );
    r.rows
}

fn partfn(oracle_bound: i64) -> Vec<CheckRow> {
    let mut r = Recorder::new("partfn");
    let w = |d: i64, e: i64| WeightVector::new(&[d], &[e]);
    let engine = PartitionEngine::new(1);
    let l = |d, e| engine.as_ref().map_err(Clone::clone).and_then(|en| en.l_poly(&w(d, e)?));
    r.eq("L_0 = 1", l(0, 0), QPolynomial::one());
    r.eq("L_{δ₁} = q", l(1, 0), QPolynomial::monomial(1, 1));
    r.eq("L_{ε₁+δ₁} = q + q³", l(1, 1), QPolynomial::from_i64s(&[0, 1, 0, 1]));
    r.eq("L_{ε₁} = q²", l(0, 1), QPolynomial::monomial(2, 1));
    r.record(
        "L agrees with the brute-force oracle at n=1, h ≤ 8",
        (|| {
            let engine = PartitionEngine::new(1)?;
            let sys = engine.system().clone();
            let mut checked = 0;
            for d in -8..=8 {
                for e in -8..=8 {
                    let alpha = w(d, e)?;
                    let h = sys.height().eval(&alpha)?;
                    if h > 8.min(oracle_bound) {
                        continue;
                    }
                    if engine.l_poly(&alpha)? != l_oracle(&alpha, &sys, oracle_bound)? {
                        return Ok((false, format!("mismatch at {alpha}")));
                    }
                    checked += 1;
                }
            }
            Ok((true, format!("{checked} weights")))
        })(),
    );
    r.rows
}

fn kostka() -> Vec<CheckRow> {
    let mut r = Recorder::new("kostka");
    let p = DominantWeightPair::new;
    let calc = KostkaCalculator::new(1, KostkaOptions::default());
    let k = |a: &[i64], b: &[i64], c: &[i64], d: &[i64]| {
        let calc = calc.as_ref().map_err(Clone::clone)?;
        calc.kostka(&p(a, b)?, &p(c, d)?)
    };
    r.eq("K_{((1),(0)),((0),(0))} = q", k(&[1], &[0], &[0], &[0]), QPolynomial::monomial(1, 1));
    r.eq("K_{((0),(1)),((0),(0))} = q²", k(&[0], &[1], &[0], &[0]), QPolynomial::monomial(2, 1));
    for n in 1..=2 {
        r.record(
            format!("K_λλ = 1, support and positivity at n={n}, parts ≤ 1"),
            (|| {
                let calc = KostkaCalculator::new(n, KostkaOptions::default())?;
                let pairs: Vec<DominantWeightPair> = orbits::bounded_labels(n, 1)
                    .iter()
                    .map(orbits::OrbitLabel::dominant_pair)
                    .collect();
                for a in &pairs {
                    if calc.kostka(a, a)? != QPolynomial::one() {
                        return Ok((false, format!("K_λλ ≠ 1 at {a}")));
                    }
                    for b in &pairs {
                        let kab = calc.kostka(a, b)?;
                        if !kab.is_nonnegative() {
                            return Ok((false, format!("negative coefficient in K at {a}, {b}")));
                        }
                        if !kab.is_zero() && !calc.support_check(a, b)? {
                            return Ok((false, format!("K ≠ 0 outside the closure at {a}, {b}")));
                        }
                    }
                }
                Ok((true, format!("{} pairs", pairs.len() * pairs.len())))
            })(),
        );
    }
    r.rows
}

fn orbits_suite() -> Vec<CheckRow> {
    let mut r = Recorder::new("orbits");
    r.eq("dual (3,1,0,−2)", orbits::dual_signature(&[3, 1, 0, -2]), vec![2, 0, -1, -3]);
    r.eq("θ=(1,0) ↦ (1,0,0,−1)", orbits::partition_to_selfdual(&[1, 0]), vec![1, 0, 0, -1]);
    r.record(
        "self-dual bijection round-trips, parts ≤ 3, n ≤ 3",
        (|| {
            let mut count = 0;
            for n in 1..=3 {
                for theta in orbits::bounded_partitions(n, 3) {
                    let s = orbits::partition_to_selfdual(&theta)?;
                    if orbits::selfdual_to_partition(&s)? != theta || orbits::dual_signature(&s)? != s {
                        return Ok((false, format!("fails at {theta:?}")));
                    }
                    count += 1;
                }
            }
            Ok((true, format!("{count} partitions")))
        })(),
    );
    r.record(
        "Hasse diagram at n=1, bound=1 is the chain (1,1) > (0,1) > (1,0) > (0,0)",
        orbits::closure_hasse(1, 1, orbits::DEFAULT_LABEL_LIMIT).map(|h| {
            let ok = h.edges.len() == 3;
            (ok, format!("{} covering edges", h.edges.len()))
        }),
    );
    r.rows
}

fn exceptional_suite() -> Vec<CheckRow> {
    let mut r = Recorder::new("exceptional");
    r.eq("dim Ñ₁ = 15 for f(4)", Ok(exceptional::hesselink_dim(CaseName::F4)), 15);
    r.eq("dim Ñ₁ = 13 for g(3)", Ok(exceptional::hesselink_dim(CaseName::G3)), 13);
    let f4 = exceptional::case_data(CaseName::F4);
    let g3 = exceptional::case_data(CaseName::G3);
    r.eq("dim Spin(7)/P' = 8", Ok(f4.even_factors[0].flag_dim()), 8);
    r.eq("dim G₂/P' = 5", Ok(g3.even_factors[0].flag_dim()), 5);
    r.eq("|R⁺(B₃)| = 9", Ok(f4.even_factors[0].cartan.positive_root_count()), 9);
    r.eq("|R⁺(G₂)| = 6", Ok(g3.even_factors[0].cartan.positive_root_count()), 6);
    r.eq("f(4) simple roots independent", Ok(exceptional::weight_rank(&f4.borel_simple_roots)), 4);
    r.eq("g(3) odd positive roots = 7", Ok(g3.odd_fiber_weights.len()), 7);
    let positive = exceptional::positive_subset(&exceptional::f4_odd_weights(), &f4.borel_simple_roots);
    r.record(
        "f(4) fiber weights are odd positive roots",
        Ok((
            f4.odd_fiber_weights.iter().all(|w| positive.contains(w)),
            format!("{} of {} positive odd weights", f4.odd_fiber_weights.len(), positive.len()),
        )),
    );
    r.rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass() {
        let rows = run_suite(Suite::All, 12);
        let failed: Vec<_> = rows.iter().filter(|r| !r.passed).collect();
        assert!(failed.is_empty(), "{failed:#?}");
        for name in Suite::NAMES {
            assert!(name.parse::<Suite>().is_ok());
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
