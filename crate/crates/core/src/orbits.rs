//! Relevant `Sp(2n,O)`-orbits in `(V_F/V_O) × Gr`: signatures and their
//! duality, orbit labels `(θ, ζ)`, lattice representatives, stabilizer Levi
//! types, and the closure order.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partfn::PartitionEngine;
use crate::rootdata::DominantWeightPair;

/// Cap on the number of labels `closure_hasse` will compare pairwise.
pub const DEFAULT_LABEL_LIMIT: usize = 512;

fn weakly_decreasing(s: &[i64]) -> bool {
    s.windows(2).all(|w| w[0] >= w[1])
}

/// `λ* = (−λ₂ₙ ≥ … ≥ −λ₁)`.
pub fn dual_signature(s: &[i64]) -> Result<Vec<i64>> {
    if !weakly_decreasing(s) {
        return Err(Error::NonMonotone(s.to_vec()));
    }
    Ok(s.iter().rev().map(|x| -x).collect())
}

/// `θ ↦ (θ₁ ≥ … ≥ θₙ ≥ −θₙ ≥ … ≥ −θ₁)`.
pub fn partition_to_selfdual(theta: &[i64]) -> Result<Vec<i64>> {
    if !crate::rootdata::weight_is_partition(theta) {
        return Err(Error::InvalidWeight(format!("{theta:?} is not a partition")));
    }
    Ok(theta.iter().copied().chain(theta.iter().rev().map(|x| -x)).collect())
}

pub fn selfdual_to_partition(s: &[i64]) -> Result<Vec<i64>> {
    if !s.len().is_multiple_of(2) || s.is_empty() {
        return Err(Error::NotSelfDual(s.to_vec()));
    }
    if dual_signature(s)? != s {
        return Err(Error::NotSelfDual(s.to_vec()));
    }
    Ok(s[..s.len() / 2].to_vec())
}

/// A pair of signatures of length `2n`, indexing `GL(2n,O)`-orbits on the
/// mirabolic affine Grassmannian.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bisignature {
    lam: Vec<i64>,
    nu: Vec<i64>,
}

impl Bisignature {
    pub fn new(lam: Vec<i64>, nu: Vec<i64>) -> Result<Self> {
        for s in [&lam, &nu] {
            if !weakly_decreasing(s) {
                return Err(Error::NonMonotone(s.clone()));
            }
        }
        if lam.len() != nu.len() {
            return Err(Error::LengthMismatch {
                expected: lam.len(),
                got: nu.len(),
            });
        }
        Ok(Self { lam, nu })
    }

    pub fn lam(&self) -> &[i64] {
        &self.lam
    }

    pub fn nu(&self) -> &[i64] {
        &self.nu
    }

    /// `(λ*, ν*)`: the image under the involution fixing `Sp(2n)`.
    pub fn dual(&self) -> Self {
        Self {
            lam: dual_signature(&self.lam).expect("monotone"),
            nu: dual_signature(&self.nu).expect("monotone"),
        }
    }

    pub fn is_self_dual(&self) -> bool {
        self.dual() == *self
    }
}

/// A pair of length-`n` partitions `(θ, ζ)` labelling a relevant orbit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitLabel {
    theta: Vec<i64>,
    zeta: Vec<i64>,
}

impl OrbitLabel {
    pub fn new(theta: &[i64], zeta: &[i64]) -> Result<Self> {
        // same validation as a dominant pair: θ on the Sp side, ζ on the SO side
        DominantWeightPair::new(theta, zeta)?;
        Ok(Self {
            theta: theta.to_vec(),
            zeta: zeta.to_vec(),
        })
    }

    pub fn rank(&self) -> usize {
        self.theta.len()
    }

    pub fn theta(&self) -> &[i64] {
        &self.theta
    }

    pub fn zeta(&self) -> &[i64] {
        &self.zeta
    }

    /// `θ ↦ λ₁`, `ζ ↦ λ₀`.
    pub fn dominant_pair(&self) -> DominantWeightPair {
        DominantWeightPair::new(&self.theta, &self.zeta).expect("validated at construction")
    }

    pub fn bisignature(&self) -> Bisignature {
        Bisignature {
            lam: partition_to_selfdual(&self.theta).expect("partition"),
            nu: partition_to_selfdual(&self.zeta).expect("partition"),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.theta.iter().chain(&self.zeta).all(|&x| x == 0)
    }
}

fn list(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "θ=[{}] ζ=[{}]", list(&self.theta), list(&self.zeta))
    }
}

/// `v = Σ t^{−θᵢ} eᵢ` and the lattice
/// `L = O t^{−θ₁−ζ₁} e₁ ⊕ … ⊕ O t^{−θₙ−ζₙ} eₙ ⊕ O t^{θₙ+ζₙ} eₙ₊₁ ⊕ … ⊕ O t^{θ₁+ζ₁} e₂ₙ`,
/// stored as exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRepresentative {
    pub vector_exponents: Vec<i64>,
    pub lattice_exponents: Vec<i64>,
}

impl OrbitRepresentative {
    /// Reversing the lattice exponents and negating gives them back.
    pub fn is_self_dual(&self) -> bool {
        let rev: Vec<i64> = self.lattice_exponents.iter().rev().map(|x| -x).collect();
        rev == self.lattice_exponents
    }
}

pub fn orbit_representative(label: &OrbitLabel) -> OrbitRepresentative {
    let sums: Vec<i64> = label.theta.iter().zip(&label.zeta).map(|(a, b)| a + b).collect();
    OrbitRepresentative {
        vector_exponents: label.theta.iter().map(|x| -x).collect(),
        lattice_exponents: sums.iter().map(|x| -x).chain(sums.iter().rev().copied()).collect(),
    }
}

/// Reductive part of the lattice stabilizer: `Sp(2m₀) × ∏_{i>0} GL(mᵢ)`
/// where `mᵢ` is the multiplicity of `i` in `θ + ζ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviType {
    pub m0: usize,
    pub gl_blocks: BTreeMap<i64, usize>,
}

impl LeviType {
    pub fn rank(&self) -> usize {
        self.m0 + self.gl_blocks.values().sum::<usize>()
    }
}

impl fmt::Display for LeviType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.m0 > 0 {
            parts.push(format!("Sp({})", 2 * self.m0));
        }
        parts.extend(self.gl_blocks.values().map(|m| format!("GL({m})")));
        write!(f, "{}", parts.join("×"))
    }
}

pub fn levi_type(label: &OrbitLabel) -> LeviType {
    let mut m0 = 0;
    let mut gl_blocks = BTreeMap::new();
    for (a, b) in label.theta.iter().zip(&label.zeta) {
        match a + b {
            0 => m0 += 1,
            i => *gl_blocks.entry(i).or_insert(0) += 1,
        }
    }
    LeviType { m0, gl_blocks }
}

/// All partitions of length `n` with parts `≤ bound`, lexicographically
/// ascending.
pub fn bounded_partitions(n: usize, bound: i64) -> Vec<Vec<i64>> {
    fn go(n: usize, cap: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for x in 0..=cap {
            prefix.push(x);
            go(n, x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, bound, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Labels with every part `≤ bound`, θ-major grid order.
pub fn bounded_labels(n: usize, bound: i64) -> Vec<OrbitLabel> {
    let parts = bounded_partitions(n, bound);
    let mut out = Vec::with_capacity(parts.len() * parts.len());
    for theta in &parts {
        for zeta in &parts {
            out.push(OrbitLabel {
                theta: theta.clone(),
                zeta: zeta.clone(),
            });
        }
    }
    out
}

/// The closure order on a finite set of labels and its covering relation.
#[derive(Clone, Debug)]
pub struct HasseDiagram {
    pub labels: Vec<OrbitLabel>,
    /// `ge[i][j]` iff `labels[i] ≥ labels[j]`.
    pub ge: Vec<Vec<bool>>,
    /// Covering pairs `(larger, smaller)`, sorted.
    pub edges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct EdgeJson<'a> {
    from: &'a OrbitLabel,
    to: &'a OrbitLabel,
}

#[derive(Serialize)]
struct HasseJson<'a> {
    labels: &'a [OrbitLabel],
    edges: Vec<EdgeJson<'a>>,
}

impl HasseDiagram {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph closure {\n");
        for (i, l) in self.labels.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{l}\"];\n"));
        }
        for (a, b) in &self.edges {
            out.push_str(&format!("  n{a} -> n{b};\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let doc = HasseJson {
            labels: &self.labels,
            edges: self
                .edges
                .iter()
                .map(|&(a, b)| EdgeJson {
                    from: &self.labels[a],
                    to: &self.labels[b],
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("plain data")
    }

    pub fn index_of(&self, label: &OrbitLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

fn binomial(top: u128, k: u128) -> u128 {
    let k = k.min(top - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact at every step: acc·(top−i)/(i+1) is C(top, i+1)
        acc = match acc.checked_mul(top - i) {
            Some(x) => x / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Full closure order on the labels with parts `≤ bound`, reduced to covers.
pub fn closure_hasse(bound: i64, n: usize, label_limit: usize) -> Result<HasseDiagram> {
    if n == 0 {
        return Err(Error::InvalidRank(0));
    }
    if bound < 0 {
        return Err(Error::InvalidWeight(format!("negative bound {bound}")));
    }
    // Partitions with at most n parts, each ≤ bound: C(bound+n, n).
    let count = binomial(bound as u128 + n as u128, n as u128);
    let size = count.saturating_mul(count);
    if size > label_limit as u128 {
        return Err(Error::EnumerationLimit {
            size,
            limit: label_limit as u128,
        });
    }
    let labels = bounded_labels(n, bound);
    let engine = PartitionEngine::new(n)?;
    let pairs: Vec<DominantWeightPair> = labels.iter().map(OrbitLabel::dominant_pair).collect();
    let ge: Vec<Vec<bool>> = pairs
        .par_iter()
        .map(|a| pairs.iter().map(|b| engine.dominance_ge(a, b)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;

    let m = labels.len();
    let gt = |i: usize, j: usize| i != j && ge[i][j];
    let mut edges = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if gt(a, b) && !(0..m).any(|c| gt(a, c) && gt(c, b)) {
                edges.push((a, b));
            }
        }
    }
    Ok(HasseDiagram { labels, ge, edges })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(t: &[i64], z: &[i64]) -> OrbitLabel {
        OrbitLabel::new(t, z).unwrap()
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual_signature(&[3, 1, 0, -2]).unwrap(), vec![2, 0, -1, -3]);
        assert_eq!(dual_signature(&[0, 0, 0, 0]).unwrap(), vec![0, 0, 0, 0]);
        assert!(matches!(dual_signature(&[0, 1]), Err(Error::NonMonotone(_))));
    }

    #[test]
    fn selfdual_bijection_examples() {
        assert_eq!(partition_to_selfdual(&[1, 0]).unwrap(), vec![1, 0, 0, -1]);
        assert_eq!(partition_to_selfdual(&[0, 0, 0]).unwrap(), vec![0; 6]);
        assert_eq!(selfdual_to_partition(&[2, 1, -1, -2]).unwrap(), vec![2, 1]);
        assert!(matches!(selfdual_to_partition(&[2, 1, 0, -2]), Err(Error::NotSelfDual(_))));
        assert!(selfdual_to_partition(&[1, 0, -1]).is_err());
        assert!(partition_to_selfdual(&[0, 1]).is_err());
        assert!(partition_to_selfdual(&[1, -1]).is_err());
    }

    #[test]
    fn bisignature_of_label_is_self_dual() {
        let b = label(&[2, 0], &[1, 1]).bisignature();
        assert_eq!(b.lam(), &[2, 0, 0, -2]);
        assert_eq!(b.nu(), &[1, 1, -1, -1]);
        assert!(b.is_self_dual());
        let other = Bisignature::new(vec![3, 1, 0, -2], vec![0, 0, 0, 0]).unwrap();
        assert!(!other.is_self_dual());
        assert_eq!(other.dual().dual(), other);
        assert!(Bisignature::new(vec![0, 1], vec![0, 0]).is_err());
    }

    #[test]
    fn representatives() {
        let r = orbit_representative(&label(&[0, 0], &[0, 0]));
        assert_eq!(r.vector_exponents, vec![0, 0]);
        assert_eq!(r.lattice_exponents, vec![0; 4]);
        let r = orbit_representative(&label(&[1], &[0]));
        assert_eq!(r.vector_exponents, vec![-1]);
        assert_eq!(r.lattice_exponents, vec![-1, 1]);
        let r = orbit_representative(&label(&[1, 0], &[2, 1]));
        assert_eq!(r.lattice_exponents, vec![-3, -1, 1, 3]);
        assert!(r.is_self_dual());
    }

    #[test]
    fn levi_examples() {
        let l = levi_type(&label(&[0, 0, 0], &[0, 0, 0]));
        assert_eq!((l.m0, l.gl_blocks.len()), (3, 0));
        assert_eq!(l.to_string(), "Sp(6)");
        // θ+ζ = (2,1,1,0)
        let l = levi_type(&label(&[1, 1, 1, 0], &[1, 0, 0, 0]));
        assert_eq!(l.m0, 1);
        assert_eq!(l.gl_blocks, BTreeMap::from([(1, 2), (2, 1)]));
        assert_eq!(l.to_string(), "Sp(2)×GL(2)×GL(1)");
        assert_eq!(levi_type(&label(&[1], &[0])).to_string(), "GL(1)");
    }

    #[test]
    fn partitions_enumerated() {
        assert_eq!(bounded_partitions(2, 1), vec![vec![0, 0], vec![1, 0], vec![1, 1]]);
        assert_eq!(bounded_partitions(3, 0), vec![vec![0, 0, 0]]);
        assert_eq!(bounded_labels(1, 1).len(), 4);
    }

    #[test]
    fn hasse_rank_one() {
        let h = closure_hasse(1, 1, DEFAULT_LABEL_LIMIT).unwrap();
        let idx = |t, z| h.index_of(&label(&[t], &[z])).unwrap();
        let (z, d, e, de) = (idx(0, 0), idx(1, 0), idx(0, 1), idx(1, 1));
        assert!(h.ge[d][z] && h.ge[e][z] && h.ge[de][z]);
        // ε₁ − δ₁ is a root, so the four labels form a chain
        assert!(h.ge[e][d]);
        let mut edges = h.edges.clone();
        edges.sort();
        let mut expect = vec![(d, z), (e, d), (de, e)];
        expect.sort();
        assert_eq!(edges, expect);
    }

    #[test]
    fn hasse_trivial_and_limits() {
        let h = closure_hasse(0, 3, DEFAULT_LABEL_LIMIT).unwrap();
        assert_eq!(h.labels.len(), 1);
        assert!(h.edges.is_empty());
        assert!(matches!(closure_hasse(5, 3, 100), Err(Error::EnumerationLimit { .. })));
        assert!(closure_hasse(1, 0, 100).is_err());
        assert!(closure_hasse(-1, 1, 100).is_err());
    }

    #[test]
    fn dot_output() {
        let dot = closure_hasse(1, 1, DEFAULT_LABEL_LIMIT).unwrap().to_dot();
        assert!(dot.starts_with("digraph closure {\n"));
        assert!(dot.contains("n1 [label=\"θ=[0] ζ=[1]\"];"));
        assert!(dot.trim_end().ends_with('}'));
    }
}
