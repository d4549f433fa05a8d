//! Partitions, hook-length dimensions of symmetric-group representations,
//! MacDonald representation dimensions for W(D_2m), and the coherent
//! continuation dimension identity for SO*(4m).

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::cartan::block_dimension;
use crate::error::{Error, Result};
use crate::num::factorial;
use crate::parabolic::KappaSequence;
use crate::rootsys::{build_group, Family, Root};

/// A partition stored weakly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    pub parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Validation("partition parts must be positive".into()));
        }
        parts.sort_unstable();
        Ok(Partition { parts })
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Parts in decreasing order (the usual Young diagram rows).
    pub fn rows(&self) -> Vec<usize> {
        self.parts.iter().rev().copied().collect()
    }

    pub fn conjugate(&self) -> Partition {
        let rows = self.rows();
        let width = rows.first().copied().unwrap_or(0);
        let cols: Vec<usize> = (0..width)
            .map(|c| rows.iter().filter(|&&r| r > c).count())
            .collect();
        Partition {
            parts: cols.into_iter().rev().collect(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of m in lexicographic order of their increasing part lists.
pub fn partitions(m: usize) -> Vec<Partition> {
    fn rec(rem: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in min..=rem {
            if rem - p == 0 || rem - p >= p {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(m, 1, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Hook length formula.
pub fn hook_dim(pi: &Partition) -> BigUint {
    let rows = pi.rows();
    let cols = pi.conjugate().rows();
    let mut hooks = BigUint::one();
    for (i, &r) in rows.iter().enumerate() {
        for (j, &c) in cols.iter().enumerate().take(r) {
            hooks *= BigUint::from((r - j) + (c - i) - 1);
        }
    }
    factorial(pi.size() as u64) / hooks
}

/// dim σ_π = (2m)!·dim(π)² / (2(m!)²).
pub fn macdonald_dim(pi: &Partition, m: usize) -> Result<BigUint> {
    if pi.size() != m {
        return Err(Error::Validation(format!("{pi} is not a partition of {m}")));
    }
    let d = hook_dim(pi);
    let num = factorial(2 * m as u64) * &d * &d;
    let den = BigUint::from(2u32) * factorial(m as u64) * factorial(m as u64);
    if !(&num % &den).is_zero() {
        return Err(Error::Internal(format!(
            "MacDonald dimension for {pi} is not an integer"
        )));
    }
    Ok(num / den)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherentContinuationReport {
    pub m: usize,
    pub sum_macdonald: BigUint,
    pub closed_form: BigUint,
    pub block_dimension: BigUint,
    pub wgh_method: &'static str,
    pub terms: Vec<(Partition, BigUint)>,
}

impl CoherentContinuationReport {
    pub fn passed(&self) -> bool {
        self.sum_macdonald == self.closed_form && self.closed_form == self.block_dimension
    }
}

/// Σ_π dim σ_π against (2m)!/(2·m!) and card(W/W(G;ˢH)).
pub fn verify_coherent_continuation_dim(m: usize) -> Result<CoherentContinuationReport> {
    if m == 0 {
        return Err(Error::Validation("m must be positive".into()));
    }
    let mut terms = Vec::new();
    let mut sum = BigUint::zero();
    for pi in partitions(m) {
        let d = macdonald_dim(&pi, m)?;
        sum += &d;
        terms.push((pi, d));
    }
    let closed_form = factorial(2 * m as u64) / (BigUint::from(2u32) * factorial(m as u64));
    let bd = block_dimension(m)?;
    Ok(CoherentContinuationReport {
        m,
        sum_macdonald: sum,
        closed_form,
        block_dimension: bd.value,
        wgh_method: bd.wgh_method,
        terms,
    })
}

/// S_π = Π − ({e_{2p*_i} − e_{2p*_i+1} : 1 ≤ i ≤ k−1} ∪ {e_{2m−1} + e_{2m}}) in SO*(4m).
pub fn levi_subset(pi: &Partition, m: usize) -> Result<Vec<Root>> {
    if pi.size() != m || m == 0 {
        return Err(Error::Validation(format!("{pi} is not a partition of {m}")));
    }
    let n = 2 * m;
    let g = build_group(Family::SoStar { n })?;
    let mut removed = vec![Root::pair(n, n - 2, 1, n - 1, 1)];
    let mut acc = 0;
    for &p in &pi.parts[..pi.parts.len() - 1] {
        acc += p;
        removed.push(Root::pair(n, 2 * acc - 1, 1, 2 * acc, -1));
    }
    Ok(g.simple
        .iter()
        .filter(|r| !removed.contains(r))
        .cloned()
        .collect())
}

/// The κ of the parabolic attached to π.
pub fn partition_kappa(pi: &Partition) -> KappaSequence {
    KappaSequence::new(pi.parts.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn partition_examples() {
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(1), vec![Partition { parts: vec![1] }]);
        assert_eq!(partitions(0), vec![Partition { parts: vec![] }]);
        // Partition function values.
        let p: Vec<usize> = (0..=10).map(|m| partitions(m).len()).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn hook_examples() {
        assert_eq!(hook_dim(&Partition::new(vec![1, 1, 1]).unwrap()), b(1));
        assert_eq!(hook_dim(&Partition::new(vec![3]).unwrap()), b(1));
        assert_eq!(hook_dim(&Partition::new(vec![1, 2]).unwrap()), b(2));
        let s: BigUint = partitions(4).iter().map(|p| hook_dim(p).pow(2)).sum();
        assert_eq!(s, b(24));
    }

    #[test]
    fn macdonald_examples() {
        assert_eq!(
            macdonald_dim(&Partition::new(vec![2]).unwrap(), 2).unwrap(),
            b(3)
        );
        assert_eq!(
            macdonald_dim(&Partition::new(vec![1]).unwrap(), 1).unwrap(),
            b(1)
        );
        assert_eq!(
            macdonald_dim(&Partition::new(vec![1, 2]).unwrap(), 3).unwrap(),
            b(40)
        );
    }

    #[test]
    fn coherent_continuation_small() {
        let r = verify_coherent_continuation_dim(2).unwrap();
        assert!(r.passed());
        assert_eq!(r.block_dimension, b(6));
        assert!(verify_coherent_continuation_dim(1).unwrap().passed());
    }

    #[test]
    fn levi_subsets() {
        let n = 4;
        let s = levi_subset(&Partition::new(vec![2]).unwrap(), 2).unwrap();
        assert_eq!(
            s,
            vec![
                Root::pair(n, 0, 1, 1, -1),
                Root::pair(n, 1, 1, 2, -1),
                Root::pair(n, 2, 1, 3, -1)
            ]
        );
        let s = levi_subset(&Partition::new(vec![1, 1]).unwrap(), 2).unwrap();
        assert_eq!(
            s,
            vec![Root::pair(n, 0, 1, 1, -1), Root::pair(n, 2, 1, 3, -1)]
        );
    }
}
