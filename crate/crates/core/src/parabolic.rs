//! Real parabolics P_κ, their Levi factors, θ-stable parabolic labels
//! (pair partitions), and root-set constructions of parabolic subsets.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::{q, Q};
use crate::rootsys::{Family, GroupDatum, Root, RootSet};

/// {α : α(h) ≥ 0}.
pub fn functional_parabolic(g: &GroupDatum, h: &[Q]) -> RootSet {
    g.roots
        .iter()
        .filter(|r| !r.eval(h).is_negative())
        .cloned()
        .collect()
}

/// Coefficients of `r` in the basis `basis` (which must span the root
/// lattice of full rank), or `None` if `basis` is not a basis.
pub fn expand_in_basis(basis: &[Root], r: &Root) -> Option<Vec<Q>> {
    let n = r.0.len();
    if basis.len() != n {
        return None;
    }
    // Solve Σ c_j basis_j = r, augmented matrix with columns basis_j.
    let mut m: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            let mut row: Vec<Q> = basis.iter().map(|b| q(b.0[i] as i64)).collect();
            row.push(q(r.0[i] as i64));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, piv);
        let p = m[col][col];
        for x in m[col].iter_mut() {
            *x /= p;
        }
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let f = m[i][col];
                let pivot_row = m[col].clone();
                for (x, y) in m[i].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n]).collect())
}

/// The parabolic subset Δ⁺(pi) ∪ (ℤS ∩ Δ) attached to a simple system
/// `pi` and a subset `s ⊆ pi`. Errors if `pi` is not a simple system.
pub fn parabolic_from_simple(g: &GroupDatum, pi: &[Root], s: &[Root]) -> Result<RootSet> {
    let idx: BTreeSet<usize> = s
        .iter()
        .map(|r| {
            pi.iter()
                .position(|x| x == r)
                .ok_or_else(|| Error::Validation(format!("{r} not in the simple system")))
        })
        .collect::<Result<_>>()?;
    let mut out = RootSet::new();
    for r in &g.roots {
        let c = expand_in_basis(pi, r)
            .ok_or_else(|| Error::Validation("simple system is not a basis".into()))?;
        if c.iter().any(|x| !x.is_integer()) {
            return Err(Error::Validation(format!(
                "{r} is not an integral combination"
            )));
        }
        let pos = c.iter().all(|x| !x.is_negative());
        let neg = c.iter().all(|x| !x.is_positive());
        if !pos && !neg {
            return Err(Error::Validation(format!(
                "not a simple system: {r} has mixed-sign coefficients"
            )));
        }
        let in_levi = c
            .iter()
            .enumerate()
            .all(|(j, x)| x.is_zero() || idx.contains(&j));
        if pos || in_levi {
            out.insert(r.clone());
        }
    }
    Ok(out)
}

/// Standard parabolic Δ⁺ ∪ (ℤS ∩ Δ) for S ⊆ Π.
pub fn standard_parabolic(g: &GroupDatum, s: &[Root]) -> Result<RootSet> {
    parabolic_from_simple(g, &g.simple, s)
}

/// Grading functional A = Σ_{j ≤ 2k} E_j of the real parabolic p_(k).
pub fn p_k_functional(n: usize, k: usize) -> Vec<Q> {
    (0..n)
        .map(|j| if j < 2 * k { q(1) } else { q(0) })
        .collect()
}

/// Grading functional H = Σ_{i ≤ k} (E_{2i-1} - E_{2i}) of the
/// θ-stable parabolic q_(k).
pub fn q_k_functional(n: usize, k: usize) -> Vec<Q> {
    (0..n)
        .map(|j| {
            if j >= 2 * k {
                q(0)
            } else if j % 2 == 0 {
                q(1)
            } else {
                q(-1)
            }
        })
        .collect()
}

/// Real parabolic p_(k) with Levi GL(k,ℍ) × (tail).
pub fn p_k(g: &GroupDatum, k: usize) -> RootSet {
    functional_parabolic(g, &p_k_functional(g.rank, k))
}

/// θ-stable parabolic q_(k) with Levi GL(2k,ℂ)-type block and the tail.
pub fn q_k(g: &GroupDatum, k: usize) -> RootSet {
    functional_parabolic(g, &q_k_functional(g.rank, k))
}

/// The displayed simple system Π_u^{(k)} together with its Levi part
/// S_u^{(k)}, when the display yields a simple system of the right size.
/// Returns `None` for the degenerate shapes where it does not (for
/// instance SO*(2n) with n = 2k+1, or k = 1 with n = 2).
pub fn pi_u_k(g: &GroupDatum, k: usize) -> Option<(Vec<Root>, Vec<Root>)> {
    let n = g.rank;
    if k == 0 || 2 * k > n {
        return None;
    }
    let sp = matches!(g.family, Family::Sp { .. });
    let mut pi = Vec::new();
    for i in 0..2 * k - 2 {
        pi.push(Root::pair(n, i, 1, i + 2, -1));
    }
    pi.push(Root::pair(n, 2 * k - 2, 1, 2 * k - 1, 1));
    let levi = pi.clone();
    let extra = if 2 * k < n {
        Root::pair(n, 1, -1, 2 * k, -1)
    } else if sp {
        Root::unit(n, 1, -2)
    } else {
        if n < 4 {
            return None;
        }
        Root::pair(n, 1, -1, 3, -1)
    };
    pi.push(extra);
    let mut levi = levi;
    for r in &g.simple {
        if r.0[..2 * k].iter().all(|x| *x == 0) {
            pi.push(r.clone());
            levi.push(r.clone());
        }
    }
    if pi.len() != n || !pi.iter().all(|r| g.is_root(r)) {
        return None;
    }
    parabolic_from_simple(g, &pi, &[]).ok()?;
    Some((pi, levi))
}

/// Simple-root subset S(k) of the square case n = 2k read literally:
/// {e_i - e_{i+1} : i ≤ n-1}.
pub fn s_square(g: &GroupDatum) -> Vec<Root> {
    let n = g.rank;
    (0..n.saturating_sub(1))
        .map(|i| Root::pair(n, i, 1, i + 1, -1))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KappaSequence {
    pub entries: Vec<usize>,
}

impl KappaSequence {
    pub fn new(entries: Vec<usize>) -> Self {
        KappaSequence { entries }
    }
    pub fn total(&self) -> usize {
        self.entries
            .iter()
            .fold(0usize, |a, b| a.saturating_add(*b))
    }
    pub fn len(&self) -> usize {
        self.entries.len()
    }
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
    /// Partial sums k*_1, …, k*_s.
    pub fn partial_sums(&self) -> Vec<usize> {
        self.entries
            .iter()
            .scan(0, |acc, k| {
                *acc += k;
                Some(*acc)
            })
            .collect()
    }

    pub fn validate(&self, family: &Family) -> Result<()> {
        if self.entries.contains(&0) {
            return Err(Error::Validation("kappa entries must be positive".into()));
        }
        let t = self.total();
        match family {
            Family::Sp { p, q } => {
                if t > *q || *q > *p {
                    return Err(Error::Validation(format!(
                        "kappa total {t} exceeds q={q} for Sp({p},{q})"
                    )));
                }
            }
            Family::SoStar { n } => {
                if t.saturating_mul(2) > *n {
                    return Err(Error::Validation(format!(
                        "kappa total {t} exceeds n/2 for SO*({})",
                        n.saturating_mul(2)
                    )));
                }
            }
            other => {
                return Err(Error::Validation(format!(
                    "kappa sequences are defined for Sp and SO* only, not {other}"
                )))
            }
        }
        Ok(())
    }

    /// Tail group M° = Sp(p',q') or SO*(2r).
    pub fn tail_family(&self, family: &Family) -> Result<Family> {
        self.validate(family)?;
        let t = self.total();
        Ok(match family {
            Family::Sp { p, q } => Family::Sp { p: p - t, q: q - t },
            Family::SoStar { n } => Family::SoStar { n: n - 2 * t },
            _ => unreachable!(),
        })
    }
}

/// κ^τ = (k_{τ(1)}, …, k_{τ(s)}); `tau` is 0-based.
pub fn permute_kappa(kappa: &KappaSequence, tau: &[usize]) -> Result<KappaSequence> {
    let s = kappa.len();
    let mut seen = vec![false; s];
    if tau.len() != s
        || tau
            .iter()
            .any(|&t| t >= s || std::mem::replace(&mut seen[t], true))
    {
        return Err(Error::Validation(format!(
            "{tau:?} is not a permutation of 0..{s}"
        )));
    }
    Ok(KappaSequence::new(
        tau.iter().map(|&t| kappa.entries[t]).collect(),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviStructure {
    pub factors: Vec<Family>,
    pub tail: Family,
    pub s_kappa: Vec<Root>,
}

/// Levi factor of P_κ and its simple-root subset S(κ).
///
/// S(κ) is the set of simple roots vanishing on every block functional
/// A_i = Σ_{j ≤ 2k_i} E_{2k*_{i-1}+j}.
pub fn levi_structure(g: &GroupDatum, kappa: &KappaSequence) -> Result<LeviStructure> {
    let tail = kappa.tail_family(&g.family)?;
    let n = g.rank;
    let mut fs = Vec::new();
    let mut start = 0;
    for &k in &kappa.entries {
        let h: Vec<Q> = (0..n)
            .map(|j| {
                if j >= start && j < start + 2 * k {
                    q(1)
                } else {
                    q(0)
                }
            })
            .collect();
        fs.push(h);
        start += 2 * k;
    }
    let s_kappa = g
        .simple
        .iter()
        .filter(|r| fs.iter().all(|h| r.eval(h).is_zero()))
        .cloned()
        .collect();
    Ok(LeviStructure {
        factors: kappa.entries.iter().map(|&k| Family::GlH { k }).collect(),
        tail,
        s_kappa,
    })
}

/// S(κ) by the case formula: remove e_{2k*_i} - e_{2k*_i+1}, replacing the
/// last removal by the long/fork root when the tail is empty.
pub fn s_kappa_formula(g: &GroupDatum, kappa: &KappaSequence) -> Result<Vec<Root>> {
    let tail = kappa.tail_family(&g.family)?;
    let n = g.rank;
    let ks = kappa.partial_sums();
    let s = ks.len();
    let empty_tail = match tail {
        Family::Sp { p, .. } => p == 0,
        Family::SoStar { n } => n == 0,
        _ => false,
    };
    let mut removed = Vec::new();
    for (i, &kstar) in ks.iter().enumerate() {
        if i + 1 == s && empty_tail {
            removed.push(match g.family {
                Family::Sp { .. } => Root::unit(n, n - 1, 2),
                _ => Root::pair(n, n - 2, 1, n - 1, 1),
            });
        } else if 2 * kstar < n {
            removed.push(Root::pair(n, 2 * kstar - 1, 1, 2 * kstar, -1));
        }
    }
    Ok(g.simple
        .iter()
        .filter(|r| !removed.contains(r))
        .cloned()
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PairPartition {
    pub p: Vec<usize>,
    pub q: Vec<usize>,
}

impl PairPartition {
    pub fn empty() -> Self {
        PairPartition {
            p: vec![],
            q: vec![],
        }
    }
    pub fn len(&self) -> usize {
        self.p.len()
    }
    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }
    /// Saturating, so oversized input fails validation instead of overflowing.
    pub fn sums(&self) -> (usize, usize) {
        let sum = |v: &[usize]| v.iter().fold(0usize, |a, b| a.saturating_add(*b));
        (sum(&self.p), sum(&self.q))
    }
    pub fn block(&self, i: usize) -> (usize, usize) {
        (self.p[i], self.q[i])
    }
    pub fn is_well_formed(&self) -> bool {
        self.p.len() == self.q.len() && self.p.iter().zip(&self.q).all(|(a, b)| *a > 0 || *b > 0)
    }
}

/// Membership in ℙ(p', q').
pub fn validate_pair_partition(pp_: usize, qq_: usize, pp: &PairPartition) -> bool {
    pp.is_well_formed() && pp.sums() == (pp_, qq_)
}

/// All of ℙ(p', q'), in lexicographic order of the block list.
pub fn enumerate_pair_partitions(p: usize, q: usize) -> Vec<PairPartition> {
    fn rec(p: usize, q: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<PairPartition>) {
        if p == 0 && q == 0 {
            out.push(PairPartition {
                p: cur.iter().map(|x| x.0).collect(),
                q: cur.iter().map(|x| x.1).collect(),
            });
            return;
        }
        for a in 0..=p {
            for b in 0..=q {
                if a + b == 0 {
                    continue;
                }
                cur.push((a, b));
                rec(p - a, q - b, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(p, q, &mut Vec::new(), &mut out);
    out
}

/// Permutation helper used with κ: apply τ to any list.
pub fn permute_list<T: Clone>(v: &[T], tau: &[usize]) -> Vec<T> {
    tau.iter().map(|&t| v[t].clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_group;

    #[test]
    fn levi_examples() {
        let g = build_group(Family::Sp { p: 3, q: 2 }).unwrap();
        let l = levi_structure(&g, &KappaSequence::new(vec![1, 1])).unwrap();
        assert_eq!(l.tail, Family::Sp { p: 1, q: 0 });
        let removed: Vec<Root> = g
            .simple
            .iter()
            .filter(|r| !l.s_kappa.contains(r))
            .cloned()
            .collect();
        assert_eq!(
            removed,
            vec![Root::pair(5, 1, 1, 2, -1), Root::pair(5, 3, 1, 4, -1)]
        );

        let g = build_group(Family::SoStar { n: 4 }).unwrap();
        let l = levi_structure(&g, &KappaSequence::new(vec![2])).unwrap();
        assert_eq!(l.tail, Family::SoStar { n: 0 });
        let removed: Vec<Root> = g
            .simple
            .iter()
            .filter(|r| !l.s_kappa.contains(r))
            .cloned()
            .collect();
        assert_eq!(removed, vec![Root::pair(4, 2, 1, 3, 1)]);

        let g = build_group(Family::Sp { p: 1, q: 1 }).unwrap();
        let l = levi_structure(&g, &KappaSequence::new(vec![])).unwrap();
        assert!(l.factors.is_empty());
        assert_eq!(l.s_kappa, g.simple);
    }

    #[test]
    fn kappa_bounds() {
        assert!(KappaSequence::new(vec![3])
            .validate(&Family::Sp { p: 3, q: 2 })
            .is_err());
        assert!(KappaSequence::new(vec![0])
            .validate(&Family::Sp { p: 3, q: 2 })
            .is_err());
        assert!(KappaSequence::new(vec![2])
            .validate(&Family::SoStar { n: 4 })
            .is_ok());
        assert!(KappaSequence::new(vec![2, 1])
            .validate(&Family::SoStar { n: 5 })
            .is_err());
    }

    #[test]
    fn permute_examples() {
        let k = KappaSequence::new(vec![1, 2, 1]);
        assert_eq!(
            permute_kappa(&k, &[0, 2, 1]).unwrap().entries,
            vec![1, 1, 2]
        );
        assert_eq!(permute_kappa(&k, &[0, 1, 2]).unwrap(), k);
        assert!(permute_kappa(&k, &[0, 0, 1]).is_err());
    }

    #[test]
    fn pair_partition_examples() {
        assert!(validate_pair_partition(
            2,
            1,
            &PairPartition {
                p: vec![1, 1],
                q: vec![1, 0]
            }
        ));
        assert!(!validate_pair_partition(
            1,
            0,
            &PairPartition {
                p: vec![1, 0],
                q: vec![0, 0]
            }
        ));
        assert!(validate_pair_partition(0, 0, &PairPartition::empty()));
        assert_eq!(
            enumerate_pair_partitions(0, 0),
            vec![PairPartition::empty()]
        );
        assert_eq!(enumerate_pair_partitions(1, 0).len(), 1);
        assert_eq!(enumerate_pair_partitions(1, 1).len(), 3);
    }
}
