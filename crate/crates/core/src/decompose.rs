//! Decomposition of parabolically induced modules: the U(k,k) degenerate
//! principal series, elliptic lifts, rearrangement bounds, the Speh
//! absorption step, the reduction pipeline and the irreducibility verdict.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::num::{q, qr, Q};
use crate::parabolic::{KappaSequence, PairPartition};
use crate::repparams::{
    c_threshold, df_range, speh_module_inf_char, vanishes_by_compact_singularity, DFParam,
    DegPSParam, DfRange, Ell, SpehParam, UqqConstituent,
};
use crate::rootsys::{build_group, Basis, Family, Weight};

/// Ind_{P_κ}^G(A_{k_1}(ℓ_1,t_1) ⊠ … ⊠ A_{k_s}(ℓ_s,t_s) ⊠ Z), κ read off the factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InducedParam {
    pub family: Family,
    pub factors: Vec<SpehParam>,
    pub tail: DFParam,
}

impl InducedParam {
    pub fn new(family: Family, factors: Vec<SpehParam>, tail: DFParam) -> Result<Self> {
        let ip = InducedParam {
            family,
            factors,
            tail,
        };
        ip.validate()?;
        Ok(ip)
    }

    pub fn kappa(&self) -> KappaSequence {
        KappaSequence::new(self.factors.iter().map(|f| f.k).collect())
    }

    pub fn validate(&self) -> Result<()> {
        build_group(self.family.clone())?;
        for f in &self.factors {
            f.validate()?;
        }
        let tail_family = self.kappa().tail_family(&self.family)?;
        if self.tail.family != tail_family {
            return Err(Error::Validation(format!(
                "tail lives on {} but the Levi tail is {}",
                self.tail.family, tail_family
            )));
        }
        self.tail.validate()?;
        if df_range(&self.tail) == DfRange::OutOfRange {
            return Err(Error::Validation(format!(
                "tail {} is outside the weakly fair range",
                self.tail
            )));
        }
        Ok(())
    }

    /// Factors sorted into the canonical order; the induced module does
    /// not change under permutation of the GL factors.
    pub fn canonical(&self) -> InducedParam {
        let mut c = self.clone();
        c.factors.sort();
        c
    }

    /// Permute the factors (0-based τ), κ following along.
    pub fn permuted(&self, tau: &[usize]) -> Result<InducedParam> {
        let kappa = crate::parabolic::permute_kappa(&self.kappa(), tau)?;
        let factors: Vec<SpehParam> = tau.iter().map(|&t| self.factors[t].clone()).collect();
        debug_assert_eq!(
            kappa.entries,
            factors.iter().map(|f| f.k).collect::<Vec<_>>()
        );
        Ok(InducedParam {
            family: self.family.clone(),
            factors,
            tail: self.tail.clone(),
        })
    }

    pub fn weyl_type(&self) -> crate::rootsys::WeylType {
        self.tail.weyl_type()
    }

    /// Infinitesimal character: factors (each through its own module
    /// character) followed by the tail.
    pub fn raw_inf_char(&self) -> Weight {
        let mut coords = Vec::new();
        for f in &self.factors {
            coords.extend(speh_module_inf_char(f).coords);
        }
        coords.extend(crate::repparams::df_raw_inf_char(&self.tail).coords);
        Weight::new(Basis::F, coords)
    }
}

impl fmt::Display for InducedParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ind[{}](", self.family)?;
        for x in &self.factors {
            write!(f, "{x} x ")?;
        }
        write!(f, "{})", self.tail)
    }
}

/// One summand of a formal sum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Constituent {
    pub param: InducedParam,
    /// Range of the tail derived functor module.
    pub range: DfRange,
    /// Presented as good-range cohomological induction from nonzero
    /// irreducible modules at every absorption step.
    pub good_range_presented: bool,
    /// Produced by a weakly fair formula: may vanish or be reducible.
    pub weakly_fair_caveat: bool,
    /// Reason a reduction step could not be applied.
    pub unknown: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FormalSum {
    pub constituents: Vec<Constituent>,
}

impl FormalSum {
    pub fn len(&self) -> usize {
        self.constituents.len()
    }
    pub fn is_empty(&self) -> bool {
        self.constituents.is_empty()
    }
    pub fn has_unknown(&self) -> bool {
        self.constituents.iter().any(|c| c.unknown.is_some())
    }
}

/// Sorted canonical order; multiplicities are kept.
pub fn canonicalize(fs: &FormalSum) -> FormalSum {
    let mut constituents: Vec<Constituent> = fs
        .constituents
        .iter()
        .map(|c| Constituent {
            param: c.param.canonical(),
            ..c.clone()
        })
        .collect();
    constituents.sort();
    FormalSum { constituents }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KvResult {
    Split(Vec<UqqConstituent>),
    Irreducible,
}

/// I_k(ℓ,t) = ⊕_{i=0}^k B_k^{(i)}(ℓ) when t = 0 and ℓ+k is even; otherwise irreducible.
pub fn kv_decompose(p: &DegPSParam) -> KvResult {
    if p.t_im.is_zero() && (p.ell + p.k as i64).rem_euclid(2) == 0 {
        KvResult::Split(
            (0..=p.k)
                .map(|i| UqqConstituent {
                    k: p.k,
                    ell: p.ell,
                    i,
                })
                .collect(),
        )
    } else {
        KvResult::Irreducible
    }
}

fn family_rank(f: &Family) -> Result<usize> {
    match f {
        Family::Sp { p, q } => Ok(p + q),
        Family::SoStar { n } => Ok(*n),
        other => Err(Error::Validation(format!(
            "expected Sp or SO*, got {other}"
        ))),
    }
}

fn a_g(f: &Family) -> i64 {
    crate::polarization::a_g(f)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftRecord {
    /// Cohomological degree S.
    pub degree: usize,
    /// Inner degenerate principal series I_k(ℓ + 2n − k + a_G, t).
    pub inner_k: usize,
    pub inner_ell: i64,
    pub inner_t_im: String,
    /// Size k of the θ-stable parabolic q_(k).
    pub parabolic_k: usize,
    pub c_threshold: String,
}

/// Ind_{P_(k)}(A_k(ℓ,t) ⊠ π) as cohomological induction from q_(k) of
/// the U(k,k) degenerate principal series, under ℓ ≥ 2c − 1.
pub fn lift_to_cohomological(
    family: &Family,
    k: usize,
    s: &SpehParam,
    tail_char: &Weight,
) -> Result<LiftRecord> {
    let n = family_rank(family)?;
    if k == 0 || 2 * k > n || s.k != k {
        return Err(Error::Validation(format!("k={k} does not fit rank {n}")));
    }
    let ell = match s.ell {
        Ell::Finite(l) if l >= 0 => l,
        _ => {
            return Err(Error::Hypothesis(format!(
                "the elliptic lift needs a natural number ell, got {}",
                s.ell
            )))
        }
    };
    let c = c_threshold(k, ell, s.t_im, tail_char)?;
    if q(ell) < q(2) * c - q(1) {
        return Err(Error::Hypothesis(format!(
            "ell = {ell} is below 2c - 1 with c = {}",
            crate::num::show_q(&c)
        )));
    }
    let (n_, k_) = (n as i64, k as i64);
    let degree = if matches!(family, Family::Sp { .. }) {
        k_ * (n_ - 2 * k_ + 1)
    } else {
        k_ * (2 * n_ - 3 * k_)
    };
    Ok(LiftRecord {
        degree: degree as usize,
        inner_k: k,
        inner_ell: ell + 2 * n_ - k_ + a_g(family),
        inner_t_im: crate::num::format_q(&s.t_im),
        parabolic_k: k,
        c_threshold: crate::num::format_q(&c),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RearrangeRecord {
    pub bound: String,
    pub ell_lhs: i64,
    pub ell_rhs: i64,
    pub lhs: String,
    pub rhs: String,
    pub good_range: bool,
}

/// Exchange of parabolic induction from GL(k,ℍ) and cohomological
/// induction from U(p',q'): [Ind ∘ R(ℓ)] = [R(ℓ − 2k) ∘ Ind].
pub fn rearrange(
    family: &Family,
    k: usize,
    p1: usize,
    q1: usize,
    ell: i64,
    v_norm: Q,
    z_norm: Q,
) -> Result<RearrangeRecord> {
    let mx = v_norm.max(z_norm);
    let (bound, lhs, rhs) = match *family {
        Family::Sp { p, q: qq } => {
            if p1 + q1 == 0 || p1 + k > p || q1 + k > qq {
                return Err(Error::Validation(format!(
                    "U({p1},{q1}) x GL({k},H) does not fit Sp({p},{qq})"
                )));
            }
            let b = mx - q((p - p1 - k) as i64) - q((qq - q1 - k) as i64);
            (
                b,
                format!("Ind_{{P_({k})}}^{{Sp({p},{qq})}}(A_{k} x R^{{Sp({},{})}}_{{{p1},{q1}}}({ell})(V))", p - k, qq - k),
                format!("R^{{Sp({p},{qq})}}_{{{p1},{q1}}}({})(Ind_{{P_({k})}}^{{Sp({},{})}}(A_{k} x V))", ell - 2 * k as i64, p - p1, qq - q1),
            )
        }
        Family::SoStar { n } => {
            if p1 + q1 == 0 || p1 + q1 + 2 * k > n {
                return Err(Error::Validation(format!(
                    "U({p1},{q1}) x GL({k},H) does not fit SO*({})",
                    2 * n
                )));
            }
            let b = mx - q((n - p1 - q1 - 2 * k) as i64) - q(1);
            (
                b,
                format!(
                    "Ind_{{P_({k})}}^{{SO*({})}}(A_{k} x R^{{SO*({})}}_{{{p1},{q1}}}({ell})(V))",
                    2 * n,
                    2 * (n - 2 * k)
                ),
                format!(
                    "R^{{SO*({})}}_{{{p1},{q1}}}({})(Ind_{{P_({k})}}^{{SO*({})}}(A_{k} x V))",
                    2 * n,
                    ell - 2 * k as i64,
                    2 * (n - p1 - q1)
                ),
            )
        }
        ref other => {
            return Err(Error::Validation(format!(
                "expected Sp or SO*, got {other}"
            )))
        }
    };
    if q(ell) < bound {
        return Err(Error::Hypothesis(format!(
            "ell = {ell} is below the bound {} (margin {})",
            crate::num::show_q(&bound),
            crate::num::show_q(&(q(ell) - bound))
        )));
    }
    Ok(RearrangeRecord {
        bound: crate::num::format_q(&bound),
        ell_lhs: ell,
        ell_rhs: ell - 2 * k as i64,
        lhs,
        rhs,
        good_range: true,
    })
}

fn check_step_hypotheses(d: &DFParam, s: i64, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Validation("k must be positive".into()));
    }
    if 2 * s + 1 < -(k as i64) {
        return Err(Error::Hypothesis(format!(
            "2s+1 = {} is below -k = -{k}",
            2 * s + 1
        )));
    }
    if df_range(d) == DfRange::OutOfRange {
        return Err(Error::Validation(format!(
            "{d} is outside the weakly fair range"
        )));
    }
    Ok(())
}

/// All j with ℓ̃_{j−1} ≥ s + (k+1)/2 ≥ ℓ̃_j (ℓ̃_0 = +∞); j = 1 when m = 0.
pub fn valid_js(d: &DFParam, s: i64, k: usize) -> Vec<usize> {
    let m = d.m();
    if m == 0 {
        return vec![1];
    }
    let thr = q(s) + qr(k as i64 + 1, 2);
    let lt = d.ell_tildes();
    (1..=m)
        .filter(|&j| (j == 1 || lt[j - 2] >= thr) && thr >= lt[j - 1])
        .collect()
}

/// Smallest admissible insertion index j.
pub fn choose_j(d: &DFParam, s: i64, k: usize) -> Result<usize> {
    check_step_hypotheses(d, s, k)?;
    valid_js(d, s, k).first().copied().ok_or_else(|| {
        Error::Hypothesis(format!(
            "no insertion index: threshold {} against ell-tilde {:?}",
            crate::num::show_q(&(q(s) + qr(k as i64 + 1, 2))),
            d.ell_tildes()
                .iter()
                .map(crate::num::show_q)
                .collect::<Vec<_>>()
        ))
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepConstituent {
    pub df: DFParam,
    pub good_range_presented: bool,
}

/// n'_j: size of the group receiving the two inserted blocks, i.e. the
/// blocks from j on, the core, and 2k.
fn n_prime(d: &DFParam, j: usize, k: usize) -> i64 {
    (d.stage_rank(j - 1) + 2 * k) as i64
}

/// The regularity hypothesis making the pieces good-range presentations.
pub fn good_presentation_holds(d: &DFParam, s: i64, k: usize, j: usize) -> bool {
    if s < 0 || df_range(d) != DfRange::Good {
        return false;
    }
    let np = n_prime(d, j, k);
    let shift = i64::from(!d.is_sp());
    let k_ = k as i64;
    let before = j == 1 || d.ells[j - 2] >= s - np + 3 * k_ + shift;
    let after = j > d.m() || s - np + 2 * k_ + shift >= d.ells[j - 1];
    before && after
}

/// Ind(A_k(2s+1, 0) ⊠ A(ℓ)) over the enlarged group, inserting two blocks
/// of signatures (i, k−i) and (k−i, i) before block j, for i = 0..k.
pub fn induce_speh_step_at(
    d: &DFParam,
    k: usize,
    s: i64,
    j: usize,
) -> Result<Vec<StepConstituent>> {
    check_step_hypotheses(d, s, k)?;
    if !valid_js(d, s, k).contains(&j) {
        return Err(Error::Hypothesis(format!(
            "j = {j} violates the insertion inequalities"
        )));
    }
    let family = match d.family {
        Family::Sp { p, q } => Family::Sp { p: p + k, q: q + k },
        Family::SoStar { n } => Family::SoStar { n: n + 2 * k },
        ref other => return Err(Error::Validation(format!("unsupported family {other}"))),
    };
    let np = n_prime(d, j, k);
    let shift = i64::from(!d.is_sp());
    let k_ = k as i64;
    let good = good_presentation_holds(d, s, k, j);
    let mut out = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let mut p = d.pp.p.clone();
        let mut qq = d.pp.q.clone();
        let mut ells: Vec<i64> = d
            .ells
            .iter()
            .enumerate()
            .map(|(r, l)| if r + 1 < j { l - 2 * k_ } else { *l })
            .collect();
        p.splice(j - 1..j - 1, [i, k - i]);
        qq.splice(j - 1..j - 1, [k - i, i]);
        ells.splice(j - 1..j - 1, [s - np + k_ + shift, s - np + 2 * k_ + shift]);
        // Empty blocks (i = 0 or i = k with one side zero) never occur:
        // each inserted block has size k.
        let df = DFParam::new(family.clone(), PairPartition { p, q: qq }, ells)?;
        out.push(StepConstituent {
            df,
            good_range_presented: good,
        });
    }
    Ok(out)
}

/// The step at the smallest admissible j.
pub fn induce_speh_step(
    d: &DFParam,
    k: usize,
    s_param: &SpehParam,
) -> Result<Vec<StepConstituent>> {
    let s = odd_s(s_param)?;
    if s_param.k != k {
        return Err(Error::Validation("factor size does not match k".into()));
    }
    let j = choose_j(d, s, k)?;
    induce_speh_step_at(d, k, s, j)
}

/// s with ℓ = 2s + 1, for a factor A_k(ℓ, 0) with odd ℓ.
pub fn odd_s(f: &SpehParam) -> Result<i64> {
    match f.ell {
        Ell::Finite(l) if f.is_odd_unitary_axis() => Ok((l - 1).div_euclid(2)),
        _ => Err(Error::Validation(format!(
            "{f} is not of the form A_k(2s+1, 0)"
        ))),
    }
}

fn absorption_key(f: &SpehParam) -> (Q, usize) {
    let s = odd_s(f).unwrap_or(0);
    (q(s) + qr(f.k as i64 + 1, 2), f.k)
}

fn leaf(ip: &InducedParam, good: bool, absorbed: bool, unknown: Option<String>) -> Constituent {
    let range = df_range(&ip.tail);
    Constituent {
        param: ip.canonical(),
        range,
        good_range_presented: absorbed && good,
        weakly_fair_caveat: absorbed && !good,
        unknown,
    }
}

/// Which odd factor is absorbed next, and where its blocks are inserted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct AbsorbOptions {
    /// Absorb the last listed odd factor first instead of the smallest
    /// threshold s + (k+1)/2.
    pub as_listed: bool,
    /// Take the largest admissible j instead of the smallest.
    pub largest_j: bool,
}

fn reduce_rec(
    ip: &InducedParam,
    opts: AbsorbOptions,
    good: bool,
    absorbed: bool,
    out: &mut Vec<Constituent>,
) {
    let mut odd = ip
        .factors
        .iter()
        .enumerate()
        .filter(|(_, f)| f.is_odd_unitary_axis());
    let pick = if opts.as_listed {
        odd.next_back().map(|(i, _)| i)
    } else {
        odd.min_by(|a, b| {
            absorption_key(a.1)
                .cmp(&absorption_key(b.1))
                .then(a.1.cmp(b.1))
        })
        .map(|(i, _)| i)
    };
    let Some(idx) = pick else {
        out.push(leaf(ip, good, absorbed, None));
        return;
    };
    let f = &ip.factors[idx];
    let step = odd_s(f).and_then(|s| {
        check_step_hypotheses(&ip.tail, s, f.k)?;
        let js = valid_js(&ip.tail, s, f.k);
        let j = if opts.largest_j {
            js.last()
        } else {
            js.first()
        };
        match j {
            Some(&j) => induce_speh_step_at(&ip.tail, f.k, s, j),
            None => choose_j(&ip.tail, s, f.k).map(|_| Vec::new()),
        }
    });
    let mut rest = ip.factors.clone();
    rest.remove(idx);
    match step {
        Ok(pieces) => {
            for pc in pieces {
                if vanishes_by_compact_singularity(&pc.df) {
                    continue;
                }
                let next = InducedParam {
                    family: ip.family.clone(),
                    factors: rest.clone(),
                    tail: pc.df,
                };
                reduce_rec(&next, opts, good && pc.good_range_presented, true, out);
            }
        }
        Err(e) => out.push(leaf(ip, good, absorbed, Some(e.to_string()))),
    }
}

/// Absorb every A_k(odd, 0) factor into the tail, smallest threshold
/// s + (k+1)/2 first, and return the canonical formal sum. Constituents
/// that vanish by compact singularity are dropped.
pub fn reduce_induced(ip: &InducedParam) -> Result<FormalSum> {
    reduce_induced_with(ip, AbsorbOptions::default())
}

pub fn reduce_induced_with(ip: &InducedParam, opts: AbsorbOptions) -> Result<FormalSum> {
    ip.validate()?;
    let mut out = Vec::new();
    reduce_rec(ip, opts, true, false, &mut out);
    Ok(canonicalize(&FormalSum { constituents: out }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Irreducible {
        reason: String,
    },
    ReducedTo {
        problem: InducedParam,
        reason: String,
    },
    Unknown {
        reason: String,
    },
}

pub const REASON_EMPTY: &str = "empty-reduced-problem";
pub const REASON_ONE_DIM: &str = "one-dimensional-inducing-data";
pub const REASON_CHAIN: &str = "elliptic-regularity-chain";

/// Irreducibility verdict for an induced module with no A_k(odd, 0) factor.
pub fn verdict(ip: &InducedParam) -> Result<Verdict> {
    ip.validate()?;
    if let Some(f) = ip.factors.iter().find(|f| f.is_odd_unitary_axis()) {
        return Err(Error::Validation(format!(
            "factor {f} has odd ell and t = 0; reduce it first"
        )));
    }
    let mut tau: Vec<SpehParam> = ip
        .factors
        .iter()
        .filter(|f| f.t_is_zero())
        .cloned()
        .collect();
    if tau.is_empty() {
        return Ok(Verdict::Irreducible {
            reason: REASON_EMPTY.into(),
        });
    }
    if df_range(&ip.tail) != DfRange::Good {
        return Ok(Verdict::Unknown {
            reason: format!(
                "tail {} is only weakly fair; its irreducibility is not established",
                ip.tail
            ),
        });
    }
    if tau.iter().all(|f| f.ell == Ell::NegInf) {
        return Ok(Verdict::Irreducible {
            reason: REASON_ONE_DIM.into(),
        });
    }
    // Outermost factor first: largest ℓ, one-dimensional factors innermost.
    tau.sort_by(|a, b| b.ell.cmp(&a.ell).then(a.cmp(b)));
    let a: usize = tau.iter().map(|f| f.k).sum();
    let problem = InducedParam {
        family: Family::SoStar { n: 2 * a },
        factors: tau.clone(),
        tail: DFParam::trivial(Family::SoStar { n: 0 })
            .map_err(|e| Error::Internal(e.to_string()))?,
    };
    let mut blocked = None;
    for (i, f) in tau.iter().enumerate() {
        let Ell::Finite(l) = f.ell else { break };
        let mut inner = Vec::new();
        for g in &tau[i + 1..] {
            inner.extend(speh_module_inf_char(g).coords);
        }
        let inner = Weight::new(Basis::E, inner);
        let c = c_threshold(f.k, l, f.t_im, &inner)?;
        if l < 0 || q(l) < q(2) * c - q(1) {
            blocked = Some(format!(
                "{f} fails ell >= max(0, 2c - 1) with c = {}",
                crate::num::show_q(&c)
            ));
            break;
        }
    }
    Ok(match blocked {
        None => Verdict::Irreducible {
            reason: REASON_CHAIN.into(),
        },
        Some(reason) => Verdict::ReducedTo {
            problem: problem.canonical(),
            reason,
        },
    })
}
