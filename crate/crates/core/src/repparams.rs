//! Representation parameters: quaternionic Speh modules, degenerate
//! principal series of U(k,k), derived functor modules of Sp(p,q) and
//! SO*(2n); their infinitesimal characters, ranges and norms.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::{q, qr, C, Q};
use crate::parabolic::PairPartition;
use crate::rootsys::{dominant_by_components, Basis, Component, Family, Weight, WeylType};

/// Bound on |ℓ| and on the parts of t, keeping i64 rationals safe.
pub const MAX_MAGNITUDE: i64 = 1_000_000;

/// ℓ ∈ ℤ ∪ {−∞}, with −∞ below every integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ell {
    NegInf,
    Finite(i64),
}

impl Ord for Ell {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Ell::NegInf, Ell::NegInf) => Ordering::Equal,
            (Ell::NegInf, _) => Ordering::Less,
            (_, Ell::NegInf) => Ordering::Greater,
            (Ell::Finite(a), Ell::Finite(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Ell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ell::NegInf => write!(f, "-inf"),
            Ell::Finite(l) => write!(f, "{l}"),
        }
    }
}

impl Ell {
    pub fn finite(&self) -> Option<i64> {
        match self {
            Ell::Finite(l) => Some(*l),
            Ell::NegInf => None,
        }
    }
    pub fn is_odd(&self) -> bool {
        matches!(self, Ell::Finite(l) if l.rem_euclid(2) == 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpehRange {
    Good,
    WeaklyFairOnly,
    OneDimensional,
}

/// A_k(ℓ, t) with t = √−1·t_im.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpehParam {
    pub k: usize,
    pub ell: Ell,
    pub t_im: Q,
}

impl SpehParam {
    pub fn new(k: usize, ell: Ell, t_im: Q) -> Result<Self> {
        let s = SpehParam { k, ell, t_im };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::Validation("Speh parameter needs k >= 1".into()));
        }
        if let Ell::Finite(l) = self.ell {
            if l < -(self.k as i64) {
                return Err(Error::Validation(format!(
                    "A_{}({l}, t) is outside the weakly fair range (need ell >= -{})",
                    self.k, self.k
                )));
            }
            if l > MAX_MAGNITUDE {
                return Err(Error::Validation("ell out of supported magnitude".into()));
            }
        }
        if self.t_im.numer().abs() > MAX_MAGNITUDE || *self.t_im.denom() > MAX_MAGNITUDE {
            return Err(Error::Validation("t out of supported magnitude".into()));
        }
        Ok(())
    }

    pub fn t_is_zero(&self) -> bool {
        self.t_im.is_zero()
    }

    /// Odd ℓ with t = 0: the factors absorbed by the reduction pipeline.
    pub fn is_odd_unitary_axis(&self) -> bool {
        self.ell.is_odd() && self.t_is_zero()
    }
}

impl fmt::Display for SpehParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "A_{}({}, {}i)",
            self.k,
            self.ell,
            crate::num::show_q(&self.t_im)
        )
    }
}

pub fn speh_range(s: &SpehParam) -> SpehRange {
    match s.ell {
        Ell::NegInf => SpehRange::OneDimensional,
        Ell::Finite(l) if l >= 0 => SpehRange::Good,
        Ell::Finite(_) => SpehRange::WeaklyFairOnly,
    }
}

/// ‖A_k(ℓ,t)‖: (2k+ℓ−1)/2 for ℓ odd and t = 0, else 0.
pub fn speh_norm(s: &SpehParam) -> Q {
    match s.ell {
        Ell::Finite(l) if s.is_odd_unitary_axis() => qr(2 * s.k as i64 + l - 1, 2),
        _ => Q::zero(),
    }
}

/// The displayed character λ_{ℓ,t} on E_1..E_{2k}:
/// λ(E_{2i−1}) = (k−1+ℓ+t)/2 − i + 1, λ(E_{2i}) = (k−1−ℓ+t)/2 − i + 1.
pub fn lambda_display(k: usize, ell: i64, t_im: Q) -> Weight {
    let k = k as i64;
    let t = t_im / q(2);
    let mut coords = Vec::with_capacity(2 * k as usize);
    for i in 1..=k {
        coords.push(C::new(qr(k - 1 + ell, 2) - q(i) + q(1), t));
        coords.push(C::new(qr(k - 1 - ell, 2) - q(i) + q(1), t));
    }
    Weight::new(Basis::E, coords)
}

/// Infinitesimal character of the one-dimensional A_k(−∞, t) = ξ̃_t:
/// ρ(gl(2k)) shifted by t/2, laid out as the display at ℓ = 0 read on
/// the Speh module (top half on odd slots, bottom half on even slots).
pub fn one_dim_inf_char(k: usize, t_im: Q) -> Weight {
    let k = k as i64;
    let t = t_im / q(2);
    let mut coords = Vec::with_capacity(2 * k as usize);
    for i in 1..=k {
        coords.push(C::new(qr(2 * k - 1, 2) - q(i) + q(1), t));
        coords.push(C::new(qr(1, 2) - q(i), t));
    }
    Weight::new(Basis::E, coords)
}

/// Infinitesimal character of the module A_k(ℓ,t) itself: the display
/// evaluated at ℓ + k (the ρ-shift of the GL(k,ℂ) Levi), or the
/// one-dimensional pattern for ℓ = −∞.
pub fn speh_module_inf_char(s: &SpehParam) -> Weight {
    match s.ell {
        Ell::Finite(l) => lambda_display(s.k, l + s.k as i64, s.t_im),
        Ell::NegInf => one_dim_inf_char(s.k, s.t_im),
    }
}

/// W-orbit of a weight, stored as its dominant representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InfinitesimalCharacter {
    pub ty: WeylType,
    pub weight: Weight,
}

impl InfinitesimalCharacter {
    /// Infinitesimal characters of different Cartans are identified
    /// through h*/W, so the basis tag of the input is dropped to F.
    pub fn new(ty: WeylType, raw: &Weight) -> Self {
        let comps = [Component {
            ty,
            offset: 0,
            size: raw.rank(),
        }];
        let (d, _) = dominant_by_components(&comps, raw);
        InfinitesimalCharacter {
            ty,
            weight: Weight::new(Basis::F, d.coords),
        }
    }
}

impl fmt::Display for InfinitesimalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.weight)
    }
}

/// The displayed λ concatenated with a tail character, as a W-orbit of
/// the given type.
pub fn inf_char_speh(
    k: usize,
    ell: Ell,
    t_im: Q,
    tail: &Weight,
    ty: WeylType,
) -> InfinitesimalCharacter {
    let head = match ell {
        Ell::Finite(l) => lambda_display(k, l, t_im),
        Ell::NegInf => one_dim_inf_char(k, t_im),
    };
    let raw = Weight::new(
        Basis::E,
        head.coords.iter().chain(&tail.coords).copied().collect(),
    );
    InfinitesimalCharacter::new(ty, &raw)
}

/// max({0} ∪ {|λ_π(E_i)| : {±λ_π(E_i) − (ℓ+t−1)/2} ∩ ℤ ≠ ∅}).
pub fn c_threshold(_k: usize, ell: i64, t_im: Q, tail: &Weight) -> Result<Q> {
    if !tail.is_real() {
        return Err(Error::Validation(
            "c threshold needs a real tail character".into(),
        ));
    }
    if !t_im.is_zero() {
        // (ℓ+t−1)/2 is not real, so no difference can be an integer.
        return Ok(Q::zero());
    }
    let shift = qr(ell - 1, 2);
    let mut c = Q::zero();
    for x in &tail.coords {
        let v = x.re;
        if (v - shift).is_integer() || (-v - shift).is_integer() {
            c = c.max(v.abs());
        }
    }
    Ok(c)
}

/// A_k(ℓ,t) for a degenerate principal series parameter I_k(ℓ,t).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegPSParam {
    pub k: usize,
    pub ell: i64,
    pub t_im: Q,
}

/// B_k^{(i)}(ℓ), ℓ + k even, 0 ≤ i ≤ k.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct UqqConstituent {
    pub k: usize,
    pub ell: i64,
    pub i: usize,
}

impl UqqConstituent {
    pub fn new(k: usize, ell: i64, i: usize) -> Result<Self> {
        if (ell + k as i64).rem_euclid(2) != 0 || i > k || k == 0 {
            return Err(Error::Validation(format!(
                "B_{k}^({i})({ell}) needs ell+k even, i <= k"
            )));
        }
        Ok(UqqConstituent { k, ell, i })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DfRange {
    Good,
    WeaklyFairOnly,
    OutOfRange,
}

/// Derived functor module A^{p,q}_{(p̲,q̲)}(ℓ_1..ℓ_m) or A^{2n}_{(p̲,q̲)}(ℓ_1..ℓ_m):
/// nested cohomological induction from U(p_1,q_1) × … × U(p_m,q_m) × core,
/// the core carrying its trivial representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DFParam {
    pub family: Family,
    pub pp: PairPartition,
    pub ells: Vec<i64>,
}

impl fmt::Display for DFParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A[{}]{{", self.family)?;
        for i in 0..self.pp.len() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({},{})", self.pp.p[i], self.pp.q[i])?;
        }
        write!(f, "}}(")?;
        for (i, l) in self.ells.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

impl DFParam {
    pub fn new(family: Family, pp: PairPartition, ells: Vec<i64>) -> Result<Self> {
        let d = DFParam { family, pp, ells };
        d.validate()?;
        Ok(d)
    }

    /// The trivial representation of the group (m = 0).
    pub fn trivial(family: Family) -> Result<Self> {
        DFParam::new(family, PairPartition::empty(), vec![])
    }

    pub fn validate(&self) -> Result<()> {
        if !self.pp.is_well_formed() {
            return Err(Error::Validation(
                "pair partition needs equal lengths and p_j + q_j > 0".into(),
            ));
        }
        if self.ells.len() != self.pp.len() {
            return Err(Error::Validation(format!(
                "{} ells for {} blocks",
                self.ells.len(),
                self.pp.len()
            )));
        }
        let (sp, sq) = self.pp.sums();
        match self.family {
            Family::Sp { p, q } => {
                if sp > p || sq > q {
                    return Err(Error::Validation(format!(
                        "blocks of signature ({sp},{sq}) do not fit in Sp({p},{q})"
                    )));
                }
            }
            Family::SoStar { n } => {
                if sp.saturating_add(sq) > n {
                    return Err(Error::Validation(format!(
                        "blocks of total size {} do not fit in SO*({})",
                        sp.saturating_add(sq),
                        n.saturating_mul(2)
                    )));
                }
            }
            ref f => {
                return Err(Error::Validation(format!(
                    "derived functor parameters are defined for Sp and SO* only, not {f}"
                )))
            }
        }
        if self.ells.iter().any(|l| l.abs() > MAX_MAGNITUDE) {
            return Err(Error::Validation("ell out of supported magnitude".into()));
        }
        Ok(())
    }

    pub fn is_sp(&self) -> bool {
        matches!(self.family, Family::Sp { .. })
    }

    pub fn rank(&self) -> usize {
        match self.family {
            Family::Sp { p, q } => p + q,
            Family::SoStar { n } => n,
            _ => 0,
        }
    }

    pub fn m(&self) -> usize {
        self.pp.len()
    }

    pub fn block_size(&self, i: usize) -> usize {
        self.pp.p[i] + self.pp.q[i]
    }

    /// Rank of the group at stage i (0-based): N minus earlier blocks.
    pub fn stage_rank(&self, i: usize) -> usize {
        self.rank() - (0..i).map(|r| self.block_size(r)).sum::<usize>()
    }

    pub fn core_rank(&self) -> usize {
        self.stage_rank(self.m())
    }

    pub fn weyl_type(&self) -> WeylType {
        if self.is_sp() {
            WeylType::C
        } else {
            WeylType::D
        }
    }

    /// δ_i: centre of block i's infinitesimal-character coordinates minus ℓ_i.
    pub fn delta(&self, i: usize) -> Q {
        let v = q(self.stage_rank(i) as i64) - qr(self.block_size(i) as i64 - 1, 2);
        if self.is_sp() {
            v
        } else {
            v - q(1)
        }
    }

    pub fn ell_tilde(&self, i: usize) -> Q {
        q(self.ells[i]) + self.delta(i)
    }

    pub fn ell_tildes(&self) -> Vec<Q> {
        (0..self.m()).map(|i| self.ell_tilde(i)).collect()
    }

    /// Block i coordinates ℓ_i + N_i + 1 − j (Sp) or ℓ_i + N_i − j (SO*).
    pub fn block_coords(&self, i: usize) -> Vec<Q> {
        let top = self.ells[i] + self.stage_rank(i) as i64 + i64::from(self.is_sp());
        (1..=self.block_size(i) as i64)
            .map(|j| q(top - j))
            .collect()
    }

    /// ρ of the core trivial representation.
    pub fn core_rho(&self) -> Vec<Q> {
        let c = self.core_rank() as i64;
        if self.is_sp() {
            (0..c).map(|j| q(c - j)).collect()
        } else {
            (0..c).map(|j| q(c - 1 - j)).collect()
        }
    }
}

pub fn df_range(d: &DFParam) -> DfRange {
    let m = d.m();
    let good = (0..m).all(|i| d.ells[i] >= 0 && (i + 1 == m || d.ells[i] >= d.ells[i + 1]));
    if good {
        return DfRange::Good;
    }
    let lt = d.ell_tildes();
    let wf = (0..m).all(|i| !lt[i].is_negative() && (i + 1 == m || lt[i] >= lt[i + 1]));
    if wf {
        DfRange::WeaklyFairOnly
    } else {
        DfRange::OutOfRange
    }
}

/// Raw infinitesimal character in the F-basis, composed stage by stage
/// from the core outward: at each stage the block receives
/// [ℓ,λ](F_j) = ℓ + (n'+1)/2 − j plus δ(ũ) = (2N − n' ± 1)/2.
///
/// For SO* the last q_i coordinates of each block are negated, matching
/// the embedding of U(p_i,q_i) whose U(q_i) factor sits conjugated inside
/// the maximal compact U(n).
pub fn df_raw_inf_char(d: &DFParam) -> Weight {
    let mut lam: Vec<C> = d.core_rho().into_iter().map(C::real).collect();
    for i in (0..d.m()).rev() {
        let nb = d.block_size(i) as i64;
        let big_n = d.stage_rank(i) as i64;
        let du = if d.is_sp() {
            qr(2 * big_n - nb + 1, 2)
        } else {
            qr(2 * big_n - nb - 1, 2)
        };
        let mut block: Vec<C> = (1..=nb)
            .map(|j| C::real(q(d.ells[i]) + qr(nb + 1, 2) - q(j) + du))
            .collect();
        if !d.is_sp() {
            for c in block.iter_mut().skip(d.pp.p[i]) {
                *c = -*c;
            }
        }
        block.extend(lam);
        lam = block;
    }
    Weight::new(Basis::F, lam)
}

pub fn df_inf_char(d: &DFParam) -> InfinitesimalCharacter {
    InfinitesimalCharacter::new(d.weyl_type(), &df_raw_inf_char(d))
}

/// max({0} ∪ {|λ_j| : λ_j ∈ ℤ, j in window}).
pub fn df_norm(lambda: &Weight, window: std::ops::Range<usize>) -> Q {
    lambda.coords[window.start.min(lambda.rank())..window.end.min(lambda.rank())]
        .iter()
        .filter(|c| c.is_integer())
        .map(|c| c.re.abs())
        .max()
        .unwrap_or_else(Q::zero)
}

/// Two adjacent blocks with the same center that sit in the same compact
/// factor (both of signature (a,0), or both (0,b)). Inducing in stages
/// through the merged compact U(a+b) passes through a singular finite
/// dimensional module, so the whole module is zero.
pub fn vanishes_by_compact_singularity(d: &DFParam) -> bool {
    let lt = d.ell_tildes();
    (0..d.m().saturating_sub(1)).any(|i| {
        let both_p = d.pp.q[i] == 0 && d.pp.q[i + 1] == 0;
        let both_q = d.pp.p[i] == 0 && d.pp.p[i + 1] == 0;
        lt[i] == lt[i + 1] && (both_p || both_q)
    })
}
