//! θ-stable Cartan classes H_J of Sp(p,q) and SO*(2n), Cayley transforms,
//! cross action, the parity test, W(G;H) and the coherent continuation count.
//!
//! Coordinates are the ē-coordinates obtained by transporting the split
//! Cartan through the Cayley transforms in J. Pair i (1-based) occupies
//! coordinates 2i−1, 2i; α_i = e_{2i−1} + e_{2i}.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::num::{factorial, q, qr, C, Q};
use crate::rootsys::{
    build_group, generate_closure, weyl_elements, weyl_group_order, Basis, Family, Grading,
    GroupDatum, Root, RootKind, SignedPermutation, Weight,
};

/// Default cap on W(G;H) closures.
pub const CLOSURE_BOUND: usize = 400_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanClass {
    pub family: Family,
    /// Pair indices (1-based) whose α_i has been made imaginary.
    pub j: BTreeSet<usize>,
}

fn pairs_of(family: &Family) -> Result<(usize, usize)> {
    match *family {
        Family::Sp { p, q } => Ok((p + q, q)),
        Family::SoStar { n } => Ok((n, n / 2)),
        ref other => Err(Error::Unsupported(format!("Cartan classes of {other}"))),
    }
}

impl CartanClass {
    pub fn new(family: Family, j: BTreeSet<usize>) -> Result<Self> {
        build_group(family.clone())?;
        let (_, m) = pairs_of(&family)?;
        if let Some(bad) = j.iter().find(|&&i| i == 0 || i > m) {
            return Err(Error::Validation(format!(
                "pair index {bad} outside 1..{m}"
            )));
        }
        Ok(CartanClass { family, j })
    }

    pub fn split(family: Family) -> Result<Self> {
        Self::new(family, BTreeSet::new())
    }

    pub fn rank(&self) -> usize {
        pairs_of(&self.family).map(|x| x.0).unwrap_or(0)
    }

    /// Number m of orthogonal real roots α_i on the split Cartan.
    pub fn m(&self) -> usize {
        pairs_of(&self.family).map(|x| x.1).unwrap_or(0)
    }

    fn is_sp(&self) -> bool {
        matches!(self.family, Family::Sp { .. })
    }

    /// Pairs still carrying a real root.
    pub fn real_pairs(&self) -> Vec<usize> {
        (1..=self.m()).filter(|i| !self.j.contains(i)).collect()
    }

    /// θ-fixed coordinates (0-based): pairs in J and the unpaired tail.
    pub fn fixed_coords(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for &i in &self.j {
            out.extend([2 * i - 2, 2 * i - 1]);
        }
        out.extend(2 * self.m()..self.rank());
        out.sort_unstable();
        out
    }

    pub fn theta(&self) -> SignedPermutation {
        let mut w = SignedPermutation::identity(self.rank());
        for i in self.real_pairs() {
            let (a, b) = (2 * i - 2, 2 * i - 1);
            w.perm[a] = b;
            w.perm[b] = a;
            w.signs[a] = -1;
            w.signs[b] = -1;
        }
        w
    }

    /// Sp: a Cayley pair carries x = (1,0), the compact tail 0.
    /// SO*: x = 1/2 on every coordinate.
    pub fn grading(&self) -> Grading {
        let n = self.rank();
        let x = if self.is_sp() {
            let mut x = vec![Q::zero(); n];
            for &i in &self.j {
                x[2 * i - 2] = Q::one();
            }
            x
        } else {
            vec![qr(1, 2); n]
        };
        let pairs = self
            .real_pairs()
            .into_iter()
            .map(|i| (2 * i - 2, 2 * i - 1))
            .collect();
        Grading { pairs, x }
    }

    pub fn classify(&self, g: &GroupDatum, alpha: &Root) -> Result<RootKind> {
        crate::rootsys::root_classification(g, &self.theta(), alpha)
    }

    pub fn is_noncompact_imaginary(&self, g: &GroupDatum, alpha: &Root) -> Result<bool> {
        Ok(self.classify(g, alpha)? == RootKind::Imaginary && self.grading().is_noncompact(alpha))
    }

    pub fn is_compact_imaginary(&self, g: &GroupDatum, alpha: &Root) -> Result<bool> {
        Ok(self.classify(g, alpha)? == RootKind::Imaginary && !self.grading().is_noncompact(alpha))
    }
}

impl fmt::Display for CartanClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H_{{")?;
        for (n, i) in self.j.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "a{i}")?;
        }
        write!(f, "}}[{}]", self.family)
    }
}

/// Representatives H_{J(i)}, J(i) = {α_m, …, α_{m−i+1}}, 0 ≤ i ≤ m − k*_s.
pub fn enumerate_cartans(family: &Family, kappa_total: usize) -> Result<Vec<CartanClass>> {
    let (_, m) = pairs_of(family)?;
    if kappa_total > m {
        return Err(Error::Validation(format!(
            "k*_s = {kappa_total} exceeds m = {m}"
        )));
    }
    (0..=m - kappa_total)
        .map(|i| CartanClass::new(family.clone(), (m - i + 1..=m).collect()))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RegularCharacter {
    pub cartan: CartanClass,
    pub lambda: Weight,
    /// Inverse Cayley branches taken, by pair index.
    pub branches: Vec<(usize, Branch)>,
}

/// Every coordinate integral, half-integral, or non-real.
fn check_supported(lambda: &Weight) -> Result<()> {
    for c in &lambda.coords {
        if c.is_real() && !c.is_integer() && !c.is_half_odd() {
            return Err(Error::Unsupported(format!(
                "coordinate {c} is neither integral, half-integral nor non-real"
            )));
        }
    }
    Ok(())
}

pub fn is_regular(g: &GroupDatum, lambda: &Weight) -> bool {
    g.positive.iter().all(|b| !lambda.pair_root(b).is_zero())
}

/// (d1) integral on θ-fixed coordinates, (d2) integral differences on pairs.
pub fn satisfies_integrality(cartan: &CartanClass, lambda: &Weight) -> bool {
    let d1 = cartan
        .fixed_coords()
        .iter()
        .all(|&a| lambda.coords[a].is_integer());
    let d2 = cartan
        .real_pairs()
        .iter()
        .all(|&i| (lambda.coords[2 * i - 2] - lambda.coords[2 * i - 1]).is_integer());
    d1 && d2
}

impl RegularCharacter {
    pub fn new(cartan: CartanClass, lambda: Weight) -> Result<Self> {
        let g = build_group(cartan.family.clone())?;
        if lambda.rank() != cartan.rank() {
            return Err(Error::Validation(format!(
                "weight has {} coordinates, group rank is {}",
                lambda.rank(),
                cartan.rank()
            )));
        }
        if !is_regular(&g, &lambda) {
            return Err(Error::Validation(format!("{lambda} is singular")));
        }
        if !satisfies_integrality(&cartan, &lambda) {
            return Err(Error::Validation(format!(
                "{lambda} fails the integrality pattern on {cartan}"
            )));
        }
        Ok(RegularCharacter {
            cartan,
            lambda,
            branches: vec![],
        })
    }

    /// Transport to the representative H_{J(|J|)} by a pair permutation.
    pub fn to_representative(&self) -> RegularCharacter {
        let m = self.cartan.m();
        let k = self.cartan.j.len();
        let target: Vec<usize> = (m - k + 1..=m).collect();
        let source: Vec<usize> = self.cartan.j.iter().copied().collect();
        if source == target {
            return self.clone();
        }
        let rest_src: Vec<usize> = self.cartan.real_pairs();
        let rest_tgt: Vec<usize> = (1..=m - k).collect();
        let mut w = SignedPermutation::identity(self.cartan.rank());
        for (s, t) in source
            .iter()
            .zip(&target)
            .chain(rest_src.iter().zip(&rest_tgt))
        {
            w.perm[2 * s - 2] = 2 * t - 2;
            w.perm[2 * s - 1] = 2 * t - 1;
        }
        let branches = self
            .branches
            .iter()
            .map(|&(i, b)| (w.perm[2 * i - 2] / 2 + 1, b))
            .collect();
        RegularCharacter {
            cartan: CartanClass {
                family: self.cartan.family.clone(),
                j: target.into_iter().collect(),
            },
            lambda: w.act(&self.lambda),
            branches,
        }
    }
}

impl fmt::Display for RegularCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.cartan, self.lambda)?;
        for (i, b) in &self.branches {
            write!(f, "{}{i}", if *b == Branch::Plus { "+" } else { "-" })?;
        }
        Ok(())
    }
}

fn transposition(n: usize, a: usize, b: usize) -> SignedPermutation {
    let mut w = SignedPermutation::identity(n);
    w.perm[a] = b;
    w.perm[b] = a;
    w
}

/// Cayley transform through a noncompact imaginary root. A root other
/// than ±α_i (i ∈ J) is first moved onto one by a product of compact
/// imaginary reflections.
pub fn cayley(rc: &RegularCharacter, alpha: &Root) -> Result<RegularCharacter> {
    let g = build_group(rc.cartan.family.clone())?;
    if !rc.cartan.is_noncompact_imaginary(&g, alpha)? {
        return Err(Error::Validation(format!(
            "{alpha} is not noncompact imaginary on {}",
            rc.cartan
        )));
    }
    let n = rc.cartan.rank();
    let nz: Vec<usize> = (0..n).filter(|&i| alpha.0[i] != 0).collect();
    let (mut a, mut b) = match nz.as_slice() {
        [a, b] => (*a, *b),
        _ => {
            return Err(Error::Internal(format!(
                "noncompact imaginary {alpha} is not of the form ±e_a±e_b"
            )))
        }
    };
    let x = rc.cartan.grading().x;
    if rc.cartan.is_sp() && x[a] < x[b] {
        std::mem::swap(&mut a, &mut b);
    }
    let i = *rc.cartan.j.iter().next().ok_or_else(|| {
        Error::Internal(format!(
            "{} has a noncompact imaginary root but J is empty",
            rc.cartan
        ))
    })?;
    let (t1, t2) = (2 * i - 2, 2 * i - 1);
    let mut w = SignedPermutation::identity(n);
    if a != t1 {
        w = transposition(n, a, t1).compose(&w);
        if b == t1 {
            b = a;
        }
    }
    if b != t2 {
        w = transposition(n, b, t2).compose(&w);
    }
    let mut moved = w.act_root(alpha);
    if rc.cartan.is_sp() {
        // Long roots are compact: sign changes on fixed coordinates lie in W(G;H).
        for c in [t1, t2] {
            if moved.0[c] < 0 {
                let mut s = SignedPermutation::identity(n);
                s.signs[c] = -1;
                w = s.compose(&w);
            }
        }
        moved = w.act_root(alpha);
    }
    let ai = Root::pair(n, t1, 1, t2, 1);
    if moved != ai && moved != ai.neg() {
        return Err(Error::Internal(format!("failed to move {alpha} onto {ai}")));
    }
    let grading = rc.cartan.grading();
    let wx = w.act(&Weight::from_q(Basis::E, &grading.x));
    // Only x mod 2 matters for compactness.
    let same = |u: &C, v: &Q| {
        let d = u.re - *v;
        d.is_integer() && d.to_integer().rem_euclid(2) == 0
    };
    if wx.coords.iter().zip(&grading.x).any(|(u, v)| !same(u, v)) {
        return Err(Error::Internal(
            "conjugating element does not preserve the grading".into(),
        ));
    }
    let mut j = rc.cartan.j.clone();
    j.remove(&i);
    Ok(RegularCharacter {
        cartan: CartanClass {
            family: rc.cartan.family.clone(),
            j,
        },
        lambda: w.act(&rc.lambda),
        branches: rc
            .branches
            .iter()
            .filter(|(p, _)| *p != i)
            .cloned()
            .collect(),
    })
}

fn real_pair_index(rc: &RegularCharacter, g: &GroupDatum, alpha: &Root) -> Result<usize> {
    if rc.cartan.classify(g, alpha)? != RootKind::Real {
        return Err(Error::Validation(format!(
            "{alpha} is not real on {}",
            rc.cartan
        )));
    }
    rc.cartan
        .real_pairs()
        .into_iter()
        .find(|&i| {
            let ai = Root::pair(rc.cartan.rank(), 2 * i - 2, 1, 2 * i - 1, 1);
            *alpha == ai || *alpha == ai.neg()
        })
        .ok_or_else(|| Error::Internal(format!("real root {alpha} is not some ±α_i")))
}

/// Parity condition for the real root ±α_i, restricted to weights whose
/// coordinates are integral, half-integral or non-real: it holds exactly
/// when both coordinates of pair i are integers.
pub fn parity_special(rc: &RegularCharacter, alpha: &Root) -> Result<bool> {
    let g = build_group(rc.cartan.family.clone())?;
    let i = real_pair_index(rc, &g, alpha)?;
    check_supported(&rc.lambda)?;
    let (u, v) = (rc.lambda.coords[2 * i - 2], rc.lambda.coords[2 * i - 1]);
    Ok(u.is_integer() && v.is_integer())
}

/// The two inverse Cayley transforms through a real root with parity.
pub fn inverse_cayley(
    rc: &RegularCharacter,
    alpha: &Root,
) -> Result<(RegularCharacter, RegularCharacter)> {
    if !parity_special(rc, alpha)? {
        return Err(Error::Hypothesis(format!(
            "{alpha} fails the parity condition for {}",
            rc.lambda
        )));
    }
    let g = build_group(rc.cartan.family.clone())?;
    let i = real_pair_index(rc, &g, alpha)?;
    let mut j = rc.cartan.j.clone();
    j.insert(i);
    let cartan = CartanClass {
        family: rc.cartan.family.clone(),
        j,
    };
    let make = |b| {
        let mut branches = rc.branches.clone();
        branches.push((i, b));
        RegularCharacter {
            cartan: cartan.clone(),
            lambda: rc.lambda.clone(),
            branches,
        }
    };
    Ok((make(Branch::Plus), make(Branch::Minus)))
}

/// λ ↦ wλ for w in W with wλ − λ in the root lattice.
pub fn cross_action(w: &SignedPermutation, rc: &RegularCharacter) -> Result<RegularCharacter> {
    let g = build_group(rc.cartan.family.clone())?;
    if !g.contains_weyl_element(w) {
        return Err(Error::Validation("element is not in the Weyl group".into()));
    }
    let mu = w.act(&rc.lambda);
    let diff: Vec<C> = mu
        .coords
        .iter()
        .zip(&rc.lambda.coords)
        .map(|(a, b)| *a - *b)
        .collect();
    let in_lattice = diff.iter().all(|d| d.is_integer()) && {
        let s: Q = diff.iter().map(|d| d.re).sum();
        rc.cartan.is_sp() || s.to_integer().rem_euclid(2) == 0
    };
    if !in_lattice {
        return Err(Error::Validation(
            "element is not in the integral Weyl group".into(),
        ));
    }
    Ok(RegularCharacter {
        cartan: rc.cartan.clone(),
        lambda: mu,
        branches: rc.branches.clone(),
    })
}

/// Generators of W(G;H_J): real reflections s_{α_i} and the compact
/// s_{e_{2i−1}−e_{2i}} on real pairs, the pair swaps w_{b,c}, and the
/// reflections in compact imaginary roots on the fixed coordinates.
pub fn wgh_generators(cartan: &CartanClass) -> Result<Vec<SignedPermutation>> {
    let g = build_group(cartan.family.clone())?;
    let n = cartan.rank();
    let real = cartan.real_pairs();
    let mut gens = Vec::new();
    for &i in &real {
        gens.push(SignedPermutation::reflection(&Root::pair(
            n,
            2 * i - 2,
            1,
            2 * i - 1,
            1,
        )));
        gens.push(SignedPermutation::reflection(&Root::pair(
            n,
            2 * i - 2,
            1,
            2 * i - 1,
            -1,
        )));
    }
    for (x, &b) in real.iter().enumerate() {
        for &c in &real[x + 1..] {
            let mut w = SignedPermutation::identity(n);
            for d in 0..2 {
                w.perm[2 * b - 2 + d] = 2 * c - 2 + d;
                w.perm[2 * c - 2 + d] = 2 * b - 2 + d;
            }
            gens.push(w);
        }
    }
    let fixed: HashSet<usize> = cartan.fixed_coords().into_iter().collect();
    for r in &g.positive {
        let supp_fixed = (0..n).all(|i| r.0[i] == 0 || fixed.contains(&i));
        if supp_fixed && cartan.is_compact_imaginary(&g, r)? {
            gens.push(SignedPermutation::reflection(r));
        }
    }
    Ok(gens)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WghOrder {
    pub order: BigUint,
    pub generators: Vec<SignedPermutation>,
}

/// Order of the closure of [`wgh_generators`], failing past `bound`.
pub fn wgh_order(cartan: &CartanClass, bound: usize) -> Result<WghOrder> {
    let generators = wgh_generators(cartan)?;
    let closure = generate_closure(cartan.rank(), &generators, bound)?;
    Ok(WghOrder {
        order: BigUint::from(closure.len()),
        generators,
    })
}

/// Closed form: |W(compact imaginary on fixed coordinates)| · r!·4^r, r real pairs.
pub fn wgh_order_formula(cartan: &CartanClass) -> BigUint {
    let r = cartan.real_pairs().len() as u64;
    let f = cartan.fixed_coords();
    let compact = if cartan.is_sp() {
        let x = cartan.grading().x;
        let ones = f.iter().filter(|&&a| x[a] == Q::one()).count() as u64;
        let zeros = f.len() as u64 - ones;
        factorial(ones)
            * BigUint::from(2u32).pow(ones as u32)
            * factorial(zeros)
            * BigUint::from(2u32).pow(zeros as u32)
    } else {
        factorial(f.len() as u64)
    };
    compact * factorial(r) * BigUint::from(4u32).pow(r as u32)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDimension {
    pub m: usize,
    pub weyl_order: BigUint,
    pub wgh_order: BigUint,
    /// "closure" or "formula".
    pub wgh_method: &'static str,
    pub value: BigUint,
}

/// Largest m for which block_dimension closes the generators explicitly.
pub const CLOSURE_MAX_M: usize = 3;

/// card(W / W(G;ˢH)) for SO*(4m).
pub fn block_dimension(m: usize) -> Result<BlockDimension> {
    if m == 0 {
        return Err(Error::Validation("m must be positive".into()));
    }
    let family = Family::SoStar { n: 2 * m };
    let g = build_group(family.clone())?;
    let split = CartanClass::split(family)?;
    let (wgh, method) = if m <= CLOSURE_MAX_M {
        (wgh_order(&split, CLOSURE_BOUND)?.order, "closure")
    } else {
        (wgh_order_formula(&split), "formula")
    };
    let w = weyl_group_order(&g);
    if (&w % &wgh) != BigUint::zero() {
        return Err(Error::Internal(format!(
            "|W(G;H)| = {wgh} does not divide |W| = {w}"
        )));
    }
    Ok(BlockDimension {
        m,
        value: &w / &wgh,
        weyl_order: w,
        wgh_order: wgh,
        wgh_method: method,
    })
}

/// ˢλ = Σ (2n − 2i + 1)/2 · e_i on SO*(2n).
pub fn split_lambda(n: usize) -> Weight {
    let n_ = n as i64;
    Weight::from_q(
        Basis::E,
        &(1..=n_)
            .map(|i| qr(2 * n_ - 2 * i + 1, 2))
            .collect::<Vec<_>>(),
    )
}

/// A regular weight in the normal form of the reduction: half-integral on
/// the first 2·k*_h coordinates, non-real on the rest of the GL part,
/// integral on the tail.
pub fn normal_form_lambda(family: &Family, k_h: usize, k_s: usize) -> Result<Weight> {
    let (n, m) = pairs_of(family)?;
    if k_h > k_s || k_s > m {
        return Err(Error::Validation(format!("need k*_h <= k*_s <= {m}")));
    }
    let tail = (n - 2 * k_s) as i64;
    let mut coords = Vec::with_capacity(n);
    for j in 0..2 * k_h as i64 {
        coords.push(C::real(q(tail + 2 * k_h as i64 - j) - qr(1, 2)));
    }
    for p in 0..(k_s - k_h) as i64 {
        coords.push(C::new(q(1), q(p + 1)));
        coords.push(C::new(q(0), q(p + 1)));
    }
    for j in 0..tail {
        coords.push(C::int(tail - j));
    }
    Ok(Weight::new(Basis::E, coords))
}

/// Largest rank for brute-force orbit enumeration.
pub const ENUMERATION_MAX_RANK: usize = 6;

fn orbit_min(elems: &[SignedPermutation], mu: &Weight) -> Weight {
    elems
        .iter()
        .map(|w| w.act(mu))
        .min()
        .expect("group is nonempty")
}

/// W(G;H)-orbit representatives (orbit minima) of the integral regular
/// characters on `cartan` whose weight lies in W·λ.
pub fn enumerate_regular_characters(cartan: &CartanClass, lambda: &Weight) -> Result<Vec<Weight>> {
    let g = build_group(cartan.family.clone())?;
    let n = cartan.rank();
    if n > ENUMERATION_MAX_RANK {
        return Err(Error::Unsupported(format!(
            "rank {n} above the enumeration limit {ENUMERATION_MAX_RANK}"
        )));
    }
    if lambda.rank() != n {
        return Err(Error::Validation(
            "weight rank does not match the group".into(),
        ));
    }
    check_supported(lambda)?;
    if !is_regular(&g, lambda) {
        return Err(Error::Validation(format!("{lambda} is singular")));
    }
    let raw: BTreeSet<Weight> = weyl_elements(&g.components, n)
        .iter()
        .map(|w| w.act(lambda))
        .collect();
    let wgh: Vec<SignedPermutation> = generate_closure(n, &wgh_generators(cartan)?, CLOSURE_BOUND)?
        .into_iter()
        .collect();
    let mut reps = BTreeSet::new();
    for mu in raw.iter().filter(|mu| satisfies_integrality(cartan, mu)) {
        reps.insert(orbit_min(&wgh, mu));
    }
    Ok(reps.into_iter().collect())
}

/// Canonical form of a character modulo W(G;H) on its representative class.
pub fn character_key(rc: &RegularCharacter) -> Result<(CartanClass, Weight)> {
    let r = rc.to_representative();
    let wgh: Vec<SignedPermutation> =
        generate_closure(r.cartan.rank(), &wgh_generators(&r.cartan)?, CLOSURE_BOUND)?
            .into_iter()
            .collect();
    let key = orbit_min(&wgh, &r.lambda);
    Ok((r.cartan, key))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyGraph {
    /// Classes by |J|.
    pub classes: Vec<usize>,
    /// Edges (from |J|, to |J|) realised by some Cayley transform.
    pub edges: BTreeSet<(usize, usize)>,
}

impl CayleyGraph {
    pub fn is_path(&self) -> bool {
        let expect: BTreeSet<(usize, usize)> =
            self.classes.windows(2).map(|w| (w[1], w[0])).collect();
        self.edges == expect
    }
}

/// Apply every noncompact imaginary Cayley transform to a character on
/// each class representative and record which classes are reached.
pub fn cayley_graph(family: &Family, kappa_total: usize, lambda: &Weight) -> Result<CayleyGraph> {
    let g = build_group(family.clone())?;
    let classes = enumerate_cartans(family, kappa_total)?;
    let mut edges = BTreeSet::new();
    for c in &classes {
        let rc = RegularCharacter::new(c.clone(), lambda.clone())?;
        for alpha in &g.roots {
            if c.is_noncompact_imaginary(&g, alpha)? {
                let out = cayley(&rc, alpha)?;
                edges.insert((c.j.len(), out.cartan.j.len()));
            }
        }
    }
    let mut sizes: Vec<usize> = classes.iter().map(|c| c.j.len()).collect();
    sizes.sort_unstable();
    Ok(CayleyGraph {
        classes: sizes,
        edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn so(n: usize) -> Family {
        Family::SoStar { n }
    }

    #[test]
    fn cartan_counts() {
        assert_eq!(enumerate_cartans(&so(4), 0).unwrap().len(), 3);
        assert_eq!(
            enumerate_cartans(&Family::Sp { p: 2, q: 2 }, 1)
                .unwrap()
                .len(),
            2
        );
        assert_eq!(enumerate_cartans(&so(4), 2).unwrap().len(), 1);
    }

    #[test]
    fn wgh_examples() {
        let o = |m: usize| {
            wgh_order(&CartanClass::split(so(2 * m)).unwrap(), CLOSURE_BOUND)
                .unwrap()
                .order
        };
        assert_eq!(o(1), BigUint::from(4u32));
        assert_eq!(o(2), BigUint::from(32u32));
        assert_eq!(o(3), BigUint::from(384u32));
    }

    #[test]
    fn block_dimension_examples() {
        let v = |m| block_dimension(m).unwrap().value;
        assert_eq!(v(1), BigUint::from(1u32));
        assert_eq!(v(2), BigUint::from(6u32));
        assert_eq!(v(3), BigUint::from(60u32));
    }

    #[test]
    fn split_enumeration_m2() {
        let c = CartanClass::split(so(4)).unwrap();
        let reps = enumerate_regular_characters(&c, &split_lambda(4)).unwrap();
        assert_eq!(reps.len(), 6);
        // Other Cartans are not integral for ˢλ.
        for c in enumerate_cartans(&so(4), 0).unwrap().into_iter().skip(1) {
            assert!(enumerate_regular_characters(&c, &split_lambda(4))
                .unwrap()
                .is_empty());
        }
    }

    #[test]
    fn cayley_round_trip() {
        let fam = Family::Sp { p: 3, q: 2 };
        let lam = normal_form_lambda(&fam, 0, 0).unwrap();
        let c = CartanClass::new(fam.clone(), [2].into()).unwrap();
        let rc = RegularCharacter::new(c, lam).unwrap();
        let g = build_group(fam).unwrap();
        let a2 = Root::pair(5, 2, 1, 3, 1);
        assert_eq!(rc.cartan.classify(&g, &a2).unwrap(), RootKind::Imaginary);
        let down = cayley(&rc, &a2).unwrap();
        assert!(down.cartan.j.is_empty());
        assert_eq!(down.cartan.classify(&g, &a2).unwrap(), RootKind::Real);
        let (p, m) = inverse_cayley(&down, &a2).unwrap();
        assert_eq!(p.cartan, rc.cartan);
        assert_eq!(p.lambda, m.lambda);
        assert_ne!(p, m);
        // e3 - e4 is compact there.
        let b = Root::pair(5, 2, 1, 4, 1);
        assert!(
            cayley(&rc, &Root::pair(5, 3, 1, 4, -1)).is_err()
                || rc.cartan.is_noncompact_imaginary(&g, &b).unwrap()
        );
    }

    #[test]
    fn compact_root_rejected() {
        let fam = so(4);
        let c = CartanClass::new(fam.clone(), [1, 2].into()).unwrap();
        let rc = RegularCharacter::new(c, normal_form_lambda(&fam, 0, 0).unwrap()).unwrap();
        assert!(matches!(
            cayley(&rc, &Root::pair(4, 0, 1, 1, -1)),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn parity_follows_integrality() {
        let fam = so(8);
        let lam = normal_form_lambda(&fam, 1, 2).unwrap();
        let rc = RegularCharacter::new(CartanClass::split(fam.clone()).unwrap(), lam).unwrap();
        for i in 1..=4usize {
            let a = Root::pair(8, 2 * i - 2, 1, 2 * i - 1, 1);
            assert_eq!(parity_special(&rc, &a).unwrap(), i > 2, "pair {i}");
        }
        let bad = Weight::from_q(Basis::E, &[qr(1, 3), q(2), q(3), q(4)]);
        let rc = RegularCharacter {
            cartan: CartanClass::split(so(4)).unwrap(),
            lambda: bad,
            branches: vec![],
        };
        assert!(matches!(
            parity_special(&rc, &Root::pair(4, 0, 1, 1, 1)),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn cayley_graph_is_path() {
        for fam in [
            so(4),
            so(5),
            Family::Sp { p: 3, q: 2 },
            Family::Sp { p: 2, q: 2 },
        ] {
            let lam = normal_form_lambda(&fam, 0, 0).unwrap();
            let gph = cayley_graph(&fam, 0, &lam).unwrap();
            assert!(gph.is_path(), "{fam}: {gph:?}");
        }
    }
}
