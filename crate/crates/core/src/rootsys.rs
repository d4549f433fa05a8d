//! Root systems of the classical families, θ-involutions, Weyl groups as
//! signed permutations and the standard bilinear form.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::{factorial, q, C, Q};

/// Which coordinate system a weight is written in: the e-basis of the
/// split Cartan, or the F-basis of the compact Cartan used for derived
/// functor modules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    E,
    F,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub basis: Basis,
    pub coords: Vec<C>,
}

impl Weight {
    pub fn new(basis: Basis, coords: Vec<C>) -> Weight {
        Weight { basis, coords }
    }
    pub fn zero(basis: Basis, n: usize) -> Weight {
        Weight::new(basis, vec![C::zero(); n])
    }
    pub fn from_q(basis: Basis, v: &[Q]) -> Weight {
        Weight::new(basis, v.iter().map(|x| C::real(*x)).collect())
    }
    pub fn from_ints(basis: Basis, v: &[i64]) -> Weight {
        Weight::new(basis, v.iter().map(|x| C::int(*x)).collect())
    }
    pub fn rank(&self) -> usize {
        self.coords.len()
    }
    pub fn add_root(&mut self, r: &Root, scale: Q) {
        for (c, a) in self.coords.iter_mut().zip(&r.0) {
            *c = *c + C::real(q(*a as i64) * scale);
        }
    }
    pub fn concat(&self, other: &Weight) -> Weight {
        let mut coords = self.coords.clone();
        coords.extend(other.coords.iter().copied());
        Weight::new(self.basis, coords)
    }
    pub fn is_real(&self) -> bool {
        self.coords.iter().all(|c| c.is_real())
    }
    /// Pairing with a root (integer coefficient vector).
    pub fn pair_root(&self, r: &Root) -> C {
        self.coords
            .iter()
            .zip(&r.0)
            .fold(C::zero(), |acc, (c, a)| acc + c.scale(q(*a as i64)))
    }
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Standard orthonormal bilinear pairing.
pub fn inner_product(a: &Weight, b: &Weight) -> Result<C> {
    if a.rank() != b.rank() {
        return Err(Error::Validation(format!(
            "rank mismatch: {} vs {}",
            a.rank(),
            b.rank()
        )));
    }
    Ok(a.coords
        .iter()
        .zip(&b.coords)
        .fold(C::zero(), |acc, (x, y)| acc + *x * *y))
}

/// A root as an integer coefficient vector in the e-basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i32>);

impl Root {
    pub fn zero(n: usize) -> Root {
        Root(vec![0; n])
    }
    /// `s·e_i + t·e_j` (0-based indices).
    pub fn pair(n: usize, i: usize, s: i32, j: usize, t: i32) -> Root {
        let mut v = vec![0; n];
        v[i] += s;
        v[j] += t;
        Root(v)
    }
    pub fn unit(n: usize, i: usize, s: i32) -> Root {
        let mut v = vec![0; n];
        v[i] = s;
        Root(v)
    }
    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|x| -x).collect())
    }
    pub fn add(&self, o: &Root) -> Root {
        Root(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
    pub fn sub(&self, o: &Root) -> Root {
        Root(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
    pub fn dot(&self, o: &Root) -> i32 {
        self.0.iter().zip(&o.0).map(|(a, b)| a * b).sum()
    }
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| *x == 0)
    }
    pub fn to_weight(&self, basis: Basis) -> Weight {
        Weight::new(basis, self.0.iter().map(|x| C::int(*x as i64)).collect())
    }
    /// Pairing with a rational functional on the Cartan.
    pub fn eval(&self, h: &[Q]) -> Q {
        self.0
            .iter()
            .zip(h)
            .fold(Q::zero(), |acc, (a, x)| acc + q(*a as i64) * x)
    }
    /// `s_self(beta)`.
    pub fn reflect(&self, beta: &Root) -> Root {
        let k = 2 * beta.dot(self) / self.dot(self);
        Root(beta.0.iter().zip(&self.0).map(|(b, a)| b - k * a).collect())
    }
}

impl std::fmt::Display for Root {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, a) in self.0.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            let sign = if *a < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = a.abs();
            if mag == 1 {
                write!(f, "{sign}e{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}e{}", i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub type RootSet = BTreeSet<Root>;

/// `w(e_i) = signs[i]·e_{perm[i]}` (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            perm: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n {
            return Err(Error::Validation("perm/sign length mismatch".into()));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::Validation(format!("not a permutation: {perm:?}")));
            }
            seen[p] = true;
        }
        if signs.iter().any(|s| *s != 1 && *s != -1) {
            return Err(Error::Validation("signs must be ±1".into()));
        }
        Ok(SignedPermutation { perm, signs })
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    /// Reflection in a root of the form ±e_i±e_j or ±2e_i (or ±e_i).
    pub fn reflection(r: &Root) -> Self {
        let n = r.0.len();
        let mut w = Self::identity(n);
        let nz: Vec<usize> = (0..n).filter(|i| r.0[*i] != 0).collect();
        match nz.as_slice() {
            [i] => w.signs[*i] = -1,
            [i, j] => {
                let (i, j) = (*i, *j);
                let same = (r.0[i] > 0) == (r.0[j] > 0);
                w.perm[i] = j;
                w.perm[j] = i;
                if same {
                    w.signs[i] = -1;
                    w.signs[j] = -1;
                }
            }
            _ => {}
        }
        w
    }

    /// `(self ∘ other)(e_i) = self(other(e_i))`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            let j = other.perm[i];
            perm[i] = self.perm[j];
            signs[i] = other.signs[i] * self.signs[j];
        }
        SignedPermutation { perm, signs }
    }

    pub fn inverse(&self) -> Self {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        SignedPermutation { perm, signs }
    }

    pub fn act(&self, w: &Weight) -> Weight {
        let mut out = vec![C::zero(); w.rank()];
        for i in 0..w.rank() {
            let c = w.coords[i];
            out[self.perm[i]] = if self.signs[i] < 0 { -c } else { c };
        }
        Weight::new(w.basis, out)
    }

    pub fn act_root(&self, r: &Root) -> Root {
        let mut out = vec![0; r.0.len()];
        for i in 0..r.0.len() {
            out[self.perm[i]] = self.signs[i] as i32 * r.0[i];
        }
        Root(out)
    }

    pub fn negative_count(&self) -> usize {
        self.signs.iter().filter(|s| **s < 0).count()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, p)| i == *p) && self.signs.iter().all(|s| *s == 1)
    }
}

/// Closure of a generator set under composition; fails past `bound` elements.
pub fn generate_closure(
    n: usize,
    gens: &[SignedPermutation],
    bound: usize,
) -> Result<HashSet<SignedPermutation>> {
    let id = SignedPermutation::identity(n);
    let mut seen = HashSet::new();
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.compose(&x);
            if seen.insert(y.clone()) {
                if seen.len() > bound {
                    return Err(Error::Hypothesis(format!(
                        "group closure exceeds bound {bound}"
                    )));
                }
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WeylType {
    A,
    C,
    D,
}

/// A simple Weyl factor occupying `size` consecutive coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub ty: WeylType,
    pub offset: usize,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    Sp { p: usize, q: usize },
    SoStar { n: usize },
    U { p: usize, q: usize },
    GlH { k: usize },
    GlC { k: usize },
    Product(Vec<Family>),
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::Sp { p, q } => write!(f, "Sp({p},{q})"),
            Family::SoStar { n } => write!(f, "SO*({})", 2 * n),
            Family::U { p, q } => write!(f, "U({p},{q})"),
            Family::GlH { k } => write!(f, "GL({k},H)"),
            Family::GlC { k } => write!(f, "GL({k},C)"),
            Family::Product(v) => {
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
        }
    }
}

/// Compactness data for imaginary roots on a θ-stable Cartan.
///
/// An imaginary root `e_a - e_b` with `{a,b}` a θ-pair is compact. Any
/// other imaginary root β is noncompact iff `⟨β, x⟩` is odd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub pairs: Vec<(usize, usize)>,
    pub x: Vec<Q>,
}

impl Grading {
    pub fn is_noncompact(&self, beta: &Root) -> bool {
        let nz: Vec<usize> = (0..beta.0.len()).filter(|i| beta.0[*i] != 0).collect();
        if nz.len() == 2 && beta.0[nz[0]] == -beta.0[nz[1]] {
            let (a, b) = (nz[0], nz[1]);
            if self
                .pairs
                .iter()
                .any(|&(i, j)| (i, j) == (a, b) || (j, i) == (a, b))
            {
                return false;
            }
        }
        let v = beta.eval(&self.x);
        debug_assert!(v.is_integer());
        v.to_integer().rem_euclid(2) == 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootKind {
    Real,
    Imaginary,
    Complex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupDatum {
    pub family: Family,
    pub rank: usize,
    pub real_rank: usize,
    pub roots: Vec<Root>,
    pub positive: RootSet,
    pub simple: Vec<Root>,
    /// Cartan involution on the split Cartan.
    pub theta: SignedPermutation,
    pub components: Vec<Component>,
    pub grading: Grading,
}

fn type_c_roots(n: usize) -> Vec<Root> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(Root::pair(n, i, 1, j, -1));
            out.push(Root::pair(n, i, 1, j, 1));
        }
        out.push(Root::unit(n, i, 2));
    }
    out
}

fn type_d_roots(n: usize) -> Vec<Root> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(Root::pair(n, i, 1, j, -1));
            out.push(Root::pair(n, i, 1, j, 1));
        }
    }
    out
}

fn type_a_roots(n: usize) -> Vec<Root> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(Root::pair(n, i, 1, j, -1));
        }
    }
    out
}

fn embed(r: &Root, offset: usize, total: usize) -> Root {
    let mut v = vec![0; total];
    v[offset..offset + r.0.len()].copy_from_slice(&r.0);
    Root(v)
}

/// θ on the split Cartan: swap-and-negate the first `pairs` coordinate pairs.
fn split_theta(n: usize, pairs: usize) -> SignedPermutation {
    let mut w = SignedPermutation::identity(n);
    for i in 0..pairs {
        let (a, b) = (2 * i, 2 * i + 1);
        w.perm[a] = b;
        w.perm[b] = a;
        w.signs[a] = -1;
        w.signs[b] = -1;
    }
    w
}

struct Piece {
    positive: Vec<Root>,
    simple: Vec<Root>,
    theta: SignedPermutation,
    components: Vec<Component>,
    grading: Grading,
    real_rank: usize,
}

fn piece(family: &Family) -> Result<Piece> {
    Ok(match family {
        Family::Sp { p, q } => {
            let n = p + q;
            let mut simple: Vec<Root> = (0..n.saturating_sub(1))
                .map(|i| Root::pair(n, i, 1, i + 1, -1))
                .collect();
            if n > 0 {
                simple.push(Root::unit(n, n - 1, 2));
            }
            Piece {
                positive: type_c_roots(n),
                simple,
                theta: split_theta(n, *q),
                components: vec![Component {
                    ty: WeylType::C,
                    offset: 0,
                    size: n,
                }],
                grading: Grading {
                    pairs: (0..*q).map(|i| (2 * i, 2 * i + 1)).collect(),
                    x: vec![Q::zero(); n],
                },
                real_rank: *q,
            }
        }
        Family::SoStar { n } => {
            let n = *n;
            let mut simple: Vec<Root> = (0..n.saturating_sub(1))
                .map(|i| Root::pair(n, i, 1, i + 1, -1))
                .collect();
            if n >= 2 {
                simple.push(Root::pair(n, n - 2, 1, n - 1, 1));
            }
            Piece {
                positive: type_d_roots(n),
                simple,
                theta: split_theta(n, n / 2),
                components: vec![Component {
                    ty: WeylType::D,
                    offset: 0,
                    size: n,
                }],
                grading: Grading {
                    pairs: (0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect(),
                    x: vec![Q::new(1, 2); n],
                },
                real_rank: n / 2,
            }
        }
        Family::U { p, q } => {
            let n = p + q;
            let mut x = vec![Q::zero(); n];
            for v in x.iter_mut().skip(*p) {
                *v = Q::one();
            }
            Piece {
                positive: type_a_roots(n),
                simple: (0..n.saturating_sub(1))
                    .map(|i| Root::pair(n, i, 1, i + 1, -1))
                    .collect(),
                theta: SignedPermutation::identity(n),
                components: vec![Component {
                    ty: WeylType::A,
                    offset: 0,
                    size: n,
                }],
                grading: Grading { pairs: vec![], x },
                real_rank: 0,
            }
        }
        Family::GlH { k } => {
            let n = 2 * k;
            Piece {
                positive: type_a_roots(n),
                simple: (0..n.saturating_sub(1))
                    .map(|i| Root::pair(n, i, 1, i + 1, -1))
                    .collect(),
                theta: split_theta(n, *k),
                components: vec![Component {
                    ty: WeylType::A,
                    offset: 0,
                    size: n,
                }],
                grading: Grading {
                    pairs: (0..*k).map(|i| (2 * i, 2 * i + 1)).collect(),
                    x: vec![Q::zero(); n],
                },
                real_rank: *k,
            }
        }
        Family::GlC { k } => {
            // gl(k) ⊕ gl(k); θ exchanges the two factors with a sign.
            let n = 2 * k;
            let mut positive = Vec::new();
            let mut simple = Vec::new();
            for off in [0, *k] {
                for r in type_a_roots(*k) {
                    positive.push(embed(&r, off, n));
                }
                for i in 0..k.saturating_sub(1) {
                    simple.push(Root::pair(n, off + i, 1, off + i + 1, -1));
                }
            }
            let mut theta = SignedPermutation::identity(n);
            for i in 0..*k {
                theta.perm[i] = k + i;
                theta.perm[k + i] = i;
                theta.signs[i] = -1;
                theta.signs[k + i] = -1;
            }
            Piece {
                positive,
                simple,
                theta,
                components: vec![
                    Component {
                        ty: WeylType::A,
                        offset: 0,
                        size: *k,
                    },
                    Component {
                        ty: WeylType::A,
                        offset: *k,
                        size: *k,
                    },
                ],
                grading: Grading {
                    pairs: vec![],
                    x: vec![Q::zero(); n],
                },
                real_rank: *k,
            }
        }
        Family::Product(parts) => {
            let pieces: Vec<Piece> = parts.iter().map(piece).collect::<Result<_>>()?;
            let total: usize = pieces.iter().map(|p| p.theta.rank()).sum();
            let mut out = Piece {
                positive: vec![],
                simple: vec![],
                theta: SignedPermutation::identity(total),
                components: vec![],
                grading: Grading {
                    pairs: vec![],
                    x: vec![],
                },
                real_rank: 0,
            };
            let mut off = 0;
            for p in pieces {
                let n = p.theta.rank();
                out.positive
                    .extend(p.positive.iter().map(|r| embed(r, off, total)));
                out.simple
                    .extend(p.simple.iter().map(|r| embed(r, off, total)));
                for i in 0..n {
                    out.theta.perm[off + i] = off + p.theta.perm[i];
                    out.theta.signs[off + i] = p.theta.signs[i];
                }
                out.components
                    .extend(p.components.iter().map(|c| Component {
                        ty: c.ty,
                        offset: c.offset + off,
                        size: c.size,
                    }));
                out.grading
                    .pairs
                    .extend(p.grading.pairs.iter().map(|(a, b)| (a + off, b + off)));
                out.grading.x.extend(p.grading.x);
                out.real_rank += p.real_rank;
                off += n;
            }
            out
        }
    })
}

/// Construct the root datum of a family on its split Cartan.
pub fn build_group(family: Family) -> Result<GroupDatum> {
    match &family {
        Family::Sp { p, q } if q > p => {
            return Err(Error::Validation(format!(
                "Sp(p,q) requires p >= q, got p={p}, q={q}"
            )))
        }
        Family::SoStar { n } if *n == 0 => {
            return Err(Error::Validation("SO*(2n) requires n >= 1".into()))
        }
        Family::GlH { k } | Family::GlC { k } if *k == 0 => {
            return Err(Error::Validation("GL(k) requires k >= 1".into()))
        }
        _ => {}
    }
    build_group_unchecked(family)
}

/// Like [`build_group`] but accepts degenerate sizes (Sp(0,0), SO*(0), p < q).
pub fn build_group_unchecked(family: Family) -> Result<GroupDatum> {
    let pc = piece(&family)?;
    let rank = pc.theta.rank();
    let positive: RootSet = pc.positive.iter().cloned().collect();
    let mut roots: Vec<Root> = pc.positive.clone();
    roots.extend(pc.positive.iter().map(|r| r.neg()));
    roots.sort();
    Ok(GroupDatum {
        family,
        rank,
        real_rank: pc.real_rank,
        roots,
        positive,
        simple: pc.simple,
        theta: pc.theta,
        components: pc.components,
        grading: pc.grading,
    })
}

impl GroupDatum {
    pub fn is_root(&self, r: &Root) -> bool {
        self.roots.binary_search(r).is_ok()
    }

    pub fn root_set(&self) -> RootSet {
        self.roots.iter().cloned().collect()
    }

    pub fn theta_root(&self, r: &Root) -> Root {
        self.theta.act_root(r)
    }

    pub fn rho(&self) -> Weight {
        delta_half_sum(self.rank, self.positive.iter())
    }

    /// Classify with respect to the split-Cartan involution.
    pub fn classify(&self, alpha: &Root) -> Result<RootKind> {
        root_classification(self, &self.theta, alpha)
    }

    pub fn is_compact_imaginary(&self, alpha: &Root) -> bool {
        self.theta_root(alpha) == *alpha && !self.grading.is_noncompact(alpha)
    }

    /// Is `w` an element of the Weyl group of this root system?
    pub fn contains_weyl_element(&self, w: &SignedPermutation) -> bool {
        if w.rank() != self.rank {
            return false;
        }
        for c in &self.components {
            let range = c.offset..c.offset + c.size;
            for i in range.clone() {
                if !range.contains(&w.perm[i]) {
                    return false;
                }
            }
            let neg = range.clone().filter(|i| w.signs[*i] < 0).count();
            match c.ty {
                WeylType::A if neg > 0 => return false,
                WeylType::D if neg % 2 == 1 => return false,
                _ => {}
            }
        }
        true
    }

    /// Reflections in the simple roots.
    pub fn simple_reflections(&self) -> Vec<SignedPermutation> {
        self.simple
            .iter()
            .map(SignedPermutation::reflection)
            .collect()
    }
}

pub fn root_classification(
    g: &GroupDatum,
    theta: &SignedPermutation,
    alpha: &Root,
) -> Result<RootKind> {
    if !g.is_root(alpha) {
        return Err(Error::Validation(format!(
            "{alpha} is not a root of {}",
            g.family
        )));
    }
    let t = theta.act_root(alpha);
    Ok(if t == *alpha {
        RootKind::Imaginary
    } else if t == alpha.neg() {
        RootKind::Real
    } else {
        RootKind::Complex
    })
}

pub fn delta_half_sum<'a>(rank: usize, roots: impl IntoIterator<Item = &'a Root>) -> Weight {
    let mut w = Weight::zero(Basis::E, rank);
    for r in roots {
        w.add_root(r, Q::new(1, 2));
    }
    w
}

pub fn weyl_type_order(ty: WeylType, n: usize) -> BigUint {
    match ty {
        WeylType::A => factorial(n as u64),
        WeylType::C => factorial(n as u64) << n,
        WeylType::D => {
            if n == 0 {
                BigUint::one()
            } else {
                factorial(n as u64) << (n - 1)
            }
        }
    }
}

pub fn weyl_group_order(g: &GroupDatum) -> BigUint {
    g.components
        .iter()
        .fold(BigUint::one(), |acc, c| acc * weyl_type_order(c.ty, c.size))
}

/// Normal form of a weight under one simple Weyl factor, with witness.
fn dominant_component(ty: WeylType, coords: &[C]) -> (Vec<C>, Vec<usize>, Vec<i8>) {
    let n = coords.len();
    let mut signs = vec![1i8; n];
    let mut vals: Vec<C> = coords.to_vec();
    if ty != WeylType::A {
        for i in 0..n {
            if !vals[i].is_nonneg() {
                vals[i] = -vals[i];
                signs[i] = -1;
            }
        }
    }
    // Stable sort of indices by value, descending.
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|a, b| vals[*b].cmp(&vals[*a]).then(a.cmp(b)));
    let mut perm = vec![0; n];
    for (pos, &i) in idx.iter().enumerate() {
        perm[i] = pos;
    }
    let mut out: Vec<C> = idx.iter().map(|i| vals[*i]).collect();
    if ty == WeylType::D && n > 0 {
        let neg = signs.iter().filter(|s| **s < 0).count();
        if neg % 2 == 1 {
            // Absorb the parity in the smallest coordinate.
            let last = idx[n - 1];
            signs[last] = -signs[last];
            out[n - 1] = -out[n - 1];
        }
    }
    (out, perm, signs)
}

/// Weakly dominant representative of the W-orbit of `w` (standard
/// positive system), with a Weyl element mapping `w` to it.
pub fn dominant_representative(g: &GroupDatum, w: &Weight) -> (Weight, SignedPermutation) {
    dominant_by_components(&g.components, w)
}

pub fn dominant_by_components(comps: &[Component], w: &Weight) -> (Weight, SignedPermutation) {
    let n = w.rank();
    let mut out = w.coords.clone();
    let mut wit = SignedPermutation::identity(n);
    for c in comps {
        let (vals, perm, signs) = dominant_component(c.ty, &w.coords[c.offset..c.offset + c.size]);
        for i in 0..c.size {
            out[c.offset + i] = vals[i];
            wit.perm[c.offset + i] = c.offset + perm[i];
            wit.signs[c.offset + i] = signs[i];
        }
    }
    (Weight::new(w.basis, out), wit)
}

/// All elements of the Weyl group (brute force, small rank only).
pub fn weyl_elements(comps: &[Component], n: usize) -> Vec<SignedPermutation> {
    let mut out = vec![SignedPermutation::identity(n)];
    for c in comps {
        let perms = permutations(c.size);
        let mut next = Vec::new();
        for base in &out {
            for p in &perms {
                for mask in 0u32..(1u32 << c.size) {
                    let neg = mask.count_ones() as usize;
                    match c.ty {
                        WeylType::A if neg > 0 => continue,
                        WeylType::D if neg % 2 == 1 => continue,
                        _ => {}
                    }
                    let mut w = base.clone();
                    for (i, &pi) in p.iter().enumerate().take(c.size) {
                        w.perm[c.offset + i] = c.offset + pi;
                        w.signs[c.offset + i] = if mask >> i & 1 == 1 { -1 } else { 1 };
                    }
                    next.push(w);
                }
            }
        }
        out = next;
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}
