//! Verification suites over bounded ranks, shared by the CLI and tests.

use serde::Serialize;

use crate::cartan::{
    cayley_graph, enumerate_cartans, inverse_cayley, normal_form_lambda, RegularCharacter,
};
use crate::error::{Error, Result};
use crate::num::C;
use crate::polarization::{
    constructible_pairs, pair_k, polarization_sequence, verify_dim_lemma, xi_closed_form, xi_pq,
};
use crate::rootsys::{build_group, Family, Root};
use crate::weylrep::verify_coherent_continuation_dim;

/// Largest rank the CLI accepts for `check-lemmas`.
pub const MAX_RANK_CAP: usize = 8;

pub const SUITES: [&str; 5] = [
    "dim-identity",
    "polarization",
    "xi-character",
    "coherent-continuation",
    "cartan",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<String>,
    pub passed: bool,
}

impl SuiteReport {
    fn new(suite: &str, cases: usize, failures: Vec<String>) -> Self {
        let passed = failures.is_empty();
        SuiteReport {
            suite: suite.into(),
            cases,
            failures,
            passed,
        }
    }
}

/// Sp(n−q, q) for q ≤ n/2 and SO*(2n), 1 ≤ n ≤ max_rank.
pub fn ambient_groups(max_rank: usize) -> Vec<Family> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        for q in 0..=n / 2 {
            out.push(Family::Sp { p: n - q, q });
        }
        out.push(Family::SoStar { n });
    }
    out
}

pub fn suite_dim_identity(max_rank: usize) -> Result<SuiteReport> {
    let pairs = constructible_pairs(max_rank)?;
    let failures = pairs
        .iter()
        .filter_map(|(name, p)| {
            let r = verify_dim_lemma(p);
            (!r.pass).then(|| format!("{name}: {r:?}"))
        })
        .collect();
    Ok(SuiteReport::new("dim-identity", pairs.len(), failures))
}

pub fn suite_polarization(max_rank: usize) -> Result<SuiteReport> {
    let pairs = constructible_pairs(max_rank)?;
    let mut failures = Vec::new();
    for (name, p) in &pairs {
        let (_, rep) = polarization_sequence(p)?;
        if !rep.pass {
            failures.push(format!("{name}: {rep:?}"));
        }
    }
    Ok(SuiteReport::new("polarization", pairs.len(), failures))
}

pub fn suite_xi(max_rank: usize) -> Result<SuiteReport> {
    let mut cases = 0;
    let mut failures = Vec::new();
    for f in ambient_groups(max_rank) {
        let g = build_group(f.clone())?;
        let n = g.rank;
        for k in 1..=g.real_rank {
            let xi = xi_pq(&pair_k(&g, k)?)?;
            cases += 1;
            for i in 1..=n {
                let want = C::real(xi_closed_form(&f, n, k, i));
                if xi.coords[i - 1] != want {
                    failures.push(format!(
                        "{f} k={k} i={i}: got {}, want {want}",
                        xi.coords[i - 1]
                    ));
                }
            }
        }
    }
    Ok(SuiteReport::new("xi-character", cases, failures))
}

pub fn suite_coherent_continuation(max_m: usize) -> Result<SuiteReport> {
    let mut failures = Vec::new();
    for m in 1..=max_m {
        let r = verify_coherent_continuation_dim(m)?;
        if !r.passed() {
            failures.push(format!(
                "m={m}: sum {} closed form {} block {}",
                r.sum_macdonald, r.closed_form, r.block_dimension
            ));
        }
    }
    Ok(SuiteReport::new("coherent-continuation", max_m, failures))
}

/// Class counts, the Cayley path, and parity exactly on J_0 with
/// two distinct inverse Cayley transforms.
pub fn suite_cartan(max_rank: usize) -> Result<SuiteReport> {
    let mut cases = 0;
    let mut failures = Vec::new();
    for f in ambient_groups(max_rank) {
        let g = build_group(f.clone())?;
        let m = g.real_rank;
        let n = g.rank;
        for ks in 0..=m {
            let classes = enumerate_cartans(&f, ks)?;
            cases += 1;
            if classes.len() != m - ks + 1 {
                failures.push(format!("{f} k*={ks}: {} classes", classes.len()));
            }
            let lam = normal_form_lambda(&f, ks / 2, ks)?;
            let graph = cayley_graph(&f, ks, &lam)?;
            if !graph.is_path() {
                failures.push(format!("{f} k*={ks}: Cayley graph {:?}", graph.edges));
            }
            for c in &classes {
                let rc = RegularCharacter::new(c.clone(), lam.clone())?;
                for i in c.real_pairs() {
                    let a = Root::pair(n, 2 * i - 2, 1, 2 * i - 1, 1);
                    let in_j0 = i > ks;
                    match inverse_cayley(&rc, &a) {
                        Ok((p, q)) => {
                            if !in_j0 || p == q || p.lambda != q.lambda {
                                failures
                                    .push(format!("{f} {c} a{i}: unexpected inverse Cayley pair"));
                            }
                        }
                        Err(Error::Hypothesis(_)) if !in_j0 => {}
                        Err(e) => failures.push(format!("{f} {c} a{i}: {e}")),
                    }
                }
            }
        }
    }
    Ok(SuiteReport::new("cartan", cases, failures))
}

pub fn run_suite(name: &str, max_rank: usize) -> Result<SuiteReport> {
    if max_rank > MAX_RANK_CAP {
        return Err(Error::Validation(format!(
            "max rank {max_rank} exceeds the cap {MAX_RANK_CAP}"
        )));
    }
    match name {
        "dim-identity" => suite_dim_identity(max_rank),
        "polarization" => suite_polarization(max_rank),
        "xi-character" => suite_xi(max_rank),
        "coherent-continuation" => suite_coherent_continuation(max_rank),
        "cartan" => suite_cartan(max_rank),
        other => Err(Error::Validation(format!(
            "unknown suite \"{other}\"; expected one of {}",
            SUITES.join(", ")
        ))),
    }
}
