//! Speh-absorption steps over a fixed grid of tails.

use indrep_core::decompose::{
    induce_speh_step, reduce_induced, reduce_induced_with, valid_js, AbsorbOptions, InducedParam,
};
use indrep_core::parabolic::PairPartition;
use indrep_core::repparams::{DFParam, Ell, SpehParam};
use indrep_core::rootsys::Family;
use indrep_core::sweep::{order_sweep, standard_tails, step_sweep, sweep_tails};
use proptest::prelude::*;

fn speh(k: usize, ell: i64) -> SpehParam {
    SpehParam::new(k, Ell::Finite(ell), 0.into()).unwrap()
}

#[test]
fn sweep_conserves_characters_and_stays_weakly_fair() {
    let tails = standard_tails();
    let r = step_sweep(&tails, 3);
    assert!(r.steps >= 200, "only {} steps", r.steps);
    assert!(
        r.conservation_failures.is_empty(),
        "{:?}",
        &r.conservation_failures[..3.min(r.conservation_failures.len())]
    );
    assert!(
        r.weakly_fair_failures.is_empty(),
        "{:?}",
        &r.weakly_fair_failures[..3.min(r.weakly_fair_failures.len())]
    );
    assert!(r.good_hypothesis_steps > 0);
    assert!(
        r.good_range_failures.is_empty(),
        "{:?}",
        &r.good_range_failures[..3.min(r.good_range_failures.len())]
    );
}

#[test]
fn step_has_k_plus_one_pieces() {
    for sp in [true, false] {
        for d in sweep_tails(sp, 1, &[(1, 0), (1, 1)], &[0, 2]) {
            for k in 1..=3 {
                let pieces = induce_speh_step(&d, k, &speh(k, 13)).unwrap();
                assert_eq!(pieces.len(), k + 1, "{d} k={k}");
            }
        }
    }
}

#[test]
fn single_factor_over_sp11() {
    let ip = InducedParam::new(
        Family::Sp { p: 1, q: 1 },
        vec![speh(1, 1)],
        DFParam::trivial(Family::Sp { p: 0, q: 0 }).unwrap(),
    )
    .unwrap();
    let fs = reduce_induced(&ip).unwrap();
    assert_eq!(fs.len(), 2);
    assert!(fs
        .constituents
        .iter()
        .all(|c| c.param.factors.is_empty() && c.unknown.is_none()));
}

/// The nonzero constituent set does not depend on which admissible j is
/// used. Fails on ties ℓ̃_j = s + (k+1)/2, where inserting before or after
/// an equal-centre block yields different labels; see the README.
#[test]
#[ignore = "labels differ on ties between equal-centre blocks; no label-level identification is implemented"]
fn insertion_index_independence() {
    let r = step_sweep(&standard_tails(), 3);
    assert!(r.multi_j > 0);
    assert!(
        r.j_mismatches.is_empty(),
        "{} of {} instances differ, e.g. {}",
        r.j_mismatches.len(),
        r.multi_j,
        r.j_mismatches[0]
    );
}

/// Same question for absorbing factors in the listed order.
#[test]
#[ignore = "same tie cases as insertion_index_independence"]
fn listed_order_matches_canonical() {
    let r = order_sweep();
    assert!(
        r.mismatches.is_empty(),
        "{} of {} differ",
        r.mismatches.len(),
        r.compared
    );
}

#[test]
fn multiple_j_only_on_ties() {
    for d in standard_tails().iter().step_by(7) {
        for k in 1..=2usize {
            for s in 0..=3i64 {
                let js = valid_js(d, s, k);
                for w in js.windows(2) {
                    let t = indrep_core::num::q(s) + indrep_core::num::qr(k as i64 + 1, 2);
                    assert_eq!(d.ell_tilde(w[0] - 1), t, "{d} s={s} k={k} js={js:?}");
                }
            }
        }
    }
}

fn two_factor_param() -> impl Strategy<Value = InducedParam> {
    let fac = (
        1usize..=2,
        prop_oneof![Just(-1i64), Just(1), Just(3), Just(5), Just(0), Just(2)],
    );
    (any::<bool>(), fac.clone(), fac, 0usize..=2).prop_filter_map(
        "valid",
        |(sp, (k1, l1), (k2, l2), core)| {
            let kk = k1 + k2;
            let (family, tail) = if sp {
                (
                    Family::Sp {
                        p: kk + core,
                        q: kk,
                    },
                    Family::Sp { p: core, q: 0 },
                )
            } else {
                (
                    Family::SoStar { n: 2 * kk + core },
                    Family::SoStar { n: core },
                )
            };
            let f1 = SpehParam::new(k1, Ell::Finite(l1), 0.into()).ok()?;
            let f2 = SpehParam::new(k2, Ell::Finite(l2), 0.into()).ok()?;
            InducedParam::new(family, vec![f1, f2], DFParam::trivial(tail).ok()?).ok()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The canonical reduction ignores the listed order of the factors.
    #[test]
    fn canonical_reduction_is_order_free(ip in two_factor_param()) {
        let a = reduce_induced(&ip).unwrap();
        let b = reduce_induced(&ip.permuted(&[1, 0]).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }

    /// Whatever order is used, the constituent count never exceeds the
    /// product of the (k+1) bounds.
    #[test]
    fn constituent_count_bounded(ip in two_factor_param()) {
        let bound: usize = ip.factors.iter().map(|f| if f.is_odd_unitary_axis() { f.k + 1 } else { 1 }).product();
        for as_listed in [false, true] {
            let fs = reduce_induced_with(&ip, AbsorbOptions { as_listed, largest_j: false }).unwrap();
            prop_assert!(fs.len() <= bound);
        }
    }
}

#[test]
fn weakly_fair_tail_with_blocks() {
    let d = DFParam::new(
        Family::Sp { p: 2, q: 1 },
        PairPartition {
            p: vec![1],
            q: vec![1],
        },
        vec![0],
    )
    .unwrap();
    let pieces = induce_speh_step(&d, 1, &speh(1, 5)).unwrap();
    assert_eq!(pieces.len(), 2);
    assert!(pieces
        .iter()
        .all(|p| p.df.family == Family::Sp { p: 3, q: 2 }));
}
