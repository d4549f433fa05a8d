use std::collections::{BTreeMap, BTreeSet};

use indrep_core::cartan::{
    cayley, cayley_graph, character_key, cross_action, enumerate_cartans,
    enumerate_regular_characters, inverse_cayley, normal_form_lambda, split_lambda, wgh_generators,
    wgh_order, wgh_order_formula, CartanClass, RegularCharacter, CLOSURE_BOUND,
};
use indrep_core::checks::suite_cartan;
use indrep_core::rootsys::{build_group, weyl_elements, Family, Root, SignedPermutation, Weight};
use indrep_core::Error;

fn so(n: usize) -> Family {
    Family::SoStar { n }
}

fn weyl(f: &Family) -> Vec<SignedPermutation> {
    let g = build_group(f.clone()).unwrap();
    weyl_elements(&g.components, g.rank)
}

#[test]
fn class_counts_and_paths_up_to_rank_8() {
    for n in 1..=8usize {
        let mut fams = vec![so(n)];
        fams.extend((0..=n / 2).map(|q| Family::Sp { p: n - q, q }));
        for f in fams {
            let m = build_group(f.clone()).unwrap().real_rank;
            if m > 4 {
                continue;
            }
            for ks in 0..=m {
                assert_eq!(
                    enumerate_cartans(&f, ks).unwrap().len(),
                    m - ks + 1,
                    "{f} k*={ks}"
                );
                let lam = normal_form_lambda(&f, 0, ks).unwrap();
                assert!(cayley_graph(&f, ks, &lam).unwrap().is_path(), "{f} k*={ks}");
            }
        }
    }
    assert!(suite_cartan(8).unwrap().passed);
}

/// Orbits by union-find over the generators only, against the closure
/// based enumeration.
#[test]
fn split_orbits_match_union_find() {
    for m in 1..=2usize {
        let f = so(2 * m);
        let c = CartanClass::split(f.clone()).unwrap();
        let lam = split_lambda(2 * m);
        let raw: BTreeSet<Weight> = weyl(&f).iter().map(|w| w.act(&lam)).collect();
        let idx: BTreeMap<&Weight, usize> = raw.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut parent: Vec<usize> = (0..raw.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for g in wgh_generators(&c).unwrap() {
            for (w, &i) in &idx {
                let j = idx[&g.act(w)];
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
        let orbits: BTreeSet<usize> = (0..raw.len()).map(|i| find(&mut parent, i)).collect();
        let reps = enumerate_regular_characters(&c, &lam).unwrap();
        assert_eq!(orbits.len(), reps.len(), "m={m}");
        if m == 2 {
            assert_eq!(raw.len(), 192);
            assert_eq!(wgh_order(&c, CLOSURE_BOUND).unwrap().order, 32u32.into());
            assert_eq!(reps.len(), 6);
        }
    }
}

#[test]
fn closure_order_matches_formula() {
    for n in 2..=6usize {
        for f in [
            so(n),
            Family::Sp {
                p: n - n / 2,
                q: n / 2,
            },
        ] {
            for c in enumerate_cartans(&f, 0).unwrap() {
                let got = wgh_order(&c, CLOSURE_BOUND).unwrap().order;
                assert_eq!(got, wgh_order_formula(&c), "{f} {c}");
            }
        }
    }
}

#[test]
fn cross_action_is_a_left_action() {
    let f = so(4);
    let c = CartanClass::split(f.clone()).unwrap();
    let rc = RegularCharacter::new(c, split_lambda(4)).unwrap();
    let ws = weyl(&f);
    let mut checked = 0;
    for a in ws.iter().step_by(5) {
        for b in ws.iter().step_by(7) {
            let (Ok(br), Ok(ab)) = (cross_action(b, &rc), cross_action(&a.compose(b), &rc)) else {
                continue;
            };
            if let Ok(abr) = cross_action(a, &br) {
                assert_eq!(abr.lambda, ab.lambda);
                checked += 1;
            }
        }
    }
    assert!(checked > 50);
    let id = SignedPermutation::identity(4);
    assert_eq!(cross_action(&id, &rc).unwrap(), rc);
    // Not in W(D_4): one sign change.
    let flip = SignedPermutation::new(vec![0, 1, 2, 3], vec![-1, 1, 1, 1]).unwrap();
    assert!(matches!(
        cross_action(&flip, &rc),
        Err(Error::Validation(_))
    ));
}

#[test]
fn wgh_cross_action_preserves_the_key() {
    for f in [so(4), Family::Sp { p: 2, q: 2 }] {
        let lam = normal_form_lambda(&f, 0, 0).unwrap();
        for c in enumerate_cartans(&f, 0).unwrap() {
            let rc = RegularCharacter::new(c.clone(), lam.clone()).unwrap();
            let key = character_key(&rc).unwrap();
            for g in wgh_generators(&c).unwrap() {
                let moved = cross_action(&g, &rc).unwrap();
                assert_eq!(character_key(&moved).unwrap(), key, "{f} {c}");
            }
        }
    }
}

/// Cayley transform through α commutes with cross actions fixing α.
#[test]
fn cayley_commutes_with_cross_action() {
    for f in [
        so(4),
        so(5),
        Family::Sp { p: 2, q: 2 },
        Family::Sp { p: 3, q: 2 },
    ] {
        let g = build_group(f.clone()).unwrap();
        let n = g.rank;
        let lam = normal_form_lambda(&f, 0, 0).unwrap();
        let c = CartanClass::new(f.clone(), [1].into()).unwrap();
        let rc = RegularCharacter::new(c, lam).unwrap();
        let alpha = Root::pair(n, 0, 1, 1, 1);
        let down = cayley(&rc, &alpha).unwrap();
        let mut checked = 0;
        for w in weyl(&f).iter().filter(|w| w.act_root(&alpha) == alpha) {
            let Ok(moved) = cross_action(w, &rc) else {
                continue;
            };
            let lhs = cayley(&moved, &alpha).unwrap();
            let rhs = cross_action(w, &down).unwrap();
            assert_eq!(
                character_key(&lhs).unwrap(),
                character_key(&rhs).unwrap(),
                "{f} w={w:?}"
            );
            checked += 1;
        }
        assert!(checked > 0);
    }
}

/// On the split Cartan with λ in normal form, α_i has two distinct inverse
/// Cayley transforms exactly for the integral pairs i > k*_s.
#[test]
fn inverse_cayley_pairs_only_in_j0() {
    for f in [so(8), Family::Sp { p: 4, q: 4 }] {
        for ks in 0..=4usize {
            for kh in 0..=ks {
                let lam = normal_form_lambda(&f, kh, ks).unwrap();
                let rc =
                    RegularCharacter::new(CartanClass::split(f.clone()).unwrap(), lam).unwrap();
                for i in 1..=4usize {
                    let a = Root::pair(8, 2 * i - 2, 1, 2 * i - 1, 1);
                    match inverse_cayley(&rc, &a) {
                        Ok((p, m)) => {
                            assert_ne!(p, m);
                            assert!(i > ks, "{f} pair {i} k*_h={kh} k*_s={ks}");
                        }
                        Err(Error::Hypothesis(_)) => {
                            assert!(i <= ks, "{f} pair {i} k*_h={kh} k*_s={ks}")
                        }
                        Err(e) => panic!("{e}"),
                    }
                }
            }
        }
    }
}
