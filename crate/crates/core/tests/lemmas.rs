use indrep_core::num::C;
use indrep_core::parabolic::{parabolic_from_simple, pi_u_k, q_k};
use indrep_core::polarization::{
    constructible_pairs, pair_k, polarization_sequence, verify_dim_lemma, xi_closed_form, xi_pq,
};
use indrep_core::rootsys::{build_group, Family};

#[test]
fn dimension_identity_all_pairs_rank_5() {
    for (name, pair) in constructible_pairs(5).unwrap() {
        let r = verify_dim_lemma(&pair);
        assert!(r.pass, "{name}: {r:?}");
    }
}

#[test]
fn polarization_sequence_all_pairs_rank_5() {
    for (name, pair) in constructible_pairs(5).unwrap() {
        let (seq, rep) = polarization_sequence(&pair).unwrap();
        assert!(rep.pass, "{name}: {rep:?}");
        assert_eq!(seq.len(), pair.n.intersection(&pair.ubar).count());
    }
}

#[test]
fn xi_matches_closed_form_rank_6() {
    for n in 1..=6usize {
        let mut fams = vec![Family::SoStar { n }];
        for q in 0..=n / 2 {
            fams.push(Family::Sp { p: n - q, q });
        }
        for f in fams {
            let g = build_group(f.clone()).unwrap();
            for k in 1..=g.real_rank {
                let xi = xi_pq(&pair_k(&g, k).unwrap()).unwrap();
                for i in 1..=n {
                    assert_eq!(
                        xi.coords[i - 1],
                        C::real(xi_closed_form(&f, n, k, i)),
                        "{f} k={k} i={i}"
                    );
                }
            }
        }
    }
}

#[test]
fn displayed_simple_system_agrees_with_functional() {
    let mut checked = 0;
    for n in 2..=6usize {
        let mut fams = vec![Family::SoStar { n }];
        for q in 1..=n / 2 {
            fams.push(Family::Sp { p: n - q, q });
        }
        for f in fams {
            let g = build_group(f.clone()).unwrap();
            for k in 1..=g.real_rank {
                if let Some((pi, levi)) = pi_u_k(&g, k) {
                    let a = parabolic_from_simple(&g, &pi, &levi).unwrap();
                    assert_eq!(a, q_k(&g, k), "{f} k={k}");
                    checked += 1;
                } else {
                    // Only the degenerate shapes lack a display.
                    assert!(
                        matches!(f, Family::SoStar { n } if n == 2 * k + 1 || n == 2),
                        "{f} k={k}"
                    );
                }
            }
        }
    }
    assert!(checked >= 15, "only {checked} displays checked");
}
