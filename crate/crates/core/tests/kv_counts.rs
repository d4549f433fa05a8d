use indrep_core::decompose::{kv_decompose, KvResult};
use indrep_core::num::{q, Q};
use indrep_core::repparams::{DegPSParam, UqqConstituent};
use proptest::prelude::*;

fn count(k: usize, ell: i64, t_im: Q) -> Option<usize> {
    match kv_decompose(&DegPSParam { k, ell, t_im }) {
        KvResult::Split(v) => Some(v.len()),
        KvResult::Irreducible => None,
    }
}

#[test]
fn full_grid_matches_parity_rule() {
    for k in 1..=8usize {
        for ell in -10..=10i64 {
            let split = (ell + k as i64) % 2 == 0;
            assert_eq!(
                count(k, ell, q(0)),
                split.then_some(k + 1),
                "k={k} ell={ell}"
            );
            assert_eq!(count(k, ell, q(1)), None, "k={k} ell={ell} t=i");
        }
    }
}

#[test]
fn split_constituents_are_distinct_and_valid() {
    let KvResult::Split(v) = kv_decompose(&DegPSParam {
        k: 3,
        ell: -1,
        t_im: q(0),
    }) else {
        panic!("expected a split")
    };
    let is: Vec<usize> = v.iter().map(|c| c.i).collect();
    assert_eq!(is, vec![0, 1, 2, 3]);
    for c in &v {
        assert_eq!(UqqConstituent::new(c.k, c.ell, c.i).as_ref(), Ok(c));
    }
}

proptest! {
    #[test]
    fn nonzero_t_never_splits(k in 1usize..12, ell in -40i64..40, num in 1i64..50, den in 1i64..7) {
        let t = Q::new(num, den);
        prop_assert_eq!(count(k, ell, t), None);
        prop_assert_eq!(count(k, ell, -t), None);
    }
}
