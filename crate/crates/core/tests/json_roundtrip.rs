use indrep_core::decompose::InducedParam;
use indrep_core::json::{
    df_to_json, induced_to_json, parse_decompose_request, parse_df, parse_induced, parse_speh,
    parse_weight_value, speh_to_json, weight_json, DecomposeRequest,
};
use indrep_core::num::{format_q, parse_q, C, Q};
use indrep_core::parabolic::PairPartition;
use indrep_core::repparams::{DFParam, DfRange, Ell, SpehParam};
use indrep_core::rootsys::{Basis, Family, Weight};
use indrep_core::Error;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Q> {
    (-500i64..500, 1i64..60).prop_map(|(n, d)| Q::new(n, d))
}

fn speh() -> impl Strategy<Value = SpehParam> {
    (
        1usize..6,
        prop_oneof![Just(None), (-5i64..40).prop_map(Some)],
        rational(),
    )
        .prop_filter_map("weakly fair", |(k, l, t)| {
            SpehParam::new(k, l.map_or(Ell::NegInf, Ell::Finite), t).ok()
        })
}

fn df() -> impl Strategy<Value = DFParam> {
    let block = prop_oneof![
        Just((1usize, 0usize)),
        Just((0, 1)),
        Just((1, 1)),
        Just((2, 1))
    ];
    (
        any::<bool>(),
        prop::collection::vec((block, -3i64..6), 0..4),
        0usize..3,
    )
        .prop_filter_map("valid", |(sp, blocks, core)| {
            let p: Vec<usize> = blocks.iter().map(|b| b.0 .0).collect();
            let q: Vec<usize> = blocks.iter().map(|b| b.0 .1).collect();
            let ells = blocks.iter().map(|b| b.1).collect();
            let (sp_, sq) = (p.iter().sum::<usize>() + core, q.iter().sum::<usize>());
            let family = if sp {
                Family::Sp {
                    p: sp_.max(sq),
                    q: sq,
                }
            } else {
                Family::SoStar { n: sp_ + sq }
            };
            DFParam::new(family, PairPartition { p, q }, ells).ok()
        })
}

fn induced() -> impl Strategy<Value = InducedParam> {
    (
        prop::collection::vec(speh(), 0..3),
        any::<bool>(),
        0usize..3,
    )
        .prop_filter_map("valid", |(factors, sp, core)| {
            let kk: usize = factors.iter().map(|f| f.k).sum();
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
            InducedParam::new(family, factors, DFParam::trivial(tail).ok()?).ok()
        })
}

proptest! {
    #[test]
    fn rational_round_trip(x in rational()) {
        prop_assert_eq!(parse_q(&format_q(&x)).unwrap(), x);
    }

    #[test]
    fn speh_round_trip(s in speh()) {
        let text = serde_json::to_string(&speh_to_json(&s)).unwrap();
        prop_assert_eq!(parse_speh(&text).unwrap(), s);
    }

    #[test]
    fn df_round_trip(d in df()) {
        let text = serde_json::to_string(&df_to_json(&d).unwrap()).unwrap();
        prop_assert_eq!(parse_df(&text).unwrap(), d);
    }

    #[test]
    fn induced_round_trip(ip in induced()) {
        let text = serde_json::to_string(&induced_to_json(&ip).unwrap()).unwrap();
        prop_assert_eq!(&parse_induced(&text).unwrap(), &ip);
        match parse_decompose_request(&text).unwrap() {
            DecomposeRequest::Induced(back) => prop_assert_eq!(back, ip),
            DecomposeRequest::DegeneratePs(_) => prop_assert!(false, "wrong request kind"),
        }
    }

    #[test]
    fn weight_round_trip(re in prop::collection::vec(rational(), 1..6), im in prop::collection::vec(rational(), 1..6)) {
        let coords: Vec<C> = re.iter().zip(im.iter().chain(std::iter::repeat(&Q::from_integer(0)))).map(|(a, b)| C::new(*a, *b)).collect();
        let w = Weight::new(Basis::E, coords.clone());
        prop_assert_eq!(parse_weight_value(&weight_json(&w)).unwrap(), coords);
    }

    /// Arbitrary text never panics the parsers.
    #[test]
    fn parsers_total(s in ".{0,80}") {
        let _ = parse_speh(&s);
        let _ = parse_df(&s);
        let _ = parse_induced(&s);
        let _ = parse_decompose_request(&s);
    }
}

#[test]
fn wire_examples() {
    let s = parse_speh(r#"{"k":2,"ell":-1,"t_im":"0"}"#).unwrap();
    assert_eq!(s, SpehParam::new(2, Ell::Finite(-1), 0.into()).unwrap());
    let s = parse_speh(r#"{"k":1,"ell":"-inf","t_im":"3/2"}"#).unwrap();
    assert_eq!(s.ell, Ell::NegInf);
    let d = parse_df(r#"{"group":{"family":"Sp","p":3,"q":2},"pp":[[1],[1]],"ells":[0]}"#).unwrap();
    assert_eq!(indrep_core::repparams::df_range(&d), DfRange::Good);
    for bad in [
        r#"{"k":0,"ell":1}"#,
        r#"{"k":1,"ell":1.5}"#,
        r#"{"k":1,"ell":1,"t_im":"1/0"}"#,
        r#"{"k":1,"ell":1,"extra":true}"#,
        r#"{"group":{"family":"Sp","p":40,"q":0},"pp":[[],[]],"ells":[]}"#,
        r#"{"group":{"family":"Sp","p":1,"q":1},"pp":[[18446744073709551615],[1]],"ells":[0]}"#,
    ] {
        let r = parse_speh(bad)
            .map(|_| ())
            .or_else(|_| parse_df(bad).map(|_| ()));
        assert!(matches!(r, Err(Error::Validation(_))), "{bad}");
    }
}

#[test]
fn kappa_must_match_factors() {
    let j = r#"{"group":{"family":"Sp","p":2,"q":2},"kappa":[2],"factors":[{"k":1,"ell":1}],"tail":"trivial"}"#;
    assert!(matches!(parse_induced(j), Err(Error::Validation(_))));
    let j = r#"{"degenerate_ps":{"k":2,"ell":0}}"#;
    assert!(matches!(
        parse_decompose_request(j),
        Ok(DecomposeRequest::DegeneratePs(_))
    ));
}
