//! JSON wire format for parameters and results.
//!
//! Rationals travel as "num/den" strings, ℓ = −∞ as "-inf", complex
//! weight coordinates as {"re": "..", "im": ".."}.

use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cartan::{BlockDimension, CartanClass};
use crate::decompose::{Constituent, FormalSum, InducedParam, KvResult, Verdict};
use crate::error::{Error, Result};
use crate::num::{format_q, parse_q, C, Q};
use crate::parabolic::{KappaSequence, PairPartition};
use crate::repparams::{df_inf_char, DFParam, DegPSParam, Ell, SpehParam};
use crate::rootsys::{Family, Weight};

pub const SCHEMA_VERSION: &str = "1";

/// Largest group rank and Speh size accepted on the wire. Reductions
/// branch up to (k+1)-fold per factor, so this also bounds output size.
pub const MAX_WIRE_RANK: usize = 32;

fn check_rank(what: &str, r: usize) -> Result<()> {
    if r > MAX_WIRE_RANK {
        return Err(Error::Validation(format!(
            "{what} {r} exceeds the limit {MAX_WIRE_RANK}"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", deny_unknown_fields)]
pub enum GroupJson {
    Sp {
        p: usize,
        q: usize,
    },
    #[serde(rename = "SOstar")]
    SoStar {
        n: usize,
    },
}

impl GroupJson {
    /// The family, rejecting ranks above MAX_WIRE_RANK.
    pub fn checked_family(&self) -> Result<Family> {
        let f = self.family();
        let rank = match f {
            Family::Sp { p, q } => p.saturating_add(q),
            Family::SoStar { n } => n,
            _ => 0,
        };
        check_rank("group rank", rank)?;
        Ok(f)
    }

    pub fn family(&self) -> Family {
        match *self {
            GroupJson::Sp { p, q } => Family::Sp { p, q },
            GroupJson::SoStar { n } => Family::SoStar { n },
        }
    }

    pub fn from_family(f: &Family) -> Result<Self> {
        match *f {
            Family::Sp { p, q } => Ok(GroupJson::Sp { p, q }),
            Family::SoStar { n } => Ok(GroupJson::SoStar { n }),
            ref other => Err(Error::Validation(format!(
                "{other} is not an ambient group"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllJson(pub Ell);

impl Serialize for EllJson {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0 {
            Ell::NegInf => s.serialize_str("-inf"),
            Ell::Finite(l) => s.serialize_i64(l),
        }
    }
}

impl<'de> Deserialize<'de> for EllJson {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match Value::deserialize(d)? {
            Value::String(s) if s == "-inf" => Ok(EllJson(Ell::NegInf)),
            Value::Number(n) => n
                .as_i64()
                .map(|l| EllJson(Ell::Finite(l)))
                .ok_or_else(|| de::Error::custom("ell must be an integer or \"-inf\"")),
            _ => Err(de::Error::custom("ell must be an integer or \"-inf\"")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QJson(pub Q);

impl Serialize for QJson {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_q(&self.0))
    }
}

impl<'de> Deserialize<'de> for QJson {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_q(&s).map(QJson).map_err(de::Error::custom)
    }
}

fn zero_q() -> QJson {
    QJson(Q::from_integer(0))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorJson {
    pub k: usize,
    pub ell: EllJson,
    #[serde(default = "zero_q")]
    pub t_im: QJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlocksJson {
    pub pp: [Vec<usize>; 2],
    pub ells: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TailJson {
    Named(String),
    Blocks(BlocksJson),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InducedJson {
    pub group: GroupJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa: Option<Vec<usize>>,
    #[serde(default)]
    pub factors: Vec<FactorJson>,
    pub tail: TailJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DfJson {
    pub group: GroupJson,
    pub pp: [Vec<usize>; 2],
    pub ells: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DegPsJson {
    pub k: usize,
    pub ell: i64,
    #[serde(default = "zero_q")]
    pub t_im: QJson,
}

/// Payload of `decompose`: an induced module, or a U(k,k) degenerate
/// principal series under the key "degenerate_ps".
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DecomposeJson {
    DegeneratePs { degenerate_ps: DegPsJson },
    Induced(InducedJson),
}

fn from_str<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| {
        Error::Validation(format!(
            "invalid JSON at line {} column {}: {e}",
            e.line(),
            e.column()
        ))
    })
}

fn from_value<T: for<'de> Deserialize<'de>>(v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Validation(format!("invalid request: {e}")))
}

pub fn speh_from_json(f: &FactorJson) -> Result<SpehParam> {
    check_rank("k", f.k)?;
    SpehParam::new(f.k, f.ell.0, f.t_im.0)
}

pub fn speh_to_json(s: &SpehParam) -> FactorJson {
    FactorJson {
        k: s.k,
        ell: EllJson(s.ell),
        t_im: QJson(s.t_im),
    }
}

pub fn parse_speh(s: &str) -> Result<SpehParam> {
    speh_from_json(&from_str(s)?)
}

fn pp_from(pp: &[Vec<usize>; 2]) -> PairPartition {
    PairPartition {
        p: pp[0].clone(),
        q: pp[1].clone(),
    }
}

pub fn df_from_json(d: &DfJson) -> Result<DFParam> {
    DFParam::new(d.group.checked_family()?, pp_from(&d.pp), d.ells.clone())
}

pub fn df_to_json(d: &DFParam) -> Result<DfJson> {
    Ok(DfJson {
        group: GroupJson::from_family(&d.family)?,
        pp: [d.pp.p.clone(), d.pp.q.clone()],
        ells: d.ells.clone(),
    })
}

pub fn parse_df(s: &str) -> Result<DFParam> {
    df_from_json(&from_str(s)?)
}

fn tail_to_json(d: &DFParam) -> TailJson {
    if d.pp.is_empty() {
        TailJson::Named("trivial".into())
    } else {
        TailJson::Blocks(BlocksJson {
            pp: [d.pp.p.clone(), d.pp.q.clone()],
            ells: d.ells.clone(),
        })
    }
}

pub fn induced_from_json(j: &InducedJson) -> Result<InducedParam> {
    let family = j.group.checked_family()?;
    let factors: Vec<SpehParam> = j
        .factors
        .iter()
        .map(speh_from_json)
        .collect::<Result<_>>()?;
    let kappa = KappaSequence::new(factors.iter().map(|f| f.k).collect());
    if let Some(k) = &j.kappa {
        if *k != kappa.entries {
            return Err(Error::Validation(format!(
                "kappa {k:?} does not match the factor sizes {:?}",
                kappa.entries
            )));
        }
    }
    kappa.validate(&family)?;
    let tail_family = kappa.tail_family(&family)?;
    let tail = match &j.tail {
        TailJson::Named(s) if s == "trivial" => DFParam::trivial(tail_family)?,
        TailJson::Named(s) => {
            return Err(Error::Validation(format!(
                "unknown tail \"{s}\"; use \"trivial\" or blocks"
            )))
        }
        TailJson::Blocks(b) => DFParam::new(tail_family, pp_from(&b.pp), b.ells.clone())?,
    };
    InducedParam::new(family, factors, tail)
}

/// Canonical echo: factors in the given order, κ spelled out.
pub fn induced_to_json(ip: &InducedParam) -> Result<InducedJson> {
    Ok(InducedJson {
        group: GroupJson::from_family(&ip.family)?,
        kappa: Some(ip.kappa().entries),
        factors: ip.factors.iter().map(speh_to_json).collect(),
        tail: tail_to_json(&ip.tail),
    })
}

pub fn parse_induced(s: &str) -> Result<InducedParam> {
    induced_from_json(&from_str(s)?)
}

pub enum DecomposeRequest {
    DegeneratePs(DegPSParam),
    Induced(InducedParam),
}

pub fn parse_decompose_request(s: &str) -> Result<DecomposeRequest> {
    let v: Value = from_str(s)?;
    decompose_request_from_value(v)
}

pub fn decompose_request_from_value(v: Value) -> Result<DecomposeRequest> {
    match from_value::<DecomposeJson>(v.clone()) {
        Ok(DecomposeJson::DegeneratePs { degenerate_ps: d }) => {
            if d.k == 0 {
                return Err(Error::Validation(
                    "degenerate principal series needs k >= 1".into(),
                ));
            }
            check_rank("k", d.k)?;
            // Same bounds as a Speh parameter.
            SpehParam::new(d.k, Ell::Finite(d.ell.max(0)), d.t_im.0)?;
            if d.ell.abs() > crate::repparams::MAX_MAGNITUDE {
                return Err(Error::Validation("ell out of supported magnitude".into()));
            }
            Ok(DecomposeRequest::DegeneratePs(DegPSParam {
                k: d.k,
                ell: d.ell,
                t_im: d.t_im.0,
            }))
        }
        Ok(DecomposeJson::Induced(j)) => Ok(DecomposeRequest::Induced(induced_from_json(&j)?)),
        // Re-parse as the main shape for a specific message.
        Err(_) => Ok(DecomposeRequest::Induced(induced_from_json(&from_value(
            v,
        )?)?)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CartansJson {
    pub group: GroupJson,
    #[serde(default)]
    pub kappa: Vec<usize>,
}

/// Group and κ for `cartans`, κ validated against the group.
pub fn parse_cartans_request(s: &str) -> Result<(Family, KappaSequence, CartansJson)> {
    let req: CartansJson = from_str(s)?;
    let family = req.group.checked_family()?;
    crate::rootsys::build_group(family.clone())?;
    let kappa = KappaSequence::new(req.kappa.clone());
    kappa.validate(&family)?;
    Ok((family, kappa, req))
}

pub fn q_json(x: &Q) -> Value {
    Value::String(format_q(x))
}

pub fn c_json(c: &C) -> Value {
    if c.is_real() {
        q_json(&c.re)
    } else {
        json!({"re": format_q(&c.re), "im": format_q(&c.im)})
    }
}

pub fn weight_json(w: &Weight) -> Value {
    Value::Array(w.coords.iter().map(c_json).collect())
}

pub fn parse_weight_value(v: &Value) -> Result<Vec<C>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Validation("weight must be an array".into()))?;
    arr.iter()
        .map(|x| match x {
            Value::String(s) => Ok(C::real(parse_q(s)?)),
            Value::Object(o) => {
                let get = |k: &str| -> Result<Q> {
                    let s = o.get(k).and_then(Value::as_str).ok_or_else(|| {
                        Error::Validation(format!("complex coordinate needs \"{k}\""))
                    })?;
                    parse_q(s)
                };
                if o.len() != 2 {
                    return Err(Error::Validation(
                        "complex coordinate has keys re, im only".into(),
                    ));
                }
                Ok(C::new(get("re")?, get("im")?))
            }
            _ => Err(Error::Validation(
                "weight coordinate must be a string or {re, im}".into(),
            )),
        })
        .collect()
}

fn range_name<T: Serialize>(r: &T) -> Value {
    serde_json::to_value(r).unwrap_or(Value::Null)
}

pub fn constituent_json(c: &Constituent) -> Result<Value> {
    Ok(json!({
        "param": induced_to_json(&c.param)?,
        "tail_range": range_name(&c.range),
        "good_range_presented": c.good_range_presented,
        "weakly_fair_caveat": c.weakly_fair_caveat,
        "unknown": c.unknown,
        "tail_infinitesimal_character": weight_json(&df_inf_char(&c.param.tail).weight),
        "infinitesimal_character": weight_json(&crate::repparams::InfinitesimalCharacter::new(
            c.param.weyl_type(), &c.param.raw_inf_char()).weight),
    }))
}

pub fn formal_sum_json(fs: &FormalSum) -> Result<Value> {
    Ok(Value::Array(
        fs.constituents
            .iter()
            .map(constituent_json)
            .collect::<Result<_>>()?,
    ))
}

pub fn kv_json(p: &DegPSParam, r: &KvResult) -> Value {
    match r {
        KvResult::Irreducible => json!({"irreducible": true, "constituents": []}),
        KvResult::Split(v) => json!({
            "irreducible": false,
            "constituents": v.iter().map(|c| json!({"k": c.k, "ell": c.ell, "i": c.i,
                "label": format!("B_{}^({})({})", c.k, c.i, c.ell)})).collect::<Vec<_>>(),
        }),
    }
    .as_object()
    .map(|o| {
        let mut o = o.clone();
        o.insert(
            "degenerate_ps".into(),
            json!({"k": p.k, "ell": p.ell, "t_im": format_q(&p.t_im)}),
        );
        Value::Object(o)
    })
    .unwrap_or(Value::Null)
}

pub fn verdict_json(v: &Verdict) -> Result<Value> {
    Ok(match v {
        Verdict::Irreducible { reason } => json!({"verdict": "Irreducible", "reason": reason}),
        Verdict::ReducedTo { problem, reason } => json!({
            "verdict": "ReducedTo",
            "reduced_problem": induced_to_json(problem)?,
            "reason": reason,
        }),
        Verdict::Unknown { reason } => json!({"verdict": "Unknown", "reason": reason}),
    })
}

pub fn cartan_json(c: &CartanClass) -> Value {
    json!({"J": c.j.iter().collect::<Vec<_>>(), "label": c.to_string()})
}

pub fn block_dimension_json(b: &BlockDimension) -> Value {
    json!({
        "m": b.m,
        "weyl_order": b.weyl_order.to_string(),
        "wgh_order": b.wgh_order.to_string(),
        "wgh_method": b.wgh_method,
        "block_dimension": b.value.to_string(),
    })
}

/// Response envelope.
pub fn envelope(command: &str, input: Value, body: Value) -> Value {
    let mut out = serde_json::Map::new();
    out.insert("schema_version".into(), json!(SCHEMA_VERSION));
    out.insert("command".into(), json!(command));
    out.insert("input".into(), input);
    if let Value::Object(b) = body {
        out.extend(b);
    } else {
        out.insert("result".into(), body);
    }
    Value::Object(out)
}

pub fn error_envelope(command: &str, err: &Error) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "error": {"kind": err.kind(), "message": err.to_string(), "exit_code": err.exit_code()},
    })
}
