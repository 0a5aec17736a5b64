//! Serializable report types.
//!
//! Rationals travel as `"p/q"` strings and 1-PS weights as JSON integers of
//! unbounded size, so nothing passes through a float.

use std::fmt;
use std::str::FromStr;

use hesselink::{
    BoundsReport, Classification, GroupElement, MultiplicityReport, OneParamSubgroup, ProjectivePoint, Rational,
    StratumLabel, Theorem1Report,
};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

/// A rational that serializes as `"numerator/denominator"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exact(pub Rational);

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for Exact {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (p, q) = s.split_once('/').ok_or_else(|| format!("expected p/q, got {s:?}"))?;
        let p: BigInt = p.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
        let q: BigInt = q.parse().map_err(|_| format!("bad denominator in {s:?}"))?;
        if q.is_zero() || q.sign() == num_bigint::Sign::Minus {
            return Err(format!("denominator must be positive in {s:?}"));
        }
        Ok(Exact(Rational::new(p, q)))
    }
}

impl From<&Rational> for Exact {
    fn from(q: &Rational) -> Self {
        Exact(q.clone())
    }
}

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(de::Error::custom)
    }
}

/// An integer of any size, written as a bare JSON number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Int(pub BigInt);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let n: serde_json::Number = self.0.to_string().parse().map_err(serde::ser::Error::custom)?;
        n.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        n.to_string().parse().map(Int).map_err(|_| de::Error::custom(format!("{n} is not an integer")))
    }
}

/// Integer weights of a 1-PS.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weights(pub Vec<BigInt>);

impl From<&OneParamSubgroup> for Weights {
    fn from(l: &OneParamSubgroup) -> Self {
        Weights(l.weights().to_vec())
    }
}

impl Serialize for Weights {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for w in &self.0 {
            seq.serialize_element(&Int(w.clone()))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Weights {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(Weights(Vec::<Int>::deserialize(d)?.into_iter().map(|i| i.0).collect()))
    }
}

impl fmt::Display for Weights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|w| w.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn exact_vec(v: &[Rational]) -> Vec<Exact> {
    v.iter().map(Exact::from).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub r: usize,
    pub d: u32,
    pub polynomial: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum StratumJson {
    Unstable {
        lambda_class: Weights,
        delta_squared: Exact,
        mu: Exact,
        witness_lambda: Weights,
        witness_g: Vec<Vec<Exact>>,
    },
    Semistable {
        evaluated: usize,
        message: String,
    },
}

impl StratumJson {
    pub fn from_label(label: &StratumLabel) -> Self {
        StratumJson::Unstable {
            lambda_class: (&label.lambda_class).into(),
            delta_squared: (&label.delta_squared).into(),
            mu: (&label.mu).into(),
            witness_lambda: (&label.witness_lambda).into(),
            witness_g: matrix(&label.witness_g),
        }
    }

    pub fn from_classification(c: &Classification) -> Self {
        match c {
            Classification::Unstable(label) => Self::from_label(label),
            Classification::NoDestabilizerFound(v) => {
                StratumJson::Semistable { evaluated: v.evaluated, message: v.message.to_string() }
            }
        }
    }
}

fn matrix(g: &GroupElement) -> Vec<Vec<Exact>> {
    g.rows().iter().map(|row| exact_vec(row)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsJson {
    pub lower: Exact,
    pub upper: Exact,
    pub a: Int,
    pub b: Int,
    pub contains_multiplicity: bool,
}

impl BoundsJson {
    pub fn new(b: &BoundsReport, n: u32) -> Self {
        BoundsJson {
            lower: (&b.lower).into(),
            upper: (&b.upper).into(),
            a: Int(b.a.clone()),
            b: Int(b.b.clone()),
            contains_multiplicity: b.contains(n),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityJson {
    pub value: u32,
    pub point: Vec<Exact>,
    pub points_examined: usize,
}

impl MultiplicityJson {
    pub fn new(m: &MultiplicityReport, points_examined: usize) -> Self {
        MultiplicityJson { value: m.value, point: exact_vec(m.point.coords()), points_examined }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Json {
    pub shift: u32,
    pub base_state_size: usize,
    pub shifted_state_size: usize,
    pub base_delta_squared: Exact,
    pub shifted_delta_squared: Exact,
    pub expected_delta_squared: Exact,
    pub base_class: Option<Weights>,
    pub shifted_class: Option<Weights>,
    pub delta_matches: bool,
    pub class_matches: bool,
    pub precondition_met: bool,
    pub holds: bool,
}

impl From<&Theorem1Report> for Theorem1Json {
    fn from(t: &Theorem1Report) -> Self {
        Theorem1Json {
            shift: t.shift,
            base_state_size: t.base.state.len(),
            shifted_state_size: t.shifted.state.len(),
            base_delta_squared: (&t.base.delta_squared).into(),
            shifted_delta_squared: (&t.shifted.delta_squared).into(),
            expected_delta_squared: (&t.expected_delta_squared).into(),
            base_class: t.base.lambda_class().as_ref().map(Weights::from),
            shifted_class: t.shifted.lambda_class().as_ref().map(Weights::from),
            delta_matches: t.delta_matches,
            class_matches: t.class_matches,
            precondition_met: t.precondition_met,
            holds: t.holds(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchMeta {
    pub budget: usize,
    pub seed: u64,
    pub candidate_points: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub input: InputEcho,
    pub stratum: StratumJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundsJson>,
    pub multiplicity: MultiplicityJson,
    /// `None` when `d < r + 1` or the search found no destabilizer.
    pub singular_if_unstable: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem1: Option<Theorem1Json>,
    pub search: SearchMeta,
    pub warnings: Vec<String>,
    /// Wall-clock data, kept apart from the deterministic fields.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Outcome {
    pub input: InputEcho,
    pub theorem1: Theorem1Json,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorJson {
    pub kind: String,
    pub message: String,
}

/// One line of batch output that failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchError {
    pub line: usize,
    pub input: String,
    pub error: ErrorJson,
}

/// Decimal rendering for terminals: exact integers print as is, anything else
/// as `p/q ≈ x.xxxxxx`.
pub fn approx(q: &Rational) -> String {
    if q.is_integer() {
        return q.numer().to_string();
    }
    let scale = BigInt::from(1_000_000);
    let scaled = (q.abs() * Rational::from_integer(scale.clone())).round().to_integer();
    let sign = if q < &Rational::zero() { "-" } else { "" };
    let whole = &scaled / &scale;
    let frac = &scaled % &scale;
    format!("{}/{} ≈ {sign}{whole}.{frac:0>6}", q.numer(), q.denom())
}

pub fn point_text(coords: &[Exact]) -> String {
    let p: Vec<Rational> = coords.iter().map(|c| c.0.clone()).collect();
    ProjectivePoint::new(p).map(|p| p.to_string()).unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_round_trip() {
        for s in ["12/1", "-8/3", "0/1"] {
            let e: Exact = s.parse().unwrap();
            assert_eq!(e.to_string(), s);
        }
        assert!("3".parse::<Exact>().is_err());
        assert!("1/0".parse::<Exact>().is_err());
        assert!("1/-2".parse::<Exact>().is_err());
    }

    #[test]
    fn huge_weights_stay_integers() {
        let w = Weights(vec!["123456789012345678901234567890".parse().unwrap(), BigInt::from(-1)]);
        let text = serde_json::to_string(&w).unwrap();
        assert_eq!(text, "[123456789012345678901234567890,-1]");
        assert_eq!(serde_json::from_str::<Weights>(&text).unwrap(), w);
        assert!(serde_json::from_str::<Weights>("[1.5]").is_err());
    }

    #[test]
    fn approximations() {
        assert_eq!(approx(&Rational::new(8.into(), 3.into())), "8/3 ≈ 2.666667");
        assert_eq!(approx(&Rational::new((-3).into(), 14.into())), "-3/14 ≈ -0.214286");
        assert_eq!(approx(&Rational::from_integer(12.into())), "12");
        assert_eq!(approx(&Rational::new(1.into(), 3_000_000.into())), "1/3000000 ≈ 0.000000");
    }
}
