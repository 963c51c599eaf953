//! JSON schemas for curves, section specs, obstruction candidates, and
//! point configurations, with conversions into the library types. Parsing
//! failures come back as plain messages; the caller turns them into error
//! verdicts with exit code 2.

use confsec_cohomology::CandidatePullback;
use confsec_core::curve::{self, Curve, RoundCurveSpec};
use confsec_core::section::SectionSpec;
use confsec_core::word::{parse_letters, BraidWord};
use confsec_geometry::{PlanarConfig, SphereConfig};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

pub type InputError = String;

pub(crate) fn bad(e: impl std::fmt::Display) -> InputError {
    e.to_string()
}

/// Curve descriptions: a round curve around a puncture subset, the image
/// of a round curve under a braid, or raw coordinates.
#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum CurveJson {
    Round { n: usize, subset: Vec<usize> },
    Image { n: usize, base: Box<CurveJson>, conjugator: String },
    Coords { n: usize, coords: Vec<String> },
}

impl CurveJson {
    pub fn parse(text: &str) -> Result<Self, InputError> {
        serde_json::from_str(text).map_err(|e| format!("bad curve JSON: {e}"))
    }

    pub fn to_curve(&self) -> Result<Curve, InputError> {
        match self {
            CurveJson::Round { n, subset } => {
                let spec = RoundCurveSpec::new(*n, subset.clone()).map_err(bad)?;
                curve::round_curve(&spec).map_err(bad)
            }
            CurveJson::Image { n, base, conjugator } => {
                let base_curve = match base.as_ref() {
                    CurveJson::Round { n: base_n, subset } => {
                        if base_n != n {
                            return Err(format!(
                                "base curve lives on {base_n} strands, the image on {n}"
                            ));
                        }
                        let spec = RoundCurveSpec::new(*base_n, subset.clone()).map_err(bad)?;
                        curve::round_curve(&spec).map_err(bad)?
                    }
                    _ => return Err("the base of an image curve must be a round curve".into()),
                };
                let word = parse_word_text(*n, conjugator)?;
                curve::act(&word, &base_curve).map_err(bad)
            }
            CurveJson::Coords { n, coords } => {
                let parsed = coords
                    .iter()
                    .map(|s| {
                        BigInt::from_str(s).map_err(|e| format!("bad coordinate {s:?}: {e}"))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                curve::from_coords(*n, parsed).map_err(bad)
            }
        }
    }
}

/// Braid word text: either the standalone `n=4; 1 -2` form (the strand
/// count must match `n`) or bare whitespace-separated letters.
pub fn parse_word_text(n: usize, text: &str) -> Result<BraidWord, InputError> {
    let trimmed = text.trim();
    if trimmed.starts_with("n=") {
        let word: BraidWord = trimmed.parse().map_err(bad)?;
        if word.n() != n {
            return Err(format!("word is on {} strands, expected {n}", word.n()));
        }
        Ok(word)
    } else {
        parse_letters(n, trimmed).map_err(bad)
    }
}

#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SectionSpecJson {
    pub n: usize,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default)]
    pub weights: Vec<WeightEntry>,
}

#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct WeightEntry {
    pub i: usize,
    pub j: usize,
    pub w: i64,
}

impl SectionSpecJson {
    pub fn parse(text: &str) -> Result<Self, InputError> {
        serde_json::from_str(text).map_err(|e| format!("bad section spec JSON: {e}"))
    }

    pub fn to_spec(&self) -> Result<SectionSpec, InputError> {
        let entries: Vec<(usize, usize, i64)> =
            self.weights.iter().map(|e| (e.i, e.j, e.w)).collect();
        match self.kind.as_str() {
            "near_k" => {
                let k = self.k.ok_or("near_k sections need the field \"k\"")?;
                SectionSpec::near_k(self.n, k, &entries).map_err(bad)
            }
            "infinity" => {
                if self.k.is_some() {
                    return Err("infinity sections take no \"k\"".into());
                }
                SectionSpec::infinity(self.n, &entries).map_err(bad)
            }
            other => Err(format!("unknown section kind {other:?}")),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObstructionJson {
    pub g: u32,
    pub n: usize,
    #[serde(default)]
    pub preset: Option<String>,
    #[serde(default)]
    pub fstar: Option<FstarJson>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FstarJson {
    pub matrix: Vec<Vec<serde_json::Value>>,
    pub omega: serde_json::Value,
}

/// Rationals arrive as JSON integers or as `"p/q"` strings. Floats are
/// rejected; they cannot carry exact values.
pub fn rational_value(v: &serde_json::Value) -> Result<BigRational, InputError> {
    match v {
        serde_json::Value::Number(num) => match num.as_i64() {
            Some(i) => Ok(BigRational::from_integer(i.into())),
            None => Err(format!(
                "rational entries must be integers or \"p/q\" strings, got {num}"
            )),
        },
        serde_json::Value::String(s) => {
            BigRational::from_str(s).map_err(|e| format!("bad rational {s:?}: {e}"))
        }
        other => Err(format!(
            "rational entries must be integers or \"p/q\" strings, got {other}"
        )),
    }
}

impl ObstructionJson {
    pub fn parse(text: &str) -> Result<Self, InputError> {
        serde_json::from_str(text).map_err(|e| format!("bad obstruction JSON: {e}"))
    }

    pub fn to_candidate(&self) -> Result<CandidatePullback, InputError> {
        match (&self.preset, &self.fstar) {
            (Some(_), Some(_)) => Err("give either \"preset\" or \"fstar\", not both".into()),
            (None, None) => Err("give one of \"preset\" or \"fstar\"".into()),
            (Some(p), None) => match p.as_str() {
                "case1a" => CandidatePullback::vanishing(self.g, self.n).map_err(bad),
                "case1b" => CandidatePullback::rank_one(self.g, self.n).map_err(bad),
                "case2" => CandidatePullback::first_projection(self.g, self.n).map_err(bad),
                other => Err(format!(
                    "unknown obstruction preset {other:?}; available: case1a, case1b, case2"
                )),
            },
            (None, Some(f)) => {
                let matrix = f
                    .matrix
                    .iter()
                    .map(|row| row.iter().map(rational_value).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()?;
                let omega = rational_value(&f.omega)?;
                CandidatePullback::from_matrix(self.g, self.n, &matrix, omega).map_err(bad)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigJson {
    pub space: String,
    pub points: Vec<Vec<f64>>,
}

pub enum ParsedConfig {
    Plane(PlanarConfig),
    Sphere(SphereConfig),
}

impl ConfigJson {
    pub fn parse(text: &str) -> Result<Self, InputError> {
        serde_json::from_str(text).map_err(|e| format!("bad configuration JSON: {e}"))
    }

    pub fn to_config(&self) -> Result<ParsedConfig, InputError> {
        match self.space.as_str() {
            "plane" => {
                let points = self
                    .points
                    .iter()
                    .map(|p| match p.as_slice() {
                        [x, y] => Ok([*x, *y]),
                        _ => Err("plane points have two coordinates".to_string()),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                PlanarConfig::new(points).map(ParsedConfig::Plane).map_err(bad)
            }
            "sphere" => {
                let points = self
                    .points
                    .iter()
                    .map(|p| match p.as_slice() {
                        [x, y, z] => Ok([*x, *y, *z]),
                        _ => Err("sphere points have three coordinates".to_string()),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                SphereConfig::new(points).map(ParsedConfig::Sphere).map_err(bad)
            }
            other => Err(format!("unknown space {other:?}; use \"plane\" or \"sphere\"")),
        }
    }

    pub fn from_planar(cfg: &PlanarConfig) -> Self {
        ConfigJson {
            space: "plane".into(),
            points: cfg.points().iter().map(|p| p.to_vec()).collect(),
        }
    }

    pub fn from_sphere(cfg: &SphereConfig) -> Self {
        ConfigJson {
            space: "sphere".into(),
            points: cfg.points().iter().map(|p| p.to_vec()).collect(),
        }
    }
}
