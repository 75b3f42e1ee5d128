//! JSON input schemas.

use std::str::FromStr;

use serde::Deserialize;

use crate::curves::SplitCoverModel;
use crate::eisenstein::{ConstantTermProfile, DensityPolynomial, FourierContext};
use crate::error::{Error, Result};
use crate::exactalg::{IntPolynomial, Rational};
use crate::lfunctions::LEtaFunction;

pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("malformed JSON input: {e}")))
}

/// A rational given as a JSON integer or as a `"p/q"` string.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum RationalInput {
    Int(i64),
    Text(String),
}

impl RationalInput {
    pub fn value(&self) -> Result<Rational> {
        match self {
            RationalInput::Int(n) => Ok(Rational::from_integer((*n).into())),
            RationalInput::Text(s) => Rational::from_str(s.trim())
                .map_err(|_| Error::InvalidInput(format!("{s:?} is not a rational number"))),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LInput {
    pub q: u64,
    #[serde(rename = "L")]
    pub l: Vec<i64>,
}

impl LInput {
    pub fn build(&self) -> Result<LEtaFunction> {
        LEtaFunction::from_i64s(self.q, &self.l)
    }

    pub fn poly(&self) -> IntPolynomial {
        IntPolynomial::from_i64s(&self.l)
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelInput {
    pub p: u64,
    pub f1: Vec<i64>,
    pub f2: Vec<i64>,
    pub m: Option<u32>,
}

impl ModelInput {
    pub fn build(&self) -> Result<SplitCoverModel> {
        SplitCoverModel::new(self.p, &self.f1, &self.f2)
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CountsInput {
    pub q: u64,
    pub g: usize,
    pub counts: Vec<u64>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum ZetaInput {
    Model(ModelInput),
    Counts(CountsInput),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContextInput {
    pub n: u32,
    pub q: u64,
    pub w: i64,
    #[serde(rename = "degLfrak")]
    pub deg_l_frak: i64,
    #[serde(rename = "degE")]
    pub deg_e: i64,
    #[serde(rename = "etaL")]
    pub eta_l: i64,
}

impl ContextInput {
    pub fn build(&self) -> Result<FourierContext> {
        FourierContext::new(
            self.n,
            self.q,
            self.w,
            self.deg_l_frak,
            self.deg_e,
            self.eta_l,
        )
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DensityInput {
    #[serde(default)]
    pub label: Option<String>,
    pub m: Vec<RationalInput>,
    #[serde(default)]
    pub epsilon: Option<i64>,
}

impl DensityInput {
    pub fn build(&self) -> Result<DensityPolynomial> {
        let m = self
            .m
            .iter()
            .map(RationalInput::value)
            .collect::<Result<Vec<_>>>()?;
        DensityPolynomial::new(m, self.epsilon)
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZetaXInput {
    pub g: usize,
    #[serde(rename = "P")]
    pub p: Vec<i64>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileInput {
    pub q: u64,
    #[serde(rename = "L")]
    pub l: Vec<i64>,
    pub d: i64,
    #[serde(rename = "etaL", default = "plus_one")]
    pub eta_l: i64,
}

fn plus_one() -> i64 {
    1
}

impl ProfileInput {
    pub fn build(&self) -> Result<ConstantTermProfile> {
        ConstantTermProfile::with_d(
            LEtaFunction::from_i64s(self.q, &self.l)?,
            self.d,
            self.eta_l,
        )
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PermSumInput {
    pub q: u64,
    #[serde(rename = "L")]
    pub l: Vec<i64>,
    pub d: i64,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EisInput {
    pub context: ContextInput,
    #[serde(rename = "L", default)]
    pub l: Option<Vec<i64>>,
    #[serde(default)]
    pub density: Option<DensityInput>,
    #[serde(default)]
    pub zeta_x: Option<ZetaXInput>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DegreeInput {
    pub q: u64,
    #[serde(rename = "L")]
    pub l: Vec<i64>,
    pub d: i64,
    #[serde(rename = "etaL", default = "plus_one")]
    pub eta_l: i64,
    #[serde(default)]
    pub r_max: Option<u32>,
    #[serde(default)]
    pub den_terms: Vec<DensityInput>,
    #[serde(default)]
    pub family: Vec<ProfileInput>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CmInput {
    pub family: Vec<ProfileInput>,
    #[serde(default)]
    pub multi_index: Option<Vec<u32>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FpolyInput {
    pub n: u32,
}

/// Fixture set for `verify`.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bundle {
    #[serde(default)]
    pub l_functions: Vec<LInput>,
    #[serde(default)]
    pub curves: Vec<ModelInput>,
    #[serde(default)]
    pub d_values: Option<Vec<i64>>,
    #[serde(default)]
    pub densities: Vec<DensityInput>,
    #[serde(default)]
    pub fpoly_max: Option<u32>,
}

impl Bundle {
    pub fn from_json(text: &str) -> Result<Self> {
        parse(text)
    }

    pub fn is_empty(&self) -> bool {
        self.l_functions.is_empty() && self.curves.is_empty() && self.densities.is_empty()
    }

    /// FIX-L2-style quadratic, the trivial L, the F_3 genus-two cover and
    /// three small densities.
    pub fn default_bundle() -> Self {
        let den = |m: &[i64]| DensityInput {
            label: None,
            m: m.iter().map(|&c| RationalInput::Int(c)).collect(),
            epsilon: Some(1),
        };
        Bundle {
            l_functions: vec![
                LInput {
                    q: 2,
                    l: vec![1, -2, 2],
                },
                LInput { q: 2, l: vec![1] },
            ],
            curves: vec![ModelInput {
                p: 3,
                f1: vec![1, 0, 1],
                f2: vec![1, 1, 0, 0, 1],
                m: Some(12),
            }],
            d_values: None,
            densities: vec![den(&[1]), den(&[1, 1]), den(&[1, 0, 1])],
            fpoly_max: None,
        }
    }
}
