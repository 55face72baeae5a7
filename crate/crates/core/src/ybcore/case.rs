use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::algebra::Scalar;
use crate::ybcore::FieldValue;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed case: {0}")]
pub struct CaseParseError(pub String);

/// The verification procedures, by their command-line identifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckKind {
    YangBaxter,
    Reversibility,
    Lax,
    LaxDual,
    ProjectiveForm,
    ChainConserve,
}

impl CheckKind {
    pub const ALL: [CheckKind; 6] = [
        CheckKind::YangBaxter,
        CheckKind::Reversibility,
        CheckKind::Lax,
        CheckKind::LaxDual,
        CheckKind::ProjectiveForm,
        CheckKind::ChainConserve,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckKind::YangBaxter => "yb",
            CheckKind::Reversibility => "reversibility",
            CheckKind::Lax => "lax",
            CheckKind::LaxDual => "lax-dual",
            CheckKind::ProjectiveForm => "projective-form",
            CheckKind::ChainConserve => "chain-conserve",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckKind {
    type Err = CaseParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| CaseParseError(format!("unknown check {s:?}")))
    }
}

/// Explicit inputs of one trial of one check.
#[derive(Debug, Clone)]
pub enum CheckCase<F, X> {
    YangBaxter {
        lambda: F,
        mu: F,
        nu: F,
        x: X,
        y: X,
        z: X,
    },
    Reversibility {
        lambda: F,
        mu: F,
        x: X,
        y: X,
    },
    Lax {
        lambda: F,
        mu: F,
        zeta: F,
        x: X,
        y: X,
    },
    /// `(y₃, z₂) = R(μ, ν)(y, z)` with `λ` as the spectral parameter.
    LaxDual {
        mu: F,
        nu: F,
        lambda: F,
        y: X,
        z: X,
    },
    MapForm {
        lambda: F,
        mu: F,
        x: X,
        y: X,
    },
}

impl<F: Scalar, X: FieldValue<F>> CheckCase<F, X> {
    pub fn kind(&self) -> CheckKind {
        match self {
            CheckCase::YangBaxter { .. } => CheckKind::YangBaxter,
            CheckCase::Reversibility { .. } => CheckKind::Reversibility,
            CheckCase::Lax { .. } => CheckKind::Lax,
            CheckCase::LaxDual { .. } => CheckKind::LaxDual,
            CheckCase::MapForm { .. } => CheckKind::ProjectiveForm,
        }
    }

    pub fn to_json(&self) -> Value {
        let r = |v: &F| Value::String(v.render());
        let (params, fields) = match self {
            CheckCase::YangBaxter { lambda, mu, nu, x, y, z } => (
                json!({"lambda": r(lambda), "mu": r(mu), "nu": r(nu)}),
                json!({"x": x.to_json(), "y": y.to_json(), "z": z.to_json()}),
            ),
            CheckCase::Reversibility { lambda, mu, x, y } | CheckCase::MapForm { lambda, mu, x, y } => {
                (json!({"lambda": r(lambda), "mu": r(mu)}), json!({"x": x.to_json(), "y": y.to_json()}))
            }
            CheckCase::Lax { lambda, mu, zeta, x, y } => (
                json!({"lambda": r(lambda), "mu": r(mu), "zeta": r(zeta)}),
                json!({"x": x.to_json(), "y": y.to_json()}),
            ),
            CheckCase::LaxDual { mu, nu, lambda, y, z } => {
                (json!({"mu": r(mu), "nu": r(nu), "lambda": r(lambda)}), json!({"y": y.to_json(), "z": z.to_json()}))
            }
        };
        json!({
            "check": self.kind().as_str(),
            "field_kind": X::KIND,
            "params": params,
            "fields": fields,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, CaseParseError> {
        let kind: CheckKind =
            v.get("check").and_then(Value::as_str).ok_or_else(|| CaseParseError("missing check".into()))?.parse()?;
        let empty = Map::new();
        let params = v.get("params").and_then(Value::as_object).unwrap_or(&empty);
        let fields = v.get("fields").and_then(Value::as_object).unwrap_or(&empty);
        let p = |name: &str| -> Result<F, CaseParseError> {
            let s = params
                .get(name)
                .and_then(Value::as_str)
                .ok_or_else(|| CaseParseError(format!("missing parameter {name}")))?;
            F::parse(s).map_err(|e| CaseParseError(e.to_string()))
        };
        let f = |name: &str| -> Result<X, CaseParseError> {
            X::from_json(fields.get(name).ok_or_else(|| CaseParseError(format!("missing field {name}")))?)
        };
        Ok(match kind {
            CheckKind::YangBaxter => CheckCase::YangBaxter {
                lambda: p("lambda")?,
                mu: p("mu")?,
                nu: p("nu")?,
                x: f("x")?,
                y: f("y")?,
                z: f("z")?,
            },
            CheckKind::Reversibility => {
                CheckCase::Reversibility { lambda: p("lambda")?, mu: p("mu")?, x: f("x")?, y: f("y")? }
            }
            CheckKind::Lax => {
                CheckCase::Lax { lambda: p("lambda")?, mu: p("mu")?, zeta: p("zeta")?, x: f("x")?, y: f("y")? }
            }
            CheckKind::LaxDual => {
                CheckCase::LaxDual { mu: p("mu")?, nu: p("nu")?, lambda: p("lambda")?, y: f("y")?, z: f("z")? }
            }
            CheckKind::ProjectiveForm => {
                CheckCase::MapForm { lambda: p("lambda")?, mu: p("mu")?, x: f("x")?, y: f("y")? }
            }
            CheckKind::ChainConserve => return Err(CaseParseError("chain runs are not single-trial cases".into())),
        })
    }
}

/// Parses a JSON array of scalar strings.
pub(crate) fn scalars_from_json<F: Scalar>(v: &Value) -> Result<Vec<F>, CaseParseError> {
    v.as_array()
        .ok_or_else(|| CaseParseError("expected an array of scalars".into()))?
        .iter()
        .map(|e| {
            let s = e.as_str().ok_or_else(|| CaseParseError("scalar must be a string".into()))?;
            F::parse(s).map_err(|e| CaseParseError(e.to_string()))
        })
        .collect()
}

pub(crate) fn scalars_to_json<F: Scalar>(v: &[F]) -> Value {
    Value::Array(v.iter().map(|s| Value::String(s.render())).collect())
}
