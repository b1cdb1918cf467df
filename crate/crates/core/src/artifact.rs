//! JSON interchange for curves and codes.

use serde::{Deserialize, Serialize};

use crate::curves::{EdwardsCurve, WeierstrassCurve};
use crate::field::{Field, FieldSpec};
use crate::goppa::{GoppaError, LinearCode, PointPolicy};
use crate::notation::{parse_divisor, parse_edwards_point, parse_edwards_points};
use crate::riemann_roch::Divisor;
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdwardsCurveJson {
    pub field: FieldSpec,
    pub d: u32,
}

impl EdwardsCurveJson {
    pub fn from_curve(curve: &EdwardsCurve) -> Self {
        Self {
            field: curve.field().spec().clone(),
            d: curve.d().value(),
        }
    }

    pub fn to_curve(&self) -> Result<EdwardsCurve, Error> {
        let field = Field::from_spec(&self.field)?;
        Ok(EdwardsCurve::new(field.element(self.d as u64)?)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeierstrassCurveJson {
    pub field: FieldSpec,
    pub a: u32,
    pub b: u32,
}

impl WeierstrassCurveJson {
    pub fn from_curve(curve: &WeierstrassCurve) -> Self {
        Self {
            field: curve.field().spec().clone(),
            a: curve.a().value(),
            b: curve.b().value(),
        }
    }

    pub fn to_curve(&self) -> Result<WeierstrassCurve, Error> {
        let field = Field::from_spec(&self.field)?;
        Ok(WeierstrassCurve::new(
            field.element(self.a as u64)?,
            field.element(self.b as u64)?,
        )?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorTerm {
    pub point: String,
    pub mult: i64,
}

pub fn divisor_to_json(d: &Divisor) -> Vec<DivisorTerm> {
    d.terms()
        .map(|(p, n)| DivisorTerm {
            point: p.to_string(),
            mult: n,
        })
        .collect()
}

pub fn divisor_from_json(curve: &EdwardsCurve, terms: &[DivisorTerm]) -> Result<Divisor, Error> {
    let points = terms
        .iter()
        .map(|t| Ok((parse_edwards_point(curve, &t.point)?, t.mult)))
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(Divisor::new(curve, points)?)
}

/// Everything needed to rebuild and check a code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeArtifact {
    pub field: FieldSpec,
    pub curve: EdwardsCurveJson,
    pub divisor: Vec<DivisorTerm>,
    pub points: Vec<String>,
    #[serde(rename = "G")]
    pub g: Vec<Vec<u32>>,
    pub perm: Vec<usize>,
    #[serde(rename = "G_std")]
    pub g_std: Vec<Vec<u32>>,
    #[serde(rename = "H")]
    pub h: Vec<Vec<u32>>,
    pub d_designed: i64,
    pub d_exact: Option<usize>,
}

impl CodeArtifact {
    pub fn from_code(code: &LinearCode) -> Self {
        Self {
            field: code.curve().field().spec().clone(),
            curve: EdwardsCurveJson::from_curve(code.curve()),
            divisor: divisor_to_json(code.divisor()),
            points: code.points().iter().map(ToString::to_string).collect(),
            g: code.generator().to_rows(),
            perm: code.permutation().to_vec(),
            g_std: code.standard_generator().to_rows(),
            h: code.parity_check().to_rows(),
            d_designed: code.designed_distance(),
            d_exact: code.exact_distance(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("artifact serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, Error> {
        serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))
    }

    /// Rebuilds the code from curve, divisor and points, and checks that the
    /// stored matrices match. The stored exact distance is carried over as is.
    pub fn to_code(&self) -> Result<LinearCode, Error> {
        let corrupt = |what: &str| Error::from(GoppaError::CorruptArtifact(what.to_string()));
        if self.curve.field != self.field {
            return Err(corrupt("curve field differs from code field"));
        }
        let curve = self.curve.to_curve()?;
        let divisor = divisor_from_json(&curve, &self.divisor)?;
        let points = parse_edwards_points(&curve, &self.points.join(","))?;
        let mut code = LinearCode::build(&curve, &divisor, &PointPolicy::Explicit(points))?;
        if code.generator().to_rows() != self.g {
            return Err(corrupt("G does not match the rebuilt code"));
        }
        if code.permutation() != self.perm.as_slice() {
            return Err(corrupt("perm does not match the rebuilt code"));
        }
        if code.standard_generator().to_rows() != self.g_std {
            return Err(corrupt("G_std does not match the rebuilt code"));
        }
        if code.parity_check().to_rows() != self.h {
            return Err(corrupt("H does not match the rebuilt code"));
        }
        if code.designed_distance() != self.d_designed {
            return Err(corrupt("d_designed does not match the rebuilt code"));
        }
        code.set_exact_distance(self.d_exact);
        Ok(code)
    }
}

/// Convenience for building from text notation.
pub fn build_code(
    curve: &EdwardsCurve,
    divisor: &str,
    policy: &PointPolicy,
) -> Result<LinearCode, Error> {
    let d = parse_divisor(curve, divisor)?;
    Ok(LinearCode::build(curve, &d, policy)?)
}
