//! Input handling: expression text or the JSON series schema.
//!
//! The JSON schema mirrors the series model:
//! `{"kind":"curve","exponents":["3/2","7/4","11/6"]}` or
//! `{"kind":"surface","pairs":[["1/2","3/2"],["2/3","11/6"]]}`,
//! with rationals as `p/q` strings. An input whose first non-space
//! character is `{` is treated as JSON, anything else as an expression.

use monozeta_core::{parse_curve, parse_surface, CurveSeries, ExponentPair, Rational, SurfaceSeries};
use num_traits::Signed;
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SeriesInput {
    Curve { exponents: Vec<String> },
    Surface { pairs: Vec<(String, String)> },
}

pub fn parse_rational(text: &str) -> Result<Rational, CliError> {
    let value: Rational = text
        .trim()
        .parse()
        .map_err(|_| CliError::Validation(format!("invalid rational: {text:?}")))?;
    if value.is_negative() {
        return Err(CliError::Validation(format!(
            "exponents must be nonnegative, got {text:?}"
        )));
    }
    Ok(value)
}

impl SeriesInput {
    pub fn into_curve(self) -> Result<CurveSeries, CliError> {
        match self {
            SeriesInput::Curve { exponents } => {
                let exps = exponents
                    .iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(CurveSeries::new(exps)?)
            }
            SeriesInput::Surface { .. } => Err(CliError::Validation(
                "expected a curve input, got kind \"surface\"".into(),
            )),
        }
    }

    pub fn into_surface(self) -> Result<SurfaceSeries, CliError> {
        match self {
            SeriesInput::Surface { pairs } => {
                let pairs = pairs
                    .iter()
                    .map(|(x, y)| Ok(ExponentPair::new(parse_rational(x)?, parse_rational(y)?)))
                    .collect::<Result<Vec<_>, CliError>>()?;
                Ok(SurfaceSeries::new(pairs)?)
            }
            SeriesInput::Curve { .. } => Err(CliError::Validation(
                "expected a surface input, got kind \"curve\"".into(),
            )),
        }
    }
}

fn looks_like_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

fn parse_json_input(text: &str) -> Result<SeriesInput, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Syntax(format!("invalid input JSON: {e}")))
}

/// Parse an expression or a JSON object as a curve series.
pub fn read_curve(text: &str) -> Result<CurveSeries, CliError> {
    if looks_like_json(text) {
        parse_json_input(text)?.into_curve()
    } else {
        Ok(parse_curve(text)?)
    }
}

/// Parse an expression or a JSON object as a surface series.
pub fn read_surface(text: &str) -> Result<SurfaceSeries, CliError> {
    if looks_like_json(text) {
        parse_json_input(text)?.into_surface()
    } else {
        Ok(parse_surface(text)?)
    }
}
