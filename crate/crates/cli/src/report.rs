//! Analysis pipelines and their text/JSON reports.
//!
//! JSON reports are serialized from `serde_json::Value` maps, whose keys
//! are sorted, so identical inputs produce byte-identical output. Factor
//! lists appear exactly as produced by the recursion (no cyclotomic
//! reduction) with ascending `k`; the cyclotomic normal form is a
//! separate opt-in section. Text and JSON carry the same content.

use std::fmt::Write as _;

use monozeta_core::{
    curve_derive, curve_invariants, curve_truncate, surface_derive, surface_invariants,
    surface_truncation_params, CurveCharacteristics, CurveSeries, CycloForm, ExponentPair,
    Rational, SurfaceCharacteristics, SurfaceSeries, ZetaExpr,
};
use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde_json::{json, Value};

use crate::{Axis, CliError, ReportOptions};

/// One recursion level of a curve: the truncation exponent `n/m`.
#[derive(Clone, Debug)]
pub struct CurveLevel {
    pub m: BigUint,
    pub n: BigUint,
}

/// One recursion level of a surface: the truncation data
/// `(m, n, a, b, r, s)`.
#[derive(Clone, Debug)]
pub struct SurfaceLevel {
    pub m: BigUint,
    pub n: BigUint,
    pub a: BigUint,
    pub b: BigUint,
    pub r: BigUint,
    pub s: BigUint,
}

#[derive(Clone, Debug)]
pub struct CurveReport {
    pub input: String,
    pub characteristics: Vec<Rational>,
    pub degree: BigUint,
    pub euler: BigInt,
    pub horizontal: ZetaExpr,
    pub levels: Option<Vec<CurveLevel>>,
    pub horizontal_cyclotomic: Option<CycloForm>,
}

#[derive(Clone, Debug)]
pub struct SurfaceReport {
    pub input: String,
    pub axis: Axis,
    pub characteristics: Vec<ExponentPair>,
    /// `(N, reduced pairs)` when the input was not reduced.
    pub reduction: Option<(BigUint, Vec<ExponentPair>)>,
    pub degree: BigUint,
    pub euler: BigInt,
    pub horizontal: ZetaExpr,
    pub vertical: ZetaExpr,
    pub levels: Option<Vec<SurfaceLevel>>,
    pub horizontal_cyclotomic: Option<CycloForm>,
    pub vertical_cyclotomic: Option<CycloForm>,
}

/// Run the curve pipeline: characteristic extraction, recursion, report.
pub fn curve_report(
    input: &str,
    series: &CurveSeries,
    opts: &ReportOptions,
) -> Result<CurveReport, CliError> {
    let chars = series.characteristics();
    let invariants = curve_invariants(&chars);
    let levels = if opts.trace {
        Some(curve_levels(&chars)?)
    } else {
        None
    };
    Ok(CurveReport {
        input: input.to_owned(),
        characteristics: chars.exponents().to_vec(),
        degree: invariants.degree,
        euler: invariants.euler,
        horizontal_cyclotomic: opts
            .cyclotomic
            .then(|| invariants.horizontal.to_cyclotomic()),
        horizontal: invariants.horizontal,
        levels,
    })
}

/// Run the surface pipeline: optional axis swap, characteristic
/// extraction, reduction, recursion, report.
pub fn surface_report(
    input: &str,
    series: &SurfaceSeries,
    axis: Axis,
    opts: &ReportOptions,
) -> Result<SurfaceReport, CliError> {
    let oriented = match axis {
        Axis::X => series.clone(),
        Axis::Y => series.swap_axes(),
    };
    let chars = oriented.characteristics()?;
    let (multiplier, reduced) = chars.reduce()?;
    let invariants = surface_invariants(&reduced)?;
    let reduction = if multiplier.is_one() {
        None
    } else {
        Some((multiplier, reduced.pairs().to_vec()))
    };
    let levels = if opts.trace {
        Some(surface_levels(&reduced)?)
    } else {
        None
    };
    Ok(SurfaceReport {
        input: input.to_owned(),
        axis,
        characteristics: chars.pairs().to_vec(),
        reduction,
        degree: invariants.degree,
        euler: invariants.euler,
        horizontal_cyclotomic: opts
            .cyclotomic
            .then(|| invariants.horizontal.to_cyclotomic()),
        vertical_cyclotomic: opts.cyclotomic.then(|| invariants.vertical.to_cyclotomic()),
        horizontal: invariants.horizontal,
        vertical: invariants.vertical,
        levels,
    })
}

fn curve_levels(chars: &CurveCharacteristics) -> Result<Vec<CurveLevel>, CliError> {
    let mut levels = Vec::with_capacity(chars.len());
    let mut current = chars.clone();
    while !current.is_empty() {
        let t = curve_truncate(&current)?;
        levels.push(CurveLevel { m: t.m, n: t.n });
        current = curve_derive(&current)?;
    }
    Ok(levels)
}

fn surface_levels(chars: &SurfaceCharacteristics) -> Result<Vec<SurfaceLevel>, CliError> {
    let mut levels = Vec::with_capacity(chars.len());
    let mut current = chars.clone();
    while !current.is_empty() {
        let p = surface_truncation_params(&current)?;
        levels.push(SurfaceLevel {
            m: p.m,
            n: p.n,
            a: p.a,
            b: p.b,
            r: p.r,
            s: p.s,
        });
        current = surface_derive(&current)?;
    }
    Ok(levels)
}

// -- JSON ---------------------------------------------------------------

fn uint_value(v: &BigUint, field: &str) -> Result<Value, CliError> {
    u64::try_from(v)
        .map(Value::from)
        .map_err(|_| CliError::Report(format!("{field} does not fit in 64 bits")))
}

fn int_value(v: &BigInt, field: &str) -> Result<Value, CliError> {
    i64::try_from(v)
        .map(Value::from)
        .map_err(|_| CliError::Report(format!("{field} does not fit in 64 bits")))
}

fn rational_value(r: &Rational) -> Value {
    Value::from(r.to_string())
}

fn pair_value(p: &ExponentPair) -> Value {
    json!([p.x.to_string(), p.y.to_string()])
}

fn factor_list(factors: impl Iterator<Item = (BigUint, BigInt)>) -> Result<Value, CliError> {
    let mut out = Vec::new();
    for (k, e) in factors {
        out.push(json!([
            uint_value(&k, "factor index")?,
            int_value(&e, "factor exponent")?
        ]));
    }
    Ok(Value::from(out))
}

fn zeta_value(z: &ZetaExpr) -> Result<Value, CliError> {
    Ok(json!({
        "canonical": z.render(),
        "factors": factor_list(z.factors().map(|(k, e)| (k.clone(), e.clone())))?,
    }))
}

fn cyclo_value(c: &CycloForm) -> Result<Value, CliError> {
    Ok(json!({
        "canonical": c.render(),
        "factors": factor_list(c.factors().map(|(d, e)| (d.clone(), e.clone())))?,
    }))
}

impl CurveReport {
    pub fn to_json(&self) -> Result<Value, CliError> {
        let mut map = serde_json::Map::new();
        map.insert("kind".into(), "curve".into());
        map.insert("input".into(), self.input.clone().into());
        map.insert(
            "characteristics".into(),
            Value::from(
                self.characteristics
                    .iter()
                    .map(rational_value)
                    .collect::<Vec<_>>(),
            ),
        );
        map.insert("degree".into(), uint_value(&self.degree, "degree")?);
        map.insert("euler".into(), int_value(&self.euler, "euler")?);
        map.insert("horizontal".into(), zeta_value(&self.horizontal)?);
        if let Some(levels) = &self.levels {
            let mut out = Vec::new();
            for level in levels {
                out.push(json!({
                    "m": uint_value(&level.m, "m")?,
                    "n": uint_value(&level.n, "n")?,
                }));
            }
            map.insert("levels".into(), Value::from(out));
        }
        if let Some(cyclo) = &self.horizontal_cyclotomic {
            map.insert("horizontal_cyclotomic".into(), cyclo_value(cyclo)?);
        }
        Ok(Value::Object(map))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "kind:            curve");
        let _ = writeln!(out, "input:           {}", self.input);
        let _ = writeln!(
            out,
            "characteristics: {}",
            join_rationals(&self.characteristics)
        );
        if let Some(levels) = &self.levels {
            for (i, level) in levels.iter().enumerate() {
                let _ = writeln!(out, "level {}:         m={} n={}", i + 1, level.m, level.n);
            }
        }
        let _ = writeln!(out, "degree d:        {}", self.degree);
        let _ = writeln!(out, "euler chi:       {}", self.euler);
        let _ = writeln!(out, "H(t):            {}", self.horizontal.render());
        if let Some(cyclo) = &self.horizontal_cyclotomic {
            let _ = writeln!(out, "H(t) cyclotomic: {}", cyclo.render());
        }
        out
    }
}

impl SurfaceReport {
    pub fn to_json(&self) -> Result<Value, CliError> {
        let mut map = serde_json::Map::new();
        map.insert("kind".into(), "surface".into());
        map.insert("input".into(), self.input.clone().into());
        map.insert("axis".into(), self.axis.as_str().into());
        map.insert(
            "characteristics".into(),
            Value::from(
                self.characteristics
                    .iter()
                    .map(pair_value)
                    .collect::<Vec<_>>(),
            ),
        );
        if let Some((multiplier, pairs)) = &self.reduction {
            map.insert(
                "reduction".into(),
                json!({
                    "N": uint_value(multiplier, "N")?,
                    "pairs": Value::from(pairs.iter().map(pair_value).collect::<Vec<_>>()),
                }),
            );
        }
        map.insert("degree".into(), uint_value(&self.degree, "degree")?);
        map.insert("euler".into(), int_value(&self.euler, "euler")?);
        map.insert("horizontal".into(), zeta_value(&self.horizontal)?);
        map.insert("vertical".into(), zeta_value(&self.vertical)?);
        if let Some(levels) = &self.levels {
            let mut out = Vec::new();
            for level in levels {
                out.push(json!({
                    "m": uint_value(&level.m, "m")?,
                    "n": uint_value(&level.n, "n")?,
                    "a": uint_value(&level.a, "a")?,
                    "b": uint_value(&level.b, "b")?,
                    "r": uint_value(&level.r, "r")?,
                    "s": uint_value(&level.s, "s")?,
                }));
            }
            map.insert("levels".into(), Value::from(out));
        }
        if let Some(cyclo) = &self.horizontal_cyclotomic {
            map.insert("horizontal_cyclotomic".into(), cyclo_value(cyclo)?);
        }
        if let Some(cyclo) = &self.vertical_cyclotomic {
            map.insert("vertical_cyclotomic".into(), cyclo_value(cyclo)?);
        }
        Ok(Value::Object(map))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "kind:            surface");
        let _ = writeln!(out, "input:           {}", self.input);
        let _ = writeln!(out, "axis:            {}", self.axis.as_str());
        let _ = writeln!(out, "characteristics: {}", join_pairs(&self.characteristics));
        if let Some((multiplier, pairs)) = &self.reduction {
            let _ = writeln!(out, "reduction N:     {multiplier}");
            let _ = writeln!(out, "reduced pairs:   {}", join_pairs(pairs));
        }
        if let Some(levels) = &self.levels {
            for (i, level) in levels.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "level {}:         m={} n={} a={} b={} r={} s={}",
                    i + 1,
                    level.m,
                    level.n,
                    level.a,
                    level.b,
                    level.r,
                    level.s
                );
            }
        }
        let _ = writeln!(out, "degree d:        {}", self.degree);
        let _ = writeln!(out, "euler chi:       {}", self.euler);
        let _ = writeln!(out, "H(t):            {}", self.horizontal.render());
        let _ = writeln!(out, "V(t):            {}", self.vertical.render());
        if let Some(cyclo) = &self.horizontal_cyclotomic {
            let _ = writeln!(out, "H(t) cyclotomic: {}", cyclo.render());
        }
        if let Some(cyclo) = &self.vertical_cyclotomic {
            let _ = writeln!(out, "V(t) cyclotomic: {}", cyclo.render());
        }
        out
    }
}

fn join_rationals(values: &[Rational]) -> String {
    if values.is_empty() {
        return "(none)".into();
    }
    values
        .iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn join_pairs(values: &[ExponentPair]) -> String {
    if values.is_empty() {
        return "(none)".into();
    }
    values
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}
