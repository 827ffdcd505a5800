//! File formats.
//!
//! - Sequences: one decimal per line, `#` starts a comment, blank lines are
//!   ignored. Alternatively a JSON object `{"modulus": "31", "elements": ["1", 2]}`.
//! - Plans: JSON `{"s", "n", "m", "regime", "inv_n"}`. Big numbers are decimal
//!   strings. Loading re-validates the plan from `s`, `n` and `regime` and
//!   rejects files whose `m` or `inv_n` disagree.
//! - Gaussian and pair sequences: lines `re,im` / `a,b`.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::gaussian::GaussianElement;
use crate::pairs::PairElement;
use crate::plan::{make_plan, Regime, TransformPlan};
use crate::transform::Sequence;

/// Parsed sequence file. `modulus` is only present in the JSON form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceFile {
    pub modulus: Option<BigUint>,
    pub elements: Vec<BigUint>,
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn parse_number<T: FromStr>(text: &str, line: usize) -> Result<T> {
    text.trim().parse().map_err(|_| Error::Parse(format!("line {line}: '{}' is not an integer", text.trim())))
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn json_number(value: &Value, what: &str) -> Result<BigUint> {
    match value {
        Value::String(s) => {
            s.trim().parse().map_err(|_| Error::Parse(format!("{what}: '{s}' is not a nonnegative integer")))
        }
        Value::Number(n) => {
            n.to_string().parse().map_err(|_| Error::Parse(format!("{what}: {n} is not a nonnegative integer")))
        }
        other => Err(Error::Parse(format!("{what}: expected a number, got {other}"))),
    }
}

pub fn parse_sequence(text: &str) -> Result<SequenceFile> {
    if text.trim_start().starts_with('{') {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let modulus = value.get("modulus").map(|m| json_number(m, "modulus")).transpose()?;
        let elements = value
            .get("elements")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing 'elements' array".into()))?
            .iter()
            .enumerate()
            .map(|(i, v)| json_number(v, &format!("element {i}")))
            .collect::<Result<Vec<_>>>()?;
        return Ok(SequenceFile { modulus, elements });
    }
    let elements = content_lines(text).map(|(n, line)| parse_number(line, n)).collect::<Result<Vec<_>>>()?;
    Ok(SequenceFile { modulus: None, elements })
}

pub fn read_sequence(path: &Path) -> Result<SequenceFile> {
    parse_sequence(&read_text(path)?)
}

/// Builds a sequence under the plan's modulus. Values must already be reduced
/// and a JSON modulus, when given, must match the plan.
pub fn sequence_for_plan(file: &SequenceFile, plan: &TransformPlan) -> Result<Sequence> {
    if let Some(m) = &file.modulus {
        if m != plan.modulus().value() {
            return Err(Error::ModulusMismatch { left: plan.modulus().value().clone(), right: m.clone() });
        }
    }
    if file.elements.len() != plan.len() {
        return Err(Error::LengthMismatch { expected: plan.len(), actual: file.elements.len() });
    }
    Sequence::new(plan.modulus().clone(), file.elements.clone())
}

/// One decimal per line.
pub fn format_values(values: &[BigUint]) -> String {
    values.iter().map(|v| format!("{v}\n")).collect()
}

pub fn sequence_json(seq: &Sequence) -> Value {
    serde_json::json!({
        "modulus": seq.modulus().value().to_string(),
        "elements": seq.values().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct PlanFile {
    s: String,
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    m: Option<String>,
    regime: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    inv_n: Option<String>,
}

pub fn plan_json(plan: &TransformPlan) -> Value {
    serde_json::to_value(PlanFile {
        s: plan.s().to_string(),
        n: plan.len(),
        m: Some(plan.modulus().value().to_string()),
        regime: plan.regime().name().to_string(),
        inv_n: Some(plan.inv_n().residue().to_string()),
    })
    .expect("plan serializes")
}

pub fn parse_plan(text: &str) -> Result<TransformPlan> {
    let file: PlanFile = serde_json::from_str(text).map_err(|e| Error::Parse(format!("plan: {e}")))?;
    let s: BigUint =
        parse_number(&file.s, 1).map_err(|_| Error::Parse(format!("plan: s = '{}' is not an integer", file.s)))?;
    let regime = Regime::from_name(&file.regime, file.n)?;
    let plan = make_plan(s, file.n, regime)?;
    let check = |field: &str, stored: &Option<String>, actual: &BigUint| -> Result<()> {
        match stored {
            Some(text) if text.trim() != actual.to_string() => {
                Err(Error::InvalidArgument(format!("plan file {field} = {text} but the plan derives {actual}")))
            }
            _ => Ok(()),
        }
    };
    check("m", &file.m, plan.modulus().value())?;
    check("inv_n", &file.inv_n, plan.inv_n().residue())?;
    Ok(plan)
}

pub fn read_plan(path: &Path) -> Result<TransformPlan> {
    parse_plan(&read_text(path)?)
}

fn parse_two(text: &str) -> Result<Vec<(BigInt, BigInt)>> {
    content_lines(text)
        .map(|(n, line)| {
            let (a, b) = line.split_once(',').ok_or_else(|| Error::Parse(format!("line {n}: expected 'a,b'")))?;
            Ok((parse_number(a, n)?, parse_number(b, n)?))
        })
        .collect()
}

pub fn parse_gaussian(text: &str) -> Result<Vec<GaussianElement>> {
    Ok(parse_two(text)?.into_iter().map(|(re, im)| GaussianElement { re, im }).collect())
}

pub fn read_gaussian(path: &Path) -> Result<Vec<GaussianElement>> {
    parse_gaussian(&read_text(path)?)
}

pub fn parse_pairs(text: &str) -> Result<Vec<PairElement>> {
    Ok(parse_two(text)?.into_iter().map(|(first, second)| PairElement { first, second }).collect())
}

/// `re,im` / `a,b` per line.
pub fn format_lines<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(|z| format!("{z}\n")).collect()
}
