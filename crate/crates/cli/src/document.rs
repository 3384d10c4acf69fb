//! JSON ideal documents: a list of variable names plus generators given as
//! exponent vectors or as monomial strings such as `"x^2*y"`.

use std::collections::HashSet;

use monadj::{Exponent, MonomialIdeal};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed ideal document: {0}")]
    Malformed(#[from] serde_json::Error),
    #[error("no variables declared")]
    NoVariables,
    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),
    #[error("variable `{0}` declared twice")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("negative exponent {0}")]
    NegativeExponent(i64),
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generator {index} has {found} entries, expected {expected}")]
    WrongLength {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("cannot parse monomial `{0}`")]
    BadMonomial(String),
    #[error(transparent)]
    Ideal(#[from] monadj::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorSpec {
    Vector(Vec<i64>),
    Monomial(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealDocument {
    pub variables: Vec<String>,
    pub generators: Vec<GeneratorSpec>,
}

/// A parsed ideal together with the variable names that fix its coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedIdeal {
    pub variables: Vec<String>,
    pub ideal: MonomialIdeal,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_')
}

pub fn check_variables(variables: &[String]) -> Result<(), DocumentError> {
    if variables.is_empty() {
        return Err(DocumentError::NoVariables);
    }
    let mut seen = HashSet::new();
    for v in variables {
        if !valid_name(v) {
            return Err(DocumentError::InvalidVariable(v.clone()));
        }
        if !seen.insert(v.as_str()) {
            return Err(DocumentError::DuplicateVariable(v.clone()));
        }
    }
    Ok(())
}

/// Parses `x^2*y`-style products over `variables`. `"1"` is the unit monomial;
/// repeated factors add up.
pub fn parse_monomial(text: &str, variables: &[String]) -> Result<Exponent, DocumentError> {
    let bad = || DocumentError::BadMonomial(text.to_string());
    let mut entries = vec![0u64; variables.len()];
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(bad());
    }
    if trimmed == "1" {
        return Ok(Exponent::new(entries));
    }
    for factor in trimmed.split('*') {
        let factor = factor.trim();
        let (name, power) = match factor.split_once('^') {
            Some((name, power)) => {
                let power = power.trim();
                let value: i64 = power.parse().map_err(|_| bad())?;
                if value < 0 {
                    return Err(DocumentError::NegativeExponent(value));
                }
                (name.trim(), value as u64)
            }
            None => (factor, 1),
        };
        if !valid_name(name) {
            return Err(bad());
        }
        let idx = variables
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| DocumentError::UnknownVariable(name.to_string()))?;
        entries[idx] = entries[idx]
            .checked_add(power)
            .ok_or(DocumentError::Ideal(monadj::Error::Overflow("monomial exponent")))?;
    }
    Ok(Exponent::new(entries))
}

/// Inverse of [`parse_monomial`]: `x^4`, `x^3*y`, or `1`.
pub fn format_monomial(e: &Exponent, variables: &[String]) -> String {
    let factors: Vec<String> = e
        .entries()
        .iter()
        .zip(variables)
        .filter(|(&k, _)| k > 0)
        .map(|(&k, v)| if k == 1 { v.clone() } else { format!("{v}^{k}") })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

pub fn parse_vector(values: &[i64], variables: &[String], index: usize) -> Result<Exponent, DocumentError> {
    if values.len() != variables.len() {
        return Err(DocumentError::WrongLength {
            index,
            expected: variables.len(),
            found: values.len(),
        });
    }
    values
        .iter()
        .map(|&v| {
            if v < 0 {
                Err(DocumentError::NegativeExponent(v))
            } else {
                Ok(v as u64)
            }
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Exponent::new)
}

impl IdealDocument {
    pub fn into_ideal(self) -> Result<ParsedIdeal, DocumentError> {
        check_variables(&self.variables)?;
        if self.generators.is_empty() {
            return Err(DocumentError::EmptyGenerators);
        }
        let exps = self
            .generators
            .iter()
            .enumerate()
            .map(|(index, g)| match g {
                GeneratorSpec::Vector(v) => parse_vector(v, &self.variables, index),
                GeneratorSpec::Monomial(s) => parse_monomial(s, &self.variables),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ParsedIdeal {
            ideal: MonomialIdeal::minimalize(exps)?,
            variables: self.variables,
        })
    }

    /// Vector-form document for `ideal`.
    pub fn from_ideal(variables: &[String], ideal: &MonomialIdeal) -> Self {
        IdealDocument {
            variables: variables.to_vec(),
            generators: ideal
                .generators()
                .iter()
                .map(|e| GeneratorSpec::Vector(e.entries().iter().map(|&x| x as i64).collect()))
                .collect(),
        }
    }
}

/// Parses an ideal document and minimalizes its generators.
pub fn parse_ideal(text: &str) -> Result<ParsedIdeal, DocumentError> {
    let doc: IdealDocument = serde_json::from_str(text)?;
    doc.into_ideal()
}
