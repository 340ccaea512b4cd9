//! Text (JSON-shaped) serialization of `W`-space quasi-polynomials.
//!
//! The document records the degrees, the space tag, the degree sum, and one
//! object per coefficient: its power of `s`, its period, and the period's
//! worth of values as reduced `num/den` strings. Loading is strict: any
//! length/period mismatch or non-reduced entry is rejected.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exponents::ExponentTuple;
use crate::rational::{format_ratio, parse_ratio_strict};

use super::table::PeriodicTable;
use super::{QuasiPolynomial, Space};

#[derive(Serialize, Deserialize)]
struct Document {
    degrees: Vec<u64>,
    space: String,
    sum_of_degrees: u64,
    coefficients: Vec<CoefficientDocument>,
}

#[derive(Serialize, Deserialize)]
struct CoefficientDocument {
    power: u64,
    period: u64,
    values: Vec<String>,
}

/// Serialize a `W`-space quasi-polynomial.
pub fn dump(wave: &QuasiPolynomial) -> Result<String, Error> {
    if wave.space() != Space::W {
        return Err(Error::WrongSpace {
            expected: "W",
            found: "V",
        });
    }
    let m = wave.coefficients().len() as u64;
    let doc = Document {
        degrees: wave.tuple().degrees().to_vec(),
        space: "W".to_string(),
        sum_of_degrees: wave.tuple().degree_sum(),
        coefficients: wave
            .coefficients()
            .iter()
            .enumerate()
            .map(|(index, table)| CoefficientDocument {
                power: m - 1 - index as u64,
                period: table.period(),
                values: table.values().iter().map(format_ratio).collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).map_err(|e| Error::Document(e.to_string()))
}

/// Parse and validate a document produced by [`dump`].
pub fn load(text: &str) -> Result<QuasiPolynomial, Error> {
    let doc: Document =
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
    if doc.space != "W" {
        return Err(Error::Document(format!(
            "space must be \"W\", found {:?}",
            doc.space
        )));
    }
    if !doc.degrees.windows(2).all(|w| w[0] <= w[1]) {
        return Err(Error::Document("degrees must be ascending".into()));
    }
    let tuple = ExponentTuple::new(doc.degrees.clone())
        .map_err(|e| Error::Document(e.to_string()))?;
    if doc.sum_of_degrees != tuple.degree_sum() {
        return Err(Error::Document(format!(
            "sum_of_degrees is {}, degrees sum to {}",
            doc.sum_of_degrees,
            tuple.degree_sum()
        )));
    }
    let m = tuple.len() as u64;
    if doc.coefficients.len() as u64 != m {
        return Err(Error::Document(format!(
            "expected {m} coefficients, found {}",
            doc.coefficients.len()
        )));
    }
    let prefix = tuple.prefix_periods();
    let mut tables = Vec::with_capacity(doc.coefficients.len());
    for (index, coeff) in doc.coefficients.iter().enumerate() {
        let expected_power = m - 1 - index as u64;
        if coeff.power != expected_power {
            return Err(Error::Document(format!(
                "coefficient {index} has power {}, expected {expected_power}",
                coeff.power
            )));
        }
        if coeff.period != prefix[index] {
            return Err(Error::Document(format!(
                "coefficient {index} declares period {}, expected {}",
                coeff.period, prefix[index]
            )));
        }
        if coeff.values.len() as u64 != coeff.period {
            return Err(Error::Document(format!(
                "coefficient {index} has {} values for period {}",
                coeff.values.len(),
                coeff.period
            )));
        }
        let values = coeff
            .values
            .iter()
            .map(|v| parse_ratio_strict(v))
            .collect::<Result<Vec<_>, _>>()?;
        tables.push(PeriodicTable::from_values(values, 0));
    }
    Ok(QuasiPolynomial::from_parts(tuple, Space::W, tables))
}
