use std::collections::BTreeMap;

use hker_core::{Scalar, SeriesValue};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl From<Scalar> for ComplexValue {
    fn from(z: Scalar) -> Self {
        ComplexValue { re: z.re, im: z.im }
    }
}

/// Result of `hker eval`. Field order is the JSON key order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub function: String,
    pub inputs: BTreeMap<String, ComplexValue>,
    pub method: String,
    pub path: String,
    pub value: ComplexValue,
    pub terms_used: usize,
    /// `null` when the tail estimate is not finite.
    pub est_tail: Option<f64>,
    pub converged: bool,
    pub wall_time_ms: f64,
}

impl OutputRecord {
    pub const CSV_HEADER: &'static str =
        "command,function,inputs,method,path,value_re,value_im,terms_used,est_tail,converged,wall_time_ms";
}

/// One row of `hker table`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub sweep: f64,
    pub value_re: f64,
    pub value_im: f64,
    pub terms: usize,
    pub est_tail: Option<f64>,
    pub converged: bool,
}

impl TableRow {
    pub const CSV_HEADER: &'static str = "sweep,value_re,value_im,terms,est_tail,converged";

    pub fn new(sweep: f64, s: &SeriesValue) -> Self {
        TableRow {
            sweep,
            value_re: s.value.re,
            value_im: s.value.im,
            terms: s.terms_used,
            est_tail: finite(s.est_tail),
            converged: s.converged,
        }
    }
}

pub(crate) fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

/// Quote a CSV field when it contains a separator or quote.
pub(crate) fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
