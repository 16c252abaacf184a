//! Float formatting and the canonical JSON writer.

use std::io;

use serde::Serialize;
use serde_json::ser::{CompactFormatter, Formatter, Serializer};

/// `%.{digits}g`-style formatting: `digits` significant digits, trailing
/// zeros trimmed, exponent form outside [1e-5, 10^digits).
pub fn format_g(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        let m = trim_fraction(mantissa);
        return format!("{m}e{exp}");
    }
    let fixed = format!("{:.*}", (digits as i32 - 1 - exp).max(0) as usize, x);
    trim_fraction(&fixed).to_string()
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Machine formats: 17 significant digits round-trip every f64.
pub fn format_machine(x: f64) -> String {
    format_g(x, 17)
}

pub fn format_plain(x: f64) -> String {
    format_g(x, 10)
}

/// Compact JSON with 17-significant-digit floats.
struct G17Formatter;

impl Formatter for G17Formatter {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        if value.is_finite() {
            writer.write_all(format_machine(value).as_bytes())
        } else {
            CompactFormatter.write_null(writer)
        }
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = Serializer::with_formatter(&mut buf, G17Formatter);
    value.serialize(&mut ser).expect("serializable record");
    String::from_utf8(buf).expect("utf-8 json")
}
