//! Argument parsing helpers.

use gammainv::ComplexValue;

/// Parses `a`, `bi`, `a+bi`, `a-bi` (whitespace ignored, `i` or `j`).
pub fn complex(s: &str) -> Result<ComplexValue, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err("empty complex number".into());
    }
    let bad = || format!("cannot parse '{s}' as a complex number (expected a+bi)");
    let Some(body) = t.strip_suffix('i').or_else(|| t.strip_suffix('j')) else {
        return t.parse::<f64>().map(|re| ComplexValue::new(re, 0.0)).map_err(|_| bad());
    };
    // Split before the last sign that is not part of an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re_s, im_s) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("", body),
    };
    let re = if re_s.is_empty() { 0.0 } else { re_s.parse::<f64>().map_err(|_| bad())? };
    let im = match im_s {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => x.parse::<f64>().map_err(|_| bad())?,
    };
    Ok(ComplexValue::new(re, im))
}
