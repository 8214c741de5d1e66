//! Deterministic number formatting for CSV and JSON payloads.

use serde_json::{Map, Number, Value};

use crate::kernel::ComplexValue;

/// 17 significant digits, scientific notation.
pub fn fmt17(x: f64) -> String {
    format!("{:.16e}", x)
}

/// A JSON number carrying exactly 17 significant digits; non-finite values map to `null`.
pub fn json_real(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    fmt17(x)
        .parse::<Number>()
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

/// `{"re": …, "im": …}`
pub fn json_complex(z: ComplexValue) -> Value {
    let mut m = Map::new();
    m.insert("re".into(), json_real(z.re));
    m.insert("im".into(), json_real(z.im));
    Value::Object(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits_survive_serialisation() {
        let v = json_real(0.1);
        assert_eq!(v.to_string(), "1.0000000000000001e-1");
        let back: f64 = v.to_string().parse().unwrap();
        assert_eq!(back, 0.1);
        assert_eq!(json_real(f64::NAN), Value::Null);
    }
}
