//! Deterministic JSON text: sorted keys, fixed significant digits.

use serde_json::Value;

pub const DEFAULT_DIGITS: usize = 15;

/// Significant digits for floats, from `OSCSYM_PRECISION` when it holds a
/// value in `1..=17`.
pub fn digits_from_env() -> usize {
    std::env::var("OSCSYM_PRECISION")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|d| (1..=17).contains(d))
        .unwrap_or(DEFAULT_DIGITS)
}

pub fn format_float(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return "null".into();
    }
    if x == 0.0 {
        return "0.0".into();
    }
    let rounded: f64 = format!("{:.*e}", digits - 1, x)
        .parse()
        .expect("formatted float");
    let a = rounded.abs();
    let mut s = if (1e-5..1e16).contains(&a) {
        format!("{rounded}")
    } else {
        format!("{rounded:e}")
    };
    if !s.contains(['.', 'e']) {
        s.push_str(".0");
    }
    s
}

/// Indented rendering with two spaces per level and a trailing newline.
pub fn render(v: &Value, digits: usize) -> String {
    let mut out = String::new();
    write_value(v, digits, 0, &mut out);
    out.push('\n');
    out
}

fn write_value(v: &Value, digits: usize, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => {
            if n.is_f64() {
                out.push_str(&format_float(n.as_f64().expect("f64"), digits));
            } else {
                out.push_str(&n.to_string());
            }
        }
        Value::String(s) => out.push_str(&Value::String(s.clone()).to_string()),
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str("[]");
                return;
            }
            // short rows of scalars stay on one line
            if items.iter().all(|i| !i.is_array() && !i.is_object()) && items.len() <= 8 {
                out.push('[');
                for (k, item) in items.iter().enumerate() {
                    if k > 0 {
                        out.push_str(", ");
                    }
                    write_value(item, digits, depth, out);
                }
                out.push(']');
                return;
            }
            out.push_str("[\n");
            for (k, item) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(item, digits, depth + 1, out);
                if k + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            out.push_str("{\n");
            for (k, key) in keys.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::String((*key).clone()).to_string());
                out.push_str(": ");
                write_value(&map[*key], digits, depth + 1, out);
                if k + 1 < keys.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn floats() {
        assert_eq!(
            format_float(std::f64::consts::FRAC_PI_4, 15),
            "0.785398163397448"
        );
        assert_eq!(format_float(1.0, 15), "1.0");
        assert_eq!(format_float(-2.5e-17, 15), "-2.5e-17");
        assert_eq!(format_float(0.0, 15), "0.0");
        assert_eq!(format_float(f64::NAN, 15), "null");
        assert_eq!(format_float(1.0 / 3.0, 4), "0.3333");
    }

    #[test]
    fn sorted_and_stable() {
        let v = json!({"b": 1, "a": [0.5, 2], "c": {"z": true, "y": null}});
        let text = render(&v, 15);
        assert_eq!(text, "{\n  \"a\": [0.5, 2],\n  \"b\": 1,\n  \"c\": {\n    \"y\": null,\n    \"z\": true\n  }\n}\n");
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(back, v);
    }
}
