//! Canonical JSON layout shared by schedule files and reports.
//!
//! Top-level keys go one per line, arrays of arrays or objects go one
//! element per line, and everything deeper is compact.

use serde::Serialize;
use serde_json::Value;

pub fn to_canonical<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("value serializes to JSON");
    let mut out = String::new();
    write_top(&value, &mut out);
    out.push('\n');
    out
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON values always serialize")
}

fn write_top(v: &Value, out: &mut String) {
    let Value::Object(map) = v else {
        out.push_str(&compact(v));
        return;
    };
    out.push_str("{\n");
    for (i, (key, val)) in map.iter().enumerate() {
        out.push_str("  ");
        out.push_str(&compact(&Value::String(key.clone())));
        out.push_str(": ");
        match val {
            Value::Array(items) if !items.is_empty() && items.iter().all(|x| x.is_array() || x.is_object()) => {
                out.push_str("[\n");
                for (j, item) in items.iter().enumerate() {
                    out.push_str("    ");
                    out.push_str(&compact(item));
                    out.push_str(if j + 1 < items.len() { ",\n" } else { "\n" });
                }
                out.push_str("  ]");
            }
            _ => out.push_str(&compact(val)),
        }
        out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
    }
    out.push('}');
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn layout() {
        let v = json!({"a": 1, "list": [{"x": [1, 2]}, {"x": []}], "flat": [3, 4], "empty": []});
        assert_eq!(
            to_canonical(&v),
            "{\n  \"a\": 1,\n  \"list\": [\n    {\"x\":[1,2]},\n    {\"x\":[]}\n  ],\n  \"flat\": [3,4],\n  \"empty\": []\n}\n"
        );
    }

    #[test]
    fn output_parses_back_to_the_same_value() {
        let v = json!({"z": [[1, [2]], [3]], "b": {"c": "d"}, "r": 1.5e-17});
        let text = to_canonical(&v);
        assert_eq!(serde_json::from_str::<Value>(&text).unwrap(), v);
        assert!(text.find("\"z\"").unwrap() < text.find("\"b\"").unwrap());
    }
}
