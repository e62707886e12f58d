//! Rendering of results as JSON or as aligned plain-text tables.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Table,
}

/// Compact JSON with fields in declaration order, or a two-column table with
/// nested keys joined by dots and arrays joined by spaces.
pub fn emit<T: Serialize + ?Sized>(obj: &T, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(obj).expect("serialisable"),
        Format::Table => {
            let v = serde_json::to_value(obj).expect("serialisable");
            let mut rows = Vec::new();
            flatten("", &v, &mut rows);
            let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
            rows.iter()
                .map(|(k, v)| format!("{k:<width$}  {v}"))
                .collect::<Vec<_>>()
                .join("\n")
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(xs) => format!("[{}]", xs.iter().map(scalar).collect::<Vec<_>>().join(" ")),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                flatten(&key(k), child, out);
            }
        }
        Value::Array(xs) if xs.iter().any(|x| x.is_object()) => {
            for (i, child) in xs.iter().enumerate() {
                flatten(&key(&i.to_string()), child, out);
            }
        }
        other => out.push((if prefix.is_empty() { "value".into() } else { prefix.to_string() }, scalar(other))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formats::{GammaJson, PolyJson};
    use polypos_core::families::eulerian_a;
    use polypos_core::positivity::GammaVector;
    use polypos_core::rat::rat;
    use polypos_core::ExactPoly;

    #[test]
    fn json_examples() {
        let a3 = eulerian_a(3).unwrap();
        assert_eq!(emit(&PolyJson::from(&a3), Format::Json), r#"{"coeffs":["0","1","4","1"]}"#);
        let g = GammaVector { d: 3, gammas: vec![rat(1), rat(8)] };
        assert_eq!(emit(&GammaJson::from(&g), Format::Json), r#"{"d":3,"gammas":["1","8"]}"#);
        assert_eq!(emit(&PolyJson::from(&ExactPoly::zero()), Format::Json), r#"{"coeffs":[]}"#);
    }

    #[test]
    fn table_layout() {
        let g = GammaVector { d: 3, gammas: vec![rat(1), rat(8)] };
        assert_eq!(emit(&GammaJson::from(&g), Format::Table), "d       3\ngammas  [1 8]");
    }
}
