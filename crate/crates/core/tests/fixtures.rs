use cylwalk::growth::GrowthDiagram;
use cylwalk::lattice::{SimplexPoint, TasepState, WalkRecord};
use cylwalk::{CylindricShape, Oct, Sct};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;
use std::path::Path;

fn round_trip<T: DeserializeOwned + Serialize>(v: &Value) -> Value {
    let x: T = serde_json::from_value(v.clone()).unwrap_or_else(|e| panic!("{e}: {v}"));
    serde_json::to_value(&x).unwrap()
}

fn has(v: &Value, keys: &[&str]) -> bool {
    v.as_object().is_some_and(|o| o.len() == keys.len() && keys.iter().all(|k| o.contains_key(*k)))
}

/// Decode every recognised object and check it encodes back to itself.
fn visit(v: &Value, seen: &mut usize) {
    let again = if has(v, &["d", "L", "rows"]) {
        Some(round_trip::<CylindricShape>(v))
    } else if has(v, &["inner", "outer", "entries"]) {
        Some(round_trip::<Sct>(v))
    } else if has(v, &["model", "start", "steps"]) {
        Some(round_trip::<WalkRecord>(v))
    } else if has(v, &["m", "n", "labels"]) {
        Some(round_trip::<GrowthDiagram>(v))
    } else if has(v, &["shapes"]) {
        Some(round_trip::<Oct>(v))
    } else if has(v, &["coords"]) {
        Some(round_trip::<SimplexPoint>(v))
    } else if has(v, &["bits"]) {
        Some(round_trip::<TasepState>(v))
    } else {
        None
    };
    if let Some(again) = again {
        assert_eq!(&again, v);
        *seen += 1;
    }
    match v {
        Value::Array(xs) => xs.iter().for_each(|x| visit(x, seen)),
        Value::Object(o) => o.values().for_each(|x| visit(x, seen)),
        _ => {}
    }
}

#[test]
fn fixtures_decode_and_encode_back() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut files = 0;
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap() + "\n", text, "{} is not canonical", path.display());
        visit(&v, &mut seen);
        files += 1;
    }
    assert_eq!(files, 20);
    assert!(seen > 100);
}
