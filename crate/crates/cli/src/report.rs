//! JSON rendering. Keys come out sorted because `serde_json` maps are
//! ordered; faces are ascending index arrays in lexicographic order.

use pointlike_core::{Error as CoreError, SComplex, Subset};
use serde_json::{json, Value};

use crate::formats::FormatError;

pub const SCHEMA: &str = "1";

pub fn subset(x: Subset) -> Value {
    json!(x.to_vec())
}

/// A family of subsets, sorted lexicographically as arrays.
pub fn family(sets: &[Subset]) -> Value {
    let mut v: Vec<Vec<usize>> = sets.iter().map(|x| x.to_vec()).collect();
    v.sort();
    json!(v)
}

pub fn complex(k: &SComplex) -> Value {
    json!({
        "base_order": k.base().order(),
        "max_faces": family(k.max_faces()),
        "face_count": k.face_count(),
    })
}

pub fn envelope(command: &str, inputs: Value, result: Value) -> Value {
    json!({
        "schema": SCHEMA,
        "command": command,
        "inputs": inputs,
        "result": result,
    })
}

pub fn error_envelope(command: &str, inputs: Value, err: &FormatError) -> Value {
    json!({
        "schema": SCHEMA,
        "command": command,
        "inputs": inputs,
        "error": error_value(err),
    })
}

fn error_value(err: &FormatError) -> Value {
    match err {
        FormatError::Io { path, message } => json!({
            "kind": "Io",
            "path": path.display().to_string(),
            "message": message,
        }),
        FormatError::Parse { line, reason } => json!({
            "kind": "ParseError",
            "line": line,
            "message": reason,
        }),
        FormatError::Core(e) => core_error(e),
    }
}

fn core_error(e: &CoreError) -> Value {
    let debug = format!("{e:?}");
    let kind: String = debug
        .chars()
        .take_while(|c| c.is_alphanumeric())
        .collect();
    let mut v = json!({ "kind": kind, "message": e.to_string() });
    let witness = match e {
        CoreError::NonAssociative(a, b, c) => Some(json!([a, b, c])),
        CoreError::NotHomomorphism(a, b)
        | CoreError::MorphismConditionViolated(a, b) => Some(json!([a, b])),
        CoreError::NotProductClosed(a, b, c, d) => Some(json!([[a, b], [c, d]])),
        CoreError::NotSurjectiveOntoDomain(a) => Some(json!(a)),
        CoreError::PointsMismatch { table } => Some(json!(table)),
        _ => None,
    };
    if let Some(w) = witness {
        v["witness"] = w;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use pointlike_core::Semigroup;

    #[test]
    fn complexes() {
        let z2 = Semigroup::cyclic_group(2);
        assert_eq!(
            serde_json::to_string(&complex(&SComplex::singletons(&z2).unwrap())).unwrap(),
            r#"{"base_order":2,"face_count":2,"max_faces":[[0],[1]]}"#
        );
        assert_eq!(
            serde_json::to_string(&complex(&SComplex::full(&z2).unwrap())).unwrap(),
            r#"{"base_order":2,"face_count":3,"max_faces":[[0,1]]}"#
        );
    }

    #[test]
    fn families_sort_lexicographically() {
        let sets: Vec<Subset> = [vec![1usize], vec![0, 2], vec![0, 1]]
            .iter()
            .map(|v| v.iter().copied().collect())
            .collect();
        assert_eq!(family(&sets), json!([[0, 1], [0, 2], [1]]));
    }

    #[test]
    fn errors_carry_witnesses() {
        let v = core_error(&CoreError::NonAssociative(1, 0, 1));
        assert_eq!(v["kind"], "NonAssociative");
        assert_eq!(v["witness"], json!([1, 0, 1]));
        assert_eq!(core_error(&CoreError::EmptyBase)["kind"], "EmptyBase");
    }
}
