use std::fs;
use std::io::Read;
use std::path::Path;

use raag_core::{Graph, NamedGraph, RaagError, Word};
use serde::de::DeserializeOwned;

use crate::CliError;

fn read_source(src: &str) -> Result<String, CliError> {
    if src == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(src).map_err(|e| CliError::Input(format!("{src}: {e}")))
}

/// A file (JSON object or edge list), `-` for stdin, or a named tag such
/// as `K5`, `C6`, `K3,3`, `petersen`.
pub fn graph(src: &str) -> Result<Graph, CliError> {
    if src == "-" || Path::new(src).is_file() {
        let text = read_source(src)?;
        if text.trim_start().starts_with('{') {
            return serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{src}: {e}")));
        }
        return Ok(Graph::parse_edge_list(&text)?);
    }
    let tag: NamedGraph = src.parse().map_err(|_| {
        CliError::Input(format!(
            "{src:?} is neither a readable file nor a known graph tag"
        ))
    })?;
    Ok(Graph::named(tag)?)
}

pub fn word(text: &str) -> Result<Word, CliError> {
    text.parse::<Word>()
        .map_err(|e: RaagError| CliError::Input(e.to_string()))
}

/// A JSON document, either the bare object or a report that carries it
/// under `key` at any depth — so reports can be fed straight back for
/// verification.
pub fn json<T: DeserializeOwned>(src: &str, key: &str) -> Result<T, CliError> {
    let text = read_source(src)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{src}: {e}")))?;
    let inner = find_key(&value, key).cloned().unwrap_or(value);
    serde_json::from_value(inner).map_err(|e| CliError::Input(format!("{src}: {e}")))
}

fn find_key<'a>(v: &'a serde_json::Value, key: &str) -> Option<&'a serde_json::Value> {
    match v {
        serde_json::Value::Object(m) => m
            .get(key)
            .or_else(|| m.values().find_map(|x| find_key(x, key))),
        serde_json::Value::Array(a) => a.iter().find_map(|x| find_key(x, key)),
        _ => None,
    }
}
