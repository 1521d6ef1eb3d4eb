//! JSON tuple configs: an explicit tuple or a named gallery example.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::gallery::{self, NamedExample};
use crate::tuple::{AnyTuple, TupleDoc};

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum TupleConfig {
    Example {
        example: String,
        #[serde(default)]
        params: BTreeMap<String, Value>,
    },
    Explicit(TupleDoc),
}

/// A loaded tuple, with the gallery entry when it came from one.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub tuple: AnyTuple,
    pub example: Option<NamedExample>,
}

fn param_text(key: &str, v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        _ => Err(Error::Config(format!("parameter {key} must be a number or a string"))),
    }
}

impl TupleConfig {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(format!("invalid tuple config: {e}")))
    }

    pub fn load(&self) -> Result<Loaded> {
        match self {
            TupleConfig::Explicit(doc) => Ok(Loaded {
                tuple: doc.to_tuple()?,
                example: None,
            }),
            TupleConfig::Example { example, params } => {
                let params = params
                    .iter()
                    .map(|(k, v)| Ok((k.clone(), param_text(k, v)?)))
                    .collect::<Result<BTreeMap<_, _>>>()?;
                let ex = gallery::build(example, &params).map_err(|e| match e {
                    Error::UnknownExample(name) => Error::Config(format!("unknown example '{name}'")),
                    other => other,
                })?;
                Ok(Loaded {
                    tuple: ex.tuple.clone(),
                    example: Some(ex),
                })
            }
        }
    }
}

pub fn load_path(path: &Path) -> Result<Loaded> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    TupleConfig::parse(&text)?.load()
}
