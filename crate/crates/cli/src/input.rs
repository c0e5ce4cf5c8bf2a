// SPDX-License-Identifier: Apache-2.0

//! The two JSON vector formats.

use anyhow::Result;
use renorm_core::{FinValSeq, SparseVec};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::InputError;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EntriesFile {
    entries: Vec<(u64, f64)>,
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SeqFile {
    pub prefix: Vec<f64>,
    pub tail_period: Vec<f64>,
}

impl From<&FinValSeq<f64>> for SeqFile {
    fn from(x: &FinValSeq<f64>) -> Self {
        Self { prefix: x.prefix().to_vec(), tail_period: x.tail_period().to_vec() }
    }
}

pub enum VectorInput {
    Sparse(SparseVec<f64>),
    Seq(FinValSeq<f64>),
}

fn bad(what: &str, e: impl std::fmt::Display) -> anyhow::Error {
    InputError(format!("malformed {what}: {e}")).into()
}

pub fn parse_vector(text: &str) -> Result<VectorInput> {
    let value: Value = serde_json::from_str(text).map_err(|e| bad("JSON", e))?;
    let obj = value.as_object().ok_or_else(|| bad("vector", "expected a JSON object"))?;
    if obj.contains_key("entries") {
        let f: EntriesFile = serde_json::from_value(value).map_err(|e| bad("entries vector", e))?;
        Ok(VectorInput::Sparse(SparseVec::from_entries(f.entries)?))
    } else if obj.contains_key("prefix") || obj.contains_key("tail_period") {
        let f: SeqFile = serde_json::from_value(value).map_err(|e| bad("sequence", e))?;
        Ok(VectorInput::Seq(FinValSeq::new(f.prefix, f.tail_period)?))
    } else {
        Err(bad("vector", "expected `entries` or `prefix`/`tail_period`"))
    }
}

impl VectorInput {
    pub fn into_seq(self) -> Result<FinValSeq<f64>> {
        match self {
            VectorInput::Seq(x) => Ok(x),
            VectorInput::Sparse(x) => Ok(FinValSeq::from_sparse(&x)?),
        }
    }

    pub fn into_sparse(self) -> Result<SparseVec<f64>> {
        match self {
            VectorInput::Sparse(x) => Ok(x),
            VectorInput::Seq(x) => x
                .to_sparse()
                .ok_or_else(|| InputError("this norm needs a finitely supported vector (zero tail)".into()).into()),
        }
    }
}
