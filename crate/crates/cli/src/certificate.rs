//! On-disk certificate for a vertex set of a torus.
//!
//! ```toml
//! version = 1
//! m = 3
//! n = 4
//! vertices = [[0, 0], [0, 2]]
//!
//! [meta]
//! family = "c3"
//! ```
//!
//! Vertices are `[row, column]` pairs listed in strictly increasing
//! `(column, row)` order, which also rules out duplicates. Unknown top-level
//! keys are rejected. `meta` is an optional string map and is written in key
//! order, so equal certificates serialize to identical bytes.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use torus2dd::{TorusDims, Vertex, VertexSet};

use crate::CliError;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub version: u32,
    pub m: usize,
    pub n: usize,
    pub vertices: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub meta: BTreeMap<String, String>,
}

impl Certificate {
    pub fn from_set(set: &VertexSet, meta: BTreeMap<String, String>) -> Self {
        let dims = set.dims();
        Self {
            version: FORMAT_VERSION,
            m: dims.m(),
            n: dims.n(),
            // index order is (column, row) order
            vertices: set.iter().map(|v| [v.i, v.j]).collect(),
            meta,
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let cert: Certificate = toml::from_str(text).map_err(|e| CliError::Certificate(e.to_string()))?;
        cert.validate()?;
        Ok(cert)
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })?;
        Self::parse(&text).map_err(|e| match e {
            CliError::Certificate(msg) => CliError::Certificate(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        fs::write(path, self.to_toml()).map_err(|source| CliError::Io { path: path.to_owned(), source })
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("certificate fields are always representable")
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.version != FORMAT_VERSION {
            return Err(CliError::Certificate(format!(
                "unsupported version {} (expected {FORMAT_VERSION})",
                self.version
            )));
        }
        let dims = TorusDims::new(self.m, self.n)?;
        for &[i, j] in &self.vertices {
            dims.check(Vertex::new(i, j))?;
        }
        for pair in self.vertices.windows(2) {
            let (a, b) = (Vertex::new(pair[0][0], pair[0][1]), Vertex::new(pair[1][0], pair[1][1]));
            if a == b {
                return Err(CliError::Certificate(format!("duplicate vertex {a}")));
            }
            if a > b {
                return Err(CliError::Certificate(format!(
                    "vertices must be sorted by (column, row): {a} listed before {b}"
                )));
            }
        }
        Ok(())
    }

    pub fn dims(&self) -> TorusDims {
        TorusDims::new(self.m, self.n).expect("validated on parse")
    }

    pub fn to_set(&self) -> VertexSet {
        VertexSet::from_vertices(self.dims(), self.vertices.iter().map(|&[i, j]| Vertex::new(i, j)))
            .expect("validated on parse")
    }
}
