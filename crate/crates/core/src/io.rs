//! JSON file formats.
//!
//! Matroid files are tagged by `kind`:
//!
//! ```json
//! {"kind": "uniform", "rank": 2, "size": 4}
//! {"kind": "free", "size": 3}
//! {"kind": "graphic", "vertices": 4, "edges": [[0, 1], [1, 2]]}
//! {"kind": "linear", "prime": 2, "matrix": [[1, 0, 1], [0, 1, 1]]}
//! {"kind": "partition", "blocks": [[0, 1], [2]], "capacities": [1, 1]}
//! ```
//!
//! Graphic elements are edges in file order, linear elements are matrix
//! columns. Any kind accepts an optional `"labels"` array. Subsets are
//! sorted arrays of element ids.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::ElementSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum MatroidDescription {
    Uniform {
        rank: usize,
        size: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Free {
        size: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Graphic {
        vertices: usize,
        edges: Vec<[usize; 2]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Linear {
        prime: u32,
        matrix: Vec<Vec<u32>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Partition {
        blocks: Vec<ElementSet>,
        capacities: Vec<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
}

impl MatroidDescription {
    pub fn build(&self) -> Result<Matroid> {
        let (m, labels) = match self {
            MatroidDescription::Uniform { rank, size, labels } => (Matroid::uniform(*rank, *size)?, labels),
            MatroidDescription::Free { size, labels } => (Matroid::free(*size)?, labels),
            MatroidDescription::Graphic { vertices, edges, labels } => {
                let edges: Vec<(usize, usize)> = edges.iter().map(|&[u, v]| (u, v)).collect();
                (Matroid::graphic(*vertices, &edges)?, labels)
            }
            MatroidDescription::Linear { prime, matrix, labels } => (Matroid::linear(*prime, matrix)?, labels),
            MatroidDescription::Partition { blocks, capacities, labels } => {
                let n = blocks.iter().map(|b| b.len()).sum();
                (Matroid::partition(n, blocks, capacities)?, labels)
            }
        };
        match labels {
            Some(labels) => m.with_labels(labels.clone()),
            None => Ok(m),
        }
    }

    /// Description of a matroid built by one of the file-backed
    /// constructors; `None` for combinator outputs.
    pub fn of(m: &Matroid) -> Option<MatroidDescription> {
        let labels = m.ground().labels().map(<[String]>::to_vec);
        if let Some(rank) = m.uniform_rank() {
            return Some(MatroidDescription::Uniform { rank, size: m.size(), labels });
        }
        if let Some((vertices, edges)) = m.graphic_data() {
            let edges = edges.iter().map(|&(u, v)| [u, v]).collect();
            return Some(MatroidDescription::Graphic { vertices, edges, labels });
        }
        if let Some((prime, matrix)) = m.linear_data() {
            return Some(MatroidDescription::Linear { prime, matrix: matrix.to_vec(), labels });
        }
        if let Some((blocks, capacities)) = m.partition_data() {
            return Some(MatroidDescription::Partition {
                blocks: blocks.to_vec(),
                capacities: capacities.to_vec(),
                labels,
            });
        }
        if m.kind() == crate::matroid::Kind::Free {
            return Some(MatroidDescription::Free { size: m.size(), labels });
        }
        None
    }
}

/// A pair of bases for the exchange commands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasesFile {
    pub first: ElementSet,
    pub second: ElementSet,
}

/// The two families for a stand-alone uncrossing run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamiliesFile {
    pub family: Vec<ElementSet>,
    pub canonical: Vec<ElementSet>,
}

pub fn parse_json<T: DeserializeOwned>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Construction(format!("malformed {what}: {e}")))
}

pub fn read_json<T: DeserializeOwned>(path: &Path, what: &str) -> Result<T> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Construction(format!("cannot read {what} file {}: {e}", path.display())))?;
    parse_json(&text, what)
}

pub fn read_matroid(path: &Path) -> Result<Matroid> {
    read_json::<MatroidDescription>(path, "matroid")?.build()
}

pub fn parse_matroid(text: &str) -> Result<Matroid> {
    parse_json::<MatroidDescription>(text, "matroid")?.build()
}
