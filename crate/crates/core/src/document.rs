//! The JSON document format: one universe plus named membership assignments.
//!
//! Membership entries may be written in idempotent coordinates
//! (`{"e1": u, "e2": v}`) or standard coordinates (`{"a1": x, "a2": y}`);
//! both are converted on load. Numbers are re-rendered with 12 significant
//! digits on save, so save-then-load is the identity up to that formatting
//! and byte-deterministic across runs.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fmt::format_sig;
use crate::hyp::{Hyp, OrderMode};
use crate::set::{DFuzzySet, Universe};

pub const DOCUMENT_VERSION: u64 = 1;

/// Which coordinate pair a saved document writes for each membership value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ValueEncoding {
    #[default]
    Idempotent,
    Standard,
}

/// A validated document. Set names are kept sorted so every serialization
/// is deterministic.
#[derive(Clone, Debug)]
pub struct Document {
    pub universe: Arc<Universe>,
    pub sets: BTreeMap<String, DFuzzySet>,
    pub default_mode: OrderMode,
}

#[derive(Serialize, Deserialize)]
struct DocumentDto {
    version: u64,
    universe: UniverseDto,
    sets: BTreeMap<String, SetDto>,
    #[serde(default)]
    default_mode: ModeDto,
}

#[derive(Serialize, Deserialize)]
struct UniverseDto {
    dim: usize,
    points: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct SetDto {
    values: Vec<EntryDto>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum EntryDto {
    Idempotent { e1: f64, e2: f64 },
    Standard { a1: f64, a2: f64 },
}

#[derive(Serialize, Deserialize, Clone, Copy, Default)]
#[serde(rename_all = "lowercase")]
enum ModeDto {
    #[default]
    Lattice,
    Strict,
}

impl From<ModeDto> for OrderMode {
    fn from(m: ModeDto) -> OrderMode {
        match m {
            ModeDto::Lattice => OrderMode::Lattice,
            ModeDto::Strict => OrderMode::Strict,
        }
    }
}

impl From<OrderMode> for ModeDto {
    fn from(m: OrderMode) -> ModeDto {
        match m {
            OrderMode::Lattice => ModeDto::Lattice,
            OrderMode::Strict => ModeDto::Strict,
        }
    }
}

/// Round through the 12-significant-digit rendering, so saved numbers and
/// rendered numbers agree exactly.
fn round12(x: f64) -> f64 {
    format_sig(x, 12).parse().expect("format_sig emits valid decimals")
}

impl Document {
    pub fn new(universe: Arc<Universe>) -> Document {
        Document {
            universe,
            sets: BTreeMap::new(),
            default_mode: OrderMode::Lattice,
        }
    }

    pub fn from_json(text: &str) -> Result<Document> {
        let dto: DocumentDto = serde_json::from_str(text).map_err(|e| Error::DocumentParse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        if dto.version != DOCUMENT_VERSION {
            return Err(Error::DocumentVersion { got: dto.version });
        }
        let universe = Arc::new(Universe::new(
            dto.universe.dim,
            dto.universe.points,
            dto.universe.labels,
        )?);
        let mut sets = BTreeMap::new();
        for (name, set_dto) in dto.sets {
            let wrap = |source: Error| Error::SetValidation {
                name: name.clone(),
                source: Box::new(source),
            };
            let mut values = Vec::with_capacity(set_dto.values.len());
            for entry in set_dto.values {
                let value = match entry {
                    EntryDto::Idempotent { e1, e2 } => Hyp::new(e1, e2),
                    EntryDto::Standard { a1, a2 } => Hyp::from_standard(a1, a2),
                }
                .map_err(wrap)?;
                values.push(value);
            }
            let set = DFuzzySet::new(universe.clone(), values).map_err(wrap)?;
            sets.insert(name, set);
        }
        Ok(Document {
            universe,
            sets,
            default_mode: dto.default_mode.into(),
        })
    }

    pub fn to_json(&self, encoding: ValueEncoding) -> String {
        let universe = UniverseDto {
            dim: self.universe.dim(),
            points: self
                .universe
                .points()
                .iter()
                .map(|p| p.iter().map(|&c| round12(c)).collect())
                .collect(),
            labels: self.universe.labels().map(|ls| ls.to_vec()),
        };
        let sets = self
            .sets
            .iter()
            .map(|(name, set)| {
                let values = set
                    .values()
                    .iter()
                    .map(|&value| match encoding {
                        ValueEncoding::Idempotent => EntryDto::Idempotent {
                            e1: round12(value.u()),
                            e2: round12(value.v()),
                        },
                        ValueEncoding::Standard => {
                            let (a1, a2) = value.to_standard();
                            EntryDto::Standard {
                                a1: round12(a1),
                                a2: round12(a2),
                            }
                        }
                    })
                    .collect();
                (name.clone(), SetDto { values })
            })
            .collect();
        let dto = DocumentDto {
            version: DOCUMENT_VERSION,
            universe,
            sets,
            default_mode: self.default_mode.into(),
        };
        let mut text = serde_json::to_string_pretty(&dto).expect("document serializes");
        text.push('\n');
        text
    }

    pub fn load(path: &Path) -> Result<Document> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Document::from_json(&text)
    }

    pub fn save(&self, path: &Path, encoding: ValueEncoding) -> Result<()> {
        std::fs::write(path, self.to_json(encoding)).map_err(|e| Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })
    }

    pub fn get(&self, name: &str) -> Result<&DFuzzySet> {
        self.sets.get(name).ok_or_else(|| Error::UnknownSet {
            name: name.to_string(),
        })
    }

    /// Store a result set under a name. The set must live on this
    /// document's universe.
    pub fn insert(&mut self, name: &str, set: DFuzzySet) -> Result<()> {
        if !Arc::ptr_eq(set.universe(), &self.universe) && set.universe() != &self.universe {
            return Err(Error::UniverseMismatch);
        }
        self.sets.insert(name.to_string(), set);
        Ok(())
    }
}
