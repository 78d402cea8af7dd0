//! Line-oriented knot catalogs: one JSON object per line, `#` comments.

use std::fs;
use std::io::Write;
use std::path::Path;

use knotcover::{AlexanderPoly, Genus, KnotRecord};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const DEFAULT_CATALOG: &str = include_str!("../data/knots.jsonl");

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: malformed record: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: duplicate name {name:?} (first defined on line {first})")]
    Duplicate {
        line: usize,
        name: String,
        first: usize,
    },
    #[error("line {line}: {msg}")]
    Invalid { line: usize, msg: String },
    #[error("unknown knot {0:?}")]
    Unknown(String),
}

/// The on-disk form of a record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogLine {
    pub name: String,
    pub genus: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<i64>,
    pub b: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slope: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

impl CatalogLine {
    pub fn to_record(&self) -> Result<KnotRecord, String> {
        if self.name.trim().is_empty() {
            return Err("empty name".into());
        }
        let poly = match (self.genus, self.a) {
            (1, None) => AlexanderPoly::genus1(self.b),
            (1, Some(_)) => return Err(format!("{}: genus 1 records take no `a`", self.name)),
            (2, Some(a)) => AlexanderPoly::genus2(a, self.b),
            (2, None) => return Err(format!("{}: genus 2 records need `a`", self.name)),
            (g, _) => return Err(format!("{}: genus must be 1 or 2, got {g}", self.name)),
        }
        .map_err(|e| format!("{}: {e}", self.name))?;
        Ok(KnotRecord {
            name: self.name.clone(),
            poly,
            slope: self.slope.clone(),
            source: self.source.clone(),
        })
    }

    pub fn from_record(r: &KnotRecord) -> Self {
        let (a, b) = match r.poly.genus() {
            Genus::One { b } => (None, b),
            Genus::Two { a, b } => (Some(a), b),
        };
        Self {
            name: r.name.clone(),
            genus: r.poly.genus_number(),
            a,
            b,
            slope: r.slope.clone(),
            source: r.source.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain struct serializes")
    }
}

#[derive(Clone, Debug, Default)]
pub struct Catalog {
    records: Vec<(usize, KnotRecord)>,
    /// Line count of the source text.
    lines: usize,
}

impl Catalog {
    pub fn parse(text: &str) -> Result<Self, CatalogError> {
        let mut catalog = Catalog::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            catalog.lines = line;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let entry: CatalogLine =
                serde_json::from_str(trimmed).map_err(|e| CatalogError::Malformed {
                    line,
                    msg: e.to_string(),
                })?;
            catalog.push(line, &entry)?;
        }
        Ok(catalog)
    }

    /// `default` selects the bundled catalog; anything else is a path.
    pub fn load(source: &str) -> Result<Self, CatalogError> {
        if source == "default" {
            return Self::parse(DEFAULT_CATALOG);
        }
        let text = fs::read_to_string(source).map_err(|e| CatalogError::Io {
            path: source.to_owned(),
            source: e,
        })?;
        Self::parse(&text)
    }

    fn push(&mut self, line: usize, entry: &CatalogLine) -> Result<(), CatalogError> {
        if let Some((first, _)) = self.records.iter().find(|(_, r)| r.name == entry.name) {
            return Err(CatalogError::Duplicate {
                line,
                name: entry.name.clone(),
                first: *first,
            });
        }
        let record = entry
            .to_record()
            .map_err(|msg| CatalogError::Invalid { line, msg })?;
        self.records.push((line, record));
        Ok(())
    }

    pub fn records(&self) -> impl Iterator<Item = &KnotRecord> {
        self.records.iter().map(|(_, r)| r)
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, name: &str) -> Result<&KnotRecord, CatalogError> {
        self.records()
            .find(|r| r.name == name)
            .ok_or_else(|| CatalogError::Unknown(name.to_owned()))
    }
}

/// Validates `entry` against the catalog at `path` and appends it.
pub fn append(path: &Path, entry: &CatalogLine) -> Result<KnotRecord, CatalogError> {
    let io_err = |e| CatalogError::Io {
        path: path.display().to_string(),
        source: e,
    };
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => String::new(),
        Err(e) => return Err(io_err(e)),
    };
    let mut catalog = Catalog::parse(&text)?;
    catalog.push(catalog.lines + 1, entry)?;

    let mut file = fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(io_err)?;
    let sep = if text.is_empty() || text.ends_with('\n') {
        ""
    } else {
        "\n"
    };
    writeln!(file, "{sep}{}", entry.to_json()).map_err(io_err)?;
    Ok(catalog.records.pop().expect("just pushed").1)
}
