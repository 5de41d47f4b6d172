//! The preset catalog: bundled Cartan data plus optional user overrides.
//!
//! The bundled file ships inside the binary. A user file given via
//! `--presets` (or the `LIETHETA_PRESETS` environment variable) is parsed
//! with the same schema and merged on top: entries with new ids are added,
//! entries reusing a bundled id replace it.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Deserialize;

use lietheta::cartan::{CartanSpec, NodeLabel};
use lietheta::rat::parse_rat;

const BUNDLED: &str = include_str!("../data/presets.toml");

/// Ids guaranteed present in every catalog.
pub const REQUIRED_IDS: [&str; 6] = ["A1", "A2", "C2", "G2", "E6-bourbaki", "E6-paper"];

#[derive(Debug, Deserialize)]
struct CatalogFile {
    presets: BTreeMap<String, PresetEntry>,
}

#[derive(Debug, Deserialize)]
struct PresetEntry {
    rank: usize,
    matrix: Vec<Vec<i64>>,
    labels: Vec<String>,
    lengths: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct PresetCatalog {
    presets: BTreeMap<String, CartanSpec>,
}

impl PresetCatalog {
    /// The bundled catalog, optionally merged with a user file.
    pub fn load(override_path: Option<&Path>) -> Result<Self> {
        let mut presets = parse_catalog(BUNDLED, "bundled catalog")?;
        if let Some(path) = override_path {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading preset file {}", path.display()))?;
            let extra = parse_catalog(&text, &path.display().to_string())?;
            presets.extend(extra);
        }
        for id in REQUIRED_IDS {
            if !presets.contains_key(id) {
                bail!("catalog is missing the required preset {id:?}");
            }
        }
        Ok(PresetCatalog { presets })
    }

    pub fn get(&self, id: &str) -> Option<&CartanSpec> {
        self.presets.get(id)
    }

    pub fn ids(&self) -> Vec<&str> {
        self.presets.keys().map(String::as_str).collect()
    }
}

fn parse_catalog(text: &str, origin: &str) -> Result<BTreeMap<String, CartanSpec>> {
    let file: CatalogFile =
        toml::from_str(text).with_context(|| format!("parsing {origin}"))?;
    let mut out = BTreeMap::new();
    for (id, entry) in file.presets {
        let spec = entry_to_spec(&id, entry)
            .with_context(|| format!("{origin}: preset {id:?}"))?;
        out.insert(id, spec);
    }
    Ok(out)
}

fn entry_to_spec(id: &str, entry: PresetEntry) -> Result<CartanSpec> {
    if entry.rank != entry.matrix.len() {
        bail!(
            "rank field is {} but the matrix has {} rows",
            entry.rank,
            entry.matrix.len()
        );
    }
    let labels = entry
        .labels
        .iter()
        .map(|s| {
            NodeLabel::parse(s)
                .ok_or_else(|| anyhow::anyhow!("label {s:?} is not \"compact\" or \"noncompact\""))
        })
        .collect::<Result<Vec<_>>>()?;
    let lengths = entry
        .lengths
        .iter()
        .map(|s| parse_rat(s).map_err(|e| anyhow::anyhow!("{e}")))
        .collect::<Result<Vec<_>>>()?;
    let spec = CartanSpec::new(id, entry.matrix, labels, lengths);
    spec.validate()?;
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_catalog_matches_the_library_presets() {
        let catalog = PresetCatalog::load(None).unwrap();
        for spec in lietheta::presets::builtin() {
            assert_eq!(catalog.get(&spec.name), Some(&spec), "{}", spec.name);
        }
        assert_eq!(catalog.ids().len(), 6);
    }

    #[test]
    fn override_adds_and_replaces() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("extra.toml");
        std::fs::write(
            &path,
            r#"
[presets.B2]
rank = 2
labels = ["noncompact", "noncompact"]
lengths = ["2", "1"]
matrix = [[2, -1], [-2, 2]]
"#,
        )
        .unwrap();
        let catalog = PresetCatalog::load(Some(&path)).unwrap();
        assert!(catalog.get("B2").is_some());
        assert!(catalog.get("E6-bourbaki").is_some());
        assert_eq!(catalog.ids().len(), 7);
    }

    #[test]
    fn invalid_override_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.toml");
        std::fs::write(
            &path,
            r#"
[presets.bad]
rank = 1
labels = ["noncompact"]
lengths = ["2"]
matrix = [[1]]
"#,
        )
        .unwrap();
        assert!(PresetCatalog::load(Some(&path)).is_err());
    }
}
