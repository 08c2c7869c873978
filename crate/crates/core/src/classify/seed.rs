//! Golden-table overrides read from JSON files.
//!
//! Each `*.json` file in the directory holds an array of entries
//!
//! ```json
//! [{ "form": "AIV l=3", "order1": [[1], [3]], "order2": [[2]] }]
//! ```
//!
//! An entry replaces the golden row for that exact instance; every φ not
//! listed is expected to be neither order 1 nor order 2.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::Deserialize;

use crate::bits::NodeSet;
use crate::error::{Error, Result};
use crate::satake::{build_form, FormSpec, RealForm};

use super::Expected;

pub const SEED_DIR_VAR: &str = "SATAKE_LEVI_SEED_DIR";

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Entry {
    form: String,
    #[serde(default)]
    order1: Vec<Vec<usize>>,
    #[serde(default)]
    order2: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Default)]
pub struct Seeds {
    /// Keyed by the canonical instance string.
    rows: BTreeMap<String, (Vec<NodeSet>, Vec<NodeSet>)>,
}

fn sets(form: &RealForm, raw: &[Vec<usize>]) -> Result<Vec<NodeSet>> {
    raw.iter()
        .map(|s| {
            if s.iter().any(|&l| l == 0 || l > form.rank()) {
                return Err(Error::Parse(format!("{form}: label out of range in {s:?}")));
            }
            Ok(NodeSet::from_labels(s))
        })
        .collect()
}

impl Seeds {
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn from_json(text: &str) -> Result<Seeds> {
        let mut seeds = Seeds::default();
        seeds.add_json(text)?;
        Ok(seeds)
    }

    fn add_json(&mut self, text: &str) -> Result<()> {
        let entries: Vec<Entry> =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("seed file: {e}")))?;
        for e in entries {
            let spec: FormSpec = e.form.parse()?;
            let form = build_form(&spec)?;
            let one = sets(&form, &e.order1)?;
            let two = sets(&form, &e.order2)?;
            self.rows.insert(form.spec().to_string(), (one, two));
        }
        Ok(())
    }

    /// Reads every `*.json` file in `dir`, in file-name order.
    pub fn load_dir(dir: &Path) -> Result<Seeds> {
        let io = |e: std::io::Error| Error::Io {
            path: dir.display().to_string(),
            reason: e.to_string(),
        };
        let mut paths: Vec<_> = fs::read_dir(dir)
            .map_err(io)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        paths.sort();
        let mut seeds = Seeds::default();
        for p in paths {
            let text = fs::read_to_string(&p).map_err(|e| Error::Io {
                path: p.display().to_string(),
                reason: e.to_string(),
            })?;
            seeds.add_json(&text)?;
        }
        Ok(seeds)
    }

    /// Overrides named by `SATAKE_LEVI_SEED_DIR`, or none when it is unset.
    pub fn from_env() -> Result<Seeds> {
        match std::env::var_os(SEED_DIR_VAR) {
            Some(dir) => Seeds::load_dir(Path::new(&dir)),
            None => Ok(Seeds::default()),
        }
    }

    pub fn expected(&self, form: &RealForm, phi: NodeSet) -> Option<Expected> {
        let (one, two) = self.rows.get(&form.spec().to_string())?;
        Some(if one.contains(&phi) {
            Expected::One
        } else if two.contains(&phi) {
            Expected::Two
        } else {
            Expected::None
        })
    }
}
