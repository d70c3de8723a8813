//! Phase files: a JSON array of `{"class": [residues...], "q": "num/den"}`,
//! one object per flat bundle class, with `CS(A_P) = 2 pi q`.

use std::path::Path;

use chern_seifert::partition::{BundleClassPhase, ClassLabel};
use chern_seifert::rational;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhaseRecord {
    pub class: Vec<u64>,
    pub q: String,
}

pub fn parse_phases(json: &str, path: &Path) -> Result<Vec<BundleClassPhase>, CliError> {
    let fail = |reason: String| CliError::PhaseFile {
        path: path.to_path_buf(),
        reason,
    };
    let records: Vec<PhaseRecord> = serde_json::from_str(json).map_err(|e| fail(e.to_string()))?;
    records
        .into_iter()
        .enumerate()
        .map(|(i, r)| {
            let q = rational::parse(&r.q)
                .ok_or_else(|| fail(format!("entry {i}: q = {:?} is not a rational", r.q)))?;
            Ok(BundleClassPhase::new(ClassLabel(r.class), q))
        })
        .collect()
}

pub fn read_phases(path: &Path) -> Result<Vec<BundleClassPhase>, CliError> {
    let json = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_phases(&json, path)
}

pub fn render_phases(phases: &[BundleClassPhase]) -> String {
    let records: Vec<PhaseRecord> = phases
        .iter()
        .map(|p| PhaseRecord {
            class: p.class().0.clone(),
            q: rational::render(p.cs_value()),
        })
        .collect();
    serde_json::to_string_pretty(&records).expect("phase records serialize")
}
