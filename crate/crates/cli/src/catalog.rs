//! Catalog files: one Seifert expression per line, `#` starts a comment.

use std::path::Path;

use chern_seifert::rational;
use chern_seifert::seifert::{chern_number, parse_seifert};
use chern_seifert::{ParseError, SeifertData};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    /// 1-based line number in the source file.
    pub line: usize,
    pub text: String,
    pub parsed: Result<SeifertData, ParseError>,
}

pub fn parse_catalog(contents: &str) -> Vec<CatalogEntry> {
    contents
        .lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let text = raw.split('#').next().unwrap_or("").trim();
            (!text.is_empty()).then(|| CatalogEntry {
                line: i + 1,
                text: text.to_string(),
                parsed: parse_seifert(text),
            })
        })
        .collect()
}

pub fn read_catalog(path: &Path) -> Result<Vec<CatalogEntry>, CliError> {
    let contents = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(parse_catalog(&contents))
}

fn sd(g: u32, n: i64, pairs: &[(i64, i64)]) -> SeifertData {
    SeifertData::from_pairs(g, n, pairs).expect("built-in catalog entry is valid")
}

/// Reference manifolds with nonzero Chern number: the lens spaces
/// `L(p, 1) = [0, p;]` for `p <= 10`, the Poincaré sphere, a few named
/// examples, and a deterministic pseudo-random sample with `alpha <= 12`,
/// `|n| <= 6`, at most 4 cones and genus at most 3.
pub fn builtin_catalog() -> Vec<SeifertData> {
    let mut out: Vec<SeifertData> = (1..=10).map(|p| sd(0, p, &[])).collect();
    out.push(sd(0, -1, &[(2, 1), (3, 1), (5, 1)]));
    out.push(sd(0, -2, &[(2, 1), (3, 2), (5, 4)]));
    out.push(sd(0, 0, &[(2, 1), (2, 1), (3, 1)]));
    out.push(sd(1, 2, &[(3, 1)]));
    out.push(sd(2, 1, &[]));
    out.push(sd(3, -4, &[]));
    out.push(sd(0, 1, &[(1, 3), (4, 1)]));

    let mut rng = ChaCha8Rng::seed_from_u64(0x05e1_fe47);
    while out.len() < 64 {
        let genus = rng.gen_range(0..=3);
        let euler = rng.gen_range(-6..=6);
        let count = rng.gen_range(0..=4);
        let mut pairs = Vec::with_capacity(count);
        while pairs.len() < count {
            let alpha: i64 = rng.gen_range(2..=12);
            let beta: i64 = rng.gen_range(-alpha + 1..alpha);
            if rational::gcd_i64(alpha, beta) == 1 {
                pairs.push((alpha, beta));
            }
        }
        let d = sd(genus, euler, &pairs);
        if !chern_number(&d).is_zero() && !out.contains(&d) {
            out.push(d);
        }
    }
    out
}
