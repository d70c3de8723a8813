//! Report documents for `compute` and `catalog`.
//!
//! Rationals are strings `"num/den"`, phases are `"q*pi"`, square roots of
//! non-square rationals are `"sqrt(num/den)"`. The only decimal is
//! `magnitude_decimal`.

use std::path::PathBuf;

use chern_seifert::invariants::{self, eta0, framing_twist, seifert_framing_phase};
use chern_seifert::partition::{self, BundleClassPhase, PartitionResult};
use chern_seifert::rational::render;
use chern_seifert::seifert::{chern_number, normalize, render_seifert};
use chern_seifert::torsion::homology_report;
use chern_seifert::{Error, SeifertData, TorusRank};
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::CatalogEntry;
use crate::error::CliError;
use crate::phasefile;

pub const MIN_PRECISION: u32 = 20;
pub const DEFAULT_PRECISION: u32 = 50;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PhaseMode {
    Trivial,
    File(PathBuf),
}

impl std::str::FromStr for PhaseMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "trivial" => Ok(PhaseMode::Trivial),
            _ => match s.strip_prefix("file:") {
                Some(path) if !path.is_empty() => Ok(PhaseMode::File(PathBuf::from(path))),
                _ => Err(format!("expected `trivial` or `file:PATH`, got `{s}`")),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone)]
pub struct ComputeRequest {
    pub seifert: SeifertData,
    pub rank: TorusRank,
    pub level: u64,
    pub framing: i64,
    pub phases: PhaseMode,
    pub output: OutputFormat,
    pub precision: u32,
}

impl ComputeRequest {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.level == 0 {
            return Err(CliError::Usage("--level must be at least 1".into()));
        }
        if self.precision < MIN_PRECISION {
            return Err(CliError::Usage(format!(
                "--precision must be at least {MIN_PRECISION}"
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct TorsionDoc {
    pub betti: u64,
    pub snf: Vec<String>,
    pub order: String,
    pub group: String,
    pub factors: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ClassDoc {
    pub class: Vec<u64>,
    pub q: String,
    pub phase: String,
    pub weight: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ComputeReport {
    pub seifert: String,
    pub normalized: String,
    pub rank: u32,
    pub level: u64,
    pub framing: i64,
    pub c1: String,
    pub eta0: String,
    #[serde(rename = "m_X")]
    pub m_x: String,
    pub k_power: String,
    pub torsion: TorsionDoc,
    #[serde(rename = "K_X")]
    pub k_x: String,
    pub seifert_framing_phase: String,
    pub framing_phase: String,
    pub common_phase: String,
    pub moduli_volume: String,
    pub per_class: Vec<ClassDoc>,
    pub magnitude: Option<String>,
    pub magnitude_decimal: String,
    pub precision: u32,
}

fn load_phases(
    req: &ComputeRequest,
    result_report: &chern_seifert::torsion::TorsionReport,
) -> Result<Vec<BundleClassPhase>, CliError> {
    match &req.phases {
        PhaseMode::Trivial => Ok(partition::trivial_phases(result_report)?),
        PhaseMode::File(path) => phasefile::read_phases(path),
    }
}

pub fn compute(req: &ComputeRequest) -> Result<ComputeReport, CliError> {
    req.validate()?;
    let d = &req.seifert;
    let torsion = homology_report(d, req.rank)?;
    let phases = load_phases(req, &torsion)?;
    let result =
        partition::partition_sum(d, req.rank, req.level, &phases, req.framing, req.precision)?;
    let cross = partition::magnitude_formula(d, req.rank, req.level, &phases, req.precision)?;
    let diff = (&cross - &result.magnitude).abs();
    let tolerance = chern_seifert::hp::Real::from_rational(
        &chern_seifert::rational::pow(&chern_seifert::rational::int(10), -i64::from(req.precision)),
        diff.bits(),
    );
    let scale = partition::trivial_phase_magnitude(d, req.rank, req.level)?;
    let bound =
        &tolerance * &chern_seifert::hp::Real::from_rational(scale.radicand(), diff.bits()).sqrt();
    if diff > bound {
        return Err(Error::Inconsistent(format!(
            "partition sum {} and closed-form magnitude {} disagree",
            result.magnitude.to_decimal(req.precision),
            cross.to_decimal(req.precision)
        ))
        .into());
    }
    Ok(document(req, &result))
}

fn document(req: &ComputeRequest, r: &PartitionResult) -> ComputeReport {
    let d = &req.seifert;
    ComputeReport {
        seifert: render_seifert(d),
        normalized: render_seifert(&normalize(d)),
        rank: req.rank.get(),
        level: req.level,
        framing: req.framing,
        c1: render(&chern_number(d)),
        eta0: render(r.eta0.value()),
        m_x: render(&r.m_exponent),
        k_power: render(&r.k_power),
        torsion: TorsionDoc {
            betti: r.torsion.betti,
            snf: r
                .torsion
                .snf_diagonal
                .iter()
                .map(ToString::to_string)
                .collect(),
            order: r.torsion.order_closed.to_string(),
            group: r.torsion.render_group(),
            factors: r
                .torsion
                .group_structure
                .iter()
                .map(ToString::to_string)
                .collect(),
        },
        k_x: r.k_normalization.render(),
        seifert_framing_phase: seifert_framing_phase(req.rank, &r.eta0).render(),
        framing_phase: framing_twist(req.rank, req.framing).render(),
        common_phase: r.common_phase.render(),
        moduli_volume: render(&r.moduli_volume),
        per_class: r
            .per_class
            .iter()
            .map(|t| ClassDoc {
                class: t.class.0.clone(),
                q: render(&t.cs_value),
                phase: t.phase.render(),
                weight: t.weight.render(),
            })
            .collect(),
        magnitude: r.magnitude_exact.as_ref().map(|m| m.render()),
        magnitude_decimal: r.magnitude_decimal(),
        precision: req.precision,
    }
}

pub fn render_json(report: &ComputeReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

/// `field,value` rows; per-class rows are `class:(r1,r2,...)` with value
/// `q;phase;weight`.
pub fn render_csv(report: &ComputeReport) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let t = &report.torsion;
    let mut rows: Vec<(String, String)> = vec![
        ("seifert".into(), report.seifert.clone()),
        ("normalized".into(), report.normalized.clone()),
        ("rank".into(), report.rank.to_string()),
        ("level".into(), report.level.to_string()),
        ("framing".into(), report.framing.to_string()),
        ("c1".into(), report.c1.clone()),
        ("eta0".into(), report.eta0.clone()),
        ("m_X".into(), report.m_x.clone()),
        ("k_power".into(), report.k_power.clone()),
        ("betti".into(), t.betti.to_string()),
        ("snf".into(), t.snf.join(" ")),
        ("tors_order".into(), t.order.clone()),
        ("tors_group".into(), t.group.clone()),
        ("K_X".into(), report.k_x.clone()),
        (
            "seifert_framing_phase".into(),
            report.seifert_framing_phase.clone(),
        ),
        ("framing_phase".into(), report.framing_phase.clone()),
        ("common_phase".into(), report.common_phase.clone()),
        ("moduli_volume".into(), report.moduli_volume.clone()),
        (
            "magnitude".into(),
            report.magnitude.clone().unwrap_or_default(),
        ),
        ("magnitude_decimal".into(), report.magnitude_decimal.clone()),
        ("precision".into(), report.precision.to_string()),
    ];
    for c in &report.per_class {
        let label: Vec<String> = c.class.iter().map(ToString::to_string).collect();
        rows.push((
            format!("class:({})", label.join(",")),
            format!("{};{};{}", c.q, c.phase, c.weight),
        ));
    }
    let io = |e: csv::Error| CliError::Output(e.to_string());
    w.write_record(["field", "value"]).map_err(io)?;
    for (k, v) in rows {
        w.write_record([k, v]).map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Output(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub const CATALOG_COLUMNS: [&str; 8] = [
    "seifert",
    "c1",
    "eta0",
    "m_X",
    "tors_order",
    "K_X",
    "magnitude_trivial",
    "error",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogRow {
    pub seifert: String,
    pub c1: String,
    pub eta0: String,
    pub m_x: String,
    pub tors_order: String,
    pub k_x: String,
    pub magnitude_trivial: String,
    pub error: Option<String>,
}

impl CatalogRow {
    fn fields(&self) -> [&str; 8] {
        [
            &self.seifert,
            &self.c1,
            &self.eta0,
            &self.m_x,
            &self.tors_order,
            &self.k_x,
            &self.magnitude_trivial,
            self.error.as_deref().unwrap_or(""),
        ]
    }
}

fn failed_row(text: &str, err: String) -> CatalogRow {
    CatalogRow {
        seifert: text.to_string(),
        c1: String::new(),
        eta0: String::new(),
        m_x: String::new(),
        tors_order: String::new(),
        k_x: String::new(),
        magnitude_trivial: String::new(),
        error: Some(err),
    }
}

pub fn catalog_row(entry: &CatalogEntry, rank: TorusRank, level: u64) -> CatalogRow {
    let d = match &entry.parsed {
        Ok(d) => d,
        Err(e) => return failed_row(&entry.text, format!("line {}: {e}", entry.line)),
    };
    let row = || -> Result<CatalogRow, Error> {
        let torsion = homology_report(d, rank)?;
        Ok(CatalogRow {
            seifert: render_seifert(d),
            c1: render(&chern_number(d)),
            eta0: render(eta0(d, rank).value()),
            m_x: render(&invariants::m_exponent(d, rank)?),
            tors_order: torsion.order_closed.to_string(),
            k_x: invariants::k_normalization(d, rank)?.render(),
            magnitude_trivial: partition::trivial_phase_magnitude(d, rank, level)?.render(),
            error: None,
        })
    };
    row().unwrap_or_else(|e| {
        let mut r = failed_row(&render_seifert(d), e.to_string());
        r.c1 = render(&chern_number(d));
        r.eta0 = render(eta0(d, rank).value());
        r
    })
}

/// Rows are evaluated in parallel and emitted in file order.
pub fn catalog_rows(entries: &[CatalogEntry], rank: TorusRank, level: u64) -> Vec<CatalogRow> {
    entries
        .par_iter()
        .map(|e| catalog_row(e, rank, level))
        .collect()
}

pub fn render_catalog_csv(rows: &[CatalogRow]) -> Result<String, CliError> {
    let io = |e: csv::Error| CliError::Output(e.to_string());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CATALOG_COLUMNS).map_err(io)?;
    for r in rows {
        w.write_record(r.fields()).map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Output(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::parse_catalog;
    use chern_seifert::seifert::parse_seifert;

    fn request(text: &str, rank: u32, level: u64) -> ComputeRequest {
        ComputeRequest {
            seifert: parse_seifert(text).unwrap(),
            rank: TorusRank::new(rank).unwrap(),
            level,
            framing: 0,
            phases: PhaseMode::Trivial,
            output: OutputFormat::Json,
            precision: DEFAULT_PRECISION,
        }
    }

    #[test]
    fn lens_space_report() {
        let r = compute(&request("[0,4;]", 1, 5)).unwrap();
        assert_eq!(r.magnitude.as_deref(), Some("2/5"));
        assert!(r.magnitude_decimal.starts_with("0.4000"));
        assert_eq!(r.torsion.order, "4");
        assert_eq!(r.k_x, "1/2");
        assert_eq!(r.per_class.len(), 4);
        assert_eq!(r.eta0, "2/3");
    }

    #[test]
    fn poincare_report() {
        let r = compute(&request("[0,-1;(2,1),(3,1),(5,1)]", 1, 1)).unwrap();
        assert_eq!(r.eta0, "-91/180");
        assert_eq!(r.torsion.order, "1");
        assert_eq!(r.torsion.group, "0");
        assert_eq!(r.common_phase, "91/360*pi");
    }

    #[test]
    fn zero_chern_number_exit_code() {
        let e = compute(&request("[3,0;]", 1, 1)).unwrap_err();
        assert_eq!(e.exit_code(), 3);
    }

    #[test]
    fn request_validation() {
        let mut r = request("[0,4;]", 1, 1);
        r.precision = 10;
        assert_eq!(compute(&r).unwrap_err().exit_code(), 2);
        r.precision = 50;
        r.level = 0;
        assert_eq!(compute(&r).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn phase_mode_parsing() {
        assert_eq!("trivial".parse::<PhaseMode>(), Ok(PhaseMode::Trivial));
        assert_eq!(
            "file:a.json".parse::<PhaseMode>(),
            Ok(PhaseMode::File("a.json".into()))
        );
        assert!("file:".parse::<PhaseMode>().is_err());
        assert!("random".parse::<PhaseMode>().is_err());
    }

    #[test]
    fn catalog_table() {
        let entries = parse_catalog("[0,4;]\n[3,0;]\n[0,1;(2,4)]\n");
        let rows = catalog_rows(&entries, TorusRank::new(1).unwrap(), 5);
        assert_eq!(rows[0].magnitude_trivial, "2/5");
        assert!(rows[0].error.is_none());
        assert!(rows[1]
            .error
            .as_deref()
            .unwrap()
            .contains("Chern number is zero"));
        assert!(rows[2].error.as_deref().unwrap().starts_with("line 3"));
        let csv = render_catalog_csv(&rows).unwrap();
        assert_eq!(csv.lines().count(), 4);
        assert_eq!(csv.lines().next().unwrap(), CATALOG_COLUMNS.join(","));
    }

    #[test]
    fn csv_layout() {
        let r = compute(&request("[0,4;]", 1, 5)).unwrap();
        let csv = render_csv(&r).unwrap();
        assert!(csv.starts_with("field,value\n"));
        assert!(csv.contains("magnitude,2/5\n"));
        assert!(csv.contains("class:(3),0;5/3*pi;1/2\n"));
    }
}
