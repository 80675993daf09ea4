//! Result tables in CSV and JSON.
//!
//! CSV columns are fixed to
//! `index,value,multiplicity,factor_index,gaussian_degree,description`.
//! The JSON document mirrors the factor-spectrum file schema with the
//! provenance columns added per eigenvalue, so a table of a valid factor
//! spectrum reloads through the factor-file reader.

use serde::Serialize;
use soliton_spectra::{DiscreteSpectrum, SolitonModel, SpectralLine};

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub index: usize,
    pub value: f64,
    pub multiplicity: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factor_index: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gaussian_degree: Option<u32>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub description: String,
}

/// A spectrum with the metadata the file schema carries.
#[derive(Debug, Clone)]
pub struct SpectrumTable {
    pub name: String,
    pub dim: u32,
    pub rho: f64,
    pub complete_below: f64,
    pub rows: Vec<TableRow>,
}

#[derive(Serialize)]
struct JsonDocument<'a> {
    name: &'a str,
    dim: u32,
    rho: f64,
    eigenvalues: Vec<JsonLine<'a>>,
    complete_below: f64,
}

#[derive(Serialize)]
struct JsonLine<'a> {
    value: f64,
    multiplicity: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    factor_index: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gaussian_degree: Option<u32>,
    #[serde(skip_serializing_if = "str::is_empty")]
    description: &'a str,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

impl SpectrumTable {
    /// Table of a rigid-soliton spectrum with per-line provenance notes.
    pub fn from_model_spectrum(model: &SolitonModel, spectrum: &DiscreteSpectrum) -> Self {
        let rows = spectrum
            .lines()
            .iter()
            .enumerate()
            .map(|(i, line)| row_for(model, i + 1, line))
            .collect();
        Self {
            name: format!(
                "{}x R^{} (rho = {})",
                model.factor().name(),
                model.gaussian_dim(),
                model.rho()
            ),
            dim: model.total_dim(),
            rho: model.rho(),
            complete_below: spectrum.complete_below(),
            rows,
        }
    }

    /// Table of a bare spectrum (no model attached).
    pub fn from_spectrum(
        name: &str,
        dim: u32,
        rho: f64,
        spectrum: &DiscreteSpectrum,
    ) -> Self {
        let rows = spectrum
            .lines()
            .iter()
            .enumerate()
            .map(|(i, line)| TableRow {
                index: i + 1,
                value: line.value().value(),
                multiplicity: line.multiplicity(),
                factor_index: line.provenance().first().map(|p| p.factor_index),
                gaussian_degree: line.provenance().first().map(|p| p.gaussian_degree),
                description: String::new(),
            })
            .collect();
        Self {
            name: name.to_string(),
            dim,
            rho,
            complete_below: spectrum.complete_below(),
            rows,
        }
    }

    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer
            .write_record([
                "index",
                "value",
                "multiplicity",
                "factor_index",
                "gaussian_degree",
                "description",
            ])
            .expect("in-memory csv");
        for row in &self.rows {
            writer
                .write_record([
                    row.index.to_string(),
                    format_value(row.value),
                    row.multiplicity.to_string(),
                    row.factor_index.map(|v| v.to_string()).unwrap_or_default(),
                    row.gaussian_degree
                        .map(|v| v.to_string())
                        .unwrap_or_default(),
                    row.description.clone(),
                ])
                .expect("in-memory csv");
        }
        String::from_utf8(writer.into_inner().expect("in-memory csv")).expect("csv is utf-8")
    }

    pub fn to_json(&self) -> String {
        let doc = JsonDocument {
            name: &self.name,
            dim: self.dim,
            rho: self.rho,
            eigenvalues: self
                .rows
                .iter()
                .map(|r| JsonLine {
                    value: r.value,
                    multiplicity: r.multiplicity,
                    factor_index: r.factor_index,
                    gaussian_degree: r.gaussian_degree,
                    description: &r.description,
                })
                .collect(),
            complete_below: self.complete_below,
        };
        let mut out = serde_json::to_string_pretty(&doc).expect("tables always serialize");
        out.push('\n');
        out
    }

    pub fn emit(&self, format: TableFormat) -> String {
        match format {
            TableFormat::Csv => self.to_csv(),
            TableFormat::Json => self.to_json(),
        }
    }
}

fn row_for(model: &SolitonModel, index: usize, line: &SpectralLine) -> TableRow {
    let m = model.gaussian_dim();
    let descriptions: Vec<String> = line
        .provenance()
        .iter()
        .map(|p| {
            let coeff = if model.is_expander() {
                m + p.gaussian_degree
            } else {
                p.gaussian_degree
            };
            format!("mu_{} + {}|rho|", p.factor_index, coeff)
        })
        .collect();
    TableRow {
        index,
        value: line.value().value(),
        multiplicity: line.multiplicity(),
        factor_index: line.provenance().first().map(|p| p.factor_index),
        gaussian_degree: line.provenance().first().map(|p| p.gaussian_degree),
        description: descriptions.join("; "),
    }
}

/// Shortest representation that round-trips the double exactly; plain
/// integers print without a decimal point.
pub fn format_value(x: f64) -> String {
    format!("{x}")
}
