use std::collections::BTreeMap;
use std::fmt::Write;

use sec3_core::grr::compute_bundle_characters;
use sec3_core::porteous::{chern_difference, matrix_size, porteous_class};
use sec3_core::{DegreeReport, EngineError};
use serde::{Deserialize, Serialize};

use crate::config::{Format, MethodChoice};

/// JSON shape of `sec3 degree`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeOutput {
    pub d: u32,
    pub degree: i64,
    pub method: String,
    pub degree_porteous: i64,
    pub degree_recurrence: i64,
    pub degree_closed_form: i64,
    pub degree_berzolari: i64,
    pub methods_agree: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub intermediates: Option<BTreeMap<String, String>>,
}

impl DegreeOutput {
    pub fn new(report: &DegreeReport, method: MethodChoice) -> Self {
        Self {
            d: report.d,
            degree: report.degree(method.primary()),
            method: method.as_str().to_string(),
            degree_porteous: report.degree_porteous,
            degree_recurrence: report.degree_recurrence,
            degree_closed_form: report.degree_closed_form,
            degree_berzolari: report.degree_berzolari,
            methods_agree: report.methods_agree,
            intermediates: None,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string(self).expect("plain struct serializes") + "\n",
            Format::Csv => {
                let mut out = String::from("d,degree,method,degree_berzolari,methods_agree\n");
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    self.d, self.degree, self.method, self.degree_berzolari, self.methods_agree
                )
                .unwrap();
                out
            }
            Format::Text => {
                let mut out = String::new();
                if let Some(stages) = &self.intermediates {
                    for (k, v) in stages {
                        writeln!(out, "{k} = {v}").unwrap();
                    }
                    writeln!(out, "cofactor = {}", self.degree_porteous).unwrap();
                    writeln!(out, "recurrence = {}", self.degree_recurrence).unwrap();
                    writeln!(out, "closed-form = {}", self.degree_closed_form).unwrap();
                    writeln!(out, "berzolari = {}", self.degree_berzolari).unwrap();
                    write!(out, "degree = ").unwrap();
                }
                writeln!(out, "{}", self.degree).unwrap();
                out
            }
        }
    }
}

/// Every stage of the pipeline for one `d`, pretty-printed.
pub fn intermediates(
    d: u32,
    method: MethodChoice,
) -> Result<BTreeMap<String, String>, EngineError> {
    let mut stages = BTreeMap::new();
    let (h, g) = compute_bundle_characters(d)?;
    stages.insert("ch(H)".to_string(), h.chern_character.to_string());
    stages.insert("ch(G)".to_string(), g.chern_character.to_string());
    let n = matrix_size(d);
    let series = chern_difference(d, n)?;
    for (i, c) in series.coeffs().iter().enumerate().skip(1) {
        stages.insert(format!("c_{i}"), c.to_string());
    }
    let x1 = porteous_class(d, method.primary())?;
    stages.insert(format!("D_{n}"), x1.x1.to_string());
    Ok(stages)
}

/// One row of `sec3 table`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub d: u32,
    pub degree_porteous: i64,
    pub degree_closed_form: i64,
    pub degree_berzolari: i64,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl From<&DegreeReport> for TableRow {
    fn from(r: &DegreeReport) -> Self {
        Self {
            d: r.d,
            degree_porteous: r.degree_porteous,
            degree_closed_form: r.degree_closed_form,
            degree_berzolari: r.degree_berzolari,
            matches: r.methods_agree,
        }
    }
}

pub const TABLE_HEADER: [&str; 5] = [
    "d",
    "degree_porteous",
    "degree_closed_form",
    "degree_berzolari",
    "match",
];

pub fn render_table(rows: &[TableRow], format: Format) -> String {
    let cells = |r: &TableRow| {
        [
            r.d.to_string(),
            r.degree_porteous.to_string(),
            r.degree_closed_form.to_string(),
            r.degree_berzolari.to_string(),
            r.matches.to_string(),
        ]
    };
    match format {
        Format::Json => serde_json::to_string(rows).expect("plain struct serializes") + "\n",
        Format::Csv => {
            let mut out = TABLE_HEADER.join(",") + "\n";
            for r in rows {
                out.push_str(&cells(r).join(","));
                out.push('\n');
            }
            out
        }
        Format::Text => {
            let body: Vec<[String; 5]> = rows.iter().map(cells).collect();
            let widths: Vec<usize> = (0..5)
                .map(|i| {
                    body.iter()
                        .map(|r| r[i].len())
                        .chain([TABLE_HEADER[i].len()])
                        .max()
                        .unwrap()
                })
                .collect();
            let line = |cols: Vec<&str>| {
                cols.iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    + "\n"
            };
            let mut out = line(TABLE_HEADER.to_vec());
            for r in &body {
                out.push_str(&line(r.iter().map(String::as_str).collect()));
            }
            out
        }
    }
}
