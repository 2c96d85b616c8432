//! The report every command produces, and how it is written out.

use std::io::Write;

use clap::ValueEnum;
use gl11::{Error, ErrorKind};
use serde::Serialize;
use serde_json::{json, Value as Json};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    InvalidInput,
    NotComputable,
    InternalError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::InvalidInput => 2,
            Status::NotComputable => 3,
            Status::InternalError => 4,
        }
    }

    pub fn of(e: &Error) -> Self {
        match e.kind() {
            ErrorKind::InvalidInput => Status::InvalidInput,
            ErrorKind::NotComputable => Status::NotComputable,
            ErrorKind::Internal => Status::InternalError,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Rows for the CSV form of a command's output.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

/// What a command hands back on success. `status` lets a command report a
/// failed check while still printing its outputs.
pub struct Outcome {
    pub outputs: Json,
    pub table: Option<Table>,
    pub status: Status,
}

impl Outcome {
    pub fn ok(outputs: Json) -> Self {
        Outcome {
            outputs,
            table: None,
            status: Status::Ok,
        }
    }

    pub fn with_table(mut self, t: Table) -> Self {
        self.table = Some(t);
        self
    }

    pub fn with_status(mut self, s: Status) -> Self {
        self.status = s;
        self
    }
}

#[derive(Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Json,
    pub outputs: Json,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Json>,
}

impl RunReport {
    pub fn timing_seconds(&mut self, s: f64) {
        self.timing = Some(json!({ "seconds": s }));
    }
}

/// A compact JSON cell for CSV output.
pub fn cell(v: &Json) -> String {
    match v {
        Json::String(s) => s.clone(),
        Json::Null => String::new(),
        other => other.to_string(),
    }
}

fn key_value_table(outputs: &Json) -> Table {
    let rows = match outputs {
        Json::Object(m) => m.iter().map(|(k, v)| vec![k.clone(), cell(v)]).collect(),
        other => vec![vec!["value".into(), cell(other)]],
    };
    Table {
        header: vec!["key", "value"],
        rows,
    }
}

pub fn write_report(
    out: &mut dyn Write,
    format: Format,
    report: &RunReport,
    table: Option<&Table>,
) -> std::io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, report)?;
            writeln!(out)
        }
        Format::Csv => {
            let owned;
            let t = match table {
                Some(t) => t,
                None => {
                    owned = key_value_table(&report.outputs);
                    &owned
                }
            };
            let mut w = csv::Writer::from_writer(out);
            w.write_record(&t.header)?;
            for r in &t.rows {
                w.write_record(r)?;
            }
            w.flush()
        }
    }
}
