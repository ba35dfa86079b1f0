//! The report emitted by every command, in JSON, CSV or plain text.

use std::io::{self, Write};

use serde::Serialize;

use crate::config::{Format, RunConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Grade {
    pub k: i64,
    pub l: i64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Dims {
    pub basis: usize,
    pub g0_inv: Option<usize>,
    pub full_inv: Option<usize>,
    pub oracle: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub grade: Grade,
    pub dims: Dims,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comparison: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Reported without a verdict.
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Property {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Property {
    pub fn verdict(name: &str, failure: Option<String>) -> Self {
        let status = if failure.is_some() { Status::Fail } else { Status::Pass };
        Self { name: name.to_string(), status, witness: failure }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub config: RunConfig,
    /// Free-form lines shown above the table in text output.
    #[serde(skip)]
    pub header: Vec<String>,
    pub tables: Vec<TableRow>,
    pub properties: Vec<Property>,
}

impl Report {
    pub fn failed(&self) -> usize {
        self.properties.iter().filter(|p| p.status == Status::Fail).count()
    }

    pub fn write<W: Write>(&self, out: &mut W) -> io::Result<()> {
        match self.config.format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, self).map_err(io::Error::other)?;
                writeln!(out)
            }
            Format::Csv => self.write_csv(out),
            Format::Text => self.write_text(out),
        }
    }

    fn write_csv<W: Write>(&self, out: &mut W) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["k", "l", "dim_basis", "dim_g0_inv", "dim_full_inv", "dim_oracle"])?;
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        for r in &self.tables {
            w.write_record([
                r.grade.k.to_string(),
                r.grade.l.to_string(),
                r.dims.basis.to_string(),
                opt(r.dims.g0_inv),
                opt(r.dims.full_inv),
                opt(r.dims.oracle),
            ])?;
        }
        w.flush()
    }

    fn write_text<W: Write>(&self, out: &mut W) -> io::Result<()> {
        for line in &self.header {
            writeln!(out, "# {line}")?;
        }
        if !self.tables.is_empty() {
            let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
            writeln!(
                out,
                "{:>3} {:>4} {:>8} {:>8} {:>8} {:>8}  comparison",
                "k", "l", "basis", "g0_inv", "full_inv", "oracle"
            )?;
            for r in &self.tables {
                write!(
                    out,
                    "{:>3} {:>4} {:>8} {:>8} {:>8} {:>8}",
                    r.grade.k,
                    r.grade.l,
                    r.dims.basis,
                    opt(r.dims.g0_inv),
                    opt(r.dims.full_inv),
                    opt(r.dims.oracle)
                )?;
                if let Some(c) = &r.comparison {
                    write!(out, "  {c}")?;
                }
                if let Some(w) = &r.witness {
                    write!(out, "  {w}")?;
                }
                writeln!(out)?;
            }
        }
        for p in &self.properties {
            let tag = match p.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Info => "INFO",
            };
            write!(out, "{tag} {}", p.name)?;
            if let Some(w) = &p.witness {
                write!(out, ": {w}")?;
            }
            writeln!(out)?;
        }
        if !self.properties.is_empty() {
            let verdicts = self.properties.iter().filter(|p| p.status != Status::Info).count();
            writeln!(out, "{} of {verdicts} properties passed", verdicts - self.failed())?;
        }
        Ok(())
    }
}
