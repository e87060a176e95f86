//! JSON and CSV serialization of reports.

use std::io::Write;

use serde::Serialize;

use crate::scan::ScanReport;
use crate::tables::TableReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}

/// One row per scanned pair, ordered by `(r, n)`.
pub fn scan_csv<W: Write>(report: &ScanReport, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for rec in &report.records {
        w.serialize(rec)?;
    }
    w.flush()?;
    Ok(())
}

/// `r,n,ell` (Table 1) or `r,n,q` (Table 2), then the verdict columns.
pub fn table_csv<W: Write>(report: &TableReport, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let key = if report.table == 1 { "ell" } else { "q" };
    w.write_record(["r", "n", key, "pass", "smallest_ell", "detail"])?;
    for row in &report.rows {
        w.write_record([
            row.r.to_string(),
            row.n.to_string(),
            row.witness.clone(),
            row.pass.to_string(),
            row.smallest_ell.map_or(String::new(), |l| l.to_string()),
            row.detail.clone(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
