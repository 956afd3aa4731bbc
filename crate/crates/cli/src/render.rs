//! Text, JSON and CSV renderings. Partitions go to CSV in exponent notation
//! without parentheses (`3^2,2^2`).

use rrweights::combinatorics::{RefinementReport, TableRow};
use rrweights::discovery::SolutionReport;
use rrweights::identities::VerificationReport;
use rrweights::partitions::Partition;
use serde::Serialize;

use crate::{Failure, Format};

fn json<T: Serialize + ?Sized>(value: &T) -> Result<String, Failure> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn lines<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(|r| format!("{r}\n")).collect()
}

fn csv_from<F>(header: &[&str], write_rows: F) -> Result<String, Failure>
where
    F: FnOnce(&mut csv::Writer<Vec<u8>>) -> Result<(), Failure>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    write_rows(&mut w)?;
    let bytes = w.into_inner().map_err(|e| Failure::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn verify(reports: &[VerificationReport], format: Format) -> Result<String, Failure> {
    match format {
        Format::Text => Ok(lines(reports)),
        Format::Json => json(reports),
        Format::Csv => csv_from(&["id", "params", "order", "status", "degree", "lhs", "rhs"], |w| {
            for r in reports {
                let d = r.discrepancy.as_ref();
                w.write_record([
                    r.id.clone(),
                    r.params.to_string(),
                    r.order.to_string(),
                    if r.passed() { "pass" } else { "fail" }.to_string(),
                    d.map(|d| d.degree.to_string()).unwrap_or_default(),
                    d.map(|d| d.lhs.to_string()).unwrap_or_default(),
                    d.map(|d| d.rhs.to_string()).unwrap_or_default(),
                ])?;
            }
            Ok(())
        }),
    }
}

pub fn refinements(reports: &[RefinementReport], format: Format) -> Result<String, Failure> {
    match format {
        Format::Text => Ok(lines(reports)),
        Format::Json => json(reports),
        Format::Csv => csv_from(&["id", "params", "n_min", "n_max", "status", "classes", "mismatch_n"], |w| {
            for r in reports {
                w.write_record([
                    r.id.clone(),
                    r.params.to_string(),
                    r.n_min.to_string(),
                    r.n_max.to_string(),
                    if r.passed() { "pass" } else { "fail" }.to_string(),
                    r.classes.to_string(),
                    r.mismatch.as_ref().map(|m| m.n.to_string()).unwrap_or_default(),
                ])?;
            }
            Ok(())
        }),
    }
}

pub fn partitions(parts: &[Partition], format: Format) -> Result<String, Failure> {
    match format {
        Format::Text => Ok(lines(parts)),
        Format::Json => json(parts),
        Format::Csv => csv_from(&["partition"], |w| {
            for p in parts {
                w.write_record([p.exponent_notation()])?;
            }
            Ok(())
        }),
    }
}

pub fn table(rows: &[TableRow], format: Format) -> Result<String, Failure> {
    match format {
        Format::Text => unreachable!("text tables are rendered by the library"),
        Format::Json => json(rows),
        Format::Csv => csv_from(&["mu", "lambda", "image", "signature"], |w| {
            for r in rows {
                w.write_record([
                    r.mu.exponent_notation(),
                    r.lambda.exponent_notation(),
                    r.image.exponent_notation(),
                    r.signature.counts().iter().map(u32::to_string).collect::<Vec<_>>().join(","),
                ])?;
            }
            Ok(())
        }),
    }
}

pub fn solution(report: &SolutionReport, format: Format) -> Result<String, Failure> {
    match format {
        Format::Text => Ok(report.to_string()),
        Format::Json => json(report),
        Format::Csv => csv_from(&["numerator", "value", "nonnegative"], |w| {
            for (i, n) in report.numerators.iter().enumerate() {
                let pos = report.positive.get(i).map(|p| p.to_string()).unwrap_or_default();
                w.write_record([format!("N{i}"), n.clone(), pos])?;
            }
            Ok(())
        }),
    }
}
