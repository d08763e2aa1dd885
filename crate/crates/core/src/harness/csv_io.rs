use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use super::{Family, Method, Metric, MinimalDegreeRecord, RobustnessRecord, SweepRecord};
use crate::error::{Error, Result};
use crate::nodes::ChebKind;

/// A record type with a fixed CSV column layout.
pub trait CsvRecord: Sized {
    const HEADER: &'static [&'static str];

    fn to_fields(&self) -> Vec<String>;

    fn from_fields(fields: &[&str]) -> Result<Self>;
}

/// 17 significant digits; parses back to the identical `f64`.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

fn format_opt(v: Option<f64>) -> String {
    v.map(format_float).unwrap_or_default()
}

fn bad(what: &str, s: &str) -> Error {
    Error::Csv(format!("cannot parse {what} from '{s}'"))
}

fn parse<T: std::str::FromStr>(what: &str, s: &str) -> Result<T> {
    s.parse().map_err(|_| bad(what, s))
}

fn parse_opt(what: &str, s: &str) -> Result<Option<f64>> {
    if s.is_empty() {
        Ok(None)
    } else {
        parse(what, s).map(Some)
    }
}

/// Writes a header row and one row per record, in input order.
pub fn export_csv<R: CsvRecord, W: Write>(records: &[R], writer: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(R::HEADER)?;
    for r in records {
        w.write_record(r.to_fields())?;
    }
    w.flush()?;
    Ok(())
}

pub fn export_csv_to_path<R: CsvRecord>(records: &[R], path: impl AsRef<Path>) -> Result<()> {
    let file = File::create(path)?;
    export_csv(records, BufWriter::new(file))
}

/// Reads records written by [`export_csv`].
pub fn read_csv<R: CsvRecord, Rd: Read>(reader: Rd) -> Result<Vec<R>> {
    let mut r = csv::Reader::from_reader(reader);
    let header = r.headers()?.clone();
    if header.iter().ne(R::HEADER.iter().copied()) {
        return Err(Error::Csv(format!("unexpected header {:?}", header)));
    }
    let mut out = Vec::new();
    for row in r.records() {
        let row = row?;
        let fields: Vec<&str> = row.iter().collect();
        out.push(R::from_fields(&fields)?);
    }
    Ok(out)
}

impl CsvRecord for SweepRecord {
    const HEADER: &'static [&'static str] = &[
        "function_id",
        "method",
        "n",
        "max_error",
        "cumulative_error",
        "endpoint_part",
        "central_part",
    ];

    fn to_fields(&self) -> Vec<String> {
        vec![
            self.function_id.to_string(),
            self.method.name().to_string(),
            self.n.to_string(),
            format_float(self.max_error),
            format_float(self.cumulative_error),
            format_opt(self.endpoint_part),
            format_opt(self.central_part),
        ]
    }

    fn from_fields(f: &[&str]) -> Result<Self> {
        if f.len() != Self::HEADER.len() {
            return Err(Error::Csv(format!(
                "expected {} fields, got {}",
                Self::HEADER.len(),
                f.len()
            )));
        }
        Ok(SweepRecord {
            function_id: parse("function_id", f[0])?,
            method: f[1].parse::<Method>().map_err(Error::Csv)?,
            n: parse("n", f[2])?,
            max_error: parse("max_error", f[3])?,
            cumulative_error: parse("cumulative_error", f[4])?,
            endpoint_part: parse_opt("endpoint_part", f[5])?,
            central_part: parse_opt("central_part", f[6])?,
        })
    }
}

impl CsvRecord for MinimalDegreeRecord {
    const HEADER: &'static [&'static str] = &["function_id", "metric", "epsilon", "family", "degree"];

    fn to_fields(&self) -> Vec<String> {
        vec![
            self.function_id.to_string(),
            self.metric.name().to_string(),
            format_float(self.epsilon),
            self.family.name().to_string(),
            self.degree.to_string(),
        ]
    }

    fn from_fields(f: &[&str]) -> Result<Self> {
        if f.len() != Self::HEADER.len() {
            return Err(Error::Csv(format!(
                "expected {} fields, got {}",
                Self::HEADER.len(),
                f.len()
            )));
        }
        Ok(MinimalDegreeRecord {
            function_id: parse("function_id", f[0])?,
            metric: f[1].parse::<Metric>().map_err(Error::Csv)?,
            epsilon: parse("epsilon", f[2])?,
            family: f[3].parse::<Family>().map_err(Error::Csv)?,
            degree: parse("degree", f[4])?,
        })
    }
}

impl CsvRecord for RobustnessRecord {
    const HEADER: &'static [&'static str] = &[
        "function_id",
        "kind",
        "n",
        "digits",
        "max_perturbation",
        "max_deviation",
    ];

    fn to_fields(&self) -> Vec<String> {
        vec![
            self.function_id.to_string(),
            self.kind.index().to_string(),
            self.n.to_string(),
            self.digits.to_string(),
            format_float(self.max_perturbation),
            format_float(self.max_deviation),
        ]
    }

    fn from_fields(f: &[&str]) -> Result<Self> {
        if f.len() != Self::HEADER.len() {
            return Err(Error::Csv(format!(
                "expected {} fields, got {}",
                Self::HEADER.len(),
                f.len()
            )));
        }
        Ok(RobustnessRecord {
            function_id: parse("function_id", f[0])?,
            kind: ChebKind::from_index(parse("kind", f[1])?).ok_or_else(|| bad("kind", f[1]))?,
            n: parse("n", f[2])?,
            digits: parse("digits", f[3])?,
            max_perturbation: parse("max_perturbation", f[4])?,
            max_deviation: parse("max_deviation", f[5])?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> SweepRecord {
        SweepRecord {
            function_id: 3,
            method: Method::AvgSwi,
            n: 42,
            max_error: 0.1 + 0.2,
            cumulative_error: 1.0 / 3.0,
            endpoint_part: None,
            central_part: Some(2.0f64.sqrt()),
        }
    }

    #[test]
    fn empty_is_header_only() {
        let mut out = Vec::new();
        export_csv::<SweepRecord, _>(&[], &mut out).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "function_id,method,n,max_error,cumulative_error,endpoint_part,central_part\n"
        );
    }

    #[test]
    fn one_record_two_lines() {
        let mut out = Vec::new();
        export_csv(&[sample()], &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(
            lines[1],
            "3,AVG_SWI,42,3.0000000000000004e-1,3.3333333333333331e-1,,1.4142135623730951e0"
        );
    }

    #[test]
    fn minimal_degree_and_robustness_round_trip() {
        let md = vec![MinimalDegreeRecord {
            function_id: 4,
            metric: Metric::Cumulative,
            epsilon: 0.001,
            family: Family::Swi,
            degree: 39,
        }];
        let mut out = Vec::new();
        export_csv(&md, &mut out).unwrap();
        assert_eq!(read_csv::<MinimalDegreeRecord, _>(out.as_slice()).unwrap(), md);

        let rb = vec![RobustnessRecord {
            function_id: 1,
            kind: ChebKind::Second,
            n: 12,
            digits: 2,
            max_perturbation: 0.0047,
            max_deviation: 0.00473,
        }];
        let mut out = Vec::new();
        export_csv(&rb, &mut out).unwrap();
        assert_eq!(read_csv::<RobustnessRecord, _>(out.as_slice()).unwrap(), rb);
    }

    #[test]
    fn wrong_header_rejected() {
        let text = "a,b\n1,2\n";
        assert!(read_csv::<SweepRecord, _>(text.as_bytes()).is_err());
    }

    #[test]
    fn unwritable_destination() {
        let r = export_csv_to_path(&[sample()], "/nonexistent-dir/out.csv");
        assert!(matches!(r, Err(Error::Io(_))));
    }
}
