//! Corpus parsing and canonical serialization.
//!
//! Two interchangeable on-disk shapes carry the same records:
//!
//! * CSV, header `id,title,authors,citations,year,venue,indexed`, authors
//!   joined with `|`, empty `year`/`venue` meaning absent, empty `indexed`
//!   meaning `true`;
//! * JSON, a top-level array of objects with the same keys and `authors`
//!   as an array of strings.
//!
//! Parsing validates every record, collapses duplicate ids keeping the
//! maximum citation count, and reports malformed rows with their line (CSV)
//! or array position (JSON). Serialization is canonical: serializing,
//! parsing and serializing again reproduces the bytes exactly.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::error::IngestError;
use super::record::Publication;

pub const CSV_HEADER: [&str; 7] = [
    "id",
    "title",
    "authors",
    "citations",
    "year",
    "venue",
    "indexed",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusFormat {
    Csv,
    Json,
}

impl FromStr for CorpusFormat {
    type Err = IngestError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(CorpusFormat::Csv),
            "json" => Ok(CorpusFormat::Json),
            other => Err(IngestError::UnknownFormat(other.to_string())),
        }
    }
}

impl fmt::Display for CorpusFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CorpusFormat::Csv => "csv",
            CorpusFormat::Json => "json",
        })
    }
}

impl CorpusFormat {
    /// Guesses the format from a file extension (`.csv` / `.json`).
    pub fn from_extension(path: &std::path::Path) -> Option<Self> {
        match path.extension()?.to_str()? {
            ext if ext.eq_ignore_ascii_case("csv") => Some(CorpusFormat::Csv),
            ext if ext.eq_ignore_ascii_case("json") => Some(CorpusFormat::Json),
            _ => None,
        }
    }
}

/// Parses a corpus, validates it and collapses duplicate ids.
pub fn parse_records(bytes: &[u8], format: CorpusFormat) -> Result<Vec<Publication>, IngestError> {
    let text = std::str::from_utf8(bytes)?;
    let records = match format {
        CorpusFormat::Csv => parse_csv(text)?,
        CorpusFormat::Json => parse_json(text)?,
    };
    Ok(dedup_records(records))
}

/// Serializes a corpus in the canonical byte form for the given format.
pub fn serialize_records(
    records: &[Publication],
    format: CorpusFormat,
) -> Result<Vec<u8>, IngestError> {
    match format {
        CorpusFormat::Csv => serialize_csv(records),
        CorpusFormat::Json => serialize_json(records),
    }
}

fn parse_csv(text: &str) -> Result<Vec<Publication>, IngestError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(text.as_bytes());

    let headers = reader.headers().map_err(|e| csv_error(e, 1))?.clone();
    if headers.iter().ne(CSV_HEADER) {
        return Err(IngestError::MalformedRow {
            line: 1,
            message: format!(
                "unexpected header {:?}, expected {:?}",
                headers.iter().collect::<Vec<_>>().join(","),
                CSV_HEADER.join(",")
            ),
        });
    }

    let mut records = Vec::new();
    for result in reader.records() {
        let record = result.map_err(|e| {
            let line = e.position().map(csv::Position::line).unwrap_or(0);
            csv_error(e, line)
        })?;
        let line = record.position().map(csv::Position::line).unwrap_or(0);
        records.push(parse_csv_row(&record, line)?);
    }
    Ok(records)
}

fn csv_error(e: csv::Error, line: u64) -> IngestError {
    IngestError::MalformedRow {
        line,
        message: e.to_string(),
    }
}

fn parse_csv_row(record: &csv::StringRecord, line: u64) -> Result<Publication, IngestError> {
    let field = |idx: usize| record.get(idx).unwrap_or_default();
    let bad = |message: String| IngestError::MalformedRow { line, message };

    let authors = split_authors(field(2)).map_err(bad)?;

    let citations_raw = field(3);
    if citations_raw.is_empty() {
        return Err(bad("missing citation count".into()));
    }
    let citations: u64 = citations_raw.parse().map_err(|_| {
        bad(format!(
            "citation count must be a nonnegative integer, got {citations_raw:?}"
        ))
    })?;

    let year = match field(4) {
        "" => None,
        raw => Some(
            raw.parse::<i32>()
                .map_err(|_| bad(format!("year must be an integer, got {raw:?}")))?,
        ),
    };
    let venue = match field(5) {
        "" => None,
        raw => Some(raw.to_string()),
    };
    let indexed = match field(6) {
        "" | "true" => true,
        "false" => false,
        raw => {
            return Err(bad(format!(
                "indexed must be true, false or empty, got {raw:?}"
            )))
        }
    };

    Ok(Publication {
        id: field(0).to_string(),
        title: field(1).to_string(),
        authors,
        citations,
        year,
        venue,
        indexed,
    })
}

fn split_authors(raw: &str) -> Result<Vec<String>, String> {
    if raw.is_empty() {
        return Err("empty author list".into());
    }
    let authors: Vec<String> = raw.split('|').map(str::to_string).collect();
    if authors.iter().any(String::is_empty) {
        return Err(format!("author list {raw:?} contains an empty name"));
    }
    Ok(authors)
}

fn parse_json(text: &str) -> Result<Vec<Publication>, IngestError> {
    let records: Vec<Publication> =
        serde_json::from_str(text).map_err(|e| IngestError::MalformedDocument {
            path: format!("line {} column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;

    for (idx, record) in records.iter().enumerate() {
        let path = format!("$[{idx}]");
        if record.authors.is_empty() {
            return Err(IngestError::MalformedDocument {
                path,
                message: "empty author list".into(),
            });
        }
        if record.authors.iter().any(String::is_empty) {
            return Err(IngestError::MalformedDocument {
                path,
                message: "author list contains an empty name".into(),
            });
        }
    }

    // Empty venue strings mean "absent" in the CSV shape; canonicalize JSON
    // the same way so both forms describe the same corpus.
    Ok(records
        .into_iter()
        .map(|mut r| {
            if r.venue.as_deref() == Some("") {
                r.venue = None;
            }
            r
        })
        .collect())
}

/// Collapses duplicate ids keeping the record with the maximum citation
/// count; the survivor sits at the first occurrence's position. Citation
/// counts only grow across snapshots, so the maximum is the freshest.
pub fn dedup_records(records: Vec<Publication>) -> Vec<Publication> {
    let mut by_id: HashMap<String, usize> = HashMap::new();
    let mut out: Vec<Publication> = Vec::with_capacity(records.len());
    for record in records {
        match by_id.get(&record.id) {
            Some(&idx) => {
                if record.citations > out[idx].citations {
                    out[idx] = record;
                }
            }
            None => {
                by_id.insert(record.id.clone(), out.len());
                out.push(record);
            }
        }
    }
    out
}

fn serialize_csv(records: &[Publication]) -> Result<Vec<u8>, IngestError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(CSV_HEADER)
        .map_err(|e| csv_error(e, 1))?;

    for record in records {
        for author in &record.authors {
            if author.contains('|') {
                return Err(IngestError::UnserializableAuthor(author.clone()));
            }
        }
        let year = record.year.map(|y| y.to_string()).unwrap_or_default();
        writer
            .write_record([
                record.id.as_str(),
                record.title.as_str(),
                &record.authors.join("|"),
                &record.citations.to_string(),
                &year,
                record.venue.as_deref().unwrap_or(""),
                if record.indexed { "true" } else { "false" },
            ])
            .map_err(|e| csv_error(e, 0))?;
    }
    writer
        .into_inner()
        .map_err(|e| IngestError::MalformedDocument {
            path: "<csv writer>".into(),
            message: e.to_string(),
        })
}

fn serialize_json(records: &[Publication]) -> Result<Vec<u8>, IngestError> {
    let mut bytes =
        serde_json::to_vec_pretty(records).map_err(|e| IngestError::MalformedDocument {
            path: "<json writer>".into(),
            message: e.to_string(),
        })?;
    bytes.push(b'\n');
    Ok(bytes)
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEADER: &str = "id,title,authors,citations,year,venue,indexed\n";

    #[test]
    fn header_only_csv_is_empty_corpus() {
        assert_eq!(
            parse_records(HEADER.as_bytes(), CorpusFormat::Csv).unwrap(),
            vec![]
        );
    }

    #[test]
    fn single_row_parses() {
        let csv = format!("{HEADER}p1,Title,A. Smith|B. Jones,12,2010,J.Phys,true\n");
        let records = parse_records(csv.as_bytes(), CorpusFormat::Csv).unwrap();
        assert_eq!(records.len(), 1);
        let p = &records[0];
        assert_eq!(p.id, "p1");
        assert_eq!(p.authors, vec!["A. Smith", "B. Jones"]);
        assert_eq!(p.citations, 12);
        assert_eq!(p.year, Some(2010));
        assert_eq!(p.venue.as_deref(), Some("J.Phys"));
        assert!(p.indexed);
    }

    #[test]
    fn duplicate_id_keeps_max_citations() {
        let csv = format!("{HEADER}p1,T,A,5,,,\np1,T,A,9,,,\n");
        let records = parse_records(csv.as_bytes(), CorpusFormat::Csv).unwrap();
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].citations, 9);
    }

    #[test]
    fn duplicate_id_lower_citations_ignored() {
        let csv = format!("{HEADER}p1,T,A,9,,,\np1,T,A,5,,,\n");
        let records = parse_records(csv.as_bytes(), CorpusFormat::Csv).unwrap();
        assert_eq!(records[0].citations, 9);
    }

    #[test]
    fn empty_optional_fields_mean_absent_and_indexed() {
        let csv = format!("{HEADER}p1,T,A,0,,,\n");
        let records = parse_records(csv.as_bytes(), CorpusFormat::Csv).unwrap();
        assert_eq!(records[0].year, None);
        assert_eq!(records[0].venue, None);
        assert!(records[0].indexed);
    }

    #[test]
    fn negative_citations_rejected_with_line() {
        let csv = format!("{HEADER}p1,T,A,3,,,\np2,T,A,-3,,,\n");
        let err = parse_records(csv.as_bytes(), CorpusFormat::Csv).unwrap_err();
        match err {
            IngestError::MalformedRow { line, message } => {
                assert_eq!(line, 3);
                assert!(message.contains("nonnegative integer"), "{message}");
            }
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn missing_citations_rejected() {
        let csv = format!("{HEADER}p1,T,A,,,,\n");
        let err = parse_records(csv.as_bytes(), CorpusFormat::Csv).unwrap_err();
        assert!(err.to_string().contains("missing citation count"));
    }

    #[test]
    fn wrong_arity_rejected_with_line() {
        let csv = format!("{HEADER}p1,T,A,3\n");
        let err = parse_records(csv.as_bytes(), CorpusFormat::Csv).unwrap_err();
        assert!(
            matches!(err, IngestError::MalformedRow { line: 2, .. }),
            "{err}"
        );
    }

    #[test]
    fn empty_author_list_rejected() {
        let csv = format!("{HEADER}p1,T,,3,,,\n");
        let err = parse_records(csv.as_bytes(), CorpusFormat::Csv).unwrap_err();
        assert!(err.to_string().contains("empty author list"));
    }

    #[test]
    fn empty_author_name_rejected() {
        let csv = format!("{HEADER}p1,T,A||B,3,,,\n");
        let err = parse_records(csv.as_bytes(), CorpusFormat::Csv).unwrap_err();
        assert!(err.to_string().contains("empty name"));
    }

    #[test]
    fn wrong_header_rejected() {
        let err = parse_records(b"id,name\n", CorpusFormat::Csv).unwrap_err();
        assert!(matches!(err, IngestError::MalformedRow { line: 1, .. }));
    }

    #[test]
    fn json_array_parses_with_defaults() {
        let json = r#"[{"id":"w1","title":"T","authors":["Solo Author"],"citations":17}]"#;
        let records = parse_records(json.as_bytes(), CorpusFormat::Json).unwrap();
        assert_eq!(records[0].citations, 17);
        assert!(records[0].indexed);
        assert_eq!(records[0].year, None);
    }

    #[test]
    fn json_empty_authors_rejected_with_path() {
        let json = r#"[{"id":"w1","title":"T","authors":[],"citations":1}]"#;
        let err = parse_records(json.as_bytes(), CorpusFormat::Json).unwrap_err();
        assert!(err.to_string().contains("$[0]"), "{err}");
    }

    #[test]
    fn json_float_citations_rejected() {
        let json = r#"[{"id":"w1","title":"T","authors":["A"],"citations":1.5}]"#;
        assert!(parse_records(json.as_bytes(), CorpusFormat::Json).is_err());
    }

    #[test]
    fn unknown_format_is_usage_error() {
        let err = "xml".parse::<CorpusFormat>().unwrap_err();
        assert!(matches!(err, IngestError::UnknownFormat(_)));
    }

    #[test]
    fn csv_round_trip_preserves_fields() {
        let records = vec![
            Publication {
                id: "p1".into(),
                title: "A title, with commas \"and quotes\"".into(),
                authors: vec!["A. Smith".into(), "B. Jones".into()],
                citations: 12,
                year: Some(2010),
                venue: Some("J. Phys".into()),
                indexed: true,
            },
            Publication {
                id: "p2".into(),
                title: "Second".into(),
                authors: vec!["Solo".into()],
                citations: 0,
                year: None,
                venue: None,
                indexed: false,
            },
        ];
        let bytes = serialize_records(&records, CorpusFormat::Csv).unwrap();
        let parsed = parse_records(&bytes, CorpusFormat::Csv).unwrap();
        assert_eq!(parsed, records);
        let again = serialize_records(&parsed, CorpusFormat::Csv).unwrap();
        assert_eq!(again, bytes);
    }

    #[test]
    fn json_round_trip_preserves_fields() {
        let records = vec![Publication {
            id: "w1".into(),
            title: "T".into(),
            authors: vec!["Solo".into()],
            citations: 3,
            year: Some(1999),
            venue: None,
            indexed: true,
        }];
        let bytes = serialize_records(&records, CorpusFormat::Json).unwrap();
        let parsed = parse_records(&bytes, CorpusFormat::Json).unwrap();
        assert_eq!(parsed, records);
        let again = serialize_records(&parsed, CorpusFormat::Json).unwrap();
        assert_eq!(again, bytes);
    }

    #[test]
    fn pipe_in_author_name_cannot_serialize_to_csv() {
        let records = vec![Publication {
            id: "p1".into(),
            title: "T".into(),
            authors: vec!["A|B".into()],
            citations: 0,
            year: None,
            venue: None,
            indexed: true,
        }];
        assert!(matches!(
            serialize_records(&records, CorpusFormat::Csv),
            Err(IngestError::UnserializableAuthor(_))
        ));
    }
}
