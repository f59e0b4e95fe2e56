//! On-disk cache in the ingestion JSON schema, one file per author.

use std::path::Path;

use crate::ingestion::{parse_records, serialize_records, CorpusFormat, Publication};

use super::error::FetchError;

pub fn save_cache(records: &[Publication], path: &Path) -> Result<(), FetchError> {
    let bytes = serialize_records(records, CorpusFormat::Json)
        .map_err(|e| cache_error(path, e.to_string()))?;
    std::fs::write(path, bytes).map_err(|e| cache_error(path, e.to_string()))
}

pub fn load_cache(path: &Path) -> Result<Vec<Publication>, FetchError> {
    let bytes = std::fs::read(path).map_err(|e| cache_error(path, e.to_string()))?;
    parse_records(&bytes, CorpusFormat::Json).map_err(|e| cache_error(path, e.to_string()))
}

fn cache_error(path: &Path, message: String) -> FetchError {
    FetchError::Cache {
        path: path.to_path_buf(),
        message,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(id: &str, citations: u64) -> Publication {
        Publication {
            id: id.into(),
            title: format!("work {id}"),
            authors: vec!["Ada Alpha".into()],
            citations,
            year: Some(2020),
            venue: None,
            indexed: true,
        }
    }

    #[test]
    fn empty_cache_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.json");
        save_cache(&[], &path).unwrap();
        assert_eq!(load_cache(&path).unwrap(), vec![]);
    }

    #[test]
    fn records_round_trip_exactly() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.json");
        let records = vec![
            record("w1", 3),
            record("w2", 0),
            record("w3", 41),
            record("w4", 7),
        ];
        save_cache(&records, &path).unwrap();
        assert_eq!(load_cache(&path).unwrap(), records);
    }

    #[test]
    fn truncated_cache_is_a_positioned_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.json");
        save_cache(&[record("w1", 3)], &path).unwrap();
        let bytes = std::fs::read(&path).unwrap();
        std::fs::write(&path, &bytes[..bytes.len() / 2]).unwrap();
        let err = load_cache(&path).unwrap_err();
        assert!(matches!(err, FetchError::Cache { .. }), "{err}");
        assert!(err.to_string().contains("cache.json"), "{err}");
    }

    #[test]
    fn unreadable_path_is_an_error() {
        let err = load_cache(Path::new("/nonexistent/cache.json")).unwrap_err();
        assert!(matches!(err, FetchError::Cache { .. }));
    }
}
