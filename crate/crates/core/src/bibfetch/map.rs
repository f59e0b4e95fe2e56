//! Translates raw provider records into Publication values via field paths.

use serde_json::Value;

use crate::ingestion::Publication;

use super::config::ProviderConfig;
use super::error::FetchError;

/// Walks a dot-separated path through nested objects. Returns `None` when
/// any segment is absent or `null`.
fn lookup<'a>(root: &'a Value, path: &str) -> Option<&'a Value> {
    let mut current = root;
    for segment in path.split('.') {
        current = current.get(segment)?;
    }
    if current.is_null() {
        None
    } else {
        Some(current)
    }
}

/// Resolves a path that may map over one array segment (`tag[]`). Without a
/// `[]` segment the path must land on an array or a single value, which is
/// wrapped. `None` means the path is absent entirely.
fn lookup_many<'a>(root: &'a Value, path: &str) -> Option<Vec<&'a Value>> {
    match path.split_once("[]") {
        Some((head, tail)) => {
            let array = lookup(root, head)?.as_array()?;
            let tail = tail.strip_prefix('.').unwrap_or(tail);
            let mut out = Vec::with_capacity(array.len());
            for element in array {
                let resolved = if tail.is_empty() {
                    Some(element)
                } else {
                    lookup(element, tail)
                };
                // A record with a hole in one element still contributes the rest.
                if let Some(v) = resolved {
                    out.push(v);
                }
            }
            Some(out)
        }
        None => match lookup(root, path)? {
            Value::Array(items) => Some(items.iter().collect()),
            single => Some(vec![single]),
        },
    }
}

fn required<'a>(root: &'a Value, path: &str) -> Result<&'a Value, FetchError> {
    lookup(root, path).ok_or_else(|| FetchError::MissingField {
        path: path.to_string(),
    })
}

/// Applies the config's field map to one raw record.
///
/// Required fields (`id`, `authors`, `citations`) must resolve; optional
/// fields fall back to their absent forms. Citation counts are accepted
/// from nonnegative integers only — no strings, floats or defaults.
pub fn map_record(cfg: &ProviderConfig, raw: &Value) -> Result<Publication, FetchError> {
    let fm = &cfg.field_map;

    let id = match required(raw, &fm.id)? {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        _ => {
            return Err(FetchError::WrongType {
                path: fm.id.clone(),
                expected: "string",
            })
        }
    };

    let author_values = lookup_many(raw, &fm.authors).ok_or_else(|| FetchError::MissingField {
        path: fm.authors.clone(),
    })?;
    let mut authors = Vec::with_capacity(author_values.len());
    for value in author_values {
        match value.as_str() {
            Some(s) if !s.is_empty() => authors.push(s.to_string()),
            _ => {
                return Err(FetchError::WrongType {
                    path: fm.authors.clone(),
                    expected: "non-empty author name strings",
                })
            }
        }
    }
    if authors.is_empty() {
        return Err(FetchError::WrongType {
            path: fm.authors.clone(),
            expected: "non-empty author list",
        });
    }

    let citations = required(raw, &fm.citations)?
        .as_u64()
        .ok_or(FetchError::WrongType {
            path: fm.citations.clone(),
            expected: "nonnegative integer",
        })?;

    let title = match &fm.title {
        Some(path) => match lookup(raw, path) {
            None => String::new(),
            Some(v) => v
                .as_str()
                .map(str::to_string)
                .ok_or(FetchError::WrongType {
                    path: path.clone(),
                    expected: "string",
                })?,
        },
        None => String::new(),
    };

    let year = match &fm.year {
        Some(path) => match lookup(raw, path) {
            None => None,
            Some(v) => {
                let y = v.as_i64().ok_or(FetchError::WrongType {
                    path: path.clone(),
                    expected: "integer",
                })?;
                Some(y as i32)
            }
        },
        None => None,
    };

    let venue = match &fm.venue {
        Some(path) => match lookup(raw, path) {
            None => None,
            Some(v) => match v.as_str() {
                Some("") => None,
                Some(s) => Some(s.to_string()),
                None => {
                    return Err(FetchError::WrongType {
                        path: path.clone(),
                        expected: "string",
                    })
                }
            },
        },
        None => None,
    };

    let indexed = match &fm.indexed {
        Some(path) => match lookup(raw, path) {
            None => true,
            Some(v) => v.as_bool().ok_or(FetchError::WrongType {
                path: path.clone(),
                expected: "boolean",
            })?,
        },
        None => true,
    };

    Ok(Publication {
        id,
        title,
        authors,
        citations,
        year,
        venue,
        indexed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn openalex_work() -> Value {
        json!({
            "id": "https://openalex.org/W100",
            "display_name": "A study of things",
            "publication_year": 2015,
            "cited_by_count": 17,
            "primary_location": {"source": {"display_name": "Journal of Things"}},
            "authorships": [
                {"author": {"display_name": "Ada Alpha"}}
            ]
        })
    }

    #[test]
    fn maps_openalex_shape_with_defaults() {
        let record = map_record(&ProviderConfig::default(), &openalex_work()).unwrap();
        assert_eq!(record.id, "https://openalex.org/W100");
        assert_eq!(record.title, "A study of things");
        assert_eq!(record.citations, 17);
        assert_eq!(record.year, Some(2015));
        assert_eq!(record.venue.as_deref(), Some("Journal of Things"));
        assert_eq!(record.authors, vec!["Ada Alpha"]);
        assert!(record.indexed);
        assert!(record.is_single_author());
    }

    #[test]
    fn maps_multi_author_record() {
        let mut work = openalex_work();
        work["authorships"] = json!([
            {"author": {"display_name": "Ada Alpha"}},
            {"author": {"display_name": "Bo Beta"}},
            {"author": {"display_name": "Cy Gamma"}},
            {"author": {"display_name": "Di Delta"}}
        ]);
        let record = map_record(&ProviderConfig::default(), &work).unwrap();
        assert_eq!(record.authors.len(), 4);
    }

    #[test]
    fn missing_citations_names_the_path() {
        let mut work = openalex_work();
        work.as_object_mut().unwrap().remove("cited_by_count");
        let err = map_record(&ProviderConfig::default(), &work).unwrap_err();
        assert!(matches!(err, FetchError::MissingField { path } if path == "cited_by_count"));
    }

    #[test]
    fn float_citations_rejected() {
        let mut work = openalex_work();
        work["cited_by_count"] = json!(17.5);
        let err = map_record(&ProviderConfig::default(), &work).unwrap_err();
        assert!(matches!(err, FetchError::WrongType { .. }));
    }

    #[test]
    fn negative_citations_rejected() {
        let mut work = openalex_work();
        work["cited_by_count"] = json!(-2);
        assert!(map_record(&ProviderConfig::default(), &work).is_err());
    }

    #[test]
    fn absent_optional_fields_become_absent() {
        let work = json!({
            "id": "W1",
            "cited_by_count": 0,
            "authorships": [{"author": {"display_name": "Solo"}}]
        });
        let record = map_record(&ProviderConfig::default(), &work).unwrap();
        assert_eq!(record.title, "");
        assert_eq!(record.year, None);
        assert_eq!(record.venue, None);
        assert!(record.indexed);
    }

    #[test]
    fn flat_author_array_without_mapping_segment() {
        let mut cfg = ProviderConfig::default();
        cfg.field_map.authors = "authors".into();
        cfg.field_map.citations = "cites".into();
        let work = json!({"id": "x1", "authors": ["A", "B"], "cites": 3});
        let record = map_record(&cfg, &work).unwrap();
        assert_eq!(record.authors, vec!["A", "B"]);
        assert_eq!(record.citations, 3);
    }

    #[test]
    fn empty_author_array_rejected() {
        let mut work = openalex_work();
        work["authorships"] = json!([]);
        assert!(map_record(&ProviderConfig::default(), &work).is_err());
    }

    #[test]
    fn numeric_id_is_stringified() {
        let mut cfg = ProviderConfig::default();
        cfg.field_map.authors = "authors".into();
        let work = json!({"id": 42, "authors": ["A"], "cited_by_count": 1});
        assert_eq!(map_record(&cfg, &work).unwrap().id, "42");
    }
}
