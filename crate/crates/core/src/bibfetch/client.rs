//! Page-by-page retrieval from a wire endpoint or a fixture directory.

use std::path::Path;
use std::thread;
use std::time::Duration;

use serde_json::Value;

use crate::ingestion::{dedup_records, Publication};

use super::config::ProviderConfig;
use super::error::FetchError;
use super::map::map_record;

const ATTEMPTS_PER_PAGE: u32 = 3;
// Safety valve against endpoints that keep returning full pages forever.
const MAX_PAGES: usize = 10_000;

/// Retrieves all raw work records for an author, following pagination
/// until exhaustion.
///
/// Remote mode issues sequential GET requests with `rate_limit_ms` between
/// them, retrying transport failures and server errors up to three times
/// per page, and stops once a page comes back shorter than `page_size`.
/// Fixture mode reads `page-1.json`, `page-2.json`, … from the directory
/// at `base_url` until the next file is missing, making runs fully
/// deterministic and offline.
pub fn fetch_works(cfg: &ProviderConfig, author_id: &str) -> Result<Vec<Value>, FetchError> {
    cfg.validate()?;
    if cfg.is_remote() {
        fetch_remote(cfg, author_id)
    } else {
        fetch_fixtures(cfg)
    }
}

/// Fetches, maps and deduplicates an author's works in one step.
pub fn fetch_author(cfg: &ProviderConfig, author_id: &str) -> Result<Vec<Publication>, FetchError> {
    let raw = fetch_works(cfg, author_id)?;
    let mapped = raw
        .iter()
        .map(|record| map_record(cfg, record))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(dedup_records(mapped))
}

fn fetch_fixtures(cfg: &ProviderConfig) -> Result<Vec<Value>, FetchError> {
    let dir = Path::new(&cfg.base_url);
    if !dir.is_dir() {
        return Err(FetchError::Transport {
            page: 1,
            attempts: 1,
            message: format!("fixture directory {dir:?} not found"),
        });
    }

    let mut works = Vec::new();
    for page in 1.. {
        let path = dir.join(format!("page-{page}.json"));
        if !path.exists() {
            break;
        }
        let bytes = std::fs::read(&path).map_err(|e| FetchError::Transport {
            page,
            attempts: 1,
            message: format!("{path:?}: {e}"),
        })?;
        let document: Value =
            serde_json::from_slice(&bytes).map_err(|e| FetchError::MalformedPage {
                page,
                message: e.to_string(),
            })?;
        works.extend(extract_results(cfg, &document, page)?);
    }
    Ok(works)
}

fn fetch_remote(cfg: &ProviderConfig, author_id: &str) -> Result<Vec<Value>, FetchError> {
    let client = reqwest::blocking::Client::builder()
        .timeout(Duration::from_secs(30))
        .build()
        .map_err(|e| FetchError::Transport {
            page: 1,
            attempts: 1,
            message: e.to_string(),
        })?;

    let mut works = Vec::new();
    let mut first_request = true;
    for page in 1..=MAX_PAGES {
        let url = cfg.page_url(author_id, page);
        let body = fetch_page_with_retry(cfg, &client, &url, page, &mut first_request)?;
        let document: Value =
            serde_json::from_str(&body).map_err(|e| FetchError::MalformedPage {
                page,
                message: e.to_string(),
            })?;
        let results = extract_results(cfg, &document, page)?;
        let count = results.len();
        works.extend(results);
        if count < cfg.page_size as usize {
            return Ok(works);
        }
    }
    Err(FetchError::MalformedPage {
        page: MAX_PAGES,
        message: format!("pagination did not terminate within {MAX_PAGES} pages"),
    })
}

fn fetch_page_with_retry(
    cfg: &ProviderConfig,
    client: &reqwest::blocking::Client,
    url: &str,
    page: usize,
    first_request: &mut bool,
) -> Result<String, FetchError> {
    let mut last_error = None;
    for attempt in 1..=ATTEMPTS_PER_PAGE {
        if !*first_request && cfg.rate_limit_ms > 0 {
            thread::sleep(Duration::from_millis(cfg.rate_limit_ms));
        }
        *first_request = false;

        let mut request = client.get(url);
        if let Some(key) = &cfg.api_key {
            request = request.header(cfg.api_key_header.as_str(), key.as_str());
        }
        match request.send() {
            Err(e) => {
                last_error = Some(FetchError::Transport {
                    page,
                    attempts: attempt,
                    message: e.to_string(),
                });
            }
            Ok(response) => {
                let status = response.status();
                let body = match response.text() {
                    Ok(body) => body,
                    Err(e) => {
                        last_error = Some(FetchError::Transport {
                            page,
                            attempts: attempt,
                            message: e.to_string(),
                        });
                        continue;
                    }
                };
                if status.is_success() {
                    return Ok(body);
                }
                let failure = FetchError::Status {
                    page,
                    status: status.as_u16(),
                    body_excerpt: body.chars().take(200).collect(),
                };
                if status.is_server_error() {
                    // Server errors are often transient; client errors are not.
                    last_error = Some(failure);
                } else {
                    return Err(failure);
                }
            }
        }
    }
    Err(last_error.expect("retry loop records an error before exhausting attempts"))
}

fn extract_results(
    cfg: &ProviderConfig,
    document: &Value,
    page: usize,
) -> Result<Vec<Value>, FetchError> {
    let mut current = document;
    for segment in cfg.results_path.split('.') {
        current = current
            .get(segment)
            .ok_or_else(|| FetchError::MalformedPage {
                page,
                message: format!("missing results array at {:?}", cfg.results_path),
            })?;
    }
    let array = current
        .as_array()
        .ok_or_else(|| FetchError::MalformedPage {
            page,
            message: format!("{:?} is not an array", cfg.results_path),
        })?;
    Ok(array.to_vec())
}
