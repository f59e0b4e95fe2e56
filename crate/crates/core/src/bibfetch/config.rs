//! Provider description: where to fetch from and how to read the payload.

use serde::{Deserialize, Serialize};

use super::error::FetchError;

/// Paths into a provider's work record, dot-separated, with a `[]` suffix
/// marking the segment to map over (e.g. `authorships[].author.display_name`).
/// `id`, `authors` and `citations` must always be resolvable; the rest are
/// optional in the payload. Defaults target an OpenAlex-compatible shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct FieldMap {
    pub id: String,
    pub authors: String,
    pub citations: String,
    pub title: Option<String>,
    pub year: Option<String>,
    pub venue: Option<String>,
    pub indexed: Option<String>,
}

impl Default for FieldMap {
    fn default() -> Self {
        FieldMap {
            id: "id".into(),
            authors: "authorships[].author.display_name".into(),
            citations: "cited_by_count".into(),
            title: Some("display_name".into()),
            year: Some("publication_year".into()),
            venue: Some("primary_location.source.display_name".into()),
            indexed: None,
        }
    }
}

/// A bibliographic source. `base_url` starting with `http://` or `https://`
/// selects the wire client; anything else is read as a local directory of
/// page fixtures (`page-1.json`, `page-2.json`, …), which keeps every test
/// and demo runnable offline.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ProviderConfig {
    /// Optional provider label echoed in fetch diagnostics.
    pub name: Option<String>,
    pub base_url: String,
    /// Query template appended to `base_url`; `{author}`, `{page}` and
    /// `{per_page}` are substituted per request.
    pub author_query_template: String,
    pub page_size: u32,
    /// Minimum milliseconds between consecutive wire requests.
    pub rate_limit_ms: u64,
    /// Dot-path of the per-page results array.
    pub results_path: String,
    pub field_map: FieldMap,
    /// Static key sent as `api_key_header` on every wire request.
    pub api_key: Option<String>,
    pub api_key_header: String,
}

impl Default for ProviderConfig {
    fn default() -> Self {
        ProviderConfig {
            name: None,
            base_url: "https://api.openalex.org".into(),
            author_query_template:
                "/works?filter=author.id:{author}&per-page={per_page}&page={page}".into(),
            page_size: 100,
            rate_limit_ms: 200,
            results_path: "results".into(),
            field_map: FieldMap::default(),
            api_key: None,
            api_key_header: "Authorization".into(),
        }
    }
}

impl ProviderConfig {
    pub fn is_remote(&self) -> bool {
        self.base_url.starts_with("http://") || self.base_url.starts_with("https://")
    }

    pub fn validate(&self) -> Result<(), FetchError> {
        let mut problems = Vec::new();
        if self.base_url.is_empty() {
            problems.push("base_url must not be empty".to_string());
        }
        if self.page_size == 0 {
            problems.push("page_size must be at least 1".to_string());
        }
        if !self.author_query_template.contains("{author}") {
            problems.push("author_query_template must contain the {author} placeholder".into());
        }
        for (name, path) in [
            ("id", &self.field_map.id),
            ("authors", &self.field_map.authors),
            ("citations", &self.field_map.citations),
        ] {
            if path.is_empty() {
                problems.push(format!("field_map.{name} must not be empty"));
            }
        }
        if self.results_path.is_empty() {
            problems.push("results_path must not be empty".into());
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(FetchError::InvalidConfig(problems.join("; ")))
        }
    }

    /// Loads a config from a JSON file; missing keys fall back to defaults.
    pub fn from_json_file(path: &std::path::Path) -> Result<Self, FetchError> {
        let bytes = std::fs::read(path).map_err(|e| FetchError::Cache {
            path: path.to_path_buf(),
            message: e.to_string(),
        })?;
        let cfg: ProviderConfig =
            serde_json::from_slice(&bytes).map_err(|e| FetchError::InvalidConfig(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub(crate) fn page_url(&self, author_id: &str, page: usize) -> String {
        let query = self
            .author_query_template
            .replace("{author}", author_id)
            .replace("{page}", &page.to_string())
            .replace("{per_page}", &self.page_size.to_string());
        format!("{}{}", self.base_url.trim_end_matches('/'), query)
    }
}
