use serde::{Deserialize, Serialize};

/// One published work as it appears in a corpus.
///
/// `indexed` marks works published in a peer-reviewed/indexed venue; it
/// defaults to `true` and only matters when single-author counting is
/// restricted to indexed venues.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Publication {
    pub id: String,
    pub title: String,
    pub authors: Vec<String>,
    pub citations: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub year: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub venue: Option<String>,
    #[serde(default = "default_indexed")]
    pub indexed: bool,
}

fn default_indexed() -> bool {
    true
}

impl Publication {
    /// A publication with exactly one author.
    pub fn is_single_author(&self) -> bool {
        self.authors.len() == 1
    }
}

/// A canonical author key and the publications attributed to it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuthorProfile {
    pub author_key: String,
    pub publications: Vec<Publication>,
}

impl AuthorProfile {
    /// Citation counts of all publications, in corpus order.
    pub fn citations(&self) -> Vec<u64> {
        self.publications.iter().map(|p| p.citations).collect()
    }

    /// Citation counts of the single-author publications, optionally
    /// restricted to indexed venues.
    pub fn single_author_citations(&self, indexed_only: bool) -> Vec<u64> {
        self.publications
            .iter()
            .filter(|p| p.is_single_author() && (!indexed_only || p.indexed))
            .map(|p| p.citations)
            .collect()
    }
}
