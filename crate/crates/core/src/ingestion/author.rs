//! Author-name normalization and per-author corpus slicing.

use super::error::IngestError;
use super::record::{AuthorProfile, Publication};

/// Canonicalizes an author name for matching: trims the ends, collapses
/// whitespace runs to a single space, collapses repeated periods, and
/// lowercases. Names that normalize to nothing are rejected.
pub fn normalize_author(raw: &str) -> Result<String, IngestError> {
    let mut out = String::with_capacity(raw.len());
    let mut last_period = false;
    for word in raw.split_whitespace() {
        if !out.is_empty() {
            out.push(' ');
        }
        for c in word.chars() {
            if c == '.' {
                if last_period {
                    continue;
                }
                last_period = true;
            } else {
                last_period = false;
            }
            out.extend(c.to_lowercase());
        }
    }
    if out.is_empty() {
        return Err(IngestError::EmptyAuthor);
    }
    Ok(out)
}

/// Selects the publications credited to `author`, in corpus order.
///
/// Matching compares normalized forms, so `"A.  GARCIA-LOPEZ"` finds
/// records listing `"a. garcia-lopez"`.
pub fn build_profile(records: &[Publication], author: &str) -> Result<AuthorProfile, IngestError> {
    let key = normalize_author(author)?;
    let mut publications = Vec::new();
    for record in records {
        let credited = record
            .authors
            .iter()
            .any(|name| normalize_author(name).map(|n| n == key).unwrap_or(false));
        if credited {
            publications.push(record.clone());
        }
    }
    Ok(AuthorProfile {
        author_key: key,
        publications,
    })
}
