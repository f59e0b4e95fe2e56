//! Corpus ingestion: publication records, CSV/JSON parsing with canonical
//! serialization, author matching, and derivation of the six per-author
//! inputs consumed by the index formulas.

mod author;
mod derive;
mod error;
mod parse;
mod record;

pub use author::{build_profile, normalize_author};
pub use derive::derive_inputs;
pub use error::IngestError;
pub use parse::{dedup_records, parse_records, serialize_records, CorpusFormat, CSV_HEADER};
pub use record::{AuthorProfile, Publication};
