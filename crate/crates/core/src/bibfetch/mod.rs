//! Provider-agnostic retrieval of an author's works.
//!
//! A [`ProviderConfig`] names the endpoint, pagination parameters and the
//! field paths that translate the provider's record shape into
//! [`Publication`](crate::ingestion::Publication) values. Pointing
//! `base_url` at a directory instead of an `http(s)` URL switches to
//! fixture mode, which replays pre-recorded page files; everything else
//! behaves identically, so offline tests exercise the same code path.

mod cache;
mod client;
mod config;
mod error;
mod map;

pub use cache::{load_cache, save_cache};
pub use client::{fetch_author, fetch_works};
pub use config::{FieldMap, ProviderConfig};
pub use error::FetchError;
