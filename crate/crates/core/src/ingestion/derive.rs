//! Derives the six per-author inputs from a publication profile.

use crate::metrics::{h_index, MetricInputs};

use super::record::AuthorProfile;

/// Computes the six inputs for an author profile.
///
/// * `n1` — number of publications;
/// * `n2` — total citations over all publications;
/// * `n3` — h-index over all publications;
/// * `n4` — number of single-authored publications;
/// * `n5` — citations to single-authored publications;
/// * `n6` — h-index over single-authored publications.
///
/// With `indexed_only_for_single` set, the single-author figures
/// (`n4`, `n5`, `n6`) count only publications marked as indexed; the
/// overall figures always cover the whole profile.
pub fn derive_inputs(profile: &AuthorProfile, indexed_only_for_single: bool) -> MetricInputs {
    let all = profile.citations();
    let single = profile.single_author_citations(indexed_only_for_single);

    MetricInputs {
        n1: profile.publications.len() as u64,
        n2: all.iter().sum(),
        n3: h_index(&all),
        n4: single.len() as u64,
        n5: single.iter().sum(),
        n6: h_index(&single),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingestion::record::Publication;

    fn paper(id: &str, authors: &[&str], citations: u64, indexed: bool) -> Publication {
        Publication {
            id: id.into(),
            title: format!("title {id}"),
            authors: authors.iter().map(|s| s.to_string()).collect(),
            citations,
            year: None,
            venue: None,
            indexed,
        }
    }

    fn profile_of(papers: Vec<Publication>) -> AuthorProfile {
        AuthorProfile {
            author_key: "x".into(),
            publications: papers,
        }
    }

    #[test]
    fn empty_profile_is_all_zero() {
        let inputs = derive_inputs(&profile_of(vec![]), false);
        assert_eq!(inputs, MetricInputs::ZERO);
    }

    #[test]
    fn two_solo_one_duo() {
        let profile = profile_of(vec![
            paper("p1", &["x"], 10, true),
            paper("p2", &["x"], 2, true),
            paper("p3", &["x", "y"], 7, true),
        ]);
        let inputs = derive_inputs(&profile, false);
        assert_eq!(inputs, MetricInputs::new(3, 19, 2, 2, 12, 2));
    }

    #[test]
    fn indexed_only_restricts_single_author_figures() {
        let profile = profile_of(vec![
            paper("p1", &["x"], 10, true),
            paper("p2", &["x"], 6, false),
            paper("p3", &["x", "y"], 3, true),
        ]);

        let loose = derive_inputs(&profile, false);
        assert_eq!(loose, MetricInputs::new(3, 19, 3, 2, 16, 2));

        let strict = derive_inputs(&profile, true);
        // The unindexed solo paper drops out of n4/n5/n6 but stays in n1/n2/n3.
        assert_eq!(strict, MetricInputs::new(3, 19, 3, 1, 10, 1));
    }

    #[test]
    fn derived_inputs_satisfy_consistency_rules() {
        let profile = profile_of(vec![
            paper("p1", &["x"], 40, true),
            paper("p2", &["x", "y"], 25, true),
            paper("p3", &["x"], 12, false),
            paper("p4", &["x", "z"], 0, true),
        ]);
        for flag in [false, true] {
            let inputs = derive_inputs(&profile, flag);
            assert!(
                crate::metrics::validate_inputs(&inputs).is_empty(),
                "{inputs:?}"
            );
        }
    }
}
