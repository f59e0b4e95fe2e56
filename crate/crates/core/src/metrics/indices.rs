//! Citation-count indices: h-index (Hirsch) and g-index (Egghe).
//!
//! Both take the citation counts of an author's papers as an unordered
//! multiset. Negative counts are unrepresentable here; the ingestion layer
//! rejects them before they reach these functions.

/// Largest `h` such that at least `h` papers have at least `h` citations each.
///
/// Permutation-invariant and never larger than the number of papers.
pub fn h_index(citations: &[u64]) -> u64 {
    let mut sorted = citations.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut h = 0u64;
    for (i, &c) in sorted.iter().enumerate() {
        let rank = (i + 1) as u64;
        if c >= rank {
            h = rank;
        } else {
            break;
        }
    }
    h
}

/// Largest `g`, capped at the number of papers, such that the `g` most-cited
/// papers received at least `g^2` citations together.
///
/// Always at least as large as [`h_index`] of the same multiset.
pub fn g_index(citations: &[u64]) -> u64 {
    let mut sorted = citations.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut g = 0u64;
    let mut cumulative = 0u64;
    for (i, &c) in sorted.iter().enumerate() {
        let rank = (i + 1) as u64;
        cumulative += c;
        if cumulative >= rank * rank {
            g = rank;
        }
    }
    g
}
