//! Shared inputs for the criterion benches.

/// Turkish prose used as plaintext and as the reference corpus.
pub const CORPUS: &str = include_str!("../../core/tests/data/corpus_tr.txt");

/// `CORPUS` repeated until it holds at least `bytes` bytes.
pub fn corpus_of_len(bytes: usize) -> String {
    let mut s = String::with_capacity(bytes + CORPUS.len());
    while s.len() < bytes {
        s.push_str(CORPUS);
    }
    s
}
