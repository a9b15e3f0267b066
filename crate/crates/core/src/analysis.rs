//! Letter-frequency analysis: frequency tables, streaming corpus ingestion,
//! the rank-matching attack, chi-squared scoring, shift cracking, and the
//! flatness experiment comparing a shift cipher against the cascade cipher.

use std::fmt::Write as _;
use std::io::Read;

use thiserror::Error;

use crate::alphabet::{letters_of, to_canonical, IndexMode, Letter, ALPHABET_LEN};
use crate::cascade::encrypt_message;
use crate::classical::shift_encrypt;
use crate::keyset::CascadeKeySet;

/// Added to every expected frequency before dividing.
pub const DEFAULT_SMOOTHING: f64 = 1e-6;
/// Below this many letters a cracked shift is flagged as low confidence.
pub const CRACK_MIN_LETTERS: usize = 100;
/// Minimum plaintext size for [`flatness_report`].
pub const FLATNESS_MIN_LETTERS: usize = 1000;
/// Shift used for the monoalphabetic branch of the flatness experiment.
pub const FLATNESS_SHIFT: i64 = 3;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("EmptyText: no letters to count")]
    EmptyText,
    #[error("TooShort: {found} letters, at least {required} required")]
    TooShort { found: usize, required: usize },
    #[error("input is not valid UTF-8 (byte offset {0})")]
    InvalidUtf8(u64),
    #[error("read error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, AnalysisError>;

/// Letter counts with exact ratios on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrequencyTable {
    counts: [u64; ALPHABET_LEN],
    total: u64,
}

impl FrequencyTable {
    pub fn from_counts(counts: [u64; ALPHABET_LEN]) -> Result<Self> {
        let total = counts.iter().sum();
        if total == 0 {
            return Err(AnalysisError::EmptyText);
        }
        Ok(FrequencyTable { counts, total })
    }

    pub fn count(&self, l: Letter) -> u64 {
        self.counts[l.index()]
    }

    pub fn counts(&self) -> &[u64; ALPHABET_LEN] {
        &self.counts
    }

    pub fn total_letters(&self) -> u64 {
        self.total
    }

    pub fn freq(&self, l: Letter) -> f64 {
        self.count(l) as f64 / self.total as f64
    }

    pub fn frequencies(&self) -> [f64; ALPHABET_LEN] {
        std::array::from_fn(|i| self.counts[i] as f64 / self.total as f64)
    }

    /// Letters by descending count; equal counts in alphabet order.
    pub fn ranking(&self) -> Vec<Letter> {
        let mut letters: Vec<Letter> = Letter::all().collect();
        letters.sort_by(|a, b| self.count(*b).cmp(&self.count(*a)).then(a.cmp(b)));
        letters
    }

    /// Whether no other letter shares `l`'s count.
    pub fn strictly_ranked(&self, l: Letter) -> bool {
        Letter::all()
            .filter(|o| self.count(*o) == self.count(l))
            .count()
            == 1
    }

    /// Frequency rendered with `decimals` places, rounded half up from the
    /// exact ratio.
    pub fn display_freq(&self, l: Letter, decimals: u32) -> String {
        format_ratio(self.count(l), self.total, decimals)
    }

    /// Table rotated as if every letter were shifted back by `k`.
    fn rotated(&self, k: usize) -> FrequencyTable {
        FrequencyTable {
            counts: std::array::from_fn(|i| self.counts[(i + k) % ALPHABET_LEN]),
            total: self.total,
        }
    }

    /// `letter,count,frequency` lines with a header.
    pub fn to_records(&self) -> String {
        let mut out = String::from("letter,count,frequency\n");
        for l in Letter::all() {
            let _ = writeln!(out, "{},{},{}", l, self.count(l), self.display_freq(l, 6));
        }
        out
    }

    /// Human-readable table in rank order.
    pub fn to_text(&self) -> String {
        let mut out = format!("total letters: {}\n", self.total);
        for l in self.ranking() {
            let _ = writeln!(
                out,
                "{}  {:>8}  {}",
                l,
                self.count(l),
                self.display_freq(l, 6)
            );
        }
        out
    }
}

/// `num / den` to `decimals` places, rounding half up. `den` must be
/// non-zero.
pub fn format_ratio(num: u64, den: u64, decimals: u32) -> String {
    let scale = 10u128.pow(decimals);
    let scaled = (2 * num as u128 * scale + den as u128) / (2 * den as u128);
    let int = scaled / scale;
    if decimals == 0 {
        return int.to_string();
    }
    format!(
        "{int}.{:0width$}",
        scaled % scale,
        width = decimals as usize
    )
}

/// Streaming letter counter. Accepts text or raw bytes split at arbitrary
/// boundaries, holding at most three bytes of an unfinished character.
#[derive(Clone, Debug, Default)]
pub struct FrequencyCounter {
    counts: [u64; ALPHABET_LEN],
    pending: Vec<u8>,
    consumed: u64,
}

impl FrequencyCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push_str(&mut self, text: &str) {
        for c in text.chars() {
            if let Some(l) = to_canonical(c).letter() {
                self.counts[l.index()] += 1;
            }
        }
    }

    pub fn push_bytes(&mut self, bytes: &[u8]) -> Result<()> {
        let mut buf = std::mem::take(&mut self.pending);
        buf.extend_from_slice(bytes);
        let valid = match std::str::from_utf8(&buf) {
            Ok(s) => s.len(),
            Err(e) if e.error_len().is_none() => e.valid_up_to(),
            Err(e) => {
                return Err(AnalysisError::InvalidUtf8(
                    self.consumed + e.valid_up_to() as u64,
                ))
            }
        };
        let text = std::str::from_utf8(&buf[..valid]).expect("validated prefix");
        self.push_str(text);
        self.consumed += valid as u64;
        self.pending = buf[valid..].to_vec();
        Ok(())
    }

    pub fn finish(self) -> Result<FrequencyTable> {
        if !self.pending.is_empty() {
            return Err(AnalysisError::InvalidUtf8(self.consumed));
        }
        FrequencyTable::from_counts(self.counts)
    }
}

/// Letter frequencies of `t`; non-letters are ignored, case is folded.
pub fn letter_frequencies(t: &str) -> Result<FrequencyTable> {
    let mut counter = FrequencyCounter::new();
    counter.push_str(t);
    counter.finish()
}

/// Same as [`letter_frequencies`], read from a stream in fixed-size chunks.
pub fn build_reference_table<R: Read>(mut corpus: R) -> Result<FrequencyTable> {
    let mut counter = FrequencyCounter::new();
    let mut buf = [0u8; 64 * 1024];
    loop {
        let n = match corpus.read(&mut buf) {
            Ok(0) => break,
            Ok(n) => n,
            Err(e) if e.kind() == std::io::ErrorKind::Interrupted => continue,
            Err(e) => return Err(e.into()),
        };
        counter.push_bytes(&buf[..n])?;
    }
    counter.finish()
}

/// Partial, injective map from cipher letters to guessed plain letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstitutionGuess {
    mapping: [Option<Letter>; ALPHABET_LEN],
}

impl SubstitutionGuess {
    pub fn get(&self, cipher: Letter) -> Option<Letter> {
        self.mapping[cipher.index()]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Letter, Letter)> + '_ {
        Letter::all().filter_map(|c| self.get(c).map(|p| (c, p)))
    }

    /// Rewrite `ciphertext` with the guess; unmapped characters are kept.
    pub fn apply(&self, ciphertext: &str) -> String {
        crate::classical::map_letters(ciphertext, |c| self.get(c).unwrap_or(c))
    }

    /// Fraction of letter positions decoded correctly. Both texts must have
    /// the same letter sequence length.
    pub fn accuracy(&self, ciphertext: &str, plaintext: &str) -> f64 {
        let cipher = letters_of(ciphertext);
        let plain = letters_of(plaintext);
        assert_eq!(
            cipher.len(),
            plain.len(),
            "texts must align letter for letter"
        );
        if cipher.is_empty() {
            return 0.0;
        }
        let hits = cipher
            .iter()
            .zip(&plain)
            .filter(|(c, p)| self.get(**c) == Some(**p))
            .count();
        hits as f64 / cipher.len() as f64
    }
}

/// Pair cipher letters with reference letters rank for rank.
pub fn rank_match_attack(
    ciphertext: &str,
    reference: &FrequencyTable,
) -> Result<SubstitutionGuess> {
    let observed = letter_frequencies(ciphertext)?;
    let mut mapping = [None; ALPHABET_LEN];
    for (c, p) in observed.ranking().into_iter().zip(reference.ranking()) {
        if observed.count(c) > 0 {
            mapping[c.index()] = Some(p);
        }
    }
    Ok(SubstitutionGuess { mapping })
}

/// `sum (obs - exp)^2 / (exp + smoothing)` over all letters. Not symmetric.
pub fn chi_squared_distance_with(
    observed: &FrequencyTable,
    expected: &FrequencyTable,
    smoothing: f64,
) -> f64 {
    observed
        .frequencies()
        .iter()
        .zip(expected.frequencies())
        .map(|(o, e)| (o - e).powi(2) / (e + smoothing))
        .sum()
}

pub fn chi_squared_distance(observed: &FrequencyTable, expected: &FrequencyTable) -> f64 {
    chi_squared_distance_with(observed, expected, DEFAULT_SMOOTHING)
}

#[derive(Clone, Debug, PartialEq)]
pub struct CrackOutcome {
    pub shift: i64,
    pub distance: f64,
    pub letters: u64,
    /// Set when the ciphertext is shorter than the reliability floor.
    pub low_confidence: bool,
}

pub fn crack_shift(ciphertext: &str, reference: &FrequencyTable) -> Result<CrackOutcome> {
    crack_shift_with(ciphertext, reference, CRACK_MIN_LETTERS)
}

/// Try all 29 shifts and keep the one whose decryption is closest to
/// `reference`; ties go to the smaller shift.
pub fn crack_shift_with(
    ciphertext: &str,
    reference: &FrequencyTable,
    min_letters: usize,
) -> Result<CrackOutcome> {
    let observed = letter_frequencies(ciphertext)?;
    let (shift, distance) = (0..ALPHABET_LEN)
        .map(|k| (k, chi_squared_distance(&observed.rotated(k), reference)))
        .fold(
            (0, f64::INFINITY),
            |best, cur| if cur.1 < best.1 { cur } else { best },
        );
    Ok(CrackOutcome {
        shift: shift as i64,
        distance,
        letters: observed.total_letters(),
        low_confidence: (observed.total_letters() as usize) < min_letters,
    })
}

/// One ciphertext branch of the flatness experiment.
#[derive(Clone, Debug, PartialEq)]
pub struct BranchReport {
    pub table: FrequencyTable,
    pub rank_match_accuracy: f64,
    pub chi_squared_to_reference: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FlatnessReport {
    pub plaintext: FrequencyTable,
    pub shift: BranchReport,
    pub cascade: BranchReport,
    pub mode: IndexMode,
}

impl FlatnessReport {
    /// The claim under test: rank matching recovers less of the cascade
    /// ciphertext than of the shift ciphertext.
    pub fn cascade_is_flatter(&self) -> bool {
        self.cascade.rank_match_accuracy < self.shift.rank_match_accuracy
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "index mode: {}", self.mode.name());
        let _ = writeln!(out, "letters: {}", self.plaintext.total_letters());
        let _ = writeln!(out, "letter  plain     shift{FLATNESS_SHIFT}    cascade");
        for l in Letter::all() {
            let _ = writeln!(
                out,
                "{}       {}  {}  {}",
                l,
                self.plaintext.display_freq(l, 6),
                self.shift.table.display_freq(l, 6),
                self.cascade.table.display_freq(l, 6)
            );
        }
        for (name, b) in [("shift", &self.shift), ("cascade", &self.cascade)] {
            let _ = writeln!(
                out,
                "{name}: rank-match accuracy {:.6}, chi-squared to reference {:.6}",
                b.rank_match_accuracy, b.chi_squared_to_reference
            );
        }
        let _ = writeln!(
            out,
            "cascade accuracy below shift accuracy: {}",
            self.cascade_is_flatter()
        );
        out
    }

    /// `table,letter,count,frequency` lines followed by `#` summary lines.
    pub fn to_records(&self) -> String {
        let mut out = String::from("table,letter,count,frequency\n");
        for (name, t) in [
            ("plain", &self.plaintext),
            ("shift", &self.shift.table),
            ("cascade", &self.cascade.table),
        ] {
            for l in Letter::all() {
                let _ = writeln!(out, "{name},{l},{},{}", t.count(l), t.display_freq(l, 6));
            }
        }
        for (name, b) in [("shift", &self.shift), ("cascade", &self.cascade)] {
            let _ = writeln!(out, "# {name}_accuracy={:.6}", b.rank_match_accuracy);
            let _ = writeln!(
                out,
                "# {name}_chi_squared={:.6}",
                b.chi_squared_to_reference
            );
        }
        out
    }
}

pub fn flatness_report(
    plaintext: &str,
    keyset: &CascadeKeySet,
    reference: &FrequencyTable,
) -> Result<FlatnessReport> {
    flatness_report_with(plaintext, keyset, reference, IndexMode::AllChars)
}

pub fn flatness_report_with(
    plaintext: &str,
    keyset: &CascadeKeySet,
    reference: &FrequencyTable,
    mode: IndexMode,
) -> Result<FlatnessReport> {
    let found = letters_of(plaintext).len();
    if found < FLATNESS_MIN_LETTERS {
        return Err(AnalysisError::TooShort {
            found,
            required: FLATNESS_MIN_LETTERS,
        });
    }
    let branch = |ciphertext: String| -> Result<BranchReport> {
        let table = letter_frequencies(&ciphertext)?;
        let guess = rank_match_attack(&ciphertext, reference)?;
        Ok(BranchReport {
            rank_match_accuracy: guess.accuracy(&ciphertext, plaintext),
            chi_squared_to_reference: chi_squared_distance(&table, reference),
            table,
        })
    };
    let shifted = shift_encrypt(plaintext, FLATNESS_SHIFT).expect("constant shift in range");
    Ok(FlatnessReport {
        plaintext: letter_frequencies(plaintext)?,
        shift: branch(shifted)?,
        cascade: branch(encrypt_message(plaintext, keyset, mode))?,
        mode,
    })
}
