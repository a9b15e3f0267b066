//! Key material for the cascade cipher.
//!
//! A [`CascadeKeySet`] is seven permutations of the alphabet: three stage
//! alphabets per group plus one final alphabet shared by both groups.
//!
//! Key files are plain UTF-8:
//!
//! ```text
//! CASCADE-KEYS v1
//! # rng: chacha20-rejection-v1
//! # seed: 42
//! G1S1: BSYKADMRŞÇOZENCGHIFİLĞÖVPTUÜJ
//! G1S2: ...
//! G1S3: ...
//! G2S1: ...
//! G2S2: ...
//! G2S3: ...
//! FINAL: ...
//! ```
//!
//! Rows may separate letters with single spaces. Lines starting with `#`
//! are comments. Serialization always writes unspaced rows and `\n` line
//! endings.

use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::alphabet::{Letter, ALPHABET_LEN};
use crate::rng::{SeededRng, RNG_NAME};

pub const KEY_FILE_HEADER: &str = "CASCADE-KEYS v1";

/// Row labels in file order.
pub const ROW_LABELS: [&str; 7] = ["G1S1", "G1S2", "G1S3", "G2S1", "G2S2", "G2S3", "FINAL"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlphabetError {
    #[error("WrongLength: expected 29 letters, found {0}")]
    WrongLength(usize),
    #[error("DuplicateLetter: `{0}` appears more than once")]
    DuplicateLetter(char),
    #[error("NonCanonicalSymbol: `{0}` is not a letter of the alphabet")]
    NonCanonicalSymbol(char),
}

impl AlphabetError {
    pub fn kind(&self) -> &'static str {
        match self {
            AlphabetError::WrongLength(_) => "WrongLength",
            AlphabetError::DuplicateLetter(_) => "DuplicateLetter",
            AlphabetError::NonCanonicalSymbol(_) => "NonCanonicalSymbol",
        }
    }

    fn detail(&self) -> String {
        match self {
            AlphabetError::WrongLength(n) => format!("expected 29 letters, found {n}"),
            AlphabetError::DuplicateLetter(c) => format!("`{c}` appears more than once"),
            AlphabetError::NonCanonicalSymbol(c) => {
                format!("`{c}` is not a letter of the alphabet")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KeyFileError {
    #[error("BadHeader: expected `{KEY_FILE_HEADER}`")]
    BadHeader,
    #[error("MissingRow: {0}")]
    MissingRow(&'static str),
    #[error("unexpected line {line}: {content:?}")]
    UnexpectedLine { line: usize, content: String },
    #[error("{} in {row}: {}", source.kind(), source.detail())]
    Row {
        row: &'static str,
        #[source]
        source: AlphabetError,
    },
}

/// A permutation of the 29-letter alphabet. Position `j` holds the cipher
/// image of the `j`-th canonical letter.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubstitutionAlphabet {
    forward: [Letter; ALPHABET_LEN],
    inverse: [Letter; ALPHABET_LEN],
}

impl SubstitutionAlphabet {
    pub fn identity() -> Self {
        let forward: [Letter; ALPHABET_LEN] = std::array::from_fn(Letter::wrapping);
        SubstitutionAlphabet {
            forward,
            inverse: forward,
        }
    }

    /// Parse a row of uppercase letters; single spaces between letters are
    /// allowed.
    pub fn from_row(row: &str) -> Result<Self, AlphabetError> {
        let symbols = row
            .chars()
            .filter(|&c| c != ' ')
            .map(|c| Letter::from_upper(c).ok_or(c));
        let mut letters = Vec::with_capacity(ALPHABET_LEN);
        for s in symbols {
            letters.push(s.map_err(AlphabetError::NonCanonicalSymbol)?);
        }
        validate_alphabet(&letters)
    }

    /// Cipher image of `plain` (plain row -> cipher row).
    pub fn substitute(&self, plain: Letter) -> Letter {
        self.forward[plain.index()]
    }

    /// Plain letter whose image is `cipher` (cipher row -> plain row).
    pub fn invert(&self, cipher: Letter) -> Letter {
        self.inverse[cipher.index()]
    }

    /// Entry at `position` of the cipher row.
    pub fn at(&self, position: usize) -> Letter {
        self.forward[position]
    }

    /// Where `letter` sits in the cipher row.
    pub fn position_of(&self, letter: Letter) -> usize {
        self.inverse[letter.index()].index()
    }

    pub fn mapping(&self) -> &[Letter; ALPHABET_LEN] {
        &self.forward
    }

    pub fn row_string(&self) -> String {
        self.forward.iter().map(|l| l.to_char()).collect()
    }

    fn from_permutation(forward: [Letter; ALPHABET_LEN]) -> Self {
        let mut inverse = forward;
        for (plain, cipher) in forward.iter().enumerate() {
            inverse[cipher.index()] = Letter::wrapping(plain);
        }
        SubstitutionAlphabet { forward, inverse }
    }
}

impl fmt::Debug for SubstitutionAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubstitutionAlphabet({})", self.row_string())
    }
}

/// Accept `candidate` iff it is a bijection on the 29 letters.
pub fn validate_alphabet(candidate: &[Letter]) -> Result<SubstitutionAlphabet, AlphabetError> {
    let mut seen = [false; ALPHABET_LEN];
    for l in candidate {
        if std::mem::replace(&mut seen[l.index()], true) {
            return Err(AlphabetError::DuplicateLetter(l.to_char()));
        }
    }
    if candidate.len() != ALPHABET_LEN {
        return Err(AlphabetError::WrongLength(candidate.len()));
    }
    let forward: [Letter; ALPHABET_LEN] = candidate.try_into().expect("length checked");
    Ok(SubstitutionAlphabet::from_permutation(forward))
}

/// Seven alphabets: three stages per group and a shared final alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CascadeKeySet {
    pub group1: [SubstitutionAlphabet; 3],
    pub group2: [SubstitutionAlphabet; 3],
    pub final_alphabet: SubstitutionAlphabet,
}

impl CascadeKeySet {
    /// All seven stages identity.
    pub fn identity() -> Self {
        let id = SubstitutionAlphabet::identity();
        CascadeKeySet {
            group1: [id.clone(), id.clone(), id.clone()],
            group2: [id.clone(), id.clone(), id.clone()],
            final_alphabet: id,
        }
    }

    /// Rows in file order (G1S1 .. G2S3, FINAL).
    pub fn rows(&self) -> [&SubstitutionAlphabet; 7] {
        let [a, b, c] = &self.group1;
        let [d, e, f] = &self.group2;
        [a, b, c, d, e, f, &self.final_alphabet]
    }

    fn from_rows(rows: [SubstitutionAlphabet; 7]) -> Self {
        let [a, b, c, d, e, f, g] = rows;
        CascadeKeySet {
            group1: [a, b, c],
            group2: [d, e, f],
            final_alphabet: g,
        }
    }
}

/// Built-in stage rows, reachable from the CLI as `--key paper`.
const BUILTIN_ROWS: [&str; 7] = [
    "B S Y K A D M R Ş Ç O Z E N C G H I F İ L Ğ Ö V P T U Ü J",
    "A Z C G H J N B Ö Ç L Ş Ğ Ü İ P I K T Y R E V D F S U O M",
    "P I V K Z C H N G S U D A F İ R E Ü J Ğ Ş L T Y B Ö Ç O M",
    "S A Ş Z R Ö Ç E İ J K T Y O N P B M H Ü D V L U I G C F Ğ",
    "Ş V H Ö Ç D A J L İ R E P I Z C F N Ğ Ü K T Y B G S U O M",
    "Z Ş N I D Y S M H Ç V R L Ğ C Ü P K G B U Ö J F A T İ O E",
    "D Ö J A S Z B N Ü L C R Ş E Ç Y Ğ F I T H G İ O K V M P U",
];

/// The built-in example keyset.
pub fn builtin_keyset() -> CascadeKeySet {
    let rows = BUILTIN_ROWS
        .map(|r| SubstitutionAlphabet::from_row(r).expect("built-in rows are permutations"));
    CascadeKeySet::from_rows(rows)
}

/// Seven independent uniform permutations, reproducible from `seed`.
pub fn generate_keyset(seed: u64) -> CascadeKeySet {
    let mut rng = SeededRng::new(seed);
    let rows = std::array::from_fn(|_| {
        let mut forward: [Letter; ALPHABET_LEN] = std::array::from_fn(Letter::wrapping);
        rng.shuffle(&mut forward);
        SubstitutionAlphabet::from_permutation(forward)
    });
    CascadeKeySet::from_rows(rows)
}

pub fn serialize_keyset(k: &CascadeKeySet) -> String {
    serialize_with_comments(k, &[])
}

/// Key file carrying the generator name and seed as comments.
pub fn serialize_generated(k: &CascadeKeySet, seed: u64) -> String {
    serialize_with_comments(k, &[format!("rng: {RNG_NAME}"), format!("seed: {seed}")])
}

fn serialize_with_comments(k: &CascadeKeySet, comments: &[String]) -> String {
    let mut out = String::from(KEY_FILE_HEADER);
    out.push('\n');
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    for (label, row) in ROW_LABELS.iter().zip(k.rows()) {
        out.push_str(label);
        out.push_str(": ");
        out.push_str(&row.row_string());
        out.push('\n');
    }
    out
}

pub fn parse_keyset(text: &str) -> Result<CascadeKeySet, KeyFileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'));

    match lines.next() {
        Some((_, h)) if h.trim_end() == KEY_FILE_HEADER => {}
        _ => return Err(KeyFileError::BadHeader),
    }

    let mut rows: Vec<SubstitutionAlphabet> = Vec::with_capacity(7);
    for label in ROW_LABELS {
        let Some((line, content)) = lines.next() else {
            return Err(KeyFileError::MissingRow(label));
        };
        let Some(body) = content
            .strip_prefix(label)
            .and_then(|r| r.strip_prefix(':'))
        else {
            if ROW_LABELS
                .iter()
                .any(|l| content.starts_with(&format!("{l}:")))
            {
                return Err(KeyFileError::MissingRow(label));
            }
            return Err(KeyFileError::UnexpectedLine {
                line,
                content: content.to_string(),
            });
        };
        let alphabet = SubstitutionAlphabet::from_row(body.trim())
            .map_err(|source| KeyFileError::Row { row: label, source })?;
        rows.push(alphabet);
    }
    if let Some((line, content)) = lines.next() {
        return Err(KeyFileError::UnexpectedLine {
            line,
            content: content.to_string(),
        });
    }
    let rows: [SubstitutionAlphabet; 7] = rows.try_into().expect("seven rows");
    Ok(CascadeKeySet::from_rows(rows))
}

/// Number of distinct keysets, `(29!)^7`.
pub fn keyspace_size() -> BigUint {
    let factorial = (1..=ALPHABET_LEN as u32).fold(BigUint::from(1u32), |acc, n| acc * n);
    factorial.pow(7)
}
