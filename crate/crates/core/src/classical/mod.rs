//! Classical ciphers over the Turkish alphabet.
//!
//! Substitution ciphers (shift, Atbash, Vigenère, Vernam) keep every
//! non-letter in place and preserve letter case. Playfair and the two
//! transposition ciphers work on the letter stream alone and emit canonical
//! uppercase. Polybius writes digit pairs.

mod playfair;
mod polybius;
mod shift;
mod transposition;
mod vernam;
mod vigenere;

use thiserror::Error;

pub use playfair::{
    playfair_build, playfair_decrypt, playfair_encrypt, PlayfairSpec, PlayfairTable,
};
pub use polybius::{polybius_decode, polybius_encode, PolybiusSpec};
pub use shift::{atbash, shift_decrypt, shift_encrypt};
pub use transposition::{
    rail_fence_decrypt, rail_fence_encrypt, rail_lengths, scytale_decrypt, scytale_encrypt,
};
pub use vernam::{otp_keygen, vernam_decrypt, vernam_encrypt};
pub use vigenere::{vigenere_decrypt, vigenere_encrypt, VigenereAlphabet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassicalError {
    #[error("ShiftOutOfRange: shift {0} is not in 0..=28")]
    ShiftOutOfRange(i64),
    #[error("EmptyKey: key must contain at least one letter")]
    EmptyKey,
    #[error("KeyLetterOutsideAlphabet: `{0}` is not in the selected alphabet")]
    KeyLetterOutsideAlphabet(char),
    #[error("EmptyKeyword: keyword has no letters")]
    EmptyKeyword,
    #[error("PaddingInSameCellAsNeighbor: padding `{padding}` shares a cell with `{neighbor}`")]
    PaddingInSameCellAsNeighbor { padding: char, neighbor: char },
    #[error("InvalidCiphertext: {0}")]
    InvalidCiphertext(String),
    #[error("LetterNotInGrid: `{0}`")]
    LetterNotInGrid(char),
    #[error("DuplicateGridLetter: `{0}`")]
    DuplicateGridLetter(char),
    #[error("BadGridShape: {0}")]
    BadGridShape(String),
    #[error("MalformedDigitPair: `{0}`")]
    MalformedDigitPair(String),
    #[error("RailsOutOfRange: rails must be at least 1, got {0}")]
    RailsOutOfRange(usize),
    #[error("CircumferenceOutOfRange: circumference must be at least 1, got {0}")]
    CircumferenceOutOfRange(usize),
    #[error("KeyTooShort: key has {available} letters, message needs {needed}")]
    KeyTooShort { needed: usize, available: usize },
}

pub type Result<T> = std::result::Result<T, ClassicalError>;

/// Parameters for one classical cipher invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CipherSpec {
    Shift {
        shift: i64,
    },
    Atbash,
    Vigenere {
        keyword: String,
        alphabet: VigenereAlphabet,
    },
    Playfair(PlayfairSpec),
    Polybius(PolybiusSpec),
    RailFence {
        rails: usize,
    },
    Scytale {
        circumference: usize,
    },
    Vernam {
        key: String,
    },
}

impl CipherSpec {
    pub fn name(&self) -> &'static str {
        match self {
            CipherSpec::Shift { .. } => "shift",
            CipherSpec::Atbash => "atbash",
            CipherSpec::Vigenere { .. } => "vigenere",
            CipherSpec::Playfair(_) => "playfair",
            CipherSpec::Polybius(_) => "polybius",
            CipherSpec::RailFence { .. } => "railfence",
            CipherSpec::Scytale { .. } => "scytale",
            CipherSpec::Vernam { .. } => "vernam",
        }
    }

    pub fn encrypt(&self, m: &str) -> Result<String> {
        match self {
            CipherSpec::Shift { shift } => shift_encrypt(m, *shift),
            CipherSpec::Atbash => Ok(atbash(m)),
            CipherSpec::Vigenere { keyword, alphabet } => vigenere_encrypt(m, keyword, *alphabet),
            CipherSpec::Playfair(spec) => playfair_encrypt(m, spec),
            CipherSpec::Polybius(spec) => polybius_encode(m, spec),
            CipherSpec::RailFence { rails } => rail_fence_encrypt(m, *rails),
            CipherSpec::Scytale { circumference } => scytale_encrypt(m, *circumference),
            CipherSpec::Vernam { key } => vernam_encrypt(m, key),
        }
    }

    pub fn decrypt(&self, c: &str) -> Result<String> {
        match self {
            CipherSpec::Shift { shift } => shift_decrypt(c, *shift),
            CipherSpec::Atbash => Ok(atbash(c)),
            CipherSpec::Vigenere { keyword, alphabet } => vigenere_decrypt(c, keyword, *alphabet),
            CipherSpec::Playfair(spec) => playfair_decrypt(c, spec),
            CipherSpec::Polybius(spec) => polybius_decode(c, spec),
            CipherSpec::RailFence { rails } => rail_fence_decrypt(c, *rails),
            CipherSpec::Scytale { circumference } => scytale_decrypt(c, *circumference),
            CipherSpec::Vernam { key } => vernam_decrypt(c, key),
        }
    }
}

/// Apply `f` to every letter of `m`, keeping case and non-letters.
pub(crate) fn map_letters(m: &str, mut f: impl FnMut(crate::Letter) -> crate::Letter) -> String {
    use crate::alphabet::{cased, to_canonical, MessageUnit};
    m.chars()
        .map(|c| match to_canonical(c) {
            MessageUnit::Letter {
                letter,
                was_lowercase,
            } => cased(f(letter), was_lowercase),
            MessageUnit::Passthrough(p) => p,
        })
        .collect()
}
