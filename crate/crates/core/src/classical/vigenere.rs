use super::{map_letters, ClassicalError, Result};
use crate::alphabet::{Letter, ALPHABET_LEN};

/// Alphabet a Vigenère tableau runs over.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum VigenereAlphabet {
    /// A-Z. Only ASCII letters are enciphered; everything else passes through.
    #[default]
    English26,
    /// The 29-letter Turkish alphabet.
    Turkish29,
}

impl std::str::FromStr for VigenereAlphabet {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "english26" | "english" | "en" => Ok(VigenereAlphabet::English26),
            "turkish29" | "turkish" | "tr" => Ok(VigenereAlphabet::Turkish29),
            other => Err(format!("unknown alphabet `{other}`")),
        }
    }
}

/// Key as shift amounts in the chosen alphabet.
fn key_shifts(key: &str, alphabet: VigenereAlphabet) -> Result<Vec<usize>> {
    let shifts = key
        .chars()
        .map(|c| match alphabet {
            VigenereAlphabet::English26 if c.is_ascii_alphabetic() => {
                Ok((c.to_ascii_uppercase() as u8 - b'A') as usize)
            }
            VigenereAlphabet::Turkish29 => Letter::from_char(c).map(Letter::index).ok_or(c),
            _ => Err(c),
        })
        .collect::<std::result::Result<Vec<_>, char>>()
        .map_err(ClassicalError::KeyLetterOutsideAlphabet)?;
    if shifts.is_empty() {
        return Err(ClassicalError::EmptyKey);
    }
    Ok(shifts)
}

fn run(m: &str, key: &str, alphabet: VigenereAlphabet, decrypt: bool) -> Result<String> {
    let shifts = key_shifts(key, alphabet)?;
    let mut cycle = shifts.iter().cycle();
    let out = match alphabet {
        VigenereAlphabet::English26 => m
            .chars()
            .map(|c| {
                if !c.is_ascii_alphabetic() {
                    return c;
                }
                let base = if c.is_ascii_lowercase() { b'a' } else { b'A' };
                let k = *cycle.next().expect("non-empty key");
                let k = if decrypt { 26 - k } else { k };
                let shifted = ((c as u8 - base) as usize + k) % 26;
                (base + shifted as u8) as char
            })
            .collect(),
        VigenereAlphabet::Turkish29 => map_letters(m, |l| {
            let k = *cycle.next().expect("non-empty key");
            let k = if decrypt { ALPHABET_LEN - k } else { k };
            Letter::wrapping(l.index() + k)
        }),
    };
    Ok(out)
}

/// `c_i = p_i + k_(i mod |key|)` over the chosen alphabet. The key advances
/// on letters only.
pub fn vigenere_encrypt(m: &str, key: &str, alphabet: VigenereAlphabet) -> Result<String> {
    run(m, key, alphabet, false)
}

pub fn vigenere_decrypt(c: &str, key: &str, alphabet: VigenereAlphabet) -> Result<String> {
    run(c, key, alphabet, true)
}
