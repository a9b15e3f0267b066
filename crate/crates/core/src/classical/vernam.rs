use super::{map_letters, ClassicalError, Result};
use crate::alphabet::{letters_of, Letter, ALPHABET_LEN};
use crate::rng::SeededRng;

fn run(m: &str, key: &str, decrypt: bool) -> Result<String> {
    let key = letters_of(key);
    let needed = letters_of(m).len();
    if key.len() < needed {
        return Err(ClassicalError::KeyTooShort {
            needed,
            available: key.len(),
        });
    }
    let mut stream = key.into_iter();
    Ok(map_letters(m, |l| {
        let k = stream.next().expect("key length checked").index();
        let k = if decrypt { ALPHABET_LEN - k } else { k };
        Letter::wrapping(l.index() + k)
    }))
}

/// `c_i = (p_i + k_i) mod 29` with letter values A=0 .. Z=28. One key letter
/// is consumed per message letter; non-letters in either text are skipped.
pub fn vernam_encrypt(m: &str, key: &str) -> Result<String> {
    run(m, key, false)
}

pub fn vernam_decrypt(c: &str, key: &str) -> Result<String> {
    run(c, key, true)
}

/// Uniform random key of `length` letters, reproducible from `seed`.
pub fn otp_keygen(length: usize, seed: u64) -> String {
    let mut rng = SeededRng::new(seed);
    (0..length)
        .map(|_| Letter::wrapping(rng.below(ALPHABET_LEN as u64) as usize).to_char())
        .collect()
}
