//! Classical cryptography over the 29-letter Turkish alphabet.
//!
//! - [`alphabet`]: letters, Turkish case rules, tokenization, index modes.
//! - [`keyset`]: substitution alphabets, cascade keysets and the key-file format.
//! - [`cascade`]: the dual-group cascade substitution cipher.
//! - [`classical`]: shift, Atbash, Vigenère, Playfair, Polybius, rail fence,
//!   scytale and Vernam / one-time pad.
//! - [`analysis`]: frequency tables, rank matching, chi-squared shift
//!   cracking and the flatness experiment.

pub mod alphabet;
pub mod analysis;
pub mod cascade;
pub mod classical;
pub mod keyset;
mod rng;

pub use alphabet::{Group, IndexMode, Letter, MessageUnit, ALPHABET, ALPHABET_LEN};
pub use analysis::{AnalysisError, FrequencyTable};
pub use cascade::{decrypt_message, encrypt_message, CompositePermutation};
pub use classical::{CipherSpec, ClassicalError};
pub use keyset::{builtin_keyset, generate_keyset, CascadeKeySet, SubstitutionAlphabet};
pub use rng::RNG_NAME;
