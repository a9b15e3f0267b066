//! The dual-group cascade substitution cipher.
//!
//! Each letter is routed by the parity of its 1-based position to one of two
//! groups. A group runs the letter through three substitution alphabets
//! (plain row -> cipher row) and then replaces the result with its cyclic
//! predecessor inside the shared final alphabet. Decryption takes the
//! successor in the final alphabet and walks the three stages backwards.
//!
//! Because each group's pipeline is a fixed permutation, the whole cipher is
//! a period-2 polyalphabetic substitution; [`composite_table`] exposes that
//! permutation directly.

use crate::alphabet::{
    cased, group_for_position, to_canonical, Group, IndexMode, Letter, MessageUnit, ALPHABET_LEN,
};
use crate::keyset::{CascadeKeySet, SubstitutionAlphabet};

fn stages(g: Group, k: &CascadeKeySet) -> &[SubstitutionAlphabet; 3] {
    match g {
        Group::Group1 => &k.group1,
        Group::Group2 => &k.group2,
    }
}

pub fn encrypt_letter(l: Letter, g: Group, k: &CascadeKeySet) -> Letter {
    let staged = stages(g, k)
        .iter()
        .fold(l, |acc, stage| stage.substitute(acc));
    let fin = &k.final_alphabet;
    let p = fin.position_of(staged);
    fin.at((p + ALPHABET_LEN - 1) % ALPHABET_LEN)
}

pub fn decrypt_letter(c: Letter, g: Group, k: &CascadeKeySet) -> Letter {
    let fin = &k.final_alphabet;
    let p = fin.position_of(c);
    let staged = fin.at((p + 1) % ALPHABET_LEN);
    stages(g, k)
        .iter()
        .rev()
        .fold(staged, |acc, stage| stage.invert(acc))
}

/// One group's whole pipeline as a single permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompositePermutation {
    table: [Letter; ALPHABET_LEN],
}

impl CompositePermutation {
    pub fn image(&self, l: Letter) -> Letter {
        self.table[l.index()]
    }

    pub fn table(&self) -> &[Letter; ALPHABET_LEN] {
        &self.table
    }

    pub fn inverse(&self) -> CompositePermutation {
        let mut table = self.table;
        for (plain, cipher) in self.table.iter().enumerate() {
            table[cipher.index()] = Letter::wrapping(plain);
        }
        CompositePermutation { table }
    }

    pub fn is_bijection(&self) -> bool {
        let mut seen = [false; ALPHABET_LEN];
        self.table
            .iter()
            .all(|l| !std::mem::replace(&mut seen[l.index()], true))
    }
}

impl std::ops::Index<Letter> for CompositePermutation {
    type Output = Letter;

    fn index(&self, l: Letter) -> &Letter {
        &self.table[l.index()]
    }
}

pub fn composite_table(g: Group, k: &CascadeKeySet) -> CompositePermutation {
    CompositePermutation {
        table: std::array::from_fn(|i| encrypt_letter(Letter::wrapping(i), g, k)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Direction {
    Encrypt,
    Decrypt,
}

/// Stateful message transformer. Positions are counted across every chunk
/// fed to it, so a long stream can be processed piecewise and still match a
/// single [`encrypt_message`] call on the concatenation.
#[derive(Clone, Debug)]
pub struct CascadeStream {
    tables: [CompositePermutation; 2],
    mode: IndexMode,
    position: usize,
    letters: usize,
}

impl CascadeStream {
    pub fn encryptor(k: &CascadeKeySet, mode: IndexMode) -> Self {
        Self::new(k, mode, Direction::Encrypt)
    }

    pub fn decryptor(k: &CascadeKeySet, mode: IndexMode) -> Self {
        Self::new(k, mode, Direction::Decrypt)
    }

    fn new(k: &CascadeKeySet, mode: IndexMode, direction: Direction) -> Self {
        let tables = Group::BOTH.map(|g| {
            let t = composite_table(g, k);
            match direction {
                Direction::Encrypt => t,
                Direction::Decrypt => t.inverse(),
            }
        });
        CascadeStream {
            tables,
            mode,
            position: 0,
            letters: 0,
        }
    }

    pub fn push(&mut self, chunk: &str, out: &mut String) {
        out.reserve(chunk.len());
        for c in chunk.chars() {
            match to_canonical(c) {
                MessageUnit::Letter {
                    letter,
                    was_lowercase,
                } => {
                    let g = group_for_position(self.position, self.mode, self.letters);
                    let mapped = self.tables[g.slot()].image(letter);
                    out.push(cased(mapped, was_lowercase));
                    self.letters += 1;
                }
                MessageUnit::Passthrough(p) => out.push(p),
            }
            self.position += 1;
        }
    }
}

pub fn encrypt_message(m: &str, k: &CascadeKeySet, mode: IndexMode) -> String {
    let mut out = String::new();
    CascadeStream::encryptor(k, mode).push(m, &mut out);
    out
}

pub fn decrypt_message(c: &str, k: &CascadeKeySet, mode: IndexMode) -> String {
    let mut out = String::new();
    CascadeStream::decryptor(k, mode).push(c, &mut out);
    out
}
