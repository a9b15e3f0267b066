//! Rail fence (zigzag) and scytale. Both fence the letter stream only:
//! non-letters are dropped and letters come out in canonical uppercase.

use super::{ClassicalError, Result};
use crate::alphabet::{letters_of, letters_to_string, Letter};

/// Rail of each position in a zigzag over `rails` rails.
fn rail_pattern(n: usize, rails: usize) -> impl Iterator<Item = usize> {
    let period = if rails > 1 { 2 * (rails - 1) } else { 1 };
    (0..n).map(move |i| {
        let p = i % period;
        if p < rails {
            p
        } else {
            period - p
        }
    })
}

/// Letters per rail for an `n`-letter message.
pub fn rail_lengths(n: usize, rails: usize) -> Vec<usize> {
    let mut lengths = vec![0; rails.max(1)];
    for r in rail_pattern(n, rails.max(1)) {
        lengths[r] += 1;
    }
    lengths
}

/// Apply `order` as a gather on encrypt and as a scatter on decrypt.
fn permute(letters: &[Letter], order: &[usize], decrypt: bool) -> String {
    if decrypt {
        let mut out = vec![letters[0]; letters.len()];
        for (src, &dst) in order.iter().enumerate() {
            out[dst] = letters[src];
        }
        letters_to_string(&out)
    } else {
        order.iter().map(|&i| letters[i].to_char()).collect()
    }
}

fn rail_order(n: usize, rails: usize) -> Vec<usize> {
    let pattern: Vec<usize> = rail_pattern(n, rails).collect();
    let mut order: Vec<usize> = (0..n).collect();
    // stable: positions stay left-to-right within a rail
    order.sort_by_key(|&i| pattern[i]);
    order
}

fn check_rails(rails: usize) -> Result<()> {
    if rails == 0 {
        Err(ClassicalError::RailsOutOfRange(rails))
    } else {
        Ok(())
    }
}

pub fn rail_fence_encrypt(m: &str, rails: usize) -> Result<String> {
    check_rails(rails)?;
    let letters = letters_of(m);
    Ok(permute(&letters, &rail_order(letters.len(), rails), false))
}

pub fn rail_fence_decrypt(c: &str, rails: usize) -> Result<String> {
    check_rails(rails)?;
    let letters = letters_of(c);
    if letters.is_empty() {
        return Ok(String::new());
    }
    Ok(permute(&letters, &rail_order(letters.len(), rails), true))
}

/// Column-major read order of an `n`-letter row-major grid with `rows` rows.
fn scytale_order(n: usize, rows: usize) -> Vec<usize> {
    let cols = n.div_ceil(rows);
    (0..cols)
        .flat_map(|col| (0..rows).map(move |row| row * cols + col))
        .filter(|&i| i < n)
        .collect()
}

fn check_circumference(k: usize) -> Result<()> {
    if k == 0 {
        Err(ClassicalError::CircumferenceOutOfRange(k))
    } else {
        Ok(())
    }
}

/// Write the letters row-major around `circumference` rows and read them off
/// column by column.
pub fn scytale_encrypt(m: &str, circumference: usize) -> Result<String> {
    check_circumference(circumference)?;
    let letters = letters_of(m);
    Ok(permute(
        &letters,
        &scytale_order(letters.len(), circumference),
        false,
    ))
}

pub fn scytale_decrypt(c: &str, circumference: usize) -> Result<String> {
    check_circumference(circumference)?;
    let letters = letters_of(c);
    if letters.is_empty() {
        return Ok(String::new());
    }
    Ok(permute(
        &letters,
        &scytale_order(letters.len(), circumference),
        true,
    ))
}
