use super::{ClassicalError, Result};
use crate::alphabet::{to_canonical, Letter, MessageUnit, ALPHABET_LEN};

/// A row-major letter grid. The last row may be short.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolybiusSpec {
    rows: usize,
    cols: usize,
    cells: Vec<Letter>,
    coords: [Option<(u8, u8)>; ALPHABET_LEN],
}

impl PolybiusSpec {
    pub fn new(rows: usize, cols: usize, cells: Vec<Letter>) -> Result<Self> {
        if !(1..=9).contains(&rows) || !(1..=9).contains(&cols) {
            return Err(ClassicalError::BadGridShape(format!(
                "{rows}x{cols}: rows and columns must be 1..=9"
            )));
        }
        if cells.len() > rows * cols || cells.len() <= (rows - 1) * cols {
            return Err(ClassicalError::BadGridShape(format!(
                "{} letters do not fill a {rows}x{cols} grid with only the last row short",
                cells.len()
            )));
        }
        let mut coords = [None; ALPHABET_LEN];
        for (i, l) in cells.iter().enumerate() {
            if coords[l.index()].is_some() {
                return Err(ClassicalError::DuplicateGridLetter(l.to_char()));
            }
            coords[l.index()] = Some(((i / cols + 1) as u8, (i % cols + 1) as u8));
        }
        Ok(PolybiusSpec {
            rows,
            cols,
            cells,
            coords,
        })
    }

    /// Grid from rows of letters, e.g. `["ABC", "DE"]`. Column count is the
    /// length of the first row.
    pub fn from_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let mut cells = Vec::new();
        let mut cols = 0;
        for (i, row) in rows.iter().enumerate() {
            let mut n = 0;
            for c in row.as_ref().chars().filter(|c| !c.is_whitespace()) {
                cells.push(Letter::from_char(c).ok_or(ClassicalError::LetterNotInGrid(c))?);
                n += 1;
            }
            if i == 0 {
                cols = n;
            } else if n > cols || (n < cols && i + 1 < rows.len()) {
                return Err(ClassicalError::BadGridShape(format!(
                    "row {} has {n} letters",
                    i + 1
                )));
            }
        }
        PolybiusSpec::new(rows.len(), cols, cells)
    }

    /// The 5x6 Turkish board; the fifth row holds U Ü V Y Z.
    pub fn turkish_5x6() -> Self {
        PolybiusSpec::new(5, 6, Letter::all().collect()).expect("29 letters fit 5x6")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn letter_at(&self, row: usize, col: usize) -> Option<Letter> {
        if row == 0 || col == 0 || row > self.rows || col > self.cols {
            return None;
        }
        self.cells.get((row - 1) * self.cols + (col - 1)).copied()
    }
}

/// Each letter becomes `<row><col>` (1-based). Pairs inside a word are joined
/// with `-`; other characters are copied and end the word.
pub fn polybius_encode(m: &str, spec: &PolybiusSpec) -> Result<String> {
    let mut out = String::new();
    let mut in_word = false;
    for c in m.chars() {
        match to_canonical(c) {
            MessageUnit::Letter { letter, .. } => {
                let (r, col) =
                    spec.coords[letter.index()].ok_or(ClassicalError::LetterNotInGrid(c))?;
                if in_word {
                    out.push('-');
                }
                out.push(char::from(b'0' + r));
                out.push(char::from(b'0' + col));
                in_word = true;
            }
            MessageUnit::Passthrough(p) => {
                out.push(p);
                in_word = false;
            }
        }
    }
    Ok(out)
}

/// Inverse of [`polybius_encode`]; letters come back uppercase.
pub fn polybius_decode(c: &str, spec: &PolybiusSpec) -> Result<String> {
    let mut out = String::new();
    let mut chars = c.chars().peekable();
    while let Some(&ch) = chars.peek() {
        if !ch.is_ascii_digit() {
            out.push(ch);
            chars.next();
            continue;
        }
        let mut group = String::new();
        while let Some(&d) = chars.peek() {
            if d.is_ascii_digit() || d == '-' {
                group.push(d);
                chars.next();
            } else {
                break;
            }
        }
        for pair in group.split('-') {
            let digits: Vec<usize> = pair
                .chars()
                .filter_map(|d| d.to_digit(10))
                .map(|d| d as usize)
                .collect();
            let letter = match digits[..] {
                [r, col] => spec.letter_at(r, col),
                _ => None,
            };
            out.push(
                letter
                    .ok_or_else(|| ClassicalError::MalformedDigitPair(pair.to_string()))?
                    .to_char(),
            );
        }
    }
    Ok(out)
}
