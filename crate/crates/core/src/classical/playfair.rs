//! Playfair on a 5x5 table. The 29 Turkish letters fit 25 cells by merging
//! S/Ş, U/Ü and V/Y/Z; a merged cell is written as its first member.

use std::fmt;

use super::{ClassicalError, Result};
use crate::alphabet::{letters_of, Letter, ALPHABET_LEN};

const SIDE: usize = 5;
const CELLS: usize = SIDE * SIDE;

/// First member of the merge class `l` belongs to.
fn representative(l: Letter) -> Letter {
    let rep = match l.to_char() {
        'Ş' => 'S',
        'Ü' => 'U',
        'Y' | 'Z' => 'V',
        c => c,
    };
    Letter::from_upper(rep).expect("canonical letter")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlayfairTable {
    reps: [Letter; CELLS],
    cell_of: [u8; ALPHABET_LEN],
}

impl PlayfairTable {
    /// Cell index (row-major) holding `l`.
    pub fn cell(&self, l: Letter) -> usize {
        self.cell_of[l.index()] as usize
    }

    pub fn position(&self, l: Letter) -> (usize, usize) {
        let c = self.cell(l);
        (c / SIDE, c % SIDE)
    }

    pub fn at(&self, row: usize, col: usize) -> Letter {
        self.reps[(row % SIDE) * SIDE + col % SIDE]
    }

    /// Every letter stored in the cell at `(row, col)`.
    pub fn members(&self, row: usize, col: usize) -> Vec<Letter> {
        let cell = row * SIDE + col;
        Letter::all().filter(|l| self.cell(*l) == cell).collect()
    }

    pub fn same_cell(&self, a: Letter, b: Letter) -> bool {
        self.cell(a) == self.cell(b)
    }
}

impl fmt::Display for PlayfairTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in 0..SIDE {
            let cells: Vec<String> = (0..SIDE)
                .map(|col| {
                    self.members(row, col)
                        .iter()
                        .map(|l| l.to_char().to_string())
                        .collect::<Vec<_>>()
                        .join("/")
                })
                .collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Keyword classes first (deduplicated), then the remaining classes in
/// alphabet order.
pub fn playfair_build(keyword: &str) -> Result<PlayfairTable> {
    let key = letters_of(keyword);
    if key.is_empty() {
        return Err(ClassicalError::EmptyKeyword);
    }
    let mut reps = Vec::with_capacity(CELLS);
    for rep in key.into_iter().chain(Letter::all()).map(representative) {
        if !reps.contains(&rep) {
            reps.push(rep);
        }
    }
    let reps: [Letter; CELLS] = reps.try_into().expect("25 merge classes");
    let cell_of = std::array::from_fn(|i| {
        let rep = representative(Letter::wrapping(i));
        reps.iter()
            .position(|&r| r == rep)
            .expect("every class placed") as u8
    });
    Ok(PlayfairTable { reps, cell_of })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlayfairSpec {
    pub table: PlayfairTable,
    pub padding: Letter,
}

impl PlayfairSpec {
    pub const DEFAULT_PADDING: char = 'M';

    pub fn new(keyword: &str) -> Result<Self> {
        Self::with_padding(
            keyword,
            Letter::from_upper(Self::DEFAULT_PADDING).expect("canonical"),
        )
    }

    pub fn with_padding(keyword: &str, padding: Letter) -> Result<Self> {
        Ok(PlayfairSpec {
            table: playfair_build(keyword)?,
            padding,
        })
    }
}

/// Split letters into digrams, padding same-cell pairs and an odd tail.
fn digrams(letters: &[Letter], spec: &PlayfairSpec) -> Result<Vec<(Letter, Letter)>> {
    let t = &spec.table;
    let pad_next_to = |a: Letter| {
        if t.same_cell(a, spec.padding) {
            Err(ClassicalError::PaddingInSameCellAsNeighbor {
                padding: spec.padding.to_char(),
                neighbor: a.to_char(),
            })
        } else {
            Ok((a, spec.padding))
        }
    };
    let mut out = Vec::with_capacity(letters.len() / 2 + 1);
    let mut i = 0;
    while i < letters.len() {
        let a = letters[i];
        match letters.get(i + 1) {
            Some(&b) if !t.same_cell(a, b) => {
                out.push((a, b));
                i += 2;
            }
            _ => {
                out.push(pad_next_to(a)?);
                i += 1;
            }
        }
    }
    Ok(out)
}

fn transform(t: &PlayfairTable, a: Letter, b: Letter, step: usize) -> (Letter, Letter) {
    let (ra, ca) = t.position(a);
    let (rb, cb) = t.position(b);
    if ra == rb {
        (t.at(ra, ca + step), t.at(rb, cb + step))
    } else if ca == cb {
        (t.at(ra + step, ca), t.at(rb + step, cb))
    } else {
        (t.at(ra, cb), t.at(rb, ca))
    }
}

/// Letters only; the output is the unseparated uppercase digram stream.
pub fn playfair_encrypt(m: &str, spec: &PlayfairSpec) -> Result<String> {
    let mut out = String::new();
    for (a, b) in digrams(&letters_of(m), spec)? {
        let (x, y) = transform(&spec.table, a, b, 1);
        out.push(x.to_char());
        out.push(y.to_char());
    }
    Ok(out)
}

/// Merged cells decode to their first member; padding letters are kept.
pub fn playfair_decrypt(c: &str, spec: &PlayfairSpec) -> Result<String> {
    let letters = letters_of(c);
    if !letters.len().is_multiple_of(2) {
        return Err(ClassicalError::InvalidCiphertext(format!(
            "odd number of letters ({})",
            letters.len()
        )));
    }
    let mut out = String::with_capacity(letters.len() * 2);
    for pair in letters.chunks_exact(2) {
        let (a, b) = (pair[0], pair[1]);
        if spec.table.same_cell(a, b) {
            return Err(ClassicalError::InvalidCiphertext(format!(
                "digram {}{} lies in one cell",
                a.to_char(),
                b.to_char()
            )));
        }
        let (x, y) = transform(&spec.table, a, b, SIDE - 1);
        out.push(x.to_char());
        out.push(y.to_char());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn spec() -> PlayfairSpec {
        PlayfairSpec::new("kriptografi").unwrap()
    }

    fn l(c: char) -> Letter {
        Letter::from_upper(c).unwrap()
    }

    #[test]
    fn keyword_table() {
        let t = playfair_build("kriptografi").unwrap();
        let first: String = (0..5).map(|c| t.at(0, c).to_char()).collect();
        assert_eq!(first, "KRİPT");
        let key: String = (0..9).map(|i| t.at(i / 5, i % 5).to_char()).collect();
        assert_eq!(key, "KRİPTOGAF");
        assert_eq!(
            t.to_string(),
            "K R İ P T\nO G A F B\nC Ç D E Ğ\nH I J L M\nN Ö S/Ş U/Ü V/Y/Z\n"
        );
        assert_eq!(playfair_build("kriptografi").unwrap(), t);
        assert_eq!(playfair_build("  ,1"), Err(ClassicalError::EmptyKeyword));
    }

    #[test]
    fn worked_example() {
        assert_eq!(playfair_encrypt("ODTÜ", &spec()).unwrap(), "ACPV");
        assert_eq!(playfair_encrypt("OD-TÜ", &spec()).unwrap(), "ACPV");
        assert_eq!(playfair_decrypt("AC", &spec()).unwrap(), "OD");
        assert_eq!(playfair_decrypt("ACPV", &spec()).unwrap(), "ODTU");
    }

    #[test]
    fn row_and_column_rules() {
        // same row shifts right, wrapping at the edge
        assert_eq!(playfair_encrypt("KR", &spec()).unwrap(), "Rİ");
        assert_eq!(playfair_encrypt("PT", &spec()).unwrap(), "TK");
        // same column shifts down, wrapping at the bottom
        assert_eq!(playfair_encrypt("KO", &spec()).unwrap(), "OC");
        assert_eq!(playfair_encrypt("HN", &spec()).unwrap(), "NK");
        assert_eq!(playfair_decrypt("TK", &spec()).unwrap(), "PT");
    }

    #[test]
    fn padding_rules() {
        // doubled letter gets the padding letter in between, odd tail padded
        assert_eq!(
            playfair_encrypt("AA", &spec()).unwrap(),
            playfair_encrypt("AMAM", &spec()).unwrap()
        );
        // S and Ş share a cell
        assert_eq!(
            playfair_encrypt("SŞ", &spec()).unwrap(),
            playfair_encrypt("SMŞM", &spec()).unwrap()
        );
        assert_eq!(
            playfair_encrypt("M", &spec()),
            Err(ClassicalError::PaddingInSameCellAsNeighbor {
                padding: 'M',
                neighbor: 'M'
            })
        );
        let z = PlayfairSpec::with_padding("kriptografi", l('Z')).unwrap();
        assert_eq!(playfair_encrypt("YA", &z).map(|_| ()), Ok(()));
        assert_eq!(
            playfair_encrypt("YV", &z),
            Err(ClassicalError::PaddingInSameCellAsNeighbor {
                padding: 'Z',
                neighbor: 'Y'
            })
        );
    }

    #[test]
    fn decrypt_rejects_bad_ciphertext() {
        assert!(matches!(
            playfair_decrypt("ACP", &spec()),
            Err(ClassicalError::InvalidCiphertext(_))
        ));
        assert!(matches!(
            playfair_decrypt("SŞ", &spec()),
            Err(ClassicalError::InvalidCiphertext(_))
        ));
    }

    fn word() -> impl Strategy<Value = Vec<Letter>> {
        proptest::collection::vec((0usize..29).prop_map(Letter::wrapping), 1..40)
    }

    proptest! {
        #[test]
        fn roundtrip_gives_padded_representatives(w in word()) {
            let s = spec();
            let m: String = w.iter().map(|l| l.to_char()).collect();
            match playfair_encrypt(&m, &s) {
                Ok(c) => {
                    let expected: String = digrams(&w, &s)
                        .unwrap()
                        .into_iter()
                        .flat_map(|(a, b)| [representative(a).to_char(), representative(b).to_char()])
                        .collect();
                    prop_assert_eq!(playfair_decrypt(&c, &s).unwrap(), expected);
                }
                Err(e) => prop_assert!(
                    matches!(e, ClassicalError::PaddingInSameCellAsNeighbor { .. }),
                    "unexpected error: {:?}",
                    e
                ),
            }
        }

        #[test]
        fn row_or_column_pairs_always_move(a in 0usize..25, b in 0usize..25) {
            let t = spec().table;
            let (x, y) = (t.at(a / 5, a % 5), t.at(b / 5, b % 5));
            let (ra, ca) = t.position(x);
            let (rb, cb) = t.position(y);
            prop_assume!(a != b && (ra == rb || ca == cb));
            let (p, q) = transform(&t, x, y, 1);
            prop_assert!(p != x && q != y);
        }
    }
}
