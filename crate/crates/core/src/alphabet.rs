//! The 29-letter Turkish alphabet, Turkish-aware case mapping and message
//! tokenization.
//!
//! Every cipher in this crate works on canonical uppercase [`Letter`]s.
//! Anything outside the alphabet (spaces, punctuation, digits, and the
//! foreign letters Q, W and X) is carried along as a passthrough unit so a
//! tokenized message can always be rendered back byte-for-byte.

use std::fmt;
use std::sync::LazyLock;

/// Number of letters in the Turkish alphabet.
pub const ALPHABET_LEN: usize = 29;

/// Canonical uppercase letters in alphabet order.
pub const ALPHABET: [char; ALPHABET_LEN] = [
    'A', 'B', 'C', 'Ç', 'D', 'E', 'F', 'G', 'Ğ', 'H', 'I', 'İ', 'J', 'K', 'L', 'M', 'N', 'O', 'Ö',
    'P', 'R', 'S', 'Ş', 'T', 'U', 'Ü', 'V', 'Y', 'Z',
];

/// Lowercase forms, same order as [`ALPHABET`].
const LOWER: [char; ALPHABET_LEN] = [
    'a', 'b', 'c', 'ç', 'd', 'e', 'f', 'g', 'ğ', 'h', 'ı', 'i', 'j', 'k', 'l', 'm', 'n', 'o', 'ö',
    'p', 'r', 's', 'ş', 't', 'u', 'ü', 'v', 'y', 'z',
];

/// A canonical uppercase Turkish letter, stored as its alphabet index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u8);

impl Letter {
    /// Letter at `index`, or `None` when `index >= 29`.
    pub const fn from_index(index: usize) -> Option<Letter> {
        if index < ALPHABET_LEN {
            Some(Letter(index as u8))
        } else {
            None
        }
    }

    /// Letter at `index` reduced modulo 29.
    pub const fn wrapping(index: usize) -> Letter {
        Letter((index % ALPHABET_LEN) as u8)
    }

    /// Position in the canonical order, `0..=28`.
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    /// Uppercase character.
    pub const fn to_char(self) -> char {
        ALPHABET[self.0 as usize]
    }

    /// Lowercase character under Turkish rules (`I` -> `ı`, `İ` -> `i`).
    pub const fn to_lower_char(self) -> char {
        LOWER[self.0 as usize]
    }

    /// Accepts an uppercase canonical letter only.
    pub fn from_upper(c: char) -> Option<Letter> {
        ALPHABET
            .iter()
            .position(|&a| a == c)
            .map(|i| Letter(i as u8))
    }

    /// Accepts either case, folding with Turkish rules.
    pub fn from_char(c: char) -> Option<Letter> {
        Letter::from_upper(turkish_upper(c))
    }

    /// All 29 letters in canonical order.
    pub fn all() -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator + Clone {
        (0..ALPHABET_LEN as u8).map(Letter)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Letter({})", self.to_char())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// Position of `l` in the canonical order.
pub fn letter_index(l: Letter) -> usize {
    l.index()
}

/// Inverse of [`letter_index`].
///
/// Panics if `index >= 29`.
pub fn letter_at(index: usize) -> Letter {
    Letter::from_index(index).expect("letter index out of range")
}

/// Uppercase a single character with Turkish rules.
///
/// `i` becomes `İ` and `ı` becomes `I`. Characters whose standard uppercase
/// mapping expands to more than one code point are returned unchanged.
pub fn turkish_upper(c: char) -> char {
    match c {
        'i' => 'İ',
        'ı' => 'I',
        _ => {
            let mut up = c.to_uppercase();
            match (up.next(), up.next()) {
                (Some(u), None) => u,
                _ => c,
            }
        }
    }
}

/// Lowercase a single character with Turkish rules.
pub fn turkish_lower(c: char) -> char {
    match c {
        'İ' => 'i',
        'I' => 'ı',
        _ => {
            let mut low = c.to_lowercase();
            match (low.next(), low.next()) {
                (Some(l), None) => l,
                _ => c,
            }
        }
    }
}

/// One character of a tokenized message.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MessageUnit {
    Letter { letter: Letter, was_lowercase: bool },
    Passthrough(char),
}

impl MessageUnit {
    pub fn letter(self) -> Option<Letter> {
        match self {
            MessageUnit::Letter { letter, .. } => Some(letter),
            MessageUnit::Passthrough(_) => None,
        }
    }

    /// Character this unit stood for in the original text.
    pub fn render(self) -> char {
        match self {
            MessageUnit::Letter {
                letter,
                was_lowercase,
            } => cased(letter, was_lowercase),
            MessageUnit::Passthrough(c) => c,
        }
    }
}

/// Render `letter` in lower or upper case.
pub fn cased(letter: Letter, lowercase: bool) -> char {
    if lowercase {
        letter.to_lower_char()
    } else {
        letter.to_char()
    }
}

/// Every Turkish letter in either case lies below this code point.
const FAST_RANGE: usize = 0x180;

static FAST: LazyLock<[MessageUnit; FAST_RANGE]> = LazyLock::new(|| {
    std::array::from_fn(|i| classify(char::from_u32(i as u32).expect("below surrogates")))
});

/// Classify one character.
pub fn to_canonical(c: char) -> MessageUnit {
    match FAST.get(c as usize) {
        Some(unit) => *unit,
        None => classify(c),
    }
}

fn classify(c: char) -> MessageUnit {
    let upper = turkish_upper(c);
    match Letter::from_upper(upper) {
        // A character is only a letter if it round-trips through the case
        // mapping; this keeps e.g. U+0130 lookalikes from being rewritten.
        Some(letter) if upper == c || turkish_lower(upper) == c => MessageUnit::Letter {
            letter,
            was_lowercase: upper != c,
        },
        _ => MessageUnit::Passthrough(c),
    }
}

pub fn tokenize(message: &str) -> Vec<MessageUnit> {
    message.chars().map(to_canonical).collect()
}

pub fn render(units: &[MessageUnit]) -> String {
    units.iter().map(|u| u.render()).collect()
}

/// Canonical letters of `text`, dropping everything else.
pub fn letters_of(text: &str) -> Vec<Letter> {
    text.chars()
        .filter_map(|c| to_canonical(c).letter())
        .collect()
}

/// Canonical uppercase string of `letters`.
pub fn letters_to_string(letters: &[Letter]) -> String {
    letters.iter().map(|l| l.to_char()).collect()
}

/// How positions are counted when choosing a cipher group.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum IndexMode {
    /// Every character, letter or not, occupies a position.
    #[default]
    AllChars,
    /// Only letters are counted.
    LettersOnly,
}

impl IndexMode {
    pub fn name(self) -> &'static str {
        match self {
            IndexMode::AllChars => "all-chars",
            IndexMode::LettersOnly => "letters-only",
        }
    }
}

impl std::str::FromStr for IndexMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all-chars" => Ok(IndexMode::AllChars),
            "letters-only" => Ok(IndexMode::LettersOnly),
            other => Err(format!("unknown index mode `{other}`")),
        }
    }
}

/// One of the two substitution pipelines of the cascade cipher.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Group {
    /// Odd 1-based positions.
    Group1,
    /// Even 1-based positions.
    Group2,
}

impl Group {
    pub const BOTH: [Group; 2] = [Group::Group1, Group::Group2];

    pub(crate) fn slot(self) -> usize {
        match self {
            Group::Group1 => 0,
            Group::Group2 => 1,
        }
    }
}

/// Group for a letter at raw position `position` that is the
/// `letter_ordinal`-th letter (both zero-based).
pub fn group_for_position(position: usize, mode: IndexMode, letter_ordinal: usize) -> Group {
    let index = match mode {
        IndexMode::AllChars => position,
        IndexMode::LettersOnly => letter_ordinal,
    };
    if (index + 1) % 2 == 0 {
        Group::Group2
    } else {
        Group::Group1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lookup_tables_agree_with_case_mapping() {
        for l in Letter::all() {
            assert_eq!(l.to_lower_char(), turkish_lower(l.to_char()));
        }
        for c in (0..0x3000).filter_map(char::from_u32) {
            assert_eq!(to_canonical(c), classify(c), "{c:?}");
        }
    }

    #[test]
    fn indices_match_vernam_table() {
        assert_eq!(letter_index(Letter::from_char('A').unwrap()), 0);
        assert_eq!(letter_index(Letter::from_char('Z').unwrap()), 28);
        assert_eq!(letter_index(Letter::from_char('Ç').unwrap()), 3);
        assert_eq!(letter_index(Letter::from_char('İ').unwrap()), 11);
        assert_eq!(letter_index(Letter::from_char('T').unwrap()), 23);
    }

    #[test]
    fn index_roundtrip() {
        for l in Letter::all() {
            assert_eq!(letter_at(letter_index(l)), l);
        }
        assert_eq!(Letter::all().count(), 29);
    }

    #[test]
    fn turkish_case_rules() {
        assert_eq!(
            to_canonical('i'),
            MessageUnit::Letter {
                letter: Letter::from_upper('İ').unwrap(),
                was_lowercase: true
            }
        );
        assert_eq!(
            to_canonical('ı'),
            MessageUnit::Letter {
                letter: Letter::from_upper('I').unwrap(),
                was_lowercase: true
            }
        );
        assert_eq!(
            to_canonical('G'),
            MessageUnit::Letter {
                letter: Letter::from_upper('G').unwrap(),
                was_lowercase: false
            }
        );
        assert_eq!(to_canonical(','), MessageUnit::Passthrough(','));
        assert_eq!(to_canonical('q'), MessageUnit::Passthrough('q'));
        assert_eq!(to_canonical('W'), MessageUnit::Passthrough('W'));
        assert_eq!(turkish_lower('I'), 'ı');
        assert_eq!(turkish_lower('İ'), 'i');
    }

    #[test]
    fn tokenize_examples() {
        let units = tokenize("Gazi Üniversitesi");
        assert_eq!(units.len(), 17);
        assert_eq!(units.iter().filter(|u| u.letter().is_some()).count(), 16);
        assert_eq!(units[4], MessageUnit::Passthrough(' '));
        assert!(tokenize("").is_empty());
        assert!(tokenize("3+5")
            .iter()
            .all(|u| matches!(u, MessageUnit::Passthrough(_))));
    }

    #[test]
    fn group_selection() {
        assert_eq!(group_for_position(0, IndexMode::AllChars, 0), Group::Group1);
        assert_eq!(group_for_position(1, IndexMode::AllChars, 1), Group::Group2);
        assert_eq!(
            group_for_position(7, IndexMode::LettersOnly, 2),
            Group::Group1
        );
        assert_eq!(
            group_for_position(2, IndexMode::LettersOnly, 1),
            Group::Group2
        );
    }

    #[test]
    fn index_mode_parse() {
        assert_eq!("all-chars".parse::<IndexMode>(), Ok(IndexMode::AllChars));
        assert_eq!(
            "letters-only".parse::<IndexMode>(),
            Ok(IndexMode::LettersOnly)
        );
        assert!("letters".parse::<IndexMode>().is_err());
    }

    fn message_chars() -> impl Strategy<Value = String> {
        proptest::collection::vec(
            prop_oneof![
                proptest::sample::select(ALPHABET.to_vec()),
                proptest::sample::select(
                    ALPHABET
                        .iter()
                        .map(|&c| turkish_lower(c))
                        .collect::<Vec<_>>()
                ),
                proptest::sample::select(vec![' ', ',', '.', '3', '\n', 'q', 'W', 'â', '-']),
                any::<char>(),
            ],
            0..64,
        )
        .prop_map(|v| v.into_iter().collect())
    }

    proptest! {
        #[test]
        fn tokenize_render_is_lossless(s in message_chars()) {
            prop_assert_eq!(render(&tokenize(&s)), s);
        }

        #[test]
        fn groups_alternate(i in 0usize..10_000) {
            for mode in [IndexMode::AllChars, IndexMode::LettersOnly] {
                prop_assert_ne!(group_for_position(i, mode, i), group_for_position(i + 1, mode, i + 1));
            }
        }
    }
}
