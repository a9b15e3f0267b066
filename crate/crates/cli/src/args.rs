use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kripto_core::classical::VigenereAlphabet;
use kripto_core::IndexMode;

/// Classical Turkish-alphabet ciphers, the dual-group cascade cipher and
/// frequency analysis.
///
/// Text input is read from --in (or standard input) and must be UTF-8.
/// Exit status: 0 on success, 1 on usage errors, 2 on data errors.
#[derive(Debug, Parser)]
#[command(name = "kripto", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Encrypt text with the cascade cipher.
    Encrypt(CascadeArgs),
    /// Decrypt cascade ciphertext.
    Decrypt(CascadeArgs),
    /// Generate a keyset (or a one-time-pad key) from a seed.
    Keygen(KeygenArgs),
    /// Validate a key file and print a summary.
    Keycheck(KeycheckArgs),
    /// Run one of the classical ciphers.
    Classical(ClassicalArgs),
    /// Print the letter frequency table of the input.
    Analyze(AnalyzeArgs),
    /// Recover the key of a shift cipher by chi-squared scoring.
    Crack(CrackArgs),
    /// Compare rank-match recovery on shift and cascade ciphertexts.
    Flatness(FlatnessArgs),
}

#[derive(Debug, Args)]
pub struct Io {
    /// Input file; standard input when omitted.
    #[arg(long = "in", value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// Output file; standard output when omitted.
    #[arg(long = "out", value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CascadeArgs {
    /// Key file, or `paper` for the built-in keyset.
    #[arg(long, value_name = "PATH|paper")]
    pub key: String,
    /// Which characters advance the group counter.
    #[arg(long, value_name = "MODE", default_value = "all-chars")]
    pub index_mode: IndexMode,
    /// Echo the key source and index mode to standard error.
    #[arg(long, short)]
    pub verbose: bool,
    #[command(flatten)]
    pub io: Io,
}

#[derive(Debug, Args)]
pub struct KeygenArgs {
    #[arg(long)]
    pub seed: u64,
    /// Emit a one-time-pad key of this many letters instead of a keyset.
    #[arg(long, value_name = "LETTERS")]
    pub otp_length: Option<usize>,
    /// Output file; standard output when omitted.
    #[arg(long = "out", value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct KeycheckArgs {
    /// Key file, or `paper` for the built-in keyset.
    #[arg(long, value_name = "PATH|paper")]
    pub key: String,
}

#[derive(Debug, Args)]
pub struct ClassicalArgs {
    #[command(subcommand)]
    pub cipher: Cipher,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Direction {
    #[arg(long)]
    pub encrypt: bool,
    #[arg(long)]
    pub decrypt: bool,
}

#[derive(Debug, Args)]
pub struct Common {
    #[command(flatten)]
    pub direction: Direction,
    #[command(flatten)]
    pub io: Io,
}

#[derive(Debug, Subcommand)]
pub enum Cipher {
    /// Caesar shift by k positions in the 29-letter alphabet.
    Shift {
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[command(flatten)]
        common: Common,
    },
    /// Mirror the alphabet (A <-> Z). Self-inverse.
    Atbash {
        #[command(flatten)]
        common: Common,
    },
    /// Repeating-keyword polyalphabetic shift.
    Vigenere {
        #[arg(long)]
        keyword: String,
        /// english26 or turkish29.
        #[arg(long, default_value = "english26")]
        alphabet: VigenereAlphabet,
        #[command(flatten)]
        common: Common,
    },
    /// Digram cipher on a 5x5 table with merged cells S/Ş, U/Ü, V/Y/Z.
    Playfair {
        #[arg(long)]
        keyword: String,
        /// Letter inserted between doubled letters and after an odd tail.
        #[arg(long, default_value_t = 'M')]
        padding: char,
        #[command(flatten)]
        common: Common,
    },
    /// Row/column digit pairs on a letter grid.
    Polybius {
        /// Grid rows separated by `/`; the 5x6 Turkish board when omitted.
        #[arg(long, value_name = "ROWS")]
        grid: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Zigzag transposition.
    Railfence {
        #[arg(long)]
        rails: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Rod transposition: write around `circumference` rows, read by columns.
    Scytale {
        #[arg(long)]
        circumference: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Letter-wise addition mod 29 with a key at least as long as the message.
    Vernam {
        #[arg(
            long,
            conflicts_with = "key_file",
            required_unless_present = "key_file"
        )]
        key: Option<String>,
        #[arg(long, value_name = "PATH")]
        key_file: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Text,
    Records,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(flatten)]
    pub io: Io,
}

#[derive(Debug, Args)]
pub struct CrackArgs {
    /// Plaintext corpus the reference frequencies are built from.
    #[arg(long, value_name = "PATH")]
    pub reference: PathBuf,
    /// Below this many letters the result is flagged as low confidence.
    #[arg(long, default_value_t = kripto_core::analysis::CRACK_MIN_LETTERS)]
    pub min_letters: usize,
    /// Also print the decrypted text after the summary.
    #[arg(long)]
    pub show_plaintext: bool,
    #[command(flatten)]
    pub io: Io,
}

#[derive(Debug, Args)]
pub struct FlatnessArgs {
    /// Plaintext corpus the reference frequencies are built from.
    #[arg(long, value_name = "PATH")]
    pub reference: PathBuf,
    /// Key file, or `paper` for the built-in keyset.
    #[arg(long, value_name = "PATH|paper", default_value = "paper")]
    pub key: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, value_name = "MODE", default_value = "all-chars")]
    pub index_mode: IndexMode,
    #[command(flatten)]
    pub io: Io,
}
