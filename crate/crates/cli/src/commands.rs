use std::fs::File;
use std::io::Write;
use std::path::PathBuf;

use kripto_core::analysis::{
    build_reference_table, crack_shift_with, flatness_report_with, letter_frequencies,
};
use kripto_core::cascade::CascadeStream;
use kripto_core::classical::{otp_keygen, shift_decrypt, PlayfairSpec, PolybiusSpec};
use kripto_core::keyset::{keyspace_size, serialize_generated, ROW_LABELS};
use kripto_core::{generate_keyset, CipherSpec, FrequencyTable, Letter};

use crate::args::{
    AnalyzeArgs, CascadeArgs, Cipher, ClassicalArgs, Command, Common, CrackArgs, FlatnessArgs,
    Format, KeycheckArgs, KeygenArgs,
};
use crate::io::{for_each_line, input_name, load_keyset, open_output, read_text, write_error};
use crate::{CliError, Result};

pub fn dispatch(command: Command) -> Result<()> {
    match command {
        Command::Encrypt(a) => cascade(a, true),
        Command::Decrypt(a) => cascade(a, false),
        Command::Keygen(a) => keygen(a),
        Command::Keycheck(a) => keycheck(a),
        Command::Classical(a) => classical(a),
        Command::Analyze(a) => analyze(a),
        Command::Crack(a) => crack(a),
        Command::Flatness(a) => flatness(a),
    }
}

fn emit(output: Option<&PathBuf>, payload: &str) -> Result<()> {
    let mut out = open_output(output)?;
    out.write_all(payload.as_bytes())
        .and_then(|_| out.flush())
        .map_err(write_error)
}

fn data<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Data(e.to_string())
}

fn cascade(a: CascadeArgs, encrypt: bool) -> Result<()> {
    let k = load_keyset(&a.key)?;
    if a.verbose {
        eprintln!("key: {}", a.key);
        eprintln!("index-mode: {}", a.index_mode.name());
    }
    let mut stream = if encrypt {
        CascadeStream::encryptor(&k, a.index_mode)
    } else {
        CascadeStream::decryptor(&k, a.index_mode)
    };
    let mut out = open_output(a.io.output.as_ref())?;
    let mut buf = String::new();
    for_each_line(a.io.input.as_ref(), |line| {
        buf.clear();
        stream.push(line, &mut buf);
        out.write_all(buf.as_bytes()).map_err(write_error)
    })?;
    out.flush().map_err(write_error)
}

fn keygen(a: KeygenArgs) -> Result<()> {
    let payload = match a.otp_length {
        Some(n) => format!("{}\n", otp_keygen(n, a.seed)),
        None => serialize_generated(&generate_keyset(a.seed), a.seed),
    };
    emit(a.output.as_ref(), &payload)
}

fn keycheck(a: KeycheckArgs) -> Result<()> {
    let k = load_keyset(&a.key)?;
    let mut report = format!("{}: OK\n", a.key);
    for (label, row) in ROW_LABELS.iter().zip(k.rows()) {
        report.push_str(&format!("{label:<5} {}\n", row.row_string()));
    }
    report.push_str(&format!("keyspace: {}\n", keyspace_size()));
    emit(None, &report)
}

fn single_letter(c: char) -> Result<Letter> {
    Letter::from_char(c)
        .ok_or_else(|| CliError::Usage(format!("`{c}` is not a letter of the alphabet")))
}

fn classical(a: ClassicalArgs) -> Result<()> {
    let (spec, common): (CipherSpec, Common) = match a.cipher {
        Cipher::Shift { k, common } => (CipherSpec::Shift { shift: k }, common),
        Cipher::Atbash { common } => (CipherSpec::Atbash, common),
        Cipher::Vigenere {
            keyword,
            alphabet,
            common,
        } => (CipherSpec::Vigenere { keyword, alphabet }, common),
        Cipher::Playfair {
            keyword,
            padding,
            common,
        } => {
            let spec =
                PlayfairSpec::with_padding(&keyword, single_letter(padding)?).map_err(data)?;
            (CipherSpec::Playfair(spec), common)
        }
        Cipher::Polybius { grid, common } => {
            let spec = match grid {
                Some(g) => {
                    PolybiusSpec::from_rows(&g.split('/').collect::<Vec<_>>()).map_err(data)?
                }
                None => PolybiusSpec::turkish_5x6(),
            };
            (CipherSpec::Polybius(spec), common)
        }
        Cipher::Railfence { rails, common } => (CipherSpec::RailFence { rails }, common),
        Cipher::Scytale {
            circumference,
            common,
        } => (CipherSpec::Scytale { circumference }, common),
        Cipher::Vernam {
            key,
            key_file,
            common,
        } => {
            let key = match (key, key_file) {
                (Some(k), _) => k,
                (None, Some(p)) => read_text(Some(&p))?,
                (None, None) => {
                    return Err(CliError::Usage("vernam needs --key or --key-file".into()))
                }
            };
            (CipherSpec::Vernam { key }, common)
        }
    };
    let input = read_text(common.io.input.as_ref())?;
    let mut output = if common.direction.encrypt {
        spec.encrypt(&input)
    } else {
        spec.decrypt(&input)
    }
    .map_err(|e| CliError::Data(format!("{}: {e}", spec.name())))?;
    // letters-only ciphers drop the final newline along with other non-letters
    if input.ends_with('\n') && !output.ends_with('\n') {
        output.push('\n');
    }
    emit(common.io.output.as_ref(), &output)
}

fn analyze(a: AnalyzeArgs) -> Result<()> {
    let text = read_text(a.io.input.as_ref())?;
    let table = letter_frequencies(&text).map_err(data)?;
    let payload = match a.format {
        Format::Text => table.to_text(),
        Format::Records => table.to_records(),
    };
    emit(a.io.output.as_ref(), &payload)
}

fn reference_table(path: &PathBuf) -> Result<FrequencyTable> {
    let file = File::open(path)
        .map_err(|e| CliError::Data(format!("cannot read `{}`: {e}", path.display())))?;
    build_reference_table(file)
        .map_err(|e| CliError::Data(format!("reference {}: {e}", input_name(Some(path)))))
}

fn crack(a: CrackArgs) -> Result<()> {
    let reference = reference_table(&a.reference)?;
    let text = read_text(a.io.input.as_ref())?;
    let outcome = crack_shift_with(&text, &reference, a.min_letters).map_err(data)?;
    if outcome.low_confidence {
        eprintln!(
            "kripto: warning: only {} letters (below {}); the result is low confidence",
            outcome.letters, a.min_letters
        );
    }
    let mut payload = format!(
        "shift: {}\ndistance: {:.6}\nletters: {}\nlow_confidence: {}\n",
        outcome.shift, outcome.distance, outcome.letters, outcome.low_confidence
    );
    if a.show_plaintext {
        payload.push('\n');
        payload.push_str(&shift_decrypt(&text, outcome.shift).map_err(data)?);
    }
    emit(a.io.output.as_ref(), &payload)
}

fn flatness(a: FlatnessArgs) -> Result<()> {
    let reference = reference_table(&a.reference)?;
    let k = load_keyset(&a.key)?;
    let text = read_text(a.io.input.as_ref())?;
    let report = flatness_report_with(&text, &k, &reference, a.index_mode).map_err(data)?;
    let payload = match a.format {
        Format::Text => report.to_text(),
        Format::Records => report.to_records(),
    };
    emit(a.io.output.as_ref(), &payload)
}
