use std::fs::{self, File};
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use kripto_core::keyset::parse_keyset;
use kripto_core::{builtin_keyset, CascadeKeySet};

use crate::{CliError, Result};

/// Reserved `--key` value naming the built-in keyset.
pub const BUILTIN_KEY: &str = "paper";

fn read_error(path: &Path, e: io::Error) -> CliError {
    CliError::Data(format!("cannot read `{}`: {e}", path.display()))
}

fn utf8_error(what: &str, e: std::str::Utf8Error, offset: usize) -> CliError {
    CliError::Data(format!(
        "{what} is not valid UTF-8 (byte offset {})",
        offset + e.valid_up_to()
    ))
}

pub fn open_input(path: Option<&PathBuf>) -> Result<Box<dyn BufRead>> {
    Ok(match path {
        Some(p) => Box::new(BufReader::new(File::open(p).map_err(|e| read_error(p, e))?)),
        None => Box::new(io::stdin().lock()),
    })
}

pub fn open_output(path: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| {
            CliError::Data(format!("cannot write `{}`: {e}", p.display()))
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

pub fn write_error(e: io::Error) -> CliError {
    CliError::Data(format!("write failed: {e}"))
}

/// The whole input as UTF-8 text.
pub fn read_text(path: Option<&PathBuf>) -> Result<String> {
    let mut bytes = Vec::new();
    open_input(path)?
        .read_to_end(&mut bytes)
        .map_err(|e| match path {
            Some(p) => read_error(p, e),
            None => CliError::Data(format!("cannot read standard input: {e}")),
        })?;
    let name = input_name(path);
    String::from_utf8(bytes).map_err(|e| utf8_error(&name, e.utf8_error(), 0))
}

pub fn input_name(path: Option<&PathBuf>) -> String {
    match path {
        Some(p) => format!("`{}`", p.display()),
        None => "standard input".to_string(),
    }
}

/// Feed the input line by line, validating each line as UTF-8.
pub fn for_each_line(path: Option<&PathBuf>, mut f: impl FnMut(&str) -> Result<()>) -> Result<()> {
    let mut input = open_input(path)?;
    let name = input_name(path);
    let mut buf = Vec::new();
    let mut offset = 0;
    loop {
        buf.clear();
        let n = input
            .read_until(b'\n', &mut buf)
            .map_err(|e| CliError::Data(format!("cannot read {name}: {e}")))?;
        if n == 0 {
            return Ok(());
        }
        let line = std::str::from_utf8(&buf).map_err(|e| utf8_error(&name, e, offset))?;
        f(line)?;
        offset += n;
    }
}

pub fn load_keyset(key: &str) -> Result<CascadeKeySet> {
    if key == BUILTIN_KEY {
        return Ok(builtin_keyset());
    }
    let path = Path::new(key);
    let text = fs::read_to_string(path).map_err(|e| read_error(path, e))?;
    parse_keyset(&text).map_err(|e| CliError::Data(format!("key file `{key}`: {e}")))
}
