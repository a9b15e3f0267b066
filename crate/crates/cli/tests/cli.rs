use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

const SENTENCE: &str = "Gazi Üniversitesi Teknik Eğitim Fakültesi";
const FENCED: &str = "GZÜİESTSTKİEİİFKLEİAİNVRİEİENKĞTMAÜTS";

fn kripto(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kripto"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    // the process may exit before reading its input
    let _ = child.stdin.take().unwrap().write_all(stdin);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn encrypt_with_builtin_key_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let msg = dir.path().join("msg.txt");
    fs::write(&msg, "AA").unwrap();
    let o = kripto(&["encrypt", "--key", "paper", "--in", path(&msg)], b"");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "VĞ");
    assert!(o.stderr.is_empty());
}

#[test]
fn keygen_is_byte_identical_per_seed() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.keys"), dir.path().join("b.keys"));
    for out in [&a, &b] {
        let o = kripto(&["keygen", "--seed", "42", "--out", path(out)], b"");
        assert_eq!(o.status.code(), Some(0));
        assert!(o.stdout.is_empty());
    }
    let first = fs::read(&a).unwrap();
    assert_eq!(first, fs::read(&b).unwrap());
    let text = String::from_utf8(first).unwrap();
    assert!(text.starts_with("CASCADE-KEYS v1\n# rng: chacha20-rejection-v1\n# seed: 42\nG1S1: "));
    assert_eq!(
        kripto(&["keycheck", "--key", path(&a)], b"").status.code(),
        Some(0)
    );
}

#[test]
fn missing_key_file_is_a_data_error_naming_the_file() {
    let o = kripto(&["decrypt", "--key", "missing.keys"], b"ABC");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("missing.keys"));
    assert!(o.stdout.is_empty());
}

#[test]
fn bad_key_row_names_the_error_and_row() {
    let dir = tempfile::tempdir().unwrap();
    let k = dir.path().join("bad.keys");
    let good = stdout(&kripto(&["keygen", "--seed", "7"], b""));
    let bad: String = good
        .lines()
        .map(|l| match l.strip_prefix("G2S3: ") {
            Some(row) => format!("G2S3: Z{}\n", row.chars().skip(1).collect::<String>()),
            None => format!("{l}\n"),
        })
        .collect();
    assert_ne!(bad, good);
    fs::write(&k, bad).unwrap();
    for args in [
        vec!["keycheck", "--key", path(&k)],
        vec!["encrypt", "--key", path(&k)],
    ] {
        let o = kripto(&args, b"x");
        assert_eq!(o.status.code(), Some(2));
        let err = stderr(&o);
        // the replaced first letter may already have been Z
        assert!(err.contains(" in G2S3"), "{err}");
    }
}

#[test]
fn classical_shift_example() {
    let o = kripto(
        &["classical", "shift", "--k", "3", "--encrypt"],
        "Gazi".as_bytes(),
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "Içcl");
    let back = kripto(
        &["classical", "shift", "--k", "3", "--decrypt"],
        "Içcl".as_bytes(),
    );
    assert_eq!(stdout(&back), "Gazi");
}

#[test]
fn classical_railfence_example() {
    let o = kripto(
        &["classical", "railfence", "--rails", "2", "--encrypt"],
        SENTENCE.as_bytes(),
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), FENCED);
}

#[test]
fn vernam_short_key_file_is_key_too_short() {
    let dir = tempfile::tempdir().unwrap();
    let key = dir.path().join("short.key");
    fs::write(&key, "ABC\n").unwrap();
    let o = kripto(
        &["classical", "vernam", "--key-file", path(&key), "--encrypt"],
        "uzun bir mesaj".as_bytes(),
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("KeyTooShort"));
    assert!(o.stdout.is_empty());
}

#[test]
fn other_classical_ciphers() {
    let cases: [(&[&str], &str, &str); 6] = [
        (&["atbash", "--encrypt"], "Bugün", "Ydsçj"),
        (&["polybius", "--encrypt"], "Gazi", "22-11-55-26"),
        (&["polybius", "--decrypt"], "22-11-55-26", "GAZİ"),
        (
            &["vigenere", "--keyword", "Kale", "--encrypt"],
            "Taarruz Dokuzda",
            "Dalvbuk Hykfdna",
        ),
        (
            &["playfair", "--keyword", "kriptografi", "--encrypt"],
            "ODTÜ",
            "ACPV",
        ),
        (
            &["scytale", "--circumference", "2", "--encrypt"],
            "ABCDE",
            "ADBEC",
        ),
    ];
    for (args, input, expected) in cases {
        let mut argv = vec!["classical"];
        argv.extend_from_slice(args);
        let o = kripto(&argv, input.as_bytes());
        assert_eq!(o.status.code(), Some(0), "{argv:?}: {}", stderr(&o));
        assert_eq!(stdout(&o), expected, "{argv:?}");
    }
}

#[test]
fn cascade_roundtrip_is_byte_exact() {
    let dir = tempfile::tempdir().unwrap();
    let k = dir.path().join("k.keys");
    kripto(&["keygen", "--seed", "3", "--out", path(&k)], b"");
    let text = "Mikroişlemci, komutları sırasıyla\nişler. QWX â 123\r\n\nSon satır";
    for mode in ["all-chars", "letters-only"] {
        let c = kripto(
            &["encrypt", "--key", path(&k), "--index-mode", mode],
            text.as_bytes(),
        );
        assert_eq!(c.status.code(), Some(0));
        assert_ne!(c.stdout, text.as_bytes());
        let p = kripto(
            &["decrypt", "--key", path(&k), "--index-mode", mode],
            &c.stdout,
        );
        assert_eq!(p.stdout, text.as_bytes(), "{mode}");
    }
}

#[test]
fn counting_spans_lines() {
    // one stream is one message: the newline advances the position
    let o = kripto(&["encrypt", "--key", "paper"], "A\nA".as_bytes());
    assert_eq!(stdout(&o), "V\nV");
    let o = kripto(
        &["encrypt", "--key", "paper", "--index-mode", "letters-only"],
        "A\nA".as_bytes(),
    );
    assert_eq!(stdout(&o), "V\nĞ");
    let o = kripto(&["encrypt", "--key", "paper"], "A\nXA".as_bytes());
    assert_eq!(stdout(&o), "V\nXĞ");
}

#[test]
fn verbose_echoes_index_mode_on_stderr_only() {
    let o = kripto(
        &[
            "encrypt",
            "--key",
            "paper",
            "--index-mode",
            "letters-only",
            "--verbose",
        ],
        b"AA",
    );
    assert_eq!(stdout(&o), "VĞ");
    assert!(stderr(&o).contains("index-mode: letters-only"));
}

#[test]
fn invalid_utf8_is_a_data_error() {
    let o = kripto(&["encrypt", "--key", "paper"], b"AB\xffC");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("UTF-8"));
    let o = kripto(&["analyze"], b"\xc3");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["encrypt", "--key", "paper", "--bogus"],
        vec!["classical", "rot13", "--encrypt"],
        vec!["classical", "shift", "--k", "3"],
        vec!["classical", "shift", "--k", "3", "--encrypt", "--decrypt"],
        vec!["encrypt", "--key", "paper", "--index-mode", "every-other"],
        vec!["frobnicate"],
        vec![],
    ] {
        let o = kripto(&args, b"");
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
    assert_eq!(kripto(&["--help"], b"").status.code(), Some(0));
}

#[test]
fn cipher_validation_errors_exit_two() {
    for (args, input) in [
        (vec!["classical", "shift", "--k", "29", "--encrypt"], "abc"),
        (
            vec!["classical", "railfence", "--rails", "0", "--encrypt"],
            "abc",
        ),
        (
            vec!["classical", "playfair", "--keyword", "kripto", "--decrypt"],
            "ABC",
        ),
        (vec!["classical", "polybius", "--decrypt"], "99"),
        (
            vec!["classical", "vigenere", "--keyword", "ğ", "--encrypt"],
            "abc",
        ),
    ] {
        let o = kripto(&args, input.as_bytes());
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn analyze_formats() {
    let o = kripto(
        &["analyze", "--format", "records"],
        "Akif kasaba gitti ve et aldı.".as_bytes(),
    );
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("letter,count,frequency\n"));
    assert!(out.contains("\nA,5,0.217391\n"));
    let o = kripto(&["analyze"], b"...");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("EmptyText"));
}

fn corpus() -> String {
    fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../core/tests/data/corpus_tr.txt"
    ))
    .unwrap()
}

#[test]
fn crack_recovers_shift() {
    let reference = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../core/tests/data/corpus_tr.txt"
    );
    let plain: String = corpus().chars().take(3000).collect();
    let c = kripto(
        &["classical", "shift", "--k", "11", "--encrypt"],
        plain.as_bytes(),
    );
    let o = kripto(
        &["crack", "--reference", reference, "--show-plaintext"],
        &c.stdout,
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("shift: 11\n"), "{out}");
    assert!(out.contains("low_confidence: false"));
    assert!(out.ends_with(&plain));

    let o = kripto(&["crack", "--reference", reference], "Içcl".as_bytes());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("low_confidence: true"));
    assert!(stderr(&o).contains("low confidence"));
}

#[test]
fn flatness_report() {
    let reference = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../core/tests/data/corpus_tr.txt"
    );
    let o = kripto(
        &[
            "flatness",
            "--reference",
            reference,
            "--in",
            reference,
            "--format",
            "records",
        ],
        b"",
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("table,letter,count,frequency\n"));
    assert!(out.contains("# cascade_accuracy="));
    let o = kripto(&["flatness", "--reference", reference], "kısa".as_bytes());
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("TooShort"));
}
