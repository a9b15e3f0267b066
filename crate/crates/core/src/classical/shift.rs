use super::{map_letters, ClassicalError, Result};
use crate::alphabet::{Letter, ALPHABET_LEN};

fn check(k: i64) -> Result<usize> {
    if (0..ALPHABET_LEN as i64).contains(&k) {
        Ok(k as usize)
    } else {
        Err(ClassicalError::ShiftOutOfRange(k))
    }
}

/// Move every letter `k` places forward, wrapping after `Z`.
pub fn shift_encrypt(m: &str, k: i64) -> Result<String> {
    let k = check(k)?;
    Ok(map_letters(m, |l| Letter::wrapping(l.index() + k)))
}

pub fn shift_decrypt(c: &str, k: i64) -> Result<String> {
    let k = check(k)?;
    Ok(map_letters(c, |l| {
        Letter::wrapping(l.index() + ALPHABET_LEN - k)
    }))
}

/// Mirror the alphabet: first letter <-> last letter. Self-inverse.
pub fn atbash(m: &str) -> String {
    map_letters(m, |l| Letter::wrapping(ALPHABET_LEN - 1 - l.index()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_examples() {
        // G(7)+3 lands on dotless I(10); the published "İÇCL" is not
        // reachable under this rule.
        assert_eq!(shift_encrypt("Gazi", 3).unwrap(), "Içcl");
        assert_eq!(shift_encrypt("GAZİ", 3).unwrap(), "IÇCL");
        assert_eq!(shift_encrypt("Z", 3).unwrap(), "C");
        assert_eq!(
            shift_encrypt("Gazi Üniversitesi", 0).unwrap(),
            "Gazi Üniversitesi"
        );
        assert_eq!(shift_decrypt("Içcl", 3).unwrap(), "Gazi");
    }

    #[test]
    fn shift_range() {
        assert_eq!(
            shift_encrypt("A", 29),
            Err(ClassicalError::ShiftOutOfRange(29))
        );
        assert_eq!(
            shift_decrypt("A", -1),
            Err(ClassicalError::ShiftOutOfRange(-1))
        );
        assert!(shift_encrypt("A", 28).is_ok());
    }

    #[test]
    fn atbash_examples() {
        assert_eq!(atbash("Bugün"), "Ydsçj");
        assert_eq!(atbash("Bugün").to_lowercase(), "ydsçj");
        assert_eq!(atbash("A"), "Z");
        assert_eq!(atbash("Bugün meydana"), "Ydsçj ktbuzjz");
    }
}
