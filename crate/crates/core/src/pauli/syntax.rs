//! Text forms of Pauli operators.
//!
//! Qubits use letter strings such as `-iXYZ`, where `Y = iXZ` on its slot. Other
//! moduli use whitespace-separated slot tokens `X^aZ^b` (or `I`), optionally led by
//! a phase token `w^l` standing for `ω^l`.

use std::fmt;

use crate::algebra::RingSpec;
use crate::error::{Error, Result};

use super::operator::PauliOperator;

fn is_qubit(spec: RingSpec) -> bool {
    spec.modulus() == 2
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let spec = self.spec();
        let (a, b) = (self.a(), self.b());
        if is_qubit(spec) {
            let ys = a.iter().zip(b).filter(|(&x, &z)| x == 1 && z == 1).count() as u32;
            let prefix = match (self.phase_exp() + 4 - ys % 4) % 4 {
                0 => "",
                1 => "+i",
                2 => "-",
                _ => "-i",
            };
            let letters: String = a
                .iter()
                .zip(b)
                .map(|(&x, &z)| match (x, z) {
                    (0, 0) => 'I',
                    (1, 0) => 'X',
                    (0, 1) => 'Z',
                    _ => 'Y',
                })
                .collect();
            return write!(f, "{prefix}{letters}");
        }
        let mut tokens = Vec::with_capacity(a.len() + 1);
        if self.phase_exp() != 0 {
            tokens.push(format!("w^{}", self.phase_exp()));
        }
        for (&x, &z) in a.iter().zip(b) {
            tokens.push(match (x, z) {
                (0, 0) => "I".to_string(),
                (x, 0) => format!("X^{x}"),
                (0, z) => format!("Z^{z}"),
                (x, z) => format!("X^{x}Z^{z}"),
            });
        }
        write!(f, "{}", tokens.join(" "))
    }
}

fn bad(text: &str, why: &str) -> Error {
    Error::Malformed(format!("Pauli string `{text}`: {why}"))
}

fn parse_letters(text: &str, spec: RingSpec) -> Result<PauliOperator> {
    let t = text.trim();
    let split = t.find(|c: char| matches!(c, 'I' | 'X' | 'Y' | 'Z')).ok_or_else(|| bad(text, "no slots"))?;
    let (prefix, letters) = t.split_at(split);
    let base = match prefix.trim() {
        "" | "+" | "+1" => 0,
        "+i" | "i" => 1,
        "-" | "-1" => 2,
        "-i" => 3,
        other => return Err(bad(text, &format!("unknown phase `{other}`"))),
    };
    let mut a = Vec::new();
    let mut b = Vec::new();
    let mut ys = 0;
    for c in letters.chars() {
        let (x, z) = match c {
            'I' => (0, 0),
            'X' => (1, 0),
            'Z' => (0, 1),
            'Y' => {
                ys += 1;
                (1, 1)
            }
            _ => return Err(bad(text, &format!("unexpected `{c}`"))),
        };
        a.push(x);
        b.push(z);
    }
    PauliOperator::new(spec, base + ys, &a, &b)
}

fn parse_exponent(s: &str, text: &str) -> Result<i64> {
    if s.is_empty() {
        return Ok(1);
    }
    let digits = s.strip_prefix('^').ok_or_else(|| bad(text, &format!("expected `^` in `{s}`")))?;
    digits.parse::<i64>().map_err(|_| bad(text, &format!("bad exponent `{digits}`")))
}

fn parse_slot(tok: &str, text: &str) -> Result<(i64, i64)> {
    if tok == "I" {
        return Ok((0, 0));
    }
    let (xpart, zpart) = match tok.find('Z') {
        Some(i) => (&tok[..i], Some(&tok[i + 1..])),
        None => (tok, None),
    };
    let x = match xpart.strip_prefix('X') {
        Some(rest) => parse_exponent(rest, text)?,
        None if xpart.is_empty() => 0,
        None => return Err(bad(text, &format!("bad slot `{tok}`"))),
    };
    let z = match zpart {
        Some(rest) => parse_exponent(rest, text)?,
        None => 0,
    };
    Ok((x, z))
}

fn parse_tokens(text: &str, spec: RingSpec) -> Result<PauliOperator> {
    let mut phase = 0i64;
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (i, tok) in text.split_whitespace().enumerate() {
        if let Some(rest) = tok.strip_prefix('w') {
            if i != 0 {
                return Err(bad(text, "the phase token must come first"));
            }
            phase = parse_exponent(rest, text)?;
            continue;
        }
        let (x, z) = parse_slot(tok, text)?;
        a.push(x);
        b.push(z);
    }
    if a.is_empty() {
        return Err(bad(text, "no slots"));
    }
    PauliOperator::new(spec, phase, &a, &b)
}

/// Parses either syntax. Over `Z/2` a string without `^` or inner spaces is read as letters.
pub fn parse_pauli(text: &str, spec: RingSpec) -> Result<PauliOperator> {
    let t = text.trim();
    if is_qubit(spec) && !t.contains('^') && !t.contains(char::is_whitespace) && !t.starts_with('w') {
        parse_letters(t, spec)
    } else {
        parse_tokens(t, spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring(d: u32) -> RingSpec {
        RingSpec::modular(d).unwrap()
    }

    #[test]
    fn letters() {
        let p = PauliOperator::new(ring(2), 0, &[1, 0], &[0, 1]).unwrap();
        assert_eq!(p.to_string(), "XZ");
        let y = parse_pauli("YZY", ring(2)).unwrap();
        assert_eq!((y.phase_exp(), y.a(), y.b()), (2, &[1, 0, 1][..], &[1, 1, 1][..]));
        assert_eq!(y.to_string(), "YZY");
        assert_eq!(parse_pauli("-iXY", ring(2)).unwrap().phase_exp(), 0);
        assert_eq!(parse_pauli("-1ZZ", ring(2)).unwrap(), parse_pauli("-ZZ", ring(2)).unwrap());
    }

    #[test]
    fn tokens() {
        let p = parse_pauli("w^2 X^1Z^2 I Z", ring(3)).unwrap();
        assert_eq!((p.phase_exp(), p.a(), p.b()), (2, &[1, 0, 0][..], &[2, 0, 1][..]));
        assert_eq!(p.to_string(), "w^2 X^1Z^2 I Z^1");
        assert_eq!(parse_pauli("X^1Z^1", ring(2)).unwrap().phase_exp(), 0);
    }

    #[test]
    fn malformed() {
        for s in ["", "XQ", "+2X", "X^aZ", "I w^1", "Z^"] {
            assert!(parse_pauli(s, ring(2)).is_err() || parse_pauli(s, ring(3)).is_err(), "{s}");
        }
        assert!(parse_pauli("Y^1", ring(3)).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]

        #[test]
        fn round_trip(d in prop_oneof![Just(2u32), Just(3), Just(4), Just(5)], l in 0i64..10,
                      a in prop::collection::vec(0i64..5, 1..6), seed in 0i64..1000) {
            let b: Vec<i64> = a.iter().enumerate().map(|(i, x)| (x * 7 + seed + i as i64) % 5).collect();
            let p = PauliOperator::new(ring(d), l, &a, &b).unwrap();
            prop_assert_eq!(parse_pauli(&p.to_string(), ring(d)).unwrap(), p);
        }
    }
}
