//! Plain-text and JSON forms of a code.
//!
//! ```text
//! # comment
//! ring=F2 n=3 k=3
//! 1 0 1 | 0 1 0
//! 0 1 1 | 1 0 0
//! 0 0 0 | 1 1 1
//! ```
//!
//! With `layout=interleaved` in the header the rows are read as `(a_1 b_1 | … | a_n b_n)`.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::RingSpec;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

use super::code::StabilizerCode;
use super::vector::gamma;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Layout {
    #[default]
    Standard,
    Interleaved,
}

/// Serializable mirror of the text format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub ring: String,
    pub n: usize,
    pub k: usize,
    #[serde(default)]
    pub layout: Layout,
    pub generators: Vec<Vec<i64>>,
}

impl CodeFile {
    pub fn from_code(code: &StabilizerCode) -> Self {
        CodeFile {
            ring: code.spec().to_string(),
            n: code.n(),
            k: code.k(),
            layout: Layout::Standard,
            generators: code.generators().iter_rows().map(|r| r.iter().map(|&x| x as i64).collect()).collect(),
        }
    }

    pub fn to_code(&self) -> Result<StabilizerCode> {
        let spec: RingSpec = self.ring.parse()?;
        if self.generators.len() != self.k {
            return Err(Error::Malformed(format!("header says k={} but {} rows follow", self.k, self.generators.len())));
        }
        if self.n == 0 {
            return Err(Error::Malformed("n must be positive".into()));
        }
        if let Some(r) = self.generators.iter().find(|r| r.len() != 2 * self.n) {
            return Err(Error::Malformed(format!("row of length {} where 2n = {}", r.len(), 2 * self.n)));
        }
        let m = Matrix::from_rows_with_cols(spec, &self.generators, 2 * self.n)?;
        match self.layout {
            Layout::Standard => StabilizerCode::new(m),
            Layout::Interleaved => StabilizerCode::from_interleaved(&m),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("code files always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Malformed(format!("bad code JSON: {e}")))
    }

    /// Renders the text format, in the file's own layout.
    pub fn to_text(&self) -> String {
        let mut out = format!("ring={} n={} k={}", self.ring, self.n, self.k);
        if self.layout == Layout::Interleaved {
            out.push_str(" layout=interleaved");
        }
        out.push('\n');
        for r in &self.generators {
            let cells: Vec<String> = r.iter().map(i64::to_string).collect();
            match self.layout {
                Layout::Standard => {
                    out.push_str(&cells[..self.n].join(" "));
                    out.push_str(" | ");
                    out.push_str(&cells[self.n..].join(" "));
                }
                Layout::Interleaved => {
                    let pairs: Vec<String> = cells.chunks(2).map(|p| p.join(" ")).collect();
                    out.push_str(&pairs.join(" | "));
                }
            }
            out.push('\n');
        }
        out
    }

    /// The same code written in interleaved coordinates.
    pub fn interleaved(code: &StabilizerCode) -> Self {
        let mut f = Self::from_code(code);
        f.layout = Layout::Interleaved;
        f.generators = code
            .generators()
            .iter_rows()
            .map(|r| gamma(r).into_iter().map(|x| x as i64).collect())
            .collect();
        f
    }
}

impl FromStr for CodeFile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Malformed("empty code file".into()))?;
        let (mut ring, mut n, mut k, mut layout) = (None, None, None, Layout::Standard);
        for field in header.split_whitespace() {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::Malformed(format!("header field `{field}` is not key=value")))?;
            let num = || value.parse::<usize>().map_err(|_| Error::Malformed(format!("bad number in `{field}`")));
            match key {
                "ring" => ring = Some(value.to_string()),
                "n" => n = Some(num()?),
                "k" => k = Some(num()?),
                "layout" => {
                    layout = match value {
                        "interleaved" => Layout::Interleaved,
                        "standard" => Layout::Standard,
                        _ => return Err(Error::Malformed(format!("unknown layout `{value}`"))),
                    }
                }
                _ => return Err(Error::Malformed(format!("unknown header key `{key}`"))),
            }
        }
        let missing = |what: &str| Error::Malformed(format!("header lacks `{what}=`"));
        let ring = ring.ok_or_else(|| missing("ring"))?;
        let n = n.ok_or_else(|| missing("n"))?;
        let k = k.ok_or_else(|| missing("k"))?;
        let generators = lines
            .map(|l| {
                l.replace('|', " ")
                    .split_whitespace()
                    .map(|t| t.parse::<i64>().map_err(|_| Error::Malformed(format!("bad entry `{t}`"))))
                    .collect::<Result<Vec<i64>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CodeFile { ring, n, k, layout, generators })
    }
}

/// Reads a code from either the text format or JSON.
pub fn parse_code(s: &str) -> Result<StabilizerCode> {
    let file = if s.trim_start().starts_with('{') { CodeFile::from_json(s)? } else { s.parse::<CodeFile>()? };
    file.to_code()
}

#[cfg(test)]
mod tests {
    use super::*;

    const EX11: &str = "# three qubits\nring=F2 n=3 k=3\n1 0 1 | 0 1 0\n0 1 1 | 1 0 0\n0 0 0 | 1 1 1\n";

    #[test]
    fn text_round_trip() {
        let c = parse_code(EX11).unwrap();
        assert_eq!(c.k(), 3);
        let text = CodeFile::from_code(&c).to_text();
        assert_eq!(parse_code(&text).unwrap(), c);
        assert_eq!(text, c.to_string());
    }

    #[test]
    fn json_round_trip() {
        let c = parse_code(EX11).unwrap();
        let json = CodeFile::from_code(&c).to_json();
        assert_eq!(parse_code(&json).unwrap(), c);
    }

    #[test]
    fn interleaved_round_trip() {
        let c = parse_code(EX11).unwrap();
        let f = CodeFile::interleaved(&c);
        assert!(f.to_text().contains("layout=interleaved"));
        assert_eq!(parse_code(&f.to_text()).unwrap(), c);
    }

    #[test]
    fn z4_header() {
        let c = parse_code("ring=Z/4 n=1 k=1\n2 | 2\n").unwrap();
        assert_eq!(c.spec(), RingSpec::modular(4).unwrap());
        assert_eq!(c.size(), 2);
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_code("").is_err());
        assert!(parse_code("ring=F2 n=1 k=2\n1 0\n").is_err());
        assert!(parse_code("ring=F2 n=1 k=1\n1 0 1\n").is_err());
        assert!(parse_code("ring=F2 n=1 k=1\n1 x\n").is_err());
        assert!(parse_code("ring=Q n=1 k=1\n1 0\n").is_err());
        assert!(parse_code("ring=F2 n=1\n").is_err());
    }
}
