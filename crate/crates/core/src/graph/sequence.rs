use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A degree sequence `d_1 >= d_2 >= ... >= d_p`.
///
/// Any multiset of naturals is accepted; parity and realisability are
/// queried separately rather than rejected at construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct DegreeSequence {
    entries: Vec<usize>,
}

impl From<Vec<usize>> for DegreeSequence {
    fn from(entries: Vec<usize>) -> Self {
        DegreeSequence::new(entries)
    }
}

impl From<DegreeSequence> for Vec<usize> {
    fn from(s: DegreeSequence) -> Self {
        s.entries
    }
}

impl DegreeSequence {
    pub fn new(mut entries: Vec<usize>) -> Self {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence { entries }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Number of entries, i.e. the order `p` of a realisation.
    pub fn order(&self) -> usize {
        self.entries.len()
    }

    /// Number of entries equal to 3.
    pub fn threes(&self) -> usize {
        self.entries.iter().filter(|&&d| d == 3).count()
    }

    pub fn sum(&self) -> usize {
        self.entries.iter().sum()
    }

    pub fn has_even_sum(&self) -> bool {
        self.sum().is_multiple_of(2)
    }

    pub fn max(&self) -> Option<usize> {
        self.entries.first().copied()
    }

    /// Rim chord-degrees `d_2 - 3, ..., d_p - 3` obtained by removing one
    /// apex entry of value `p - 1`. `None` when there is no such entry or
    /// some remaining entry is below 3.
    pub fn chord_degrees(&self) -> Option<Vec<usize>> {
        let p = self.order();
        if p < 4 || self.entries[0] != p - 1 {
            return None;
        }
        self.entries[1..]
            .iter()
            .map(|&d| d.checked_sub(3))
            .collect()
    }

    /// Expanded comma form, e.g. `9,6,6,6,4,4,4,3,3,3`.
    pub fn to_comma_string(&self) -> String {
        let parts: Vec<String> = self.entries.iter().map(|d| d.to_string()).collect();
        parts.join(",")
    }
}

/// Compact power form, e.g. `14,5^9,3^5`.
impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.entries.len() {
            let d = self.entries[i];
            let run = self.entries[i..].iter().take_while(|&&e| e == d).count();
            if !first {
                f.write_str(",")?;
            }
            first = false;
            if run > 1 {
                write!(f, "{d}^{run}")?;
            } else {
                write!(f, "{d}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// Accepts comma lists (`9,6,6,6,4`) and power forms (`9 6^3 4^3 3^3`,
/// `14,5^9,3^5`); commas and whitespace both separate tokens.
impl FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = |msg: String| Error::SequenceParse(msg);
        let mut entries = Vec::new();
        for token in text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            let (base, power) = match token.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (token, "1"),
            };
            let d: usize = base
                .parse()
                .map_err(|_| bad(format!("'{token}' is not a degree")))?;
            let k: usize = power
                .parse()
                .map_err(|_| bad(format!("'{token}' has a bad exponent")))?;
            if k == 0 {
                return Err(bad(format!("'{token}' has a zero exponent")));
            }
            if entries.len() + k > 4096 {
                return Err(bad("sequence too long".into()));
            }
            entries.extend(std::iter::repeat_n(d, k));
        }
        if entries.is_empty() {
            return Err(bad("empty sequence".into()));
        }
        Ok(DegreeSequence::new(entries))
    }
}
