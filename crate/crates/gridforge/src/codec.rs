//! Dowker-Thistlethwaite codes: parsing, validation, canonical form.
//!
//! A code with `c` crossings lists, for each odd passage `1, 3, ..., 2c-1` in
//! order, the even passage met at the same crossing. The entry is negative
//! exactly when the strand passes under at that even passage. An alternating
//! diagram therefore has entries of one uniform sign, and this crate only
//! accepts those; the all-negative form is the mirror image of the
//! all-positive one.

use crate::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// A validated Dowker-Thistlethwaite code. The empty code is the unknot.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DtCode {
    entries: Vec<i64>,
}

impl DtCode {
    /// Validate a raw entry list: nonzero even entries of one sign whose
    /// magnitudes are exactly `2, 4, ..., 2c` in some order.
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        let c = entries.len();
        let max = 2 * c as i64;
        let mut seen = vec![false; c];
        let mut sign = 0i64;
        for &v in &entries {
            if v == 0 {
                return Err(Error::ZeroEntry);
            }
            if v % 2 != 0 {
                return Err(Error::OddEntry(v));
            }
            if sign == 0 {
                sign = v.signum();
            } else if v.signum() != sign {
                return Err(Error::MixedSigns);
            }
            let m = v.abs();
            if m > max {
                return Err(Error::EntryOutOfRange {
                    found: v,
                    crossings: c,
                    max,
                });
            }
            let idx = (m / 2 - 1) as usize;
            if seen[idx] {
                return Err(Error::DuplicateEntry(m));
            }
            seen[idx] = true;
        }
        Ok(Self { entries })
    }

    pub fn unknot() -> Self {
        Self {
            entries: Vec::new(),
        }
    }

    pub fn is_unknot(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn crossings(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// The same pairing with every entry positive. For an all-negative code
    /// this is the mirror image.
    pub fn to_positive(&self) -> Self {
        Self {
            entries: self.entries.iter().map(|v| v.abs()).collect(),
        }
    }

    /// Partner lookup for all passages: `table[p]` is the passage paired with
    /// `p`; index 0 is unused.
    pub(crate) fn partner_table(&self) -> Vec<usize> {
        let c = self.crossings();
        let mut table = vec![0usize; 2 * c + 1];
        for (k, &v) in self.entries.iter().enumerate() {
            let odd = 2 * k + 1;
            let even = v.unsigned_abs() as usize;
            table[odd] = even;
            table[even] = odd;
        }
        table
    }

    /// The passage paired with `p` (1-based, `p <= 2c`).
    pub fn partner(&self, p: usize) -> usize {
        assert!(p >= 1 && p <= 2 * self.crossings(), "passage out of range");
        if p % 2 == 1 {
            self.entries[(p - 1) / 2].unsigned_abs() as usize
        } else {
            self.entries
                .iter()
                .position(|v| v.unsigned_abs() as usize == p)
                .map(|k| 2 * k + 1)
                .unwrap()
        }
    }

    /// Whether the strand is on top at passage `p`.
    pub fn is_over(&self, p: usize) -> bool {
        assert!(p >= 1 && p <= 2 * self.crossings(), "passage out of range");
        if p % 2 == 0 {
            self.entries
                .iter()
                .find(|v| v.unsigned_abs() as usize == p)
                .map(|&v| v > 0)
                .unwrap()
        } else {
            !self.is_over(self.partner(p))
        }
    }

    /// Least code describing the same pairing under any relabeling of the
    /// passages: all `2c` starting points in both travel directions, entries
    /// taken positive. Mirror images share their canonical form, which is what
    /// lets verification compare knots up to mirror.
    pub fn canonical(&self) -> Self {
        let c = self.crossings();
        if c == 0 {
            return Self::unknot();
        }
        let n = 2 * c;
        let partner = self.partner_table();
        let mut best: Option<Vec<i64>> = None;
        for start in 1..=n {
            for dir in [1i64, -1] {
                let orig = |k: usize| -> usize {
                    (start as i64 - 1 + dir * (k as i64 - 1)).rem_euclid(n as i64) as usize + 1
                };
                let mut new_label = vec![0usize; n + 1];
                for k in 1..=n {
                    new_label[orig(k)] = k;
                }
                let mut cand = Vec::with_capacity(c);
                for k in 1..=c {
                    let lbl = new_label[partner[orig(2 * k - 1)]] as i64;
                    // paired passages always sit at opposite parities, and a
                    // relabeling shifts every parity by the same amount
                    debug_assert!(lbl % 2 == 0);
                    cand.push(lbl);
                }
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        Self {
            entries: best.unwrap(),
        }
    }
}

impl FromStr for DtCode {
    type Err = Error;

    /// Entries separated by whitespace and/or commas. The empty string is the
    /// unknot.
    fn from_str(s: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for tok in s
            .split(|ch: char| ch.is_whitespace() || ch == ',')
            .filter(|t| !t.is_empty())
        {
            entries.push(
                tok.parse::<i64>()
                    .map_err(|_| Error::BadToken(tok.to_string()))?,
            );
        }
        Self::new(entries)
    }
}

impl fmt::Display for DtCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.entries {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parse a knot table: one `name entries...` per line, `#` starts a comment,
/// blank lines are skipped. A name with no entries is the unknot.
pub fn parse_table(text: &str) -> Result<Vec<(String, DtCode)>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let mut toks = line.split_whitespace();
        let name = toks.next().unwrap().to_string();
        let rest = toks.collect::<Vec<_>>().join(" ");
        let code = rest.parse::<DtCode>().map_err(|e| Error::Table {
            line: i + 1,
            source: Box::new(e),
        })?;
        out.push((name, code));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_roundtrip() {
        let code: DtCode = "4 6 2".parse().unwrap();
        assert_eq!(code.crossings(), 3);
        assert_eq!(code.to_string(), "4 6 2");
        assert_eq!(code.to_string().parse::<DtCode>().unwrap(), code);
        let commas: DtCode = "4,6,2".parse().unwrap();
        assert_eq!(commas, code);
        assert!(DtCode::from_str("").unwrap().is_unknot());
    }

    #[test]
    fn validation_errors() {
        assert!(matches!("4 5 2".parse::<DtCode>(), Err(Error::OddEntry(5))));
        assert!(matches!("4 0 2".parse::<DtCode>(), Err(Error::ZeroEntry)));
        assert!(matches!(
            "4 -6 2".parse::<DtCode>(),
            Err(Error::MixedSigns)
        ));
        assert!(matches!(
            "4 4 2".parse::<DtCode>(),
            Err(Error::DuplicateEntry(4))
        ));
        assert!(matches!(
            "4 8 2".parse::<DtCode>(),
            Err(Error::EntryOutOfRange { found: 8, .. })
        ));
        assert!(matches!("4 6 x".parse::<DtCode>(), Err(Error::BadToken(_))));
    }

    #[test]
    fn pairing_and_sides() {
        let code: DtCode = "4 6 2".parse().unwrap();
        assert_eq!(code.partner(1), 4);
        assert_eq!(code.partner(4), 1);
        assert_eq!(code.partner(3), 6);
        assert_eq!(code.partner(5), 2);
        // positive entries put the strand on top at even passages
        for p in [2, 4, 6] {
            assert!(code.is_over(p));
        }
        for p in [1, 3, 5] {
            assert!(!code.is_over(p));
        }
        let neg: DtCode = "-4 -6 -2".parse().unwrap();
        for p in [2, 4, 6] {
            assert!(!neg.is_over(p));
        }
    }

    #[test]
    fn canonical_fixes_relabeling_and_mirror() {
        let code: DtCode = "4 6 2".parse().unwrap();
        let canon = code.canonical();
        assert_eq!(canon.to_string(), "4 6 2");
        let neg: DtCode = "-4 -6 -2".parse().unwrap();
        assert_eq!(neg.canonical(), canon);
        // the same pairing as "4 8 10 2 6", read starting from passage 3
        let a: DtCode = "4 8 10 2 6".parse().unwrap();
        let b: DtCode = "6 8 10 4 2".parse().unwrap();
        assert_eq!(a.canonical(), b.canonical());
        assert_ne!(a.canonical(), canon);
        assert_eq!(DtCode::unknot().canonical(), DtCode::unknot());
    }

    #[test]
    fn canonical_is_idempotent() {
        for s in ["4 6 2", "4 6 8 2", "4 8 10 2 6", "6 8 10 2 4"] {
            let canon = s.parse::<DtCode>().unwrap().canonical();
            assert_eq!(canon.canonical(), canon);
        }
    }

    #[test]
    fn table_parsing() {
        let text = "# comment line\n3_1 4 6 2\n\n4_1 4 6 8 2  # trailing note\n";
        let table = parse_table(text).unwrap();
        assert_eq!(table.len(), 2);
        assert_eq!(table[0].0, "3_1");
        assert_eq!(table[1].1.crossings(), 4);
        let bad = parse_table("3_1 4 5 2");
        assert!(matches!(bad, Err(Error::Table { line: 1, .. })));
    }
}
