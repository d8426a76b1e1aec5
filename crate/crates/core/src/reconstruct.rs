use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::text::{PlRecord, Text};

/// One factor: `length` symbols beginning at 1-based `start`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Part {
    pub start: usize,
    pub length: usize,
}

impl Part {
    pub fn end(&self) -> usize {
        self.start + self.length - 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct Factorization {
    pub parts: Vec<Part>,
}

impl Factorization {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Borrow each part's symbols from `t`.
    pub fn slices<'a, S>(&'a self, t: &'a Text<S>) -> impl Iterator<Item = &'a [S]> + 'a {
        self.parts.iter().map(move |p| t.slice(p.start, p.end()))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, p) in self.parts.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "[{}..{}]", p.start, p.end())?;
        }
        Ok(())
    }
}

/// Follow the last-palindrome lengths back from the end of `t`.
///
/// `records` must come from [`crate::pl_fast`] or [`crate::pl_quadratic`]
/// on the same text. Each recovered part is checked to be a palindrome.
pub fn factorize<S: Eq>(t: &Text<S>, records: &[PlRecord]) -> Result<Factorization> {
    let n = t.len();
    if records.len() != n + 1 {
        return Err(Error::CorruptFactorization(format!("{} records for a text of length {n}", records.len())));
    }
    let mut parts = Vec::with_capacity(records[n].pl);
    let mut end = n;
    while end > 0 {
        let len = records[end].last_len;
        if len == 0 || len > end {
            return Err(Error::CorruptFactorization(format!("bad back-pointer {len} at {end}")));
        }
        let part = Part { start: end - len + 1, length: len };
        if !reads_same_reversed(t.slice(part.start, part.end())) {
            return Err(Error::CorruptFactorization(format!(
                "part {}..{} is not a palindrome",
                part.start,
                part.end()
            )));
        }
        parts.push(part);
        end -= len;
    }
    parts.reverse();
    if parts.len() != records[n].pl {
        return Err(Error::CorruptFactorization(format!(
            "{} parts but recorded length {}",
            parts.len(),
            records[n].pl
        )));
    }
    Ok(Factorization { parts })
}

/// Whether `f` tiles `t` exactly with `claimed_pl` palindromes.
pub fn verify_factorization<S: Eq>(t: &Text<S>, f: &Factorization, claimed_pl: usize) -> bool {
    if f.parts.len() != claimed_pl {
        return false;
    }
    let mut next = 1;
    for p in &f.parts {
        if p.start != next || p.length == 0 || p.end() > t.len() {
            return false;
        }
        if !reads_same_reversed(t.slice(p.start, p.end())) {
            return false;
        }
        next = p.end() + 1;
    }
    next == t.len() + 1
}

fn reads_same_reversed<S: Eq>(s: &[S]) -> bool {
    s.iter().eq(s.iter().rev())
}
