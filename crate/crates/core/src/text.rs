use std::ops::Index;

use crate::error::{Error, Result};

/// An input string addressed by 1-based positions `1..=len`.
///
/// Symbols only need equality; bytes, integers and chars all work.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Text<S> {
    symbols: Vec<S>,
}

impl<S> Text<S> {
    pub fn new(symbols: Vec<S>) -> Self {
        Text { symbols }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Symbol at 1-based position `pos`, if in range.
    pub fn get(&self, pos: usize) -> Option<&S> {
        pos.checked_sub(1).and_then(|p| self.symbols.get(p))
    }

    /// Symbols `from..=to` (1-based, inclusive). Empty when `from > to`.
    pub fn slice(&self, from: usize, to: usize) -> &[S] {
        if from > to {
            return &[];
        }
        &self.symbols[from - 1..to]
    }

    pub fn prefix(&self, len: usize) -> &[S] {
        &self.symbols[..len]
    }

    pub fn as_slice(&self) -> &[S] {
        &self.symbols
    }

    pub fn into_inner(self) -> Vec<S> {
        self.symbols
    }

    pub fn push(&mut self, symbol: S) {
        self.symbols.push(symbol);
    }

    pub(crate) fn check_pos(&self, pos: usize) -> Result<()> {
        if pos == 0 || pos > self.len() {
            return Err(Error::Range { pos, len: self.len() });
        }
        Ok(())
    }
}

impl<S> Index<usize> for Text<S> {
    type Output = S;

    /// 1-based indexing; panics on position 0 or past the end.
    fn index(&self, pos: usize) -> &S {
        &self.symbols[pos - 1]
    }
}

impl<S> From<Vec<S>> for Text<S> {
    fn from(symbols: Vec<S>) -> Self {
        Text::new(symbols)
    }
}

impl From<&str> for Text<u8> {
    fn from(s: &str) -> Self {
        Text::new(s.as_bytes().to_vec())
    }
}

impl From<&[u8]> for Text<u8> {
    fn from(s: &[u8]) -> Self {
        Text::new(s.to_vec())
    }
}

impl<S> FromIterator<S> for Text<S> {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        Text::new(iter.into_iter().collect())
    }
}

/// Palindromic length of a prefix together with the length of the last
/// palindrome in one minimum factorization of it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct PlRecord {
    pub pl: usize,
    pub last_len: usize,
}

impl PlRecord {
    pub const EMPTY: PlRecord = PlRecord { pl: 0, last_len: 0 };
}

/// Extract the bare palindromic lengths from a record array.
pub fn pl_values(records: &[PlRecord]) -> Vec<usize> {
    records.iter().map(|r| r.pl).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_based_access() {
        let t = Text::from("abc");
        assert_eq!(t[1], b'a');
        assert_eq!(t[3], b'c');
        assert_eq!(t.get(0), None);
        assert_eq!(t.get(4), None);
        assert_eq!(t.slice(2, 3), b"bc");
        assert_eq!(t.slice(3, 2), b"");
    }

    #[test]
    fn range_check() {
        let t = Text::from("ab");
        assert!(t.check_pos(1).is_ok());
        assert!(matches!(t.check_pos(0), Err(Error::Range { pos: 0, len: 2 })));
        assert!(matches!(t.check_pos(3), Err(Error::Range { pos: 3, len: 2 })));
    }
}
