//! Reference algorithms: the incremental quadratic algorithm and an
//! independent table-driven oracle.

use crate::error::{Error, Result};
use crate::text::{PlRecord, Text};

/// Default length cap for [`pl_oracle`]; its table is quadratic in memory.
pub const DEFAULT_ORACLE_CAP: usize = 4096;

/// Whether `t[i..=j]` is a palindrome. `i > j` denotes the empty string.
pub fn is_palindrome<S: Eq>(t: &Text<S>, i: usize, j: usize) -> Result<bool> {
    t.check_pos(i)?;
    t.check_pos(j)?;
    Ok(is_palindrome_slice(t.slice(i, j)))
}

fn is_palindrome_slice<S: Eq>(s: &[S]) -> bool {
    let (mut lo, mut hi) = (0, s.len());
    while lo + 1 < hi {
        if s[lo] != s[hi - 1] {
            return false;
        }
        lo += 1;
        hi -= 1;
    }
    true
}

/// All `i <= j` such that `t[i..=j]` is a palindrome, ascending.
///
/// Checks every candidate directly, so it costs `O(j^2)`.
pub fn suffix_palindrome_starts<S: Eq>(t: &Text<S>, j: usize) -> Result<Vec<usize>> {
    t.check_pos(j)?;
    Ok((1..=j).filter(|&i| is_palindrome_slice(t.slice(i, j))).collect())
}

/// Incremental maintenance of the start set, one symbol per round.
///
/// Each round keeps the starts `i` of the previous round with
/// `t[i - 1] == t[j]`, shifted left by one, then adds `j - 1` when the last
/// two symbols match and finally `j` itself.
#[derive(Clone, Debug)]
pub struct SuffixPalindromes<S> {
    text: Vec<S>,
    starts: Vec<usize>,
    scratch: Vec<usize>,
}

impl<S: Eq> SuffixPalindromes<S> {
    pub fn new() -> Self {
        SuffixPalindromes { text: Vec::new(), starts: Vec::new(), scratch: Vec::new() }
    }

    pub fn round(&self) -> usize {
        self.text.len()
    }

    /// Append a symbol and return the updated start set.
    pub fn push(&mut self, c: S) -> &[usize] {
        self.text.push(c);
        let j = self.text.len();
        let at = |p: usize| &self.text[p - 1];
        self.scratch.clear();
        for &i in &self.starts {
            if i > 1 && at(i - 1) == at(j) {
                self.scratch.push(i - 1);
            }
        }
        if j > 1 && at(j - 1) == at(j) {
            self.scratch.push(j - 1);
        }
        self.scratch.push(j);
        std::mem::swap(&mut self.starts, &mut self.scratch);
        &self.starts
    }

    pub fn starts(&self) -> &[usize] {
        &self.starts
    }
}

impl<S: Eq> Default for SuffixPalindromes<S> {
    fn default() -> Self {
        Self::new()
    }
}

/// Online form of the quadratic algorithm.
#[derive(Clone, Debug)]
pub struct QuadraticState<S> {
    set: SuffixPalindromes<S>,
    records: Vec<PlRecord>,
    elements: u64,
}

impl<S: Eq> QuadraticState<S> {
    pub fn new() -> Self {
        QuadraticState { set: SuffixPalindromes::new(), records: vec![PlRecord::EMPTY], elements: 0 }
    }

    /// Append a symbol and return the palindromic length so far.
    pub fn push(&mut self, c: S) -> usize {
        let starts = self.set.push(c);
        let j = self.records.len();
        // ascending starts: the longest palindrome wins ties
        let mut best = PlRecord { pl: usize::MAX, last_len: 0 };
        for &i in starts {
            let cand = self.records[i - 1].pl + 1;
            if cand < best.pl {
                best = PlRecord { pl: cand, last_len: j - i + 1 };
            }
        }
        self.elements += starts.len() as u64;
        self.records.push(best);
        best.pl
    }

    /// Start positions of the palindromic suffixes of the current text.
    pub fn starts(&self) -> &[usize] {
        self.set.starts()
    }

    pub fn records(&self) -> &[PlRecord] {
        &self.records
    }

    pub fn into_records(self) -> Vec<PlRecord> {
        self.records
    }

    /// Set elements visited by the minimisation loop so far.
    pub fn elements(&self) -> u64 {
        self.elements
    }
}

impl<S: Eq> Default for QuadraticState<S> {
    fn default() -> Self {
        Self::new()
    }
}

/// Output of [`pl_quadratic_counted`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticRun {
    pub records: Vec<PlRecord>,
    /// Start positions visited by the minimisation loop, summed over rounds.
    pub elements: u64,
}

/// The quadratic-time palindromic length algorithm; `records[j]` describes
/// the prefix of length `j`.
pub fn pl_quadratic<S: Eq + Clone>(t: &Text<S>) -> Vec<PlRecord> {
    pl_quadratic_counted(t).records
}

/// [`pl_quadratic`] with the number of processed set elements.
pub fn pl_quadratic_counted<S: Eq + Clone>(t: &Text<S>) -> QuadraticRun {
    let mut state = QuadraticState::new();
    for c in t.as_slice() {
        state.push(c.clone());
    }
    let elements = state.elements();
    QuadraticRun { records: state.into_records(), elements }
}

/// Table of `pal(i, j)` for every pair of positions.
pub struct PalTable {
    n: usize,
    cells: Vec<bool>,
}

impl PalTable {
    pub fn build<S: Eq>(t: &Text<S>) -> Self {
        let n = t.len();
        let mut table = PalTable { n, cells: vec![false; n * n] };
        for len in 1..=n {
            for i in 1..=n + 1 - len {
                let j = i + len - 1;
                let v = t[i] == t[j] && table.get(i + 1, j - 1);
                table.cells[(i - 1) * n + (j - 1)] = v;
            }
        }
        table
    }

    /// `pal(i, j)`; true for the empty range `i > j`.
    pub fn get(&self, i: usize, j: usize) -> bool {
        if i > j {
            return true;
        }
        self.cells[(i - 1) * self.n + (j - 1)]
    }
}

/// Textbook dynamic program over a full palindrome table. Shares nothing
/// with the incremental algorithms and is used to check them.
pub fn pl_oracle<S: Eq>(t: &Text<S>, cap: usize) -> Result<Vec<PlRecord>> {
    let n = t.len();
    if n > cap {
        return Err(Error::OracleCap { len: n, cap });
    }
    let table = PalTable::build(t);
    let mut records = vec![PlRecord::EMPTY; n + 1];
    for j in 1..=n {
        let mut best = PlRecord { pl: usize::MAX, last_len: 0 };
        for i in 1..=j {
            if table.get(i, j) && records[i - 1].pl + 1 < best.pl {
                best = PlRecord { pl: records[i - 1].pl + 1, last_len: j - i + 1 };
            }
        }
        records[j] = best;
    }
    Ok(records)
}
