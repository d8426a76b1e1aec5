//! Compact representation of the palindromic-suffix start set.
//!
//! The starts of all palindromes ending at round `j` form a sorted set whose
//! consecutive differences never increase. Maximal runs of equal difference
//! are stored as arithmetic progressions, giving a list of `O(log j)`
//! triples.

use std::fmt;

use crate::error::{Error, Result};
use crate::naive;
use crate::text::Text;

/// Arithmetic progression `start, start + gap, ..., start + (count - 1) * gap`.
///
/// `gap` is the distance from `start` to its predecessor in the start set.
/// The first triple of a list has no predecessor; it stores a gap larger
/// than the round instead (see [`GapTriple::is_unbounded`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GapTriple {
    pub start: usize,
    pub gap: usize,
    pub count: usize,
}

impl GapTriple {
    pub const fn new(start: usize, gap: usize, count: usize) -> Self {
        GapTriple { start, gap, count }
    }

    /// Largest encoded position.
    pub fn last(&self) -> usize {
        self.start + (self.count - 1) * self.gap
    }

    /// Whether the gap stands in for "no predecessor" at round `round`.
    pub fn is_unbounded(&self, round: usize) -> bool {
        self.gap > round
    }

    pub fn positions(&self) -> impl Iterator<Item = usize> {
        let GapTriple { start, gap, count } = *self;
        (0..count).map(move |k| start + k * gap)
    }
}

impl fmt::Display for GapTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.start, self.gap, self.count)
    }
}

/// The triples describing the palindromic suffixes of `text[1..=round]`,
/// in decreasing order of gap.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GapList {
    pub triples: Vec<GapTriple>,
    pub round: usize,
}

impl GapList {
    pub fn new(triples: Vec<GapTriple>, round: usize) -> Self {
        GapList { triples, round }
    }

    pub fn empty() -> Self {
        GapList::default()
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// Number of encoded positions, i.e. the number of palindromic suffixes.
    pub fn position_count(&self) -> usize {
        self.triples.iter().map(|t| t.count).sum()
    }

    /// Gaps with the unbounded one reported as `None`.
    pub fn gaps(&self) -> Vec<Option<usize>> {
        self.triples.iter().map(|t| (!t.is_unbounded(self.round)).then_some(t.gap)).collect()
    }
}

impl fmt::Display for GapList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (idx, t) in self.triples.iter().enumerate() {
            if idx > 0 {
                f.write_str(", ")?;
            }
            if t.is_unbounded(self.round) {
                write!(f, "({}, inf, {})", t.start, t.count)?;
            } else {
                write!(f, "{t}")?;
            }
        }
        f.write_str(")")
    }
}

/// Expand a gap list into its sorted set of start positions.
pub fn decode_gap_list(g: &GapList) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(g.position_count());
    for t in &g.triples {
        if t.count == 0 || t.start == 0 || t.gap == 0 {
            return Err(Error::MalformedTriple { start: t.start, gap: t.gap, count: t.count });
        }
        out.extend(t.positions());
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Malformed(GapTriple),
    GapsNotDecreasing { index: usize, prev: usize, next: usize },
    FirstTripleCount(usize),
    FirstTripleBounded(usize),
    WrongGap { position: usize, stored: usize, actual: usize },
    PositionSet { decoded: Vec<usize>, expected: Vec<usize> },
    RoundOutOfRange { round: usize, len: usize },
}

/// Outcome of [`validate_gap_list`]: `Ok` or the first violation found.
pub type ValidationReport = std::result::Result<(), Violation>;

/// Check a gap list against the text it claims to describe.
///
/// Compares gaps, the first triple, each triple's stored gap against the
/// actual predecessor distance, and the decoded set against a direct
/// enumeration of palindromic suffixes.
pub fn validate_gap_list<S: Eq>(g: &GapList, t: &Text<S>) -> ValidationReport {
    if g.round > t.len() {
        return Err(Violation::RoundOutOfRange { round: g.round, len: t.len() });
    }
    for w in g.triples.windows(2).enumerate() {
        let (idx, pair) = w;
        if pair[1].gap >= pair[0].gap {
            return Err(Violation::GapsNotDecreasing { index: idx + 1, prev: pair[0].gap, next: pair[1].gap });
        }
    }
    if let Some(first) = g.triples.first() {
        if first.count != 1 {
            return Err(Violation::FirstTripleCount(first.count));
        }
        if !first.is_unbounded(g.round) {
            return Err(Violation::FirstTripleBounded(first.gap));
        }
    }
    let mut prev_last: Option<usize> = None;
    for t in &g.triples {
        if t.count == 0 || t.start == 0 || t.gap == 0 {
            return Err(Violation::Malformed(*t));
        }
        if let Some(prev) = prev_last {
            if t.start <= prev || t.start - prev != t.gap {
                return Err(Violation::WrongGap {
                    position: t.start,
                    stored: t.gap,
                    actual: t.start.saturating_sub(prev),
                });
            }
        }
        prev_last = Some(t.last());
    }
    let decoded =
        decode_gap_list(g).map_err(|_| Violation::PositionSet { decoded: Vec::new(), expected: Vec::new() })?;
    let expected = if g.round == 0 {
        Vec::new()
    } else {
        naive::suffix_palindrome_starts(t, g.round).expect("round checked above")
    };
    if decoded != expected {
        return Err(Violation::PositionSet { decoded, expected });
    }
    Ok(())
}
