//! The `O(n log n)` palindromic length algorithm, batch and online.
//!
//! For each triple `(i, d, k)` of the current gap list the minimum of
//! `pl[p - 1] + 1` over its `k` starts is needed. When `k > 1` the first
//! `k - 1` starts formed the same triple `d` rounds ago, and their minimum
//! was stored in the GPL array at `i - d`, the predecessor of `i`. That
//! slot is not touched in between, so each partition minimum costs `O(1)`.

use crate::gaps::{GapList, GapTriple};
use crate::text::{PlRecord, Text};
use crate::update::Scratch;

/// Memoized partition minimum.
///
/// Stores the start of the last palindrome rather than its length: the slot
/// is read back `d` rounds later when every palindrome in the partition has
/// grown by `d`, while the starts stay put.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GplSlot {
    pub pl: usize,
    pub last_start: usize,
    #[cfg(debug_assertions)]
    pub written_round: usize,
    #[cfg(debug_assertions)]
    pub written_gap: usize,
}

impl GplSlot {
    const UNSET: GplSlot = GplSlot {
        pl: usize::MAX,
        last_start: 0,
        #[cfg(debug_assertions)]
        written_round: 0,
        #[cfg(debug_assertions)]
        written_gap: 0,
    };
}

#[derive(Clone, Copy)]
struct Candidate {
    pl: usize,
    start: usize,
}

/// An online factorization session. Feed symbols with [`FastState::push`].
#[derive(Clone, Debug)]
pub struct FastState<S> {
    text: Vec<S>,
    gaps: Vec<GapTriple>,
    scratch: Scratch,
    pl: Vec<PlRecord>,
    gpl: Vec<GplSlot>,
    triples_processed: u64,
    round_triples: u64,
}

impl<S: Eq> FastState<S> {
    pub fn new() -> Self {
        Self::with_capacity(0)
    }

    pub fn with_capacity(n: usize) -> Self {
        let mut pl = Vec::with_capacity(n + 1);
        pl.push(PlRecord::EMPTY);
        let mut gpl = Vec::with_capacity(n + 1);
        gpl.push(GplSlot::UNSET);
        FastState {
            text: Vec::with_capacity(n),
            gaps: Vec::new(),
            scratch: Scratch::default(),
            pl,
            gpl,
            triples_processed: 0,
            round_triples: 0,
        }
    }

    /// Append one symbol and return the palindromic length of the text so far.
    pub fn push(&mut self, c: S) -> usize {
        self.text.push(c);
        self.gpl.push(GplSlot::UNSET);
        let j = self.text.len();
        let touched = self.scratch.advance(&mut self.gaps, &self.text, j);
        let record = self.pl_step();
        self.round_triples = (touched + self.gaps.len()) as u64;
        self.triples_processed += self.round_triples;
        record.pl
    }

    /// Compute `pl[j]` from the gap list of round `j`.
    fn pl_step(&mut self) -> PlRecord {
        let j = self.text.len();
        let mut best = Candidate { pl: usize::MAX, start: 0 };
        for t in &self.gaps {
            let r = t.last();
            let mut m = Candidate { pl: self.pl[r - 1].pl + 1, start: r };
            if t.count > 1 {
                assert!(t.gap < t.start, "partition predecessor out of range: {t} at round {j}");
                let slot = &self.gpl[t.start - t.gap];
                #[cfg(debug_assertions)]
                assert!(
                    slot.written_round + t.gap == j && slot.written_gap == t.gap,
                    "GPL[{}] read at round {j} with gap {} was written at round {} with gap {}",
                    t.start - t.gap,
                    t.gap,
                    slot.written_round,
                    slot.written_gap,
                );
                if slot.pl < m.pl {
                    m = Candidate { pl: slot.pl, start: slot.last_start };
                }
            }
            if t.gap <= t.start {
                self.gpl[t.start - t.gap] = GplSlot {
                    pl: m.pl,
                    last_start: m.start,
                    #[cfg(debug_assertions)]
                    written_round: j,
                    #[cfg(debug_assertions)]
                    written_gap: t.gap,
                };
            }
            if m.pl < best.pl {
                best = m;
            }
        }
        let record = PlRecord { pl: best.pl, last_len: j + 1 - best.start };
        self.pl.push(record);
        record
    }
}

impl<S> FastState<S> {
    pub fn round(&self) -> usize {
        self.text.len()
    }

    /// Palindromic length of the text pushed so far.
    pub fn pl(&self) -> usize {
        self.pl[self.pl.len() - 1].pl
    }

    /// Records for every prefix, indexed by prefix length.
    pub fn records(&self) -> &[PlRecord] {
        &self.pl
    }

    pub fn into_records(self) -> Vec<PlRecord> {
        self.pl
    }

    pub fn text(&self) -> &[S] {
        &self.text
    }

    pub fn gap_triples(&self) -> &[GapTriple] {
        &self.gaps
    }

    pub fn gap_list(&self) -> GapList {
        GapList::new(self.gaps.clone(), self.round())
    }

    /// Number of palindromic suffixes of the current text.
    pub fn suffix_palindromes(&self) -> usize {
        self.gaps.iter().map(|t| t.count).sum()
    }

    /// Triples touched over the whole session.
    pub fn triples_processed(&self) -> u64 {
        self.triples_processed
    }

    /// Triples touched by the most recent [`FastState::push`].
    pub fn round_triples(&self) -> u64 {
        self.round_triples
    }

    /// GPL slot at `index`, `None` if never written or out of range.
    pub fn gpl_slot(&self, index: usize) -> Option<&GplSlot> {
        self.gpl.get(index).filter(|s| s.pl != usize::MAX)
    }
}

impl<S: Eq> Default for FastState<S> {
    fn default() -> Self {
        Self::new()
    }
}

/// Output of [`pl_fast_counted`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FastRun {
    pub records: Vec<PlRecord>,
    pub triples_processed: u64,
}

/// Palindromic length records for every prefix of `t`.
pub fn pl_fast<S: Eq + Clone>(t: &Text<S>) -> Vec<PlRecord> {
    pl_fast_counted(t).records
}

pub fn pl_fast_counted<S: Eq + Clone>(t: &Text<S>) -> FastRun {
    let mut state = FastState::with_capacity(t.len());
    for c in t.as_slice() {
        state.push(c.clone());
    }
    let triples_processed = state.triples_processed();
    FastRun { records: state.into_records(), triples_processed }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::naive::{pl_oracle, DEFAULT_ORACLE_CAP};
    use crate::text::pl_values;

    #[test]
    fn small_examples() {
        assert_eq!(pl_fast(&Text::from("abaab"))[5].pl, 2);
        assert_eq!(pl_fast(&Text::from("abaca"))[5].pl, 3);
        assert_eq!(pl_fast(&Text::from("")), vec![PlRecord::EMPTY]);
        assert_eq!(pl_fast(&Text::from("z"))[1], PlRecord { pl: 1, last_len: 1 });
    }

    #[test]
    fn worked_example_prefixes() {
        let t = Text::from("caaabaaabaaabaaa");
        let want = vec![0, 1, 2, 2, 2, 3, 3, 3, 2, 3, 3, 3, 2, 3, 3, 3, 2];
        assert_eq!(pl_values(&pl_fast(&t)), want);
    }

    #[test]
    fn worked_example_gpl_reuse() {
        // round 16: triple (6, 4, 3) reads GPL[2], written at round 12 by the
        // triple (6, 4, 2); both partition minima are 4 and pl[16] = 2 comes
        // from the unbounded triple (2, inf, 1) via pl[1] + 1
        let t = Text::from("caaabaaabaaabaaa");
        let mut state = FastState::new();
        for &c in &t.as_slice()[..12] {
            state.push(c);
        }
        assert!(state.gap_triples().contains(&GapTriple::new(6, 4, 2)));
        let slot = *state.gpl_slot(2).unwrap();
        assert_eq!(slot.pl, 4);
        #[cfg(debug_assertions)]
        assert_eq!((slot.written_round, slot.written_gap), (12, 4));
        for &c in &t.as_slice()[12..] {
            state.push(c);
        }
        assert!(state.gap_triples().contains(&GapTriple::new(6, 4, 3)));
        let slot16 = *state.gpl_slot(2).unwrap();
        let direct = [6usize, 10, 14].iter().map(|&p| state.records()[p - 1].pl + 1).min().unwrap();
        assert_eq!(direct, 4);
        assert_eq!(slot16.pl, 4);
        assert_eq!(state.gpl_slot(14).unwrap().pl, 4);
        assert_eq!(slot16.pl, slot.pl.min(state.records()[13].pl + 1));
        #[cfg(debug_assertions)]
        assert_eq!((slot16.written_round, slot16.written_gap), (16, 4));
        assert_eq!(state.records()[16], PlRecord { pl: 2, last_len: 15 });
    }

    #[test]
    #[cfg(debug_assertions)]
    #[should_panic(expected = "was written at round")]
    fn shadow_check_catches_stale_slot() {
        let t = Text::from("caaabaaabaaabaaa");
        let mut state = FastState::new();
        for &c in &t.as_slice()[..15] {
            state.push(c);
        }
        // round 16 reads GPL[2]; pretend it was last written one round later
        state.gpl[2].written_round += 1;
        state.push(t[16]);
    }

    #[test]
    fn online_values() {
        let mut state = FastState::new();
        let got: Vec<usize> = "abaab".bytes().map(|c| state.push(c)).collect();
        assert_eq!(got, vec![1, 2, 1, 2, 2]);
        let mut one = FastState::new();
        assert_eq!(one.push('x'), 1);
    }

    #[test]
    fn counter_is_sum_of_list_sizes() {
        let t = Text::from("abaababbaabab");
        let mut state = FastState::new();
        let mut prev = 0u64;
        for &c in t.as_slice() {
            state.push(c);
            let cur = state.gap_triples().len() as u64;
            assert_eq!(state.round_triples(), prev + cur);
            prev = cur;
        }
    }

    #[test]
    fn agrees_with_oracle_exhaustively_small() {
        for n in 0..=12usize {
            for bits in 0u32..(1 << n) {
                let t: Text<u8> = (0..n).map(|k| (bits >> k & 1) as u8).collect();
                let want = pl_values(&pl_oracle(&t, DEFAULT_ORACLE_CAP).unwrap());
                assert_eq!(pl_values(&pl_fast(&t)), want, "{:?}", t.as_slice());
            }
        }
    }
}
