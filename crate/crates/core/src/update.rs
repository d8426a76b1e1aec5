//! One-round update of the gap list: extend, normalize, merge.
//!
//! Every triple either survives extension as a whole (all its starts shift
//! left by one) or disappears as a whole, so a round costs `O(|G|)`.
//! Normalization then repairs the one gap per triple that may have changed
//! and appends the palindromes of length two and one; merging coalesces
//! neighbours with equal gaps.

use crate::error::{Error, Result};
use crate::gaps::{GapList, GapTriple};
use crate::text::Text;

/// Keep each triple whose starts can be extended by `symbols[j]`, shifted
/// one position to the left. `prev` describes round `j - 1`.
pub(crate) fn extend_into<S: Eq>(prev: &[GapTriple], symbols: &[S], j: usize, out: &mut Vec<GapTriple>) {
    out.clear();
    let c = &symbols[j - 1];
    for t in prev {
        if t.start > 1 && symbols[t.start - 2] == *c {
            out.push(GapTriple::new(t.start - 1, t.gap, t.count));
        }
    }
}

pub(crate) fn normalize_into<S: Eq>(ext: &[GapTriple], symbols: &[S], j: usize, out: &mut Vec<GapTriple>) {
    out.clear();
    // largest position emitted so far; starting at -j gives the first triple
    // a gap of start + j, beyond any real gap at round j
    let mut r = -(j as i64);
    for t in ext {
        let fresh = (t.start as i64 - r) as usize;
        if fresh != t.gap {
            out.push(GapTriple::new(t.start, fresh, 1));
            if t.count > 1 {
                out.push(GapTriple::new(t.start + t.gap, t.gap, t.count - 1));
            }
        } else {
            out.push(*t);
        }
        r = t.last() as i64;
    }
    if j > 1 && symbols[j - 2] == symbols[j - 1] {
        out.push(GapTriple::new(j - 1, (j as i64 - 1 - r) as usize, 1));
        r = j as i64 - 1;
    }
    out.push(GapTriple::new(j, (j as i64 - r) as usize, 1));
}

pub(crate) fn merge_into(norm: &[GapTriple], out: &mut Vec<GapTriple>) {
    out.clear();
    let mut iter = norm.iter();
    let Some(&first) = iter.next() else { return };
    let mut acc = first;
    for t in iter {
        if t.gap == acc.gap {
            acc.count += t.count;
        } else {
            out.push(acc);
            acc = *t;
        }
    }
    out.push(acc);
}

/// Reusable buffers for [`update`]; steady state performs no allocation.
#[derive(Clone, Debug, Default)]
pub(crate) struct Scratch {
    ext: Vec<GapTriple>,
    norm: Vec<GapTriple>,
}

impl Scratch {
    /// Replace `current` (round `j - 1`) by the list for round `j` and
    /// return the number of triples read from the previous list.
    pub(crate) fn advance<S: Eq>(&mut self, current: &mut Vec<GapTriple>, symbols: &[S], j: usize) -> usize {
        self.norm.clear();
        self.norm.reserve(2 * current.len() + 2);
        let touched = current.len();
        extend_into(current, symbols, j, &mut self.ext);
        normalize_into(&self.ext, symbols, j, &mut self.norm);
        merge_into(&self.norm, current);
        touched
    }
}

fn check_round<S>(g_prev: &GapList, t: &Text<S>, j: usize) -> Result<()> {
    t.check_pos(j)?;
    if g_prev.round + 1 != j {
        return Err(Error::RoundMismatch { expected: j - 1, found: g_prev.round });
    }
    Ok(())
}

/// First stage: survivors of `g_prev` shifted by one. The result describes
/// the palindromic suffixes of length at least three at round `j`, but the
/// first gap of a triple may be stale.
pub fn extend<S: Eq>(g_prev: &GapList, t: &Text<S>, j: usize) -> Result<GapList> {
    check_round(g_prev, t, j)?;
    let mut out = Vec::with_capacity(g_prev.len());
    extend_into(&g_prev.triples, t.as_slice(), j, &mut out);
    Ok(GapList::new(out, j))
}

/// Second stage: split off every first element whose gap changed and
/// append the suffix palindromes of length two and one.
pub fn normalize<S: Eq>(g_ext: &GapList, t: &Text<S>, j: usize) -> Result<GapList> {
    t.check_pos(j)?;
    let mut out = Vec::with_capacity(2 * g_ext.len() + 2);
    normalize_into(&g_ext.triples, t.as_slice(), j, &mut out);
    Ok(GapList::new(out, j))
}

/// Final stage: coalesce neighbouring triples with equal gap.
pub fn merge(g_norm: &GapList) -> GapList {
    let mut out = Vec::with_capacity(g_norm.len());
    merge_into(&g_norm.triples, &mut out);
    GapList::new(out, g_norm.round)
}

/// Compute the gap list for round `j` from the one for round `j - 1`.
pub fn update<S: Eq>(g_prev: &GapList, t: &Text<S>, j: usize) -> Result<GapList> {
    let ext = extend(g_prev, t, j)?;
    let norm = normalize(&ext, t, j)?;
    Ok(merge(&norm))
}

/// Gap lists for every round `1..=t.len()`.
pub fn all_rounds<S: Eq>(t: &Text<S>) -> Vec<GapList> {
    let mut out = Vec::with_capacity(t.len());
    let mut g = GapList::empty();
    for j in 1..=t.len() {
        g = update(&g, t, j).expect("rounds are consecutive");
        out.push(g.clone());
    }
    out
}
