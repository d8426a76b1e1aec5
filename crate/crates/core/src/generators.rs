//! Input families: Zimin prefixes, repeated symbols and seeded random text.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::text::Text;

/// Name of the generator behind [`random_text`], printed with bench output.
pub const RNG_NAME: &str = "ChaCha8Rng::seed_from_u64";

/// Streams the infinite Zimin word `1 2 1 3 1 2 1 4 ...`.
///
/// The symbol at 1-based position `p` is one plus the number of trailing
/// zero bits of `p`.
#[derive(Clone, Debug, Default)]
pub struct Zimin {
    pos: u64,
}

impl Zimin {
    pub fn new() -> Self {
        Zimin { pos: 0 }
    }
}

impl Iterator for Zimin {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        self.pos += 1;
        Some(self.pos.trailing_zeros() as u64 + 1)
    }
}

/// First `n` symbols of the Zimin word.
pub fn zimin_prefix(n: usize) -> Text<u64> {
    Zimin::new().take(n).collect()
}

/// `Z_i` built by the doubling recursion `Z_i = Z_{i-1} i Z_{i-1}`.
pub fn zimin_word(i: u32) -> Vec<u64> {
    let mut z = Vec::new();
    for k in 1..=i as u64 {
        let prev = z.clone();
        z.push(k);
        z.extend(prev);
    }
    z
}

/// Number of 1-bits in `n`.
pub fn bitcount(n: u64) -> u32 {
    n.count_ones()
}

/// `n` copies of a single symbol.
pub fn repeated_symbol(n: usize) -> Text<u32> {
    Text::new(vec![0; n])
}

/// `n` i.i.d. uniform symbols from `0..sigma`, reproducible from `seed`.
pub fn random_text(n: usize, sigma: u32, seed: u64) -> Text<u32> {
    assert!(sigma >= 1, "alphabet size must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| rng.gen_range(0..sigma)).collect()
}

/// Space-separated decimal form used for integer-symbol texts.
pub fn format_symbols<S: std::fmt::Display>(symbols: &[S]) -> String {
    let mut out = String::with_capacity(symbols.len() * 2);
    for (idx, s) in symbols.iter().enumerate() {
        if idx > 0 {
            out.push(' ');
        }
        out.push_str(&s.to_string());
    }
    out
}

/// Parse whitespace-separated decimal symbols.
pub fn parse_symbols(input: &str) -> Result<Text<u64>> {
    input
        .split_whitespace()
        .map(|tok| tok.parse::<u64>().map_err(|_| Error::Parse { token: tok.to_string() }))
        .collect::<Result<Vec<_>>>()
        .map(Text::new)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zimin_head() {
        assert_eq!(zimin_prefix(10).into_inner(), vec![1, 2, 1, 3, 1, 2, 1, 4, 1, 2]);
        assert!(zimin_prefix(0).is_empty());
    }

    #[test]
    fn zimin_matches_recursion() {
        for i in 0..=12u32 {
            let z = zimin_word(i);
            assert_eq!(z.len(), (1usize << i) - 1);
            assert_eq!(zimin_prefix(z.len()).into_inner(), z);
        }
        // the 16-symbol prefix is Z_4 followed by 5
        let mut want = zimin_word(4);
        want.push(5);
        assert_eq!(zimin_prefix(16).into_inner(), want);
    }

    #[test]
    fn zimin_prefix_factorization() {
        // Z[1..n] = Z_{i_k} (i_k + 1) ... Z_{i_1} (i_1 + 1) over the 1-bits of n
        for n in 1..=300usize {
            let mut built = Vec::new();
            for bit in (0..usize::BITS).rev().filter(|b| n >> b & 1 == 1) {
                built.extend(zimin_word(bit));
                built.push(bit as u64 + 1);
            }
            assert_eq!(zimin_prefix(n).into_inner(), built, "n = {n}");
        }
    }

    #[test]
    fn bitcounts() {
        assert_eq!(bitcount(0), 0);
        assert_eq!(bitcount(1), 1);
        assert_eq!(bitcount(7), 3);
        assert_eq!(bitcount(8), 1);
        for k in 0..=62 {
            assert_eq!(bitcount(1 << k), 1);
        }
    }

    #[test]
    fn bitcount_sum_over_dyadic_range() {
        let n = 1u64 << 16;
        let mut direct = 0u64;
        for j in 1..=n {
            let mut x = j;
            while x > 0 {
                direct += x & 1;
                x >>= 1;
            }
        }
        let total: u64 = (1..=n).map(|j| bitcount(j) as u64).sum();
        assert_eq!(total, direct);
        assert_eq!(total, 16 * (1 << 15) + 1);
    }

    #[test]
    fn random_text_contract() {
        assert_eq!(random_text(5, 1, 99).into_inner(), vec![0; 5]);
        assert_eq!(random_text(1000, 26, 7), random_text(1000, 26, 7));
        assert_ne!(random_text(1000, 26, 7), random_text(1000, 26, 8));
        assert!(random_text(1000, 4, 1).as_slice().iter().all(|&c| c < 4));
    }

    #[test]
    fn symbol_text_format() {
        assert_eq!(format_symbols(zimin_prefix(10).as_slice()), "1 2 1 3 1 2 1 4 1 2");
        assert_eq!(parse_symbols(" 1 2\n3 ").unwrap().into_inner(), vec![1, 2, 3]);
        assert!(matches!(parse_symbols("1 x"), Err(Error::Parse { .. })));
        assert!(parse_symbols("").unwrap().is_empty());
    }
}
