//! Zimin prefixes: every round has exactly popcount(j) palindromic
//! suffixes, each in its own triple, so the work grows as n log n.
//!
//!     cargo run --release --example zimin_worst_case -- 20

use palfact::bench::{run_instrumented, Engine, Family};
use palfact::bitcount;

fn main() {
    let max_k: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(16);
    println!("{:>10} {:>14} {:>14} {:>12}", "n", "triples", "2*sum B(j)-1", "per n log n");
    for k in 4..=max_k {
        let n = 1usize << k;
        let mut all_match = true;
        let s = run_instrumented(&Family::Zimin { n }, Engine::Fast, |r| {
            all_match &= r.gap_triples == bitcount(r.j as u64) as usize;
        })
        .unwrap();
        assert!(all_match);
        let sum_b: u64 = (1..=n as u64).map(|j| bitcount(j) as u64).sum();
        println!(
            "{:>10} {:>14} {:>14} {:>12.4}",
            n,
            s.total_triples,
            2 * sum_b - 1,
            s.total_triples as f64 / (n as f64 * k as f64)
        );
    }
}
