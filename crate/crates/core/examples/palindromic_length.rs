//! Palindromic length of a few words with all three engines.
//!
//!     cargo run --example palindromic_length -- abaab abaca racecarxyz

use palfact::{pl_fast, pl_oracle, pl_quadratic, pl_values, Text, DEFAULT_ORACLE_CAP};

fn main() {
    let mut words: Vec<String> = std::env::args().skip(1).collect();
    if words.is_empty() {
        words = ["abaab", "abaca", "abbaabaabbba", "caaabaaabaaabaaa"].map(String::from).to_vec();
    }
    for w in &words {
        let t = Text::from(w.as_str());
        let fast = pl_values(&pl_fast(&t));
        let quad = pl_values(&pl_quadratic(&t));
        let oracle = pl_values(&pl_oracle(&t, DEFAULT_ORACLE_CAP).expect("short input"));
        assert_eq!(fast, quad);
        assert_eq!(fast, oracle);
        println!("{w}: PL = {}, prefixes = {:?}", fast[t.len()], fast);
    }
}
