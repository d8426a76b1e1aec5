//! Cross-check the fast algorithm against both references on random text.
//!
//!     cargo run --release --example oracle_check -- 2000

use palfact::{factorize, pl_fast, pl_oracle, pl_quadratic, pl_values, random_text, verify_factorization};

fn main() {
    let cases: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(500);
    for seed in 0..cases {
        let sigma = 1 + (seed % 5) as u32;
        let t = random_text(300, sigma, seed);
        let fast = pl_fast(&t);
        assert_eq!(pl_values(&fast), pl_values(&pl_quadratic(&t)), "seed {seed}");
        assert_eq!(pl_values(&fast), pl_values(&pl_oracle(&t, 300).unwrap()), "seed {seed}");
        let f = factorize(&t, &fast).unwrap();
        assert!(verify_factorization(&t, &f, fast[t.len()].pl));
    }
    println!("{cases} random strings: fast, quadratic and oracle agree on every prefix");
}
