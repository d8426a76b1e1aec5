//! Recover and check a minimum palindromic factorization.
//!
//!     cargo run --example factorization -- abbaabaabbba

use palfact::{factorize, pl_fast, verify_factorization, Text};

fn main() {
    let word = std::env::args().nth(1).unwrap_or_else(|| "abbaabaabbba".to_string());
    let t = Text::from(word.as_str());
    let records = pl_fast(&t);
    let pl = records[t.len()].pl;
    let f = factorize(&t, &records).expect("back-pointers are consistent");
    assert!(verify_factorization(&t, &f, pl));
    let parts: Vec<String> = f.slices(&t).map(|s| String::from_utf8_lossy(s).into_owned()).collect();
    println!("{word} = {} ({pl} palindromes)", parts.join(" | "));
    for p in &f.parts {
        println!("  start {:>3}  length {:>3}", p.start, p.length);
    }
}
