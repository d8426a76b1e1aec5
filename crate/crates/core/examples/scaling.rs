//! Fit linear and n log n models to operation counts for random and
//! Zimin inputs.
//!
//!     cargo run --release --example scaling

use palfact::bench::{fit_scaling, run_many, Engine, Family};

fn main() {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let random: Vec<Family> =
        (10..=17).flat_map(|k| (0..5).map(move |seed| Family::Random { n: 1 << k, sigma: 2, seed })).collect();
    let zimin: Vec<Family> = (10..=17).map(|k| Family::Zimin { n: 1 << k }).collect();
    for (name, families) in [("random binary", random), ("zimin", zimin)] {
        let summaries: Vec<_> = run_many(&families, Engine::Fast, jobs).into_iter().map(Result::unwrap).collect();
        println!("== {name}");
        println!("{}\n", fit_scaling(&summaries).unwrap());
    }
}
