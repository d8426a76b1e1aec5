use palfact::bench::*;
fn main() {
    for k in 10..=17 {
        let mut ms = vec![];
        for seed in 0..5u64 {
            let s = run_instrumented(&Family::Random { n: 1 << k, sigma: 2, seed }, Engine::Fast, |_| {}).unwrap();
            ms.push(s.mean_suffix_palindromes);
        }
        let pooled: f64 = ms.iter().sum::<f64>() / 5.0;
        println!("k={k} pooled={pooled:.4} per-seed={:?}", ms.iter().map(|m| format!("{m:.3}")).collect::<Vec<_>>());
    }
    let mut over = 0;
    let mut max: f64 = 0.0;
    for seed in 0..200u64 {
        let s = run_instrumented(&Family::Random { n: 1 << 17, sigma: 2, seed }, Engine::Fast, |_| {}).unwrap();
        if s.mean_suffix_palindromes >= 3.0 {
            over += 1;
        }
        max = max.max(s.mean_suffix_palindromes);
    }
    println!("n=2^17: {over}/200 seeds >= 3, max {max:.4}");
}
