//! Feed symbols one at a time and report the palindromic length after each.
//!
//!     echo abaababbab | cargo run --example online

use std::io::Read;

use palfact::FastState;

fn main() {
    let mut input = Vec::new();
    std::io::stdin().read_to_end(&mut input).expect("stdin");
    if input.last() == Some(&b'\n') {
        input.pop();
    }
    if input.is_empty() {
        input = b"abaababbab".to_vec();
    }
    let mut state = FastState::new();
    println!("{:>5} {:>4} {:>4} {:>8}  gap list", "j", "sym", "PL", "triples");
    for c in input {
        let pl = state.push(c);
        println!("{:>5} {:>4} {:>4} {:>8}  {}", state.round(), c as char, pl, state.round_triples(), state.gap_list());
    }
}
