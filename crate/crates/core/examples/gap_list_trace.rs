//! Trace one gap-list update stage by stage on "caaabaaabaaabaaab".

use palfact::update::{extend, merge, normalize};
use palfact::{decode_gap_list, FastState, Text};

fn main() {
    let t = Text::from("caaabaaabaaabaaab");
    let mut state = FastState::new();
    for &c in &t.as_slice()[..16] {
        state.push(c);
    }
    let prev = state.gap_list();
    println!("G_16   = {prev}   starts {:?}", decode_gap_list(&prev).unwrap());
    let ext = extend(&prev, &t, 17).unwrap();
    println!("G'_17  = {ext}");
    let norm = normalize(&ext, &t, 17).unwrap();
    println!("G''_17 = {norm}");
    let fin = merge(&norm);
    println!("G_17   = {fin}   starts {:?}", decode_gap_list(&fin).unwrap());
}
