//! Size bounds for a few parameter sets, tightest first.
//!
//! Usage: cargo run --example bound_ladder [q n d]

use covbound::bounds::{bound_ladder, CodeParams, CoverRegistry};

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let cases = match args[..] {
        [q, n, d] => vec![(q, n, d)],
        _ => vec![(2, 16, 7), (2, 23, 7), (3, 11, 5), (2, 40, 5)],
    };
    for (q, n, d) in cases {
        println!("A_{q}({n},{d}):");
        match bound_ladder(&CodeParams::new(q, n).with_d(d), CoverRegistry::standard(), None, None) {
            Ok(ladder) => {
                for b in ladder.iter().filter(|b| b.applicable) {
                    let mark = if b.tightest { "*" } else { " " };
                    println!("  {mark} {:<28} {}", b.name, b.value.as_ref().expect("applicable"));
                }
            }
            Err(e) => println!("  {e}"),
        }
    }
}
