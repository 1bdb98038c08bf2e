//! Exact A_q(n,d) and K_q(n,R) over small parameters, with search effort.
//!
//! Usage: cargo run --release --example oracle_grid [max q^n] [log2 node budget]

use covbound::budget::Budget;
use covbound::oracle::{exact_a, exact_k, OracleOptions};

fn main() {
    let cap: u128 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(256);
    let opts = OracleOptions {
        cap,
        budget: Budget::new(1 << std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(24u32)),
    };
    for q in [2usize, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27] {
        for n in 1..=12 {
            if (q as u128).pow(n as u32) > cap {
                break;
            }
            for d in 1..=n {
                let a = exact_a(q, n, d, &opts);
                let k = exact_k(q, n, d, &opts);
                let show = |r: &covbound::error::Result<covbound::oracle::OracleResult>| match r {
                    Ok(r) => format!("{:>4} ({} nodes, {} ms)", r.value, r.stats.nodes, r.stats.elapsed_ms),
                    Err(e) => format!("-- ({e})"),
                };
                println!("q={q} n={n} d/R={d}: A {}  K {}", show(&a), show(&k));
            }
        }
    }
}
