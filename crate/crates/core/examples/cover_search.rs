//! Greedy covering codes against the exact minimum K_q(n,R) and the
//! sphere-covering floor.

use covbound::budget::Budget;
use covbound::oracle::{exact_k, OracleOptions};
use covbound::covering::greedy_covering_search;

fn main() {
    let budget = Budget::default();
    for (q, n, r) in [(2, 5, 1), (2, 6, 1), (2, 7, 1), (3, 4, 1), (2, 6, 2)] {
        let greedy = greedy_covering_search(q, n, r, 7, 8, budget).unwrap();
        let exact = exact_k(q, n, r, &OracleOptions::default())
            .map(|k| k.value.to_string())
            .unwrap_or_else(|e| format!("({e})"));
        println!("q={q} n={n} R={r}: greedy {:>3}, exact {exact}", greedy.len());
    }
}
