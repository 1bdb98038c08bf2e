//! Runs the embedded claim suite and prints one line per claim.

use covbound::budget::Budget;
use covbound::cli::run_claims;

fn main() {
    let rows = run_claims(None, false, Budget::default()).expect("claim suite");
    for r in &rows {
        println!("{:<6} {:<36} {}", r.verdict, r.claim_id, r.computed);
    }
    let pass = rows.iter().filter(|r| r.verdict == "PASS").count();
    println!("{pass}/{} claims pass", rows.len());
}
