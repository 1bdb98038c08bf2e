//! Insertion-deletion distance of a few linear codes and the Singleton-type
//! inequalities it must satisfy.

use covbound::budget::Budget;
use covbound::codes::AnyCode;
use covbound::families::{construct, FamilySpec};
use covbound::insdel::{insdel_distance, insdel_report};

fn main() {
    println!("d(0110, 1011) = {}", insdel_distance(&[0, 1, 1, 0], &[1, 0, 1, 1]));
    let specs = [
        ("Hamming [7,4]", FamilySpec::Hamming { q: 2, m: 3 }),
        ("RS(5,2) over GF(5)", FamilySpec::ReedSolomon { q: 5, n: 5, k: 2, points: None }),
        ("simplex [7,3]", FamilySpec::Simplex { q: 2, m: 3 }),
        ("repetition [6,1]_3", FamilySpec::Repetition { q: 3, n: 6 }),
    ];
    for (name, spec) in specs {
        let c = AnyCode::Linear(construct(&spec).unwrap());
        let r = insdel_report(&c, Budget::default()).unwrap();
        println!("{name}: d_insdel = {}, d_H = {}", r.code_insdel_distance, r.hamming_distance);
        for check in &r.checks {
            let verdict = match check.holds {
                Some(true) => "holds",
                Some(false) => "VIOLATED",
                None => "n/a",
            };
            println!("  {:<24} <= {:>3}  {verdict}", check.name, check.bound);
        }
    }
}
