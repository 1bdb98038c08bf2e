//! Locality of small linear codes and their distance against the
//! Singleton-like ceiling d <= n - k + 2 - ceil(k/r).

use covbound::algebra::Field;
use covbound::budget::Budget;
use covbound::codes::LinearCode;
use covbound::families::{construct, FamilySpec};
use covbound::lrc::{classify_optimal, locality_profile};

fn main() {
    let budget = Budget::default();
    let f2 = Field::new(2).unwrap();
    let codes = [
        ("replication [4,2]", LinearCode::from_rows(&f2, 4, &[vec![1, 1, 0, 0], vec![0, 0, 1, 1]]).unwrap()),
        ("Hamming [7,4]", construct(&FamilySpec::Hamming { q: 2, m: 3 }).unwrap()),
        ("simplex [7,3]", construct(&FamilySpec::Simplex { q: 2, m: 3 }).unwrap()),
        ("RS(7,3)", construct(&FamilySpec::ReedSolomon { q: 7, n: 7, k: 3, points: None }).unwrap()),
    ];
    for (name, c) in codes {
        let profile = locality_profile(&c, budget).unwrap();
        let opt = classify_optimal(&c, 2, budget).unwrap();
        println!(
            "{name:<18} r = {:?}  d = {}  ceiling {}  {}",
            profile.r.unwrap(),
            opt.d,
            opt.ceiling,
            if opt.optimal() { "optimal" } else { "not optimal" }
        );
        if let Some(cert) = profile.certificates().first() {
            println!("  coordinate {} recovered from {:?}", cert.coordinate, cert.set);
        }
    }
}
