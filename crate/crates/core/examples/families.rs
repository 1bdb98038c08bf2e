//! Builds every family at small parameters and checks the advertised
//! [n, k, d] against the computed minimum distance.

use covbound::budget::Budget;
use covbound::families::{construct, FamilySpec};

fn main() {
    let specs = [
        FamilySpec::Hamming { q: 4, m: 2 },
        FamilySpec::Simplex { q: 2, m: 4 },
        FamilySpec::GolayBinary,
        FamilySpec::GolayTernary,
        FamilySpec::ReedSolomon { q: 8, n: 8, k: 3, points: None },
        FamilySpec::ReedMuller1 { m: 5 },
        FamilySpec::Kasami { m: 2 },
        FamilySpec::BlockDiagonal { q: 3, m: 2, u: 3 },
        FamilySpec::Repetition { q: 5, n: 4 },
    ];
    for spec in specs {
        let adv = spec.advertised().expect("valid parameters");
        let c = construct(&spec).expect("construction self-checks");
        let d = c.min_distance(Budget::default()).expect("small code");
        println!("{spec:?}\n  advertised [{},{},{}], computed [{},{},{d}]", adv.n, adv.k, adv.d, c.n(), c.k());
    }
}
