//! Covering radii of the standard families, next to the dual-weight bound.

use covbound::budget::Budget;
use covbound::codes::AnyCode;
use covbound::covering::{covering_radius, delsarte_bound, RadiusMethod};
use covbound::families::{construct, FamilySpec};

fn main() {
    let budget = Budget::default();
    let specs = [
        ("Hamming [7,4]", FamilySpec::Hamming { q: 2, m: 3 }),
        ("ternary Hamming [13,10]", FamilySpec::Hamming { q: 3, m: 3 }),
        ("Golay [23,12]", FamilySpec::GolayBinary),
        ("Golay [11,6]_3", FamilySpec::GolayTernary),
        ("RM(1,4)", FamilySpec::ReedMuller1 { m: 4 }),
        ("RS(7,3)", FamilySpec::ReedSolomon { q: 7, n: 7, k: 3, points: None }),
        ("Kasami m=2, dual", FamilySpec::Kasami { m: 2 }),
        ("block diagonal (2,3,2)", FamilySpec::BlockDiagonal { q: 2, m: 3, u: 2 }),
    ];
    for (name, spec) in specs {
        let mut c = construct(&spec).expect("valid family");
        if matches!(spec, FamilySpec::Kasami { .. }) {
            c = c.dual();
        }
        let bound = delsarte_bound(&c, budget).expect("small code");
        let r = covering_radius(&AnyCode::Linear(c.clone()), RadiusMethod::Auto, budget).expect("small code");
        let witness: String = r.witness.unwrap_or_default().iter().map(|s| s.to_string()).collect();
        println!(
            "{name:<24} [{},{}]  R = {} ({})  dual weights {bound}  deep hole {witness}",
            c.n(),
            c.k(),
            r.radius,
            r.method.name()
        );
    }
}
