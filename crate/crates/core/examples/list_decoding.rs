//! The covering-code bound |C| <= L |C'| on concrete codes: the ternary
//! Golay code covers F_3^11 with radius 2, so a code whose radius-2 balls
//! hold at most L codewords has at most 729 L words.

use covbound::budget::Budget;
use covbound::codes::LinearCode;
use covbound::families::{construct, FamilySpec};
use covbound::listdecode::verify_covering_bound;

fn main() {
    let budget = Budget::default();
    let golay = construct(&FamilySpec::GolayTernary).unwrap();
    let cover = golay.to_code(budget).unwrap();

    // Golay plus one weight-1 row: a [11,7] code with list size above 1.
    let mut rows = golay.generator().row_vecs();
    let mut extra = vec![0; 11];
    extra[10] = 1;
    rows.push(extra);
    let wider = LinearCode::from_rows(golay.field(), 11, &rows).unwrap();

    let codes = [
        ("repetition [11,1]", construct(&FamilySpec::Repetition { q: 3, n: 11 }).unwrap()),
        ("Golay [11,6]", golay.clone()),
        ("Golay + e_11 [11,7]", wider),
    ];
    for (name, c) in codes {
        let words = c.to_code(budget).unwrap();
        let v = verify_covering_bound(&words, &cover, 2, budget).unwrap();
        println!(
            "{name:<20} |C| = {:>4}  L = {:>2}  L |C'| = {:>5}  holds: {}",
            v.code_size,
            v.list,
            v.list * v.cover_size,
            v.holds
        );
    }
}
