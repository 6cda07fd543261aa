//! Zech sequences and tableaux: class-size profiles of 1 + b^j modulo
//! alpha = (2^m-1)/n, and the staircase escalier built from the sorted
//! profile. The odd-gap profile predicts the column structure of the
//! weight-2 syndrome variety.
//!
//! Run with: cargo run --example zech_tableaux

use escalier::gf2m::Field;
use escalier::variety::zech_tableau;
use escalier::zech_sequence;

fn main() {
    let f = Field::new(4, None).unwrap();

    // n = 5 inside GF(16): alpha = 3 classes
    let all: Vec<u32> = (1..=5).collect();
    let seq = zech_sequence(&f, 5, &all).unwrap();
    println!("(15, 5; {{1..5}})-Zech sequence: {seq:?}");

    let t = zech_tableau(&f, 5, &all).unwrap();
    println!("classes by non-increasing count: {:?}", t.classes);
    println!(
        "staircase escalier: {} terms, minimal basis {:?}",
        t.escalier.len(),
        t.escalier
            .minimal_basis()
            .iter()
            .map(|g| g.exps().to_vec())
            .collect::<Vec<_>>()
    );

    // the odd gaps only
    let odd = zech_sequence(&f, 5, &[1, 3]).unwrap();
    println!("\nodd-gap sequence for n = 5: {odd:?}");
    println!("(each nonzero class contributes n columns of that height to Z_2's x-projection)");

    // full length: one class, everything except j = n lands in it
    let f8 = Field::new(3, None).unwrap();
    let full = zech_sequence(&f8, 7, &(1..=7).collect::<Vec<_>>()).unwrap();
    println!("\n(7, 7; {{1..7}})-Zech sequence over GF(8): {full:?}");
}
