//! The end-to-end decoder: build the [15, 7] code with defining set {1, 3},
//! flip up to two bits of a codeword, and correct them with both locator
//! strategies.
//!
//! Run with: cargo run --example decode_words

use escalier::decoder::{Code, Strategy, Word};

fn main() {
    let code = Code::new(4, 15, 3).unwrap();
    println!(
        "[{}, {}] code, generator degree {}",
        code.n(),
        code.dimension(),
        code.generator().len() - 1
    );
    println!(
        "generator coefficients (constant first): {:?}",
        code.generator()
    );

    let cw = code.random_codeword(42);
    println!("\ncodeword:      {}", cw.to_bitstring());
    let mut noisy = cw.clone();
    noisy.flip(3);
    noisy.flip(11);
    println!("received:      {}", noisy.to_bitstring());

    for strategy in [Strategy::Gelp, Strategy::Help] {
        let out = code.decode(&noisy, strategy).unwrap();
        println!(
            "{:?}: errors at {:?}, corrected back to codeword: {}",
            strategy,
            out.error_positions,
            out.corrected == cw
        );
        assert_eq!(out.corrected, cw);
    }

    // weight-1 fast path (l = 3) and the trivial case
    let mut one = cw.clone();
    one.flip(9);
    let out = code.decode(&one, Strategy::Gelp).unwrap();
    println!("\nsingle flip at 9 decoded to {:?}", out.error_positions);
    let out = code.decode(&cw, Strategy::Help).unwrap();
    println!("clean word: {} error positions", out.error_positions.len());

    // a weight-3 pattern is outside the design distance
    let mut bad = Word::zero(15);
    bad.flip(0);
    bad.flip(1);
    bad.flip(2);
    match code.decode(&bad, Strategy::Gelp) {
        Err(e) => println!("weight-3 burst: {e}"),
        Ok(out) => println!(
            "weight-3 burst landed on another codeword's ball: {:?}",
            out.error_positions
        ),
    }
}
