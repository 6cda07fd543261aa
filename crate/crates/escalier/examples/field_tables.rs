//! GF(2^m) arithmetic: table construction, discrete logs and Zech logarithms.
//!
//! Run with: cargo run --example field_tables

use escalier::gf2m::{Field, FieldElem};

fn main() {
    // GF(16) with the default primitive polynomial x^4 + x + 1
    let f = Field::new(4, None).unwrap();
    println!("GF(2^{}), primitive polynomial {:#07b}", f.m(), f.poly());

    println!("\nexp table (a^k as coordinate vectors):");
    for k in 0..f.group_order() {
        print!("a^{k}={:04b} ", f.alpha_pow(k as u64).value());
        if (k + 1) % 5 == 0 {
            println!();
        }
    }

    let a3 = f.alpha_pow(3);
    let a13 = f.alpha_pow(13);
    println!(
        "\na^3 * a^13 = {}   (exponents add mod 15)",
        f.format_elem(f.mul(a3, a13))
    );
    println!("(a^3)^-1   = {}", f.format_elem(f.inv(a3).unwrap()));
    println!("a^3 + a^3  = {}   (characteristic 2)", f.format_elem(f.add(a3, a3)));

    println!("\nZech logarithms: 1 + a^x = a^zech(x)");
    for x in 0..f.group_order() {
        match f.zech(x) {
            Some(z) => print!("z({x})={z} "),
            None => print!("z({x})=- "),
        }
    }
    println!();

    // a field with an explicit (validated) polynomial, and a rejected one
    let ok = Field::new(4, Some(0b11001)).unwrap(); // x^4 + x^3 + 1
    println!("\nx^4+x^3+1 accepted: a^4 = {}", ok.format_elem(ok.alpha_pow(4)));
    let err = Field::new(4, Some(0b10101)).unwrap_err(); // (x^2+x+1)^2
    println!("x^4+x^2+1 rejected: {err}");
    let _ = FieldElem::ZERO;
}
