//! Lazard's two-variable correspondence: the escalier of a planar point set
//! read directly off its column profile, cross-checked against the oracle.
//!
//! Run with: cargo run --example lazard_staircase

use escalier::gf2m::Field;
use escalier::macaulay::lazard_correspondence;
use escalier::monomial::VarOrder;
use escalier::pointideal::{escalier_of_points, verify_cm, PointSet};

fn main() {
    let f = Field::new(3, None).unwrap();
    let e = |v: u32| f.elem(v).unwrap();
    // three columns with heights 3, 1, 2
    let pts = PointSet::new(
        VarOrder::numbered(2),
        vec![
            vec![e(1), e(0)],
            vec![e(1), e(3)],
            vec![e(1), e(5)],
            vec![e(4), e(2)],
            vec![e(6), e(0)],
            vec![e(6), e(7)],
        ],
    )
    .unwrap();

    let out = lazard_correspondence(&f, &pts).unwrap();
    println!("column counts after renumbering: {:?}", out.column_counts);
    let order = VarOrder::numbered(2);
    println!(
        "escalier: {:?}",
        out.escalier.terms().iter().map(|t| t.format(&order)).collect::<Vec<_>>()
    );

    // matches the linear-algebra oracle
    let oracle = escalier_of_points(&f, &pts).unwrap();
    assert_eq!(out.escalier, oracle);
    println!("matches the rank-check oracle");

    // the column-major enumeration has the prefix property
    let ordered = PointSet::new(
        VarOrder::numbered(2),
        out.correspondence.pairs().iter().map(|(p, _)| p.clone()).collect(),
    )
    .unwrap();
    assert!(verify_cm(&f, &ordered, &out.correspondence).unwrap().ok);
    println!("column-major enumeration passes the prefix verification");
}
