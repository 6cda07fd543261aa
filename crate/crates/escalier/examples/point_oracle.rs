//! The point-ideal oracle: Gröbner escalier, reduced lex basis, exact
//! interpolation, and the Cerlienco-Mureddu correspondence of an ordered
//! point set, with the prefix-property verifier.
//!
//! Run with: cargo run --example point_oracle

use escalier::gf2m::{Field, FieldElem};
use escalier::monomial::VarOrder;
use escalier::pointideal::{
    cm_correspondence, escalier_of_points, interpolate, lex_gb_of_points, verify_cm, PointSet,
};

fn main() {
    let f = Field::new(2, None).unwrap();
    let e = |v: u32| f.elem(v).unwrap();
    let order = VarOrder::new(vec!["x1", "x2"]).unwrap();
    let pts = PointSet::new(
        order.clone(),
        vec![vec![e(0), e(0)], vec![e(0), e(1)], vec![e(1), e(0)], vec![e(2), e(3)]],
    )
    .unwrap();

    let esc = escalier_of_points(&f, &pts).unwrap();
    println!("escalier ({} terms, one per point):", esc.len());
    for t in esc.terms() {
        print!("  {}", t.format(&order));
    }
    println!(
        "\nminimal basis of the complement: {:?}",
        esc.minimal_basis().iter().map(|t| t.format(&order)).collect::<Vec<_>>()
    );

    let gb = lex_gb_of_points(&f, &pts).unwrap();
    println!("\nreduced lex basis of the vanishing ideal:");
    for g in &gb {
        println!("  {}", g.format(&f, &order, |c| f.format_elem(c)));
        for p in pts.points() {
            assert!(g.eval(&f, p).is_zero());
        }
    }

    let phi = cm_correspondence(&f, &pts).unwrap();
    println!("\ncorrespondence (point order matters):");
    for (p, t) in phi.pairs() {
        println!(
            "  ({}, {}) -> {}",
            f.format_elem(p[0]),
            f.format_elem(p[1]),
            t.format(&order)
        );
    }
    let check = verify_cm(&f, &pts, &phi).unwrap();
    println!("prefix property: {}", if check.ok { "holds" } else { "fails" });

    // exact interpolation of arbitrary values on the escalier support
    let values: Vec<FieldElem> = vec![e(1), e(2), e(3), e(0)];
    let p = interpolate(&f, &pts, &values, esc.terms()).unwrap();
    println!(
        "\ninterpolant of values (1, a, a+1, 0): {}",
        p.format(&f, &order, |c| f.format_elem(c))
    );
    for (pt, &v) in pts.points().iter().zip(&values) {
        assert_eq!(p.eval(&f, pt), v);
    }
    println!("evaluations match all four prescribed values");
}
