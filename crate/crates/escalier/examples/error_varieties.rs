//! The four plain error varieties over S_n x S_n: explicit escaliers and
//! reduced bases (telescoping sums), compared against the brute-force oracle.
//!
//! Run with: cargo run --example error_varieties

use escalier::gf2m::Field;
use escalier::monomial::VarOrder;
use escalier::pointideal::{escalier_of_points, lex_gb_of_points};
use escalier::variety::{error_formulas, error_variety_points, VarietyKind};
use escalier::{roots_of_unity, FieldOps};

fn main() {
    let f = Field::new(3, None).unwrap();
    let n = 7;
    let roots = roots_of_unity(&f, n).unwrap();
    let order = VarOrder::error_pair();

    for kind in VarietyKind::ALL {
        let pts = error_variety_points(&roots, kind);
        let (esc, basis) = error_formulas(&f, kind, n).unwrap();
        println!(
            "kind={kind}: {} points (formula {}), escalier gens {:?}",
            pts.len(),
            kind.cardinality(n as u64),
            esc.minimal_basis().iter().map(|t| t.format(&order)).collect::<Vec<_>>()
        );
        for g in &basis {
            println!("  {}", g.format(&f, &order, |c| f.format_elem(c)));
            assert!(pts.points().iter().all(|p| f.is_zero(g.eval(&f, p))));
        }
        // formula route == oracle route
        assert_eq!(escalier_of_points(&f, &pts).unwrap(), esc);
        assert_eq!(lex_gb_of_points(&f, &pts).unwrap(), basis);
        println!("  oracle agrees (escalier and reduced basis)");
    }
}
