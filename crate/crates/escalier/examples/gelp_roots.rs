//! The general error locator polynomial: interpolated over the plus variety
//! (weights 0..2), specialized at syndromes, and root-swept exhaustively.
//!
//! Run with: cargo run --example gelp_roots

use escalier::gf2m::{Field, FieldElem};
use escalier::locator::{gelp_interpolate, gelp_root_sweep, locate_roots};
use escalier::monomial::VarOrder;
use escalier::variety::{base_structures, derive_structures, SyndromeConfig, VarietyKind};

fn main() {
    let f = Field::new(4, None).unwrap();
    let cfg = SyndromeConfig::new(f, 15, 3).unwrap();
    let base = base_structures(&cfg).unwrap();
    let plus = derive_structures(VarietyKind::Plus, &base, &cfg).unwrap();
    let gelp = gelp_interpolate(&cfg, &plus).unwrap();
    let order = VarOrder::syndrome();
    println!(
        "GELP over the plus variety ({} terms): z1^2 + x1 z1 + a0(x1, x2)",
        gelp.poly.num_terms()
    );

    let f = &cfg.field;
    // single error c = b^5: syndrome (b^5, b^15), roots {0, b^5}
    let c = f.alpha_pow(5);
    let (s1, s2) = cfg.syndrome_of_pair(c, FieldElem::ZERO);
    let (r1, r2) = locate_roots(&cfg, &gelp, s1, s2).unwrap();
    println!(
        "syndrome of single error b^5: roots {{{}, {}}}",
        f.format_elem(r1),
        f.format_elem(r2)
    );

    // double error {b^2, b^7}: second syndrome coordinate vanishes
    let (c, d) = (f.alpha_pow(2), f.alpha_pow(7));
    let (s1, s2) = cfg.syndrome_of_pair(c, d);
    let (r1, r2) = locate_roots(&cfg, &gelp, s1, s2).unwrap();
    println!(
        "syndrome of errors {{b^2, b^7}} = ({}, {}): roots {{{}, {}}}",
        f.format_elem(s1),
        f.format_elem(s2),
        f.format_elem(r1),
        f.format_elem(r2)
    );

    // zero syndrome: double root at zero
    let (r1, r2) = locate_roots(&cfg, &gelp, FieldElem::ZERO, FieldElem::ZERO).unwrap();
    println!("zero syndrome: roots {{{}, {}}}", f.format_elem(r1), f.format_elem(r2));

    let sweep = gelp_root_sweep(&cfg, &gelp);
    println!(
        "exhaustive sweep: {} syndromes, {} failures",
        sweep.checked, sweep.failures
    );
    assert_eq!(sweep.failures, 0);
    let _ = order;
}
