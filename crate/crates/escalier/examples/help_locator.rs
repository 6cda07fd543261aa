//! Half error locator polynomials: the sparse closed-support form for
//! full-length codes ((n-1)/2 coefficients solved on one scaled orbit) and
//! the general escalier-supported form, both verified over every weight-2
//! pair.
//!
//! Run with: cargo run --example help_locator

use escalier::gf2m::Field;
use escalier::locator::{help_general, help_sparse};
use escalier::monomial::VarOrder;
use escalier::variety::{z2_odd_gap_points, SyndromeConfig};

fn main() {
    let f = Field::new(4, None).unwrap();
    let cfg = SyndromeConfig::new(f, 15, 3).unwrap();
    let order = VarOrder::syndrome();

    let h = help_sparse(&cfg).unwrap();
    println!(
        "sparse HELP for n = 15 ({} coefficients):",
        h.poly.num_terms() - 1
    );
    println!("  {}", h.poly.format(&cfg.field, &order, |c| cfg.field.format_elem(c)));
    println!(
        "  designation sweep: {} weight-2 pairs, {} failures",
        h.sweep.checked, h.sweep.failures
    );
    assert!(h.sweep.ok());

    // pick a pair and recover both errors
    let f = &cfg.field;
    let (c, d) = (f.alpha_pow(1), f.alpha_pow(2));
    let (s1, s2) = cfg.syndrome_of_pair(c, d);
    let z1 = h.designated_root(f, s1, s2);
    let z2 = f.add(s1, z1);
    println!(
        "  errors {{b^1, b^2}}: designated {}, partner via z2 = z1 + x1: {}",
        f.format_elem(z1),
        f.format_elem(z2)
    );
    assert!((z1 == c && z2 == d) || (z1 == d && z2 == c));

    // a non-full-length code uses the general form
    let f5 = Field::new(4, None).unwrap();
    let cfg5 = SyndromeConfig::new(f5, 5, 3).unwrap();
    let hg = help_general(&cfg5, &z2_odd_gap_points(&cfg5)).unwrap();
    println!(
        "\ngeneral HELP for n = 5: {} terms, sweep {} pairs / {} failures",
        hg.poly.num_terms(),
        hg.sweep.checked,
        hg.sweep.failures
    );
    assert!(hg.sweep.ok());
}
