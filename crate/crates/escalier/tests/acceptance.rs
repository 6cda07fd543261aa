//! Acceptance suite: one test per verification criterion, exhaustive at the
//! configured scales, printing a pass line with timing per criterion.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use escalier::decoder::Code;
use escalier::gf2m::Field;
use escalier::locator;
use escalier::macaulay::{macaulay_construct, macaulay_verify};
use escalier::monomial::{escalier_from_minimal_basis, Term, VarOrder};
use escalier::pointideal::{escalier_of_points, incremental_basis, lex_gb_of_points, verify_cm};
use escalier::report::decoder_sweep;
use escalier::variety::{
    base_structures, closed_forms_full_length, derive_chain, error_formulas,
    error_variety_points, syndrome_map_report, syndrome_variety_points, SyndromeConfig,
    VarietyKind,
};
use escalier::FieldOps;

/// Every configuration exercised by the suite (l = 3 throughout).
const CONFIGS: [(u32, u32); 7] = [(3, 7), (4, 15), (4, 5), (5, 31), (6, 63), (6, 21), (6, 9)];

fn cfg(m: u32, n: u32) -> SyndromeConfig {
    SyndromeConfig::new(Field::new(m, None).unwrap(), n, 3).unwrap()
}

fn small_configs() -> impl Iterator<Item = (u32, u32)> {
    CONFIGS.iter().copied().filter(|&(_, n)| n <= 31)
}

fn pass_line(criterion: &str, detail: &str, elapsed: Duration) {
    println!("[{criterion}] PASS {detail} ({:.2}s)", elapsed.as_secs_f64());
}

#[test]
fn criterion_01_cardinalities() {
    let start = Instant::now();
    for (m, n) in CONFIGS {
        let per_config = Instant::now();
        let c = cfg(m, n);
        for kind in VarietyKind::ALL {
            let want = kind.cardinality(n as u64);
            assert_eq!(error_variety_points(&c.roots, kind).len() as u64, want, "(m={m},n={n},{kind})");
            assert_eq!(syndrome_variety_points(&c, kind).len() as u64, want, "(m={m},n={n},{kind})");
        }
        assert!(per_config.elapsed() < Duration::from_secs(1), "(m={m},n={n}) exceeded 1s");
    }
    pass_line("criterion 01", "cardinalities, 7 configurations x 4 kinds x 2 varieties", start.elapsed());
}

#[test]
fn criterion_02_error_escaliers_oracle_vs_formula() {
    let start = Instant::now();
    let mut runs = 0;
    for (m, n) in small_configs() {
        let c = cfg(m, n);
        for kind in VarietyKind::ALL {
            let pts = error_variety_points(&c.roots, kind);
            let (formula, _) = error_formulas(&c.field, kind, n).unwrap();
            let oracle = escalier_of_points(&c.field, &pts).unwrap();
            assert_eq!(oracle, formula, "(m={m},n={n},{kind})");
            runs += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed <= Duration::from_secs(30), "budget: 30s total, took {elapsed:?}");
    pass_line("criterion 02", &format!("{runs} rank-route escaliers equal the explicit forms"), elapsed);
}

#[test]
fn criterion_03_error_bases_oracle_vs_formula() {
    let start = Instant::now();
    let mut runs = 0;
    for (m, n) in small_configs() {
        let c = cfg(m, n);
        for kind in VarietyKind::ALL {
            let pts = error_variety_points(&c.roots, kind);
            let (_, formula) = error_formulas(&c.field, kind, n).unwrap();
            for g in &formula {
                for p in pts.points() {
                    assert!(c.field.is_zero(g.eval(&c.field, p)), "(m={m},n={n},{kind}) vanishing");
                }
            }
            let oracle = lex_gb_of_points(&c.field, &pts).unwrap();
            assert_eq!(oracle, formula, "(m={m},n={n},{kind}) reduced bases");
            runs += 1;
        }
    }
    pass_line("criterion 03", &format!("{runs} reduced bases equal and vanish exhaustively"), start.elapsed());
}

#[test]
fn criterion_04_closed_forms_full_length() {
    let start = Instant::now();
    for m in [3u32, 4, 5] {
        let n = (1 << m) - 1;
        let c = cfg(m, n);
        let closed = closed_forms_full_length(&c).unwrap();
        let base = base_structures(&c).unwrap();
        assert_eq!(closed.escalier, base.escalier, "(m={m}) N_2");
        assert_eq!(closed.basis, base.basis, "(m={m}) G_2");
        // shape: x1^n + 1, the x2^{(n-1)/2}-boundary element, z2 + z1 + x1,
        // and the z1^2 locator element
        let lts: Vec<&[u32]> = closed.basis.iter().map(|g| g.leading_term().unwrap().exps()).collect();
        assert_eq!(
            lts,
            vec![
                &[n, 0, 0, 0][..],
                &[0, (n - 1) / 2, 0, 0][..],
                &[0, 0, 2, 0][..],
                &[0, 0, 0, 1][..],
            ],
            "(m={m}) leading terms"
        );
        let relation = &closed.basis[3];
        let mut expect = escalier::SparsePoly::zero(4);
        for var in [0usize, 2, 3] {
            expect.add_term(&c.field, Term::var_pow(4, var, 1), c.field.one());
        }
        assert_eq!(relation, &expect, "(m={m}) z2 + z1 + x1");
    }
    pass_line("criterion 04", "closed (N_2, G_2) equal the oracle for m = 3, 4, 5", start.elapsed());
}

#[test]
fn criterion_05_derivation_chain() {
    let start = Instant::now();
    let mut prefix_checks = 0u64;
    for (m, n) in small_configs() {
        let c = cfg(m, n);
        let base = base_structures(&c).unwrap();
        let chain = derive_chain(&c, &base).unwrap();
        for d in std::iter::once(&base).chain(chain.iter()) {
            if d.kind != VarietyKind::Two {
                let pts = syndrome_variety_points(&c, d.kind);
                let oracle = incremental_basis(&c.field, &pts, &[]).unwrap();
                assert_eq!(oracle.escalier(), d.escalier, "(m={m},n={n},{}) escalier", d.kind);
                assert_eq!(oracle.basis, d.basis, "(m={m},n={n},{}) reduced basis", d.kind);
            }
            let pulled = d.correspondence.lex_pullback_points(VarOrder::syndrome()).unwrap();
            let v = verify_cm(&c.field, &pulled, &d.correspondence).unwrap();
            assert!(
                v.ok,
                "(m={m},n={n},{}) prefix failure at {:?}",
                d.kind,
                v.failure.map(|(s, w, g)| (s, w.exps().to_vec(), g.exps().to_vec()))
            );
            prefix_checks += d.correspondence.len() as u64;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed <= Duration::from_secs(300), "budget: 5 min, took {elapsed:?}");
    pass_line(
        "criterion 05",
        &format!("chain equals oracle on 6 configurations; {prefix_checks} prefixes verified"),
        elapsed,
    );
}

#[test]
fn criterion_06_gelp_root_property() {
    let start = Instant::now();
    let mut total = 0u64;
    for (m, n) in CONFIGS {
        let c = cfg(m, n);
        let base = base_structures(&c).unwrap();
        let chain = derive_chain(&c, &base).unwrap();
        let gelp = locator::gelp_interpolate(&c, &chain[0]).unwrap();
        let sweep = locator::gelp_root_sweep(&c, &gelp);
        // domain: every (c, d) with c != d plus the zero pair
        assert_eq!(sweep.checked, (n as u64) * (n as u64) + n as u64 + 1, "(m={m},n={n}) domain");
        assert_eq!(sweep.failures, 0, "(m={m},n={n})");
        total += sweep.checked;
    }
    pass_line("criterion 06", &format!("{total} syndrome root multisets exact (n up to 63)"), start.elapsed());
}

#[test]
fn criterion_07_sparse_help() {
    let start = Instant::now();
    for (m, n) in [(3u32, 7u32), (4, 15), (5, 31)] {
        let c = cfg(m, n);
        let h = locator::help_sparse(&c).unwrap();
        assert!(h.sparse);
        assert_eq!(h.poly.num_terms() as u64 - 1, (n as u64 - 1) / 2, "(n={n}) support size");
        assert_eq!(h.sweep.checked, n as u64 * (n as u64 - 1) / 2, "(n={n}) sweep domain");
        assert_eq!(h.sweep.failures, 0, "(n={n})");
    }
    pass_line("criterion 07", "sparse systems solvable, scaling sweeps exact for n = 7, 15, 31", start.elapsed());
}

#[test]
fn criterion_08_decoder_exhaustive() {
    let start = Instant::now();
    for (m, n) in [(4u32, 15u32), (3, 7)] {
        let code = Code::new(m, n, 3).unwrap();
        let (ok, detail) = decoder_sweep(&code, 20);
        assert!(ok, "(m={m},n={n}): {detail}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "budget: 10s, took {elapsed:?}");
    pass_line(
        "criterion 08",
        "all weight-<=2 patterns on zero + 20 seeded codewords, both strategies",
        elapsed,
    );
}

#[test]
fn criterion_09_macaulay_random_bases() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut done = 0;
    while done < 50 {
        let nvars = if rng.gen_bool(0.5) { 2 } else { 3 };
        let cap = if nvars == 2 { 5 } else { 3 };
        let mut gens: Vec<Term> = (0..nvars)
            .map(|v| Term::var_pow(nvars, v, rng.gen_range(1..=cap)))
            .collect();
        // sprinkle interior generators inside the pure-power box
        for _ in 0..rng.gen_range(0..3) {
            let exps: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=cap)).collect();
            let t = Term::new(exps);
            if !t.is_one() {
                gens.push(t);
            }
        }
        let esc = match escalier_from_minimal_basis(&gens, nvars) {
            Ok(e) => e,
            Err(_) => continue,
        };
        let minimal = esc.minimal_basis().to_vec();
        let delta = minimal.iter().map(Term::degree).max().unwrap();
        if delta > 6 || esc.is_empty() {
            continue;
        }
        let p = escalier::PrimeField::smallest_prime_at_least(delta);
        let out = macaulay_construct(&minimal, p).unwrap();
        let report = macaulay_verify(&out).unwrap();
        assert!(
            report.all_ok(),
            "basis {:?} over Z_{p}: {report:?}",
            minimal.iter().map(|t| t.exps().to_vec()).collect::<Vec<_>>()
        );
        done += 1;
    }
    pass_line("criterion 09", "50 random bases: ideal equality, correspondence, leading terms, triangularity", start.elapsed());
}

#[test]
fn criterion_10_syndrome_map_facts() {
    let start = Instant::now();
    for (m, n) in CONFIGS {
        let c = cfg(m, n);
        let r = syndrome_map_report(&c);
        for claim in &r.claims {
            assert!(claim.holds, "(m={m},n={n}) {}: {}", claim.name, claim.detail);
        }
        assert!(r.image_size_stable, "(m={m},n={n}) enumeration unstable");
        // the enumerated image size is reported and compared; the closed-form
        // candidate is recorded, never asserted
        println!(
            "  (m={m}, n={n}): image size {} enumerated vs {} candidate ({})",
            r.image_size_enumerated,
            r.image_size_reported,
            if r.image_sizes_agree { "agree" } else { "differ; enumeration kept" }
        );
    }
    pass_line("criterion 10", "syndrome-map facts exhaustive on 7 configurations", start.elapsed());
}
