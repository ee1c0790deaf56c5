// Copyright 2026 the descartes-core Authors
// SPDX-License-Identifier: Apache-2.0

use descartes_core::geometry::{place_configuration, realize_fourth, verify_spinor_laws, Point};
use descartes_core::quadruple::from_spinor_pair;
use descartes_core::rational::to_f64;
use descartes_core::{cross, dot, Spinor};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn close(x: f64, y: f64) -> bool {
    (x - y).abs() <= 1e-9 * y.abs().max(1.0)
}

fn numeric(report: &descartes_core::geometry::ConfigurationReport, i: usize, j: usize) -> Point {
    report
        .spinors
        .iter()
        .find(|s| s.source == (i, j))
        .map(|s| s.u)
        .or_else(|| report.spinors.iter().find(|s| s.source == (j, i)).map(|s| s.u))
        .expect("spinor for pair")
}

/// `{|u·v|, |u×v|}` is unchanged by rotating both, negating either, and
/// reversing either pair (which replaces the spinor by its star).
fn invariants(u: Point, v: Point) -> [f64; 2] {
    let mut p = [u.dot(v).abs(), u.cross(v).abs()];
    p.sort_by(f64::total_cmp);
    p
}

proptest! {
    // roughly one draw in five has A, B, C > 0
    #![proptest_config(ProptestConfig { cases: 300, max_global_rejects: 20_000, ..ProptestConfig::default() })]

    #[test]
    fn numeric_spinors_match_generators(
        m1 in -12i64..=12, n1 in -12i64..=12, m2 in -12i64..=12, n2 in -12i64..=12,
    ) {
        let (a, b) = (Spinor::from_ints(m1, n1), Spinor::from_ints(m2, n2));
        let f = from_spinor_pair(&a, &b);
        let [ka, kb, kc] = f.abc();
        prop_assume!(ka.is_positive() && kb.is_positive() && kc.is_positive());
        prop_assume!(!f.d1().is_zero());

        let placed = place_configuration(&ka, &kb, &kc).unwrap();
        let fourth = realize_fourth(&placed, f.d1(), 1e-9).unwrap();
        let disks = [placed[0], placed[1], placed[2], fourth];
        let report = verify_spinor_laws(&disks, 1e-9).unwrap();
        prop_assert!(report.passed, "{:?}", report.law_residuals);

        // a spans the pair (B, C), b the pair (C, A), c the pair (A, B)
        let c = -(&a + &b);
        for (exact, (i, j)) in [(&a, (1, 2)), (&b, (2, 0)), (&c, (0, 1))] {
            let u = numeric(&report, i, j);
            prop_assert!(close(u.norm_sq(), to_f64(&exact.norm_sq())));
        }
        let (ua, ub) = (numeric(&report, 1, 2), numeric(&report, 2, 0));
        let mut expected = [to_f64(&dot(&a, &b)).abs(), to_f64(&cross(&a, &b)).abs()];
        expected.sort_by(f64::total_cmp);
        let got = invariants(ua, ub);
        prop_assert!(close(got[0], expected[0]) && close(got[1], expected[1]), "{got:?} vs {expected:?}");
    }
}
