// Copyright 2026 the descartes-core Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeSet;

use descartes_core::enumerate::{dedup_canonical, enumerate, EnumerationJob};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Every primitive integral Descartes quadruple with entries in
/// `[-limit, limit]`, sorted ascending, by direct search over `a ≤ b ≤ c`.
fn brute_force(limit: i64) -> BTreeSet<[i64; 4]> {
    let mut out = BTreeSet::new();
    for a in -limit..=limit {
        for b in a..=limit {
            for c in b..=limit {
                // d² − 2d(a+b+c) + (a²+b²+c²) − 2(ab+bc+ca) = 0
                let s = a + b + c;
                let disc = a * b + b * c + c * a;
                if disc < 0 {
                    continue;
                }
                let r = (disc as f64).sqrt().round() as i64;
                if r * r != disc {
                    continue;
                }
                for d in [s + 2 * r, s - 2 * r] {
                    if d.abs() > limit {
                        continue;
                    }
                    let mut q = [a, b, c, d];
                    q.sort();
                    if gcd(gcd(q[0], q[1]), gcd(q[2], q[3])) == 1 {
                        out.insert(q);
                    }
                }
            }
        }
    }
    out
}

#[test]
fn bound_two_canonicals_are_primitive_descartes() {
    let oracle = brute_force(50);
    assert!(oracle.contains(&[-1, 2, 2, 3]));
    assert!(oracle.contains(&[2, 3, 6, 23]));
    assert!(!oracle.contains(&[2, 3, 3, 15]));

    let stream = dedup_canonical(enumerate(&EnumerationJob::new(2)).unwrap());
    for q in &stream {
        assert!(q.iter().all(|x| x.abs() <= 50), "{q:?} outside the search window");
        assert!(oracle.contains(q), "{q:?} missing from brute force");
    }
    // regression pin
    assert_eq!(stream.len(), 20);
}
