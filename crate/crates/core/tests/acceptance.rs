// Copyright 2026 the descartes-core Authors
// SPDX-License-Identifier: Apache-2.0

//! End-to-end acceptance checks. Runs without the libtest harness so that
//! each criterion prints exactly one PASS/FAIL line.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode, Output};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use descartes_core::enumerate::{read_records, OutputFormat, QuadrupleRecord};
use descartes_core::geometry::{
    midcircle_through_tangencies, place_configuration, realize_fourth, realize_quadruple, verify_spinor_laws, LAWS,
};
use descartes_core::quadruple::{descartes_residual, from_spinor_pair, DescartesQuadruple};
use descartes_core::rational::{frac, int, Rational};
use descartes_core::tessellation::{build_tessellation, summarize, tile_area_pick, tile_area_shoelace};
use descartes_core::{cross, dot, star, Spinor};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_descartes"))
        .args(args)
        .env_remove("DESCARTES_TOLERANCE")
        .output()
        .expect("run descartes")
}

fn cli_ok(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = cli(args);
    if !out.status.success() {
        return Err(format!(
            "`descartes {}` exited with {}: {}",
            args.join(" "),
            out.status,
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(out.stdout)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Independent of the library: `2Σx² − (Σx)²` in i128.
fn residual_i128(q: [i64; 4]) -> i128 {
    let s: i128 = q.iter().map(|&x| i128::from(x)).sum();
    let s2: i128 = q.iter().map(|&x| i128::from(x) * i128::from(x)).sum();
    2 * s2 - s * s
}

fn strings(v: &Value) -> Vec<String> {
    match v {
        Value::Array(items) => items.iter().flat_map(strings).collect(),
        Value::String(s) => vec![s.clone()],
        other => vec![other.to_string()],
    }
}

fn sorted(v: &Value) -> Vec<i64> {
    let mut out: Vec<i64> = strings(v).iter().map(|s| s.parse().unwrap()).collect();
    out.sort();
    out
}

fn criterion_1() -> Outcome {
    let raw = cli_ok(&["tess", "--a", "3,0", "--b", "-1,2", "--json"])?;
    let doc: Value = serde_json::from_slice(&raw).map_err(|e| e.to_string())?;
    let r = &doc["report"];
    ensure(sorted(&r["square_areas"]) == [5, 8, 9], || {
        format!("squares {}", r["square_areas"])
    })?;
    ensure(sorted(&r["red_areas"]) == [2, 3, 6], || {
        format!("reds {}", r["red_areas"])
    })?;
    let greens: Vec<String> = doc["tiles"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|t| t["class"] == "green")
        .map(|t| t["area"].as_str().unwrap().to_string())
        .collect();
    ensure(greens.len() == 6 && greens.iter().all(|g| g == "6"), || {
        format!("greens {greens:?}")
    })?;
    ensure(r["D"] == "23" && r["D_prime"] == "-1", || {
        format!("D {} D' {}", r["D"], r["D_prime"])
    })?;
    let mut with_d = sorted(&r["midcircles_with_d"]);
    with_d.extend(sorted(&r["midcircle_abc"]));
    with_d.sort();
    ensure(with_d == [6, 11, 14, 15], || format!("mid-circles with D {with_d:?}"))?;
    let with_dp = sorted(&r["midcircles_with_d_prime"]);
    ensure(with_dp == [-1, 2, 3], || format!("mid-circles with D' {with_dp:?}"))?;
    let obs = doc["observations"].as_array().unwrap();
    ensure(obs.iter().all(|o| o["passed"] == true), || {
        "an observation failed".into()
    })?;
    let constant = obs
        .iter()
        .find(|o| o["name"] == "square_plus_vertex_red_constant")
        .unwrap();
    ensure(constant["witness"] == "11", || {
        format!("constant {}", constant["witness"])
    })?;
    Ok("squares {5,8,9}, reds {2,3,6}, greens 6, D 23, D' -1, mid-circles {6,11,14,15} / {-1,2,3}, constant 11".into())
}

fn bound3_records() -> Result<Vec<QuadrupleRecord>, String> {
    let raw = cli_ok(&["enumerate", "--bound", "3"])?;
    read_records(OutputFormat::Csv, &String::from_utf8(raw).unwrap()).map_err(|e| e.to_string())
}

fn criterion_2() -> Outcome {
    let records = bound3_records()?;
    ensure(records.len() == 7usize.pow(4) - (2 * 49 - 1), || {
        format!("{} records", records.len())
    })?;
    for r in &records {
        for d in [r.d1, r.d2] {
            let exact = descartes_residual(&[r.a, r.b, r.c, d].map(int));
            ensure(exact == int(0) && residual_i128([r.a, r.b, r.c, d]) == 0, || {
                format!("{r:?}")
            })?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..100_000 {
        let mut e = || rng.gen_range(-50i64..=50);
        let (a, b) = (Spinor::from_ints(e(), e()), Spinor::from_ints(e(), e()));
        let f = from_spinor_pair(&a, &b);
        for q in [&f.quadruple_1, &f.quadruple_2] {
            let ints = q.to_array().map(|x| x.to_integer().try_into().unwrap());
            ensure(residual_i128(ints) == 0, || format!("{a} {b}: {q}"))?;
        }
    }
    Ok(format!(
        "{} enumerated pairs and 100000 random pairs, both roots residual 0",
        records.len()
    ))
}

fn criterion_3() -> Outcome {
    let known = [
        [2, 3, 6, 23],
        [2, 3, 6, -1],
        [2, 2, 3, 15],
        [3, 14, 6, 47],
        [11, 14, 23, 102],
    ];
    for q in known {
        ensure(residual_i128(q) == 0, || {
            format!("{q:?} has residual {}", residual_i128(q))
        })?;
        DescartesQuadruple::from_ints(q).map_err(|e| e.to_string())?;
    }
    // the caption's left-hand multiset is not a Descartes quadruple
    ensure(residual_i128([2, 3, 3, 15]) != 0, || {
        "(2,3,3,15) unexpectedly Descartes".into()
    })?;
    Ok("5 known quadruples exact; (2,3,3,15) rejected, (2,2,3,15) used".into())
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut checked = 0;
    while checked < 10_000 {
        let mut e = || rng.gen_range(-40i64..=40);
        let (a, b) = (Spinor::from_ints(e(), e()), Spinor::from_ints(e(), e()));
        let g = cross(&a, &b);
        if g == int(0) {
            continue;
        }
        let t = build_tessellation(&a, &b).map_err(|e| e.to_string())?;
        let area = |label: &str| t.tile(label).unwrap().signed_area.clone();
        let (ta, tb, tc) = (area("red_b*c"), area("red_c*a"), area("red_a*b"));
        let green = area("green_axb");
        let sum = &ta + &tb + &tc;
        let (d, d_prime) = (&sum + &(&int(2) * &green), &sum - &(&int(2) * &green));

        let f = from_spinor_pair(&a, &b);
        ensure(f.abc() == [ta.clone(), tb.clone(), tc.clone()], || {
            format!("{a} {b}: A,B,C")
        })?;
        let pair: BTreeSet<Rational> = [f.d1().clone(), f.d2().clone()].into();
        let tess: BTreeSet<Rational> = [d.clone(), d_prime.clone()].into();
        ensure(pair == tess, || format!("{a} {b}: D roots {pair:?} vs {tess:?}"))?;
        ensure(&d - &d_prime == &int(4) * &g, || format!("{a} {b}: D - D'"))?;
        checked += 1;
    }
    Ok("10000 random pairs agree exactly; D - D' = 4 a x b".into())
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut accepted, mut drawn) = (0, 0);
    while accepted < 1000 {
        drawn += 1;
        let mut e = || rng.gen_range(-10i64..=10);
        let (a, b) = (Spinor::from_ints(e(), e()), Spinor::from_ints(e(), e()));
        let Ok(t) = build_tessellation(&a, &b) else { continue };
        if t.tiles.iter().any(|tile| tile.signed_area <= int(0)) {
            continue;
        }
        for tile in &t.tiles {
            let pick = tile_area_pick(tile).map_err(|e| format!("{a} {b} {}: {e}", tile.label))?;
            let shoelace = tile_area_shoelace(tile);
            let wedge = cross(&tile.edge1, &tile.edge2);
            ensure(pick == shoelace && shoelace == wedge, || {
                format!("{a} {b} {}: pick {pick} shoelace {shoelace} cross {wedge}", tile.label)
            })?;
        }
        accepted += 1;
    }
    Ok(format!(
        "1000 all-positive tessellations ({drawn} drawn), 15000 tiles agree"
    ))
}

fn criterion_6() -> Outcome {
    let records = bound3_records()?;
    let mut quadruples = BTreeSet::new();
    let mut zero_d = 0;
    for r in records.iter().filter(|r| r.primitive && r.a > 0 && r.b > 0 && r.c > 0) {
        for d in [r.d1, r.d2] {
            if d == 0 {
                zero_d += 1;
            } else {
                quadruples.insert([r.a, r.b, r.c, d]);
            }
        }
    }
    let mut worst: BTreeMap<&str, f64> = LAWS.iter().map(|&l| (l, 0.0)).collect();
    for q in &quadruples {
        let disks = realize_quadruple(&q.map(int), 1e-9).map_err(|e| format!("{q:?}: {e}"))?;
        let report = verify_spinor_laws(&disks, 1e-9).map_err(|e| format!("{q:?}: {e}"))?;
        for law in LAWS {
            let r = report.residual(law);
            ensure(r <= 1e-9, || format!("{q:?}: {law} residual {r:e}"))?;
            let slot = worst.get_mut(law).unwrap();
            *slot = slot.max(r);
        }
        ensure(report.passed, || format!("{q:?} not passed"))?;
    }
    let summary: Vec<String> = worst.iter().map(|(l, r)| format!("{l} {r:.1e}")).collect();
    Ok(format!(
        "{} distinct configurations ({zero_d} with D = 0 skipped); worst {}",
        quadruples.len(),
        summary.join(", ")
    ))
}

fn criterion_7() -> Outcome {
    let placed = place_configuration(&int(2), &int(3), &int(6)).map_err(|e| e.to_string())?;
    let fourth = realize_fourth(&placed, &int(23), 1e-9).map_err(|e| e.to_string())?;
    let disks = [placed[0], placed[1], placed[2], fourth];
    let mut geometric = Vec::new();
    for [i, j, k] in [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]] {
        let m = midcircle_through_tangencies(&disks[i], &disks[j], &disks[k], 1e-9).map_err(|e| e.to_string())?;
        geometric.push(m.curvature);
    }
    geometric.sort_by(f64::total_cmp);

    let t = build_tessellation(&Spinor::from_ints(3, 0), &Spinor::from_ints(-1, 2)).map_err(|e| e.to_string())?;
    let report = summarize(&t);
    let mut tiles: Vec<f64> = std::iter::once(&report.midcircle_abc)
        .chain(&report.midcircles_with_d)
        .map(descartes_core::rational::to_f64)
        .collect();
    tiles.sort_by(f64::total_cmp);
    for (g, e) in geometric.iter().zip(&tiles) {
        ensure((g - e).abs() <= 1e-9, || {
            format!("geometric {geometric:?} vs tiles {tiles:?}")
        })?;
    }
    ensure(tiles == [6.0, 11.0, 14.0, 15.0], || format!("tiles {tiles:?}"))?;
    Ok(format!("circumcircles {geometric:?} match tile sums {{6,11,14,15}}"))
}

fn criterion_8() -> Outcome {
    let whole = cli_ok(&["enumerate", "--bound", "2"])?;
    let mut merged = Vec::new();
    for i in 0..4 {
        let shard = format!("{i}/4");
        let out = cli_ok(&["enumerate", "--bound", "2", "--shard", &shard])?;
        let body = if i == 0 {
            &out[..]
        } else {
            let nl = out.iter().position(|&b| b == b'\n').unwrap();
            &out[nl + 1..]
        };
        merged.extend_from_slice(body);
    }
    ensure(merged == whole, || "sharded output differs from unsharded".into())?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = |name: &str| dir.path().join(name).to_str().unwrap().to_string();
    let mut svgs = Vec::new();
    for run in 0..2 {
        let tess_svg = path(&format!("tess{run}.svg"));
        cli_ok(&["tess", "--a", "3,0", "--b", "-1,2", "--svg", &tess_svg])?;
        let json = cli_ok(&["verify", "--curvatures", "2,3,6,23", "--json"])?;
        let report = path(&format!("report{run}.json"));
        std::fs::write(&report, json).map_err(|e| e.to_string())?;
        let conf_svg = path(&format!("conf{run}.svg"));
        cli_ok(&["render", "--from-json", &report, "--out", &conf_svg, "--midcircles"])?;
        let read = |p: &str| std::fs::read(p).map_err(|e| e.to_string());
        svgs.push((read(&tess_svg)?, read(&conf_svg)?));
    }
    ensure(svgs[0] == svgs[1], || "SVG bytes differ across runs".into())?;
    Ok(format!(
        "{} bytes of shard output identical; tessellation and configuration SVGs stable",
        whole.len()
    ))
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    frac(rng.gen_range(-1000..=1000), rng.gen_range(1..=1000))
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let zero = int(0);
    for _ in 0..10_000 {
        let a = Spinor::new(random_rational(&mut rng), random_rational(&mut rng));
        let b = Spinor::new(random_rational(&mut rng), random_rational(&mut rng));
        let checks = [
            ("cross = dot(star a, b)", cross(&a, &b) == dot(&star(&a), &b)),
            ("star star = -1", star(&star(&a)) == -&a),
            ("dot star-invariant", dot(&star(&a), &star(&b)) == dot(&a, &b)),
            ("cross star-invariant", cross(&star(&a), &star(&b)) == cross(&a, &b)),
            ("a x a = 0", cross(&a, &a) == zero),
            ("a . a* = 0", dot(&a, &star(&a)) == zero),
        ];
        for (name, ok) in checks {
            ensure(ok, || format!("{name} fails for a = {a}, b = {b}"))?;
        }
    }
    Ok("6 identities on 10000 random rational pairs".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("worked example", criterion_1),
        ("Descartes residual", criterion_2),
        ("known quadruples", criterion_3),
        ("duality", criterion_4),
        ("area oracles", criterion_5),
        ("geometric realization", criterion_6),
        ("mid-circle geometry", criterion_7),
        ("determinism", criterion_8),
        ("spinor identities", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {} ({name}, {secs:.2}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {} ({name}, {secs:.2}s): {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
