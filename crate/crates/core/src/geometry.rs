// Copyright 2026 the descartes-core Authors
// SPDX-License-Identifier: Apache-2.0

//! Placed circles and their tangency spinors.
//!
//! A disk of signed radius `r` (negative for the unbounded disk outside a
//! circle) is tangent to another when `|c₁ − c₂|² = (r₁ + r₂)²`, which
//! covers external tangency and internal tangency with an enclosing disk in
//! one formula. The tangency spinor of an ordered pair is a square root of
//! `(c₂ − c₁)/(r₁r₂)`, read as a complex number; it is only defined up to
//! sign, so every law below is checked with a finite sign search.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::spinor::{PythTriple, Spinor};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Pairwise tangency of a fresh placement is validated at this relative level.
const PLACEMENT_TOLERANCE: f64 = 1e-12;

/// A disk label `(ẋ, ẏ)/β`: centre `(ẋ/β, ẏ/β)`, radius `1/β`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Symbol {
    #[serde(with = "rational::serde_str")]
    pub x_dot: Rational,
    #[serde(with = "rational::serde_str")]
    pub y_dot: Rational,
    #[serde(with = "rational::serde_str")]
    pub beta: Rational,
}

impl Symbol {
    pub fn new(x_dot: Rational, y_dot: Rational, beta: Rational) -> Result<Self> {
        if beta.is_zero() {
            return Err(Error::ZeroCurvature("a symbol needs a non-zero curvature".into()));
        }
        Ok(Symbol { x_dot, y_dot, beta })
    }

    pub fn from_center(center: &Spinor, curvature: Rational) -> Result<Self> {
        Symbol::new(&center.x * &curvature, &center.y * &curvature, curvature)
    }

    pub fn center(&self) -> Spinor {
        Spinor::new(&self.x_dot / &self.beta, &self.y_dot / &self.beta)
    }

    pub fn radius(&self) -> Rational {
        self.beta.recip()
    }
}

/// Exact tangency test on signed radii.
pub fn symbols_tangent(s1: &Symbol, s2: &Symbol) -> bool {
    let r = s1.radius() + s2.radius();
    (s1.center() - s2.center()).norm_sq() == &r * &r
}

/// The triangle of two tangent disks,
/// `(β₁ẋ₂ − β₂ẋ₁, β₁ẏ₂ − β₂ẏ₁, β₁ + β₂)`.
pub fn symbol_join(s1: &Symbol, s2: &Symbol) -> Result<PythTriple> {
    if !symbols_tangent(s1, s2) {
        return Err(Error::NotTangent(format!(
            "disks at ({}) and ({}) are not tangent",
            s1.center(),
            s2.center()
        )));
    }
    let a = &s1.beta * &s2.x_dot - &s2.beta * &s1.x_dot;
    let b = &s1.beta * &s2.y_dot - &s2.beta * &s1.y_dot;
    let c = &s1.beta + &s2.beta;
    // the hypotenuse is |β₁ + β₂|; keep its sign so that c ≥ 0
    PythTriple::new(a, b, c.abs())
}

#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_sq(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - o.x * self.y
    }

    /// Complex division.
    pub fn div_complex(self, o: Point) -> Point {
        let d = o.norm_sq();
        Point::new((self.x * o.x + self.y * o.y) / d, (self.y * o.x - self.x * o.y) / d)
    }

    /// Principal square root: `Re > 0`, or `Re = 0` and `Im ≥ 0`.
    pub fn sqrt_principal(self) -> Point {
        let r = self.norm();
        if r == 0.0 {
            return Point::default();
        }
        if self.x >= 0.0 {
            let re = ((r + self.x) / 2.0).sqrt();
            Point::new(re, self.y / (2.0 * re))
        } else {
            let im = ((r - self.x) / 2.0).sqrt();
            let im = if self.y < 0.0 { -im } else { im };
            Point::new(self.y / (2.0 * im), im)
        }
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<Point> for f64 {
    type Output = Point;
    fn mul(self, p: Point) -> Point {
        Point::new(self * p.x, self * p.y)
    }
}

impl Serialize for Point {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.x, self.y].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [x, y] = <[f64; 2]>::deserialize(d)?;
        Ok(Point::new(x, y))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlacedDisk {
    pub center: Point,
    /// Signed; negative for an unbounded disk.
    pub radius: f64,
    pub curvature: f64,
}

impl PlacedDisk {
    pub fn new(center: Point, curvature: f64) -> Self {
        PlacedDisk {
            center,
            radius: curvature.recip(),
            curvature,
        }
    }

    fn check(&self) -> Result<()> {
        if self.radius == 0.0 || !self.radius.is_finite() || !self.curvature.is_finite() {
            return Err(Error::ZeroRadius(format!(
                "disk at ({}, {}) has radius {}",
                self.center.x, self.center.y, self.radius
            )));
        }
        Ok(())
    }
}

/// `| |c₁ − c₂| − |r₁ + r₂| |` scaled by `max(1, |r₁| + |r₂|)`.
pub fn tangency_error(d1: &PlacedDisk, d2: &PlacedDisk) -> f64 {
    let gap = (d1.center - d2.center).norm() - (d1.radius + d2.radius).abs();
    gap.abs() / (d1.radius.abs() + d2.radius.abs()).max(1.0)
}

fn relative_tangency_error(d1: &PlacedDisk, d2: &PlacedDisk) -> f64 {
    let gap = (d1.center - d2.center).norm() - (d1.radius + d2.radius).abs();
    gap.abs() / (d1.radius.abs() + d2.radius.abs())
}

fn require_tangent(d1: &PlacedDisk, d2: &PlacedDisk, tol: f64) -> Result<()> {
    d1.check()?;
    d2.check()?;
    let err = tangency_error(d1, d2);
    if err > tol {
        return Err(Error::NotTangent(format!(
            "disks of curvature {} and {} miss tangency by {err:e}",
            d1.curvature, d2.curvature
        )));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TangencySpinorNumeric {
    pub u: Point,
    /// Ordered pair of disk indices.
    pub source: (usize, usize),
}

/// Principal square root of `(c₂ − c₁)/(r₁r₂)`.
pub fn tangency_spinor(d1: &PlacedDisk, d2: &PlacedDisk, tol: f64) -> Result<Point> {
    require_tangent(d1, d2, tol)?;
    let z = d2.center - d1.center;
    Ok((1.0 / (d1.radius * d2.radius) * z).sqrt_principal())
}

fn cmul(p: Point, q: Point) -> Point {
    Point::new(p.x * q.x - p.y * q.y, p.x * q.y + p.y * q.x)
}

/// Intersections of two circles given by centre and (unsigned) radius.
fn circle_intersections(c0: Point, r0: f64, c1: Point, r1: f64) -> Option<[Point; 2]> {
    let delta = c1 - c0;
    let d = delta.norm();
    if d == 0.0 {
        return None;
    }
    let along = (r0 * r0 - r1 * r1 + d * d) / (2.0 * d);
    let mut h2 = r0 * r0 - along * along;
    if h2 < 0.0 {
        // tangent circles up to rounding
        if h2 < -1e-9 * (r0 * r0).max(r1 * r1) {
            return None;
        }
        h2 = 0.0;
    }
    let h = h2.sqrt();
    let unit = (1.0 / d) * delta;
    let foot = c0 + along * unit;
    let normal = Point::new(-unit.y, unit.x);
    Some([foot + h * normal, foot - h * normal])
}

fn positive_f64(k: &Rational, what: &str) -> Result<f64> {
    if !k.is_positive() {
        return Err(Error::NonPositiveCurvature(format!(
            "{what} = {} must be positive",
            rational::format(k)
        )));
    }
    Ok(rational::to_f64(k))
}

/// Places three mutually tangent disks of positive curvature: the first at
/// the origin, the second on the positive x-axis, the third above it.
pub fn place_configuration(a: &Rational, b: &Rational, c: &Rational) -> Result<[PlacedDisk; 3]> {
    let (ka, kb, kc) = (positive_f64(a, "A")?, positive_f64(b, "B")?, positive_f64(c, "C")?);
    let (ra, rb, rc) = (ka.recip(), kb.recip(), kc.recip());
    let da = PlacedDisk::new(Point::default(), ka);
    let db = PlacedDisk::new(Point::new(ra + rb, 0.0), kb);
    let [p, q] = circle_intersections(da.center, ra + rc, db.center, rb + rc)
        .expect("sides of a tangent triangle satisfy the triangle inequality");
    let dc = PlacedDisk::new(if p.y > 0.0 { p } else { q }, kc);
    let placed = [da, db, dc];
    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
        let err = relative_tangency_error(&placed[i], &placed[j]);
        debug_assert!(err <= PLACEMENT_TOLERANCE, "placement error {err:e}");
    }
    Ok(placed)
}

/// Places the disk of curvature `d` tangent to the three placed disks.
pub fn realize_fourth(placed: &[PlacedDisk; 3], d: &Rational, tol: f64) -> Result<PlacedDisk> {
    if d.is_zero() {
        return Err(Error::ZeroCurvature("a curvature-0 disk is a line".into()));
    }
    let kd = rational::to_f64(d);
    let rd = kd.recip();
    let [a, b, c] = placed;
    let none = || {
        Error::NoConsistentPlacement(format!(
            "no disk of curvature {} touches disks of curvature {}, {}, {}",
            rational::format(d),
            a.curvature,
            b.curvature,
            c.curvature
        ))
    };
    // complex Descartes relation for centres:
    // k₄z₄ = Σkᵢzᵢ ± 2√(k₁k₂z₁z₂ + k₂k₃z₂z₃ + k₃k₁z₃z₁)
    let kz = |d: &PlacedDisk| d.curvature * d.center;
    let (wa, wb, wc) = (kz(a), kz(b), kz(c));
    let linear = wa + wb + wc;
    let root = (cmul(wa, wb) + cmul(wb, wc) + cmul(wc, wa)).sqrt_principal();
    let (err, best) = [linear + 2.0 * root, linear - 2.0 * root]
        .iter()
        .map(|&w| {
            let disk = PlacedDisk::new(rd * w, kd);
            let err = [a, b, c]
                .iter()
                .map(|p| relative_tangency_error(p, &disk))
                .fold(0.0, f64::max);
            (err, disk)
        })
        .min_by(|x, y| x.0.total_cmp(&y.0))
        .expect("two candidates");
    if err.is_nan() || err > tol {
        return Err(none());
    }
    Ok(best)
}

/// Places a full quadruple, keeping the input order. Three entries must be
/// positive; the remaining one may be negative but not zero.
pub fn realize_quadruple(q: &[Rational; 4], tol: f64) -> Result<[PlacedDisk; 4]> {
    if let Some(z) = q.iter().find(|k| k.is_zero()) {
        return Err(Error::ZeroCurvature(format!(
            "curvature {} is a line and cannot be placed",
            rational::format(z)
        )));
    }
    let positive: Vec<usize> = (0..4).filter(|&i| q[i].is_positive()).collect();
    if positive.len() < 3 {
        return Err(Error::NonPositiveCurvature(format!(
            "at most one curvature may be negative, got {}",
            q.iter().map(rational::format).collect::<Vec<_>>().join(",")
        )));
    }
    let triple = [positive[0], positive[1], positive[2]];
    let fourth = (0..4).find(|i| !triple.contains(i)).unwrap();
    let placed = place_configuration(&q[triple[0]], &q[triple[1]], &q[triple[2]])?;
    let last = realize_fourth(&placed, &q[fourth], tol)?;
    let mut out = [last; 4];
    for (k, &i) in triple.iter().enumerate() {
        out[i] = placed[k];
    }
    Ok(out)
}

/// The point where two tangent disks touch, `(β₁c₁ + β₂c₂)/(β₁ + β₂)`.
pub fn tangency_point(d1: &PlacedDisk, d2: &PlacedDisk) -> Point {
    let w = d1.curvature + d2.curvature;
    (1.0 / w) * (d1.curvature * d1.center + d2.curvature * d2.center)
}

/// Curvature of the circle through three points, `4·area / (abc)`; zero
/// for collinear points.
pub fn circumcircle_curvature(p: Point, q: Point, r: Point) -> f64 {
    let twice_area = (q - p).cross(r - p).abs();
    2.0 * twice_area / ((q - p).norm() * (r - q).norm() * (p - r).norm())
}

/// The circle through the three tangency points of a tangent triple.
pub fn midcircle_through_tangencies(d1: &PlacedDisk, d2: &PlacedDisk, d3: &PlacedDisk, tol: f64) -> Result<PlacedDisk> {
    require_tangent(d1, d2, tol)?;
    require_tangent(d2, d3, tol)?;
    require_tangent(d1, d3, tol)?;
    let p = tangency_point(d1, d2);
    let q = tangency_point(d2, d3);
    let r = tangency_point(d3, d1);
    let (u, v) = (q - p, r - p);
    let det = 2.0 * u.cross(v);
    let scale = u.norm_sq().max(v.norm_sq());
    if det.abs() <= 1e-12 * scale {
        return Err(Error::CollinearTangencyPoints);
    }
    let offset = Point::new(
        (v.y * u.norm_sq() - u.y * v.norm_sq()) / det,
        (u.x * v.norm_sq() - v.x * u.norm_sq()) / det,
    );
    Ok(PlacedDisk::new(p + offset, offset.norm().recip()))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SignAssignment {
    pub law: String,
    /// Disk indices the signs refer to, in order.
    pub disks: Vec<usize>,
    pub signs: Vec<i8>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Midcircle {
    pub disks: [usize; 3],
    /// Circumcircle of the tangency points.
    pub curvature: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfigurationReport {
    pub disks: [PlacedDisk; 4],
    pub spinors: Vec<TangencySpinorNumeric>,
    /// Worst residual per law, each scaled by `max(1, |expected value|)`.
    pub law_residuals: BTreeMap<String, f64>,
    pub sign_assignment: Vec<SignAssignment>,
    pub midcircles: Vec<Midcircle>,
    pub tolerance: f64,
    pub passed: bool,
}

impl ConfigurationReport {
    pub fn residual(&self, law: &str) -> f64 {
        self.law_residuals.get(law).copied().unwrap_or(f64::NAN)
    }
}

pub const LAWS: [&str; 6] = ["prop1", "thm2", "thm3", "thm4_curl", "thm5a_div", "thm5b_add"];

const SIGNS: [(i8, i8); 4] = [(1, 1), (1, -1), (-1, 1), (-1, -1)];

fn scaled(err: f64, expected: f64) -> f64 {
    err / expected.abs().max(1.0)
}

/// `min` over `s₂, s₃ ∈ {±1}` of `|u₁ + s₂u₂ + s₃u₃|`, scaled by the
/// largest spinor; returns the residual and the signs achieving it.
fn vanishing_sum(u1: Point, u2: Point, u3: Point) -> (f64, [i8; 3]) {
    let scale = u1.norm().max(u2.norm()).max(u3.norm());
    SIGNS
        .iter()
        .map(|&(s2, s3)| {
            let sum = u1 + f64::from(s2) * u2 + f64::from(s3) * u3;
            (scaled(sum.norm(), scale), [1, s2, s3])
        })
        .min_by(|x, y| x.0.total_cmp(&y.0))
        .unwrap()
}

#[derive(Default)]
struct Worst {
    residuals: BTreeMap<String, f64>,
}

impl Worst {
    fn record(&mut self, law: &str, r: f64) {
        let slot = self.residuals.entry(law.to_string()).or_insert(0.0);
        // NaN must surface as a failure
        if r.is_nan() || r > *slot {
            *slot = r;
        }
    }
}

fn sign_of(x: f64) -> i8 {
    if x < 0.0 {
        -1
    } else {
        1
    }
}

/// Extracts all tangency spinors of a placed Descartes configuration and
/// checks each spinor law, reporting the worst residual per law.
#[allow(clippy::needless_range_loop)] // u is indexed by column
pub fn verify_spinor_laws(disks: &[PlacedDisk; 4], tol: f64) -> Result<ConfigurationReport> {
    let mut u = [[Point::default(); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                u[i][j] = tangency_spinor(&disks[i], &disks[j], tol)?;
            }
        }
    }
    let k = disks.map(|d| d.curvature);
    let mut worst = Worst::default();
    let mut signs = Vec::new();
    let mut spinors = Vec::with_capacity(6);

    for i in 0..4 {
        for j in i + 1..4 {
            spinors.push(TangencySpinorNumeric {
                u: u[i][j],
                source: (i, j),
            });
            let expected = k[i] + k[j];
            worst.record("prop1", scaled((u[i][j].norm_sq() - expected).abs(), expected));
        }
    }

    let triples = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    let mut midcircles = Vec::with_capacity(4);
    for t in triples {
        let [i, j, l] = t;
        let mid = circumcircle_curvature(
            tangency_point(&disks[i], &disks[j]),
            tangency_point(&disks[j], &disks[l]),
            tangency_point(&disks[l], &disks[i]),
        );
        midcircles.push(Midcircle {
            disks: t,
            curvature: mid,
        });

        for (hub, p, q) in [(i, j, l), (j, l, i), (l, i, j)] {
            let cr = u[hub][p].cross(u[hub][q]);
            worst.record("thm2", scaled((cr.abs() - k[hub].abs()).abs(), k[hub]));
            signs.push(SignAssignment {
                law: "thm2".into(),
                disks: vec![hub, p, q],
                signs: vec![sign_of(cr) * sign_of(k[hub])],
            });
            let dt = u[hub][p].dot(u[hub][q]);
            worst.record("thm3", scaled((dt.abs() - mid).abs(), mid));
            signs.push(SignAssignment {
                law: "thm3".into(),
                disks: vec![hub, p, q],
                signs: vec![sign_of(dt)],
            });
        }

        let (r, s) = vanishing_sum(u[i][j], u[j][l], u[l][i]);
        worst.record("thm4_curl", r);
        signs.push(SignAssignment {
            law: "thm4_curl".into(),
            disks: vec![i, j, l],
            signs: s.to_vec(),
        });
    }

    for hub in 0..4 {
        let others: Vec<usize> = (0..4).filter(|&x| x != hub).collect();
        let (r, s) = vanishing_sum(u[others[0]][hub], u[others[1]][hub], u[others[2]][hub]);
        worst.record("thm5a_div", r);
        signs.push(SignAssignment {
            law: "thm5a_div".into(),
            disks: vec![others[0], others[1], others[2], hub],
            signs: s.to_vec(),
        });

        for &target in &others {
            let rest: Vec<usize> = others.iter().copied().filter(|&x| x != target).collect();
            let (ua, ub, ud) = (u[hub][rest[0]], u[hub][rest[1]], u[hub][target]);
            let scale = ua.norm().max(ub.norm()).max(ud.norm());
            let (r, s) = SIGNS
                .iter()
                .map(|&(sa, sb)| {
                    let diff = f64::from(sa) * ua + f64::from(sb) * ub - ud;
                    (scaled(diff.norm(), scale), [sa, sb, 1])
                })
                .min_by(|x, y| x.0.total_cmp(&y.0))
                .unwrap();
            worst.record("thm5b_add", r);
            signs.push(SignAssignment {
                law: "thm5b_add".into(),
                disks: vec![hub, rest[0], rest[1], target],
                signs: s.to_vec(),
            });
        }
    }

    let passed = LAWS
        .iter()
        .all(|law| worst.residuals.get(*law).is_some_and(|&r| r <= tol));
    Ok(ConfigurationReport {
        disks: *disks,
        spinors,
        law_residuals: worst.residuals,
        sign_assignment: signs,
        midcircles,
        tolerance: tol,
        passed,
    })
}

/// Rounds a numeric spinor to an integral one when both components are
/// within `tol` of integers.
pub fn exactify(u: Point, tol: f64) -> Option<Spinor> {
    let (x, y) = (u.x.round(), u.y.round());
    ((u.x - x).abs() <= tol && (u.y - y).abs() <= tol).then(|| Spinor::from_ints(x as i64, y as i64))
}
