// Copyright 2026 the descartes-core Authors
// SPDX-License-Identifier: Apache-2.0

//! Curvature arithmetic for Descartes quadruples.
//!
//! Four mutually tangent circles with curvatures `A, B, C, D` satisfy
//! `2(A² + B² + C² + D²) = (A + B + C + D)²`. Negative curvature marks the
//! unbounded disk outside a circle and zero marks a line; neither is special
//! here.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::spinor::Spinor;

/// `2(A² + B² + C² + D²) − (A + B + C + D)²`.
pub fn descartes_residual(q: &[Rational; 4]) -> Rational {
    let sum: Rational = q.iter().sum();
    let sum_sq: Rational = q.iter().map(|x| x * x).sum();
    rational::int(2) * sum_sq - &sum * &sum
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DescartesQuadruple {
    #[serde(rename = "A", with = "rational::serde_str")]
    pub a: Rational,
    #[serde(rename = "B", with = "rational::serde_str")]
    pub b: Rational,
    #[serde(rename = "C", with = "rational::serde_str")]
    pub c: Rational,
    #[serde(rename = "D", with = "rational::serde_str")]
    pub d: Rational,
}

impl DescartesQuadruple {
    /// Fails with `NotDescartes` unless the residual vanishes.
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self> {
        let q = DescartesQuadruple { a, b, c, d };
        let r = descartes_residual(&q.to_array());
        if !r.is_zero() {
            return Err(Error::NotDescartes(format!(
                "{q} has residual {}",
                rational::format(&r)
            )));
        }
        Ok(q)
    }

    pub fn from_ints(q: [i64; 4]) -> Result<Self> {
        let [a, b, c, d] = q.map(rational::int);
        DescartesQuadruple::new(a, b, c, d)
    }

    pub fn to_array(&self) -> [Rational; 4] {
        [self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()]
    }

    pub fn residual(&self) -> Rational {
        descartes_residual(&self.to_array())
    }
}

impl fmt::Display for DescartesQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.to_array().iter().map(rational::format).collect();
        f.write_str(&parts.join(","))
    }
}

/// The two fourth curvatures for a tangent triple, larger first.
#[derive(Clone, Debug, PartialEq)]
pub enum FourthCurvatures {
    Exact(Rational, Rational),
    /// The discriminant is not a rational square.
    Approximate(f64, f64),
}

impl FourthCurvatures {
    pub fn is_exact(&self) -> bool {
        matches!(self, FourthCurvatures::Exact(..))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        match self {
            FourthCurvatures::Exact(p, m) => (rational::to_f64(p), rational::to_f64(m)),
            FourthCurvatures::Approximate(p, m) => (*p, *m),
        }
    }
}

impl fmt::Display for FourthCurvatures {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FourthCurvatures::Exact(p, m) => {
                write!(f, "{}, {} (exact)", rational::format(p), rational::format(m))
            }
            FourthCurvatures::Approximate(p, m) => write!(f, "{p:.15e}, {m:.15e} (approximate)"),
        }
    }
}

/// `D = A + B + C ± 2√(AB + BC + CA)`.
pub fn fourth_curvatures(a: &Rational, b: &Rational, c: &Rational) -> Result<FourthCurvatures> {
    let disc = a * b + b * c + c * a;
    if disc.is_negative() {
        return Err(Error::ComplexSolutions(rational::format(&disc)));
    }
    let sum = a + b + c;
    match rational::sqrt_exact(&disc) {
        Some(root) => {
            let twice = rational::int(2) * root;
            Ok(FourthCurvatures::Exact(&sum + &twice, &sum - &twice))
        }
        None => {
            let sum = rational::to_f64(&sum);
            let twice = 2.0 * rational::to_f64(&disc).sqrt();
            Ok(FourthCurvatures::Approximate(sum + twice, sum - twice))
        }
    }
}

/// Replaces entry `index` by the other root of the Descartes equation in
/// that variable: `X ↦ 2(sum of the other three) − X`.
pub fn apollonian_move(q: &[Rational; 4], index: usize) -> [Rational; 4] {
    let others: Rational = q.iter().enumerate().filter(|&(i, _)| i != index).map(|(_, x)| x).sum();
    let mut out = q.clone();
    out[index] = rational::int(2) * others - &q[index];
    out
}

/// The two quadruples `(A, B, C, D₁)` and `(A, B, C, D₂)` generated by a
/// pair of spinors, with `D₁ ≥ D₂`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadrupleFamily {
    pub quadruple_1: DescartesQuadruple,
    pub quadruple_2: DescartesQuadruple,
    pub generator_a: Spinor,
    pub generator_b: Spinor,
}

impl QuadrupleFamily {
    pub fn abc(&self) -> [Rational; 3] {
        let q = &self.quadruple_1;
        [q.a.clone(), q.b.clone(), q.c.clone()]
    }

    pub fn d1(&self) -> &Rational {
        &self.quadruple_1.d
    }

    pub fn d2(&self) -> &Rational {
        &self.quadruple_2.d
    }
}

#[derive(Serialize, Deserialize)]
struct FamilyJson {
    a: Spinor,
    b: Spinor,
    #[serde(rename = "A", with = "rational::serde_str")]
    big_a: Rational,
    #[serde(rename = "B", with = "rational::serde_str")]
    big_b: Rational,
    #[serde(rename = "C", with = "rational::serde_str")]
    big_c: Rational,
    #[serde(rename = "D1", with = "rational::serde_str")]
    d1: Rational,
    #[serde(rename = "D2", with = "rational::serde_str")]
    d2: Rational,
}

impl Serialize for QuadrupleFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let [big_a, big_b, big_c] = self.abc();
        FamilyJson {
            a: self.generator_a.clone(),
            b: self.generator_b.clone(),
            big_a,
            big_b,
            big_c,
            d1: self.d1().clone(),
            d2: self.d2().clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuadrupleFamily {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = FamilyJson::deserialize(d)?;
        let q1 = DescartesQuadruple::new(j.big_a.clone(), j.big_b.clone(), j.big_c.clone(), j.d1)
            .map_err(serde::de::Error::custom)?;
        let q2 = DescartesQuadruple::new(j.big_a, j.big_b, j.big_c, j.d2).map_err(serde::de::Error::custom)?;
        Ok(QuadrupleFamily {
            quadruple_1: q1,
            quadruple_2: q2,
            generator_a: j.a,
            generator_b: j.b,
        })
    }
}

fn ordered(x: Rational, y: Rational) -> (Rational, Rational) {
    if x >= y {
        (x, y)
    } else {
        (y, x)
    }
}

fn family(abc: [Rational; 3], d1: Rational, d2: Rational, a: &Spinor, b: &Spinor) -> QuadrupleFamily {
    let [big_a, big_b, big_c] = abc;
    let q = |d: Rational| DescartesQuadruple {
        a: big_a.clone(),
        b: big_b.clone(),
        c: big_c.clone(),
        d,
    };
    let family = QuadrupleFamily {
        quadruple_1: q(d1),
        quadruple_2: q(d2),
        generator_a: a.clone(),
        generator_b: b.clone(),
    };
    debug_assert!(family.quadruple_1.residual().is_zero());
    debug_assert!(family.quadruple_2.residual().is_zero());
    family
}

/// Integral Descartes quadruples from two spinors:
/// `A = |b|² + a·b`, `B = |a|² + a·b`, `C = −a·b`,
/// `D = |a|² + |b|² + a·b ± 2 a×b`.
pub fn from_spinor_pair(a: &Spinor, b: &Spinor) -> QuadrupleFamily {
    let ab = a.dot(b);
    let aa = a.norm_sq();
    let bb = b.norm_sq();
    let centre = &aa + &bb + &ab;
    let twice_cross = rational::int(2) * a.cross(b);
    let (d1, d2) = ordered(&centre + &twice_cross, &centre - &twice_cross);
    debug_assert_eq!(
        &d1 * &d2,
        &centre * &centre - &twice_cross * &twice_cross,
        "product of the two roots"
    );
    family([&bb + &ab, &aa + &ab, -ab], d1, d2, a, b)
}

/// The five curvatures `(A, B, C, D₁, D₂)` from a closed spinor triangle
/// `a + b + c = 0`: `A = −b·c`, `B = −c·a`, `C = −a·b`,
/// `D₁ + D₂ = |a|² + |b|² + |c|²`, `|D₁ − D₂| = 4|a×b|`.
pub fn from_spinor_triple(a: &Spinor, b: &Spinor, c: &Spinor) -> Result<QuadrupleFamily> {
    let curl = &(a + b) + c;
    if !curl.is_zero() {
        return Err(Error::CurlViolation(curl.to_string()));
    }
    let g = a.cross(b);
    debug_assert!(g == b.cross(c) && g == c.cross(a));
    let sum = a.norm_sq() + b.norm_sq() + c.norm_sq();
    let diff = rational::int(4) * g;
    let two = rational::int(2);
    let (d1, d2) = ordered((&sum + &diff) / &two, (&sum - &diff) / &two);
    Ok(family([-b.dot(c), -c.dot(a), -a.dot(b)], d1, d2, a, b))
}

/// Sorted form of an integral quadruple and its reduction by the gcd.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Canonical {
    pub sorted: [BigInt; 4],
    pub primitive_form: [BigInt; 4],
    pub gcd: BigInt,
    pub is_primitive: bool,
}

pub fn canonicalize(q: &[Rational; 4]) -> Result<Canonical> {
    let mut sorted: [BigInt; 4] = Default::default();
    for (slot, x) in sorted.iter_mut().zip(q) {
        if !x.is_integer() {
            return Err(Error::NonIntegral(rational::format(x)));
        }
        *slot = x.to_integer();
    }
    sorted.sort();
    let gcd = sorted.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    let primitive_form = if gcd.is_zero() {
        sorted.clone()
    } else {
        sorted.clone().map(|x| x / &gcd)
    };
    let is_primitive = gcd == BigInt::from(1);
    Ok(Canonical {
        sorted,
        primitive_form,
        gcd,
        is_primitive,
    })
}
