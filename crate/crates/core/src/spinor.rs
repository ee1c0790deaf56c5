// Copyright 2026 the descartes-core Authors
// SPDX-License-Identifier: Apache-2.0

//! The spinor plane: exact 2-vectors with an inner product, a symplectic
//! product and symplectic conjugation (a quarter turn).
//!
//! A spinor `(x, y)` is also read as the complex number `x + iy`; in that
//! reading `star` is multiplication by `i` and [`euclid_square`] is complex
//! squaring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Spinor {
    pub x: Rational,
    pub y: Rational,
}

impl Spinor {
    pub fn new(x: Rational, y: Rational) -> Self {
        Spinor { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Spinor::new(rational::int(x), rational::int(y))
    }

    pub fn zero() -> Self {
        Spinor::default()
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// `x·x′ + y·y′`
    pub fn dot(&self, other: &Spinor) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    /// `x·y′ − x′·y`, the signed area of the parallelogram on the two spinors.
    pub fn cross(&self, other: &Spinor) -> Rational {
        &self.x * &other.y - &other.x * &self.y
    }

    /// Symplectic conjugation `(x, y) ↦ (−y, x)`.
    pub fn star(&self) -> Spinor {
        Spinor::new(-&self.y, self.x.clone())
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (rational::to_f64(&self.x), rational::to_f64(&self.y))
    }

    /// Product as complex numbers.
    pub(crate) fn complex_mul(&self, other: &Spinor) -> Spinor {
        Spinor::new(
            &self.x * &other.x - &self.y * &other.y,
            &self.x * &other.y + &self.y * &other.x,
        )
    }
}

pub fn dot(u: &Spinor, v: &Spinor) -> Rational {
    u.dot(v)
}

pub fn cross(u: &Spinor, v: &Spinor) -> Rational {
    u.cross(v)
}

pub fn star(u: &Spinor) -> Spinor {
    u.star()
}

pub fn norm_sq(u: &Spinor) -> Rational {
    u.norm_sq()
}

/// A rational triple with `a² + b² = c²` and `c ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PythTriple {
    #[serde(with = "rational::serde_str")]
    pub a: Rational,
    #[serde(with = "rational::serde_str")]
    pub b: Rational,
    #[serde(with = "rational::serde_str")]
    pub c: Rational,
}

impl PythTriple {
    /// Checks the invariant.
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        if c.is_negative() || &a * &a + &b * &b != &c * &c {
            return Err(Error::DegenerateInput(format!(
                "({}, {}, {}) is not a Pythagorean triple",
                rational::format(&a),
                rational::format(&b),
                rational::format(&c)
            )));
        }
        Ok(PythTriple { a, b, c })
    }
}

/// Euclidean-parameter map `(m, n) ↦ (m² − n², 2mn, m² + n²)`: the complex
/// square of `m + in` together with its modulus.
pub fn euclid_square(u: &Spinor) -> PythTriple {
    let sq = u.complex_mul(u);
    PythTriple {
        a: sq.x,
        b: sq.y,
        c: u.norm_sq(),
    }
}

impl fmt::Display for Spinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", rational::format(&self.x), rational::format(&self.y))
    }
}

impl FromStr for Spinor {
    type Err = Error;

    /// `"x,y"` with each component an integer or `p/q`.
    fn from_str(s: &str) -> Result<Self> {
        let (x, y) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("`{s}` is not of the form x,y")))?;
        if y.contains(',') {
            return Err(Error::Parse(format!("`{s}` has more than two components")));
        }
        Ok(Spinor::new(rational::parse(x)?, rational::parse(y)?))
    }
}

impl Serialize for Spinor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [rational::format(&self.x), rational::format(&self.y)].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Spinor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [x, y] = <[String; 2]>::deserialize(d)?;
        let x = rational::parse(&x).map_err(serde::de::Error::custom)?;
        let y = rational::parse(&y).map_err(serde::de::Error::custom)?;
        Ok(Spinor::new(x, y))
    }
}

impl<'a> Add<&'a Spinor> for &'a Spinor {
    type Output = Spinor;
    fn add(self, rhs: &'a Spinor) -> Spinor {
        Spinor::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Add for Spinor {
    type Output = Spinor;
    fn add(self, rhs: Spinor) -> Spinor {
        &self + &rhs
    }
}

impl<'a> Sub<&'a Spinor> for &'a Spinor {
    type Output = Spinor;
    fn sub(self, rhs: &'a Spinor) -> Spinor {
        Spinor::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Sub for Spinor {
    type Output = Spinor;
    fn sub(self, rhs: Spinor) -> Spinor {
        &self - &rhs
    }
}

impl Neg for &Spinor {
    type Output = Spinor;
    fn neg(self) -> Spinor {
        Spinor::new(-&self.x, -&self.y)
    }
}

impl Neg for Spinor {
    type Output = Spinor;
    fn neg(self) -> Spinor {
        -&self
    }
}

impl Mul<&Spinor> for &Rational {
    type Output = Spinor;
    fn mul(self, rhs: &Spinor) -> Spinor {
        Spinor::new(self * &rhs.x, self * &rhs.y)
    }
}
