// Copyright 2026 the descartes-core Authors
// SPDX-License-Identifier: Apache-2.0

//! The fifteen-tile dodecagonal tessellation built on a closed spinor
//! triangle `a + b + c = 0`.
//!
//! Three squares sit on `a`, `b`, `c`; three central red parallelograms fill
//! the gaps between them; six green parallelograms form the next layer and
//! three light-red ones close the dodecagon. Read as curvatures, the red
//! areas are a tangent triple `A, B, C` and sums of tile areas give both
//! fourth curvatures and all mid-circle curvatures.

use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadruple::descartes_residual;
use crate::rational::{self, Rational};
use crate::spinor::Spinor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TileClass {
    YellowSquare,
    RedCentral,
    Green,
    LightRed,
}

impl fmt::Display for TileClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TileClass::YellowSquare => "yellow_square",
            TileClass::RedCentral => "red_central",
            TileClass::Green => "green",
            TileClass::LightRed => "light_red",
        })
    }
}

/// A parallelogram `anchor + s·edge1 + t·edge2`, `s, t ∈ [0, 1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Tile {
    pub class: TileClass,
    pub label: &'static str,
    pub anchor: Spinor,
    pub edge1: Spinor,
    pub edge2: Spinor,
    /// anchor, anchor+edge1, anchor+edge1+edge2, anchor+edge2
    pub vertices: [Spinor; 4],
    pub signed_area: Rational,
}

impl Tile {
    fn new(class: TileClass, label: &'static str, anchor: Spinor, edge1: Spinor, edge2: Spinor) -> Tile {
        let v1 = &anchor + &edge1;
        let v2 = &v1 + &edge2;
        let v3 = &anchor + &edge2;
        let signed_area = edge1.cross(&edge2);
        Tile {
            class,
            label,
            vertices: [anchor.clone(), v1, v2, v3],
            anchor,
            edge1,
            edge2,
            signed_area,
        }
    }
}

// Tile indices within `Tessellation::tiles`.
const SQ_A: usize = 0;
const SQ_B: usize = 1;
const SQ_C: usize = 2;
const RED_A: usize = 3; // b*, c
const RED_B: usize = 4; // c*, a
const RED_C: usize = 5; // a*, b
const GREENS: [usize; 6] = [6, 7, 8, 9, 10, 11];
const LIGHT_RED_A: usize = 12;
const LIGHT_RED_B: usize = 13;
const LIGHT_RED_C: usize = 14;

/// Square index → (aligned red, two adjacent greens).
const BUTTERFLIES: [(usize, usize, [usize; 2]); 3] =
    [(SQ_A, RED_A, [6, 7]), (SQ_B, RED_B, [8, 9]), (SQ_C, RED_C, [10, 11])];

#[derive(Clone, Debug, PartialEq)]
pub struct Tessellation {
    pub a: Spinor,
    pub b: Spinor,
    pub c: Spinor,
    pub tiles: Vec<Tile>,
}

/// Builds the tessellation on `a`, `b` and `c = −a − b`.
pub fn build_tessellation(a: &Spinor, b: &Spinor) -> Result<Tessellation> {
    if a.cross(b).is_zero() {
        return Err(Error::DegenerateInput(format!("a = ({a}) and b = ({b}) are parallel")));
    }
    let c = -(a + b);
    let (sa, sb, sc) = (a.star(), b.star(), c.star());
    let zero = Spinor::zero();
    use TileClass::*;
    let t = Tile::new;
    let tiles = vec![
        t(YellowSquare, "sq_a", zero.clone(), a.clone(), sa.clone()),
        t(YellowSquare, "sq_b", zero.clone(), b.clone(), sb.clone()),
        t(YellowSquare, "sq_c", zero.clone(), c.clone(), sc.clone()),
        t(RedCentral, "red_b*c", zero.clone(), sb.clone(), c.clone()),
        t(RedCentral, "red_c*a", zero.clone(), sc.clone(), a.clone()),
        t(RedCentral, "red_a*b", zero, sa.clone(), b.clone()),
        t(Green, "green_axb", sa.clone(), a.clone(), b.clone()),
        t(Green, "green_c*xa*", a.clone(), sc.clone(), sa.clone()),
        t(Green, "green_bxc", sb.clone(), b.clone(), c.clone()),
        t(Green, "green_a*xb*", b.clone(), sa.clone(), sb.clone()),
        t(Green, "green_cxa", sc.clone(), c.clone(), a.clone()),
        t(Green, "green_b*xc*", c.clone(), sb.clone(), sc.clone()),
        t(LightRed, "lightred_c*xb", a + &sa, sc.clone(), b.clone()),
        t(LightRed, "lightred_a*xc", b + &sb, sa.clone(), c.clone()),
        t(LightRed, "lightred_b*xa", &c + &sc, sb, a.clone()),
    ];
    Ok(Tessellation {
        a: a.clone(),
        b: b.clone(),
        c,
        tiles,
    })
}

impl Tessellation {
    pub fn tiles_of(&self, class: TileClass) -> impl Iterator<Item = &Tile> {
        self.tiles.iter().filter(move |t| t.class == class)
    }

    pub fn tile(&self, label: &str) -> Option<&Tile> {
        self.tiles.iter().find(|t| t.label == label)
    }

    fn area(&self, i: usize) -> &Rational {
        &self.tiles[i].signed_area
    }

    /// Common green area `G = a×b`.
    pub fn green_area(&self) -> Rational {
        self.a.cross(&self.b)
    }

    /// Some tile has negative signed area, so tiles overlap.
    pub fn has_overlap(&self) -> bool {
        self.tiles.iter().any(|t| t.signed_area.is_negative())
    }

    /// The twelve outer vertices, counter-clockwise when all tiles are
    /// positively oriented.
    pub fn outer_boundary(&self) -> Vec<Spinor> {
        let cyc = [
            (&self.a, &self.b, &self.c),
            (&self.b, &self.c, &self.a),
            (&self.c, &self.a, &self.b),
        ];
        let mut out = Vec::with_capacity(12);
        for (u, v, w) in cyc {
            let (su, sw) = (u.star(), w.star());
            let p0 = u + &sw;
            let p1 = &p0 + &su;
            let p2 = &p1 + v;
            let p3 = &(u + &su) + v;
            out.extend([p0, p1, p2, p3]);
        }
        out
    }
}

/// Shoelace area of a closed polygon.
pub fn shoelace(vertices: &[Spinor]) -> Rational {
    let n = vertices.len();
    let twice: Rational = (0..n).map(|i| vertices[i].cross(&vertices[(i + 1) % n])).sum();
    twice / rational::int(2)
}

pub fn tile_area_shoelace(t: &Tile) -> Rational {
    shoelace(&t.vertices)
}

/// Area by Pick's theorem, `I + B/2 − 1`, with the interior and boundary
/// lattice points counted one by one over the bounding box.
pub fn tile_area_pick(t: &Tile) -> Result<Rational> {
    let mut pts = [(0i128, 0i128); 4];
    for (p, v) in pts.iter_mut().zip(&t.vertices) {
        let x = v.x.is_integer().then(|| v.x.to_integer().to_i128()).flatten();
        let y = v.y.is_integer().then(|| v.y.to_integer().to_i128()).flatten();
        match (x, y) {
            (Some(x), Some(y)) => *p = (x, y),
            _ => return Err(Error::NonIntegralVertices(t.label.to_string())),
        }
    }
    if !t.signed_area.is_positive() {
        return Err(Error::NegativeOrientation(t.label.to_string()));
    }
    let (interior, boundary) = count_lattice_points(&pts);
    Ok(Rational::from_integer((2 * interior + boundary - 2).into()) / rational::int(2))
}

/// Interior and boundary lattice points of a counter-clockwise convex
/// polygon.
fn count_lattice_points(pts: &[(i128, i128)]) -> (i128, i128) {
    let min_x = pts.iter().map(|p| p.0).min().unwrap();
    let max_x = pts.iter().map(|p| p.0).max().unwrap();
    let min_y = pts.iter().map(|p| p.1).min().unwrap();
    let max_y = pts.iter().map(|p| p.1).max().unwrap();
    let n = pts.len();
    let (mut interior, mut boundary) = (0, 0);
    for x in min_x..=max_x {
        for y in min_y..=max_y {
            let mut on_edge = false;
            let mut inside = true;
            for i in 0..n {
                let (x0, y0) = pts[i];
                let (x1, y1) = pts[(i + 1) % n];
                let side = (x1 - x0) * (y - y0) - (y1 - y0) * (x - x0);
                if side < 0 {
                    inside = false;
                    break;
                }
                if side == 0 {
                    on_edge = true;
                }
            }
            if inside {
                if on_edge {
                    boundary += 1;
                } else {
                    interior += 1;
                }
            }
        }
    }
    (interior, boundary)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TessellationReport {
    /// `|a|², |b|², |c|²`
    #[serde(with = "rational::serde_str_vec")]
    pub square_areas: [Rational; 3],
    /// Curvatures `A, B, C`: reds on `(b⋆, c)`, `(c⋆, a)`, `(a⋆, b)`.
    #[serde(with = "rational::serde_str_vec")]
    pub red_areas: [Rational; 3],
    #[serde(with = "rational::serde_str")]
    pub green_area: Rational,
    #[serde(with = "rational::serde_str_vec")]
    pub light_red_areas: [Rational; 3],
    #[serde(rename = "D", with = "rational::serde_str")]
    pub curvature_d: Rational,
    #[serde(rename = "D_prime", with = "rational::serde_str")]
    pub curvature_d_prime: Rational,
    #[serde(with = "rational::serde_str")]
    pub midcircle_abc: Rational,
    /// Mid-circles `(BCD), (CAD), (ABD)`, in square order.
    #[serde(with = "rational::serde_str_vec")]
    pub midcircles_with_d: [Rational; 3],
    #[serde(with = "rational::serde_str_vec")]
    pub midcircles_with_d_prime: [Rational; 3],
    #[serde(with = "rational::serde_str")]
    pub descartes_residual_d: Rational,
    #[serde(with = "rational::serde_str")]
    pub descartes_residual_d_prime: Rational,
    pub has_overlap: bool,
}

pub fn summarize(t: &Tessellation) -> TessellationReport {
    let square_areas = [SQ_A, SQ_B, SQ_C].map(|i| t.area(i).clone());
    let red_areas = [RED_A, RED_B, RED_C].map(|i| t.area(i).clone());
    let light_red_areas = [LIGHT_RED_A, LIGHT_RED_B, LIGHT_RED_C].map(|i| t.area(i).clone());
    let g = t.area(GREENS[0]).clone();
    let reds: Rational = red_areas.iter().sum();
    let two_g = rational::int(2) * &g;
    let d = &reds + &two_g;
    let d_prime = &reds - &two_g;
    let quad = |d: &Rational| {
        let [x, y, z] = red_areas.clone();
        descartes_residual(&[x, y, z, d.clone()])
    };
    TessellationReport {
        midcircles_with_d: square_areas.clone().map(|s| s + &g),
        midcircles_with_d_prime: square_areas.clone().map(|s| s - &g),
        descartes_residual_d: quad(&d),
        descartes_residual_d_prime: quad(&d_prime),
        square_areas,
        red_areas,
        midcircle_abc: g.clone(),
        green_area: g,
        light_red_areas,
        curvature_d: d,
        curvature_d_prime: d_prime,
        has_overlap: t.has_overlap(),
    }
}

/// Each butterfly: its square, the red touching that square only at the
/// origin, and the two greens along the square's outer sides.
pub fn butterfly_areas(t: &Tessellation) -> [Rational; 3] {
    BUTTERFLIES.map(|(sq, red, [g1, g2])| t.area(sq) + t.area(red) + t.area(g1) + t.area(g2))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Observation {
    pub name: &'static str,
    pub passed: bool,
    pub witness: String,
}

/// Parallelograms on `(u, v)` and `(u′, v′)` are congruent iff side
/// lengths match as a multiset and `|u·v| = |u′·v′|`.
pub fn congruent(t1: &Tile, t2: &Tile) -> bool {
    let (p, q) = (t1.edge1.norm_sq(), t1.edge2.norm_sq());
    let (r, s) = (t2.edge1.norm_sq(), t2.edge2.norm_sq());
    let sides = (p == r && q == s) || (p == s && q == r);
    sides && t1.edge1.dot(&t1.edge2).abs() == t2.edge1.dot(&t2.edge2).abs()
}

fn list(values: &[&Rational]) -> String {
    values.iter().map(|v| rational::format(v)).collect::<Vec<_>>().join(",")
}

pub fn check_observations(t: &Tessellation) -> Vec<Observation> {
    let mut out = Vec::with_capacity(5);
    let greens: Vec<&Rational> = GREENS.iter().map(|&i| t.area(i)).collect();
    out.push(Observation {
        name: "greens_equal_area",
        passed: greens.iter().all(|g| *g == greens[0]),
        witness: list(&greens),
    });

    // (a,b)~(a*,b*), (b,c)~(b*,c*), (c,a)~(c*,a*)
    let pairs = [(6, 9), (8, 11), (10, 7)];
    out.push(Observation {
        name: "greens_pairwise_congruent",
        passed: pairs.iter().all(|&(i, j)| congruent(&t.tiles[i], &t.tiles[j])),
        witness: pairs
            .iter()
            .map(|&(i, j)| format!("{}~{}", t.tiles[i].label, t.tiles[j].label))
            .collect::<Vec<_>>()
            .join(";"),
    });

    let light = [(LIGHT_RED_A, RED_A), (LIGHT_RED_B, RED_B), (LIGHT_RED_C, RED_C)];
    out.push(Observation {
        name: "light_reds_congruent_to_reds",
        passed: light.iter().all(|&(i, j)| congruent(&t.tiles[i], &t.tiles[j])),
        witness: light
            .iter()
            .map(|&(i, j)| format!("{}~{}", t.tiles[i].label, t.tiles[j].label))
            .collect::<Vec<_>>()
            .join(";"),
    });

    // the square on a shares its sides a and a* with reds (c*,a) and (a*,b)
    let adjacent = [(SQ_A, RED_B, RED_C), (SQ_B, RED_C, RED_A), (SQ_C, RED_A, RED_B)];
    out.push(Observation {
        name: "square_is_sum_of_adjacent_reds",
        passed: adjacent
            .iter()
            .all(|&(sq, r1, r2)| *t.area(sq) == t.area(r1) + t.area(r2)),
        witness: adjacent
            .iter()
            .map(|&(sq, r1, r2)| {
                format!(
                    "{}={}+{}",
                    rational::format(t.area(sq)),
                    rational::format(t.area(r1)),
                    rational::format(t.area(r2))
                )
            })
            .collect::<Vec<_>>()
            .join(";"),
    });

    let sums: Vec<Rational> = BUTTERFLIES
        .iter()
        .map(|&(sq, red, _)| t.area(sq) + t.area(red))
        .collect();
    let reds: Rational = [RED_A, RED_B, RED_C].iter().map(|&i| t.area(i)).sum();
    out.push(Observation {
        name: "square_plus_vertex_red_constant",
        passed: sums.iter().all(|s| *s == reds),
        witness: rational::format(&sums[0]),
    });
    out
}

/// Integer or exact fraction, for the human-readable tables.
fn fmt_all(v: &[Rational]) -> String {
    v.iter().map(rational::format).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for TessellationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "squares (|a|^2, |b|^2, |c|^2)  {}", fmt_all(&self.square_areas))?;
        writeln!(f, "reds (A, B, C)               {}", fmt_all(&self.red_areas))?;
        writeln!(f, "green G                      {}", rational::format(&self.green_area))?;
        writeln!(f, "light reds                   {}", fmt_all(&self.light_red_areas))?;
        writeln!(
            f,
            "D                            {}",
            rational::format(&self.curvature_d)
        )?;
        writeln!(
            f,
            "D'                           {}",
            rational::format(&self.curvature_d_prime)
        )?;
        writeln!(
            f,
            "mid-circle (ABC)             {}",
            rational::format(&self.midcircle_abc)
        )?;
        writeln!(f, "mid-circles with D           {}", fmt_all(&self.midcircles_with_d))?;
        writeln!(
            f,
            "mid-circles with D'          {}",
            fmt_all(&self.midcircles_with_d_prime)
        )?;
        writeln!(
            f,
            "Descartes residuals (D, D')  {}, {}",
            rational::format(&self.descartes_residual_d),
            rational::format(&self.descartes_residual_d_prime)
        )?;
        write!(
            f,
            "overlapping tiles            {}",
            if self.has_overlap { "yes" } else { "no" }
        )
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TileDoc {
    pub label: String,
    pub class: TileClass,
    pub vertices: Vec<Spinor>,
    #[serde(with = "rational::serde_str")]
    pub area: Rational,
}

/// JSON document for a tessellation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TessellationDoc {
    pub a: Spinor,
    pub b: Spinor,
    pub c: Spinor,
    pub tiles: Vec<TileDoc>,
    pub report: TessellationReport,
}

impl From<&Tessellation> for TessellationDoc {
    fn from(t: &Tessellation) -> Self {
        TessellationDoc {
            a: t.a.clone(),
            b: t.b.clone(),
            c: t.c.clone(),
            tiles: t
                .tiles
                .iter()
                .map(|tile| TileDoc {
                    label: tile.label.to_string(),
                    class: tile.class,
                    vertices: tile.vertices.to_vec(),
                    area: tile.signed_area.clone(),
                })
                .collect(),
            report: summarize(t),
        }
    }
}
