// Copyright 2026 the descartes-core Authors
// SPDX-License-Identifier: Apache-2.0

//! Deterministic SVG for the tessellation and for placed circle
//! configurations.
//!
//! Coordinates are written with 12 decimals and attributes in lexicographic
//! order, so equal inputs give equal bytes. Tessellation vertices are the
//! exact tile vertices rounded once; the y-axis is flipped by a group
//! transform rather than by rewriting coordinates.

use std::fmt::Write;

use num_traits::Signed;

use crate::geometry::PlacedDisk;
use crate::rational::{self, Rational};
use crate::spinor::Spinor;
use crate::tessellation::{Tessellation, TileClass};

const DIGITS: usize = 12;
const MARGIN: f64 = 0.06;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderOptions {
    pub width_px: u32,
    pub show_labels: bool,
    pub show_midcircles: bool,
    /// Tessellation only: draws `a`, `b`, `c` from the origin.
    pub show_spinor_arrows: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            width_px: 480,
            show_labels: true,
            show_midcircles: true,
            show_spinor_arrows: true,
        }
    }
}

impl RenderOptions {
    fn width(&self) -> u32 {
        self.width_px.max(64)
    }
}

pub fn palette(class: TileClass) -> &'static str {
    match class {
        TileClass::YellowSquare => "#f7e27a",
        TileClass::RedCentral => "#e0403a",
        TileClass::Green => "#7fcf7a",
        TileClass::LightRed => "#f29a93",
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.DIGITS$}");
    // no negative zero
    if s.trim_start_matches('-').bytes().all(|b| b == b'0' || b == b'.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

fn exact(r: &Rational) -> String {
    rational::to_decimal(r, DIGITS)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Writes `<name a="…" …>` with attributes sorted by name.
fn open_tag(out: &mut String, name: &str, attrs: &mut [(&str, String)], close: bool) {
    attrs.sort_by(|x, y| x.0.cmp(y.0));
    out.push('<');
    out.push_str(name);
    for (k, v) in attrs.iter() {
        let _ = write!(out, " {k}=\"{}\"", escape(v));
    }
    out.push_str(if close { "/>\n" } else { ">" });
}

fn text(out: &mut String, x: f64, y: f64, size: f64, body: &str) {
    open_tag(
        out,
        "text",
        &mut [
            ("dominant-baseline", "middle".into()),
            ("font-family", "sans-serif".into()),
            ("font-size", num(size)),
            ("text-anchor", "middle".into()),
            ("x", num(x)),
            ("y", num(y)),
        ],
        false,
    );
    out.push_str(&escape(body));
    out.push_str("</text>\n");
}

struct Frame {
    min_x: f64,
    min_y: f64,
    width: f64,
    height: f64,
}

impl Frame {
    /// Bounding box in SVG coordinates (y already flipped) with margin.
    fn around(points: impl IntoIterator<Item = (f64, f64)>) -> Frame {
        let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
        for (x, y) in points {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        if !x0.is_finite() {
            return Frame {
                min_x: -1.0,
                min_y: -1.0,
                width: 2.0,
                height: 2.0,
            };
        }
        let span = (x1 - x0).max(y1 - y0).max(1e-9);
        let pad = MARGIN * span;
        Frame {
            min_x: x0 - pad,
            min_y: y0 - pad,
            width: x1 - x0 + 2.0 * pad,
            height: y1 - y0 + 2.0 * pad,
        }
    }

    fn header(&self, out: &mut String, width_px: u32) {
        let height_px = ((f64::from(width_px) * self.height / self.width).round() as u32).max(1);
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"yes\"?>\n");
        open_tag(
            out,
            "svg",
            &mut [
                ("height", height_px.to_string()),
                ("version", "1.1".into()),
                (
                    "viewBox",
                    format!(
                        "{} {} {} {}",
                        num(self.min_x),
                        num(self.min_y),
                        num(self.width),
                        num(self.height)
                    ),
                ),
                ("width", width_px.to_string()),
                ("xmlns", "http://www.w3.org/2000/svg".into()),
            ],
            false,
        );
        out.push('\n');
    }

    fn scale(&self) -> f64 {
        self.width.max(self.height)
    }
}

fn spinor_f64(s: &Spinor) -> (f64, f64) {
    s.to_f64()
}

pub fn render_tessellation(t: &Tessellation, o: &RenderOptions) -> String {
    let frame = Frame::around(
        t.tiles
            .iter()
            .flat_map(|tile| tile.vertices.iter().map(spinor_f64))
            .map(|(x, y)| (x, -y)),
    );
    let mut out = String::new();
    frame.header(&mut out, o.width());
    let stroke = num(frame.scale() / 400.0);

    out.push_str("<defs>\n");
    open_tag(
        &mut out,
        "pattern",
        &mut [
            ("height", num(frame.scale() / 60.0)),
            ("id", "overlap".into()),
            ("patternTransform", "rotate(45)".into()),
            ("patternUnits", "userSpaceOnUse".into()),
            ("width", num(frame.scale() / 60.0)),
        ],
        false,
    );
    out.push('\n');
    open_tag(
        &mut out,
        "line",
        &mut [
            ("stroke", "#000000".into()),
            ("stroke-width", stroke.clone()),
            ("x1", num(0.0)),
            ("x2", num(0.0)),
            ("y1", num(0.0)),
            ("y2", num(frame.scale() / 60.0)),
        ],
        true,
    );
    out.push_str("</pattern>\n</defs>\n");

    open_tag(
        &mut out,
        "g",
        &mut [("id", "tiles".into()), ("transform", "scale(1,-1)".into())],
        false,
    );
    out.push('\n');
    for tile in &t.tiles {
        let points = tile
            .vertices
            .iter()
            .map(|v| format!("{},{}", exact(&v.x), exact(&v.y)))
            .collect::<Vec<_>>()
            .join(" ");
        let fill = if tile.signed_area.is_negative() {
            "url(#overlap)".to_string()
        } else {
            palette(tile.class).to_string()
        };
        open_tag(
            &mut out,
            "polygon",
            &mut [
                ("class", tile.class.to_string()),
                ("fill", fill),
                ("fill-opacity", "0.8".into()),
                ("id", tile.label.to_string()),
                ("points", points),
                ("stroke", "#000000".into()),
                ("stroke-width", stroke.clone()),
            ],
            true,
        );
    }
    if o.show_spinor_arrows {
        for (name, s) in [("a", &t.a), ("b", &t.b), ("c", &t.c)] {
            open_tag(
                &mut out,
                "line",
                &mut [
                    ("id", format!("spinor_{name}")),
                    ("stroke", "#000000".into()),
                    ("stroke-width", num(frame.scale() / 120.0)),
                    ("x1", num(0.0)),
                    ("x2", exact(&s.x)),
                    ("y1", num(0.0)),
                    ("y2", exact(&s.y)),
                ],
                true,
            );
        }
    }
    out.push_str("</g>\n");

    if o.show_labels {
        let size = frame.scale() / 30.0;
        for tile in &t.tiles {
            let four = rational::int(4);
            let sum = tile.vertices.iter().fold(Spinor::zero(), |acc, v| &acc + v);
            let (cx, cy) = (rational::to_f64(&(&sum.x / &four)), rational::to_f64(&(&sum.y / &four)));
            text(&mut out, cx, -cy, size, &rational::format(&tile.signed_area));
        }
    }
    out.push_str("</svg>\n");
    out
}

fn curvature_label(k: f64) -> String {
    if (k - k.round()).abs() < 1e-9 {
        format!("{}", k.round() as i64)
    } else {
        format!("{k:.6}")
    }
}

/// Disks as solid circles, mid-circles dashed. An unbounded disk is drawn
/// as its boundary circle, labelled just inside the top of it.
pub fn render_configuration(disks: &[PlacedDisk], midcircles: &[PlacedDisk], o: &RenderOptions) -> String {
    let shown_mid: &[PlacedDisk] = if o.show_midcircles { midcircles } else { &[] };
    let frame = Frame::around(disks.iter().chain(shown_mid).flat_map(|d| {
        let r = d.radius.abs();
        let (x, y) = (d.center.x, -d.center.y);
        [(x - r, y - r), (x + r, y + r)]
    }));
    let mut out = String::new();
    frame.header(&mut out, o.width());
    let stroke = frame.scale() / 400.0;

    for d in disks {
        let unbounded = d.curvature < 0.0;
        open_tag(
            &mut out,
            "circle",
            &mut [
                ("class", if unbounded { "unbounded" } else { "disk" }.into()),
                ("cx", num(d.center.x)),
                ("cy", num(-d.center.y)),
                ("fill", if unbounded { "none" } else { "#fdf3d0" }.into()),
                ("r", num(d.radius.abs())),
                ("stroke", "#000000".into()),
                ("stroke-width", num(if unbounded { 2.0 * stroke } else { stroke })),
            ],
            true,
        );
    }
    for m in shown_mid {
        open_tag(
            &mut out,
            "circle",
            &mut [
                ("class", "midcircle".into()),
                ("cx", num(m.center.x)),
                ("cy", num(-m.center.y)),
                ("fill", "none".into()),
                ("r", num(m.radius.abs())),
                ("stroke", "#c0392b".into()),
                (
                    "stroke-dasharray",
                    format!("{} {}", num(4.0 * stroke), num(3.0 * stroke)),
                ),
                ("stroke-width", num(stroke)),
            ],
            true,
        );
    }
    if o.show_labels {
        for d in disks {
            let r = d.radius.abs();
            let (x, y) = if d.curvature < 0.0 {
                (d.center.x, -d.center.y - 0.9 * r)
            } else {
                (d.center.x, -d.center.y)
            };
            let size = (0.8 * r).min(frame.scale() / 20.0);
            text(&mut out, x, y, size, &curvature_label(d.curvature));
        }
    }
    out.push_str("</svg>\n");
    out
}
