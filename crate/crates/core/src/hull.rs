//! Convex hull of the fractional tile `F_z` through its width (support)
//! function, measured from the centre of symmetry `(n-1) / (2(z-1))`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::system::System;

pub const DEFAULT_EPS: f64 = 1e-10;
pub const DEFAULT_DIRECTIONS: usize = 4096;

/// Support lines closer in angle than this are merged.
const MIN_ANGLE_GAP: f64 = 1e-9;
const VERTEX_MERGE: f64 = 1e-9;

#[derive(Debug, Clone, Copy)]
pub struct HullModel {
    system: System,
    center: Complex64,
    eps: f64,
    terms: usize,
}

impl HullModel {
    pub fn new(system: System) -> Self {
        Self::with_tolerance(system, DEFAULT_EPS)
    }

    pub fn with_tolerance(system: System, eps: f64) -> Self {
        let n = system.n() as f64;
        let r = n.sqrt();
        // smallest J with (n-1)/2 * r^-(J+1) / (1 - 1/r) < eps
        let mut terms = 1;
        while (n - 1.0) / 2.0 * r.powi(-(terms as i32 + 1)) / (1.0 - 1.0 / r) >= eps {
            terms += 1;
        }
        HullModel { system, center: hull_center(&system), eps, terms }
    }

    pub fn system(&self) -> &System {
        &self.system
    }

    pub fn center(&self) -> Complex64 {
        self.center
    }

    pub fn tolerance(&self) -> f64 {
        self.eps
    }

    /// Number of series terms kept by [`HullModel::width`].
    pub fn terms(&self) -> usize {
        self.terms
    }

    /// Distance from the centre to the supporting line with outward normal
    /// `e^{i alpha}`.
    pub fn width(&self, alpha: f64) -> f64 {
        let n = self.system.n() as f64;
        let inv_r = 1.0 / n.sqrt();
        let phi = self.system.phi();
        let mut scale = 1.0;
        let mut sum = 0.0;
        for j in 1..=self.terms {
            scale *= inv_r;
            sum += scale * (alpha + j as f64 * phi).cos().abs();
        }
        (n - 1.0) / 2.0 * sum
    }

    /// Outer polygon cut out by `m` equally spaced support lines.
    pub fn hull_polygon(&self, m: usize) -> Result<Polygon> {
        if m < 8 {
            return Err(Error::Domain(format!("hull_polygon needs at least 8 directions, got {m}")));
        }
        let step = 2.0 * PI / m as f64;
        let mut lines: Vec<(f64, f64)> = Vec::with_capacity(m);
        for k in 0..m {
            let alpha = step * k as f64;
            if let Some(&(last, _)) = lines.last() {
                if alpha - last < MIN_ANGLE_GAP {
                    continue;
                }
            }
            lines.push((alpha, self.width(alpha)));
        }
        let mut vertices = Vec::with_capacity(lines.len());
        for i in 0..lines.len() {
            let (a1, h1) = lines[i];
            let (a2, h2) = lines[(i + 1) % lines.len()];
            // cos(a) x + sin(a) y = h for both lines
            let det = (a2 - a1).sin();
            let x = (h1 * a2.sin() - h2 * a1.sin()) / det;
            let y = (h2 * a1.cos() - h1 * a2.cos()) / det;
            let v = self.center + Complex64::new(x, y);
            // lines through a common hull vertex meet at (numerically) one point
            if vertices.last().map_or(true, |&u: &Complex64| (u - v).norm() > VERTEX_MERGE) {
                vertices.push(v);
            }
        }
        while vertices.len() > 1 && (vertices[0] - vertices[vertices.len() - 1]).norm() <= VERTEX_MERGE {
            vertices.pop();
        }
        Ok(Polygon::new(vertices))
    }
}

pub fn hull_center(s: &System) -> Complex64 {
    (s.n() - 1) as f64 / (2.0 * (s.z() - 1.0))
}

/// Closed-form hull and tile measurements.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HullMetrics {
    pub perimeter: f64,
    pub hull_area: f64,
    pub tile_area: f64,
    pub center: [f64; 2],
}

pub fn hull_metrics(s: &System) -> HullMetrics {
    let n = s.n() as f64;
    let r = n.sqrt();
    let phi = s.phi();
    let mut hull_area = 0.0;
    let mut scale = 1.0;
    let mut i = 1;
    loop {
        scale /= r;
        hull_area += (i as f64 * phi).sin().abs() * scale;
        // remaining tail is below scale / (r - 1)
        if (n - 1.0) * scale / (r - 1.0) < 1e-12 {
            break;
        }
        i += 1;
    }
    hull_area *= n - 1.0;
    let c = hull_center(s);
    HullMetrics {
        perimeter: 2.0 * r + 2.0,
        hull_area,
        tile_area: r * phi.sin(),
        center: [c.re, c.im],
    }
}

/// Signed distance of `p` to the left of the directed edge `a -> b`.
fn edge_side(a: Complex64, b: Complex64, p: Complex64) -> f64 {
    let e = b - a;
    let len = e.norm();
    if len == 0.0 {
        return f64::INFINITY;
    }
    let w = p - a;
    (e.re * w.im - e.im * w.re) / len
}

/// Closed polygon, vertices counterclockwise.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Complex64>,
}

impl Polygon {
    pub fn new(vertices: Vec<Complex64>) -> Self {
        Polygon { vertices }
    }

    pub fn vertices(&self) -> &[Complex64] {
        &self.vertices
    }

    fn edges(&self) -> impl Iterator<Item = (Complex64, Complex64)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }

    pub fn perimeter(&self) -> f64 {
        self.edges().map(|(p, q)| (q - p).norm()).sum()
    }

    pub fn signed_area(&self) -> f64 {
        0.5 * self.edges().map(|(p, q)| p.re * q.im - q.re * p.im).sum::<f64>()
    }

    pub fn is_convex(&self) -> bool {
        let k = self.vertices.len();
        (0..k).all(|i| {
            let (a, b, c) = (self.vertices[i], self.vertices[(i + 1) % k], self.vertices[(i + 2) % k]);
            let u = b - a;
            let v = c - b;
            u.re * v.im - u.im * v.re >= -1e-12
        })
    }

    /// Membership in the polygon grown outward by `inflate`, checked
    /// against every edge.
    pub fn contains(&self, p: Complex64, inflate: f64) -> bool {
        self.edges().all(|(a, b)| edge_side(a, b, p) >= -inflate)
    }

    /// Same as [`Polygon::contains`] for convex counterclockwise polygons
    /// with `center` in the interior, in `O(log m)`: locate the fan sector
    /// of `p` around `center` and test that edge and its two neighbours.
    pub fn contains_convex(&self, center: Complex64, p: Complex64, inflate: f64) -> bool {
        let k = self.vertices.len();
        if k < 3 {
            return self.contains(p, inflate);
        }
        let base = (self.vertices[0] - center).arg();
        let rel = |v: Complex64| ((v - center).arg() - base).rem_euclid(2.0 * PI);
        let target = rel(p);
        let i = self.vertices.partition_point(|&v| rel(v) <= target).saturating_sub(1);
        [k - 1, 0, 1].iter().all(|&off| {
            let j = (i + off) % k;
            edge_side(self.vertices[j], self.vertices[(j + 1) % k], p) >= -inflate
        })
    }

    /// `[xmin, ymin, xmax, ymax]`.
    pub fn bounding_box(&self) -> [f64; 4] {
        self.vertices.iter().fold(
            [f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY],
            |[x0, y0, x1, y1], v| [x0.min(v.re), y0.min(v.im), x1.max(v.re), y1.max(v.im)],
        )
    }
}
