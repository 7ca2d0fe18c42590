//! Three-dimensional analogue: bases `z` in `R x C` with `z^3 = -A z^2 - B z - C`,
//! `B = -A r`, `C = -r^3`, acting on `Z^3` through the basis `1, z, z^2`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// Orbit length after which [`attractor_of`] gives up.
const ORBIT_CAP: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CubicSystem {
    r: i64,
    a: i64,
    n: i64,
    phi: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticePoint3 {
    pub x0: i64,
    pub x1: i64,
    pub x2: i64,
}

impl LatticePoint3 {
    pub const ZERO: LatticePoint3 = LatticePoint3 { x0: 0, x1: 0, x2: 0 };

    pub const fn new(x0: i64, x1: i64, x2: i64) -> Self {
        LatticePoint3 { x0, x1, x2 }
    }
}

impl fmt::Display for LatticePoint3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x0, self.x1, self.x2)
    }
}

/// A point of `R x C`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Embedded {
    pub real: f64,
    pub complex: Complex64,
}

impl Embedded {
    pub fn norm(&self) -> f64 {
        (self.real * self.real + self.complex.norm_sqr()).sqrt()
    }

    /// Larger of the two factor norms; [`reduce3`] contracts in it beyond
    /// [`CubicSystem::nominal_radius`].
    pub fn sup_norm(&self) -> f64 {
        self.real.abs().max(self.complex.norm())
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.real, self.complex.re, self.complex.im]
    }
}

impl CubicSystem {
    /// `m_or_r` is `m` for `r_sign = -1` (so `r = -m`) and `r` itself for
    /// `r_sign = +1`. Either way `|r| >= 2` and `n = |r|^3`.
    pub fn new(m_or_r: i64, a: i64, r_sign: i8) -> Result<Self> {
        if m_or_r < 2 || m_or_r > 1 << 10 {
            return Err(Error::Domain(format!("need 2 <= |r| <= 1024, got {m_or_r}")));
        }
        let r = match r_sign {
            -1 => -m_or_r,
            1 => m_or_r,
            _ => return Err(Error::Domain(format!("r sign must be +1 or -1, got {r_sign}"))),
        };
        let c = -0.5 * (1.0 + a as f64 / r as f64);
        if !(-1.0..=1.0).contains(&c) {
            return Err(Error::Domain(format!(
                "A = {a} with r = {r} gives cos(phi) = {c}, outside [-1, 1]"
            )));
        }
        let s = CubicSystem { r, a, n: m_or_r.pow(3), phi: c.acos() };
        let lhs = s.embed(s.identity());
        let z3 = s.embed_power(3);
        let tol = 1e-10 * (s.n as f64);
        if (lhs.real + z3.real).abs() > tol || (lhs.complex + z3.complex).norm() > tol {
            return Err(Error::Domain(format!("identity fails in the embedding for r = {r}, A = {a}")));
        }
        Ok(s)
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// `phi` in `{0, pi}`: `1, z, z^2` are coplanar and the embedding of
    /// `Z^3` is not injective.
    pub fn is_degenerate(&self) -> bool {
        self.a == self.r || self.a == -3 * self.r
    }

    /// Lower coefficients `(-r^3, -A r, A)` of the vanishing identity; the
    /// coefficient of `z^3` is 1.
    pub fn identity(&self) -> LatticePoint3 {
        LatticePoint3::new(-self.r.pow(3), -self.a * self.r, self.a)
    }

    fn embed_power(&self, k: i32) -> Embedded {
        let r = self.r as f64;
        Embedded { real: r.powi(k), complex: Complex64::from_polar(r.powi(k), k as f64 * self.phi) }
    }

    pub fn embed(&self, x: LatticePoint3) -> Embedded {
        let (e0, e1, e2) = (self.embed_power(0), self.embed_power(1), self.embed_power(2));
        let (a, b, c) = (x.x0 as f64, x.x1 as f64, x.x2 as f64);
        Embedded {
            real: a * e0.real + b * e1.real + c * e2.real,
            complex: e0.complex * a + e1.complex * b + e2.complex * c,
        }
    }

    /// `(n-1)/(n^(1/3)-1)`: beyond it [`reduce3`] contracts in
    /// [`Embedded::sup_norm`], since a digit `d` has sup norm `d`.
    pub fn nominal_radius(&self) -> f64 {
        (self.n - 1) as f64 / (self.r.abs() as f64 - 1.0)
    }

    /// Radius beyond which [`reduce3`] strictly shrinks the Euclidean norm.
    /// A digit `d` embeds as `(d, d)` with norm `d sqrt 2`, hence the factor.
    pub fn contraction_radius(&self) -> f64 {
        std::f64::consts::SQRT_2 * self.nominal_radius()
    }

    /// Default enumeration radius: 1.5 times the nominal radius.
    pub fn search_radius(&self) -> f64 {
        1.5 * self.nominal_radius()
    }
}

impl fmt::Display for CubicSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(r={}, A={}, n={})", self.r, self.a, self.n)
    }
}

pub fn cubic_system(m_or_r: i64, a: i64, r_sign: i8) -> Result<CubicSystem> {
    CubicSystem::new(m_or_r, a, r_sign)
}

pub fn embed3(c: &CubicSystem, x: LatticePoint3) -> Embedded {
    c.embed(x)
}

/// Strips the lowest digit: `y z + d = x` with `d` in `0..n`.
pub fn reduce3(c: &CubicSystem, x: LatticePoint3) -> Result<(LatticePoint3, i64)> {
    let id = c.identity();
    let n = c.n;
    // x0 - k c0 must land in 0..n, and c0 = -r^3 = -sign(r) n
    let q = x.x0.div_euclid(n);
    let k = if c.r < 0 { q } else { -q };
    let d = x.x0.rem_euclid(n);
    let y1 = k.checked_mul(id.x1).and_then(|t| x.x1.checked_sub(t)).ok_or(Error::Overflow)?;
    let y2 = k.checked_mul(id.x2).and_then(|t| x.x2.checked_sub(t)).ok_or(Error::Overflow)?;
    Ok((LatticePoint3::new(y1, y2, -k), d))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum AttractorKind {
    FixedPoint,
    Cycle,
}

/// A periodic orbit of [`reduce3`], rotated to start at its smallest point.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Attractor3 {
    pub kind: AttractorKind,
    pub points: Vec<LatticePoint3>,
}

impl Attractor3 {
    fn from_cycle(mut points: Vec<LatticePoint3>) -> Self {
        let i = (0..points.len()).min_by_key(|&i| points[i]).unwrap_or(0);
        points.rotate_left(i);
        let kind = if points.len() == 1 { AttractorKind::FixedPoint } else { AttractorKind::Cycle };
        Attractor3 { kind, points }
    }

    pub fn contains(&self, x: LatticePoint3) -> bool {
        self.points.contains(&x)
    }
}

/// The periodic orbit that `x` falls into. Works for degenerate systems too.
pub fn attractor_of(c: &CubicSystem, x: LatticePoint3) -> Result<Attractor3> {
    let mut seen: HashMap<LatticePoint3, usize> = HashMap::new();
    let mut path = Vec::new();
    let mut cur = x;
    loop {
        if let Some(&i) = seen.get(&cur) {
            return Ok(Attractor3::from_cycle(path[i..].to_vec()));
        }
        if path.len() >= ORBIT_CAP {
            return Err(Error::NonConvergence(ORBIT_CAP));
        }
        seen.insert(cur, path.len());
        path.push(cur);
        cur = reduce3(c, cur)?.0;
    }
}

/// Lattice points with embedded norm at most `radius`: integer bounding box
/// from the rows of the inverse embedding matrix, then a norm filter.
pub fn ball_points3(c: &CubicSystem, radius: f64) -> Result<Vec<LatticePoint3>> {
    if c.is_degenerate() {
        return Err(Error::Domain(format!("{c} has a flat embedding; balls are unbounded")));
    }
    let cols = [c.embed_power(0), c.embed_power(1), c.embed_power(2)].map(|e| e.to_array());
    let m = [
        [cols[0][0], cols[1][0], cols[2][0]],
        [cols[0][1], cols[1][1], cols[2][1]],
        [cols[0][2], cols[1][2], cols[2][2]],
    ];
    let inv = invert3(m).ok_or_else(|| Error::Domain(format!("{c}: singular embedding")))?;
    let bound: Vec<i64> = inv.iter().map(|row| (radius * row.iter().map(|v| v * v).sum::<f64>().sqrt()).floor() as i64).collect();
    let volume = bound.iter().map(|&b| (2 * b + 1) as u128).product::<u128>();
    if volume > 1 << 28 {
        return Err(Error::Guard { what: "cubic ball bounding box", points: volume, limit: 1 << 28 });
    }
    let mut out = Vec::new();
    for x0 in -bound[0]..=bound[0] {
        for x1 in -bound[1]..=bound[1] {
            for x2 in -bound[2]..=bound[2] {
                let p = LatticePoint3::new(x0, x1, x2);
                if c.embed(p).norm() <= radius {
                    out.push(p);
                }
            }
        }
    }
    Ok(out)
}

fn invert3(m: [[f64; 3]; 3]) -> Option<[[f64; 3]; 3]> {
    let cof = |r0: usize, r1: usize, c0: usize, c1: usize| m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    let det = m[0][0] * cof(1, 2, 1, 2) - m[0][1] * cof(1, 2, 0, 2) + m[0][2] * cof(1, 2, 0, 1);
    if det.abs() < 1e-12 {
        return None;
    }
    let adj = [
        [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
        [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
        [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
    ];
    Some(adj.map(|row| row.map(|v| v / det)))
}

/// Every periodic orbit reached from the ball of `radius`, sorted.
pub fn attractors3(c: &CubicSystem, radius: f64) -> Result<Vec<Attractor3>> {
    if radius < c.nominal_radius() {
        return Err(Error::Domain(format!(
            "radius {radius} below the reduction radius {}",
            c.nominal_radius()
        )));
    }
    let mut settled: HashSet<LatticePoint3> = HashSet::new();
    let mut found: Vec<Attractor3> = Vec::new();
    for start in ball_points3(c, radius)? {
        let mut path = Vec::new();
        let mut on_path: HashMap<LatticePoint3, usize> = HashMap::new();
        let mut cur = start;
        loop {
            if settled.contains(&cur) {
                break;
            }
            if let Some(&i) = on_path.get(&cur) {
                found.push(Attractor3::from_cycle(path[i..].to_vec()));
                break;
            }
            if path.len() >= ORBIT_CAP {
                return Err(Error::NonConvergence(ORBIT_CAP));
            }
            on_path.insert(cur, path.len());
            path.push(cur);
            cur = reduce3(c, cur)?.0;
        }
        settled.extend(path);
    }
    found.sort_by(|a, b| a.points.cmp(&b.points));
    Ok(found)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CubicClass {
    pub proper: bool,
    pub attractors: Vec<Attractor3>,
}

/// Proper means the only attractor in the search ball is the fixed point 0.
pub fn classify3(c: &CubicSystem) -> Result<CubicClass> {
    let attractors = attractors3(c, c.search_radius())?;
    let proper = attractors.len() == 1
        && attractors[0].kind == AttractorKind::FixedPoint
        && attractors[0].points == [LatticePoint3::ZERO];
    Ok(CubicClass { proper, attractors })
}
