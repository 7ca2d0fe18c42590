//! Integer part: reduction on `X = Z + zZ`, encoding into digit strings,
//! carry normalization and the attractor structure of the reduction map.

use std::collections::{BTreeMap, HashSet};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::system::{DigitString, LatticePoint, PseudoRepresentation, System};

/// Which of the periodic cases a system falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ProperTag {
    /// `D <= 1`: every lattice point has a representation.
    Proper,
    /// `D = 2`: two attractors mirrored about `z - 1`.
    TwoAttractorsMirror,
    /// `2(n + 1 - D) < n`: `(3, 3)`, `(5, 4)` and `(7, 5)`.
    ThreeAttractors,
    /// Any other `D >= 3`.
    TwoAttractorsGeneric,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropernessClass {
    pub tag: ProperTag,
    pub fixed_points: Vec<LatticePoint>,
}

impl PropernessClass {
    pub fn is_proper(&self) -> bool {
        self.tag == ProperTag::Proper
    }
}

/// `digits` (least significant first) followed by the fixed point reached:
/// `input = decode(digits) + terminal * z^len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodeResult {
    pub digits: DigitString,
    pub terminal: LatticePoint,
}

fn floor_div(a: i64, n: i64) -> i64 {
    a.div_euclid(n)
}

/// Strips the least significant digit: returns `(y, d)` with `y z + d = x`.
pub fn reduce(s: &System, x: LatticePoint) -> Result<(LatticePoint, i64)> {
    let n = s.n();
    let k = floor_div(x.a, n);
    let d = x.a - k * n;
    let a = s
        .d()
        .checked_mul(k)
        .and_then(|kd| x.b.checked_add(kd))
        .ok_or(Error::Overflow)?;
    let b = k.checked_neg().ok_or(Error::Overflow)?;
    Ok((LatticePoint::new(a, b), d))
}

/// Radius beyond which reduction strictly shrinks `|x|`.
pub fn contraction_radius(s: &System) -> f64 {
    s.sqrt_n() + 1.0
}

fn step_cap(s: &System, x: LatticePoint) -> usize {
    let norm = s.to_complex(x).norm().max(1.0);
    let to_ball = (norm.ln() / s.sqrt_n().ln()).ceil() as usize;
    let diameter = (2.0 * contraction_radius(s)).ceil() as usize;
    10 * (to_ball + diameter * diameter + 1)
}

/// Repeated reduction until a fixed point of `reduce` is reached.
pub fn encode(s: &System, x: LatticePoint) -> Result<EncodeResult> {
    let cap = step_cap(s, x);
    let ball = contraction_radius(s) + 1e-9;
    let mut seen = HashSet::new();
    let mut digits = Vec::new();
    let mut cur = x;
    loop {
        let (y, d) = reduce(s, cur)?;
        if y == cur {
            return Ok(EncodeResult { digits: DigitString::from_valid(digits), terminal: cur });
        }
        if s.to_complex(cur).norm() <= ball && !seen.insert(cur) {
            return Err(Error::Cycle { start: x, steps: digits.len() });
        }
        digits.push(d);
        cur = y;
        if digits.len() > cap {
            return Err(Error::Cycle { start: x, steps: digits.len() });
        }
    }
}

/// Exact Horner evaluation of an integer-part digit string.
pub fn decode(s: &System, r: &DigitString) -> Result<LatticePoint> {
    use crate::system::Expansion;
    if r.offset() < 0 {
        return Err(Error::NegativeOffset(r.offset()));
    }
    let mut acc = LatticePoint::ZERO;
    for &d in r.digits().iter().rev() {
        acc = s.mul_z(acc)?.checked_add(LatticePoint::new(d, 0))?;
    }
    for _ in 0..r.offset() {
        acc = s.mul_z(acc)?;
    }
    Ok(acc)
}

/// One carry step at `position`: subtract `floor(v/n) * (n, -D, 1)` shifted
/// there, leaving `v mod n` in place.
pub fn normalize_step(s: &System, p: &mut Vec<i64>, position: usize) -> Result<()> {
    let (n, dd) = (s.n(), s.d());
    if p.len() < position + 3 {
        p.resize(position + 3, 0);
    }
    let v = p[position];
    let k = floor_div(v, n);
    p[position] = v - k * n;
    let carry1 = k.checked_mul(dd).ok_or(Error::Overflow)?;
    p[position + 1] = p[position + 1].checked_add(carry1).ok_or(Error::Overflow)?;
    p[position + 2] = p[position + 2].checked_sub(k).ok_or(Error::Overflow)?;
    Ok(())
}

/// Turns an integer pseudorepresentation into a representation of the same
/// value by sweeping carries upward. Once only two positions remain the
/// tail is a lattice point and the sweep continues as [`encode`].
pub fn normalize(s: &System, p: &PseudoRepresentation) -> Result<EncodeResult> {
    if p.offset < 0 {
        return Err(Error::NegativeOffset(p.offset));
    }
    let mut v = vec![0; p.offset as usize];
    v.extend_from_slice(&p.digits);
    let len = v.iter().rposition(|&d| d != 0).map_or(0, |q| q + 1);
    v.truncate(len);

    let mut position = 0;
    while position + 2 < v.len() {
        normalize_step(s, &mut v, position)?;
        position += 1;
    }
    v.resize(position + 2, 0);
    let tail = LatticePoint::new(v[position], v[position + 1]);
    v.truncate(position);
    let rest = encode(s, tail)?;
    v.extend_from_slice(rest.digits.digits());
    Ok(EncodeResult { digits: DigitString::from_valid(v), terminal: rest.terminal })
}

/// Digit-wise sum normalized with sequential carries.
pub fn add(s: &System, x: &DigitString, y: &DigitString) -> Result<EncodeResult> {
    use crate::system::Expansion;
    if x.offset() != 0 || y.offset() != 0 {
        return Err(Error::Domain("add expects integer digit strings (offset 0)".into()));
    }
    let len = x.len().max(y.len());
    let sum = (0..len)
        .map(|i| x.digits().get(i).unwrap_or(&0) + y.digits().get(i).unwrap_or(&0))
        .collect();
    normalize(s, &PseudoRepresentation::integer(sum))
}

/// Fixed points of `reduce`: `-j(D-1) + j z` for every `j >= 0` with
/// `j (n + 1 - D) < n`.
pub fn fixed_points(s: &System) -> Vec<LatticePoint> {
    let (n, d) = (s.n(), s.d());
    (0..).take_while(|&j| j == 0 || j * (n + 1 - d) < n).map(|j| LatticePoint::new(-j * (d - 1), j)).collect()
}

pub fn classify(s: &System) -> PropernessClass {
    let fixed_points = fixed_points(s);
    let tag = match (s.d(), fixed_points.len()) {
        (d, _) if d <= 1 => ProperTag::Proper,
        (2, _) => ProperTag::TwoAttractorsMirror,
        (_, 3) => ProperTag::ThreeAttractors,
        _ => ProperTag::TwoAttractorsGeneric,
    };
    debug_assert!(fixed_points
        .iter()
        .all(|&p| reduce(s, p).map(|(y, _)| y == p).unwrap_or(false)));
    PropernessClass { tag, fixed_points }
}

/// Lattice points with `|a + b z| <= radius`, ordered by `(a, b)`.
pub fn ball_points(s: &System, radius: f64) -> Vec<LatticePoint> {
    ball_points_around(s, Complex64::new(0.0, 0.0), radius)
}

/// Lattice points within `radius` of `center`: bounding box in `(a, b)`,
/// then a norm filter.
pub fn ball_points_around(s: &System, center: Complex64, radius: f64) -> Vec<LatticePoint> {
    let z = s.z();
    let bmin = ((center.im - radius) / z.im).ceil() as i64;
    let bmax = ((center.im + radius) / z.im).floor() as i64;
    let mut out = Vec::new();
    for b in bmin..=bmax {
        let shift = b as f64 * z.re;
        let amin = (center.re - radius - shift).ceil() as i64;
        let amax = (center.re + radius - shift).floor() as i64;
        for a in amin..=amax {
            let p = LatticePoint::new(a, b);
            if (s.to_complex(p) - center).norm() <= radius {
                out.push(p);
            }
        }
    }
    out.sort();
    out
}

/// Terminal fixed point for every lattice point in the ball of `radius`.
pub fn attractor_map(s: &System, radius: f64) -> Result<BTreeMap<LatticePoint, LatticePoint>> {
    if radius < contraction_radius(s) {
        return Err(Error::Domain(format!(
            "radius {radius} is below sqrt(n)+1 = {}",
            contraction_radius(s)
        )));
    }
    let mut memo: std::collections::HashMap<LatticePoint, LatticePoint> = Default::default();
    let mut out = BTreeMap::new();
    for p in ball_points(s, radius) {
        let mut path = Vec::new();
        let mut on_path = HashSet::new();
        let mut cur = p;
        let cap = step_cap(s, p);
        let terminal = loop {
            if let Some(&t) = memo.get(&cur) {
                break t;
            }
            let (y, _) = reduce(s, cur)?;
            if y == cur {
                break cur;
            }
            if !on_path.insert(cur) || path.len() > cap {
                return Err(Error::Cycle { start: p, steps: path.len() });
            }
            path.push(cur);
            cur = y;
        };
        memo.insert(cur, terminal);
        for q in path {
            memo.insert(q, terminal);
        }
        out.insert(p, terminal);
    }
    Ok(out)
}
