//! Point clouds, rasters, tiling coverage and box-counting dimension.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hull::HullModel;
use crate::integer::{ball_points_around, encode, fixed_points};
use crate::system::{LatticePoint, System};

/// Largest point cloud enumerated exhaustively.
pub const MAX_POINTS: u128 = 1 << 24;

/// Axis-aligned complex rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Window {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl Window {
    pub fn new(x0: f64, y0: f64, x1: f64, y1: f64) -> Result<Self> {
        if !(x0.is_finite() && y0.is_finite() && x1.is_finite() && y1.is_finite()) || x1 <= x0 || y1 <= y0 {
            return Err(Error::Domain(format!("degenerate window [{x0},{x1}]x[{y0},{y1}]")));
        }
        Ok(Window { x0, y0, x1, y1 })
    }

    pub fn from_bbox(b: [f64; 4], pad: f64) -> Result<Self> {
        let px = (b[2] - b[0]) * pad;
        let py = (b[3] - b[1]) * pad;
        Window::new(b[0] - px, b[1] - py, b[2] + px, b[3] + py)
    }

    pub fn width(&self) -> f64 {
        self.x1 - self.x0
    }

    pub fn height(&self) -> f64 {
        self.y1 - self.y0
    }

    pub fn center(&self) -> Complex64 {
        Complex64::new((self.x0 + self.x1) / 2.0, (self.y0 + self.y1) / 2.0)
    }
}

/// Palette index 0 is the background. Entries 1.. come from a golden-angle
/// hue walk, so neighbouring indices get well separated colours.
pub fn palette(index: u16) -> [u8; 3] {
    if index == 0 {
        return [255, 255, 255];
    }
    let h = ((index - 1) as f64 * 0.618_033_988_749_895).fract() * 6.0;
    let (s, v) = (0.65, if index % 2 == 0 { 0.80 } else { 0.95 });
    let c = v * s;
    let x = c * (1.0 - ((h % 2.0) - 1.0).abs());
    let (r, g, b) = match h as u32 {
        0 => (c, x, 0.0),
        1 => (x, c, 0.0),
        2 => (0.0, c, x),
        3 => (0.0, x, c),
        4 => (x, 0.0, c),
        _ => (c, 0.0, x),
    };
    let m = v - c;
    let q = |t: f64| ((t + m) * 255.0).round() as u8;
    [q(r), q(g), q(b)]
}

/// Row 0 is the top edge (`y1`) of the window.
#[derive(Debug, Clone, PartialEq)]
pub struct RasterImage {
    pub width: usize,
    pub height: usize,
    pub window: Window,
    pub pixels: Vec<u16>,
}

impl RasterImage {
    pub fn new(width: usize, height: usize, window: Window) -> Result<Self> {
        if width == 0 || height == 0 || width > 1 << 14 || height > 1 << 14 {
            return Err(Error::Domain(format!("raster size {width}x{height} out of range")));
        }
        Ok(RasterImage { width, height, window, pixels: vec![0; width * height] })
    }

    /// Width `res`, height chosen to keep the window's aspect ratio.
    pub fn with_aspect(res: usize, window: Window) -> Result<Self> {
        let h = ((res as f64) * window.height() / window.width()).round().max(1.0) as usize;
        Self::new(res, h, window)
    }

    pub fn pixel_of(&self, p: Complex64) -> Option<usize> {
        let w = &self.window;
        let fx = (p.re - w.x0) / w.width() * self.width as f64;
        let fy = (w.y1 - p.im) / w.height() * self.height as f64;
        if !(fx >= 0.0 && fy >= 0.0) {
            return None;
        }
        let (ix, iy) = (fx as usize, fy as usize);
        (ix < self.width && iy < self.height).then(|| iy * self.width + ix)
    }

    pub fn plot(&mut self, p: Complex64, color: u16) {
        if let Some(i) = self.pixel_of(p) {
            self.pixels[i] = color;
        }
    }

    pub fn nonempty_count(&self) -> usize {
        self.pixels.iter().filter(|&&c| c != 0).count()
    }

    /// Binary PPM (P6, maxval 255) through [`palette`].
    pub fn to_ppm(&self) -> Vec<u8> {
        let mut out = format!("P6\n{} {}\n255\n", self.width, self.height).into_bytes();
        out.reserve(self.pixels.len() * 3);
        for &c in &self.pixels {
            out.extend_from_slice(&palette(c));
        }
        out
    }
}

/// How the fractional point cloud is produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CloudMode {
    /// All `n^k` digit strings; refuses more than [`MAX_POINTS`].
    Exhaustive,
    /// `points` random digit strings from a seeded ChaCha stream.
    Sampled { points: usize, seed: u64 },
}

fn check_budget(n: i64, k: u32) -> Result<usize> {
    let total = (n as u128).checked_pow(k).unwrap_or(u128::MAX);
    if total > MAX_POINTS {
        return Err(Error::Guard { what: "fractional point cloud", points: total, limit: MAX_POINTS });
    }
    Ok(total as usize)
}

/// All `Σ_{i=1..k} d_i z^-i`. Index `i` holds the string whose digits
/// `d_1 d_2 ... d_k` spell `i` in base `n`, most significant first.
pub fn fractional_cloud(z: Complex64, n: i64, k: u32) -> Result<Vec<Complex64>> {
    if n < 2 {
        return Err(Error::Domain(format!("need at least two digits, got n = {n}")));
    }
    let total = check_budget(n, k)?;
    let inv = 1.0 / z;
    let mut pts = Vec::with_capacity(total);
    pts.push(Complex64::new(0.0, 0.0));
    let mut scale = Complex64::new(1.0, 0.0);
    for _ in 0..k {
        scale *= inv;
        let prev = std::mem::take(&mut pts);
        pts.reserve(prev.len() * n as usize);
        for p in prev {
            for d in 0..n {
                pts.push(p + scale * d as f64);
            }
        }
    }
    Ok(pts)
}

/// Random depth-`k` fractional points with their first two digits.
pub fn sampled_cloud(z: Complex64, n: i64, k: u32, points: usize, seed: u64) -> Vec<(Complex64, [i64; 2])> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inv = 1.0 / z;
    (0..points)
        .map(|_| {
            let mut scale = Complex64::new(1.0, 0.0);
            let mut p = Complex64::new(0.0, 0.0);
            let mut lead = [0; 2];
            for i in 0..k as usize {
                scale *= inv;
                let d = rng.gen_range(0..n);
                if i < 2 {
                    lead[i] = d;
                }
                p += scale * d as f64;
            }
            (p, lead)
        })
        .collect()
}

fn digit_pair_color(n: i64, d1: i64, d2: i64) -> u16 {
    (1 + d1 * n + d2) as u16
}

/// Fractional tile at depth `k`, coloured by its two leading digits
/// (palette index `1 + d_1 n + d_2`), framed by the hull bounding box.
pub fn raster_fractional(s: &System, k: u32, res: usize, mode: CloudMode) -> Result<RasterImage> {
    let hull = HullModel::new(*s).hull_polygon(256)?;
    let window = Window::from_bbox(hull.bounding_box(), 0.02)?;
    let mut img = RasterImage::with_aspect(res, window)?;
    let n = s.n();
    match mode {
        CloudMode::Exhaustive => {
            let pts = fractional_cloud(s.z(), n, k)?;
            let block2 = (n as usize).pow(k.saturating_sub(2));
            let block1 = block2 * n as usize;
            for (i, p) in pts.into_iter().enumerate() {
                let (d1, d2) = match k {
                    0 => (0, 0),
                    1 => (i as i64, 0),
                    _ => ((i / block1) as i64, ((i / block2) % n as usize) as i64),
                };
                img.plot(p, digit_pair_color(n, d1, d2));
            }
        }
        CloudMode::Sampled { points, seed } => {
            for (p, [d1, d2]) in sampled_cloud(s.z(), n, k, points, seed) {
                img.plot(p, digit_pair_color(n, d1, d2));
            }
        }
    }
    Ok(img)
}

/// All `Σ_{i<digits} d_i z^i` as exact lattice points, in digit-string order.
pub fn integer_points(s: &System, digits: u32) -> Result<Vec<LatticePoint>> {
    let total = check_budget(s.n(), digits)?;
    let mut pts = Vec::with_capacity(total);
    pts.push(LatticePoint::ZERO);
    let mut power = LatticePoint::ONE;
    for _ in 0..digits {
        let prev = std::mem::take(&mut pts);
        for p in prev {
            for d in 0..s.n() {
                pts.push(p.checked_add(power.checked_scale(d)?)?);
            }
        }
        power = s.mul_z(power)?;
    }
    Ok(pts)
}

fn terminal_color(s: &System, x: LatticePoint) -> Result<u16> {
    let t = encode(s, x)?.terminal;
    let fp = fixed_points(s);
    let i = fp.iter().position(|&f| f == t).ok_or_else(|| Error::Domain(format!("unexpected terminal {t}")))?;
    Ok(1 + i as u16)
}

fn stamp_disk(img: &mut RasterImage, p: Complex64, radius_px: f64, color: u16) {
    let w = img.window;
    let cx = (p.re - w.x0) / w.width() * img.width as f64;
    let cy = (w.y1 - p.im) / w.height() * img.height as f64;
    let r = radius_px.max(0.5);
    let (ix0, ix1) = ((cx - r).floor().max(0.0) as i64, (cx + r).ceil() as i64);
    let (iy0, iy1) = ((cy - r).floor().max(0.0) as i64, (cy + r).ceil() as i64);
    for iy in iy0..iy1.min(img.height as i64) {
        for ix in ix0..ix1.min(img.width as i64) {
            let dx = ix as f64 + 0.5 - cx;
            let dy = iy as f64 + 0.5 - cy;
            if dx * dx + dy * dy <= r * r {
                img.pixels[iy as usize * img.width + ix as usize] = color;
            }
        }
    }
}

/// Integer part reached with `digits` digits, one colour per attractor
/// (palette index `1 +` position of the terminal in [`fixed_points`]).
pub fn raster_integer(s: &System, digits: u32, res: usize) -> Result<RasterImage> {
    let pts = integer_points(s, digits)?;
    let values: Vec<Complex64> = pts.iter().map(|&p| s.to_complex(p)).collect();
    let bbox = values.iter().fold([f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY], |b, v| {
        [b[0].min(v.re), b[1].min(v.im), b[2].max(v.re), b[3].max(v.im)]
    });
    let window = Window::from_bbox([bbox[0] - 1.0, bbox[1] - 1.0, bbox[2] + 1.0, bbox[3] + 1.0], 0.02)?;
    let mut img = RasterImage::with_aspect(res, window)?;
    let radius_px = 0.3 * img.width as f64 / window.width();
    for (&p, &v) in pts.iter().zip(&values) {
        stamp_disk(&mut img, v, radius_px, terminal_color(s, p)?);
    }
    Ok(img)
}

/// Lattice points of the ball of `radius` coloured by attractor.
pub fn raster_attractors(s: &System, radius: f64, res: usize) -> Result<RasterImage> {
    let window = Window::new(-radius - 1.0, -radius - 1.0, radius + 1.0, radius + 1.0)?;
    let mut img = RasterImage::with_aspect(res, window)?;
    let radius_px = 0.3 * img.width as f64 / window.width();
    for p in ball_points_around(s, Complex64::new(0.0, 0.0), radius) {
        stamp_disk(&mut img, s.to_complex(p), radius_px, terminal_color(s, p)?);
    }
    Ok(img)
}

/// Covering radius of `Z + zZ`: circumradius of the non-obtuse triangle
/// spanned by a Gauss-reduced basis.
pub fn covering_radius(z: Complex64) -> f64 {
    let (mut u, mut v) = (Complex64::new(1.0, 0.0), z);
    loop {
        if v.norm_sqr() < u.norm_sqr() {
            std::mem::swap(&mut u, &mut v);
        }
        let t = (v * u.conj()).re / u.norm_sqr();
        if t.abs() <= 0.5 {
            break;
        }
        v -= u * t.round();
    }
    if (v * u.conj()).re < 0.0 {
        v = -v;
    }
    let (a, b, c) = (u.norm(), v.norm(), (v - u).norm());
    let area2 = (u.re * v.im - u.im * v.re).abs();
    a * b * c / (2.0 * area2)
}

/// Which lattice translates of the tile are stamped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Translates {
    /// Every point of `Z + zZ`.
    All,
    /// Only points whose encoding terminates at 0, i.e. the integer part.
    EncodeReachable,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoverageReport {
    pub covered_fraction: f64,
    pub overlap_fraction: f64,
    pub uncovered_fraction: f64,
    pub level: u32,
    pub resolution: [usize; 2],
    pub window: Window,
    pub translates: usize,
    pub stamp_radius: f64,
}

#[cfg(feature = "parallel")]
fn par_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    items.iter().map(f).collect()
}

/// Sample offset inside pixel `i` from the R2 low-discrepancy sequence.
/// Pixel centres would alias against `z^-k X` whenever it lines up with
/// the pixel grid.
fn jitter(i: usize) -> (f64, f64) {
    let t = i as f64;
    ((0.5 + t * 0.754_877_666_246_692_7).fract(), (0.5 + t * 0.569_840_290_998_053_2).fract())
}

/// Stamps the level-`k` cloud around every relevant translate and counts
/// pixels hit by one or more, and by two or more, distinct translates.
/// Each pixel is tested at one jittered sample point.
///
/// Each point carries a disk of the covering radius of `z^-k X`. The
/// level-`k` points of all translates together form exactly `z^-k X`, so
/// a proper tiling covers the window while overlaps stay in a band along
/// tile boundaries that narrows as `k` grows.
pub fn coverage_report(s: &System, k: u32, res: usize, window: Window, which: Translates) -> Result<CoverageReport> {
    let cloud = fractional_cloud(s.z(), s.n(), k)?;
    let grid = RasterImage::with_aspect(res, window)?;
    let (w, h) = (grid.width, grid.height);
    let stamp = covering_radius(s.z()) * s.sqrt_n().powi(-(k as i32)) * (1.0 + 1e-9);

    let model = HullModel::new(*s);
    let reach = (s.n() - 1) as f64 / (2.0 * (s.sqrt_n() - 1.0));
    let half_diag = 0.5 * window.width().hypot(window.height());
    let mut shifts = ball_points_around(s, window.center() - model.center(), half_diag + reach + stamp + 1e-9);
    if which == Translates::EncodeReachable {
        let mut kept = Vec::with_capacity(shifts.len());
        for t in shifts {
            if encode(s, t)?.terminal == LatticePoint::ZERO {
                kept.push(t);
            }
        }
        shifts = kept;
    }

    let px = window.width() / w as f64;
    let py = window.height() / h as f64;
    let words = (w * h).div_ceil(64);
    let masks = par_map(&shifts, |&t| {
        let off = s.to_complex(t);
        let mut bits = vec![0u64; words];
        for &p in &cloud {
            let q = p + off;
            let ix0 = ((q.re - stamp - window.x0) / px).floor().max(0.0);
            let ix1 = ((q.re + stamp - window.x0) / px).ceil().min(w as f64);
            let iy0 = ((window.y1 - q.im - stamp) / py).floor().max(0.0);
            let iy1 = ((window.y1 - q.im + stamp) / py).ceil().min(h as f64);
            if ix0 >= ix1 || iy0 >= iy1 {
                continue;
            }
            for iy in iy0 as usize..iy1 as usize {
                for ix in ix0 as usize..ix1 as usize {
                    let i = iy * w + ix;
                    let (jx, jy) = jitter(i);
                    let cx = window.x0 + (ix as f64 + jx) * px;
                    let cy = window.y1 - (iy as f64 + jy) * py;
                    if (cx - q.re).powi(2) + (cy - q.im).powi(2) <= stamp * stamp {
                        bits[i / 64] |= 1 << (i % 64);
                    }
                }
            }
        }
        bits
    });

    let mut once = vec![0u64; words];
    let mut twice = vec![0u64; words];
    for bits in &masks {
        for ((o, t), b) in once.iter_mut().zip(twice.iter_mut()).zip(bits) {
            *t |= *o & b;
            *o |= b;
        }
    }
    let total = (w * h) as f64;
    let covered = once.iter().map(|x| x.count_ones() as u64).sum::<u64>() as f64 / total;
    let overlap = twice.iter().map(|x| x.count_ones() as u64).sum::<u64>() as f64 / total;
    Ok(CoverageReport {
        covered_fraction: covered,
        overlap_fraction: overlap,
        uncovered_fraction: 1.0 - covered,
        level: k,
        resolution: [w, h],
        window,
        translates: shifts.len(),
        stamp_radius: stamp,
    })
}

/// Number of ladder scales for box counting.
pub const BOX_SCALES: u32 = 5;

/// Occupied box counts `(boxes per axis, count)` for a point set over the
/// square around its bounding box, `BOX_SCALES` scales from `grid`, ratio 2.
pub fn box_counts(points: &[Complex64], grid: usize) -> Result<Vec<(usize, usize)>> {
    if grid == 0 || points.is_empty() {
        return Err(Error::Domain("box counting needs points and a positive grid".into()));
    }
    let finest = grid << (BOX_SCALES - 1);
    if finest > 1 << 13 {
        return Err(Error::Guard { what: "box-count grid", points: (finest * finest) as u128, limit: 1 << 26 });
    }
    let b = points.iter().fold([f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY], |b, v| {
        [b[0].min(v.re), b[1].min(v.im), b[2].max(v.re), b[3].max(v.im)]
    });
    let side = (b[2] - b[0]).max(b[3] - b[1]).max(1e-300) * (1.0 + 1e-9);
    let x0 = (b[0] + b[2] - side) / 2.0;
    let y0 = (b[1] + b[3] - side) / 2.0;
    let mut occ = vec![false; finest * finest];
    let cell = |v: f64| ((v / side * finest as f64) as usize).min(finest - 1);
    for p in points {
        occ[cell(p.im - y0) * finest + cell(p.re - x0)] = true;
    }
    let mut counts = Vec::with_capacity(BOX_SCALES as usize);
    let mut g = finest;
    loop {
        counts.push((g, occ.iter().filter(|&&o| o).count()));
        if g == grid {
            break;
        }
        let half = g / 2;
        let mut next = vec![false; half * half];
        for y in 0..g {
            for x in 0..g {
                if occ[y * g + x] {
                    next[(y / 2) * half + x / 2] = true;
                }
            }
        }
        occ = next;
        g = half;
    }
    counts.reverse();
    Ok(counts)
}

/// Ordinary least-squares slope of `ln count` against `ln boxes`.
pub fn ols_slope(counts: &[(usize, usize)]) -> f64 {
    let m = counts.len() as f64;
    let xs: Vec<f64> = counts.iter().map(|&(g, _)| (g as f64).ln()).collect();
    let ys: Vec<f64> = counts.iter().map(|&(_, c)| (c as f64).ln()).collect();
    let mx = xs.iter().sum::<f64>() / m;
    let my = ys.iter().sum::<f64>() / m;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    sxy / sxx
}

/// Box-counting estimate for the depth-`k` fractional cloud of any base
/// with `|zval| > 1`, digits `0..round(|zval|^2)`.
pub fn boxcount_dimension(zval: Complex64, depth: u32, grid: usize) -> Result<f64> {
    if !(zval.norm() > 1.0) {
        return Err(Error::Domain(format!("|z| must exceed 1, got {}", zval.norm())));
    }
    let n = zval.norm_sqr().round() as i64;
    let pts = fractional_cloud(zval, n, depth)?;
    Ok(ols_slope(&box_counts(&pts, grid)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub phi: f64,
    pub estimate: f64,
}

/// Box-counting estimates for `z = sqrt(n) e^{i phi}` at `steps` equally
/// spaced angles from `phi_min` to `phi_max` inclusive.
pub fn dimension_sweep(n: i64, phi_min: f64, phi_max: f64, steps: usize, depth: u32, grid: usize) -> Result<Vec<SweepRow>> {
    if steps < 2 || !(phi_min < phi_max) || n < 2 {
        return Err(Error::Domain("sweep needs n >= 2, steps >= 2 and phi_min < phi_max".into()));
    }
    check_budget(n, depth)?;
    let phis: Vec<f64> = (0..steps).map(|i| phi_min + (phi_max - phi_min) * i as f64 / (steps - 1) as f64).collect();
    let r = (n as f64).sqrt();
    let rows = par_map(&phis, |&phi| {
        boxcount_dimension(Complex64::from_polar(r, phi), depth, grid).map(|estimate| SweepRow { phi, estimate })
    });
    rows.into_iter().collect()
}

/// Angles of the periodic bases `z^2 = Dz - n` with `|z| = sqrt(n)`.
pub fn periodic_angles(n: i64) -> Vec<f64> {
    let r = (n as f64).sqrt();
    (-(2.0 * r).ceil() as i64..=(2.0 * r).ceil() as i64)
        .filter(|&d| d * d < 4 * n)
        .map(|d| (d as f64 / (2.0 * r)).acos())
        .filter(|phi| *phi >= 0.0 && *phi <= PI)
        .collect()
}

/// Formats with 9 significant digits, plain or exponent notation.
pub fn sig9(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let v: f64 = format!("{x:.8e}").parse().unwrap_or(x);
    format!("{v}")
}

/// SVG 1.1 document with one `<path>` per closed polyline.
pub fn svg_paths(paths: &[(&[Complex64], &str)], window: Window, size: usize) -> String {
    let scale = size as f64 / window.width().max(window.height());
    let (w, h) = (window.width() * scale, window.height() * scale);
    let mut out = format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
        sig9(w),
        sig9(h),
        sig9(w),
        sig9(h)
    );
    for (pts, stroke) in paths {
        let mut d = String::new();
        for (i, p) in pts.iter().enumerate() {
            let x = (p.re - window.x0) * scale;
            let y = (window.y1 - p.im) * scale;
            d.push_str(&format!("{}{} {} ", if i == 0 { 'M' } else { 'L' }, sig9(x), sig9(y)));
        }
        d.push('Z');
        out.push_str(&format!("<path d=\"{d}\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"1\"/>\n"));
    }
    out.push_str("</svg>\n");
    out
}
