//! WebAssembly bindings for the single-page demo in `www/`.
//!
//! The plain functions do the work and are usable natively; the
//! `#[wasm_bindgen]` wrappers only convert errors.

use cxbase::boundary::{boundary_dimension, boundary_polyline};
use cxbase::integer::classify;
use cxbase::render::{palette, raster_attractors, raster_fractional, CloudMode, RasterImage};
use cxbase::System;
use wasm_bindgen::prelude::*;

/// Exhaustive rendering stops at this many points; beyond it points are sampled.
const EXHAUSTIVE_LIMIT: u64 = 1 << 20;
const SAMPLE_SEED: u64 = 1;

/// RGBA image ready for `ImageData`.
#[wasm_bindgen]
pub struct Image {
    width: usize,
    height: usize,
    rgba: Vec<u8>,
}

#[wasm_bindgen]
impl Image {
    #[wasm_bindgen(getter)]
    pub fn width(&self) -> usize {
        self.width
    }

    #[wasm_bindgen(getter)]
    pub fn height(&self) -> usize {
        self.height
    }

    pub fn rgba(&self) -> Vec<u8> {
        self.rgba.clone()
    }
}

impl Image {
    fn from_raster(img: &RasterImage) -> Self {
        let mut rgba = Vec::with_capacity(4 * img.pixels.len());
        for &c in &img.pixels {
            rgba.extend_from_slice(&palette(c));
            rgba.push(255);
        }
        Image { width: img.width, height: img.height, rgba }
    }

    pub fn pixels(&self) -> &[u8] {
        &self.rgba
    }
}

/// Boundary polyline as interleaved `x, y` plus the boundary dimension.
#[wasm_bindgen]
pub struct Boundary {
    xy: Vec<f64>,
    dimension: f64,
}

#[wasm_bindgen]
impl Boundary {
    pub fn xy(&self) -> Vec<f64> {
        self.xy.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn dimension(&self) -> f64 {
        self.dimension
    }
}

impl Boundary {
    pub fn points(&self) -> &[f64] {
        &self.xy
    }
}

pub fn tile_image(n: i64, d: i64, k: u32, res: usize) -> Result<Image, String> {
    let s = System::new(n, d).map_err(|e| e.to_string())?;
    let total = (n as u64).checked_pow(k).unwrap_or(u64::MAX);
    let mode = if total <= EXHAUSTIVE_LIMIT {
        CloudMode::Exhaustive
    } else {
        CloudMode::Sampled { points: EXHAUSTIVE_LIMIT as usize, seed: SAMPLE_SEED }
    };
    let img = raster_fractional(&s, k, res, mode).map_err(|e| e.to_string())?;
    Ok(Image::from_raster(&img))
}

pub fn tile_boundary(n: i64, d: i64, k: u32) -> Result<Boundary, String> {
    let s = System::new(n, d).map_err(|e| e.to_string())?;
    let line = boundary_polyline(&s, k).map_err(|e| e.to_string())?;
    let dimension = boundary_dimension(&s).map_err(|e| e.to_string())?;
    Ok(Boundary { xy: line.iter().flat_map(|p| [p.re, p.im]).collect(), dimension })
}

/// Lattice points within `radius` coloured by the fixed point their
/// reduction orbit reaches; also returns the number of attractors.
pub fn attractor_image(n: i64, d: i64, radius: f64, res: usize) -> Result<(Image, usize), String> {
    let s = System::new(n, d).map_err(|e| e.to_string())?;
    let img = raster_attractors(&s, radius, res).map_err(|e| e.to_string())?;
    Ok((Image::from_raster(&img), classify(&s).fixed_points.len()))
}

#[wasm_bindgen(js_name = renderTile)]
pub fn render_tile(n: i64, d: i64, k: u32, res: usize) -> Result<Image, JsError> {
    tile_image(n, d, k, res).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = traceBoundary)]
pub fn trace_boundary(n: i64, d: i64, k: u32) -> Result<Boundary, JsError> {
    tile_boundary(n, d, k).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = renderAttractors)]
pub fn render_attractors(n: i64, d: i64, radius: f64, res: usize) -> Result<Image, JsError> {
    attractor_image(n, d, radius, res).map(|(img, _)| img).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = attractorCount)]
pub fn attractor_count(n: i64, d: i64) -> Result<usize, JsError> {
    let s = System::new(n, d).map_err(|e| JsError::new(&e.to_string()))?;
    Ok(classify(&s).fixed_points.len())
}
