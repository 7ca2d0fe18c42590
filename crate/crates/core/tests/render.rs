mod common;

use std::f64::consts::PI;

use common::{all_systems, sys};
use cxbase::hull::HullModel;
use cxbase::integer::encode;
use cxbase::render::*;
use cxbase::LatticePoint;
use num_complex::Complex64;

fn square() -> Window {
    Window::new(-2.0, -2.0, 2.0, 2.0).unwrap()
}

#[test]
fn fractional_raster_is_bounded_by_point_count() {
    let img = raster_fractional(&sys(2, -1), 16, 1024, CloudMode::Exhaustive).unwrap();
    assert!(img.nonempty_count() <= 1 << 16);
    assert!(img.nonempty_count() > 1000);
    assert_eq!(img.width, 1024);
}

#[test]
fn fractional_raster_colours_leading_digits() {
    let img = raster_fractional(&sys(3, -1), 8, 256, CloudMode::Exhaustive).unwrap();
    let mut colours: Vec<u16> = img.pixels.iter().copied().filter(|&c| c != 0).collect();
    colours.sort();
    colours.dedup();
    assert_eq!(colours, (1..=9).collect::<Vec<u16>>());
}

#[test]
fn depth_guard_points_to_sampling() {
    let s = sys(9, -1);
    let err = raster_fractional(&s, 9, 64, CloudMode::Exhaustive).unwrap_err();
    assert!(err.to_string().contains("sampling"));
    let img = raster_fractional(&s, 9, 64, CloudMode::Sampled { points: 5000, seed: 7 }).unwrap();
    assert!(img.nonempty_count() > 0);
    let again = raster_fractional(&s, 9, 64, CloudMode::Sampled { points: 5000, seed: 7 }).unwrap();
    assert_eq!(img, again);
}

#[test]
fn depth_ten_points_inside_hull() {
    for s in all_systems(9) {
        let k = match s.n() {
            2..=4 => 10,
            5 | 6 => 8,
            _ => 7,
        };
        let h = HullModel::new(s);
        let poly = h.hull_polygon(4096).unwrap();
        for p in fractional_cloud(s.z(), s.n(), k).unwrap() {
            assert!(poly.contains_convex(h.center(), p, 1e-6), "{s} {p}");
        }
    }
}

#[test]
fn integer_points_for_twindragon_are_distinct() {
    let mut pts = integer_points(&sys(2, -2), 6).unwrap();
    assert_eq!(pts.len(), 64);
    pts.sort();
    pts.dedup();
    assert_eq!(pts.len(), 64);
}

#[test]
fn improper_integer_part_misses_other_attractor() {
    let s = sys(2, 2);
    for digits in 1..=10 {
        let pts = integer_points(&s, digits).unwrap();
        assert!(!pts.contains(&LatticePoint::new(-1, 1)));
    }
    let img = raster_integer(&s, 6, 256).unwrap();
    assert!(img.nonempty_count() > 0);
}

#[test]
fn proper_systems_render_one_attractor() {
    for (n, d) in [(2, -1), (3, 1), (5, -3)] {
        let img = raster_attractors(&sys(n, d), 6.0, 128).unwrap();
        assert!(img.pixels.iter().all(|&c| c <= 1));
        assert!(img.nonempty_count() > 0);
    }
    let img = raster_attractors(&sys(3, 3), 6.0, 128).unwrap();
    let mut colours: Vec<u16> = img.pixels.iter().copied().filter(|&c| c != 0).collect();
    colours.sort();
    colours.dedup();
    assert_eq!(colours, vec![1, 2, 3]);
}

#[test]
fn coverage_of_proper_tilings() {
    for (n, d) in [(2, -1), (2, -2), (3, -1)] {
        let s = sys(n, d);
        let mut prev = f64::INFINITY;
        for k in 10..=14 {
            let r = coverage_report(&s, k, 512, square(), Translates::All).unwrap();
            assert!(r.covered_fraction >= 0.99, "{s} k={k}: {r:?}");
            assert!(r.overlap_fraction < prev, "{s} k={k}: {r:?}");
            assert!((r.covered_fraction + r.uncovered_fraction - 1.0).abs() < 1e-12);
            assert!(r.overlap_fraction <= r.covered_fraction);
            prev = r.overlap_fraction;
        }
    }
}

#[test]
fn integer_part_alone_does_not_cover_for_d_two() {
    let r = coverage_report(&sys(2, 2), 12, 256, square(), Translates::EncodeReachable).unwrap();
    assert!(r.covered_fraction < 0.8, "{r:?}");
    let all = coverage_report(&sys(2, 2), 12, 256, square(), Translates::All).unwrap();
    assert!(all.covered_fraction >= 0.99);
    // translates kept are exactly the integer part
    let kept = r.translates;
    assert!(kept < all.translates);
    assert!(encode(&sys(2, 2), LatticePoint::new(-1, 1)).unwrap().terminal != LatticePoint::ZERO);
}

#[test]
fn coverage_is_independent_of_worker_count() {
    let s = sys(2, -1);
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| coverage_report(&s, 12, 256, square(), Translates::All).unwrap())
    };
    assert_eq!(run(1), run(4));
    let sweep = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| dimension_sweep(2, PI / 2.0, PI, 8, 14, 8).unwrap())
    };
    assert_eq!(sweep(1), sweep(3));
}

#[test]
fn boxcount_examples() {
    // boxes from 1/32 to 1/512 of the window
    let sq = boxcount_dimension(Complex64::new(0.0, 2f64.sqrt()), 22, 32).unwrap();
    assert!((1.9..=2.05).contains(&sq), "{sq}");
    let flat = boxcount_dimension(Complex64::from_polar(2f64.sqrt(), PI * 0.999), 22, 32).unwrap();
    assert!(flat < 1.3, "{flat}");
    let twin = boxcount_dimension(Complex64::new(-1.0, 1.0), 22, 32).unwrap();
    assert!((1.9..=2.05).contains(&twin), "{twin}");
    assert!(boxcount_dimension(Complex64::new(0.5, 0.5), 10, 8).is_err());
}

#[test]
fn sweep_range_and_decay() {
    let rows = dimension_sweep(2, PI / 2.0, PI, 64, 18, 8).unwrap();
    assert_eq!(rows.len(), 64);
    assert!(rows.iter().all(|r| (0.9..=2.1).contains(&r.estimate)));
    let near = |phi: f64| rows.iter().min_by(|a, b| (a.phi - phi).abs().total_cmp(&(b.phi - phi).abs())).unwrap().estimate;
    let tail = boxcount_dimension(Complex64::from_polar(2f64.sqrt(), PI - 0.01), 18, 8).unwrap();
    assert!(tail < near(3.0 * PI / 4.0));
}

#[test]
fn ppm_and_svg_output() {
    let img = raster_fractional(&sys(2, -1), 10, 64, CloudMode::Exhaustive).unwrap();
    let ppm = img.to_ppm();
    let header = format!("P6\n{} {}\n255\n", img.width, img.height);
    assert!(ppm.starts_with(header.as_bytes()));
    assert_eq!(ppm.len(), header.len() + 3 * img.width * img.height);
    let pts = [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)];
    let svg = svg_paths(&[(&pts, "black")], Window::new(-1.0, -1.0, 2.0, 2.0).unwrap(), 300);
    assert!(svg.contains("version=\"1.1\""));
    assert_eq!(svg.matches("<path").count(), 1);
}
