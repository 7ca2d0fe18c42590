#![allow(dead_code)]

use std::collections::HashMap;

use cxbase::System;
use num_complex::Complex64;

/// Published boundary dimensions: `(n, |D|, H)`.
pub const DIMENSION_TABLE: &[(i64, i64, f64)] = &[
    (2, 0, 1.0), (2, 1, 1.210760533), (2, 2, 1.523627086),
    (3, 0, 1.0), (3, 1, 1.162039854), (3, 2, 1.376841713), (3, 3, 1.657559542),
    (4, 0, 1.0), (4, 1, 1.134761994), (4, 2, 1.303052340), (4, 3, 1.508664987),
    (5, 0, 1.0), (5, 1, 1.116924317), (5, 2, 1.257583258), (5, 3, 1.422944863), (5, 4, 1.608726378),
    (6, 0, 1.0), (6, 1, 1.104171451), (6, 2, 1.226294386), (6, 3, 1.366294523), (6, 4, 1.520716574),
    (7, 0, 1.0), (7, 1, 1.094508825), (7, 2, 1.203216411), (7, 3, 1.325629733), (7, 4, 1.458928649),
    (7, 5, 1.598134771),
    (8, 0, 1.0), (8, 1, 1.086882303), (8, 2, 1.185363533), (8, 3, 1.294784127), (8, 4, 1.412801706),
    (8, 5, 1.535582008),
    (9, 0, 1.0), (9, 1, 1.080677473), (9, 2, 1.171064018), (9, 3, 1.270444950), (9, 4, 1.376841713),
    (9, 5, 1.487192945),
];

pub fn sys(n: i64, d: i64) -> System {
    System::new(n, d).unwrap()
}

/// Every valid `(n, D)` with `2 <= n <= max_n`.
pub fn all_systems(max_n: i64) -> Vec<System> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for d in -2 * n..=2 * n {
            if d * d < 4 * n {
                out.push(sys(n, d));
            }
        }
    }
    out
}

/// Largest nearest-neighbour distance from `a` into `b`, searched on a grid
/// of `cell` in rings out to `reach`; infinite when something is farther.
pub fn directed_hausdorff(a: &[Complex64], b: &[Complex64], reach: f64) -> f64 {
    let cell = reach / 8.0;
    let key = |p: Complex64| ((p.re / cell).floor() as i64, (p.im / cell).floor() as i64);
    let mut grid: HashMap<(i64, i64), Vec<Complex64>> = HashMap::new();
    for &q in b {
        grid.entry(key(q)).or_default().push(q);
    }
    a.iter()
        .map(|&p| {
            let (i, j) = key(p);
            let mut best = f64::INFINITY;
            for ring in 0..=9i64 {
                for di in -ring..=ring {
                    for dj in -ring..=ring {
                        if di.abs().max(dj.abs()) != ring {
                            continue;
                        }
                        for q in grid.get(&(i + di, j + dj)).into_iter().flatten() {
                            best = best.min((p - q).norm());
                        }
                    }
                }
                // anything in later rings is at least this far
                if best <= ring as f64 * cell {
                    break;
                }
            }
            best
        })
        .fold(0.0, f64::max)
}

pub fn hausdorff(a: &[Complex64], b: &[Complex64], reach: f64) -> f64 {
    directed_hausdorff(a, b, reach).max(directed_hausdorff(b, a, reach))
}
