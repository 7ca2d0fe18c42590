mod common;

use common::{all_systems, sys, DIMENSION_TABLE};
use cxbase::boundary::*;
use cxbase::hull::HullModel;
use nalgebra::DMatrix;

fn negative_systems(max_n: i64) -> Vec<cxbase::System> {
    all_systems(max_n).into_iter().filter(|s| s.d() < 0).collect()
}

#[test]
fn tables_verify_for_all_negative_d() {
    for s in negative_systems(9) {
        neighbor_table(&s).unwrap().verify().unwrap();
    }
}

#[test]
fn refinement_matches_traced_boundary() {
    for s in negative_systems(4) {
        let model = BoundaryModel::new(&s).unwrap();
        let mut c = model.initial_chain().unwrap();
        for k in 0..=8 {
            let oracle = trace_boundary_oracle(&s, k).unwrap();
            assert!(c.same_cycle(&oracle), "{s} level {k}: {} vs {} points", c.len(), oracle.len());
            c = model.refine(&c).unwrap();
        }
    }
}

#[test]
fn census_transfer_matches_oracle() {
    for s in negative_systems(4) {
        let t = neighbor_table(&s).unwrap();
        let m = substitution_matrix(&s).unwrap();
        let mut prev = trace_boundary_oracle(&s, 0).unwrap().census(&t).unwrap();
        for k in 1..=7 {
            let next = trace_boundary_oracle(&s, k).unwrap().census(&t).unwrap();
            assert_eq!(m.apply(&prev), next, "{s} level {k}");
            prev = next;
        }
    }
}

#[test]
fn refined_chains_keep_the_set_on_the_left() {
    for s in negative_systems(3) {
        let t = neighbor_table(&s).unwrap();
        let model = BoundaryModel::new(&s).unwrap();
        for k in 0..=5 {
            let set = magnified_origin(&s, k).unwrap();
            let c = model.chain_at(k).unwrap();
            assert!(lies_on_left(&t, |x| set.contains(&x), &c).unwrap(), "{s} level {k}");
        }
    }
}

#[test]
fn power_iteration_agrees_with_dense_eigenvalues() {
    for s in negative_systems(9) {
        let m = substitution_matrix(&s).unwrap();
        let idx: Vec<usize> = m.reachable_types().collect();
        let k = idx.len();
        let dense = DMatrix::from_fn(k, k, |i, j| m.rows()[idx[i]][idx[j]] as f64);
        let rho = dense.complex_eigenvalues().iter().map(|c| c.norm()).fold(0.0, f64::max);
        let lambda = dominant_eigenvalue(&m, 1e-13).unwrap();
        assert!((rho - lambda).abs() < 1e-8, "{s}: {rho} vs {lambda}");
    }
}

#[test]
fn dimension_table() {
    for &(n, d, want) in DIMENSION_TABLE {
        for sign in [-1, 1] {
            let h = boundary_dimension(&sys(n, sign * d)).unwrap();
            assert!((h - want).abs() < 1e-6, "({n}, {}) -> {h}, table {want}", sign * d);
        }
    }
}

#[test]
fn dimension_grows_with_abs_d() {
    for n in 2..=9 {
        let mut prev = 0.0;
        for d in 0.. {
            if d * d >= 4 * n {
                break;
            }
            let h = boundary_dimension(&sys(n, -d)).unwrap();
            assert!((1.0..2.0).contains(&h));
            assert!(h > prev, "n={n} D={d}");
            prev = h;
        }
    }
}

#[test]
fn printed_rule_for_edge_0_4() {
    for s in negative_systems(9).into_iter().filter(|s| s.d() <= -2 && s.n() + s.d() >= 1) {
        let (n, d) = (s.n(), s.d());
        let model = BoundaryModel::new(&s).unwrap();
        let types: Vec<String> = model.rule(EdgeType::new(0, 4)).unwrap().iter().map(|(_, e)| e.to_string()).collect();
        let mut want = vec!["4_0".to_string()];
        want.extend(std::iter::repeat("3_0".to_string()).take((-d - 2) as usize));
        want.push("3_3".into());
        want.extend(std::iter::repeat("0_3".to_string()).take((n + d - 1) as usize));
        want.push("0_2".into());
        assert_eq!(types, want, "{s}");
    }
}

#[test]
fn six_contiguous_arcs() {
    for s in negative_systems(4) {
        let model = BoundaryModel::new(&s).unwrap();
        for k in 1..=6 {
            let c = model.chain_at(k).unwrap();
            let dirs = ancestor_directions(model.table(), &c).unwrap();
            let changes = (0..dirs.len()).filter(|&i| dirs[i] != dirs[(i + 1) % dirs.len()]).count();
            let mut seen = dirs.clone();
            seen.sort();
            seen.dedup();
            assert_eq!(seen, vec![0, 1, 2, 3, 4, 5], "{s} level {k}");
            assert_eq!(changes, 6, "{s} level {k}");
        }
    }
}

#[test]
fn polyline_gaps_and_hull_containment() {
    for s in all_systems(6).into_iter().filter(|s| s.d() != 0) {
        let t = neighbor_table(&canonicalize_sign(&s).unwrap().0).unwrap();
        let step = t.offsets.iter().map(|&o| t.system().to_complex(o).norm()).fold(0.0, f64::max);
        let hull = HullModel::new(s);
        let poly = hull.hull_polygon(4096).unwrap();
        for k in [4, 8] {
            let line = boundary_polyline(&s, k).unwrap();
            let gap = step * (s.n() as f64).powf(-(k as f64) / 2.0);
            for i in 0..line.len() {
                assert!((line[(i + 1) % line.len()] - line[i]).norm() <= gap + 1e-12);
            }
            // chain points sit just outside the level-k tile approximation
            for q in &line {
                assert!(poly.contains(*q, gap + 1e-9), "{s} level {k}: {q}");
            }
        }
    }
}

#[test]
fn double_refinement_stays_close() {
    for s in negative_systems(6) {
        let model = BoundaryModel::new(&s).unwrap();
        let bound = 2.0 * (s.sqrt_n() + 1.0) / s.n() as f64;
        let c1 = model.chain_at(1).unwrap();
        let c2 = model.refine(&c1).unwrap();
        let p1: Vec<_> = c1.points.iter().map(|&x| s.to_complex(x) / s.z()).collect();
        for &x in &c2.points {
            let q = s.to_complex(x) / (s.z() * s.z());
            let d = p1.iter().map(|p| (p - q).norm()).fold(f64::INFINITY, f64::min);
            assert!(d <= bound, "{s}: {d} > {bound}");
        }
    }
}

#[test]
fn matrix_columns_cover_reachable_types() {
    for s in negative_systems(9) {
        let m = substitution_matrix(&s).unwrap();
        for i in m.reachable_types() {
            assert!(m.rows().iter().map(|r| r[i]).sum::<u64>() >= 1);
            for (j, row) in m.rows().iter().enumerate() {
                if row[i] > 0 {
                    assert!(m.is_reachable(EdgeType::from_index(j)));
                }
            }
        }
    }
}
