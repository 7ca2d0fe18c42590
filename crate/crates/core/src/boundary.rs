//! Chain approximations of the tile boundary and its Hausdorff dimension.
//!
//! Lattice points are tiles. A closed chain walks through the *edge* of a
//! set (non-members touching it) with the set on its left. Magnifying the
//! set by `M(A) = zA + {0..n-1}` turns each chain point into a short walk
//! inside its magnified cell, and that walk depends only on the directions
//! to the previous and next chain points. Counting how each of the 36
//! direction pairs expands gives an integer substitution matrix whose
//! Perron root `lambda` yields the boundary dimension `log(lambda) / log(sqrt n)`.
//!
//! Neighbour directions `0..6` are ordered clockwise. Everything here
//! requires `D < 0`; [`canonicalize_sign`] maps `D > 0` onto that case.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hull::{hull_center, HullModel};
use crate::integer::reduce;
use crate::system::{LatticePoint, System};

pub const EDGE_TYPES: usize = 36;
pub const DEFAULT_EIGEN_TOL: f64 = 1e-12;
const EIGEN_MAX_ITER: usize = 1_000_000;

/// `r_a(r)`: the neighbour of `C_r` that lies in `M(N_r)`.
pub const RA: [usize; 6] = [4, 5, 0, 1, 2, 3];
/// `r_b(r)`: the neighbour of `C_r` that lies in `M(N_{r+1})`.
pub const RB: [usize; 6] = [5, 0, 1, 2, 3, 4];

/// Neighbour offsets, meeting places and meeting points of the hexagonal
/// tiling for a system with `D < 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct NeighborTable {
    system: System,
    /// `N_r` as lattice offsets.
    pub offsets: [LatticePoint; 6],
    /// `C_r`: index of the sub-tile of `M(0)` touching `M(N_r)` and `M(N_{r+1})`.
    pub meeting: [i64; 6],
    /// `P_r`: the point where the tiles `0`, `N_r`, `N_{r+1}` meet.
    pub points: [Complex64; 6],
}

impl NeighborTable {
    pub fn new(s: &System) -> Result<Self> {
        let (n, d) = (s.n(), s.d());
        if d >= 0 {
            return Err(Error::Domain(format!(
                "neighbor table needs D < 0, got D = {d}; canonicalize the sign first"
            )));
        }
        let offsets = [
            LatticePoint::new(1, 0),
            LatticePoint::new(d + 1, -1),
            LatticePoint::new(d, -1),
            LatticePoint::new(-1, 0),
            LatticePoint::new(-d - 1, 1),
            LatticePoint::new(-d, 1),
        ];
        let meeting = [n + d, n - 1, n - 1, -d - 1, 0, 0];
        let zm1 = s.z() - 1.0;
        let points = std::array::from_fn(|r| {
            (meeting[r] as f64 + s.to_complex(offsets[RA[r]])) / zm1
        });
        let table = NeighborTable { system: *s, offsets, meeting, points };
        table.verify()?;
        Ok(table)
    }

    pub fn verify(&self) -> Result<()> {
        let s = &self.system;
        let n = s.n();
        let z = s.z();
        let fail = |what: String| Err(Error::Domain(format!("neighbor table {s}: {what}")));
        for r in 0..3 {
            if self.offsets[r + 3] != self.offsets[r].checked_neg()? {
                return fail(format!("N_{} != -N_{r}", r + 3));
            }
        }
        for r in 0..6 {
            let c = self.meeting[r];
            if !(0..n).contains(&c) {
                return fail(format!("C_{r} = {c} outside 0..{n}"));
            }
            let tile = LatticePoint::new(c, 0);
            // C_r touches M(N_r) through direction r_a and M(N_{r+1}) through r_b
            let (ya, _) = reduce(s, tile.checked_add(self.offsets[RA[r]])?)?;
            let (yb, _) = reduce(s, tile.checked_add(self.offsets[RB[r]])?)?;
            if ya != self.offsets[r] || yb != self.offsets[(r + 1) % 6] {
                return fail(format!("meeting place C_{r} does not touch M(N_{r}) and M(N_{})", (r + 1) % 6));
            }
            let p = self.points[r];
            let rhs = p + c as f64 + s.to_complex(self.offsets[RA[r]]);
            if (z * p - rhs).norm() > 1e-12 {
                return fail(format!("z P_{r} != P_{r} + C_{r} + N_ra"));
            }
        }
        let sum = (n - 1) as f64 / (z - 1.0);
        for r in 0..3 {
            if (self.points[r] + self.points[r + 3] - sum).norm() > 1e-12 {
                return fail(format!("P_{r} + P_{} != (n-1)/(z-1)", r + 3));
            }
        }
        Ok(())
    }

    pub fn system(&self) -> &System {
        &self.system
    }

    /// Index `r` with `diff = N_r`.
    pub fn direction(&self, diff: LatticePoint) -> Option<usize> {
        self.offsets.iter().position(|&o| o == diff)
    }

    pub fn are_neighbors(&self, x: LatticePoint, y: LatticePoint) -> bool {
        y.checked_sub(x).ok().and_then(|d| self.direction(d)).is_some()
    }

    pub fn step(&self, x: LatticePoint, r: usize) -> LatticePoint {
        LatticePoint::new(x.a + self.offsets[r].a, x.b + self.offsets[r].b)
    }
}

pub fn neighbor_table(s: &System) -> Result<NeighborTable> {
    NeighborTable::new(s)
}

/// Affine map taking the tile of the original system onto the tile of the
/// canonical one: `x -> conj(x) + translation` when `conjugate`, else
/// `x -> x + translation`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignTransform {
    pub conjugate: bool,
    pub translation: Complex64,
}

impl SignTransform {
    pub const IDENTITY: SignTransform =
        SignTransform { conjugate: false, translation: Complex64 { re: 0.0, im: 0.0 } };

    pub fn apply(&self, x: Complex64) -> Complex64 {
        let x = if self.conjugate { x.conj() } else { x };
        x + self.translation
    }

    pub fn invert(&self, y: Complex64) -> Complex64 {
        let x = y - self.translation;
        if self.conjugate {
            x.conj()
        } else {
            x
        }
    }
}

impl fmt::Display for SignTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.conjugate && self.translation == Complex64::new(0.0, 0.0) {
            return f.write_str("identity");
        }
        let t = self.translation;
        write!(f, "x -> conj(x) + ({:.6} {:+.6}i)", t.re, t.im)
    }
}

/// Maps `(n, D)` with `D > 0` to `(n, -D)`. The base of `(n, -D)` is
/// `-conj(z)`, so the two tiles differ by a conjugation and a shift of
/// `-conj((n-1) z / (z^2 - 1))`.
pub fn canonicalize_sign(s: &System) -> Result<(System, SignTransform)> {
    match s.d() {
        0 => Err(Error::Domain(format!(
            "{s} is the rectangular case D = 0; it has no hexagonal boundary chain"
        ))),
        d if d < 0 => Ok((*s, SignTransform::IDENTITY)),
        d => {
            let z = s.z();
            let t = (s.n() - 1) as f64 * z / (z * z - 1.0);
            Ok((System::new(s.n(), -d)?, SignTransform { conjugate: true, translation: -t.conj() }))
        }
    }
}

/// Local configuration at a chain point: the previous point is in
/// direction `incoming`, the next in direction `outgoing`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeType {
    pub incoming: usize,
    pub outgoing: usize,
}

impl EdgeType {
    pub fn new(incoming: usize, outgoing: usize) -> Self {
        debug_assert!(incoming < 6 && outgoing < 6);
        EdgeType { incoming, outgoing }
    }

    pub fn index(self) -> usize {
        6 * self.incoming + self.outgoing
    }

    pub fn from_index(i: usize) -> Self {
        EdgeType::new(i / 6, i % 6)
    }

    /// Directions strictly between `incoming` and `outgoing`, clockwise.
    /// These are the neighbours required to lie in the set; when both
    /// directions coincide the chain turns back and all five others do.
    pub fn left_directions(self) -> impl Iterator<Item = usize> {
        let (a, b) = (self.incoming, self.outgoing);
        let span = (b + 6 - a - 1) % 6;
        let span = if a == b { 5 } else { span };
        (1..=span).map(move |k| (a + k) % 6)
    }
}

impl fmt::Display for EdgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.incoming, self.outgoing)
    }
}

/// Sequence of lattice points where consecutive points are neighbours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub points: Vec<LatticePoint>,
    pub level: u32,
    pub closed: bool,
}

impl Chain {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Checks neighbour steps (including the closing one).
    pub fn validate(&self, t: &NeighborTable) -> Result<()> {
        let k = self.points.len();
        let pairs = if self.closed { k } else { k.saturating_sub(1) };
        for i in 0..pairs {
            let (x, y) = (self.points[i], self.points[(i + 1) % k]);
            if !t.are_neighbors(x, y) {
                return Err(Error::Chain(format!("{x} -> {y} at position {i} is not a neighbour step")));
            }
        }
        Ok(())
    }

    /// Edge type at every point of a closed chain.
    pub fn edge_types(&self, t: &NeighborTable) -> Result<Vec<EdgeType>> {
        if !self.closed {
            return Err(Error::Chain("edge types need a closed chain".into()));
        }
        let k = self.points.len();
        (0..k)
            .map(|i| {
                let x = self.points[i];
                let prev = self.points[(i + k - 1) % k];
                let next = self.points[(i + 1) % k];
                let dir = |y: LatticePoint| {
                    y.checked_sub(x)
                        .ok()
                        .and_then(|d| t.direction(d))
                        .ok_or_else(|| Error::Chain(format!("{x} and {y} are not neighbours")))
                };
                Ok(EdgeType::new(dir(prev)?, dir(next)?))
            })
            .collect()
    }

    /// Number of points of each edge type, indexed by [`EdgeType::index`].
    pub fn census(&self, t: &NeighborTable) -> Result<[u64; EDGE_TYPES]> {
        let mut counts = [0u64; EDGE_TYPES];
        for e in self.edge_types(t)? {
            counts[e.index()] += 1;
        }
        Ok(counts)
    }

    /// Equal up to cyclic rotation (for closed chains).
    pub fn same_cycle(&self, other: &Chain) -> bool {
        let (a, b) = (&self.points, &other.points);
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        (0..b.len()).filter(|&s| b[s] == a[0]).any(|s| (0..a.len()).all(|i| a[i] == b[(s + i) % b.len()]))
    }
}

/// The set lies on the left of the closed chain: at every point, the
/// neighbours strictly between the incoming and outgoing directions
/// (clockwise) belong to the set.
pub fn lies_on_left(t: &NeighborTable, in_set: impl Fn(LatticePoint) -> bool, chain: &Chain) -> Result<bool> {
    let types = chain.edge_types(t)?;
    Ok(chain
        .points
        .iter()
        .zip(types)
        .all(|(&x, e)| e.left_directions().all(|r| in_set(t.step(x, r)))))
}

/// The six neighbours of `0`, counterclockwise, so that `{0}` lies on the left.
pub fn initial_chain(s: &System) -> Result<Chain> {
    let t = NeighborTable::new(s)?;
    initial_chain_for(&t)
}

fn initial_chain_for(t: &NeighborTable) -> Result<Chain> {
    let points = [0, 5, 4, 3, 2, 1].iter().map(|&r| t.offsets[r]).collect();
    let chain = Chain { points, level: 0, closed: true };
    chain.validate(t)?;
    if !lies_on_left(t, |p| p == LatticePoint::ZERO, &chain)? {
        return Err(Error::Chain("initial chain is not oriented around 0".into()));
    }
    Ok(chain)
}

/// Walk through the magnified cell `M(0) = {0..n-1}` for one edge type:
/// sub-tile indices together with their own edge types.
pub type CellWalk = Vec<(i64, EdgeType)>;

/// Everything needed to refine chains of one system.
#[derive(Debug, Clone)]
pub struct BoundaryModel {
    table: NeighborTable,
    rules: Vec<std::result::Result<CellWalk, String>>,
}

impl BoundaryModel {
    pub fn new(s: &System) -> Result<Self> {
        let table = NeighborTable::new(s)?;
        let rules = (0..EDGE_TYPES).map(|i| cell_walk(&table, EdgeType::from_index(i))).collect();
        Ok(BoundaryModel { table, rules })
    }

    pub fn table(&self) -> &NeighborTable {
        &self.table
    }

    pub fn system(&self) -> &System {
        &self.table.system
    }

    /// Expansion of one edge type under magnification.
    pub fn rule(&self, e: EdgeType) -> Result<&CellWalk> {
        self.rules[e.index()]
            .as_ref()
            .map_err(|why| Error::Chain(format!("edge type {e} has no cell walk: {why}")))
    }

    pub fn initial_chain(&self) -> Result<Chain> {
        initial_chain_for(&self.table)
    }

    pub fn refine(&self, c: &Chain) -> Result<Chain> {
        let s = self.system();
        let types = c.edge_types(&self.table)?;
        let mut points = Vec::new();
        for (&x, e) in c.points.iter().zip(types) {
            let base = s.mul_z(x)?;
            for &(tile, _) in self.rule(e)? {
                points.push(base.checked_add(LatticePoint::new(tile, 0))?);
            }
        }
        let out = Chain { points, level: c.level + 1, closed: true };
        out.validate(&self.table)?;
        Ok(out)
    }

    pub fn chain_at(&self, k: u32) -> Result<Chain> {
        let mut c = self.initial_chain()?;
        for _ in 0..k {
            c = self.refine(&c)?;
        }
        Ok(c)
    }

    pub fn substitution_matrix(&self) -> Result<SubstitutionMatrix> {
        let mut counts = vec![[0u64; EDGE_TYPES]; EDGE_TYPES];
        let seeds = self.initial_chain()?.census(&self.table)?;
        for (i, rule) in self.rules.iter().enumerate() {
            if let Ok(walk) = rule {
                for &(_, e) in walk {
                    counts[e.index()][i] += 1;
                }
            }
        }
        let m = SubstitutionMatrix::new(counts, &seeds);
        for i in m.reachable_types() {
            self.rule(EdgeType::from_index(i))?;
        }
        Ok(m)
    }
}

/// Left-hand wall following inside `M(0)` for edge type `e`.
///
/// The set on the left is `M(N_r)` for the left directions of `e`. The walk
/// enters at `C_a` coming from `M(N_a)` and must leave at `C_{b-1}` into
/// `M(N_b)`, at the tile where the next cell's walk begins.
fn cell_walk(t: &NeighborTable, e: EdgeType) -> std::result::Result<CellWalk, String> {
    let s = &t.system;
    let n = s.n();
    let (a, b) = (e.incoming, e.outgoing);
    let left: Vec<LatticePoint> = e.left_directions().map(|r| t.offsets[r]).collect();
    let parent = |p: LatticePoint| reduce(s, p).map(|(y, _)| y).map_err(|e| e.to_string());
    let in_cell = |p: LatticePoint| p.b == 0 && (0..n).contains(&p.a);

    let mut tile = LatticePoint::new(t.meeting[a], 0);
    let mut back = RA[a];
    let mut walk = Vec::new();
    for _ in 0..(4 * n as usize + 8) {
        let mut out = None;
        for k in 1..=6 {
            let r = (back + k) % 6;
            let q = t.step(tile, r);
            if !left.contains(&parent(q)?) {
                out = Some(r);
                break;
            }
        }
        let out = out.ok_or("no free neighbour")?;
        walk.push((tile.a, EdgeType::new(back, out)));
        let next = t.step(tile, out);
        if in_cell(next) {
            back = (out + 3) % 6;
            tile = next;
            continue;
        }
        let exit_tile = t.meeting[(b + 5) % 6];
        let entry_next = t.meeting[(b + 3) % 6];
        let zn = s.mul_z(t.offsets[b]).map_err(|e| e.to_string())?;
        if tile.a != exit_tile
            || next != LatticePoint::new(zn.a + entry_next, zn.b)
            || (out + 3) % 6 != RA[(b + 3) % 6]
        {
            return Err(format!("walk left M(0) at tile {} towards {next}", tile.a));
        }
        return Ok(walk);
    }
    Err("walk does not leave M(0)".into())
}

pub fn refine_chain(s: &System, c: &Chain) -> Result<Chain> {
    BoundaryModel::new(s)?.refine(c)
}

/// `S_k = sum_{i<k} z^i {0..n-1}` as an explicit set.
pub fn magnified_origin(s: &System, k: u32) -> Result<HashSet<LatticePoint>> {
    let mut set: HashSet<LatticePoint> = [LatticePoint::ZERO].into();
    for _ in 0..k {
        let mut next = HashSet::with_capacity(set.len() * s.n() as usize);
        for &x in &set {
            let base = s.mul_z(x)?;
            for d in 0..s.n() {
                next.insert(base.checked_add(LatticePoint::new(d, 0))?);
            }
        }
        set = next;
    }
    Ok(set)
}

/// Brute force: builds `S_k` and follows its outer edge with the left
/// hand on the set.
pub fn trace_boundary_oracle(s: &System, k: u32) -> Result<Chain> {
    let t = NeighborTable::new(s)?;
    let set = magnified_origin(s, k)?;
    check_connected(&t, &set)?;

    // the point right of the rightmost member is on the outer edge
    let rightmost = set
        .iter()
        .copied()
        .max_by(|&p, &q| s.to_complex(p).re.total_cmp(&s.to_complex(q).re).then(p.cmp(&q)))
        .expect("S_k is never empty");
    let start = t.step(rightmost, 0);
    let next_dir = |x: LatticePoint, back: usize| {
        (1..=6).map(|k| (back + k) % 6).find(|&r| !set.contains(&t.step(x, r))).expect("edge point has a free neighbour")
    };
    let first_out = next_dir(start, 3);
    let mut points = vec![start];
    let mut x = t.step(start, first_out);
    let mut back = (first_out + 3) % 6;
    let limit = 12 * set.len() + 12;
    loop {
        let out = next_dir(x, back);
        if x == start && out == first_out {
            break;
        }
        points.push(x);
        if points.len() > limit {
            return Err(Error::Chain("wall following did not close".into()));
        }
        x = t.step(x, out);
        back = (out + 3) % 6;
    }
    Ok(Chain { points, level: k, closed: true })
}

fn check_connected(t: &NeighborTable, set: &HashSet<LatticePoint>) -> Result<()> {
    let Some(&first) = set.iter().next() else { return Ok(()) };
    let mut seen: HashSet<LatticePoint> = [first].into();
    let mut queue = VecDeque::from([first]);
    while let Some(x) = queue.pop_front() {
        for r in 0..6 {
            let y = t.step(x, r);
            if set.contains(&y) && seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    if seen.len() != set.len() {
        return Err(Error::Disconnected { points: set.len() });
    }
    Ok(())
}

/// 36x36 edge substitution counts: `counts[new][old]` is the number of
/// points of type `new` produced by magnifying one point of type `old`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubstitutionMatrix {
    counts: Vec<[u64; EDGE_TYPES]>,
    reachable: [bool; EDGE_TYPES],
}

impl SubstitutionMatrix {
    /// `reachable` is the closure of the nonzero entries of `seeds` under
    /// the matrix.
    pub fn new(counts: Vec<[u64; EDGE_TYPES]>, seeds: &[u64; EDGE_TYPES]) -> Self {
        assert_eq!(counts.len(), EDGE_TYPES);
        let mut reachable = [false; EDGE_TYPES];
        let mut stack: Vec<usize> = (0..EDGE_TYPES).filter(|&i| seeds[i] > 0).collect();
        for &i in &stack {
            reachable[i] = true;
        }
        while let Some(j) = stack.pop() {
            for i in 0..EDGE_TYPES {
                if counts[i][j] > 0 && !reachable[i] {
                    reachable[i] = true;
                    stack.push(i);
                }
            }
        }
        SubstitutionMatrix { counts, reachable }
    }

    pub fn identity() -> Self {
        let counts = (0..EDGE_TYPES)
            .map(|i| std::array::from_fn(|j| u64::from(i == j)))
            .collect();
        Self::new(counts, &[1; EDGE_TYPES])
    }

    pub fn get(&self, new: EdgeType, old: EdgeType) -> u64 {
        self.counts[new.index()][old.index()]
    }

    pub fn rows(&self) -> &[[u64; EDGE_TYPES]] {
        &self.counts
    }

    pub fn reachable_types(&self) -> impl Iterator<Item = usize> + '_ {
        (0..EDGE_TYPES).filter(|&i| self.reachable[i])
    }

    pub fn is_reachable(&self, e: EdgeType) -> bool {
        self.reachable[e.index()]
    }

    pub fn apply(&self, census: &[u64; EDGE_TYPES]) -> [u64; EDGE_TYPES] {
        std::array::from_fn(|i| (0..EDGE_TYPES).map(|j| self.counts[i][j] * census[j]).sum())
    }
}

/// Perron root of the matrix restricted to its reachable types, by power
/// iteration on `M + I` (the shift keeps imprimitive matrices from
/// oscillating) until successive estimates differ by less than `tol`.
pub fn dominant_eigenvalue(m: &SubstitutionMatrix, tol: f64) -> Result<f64> {
    let idx: Vec<usize> = m.reachable_types().collect();
    if idx.is_empty() {
        return Err(Error::Domain("matrix has no reachable edge types".into()));
    }
    let k = idx.len();
    let a: Vec<Vec<f64>> = idx
        .iter()
        .map(|&i| idx.iter().map(|&j| m.counts[i][j] as f64 + f64::from(u8::from(i == j))).collect())
        .collect();
    let mut v = vec![1.0 / k as f64; k];
    let mut w = vec![0.0; k];
    let mut last = f64::NAN;
    for _ in 0..EIGEN_MAX_ITER {
        for (wi, row) in w.iter_mut().zip(&a) {
            *wi = row.iter().zip(&v).map(|(x, y)| x * y).sum();
        }
        let norm: f64 = w.iter().sum();
        let lambda = norm - 1.0;
        for (vi, wi) in v.iter_mut().zip(&w) {
            *vi = wi / norm;
        }
        if (lambda - last).abs() < tol {
            return Ok(lambda.max(1.0));
        }
        last = lambda;
    }
    Err(Error::NonConvergence(EIGEN_MAX_ITER))
}

pub fn substitution_matrix(s: &System) -> Result<SubstitutionMatrix> {
    BoundaryModel::new(s)?.substitution_matrix()
}

/// Hausdorff dimension of the tile boundary; exactly 1 for `D = 0`.
pub fn boundary_dimension(s: &System) -> Result<f64> {
    boundary_dimension_with_tol(s, DEFAULT_EIGEN_TOL)
}

pub fn boundary_dimension_with_tol(s: &System, tol: f64) -> Result<f64> {
    if s.d() == 0 {
        return Ok(1.0);
    }
    let (canon, _) = canonicalize_sign(s)?;
    let lambda = dominant_eigenvalue(&substitution_matrix(&canon)?, tol)?;
    Ok(lambda.ln() / canon.sqrt_n().ln())
}

/// Points of the `k`-times refined chain divided by `z^k`: a closed
/// polyline around the tile. For `D > 0` the canonical polyline is mapped
/// back; for `D = 0` the tile is its hull rectangle.
pub fn boundary_polyline(s: &System, k: u32) -> Result<Vec<Complex64>> {
    if s.d() == 0 {
        let h = HullModel::new(*s);
        let c = hull_center(s);
        let (hx, hy) = (h.width(0.0), h.width(std::f64::consts::FRAC_PI_2));
        return Ok(vec![
            c + Complex64::new(hx, -hy),
            c + Complex64::new(hx, hy),
            c + Complex64::new(-hx, hy),
            c + Complex64::new(-hx, -hy),
        ]);
    }
    let (canon, transform) = canonicalize_sign(s)?;
    let chain = BoundaryModel::new(&canon)?.chain_at(k)?;
    let scale = canon.z().powi(-(k as i32));
    Ok(chain
        .points
        .iter()
        .map(|&p| transform.invert(canon.to_complex(p) * scale))
        .collect())
}

/// For each chain point, the level-0 neighbour it descends from.
pub fn ancestor_directions(t: &NeighborTable, chain: &Chain) -> Result<Vec<usize>> {
    let s = &t.system;
    let mut memo: HashMap<LatticePoint, usize> = HashMap::new();
    chain
        .points
        .iter()
        .map(|&p| {
            if let Some(&r) = memo.get(&p) {
                return Ok(r);
            }
            let mut x = p;
            for _ in 0..chain.level {
                x = reduce(s, x)?.0;
            }
            let r = t
                .direction(x)
                .ok_or_else(|| Error::Chain(format!("{p} does not descend from a neighbour of 0")))?;
            memo.insert(p, r);
            Ok(r)
        })
        .collect()
}
