//! Undirected simple graphs at desk scale: construction of the standard
//! families, BFS distance matrices, distance-regularity detection, and an
//! exact walk-regularity check.
//!
//! Adjacency is stored densely; the constructors refuse anything beyond
//! [`VERTEX_LIMIT`] vertices. Unreachable distances are `None`, never a
//! sentinel value.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use std::collections::VecDeque;
use thiserror::Error;

use crate::classical::IntersectionArray;

/// Hard cap on constructed graph sizes.
pub const VERTEX_LIMIT: usize = 5000;

/// The built-in graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    /// Binary strings of length `d`, adjacent at Hamming distance 1.
    Hypercube(u32),
    /// Words of length `d` over `q` symbols, adjacent at Hamming distance 1.
    Hamming(u32, u32),
    /// `k`-subsets of an `n`-set, adjacent when the intersection has size `k-1`.
    Johnson(u32, u32),
    Cycle(u32),
    Complete(u32),
    Icosahedron,
}

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("construction would need {requested} vertices, limit is {limit}")]
    SizeLimit { requested: u128, limit: usize },
    #[error("invalid construction parameters: {0}")]
    InvalidParameters(String),
    #[error("graph is disconnected")]
    Disconnected,
}

/// Malformed edge-list input, pointing at the offending 1-based line.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct EdgeListError {
    pub line: usize,
    pub message: String,
}

/// Simple undirected graph with dense adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl Graph {
    fn empty(n: usize) -> Self {
        Self { n, adj: vec![false; n * n] }
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn is_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn degree(&self, u: usize) -> usize {
        (0..self.n).filter(|&v| self.is_edge(u, v)).count()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.is_edge(u, v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| (u + 1..self.n).filter(|&v| self.is_edge(u, v)).count()).sum()
    }

    /// Serializes to the edge-list format accepted by [`parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count());
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.is_edge(u, v) {
                    out.push_str(&format!("{u} {v}\n"));
                }
            }
        }
        out
    }
}

/// Builds one of the standard families, refusing sizes over [`VERTEX_LIMIT`].
pub fn construct(kind: GraphKind) -> Result<Graph, GraphError> {
    match kind {
        GraphKind::Hypercube(d) => hamming_graph(d, 2),
        GraphKind::Hamming(d, q) => hamming_graph(d, q),
        GraphKind::Johnson(n, k) => johnson_graph(n, k),
        GraphKind::Cycle(n) => {
            if n < 3 {
                return Err(GraphError::InvalidParameters(format!("cycle needs >= 3 vertices, got {n}")));
            }
            check_size(u128::from(n))?;
            let n = n as usize;
            let mut g = Graph::empty(n);
            for u in 0..n {
                g.add_edge(u, (u + 1) % n);
            }
            Ok(g)
        }
        GraphKind::Complete(n) => {
            if n < 1 {
                return Err(GraphError::InvalidParameters("complete graph needs >= 1 vertex".into()));
            }
            check_size(u128::from(n))?;
            let n = n as usize;
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v);
                }
            }
            Ok(g)
        }
        GraphKind::Icosahedron => Ok(icosahedron()),
    }
}

fn check_size(requested: u128) -> Result<(), GraphError> {
    if requested > VERTEX_LIMIT as u128 {
        return Err(GraphError::SizeLimit { requested, limit: VERTEX_LIMIT });
    }
    Ok(())
}

fn hamming_graph(d: u32, q: u32) -> Result<Graph, GraphError> {
    if d < 1 || q < 2 {
        return Err(GraphError::InvalidParameters(format!("hamming needs d >= 1, q >= 2, got ({d}, {q})")));
    }
    let size = (u128::from(q)).checked_pow(d).ok_or(GraphError::SizeLimit {
        requested: u128::MAX,
        limit: VERTEX_LIMIT,
    })?;
    check_size(size)?;
    let n = size as usize;
    let q = q as usize;
    let mut g = Graph::empty(n);
    // vertices are base-q digit strings; neighbors differ in one digit
    for u in 0..n {
        let mut place = 1usize;
        for _ in 0..d {
            let digit = (u / place) % q;
            for other in 0..q {
                if other != digit {
                    let v = u - digit * place + other * place;
                    if v > u {
                        g.add_edge(u, v);
                    }
                }
            }
            place *= q;
        }
    }
    Ok(g)
}

fn johnson_graph(n: u32, k: u32) -> Result<Graph, GraphError> {
    if k > n {
        return Err(GraphError::InvalidParameters(format!("johnson needs k <= n, got ({n}, {k})")));
    }
    let size = binomial(u64::from(n), u64::from(k));
    check_size(size)?;
    // enumerate k-subsets as sorted index vectors; adjacency = intersection k-1
    let subsets = k_subsets(n as usize, k as usize);
    let count = subsets.len();
    let mut g = Graph::empty(count);
    for i in 0..count {
        for j in i + 1..count {
            if intersection_size(&subsets[i], &subsets[j]) + 1 == k as usize {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > (VERTEX_LIMIT as u128) * 1024 {
            return acc; // already far over the limit; avoid overflow
        }
    }
    acc
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in start..n {
            current.push(v);
            rec(v + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// The icosahedron: a vertex, an upper and lower 5-ring, and an antipode.
fn icosahedron() -> Graph {
    let mut g = Graph::empty(12);
    for k in 0..5 {
        g.add_edge(0, 1 + k);
        g.add_edge(11, 6 + k);
        g.add_edge(1 + k, 1 + (k + 1) % 5);
        g.add_edge(6 + k, 6 + (k + 1) % 5);
        // upper k sits over the lower edge (k, k+1)
        g.add_edge(1 + k, 6 + k);
        g.add_edge(1 + k, 6 + (k + 1) % 5);
    }
    g
}

/// All-pairs shortest-path distances; `None` marks unreachable pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.dist[u * self.n + v]
    }

    pub fn is_connected(&self) -> bool {
        self.dist.iter().all(|d| d.is_some())
    }

    /// Largest finite distance; `None` when the graph is disconnected.
    pub fn diameter(&self) -> Option<u32> {
        let mut best = 0;
        for d in &self.dist {
            best = best.max((*d)?);
        }
        Some(best)
    }
}

/// BFS from every vertex.
pub fn distances(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut dist = vec![None; n * n];
    let mut queue = VecDeque::new();
    for source in 0..n {
        let row = &mut dist[source * n..(source + 1) * n];
        row[source] = Some(0);
        queue.clear();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = row[u].expect("queued vertices have distances");
            for v in g.neighbors(u) {
                if row[v].is_none() {
                    row[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
    }
    DistanceMatrix { n, dist }
}

/// Decides distance-regularity. Candidate intersection numbers are read off
/// one base vertex and then verified against every ordered pair; the
/// detected array is returned exactly when the verification closes.
///
/// Returns `Ok(None)` for connected graphs that are not distance-regular and
/// an error for disconnected input.
pub fn check_distance_regular(g: &Graph) -> Result<Option<IntersectionArray>, GraphError> {
    let n = g.vertex_count();
    let dm = distances(g);
    if !dm.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let degree = g.degree(0);
    if (1..n).any(|u| g.degree(u) != degree) {
        return Ok(None);
    }
    let diameter = dm.diameter().expect("connected graph has a diameter") as usize;

    // candidates (c_i, a_i, b_i) from base vertex 0
    let mut candidates: Vec<Option<(usize, usize, usize)>> = vec![None; diameter + 1];
    for v in 0..n {
        let i = dm.get(0, v).expect("connected") as usize;
        if candidates[i].is_none() {
            candidates[i] = Some(profile(g, &dm, 0, v));
        }
    }
    // every distance 0..=diameter must occur from the base vertex
    let Some(candidates): Option<Vec<(usize, usize, usize)>> = candidates.into_iter().collect() else {
        return Ok(None);
    };

    for x in 0..n {
        for y in 0..n {
            let i = dm.get(x, y).expect("connected") as usize;
            if profile(g, &dm, x, y) != candidates[i] {
                return Ok(None);
            }
        }
    }

    let to_rat = |v: usize| BigRational::from_integer(v.into());
    let b_list: Vec<BigRational> = (0..diameter).map(|i| to_rat(candidates[i].2)).collect();
    let c_list: Vec<BigRational> = (1..=diameter).map(|i| to_rat(candidates[i].0)).collect();
    let array = IntersectionArray::from_rows(b_list, c_list);
    debug_assert_eq!(array.vertex_count, to_rat(n));
    Ok(Some(array))
}

/// Counts `y`'s neighbors at distance `i-1`, `i`, `i+1` from `x`,
/// where `i = dist(x, y)`.
fn profile(g: &Graph, dm: &DistanceMatrix, x: usize, y: usize) -> (usize, usize, usize) {
    let i = dm.get(x, y).expect("connected");
    let (mut c, mut a, mut b) = (0, 0, 0);
    for w in g.neighbors(y) {
        let dw = dm.get(x, w).expect("connected");
        if dw + 1 == i {
            c += 1;
        } else if dw == i {
            a += 1;
        } else {
            debug_assert_eq!(dw, i + 1);
            b += 1;
        }
    }
    (c, a, b)
}

/// Exact walk-regularity check: the diagonal of `A^l` must be constant for
/// every `2 <= l <= max_len`. Walk counts grow exponentially, so the matrix
/// powers use arbitrary-precision integers.
pub fn check_walk_regular(g: &Graph, max_len: u32) -> bool {
    assert!(max_len >= 2, "walk-regularity starts at length 2");
    let n = g.vertex_count();
    let adjacency: Vec<Vec<usize>> = (0..n).map(|u| g.neighbors(u).collect()).collect();
    let mut power: Vec<BigUint> = vec![BigUint::zero(); n * n];
    for u in 0..n {
        for &v in &adjacency[u] {
            power[u * n + v] = BigUint::one();
        }
    }
    for _ in 2..=max_len {
        // next = power * A, summing power over in-neighbors
        let mut next = vec![BigUint::zero(); n * n];
        for u in 0..n {
            for v in 0..n {
                let mut acc = BigUint::zero();
                for &w in &adjacency[v] {
                    acc += &power[u * n + w];
                }
                next[u * n + v] = acc;
            }
        }
        power = next;
        let first = &power[0];
        if (1..n).any(|u| &power[u * n + u] != first) {
            return false;
        }
    }
    true
}

/// Parses the plain-text edge list format: first line `n m`, then `m` lines
/// `u v` with 0-based ids. Loops, duplicates, out-of-range ids, and count
/// mismatches are all rejected with the offending line number.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let fail = |line: usize, message: String| Err(EdgeListError { line, message });
    let mut lines = text.lines().enumerate();

    let (header_idx, header) = match lines.next() {
        Some((idx, l)) if l.trim().is_empty() => {
            return fail(idx + 1, "blank line".to_string());
        }
        Some((idx, l)) => (idx, l),
        None => return fail(1, "missing header line \"n m\"".to_string()),
    };
    let mut parts = header.split_whitespace();
    let (n, m) = match (parts.next(), parts.next(), parts.next()) {
        (Some(n), Some(m), None) => {
            let n: usize = match n.parse() {
                Ok(v) => v,
                Err(_) => return fail(header_idx + 1, format!("bad vertex count {n:?}")),
            };
            let m: usize = match m.parse() {
                Ok(v) => v,
                Err(_) => return fail(header_idx + 1, format!("bad edge count {m:?}")),
            };
            (n, m)
        }
        _ => return fail(header_idx + 1, "header must be \"n m\"".to_string()),
    };
    if n == 0 {
        return fail(header_idx + 1, "vertex count must be positive".to_string());
    }
    if n > VERTEX_LIMIT {
        return fail(header_idx + 1, format!("vertex count {n} exceeds limit {VERTEX_LIMIT}"));
    }

    let mut g = Graph::empty(n);
    let mut seen = 0usize;
    let mut last_line = header_idx + 1;
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            return fail(line_no, "blank line".to_string());
        }
        last_line = line_no;
        if seen == m {
            return fail(line_no, format!("more than {m} edges"));
        }
        let mut parts = line.split_whitespace();
        let (u, v) = match (parts.next(), parts.next(), parts.next()) {
            (Some(u), Some(v), None) => {
                let u: usize = match u.parse() {
                    Ok(x) => x,
                    Err(_) => return fail(line_no, format!("bad vertex id {u:?}")),
                };
                let v: usize = match v.parse() {
                    Ok(x) => x,
                    Err(_) => return fail(line_no, format!("bad vertex id {v:?}")),
                };
                (u, v)
            }
            _ => return fail(line_no, "expected \"u v\"".to_string()),
        };
        if u >= n || v >= n {
            return fail(line_no, format!("vertex id out of range 0..{n}"));
        }
        if u == v {
            return fail(line_no, format!("loop at vertex {u}"));
        }
        if g.is_edge(u, v) {
            return fail(line_no, format!("duplicate edge {u} {v}"));
        }
        g.add_edge(u, v);
        seen += 1;
    }
    if seen != m {
        return fail(last_line, format!("expected {m} edges, found {seen}"));
    }
    Ok(g)
}

/// Random connected graph on `n` vertices: a random attachment tree plus
/// independent extra edges. Deterministic for a fixed RNG.
pub fn random_connected<R: Rng>(n: usize, extra_edge_prob: f64, rng: &mut R) -> Graph {
    assert!(n >= 1);
    let mut g = Graph::empty(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v);
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.is_edge(u, v) && rng.gen_bool(extra_edge_prob) {
                g.add_edge(u, v);
            }
        }
    }
    g
}
