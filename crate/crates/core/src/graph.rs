//! Exact finite-graph machinery: graph6 I/O, girth and connectivity,
//! integer characteristic polynomials, quotient matrices, and distance
//! partitions.
//!
//! Graphs are simple and undirected, held as adjacency bit rows. Every
//! spectral query goes through the exact characteristic polynomial;
//! eigenvalues are counted by Sturm chains and materialized as scalars only
//! on demand, so floating point never decides anything.

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    isolate_real_roots, largest_real_root, rat_i, rat_pq, real_root_in, Int, IntPoly, Rat, Scalar,
};
use crate::matrix;

/// Hard cap on graph order; bounds adjacency storage and keeps hostile
/// graph6 headers from allocating.
pub const MAX_ORDER: usize = 4096;

/// Order cap for characteristic polynomials. The algorithm is quartic in n
/// with big-integer coefficients; this keeps the heaviest supported graphs
/// (incidence graphs near order 200) in the seconds range.
pub const CHAR_POLY_CAP: usize = 256;

/// Simple undirected graph on vertices 0..n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    rows: Vec<Vec<u64>>,
}

struct SetBits {
    word: u64,
    base: usize,
}

impl Iterator for SetBits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let b = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(self.base + b)
    }
}

impl Graph {
    /// Edgeless graph on n vertices, 1 ≤ n ≤ MAX_ORDER.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::Domain("a graph needs at least one vertex".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::OrderCap(n, MAX_ORDER));
        }
        let words = n.div_ceil(64);
        Ok(Graph {
            n,
            rows: vec![vec![0; words]; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::Domain(format!(
                "vertex {v} out of range for order {}",
                self.n
            )));
        }
        Ok(())
    }

    /// Inserts the edge {u, v}; re-inserting is a no-op, loops are refused.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Domain(format!("loop at vertex {u}")));
        }
        self.rows[u][v / 64] |= 1 << (v % 64);
        self.rows[v][u / 64] |= 1 << (u % 64);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u][v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].iter().enumerate().flat_map(|(i, &word)| SetBits {
            word,
            base: i * 64,
        })
    }

    /// Edges as pairs (u, v) with u < v, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// The common degree, if every vertex has one.
    pub fn regularity(&self) -> Option<usize> {
        let k = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == k).then_some(k)
    }
}

const G6_LOW: u8 = 63;
const G6_HIGH: u8 = 126;

fn g6_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

impl Graph {
    /// Decodes graph6: an order header (one byte for n ≤ 62, '~' plus an
    /// 18-bit big-endian value otherwise), then the upper triangle packed
    /// column by column, six bits per printable byte, high bit first.
    /// Trailing whitespace is tolerated; anything else is an error at a
    /// byte offset.
    pub fn from_graph6(text: &str) -> Result<Graph> {
        let bytes = text.trim_end().as_bytes();
        if bytes.is_empty() {
            return Err(g6_err(0, "empty input"));
        }
        for (i, &b) in bytes.iter().enumerate() {
            if !(G6_LOW..=G6_HIGH).contains(&b) {
                return Err(g6_err(
                    i,
                    format!("byte {b:#04x} outside the graph6 printable range"),
                ));
            }
        }
        let (n, data_at) = if bytes[0] == b'~' {
            if bytes.len() > 1 && bytes[1] == b'~' {
                return Err(g6_err(1, "the 8-byte order form is not supported"));
            }
            if bytes.len() < 4 {
                return Err(g6_err(bytes.len(), "truncated order header"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - G6_LOW) as usize);
            (n, 4)
        } else {
            ((bytes[0] - G6_LOW) as usize, 1)
        };
        if n == 0 {
            return Err(g6_err(0, "graph must have at least one vertex"));
        }
        if n > MAX_ORDER {
            return Err(Error::OrderCap(n, MAX_ORDER));
        }
        let nbits = n * (n - 1) / 2;
        let nbytes = nbits.div_ceil(6);
        if bytes.len() < data_at + nbytes {
            return Err(g6_err(
                bytes.len(),
                format!("truncated: {nbytes} adjacency bytes expected"),
            ));
        }
        if bytes.len() > data_at + nbytes {
            return Err(g6_err(data_at + nbytes, "trailing data after the adjacency bits"));
        }
        let mut g = Graph::empty(n)?;
        let mut bit = 0usize;
        for j in 1..n {
            for i in 0..j {
                let byte = bytes[data_at + bit / 6] - G6_LOW;
                if byte >> (5 - bit % 6) & 1 == 1 {
                    g.add_edge(i, j)?;
                }
                bit += 1;
            }
        }
        if nbits % 6 != 0 {
            let pad = 6 - nbits % 6;
            if (bytes[data_at + nbytes - 1] - G6_LOW) & ((1 << pad) - 1) != 0 {
                return Err(g6_err(data_at + nbytes - 1, "nonzero padding bits"));
            }
        }
        Ok(g)
    }

    /// Canonical graph6 text: shortest header form, zero padding.
    pub fn to_graph6(&self) -> String {
        let n = self.n;
        let mut bytes = Vec::new();
        if n <= 62 {
            bytes.push(G6_LOW + n as u8);
        } else {
            bytes.push(b'~');
            bytes.push(G6_LOW + (n >> 12 & 63) as u8);
            bytes.push(G6_LOW + (n >> 6 & 63) as u8);
            bytes.push(G6_LOW + (n & 63) as u8);
        }
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = acc << 1 | self.has_edge(i, j) as u8;
                filled += 1;
                if filled == 6 {
                    bytes.push(G6_LOW + acc);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            bytes.push(G6_LOW + (acc << (6 - filled)));
        }
        String::from_utf8(bytes).expect("graph6 bytes are printable")
    }

    /// Parses the plain-text edge list: one "u v" pair per line, 0-indexed,
    /// blank lines skipped. The order is one past the largest vertex named.
    pub fn from_adjacency_text(text: &str) -> Result<Graph> {
        let mut edges = Vec::new();
        let mut max_v = 0usize;
        let mut line_start = 0usize;
        for line in text.split('\n') {
            let mut toks = Vec::new();
            let mut at = 0usize;
            for tok in line.split_whitespace() {
                let found = line[at..].find(tok).expect("token comes from this line") + at;
                at = found + tok.len();
                toks.push((line_start + found, tok));
            }
            line_start += line.len() + 1;
            match toks[..] {
                [] => continue,
                [(ua, u), (va, v)] => {
                    let u: usize = u.parse().map_err(|_| Error::Parse {
                        offset: ua,
                        reason: format!("invalid vertex number {u:?}"),
                    })?;
                    let v: usize = v.parse().map_err(|_| Error::Parse {
                        offset: va,
                        reason: format!("invalid vertex number {v:?}"),
                    })?;
                    if u == v {
                        return Err(Error::Parse {
                            offset: ua,
                            reason: format!("loop at vertex {u}"),
                        });
                    }
                    max_v = max_v.max(u).max(v);
                    edges.push((u, v));
                }
                _ => {
                    return Err(Error::Parse {
                        offset: toks[0].0,
                        reason: "expected exactly two vertex numbers per line".into(),
                    })
                }
            }
        }
        if edges.is_empty() {
            return Err(Error::Parse {
                offset: 0,
                reason: "no edges found".into(),
            });
        }
        Graph::from_edges(max_v + 1, &edges)
    }

    /// Edge-list text, one "u v" pair per line in lexicographic order.
    pub fn to_adjacency_text(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl Graph {
    /// Breadth-first distances from a seed set; usize::MAX marks
    /// unreachable vertices.
    fn bfs_distances(&self, seeds: &[usize]) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for &s in seeds {
            if dist[s] == usize::MAX {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(&[0]).iter().all(|&d| d != usize::MAX)
    }

    /// Length of a shortest cycle; None for forests. One breadth-first
    /// search per root: a scanned edge that closes back into the tree at
    /// depths d(u), d(v) witnesses a cycle of length at most
    /// d(u) + d(v) + 1, and rooting at a vertex of a shortest cycle makes
    /// the witness exact.
    pub fn girth(&self) -> Option<u64> {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            if best == 3 {
                break;
            }
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                // Any cycle seen from here on has length ≥ 2·d(u).
                if 2 * dist[u] >= best {
                    break;
                }
                for v in self.neighbors(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if v != parent[u] {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        (best < usize::MAX).then_some(best as u64)
    }

    /// Cells of vertices at distance 0, 1, 2, … from the seed set; every
    /// vertex must be reachable.
    pub fn distance_partition(&self, seed: &[usize]) -> Result<Vec<Vec<usize>>> {
        if seed.is_empty() {
            return Err(Error::EmptyPart);
        }
        for &s in seed {
            self.check_vertex(s)?;
        }
        let dist = self.bfs_distances(seed);
        if dist.contains(&usize::MAX) {
            return Err(Error::Domain(
                "distance partition requires every vertex reachable from the seed".into(),
            ));
        }
        let ecc = *dist.iter().max().expect("graph is nonempty");
        let mut parts = vec![Vec::new(); ecc + 1];
        for (v, &d) in dist.iter().enumerate() {
            parts[d].push(v);
        }
        Ok(parts)
    }
}

/// Real spectrum of a symmetric integer matrix, carried exactly: the
/// characteristic polynomial plus lazily isolated roots with
/// multiplicities.
#[derive(Debug, Clone)]
pub struct Spectrum {
    charpoly: IntPoly,
    factors: Vec<(IntPoly, u32)>,
    roots: OnceLock<Vec<(Scalar, usize)>>,
}

impl Spectrum {
    /// Requires a monic polynomial, which det(xI − A) always is.
    pub fn new(charpoly: IntPoly) -> Result<Spectrum> {
        if !charpoly.is_monic() {
            return Err(Error::Domain(
                "a spectrum needs a monic characteristic polynomial".into(),
            ));
        }
        let factors = charpoly.squarefree_decomposition()?;
        Ok(Spectrum {
            charpoly,
            factors,
            roots: OnceLock::new(),
        })
    }

    pub fn charpoly(&self) -> &IntPoly {
        &self.charpoly
    }

    /// Squarefree factors with multiplicities; distinct eigenvalues of
    /// multiplicity m are roots of the factor paired with m.
    pub fn factors(&self) -> &[(IntPoly, u32)] {
        &self.factors
    }

    /// Distinct roots in decreasing order with multiplicities. The
    /// multiplicities must sum to the degree, i.e. every root is real.
    pub fn roots(&self) -> Result<&[(Scalar, usize)]> {
        if let Some(r) = self.roots.get() {
            return Ok(r);
        }
        let mut out = Vec::new();
        for (f, mult) in &self.factors {
            for br in isolate_real_roots(f)? {
                out.push((real_root_in(f, &br.lo, &br.hi)?, *mult as usize));
            }
        }
        out.sort_by(|a, b| b.0.cmp(&a.0));
        let total: usize = out.iter().map(|r| r.1).sum();
        if Some(total) != self.charpoly.degree() {
            return Err(Error::Domain(
                "polynomial has complex roots; not a symmetric-matrix spectrum".into(),
            ));
        }
        Ok(self.roots.get_or_init(|| out))
    }

    /// Number of roots strictly above θ, counted with multiplicity.
    pub fn count_gt(&self, theta: &Scalar) -> Result<usize> {
        let mut total = 0;
        for (f, mult) in &self.factors {
            total += theta.count_roots_gt(f)? * *mult as usize;
        }
        Ok(total)
    }
}

impl Graph {
    /// Exact characteristic polynomial det(xI − A) of the adjacency
    /// matrix.
    pub fn char_poly(&self) -> Result<IntPoly> {
        if self.n > CHAR_POLY_CAP {
            return Err(Error::OrderCap(self.n, CHAR_POLY_CAP));
        }
        let a: Vec<Vec<Int>> = (0..self.n)
            .map(|u| (0..self.n).map(|v| Int::from(self.has_edge(u, v) as u8)).collect())
            .collect();
        Ok(matrix::charpoly_int(&a))
    }

    pub fn spectrum(&self) -> Result<Spectrum> {
        Spectrum::new(self.char_poly()?)
    }

    /// Second-largest adjacency eigenvalue, with multiplicity. The largest
    /// eigenvalue of a connected graph is simple, so this is the largest
    /// root below the spectral radius.
    pub fn second_eigenvalue(&self) -> Result<Scalar> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if self.n == 1 {
            return Err(Error::Domain("a single vertex has no second eigenvalue".into()));
        }
        let spectrum = self.spectrum()?;
        let roots = spectrum.roots()?;
        Ok(roots[1].0.clone())
    }

    /// Number of adjacency eigenvalues strictly above θ, with multiplicity;
    /// defined for disconnected graphs too.
    pub fn count_eigs_gt(&self, theta: &Scalar) -> Result<usize> {
        self.spectrum()?.count_gt(theta)
    }

    /// Largest adjacency eigenvalue.
    pub fn spectral_radius(&self) -> Result<Scalar> {
        largest_real_root(&self.char_poly()?)
    }
}

/// Partition quotient: entry (i, j) is the average number of neighbors a
/// vertex of part i has in part j.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientMatrix {
    parts: Vec<Vec<usize>>,
    entries: Vec<Vec<Rat>>,
}

impl QuotientMatrix {
    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn entries(&self) -> &[Vec<Rat>] {
        &self.entries
    }

    /// Integer polynomial whose roots are exactly the quotient
    /// eigenvalues. For an equitable partition these interlace (in fact
    /// are a subset of) the graph eigenvalues.
    pub fn eigen_poly(&self) -> IntPoly {
        matrix::eigen_poly_rat(&self.entries)
    }
}

impl Graph {
    fn validate_partition(&self, parts: &[Vec<usize>]) -> Result<Vec<usize>> {
        if parts.is_empty() {
            return Err(Error::EmptyPart);
        }
        let mut cell = vec![usize::MAX; self.n];
        for (i, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(Error::EmptyPart);
            }
            for &v in part {
                self.check_vertex(v)?;
                if cell[v] != usize::MAX {
                    return Err(Error::Domain(format!(
                        "vertex {v} appears twice in the partition"
                    )));
                }
                cell[v] = i;
            }
        }
        if let Some(v) = cell.iter().position(|&c| c == usize::MAX) {
            return Err(Error::Domain(format!(
                "vertex {v} is missing from the partition"
            )));
        }
        Ok(cell)
    }

    pub fn quotient(&self, parts: &[Vec<usize>]) -> Result<QuotientMatrix> {
        let cell = self.validate_partition(parts)?;
        let mut entries = Vec::with_capacity(parts.len());
        for part in parts {
            let mut counts = vec![0i64; parts.len()];
            for &v in part {
                for w in self.neighbors(v) {
                    counts[cell[w]] += 1;
                }
            }
            entries.push(
                counts
                    .into_iter()
                    .map(|c| rat_pq(c, part.len() as i64))
                    .collect(),
            );
        }
        Ok(QuotientMatrix {
            parts: parts.to_vec(),
            entries,
        })
    }

    /// True when every vertex of part i has the same number of neighbors
    /// in part j, for all i and j.
    pub fn is_equitable(&self, parts: &[Vec<usize>]) -> Result<bool> {
        let cell = self.validate_partition(parts)?;
        for part in parts {
            let mut reference: Option<Vec<usize>> = None;
            for &v in part {
                let mut counts = vec![0usize; parts.len()];
                for w in self.neighbors(v) {
                    counts[cell[w]] += 1;
                }
                match &reference {
                    None => reference = Some(counts),
                    Some(r) => {
                        if *r != counts {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// Distance-regularity restricted to the one-parameter family: every
    /// vertex's distance partition must be equitable with the same
    /// tridiagonal quotient T(k, t, c), where t is the eccentricity plus
    /// one. Equivalent to the intersection array {k, k−1, …, k−1; 1, …, 1, c}.
    pub fn is_drg_with_array(&self, c: &Rat) -> Result<bool> {
        let k = self.regularity().ok_or_else(|| {
            Error::Domain("distance-regularity check requires a regular graph".into())
        })?;
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut shared_t = None;
        for v in 0..self.n {
            let parts = self.distance_partition(&[v])?;
            let t = parts.len();
            if t < 2 {
                return Ok(false);
            }
            match shared_t {
                None => shared_t = Some(t),
                Some(t0) if t0 != t => return Ok(false),
                Some(_) => {}
            }
            if !self.is_equitable(&parts)? {
                return Ok(false);
            }
            if self.quotient(&parts)?.entries() != tridiag_entries(k, t, c) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The t × t tridiagonal quotient: first row [0, k, 0, …], middle rows
/// [1, 0, k−1], last row [0, …, c, k−c].
fn tridiag_entries(k: usize, t: usize, c: &Rat) -> Vec<Vec<Rat>> {
    let kr = rat_i(k as i64);
    let mut m = vec![vec![Rat::zero(); t]; t];
    m[0][1] = kr.clone();
    for i in 1..t - 1 {
        m[i][i - 1] = rat_i(1);
        m[i][i + 1] = &kr - rat_i(1);
    }
    m[t - 1][t - 2] = c.clone();
    m[t - 1][t - 1] = &kr - c;
    m
}

/// Intersection numbers {k, k−1, …, k−1; 1, …, 1, c} of the
/// distance-regular family with tridiagonal quotient T(k, t, c).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionArray {
    pub b: Vec<u64>,
    pub c: Vec<u64>,
}

impl IntersectionArray {
    /// Array of T(k, t, c); the diameter is t − 1 ≥ 1.
    pub fn tridiagonal(k: u64, t: usize, c: u64) -> Result<IntersectionArray> {
        if t < 2 {
            return Err(Error::Domain("the array needs diameter at least 1".into()));
        }
        let d = t - 1;
        let mut b = vec![k - 1; d];
        b[0] = k;
        let mut cs = vec![1; d];
        cs[d - 1] = c;
        Ok(IntersectionArray { b, c: cs })
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

/// Second eigenvalue data of the three-part quotient
/// [[α, k−α, 0], [γ, k−γ−ε, ε], [0, k−β, β]]: the two non-k eigenvalues
/// solve x² − (α+β−(γ+ε))x + (αβ−βγ−αε), independent of k.
#[derive(Debug, Clone, PartialEq)]
pub struct ThreePartStats {
    pub alpha: Rat,
    pub beta: Rat,
    pub gamma: Rat,
    pub epsilon: Rat,
    pub delta: Rat,
    pub lambda2: Scalar,
}

impl ThreePartStats {
    pub fn new(alpha: Rat, beta: Rat, gamma: Rat, epsilon: Rat) -> Result<ThreePartStats> {
        let s = &alpha + &beta - &gamma - &epsilon;
        let delta = &s * &s - rat_i(4) * (&alpha * &beta - &beta * &gamma - &alpha * &epsilon);
        if delta.is_negative() {
            return Err(Error::Domain(
                "negative discriminant: the quotient has no real second eigenvalue".into(),
            ));
        }
        let lambda2 = Scalar::from_rat(s)
            .add(&Scalar::from_rat(delta.clone()).sqrt()?)?
            .mul(&Scalar::from_rat(rat_pq(1, 2)))?;
        Ok(ThreePartStats {
            alpha,
            beta,
            gamma,
            epsilon,
            delta,
            lambda2,
        })
    }
}

/// ½(α+β−(γ+ε)+√Δ) with Δ = (α+β−(γ+ε))² − 4(αβ−βγ−αε): the second
/// eigenvalue of the three-part quotient.
pub fn three_part_lambda2(alpha: &Rat, beta: &Rat, gamma: &Rat, epsilon: &Rat) -> Result<Scalar> {
    ThreePartStats::new(alpha.clone(), beta.clone(), gamma.clone(), epsilon.clone())
        .map(|s| s.lambda2)
}

/// Order bound s + (2k−λ−1)/(k−λ)·(ks−2e) forced on any connected
/// k-regular graph with λ₂ ≤ λ < k by an induced subgraph on s vertices
/// with e internal edges.
pub fn subgraph_order_bound(k: u64, lambda: &Scalar, s: u64, edges: u64) -> Result<Scalar> {
    if s == 0 {
        return Err(Error::Domain("the subgraph needs at least one vertex".into()));
    }
    if edges > s * (s - 1) / 2 {
        return Err(Error::Domain(format!(
            "{edges} edges do not fit on {s} vertices"
        )));
    }
    let kk = Scalar::from_int(k as i64);
    if *lambda >= kk {
        return Err(Error::Domain("the bound requires λ < k".into()));
    }
    let num = Scalar::from_int(2 * k as i64 - 1).sub(lambda)?;
    let den = kk.sub(lambda)?;
    let excess = Scalar::from_int(k as i64 * s as i64 - 2 * edges as i64);
    Scalar::from_int(s as i64).add(&num.div(&den)?.mul(&excess)?)
}

impl Graph {
    /// Complement on the same vertices.
    pub fn complement(&self) -> Graph {
        let mut rows = self.rows.clone();
        for (v, row) in rows.iter_mut().enumerate() {
            for w in row.iter_mut() {
                *w = !*w;
            }
            if !self.n.is_multiple_of(64) {
                let last = row.len() - 1;
                row[last] &= (1 << (self.n % 64)) - 1;
            }
            row[v / 64] &= !(1 << (v % 64));
        }
        Graph { n: self.n, rows }
    }

    /// Line graph: one vertex per edge in lexicographic order, adjacent
    /// when the edges share an endpoint.
    pub fn line_graph(&self) -> Result<Graph> {
        let edges = self.edges();
        if edges.is_empty() {
            return Err(Error::Domain(
                "line graph of an edgeless graph has no vertices".into(),
            ));
        }
        let mut g = Graph::empty(edges.len())?;
        for (i, &(a, b)) in edges.iter().enumerate() {
            for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
                if a == c || a == d || b == c || b == d {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// Tensor with K₂: vertices v and n+v, with u ~ n+v for each edge
    /// {u, v}; bipartite for every input.
    pub fn bipartite_double(&self) -> Result<Graph> {
        let mut g = Graph::empty(2 * self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, self.n + v)?;
            g.add_edge(v, self.n + u)?;
        }
        Ok(g)
    }

    /// Cartesian product; vertex (u, v) becomes u·|H| + v, so the order is
    /// lexicographic.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::empty(self.n * other.n)?;
        for u in 0..self.n {
            for (a, b) in other.edges() {
                g.add_edge(u * other.n + a, u * other.n + b)?;
            }
        }
        for (u, v) in self.edges() {
            for a in 0..other.n {
                g.add_edge(u * other.n + a, v * other.n + a)?;
            }
        }
        Ok(g)
    }
}

/// Circulant graph: i ~ j when (i − j) mod n or (j − i) mod n is a jump.
pub fn circulant(n: usize, jumps: &[usize]) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for &j in jumps {
        if j % n == 0 {
            return Err(Error::Domain(format!(
                "jump {j} is a multiple of the order {n}"
            )));
        }
        for i in 0..n {
            g.add_edge(i, (i + j) % n)?;
        }
    }
    Ok(g)
}

/// Kneser graph: r-subsets of an m-set in lexicographic order, adjacent
/// when disjoint.
pub fn kneser(m: u32, r: u32) -> Result<Graph> {
    if r == 0 || r > m {
        return Err(Error::Domain(format!(
            "subset size {r} must lie between 1 and the ground set size {m}"
        )));
    }
    if m > 64 {
        return Err(Error::Domain(format!("ground set size {m} exceeds 64")));
    }
    let mut count = 1u128;
    for i in 1..=r as u128 {
        count = count * (m as u128 - r as u128 + i) / i;
    }
    if count > MAX_ORDER as u128 {
        return Err(Error::OrderCap(count.min(usize::MAX as u128) as usize, MAX_ORDER));
    }
    let r = r as usize;
    let m = m as usize;
    let mut masks: Vec<u64> = Vec::with_capacity(count as usize);
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        masks.push(idx.iter().fold(0u64, |acc, &i| acc | 1 << i));
        let Some(i) = (0..r).rev().find(|&i| idx[i] < m - r + i) else {
            break;
        };
        idx[i] += 1;
        for j in i + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
    let mut g = Graph::empty(masks.len())?;
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if masks[i] & masks[j] == 0 {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}
