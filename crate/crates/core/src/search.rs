//! Exhaustive isomorph-free enumeration of k-regular graphs under order,
//! girth, and second-eigenvalue constraints.
//!
//! Graphs are grown one vertex at a time by canonical augmentation: a child
//! is kept only when the vertex just added lies in the automorphism orbit of
//! a canonically chosen deletion vertex, so each isomorphism class of
//! partial graphs is expanded exactly once.  Totals are therefore
//! independent of traversal order and of the worker count.
//!
//! Pruning hooks discard partial graphs that provably extend to no graph
//! satisfying the constraints: eigenvalue interlacing (an induced subgraph
//! with λ₂ > λ rules out every completion), girth infeasibility, and the
//! subgraph order bound.  Hooks never change what is enumerated, only how
//! much of the tree is visited, and a floating-point prune signal is
//! confirmed with exact arithmetic before the branch is dropped.

use std::collections::{BTreeMap, HashSet};
use std::sync::Mutex;
use std::time::Instant;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Scalar;
use crate::graph::{self, Graph};
use crate::lpbound;

/// Vertex count cap: adjacency rows are single machine words.
pub const MAX_SEARCH_ORDER: u32 = 64;

/// Half-width of the numeric band around λ inside which every eigenvalue
/// comparison is settled exactly instead of in floating point.
pub const SPECTRAL_BAND: f64 = 1e-6;

/// Depth at which the tree is split into independent work items.
const SPLIT_DEPTH: usize = 8;

/// What to report for the graphs that survive all filters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    /// Count isomorphism classes per order.
    Count,
    /// Also keep a canonical graph6 string per class.
    Collect,
    /// Also keep exact second eigenvalues; used for extremal queries.
    Extremal,
}

/// A search request.  Orders run over `n_min..=n_max`; orders with `n * k`
/// odd contribute nothing.  `girth_exact` filters finals by exact girth,
/// `girth_min` by a lower bound, and `lambda2_max` keeps only graphs whose
/// second-largest adjacency eigenvalue is at most the given value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchSpec {
    pub k: u32,
    pub n_min: u32,
    pub n_max: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub girth_min: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub girth_exact: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda2_max: Option<Scalar>,
    pub connected_only: bool,
    pub mode: SearchMode,
}

impl SearchSpec {
    /// Count connected k-regular graphs on n_min..=n_max vertices.
    pub fn count(k: u32, n_min: u32, n_max: u32) -> SearchSpec {
        SearchSpec {
            k,
            n_min,
            n_max,
            girth_min: None,
            girth_exact: None,
            lambda2_max: None,
            connected_only: true,
            mode: SearchMode::Count,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.k == 0 || self.k >= u32::from(u8::MAX).min(64) {
            return Err(Error::Domain(format!(
                "valency must lie in 1..=63, got {}",
                self.k
            )));
        }
        if self.n_min == 0 || self.n_min > self.n_max {
            return Err(Error::Domain(format!(
                "empty order range {}..={}",
                self.n_min, self.n_max
            )));
        }
        if self.n_max > MAX_SEARCH_ORDER {
            return Err(Error::OrderCap(self.n_max as usize, MAX_SEARCH_ORDER as usize));
        }
        for g in [self.girth_min, self.girth_exact].into_iter().flatten() {
            if g < 3 {
                return Err(Error::Domain(format!("girth must be at least 3, got {g}")));
            }
        }
        if let (Some(lo), Some(ex)) = (self.girth_min, self.girth_exact) {
            if lo > ex {
                return Err(Error::Domain(format!(
                    "girth_min {lo} exceeds girth_exact {ex}"
                )));
            }
        }
        if self.mode == SearchMode::Extremal && !self.connected_only {
            return Err(Error::Domain(
                "extremal search is defined over connected graphs".into(),
            ));
        }
        Ok(())
    }
}

/// Optional tree-pruning rules.  All hooks are sound: disabling any subset
/// changes timings and prune counters but never the enumerated classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PruneHooks {
    /// Interlacing cutoff: drop a partial graph once λ₂ exceeds the target.
    pub spectral: bool,
    /// Girth feasibility: pairwise-distance and Moore-order cutoffs.
    pub girth: bool,
    /// Order bound from an induced subgraph with many internal edges.
    pub subgraph: bool,
}

impl Default for PruneHooks {
    fn default() -> Self {
        PruneHooks {
            spectral: true,
            girth: true,
            subgraph: true,
        }
    }
}

impl PruneHooks {
    pub fn none() -> Self {
        PruneHooks {
            spectral: false,
            girth: false,
            subgraph: false,
        }
    }
}

/// Where the generation tree was cut.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PruneStats {
    /// Partial graphs expanded (one per isomorphism class visited).
    pub nodes: u64,
    /// Children dropped for degree, parity, or connectivity infeasibility.
    pub pruned_infeasible: u64,
    /// Branches dropped by girth feasibility.
    pub pruned_girth: u64,
    /// Branches dropped by the interlacing cutoff (certified exactly).
    pub pruned_spectral: u64,
    /// Branches dropped by the subgraph order bound (certified exactly).
    pub pruned_subgraph: u64,
}

impl PruneStats {
    pub fn pruned_branches(&self) -> u64 {
        self.pruned_infeasible + self.pruned_girth + self.pruned_spectral + self.pruned_subgraph
    }

    fn absorb(&mut self, other: &PruneStats) {
        self.nodes += other.nodes;
        self.pruned_infeasible += other.pruned_infeasible;
        self.pruned_girth += other.pruned_girth;
        self.pruned_spectral += other.pruned_spectral;
        self.pruned_subgraph += other.pruned_subgraph;
    }
}

/// A surviving graph together with its certified second eigenvalue.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub n: u32,
    pub graph6: String,
    pub lambda2: Scalar,
}

/// Outcome of a search.  `graphs` (collect mode) holds canonical graph6
/// strings in sorted order; `witnesses` (extremal mode) is sorted by order
/// and then graph6, so output is reproducible across runs and worker counts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub spec: SearchSpec,
    pub counts_by_n: BTreeMap<u32, u64>,
    pub graphs: Vec<String>,
    pub witnesses: Vec<Witness>,
    pub stats: PruneStats,
    pub warnings: Vec<String>,
    pub wall_ms: u64,
}

impl SearchResult {
    pub fn total(&self) -> u64 {
        self.counts_by_n.values().sum()
    }

    /// Largest order with at least one surviving graph.
    pub fn extremal_order(&self) -> Option<u32> {
        self.counts_by_n
            .iter()
            .rev()
            .find(|(_, &c)| c > 0)
            .map(|(&n, _)| n)
    }

    pub fn witnesses_at(&self, n: u32) -> impl Iterator<Item = &Witness> {
        self.witnesses.iter().filter(move |w| w.n == n)
    }
}

/// Run a search with default hooks and one worker per available core.
pub fn enumerate(spec: &SearchSpec) -> Result<SearchResult> {
    enumerate_with(spec, PruneHooks::default(), default_jobs())
}

/// Run a search with explicit hooks and worker count.
pub fn enumerate_with(spec: &SearchSpec, hooks: PruneHooks, jobs: usize) -> Result<SearchResult> {
    spec.validate()?;
    let t0 = Instant::now();
    let jobs = jobs.max(1);
    let k = spec.k as usize;
    let lam: Option<(Scalar, f64)> = spec
        .lambda2_max
        .as_ref()
        .map(|s| (s.clone(), s.to_f64()));
    // An exact-girth request imposes the same lower bound on every partial
    // graph, because deleting vertices never shortens a cycle.
    let girth_floor = u64::from(spec.girth_exact.or(spec.girth_min).unwrap_or(0));

    let mut counts_by_n = BTreeMap::new();
    let mut graphs = Vec::new();
    let mut witnesses = Vec::new();
    let mut stats = PruneStats::default();
    let mut warnings = Vec::new();
    let mut parity_feasible = false;

    for n in spec.n_min..=spec.n_max {
        let nu = n as usize;
        if nu < k + 1 {
            continue;
        }
        if (nu * k) % 2 == 1 {
            continue;
        }
        parity_feasible = true;
        if hooks.girth && girth_floor >= 4 && girth_infeasible(k, nu, girth_floor)? {
            stats.pruned_girth += 1;
            counts_by_n.insert(n, 0);
            continue;
        }
        let task = Task {
            k,
            n: nu,
            girth_floor,
            girth_exact: spec.girth_exact.map(u64::from),
            lambda: lam.as_ref().map(|(s, f)| (s, *f)),
            hooks,
            connected_only: spec.connected_only,
            mode: spec.mode,
            split_at: if jobs > 1 && nu > SPLIT_DEPTH + 2 {
                SPLIT_DEPTH
            } else {
                usize::MAX
            },
        };
        let acc = task.run(jobs)?;
        counts_by_n.insert(n, acc.count);
        graphs.extend(acc.graphs);
        witnesses.extend(acc.witnesses);
        stats.absorb(&acc.stats);
    }

    if !parity_feasible {
        warnings.push(format!(
            "no order in {}..={} admits a {}-regular graph (n*k must be even)",
            spec.n_min, spec.n_max, spec.k
        ));
    }
    graphs.sort_unstable();
    witnesses.sort_by(|a, b| (a.n, &a.graph6).cmp(&(b.n, &b.graph6)));

    Ok(SearchResult {
        spec: spec.clone(),
        counts_by_n,
        graphs,
        witnesses,
        stats,
        warnings,
        wall_ms: t0.elapsed().as_millis() as u64,
    })
}

/// All graphs attaining the largest feasible order for the pair (k, λ):
/// connected k-regular graphs with λ₂ ≤ λ, searched up to the
/// linear-programming order bound.  The bound must be at most 64.
pub fn find_extremal(k: u64, lambda: &Scalar) -> Result<SearchResult> {
    let cert = lpbound::bound_for_lambda(k, lambda)?;
    let cap = cert.v_ub.to_u64().unwrap_or(u64::MAX);
    if cap > u64::from(MAX_SEARCH_ORDER) {
        return Err(Error::SearchBoundTooLarge(cap, u64::from(MAX_SEARCH_ORDER)));
    }
    let spec = SearchSpec {
        k: k as u32,
        n_min: k as u32 + 1,
        n_max: cap as u32,
        girth_min: None,
        girth_exact: None,
        lambda2_max: Some(lambda.clone()),
        connected_only: true,
        mode: SearchMode::Extremal,
    };
    enumerate_with(&spec, PruneHooks::default(), default_jobs())
}

/// Canonical graph6 encoding: equal strings exactly for isomorphic graphs.
/// Requires at most 64 vertices.
pub fn canonical_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_SEARCH_ORDER as usize {
        return Err(Error::OrderCap(n, MAX_SEARCH_ORDER as usize));
    }
    let mut rows = vec![0u64; n];
    for (v, row) in rows.iter_mut().enumerate() {
        for w in g.neighbors(v) {
            *row |= 1 << w;
        }
    }
    let out = canon::canonical_form(&rows);
    Ok(rows_graph(&out.form).to_graph6())
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// No k-regular graph of girth ≥ g fits on n vertices.
fn girth_infeasible(k: usize, n: usize, g: u64) -> Result<bool> {
    if k == 1 {
        return Ok(false);
    }
    if k == 2 {
        return Ok((n as u64) < g);
    }
    let moore = lpbound::moore_lower(k as u64, g)?;
    Ok(moore > crate::exact::Int::from(n as u64))
}

fn rows_graph(rows: &[u64]) -> Graph {
    let mut edges = Vec::new();
    for (v, &row) in rows.iter().enumerate() {
        for w in Bits(row) {
            if w > v {
                edges.push((v, w));
            }
        }
    }
    Graph::from_edges(rows.len(), &edges).expect("adjacency rows form a valid graph")
}

/// Iterator over set bit positions of a word, ascending.
struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// One enumeration job: fixed target order, filters, and split depth.
#[derive(Clone, Copy)]
struct Task<'a> {
    k: usize,
    n: usize,
    girth_floor: u64,
    girth_exact: Option<u64>,
    lambda: Option<(&'a Scalar, f64)>,
    hooks: PruneHooks,
    connected_only: bool,
    mode: SearchMode,
    split_at: usize,
}

#[derive(Default)]
struct Acc {
    count: u64,
    graphs: Vec<String>,
    witnesses: Vec<Witness>,
    stats: PruneStats,
    pending: Vec<Vec<u64>>,
}

impl Acc {
    fn merge(&mut self, other: Acc) {
        self.count += other.count;
        self.graphs.extend(other.graphs);
        self.witnesses.extend(other.witnesses);
        self.stats.absorb(&other.stats);
        self.pending.extend(other.pending);
    }
}

impl<'a> Task<'a> {
    fn run(&self, jobs: usize) -> Result<Acc> {
        let mut acc = Acc::default();
        self.expand(&[0u64], &mut acc)?;
        if acc.pending.is_empty() {
            return Ok(acc);
        }
        let queue = Mutex::new(std::mem::take(&mut acc.pending));
        let sub = Task {
            split_at: usize::MAX,
            ..*self
        };
        let locals: Vec<Result<Acc>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs)
                .map(|_| {
                    let queue = &queue;
                    let sub = &sub;
                    scope.spawn(move || {
                        let mut local = Acc::default();
                        while let Some(rows) = {
                            let mut q = queue.lock().expect("queue lock");
                            q.pop()
                        } {
                            sub.expand(&rows, &mut local)?;
                        }
                        Ok(local)
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker thread panicked"))
                .collect()
        });
        for local in locals {
            acc.merge(local?);
        }
        Ok(acc)
    }

    /// Expand one accepted partial graph: enumerate augmentations by a new
    /// vertex joined to a nonempty set of open vertices, plus the isolated
    /// augmentation while the graph is still edgeless.
    fn expand(&self, rows: &[u64], acc: &mut Acc) -> Result<()> {
        let m = rows.len();
        debug_assert!(m < self.n);
        acc.stats.nodes += 1;
        let k = self.k;
        let r_child = self.n - m - 1;
        let degs: Vec<usize> = rows.iter().map(|r| r.count_ones() as usize).collect();
        let d_parent: usize = degs.iter().map(|d| k - d).sum();

        // Isolated vertices sit in the first refinement cell, never the
        // last, so the canonical test accepts an isolated augmentation only
        // on an edgeless graph.  Emit exactly that child and skip the test.
        if rows.iter().all(|&r| r == 0) && k <= r_child {
            let mut child = rows.to_vec();
            child.push(0);
            self.forward(child, acc)?;
        }

        // Vertices whose remaining demand exceeds the remaining additions
        // must receive an edge now; they are listed first so the subset
        // scan can fail fast when one is skipped.
        let mut cands: Vec<usize> = (0..m)
            .filter(|&v| degs[v] < k && k - degs[v] > r_child)
            .collect();
        let forced = cands.len();
        if forced > k {
            return Ok(());
        }
        cands.extend((0..m).filter(|&v| degs[v] < k && k - degs[v] <= r_child));

        let dist = (self.hooks.girth && self.girth_floor >= 4).then(|| apsp(rows));
        // |S| bounds: the new vertex needs deficiency at most r_child, and
        // it must take the maximum degree in the child (see `consider`), so
        // |S| is at least the maximum degree already present.
        let max_deg = degs.iter().copied().max().unwrap_or(0);
        let s_min = 1.max(k.saturating_sub(r_child)).max(max_deg);
        let s_max = k.min(cands.len());
        if forced > s_max || s_min > s_max {
            return Ok(());
        }

        let mut chosen = Vec::with_capacity(k);
        let mut seen = HashSet::new();
        self.scan_subsets(
            rows,
            &cands,
            forced,
            0,
            s_min,
            s_max,
            d_parent,
            dist.as_deref(),
            &mut chosen,
            &mut seen,
            acc,
        )
    }

    #[allow(clippy::too_many_arguments)]
    fn scan_subsets(
        &self,
        rows: &[u64],
        cands: &[usize],
        forced: usize,
        idx: usize,
        s_min: usize,
        s_max: usize,
        d_parent: usize,
        dist: Option<&[Vec<u8>]>,
        chosen: &mut Vec<usize>,
        seen: &mut HashSet<Vec<u64>>,
        acc: &mut Acc,
    ) -> Result<()> {
        if idx == cands.len() {
            if chosen.len() >= s_min {
                self.consider(rows, chosen, d_parent, seen, acc)?;
            }
            return Ok(());
        }
        if chosen.len() + (cands.len() - idx) < s_min {
            return Ok(());
        }
        let v = cands[idx];
        if chosen.len() < s_max {
            let girth_ok = match dist {
                Some(d) => {
                    let need = (self.girth_floor - 2) as usize;
                    chosen.iter().all(|&u| d[u][v] as usize >= need)
                }
                None => true,
            };
            if girth_ok {
                chosen.push(v);
                self.scan_subsets(
                    rows, cands, forced, idx + 1, s_min, s_max, d_parent, dist, chosen, seen, acc,
                )?;
                chosen.pop();
            } else {
                acc.stats.pruned_girth += 1;
            }
        }
        // Skipping a forced vertex dooms the branch.
        if idx >= forced {
            self.scan_subsets(
                rows, cands, forced, idx + 1, s_min, s_max, d_parent, dist, chosen, seen, acc,
            )?;
        }
        Ok(())
    }

    /// Feasibility-check, canonicity-check, and recurse into one child.
    fn consider(
        &self,
        parent: &[u64],
        s: &[usize],
        d_parent: usize,
        seen: &mut HashSet<Vec<u64>>,
        acc: &mut Acc,
    ) -> Result<()> {
        let k = self.k;
        let m = parent.len();
        let r = self.n - m - 1;

        // Degree bookkeeping: d counts the total missing degree.  The r
        // future vertices supply r*k endpoints, d of them crossing to the
        // current graph and the rest pairing up internally.
        let d_child = d_parent + k - 2 * s.len();
        if r == 0 {
            if d_child != 0 {
                acc.stats.pruned_infeasible += 1;
                return Ok(());
            }
        } else {
            let internal = r * k;
            if d_child > internal
                || d_child < internal.saturating_sub(r * (r - 1))
                || !(internal - d_child).is_multiple_of(2)
            {
                acc.stats.pruned_infeasible += 1;
                return Ok(());
            }
        }

        // The canonical deletion vertex sits in the last refinement cell,
        // which the ascending-degree colouring places among the vertices of
        // maximum degree.  A child whose added vertex is not of maximum
        // degree therefore always fails the canonical test: reject it
        // before building anything.
        let mut new_row = 0u64;
        for &v in s {
            if parent[v].count_ones() as usize + 1 > s.len() {
                return Ok(());
            }
            new_row |= 1 << v;
        }
        for (v, row) in parent.iter().enumerate() {
            if new_row & (1 << v) == 0 && row.count_ones() as usize > s.len() {
                return Ok(());
            }
        }

        let mut child = Vec::with_capacity(m + 1);
        child.extend_from_slice(parent);
        for &v in s {
            child[v] |= 1 << m;
        }
        child.push(new_row);

        if self.connected_only && !connectable(&child, k, r) {
            acc.stats.pruned_infeasible += 1;
            return Ok(());
        }

        // Canonical-augmentation test.  The deletion vertex is the one in
        // the last canonical position; the child is kept only if the added
        // vertex lies in its automorphism orbit.  Cheap necessary screen
        // first: the added vertex must share the last refinement cell.
        let Some((cols, nc)) = canon::screen_last(&child) else {
            return Ok(());
        };
        let out = canon::canonical_refined(&child, cols, nc);
        let last_pos = m as u8;
        let delta = out
            .pos
            .iter()
            .position(|&p| p == last_pos)
            .expect("canonical positions are a permutation");
        let accepted = delta == m
            || orbit_joined(&out.gens, m, delta)
            || canon::canonical_marked(&child, m).form == canon::canonical_marked(&child, delta).form;
        if !accepted {
            return Ok(());
        }
        if !seen.insert(out.form.clone()) {
            return Ok(());
        }

        if m + 1 == self.n {
            return self.finalize(&out.form, acc);
        }

        if let Some((lam, lam_f)) = self.lambda {
            if self.hooks.spectral && m + 1 >= 4 {
                let l2 = jacobi_second(&child);
                if l2 > lam_f - SPECTRAL_BAND && count_gt_exact(&child, lam)? >= 2 {
                    acc.stats.pruned_spectral += 1;
                    return Ok(());
                }
            }
            if self.hooks.subgraph && self.connected_only && lam_f < k as f64 - 1e-9 {
                let edges2: u64 = child.iter().map(|r| u64::from(r.count_ones())).sum();
                let e = edges2 / 2;
                let (sf, ef, kf) = ((m + 1) as f64, e as f64, k as f64);
                let screen = sf + (2.0 * kf - lam_f - 1.0) / (kf - lam_f) * (kf * sf - 2.0 * ef);
                if screen < self.n as f64 - 0.5 {
                    let bound = graph::subgraph_order_bound(k as u64, lam, (m + 1) as u64, e)?;
                    if bound < Scalar::from_int(self.n as i64) {
                        acc.stats.pruned_subgraph += 1;
                        return Ok(());
                    }
                }
            }
        }

        self.forward(child, acc)
    }

    fn forward(&self, child: Vec<u64>, acc: &mut Acc) -> Result<()> {
        if child.len() == self.split_at {
            acc.pending.push(child);
            Ok(())
        } else {
            self.expand(&child, acc)
        }
    }

    /// Apply the final filters to a completed k-regular graph and record it.
    fn finalize(&self, form: &[u64], acc: &mut Acc) -> Result<()> {
        let g = rows_graph(form);
        debug_assert_eq!(g.regularity(), Some(self.k));
        if self.connected_only && !g.is_connected() {
            return Ok(());
        }
        let girth = g.girth();
        if let Some(exact) = self.girth_exact {
            if girth != Some(exact) {
                return Ok(());
            }
        } else if self.girth_floor >= 3 {
            // An acyclic graph has no girth to violate the bound.
            if let Some(got) = girth {
                if got < self.girth_floor {
                    return Ok(());
                }
            }
        }
        if let Some((lam, lam_f)) = self.lambda {
            let l2 = jacobi_second(form);
            if l2 > lam_f + SPECTRAL_BAND {
                return Ok(());
            }
            if l2 > lam_f - SPECTRAL_BAND && count_gt_exact(form, lam)? >= 2 {
                return Ok(());
            }
        }
        acc.count += 1;
        match self.mode {
            SearchMode::Count => {}
            SearchMode::Collect => acc.graphs.push(g.to_graph6()),
            SearchMode::Extremal => acc.witnesses.push(Witness {
                n: self.n as u32,
                graph6: g.to_graph6(),
                lambda2: g.second_eigenvalue()?,
            }),
        }
        Ok(())
    }
}

/// The partial graph can still become connected: no component is already
/// k-regular while vertices remain, and the r future vertices can absorb
/// the component count (each new vertex joins at most k components).
fn connectable(rows: &[u64], k: usize, r: usize) -> bool {
    let m = rows.len();
    let mut unvisited = if m == 64 { !0u64 } else { (1u64 << m) - 1 };
    let mut comps = 0usize;
    while unvisited != 0 {
        let start = unvisited.trailing_zeros() as usize;
        let mut comp = 1u64 << start;
        loop {
            let mut grown = comp;
            for v in Bits(comp) {
                grown |= rows[v];
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        unvisited &= !comp;
        comps += 1;
        let closed = Bits(comp).all(|v| rows[v].count_ones() as usize == k);
        let spanning = comp.count_ones() as usize == m;
        if closed && !(spanning && r == 0) {
            return false;
        }
    }
    comps <= 1 + r * k.saturating_sub(1)
}

/// All-pairs distances by breadth-first search; u8::MAX means unreachable.
fn apsp(rows: &[u64]) -> Vec<Vec<u8>> {
    let m = rows.len();
    let mut dist = vec![vec![u8::MAX; m]; m];
    for (src, drow) in dist.iter_mut().enumerate() {
        let mut frontier = 1u64 << src;
        let mut visited = frontier;
        let mut d = 0u8;
        while frontier != 0 {
            for v in Bits(frontier) {
                drow[v] = d;
            }
            let mut next = 0u64;
            for v in Bits(frontier) {
                next |= rows[v];
            }
            frontier = next & !visited;
            visited |= next;
            d += 1;
        }
    }
    dist
}

/// Second-largest eigenvalue by cyclic Jacobi iteration.  For adjacency
/// matrices of at most 64 vertices the result is accurate to well below
/// the exact-arithmetic band.
fn jacobi_second(rows: &[u64]) -> f64 {
    let n = rows.len();
    debug_assert!(n >= 2);
    let mut a = vec![0.0f64; n * n];
    for (v, &row) in rows.iter().enumerate() {
        for w in Bits(row) {
            a[v * n + w] = 1.0;
        }
    }
    for _ in 0..60 {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[p * n + q] * a[p * n + q];
            }
        }
        if off < 1e-22 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() < 1e-13 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let sgn = if theta < 0.0 { -1.0 } else { 1.0 };
                let t = sgn / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for i in 0..n {
                    let aip = a[i * n + p];
                    let aiq = a[i * n + q];
                    a[i * n + p] = c * aip - s * aiq;
                    a[i * n + q] = s * aip + c * aiq;
                }
                for i in 0..n {
                    let api = a[p * n + i];
                    let aqi = a[q * n + i];
                    a[p * n + i] = c * api - s * aqi;
                    a[q * n + i] = s * api + c * aqi;
                }
            }
        }
    }
    let mut eigs: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eigs.sort_by(|x, y| y.partial_cmp(x).expect("eigenvalues are finite"));
    eigs[1]
}

/// Exact count of adjacency eigenvalues strictly above theta.
fn count_gt_exact(rows: &[u64], theta: &Scalar) -> Result<usize> {
    rows_graph(rows).count_eigs_gt(theta)
}

fn orbit_joined(gens: &[Vec<u8>], a: usize, b: usize) -> bool {
    if gens.is_empty() {
        return false;
    }
    let n = gens[0].len();
    let mut uf = Uf::new(n);
    for g in gens {
        for (v, &gv) in g.iter().enumerate() {
            uf.union(v as u8, gv);
        }
    }
    uf.find(a as u8) == uf.find(b as u8)
}

struct Uf([u8; 64]);

impl Uf {
    fn new(n: usize) -> Uf {
        debug_assert!(n <= 64);
        let mut p = [0u8; 64];
        for (i, x) in p.iter_mut().enumerate() {
            *x = i as u8;
        }
        Uf(p)
    }

    fn find(&mut self, mut v: u8) -> u8 {
        while self.0[v as usize] != v {
            let parent = self.0[v as usize];
            self.0[v as usize] = self.0[parent as usize];
            v = self.0[v as usize];
        }
        v
    }

    fn union(&mut self, a: u8, b: u8) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.0[ra.max(rb) as usize] = ra.min(rb);
        }
    }
}

/// Canonical labeling by colour refinement with individualization.
///
/// The canonical form of a graph is the lexicographically least adjacency
/// row vector over the labelings explored, starting from the ascending
/// degree colouring; isomorphic graphs yield equal forms.  Discovered
/// automorphisms prune sibling branches and are returned as generators.
mod canon {
    use super::{Bits, Uf};

    pub(super) struct CanonOut {
        /// Canonical adjacency rows; row i holds the neighbours of the
        /// vertex in canonical position i, as positions.
        pub form: Vec<u64>,
        /// Vertex -> canonical position.
        pub pos: Vec<u8>,
        /// Automorphism generators discovered during the search.
        pub gens: Vec<Vec<u8>>,
    }

    /// Stable colouring from the ascending-degree start, provided the last
    /// vertex ends in the last cell; `None` as soon as it leaves it.  Cell
    /// order is preserved by splitting, so leaving is irrevocable, and the
    /// last canonical position always falls in the last stable cell.
    pub(super) fn screen_last(rows: &[u64]) -> Option<(Vec<u16>, u16)> {
        let mut colors = degree_colors(rows);
        let nc = refine_watch(rows, &mut colors, Some(rows.len() - 1))?;
        Some((colors, nc))
    }

    pub(super) fn canonical_form(rows: &[u64]) -> CanonOut {
        let mut colors = degree_colors(rows);
        let nc = refine(rows, &mut colors);
        canonical_refined(rows, colors, nc)
    }

    /// Canonical form from an already-stable colouring.
    pub(super) fn canonical_refined(rows: &[u64], colors: Vec<u16>, ncolors: u16) -> CanonOut {
        let n = rows.len();
        debug_assert!((1..=64).contains(&n));
        let mut ctx = Ctx {
            rows,
            n,
            best: None,
            best_pos: vec![0; n],
            best_inv: vec![0; n],
            gens: Vec::new(),
            path: Vec::new(),
        };
        descend(&mut ctx, &colors, ncolors);
        CanonOut {
            form: ctx.best.expect("at least one leaf is always reached"),
            pos: ctx.best_pos,
            gens: ctx.gens,
        }
    }

    /// Canonical form with one vertex split into its own final cell.
    /// Equal marked forms certify an automorphism moving one mark to the
    /// other, so this decides orbit questions exactly.
    pub(super) fn canonical_marked(rows: &[u64], mark: usize) -> CanonOut {
        let mut init = degree_colors(rows);
        let top = init.iter().copied().max().unwrap_or(0) + 1;
        init[mark] = top;
        canonical_with(rows, init)
    }

    /// Initial colouring by distance-count profiles: vertices are ranked by
    /// the vector (#vertices at distance 1, 2, ...), ascending.  The first
    /// component is the degree, so isolated vertices occupy the first cell
    /// and only maximum-degree vertices can reach the last; unlike the bare
    /// degree this splits most regular graphs before any individualization.
    fn degree_colors(rows: &[u64]) -> Vec<u16> {
        let n = rows.len();
        let mut profiles: Vec<[u8; 64]> = vec![[0u8; 64]; n];
        for (v, prof) in profiles.iter_mut().enumerate() {
            let mut frontier = 1u64 << v;
            let mut visited = frontier;
            let mut d = 0usize;
            while frontier != 0 {
                if d > 0 {
                    prof[d - 1] = frontier.count_ones() as u8;
                }
                let mut next = 0u64;
                for u in Bits(frontier) {
                    next |= rows[u];
                }
                frontier = next & !visited;
                visited |= next;
                d += 1;
            }
        }
        let mut uniq = profiles.clone();
        uniq.sort_unstable();
        uniq.dedup();
        profiles
            .iter()
            .map(|p| uniq.binary_search(p).expect("profile present") as u16)
            .collect()
    }

    fn refine(rows: &[u64], colors: &mut [u16]) -> u16 {
        refine_watch(rows, colors, None).expect("unwatched refinement always completes")
    }

    /// Split cells by the count of neighbours in every cell until stable.
    /// New colour ids follow the sort order of (old colour, count vector),
    /// so refinement preserves the relative order of existing cells.  With
    /// a watch vertex, gives up as soon as that vertex leaves the last cell.
    fn refine_watch(rows: &[u64], colors: &mut [u16], watch: Option<usize>) -> Option<u16> {
        let n = rows.len();
        let mut ncolors = colors.iter().copied().max().map_or(1, |c| c + 1);
        if let Some(w) = watch {
            if colors[w] != ncolors - 1 {
                return None;
            }
        }
        let mut masks = [0u64; 64];
        let mut table = [0u8; 64 * 64];
        let mut order = [0u8; 64];
        let mut next = [0u16; 64];
        loop {
            let nc = usize::from(ncolors);
            masks[..nc].fill(0);
            for (v, &c) in colors.iter().enumerate() {
                masks[usize::from(c)] |= 1 << v;
            }
            for v in 0..n {
                for (c, mask) in masks[..nc].iter().enumerate() {
                    table[v * nc + c] = (rows[v] & mask).count_ones() as u8;
                }
            }
            for (i, o) in order[..n].iter_mut().enumerate() {
                *o = i as u8;
            }
            order[..n].sort_unstable_by(|&a, &b| {
                let (a, b) = (usize::from(a), usize::from(b));
                colors[a]
                    .cmp(&colors[b])
                    .then_with(|| table[a * nc..(a + 1) * nc].cmp(&table[b * nc..(b + 1) * nc]))
            });
            let mut id = 0u16;
            for i in 0..n {
                let v = usize::from(order[i]);
                if i > 0 {
                    let u = usize::from(order[i - 1]);
                    if colors[u] != colors[v] || table[u * nc..(u + 1) * nc] != table[v * nc..(v + 1) * nc]
                    {
                        id += 1;
                    }
                }
                next[v] = id;
            }
            colors.copy_from_slice(&next[..n]);
            let new_ncolors = id + 1;
            if let Some(w) = watch {
                if colors[w] != new_ncolors - 1 {
                    return None;
                }
            }
            if new_ncolors == ncolors {
                return Some(ncolors);
            }
            ncolors = new_ncolors;
        }
    }

    fn canonical_with(rows: &[u64], mut colors: Vec<u16>) -> CanonOut {
        let nc = refine(rows, &mut colors);
        canonical_refined(rows, colors, nc)
    }

    struct Ctx<'a> {
        rows: &'a [u64],
        n: usize,
        best: Option<Vec<u64>>,
        best_pos: Vec<u8>,
        /// Canonical position -> vertex, for the current best labeling.
        best_inv: Vec<u8>,
        gens: Vec<Vec<u8>>,
        path: Vec<usize>,
    }

    fn descend(ctx: &mut Ctx, colors: &[u16], ncolors: u16) {
        let n = ctx.n;
        if usize::from(ncolors) == n {
            leaf(ctx, colors);
            return;
        }
        let mut counts = vec![0u8; usize::from(ncolors)];
        for &c in colors {
            counts[usize::from(c)] += 1;
        }
        // Smallest non-singleton cell, earliest on ties: invariant under
        // isomorphism, and it keeps the branching factor low.
        let target = counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c >= 2)
            .min_by_key(|(_, &c)| c)
            .map(|(i, _)| i)
            .expect("a non-discrete colouring has a non-singleton cell") as u16;
        let members: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &members {
            // Skip candidates equivalent to an already-explored sibling
            // under automorphisms that fix the individualized path; their
            // subtrees contribute the same forms.
            if !tried.is_empty() {
                let mut uf = Uf::new(n);
                for g in &ctx.gens {
                    if ctx.path.iter().all(|&p| g[p] as usize == p) {
                        for (u, &gu) in g.iter().enumerate() {
                            uf.union(u as u8, gu);
                        }
                    }
                }
                if tried.iter().any(|&w| uf.find(w as u8) == uf.find(v as u8)) {
                    continue;
                }
            }
            tried.push(v);
            let mut cols: Vec<u16> = colors
                .iter()
                .map(|&c| if c > target { c + 1 } else { c })
                .collect();
            for &u in &members {
                if u != v {
                    cols[u] = target + 1;
                }
            }
            let nc = refine(ctx.rows, &mut cols);
            ctx.path.push(v);
            descend(ctx, &cols, nc);
            ctx.path.pop();
        }
    }

    fn leaf(ctx: &mut Ctx, colors: &[u16]) {
        let n = ctx.n;
        let mut form = vec![0u64; n];
        for v in 0..n {
            let pv = usize::from(colors[v]);
            for w in Bits(ctx.rows[v]) {
                form[pv] |= 1 << colors[w];
            }
        }
        match &ctx.best {
            Some(best) if form > *best => {}
            Some(best) if form == *best => {
                // Two labelings with the same form compose to an
                // automorphism: send each vertex to the one occupying the
                // same canonical position in the stored labeling.
                let gamma: Vec<u8> = (0..n)
                    .map(|v| ctx.best_inv[usize::from(colors[v])])
                    .collect();
                if gamma.iter().enumerate().any(|(v, &gv)| gv as usize != v) {
                    ctx.gens.push(gamma);
                }
            }
            _ => {
                for (v, &c) in colors.iter().enumerate().take(n) {
                    ctx.best_pos[v] = c as u8;
                    ctx.best_inv[usize::from(c)] = v as u8;
                }
                ctx.best = Some(form);
            }
        }
    }
}
