//! Isomorphism-free generation of connected unicyclic graphs.
//!
//! Every unicyclic graph is a spanning tree plus one extra edge, so the
//! generator walks all non-isomorphic free trees of order `n`, adds each
//! non-edge, and keeps one canonical graph6 string per class. Trees come from
//! leaf extension (every tree of order `k + 1` is a tree of order `k` plus a
//! leaf), deduplicated canonically at each order.
//!
//! The candidate space `(tree index, non-edge)` is split into shards by cycle
//! length and tree index. Shards dedupe locally and may run concurrently; the
//! merge sorts and dedupes globally, so the output never depends on the shard
//! count.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::canon::canonical_form;
use crate::ceiling;
use crate::error::{Error, Result};
use crate::families::make_cycle;
use crate::graph::{Graph, Vertex};
use crate::graph6::decode_graph6;

/// Largest order accepted by [`enumerate_connected`].
pub const CONNECTED_CEILING: usize = 7;

#[derive(Clone, Debug, Serialize)]
pub struct EnumerationReport {
    pub n: usize,
    pub count: usize,
    /// Canonical graph6 strings, sorted by bytes.
    pub graphs: Vec<String>,
    #[serde(rename = "elapsed_ms", serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

impl EnumerationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// One graph6 string per line, sorted; trailing newline.
    pub fn to_graph6_lines(&self) -> String {
        self.graphs.iter().map(|g| format!("{g}\n")).collect()
    }

    pub fn decoded(&self) -> Result<Vec<Graph>> {
        self.graphs.iter().map(|s| decode_graph6(s)).collect()
    }
}

fn check_ceiling(n: usize) -> Result<()> {
    let ceiling = ceiling();
    if n > ceiling {
        return Err(Error::TooLarge { n, ceiling });
    }
    Ok(())
}

fn dedupe(graphs: impl IntoIterator<Item = Graph>) -> Result<Vec<Graph>> {
    let mut seen = BTreeSet::new();
    for g in graphs {
        seen.insert(canonical_form(&g)?);
    }
    seen.into_iter().map(|c| decode_graph6(c.as_str())).collect()
}

fn add_leaf(g: &Graph, at: Vertex) -> Graph {
    let n = g.n();
    g.with_new_vertices(1).add_edge(at, n).expect("fresh vertex")
}

/// All free trees of order `n` up to isomorphism, in canonical form, sorted
/// by graph6.
pub fn free_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    check_ceiling(n)?;
    let mut level = vec![Graph::empty(1)?];
    for _ in 1..n {
        let next = level.iter().flat_map(|t| (0..t.n()).map(move |v| add_leaf(t, v)));
        level = dedupe(next)?;
    }
    Ok(level)
}

/// Labeled tree on `0..seq.len() + 2` encoded by a Prüfer sequence.
pub fn tree_from_prufer(seq: &[Vertex]) -> Result<Graph> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: bad, n });
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf always remains");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<Vertex> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges)
}

fn shard_of(cycle_len: usize, tree_index: usize, shards: usize) -> usize {
    (cycle_len + tree_index) % shards
}

fn run_shard(trees: &[Graph], shard: usize, shards: usize) -> Result<Vec<String>> {
    let mut seen = BTreeSet::new();
    for (i, t) in trees.iter().enumerate() {
        for u in 0..t.n() {
            let dist = t.bfs(u);
            for (v, dv) in dist.iter().enumerate().skip(u + 1) {
                if t.has_edge(u, v) {
                    continue;
                }
                let cycle_len = dv.expect("tree is connected") as usize + 1;
                if shard_of(cycle_len, i, shards) != shard {
                    continue;
                }
                seen.insert(canonical_form(&t.add_edge(u, v)?)?.into_string());
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// All connected unicyclic graphs of order `n`, one per isomorphism class.
pub fn enumerate_unicyclic(n: usize) -> Result<EnumerationReport> {
    partitioned_enumerate(n, 1)
}

/// Same result as [`enumerate_unicyclic`], computed in `shards` independent
/// partitions that run concurrently.
pub fn partitioned_enumerate(n: usize, shards: usize) -> Result<EnumerationReport> {
    if shards == 0 {
        return Err(Error::BadParams("shards must be at least 1".into()));
    }
    if n < 3 {
        return Err(Error::BadOrder { family: "unicyclic", n });
    }
    check_ceiling(n)?;
    let start = Instant::now();
    let trees = free_trees(n)?;
    let parts: Vec<Vec<String>> = if shards == 1 {
        vec![run_shard(&trees, 0, 1)?]
    } else {
        (0..shards)
            .into_par_iter()
            .map(|s| run_shard(&trees, s, shards))
            .collect::<Result<_>>()?
    };
    let mut graphs: Vec<String> = parts.into_iter().flatten().collect();
    graphs.sort_unstable();
    graphs.dedup();
    Ok(EnumerationReport {
        n,
        count: graphs.len(),
        graphs,
        elapsed: start.elapsed(),
    })
}

/// Independent generator for cross-checks: grow each cycle `C_g` by attaching
/// leaves, deduplicating at every step. Returns sorted canonical graph6.
pub fn enumerate_unicyclic_by_cycle_growth(n: usize) -> Result<Vec<String>> {
    if n < 3 {
        return Err(Error::BadOrder { family: "unicyclic", n });
    }
    check_ceiling(n)?;
    let mut all = BTreeSet::new();
    for g in 3..=n {
        let mut level = vec![make_cycle(g)?];
        for _ in g..n {
            let next = level.iter().flat_map(|h| (0..h.n()).map(move |v| add_leaf(h, v)));
            level = dedupe(next)?;
        }
        for h in &level {
            all.insert(canonical_form(h)?.into_string());
        }
    }
    Ok(all.into_iter().collect())
}

/// All connected graphs of order `n <= 7` up to isomorphism, grown one vertex
/// at a time over every neighbourhood subset.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > CONNECTED_CEILING {
        return Err(Error::TooLarge { n, ceiling: CONNECTED_CEILING });
    }
    let mut level = vec![Graph::empty(1)?];
    for k in 1..n {
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..(1 << k) {
                let mut h = g.with_new_vertices(1);
                for v in (0..k).filter(|&v| mask >> v & 1 == 1) {
                    h = h.add_edge(v, k)?;
                }
                next.push(h);
            }
        }
        level = dedupe(next)?;
    }
    Ok(level.into_iter().filter(Graph::is_connected).collect())
}
