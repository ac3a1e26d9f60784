//! Canonical labeling by colour refinement plus individualization.
//!
//! The certificate is the lexicographically smallest graph6 string over all
//! leaves of the individualization-refinement search tree. The search tree is
//! defined from isomorphism-invariant data only, so the minimum is a complete
//! invariant. Branches on twin vertices (`N(u) - v == N(v) - u`) are skipped:
//! swapping twins is an automorphism, so their subtrees yield the same leaves.

use std::fmt;

use crate::ceiling;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::graph6::{encode_graph6, pack_bits};

/// graph6 string of the canonical relabeling.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({:?})", self.0)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(c, _)| c)
}

/// Canonical form plus the relabeling `perm` with `g.relabel(&perm)` equal to
/// the decoded canonical graph.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<Vertex>)> {
    let ceiling = ceiling();
    if g.n() > ceiling {
        return Err(Error::TooLarge { n: g.n(), ceiling });
    }
    let twins = twin_classes(g);
    let mut colors = vec![0; g.n()];
    refine(g, &mut colors);
    let mut best: Option<(Vec<u8>, Vec<Vertex>)> = None;
    search(g, &twins, colors, &mut best);
    let (_, perm) = best.expect("search visits at least one leaf");
    let canon = encode_graph6(&g.relabel(&perm)?)?;
    Ok((CanonicalForm(canon), perm))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() || a.degree_sequence() != b.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Vertices with identical neighbourhoods up to each other share a class id.
fn twin_classes(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut class: Vec<usize> = (0..n).collect();
    for v in 0..n {
        for u in 0..v {
            if class[u] == u && are_twins(g, u, v) {
                class[v] = u;
                break;
            }
        }
    }
    class
}

fn are_twins(g: &Graph, u: Vertex, v: Vertex) -> bool {
    let a = g.neighbors(u).iter().filter(|&&w| w != v);
    let b = g.neighbors(v).iter().filter(|&&w| w != u);
    a.eq(b)
}

/// Colour refinement to the coarsest equitable partition finer than `colors`.
/// Colours are dense ranks and new cells keep the order of their parent cell,
/// so the result depends only on the isomorphism type of `(g, colors)`.
fn refine(g: &Graph, colors: &mut [usize]) {
    let n = g.n();
    let mut cells = distinct(colors);
    loop {
        let mut sigs: Vec<(usize, Vec<usize>, Vertex)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut rank = 0;
        for i in 0..n {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                rank += 1;
            }
            colors[sigs[i].2] = rank;
        }
        let next = rank + 1;
        if next == cells {
            break;
        }
        cells = next;
    }
}

fn distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn search(g: &Graph, twins: &[usize], colors: Vec<usize>, best: &mut Option<(Vec<u8>, Vec<Vertex>)>) {
    let n = g.n();
    let mut size = vec![0usize; n];
    for &c in &colors {
        size[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| size[c] > 1) else {
        let inv = inverse(&colors);
        let bits = pack_bits(n, |i, j| g.has_edge(inv[i], inv[j]));
        if best.as_ref().is_none_or(|(b, _)| bits < *b) {
            *best = Some((bits, colors));
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for v in (0..n).filter(|&v| colors[v] == target) {
        if tried.contains(&twins[v]) {
            continue;
        }
        tried.push(twins[v]);
        let mut next: Vec<usize> = colors
            .iter()
            .enumerate()
            .map(|(w, &c)| if c > target || (c == target && w != v) { c + 1 } else { c })
            .collect();
        refine(g, &mut next);
        search(g, twins, next, best);
    }
}

fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    inv
}
