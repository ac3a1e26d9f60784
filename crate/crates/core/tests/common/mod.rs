//! Independent oracles for integration tests: nothing here calls the library's
//! canonical form, distance routine or eigensolver.

#![allow(dead_code, clippy::needless_range_loop)]

use dlspec_core::Graph;

pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let inf = u32::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for &v in g.neighbors(u) {
            d[u][v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

pub fn laplacian_rows(g: &Graph) -> Vec<Vec<f64>> {
    let d = floyd_warshall(g);
    let n = g.n();
    (0..n)
        .map(|u| {
            let tr: u32 = d[u].iter().sum();
            (0..n).map(|v| if u == v { tr as f64 } else { -(d[u][v] as f64) }).collect()
        })
        .collect()
}

pub fn mat_vec(m: &[Vec<f64>], x: &[f64]) -> Vec<f64> {
    m.iter().map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Largest eigenvalue of a positive semidefinite matrix by power iteration on
/// the complement of the all-ones vector, finished with a Rayleigh quotient.
pub fn power_radius(m: &[Vec<f64>]) -> f64 {
    let n = m.len();
    let mut x: Vec<f64> = (0..n).map(|i| 1.0 + (i as f64 * 0.7).sin()).collect();
    let mut lambda = 0.0;
    for _ in 0..20_000 {
        let mean = x.iter().sum::<f64>() / n as f64;
        x.iter_mut().for_each(|v| *v -= mean);
        let norm = dot(&x, &x).sqrt();
        x.iter_mut().for_each(|v| *v /= norm);
        let y = mat_vec(m, &x);
        let next = dot(&x, &y);
        let converged = (next - lambda).abs() < 1e-13 * next.abs();
        lambda = next;
        x = y;
        if converged {
            break;
        }
    }
    lambda
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Isomorphism by trying every bijection.
pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let sorted_degrees = |g: &Graph| {
        let mut d: Vec<usize> = (0..g.n()).map(|v| g.neighbors(v).len()).collect();
        d.sort_unstable();
        d
    };
    if sorted_degrees(a) != sorted_degrees(b) {
        return false;
    }
    permutations(a.n())
        .iter()
        .any(|p| a.edges().all(|(u, v)| b.has_edge(p[u], p[v])))
}

pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    permutations(n)
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn classes_by_pairwise_isomorphism(graphs: impl Iterator<Item = Graph>) -> Vec<Graph> {
    let mut reps: Vec<Graph> = Vec::new();
    for g in graphs {
        if !reps.iter().any(|r| brute_isomorphic(r, &g)) {
            reps.push(g);
        }
    }
    reps
}

/// Every connected `n`-edge subset of `K_n` (connected with `n` edges means
/// exactly one cycle), collapsed by pairwise isomorphism.
pub fn brute_unicyclic_classes(n: usize) -> Vec<Graph> {
    let pairs = all_pairs(n);
    let m = pairs.len();
    let graphs = (0u32..1 << m)
        .filter(|mask| mask.count_ones() as usize == n)
        .map(|mask| {
            let edges: Vec<_> = (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
        .filter(uf_connected);
    classes_by_pairwise_isomorphism(graphs)
}

/// Every connected spanning subgraph of `K_n`, collapsed by pairwise
/// isomorphism.
pub fn brute_connected_classes(n: usize) -> Vec<Graph> {
    let pairs = all_pairs(n);
    let m = pairs.len();
    let graphs = (0u32..1 << m)
        .map(|mask| {
            let edges: Vec<_> = (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
        .filter(uf_connected);
    classes_by_pairwise_isomorphism(graphs)
}

/// Connectivity by union-find over the edge list.
pub fn uf_connected(g: &Graph) -> bool {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut comps = n;
    for (u, v) in g.edges() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            comps -= 1;
        }
    }
    comps == 1
}
