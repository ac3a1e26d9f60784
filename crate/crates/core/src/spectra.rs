//! Distance matrices, the distance Laplacian `Tr(G) - D(G)`, and its spectrum.

use std::f64::consts::PI;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::jacobi;
use crate::report::{round_sig, round_sig_vec};

/// Exact hop distances of a connected graph, with transmissions (row sums).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
    tr: Vec<u64>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn transmission(&self, u: Vertex) -> u64 {
        self.tr[u]
    }

    pub fn transmissions(&self) -> &[u64] {
        &self.tr
    }

    pub fn max_transmission(&self) -> u64 {
        self.tr.iter().copied().max().unwrap_or(0)
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for u in 0..self.n {
            let row: Vec<String> = self.row(u).iter().map(u32::to_string).collect();
            writeln!(out, "{}", row.join(",")).unwrap();
        }
        out
    }
}

/// All-pairs shortest paths by BFS from every vertex.
pub fn apsp(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.n();
    let mut d = Vec::with_capacity(n * n);
    for s in 0..n {
        for dist in g.bfs(s) {
            d.push(dist.ok_or(Error::Disconnected)?);
        }
    }
    let tr = d.chunks(n).map(|row| row.iter().map(|&x| x as u64).sum()).collect();
    Ok(DistanceMatrix { n, d, tr })
}

/// Dense real symmetric matrix, row-major. Setters write both triangles.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> Self {
        SymmetricMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    /// Builds from full rows; the upper triangle is taken as authoritative.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let mut m = SymmetricMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: row.len() });
            }
            for (j, &x) in row.iter().enumerate().skip(i) {
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value;
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn mul_vec(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: x.len() });
        }
        Ok(self
            .data
            .chunks(self.n)
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn principal_submatrix(&self, idx: &[usize]) -> SymmetricMatrix {
        let mut m = SymmetricMatrix::zeros(idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate().skip(a) {
                m.set(a, b, self.get(i, j));
            }
        }
        m
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in self.data.chunks(self.n) {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(out, "{}", cells.join(",")).unwrap();
        }
        out
    }
}

/// Eigenvalues sorted non-increasing, with column-aligned orthonormal eigenvectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    vectors: Vec<Vec<f64>>,
}

impl Spectrum {
    pub(crate) fn new(values: Vec<f64>, vectors: Vec<Vec<f64>>) -> Self {
        Spectrum { values, vectors }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Eigenvector for `values()[i]`.
    pub fn vector(&self, i: usize) -> &[f64] {
        &self.vectors[i]
    }

    pub fn radius(&self) -> f64 {
        self.values[0]
    }

    /// `max_i ||M x_i - lambda_i x_i||_inf`.
    pub fn max_residual(&self, m: &SymmetricMatrix) -> f64 {
        self.values
            .iter()
            .zip(&self.vectors)
            .map(|(&lambda, x)| {
                let mx = m.mul_vec(x).expect("spectrum matches matrix order");
                mx.iter()
                    .zip(x)
                    .map(|(a, b)| (a - lambda * b).abs())
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max)
    }

    /// `max |<x_i, x_j> - delta_ij|`.
    pub fn orthonormality_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, a) in self.vectors.iter().enumerate() {
            for (j, b) in self.vectors.iter().enumerate().skip(i) {
                let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }
}

pub use jacobi::eigen_decompose;

pub fn distance_laplacian_from(d: &DistanceMatrix) -> SymmetricMatrix {
    let n = d.n();
    let mut m = SymmetricMatrix::zeros(n);
    for u in 0..n {
        m.set(u, u, d.transmission(u) as f64);
        for v in u + 1..n {
            m.set(u, v, -(d.get(u, v) as f64));
        }
    }
    m
}

pub fn distance_laplacian(g: &Graph) -> Result<SymmetricMatrix> {
    Ok(distance_laplacian_from(&apsp(g)?))
}

pub fn laplacian_spectrum(g: &Graph) -> Result<Spectrum> {
    eigen_decompose(&distance_laplacian(g)?)
}

pub fn spectral_radius(g: &Graph) -> Result<f64> {
    Ok(laplacian_spectrum(g)?.radius())
}

fn check_len(g: &Graph, x: &[f64]) -> Result<()> {
    if x.len() != g.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), got: x.len() });
    }
    Ok(())
}

/// `x^T L(G) x` evaluated as `sum_{u<v} d(u,v) (x_u - x_v)^2`.
pub fn quadratic_form(g: &Graph, x: &[f64]) -> Result<f64> {
    check_len(g, x)?;
    let d = apsp(g)?;
    let n = g.n();
    let mut s = 0.0;
    for u in 0..n {
        for v in u + 1..n {
            let diff = x[u] - x[v];
            s += d.get(u, v) as f64 * diff * diff;
        }
    }
    Ok(s)
}

/// `max_u |lambda x_u - sum_v d(u,v) (x_u - x_v)|`.
pub fn eigen_residual(g: &Graph, lambda: f64, x: &[f64]) -> Result<f64> {
    check_len(g, x)?;
    if x.iter().all(|&xi| xi == 0.0) {
        return Err(Error::ZeroVector);
    }
    let d = apsp(g)?;
    let mut worst: f64 = 0.0;
    for u in 0..g.n() {
        let rhs: f64 = d
            .row(u)
            .iter()
            .zip(x)
            .map(|(&duv, &xv)| duv as f64 * (x[u] - xv))
            .sum();
        worst = worst.max((lambda * x[u] - rhs).abs());
    }
    Ok(worst)
}

fn csc2(t: f64) -> f64 {
    1.0 / (t.sin() * t.sin())
}

/// Distance Laplacian spectral radius of the cycle `C_n` in closed form.
pub fn cycle_radius_closed_form(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::BadOrder { family: "cycle", n });
    }
    let nf = n as f64;
    Ok(if n.is_multiple_of(2) {
        nf * nf / 4.0 + csc2(PI / nf)
    } else {
        (nf * nf - 1.0) / 4.0 + csc2(PI / (2.0 * nf)) / 4.0
    })
}

/// Largest eigenvalue of the 2x2 principal submatrix of `L(Ki_{n,3})` on the
/// pendant vertex and a degree-2 triangle vertex. Interlacing makes it a lower
/// bound for the kite's spectral radius.
pub fn kite_submatrix_bound(n: usize) -> Result<f64> {
    if n < 4 {
        return Err(Error::BadOrder { family: "kite", n });
    }
    let nf = n as f64;
    let disc = (nf - 3.0).powi(2) + 4.0 * (nf - 2.0).powi(2);
    Ok((nf * nf - 2.0 * nf + 1.0 + disc.sqrt()) / 2.0)
}

/// JSON view of a graph's distance Laplacian spectrum.
#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    #[serde(serialize_with = "round_sig_vec")]
    pub eigenvalues: Vec<f64>,
    #[serde(serialize_with = "round_sig")]
    pub radius: f64,
    #[serde(serialize_with = "round_sig")]
    pub residual: f64,
    pub transmissions: Vec<u64>,
}

impl SpectrumReport {
    pub fn for_graph(g: &Graph) -> Result<Self> {
        let d = apsp(g)?;
        let m = distance_laplacian_from(&d);
        let s = eigen_decompose(&m)?;
        Ok(SpectrumReport {
            radius: s.radius(),
            residual: s.max_residual(&m),
            eigenvalues: s.values().to_vec(),
            transmissions: d.transmissions().to_vec(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_complete, make_cycle, make_kite, make_path};

    #[test]
    fn p3_distances() {
        let d = apsp(&make_path(3).unwrap()).unwrap();
        assert_eq!(d.get(0, 2), 2);
        assert_eq!(d.transmissions(), &[3, 2, 3]);
    }

    #[test]
    fn c4_transmissions() {
        let d = apsp(&make_cycle(4).unwrap()).unwrap();
        assert_eq!(d.transmissions(), &[4, 4, 4, 4]);
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(apsp(&g), Err(Error::Disconnected));
        assert_eq!(distance_laplacian(&g), Err(Error::Disconnected));
        assert_eq!(spectral_radius(&g), Err(Error::Disconnected));
    }

    #[test]
    fn small_laplacians() {
        let l = distance_laplacian(&make_path(2).unwrap()).unwrap();
        assert_eq!(l.as_slice(), &[1.0, -1.0, -1.0, 1.0]);
        let k3 = distance_laplacian(&make_complete(3).unwrap()).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(k3.get(i, j), if i == j { 2.0 } else { -1.0 });
            }
        }
    }

    #[test]
    fn kite_rows_sum_to_zero() {
        let (g, _) = make_kite(8).unwrap();
        let l = distance_laplacian(&g).unwrap();
        for row in l.as_slice().chunks(8) {
            assert_eq!(row.iter().sum::<f64>(), 0.0);
        }
    }

    #[test]
    fn quadratic_form_basics() {
        let p2 = make_path(2).unwrap();
        assert_eq!(quadratic_form(&p2, &[1.0, -1.0]).unwrap(), 4.0);
        let (k, _) = make_kite(6).unwrap();
        assert_eq!(quadratic_form(&k, &[1.0; 6]).unwrap(), 0.0);
        assert_eq!(
            quadratic_form(&k, &[1.0; 5]),
            Err(Error::DimensionMismatch { expected: 6, got: 5 })
        );
    }

    #[test]
    fn residual_errors_and_kernel() {
        let c5 = make_cycle(5).unwrap();
        assert_eq!(eigen_residual(&c5, 1.0, &[0.0; 5]), Err(Error::ZeroVector));
        assert!(matches!(eigen_residual(&c5, 1.0, &[1.0; 4]), Err(Error::DimensionMismatch { .. })));
        assert_eq!(eigen_residual(&c5, 0.0, &[1.0; 5]).unwrap(), 0.0);
    }

    #[test]
    fn closed_forms() {
        assert!((cycle_radius_closed_form(4).unwrap() - 6.0).abs() < 1e-12);
        assert!((cycle_radius_closed_form(3).unwrap() - 3.0).abs() < 1e-12);
        assert!((cycle_radius_closed_form(5).unwrap() - 8.6180).abs() < 5e-4);
        assert!(cycle_radius_closed_form(2).is_err());
        // (25 + sqrt(73)) / 2
        let b6 = kite_submatrix_bound(6).unwrap();
        assert!((b6 - (25.0 + 73f64.sqrt()) / 2.0).abs() < 1e-12);
        assert!((b6 - 16.772).abs() < 1e-3);
        assert!(kite_submatrix_bound(3).is_err());
    }

    #[test]
    fn principal_submatrix_picks_entries() {
        let m = SymmetricMatrix::from_rows(&[
            vec![1.0, 2.0, 3.0],
            vec![2.0, 4.0, 5.0],
            vec![3.0, 5.0, 6.0],
        ])
        .unwrap();
        let s = m.principal_submatrix(&[2, 0]);
        assert_eq!(s.as_slice(), &[6.0, 3.0, 3.0, 1.0]);
    }

    #[test]
    fn report_json_shape() {
        let r = SpectrumReport::for_graph(&make_path(2).unwrap()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["eigenvalues"], serde_json::json!([2.0, 0.0]));
        assert_eq!(v["radius"], serde_json::json!(2.0));
        assert!(v["residual"].as_f64().unwrap() < 1e-12);
    }
}
