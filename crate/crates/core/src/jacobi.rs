//! Cyclic Jacobi eigensolver for dense real symmetric matrices.
//!
//! Rotations sweep the strict upper triangle row by row in a fixed order, so
//! identical input bits give identical output bits.

use crate::error::{Error, Result};
use crate::spectra::{Spectrum, SymmetricMatrix};

/// Stop once the off-diagonal Frobenius mass is at most this fraction of the
/// matrix's Frobenius norm.
pub const OFF_DIAGONAL_THRESHOLD: f64 = 1e-13;
pub const MAX_SWEEPS: usize = 100;

pub fn eigen_decompose(m: &SymmetricMatrix) -> Result<Spectrum> {
    let n = m.n();
    let mut a: Vec<f64> = m.as_slice().to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_mass(&a, n);
        if off == 0.0 || off <= OFF_DIAGONAL_THRESHOLD * norm {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, n, p, q);
            }
        }
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]).then(i.cmp(&j)));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors = order
        .iter()
        .map(|&col| {
            let mut x: Vec<f64> = (0..n).map(|row| v[row * n + col]).collect();
            fix_sign(&mut x);
            x
        })
        .collect();
    Ok(Spectrum::new(values, vectors))
}

fn off_diagonal_mass(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Annihilates `a[p][q]` with a plane rotation and accumulates it into `v`.
fn rotate(a: &mut [f64], v: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp;
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq;
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;

    for k in 0..n {
        let vkp = v[k * n + p];
        let vkq = v[k * n + q];
        v[k * n + p] = c * vkp - s * vkq;
        v[k * n + q] = s * vkp + c * vkq;
    }
}

/// Makes the first component of largest magnitude positive.
fn fix_sign(x: &mut [f64]) {
    let mut idx = 0;
    for (i, xi) in x.iter().enumerate() {
        if xi.abs() > x[idx].abs() {
            idx = i;
        }
    }
    if x[idx] < 0.0 {
        x.iter_mut().for_each(|xi| *xi = -*xi);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let m = SymmetricMatrix::from_rows(&[vec![1.0, -1.0], vec![-1.0, 1.0]]).unwrap();
        let s = eigen_decompose(&m).unwrap();
        assert!((s.values()[0] - 2.0).abs() < 1e-14);
        assert!(s.values()[1].abs() < 1e-14);
        let x = s.vector(0);
        assert!(x[0] > 0.0 && (x[0] + x[1]).abs() < 1e-14);
    }

    #[test]
    fn diagonal_is_sorted_untouched() {
        let m = SymmetricMatrix::from_rows(&[
            vec![1.0, 0.0, 0.0],
            vec![0.0, 3.0, 0.0],
            vec![0.0, 0.0, 2.0],
        ])
        .unwrap();
        let s = eigen_decompose(&m).unwrap();
        assert_eq!(s.values(), &[3.0, 2.0, 1.0]);
        assert_eq!(s.vector(0), &[0.0, 1.0, 0.0]);
    }

    #[test]
    fn one_by_one() {
        let m = SymmetricMatrix::from_rows(&[vec![-4.5]]).unwrap();
        let s = eigen_decompose(&m).unwrap();
        assert_eq!(s.values(), &[-4.5]);
    }

    #[test]
    fn sign_convention() {
        let mut x = vec![0.1, -0.9, 0.9];
        fix_sign(&mut x);
        assert_eq!(x, vec![-0.1, 0.9, -0.9]);
    }
}
