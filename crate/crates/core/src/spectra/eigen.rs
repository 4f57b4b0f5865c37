use crate::par;

/// Eigenvalues of the symmetric `n x n` matrix stored row-major in `a`,
/// sorted in decreasing order.
///
/// Householder reduction to tridiagonal form followed by implicit QL with
/// Wilkinson shifts. Only the lower triangle is read.
pub fn symmetric_eigenvalues(mut a: Vec<f64>, n: usize) -> Vec<f64> {
    assert_eq!(a.len(), n * n, "matrix must be n x n");
    for i in 0..n {
        for j in 0..i {
            a[j * n + i] = a[i * n + j];
        }
    }
    let (d, e) = tridiagonalize(&mut a, n);
    let mut vals = tridiagonal_eigenvalues(d, e);
    vals.sort_by(|x, y| y.total_cmp(x));
    vals
}

/// Returns the diagonal and the subdiagonal (`e[i]` couples `i` and `i + 1`).
fn tridiagonalize(a: &mut [f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    if n == 0 {
        return (d, e);
    }
    for k in 0..n.saturating_sub(2) {
        d[k] = a[k * n + k];
        let x = &a[k * n + k + 1..(k + 1) * n];
        let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            e[k] = 0.0;
            continue;
        }
        let alpha = if x[0] > 0.0 { -norm } else { norm };
        let mut v = x.to_vec();
        v[0] -= alpha;
        let vnorm = v.iter().map(|t| t * t).sum::<f64>().sqrt();
        e[k] = alpha;
        if vnorm == 0.0 {
            continue;
        }
        v.iter_mut().for_each(|t| *t /= vnorm);

        // Reflect the trailing block: B <- H B H with H = I - 2 v v^T.
        let off = k + 1;
        let m = n - off;
        let block = &a[off * n..];
        let p: Vec<f64> = par::map_collect(m, |i| {
            let row = &block[i * n + off..i * n + n];
            row.iter().zip(&v).map(|(r, vi)| r * vi).sum()
        });
        let kappa: f64 = v.iter().zip(&p).map(|(a, b)| a * b).sum();
        let w: Vec<f64> = p.iter().zip(&v).map(|(pi, vi)| pi - kappa * vi).collect();
        par::for_each_row(&mut a[off * n..], n, |i, row| {
            let (vi, wi) = (v[i], w[i]);
            for (j, x) in row[off..].iter_mut().enumerate() {
                *x -= 2.0 * (vi * w[j] + wi * v[j]);
            }
        });
    }
    if n >= 2 {
        d[n - 2] = a[(n - 2) * n + n - 2];
        e[n - 2] = a[(n - 1) * n + n - 2];
    }
    d[n - 1] = a[n * n - 1];
    (d, e)
}

/// Implicit QL iteration on a symmetric tridiagonal matrix.
fn tridiagonal_eigenvalues(mut d: Vec<f64>, mut e: Vec<f64>) -> Vec<f64> {
    let n = d.len();
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            assert!(iterations <= 200, "QL iteration failed to converge");
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut deflated = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_matrices() {
        assert!(symmetric_eigenvalues(vec![], 0).is_empty());
        assert_eq!(symmetric_eigenvalues(vec![4.0], 1), vec![4.0]);
        let vals = symmetric_eigenvalues(vec![2.0, 1.0, 1.0, 2.0], 2);
        assert!((vals[0] - 3.0).abs() < 1e-12 && (vals[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn complete_graph() {
        let n = 6;
        let a: Vec<f64> = (0..n * n).map(|i| if i / n == i % n { 0.0 } else { 1.0 }).collect();
        let vals = symmetric_eigenvalues(a, n);
        assert!((vals[0] - 5.0).abs() < 1e-12);
        assert!(vals[1..].iter().all(|v| (v + 1.0).abs() < 1e-12));
    }

    #[test]
    fn diagonal_input() {
        let n = 4;
        let mut a = vec![0.0; 16];
        for (i, v) in [3.0, -1.0, 7.0, 0.5].iter().enumerate() {
            a[i * n + i] = *v;
        }
        assert_eq!(symmetric_eigenvalues(a, n), vec![7.0, 3.0, 0.5, -1.0]);
    }
}
