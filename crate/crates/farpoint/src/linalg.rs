//! Small dense linear algebra: Gaussian solves, determinants and hyperplane
//! normals at desk scale (d up to ~10, systems up to ~20 unknowns).

/// Solve `a x = b` by Gaussian elimination with partial pivoting.
/// Returns `None` when the matrix is singular to working precision.
pub fn solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = a.len();
    if n == 0 {
        return Some(vec![]);
    }
    debug_assert!(a.iter().all(|row| row.len() == n));
    let scale = a
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |m, &v| m.max(v.abs()))
        .max(1.0);
    for col in 0..n {
        let mut best = col;
        for r in col + 1..n {
            if a[r][col].abs() > a[best][col].abs() {
                best = r;
            }
        }
        if a[best][col].abs() <= scale * 1e-13 {
            return None;
        }
        a.swap(col, best);
        b.swap(col, best);
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            if f == 0.0 {
                continue;
            }
            for c in col..n {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for c in row + 1..n {
            acc -= a[row][c] * x[c];
        }
        x[row] = acc / a[row][row];
    }
    Some(x)
}

/// Determinant by LU with partial pivoting.
pub fn det(mut a: Vec<Vec<f64>>) -> f64 {
    let n = a.len();
    let mut sign = 1.0;
    let mut d = 1.0;
    for col in 0..n {
        let mut best = col;
        for r in col + 1..n {
            if a[r][col].abs() > a[best][col].abs() {
                best = r;
            }
        }
        if a[best][col] == 0.0 {
            return 0.0;
        }
        if best != col {
            a.swap(col, best);
            sign = -sign;
        }
        d *= a[col][col];
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            for c in col..n {
                a[r][c] -= f * a[col][c];
            }
        }
    }
    sign * d
}

/// Unit normal to the hyperplane spanned by `d-1` direction vectors in R^d,
/// via cofactor expansion (the generalized cross product). Returns `None`
/// when the directions are linearly dependent.
pub fn hyperplane_normal(dirs: &[Vec<f64>]) -> Option<Vec<f64>> {
    let d = dirs.first().map_or(0, |v| v.len());
    if dirs.len() + 1 != d {
        return None;
    }
    let mut normal = vec![0.0; d];
    for j in 0..d {
        let minor: Vec<Vec<f64>> = dirs
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let m = det(minor);
        normal[j] = if j % 2 == 0 { m } else { -m };
    }
    let len = normal.iter().map(|v| v * v).sum::<f64>().sqrt();
    let dir_scale = dirs
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |m, &v| m.max(v.abs()))
        .max(1.0);
    if len <= dir_scale.powi(d as i32 - 1) * 1e-10 {
        return None;
    }
    for v in &mut normal {
        *v /= len;
    }
    Some(normal)
}
