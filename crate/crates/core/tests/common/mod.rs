//! Test-only oracles. Nothing here calls the crate's solvers.
#![allow(dead_code)]

use ceva_core::{BaryPoint, ExactScalar};

pub fn q(s: &str) -> ExactScalar {
    s.parse().unwrap()
}

pub fn int(v: i64) -> ExactScalar {
    ExactScalar::from_int(v)
}

pub fn weights_point(ws: &[u32]) -> BaryPoint {
    BaryPoint::from_weights(ws.iter().map(|&w| int(w as i64)).collect()).unwrap()
}

#[derive(Debug, PartialEq, Eq)]
pub enum Solve {
    Unique(Vec<ExactScalar>),
    Inconsistent,
    Underdetermined,
}

/// Plain Gaussian elimination with back substitution on `a x = b`.
pub fn gauss(a: &[Vec<ExactScalar>], b: &[ExactScalar]) -> Solve {
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<ExactScalar>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut row = 0;
    let mut pivot_cols = Vec::new();
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        for r in row + 1..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &m[row][col];
            for c in col..=cols {
                let sub = &f * &m[row][c];
                m[r][c] = &m[r][c] - &sub;
            }
        }
        pivot_cols.push(col);
        row += 1;
    }
    if m[row..].iter().any(|r| !r[cols].is_zero()) {
        return Solve::Inconsistent;
    }
    if pivot_cols.len() < cols {
        return Solve::Underdetermined;
    }
    let mut x = vec![ExactScalar::zero(); cols];
    for (r, &c) in pivot_cols.iter().enumerate().rev() {
        let mut acc = m[r][cols].clone();
        for c2 in c + 1..cols {
            acc = acc - &m[r][c2] * &x[c2];
        }
        x[c] = acc / &m[r][c];
    }
    Solve::Unique(x)
}

/// Basic feasible solutions of `{a x = b, x >= 0}`: for every column subset,
/// solve with the other columns fixed at zero.
pub fn vertices(a: &[Vec<ExactScalar>], b: &[ExactScalar]) -> Vec<Vec<ExactScalar>> {
    let cols = a[0].len();
    let mut out: Vec<Vec<ExactScalar>> = Vec::new();
    for mask in 1u32..(1 << cols) {
        let picked: Vec<usize> = (0..cols).filter(|c| mask & (1 << c) != 0).collect();
        let sub: Vec<Vec<ExactScalar>> = a
            .iter()
            .map(|row| picked.iter().map(|&c| row[c].clone()).collect())
            .collect();
        if let Solve::Unique(xs) = gauss(&sub, b) {
            if xs.iter().all(|v| !v.is_negative()) {
                let mut x = vec![ExactScalar::zero(); cols];
                for (&c, v) in picked.iter().zip(xs) {
                    x[c] = v;
                }
                if !out.contains(&x) {
                    out.push(x);
                }
            }
        }
    }
    out
}

/// Feasibility of `{a x = b, x >= 0}` (bounded), or of its relative
/// interior with `x > 0` when `strict`: the vertex average is a relative
/// interior point, positive everywhere iff some feasible point is.
pub fn oracle_feasible(a: &[Vec<ExactScalar>], b: &[ExactScalar], strict: bool) -> bool {
    let vs = vertices(a, b);
    if vs.is_empty() {
        return false;
    }
    if !strict {
        return true;
    }
    let cols = a[0].len();
    (0..cols).all(|c| vs.iter().any(|v| v[c].is_positive()))
}
