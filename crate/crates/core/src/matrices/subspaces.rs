//! Brute-force count of k-dimensional subspaces of GF(p)^n.
//!
//! Independent of every q-analog routine in the crate: it walks all
//! k-element sets of nonzero vectors, keeps the linearly independent ones,
//! and collects the reduced row-echelon form of each span in a set.

use std::collections::HashSet;

use crate::error::{Error, Result};

pub const MAX_SUBSPACE_DIM: usize = 4;

type Vector = Vec<u8>;

fn decode(mut code: u32, p: u8, n: usize) -> Vector {
    (0..n)
        .map(|_| {
            let d = (code % p as u32) as u8;
            code /= p as u32;
            d
        })
        .collect()
}

fn inverse(a: u8, p: u8) -> u8 {
    (1..p).find(|&b| (a as u32 * b as u32) % p as u32 == 1).expect("nonzero element of a prime field")
}

/// Reduced row-echelon form; zero rows dropped. The rank is the row count.
fn rref(mut rows: Vec<Vector>, p: u8) -> Vec<Vector> {
    let n = rows.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..n {
        let Some(r) = (pivot_row..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(pivot_row, r);
        let inv = inverse(rows[pivot_row][col], p);
        for x in rows[pivot_row].iter_mut() {
            *x = ((*x as u32 * inv as u32) % p as u32) as u8;
        }
        let pivot = rows[pivot_row].clone();
        for (other, row) in rows.iter_mut().enumerate() {
            let factor = row[col];
            if other == pivot_row || factor == 0 {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(&pivot) {
                let sub = (factor as u32 * y as u32) % p as u32;
                *x = ((*x as u32 + p as u32 - sub) % p as u32) as u8;
            }
        }
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
    rows
}

/// Number of `k`-dimensional subspaces of the `n`-dimensional space over
/// the field with `qfield` elements, by exhaustive enumeration.
pub fn count_subspaces(qfield: u32, n: usize, k: usize) -> Result<u64> {
    if !matches!(qfield, 2 | 3) {
        return Err(Error::UnsupportedField(qfield));
    }
    if n > MAX_SUBSPACE_DIM {
        return Err(Error::SizeTooLarge { n, limit: MAX_SUBSPACE_DIM });
    }
    if k > n {
        return Ok(0);
    }
    if k == 0 {
        return Ok(1);
    }
    let p = qfield as u8;
    let vectors: Vec<Vector> = (1..qfield.pow(n as u32)).map(|c| decode(c, p, n)).collect();
    let mut spans: HashSet<Vec<Vector>> = HashSet::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    extend(&vectors, p, k, 0, &mut chosen, &mut spans);
    Ok(spans.len() as u64)
}

/// Extends `chosen` by strictly increasing indices; prunes as soon as the
/// chosen vectors become dependent.
fn extend(
    vectors: &[Vector],
    p: u8,
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    spans: &mut HashSet<Vec<Vector>>,
) {
    if chosen.len() == k {
        let basis = rref(chosen.iter().map(|&i| vectors[i].clone()).collect(), p);
        spans.insert(basis);
        return;
    }
    for i in start..vectors.len() {
        chosen.push(i);
        let rows: Vec<Vector> = chosen.iter().map(|&c| vectors[c].clone()).collect();
        if rref(rows, p).len() == chosen.len() {
            extend(vectors, p, k, i + 1, chosen, spans);
        }
        chosen.pop();
    }
}
