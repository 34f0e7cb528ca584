//! Exact rational homology of small simplicial complexes.
//!
//! Boundary ranks are computed by fraction-free elimination on sparse integer
//! rows. Rows are divided by their content after every step, so entries stay
//! tiny on the complexes met here; an overflow of `i64` restarts the rank
//! computation on big integers.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::gf2::bits;
use crate::simplicial::component_count;

type SparseRow<T> = Vec<(usize, T)>;

/// Reduced Betti numbers `(b~_-1, .., b~_top)` from faces grouped by vertex count.
pub fn reduced_betti(faces_by_size: &[Vec<u64>]) -> Vec<usize> {
    let top = faces_by_size.len();
    let f: Vec<usize> = faces_by_size.iter().map(Vec::len).collect();
    // rank[k]: rank of the boundary from faces with k vertices to faces with k - 1
    let mut rank = vec![0usize; top + 1];
    if top > 1 {
        rank[1] = usize::from(f[1] > 0);
    }
    if top > 2 {
        let vertices = faces_by_size[1].iter().fold(0u64, |a, v| a | v);
        let mut adj = vec![0u64; 64];
        for &e in &faces_by_size[2] {
            let a = e.trailing_zeros() as usize;
            let b = 63 - e.leading_zeros() as usize;
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        rank[2] = f[1] - component_count(&adj, vertices);
    }
    for k in 3..top {
        rank[k] = boundary_rank(&faces_by_size[k], &faces_by_size[k - 1]);
    }
    (0..top).map(|k| f[k] - rank[k] - rank[k + 1]).collect()
}

/// Rank over Q of the simplicial boundary map from `faces` to `lower`.
pub fn boundary_rank(faces: &[u64], lower: &[u64]) -> usize {
    if faces.is_empty() || lower.is_empty() {
        return 0;
    }
    let index: HashMap<u64, usize> = lower.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let rows: Vec<SparseRow<i64>> = faces
        .iter()
        .map(|&s| {
            let mut row: SparseRow<i64> = bits(s)
                .enumerate()
                .map(|(pos, v)| {
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    (index[&(s & !(1 << v))], sign)
                })
                .collect();
            row.sort_unstable_by_key(|e| e.0);
            row
        })
        .collect();
    match rank_i64(&rows) {
        Some(r) => r,
        None => rank_big(&rows),
    }
}

/// Rank over Q of integer sparse rows; `None` on `i64` overflow.
pub fn rank_i64(rows: &[SparseRow<i64>]) -> Option<usize> {
    let mut pivots: HashMap<usize, SparseRow<i64>> = HashMap::new();
    for row in rows {
        let mut v = row.clone();
        while let Some(&(lead, a)) = v.first() {
            let Some(p) = pivots.get(&lead) else {
                pivots.insert(lead, v);
                break;
            };
            let b = p[0].1;
            v = combine_i64(&v, b, p, a)?;
        }
    }
    Some(pivots.len())
}

// b*v - a*p, divided by the content of the result
fn combine_i64(v: &SparseRow<i64>, b: i64, p: &SparseRow<i64>, a: i64) -> Option<SparseRow<i64>> {
    let g = a.gcd(&b);
    let (a, b) = (a / g, b / g);
    let mut out = Vec::with_capacity(v.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < p.len() {
        let (col, val) = match (v.get(i), p.get(j)) {
            (Some(&(cv, x)), Some(&(cp, y))) if cv == cp => {
                i += 1;
                j += 1;
                (cv, b.checked_mul(x)?.checked_sub(a.checked_mul(y)?)?)
            }
            (Some(&(cv, x)), Some(&(cp, _))) if cv < cp => {
                i += 1;
                (cv, b.checked_mul(x)?)
            }
            (Some(&(cv, x)), None) => {
                i += 1;
                (cv, b.checked_mul(x)?)
            }
            (_, Some(&(cp, y))) => {
                j += 1;
                (cp, a.checked_mul(y)?.checked_neg()?)
            }
            (None, None) => unreachable!(),
        };
        if val != 0 {
            out.push((col, val));
        }
    }
    let content = out.iter().fold(0i64, |acc, e| acc.gcd(&e.1));
    if content > 1 {
        for e in &mut out {
            e.1 /= content;
        }
    }
    Some(out)
}

fn rank_big(rows: &[SparseRow<i64>]) -> usize {
    let mut pivots: HashMap<usize, SparseRow<BigInt>> = HashMap::new();
    for row in rows {
        let mut v: SparseRow<BigInt> = row.iter().map(|&(c, x)| (c, BigInt::from(x))).collect();
        while let Some((lead, a)) = v.first().cloned() {
            let Some(p) = pivots.get(&lead) else {
                pivots.insert(lead, v);
                break;
            };
            let b = p[0].1.clone();
            let g = a.gcd(&b);
            let (a, b) = (&a / &g, &b / &g);
            let mut acc: std::collections::BTreeMap<usize, BigInt> = std::collections::BTreeMap::new();
            for (c, x) in &v {
                *acc.entry(*c).or_insert_with(BigInt::zero) += &b * x;
            }
            for (c, y) in p {
                *acc.entry(*c).or_insert_with(BigInt::zero) -= &a * y;
            }
            let mut next: SparseRow<BigInt> = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
            let content = next.iter().fold(BigInt::zero(), |g, e| g.gcd(&e.1));
            if content.abs() > BigInt::from(1) {
                for e in &mut next {
                    e.1 = &e.1 / &content;
                }
            }
            v = next;
        }
    }
    pivots.len()
}
