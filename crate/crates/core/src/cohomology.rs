//! Betti numbers of small covers and real moment-angle complexes.
//!
//! Rational cohomology splits over the row space of the characteristic
//! matrix: `b_i(M) = sum over omega in row(lambda) of b~_(i-1)(K_omega)`.
//! Mod-2 Betti numbers are the h-vector, and the squaring map on degree one is
//! computed in the face ring modulo the linear forms of the rows.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{bits, low_mask, Gf2Matrix, Gf2Vector};
use crate::homology::reduced_betti;
use crate::simplicial::{component_count, SimplicialComplex};

/// Reduced Betti numbers in degrees `-1, 0, 1, 2, 3`.
pub type ReducedBetti = [usize; 5];

/// Vertex limit for tables over every vertex subset.
pub const FULL_TABLE_LIMIT: usize = 14;
/// Vertex limit for the component-count shortcut for `b_1`.
pub const B1_FAST_LIMIT: usize = 26;

fn pad(v: &[usize]) -> ReducedBetti {
    let mut out = [0; 5];
    for (o, x) in out.iter_mut().zip(v) {
        *o = *x;
    }
    out
}

fn check_dim(k: &SimplicialComplex) -> Result<()> {
    if k.dim() > 3 {
        return Err(Error::Capacity {
            what: "complex dimension",
            limit: 3,
            found: k.dim() as usize,
        });
    }
    Ok(())
}

/// Faces of a complex grouped by size, for repeated full-subcomplex queries.
#[derive(Clone, Debug)]
pub struct FaceTable {
    faces: Vec<Vec<u64>>,
}

impl FaceTable {
    pub fn new(k: &SimplicialComplex) -> Self {
        FaceTable {
            faces: k.faces_by_size(),
        }
    }

    /// Reduced Betti numbers of the full subcomplex on `omega`.
    pub fn betti(&self, omega: u64) -> ReducedBetti {
        let sub: Vec<Vec<u64>> = self
            .faces
            .iter()
            .map(|level| level.iter().copied().filter(|f| f & !omega == 0).collect())
            .collect();
        pad(&reduced_betti(&sub))
    }
}

/// Reduced Betti numbers of every full subcomplex, indexed by vertex mask.
#[derive(Clone, Debug)]
pub struct FullSubcomplexBetti {
    m: usize,
    table: Vec<ReducedBetti>,
}

impl FullSubcomplexBetti {
    pub fn new(k: &SimplicialComplex) -> Result<Self> {
        check_dim(k)?;
        if k.m() > FULL_TABLE_LIMIT {
            return Err(Error::Capacity {
                what: "vertices for a full subcomplex table",
                limit: FULL_TABLE_LIMIT,
                found: k.m(),
            });
        }
        let faces = FaceTable::new(k);
        let table = (0u64..1 << k.m())
            .into_par_iter()
            .map(|w| faces.betti(w))
            .collect();
        Ok(FullSubcomplexBetti { m: k.m(), table })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn get(&self, omega: u64) -> ReducedBetti {
        self.table[omega as usize]
    }

    /// Sum over all subsets, i.e. the Betti numbers of the real moment-angle complex.
    pub fn total(&self) -> [u64; 5] {
        let mut out = [0u64; 5];
        for b in &self.table {
            for (o, x) in out.iter_mut().zip(b) {
                *o += *x as u64;
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HochsterEntry {
    pub omega: Gf2Vector,
    pub betti: ReducedBetti,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HochsterProfile {
    /// One entry per row-space element, in enumeration order.
    pub entries: Vec<HochsterEntry>,
    /// Rational Betti numbers `b_0..b_4` of the small cover.
    pub betti: [usize; 5],
}

impl HochsterProfile {
    pub fn entry(&self, omega: &Gf2Vector) -> Option<&HochsterEntry> {
        self.entries.iter().find(|e| e.omega == *omega)
    }

    /// Lines `omega=[..] betti=[..]` for every entry with nonzero homology.
    pub fn render_lines(&self) -> Vec<String> {
        self.entries
            .iter()
            .filter(|e| e.betti.iter().any(|&b| b > 0))
            .map(|e| {
                let sup: Vec<String> = e.omega.support().iter().map(ToString::to_string).collect();
                let b: Vec<String> = e.betti.iter().map(ToString::to_string).collect();
                format!("omega=[{}] betti=[{}]", sup.join(","), b.join(","))
            })
            .collect()
    }
}

pub fn hochster_profile(k: &SimplicialComplex, lambda: &Gf2Matrix) -> Result<HochsterProfile> {
    check_dim(k)?;
    if lambda.ncols() != k.m() {
        return Err(Error::DimensionMismatch {
            expected: k.m(),
            found: lambda.ncols(),
        });
    }
    let weights: Vec<Gf2Vector> = lambda.row_space()?.collect();
    let faces = FaceTable::new(k);
    let entries: Vec<HochsterEntry> = weights
        .par_iter()
        .map(|w| HochsterEntry {
            omega: *w,
            betti: faces.betti(w.bits()),
        })
        .collect();
    let mut betti = [0; 5];
    for e in &entries {
        for (b, x) in betti.iter_mut().zip(&e.betti) {
            *b += x;
        }
    }
    Ok(HochsterProfile { entries, betti })
}

/// Betti numbers `b_0..b_4` of the real moment-angle complex.
pub fn rz_betti(k: &SimplicialComplex) -> Result<[u64; 5]> {
    Ok(FullSubcomplexBetti::new(k)?.total())
}

/// `b_1` of the real moment-angle complex from component counts alone.
pub fn rz_b1(k: &SimplicialComplex) -> Result<u64> {
    if k.m() > B1_FAST_LIMIT {
        return Err(Error::Capacity {
            what: "vertices for the b1 shortcut",
            limit: B1_FAST_LIMIT,
            found: k.m(),
        });
    }
    let adj = k.adjacency();
    let total = (1u64..1 << k.m())
        .into_par_iter()
        .map(|w| component_count(&adj, w) as u64 - 1)
        .sum();
    Ok(total)
}

/// Mod-2 Betti numbers of any small cover over the complex: its h-vector.
pub fn mod2_betti(k: &SimplicialComplex) -> Result<Vec<i64>> {
    Ok(k.f_and_h_vector()?.1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EulerCharacteristic {
    /// Alternating sum of the h-vector.
    pub from_h_vector: i64,
    /// `f1 - 5 f0 + 16` from the vertex and edge counts of the complex.
    pub from_face_numbers: i64,
}

impl EulerCharacteristic {
    pub fn value(&self) -> i64 {
        self.from_h_vector
    }
}

pub fn euler_characteristic(k: &SimplicialComplex) -> Result<EulerCharacteristic> {
    if k.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: k.dim().max(0) as usize,
        });
    }
    let (f, h) = k.f_and_h_vector()?;
    let from_h_vector = h
        .iter()
        .enumerate()
        .map(|(i, x)| if i % 2 == 0 { *x } else { -x })
        .sum();
    let from_face_numbers = f[2] as i64 - 5 * f[1] as i64 + 16;
    if from_h_vector != from_face_numbers {
        return Err(Error::Inconsistent(format!(
            "Euler characteristic {from_h_vector} from the h-vector but {from_face_numbers} from face numbers"
        )));
    }
    Ok(EulerCharacteristic {
        from_h_vector,
        from_face_numbers,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SquaringRank {
    pub h1_dim: usize,
    pub h2_dim: usize,
    /// Rank of `x -> x^2` from degree one to degree two.
    pub rank: usize,
}

/// Degree-two slice of `Z2[v]/(I_K + J_lambda)` and the rank of squaring.
///
/// Pivot variables of the echelon form are rewritten as linear forms in the
/// free variables; missing edges then give quadratic relations. Missing faces
/// with three or more vertices only matter from degree three on.
pub fn squaring_rank(k: &SimplicialComplex, lambda: &Gf2Matrix) -> Result<SquaringRank> {
    let m = k.m();
    if lambda.ncols() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: lambda.ncols(),
        });
    }
    let (_, h) = k.f_and_h_vector()?;
    if h.len() != lambda.nrows() + 1 {
        return Err(Error::DimensionMismatch {
            expected: h.len() - 1,
            found: lambda.nrows(),
        });
    }
    let rref = lambda.rref();
    let pivot_mask = rref.pivots.iter().fold(0u64, |a, &p| a | (1 << p));
    let free: Vec<usize> = (0..m).filter(|j| pivot_mask & (1 << j) == 0).collect();
    let r = free.len();
    let mut free_index = vec![usize::MAX; m];
    for (t, &f) in free.iter().enumerate() {
        free_index[f] = t;
    }
    let mut lin = vec![0u64; m];
    for &f in &free {
        lin[f] = 1 << free_index[f];
    }
    for (row, &p) in rref.matrix.rows().iter().zip(&rref.pivots) {
        lin[p] = bits(row.bits() & !pivot_mask).fold(0, |a, f| a | (1 << free_index[f]));
    }

    let width = r * (r + 1) / 2;
    let words = width.div_ceil(64).max(1);
    // monomial x_a x_b with a <= b; rows before a hold r, r-1, .., r-a+1 entries
    let index = |a: usize, b: usize| -> usize {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        a * (2 * r + 1 - a) / 2 + (b - a)
    };

    let adj = k.adjacency();
    let mut relations: Vec<Vec<u64>> = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if adj[i] & (1 << j) != 0 {
                continue;
            }
            let mut row = vec![0u64; words];
            for s in bits(lin[i]) {
                for t in bits(lin[j]) {
                    let x = index(s, t);
                    row[x / 64] ^= 1 << (x % 64);
                }
            }
            relations.push(row);
        }
    }
    let rel_rank = wide_rank(relations.clone());
    let mut with_squares = relations;
    for t in 0..r {
        let mut row = vec![0u64; words];
        let x = index(t, t);
        row[x / 64] ^= 1 << (x % 64);
        with_squares.push(row);
    }
    let rank = wide_rank(with_squares) - rel_rank;
    let out = SquaringRank {
        h1_dim: r,
        h2_dim: width - rel_rank,
        rank,
    };
    if out.h1_dim as i64 != h[1] || out.h2_dim as i64 != h[2] {
        return Err(Error::Inconsistent(format!(
            "degree one and two dimensions ({}, {}) differ from h-vector ({}, {})",
            out.h1_dim, out.h2_dim, h[1], h[2]
        )));
    }
    Ok(out)
}

/// Rank over Z/2 of rows stored as little-endian word vectors.
pub fn wide_rank(mut rows: Vec<Vec<u64>>) -> usize {
    let mut rank = 0;
    let words = rows.first().map_or(0, Vec::len);
    for col in 0..words * 64 {
        let (w, b) = (col / 64, 1u64 << (col % 64));
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][w] & b != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[w] & b != 0 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Vertex mask of all `m` vertices.
pub fn full_weight(m: usize) -> Gf2Vector {
    Gf2Vector::from_bits(low_mask(m), m).expect("m in range")
}
