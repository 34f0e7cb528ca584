//! Dense linear algebra over Z/2 on single-word vectors.
//!
//! A [`Gf2Vector`] is a subset of `{0, .., len-1}` stored as a `u64` bitmask
//! (bit `i` is coordinate `i`). A [`Gf2Matrix`] is an ordered list of such
//! rows. Column `j` of a matrix with at most 64 rows is also addressable as
//! an integer code `sum_k row_k[j] << k`, which for four rows is exactly the
//! `x1 + 2 x2 + 4 x3 + 8 x4` encoding used for characteristic matrices.

use std::fmt;
use std::ops::{Add, AddAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest rank whose row space we are willing to list element by element.
pub const ROW_SPACE_RANK_LIMIT: usize = 24;

#[inline]
pub(crate) fn low_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Bits {}

/// Indices of the set bits of `mask`.
#[inline]
pub fn bits(mask: u64) -> Bits {
    Bits(mask)
}

/// Bitmask with the given indices set.
pub fn mask_of<I: IntoIterator<Item = usize>>(indices: I) -> u64 {
    indices.into_iter().fold(0, |acc, i| acc | (1u64 << i))
}

#[inline]
pub(crate) fn parity(x: u64) -> bool {
    x.count_ones() & 1 == 1
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Gf2Vector {
    bits: u64,
    len: u8,
}

impl Gf2Vector {
    pub fn zeros(len: usize) -> Self {
        assert!((1..=64).contains(&len), "vector length {len} outside 1..=64");
        Gf2Vector {
            bits: 0,
            len: len as u8,
        }
    }

    pub fn ones(len: usize) -> Self {
        Gf2Vector {
            bits: low_mask(len),
            ..Self::zeros(len)
        }
    }

    /// Standard basis vector `e_i`.
    pub fn unit(len: usize, i: usize) -> Self {
        assert!(i < len);
        Gf2Vector {
            bits: 1 << i,
            ..Self::zeros(len)
        }
    }

    /// `(1, 0, 1, 0, ...)`: the even positions `0, 2, 4, ..` are set.
    pub fn alternating(len: usize) -> Self {
        Gf2Vector {
            bits: 0x5555_5555_5555_5555 & low_mask(len),
            ..Self::zeros(len)
        }
    }

    pub fn from_bits(bits: u64, len: usize) -> Result<Self> {
        if !(1..=64).contains(&len) {
            return Err(Error::Capacity {
                what: "vector length",
                limit: 64,
                found: len,
            });
        }
        if bits & !low_mask(len) != 0 {
            return Err(Error::DimensionMismatch {
                expected: len,
                found: 64 - bits.leading_zeros() as usize,
            });
        }
        Ok(Gf2Vector {
            bits,
            len: len as u8,
        })
    }

    pub fn from_support<I: IntoIterator<Item = usize>>(len: usize, support: I) -> Result<Self> {
        let mut bits = 0u64;
        for i in support {
            if i >= len {
                return Err(Error::VertexOutOfRange { vertex: i, m: len });
            }
            bits |= 1 << i;
        }
        Self::from_bits(bits, len)
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len());
        (self.bits >> i) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len());
        if value {
            self.bits |= 1 << i;
        } else {
            self.bits &= !(1 << i);
        }
    }

    pub fn support(&self) -> Vec<usize> {
        bits(self.bits).collect()
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Standard pairing `sum_i u_i v_i` in Z/2.
    #[inline]
    pub fn dot(&self, other: &Gf2Vector) -> bool {
        debug_assert_eq!(self.len, other.len);
        parity(self.bits & other.bits)
    }

    pub fn complement(&self) -> Self {
        Gf2Vector {
            bits: !self.bits & low_mask(self.len()),
            len: self.len,
        }
    }
}

impl Add for Gf2Vector {
    type Output = Gf2Vector;

    fn add(self, rhs: Gf2Vector) -> Gf2Vector {
        assert_eq!(self.len, rhs.len, "adding vectors of different length");
        Gf2Vector {
            bits: self.bits ^ rhs.bits,
            len: self.len,
        }
    }
}

impl AddAssign for Gf2Vector {
    fn add_assign(&mut self, rhs: Gf2Vector) {
        *self = *self + rhs;
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Vector({self})")
    }
}

impl fmt::Display for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Gf2Matrix {
    rows: Vec<Gf2Vector>,
    ncols: usize,
}

/// Reduced row echelon form of a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    /// The nonzero rows of the echelon form, ordered by pivot.
    pub matrix: Gf2Matrix,
    pub rank: usize,
    /// Pivot column of each row of `matrix`, strictly increasing.
    pub pivots: Vec<usize>,
}

impl Gf2Matrix {
    pub fn new(rows: Vec<Gf2Vector>, ncols: usize) -> Result<Self> {
        if !(1..=64).contains(&ncols) {
            return Err(Error::Capacity {
                what: "matrix columns",
                limit: 64,
                found: ncols,
            });
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch {
                expected: ncols,
                found: bad.len(),
            });
        }
        Ok(Gf2Matrix { rows, ncols })
    }

    pub fn from_row_bits(rows: &[u64], ncols: usize) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|&b| Gf2Vector::from_bits(b, ncols))
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows, ncols)
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Gf2Matrix {
            rows: vec![Gf2Vector::zeros(ncols); nrows],
            ncols,
        }
    }

    pub fn identity(n: usize) -> Self {
        Gf2Matrix {
            rows: (0..n).map(|i| Gf2Vector::unit(n, i)).collect(),
            ncols: n,
        }
    }

    /// Builds an `nrows x codes.len()` matrix whose column `j` has bit `k` of
    /// `codes[j]` in row `k`.
    pub fn from_column_codes(codes: &[u64], nrows: usize) -> Result<Self> {
        if nrows > 64 {
            return Err(Error::Capacity {
                what: "matrix rows",
                limit: 64,
                found: nrows,
            });
        }
        if let Some(&bad) = codes.iter().find(|&&c| c & !low_mask(nrows) != 0) {
            return Err(Error::InvalidInput(format!(
                "column code {bad} does not fit in {nrows} rows"
            )));
        }
        let ncols = codes.len();
        let rows = (0..nrows)
            .map(|k| {
                let b = codes
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (j, &c)| acc | (((c >> k) & 1) << j));
                Gf2Vector::from_bits(b, ncols)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows, ncols)
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Gf2Vector] {
        &self.rows
    }

    pub fn row(&self, k: usize) -> Gf2Vector {
        self.rows[k]
    }

    /// Integer code of column `j` (row `k` contributes bit `k`).
    #[inline]
    pub fn column(&self, j: usize) -> u64 {
        self.rows
            .iter()
            .enumerate()
            .fold(0, |acc, (k, r)| acc | (((r.bits() >> j) & 1) << k))
    }

    pub fn column_codes(&self) -> Vec<u64> {
        (0..self.ncols).map(|j| self.column(j)).collect()
    }

    pub fn rref(&self) -> Rref {
        let mut rows: Vec<u64> = self.rows.iter().map(|r| r.bits()).collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.ncols {
            let bit = 1u64 << col;
            let Some(p) = (rank..rows.len()).find(|&r| rows[r] & bit != 0) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot_row = rows[rank];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && *row & bit != 0 {
                    *row ^= pivot_row;
                }
            }
            pivots.push(col);
            rank += 1;
        }
        rows.truncate(rank);
        let matrix = Gf2Matrix {
            rows: rows
                .into_iter()
                .map(|b| Gf2Vector {
                    bits: b,
                    len: self.ncols as u8,
                })
                .collect(),
            ncols: self.ncols,
        };
        Rref {
            matrix,
            rank,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        rank_of(self.rows.iter().map(|r| r.bits()))
    }

    pub fn in_row_space(&self, u: &Gf2Vector) -> Result<bool> {
        if u.len() != self.ncols {
            return Err(Error::DimensionMismatch {
                expected: self.ncols,
                found: u.len(),
            });
        }
        Ok(self.rref().reduce(u.bits()) == 0)
    }

    /// Basis of `{v : M v = 0}`, one vector per non-pivot column.
    pub fn kernel_basis(&self) -> Vec<Gf2Vector> {
        let rref = self.rref();
        let pivot_mask = mask_of(rref.pivots.iter().copied());
        (0..self.ncols)
            .filter(|f| pivot_mask & (1 << f) == 0)
            .map(|f| {
                let mut v = 1u64 << f;
                for (row, &p) in rref.matrix.rows.iter().zip(&rref.pivots) {
                    if row.bits() & (1 << f) != 0 {
                        v |= 1 << p;
                    }
                }
                Gf2Vector {
                    bits: v,
                    len: self.ncols as u8,
                }
            })
            .collect()
    }

    /// `M v` as a bitmask over rows.
    pub fn apply(&self, v: &Gf2Vector) -> u64 {
        self.rows
            .iter()
            .enumerate()
            .fold(0, |acc, (k, r)| acc | ((parity(r.bits() & v.bits()) as u64) << k))
    }

    /// All `2^rank` elements of the row space, starting with zero.
    pub fn row_space(&self) -> Result<RowSpace> {
        let rref = self.rref();
        if rref.rank > ROW_SPACE_RANK_LIMIT {
            return Err(Error::Capacity {
                what: "row space rank",
                limit: ROW_SPACE_RANK_LIMIT,
                found: rref.rank,
            });
        }
        Ok(RowSpace {
            basis: rref.matrix.rows.iter().map(|r| r.bits()).collect(),
            len: self.ncols as u8,
            next: 0,
        })
    }

    pub fn block_diagonal(a: &Gf2Matrix, b: &Gf2Matrix) -> Result<Gf2Matrix> {
        let ncols = a.ncols + b.ncols;
        let top = a.rows.iter().map(|r| r.bits());
        let bottom = b.rows.iter().map(|r| r.bits() << a.ncols);
        let rows: Vec<u64> = top.chain(bottom).collect();
        Self::from_row_bits(&rows, ncols)
    }
}

impl Rref {
    /// Reduces `bits` against the echelon rows; zero iff it lies in the row space.
    pub fn reduce(&self, mut bits: u64) -> u64 {
        for (row, &p) in self.matrix.rows.iter().zip(&self.pivots) {
            if bits & (1 << p) != 0 {
                bits ^= row.bits();
            }
        }
        bits
    }
}

/// Rank of a family of bitmask vectors.
pub fn rank_of<I: IntoIterator<Item = u64>>(vectors: I) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for mut v in vectors {
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// True iff the vectors are linearly independent.
pub fn independent(vectors: &[u64]) -> bool {
    let mut basis = [0u64; 64];
    for &v in vectors {
        let mut v = v;
        while v != 0 {
            let top = 63 - v.leading_zeros() as usize;
            if basis[top] == 0 {
                basis[top] = v;
                break;
            }
            v ^= basis[top];
        }
        if v == 0 {
            return false;
        }
    }
    true
}

/// Row space enumeration in binary-counting order over the echelon basis.
#[derive(Clone, Debug)]
pub struct RowSpace {
    basis: Vec<u64>,
    len: u8,
    next: u64,
}

impl RowSpace {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

impl Iterator for RowSpace {
    type Item = Gf2Vector;

    fn next(&mut self) -> Option<Gf2Vector> {
        if self.next >> self.basis.len() != 0 {
            return None;
        }
        let bits = Bits(self.next).fold(0, |acc, i| acc ^ self.basis[i]);
        self.next += 1;
        Some(Gf2Vector {
            bits,
            len: self.len,
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (1usize << self.basis.len()) - self.next as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for RowSpace {}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Matrix {}x{} [", self.nrows(), self.ncols)?;
        for (k, r) in self.rows.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let line: Vec<&str> = (0..self.ncols)
                .map(|j| if r.get(j) { "1" } else { "0" })
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
