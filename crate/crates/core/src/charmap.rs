//! Characteristic maps: an `n x m` matrix over Z/2 attached to a complex on
//! `m` vertices whose columns are independent on every facet.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{bits, independent, Gf2Matrix, Gf2Vector};
use crate::simplicial::SimplicialComplex;

/// Outcome of the nonsingularity test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CharacteristicCheck {
    Characteristic,
    ZeroColumn(usize),
    /// Vertices of the first facet whose columns are dependent.
    DependentFacet(Vec<usize>),
}

impl CharacteristicCheck {
    pub fn is_ok(&self) -> bool {
        matches!(self, CharacteristicCheck::Characteristic)
    }
}

pub fn is_characteristic(k: &SimplicialComplex, lambda: &Gf2Matrix) -> Result<CharacteristicCheck> {
    if lambda.ncols() != k.m() {
        return Err(Error::DimensionMismatch {
            expected: k.m(),
            found: lambda.ncols(),
        });
    }
    let codes = lambda.column_codes();
    if let Some(j) = codes.iter().position(|&c| c == 0) {
        return Ok(CharacteristicCheck::ZeroColumn(j));
    }
    let mut cols = Vec::with_capacity(8);
    for &f in k.facets() {
        cols.clear();
        cols.extend(bits(f).map(|v| codes[v]));
        if !independent(&cols) {
            return Ok(CharacteristicCheck::DependentFacet(bits(f).collect()));
        }
    }
    Ok(CharacteristicCheck::Characteristic)
}

/// Representative of the row-operation class: the reduced row echelon form.
pub fn dj_canonical(lambda: &Gf2Matrix) -> Result<Gf2Matrix> {
    let r = lambda.rref();
    if r.rank != lambda.nrows() {
        return Err(Error::InvalidCharacteristicMap(format!(
            "rank {} is smaller than the number of rows {}",
            r.rank,
            lambda.nrows()
        )));
    }
    Ok(r.matrix)
}

/// The all-one vector lies in the row space.
pub fn is_orientable(lambda: &Gf2Matrix) -> bool {
    lambda
        .in_row_space(&Gf2Vector::ones(lambda.ncols()))
        .expect("lengths agree by construction")
}

/// A complex together with a verified characteristic matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicMap {
    complex: SimplicialComplex,
    matrix: Gf2Matrix,
}

impl CharacteristicMap {
    pub fn new(complex: SimplicialComplex, matrix: Gf2Matrix) -> Result<Self> {
        match is_characteristic(&complex, &matrix)? {
            CharacteristicCheck::Characteristic => Ok(CharacteristicMap { complex, matrix }),
            CharacteristicCheck::ZeroColumn(j) => Err(Error::InvalidCharacteristicMap(format!(
                "column {j} is zero"
            ))),
            CharacteristicCheck::DependentFacet(f) => Err(Error::InvalidCharacteristicMap(format!(
                "columns on facet {f:?} are dependent"
            ))),
        }
    }

    pub fn from_codes(complex: SimplicialComplex, codes: &[u64], n: usize) -> Result<Self> {
        Self::new(complex, Gf2Matrix::from_column_codes(codes, n)?)
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn matrix(&self) -> &Gf2Matrix {
        &self.matrix
    }

    pub fn n(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn m(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn is_orientable(&self) -> bool {
        is_orientable(&self.matrix)
    }

    pub fn canonical(&self) -> Result<CharacteristicMap> {
        Ok(CharacteristicMap {
            complex: self.complex.clone(),
            matrix: dj_canonical(&self.matrix)?,
        })
    }

    /// Block-diagonal map over the join of the two complexes.
    pub fn block_product(&self, other: &CharacteristicMap) -> Result<CharacteristicMap> {
        let complex = self.complex.join(&other.complex)?;
        let matrix = Gf2Matrix::block_diagonal(&self.matrix, &other.matrix)?;
        CharacteristicMap::new(complex, matrix)
    }
}

/// The four-row map with rows `(1|0)`, `(eps|0)`, `(0|1)`, `(beta|eps)` over the
/// join of an `m1`-gon and an `m2`-gon, where `eps = (1,0,1,0,..)`.
pub fn normal_form_lambda_beta(m1: usize, m2: usize, beta: &Gf2Vector) -> Result<CharacteristicMap> {
    if m1 % 2 == 1 || m2 % 2 == 1 || m1 < 4 || m2 < 4 {
        return Err(Error::OddFactor(m1, m2));
    }
    if beta.len() != m1 {
        return Err(Error::DimensionMismatch {
            expected: m1,
            found: beta.len(),
        });
    }
    let m = m1 + m2;
    let ones1 = Gf2Vector::ones(m1).bits();
    let eps1 = Gf2Vector::alternating(m1).bits();
    let ones2 = Gf2Vector::ones(m2).bits() << m1;
    let eps2 = Gf2Vector::alternating(m2).bits() << m1;
    let matrix = Gf2Matrix::from_row_bits(&[ones1, eps1, ones2, beta.bits() | eps2], m)?;
    CharacteristicMap::new(SimplicialComplex::polygon_product_dual(m1, m2)?, matrix)
}
