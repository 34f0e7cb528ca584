//! Built-in complexes, characteristic matrices and sign vectors.
//!
//! Complex ids: `boundary-simplex-4`, `cross-polytope-4`,
//! `polygon-product-<m1>-<m2>`, `L-fig1`, `IxQ-fig1`, `lutz_m10_247880`,
//! `lutz_m10_247882`. Matrix ids: `example-5.5`, `mu-sec6`, `lambda-A.2`,
//! `lambda-IxQ`. Vector ids: `epsilon-sec6`. The Lutz labels are kept verbatim.

use serde::Serialize;

use crate::charmap::{is_characteristic, CharacteristicCheck};
use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};
use crate::simplicial::SimplicialComplex;
use crate::validate::validate_sphere_like;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CatalogItem {
    Complex(SimplicialComplex),
    Matrix {
        matrix: Gf2Matrix,
        /// Id of the complex the matrix is characteristic over.
        over: String,
    },
    Vector(Gf2Vector),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub id: String,
    pub description: String,
    pub item: CatalogItem,
}

const L_FIG1: [[usize; 3]; 16] = [
    [0, 6, 8], [0, 6, 9], [0, 7, 8], [0, 7, 9], [1, 2, 5], [1, 2, 6], [1, 3, 5], [1, 3, 7],
    [1, 6, 8], [1, 7, 8], [2, 4, 5], [2, 4, 6], [3, 4, 5], [3, 4, 7], [4, 6, 9], [4, 7, 9],
];

const LUTZ_247880: &str = "0123 0124 0135 0146 0156 0237 0247 0357 0468 0478 0568 0578 \
    1239 1249 1359 1469 1569 2379 2479 3579 4689 4789 5689 5789";

const LUTZ_247882: &str = "0123 0124 0135 0146 0156 0237 0247 0357 0467 0567 1238 1248 \
    1358 1468 1568 2379 2389 2479 2489 3579 3589 4679 4689 5679 5689";

const FIXED_COMPLEXES: [(&str, &str); 6] = [
    ("boundary-simplex-4", "boundary of the 4-simplex"),
    ("cross-polytope-4", "boundary of the 4-dimensional cross-polytope, dual to the 4-cube"),
    ("L-fig1", "flag 2-sphere on 10 vertices dual to a 3-polytope with 10 facets"),
    ("IxQ-fig1", "join of S^0 with L-fig1, dual to an interval times that 3-polytope"),
    ("lutz_m10_247880", "flag 3-sphere on 10 vertices from the Lutz census"),
    ("lutz_m10_247882", "3-sphere on 10 vertices with 25 facets from the Lutz census"),
];

const MATRICES: [(&str, &str, &str, &[u64], usize); 4] = [
    (
        "example-5.5",
        "non-factor-compatible map over the pentagon-square product",
        "polygon-product-5-4",
        &[1, 2, 1, 2, 7, 4, 8, 4, 8],
        4,
    ),
    ("mu-sec6", "3-colouring map over L-fig1", "L-fig1", &[1, 1, 4, 4, 1, 2, 2, 2, 4, 4], 3),
    (
        "lambda-A.2",
        "c-symplectic map over lutz_m10_247880",
        "lutz_m10_247880",
        &[1, 2, 4, 8, 14, 14, 4, 2, 8, 1],
        4,
    ),
    (
        "lambda-IxQ",
        "block product of the interval map with mu-sec6",
        "IxQ-fig1",
        &[1, 1, 2, 2, 8, 8, 2, 4, 4, 4, 8, 8],
        4,
    ),
];

fn compact_facets(text: &str) -> Vec<Vec<usize>> {
    text.split_whitespace()
        .map(|t| t.bytes().map(|b| (b - b'0') as usize).collect())
        .collect()
}

fn parse_polygon_product(id: &str) -> Option<(usize, usize)> {
    let rest = id.strip_prefix("polygon-product-")?;
    let (a, b) = rest.split_once('-')?;
    let (a, b) = (a.parse().ok()?, b.parse().ok()?);
    (a >= 3 && b >= 3 && a + b <= 64).then_some((a, b))
}

pub fn complex(id: &str) -> Result<SimplicialComplex> {
    if let Some((a, b)) = parse_polygon_product(id) {
        return SimplicialComplex::polygon_product_dual(a, b);
    }
    match id {
        "boundary-simplex-4" => SimplicialComplex::boundary_of_simplex(4),
        "cross-polytope-4" => SimplicialComplex::cross_polytope(4),
        "L-fig1" => SimplicialComplex::from_facets(10, &L_FIG1),
        "IxQ-fig1" => SimplicialComplex::boundary_of_simplex(1)?.join(&complex("L-fig1")?),
        "lutz_m10_247880" => SimplicialComplex::from_facets(10, &compact_facets(LUTZ_247880)),
        "lutz_m10_247882" => SimplicialComplex::from_facets(10, &compact_facets(LUTZ_247882)),
        _ => Err(Error::UnknownCatalogId(id.to_string())),
    }
}

pub fn matrix(id: &str) -> Result<Gf2Matrix> {
    match get(id)?.item {
        CatalogItem::Matrix { matrix, .. } => Ok(matrix),
        _ => Err(Error::UnknownCatalogId(format!("{id} (not a matrix)"))),
    }
}

pub fn vector(id: &str) -> Result<Gf2Vector> {
    match get(id)?.item {
        CatalogItem::Vector(v) => Ok(v),
        _ => Err(Error::UnknownCatalogId(format!("{id} (not a vector)"))),
    }
}

pub fn get(id: &str) -> Result<CatalogEntry> {
    if let Some((a, b)) = parse_polygon_product(id) {
        return Ok(CatalogEntry {
            id: id.to_string(),
            description: format!("join of the boundaries of a {a}-gon and a {b}-gon"),
            item: CatalogItem::Complex(complex(id)?),
        });
    }
    if let Some((_, desc)) = FIXED_COMPLEXES.iter().find(|(i, _)| *i == id) {
        return Ok(CatalogEntry {
            id: id.to_string(),
            description: desc.to_string(),
            item: CatalogItem::Complex(complex(id)?),
        });
    }
    if let Some((_, desc, over, codes, n)) = MATRICES.iter().find(|e| e.0 == id) {
        return Ok(CatalogEntry {
            id: id.to_string(),
            description: desc.to_string(),
            item: CatalogItem::Matrix {
                matrix: Gf2Matrix::from_column_codes(codes, *n)?,
                over: over.to_string(),
            },
        });
    }
    if id == "epsilon-sec6" {
        return Ok(CatalogEntry {
            id: id.to_string(),
            description: "sign vector of the fibering cocycle over L-fig1".to_string(),
            item: CatalogItem::Vector(Gf2Vector::from_support(10, [1, 6])?),
        });
    }
    Err(Error::UnknownCatalogId(id.to_string()))
}

/// Every fixed id plus a few polygon products.
pub fn list() -> Vec<CatalogEntry> {
    let mut ids: Vec<String> = FIXED_COMPLEXES.iter().map(|(i, _)| i.to_string()).collect();
    for (a, b) in [(3, 6), (4, 4), (4, 6), (5, 4), (6, 6)] {
        ids.push(format!("polygon-product-{a}-{b}"));
    }
    ids.extend(MATRICES.iter().map(|e| e.0.to_string()));
    ids.push("epsilon-sec6".to_string());
    ids.iter().map(|i| get(i).expect("listed ids resolve")).collect()
}

/// Validates every listed complex and checks each matrix over its complex.
pub fn self_test() -> Result<()> {
    for entry in list() {
        match &entry.item {
            CatalogItem::Complex(k) => {
                let dim = k.dim().max(1) as usize;
                let report = validate_sphere_like(k, dim);
                if !report.passed() {
                    let names: Vec<&str> = report.failures().iter().map(|c| c.name).collect();
                    return Err(Error::Inconsistent(format!(
                        "catalog complex {} fails {names:?}",
                        entry.id
                    )));
                }
            }
            CatalogItem::Matrix { matrix, over } => {
                let k = complex(over)?;
                if is_characteristic(&k, matrix)? != CharacteristicCheck::Characteristic {
                    return Err(Error::Inconsistent(format!(
                        "catalog matrix {} is not characteristic over {over}",
                        entry.id
                    )));
                }
            }
            CatalogItem::Vector(_) => {}
        }
    }
    Ok(())
}
