//! Circle-fibering certificates for 3-dimensional small covers over flag 2-spheres.
//!
//! Over a flag 2-sphere `L` with a 3-row map `mu` and a sign vector `eps`, the
//! affine 1-cochain on the cubical quotient skeleton assigns slope
//! `c(g, i) = k * (-1)^(<mu_i, g> + eps_i)` to the edge leaving `g` in direction
//! `i`. When every column of `mu` has odd weight and adjacent columns are
//! orthogonal, this is a cocycle. Connected positive and negative links at
//! every quotient vertex then give a fibering over the circle, and the
//! covering degree is read off from the image of the cocycle.

use std::collections::VecDeque;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::charmap::{is_characteristic, is_orientable};
use crate::error::{Error, Result};
use crate::gf2::{bits, mask_of, parity, Gf2Matrix, Gf2Vector};
use crate::obstructions::{
    symplectic_verdict_with, IntervalCertificate, ObstructionReport, VerdictOptions,
};
use crate::simplicial::SimplicialComplex;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineCocycle {
    mu_codes: Vec<u64>,
    n: usize,
    epsilon: Gf2Vector,
    magnitude: i64,
}

impl AffineCocycle {
    pub fn new(mu: &Gf2Matrix, epsilon: &Gf2Vector) -> Result<Self> {
        if epsilon.len() != mu.ncols() {
            return Err(Error::DimensionMismatch {
                expected: mu.ncols(),
                found: epsilon.len(),
            });
        }
        Ok(AffineCocycle {
            mu_codes: mu.column_codes(),
            n: mu.nrows(),
            epsilon: *epsilon,
            magnitude: 1,
        })
    }

    pub fn with_magnitude(mut self, k: i64) -> Self {
        self.magnitude = k;
        self
    }

    pub fn magnitude(&self) -> i64 {
        self.magnitude
    }

    pub fn epsilon(&self) -> &Gf2Vector {
        &self.epsilon
    }

    /// Value on the edge leaving quotient vertex `g` in direction `i`.
    pub fn slope(&self, g: u64, i: usize) -> i64 {
        let flip = parity(self.mu_codes[i] & g) ^ self.epsilon.get(i);
        if flip {
            -self.magnitude
        } else {
            self.magnitude
        }
    }

    /// Value of the closed loop leaving `g` in direction `i` and returning in
    /// direction `j`, for two vertices with equal columns.
    pub fn two_cycle_value(&self, g: u64, i: usize, j: usize) -> Result<i64> {
        if self.mu_codes[i] != self.mu_codes[j] {
            return Err(Error::InvalidInput(format!(
                "directions {i} and {j} have different columns"
            )));
        }
        let h = g ^ self.mu_codes[i];
        Ok(self.slope(g, i) + self.slope(h, j))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SkeletonEdge {
    pub from: u64,
    pub to: u64,
    pub direction: usize,
}

/// 1-skeleton and 2-cells of the cubical quotient over `Z2^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CubicalSkeleton {
    pub n: usize,
    pub edges: Vec<SkeletonEdge>,
    /// `(g, i, j)` for each edge `{i, j}` of `L` and each `g`.
    pub squares: Vec<(u64, usize, usize)>,
    mu_codes: Vec<u64>,
}

impl CubicalSkeleton {
    pub fn new(l: &SimplicialComplex, mu: &Gf2Matrix) -> Result<Self> {
        if mu.ncols() != l.m() {
            return Err(Error::DimensionMismatch {
                expected: l.m(),
                found: mu.ncols(),
            });
        }
        let n = mu.nrows();
        if n > 20 {
            return Err(Error::Capacity {
                what: "quotient rank",
                limit: 20,
                found: n,
            });
        }
        if mu.rank() != n {
            return Err(Error::InvalidCharacteristicMap(
                "columns do not span, the quotient skeleton is disconnected".into(),
            ));
        }
        let codes = mu.column_codes();
        let mut edges = Vec::new();
        for (i, &c) in codes.iter().enumerate() {
            for g in 0u64..1 << n {
                if g < g ^ c {
                    edges.push(SkeletonEdge {
                        from: g,
                        to: g ^ c,
                        direction: i,
                    });
                }
            }
        }
        let mut squares = Vec::new();
        for e in l.faces_of_size(2) {
            let ij: Vec<usize> = bits(e).collect();
            for g in 0u64..1 << n {
                squares.push((g, ij[0], ij[1]));
            }
        }
        Ok(CubicalSkeleton {
            n,
            edges,
            squares,
            mu_codes: codes,
        })
    }

    pub fn vertex_count(&self) -> usize {
        1 << self.n
    }

    /// Squares on which the cochain fails the cocycle condition.
    pub fn cocycle_defects(&self, c: &AffineCocycle) -> usize {
        self.squares
            .iter()
            .filter(|&&(g, i, j)| {
                let (mi, mj) = (self.mu_codes[i], self.mu_codes[j]);
                c.slope(g, i) + c.slope(g ^ mi, j) != c.slope(g, j) + c.slope(g ^ mj, i)
            })
            .count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum AffineFailure {
    EvenColumn(usize),
    NonOrthogonalEdge(usize, usize),
}

impl fmt::Display for AffineFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffineFailure::EvenColumn(i) => write!(f, "column {i} has even weight"),
            AffineFailure::NonOrthogonalEdge(i, j) => {
                write!(f, "columns {i} and {j} span an edge but are not orthogonal")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineCheck {
    pub ok: bool,
    pub failure: Option<AffineFailure>,
}

/// Odd column weights and orthogonal columns along edges of `L`.
pub fn check_affine(l: &SimplicialComplex, mu: &Gf2Matrix) -> AffineCheck {
    let codes = mu.column_codes();
    let failure = codes
        .iter()
        .position(|&c| !parity(c))
        .map(AffineFailure::EvenColumn)
        .or_else(|| {
            l.faces_of_size(2).into_iter().find_map(|e| {
                let ij: Vec<usize> = bits(e).collect();
                parity(codes[ij[0]] & codes[ij[1]]).then(|| AffineFailure::NonOrthogonalEdge(ij[0], ij[1]))
            })
        });
    AffineCheck {
        ok: failure.is_none(),
        failure,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkRow {
    pub g: u64,
    pub positive: Vec<usize>,
    pub negative: Vec<usize>,
    pub positive_connected: bool,
    pub negative_connected: bool,
}

impl LinkRow {
    pub fn ok(&self) -> bool {
        !self.positive.is_empty()
            && !self.negative.is_empty()
            && self.positive_connected
            && self.negative_connected
    }
}

/// Positive and negative vertex sets at each quotient vertex.
pub fn links_table(l: &SimplicialComplex, cocycle: &AffineCocycle) -> Vec<LinkRow> {
    let adj = l.adjacency();
    let connected = |s: &[usize]| {
        !s.is_empty() && crate::simplicial::component_count(&adj, mask_of(s.iter().copied())) == 1
    };
    (0u64..1 << cocycle.n)
        .map(|g| {
            let (positive, negative): (Vec<usize>, Vec<usize>) =
                (0..l.m()).partition(|&i| cocycle.slope(g, i) > 0);
            LinkRow {
                g,
                positive_connected: connected(&positive),
                negative_connected: connected(&negative),
                positive,
                negative,
            }
        })
        .collect()
}

pub fn render_links_table(rows: &[LinkRow]) -> String {
    let list = |s: &[usize]| s.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
    let mut out = String::new();
    for r in rows {
        out.push_str(&format!("{}: {} | {}\n", r.g, list(&r.positive), list(&r.negative)));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TreeStrategy {
    BreadthFirst,
    DepthFirst,
}

/// Positive generator of the image of the cocycle on the fundamental group.
pub fn cocycle_image_divisor(l: &SimplicialComplex, mu: &Gf2Matrix, cocycle: &AffineCocycle) -> Result<u64> {
    let skeleton = CubicalSkeleton::new(l, mu)?;
    cocycle_image_divisor_with(&skeleton, cocycle, TreeStrategy::BreadthFirst)
}

pub fn cocycle_image_divisor_with(
    skeleton: &CubicalSkeleton,
    cocycle: &AffineCocycle,
    strategy: TreeStrategy,
) -> Result<u64> {
    let nv = skeleton.vertex_count();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for (e, edge) in skeleton.edges.iter().enumerate() {
        incident[edge.from as usize].push(e);
        incident[edge.to as usize].push(e);
    }
    let value = |e: &SkeletonEdge| cocycle.slope(e.from, e.direction);

    let mut potential: Vec<Option<i64>> = vec![None; nv];
    let mut tree = vec![false; skeleton.edges.len()];
    potential[0] = Some(0);
    let mut frontier = VecDeque::from([0usize]);
    while let Some(u) = match strategy {
        TreeStrategy::BreadthFirst => frontier.pop_front(),
        TreeStrategy::DepthFirst => frontier.pop_back(),
    } {
        let pu = potential[u].expect("visited");
        for &e in &incident[u] {
            let edge = &skeleton.edges[e];
            let (v, pv) = if edge.from as usize == u {
                (edge.to as usize, pu + value(edge))
            } else {
                (edge.from as usize, pu - value(edge))
            };
            if potential[v].is_none() {
                potential[v] = Some(pv);
                tree[e] = true;
                frontier.push_back(v);
            }
        }
    }
    if potential.iter().any(Option::is_none) {
        return Err(Error::InvalidCharacteristicMap("quotient skeleton is disconnected".into()));
    }
    let d = skeleton
        .edges
        .iter()
        .zip(&tree)
        .filter(|(_, &t)| !t)
        .map(|(e, _)| value(e) + potential[e.from as usize].unwrap() - potential[e.to as usize].unwrap())
        .fold(0i64, |acc, x| acc.gcd(&x));
    if d == 0 {
        return Err(Error::DegenerateCocycle);
    }
    Ok(d.unsigned_abs())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum FiberingVerdict {
    Fibers { divisor: u64 },
    Inconclusive(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberingCertificate {
    pub affine: Option<AffineCheck>,
    pub links: Vec<LinkRow>,
    pub divisor: Option<u64>,
    pub verdict: FiberingVerdict,
}

impl FiberingCertificate {
    fn inconclusive(msg: impl Into<String>) -> Self {
        FiberingCertificate {
            affine: None,
            links: Vec::new(),
            divisor: None,
            verdict: FiberingVerdict::Inconclusive(msg.into()),
        }
    }

    pub fn fibers(&self) -> bool {
        matches!(self.verdict, FiberingVerdict::Fibers { .. })
    }
}

pub fn fibering_verdict(l: &SimplicialComplex, mu: &Gf2Matrix, eps: &Gf2Vector) -> FiberingCertificate {
    match fibering_inner(l, mu, eps) {
        Ok(c) => c,
        Err(e) => FiberingCertificate::inconclusive(e.to_string()),
    }
}

fn fibering_inner(l: &SimplicialComplex, mu: &Gf2Matrix, eps: &Gf2Vector) -> Result<FiberingCertificate> {
    if l.dim() != 2 || !l.missing_face_census().flag {
        return Ok(FiberingCertificate::inconclusive("base is not a flag 2-dimensional complex"));
    }
    if !is_characteristic(l, mu)?.is_ok() {
        return Ok(FiberingCertificate::inconclusive("map is not characteristic"));
    }
    if !is_orientable(mu) {
        return Ok(FiberingCertificate::inconclusive("map is not orientable"));
    }
    let cocycle = AffineCocycle::new(mu, eps)?;
    let affine = check_affine(l, mu);
    if let Some(f) = &affine.failure {
        let msg = format!("not affine: {f}");
        return Ok(FiberingCertificate {
            affine: Some(affine),
            links: Vec::new(),
            divisor: None,
            verdict: FiberingVerdict::Inconclusive(msg),
        });
    }
    let links = links_table(l, &cocycle);
    if let Some(bad) = links.iter().find(|r| !r.ok()) {
        let side = if bad.positive.is_empty() || !bad.positive_connected {
            "positive"
        } else {
            "negative"
        };
        let what = if bad.positive.is_empty() || bad.negative.is_empty() {
            "empty"
        } else {
            "disconnected"
        };
        let msg = format!("{side} link at g={} is {what}", bad.g);
        return Ok(FiberingCertificate {
            affine: Some(affine),
            links,
            divisor: None,
            verdict: FiberingVerdict::Inconclusive(msg),
        });
    }
    let divisor = cocycle_image_divisor(l, mu, &cocycle)?;
    Ok(FiberingCertificate {
        affine: Some(affine),
        links,
        divisor: Some(divisor),
        verdict: FiberingVerdict::Fibers { divisor },
    })
}

/// Report for the interval product `S^0 * L` with the block map `[1 1] (+) mu`.
pub fn product_symplectic_certificate(
    l: &SimplicialComplex,
    mu: &Gf2Matrix,
    eps: &Gf2Vector,
) -> Result<ObstructionReport> {
    let cert = fibering_verdict(l, mu, eps);
    let divisor = match cert.verdict {
        FiberingVerdict::Fibers { divisor } => divisor,
        FiberingVerdict::Inconclusive(msg) => return Err(Error::Inconclusive(msg)),
    };
    let s0 = SimplicialComplex::boundary_of_simplex(1)?;
    let k = s0.join(l)?;
    let lambda = Gf2Matrix::block_diagonal(&Gf2Matrix::from_column_codes(&[1, 1], 1)?, mu)?;
    let options = VerdictOptions {
        interval_certificate: Some(IntervalCertificate {
            pair: (0, 1),
            rest: (2..k.m()).collect(),
            mu_codes: mu.column_codes(),
            epsilon: *eps,
            divisor,
        }),
        skip_interval_search: true,
    };
    symplectic_verdict_with(&k, &lambda, &options)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn setup() -> (SimplicialComplex, Gf2Matrix, Gf2Vector) {
        (
            catalog::complex("L-fig1").unwrap(),
            catalog::matrix("mu-sec6").unwrap(),
            catalog::vector("epsilon-sec6").unwrap(),
        )
    }

    #[test]
    fn links_match_table() {
        let (l, mu, eps) = setup();
        assert!(check_affine(&l, &mu).ok);
        let c = AffineCocycle::new(&mu, &eps).unwrap();
        let rows = links_table(&l, &c);
        let expected = "\
0: 0,2,3,4,5,7,8,9 | 1,6
1: 1,2,3,5,7,8,9 | 0,4,6
2: 0,2,3,4,6,8,9 | 1,5,7
3: 1,2,3,6,8,9 | 0,4,5,7
4: 0,4,5,7 | 1,2,3,6,8,9
5: 1,5,7 | 0,2,3,4,6,8,9
6: 0,4,6 | 1,2,3,5,7,8,9
7: 1,6 | 0,2,3,4,5,7,8,9
";
        assert_eq!(render_links_table(&rows), expected);
        assert!(rows.iter().all(LinkRow::ok));
    }

    #[test]
    fn divisor_and_two_cycle() {
        let (l, mu, eps) = setup();
        let c = AffineCocycle::new(&mu, &eps).unwrap();
        assert_eq!(c.two_cycle_value(0, 0, 1).unwrap(), 2);
        let sk = CubicalSkeleton::new(&l, &mu).unwrap();
        assert_eq!(sk.edges.len(), 40);
        assert_eq!(sk.cocycle_defects(&c), 0);
        assert_eq!(cocycle_image_divisor(&l, &mu, &c).unwrap(), 2);
        assert_eq!(cocycle_image_divisor_with(&sk, &c, TreeStrategy::DepthFirst).unwrap(), 2);
        let c3 = c.clone().with_magnitude(3);
        assert_eq!(cocycle_image_divisor(&l, &mu, &c3).unwrap(), 6);
        assert_eq!(
            fibering_verdict(&l, &mu, &eps).verdict,
            FiberingVerdict::Fibers { divisor: 2 }
        );
    }

    #[test]
    fn zero_signs_inconclusive() {
        let (l, mu, _) = setup();
        let v = fibering_verdict(&l, &mu, &Gf2Vector::zeros(10)).verdict;
        match v {
            FiberingVerdict::Inconclusive(msg) => assert!(msg.contains("g=0"), "{msg}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn non_affine_detected() {
        let (l, _, eps) = setup();
        let mu = Gf2Matrix::from_column_codes(&[3, 3, 4, 4, 3, 2, 2, 2, 4, 4], 3).unwrap();
        let chk = check_affine(&l, &mu);
        assert_eq!(chk.failure, Some(AffineFailure::EvenColumn(0)));
        let c = AffineCocycle::new(&mu, &eps).unwrap();
        let sk = CubicalSkeleton::new(&l, &mu).unwrap();
        assert!(sk.cocycle_defects(&c) > 0);
    }

    #[test]
    fn interval_product_report() {
        let (l, mu, eps) = setup();
        let r = product_symplectic_certificate(&l, &mu, &eps).unwrap();
        assert!(r.verdict.is_symplectic(), "{}", r.render());
        assert!(product_symplectic_certificate(&l, &mu, &Gf2Vector::zeros(10)).is_err());
    }
}
