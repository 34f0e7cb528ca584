//! Decision procedures for symplectic structures on four-dimensional small covers.
//!
//! The obstructions are necessary conditions. A positive verdict needs a
//! constructive certificate (factor-compatibility over a product of two
//! polygons, or an interval product with a circle-fibering 3-manifold);
//! everything else that survives every test is reported as `Unknown`.

use std::fmt;

use serde::Serialize;

use crate::charmap::is_orientable;
use crate::cohomology::{rz_b1, FaceTable};
use crate::error::{Error, Result};
use crate::fibering::{fibering_verdict, FiberingVerdict};
use crate::gf2::{bits, low_mask, mask_of, Gf2Matrix, Gf2Vector};
use crate::simplicial::{PolygonProduct, SimplicialComplex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CSymplectic {
    pub orientable: bool,
    /// First row-space weight (in enumeration order) whose full subcomplex has `b~1 > 0`.
    pub witness: Option<Gf2Vector>,
}

impl CSymplectic {
    pub fn holds(&self) -> bool {
        self.orientable && self.witness.is_some()
    }
}

pub fn c_symplectic(k: &SimplicialComplex, lambda: &Gf2Matrix) -> Result<CSymplectic> {
    check_cols(k, lambda)?;
    let orientable = is_orientable(lambda);
    if !orientable {
        return Ok(CSymplectic {
            orientable,
            witness: None,
        });
    }
    let faces = FaceTable::new(k);
    let witness = lambda.row_space()?.find(|w| faces.betti(w.bits())[2] > 0);
    Ok(CSymplectic { orientable, witness })
}

fn check_cols(k: &SimplicialComplex, lambda: &Gf2Matrix) -> Result<()> {
    if lambda.ncols() != k.m() {
        return Err(Error::DimensionMismatch {
            expected: k.m(),
            found: lambda.ncols(),
        });
    }
    Ok(())
}

/// The number of facets is divisible by four.
pub fn euler_mod4(k: &SimplicialComplex) -> bool {
    k.facets().len().is_multiple_of(4)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum FlagnessClass {
    Flag,
    MissingTriangle(Vec<usize>),
    MissingTetrahedron(Vec<usize>),
    BoundaryOfSimplex,
    /// Join of a triangle boundary with the boundary of a polygon of this size.
    PolygonTriangleJoin(usize),
}

impl fmt::Display for FlagnessClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FlagnessClass::Flag => write!(f, "flag"),
            FlagnessClass::MissingTriangle(v) => write!(f, "missing triangle {v:?}"),
            FlagnessClass::MissingTetrahedron(v) => write!(f, "missing tetrahedron {v:?}"),
            FlagnessClass::BoundaryOfSimplex => write!(f, "boundary of the 4-simplex"),
            FlagnessClass::PolygonTriangleJoin(q) => write!(f, "triangle joined with a {q}-gon"),
        }
    }
}

pub fn flagness_class(k: &SimplicialComplex) -> FlagnessClass {
    let census = k.missing_face_census();
    if !census.missing_of_size(5).is_empty() {
        return FlagnessClass::BoundaryOfSimplex;
    }
    if let Some(p) = k.recognize_polygon_product_dual() {
        if p.m1 == 3 {
            return FlagnessClass::PolygonTriangleJoin(p.m2);
        }
    }
    if let Some(&t) = census.missing_of_size(3).first() {
        return FlagnessClass::MissingTriangle(bits(t).collect());
    }
    if let Some(&t) = census.missing_of_size(4).first() {
        return FlagnessClass::MissingTetrahedron(bits(t).collect());
    }
    FlagnessClass::Flag
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorCompatibility {
    pub compatible: bool,
    pub chi1_in_row_space: bool,
    pub chi2_in_row_space: bool,
    /// For two squares: the alternating halves `d11, d12, d21, d22` and the
    /// first pairing (as index pairs into that list) whose sums lie in the row space.
    pub pairing: Option<[[usize; 2]; 2]>,
}

/// Factor-compatibility for the standard labelling: the first `m1` vertices
/// form the first polygon in cyclic order, the next `m2` the second.
pub fn factor_compatible(m1: usize, m2: usize, lambda: &Gf2Matrix) -> Result<FactorCompatibility> {
    if m1 + m2 != lambda.ncols() {
        return Err(Error::DimensionMismatch {
            expected: m1 + m2,
            found: lambda.ncols(),
        });
    }
    let p = PolygonProduct {
        m1,
        m2,
        first: (0..m1).collect(),
        second: (m1..m1 + m2).collect(),
    };
    factor_compatible_for(&p, lambda)
}

pub fn factor_compatible_for(p: &PolygonProduct, lambda: &Gf2Matrix) -> Result<FactorCompatibility> {
    let m = lambda.ncols();
    let rref = lambda.rref();
    let inside = |mask: u64| rref.reduce(mask) == 0;
    let chi1 = p.first_mask();
    let chi2 = p.second_mask();
    if (chi1 | chi2) != low_mask(m) || chi1 & chi2 != 0 {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: p.m1 + p.m2,
        });
    }
    let chi1_in_row_space = inside(chi1);
    let chi2_in_row_space = inside(chi2);
    if p.m1 == 4 && p.m2 == 4 {
        let half = |c: &[usize], parity: usize| mask_of(c.iter().skip(parity).step_by(2).copied());
        let d = [
            half(&p.first, 0),
            half(&p.first, 1),
            half(&p.second, 0),
            half(&p.second, 1),
        ];
        let pairings = [[[0, 1], [2, 3]], [[0, 2], [1, 3]], [[0, 3], [1, 2]]];
        let pairing = pairings
            .into_iter()
            .find(|pr| pr.iter().all(|&[a, b]| inside(d[a] ^ d[b])));
        return Ok(FactorCompatibility {
            compatible: pairing.is_some(),
            chi1_in_row_space,
            chi2_in_row_space,
            pairing,
        });
    }
    Ok(FactorCompatibility {
        compatible: chi1_in_row_space && chi2_in_row_space,
        chi1_in_row_space,
        chi2_in_row_space,
        pairing: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorusWeightCheck {
    pub all_weights_are_4cycles: bool,
    pub b1_rz: u64,
    pub prop_a1_applies: bool,
    /// Weights with `b~1 > 0` whose full subcomplex is not an induced 4-cycle.
    pub offending: Vec<Gf2Vector>,
    pub contributing: Vec<Gf2Vector>,
}

/// Sufficient check that the second homology is carried by square-zero tori:
/// every row-space weight with `b~1 > 0` spans an induced 4-cycle, together
/// with `b_1` of the real moment-angle complex exceeding 4.
pub fn torus_weight_check(k: &SimplicialComplex, lambda: &Gf2Matrix) -> Result<TorusWeightCheck> {
    check_cols(k, lambda)?;
    let faces = FaceTable::new(k);
    let contributing: Vec<Gf2Vector> = lambda
        .row_space()?
        .filter(|w| faces.betti(w.bits())[2] > 0)
        .collect();
    let offending: Vec<Gf2Vector> = contributing
        .iter()
        .copied()
        .filter(|w| k.full_subcomplex(w.bits()).complex.is_induced_cycle() != Some(4))
        .collect();
    let all_weights_are_4cycles = !contributing.is_empty() && offending.is_empty();
    let b1_rz = rz_b1(k)?;
    Ok(TorusWeightCheck {
        all_weights_are_4cycles,
        b1_rz,
        prop_a1_applies: all_weights_are_4cycles && b1_rz > 4,
        offending,
        contributing,
    })
}

/// Number of symplectic classes over a product of an `m1`-gon and an `m2`-gon:
/// `2^(m1-2) + 2^(m2-2) - 1`, and zero when either side is odd or below four.
pub fn count_formula_symplectic(m1: usize, m2: usize) -> u64 {
    if m1 % 2 == 1 || m2 % 2 == 1 || m1 < 4 || m2 < 4 {
        return 0;
    }
    (1u64 << (m1 - 2)) + (1u64 << (m2 - 2)) - 1
}

/// Number of diffeomorphism classes among the symplectic small covers.
pub fn diffeo_class_count(m1: usize, m2: usize) -> Result<u32> {
    if m1 % 2 == 1 || m2 % 2 == 1 || m1 < 4 || m2 < 4 {
        return Err(Error::OddFactor(m1, m2));
    }
    Ok(if m1 == m2 { 2 } else { 3 })
}

/// A splitting `K = S^0 * L` with `lambda` a block product of the interval
/// map and a 3-dimensional map `mu` admitting a fibering cocycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalCertificate {
    pub pair: (usize, usize),
    /// Original labels of the vertices of `L`, in order.
    pub rest: Vec<usize>,
    /// Column codes of `mu` over `L`.
    pub mu_codes: Vec<u64>,
    pub epsilon: Gf2Vector,
    pub divisor: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Certificate {
    FactorCompatible(FactorCompatibility),
    IntervalFibering(IntervalCertificate),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Reason {
    NotOrientable,
    NotCSymplectic,
    EulerNotDivisibleBy4 { facets: usize },
    NotFlag(FlagnessClass),
    NotFactorCompatible,
    TorusWeights { b1_rz: u64 },
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::NotOrientable => write!(f, "not orientable"),
            Reason::NotCSymplectic => write!(f, "not c-symplectic"),
            Reason::EulerNotDivisibleBy4 { facets } => {
                write!(f, "Euler characteristic not divisible by 4 ({facets} facets)")
            }
            Reason::NotFlag(c) => write!(f, "not flag: {c}"),
            Reason::NotFactorCompatible => write!(f, "not factor-compatible"),
            Reason::TorusWeights { b1_rz } => write!(
                f,
                "second homology carried by square-zero tori with b1 of the real moment-angle complex {b1_rz} > 4"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Symplectic(Certificate),
    NotSymplectic(Reason),
    Unknown,
}

impl Verdict {
    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::Symplectic(_) => "Symplectic",
            Verdict::NotSymplectic(_) => "NotSymplectic",
            Verdict::Unknown => "Unknown",
        }
    }

    pub fn is_symplectic(&self) -> bool {
        matches!(self, Verdict::Symplectic(_))
    }

    pub fn is_not_symplectic(&self) -> bool {
        matches!(self, Verdict::NotSymplectic(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TestRow {
    pub name: &'static str,
    pub status: Status,
    pub evidence: String,
}

/// Names of the rows of every report, in order.
pub const TEST_NAMES: [&str; 8] = [
    "orientable",
    "c-symplectic",
    "euler-mod-4",
    "flagness",
    "product-recognition",
    "factor-compatible",
    "interval-fibering",
    "torus-spanning",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub verdict: Verdict,
    pub tests: Vec<TestRow>,
}

impl ObstructionReport {
    fn new() -> Self {
        ObstructionReport {
            verdict: Verdict::Unknown,
            tests: TEST_NAMES
                .iter()
                .map(|&name| TestRow {
                    name,
                    status: Status::Skip,
                    evidence: String::new(),
                })
                .collect(),
        }
    }

    fn set(&mut self, name: &str, status: Status, evidence: impl Into<String>) {
        let row = self.tests.iter_mut().find(|t| t.name == name).expect("known row");
        row.status = status;
        row.evidence = evidence.into();
    }

    pub fn test(&self, name: &str) -> Option<&TestRow> {
        self.tests.iter().find(|t| t.name == name)
    }

    pub fn verdict_line(&self) -> String {
        let reason = match &self.verdict {
            Verdict::Symplectic(Certificate::FactorCompatible(_)) => {
                "factor-compatible map over a product of two polygons".to_string()
            }
            Verdict::Symplectic(Certificate::IntervalFibering(c)) => format!(
                "interval times a circle-fibering 3-manifold (divisor {})",
                c.divisor
            ),
            Verdict::NotSymplectic(r) => r.to_string(),
            Verdict::Unknown => "no obstruction applies and no construction is known".to_string(),
        };
        format!("VERDICT: {} — {}", self.verdict.tag(), reason)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for t in &self.tests {
            out.push_str(&format!("{:<20} {}  {}\n", t.name, t.status, t.evidence));
        }
        out.push_str(&self.verdict_line());
        out.push('\n');
        out
    }
}

fn weight_text(w: &Gf2Vector) -> String {
    let s: Vec<String> = w.support().iter().map(ToString::to_string).collect();
    format!("[{}]", s.join(","))
}

#[derive(Clone, Debug, Default)]
pub struct VerdictOptions {
    /// Use this certificate instead of searching for an interval splitting.
    pub interval_certificate: Option<IntervalCertificate>,
    /// Skip the interval splitting search.
    pub skip_interval_search: bool,
}

pub fn symplectic_verdict(k: &SimplicialComplex, lambda: &Gf2Matrix) -> Result<ObstructionReport> {
    symplectic_verdict_with(k, lambda, &VerdictOptions::default())
}

pub fn symplectic_verdict_with(
    k: &SimplicialComplex,
    lambda: &Gf2Matrix,
    options: &VerdictOptions,
) -> Result<ObstructionReport> {
    check_cols(k, lambda)?;
    let mut report = ObstructionReport::new();

    let cs = c_symplectic(k, lambda)?;
    if !cs.orientable {
        report.set("orientable", Status::Fail, "all-one vector not in the row space");
        report.verdict = Verdict::NotSymplectic(Reason::NotOrientable);
        return Ok(report);
    }
    report.set("orientable", Status::Pass, "all-one vector in the row space");

    match &cs.witness {
        Some(w) => report.set("c-symplectic", Status::Pass, format!("witness omega={}", weight_text(w))),
        None => {
            report.set("c-symplectic", Status::Fail, "no row-space weight with b~1 > 0");
            report.verdict = Verdict::NotSymplectic(Reason::NotCSymplectic);
            return Ok(report);
        }
    }

    let facets = k.facets().len();
    if !euler_mod4(k) {
        report.set("euler-mod-4", Status::Fail, format!("f3 = {facets}"));
        report.verdict = Verdict::NotSymplectic(Reason::EulerNotDivisibleBy4 { facets });
        return Ok(report);
    }
    report.set("euler-mod-4", Status::Pass, format!("f3 = {facets}"));

    let class = flagness_class(k);
    if class != FlagnessClass::Flag {
        report.set("flagness", Status::Fail, class.to_string());
        report.verdict = Verdict::NotSymplectic(Reason::NotFlag(class));
        return Ok(report);
    }
    report.set("flagness", Status::Pass, "flag");

    if let Some(p) = k.recognize_polygon_product_dual() {
        report.set(
            "product-recognition",
            Status::Pass,
            format!("{}-gon x {}-gon, factors {:?} and {:?}", p.m1, p.m2, p.first, p.second),
        );
        let fc = factor_compatible_for(&p, lambda)?;
        let evidence = match fc.pairing {
            Some(pr) => format!("pairing {pr:?} of the alternating halves"),
            None => format!(
                "chi1 {} row space, chi2 {} row space",
                if fc.chi1_in_row_space { "in" } else { "not in" },
                if fc.chi2_in_row_space { "in" } else { "not in" }
            ),
        };
        if fc.compatible {
            report.set("factor-compatible", Status::Pass, evidence);
            report.verdict = Verdict::Symplectic(Certificate::FactorCompatible(fc));
        } else {
            report.set("factor-compatible", Status::Fail, evidence);
            report.verdict = Verdict::NotSymplectic(Reason::NotFactorCompatible);
        }
        return Ok(report);
    }
    report.set("product-recognition", Status::Fail, "none");

    let interval = match &options.interval_certificate {
        Some(c) => Some(c.clone()),
        None if options.skip_interval_search => None,
        None => find_interval_certificate(k, lambda)?,
    };
    match interval {
        Some(c) => {
            report.set(
                "interval-fibering",
                Status::Pass,
                format!(
                    "S^0 {:?}, mu {:?}, epsilon {}, divisor {}",
                    c.pair, c.mu_codes, c.epsilon, c.divisor
                ),
            );
            report.verdict = Verdict::Symplectic(Certificate::IntervalFibering(c));
            return Ok(report);
        }
        None if options.skip_interval_search => {}
        None => report.set("interval-fibering", Status::Fail, "no fibering interval splitting"),
    }

    let torus = torus_weight_check(k, lambda)?;
    let evidence = format!(
        "{} of {} weights are induced 4-cycles, b1 = {}",
        torus.contributing.len() - torus.offending.len(),
        torus.contributing.len(),
        torus.b1_rz
    );
    if torus.prop_a1_applies {
        report.set("torus-spanning", Status::Pass, evidence);
        report.verdict = Verdict::NotSymplectic(Reason::TorusWeights { b1_rz: torus.b1_rz });
    } else {
        let bad: Vec<String> = torus.offending.iter().map(weight_text).collect();
        report.set("torus-spanning", Status::Fail, format!("{evidence}; not 4-cycles: {}", bad.join(" ")));
    }
    Ok(report)
}

/// Searches for `K = S^0 * L` with `lambda` equal, after a change of basis, to
/// the interval map times a map over `L` with a fibering cocycle.
pub fn find_interval_certificate(
    k: &SimplicialComplex,
    lambda: &Gf2Matrix,
) -> Result<Option<IntervalCertificate>> {
    let n = lambda.nrows();
    if !(2..=6).contains(&n) || k.m() < 4 {
        return Ok(None);
    }
    let codes = lambda.column_codes();
    let all = low_mask(k.m());
    for a in 0..k.m() {
        for b in a + 1..k.m() {
            if codes[a] != codes[b] {
                continue;
            }
            let rest = all & !(1 << a) & !(1 << b);
            if !is_suspension(k, a, b) {
                continue;
            }
            let v = codes[a];
            let rest_codes: Vec<u64> = bits(rest).map(|i| codes[i]).collect();
            let span = span_of(&rest_codes);
            if span.len() != 1 << (n - 1) || span.contains(&v) {
                continue;
            }
            let sub = k.full_subcomplex(rest);
            if let Some(c) = search_bases(&sub.complex, &rest_codes, &span, n - 1)? {
                let (mu_codes, epsilon, divisor) = c;
                return Ok(Some(IntervalCertificate {
                    pair: (a, b),
                    rest: sub.vertices,
                    mu_codes,
                    epsilon,
                    divisor,
                }));
            }
        }
    }
    Ok(None)
}

fn is_suspension(k: &SimplicialComplex, a: usize, b: usize) -> bool {
    let (ma, mb) = (1u64 << a, 1u64 << b);
    let mut la: Vec<u64> = Vec::new();
    let mut lb: Vec<u64> = Vec::new();
    for &f in k.facets() {
        match (f & ma != 0, f & mb != 0) {
            (true, false) => la.push(f & !ma),
            (false, true) => lb.push(f & !mb),
            _ => return false,
        }
    }
    la.sort_unstable();
    lb.sort_unstable();
    la == lb
}

fn span_of(vs: &[u64]) -> Vec<u64> {
    let mut span = vec![0u64];
    for &v in vs {
        if !span.contains(&v) {
            let shifted: Vec<u64> = span.iter().map(|s| s ^ v).collect();
            span.extend(shifted);
        }
    }
    span.sort_unstable();
    span
}

type Found = (Vec<u64>, Gf2Vector, u64);

fn search_bases(l: &SimplicialComplex, cols: &[u64], span: &[u64], d: usize) -> Result<Option<Found>> {
    if l.dim() != 2 || !l.missing_face_census().flag || l.m() > 20 {
        return Ok(None);
    }
    let nonzero: Vec<u64> = span.iter().copied().filter(|&x| x != 0).collect();
    let mut basis = Vec::with_capacity(d);
    let mut found = None;
    ordered_bases(&nonzero, d, &mut basis, &mut |basis| {
        let mu_codes: Vec<u64> = cols.iter().map(|&c| coordinates(c, basis)).collect();
        let Ok(mu) = Gf2Matrix::from_column_codes(&mu_codes, d) else {
            return false;
        };
        if !crate::fibering::check_affine(l, &mu).ok {
            return false;
        }
        for e in 0u64..1 << l.m() {
            let eps = Gf2Vector::from_bits(e, l.m()).expect("fits");
            if let FiberingVerdict::Fibers { divisor } = fibering_verdict(l, &mu, &eps).verdict {
                found = Some((mu_codes.clone(), eps, divisor));
                return true;
            }
        }
        false
    });
    Ok(found)
}

fn ordered_bases(pool: &[u64], d: usize, basis: &mut Vec<u64>, f: &mut impl FnMut(&[u64]) -> bool) -> bool {
    if basis.len() == d {
        return f(basis);
    }
    for &x in pool {
        let mut trial = basis.clone();
        trial.push(x);
        if crate::gf2::independent(&trial) {
            basis.push(x);
            if ordered_bases(pool, d, basis, f) {
                return true;
            }
            basis.pop();
        }
    }
    false
}

fn coordinates(x: u64, basis: &[u64]) -> u64 {
    (0u64..1 << basis.len())
        .find(|&c| bits(c).fold(0, |acc, t| acc ^ basis[t]) == x)
        .expect("x lies in the span of the basis")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::charmap::normal_form_lambda_beta;

    #[test]
    fn pentagon_square_example() {
        let k = catalog::complex("polygon-product-5-4").unwrap();
        let lambda = catalog::matrix("example-5.5").unwrap();
        let cs = c_symplectic(&k, &lambda).unwrap();
        assert!(cs.holds());
        assert_eq!(cs.witness.unwrap().support(), vec![0, 2, 5, 7]);
        let rows = lambda.rows();
        assert_eq!(cs.witness.unwrap(), rows[0] + rows[2]);
        let fc = factor_compatible(5, 4, &lambda).unwrap();
        assert!(!fc.compatible);
        assert!(!fc.chi1_in_row_space);
        let r = symplectic_verdict(&k, &lambda).unwrap();
        assert_eq!(r.verdict, Verdict::NotSymplectic(Reason::NotFactorCompatible));
        assert!(r.verdict_line().starts_with("VERDICT: NotSymplectic — not factor-compatible"));
    }

    #[test]
    fn normal_forms_are_symplectic() {
        let k = SimplicialComplex::polygon_product_dual(4, 6).unwrap();
        for b in 0..16u64 {
            let nf = normal_form_lambda_beta(4, 6, &Gf2Vector::from_bits(b, 4).unwrap()).unwrap();
            assert!(factor_compatible(4, 6, nf.matrix()).unwrap().compatible);
            assert!(symplectic_verdict(&k, nf.matrix()).unwrap().verdict.is_symplectic());
        }
    }

    #[test]
    fn triangle_factor_never_compatible() {
        let k = SimplicialComplex::polygon_product_dual(3, 4).unwrap();
        let census = crate::enumeration::enumerate_char_maps(
            &k,
            &crate::enumeration::SearchConfig::new(4),
        )
        .unwrap();
        for lambda in census.matrices() {
            assert!(!factor_compatible(3, 4, &lambda).unwrap().compatible);
            assert!(!symplectic_verdict(&k, &lambda).unwrap().verdict.is_symplectic());
        }
    }

    #[test]
    fn euler_test() {
        assert!(!euler_mod4(&catalog::complex("lutz_m10_247882").unwrap()));
        assert!(euler_mod4(&SimplicialComplex::polygon_product_dual(4, 6).unwrap()));
        assert!(!euler_mod4(&SimplicialComplex::boundary_of_simplex(4).unwrap()));
    }

    #[test]
    fn flagness_classes() {
        let k = SimplicialComplex::polygon_product_dual(3, 5).unwrap();
        assert_eq!(flagness_class(&k), FlagnessClass::PolygonTriangleJoin(5));
        assert_eq!(
            flagness_class(&catalog::complex("lutz_m10_247880").unwrap()),
            FlagnessClass::Flag
        );
        assert_eq!(
            flagness_class(&SimplicialComplex::boundary_of_simplex(4).unwrap()),
            FlagnessClass::BoundaryOfSimplex
        );
        let s0 = SimplicialComplex::boundary_of_simplex(1).unwrap();
        let tet = SimplicialComplex::boundary_of_simplex(3).unwrap();
        assert!(matches!(flagness_class(&s0.join(&tet).unwrap()), FlagnessClass::MissingTetrahedron(_)));
    }

    #[test]
    fn counts() {
        assert_eq!(count_formula_symplectic(4, 4), 7);
        assert_eq!(count_formula_symplectic(4, 6), 19);
        assert_eq!(count_formula_symplectic(6, 6), 31);
        assert_eq!(count_formula_symplectic(3, 6), 0);
        assert_eq!(diffeo_class_count(4, 4).unwrap(), 2);
        assert_eq!(diffeo_class_count(4, 6).unwrap(), 3);
        assert_eq!(diffeo_class_count(8, 8).unwrap(), 2);
        assert!(diffeo_class_count(5, 4).is_err());
    }

    #[test]
    fn non_orientable_short_circuits() {
        let k = SimplicialComplex::polygon_product_dual(4, 4).unwrap();
        let lambda = Gf2Matrix::from_column_codes(&[1, 2, 1, 2, 4, 8, 4, 15], 4).unwrap();
        assert!(crate::charmap::is_characteristic(&k, &lambda).unwrap().is_ok());
        assert!(!c_symplectic(&k, &lambda).unwrap().holds());
        let r = symplectic_verdict(&k, &lambda).unwrap();
        assert_eq!(r.verdict, Verdict::NotSymplectic(Reason::NotOrientable));
        assert_eq!(r.test("c-symplectic").unwrap().status, Status::Skip);
    }

    #[test]
    fn interval_product_found() {
        let k = catalog::complex("IxQ-fig1").unwrap();
        let lambda = catalog::matrix("lambda-IxQ").unwrap();
        let c = find_interval_certificate(&k, &lambda).unwrap().unwrap();
        assert_eq!(c.pair, (0, 1));
        assert_eq!(c.divisor, 2);
        let r = symplectic_verdict(&k, &lambda).unwrap();
        assert!(r.verdict.is_symplectic());
        assert_eq!(r.test("product-recognition").unwrap().evidence, "none");
    }
}
