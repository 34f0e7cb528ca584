//! Executable checks of the published numbers, grouped into named blocks.

use std::fmt::Debug;
use std::time::Instant;

use serde::Serialize;

use crate::catalog;
use crate::charmap::{is_characteristic, is_orientable, normal_form_lambda_beta};
use crate::cohomology::{euler_characteristic, hochster_profile, rz_b1, rz_betti, squaring_rank};
use crate::enumeration::{enumerate_char_maps, Filter, SearchConfig};
use crate::error::{Error, Result};
use crate::fibering::{
    check_affine, cocycle_image_divisor, fibering_verdict, links_table, product_symplectic_certificate,
    render_links_table, AffineCocycle, FiberingVerdict,
};
use crate::gf2::{Gf2Matrix, Gf2Vector};
use crate::obstructions::{
    c_symplectic, count_formula_symplectic, diffeo_class_count, euler_mod4, factor_compatible,
    flagness_class, symplectic_verdict, torus_weight_check, FlagnessClass, Reason, Status, Verdict,
};
use crate::simplicial::SimplicialComplex;

pub const BLOCK_IDS: [&str; 12] = [
    "genus-formula",
    "orientability",
    "euler-mod-4",
    "flagness",
    "triangle-factor",
    "counting",
    "pentagon-square",
    "squaring-rank",
    "diffeo-count",
    "fibering",
    "census",
    "torus-weights",
];

/// The signed-links table of the fibering example over `L-fig1`.
pub const FIBERING_TABLE: &str = "\
0: 0,2,3,4,5,7,8,9 | 1,6
1: 1,2,3,5,7,8,9 | 0,4,6
2: 0,2,3,4,6,8,9 | 1,5,7
3: 1,2,3,6,8,9 | 0,4,5,7
4: 0,4,5,7 | 1,2,3,6,8,9
5: 1,5,7 | 0,2,3,4,6,8,9
6: 0,4,6 | 1,2,3,5,7,8,9
7: 1,6 | 0,2,3,4,5,7,8,9
";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyBlock {
    pub id: &'static str,
    pub checks: Vec<CheckResult>,
    /// Informational lines that are not pass/fail checks.
    pub notes: Vec<String>,
    pub millis: u128,
}

impl VerifyBlock {
    fn new(id: &'static str) -> Self {
        VerifyBlock {
            id,
            checks: Vec::new(),
            notes: Vec::new(),
            millis: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn expect<T: PartialEq + Debug>(&mut self, name: impl Into<String>, expected: T, actual: T) {
        self.checks.push(CheckResult {
            name: name.into(),
            passed: expected == actual,
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
        });
    }

    fn holds(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        let detail = detail.into();
        self.checks.push(CheckResult {
            name: name.into(),
            expected: "true".into(),
            actual: if ok { "true".into() } else { format!("false ({detail})") },
            passed: ok,
        });
    }

    fn try_eq<T: PartialEq + Debug>(&mut self, name: &str, expected: T, actual: Result<T>) {
        match actual {
            Ok(a) => self.expect(name, expected, a),
            Err(e) => self.checks.push(CheckResult {
                name: name.into(),
                expected: format!("{expected:?}"),
                actual: format!("error: {e}"),
                passed: false,
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub blocks: Vec<VerifyBlock>,
    pub passed: usize,
    pub failed: usize,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.ok() {
            0
        } else {
            1
        }
    }

    pub fn block(&self, id: &str) -> Option<&VerifyBlock> {
        self.blocks.iter().find(|b| b.id == id)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for b in &self.blocks {
            for c in &b.checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                out.push_str(&format!("[{tag}] {}: {}", b.id, c.name));
                if c.passed {
                    out.push_str(&format!(" = {}\n", c.actual));
                } else {
                    out.push_str(&format!(" expected {} got {}\n", c.expected, c.actual));
                }
            }
            for n in &b.notes {
                out.push_str(&format!("       {}: {n}\n", b.id));
            }
        }
        out.push_str(&format!("{} passed, {} failed\n", self.passed, self.failed));
        out
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Block ids to run; all when empty.
    pub only: Vec<String>,
    pub jobs: usize,
    /// Replacement for `L-fig1` in the fibering block.
    pub fibering_base: Option<SimplicialComplex>,
}

pub fn verify_paper(options: &VerifyOptions) -> Result<VerifyReport> {
    for id in &options.only {
        if !BLOCK_IDS.contains(&id.as_str()) {
            return Err(Error::InvalidInput(format!(
                "unknown block `{id}`; known blocks: {}",
                BLOCK_IDS.join(", ")
            )));
        }
    }
    let mut blocks = Vec::new();
    for id in BLOCK_IDS {
        if options.only.is_empty() || options.only.iter().any(|o| o == id) {
            blocks.push(run_block(id, options)?);
        }
    }
    let passed = blocks.iter().flat_map(|b| &b.checks).filter(|c| c.passed).count();
    let failed = blocks.iter().flat_map(|b| &b.checks).filter(|c| !c.passed).count();
    Ok(VerifyReport {
        blocks,
        passed,
        failed,
    })
}

pub fn run_block(id: &str, options: &VerifyOptions) -> Result<VerifyBlock> {
    let start = Instant::now();
    let mut block = match id {
        "genus-formula" => genus_formula()?,
        "orientability" => orientability()?,
        "euler-mod-4" => euler_block()?,
        "flagness" => flagness()?,
        "triangle-factor" => triangle_factor(options.jobs)?,
        "counting" => counting(options.jobs)?,
        "pentagon-square" => pentagon_square()?,
        "squaring-rank" => squaring()?,
        "diffeo-count" => diffeo()?,
        "fibering" => {
            let l = match &options.fibering_base {
                Some(l) => l.clone(),
                None => catalog::complex("L-fig1")?,
            };
            fibering_block(&l)?
        }
        "census" => census(options.jobs)?,
        "torus-weights" => torus_weights(options.jobs)?,
        other => return Err(Error::InvalidInput(format!("unknown block `{other}`"))),
    };
    block.millis = start.elapsed().as_millis();
    Ok(block)
}

fn genus_formula() -> Result<VerifyBlock> {
    let mut b = VerifyBlock::new("genus-formula");
    for m in 3..=8usize {
        let genus = 1 + (m as i64 - 4) * (1i64 << (m - 3));
        let got = rz_betti(&SimplicialComplex::polygon_boundary(m)?)?[1] as i64;
        b.expect(format!("b1 of the real moment-angle surface, m={m}"), 2 * genus, got);
    }
    Ok(b)
}

fn orientability() -> Result<VerifyBlock> {
    let mut b = VerifyBlock::new("orientability");
    for m in [3, 5, 8, 10, 12] {
        b.expect(format!("all-one vector in row(identity {m})"), true, is_orientable(&Gf2Matrix::identity(m)));
    }
    b.expect("example-5.5 orientable", true, is_orientable(&catalog::matrix("example-5.5")?));
    b.expect("mu-sec6 orientable", true, is_orientable(&catalog::matrix("mu-sec6")?));
    Ok(b)
}

fn euler_block() -> Result<VerifyBlock> {
    let mut b = VerifyBlock::new("euler-mod-4");
    let k82 = catalog::complex("lutz_m10_247882")?;
    b.expect("lutz_m10_247882 facets", 25, k82.facets().len());
    b.expect("lutz_m10_247882 divisible by 4", false, euler_mod4(&k82));
    let k46 = catalog::complex("polygon-product-4-6")?;
    b.expect("polygon-product-4-6 facets", 24, k46.facets().len());
    b.expect("polygon-product-4-6 divisible by 4", true, euler_mod4(&k46));
    for entry in catalog::list() {
        if let catalog::CatalogItem::Complex(k) = &entry.item {
            if k.dim() == 3 {
                let chi = euler_characteristic(k);
                b.holds(
                    format!("{}: h-vector and face-count formulas agree", entry.id),
                    chi.is_ok(),
                    chi.err().map(|e| e.to_string()).unwrap_or_default(),
                );
            }
        }
    }
    Ok(b)
}

fn flagness() -> Result<VerifyBlock> {
    let mut b = VerifyBlock::new("flagness");
    let simplex = catalog::complex("boundary-simplex-4")?;
    let census = simplex.missing_face_census();
    b.expect("boundary-simplex-4 missing faces of size 5", 1, census.missing_of_size(5).len());
    b.expect("boundary-simplex-4 class", FlagnessClass::BoundaryOfSimplex, flagness_class(&simplex));
    b.expect("cross-polytope-4 class", FlagnessClass::Flag, flagness_class(&catalog::complex("cross-polytope-4")?));
    b.expect(
        "lutz_m10_247880 class",
        FlagnessClass::Flag,
        flagness_class(&catalog::complex("lutz_m10_247880")?),
    );
    let k36 = catalog::complex("polygon-product-3-6")?;
    b.expect(
        "polygon-product-3-6 missing triangles",
        1,
        k36.missing_face_census().missing_of_size(3).len(),
    );
    b.expect("polygon-product-3-6 class", FlagnessClass::PolygonTriangleJoin(6), flagness_class(&k36));
    Ok(b)
}

fn triangle_factor(jobs: usize) -> Result<VerifyBlock> {
    let mut b = VerifyBlock::new("triangle-factor");
    let k = catalog::complex("polygon-product-3-4")?;
    let start = Instant::now();
    let config = SearchConfig::new(4).filter(Filter::CSymplectic).jobs(jobs).count_only(true);
    let total = enumerate_char_maps(&k, &config)?.total;
    let secs = start.elapsed().as_secs_f64();
    b.expect("c-symplectic classes over polygon-product-3-4", 0, total);
    b.holds("runtime under one minute", secs < 60.0, format!("{secs:.1}s"));
    Ok(b)
}

fn counting(jobs: usize) -> Result<VerifyBlock> {
    let mut b = VerifyBlock::new("counting");
    for (m1, m2) in [(4, 4), (4, 6), (6, 6)] {
        let k = SimplicialComplex::polygon_product_dual(m1, m2)?;
        let config = SearchConfig::new(4)
            .filter(Filter::SymplecticProduct)
            .jobs(jobs)
            .count_only(true);
        let got = enumerate_char_maps(&k, &config)?.total as u64;
        b.expect(
            format!("symplectic classes over ({m1},{m2}) against the closed formula"),
            count_formula_symplectic(m1, m2),
            got,
        );
    }
    Ok(b)
}

fn pentagon_square() -> Result<VerifyBlock> {
    let mut b = VerifyBlock::new("pentagon-square");
    let k = catalog::complex("polygon-product-5-4")?;
    let lambda = catalog::matrix("example-5.5")?;
    let cs = c_symplectic(&k, &lambda)?;
    b.expect("c-symplectic", true, cs.holds());
    b.expect("witness weight", Some(vec![0, 2, 5, 7]), cs.witness.map(|w| w.support()));
    b.expect("factor-compatible", false, factor_compatible(5, 4, &lambda)?.compatible);
    b.expect(
        "verdict",
        Verdict::NotSymplectic(Reason::NotFactorCompatible),
        symplectic_verdict(&k, &lambda)?.verdict,
    );
    Ok(b)
}

fn squaring() -> Result<VerifyBlock> {
    let mut b = VerifyBlock::new("squaring-rank");
    for (m1, m2) in [(4, 4), (4, 6), (6, 4), (6, 8)] {
        let k = SimplicialComplex::polygon_product_dual(m1, m2)?;
        let ones = Gf2Vector::ones(m1).bits();
        let eps = Gf2Vector::alternating(m1).bits();
        let special = [0, ones, eps, ones ^ eps];
        let mut mismatches = Vec::new();
        let mut errors = Vec::new();
        for beta in 0..1u64 << m1 {
            let nf = normal_form_lambda_beta(m1, m2, &Gf2Vector::from_bits(beta, m1)?)?;
            let expected = if special.contains(&beta) { 0 } else { m2 - 2 };
            match squaring_rank(&k, nf.matrix()) {
                Ok(s) if s.rank == expected => {}
                Ok(s) => mismatches.push(format!("beta={beta}: {}", s.rank)),
                Err(e) => errors.push(format!("beta={beta}: {e}")),
            }
        }
        b.holds(
            format!("({m1},{m2}): rank 0 on <1,eps>, {} otherwise", m2 - 2),
            mismatches.is_empty(),
            mismatches.join("; "),
        );
        b.holds(
            format!("({m1},{m2}): degree-one and degree-two dimensions match the h-vector"),
            errors.is_empty(),
            errors.join("; "),
        );
    }
    Ok(b)
}

fn diffeo() -> Result<VerifyBlock> {
    let mut b = VerifyBlock::new("diffeo-count");
    for (m1, m2, expected) in [(4, 4, 2), (6, 6, 2), (8, 8, 2), (4, 6, 3), (6, 4, 3), (4, 8, 3), (6, 8, 3)] {
        b.try_eq(&format!("({m1},{m2})"), expected, diffeo_class_count(m1, m2));
    }
    Ok(b)
}

/// Checks of the fibering certificate with `l` in place of `L-fig1`.
pub fn fibering_block(l: &SimplicialComplex) -> Result<VerifyBlock> {
    let mut b = VerifyBlock::new("fibering");
    let mu = catalog::matrix("mu-sec6")?;
    let eps = catalog::vector("epsilon-sec6")?;
    if l.m() != mu.ncols() {
        b.expect("vertex count of the base", mu.ncols(), l.m());
        return Ok(b);
    }
    b.expect("mu-sec6 characteristic", true, is_characteristic(l, &mu)?.is_ok());
    b.expect("affine", true, check_affine(l, &mu).ok);
    let cocycle = AffineCocycle::new(&mu, &eps)?;
    b.expect(
        "signed links table".to_string(),
        FIBERING_TABLE.to_string(),
        render_links_table(&links_table(l, &cocycle)),
    );
    b.try_eq("image divisor", 2, cocycle_image_divisor(l, &mu, &cocycle));
    b.expect(
        "fibering verdict",
        FiberingVerdict::Fibers { divisor: 2 },
        fibering_verdict(l, &mu, &eps).verdict,
    );
    match product_symplectic_certificate(l, &mu, &eps) {
        Ok(r) => {
            b.expect("interval product verdict", "Symplectic", r.verdict.tag());
            let rec = r.test("product-recognition").map(|t| (t.status, t.evidence.clone()));
            b.expect("product recognition", Some((Status::Fail, "none".to_string())), rec);
        }
        Err(e) => b.holds("interval product verdict", false, e.to_string()),
    }
    Ok(b)
}

fn census(jobs: usize) -> Result<VerifyBlock> {
    let mut b = VerifyBlock::new("census");
    let k = catalog::complex("lutz_m10_247880")?;
    let start = Instant::now();
    let single = enumerate_char_maps(&k, &SearchConfig::new(4).filter(Filter::CSymplectic).jobs(1))?;
    let secs = start.elapsed().as_secs_f64();
    b.expect("c-symplectic classes over lutz_m10_247880", 100, single.total);
    b.holds("single-threaded runtime under five minutes", secs < 300.0, format!("{secs:.1}s"));
    let parallel = enumerate_char_maps(
        &k,
        &SearchConfig::new(4).filter(Filter::CSymplectic).jobs(jobs.max(8)),
    )?;
    b.expect("identical output with 8 workers", single.render(), parallel.render());
    let lambda = catalog::matrix("lambda-A.2")?;
    b.expect("lambda-A.2 in the census", true, single.classes.contains(&lambda.rref().matrix.column_codes()));
    Ok(b)
}

fn torus_weights(jobs: usize) -> Result<VerifyBlock> {
    let mut b = VerifyBlock::new("torus-weights");
    let k = catalog::complex("lutz_m10_247880")?;
    let lambda = catalog::matrix("lambda-A.2")?;
    b.expect("characteristic", true, is_characteristic(&k, &lambda)?.is_ok());
    b.expect("orientable", true, is_orientable(&lambda));
    b.expect("b2 of the small cover", 2, hochster_profile(&k, &lambda)?.betti[2]);
    b.expect("b1 of the real moment-angle complex", 32, rz_b1(&k)?);
    let torus = torus_weight_check(&k, &lambda)?;
    for w in &torus.contributing {
        let cyc = k.full_subcomplex(w.bits()).complex.is_induced_cycle();
        b.notes.push(format!("lambda-A.2 weight {:?}: induced cycle {:?}", w.support(), cyc));
    }
    b.expect("every contributing weight is an induced 4-cycle", true, torus.all_weights_are_4cycles);
    b.expect("verdict", "NotSymplectic", symplectic_verdict(&k, &lambda)?.verdict.tag());

    let census = enumerate_char_maps(&k, &SearchConfig::new(4).filter(Filter::CSymplectic).jobs(jobs))?;
    let mut passing = 0;
    for lam in census.matrices() {
        let t = torus_weight_check(&k, &lam)?;
        if t.prop_a1_applies {
            passing += 1;
        } else {
            let bad: Vec<Vec<usize>> = t.offending.iter().map(|w| w.support()).collect();
            b.notes.push(format!("{:?}: not induced 4-cycles {bad:?}", lam.column_codes()));
        }
    }
    b.expect("census matrices passing the induced 4-cycle check", census.total, passing);
    Ok(b)
}
