//! End-to-end acceptance checks. Prints one `[PASS]`/`[FAIL]` line per
//! criterion and exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::time::Instant;

use smallcover::catalog::{self, CatalogItem};
use smallcover::charmap::{is_characteristic, is_orientable, normal_form_lambda_beta};
use smallcover::cohomology::{euler_characteristic, hochster_profile, rz_b1, rz_betti, squaring_rank};
use smallcover::enumeration::{brute_force_classes, enumerate_char_maps, Filter, SearchConfig};
use smallcover::fibering::{
    check_affine, cocycle_image_divisor, cocycle_image_divisor_with, fibering_verdict, links_table,
    product_symplectic_certificate, render_links_table, AffineCocycle, CubicalSkeleton, FiberingVerdict,
    TreeStrategy,
};
use smallcover::obstructions::{
    c_symplectic, count_formula_symplectic, diffeo_class_count, euler_mod4, factor_compatible,
    flagness_class, symplectic_verdict, torus_weight_check, FlagnessClass, Status,
};
use smallcover::verify::{fibering_block, FIBERING_TABLE};
use smallcover::{Gf2Matrix, Gf2Vector, SimplicialComplex};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

/// Collects sub-check failures for one criterion.
#[derive(Default)]
struct Checks {
    failures: Vec<String>,
    count: usize,
}

impl Checks {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        self.count += 1;
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, expected: T, actual: T) {
        let ok = expected == actual;
        self.check(ok, format!("{what}: expected {expected:?}, got {actual:?}"));
    }

    fn finish(self) -> Outcome {
        if self.failures.is_empty() {
            outcome(true, format!("{} checks", self.count))
        } else {
            outcome(false, self.failures.join("; "))
        }
    }
}

/// Number of connected components of the subgraph of `edges` induced on `vs`.
fn naive_components(vs: &[usize], edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..64).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for &(a, b) in edges {
        if vs.contains(&a) && vs.contains(&b) {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
    }
    vs.iter().map(|&v| find(&mut parent, v)).collect::<BTreeSet<_>>().len()
}

fn genus_formula() -> Outcome {
    let mut c = Checks::default();
    let expected = [0u64, 2, 10, 34, 98, 258];
    for (m, &want) in (3..=8usize).zip(&expected) {
        let genus = 1 + (m as i64 - 4) * (1 << (m - 3));
        c.eq("closed formula", want as i64, 2 * genus);
        let k = SimplicialComplex::polygon_boundary(m).unwrap();
        c.eq(&format!("b1 for m={m}"), want, rz_betti(&k).unwrap()[1]);
        let edges: Vec<(usize, usize)> = (0..m).map(|i| (i, (i + 1) % m)).collect();
        let oracle: u64 = (1u64..1 << m)
            .map(|w| {
                let vs: Vec<usize> = (0..m).filter(|i| w >> i & 1 == 1).collect();
                naive_components(&vs, &edges) as u64 - 1
            })
            .sum();
        c.eq(&format!("component-count oracle for m={m}"), want, oracle);
    }
    c.finish()
}

fn orientability() -> Outcome {
    let mut c = Checks::default();
    for m in 1..=16 {
        c.eq(&format!("identity {m}"), true, is_orientable(&Gf2Matrix::identity(m)));
    }
    c.eq("example-5.5", true, is_orientable(&catalog::matrix("example-5.5").unwrap()));
    c.eq("mu-sec6", true, is_orientable(&catalog::matrix("mu-sec6").unwrap()));
    c.finish()
}

fn euler_obstruction() -> Outcome {
    let mut c = Checks::default();
    let k82 = catalog::complex("lutz_m10_247882").unwrap();
    c.eq("lutz_m10_247882 facets", 25, k82.facets().len());
    c.eq("lutz_m10_247882", false, euler_mod4(&k82));
    let k46 = catalog::complex("polygon-product-4-6").unwrap();
    c.eq("polygon-product-4-6 facets", 24, k46.facets().len());
    c.eq("polygon-product-4-6", true, euler_mod4(&k46));
    for e in catalog::list() {
        let CatalogItem::Complex(k) = &e.item else { continue };
        if k.dim() != 3 {
            continue;
        }
        // alternating sum of h-numbers from a direct binomial transform
        let f = k.f_vector();
        let n = 4i64;
        let binom = |a: i64, b: i64| -> i64 {
            if b < 0 || b > a {
                0
            } else {
                (0..b).fold(1, |acc, i| acc * (a - i) / (i + 1))
            }
        };
        let h: Vec<i64> = (0..=n)
            .map(|kk| {
                (0..=kk)
                    .map(|i| {
                        let sign = if (kk - i) % 2 == 0 { 1 } else { -1 };
                        sign * binom(n - i, kk - i) * f[i as usize] as i64
                    })
                    .sum()
            })
            .collect();
        let chi_h: i64 = h.iter().enumerate().map(|(i, x)| if i % 2 == 0 { *x } else { -x }).sum();
        let chi_f = f[2] as i64 - 5 * f[1] as i64 + 16;
        c.eq(&format!("{} oracle formulas", e.id), chi_h, chi_f);
        match euler_characteristic(k) {
            Ok(x) => c.eq(&format!("{} library", e.id), chi_f, x.value()),
            Err(err) => c.check(false, format!("{}: {err}", e.id)),
        }
    }
    c.finish()
}

fn flagness_census() -> Outcome {
    let mut c = Checks::default();
    let simplex = catalog::complex("boundary-simplex-4").unwrap();
    c.eq("simplex missing 5-set", vec![0b11111u64], simplex.missing_face_census().missing_of_size(5).to_vec());
    c.eq("simplex class", FlagnessClass::BoundaryOfSimplex, flagness_class(&simplex));
    c.eq("cube dual", FlagnessClass::Flag, flagness_class(&catalog::complex("cross-polytope-4").unwrap()));
    c.eq(
        "lutz_m10_247880",
        FlagnessClass::Flag,
        flagness_class(&catalog::complex("lutz_m10_247880").unwrap()),
    );
    let k36 = catalog::complex("polygon-product-3-6").unwrap();
    c.eq("triangle-hexagon missing triangles", vec![0b111u64], k36.missing_face_census().missing_of_size(3).to_vec());
    c.eq("triangle-hexagon class", FlagnessClass::PolygonTriangleJoin(6), flagness_class(&k36));
    c.finish()
}

fn triangle_factor_exclusion() -> Outcome {
    let k = catalog::complex("polygon-product-3-4").unwrap();
    let start = Instant::now();
    let census = enumerate_char_maps(&k, &SearchConfig::new(4).filter(Filter::CSymplectic)).unwrap();
    let secs = start.elapsed().as_secs_f64();
    let mut c = Checks::default();
    c.eq("c-symplectic classes", 0, census.total);
    c.check(secs < 60.0, format!("runtime {secs:.1}s"));
    let all = enumerate_char_maps(&k, &SearchConfig::new(4)).unwrap();
    c.eq("all classes", 69, all.total);
    c.finish()
}

fn counting() -> Outcome {
    let mut c = Checks::default();
    for (m1, m2, want) in [(4, 4, 7u64), (4, 6, 19), (6, 6, 31)] {
        c.eq(&format!("formula ({m1},{m2})"), want, count_formula_symplectic(m1, m2));
        let k = SimplicialComplex::polygon_product_dual(m1, m2).unwrap();
        let config = SearchConfig::new(4).filter(Filter::SymplecticProduct).count_only(true);
        c.eq(
            &format!("enumeration ({m1},{m2})"),
            want,
            enumerate_char_maps(&k, &config).unwrap().total as u64,
        );
    }
    c.finish()
}

fn pentagon_square() -> Outcome {
    let mut c = Checks::default();
    let k = catalog::complex("polygon-product-5-4").unwrap();
    let lambda = catalog::matrix("example-5.5").unwrap();
    let cs = c_symplectic(&k, &lambda).unwrap();
    c.eq("c-symplectic", true, cs.holds());
    // F11, F13 on the pentagon (0..5), F21, F23 on the square (5..9)
    c.eq("witness", Some(vec![0, 2, 5, 7]), cs.witness.map(|w| w.support()));
    c.eq(
        "witness spans a 4-cycle",
        Some(4),
        k.full_subcomplex(0b10100101).complex.is_induced_cycle(),
    );
    c.eq("factor-compatible", false, factor_compatible(5, 4, &lambda).unwrap().compatible);
    let r = symplectic_verdict(&k, &lambda).unwrap();
    c.eq("verdict", "NotSymplectic", r.verdict.tag());
    c.check(
        r.verdict_line().contains("not factor-compatible"),
        format!("verdict line {}", r.verdict_line()),
    );
    c.finish()
}

fn squaring_ranks() -> Outcome {
    let mut c = Checks::default();
    for (m1, m2) in [(4, 4), (4, 6), (6, 4), (6, 8)] {
        let k = SimplicialComplex::polygon_product_dual(m1, m2).unwrap();
        let ones = Gf2Vector::ones(m1).bits();
        let eps = Gf2Vector::alternating(m1).bits();
        for b in 0..1u64 << m1 {
            let beta = Gf2Vector::from_bits(b, m1).unwrap();
            let nf = normal_form_lambda_beta(m1, m2, &beta).unwrap();
            let expected = if [0, ones, eps, ones ^ eps].contains(&b) { 0 } else { m2 - 2 };
            match squaring_rank(&k, nf.matrix()) {
                Ok(s) => {
                    c.eq(&format!("({m1},{m2}) beta={beta}"), expected, s.rank);
                    c.eq(&format!("({m1},{m2}) h1"), m1 + m2 - 4, s.h1_dim);
                    c.eq(&format!("({m1},{m2}) h2"), (m1 - 2) * (m2 - 2) + 2, s.h2_dim);
                }
                Err(e) => c.check(false, format!("({m1},{m2}) beta={beta}: {e}")),
            }
        }
    }
    c.finish()
}

fn diffeo_counts() -> Outcome {
    let mut c = Checks::default();
    for m1 in [4, 6, 8, 10] {
        for m2 in [4, 6, 8, 10] {
            let want = if m1 == m2 { 2 } else { 3 };
            c.eq(&format!("({m1},{m2})"), Some(want), diffeo_class_count(m1, m2).ok());
        }
    }
    c.check(diffeo_class_count(5, 4).is_err(), "odd factor rejected");
    c.finish()
}

fn fibering_certificate() -> Outcome {
    let mut c = Checks::default();
    let l = catalog::complex("L-fig1").unwrap();
    let mu = catalog::matrix("mu-sec6").unwrap();
    let eps = catalog::vector("epsilon-sec6").unwrap();
    c.eq("characteristic", true, is_characteristic(&l, &mu).unwrap().is_ok());
    c.eq("affine", true, check_affine(&l, &mu).ok);
    let cocycle = AffineCocycle::new(&mu, &eps).unwrap();
    c.eq("links table", FIBERING_TABLE.to_string(), render_links_table(&links_table(&l, &cocycle)));
    c.eq("divisor", 2, cocycle_image_divisor(&l, &mu, &cocycle).unwrap());
    c.eq("verdict", FiberingVerdict::Fibers { divisor: 2 }, fibering_verdict(&l, &mu, &eps).verdict);
    let r = product_symplectic_certificate(&l, &mu, &eps).unwrap();
    c.eq("product verdict", "Symplectic", r.verdict.tag());
    c.eq(
        "product recognition",
        Some((Status::Fail, "none".to_string())),
        r.test("product-recognition").map(|t| (t.status, t.evidence.clone())),
    );
    // negative control: swapping two facets' vertices breaks the certificate
    let mut facets = l.facet_lists();
    facets[0] = vec![0, 6, 7];
    match SimplicialComplex::from_facets(10, &facets) {
        Ok(bad) => c.check(!fibering_block(&bad).unwrap().passed(), "corrupted base still passes"),
        Err(_) => c.check(true, ""),
    }
    c.finish()
}

fn ten_vertex_census() -> Outcome {
    let mut c = Checks::default();
    let k = catalog::complex("lutz_m10_247880").unwrap();
    let start = Instant::now();
    let one = enumerate_char_maps(&k, &SearchConfig::new(4).filter(Filter::CSymplectic).jobs(1)).unwrap();
    let secs = start.elapsed().as_secs_f64();
    c.eq("c-symplectic classes", 100, one.total);
    c.check(secs < 300.0, format!("runtime {secs:.1}s"));
    let eight = enumerate_char_maps(&k, &SearchConfig::new(4).filter(Filter::CSymplectic).jobs(8)).unwrap();
    c.eq("deterministic under 8 workers", one.render(), eight.render());
    for lam in one.matrices() {
        c.check(is_characteristic(&k, &lam).unwrap().is_ok(), "census matrix not characteristic");
        c.check(hochster_profile(&k, &lam).unwrap().betti[2] > 0, "census matrix has b2 = 0");
    }
    c.finish()
}

fn torus_weight_example() -> Outcome {
    let mut c = Checks::default();
    let k = catalog::complex("lutz_m10_247880").unwrap();
    let lambda = catalog::matrix("lambda-A.2").unwrap();
    c.eq("characteristic", true, is_characteristic(&k, &lambda).unwrap().is_ok());
    c.eq("orientable", true, is_orientable(&lambda));
    c.eq("b2", 2, hochster_profile(&k, &lambda).unwrap().betti[2]);
    c.eq("b1 of the real moment-angle complex", 32, rz_b1(&k).unwrap());
    let t = torus_weight_check(&k, &lambda).unwrap();
    c.eq("all contributing weights are induced 4-cycles", true, t.all_weights_are_4cycles);
    c.eq("verdict", "NotSymplectic", symplectic_verdict(&k, &lambda).unwrap().verdict.tag());
    let census = enumerate_char_maps(&k, &SearchConfig::new(4).filter(Filter::CSymplectic)).unwrap();
    let passing = census
        .matrices()
        .iter()
        .filter(|lam| torus_weight_check(&k, lam).unwrap().prop_a1_applies)
        .count();
    println!("       census matrices passing the induced 4-cycle check: {passing} of {}", census.total);
    c.eq("census matrices passing", census.total, passing);
    c.finish()
}

fn property_suites() -> Outcome {
    let mut c = Checks::default();
    // a condensed rerun; the full randomized suites live in tests/properties.rs
    for m in 1..=12usize {
        for seed in 0..40u64 {
            let rows: Vec<u64> = (0..4)
                .map(|r| (seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) >> (r * 12)) & ((1 << m) - 1))
                .collect();
            let a = Gf2Matrix::from_row_bits(&rows, m).unwrap();
            let r = a.rref();
            c.check(r.matrix.rref().matrix == r.matrix, "rref not idempotent");
            let ker = a.kernel_basis();
            c.check(ker.len() + r.rank == m, "rank-nullity");
            c.check(
                a.rows().iter().all(|row| ker.iter().all(|k| !row.dot(k))),
                "row space not orthogonal to kernel",
            );
        }
    }
    for (k, n) in [
        (SimplicialComplex::polygon_boundary(6).unwrap(), 2),
        (SimplicialComplex::cross_polytope(3).unwrap(), 3),
        (SimplicialComplex::polygon_product_dual(3, 3).unwrap(), 4),
    ] {
        c.eq(
            "enumeration against brute force",
            brute_force_classes(&k, n).unwrap(),
            enumerate_char_maps(&k, &SearchConfig::new(n)).unwrap().classes,
        );
    }
    let s = SimplicialComplex::boundary_of_simplex(4).unwrap();
    let sum = s.connected_sum(&s, &[0, 1, 2, 3], &[0, 1, 2, 3]).unwrap();
    c.eq("connected sum betti", [1, 1, 0, 1, 1], rz_betti(&sum).unwrap());
    let l = catalog::complex("L-fig1").unwrap();
    let mu = catalog::matrix("mu-sec6").unwrap();
    let sk = CubicalSkeleton::new(&l, &mu).unwrap();
    for e in [66u64, 1, 5, 1000] {
        let cc = AffineCocycle::new(&mu, &Gf2Vector::from_bits(e, 10).unwrap()).unwrap();
        c.eq(
            "tree independence",
            cocycle_image_divisor_with(&sk, &cc, TreeStrategy::BreadthFirst).ok(),
            cocycle_image_divisor_with(&sk, &cc, TreeStrategy::DepthFirst).ok(),
        );
    }
    c.finish()
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 13] = [
        ("genus formula for polygon moment-angle surfaces", genus_formula),
        ("orientability", orientability),
        ("euler characteristic obstruction", euler_obstruction),
        ("flagness classification", flagness_census),
        ("triangle factor exclusion", triangle_factor_exclusion),
        ("symplectic class counts over polygon products", counting),
        ("pentagon-square example", pentagon_square),
        ("squaring rank of normal forms", squaring_ranks),
        ("diffeomorphism class counts", diffeo_counts),
        ("circle-fibering certificate", fibering_certificate),
        ("c-symplectic census over a 10-vertex sphere", ten_vertex_census),
        ("square-zero torus obstruction example", torus_weight_example),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        let tag = if o.ok { "PASS" } else { "FAIL" };
        println!(
            "[{tag}] {:>2} {name} ({:.2}s): {}",
            i + 1,
            start.elapsed().as_secs_f64(),
            o.detail
        );
        if !o.ok {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
