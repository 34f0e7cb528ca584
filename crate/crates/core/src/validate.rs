//! Sanity checks for complexes that are supposed to be spheres.
//!
//! Passing means "closed pseudomanifold whose vertex links are spheres and whose
//! rational homology is that of a sphere". PL-sphericity is not decided.

use serde::Serialize;

use crate::gf2::{bits, low_mask};
use crate::simplicial::{component_count, subsets_of_size, SimplicialComplex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub dimension: usize,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    fn push(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name,
            passed,
            detail: detail.into(),
        });
    }
}

/// Validates a candidate triangulated 3-sphere.
pub fn validate_closed_3sphere_like(k: &SimplicialComplex) -> ValidationReport {
    validate_sphere_like(k, 3)
}

/// Validates a candidate triangulated `dim`-sphere for `dim` in `1..=3`.
pub fn validate_sphere_like(k: &SimplicialComplex, dim: usize) -> ValidationReport {
    let mut report = ValidationReport {
        dimension: dim,
        checks: Vec::new(),
    };
    if k.dim() != dim as isize {
        report.push("dimension", false, format!("expected {dim}, found {}", k.dim()));
        return report;
    }
    report.push("dimension", true, format!("{dim}"));

    let pure = k.is_pure();
    report.push("pure", pure, if pure { "all facets have equal size" } else { "facets of mixed size" });

    let used = k.vertex_mask();
    let all = low_mask(k.m());
    report.push(
        "vertices-used",
        used == all,
        if used == all {
            format!("{} vertices", k.m())
        } else {
            format!("unused vertices {:?}", bits(all & !used).collect::<Vec<_>>())
        },
    );

    let ridges = k.faces_of_size(dim);
    let mut bad_ridge = None;
    for &r in &ridges {
        let c = k.facets().iter().filter(|&&f| f & r == r).count();
        if c != 2 {
            bad_ridge = Some((r, c));
            break;
        }
    }
    report.push(
        "ridges-in-two-facets",
        bad_ridge.is_none(),
        match bad_ridge {
            None => format!("{} ridges", ridges.len()),
            Some((r, c)) => format!("ridge {:?} lies in {c} facets", bits(r).collect::<Vec<_>>()),
        },
    );

    let comps = component_count(&k.adjacency(), used);
    report.push("connected", comps == 1, format!("{comps} component(s)"));

    let mut bad_link = None;
    if dim >= 2 {
        for v in bits(used) {
            let link = vertex_link(k, v);
            if !link_is_sphere(&link, dim - 1) {
                bad_link = Some(v);
                break;
            }
        }
    }
    report.push(
        "vertex-links",
        bad_link.is_none(),
        match bad_link {
            None => "every vertex link is a sphere".to_string(),
            Some(v) => format!("link of vertex {v} is not a sphere"),
        },
    );

    let betti = k.reduced_betti_q();
    let mut expected = vec![0; dim + 2];
    expected[dim + 1] = 1;
    report.push("sphere-homology", betti == expected, format!("reduced betti {betti:?}"));
    report
}

/// The link of `v`, kept on the original labels.
pub fn vertex_link(k: &SimplicialComplex, v: usize) -> SimplicialComplex {
    let facets = k
        .facets()
        .iter()
        .filter(|&&f| f & (1 << v) != 0)
        .map(|&f| f & !(1 << v))
        .collect();
    SimplicialComplex::new(k.m(), facets).expect("link of a valid complex")
}

fn link_is_sphere(link: &SimplicialComplex, dim: usize) -> bool {
    if link.dim() != dim as isize || !link.is_pure() {
        return false;
    }
    let used = link.vertex_mask();
    if component_count(&link.adjacency(), used) != 1 {
        return false;
    }
    match dim {
        1 => link.is_induced_cycle().is_some(),
        2 => {
            // closed connected surface with Euler characteristic 2
            let mut edges = std::collections::HashMap::<u64, usize>::new();
            for &f in link.facets() {
                subsets_of_size(f, 2, &mut |e| *edges.entry(e).or_default() += 1);
            }
            if edges.values().any(|&c| c != 2) {
                return false;
            }
            let chi = used.count_ones() as i64 - edges.len() as i64 + link.facets().len() as i64;
            chi == 2
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn simplex_boundary_passes() {
        let r = validate_closed_3sphere_like(&SimplicialComplex::boundary_of_simplex(4).unwrap());
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn two_sphere_rejected_as_three_sphere() {
        let l = catalog::complex("L-fig1").unwrap();
        let r = validate_closed_3sphere_like(&l);
        assert!(!r.passed());
        assert_eq!(r.failures()[0].name, "dimension");
        assert!(validate_sphere_like(&l, 2).passed());
    }

    #[test]
    fn lutz_sphere_passes() {
        let k = catalog::complex("lutz_m10_247882").unwrap();
        assert!(validate_closed_3sphere_like(&k).passed());
    }

    #[test]
    fn damaged_sphere_fails() {
        let k = SimplicialComplex::boundary_of_simplex(4).unwrap();
        let broken = SimplicialComplex::new(5, k.facets()[1..].to_vec()).unwrap();
        let r = validate_closed_3sphere_like(&broken);
        assert!(!r.passed());
        assert!(r.failures().iter().any(|c| c.name == "ridges-in-two-facets"));
    }
}
