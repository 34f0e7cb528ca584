//! Census of characteristic maps up to row operations.
//!
//! Each class is represented by its reduced row echelon form, which is built
//! column by column: a column either opens the next pivot row or is a nonzero
//! combination of the pivot rows opened so far. Partial assignments are pruned
//! as soon as some face restricted to the assigned columns is dependent.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::charmap::is_orientable;
use crate::cohomology::FaceTable;
use crate::error::{Error, Result};
use crate::gf2::{bits, independent, Gf2Matrix};
use crate::obstructions::factor_compatible_for;
use crate::simplicial::{PolygonProduct, SimplicialComplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Filter {
    Orientable,
    CSymplectic,
    /// Symplectic criterion over a recognized product of two polygons.
    FactorCompatible,
    /// Both polygon indicator vectors lie in the row space.
    SymplecticProduct,
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "orientable" => Ok(Filter::Orientable),
            "c-symplectic" => Ok(Filter::CSymplectic),
            "factor-compatible" => Ok(Filter::FactorCompatible),
            "symplectic-product" => Ok(Filter::SymplecticProduct),
            other => Err(Error::InvalidInput(format!("unknown filter `{other}`"))),
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Filter::Orientable => "orientable",
            Filter::CSymplectic => "c-symplectic",
            Filter::FactorCompatible => "factor-compatible",
            Filter::SymplecticProduct => "symplectic-product",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub n: usize,
    pub filters: Vec<Filter>,
    /// Worker threads; zero uses the rayon default.
    pub jobs: usize,
    pub count_only: bool,
}

impl SearchConfig {
    pub fn new(n: usize) -> Self {
        SearchConfig {
            n,
            filters: Vec::new(),
            jobs: 0,
            count_only: false,
        }
    }

    pub fn filter(mut self, f: Filter) -> Self {
        self.filters.push(f);
        self
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn count_only(mut self, yes: bool) -> Self {
        self.count_only = yes;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub n: usize,
    /// Column codes of each canonical form, in increasing lexicographic order.
    /// Empty when only counting.
    pub classes: Vec<Vec<u64>>,
    pub total: usize,
}

impl Census {
    pub fn matrices(&self) -> Vec<Gf2Matrix> {
        self.classes
            .iter()
            .map(|c| Gf2Matrix::from_column_codes(c, self.n).expect("census codes fit"))
            .collect()
    }

    /// One comma-separated line of codes per class, then `TOTAL: <count>`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.classes {
            let s: Vec<String> = c.iter().map(ToString::to_string).collect();
            out.push_str(&s.join(","));
            out.push('\n');
        }
        out.push_str(&format!("TOTAL: {}\n", self.total));
        out
    }
}

struct Search<'a> {
    m: usize,
    n: usize,
    /// For each column `j`, the traces on `[0, j]` of facets whose largest
    /// vertex in that range is `j`, kept maximal.
    checks: Vec<Vec<u64>>,
    filters: &'a [Filter],
    faces: Option<FaceTable>,
    product: Option<PolygonProduct>,
    count_only: bool,
}

#[derive(Clone)]
struct Prefix {
    codes: Vec<u64>,
    rank: usize,
}

impl<'a> Search<'a> {
    fn new(k: &SimplicialComplex, config: &'a SearchConfig) -> Result<Self> {
        let m = k.m();
        let n = config.n;
        if n == 0 || n > 16 {
            return Err(Error::Capacity {
                what: "rows",
                limit: 16,
                found: n,
            });
        }
        let mut checks = vec![Vec::new(); m];
        for (j, check) in checks.iter_mut().enumerate() {
            let below = (1u64 << j) | ((1u64 << j) - 1);
            let mut traces: Vec<u64> = k
                .facets()
                .iter()
                .filter(|&&f| f >> j & 1 == 1)
                .map(|&f| f & below)
                .collect();
            traces.sort_unstable();
            traces.dedup();
            let maximal: Vec<u64> = traces
                .iter()
                .copied()
                .filter(|&t| !traces.iter().any(|&u| u != t && u & t == t))
                .collect();
            *check = maximal;
        }
        let needs_product = config
            .filters
            .iter()
            .any(|f| matches!(f, Filter::FactorCompatible | Filter::SymplecticProduct));
        let product = if needs_product {
            Some(k.recognize_polygon_product_dual().ok_or(Error::NotPolygonProduct)?)
        } else {
            None
        };
        let faces = config.filters.contains(&Filter::CSymplectic).then(|| FaceTable::new(k));
        Ok(Search {
            m,
            n,
            checks,
            filters: &config.filters,
            faces,
            product,
            count_only: config.count_only,
        })
    }

    fn candidates(&self, p: &Prefix) -> impl Iterator<Item = (u64, usize)> {
        let r = p.rank;
        let j = p.codes.len();
        let can_skip = self.m - j > self.n - r;
        let free = if can_skip { 1u64..1 << r } else { 1..1 };
        let pivot = (r < self.n).then_some((1u64 << r, r + 1));
        free.map(move |c| (c, r)).chain(pivot)
    }

    fn admissible(&self, codes: &[u64]) -> bool {
        let j = codes.len() - 1;
        let mut cols = Vec::with_capacity(8);
        self.checks[j].iter().all(|&t| {
            cols.clear();
            cols.extend(bits(t).map(|v| codes[v]));
            independent(&cols)
        })
    }

    fn extend(&self, p: &Prefix, out: &mut Vec<Prefix>) {
        for (c, rank) in self.candidates(p) {
            let mut codes = p.codes.clone();
            codes.push(c);
            if self.admissible(&codes) {
                out.push(Prefix { codes, rank });
            }
        }
    }

    fn accepts(&self, codes: &[u64]) -> bool {
        if self.filters.is_empty() {
            return true;
        }
        let lambda = Gf2Matrix::from_column_codes(codes, self.n).expect("codes fit");
        self.filters.iter().all(|f| match f {
            Filter::Orientable => is_orientable(&lambda),
            Filter::CSymplectic => {
                let faces = self.faces.as_ref().expect("built for this filter");
                is_orientable(&lambda)
                    && lambda
                        .row_space()
                        .map(|mut rs| rs.any(|w| faces.betti(w.bits())[2] > 0))
                        .unwrap_or(false)
            }
            Filter::FactorCompatible => {
                let p = self.product.as_ref().expect("recognized");
                factor_compatible_for(p, &lambda).map(|c| c.compatible).unwrap_or(false)
            }
            Filter::SymplecticProduct => {
                let p = self.product.as_ref().expect("recognized");
                factor_compatible_for(p, &lambda)
                    .map(|c| c.chi1_in_row_space && c.chi2_in_row_space)
                    .unwrap_or(false)
            }
        })
    }

    fn run(&self, start: Prefix, found: &mut Vec<Vec<u64>>, count: &mut usize) {
        let mut stack = vec![start];
        let mut children = Vec::new();
        while let Some(p) = stack.pop() {
            if p.codes.len() == self.m {
                if p.rank == self.n && self.accepts(&p.codes) {
                    *count += 1;
                    if !self.count_only {
                        found.push(p.codes);
                    }
                }
                continue;
            }
            children.clear();
            self.extend(&p, &mut children);
            stack.extend(children.drain(..).rev());
        }
    }
}

pub fn enumerate_char_maps(k: &SimplicialComplex, config: &SearchConfig) -> Result<Census> {
    let search = Search::new(k, config)?;
    let prefixes = partition_search(&search, 256);
    let work = || {
        prefixes
            .par_iter()
            .map(|p| {
                let mut found = Vec::new();
                let mut count = 0;
                search.run(p.clone(), &mut found, &mut count);
                (found, count)
            })
            .collect::<Vec<_>>()
    };
    let parts = if config.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| Error::InvalidInput(e.to_string()))?
            .install(work)
    } else {
        work()
    };
    let mut classes = Vec::new();
    let mut total = 0;
    for (found, count) in parts {
        classes.extend(found);
        total += count;
    }
    Ok(Census {
        n: config.n,
        classes,
        total,
    })
}

/// Expands the search breadth-first until there are at least `target`
/// independent prefixes or the columns run out.
fn partition_search(search: &Search, target: usize) -> Vec<Prefix> {
    let mut level = vec![Prefix {
        codes: Vec::new(),
        rank: 0,
    }];
    let mut depth = 0;
    while level.len() < target && depth < search.m {
        let mut next = Vec::new();
        for p in &level {
            search.extend(p, &mut next);
        }
        level = next;
        depth += 1;
    }
    level
}

/// Canonical forms found by trying every tuple of nonzero column codes and
/// reducing each full-rank solution. Only for tiny complexes.
pub fn brute_force_classes(k: &SimplicialComplex, n: usize) -> Result<Vec<Vec<u64>>> {
    if k.m() > 7 || n > 4 {
        return Err(Error::Capacity {
            what: "brute-force vertices",
            limit: 7,
            found: k.m(),
        });
    }
    let m = k.m();
    let facets = k.facets().to_vec();
    let mut classes = BTreeSet::new();
    let mut codes = vec![0u64; m];
    fn rec(j: usize, m: usize, n: usize, facets: &[u64], codes: &mut Vec<u64>, out: &mut BTreeSet<Vec<u64>>) {
        if j == m {
            let ok = facets.iter().all(|&f| {
                let cols: Vec<u64> = bits(f).map(|v| codes[v]).collect();
                independent(&cols)
            });
            if ok {
                let mat = Gf2Matrix::from_column_codes(codes, n).expect("fits");
                let r = mat.rref();
                if r.rank == n {
                    out.insert(r.matrix.column_codes());
                }
            }
            return;
        }
        for c in 1..1u64 << n {
            codes[j] = c;
            rec(j + 1, m, n, facets, codes, out);
        }
    }
    rec(0, m, n, &facets, &mut codes, &mut classes);
    Ok(classes.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charmap::is_characteristic;

    #[test]
    fn matches_brute_force() {
        let cases = [
            (SimplicialComplex::polygon_boundary(5).unwrap(), 2),
            (SimplicialComplex::polygon_boundary(6).unwrap(), 2),
            (SimplicialComplex::polygon_product_dual(3, 3).unwrap(), 4),
            (SimplicialComplex::boundary_of_simplex(4).unwrap(), 4),
            (SimplicialComplex::boundary_of_simplex(3).unwrap(), 3),
        ];
        for (k, n) in cases {
            let census = enumerate_char_maps(&k, &SearchConfig::new(n)).unwrap();
            let oracle = brute_force_classes(&k, n).unwrap();
            assert_eq!(census.classes, oracle);
            assert_eq!(census.total, oracle.len());
        }
    }

    #[test]
    fn triangle_square_counts() {
        let k = SimplicialComplex::polygon_product_dual(3, 4).unwrap();
        let all = enumerate_char_maps(&k, &SearchConfig::new(4)).unwrap();
        assert_eq!(all.total, 69);
        for codes in &all.classes {
            let mat = Gf2Matrix::from_column_codes(codes, 4).unwrap();
            assert!(is_characteristic(&k, &mat).unwrap().is_ok());
            assert_eq!(mat.rref().matrix, mat);
        }
        let cs = enumerate_char_maps(&k, &SearchConfig::new(4).filter(Filter::CSymplectic)).unwrap();
        assert_eq!(cs.total, 0);
    }

    #[test]
    fn square_square_counts() {
        let k = SimplicialComplex::polygon_product_dual(4, 4).unwrap();
        let count = |f: Option<Filter>| {
            let mut c = SearchConfig::new(4).count_only(true).jobs(2);
            c.filters.extend(f);
            enumerate_char_maps(&k, &c).unwrap().total
        };
        assert_eq!(count(None), 543);
        assert_eq!(count(Some(Filter::SymplecticProduct)), 7);
        assert_eq!(count(Some(Filter::FactorCompatible)), 19);
        assert_eq!(count(Some(Filter::CSymplectic)), 19);
    }

    #[test]
    fn sorted_output_and_rendering() {
        let k = SimplicialComplex::polygon_boundary(4).unwrap();
        let c = enumerate_char_maps(&k, &SearchConfig::new(2)).unwrap();
        assert!(c.classes.windows(2).all(|w| w[0] < w[1]));
        assert!(c.render().ends_with(&format!("TOTAL: {}\n", c.total)));
        assert_eq!(c.render().lines().next().unwrap(), "1,2,1,2");
    }

    #[test]
    fn product_filter_needs_product() {
        let k = SimplicialComplex::boundary_of_simplex(4).unwrap();
        let c = SearchConfig::new(4).filter(Filter::FactorCompatible);
        assert!(matches!(enumerate_char_maps(&k, &c), Err(Error::NotPolygonProduct)));
        assert_eq!("c-symplectic".parse::<Filter>().unwrap(), Filter::CSymplectic);
        assert!("bogus".parse::<Filter>().is_err());
    }
}
