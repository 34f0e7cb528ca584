//! Finite simplicial complexes on `{0, .., m-1}` stored by their facets.
//!
//! Every face is a `u64` vertex mask. The empty complex (only the empty
//! face) is stored with the single facet `0`.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{bits, low_mask, mask_of};
use crate::homology;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    m: usize,
    facets: Vec<u64>,
}

/// A full subcomplex re-indexed onto `{0, .., |omega|-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullSubcomplex {
    pub complex: SimplicialComplex,
    /// `vertices[k]` is the original label of new vertex `k`.
    pub vertices: Vec<usize>,
}

/// Face numbers and minimal non-faces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceCensus {
    /// `f_vector[k]` counts faces with `k` vertices, so `f_vector[0] = 1`.
    pub f_vector: Vec<usize>,
    /// `missing_faces[k]` lists the minimal non-faces with `k` vertices.
    pub missing_faces: Vec<Vec<u64>>,
    pub flag: bool,
}

impl FaceCensus {
    pub fn missing_of_size(&self, k: usize) -> &[u64] {
        self.missing_faces.get(k).map_or(&[], |v| v.as_slice())
    }

    pub fn total_missing(&self) -> usize {
        self.missing_faces.iter().map(Vec::len).sum()
    }
}

/// Both factors of a join of two polygon boundaries, as cyclic vertex orders.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolygonProduct {
    pub m1: usize,
    pub m2: usize,
    /// Cyclic order of the smaller factor (ties: the one containing vertex 0).
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

impl PolygonProduct {
    pub fn first_mask(&self) -> u64 {
        mask_of(self.first.iter().copied())
    }

    pub fn second_mask(&self) -> u64 {
        mask_of(self.second.iter().copied())
    }
}

fn vertex_list(mask: u64) -> Vec<usize> {
    bits(mask).collect()
}

fn canonicalize(mut facets: Vec<u64>) -> Vec<u64> {
    facets.sort_unstable_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
    facets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(facets.len());
    for f in facets {
        if !kept.iter().any(|&g| f & g == f) {
            kept.push(f);
        }
    }
    if kept.is_empty() {
        kept.push(0);
    }
    kept.sort_by_cached_key(|&f| vertex_list(f));
    kept
}

impl SimplicialComplex {
    /// Builds a complex from facet masks, dropping duplicates and non-maximal sets.
    pub fn new(m: usize, facets: Vec<u64>) -> Result<Self> {
        if m > 64 {
            return Err(Error::Capacity {
                what: "vertex count",
                limit: 64,
                found: m,
            });
        }
        let all = low_mask(m);
        if let Some(&bad) = facets.iter().find(|&&f| f & !all != 0) {
            let vertex = 63 - (bad & !all).leading_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex, m });
        }
        Ok(SimplicialComplex {
            m,
            facets: canonicalize(facets),
        })
    }

    pub fn from_facets<F: AsRef<[usize]>>(m: usize, facets: &[F]) -> Result<Self> {
        let mut masks = Vec::with_capacity(facets.len());
        for f in facets {
            let mut mask = 0u64;
            for &v in f.as_ref() {
                if v >= m || v >= 64 {
                    return Err(Error::VertexOutOfRange { vertex: v, m });
                }
                mask |= 1 << v;
            }
            masks.push(mask);
        }
        Self::new(m, masks)
    }

    /// The complex whose only face is the empty set.
    pub fn empty(m: usize) -> Self {
        SimplicialComplex { m, facets: vec![0] }
    }

    /// Boundary of a polygon with `q >= 3` vertices, labelled cyclically.
    pub fn polygon_boundary(q: usize) -> Result<Self> {
        if q < 3 {
            return Err(Error::InvalidInput(format!(
                "a polygon needs at least 3 vertices, got {q}"
            )));
        }
        let edges = (0..q).map(|i| (1u64 << i) | (1u64 << ((i + 1) % q))).collect();
        Self::new(q, edges)
    }

    /// Boundary of the `d`-simplex on `d + 1` vertices. `d = 1` gives `S^0`.
    pub fn boundary_of_simplex(d: usize) -> Result<Self> {
        let m = d + 1;
        let all = low_mask(m);
        Self::new(m, (0..m).map(|v| all & !(1 << v)).collect())
    }

    /// Join of `k` copies of `S^0`, the boundary of the `k`-dimensional cross-polytope.
    pub fn cross_polytope(k: usize) -> Result<Self> {
        let s0 = Self::boundary_of_simplex(1)?;
        (0..k).try_fold(Self::empty(0), |acc, _| acc.join(&s0))
    }

    /// `join(boundary(m1-gon), boundary(m2-gon))`, the dual of a product of polygons.
    pub fn polygon_product_dual(m1: usize, m2: usize) -> Result<Self> {
        Self::polygon_boundary(m1)?.join(&Self::polygon_boundary(m2)?)
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| vertex_list(f)).collect()
    }

    pub fn is_empty_complex(&self) -> bool {
        self.facets == [0]
    }

    /// Maximum facet size minus one; `-1` for the empty complex.
    pub fn dim(&self) -> isize {
        self.facets
            .iter()
            .map(|f| f.count_ones() as isize)
            .max()
            .unwrap_or(0)
            - 1
    }

    pub fn is_pure(&self) -> bool {
        let k = self.facets[0].count_ones();
        self.facets.iter().all(|f| f.count_ones() == k)
    }

    /// Union of all facets.
    pub fn vertex_mask(&self) -> u64 {
        self.facets.iter().fold(0, |a, f| a | f)
    }

    pub fn has_face(&self, sigma: u64) -> Result<bool> {
        if sigma & !low_mask(self.m) != 0 {
            let vertex = 63 - (sigma & !low_mask(self.m)).leading_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex, m: self.m });
        }
        Ok(self.contains(sigma))
    }

    #[inline]
    pub(crate) fn contains(&self, sigma: u64) -> bool {
        self.facets.iter().any(|&f| f & sigma == sigma)
    }

    /// Faces contained in `omega`, kept on the original labels.
    pub fn restrict(&self, omega: u64) -> SimplicialComplex {
        SimplicialComplex {
            m: self.m,
            facets: canonicalize(self.facets.iter().map(|f| f & omega).collect()),
        }
    }

    pub fn full_subcomplex(&self, omega: u64) -> FullSubcomplex {
        let omega = omega & low_mask(self.m);
        let vertices = vertex_list(omega);
        let facets = self
            .facets
            .iter()
            .map(|&f| compress(f & omega, omega))
            .collect();
        FullSubcomplex {
            complex: SimplicialComplex {
                m: vertices.len(),
                facets: canonicalize(facets),
            },
            vertices,
        }
    }

    /// All faces with exactly `k` vertices, sorted.
    pub fn faces_of_size(&self, k: usize) -> Vec<u64> {
        let mut out = HashSet::new();
        for &f in &self.facets {
            if f.count_ones() as usize >= k {
                subsets_of_size(f, k, &mut |s| {
                    out.insert(s);
                });
            }
        }
        let mut v: Vec<u64> = out.into_iter().collect();
        v.sort_unstable();
        v
    }

    /// Faces grouped by vertex count: `result[k]` lists faces with `k` vertices.
    pub fn faces_by_size(&self) -> Vec<Vec<u64>> {
        let top = (self.dim() + 1) as usize;
        (0..=top).map(|k| self.faces_of_size(k)).collect()
    }

    /// `f_vector()[k]` counts faces with `k` vertices.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_size().iter().map(Vec::len).collect()
    }

    /// Face numbers and the h-vector of a pure complex of dimension `n - 1`.
    ///
    /// `h_k = sum_{i<=k} (-1)^(k-i) C(n-i, k-i) f_(i-1)`.
    pub fn f_and_h_vector(&self) -> Result<(Vec<usize>, Vec<i64>)> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        let f = self.f_vector();
        let n = f.len() - 1;
        let h = (0..=n)
            .map(|k| {
                (0..=k)
                    .map(|i| {
                        let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                        sign * binomial(n - i, k - i) * f[i] as i64
                    })
                    .sum()
            })
            .collect();
        Ok((f, h))
    }

    /// Neighbourhood mask of each vertex in the 1-skeleton.
    pub fn adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.m];
        for &f in &self.facets {
            for v in bits(f) {
                adj[v] |= f & !(1 << v);
            }
        }
        adj
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency().iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn missing_face_census(&self) -> FaceCensus {
        let faces = self.faces_by_size();
        let f_vector: Vec<usize> = faces.iter().map(Vec::len).collect();
        let max_k = (self.dim() + 2).max(1) as usize;
        let mut missing = vec![Vec::new(); max_k + 1];
        let all = low_mask(self.m);
        for v in bits(all & !self.vertex_mask()) {
            missing[1].push(1u64 << v);
        }
        let mut lower: HashSet<u64> = faces.get(1).map_or_else(HashSet::new, |f| f.iter().copied().collect());
        for k in 2..=max_k {
            let current: HashSet<u64> = faces.get(k).map_or_else(HashSet::new, |f| f.iter().copied().collect());
            let mut found = Vec::new();
            for &tau in &lower {
                let top = 63 - tau.leading_zeros() as usize;
                for v in top + 1..self.m {
                    let sigma = tau | (1 << v);
                    if current.contains(&sigma) {
                        continue;
                    }
                    if bits(sigma).all(|u| lower.contains(&(sigma & !(1 << u)))) {
                        found.push(sigma);
                    }
                }
            }
            found.sort_by_cached_key(|&s| vertex_list(s));
            missing[k] = found;
            lower = current;
        }
        let flag = missing
            .iter()
            .enumerate()
            .all(|(k, v)| k == 2 || v.is_empty());
        FaceCensus {
            f_vector,
            missing_faces: missing,
            flag,
        }
    }

    /// `Some(q)` iff the complex is exactly a cycle graph on its vertex set with `q >= 3`.
    pub fn is_induced_cycle(&self) -> Option<usize> {
        if self.dim() != 1 || !self.is_pure() {
            return None;
        }
        let vs = self.vertex_mask();
        let q = vs.count_ones() as usize;
        if q < 3 || self.facets.len() != q {
            return None;
        }
        let adj = self.adjacency();
        if bits(vs).any(|v| adj[v].count_ones() != 2) {
            return None;
        }
        (component_count(&adj, vs) == 1).then_some(q)
    }

    /// Simplicial join; the second factor's vertices are shifted by `self.m()`.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let m = self.m + other.m;
        if m > 64 {
            return Err(Error::Capacity {
                what: "vertex count",
                limit: 64,
                found: m,
            });
        }
        let facets = self
            .facets
            .iter()
            .flat_map(|&a| other.facets.iter().map(move |&b| a | (b << self.m)))
            .collect();
        Self::new(m, facets)
    }

    /// Connected sum along the facet `sigma1` of `self` and `sigma2` of `other`,
    /// identifying `sigma2[t]` with `sigma1[t]`. The remaining vertices of
    /// `other` are appended after `self`'s in increasing order.
    pub fn connected_sum(
        &self,
        other: &SimplicialComplex,
        sigma1: &[usize],
        sigma2: &[usize],
    ) -> Result<SimplicialComplex> {
        if sigma1.len() != sigma2.len() {
            return Err(Error::DimensionMismatch {
                expected: sigma1.len(),
                found: sigma2.len(),
            });
        }
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim().max(0) as usize,
                found: other.dim().max(0) as usize,
            });
        }
        let s1 = mask_checked(sigma1, self.m)?;
        let s2 = mask_checked(sigma2, other.m)?;
        if s1.count_ones() as usize != sigma1.len() || s2.count_ones() as usize != sigma2.len() {
            return Err(Error::InvalidInput("gluing simplex repeats a vertex".into()));
        }
        if !self.facets.contains(&s1) || !other.facets.contains(&s2) {
            return Err(Error::InvalidInput(
                "gluing simplex is not a facet of both complexes".into(),
            ));
        }
        let mut relabel = vec![usize::MAX; other.m];
        for (&a, &b) in sigma1.iter().zip(sigma2) {
            relabel[b] = a;
        }
        let mut next = self.m;
        for slot in relabel.iter_mut().filter(|s| **s == usize::MAX) {
            *slot = next;
            next += 1;
        }
        let mut facets: Vec<u64> = self.facets.iter().copied().filter(|&f| f != s1).collect();
        for &f in other.facets.iter().filter(|&&f| f != s2) {
            facets.push(bits(f).fold(0, |acc, v| acc | (1u64 << relabel[v])));
        }
        Self::new(next, facets)
    }

    /// Splits a 3-dimensional complex as a join of two polygon boundaries.
    ///
    /// In a join every vertex of one factor is adjacent to every vertex of the
    /// other, so each connected component of the non-adjacency graph lies in a
    /// single factor. The search runs over bipartitions of those components.
    pub fn recognize_polygon_product_dual(&self) -> Option<PolygonProduct> {
        if self.dim() != 3 || !self.is_pure() {
            return None;
        }
        let vs = self.vertex_mask();
        if vs != low_mask(self.m) {
            return None;
        }
        let adj = self.adjacency();
        let comps = components(
            &(0..self.m).map(|v| vs & !adj[v] & !(1 << v)).collect::<Vec<_>>(),
            vs,
        );
        let c = comps.len();
        if !(2..=24).contains(&c) {
            return None;
        }
        for sel in 0u64..(1 << (c - 1)) {
            let a = comps[0] | bits(sel).fold(0, |acc, i| acc | comps[i + 1]);
            let b = vs & !a;
            if b == 0 || a.count_ones() < 3 || b.count_ones() < 3 {
                continue;
            }
            let ka = self.restrict(a);
            let kb = self.restrict(b);
            if ka.is_induced_cycle().is_none() || kb.is_induced_cycle().is_none() {
                continue;
            }
            let joined: Vec<u64> = ka
                .facets
                .iter()
                .flat_map(|&x| kb.facets.iter().map(move |&y| x | y))
                .collect();
            if canonicalize(joined) != self.facets {
                continue;
            }
            let (ca, cb) = (cyclic_order(&ka), cyclic_order(&kb));
            let (first, second) = if cb.len() < ca.len() { (cb, ca) } else { (ca, cb) };
            return Some(PolygonProduct {
                m1: first.len(),
                m2: second.len(),
                first,
                second,
            });
        }
        None
    }

    /// Exact reduced rational Betti numbers `(b~_-1, .., b~_dim)`.
    pub fn reduced_betti_q(&self) -> Vec<usize> {
        homology::reduced_betti(&self.faces_by_size())
    }
}

/// Cycle order starting at the smallest vertex, stepping to its smaller neighbour.
fn cyclic_order(cycle: &SimplicialComplex) -> Vec<usize> {
    let adj = cycle.adjacency();
    let vs = cycle.vertex_mask();
    let start = vs.trailing_zeros() as usize;
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = adj[start].trailing_zeros() as usize;
    while cur != start {
        order.push(cur);
        let next = (adj[cur] & !(1 << prev)).trailing_zeros() as usize;
        prev = cur;
        cur = next;
    }
    order
}

fn mask_checked(vs: &[usize], m: usize) -> Result<u64> {
    let mut mask = 0;
    for &v in vs {
        if v >= m {
            return Err(Error::VertexOutOfRange { vertex: v, m });
        }
        mask |= 1u64 << v;
    }
    Ok(mask)
}

/// Packs the bits of `x` selected by `omega` into the low bits.
#[inline]
pub(crate) fn compress(x: u64, omega: u64) -> u64 {
    let mut out = 0;
    for (k, v) in bits(omega).enumerate() {
        out |= ((x >> v) & 1) << k;
    }
    out
}

pub(crate) fn subsets_of_size(set: u64, k: usize, f: &mut impl FnMut(u64)) {
    fn go(rest: u64, k: usize, acc: u64, f: &mut impl FnMut(u64)) {
        if k == 0 {
            f(acc);
            return;
        }
        if (rest.count_ones() as usize) < k {
            return;
        }
        let low = rest & rest.wrapping_neg();
        go(rest & !low, k - 1, acc | low, f);
        go(rest & !low, k, acc, f);
    }
    go(set, k, 0, f);
}

/// Connected components (as masks) of the graph `adj` restricted to `within`.
pub(crate) fn components(adj: &[u64], within: u64) -> Vec<u64> {
    let mut left = within;
    let mut out = Vec::new();
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let grown = bits(frontier).fold(0, |acc, v| acc | adj[v]) & within & !comp;
            comp |= grown;
            frontier = grown;
        }
        out.push(comp);
        left &= !comp;
    }
    out
}

#[inline]
pub(crate) fn component_count(adj: &[u64], within: u64) -> usize {
    let mut left = within;
    let mut count = 0;
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let mut grown = 0;
            let mut f = frontier;
            while f != 0 {
                grown |= adj[f.trailing_zeros() as usize];
                f &= f - 1;
            }
            grown &= within & !comp;
            comp |= grown;
            frontier = grown;
        }
        count += 1;
        left &= !comp;
    }
    count
}

pub(crate) fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(m={}, facets={:?})", self.m, self.facet_lists())
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .facet_lists()
            .iter()
            .map(|fl| {
                let s: Vec<String> = fl.iter().map(ToString::to_string).collect();
                format!("({})", s.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l_fig() -> SimplicialComplex {
        crate::catalog::complex("L-fig1").unwrap()
    }

    #[test]
    fn canonical_storage() {
        let k = SimplicialComplex::from_facets(4, &[vec![2, 3], vec![0, 1], vec![1], vec![0, 1]]).unwrap();
        assert_eq!(k.facet_lists(), vec![vec![0, 1], vec![2, 3]]);
        assert!(SimplicialComplex::from_facets(3, &[vec![0, 3]]).is_err());
        let e = SimplicialComplex::new(3, vec![]).unwrap();
        assert!(e.is_empty_complex());
        assert_eq!(e.dim(), -1);
    }

    #[test]
    fn faces_of_simplex_boundary() {
        let k = SimplicialComplex::boundary_of_simplex(4).unwrap();
        assert!(k.has_face(0b01111).unwrap());
        assert!(!k.has_face(0b11111).unwrap());
        assert!(k.has_face(0).unwrap());
        assert!(k.has_face(1 << 5).is_err());
        assert!(l_fig().has_face(mask_of([0, 6, 8])).unwrap());
    }

    #[test]
    fn full_subcomplex_basics() {
        let k = SimplicialComplex::polygon_product_dual(5, 4).unwrap();
        assert_eq!(k.full_subcomplex(low_mask(9)).complex, k);
        assert!(k.full_subcomplex(0).complex.is_empty_complex());
        let sub = k.full_subcomplex(mask_of([0, 2, 5, 7]));
        assert_eq!(sub.vertices, vec![0, 2, 5, 7]);
        assert_eq!(sub.complex.is_induced_cycle(), Some(4));
    }

    #[test]
    fn census_examples() {
        let c = SimplicialComplex::boundary_of_simplex(4).unwrap().missing_face_census();
        assert_eq!(c.total_missing(), 1);
        assert_eq!(c.missing_of_size(5), &[0b11111]);
        assert!(!c.flag);

        let cross = SimplicialComplex::cross_polytope(4).unwrap();
        let c = cross.missing_face_census();
        assert!(c.flag);
        assert_eq!(c.missing_of_size(2).len(), 4);

        let p36 = SimplicialComplex::polygon_product_dual(3, 6).unwrap();
        let c = p36.missing_face_census();
        assert_eq!(c.missing_of_size(3), &[0b111]);
        assert!(!c.flag);
    }

    #[test]
    fn h_vectors() {
        let (f, h) = SimplicialComplex::polygon_product_dual(4, 4)
            .unwrap()
            .f_and_h_vector()
            .unwrap();
        assert_eq!(f, vec![1, 8, 24, 32, 16]);
        assert_eq!(h, vec![1, 4, 6, 4, 1]);
        let (f, h) = SimplicialComplex::boundary_of_simplex(4).unwrap().f_and_h_vector().unwrap();
        assert_eq!(f, vec![1, 5, 10, 10, 5]);
        assert_eq!(h, vec![1, 1, 1, 1, 1]);
        let mixed = SimplicialComplex::from_facets(3, &[vec![0, 1], vec![2]]).unwrap();
        assert!(matches!(mixed.f_and_h_vector(), Err(Error::NotPure)));
    }

    #[test]
    fn cycles() {
        assert_eq!(SimplicialComplex::polygon_boundary(4).unwrap().is_induced_cycle(), Some(4));
        let path = SimplicialComplex::from_facets(4, &[[0, 1], [1, 2], [2, 3]]).unwrap();
        assert_eq!(path.is_induced_cycle(), None);
        let two = SimplicialComplex::polygon_boundary(3)
            .unwrap()
            .join(&SimplicialComplex::empty(3))
            .unwrap();
        assert_eq!(two.is_induced_cycle(), Some(3));
    }

    #[test]
    fn joins() {
        let s0 = SimplicialComplex::boundary_of_simplex(1).unwrap();
        assert_eq!(s0.join(&s0).unwrap().is_induced_cycle(), Some(4));
        let t = SimplicialComplex::polygon_product_dual(3, 3).unwrap();
        assert_eq!(t.m(), 6);
        assert_eq!(t.facets().len(), 9);
        assert_eq!(t.reduced_betti_q(), vec![0, 0, 0, 0, 1]);
        let ixq = s0.join(&l_fig()).unwrap();
        assert_eq!(ixq.m(), 12);
        assert_eq!(ixq.facets().len(), 32);
    }

    #[test]
    fn connected_sum_of_tetrahedra() {
        let t = SimplicialComplex::boundary_of_simplex(3).unwrap();
        let s = t.connected_sum(&t, &[0, 1, 2], &[0, 1, 2]).unwrap();
        assert_eq!(s.m(), 5);
        assert_eq!(s.facets().len(), 6);
        assert_eq!(s.reduced_betti_q(), vec![0, 0, 0, 1]);
        assert!(t.connected_sum(&t, &[0, 1, 2], &[0, 1, 3]).is_ok());
        let p = SimplicialComplex::polygon_boundary(4).unwrap();
        assert!(p.connected_sum(&p, &[0, 2], &[0, 1]).is_err());
    }

    #[test]
    fn polygon_product_recognition() {
        let k = SimplicialComplex::polygon_product_dual(4, 6).unwrap();
        let p = k.recognize_polygon_product_dual().unwrap();
        assert_eq!((p.m1, p.m2), (4, 6));
        assert_eq!(p.first, vec![0, 1, 2, 3]);
        assert_eq!(p.second, vec![4, 5, 6, 7, 8, 9]);
        let k = SimplicialComplex::polygon_product_dual(7, 3).unwrap();
        let p = k.recognize_polygon_product_dual().unwrap();
        assert_eq!((p.m1, p.m2), (3, 7));
        assert_eq!(p.first, vec![7, 8, 9]);
        assert!(SimplicialComplex::boundary_of_simplex(4)
            .unwrap()
            .recognize_polygon_product_dual()
            .is_none());
        assert!(crate::catalog::complex("lutz_m10_247880")
            .unwrap()
            .recognize_polygon_product_dual()
            .is_none());
        let cube = SimplicialComplex::cross_polytope(4).unwrap();
        let p = cube.recognize_polygon_product_dual().unwrap();
        assert_eq!((p.m1, p.m2), (4, 4));
    }

    #[test]
    fn homology_small_cases() {
        assert_eq!(SimplicialComplex::empty(0).reduced_betti_q(), vec![1]);
        let c4 = SimplicialComplex::polygon_boundary(4).unwrap();
        assert_eq!(c4.reduced_betti_q(), vec![0, 0, 1]);
        let two_points = SimplicialComplex::boundary_of_simplex(1).unwrap();
        assert_eq!(two_points.reduced_betti_q(), vec![0, 1]);
        let sphere = SimplicialComplex::boundary_of_simplex(4).unwrap();
        assert_eq!(sphere.reduced_betti_q(), vec![0, 0, 0, 0, 1]);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(10, 0), 1);
    }
}
