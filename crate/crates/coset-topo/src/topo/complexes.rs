//! Simplicial complex constructions: order complex, minimal cover,
//! cross-cut complex, nerve and barycentric subdivision.

use super::{Poset, PosetKind, SimplicialComplex};
use crate::bits::{BitMatrix, BitSet};
use crate::grp::FiniteGroup;
use crate::lattice::SubgroupLattice;
use crate::{Error, Result};
use rayon::prelude::*;

fn check_budget(count: usize, budget: usize) -> Result<()> {
    if count > budget {
        Err(Error::Budget(format!(
            "simplex count {count} exceeds budget {budget}"
        )))
    } else {
        Ok(())
    }
}

/// Order complex of a poset: simplices are the chains, optionally cut at
/// `max_dim`. Chains are enumerated by DFS over the comparability DAG,
/// extending always by strictly greater elements, so each chain appears
/// exactly once.
pub fn order_complex(p: &Poset, max_dim: Option<usize>, budget: usize) -> Result<SimplicialComplex> {
    let n = p.len();
    let succ: Vec<Vec<u32>> = (0..n)
        .map(|i| p.above(i).map(|j| j as u32).collect())
        .collect();
    let cap = max_dim.map(|d| d + 1).unwrap_or(usize::MAX);
    let mut dims: Vec<Vec<Vec<u32>>> = Vec::new();
    let mut total = 0usize;

    fn rec(
        v: u32,
        chain: &mut Vec<u32>,
        succ: &[Vec<u32>],
        cap: usize,
        dims: &mut Vec<Vec<Vec<u32>>>,
        total: &mut usize,
        budget: usize,
    ) -> Result<()> {
        let d = chain.len() - 1;
        while dims.len() <= d {
            dims.push(Vec::new());
        }
        let mut simplex = chain.clone();
        simplex.sort_unstable();
        dims[d].push(simplex);
        *total += 1;
        check_budget(*total, budget)?;
        if chain.len() < cap {
            for &w in &succ[v as usize] {
                chain.push(w);
                rec(w, chain, succ, cap, dims, total, budget)?;
                chain.pop();
            }
        }
        Ok(())
    }

    let mut chain = Vec::new();
    for start in 0..n as u32 {
        chain.clear();
        chain.push(start);
        rec(start, &mut chain, &succ, cap, &mut dims, &mut total, budget)?;
    }
    for d in dims.iter_mut() {
        d.sort_unstable();
    }
    while dims.last().map(|d| d.is_empty()).unwrap_or(false) {
        dims.pop();
    }
    Ok(SimplicialComplex {
        dims,
        truncated_at: max_dim,
    })
}

/// All cosets of maximal subgroups, as bit sets. Every proper coset is
/// contained in one of these.
fn maximal_cosets(g: &FiniteGroup, lat: &SubgroupLattice) -> Vec<BitSet> {
    let mut out = Vec::new();
    for i in 0..lat.top() {
        if lat.maximal[i] {
            for (_, members) in super::posets::cosets_of(g, &lat.subgroups[i]) {
                out.push(members.bits().clone());
            }
        }
    }
    out
}

/// The minimal cover complex M(G) up to dimension `max_dim` (all
/// dimensions when `None`): vertices are group elements, and a vertex
/// tuple is a simplex iff it lies in a proper coset.
pub fn minimal_cover_skeleton(
    g: &FiniteGroup,
    lat: &SubgroupLattice,
    max_dim: Option<usize>,
    budget: usize,
) -> Result<SimplicialComplex> {
    let n = g.order();
    let covers = maximal_cosets(g, lat);
    let cap = max_dim.unwrap_or(n.saturating_sub(1));
    // enumerate subsets of each maximal coset up to the cap, dedup globally
    let mut seen: std::collections::HashSet<Vec<u32>> = std::collections::HashSet::new();
    let mut dims: Vec<Vec<Vec<u32>>> = Vec::new();
    // dimension 0: every element of a nontrivial group is a vertex
    if n > 1 {
        dims.push((0..n as u32).map(|v| vec![v]).collect());
    }
    let mut total = dims.first().map(|d| d.len()).unwrap_or(0);
    for d in 1..=cap {
        let size = d + 1;
        let mut layer: Vec<Vec<u32>> = Vec::new();
        let combos: Vec<Vec<Vec<u32>>> = covers
            .par_iter()
            .map(|cov| {
                let members: Vec<u32> = cov.iter().map(|x| x as u32).collect();
                let mut local = Vec::new();
                if members.len() >= size {
                    let mut combo: Vec<usize> = (0..size).collect();
                    loop {
                        local.push(combo.iter().map(|&i| members[i]).collect::<Vec<u32>>());
                        // advance to the next combination
                        let mut i = size as isize - 1;
                        while i >= 0 && combo[i as usize] == i as usize + members.len() - size {
                            i -= 1;
                        }
                        if i < 0 {
                            break;
                        }
                        let i = i as usize;
                        combo[i] += 1;
                        for j in i + 1..size {
                            combo[j] = combo[j - 1] + 1;
                        }
                    }
                }
                local
            })
            .collect();
        for chunk in combos {
            for s in chunk {
                if seen.insert(s.clone()) {
                    layer.push(s);
                    total += 1;
                }
            }
        }
        check_budget(total, budget)?;
        if layer.is_empty() {
            break;
        }
        layer.sort_unstable();
        dims.push(layer);
        seen.clear(); // tuples of the next size never collide with this one
    }
    while dims.last().map(|d| d.is_empty()).unwrap_or(false) {
        dims.pop();
    }
    Ok(SimplicialComplex {
        dims,
        truncated_at: max_dim,
    })
}

/// Cross-cut complex on the cosets of prime-order subgroups: a set of
/// such cosets spans a simplex iff it is bounded in C(G), i.e. has a
/// common element (lower bound) or lies in a common proper coset (upper
/// bound). For the degenerate prime-cyclic case (no proper prime-order
/// subgroup) the singletons stand in and the complex is discrete.
pub fn crosscut_prime_complex(
    g: &FiniteGroup,
    lat: &SubgroupLattice,
    budget: usize,
) -> Result<SimplicialComplex> {
    fn is_prime(n: usize) -> bool {
        n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
    }
    let mut verts: Vec<BitSet> = Vec::new(); // member sets of the vertex cosets
    for i in 0..lat.top() {
        if is_prime(lat.order_of(i)) {
            for (_, members) in super::posets::cosets_of(g, &lat.subgroups[i]) {
                verts.push(members.bits().clone());
            }
        }
    }
    if verts.is_empty() {
        // G is trivial or cyclic of prime order: fall back to singletons
        if g.order() <= 1 {
            return Ok(SimplicialComplex::empty());
        }
        return Ok(SimplicialComplex {
            dims: vec![(0..g.order() as u32).map(|v| vec![v]).collect()],
            truncated_at: None,
        });
    }
    // deterministic vertex order
    let mut order: Vec<usize> = (0..verts.len()).collect();
    order.sort_by_key(|&i| verts[i].iter().collect::<Vec<_>>());
    let verts: Vec<BitSet> = order.into_iter().map(|i| verts[i].clone()).collect();

    let covers = maximal_cosets(g, lat);
    let n = g.order();
    let mut dims: Vec<Vec<Vec<u32>>> = Vec::new();
    let mut total = 0usize;
    // DFS over vertex subsets with running intersection/union; both the
    // lower-bound and upper-bound conditions are antitone, so dead
    // branches are pruned exactly.
    struct Dfs<'a> {
        verts: &'a [BitSet],
        covers: &'a [BitSet],
        dims: Vec<Vec<Vec<u32>>>,
        total: usize,
        budget: usize,
    }
    impl Dfs<'_> {
        fn bounded(&self, inter: &BitSet, union: &BitSet) -> bool {
            !inter.is_empty() || self.covers.iter().any(|cov| union.is_subset(cov))
        }
        fn run(&mut self, chain: &mut Vec<u32>, inter: &BitSet, union: &BitSet) -> Result<()> {
            let d = chain.len() - 1;
            while self.dims.len() <= d {
                self.dims.push(Vec::new());
            }
            self.dims[d].push(chain.clone());
            self.total += 1;
            check_budget(self.total, self.budget)?;
            let last = *chain.last().unwrap() as usize;
            for next in last + 1..self.verts.len() {
                let mut ninter = inter.clone();
                ninter.intersect_with(&self.verts[next]);
                let mut nunion = union.clone();
                nunion.union_with(&self.verts[next]);
                if self.bounded(&ninter, &nunion) {
                    chain.push(next as u32);
                    self.run(chain, &ninter, &nunion)?;
                    chain.pop();
                }
            }
            Ok(())
        }
    }
    let mut dfs = Dfs {
        verts: &verts,
        covers: &covers,
        dims: Vec::new(),
        total: 0,
        budget,
    };
    for v in 0..verts.len() {
        let mut chain = vec![v as u32];
        let inter = verts[v].clone();
        let union = verts[v].clone();
        // single vertices are always simplices (bounded by themselves)
        dfs.run(&mut chain, &inter, &union)?;
    }
    dims = dfs.dims;
    total = dfs.total;
    let _ = (n, total);
    for d in dims.iter_mut() {
        d.sort_unstable();
    }
    Ok(SimplicialComplex {
        dims,
        truncated_at: None,
    })
}

/// Nerve of a cover (given as vertex-support sets): one vertex per cover
/// set, a simplex per subfamily with nonempty intersection.
pub fn nerve(cover: &[BitSet], budget: usize) -> Result<SimplicialComplex> {
    let mut dims: Vec<Vec<Vec<u32>>> = Vec::new();
    let mut total = 0usize;
    fn rec(
        cover: &[BitSet],
        chain: &mut Vec<u32>,
        inter: &BitSet,
        dims: &mut Vec<Vec<Vec<u32>>>,
        total: &mut usize,
        budget: usize,
    ) -> Result<()> {
        let d = chain.len() - 1;
        while dims.len() <= d {
            dims.push(Vec::new());
        }
        dims[d].push(chain.clone());
        *total += 1;
        check_budget(*total, budget)?;
        let last = *chain.last().unwrap() as usize;
        for next in last + 1..cover.len() {
            let mut ninter = inter.clone();
            ninter.intersect_with(&cover[next]);
            if !ninter.is_empty() {
                chain.push(next as u32);
                rec(cover, chain, &ninter, dims, total, budget)?;
                chain.pop();
            }
        }
        Ok(())
    }
    for v in 0..cover.len() {
        if cover[v].is_empty() {
            continue;
        }
        let mut chain = vec![v as u32];
        rec(cover, &mut chain, &cover[v], &mut dims, &mut total, budget)?;
    }
    for d in dims.iter_mut() {
        d.sort_unstable();
    }
    while dims.last().map(|d| d.is_empty()).unwrap_or(false) {
        dims.pop();
    }
    Ok(SimplicialComplex {
        dims,
        truncated_at: None,
    })
}

/// The face poset of a complex: elements are simplices ordered by
/// inclusion.
pub fn face_poset(k: &SimplicialComplex) -> Poset {
    let mut elems: Vec<&Vec<u32>> = Vec::new();
    for d in &k.dims {
        for s in d {
            elems.push(s);
        }
    }
    let n = elems.len();
    let mut lt = BitMatrix::new(n);
    for i in 0..n {
        for j in 0..n {
            if elems[i].len() < elems[j].len() && is_subset_sorted(elems[i], elems[j]) {
                lt.set(i, j);
            }
        }
    }
    let labels = elems.iter().map(|s| format!("{s:?}")).collect();
    Poset {
        labels,
        lt,
        kind: PosetKind::Derived,
        cosets: None,
    }
}

fn is_subset_sorted(a: &[u32], b: &[u32]) -> bool {
    let mut i = 0;
    for &x in b {
        if i < a.len() && a[i] == x {
            i += 1;
        }
    }
    i == a.len()
}

/// First barycentric subdivision: the order complex of the face poset.
/// The input must be untruncated.
pub fn barycentric_subdivision(k: &SimplicialComplex, budget: usize) -> Result<SimplicialComplex> {
    if let Some(t) = k.truncated_at {
        if !k.simplices_of_dim(t).is_empty() {
            return Err(Error::BadInput(
                "cannot subdivide a dimension-truncated complex".into(),
            ));
        }
    }
    order_complex(&face_poset(k), None, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::{make_cyclic, make_quaternion, make_symmetric};
    use crate::lattice::enumerate_subgroups;
    use crate::topo::coset_poset;

    #[test]
    fn antichain_order_complex_is_discrete() {
        let p = Poset::new(
            vec!["a".into(), "b".into(), "c".into()],
            BitMatrix::new(3),
            PosetKind::Derived,
        )
        .unwrap();
        let k = order_complex(&p, None, 1 << 20).unwrap();
        assert_eq!(k.f_vector(), vec![3]);
    }

    #[test]
    fn q8_coset_complex_f_vector() {
        let g = make_quaternion().unwrap();
        let lat = enumerate_subgroups(&g).unwrap();
        let p = coset_poset(&g, &lat);
        let k = order_complex(&p, None, 1 << 20).unwrap();
        assert_eq!(k.f_vector(), vec![18, 44, 24]);
        assert!(k.validate().is_ok());
    }

    #[test]
    fn mcover_one_skeleton_is_complete_for_noncyclic() {
        let g = make_quaternion().unwrap();
        let lat = enumerate_subgroups(&g).unwrap();
        let k = minimal_cover_skeleton(&g, &lat, Some(1), 1 << 20).unwrap();
        assert_eq!(k.f_vector(), vec![8, 28]);
    }

    #[test]
    fn mcover_edges_of_prime_cyclic() {
        // {g,h} is an edge iff <g^-1 h> is proper, so Z/p gets no edges
        let g = make_cyclic(5).unwrap();
        let lat = enumerate_subgroups(&g).unwrap();
        let k = minimal_cover_skeleton(&g, &lat, None, 1 << 20).unwrap();
        assert_eq!(k.f_vector(), vec![5]);
        // composite cyclic groups do get edges
        let g6 = make_cyclic(6).unwrap();
        let lat6 = enumerate_subgroups(&g6).unwrap();
        let k6 = minimal_cover_skeleton(&g6, &lat6, Some(1), 1 << 20).unwrap();
        assert!(k6.f_vector()[1] > 0);
    }

    #[test]
    fn crosscut_of_q8_is_k4() {
        let g = make_quaternion().unwrap();
        let lat = enumerate_subgroups(&g).unwrap();
        let k = crosscut_prime_complex(&g, &lat, 1 << 20).unwrap();
        assert_eq!(k.f_vector(), vec![4, 6]);
    }

    #[test]
    fn crosscut_of_prime_cyclic_is_discrete() {
        let g = make_cyclic(7).unwrap();
        let lat = enumerate_subgroups(&g).unwrap();
        let k = crosscut_prime_complex(&g, &lat, 1 << 20).unwrap();
        assert_eq!(k.f_vector(), vec![7]);
    }

    #[test]
    fn crosscut_of_s3_vertex_count() {
        // 2 cosets of the order-3 subgroup + 9 cosets of three order-2
        // subgroups
        let g = make_symmetric(3).unwrap();
        let lat = enumerate_subgroups(&g).unwrap();
        let k = crosscut_prime_complex(&g, &lat, 1 << 20).unwrap();
        assert_eq!(k.f_vector()[0], 11);
    }

    #[test]
    fn nerve_basics() {
        // single-set cover: a point
        let k = nerve(&[BitSet::from_iter(4, [0, 1])], 1 << 10).unwrap();
        assert_eq!(k.f_vector(), vec![1]);
        // two disjoint sets: two points, no edge
        let k2 = nerve(
            &[BitSet::from_iter(4, [0, 1]), BitSet::from_iter(4, [2, 3])],
            1 << 10,
        )
        .unwrap();
        assert_eq!(k2.f_vector(), vec![2]);
    }

    #[test]
    fn subdivision_shapes() {
        // single edge -> path with 3 vertices, 2 edges
        let edge = SimplicialComplex::closure_of([vec![0u32, 1]], None).unwrap();
        let sd = barycentric_subdivision(&edge, 1 << 10).unwrap();
        assert_eq!(sd.f_vector(), vec![3, 2]);
        // triangle boundary -> hexagon
        let tri = SimplicialComplex::closure_of([vec![0u32, 1], vec![1, 2], vec![0, 2]], None).unwrap();
        let sd2 = barycentric_subdivision(&tri, 1 << 10).unwrap();
        assert_eq!(sd2.f_vector(), vec![6, 6]);
    }
}
