//! Poset constructions: coset poset, subgroup poset, products and
//! saturating-coset subposets.

use super::{CosetElem, Poset, PosetKind};
use crate::bits::BitMatrix;
use crate::grp::{ElementSet, FiniteGroup};
use crate::lattice::SubgroupLattice;
use crate::{Error, Result};

/// Enumerates the cosets of one subgroup; returns (rep, members) sorted by
/// rep. Reps are the least element of each coset.
pub(crate) fn cosets_of(g: &FiniteGroup, sub: &ElementSet) -> Vec<(usize, ElementSet)> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut out = Vec::with_capacity(n / sub.len());
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let members: Vec<usize> = sub.iter().map(|h| g.mul(x, h)).collect();
        for &m in &members {
            seen[m] = true;
        }
        let set = ElementSet::from_indices(n, &members);
        out.push((set.min().unwrap(), set));
    }
    out
}

/// The coset poset C(G): one element per coset of each proper subgroup
/// (including singletons), ordered by inclusion. G itself is excluded.
pub fn coset_poset(g: &FiniteGroup, lat: &SubgroupLattice) -> Poset {
    let mut elems: Vec<CosetElem> = Vec::new();
    // proper subgroups: every lattice index except the top
    for sub in 0..lat.top() {
        for (rep, members) in cosets_of(g, &lat.subgroups[sub]) {
            elems.push(CosetElem { subgroup: sub, rep, members });
        }
    }
    // canonical order: by (subgroup order, subgroup index, rep)
    elems.sort_by_key(|e| (lat.order_of(e.subgroup), e.subgroup, e.rep));
    // coset_of[sub][x] = poset index of the sub-coset containing x
    let mut coset_of: Vec<Vec<u32>> = vec![vec![u32::MAX; g.order()]; lat.top()];
    for (i, e) in elems.iter().enumerate() {
        for x in e.members.iter() {
            coset_of[e.subgroup][x] = i as u32;
        }
    }
    let mut lt = BitMatrix::new(elems.len());
    for (i, e) in elems.iter().enumerate() {
        for big in 0..lat.top() {
            if lat.lt(e.subgroup, big) {
                lt.set(i, coset_of[big][e.rep] as usize);
            }
        }
    }
    let labels = elems
        .iter()
        .map(|e| format!("{}·H{}[{}]", g.element_label(e.rep), e.subgroup, e.members.len()))
        .collect();
    Poset {
        labels,
        lt,
        kind: PosetKind::Coset,
        cosets: Some(elems),
    }
}

/// The subgroup poset S(G): proper nontrivial subgroups under inclusion.
pub fn subgroup_poset(g: &FiniteGroup, lat: &SubgroupLattice) -> Poset {
    let idx: Vec<usize> = lat.proper_nontrivial().collect();
    let mut lt = BitMatrix::new(idx.len());
    for (a, &i) in idx.iter().enumerate() {
        for (b, &j) in idx.iter().enumerate() {
            if lat.lt(i, j) {
                lt.set(a, b);
            }
        }
    }
    let labels = idx
        .iter()
        .map(|&i| format!("{:?}#{}", crate::lattice::iso_tag(g, &lat.subgroups[i]), i))
        .collect();
    Poset {
        labels,
        lt,
        kind: PosetKind::Subgroup,
        cosets: None,
    }
}

/// Product order: (x, y) <= (v, w) iff x <= v and y <= w.
pub fn poset_product(p: &Poset, q: &Poset) -> Result<Poset> {
    let n = p.len().checked_mul(q.len()).ok_or_else(|| Error::Budget("poset product overflow".into()))?;
    if n > 2_000_000 {
        return Err(Error::Budget(format!("poset product has {n} elements")));
    }
    let mut lt = BitMatrix::new(n);
    for i1 in 0..p.len() {
        for j1 in 0..q.len() {
            let a = i1 * q.len() + j1;
            for i2 in 0..p.len() {
                if i2 != i1 && !p.lt(i1, i2) {
                    continue;
                }
                for j2 in 0..q.len() {
                    if j2 != j1 && !q.lt(j1, j2) {
                        continue;
                    }
                    let b = i2 * q.len() + j2;
                    if a != b {
                        lt.set(a, b);
                    }
                }
            }
        }
    }
    let labels = (0..n)
        .map(|x| format!("({},{})", p.labels[x / q.len()], q.labels[x % q.len()]))
        .collect();
    Poset::new(labels, lt, PosetKind::Product)
}

/// The subposet of non-saturating cosets of a (semi)direct product.
///
/// For a direct product N x H a coset is saturating when it surjects onto
/// both factors; for N ⋊ H a coset xT is saturating when it surjects onto
/// H and the only H-invariant subgroup of N containing the N-part of T is
/// N itself. The ambient group must carry product metadata.
pub fn nonsaturating_subposet(
    g: &FiniteGroup,
    lat: &SubgroupLattice,
    cposet: &Poset,
) -> Result<Poset> {
    let meta = g
        .product_meta()
        .ok_or_else(|| Error::BadInput("group carries no product metadata".into()))?
        .clone();
    if meta.left_order < 2 || meta.right_order < 2 {
        return Err(Error::BadInput(
            "both product factors must be nontrivial".into(),
        ));
    }
    let cosets = cposet
        .cosets
        .as_ref()
        .ok_or_else(|| Error::BadInput("expected a coset poset".into()))?;
    let h = meta.right_order;

    // smallest H-invariant subgroup of N containing a given subset,
    // working on N's embedded copy {(n, 0)} of the ambient group
    let invariant_closure = |seed: &[usize]| -> usize {
        // elements of N are 0..left_order, ambient index n*h
        let mut cur: ElementSet = {
            let ambient: Vec<usize> = seed.iter().map(|&x| x * h).collect();
            g.generated_by(&ambient)
        };
        loop {
            let mut next: Vec<usize> = cur.iter().collect();
            for x in cur.iter() {
                let nx = x / h; // back to N index
                for act in &meta.action {
                    next.push(act[nx] as usize * h);
                }
            }
            let closed = g.generated_by(&next);
            if closed.len() == cur.len() {
                // all elements lie in the embedded copy N x {0}
                return closed.len();
            }
            cur = closed;
        }
    };

    let mut keep = vec![false; cposet.len()];
    for (i, e) in cosets.iter().enumerate() {
        // image of the coset in H must be all of H
        let mut h_image = vec![false; h];
        for x in e.members.iter() {
            h_image[x % h] = true;
        }
        let surjects_h = h_image.iter().all(|&b| b);
        let saturating = if !surjects_h {
            false
        } else {
            // N-part of the subgroup T
            let t = &lat.subgroups[e.subgroup];
            let f_t: Vec<usize> = t.iter().map(|x| x / h).collect();
            if meta.semidirect {
                invariant_closure(&f_t) == meta.left_order
            } else {
                // direct product: coset must surject onto N as well
                let mut n_image = vec![false; meta.left_order];
                for x in e.members.iter() {
                    n_image[x / h] = true;
                }
                n_image.iter().all(|&b| b)
            }
        };
        keep[i] = !saturating;
    }
    Ok(cposet.restrict(&keep))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::{direct_product, make_alternating, make_cyclic, make_quaternion};
    use crate::lattice::enumerate_subgroups;

    #[test]
    fn coset_poset_of_prime_cyclic_is_discrete() {
        let g = make_cyclic(5).unwrap();
        let lat = enumerate_subgroups(&g).unwrap();
        let p = coset_poset(&g, &lat);
        assert_eq!(p.len(), 5);
        for i in 0..5 {
            for j in 0..5 {
                assert!(!p.lt(i, j));
            }
        }
        assert_eq!(p.components(), 5);
    }

    #[test]
    fn a5_has_1018_proper_cosets() {
        let g = make_alternating(5).unwrap();
        let lat = enumerate_subgroups(&g).unwrap();
        assert_eq!(coset_poset(&g, &lat).len(), 1018);
    }

    #[test]
    fn q8_subgroup_poset_is_a_cone() {
        let g = make_quaternion().unwrap();
        let lat = enumerate_subgroups(&g).unwrap();
        let s = subgroup_poset(&g, &lat);
        assert_eq!(s.len(), 4);
        assert!(s.is_cone());

        let a5 = make_alternating(5).unwrap();
        let lat5 = enumerate_subgroups(&a5).unwrap();
        assert_eq!(subgroup_poset(&a5, &lat5).len(), 57);
    }

    #[test]
    fn product_with_point_is_identity() {
        let g = make_cyclic(3).unwrap();
        let lat = enumerate_subgroups(&g).unwrap();
        let p = coset_poset(&g, &lat);
        let point = Poset::new(vec!["*".into()], BitMatrix::new(1), PosetKind::Derived).unwrap();
        let prod = poset_product(&p, &point).unwrap();
        assert_eq!(prod.len(), p.len());
        for i in 0..p.len() {
            for j in 0..p.len() {
                assert_eq!(p.lt(i, j), prod.lt(i, j));
            }
        }
    }

    #[test]
    fn trivial_factor_rejected() {
        let g = direct_product(&make_cyclic(2).unwrap(), &make_cyclic(1).unwrap()).unwrap();
        let lat = enumerate_subgroups(&g).unwrap();
        let p = coset_poset(&g, &lat);
        assert!(nonsaturating_subposet(&g, &lat, &p).is_err());
    }
}
