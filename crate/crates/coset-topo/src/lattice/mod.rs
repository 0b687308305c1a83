//! Subgroup lattice enumeration with Möbius, zeta, Eulerian-counting,
//! chief-series and solvability data.

mod counting;
mod zeta;

pub use counting::{phi_ab, sigma_ab, Phi_ab};
pub use zeta::{prob_zeta, Rational};

use crate::bits::BitMatrix;
use crate::grp::{ElementSet, FiniteGroup};
use crate::{Error, Result};

/// The complete subgroup lattice of a group: every subgroup as an element
/// bit-set, plus containment, normality, maximality and conjugacy metadata.
///
/// Index 0 is the trivial subgroup and the last index is G itself;
/// subgroups are sorted by (order, element bits).
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    pub subgroups: Vec<ElementSet>,
    /// `leq.get(i, j)` iff subgroup i is contained in subgroup j.
    pub leq: BitMatrix,
    pub normal: Vec<bool>,
    pub maximal: Vec<bool>,
    pub conj_class: Vec<usize>,
}

impl SubgroupLattice {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn trivial(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn order_of(&self, i: usize) -> usize {
        self.subgroups[i].len()
    }

    /// Strict containment i < j.
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq.get(i, j)
    }

    /// Indices of proper nontrivial subgroups.
    pub fn proper_nontrivial(&self) -> std::ops::Range<usize> {
        1..self.top()
    }

    /// Lattice index of a subgroup given as an element set, if present.
    pub fn index_of(&self, set: &ElementSet) -> Option<usize> {
        self.subgroups.iter().position(|s| s == set)
    }

    /// Subgroup indices with the given order.
    pub fn of_order(&self, k: usize) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.order_of(i) == k).collect()
    }
}

/// Enumerates the full subgroup lattice: seed with all cyclic subgroups,
/// then close under pairwise joins until stable.
pub fn enumerate_subgroups(g: &FiniteGroup) -> Result<SubgroupLattice> {
    let n = g.order();
    let mut seen: std::collections::HashMap<ElementSet, usize> = std::collections::HashMap::new();
    let mut subs: Vec<ElementSet> = Vec::new();
    let mut add = |s: ElementSet, subs: &mut Vec<ElementSet>,
                   seen: &mut std::collections::HashMap<ElementSet, usize>|
     -> bool {
        if seen.contains_key(&s) {
            false
        } else {
            seen.insert(s.clone(), subs.len());
            subs.push(s);
            true
        }
    };
    add(g.generated_by(&[]), &mut subs, &mut seen);
    for x in 1..n {
        let c = g.generated_by(&[x]);
        add(c, &mut subs, &mut seen);
    }
    // close under joins of pairs
    let mut frontier: Vec<usize> = (0..subs.len()).collect();
    while !frontier.is_empty() {
        let mut new_frontier = Vec::new();
        let upto = subs.len();
        for &i in &frontier {
            for j in 0..upto {
                if i == j {
                    continue;
                }
                let (a, b) = (&subs[i], &subs[j]);
                if a.is_subset(b) || b.is_subset(a) {
                    continue;
                }
                let join = g.generated_subgroup(&a.union(b));
                if add(join, &mut subs, &mut seen) {
                    new_frontier.push(subs.len() - 1);
                }
            }
        }
        frontier = new_frontier;
    }

    // canonical order: by (size, bit pattern)
    let mut order: Vec<usize> = (0..subs.len()).collect();
    order.sort_by_key(|&i| {
        (
            subs[i].len(),
            subs[i].iter().collect::<Vec<_>>(),
        )
    });
    let subgroups: Vec<ElementSet> = order.iter().map(|&i| subs[i].clone()).collect();

    let m = subgroups.len();
    let mut leq = BitMatrix::new(m);
    for i in 0..m {
        for j in 0..m {
            if subgroups[i].is_subset(&subgroups[j]) {
                leq.set(i, j);
            }
        }
    }
    // maximal: proper subgroups with no proper subgroup strictly above
    let top = m - 1;
    let mut maximal = vec![false; m];
    for i in 0..top {
        maximal[i] = (0..top).all(|j| j == i || !leq.get(i, j) || i == j);
    }
    // normality: gHg^-1 = H for all g (exact check)
    let mut normal = vec![false; m];
    for (i, s) in subgroups.iter().enumerate() {
        normal[i] = (0..n).all(|x| g.conjugate(x, s) == *s);
    }
    // conjugacy classes
    let index: std::collections::HashMap<&ElementSet, usize> = subgroups
        .iter()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();
    let mut conj_class = vec![usize::MAX; m];
    let mut class = 0;
    for i in 0..m {
        if conj_class[i] != usize::MAX {
            continue;
        }
        for x in 0..n {
            let c = g.conjugate(x, &subgroups[i]);
            let j = *index
                .get(&c)
                .ok_or_else(|| Error::Invariant("conjugate of a subgroup missing from lattice".into()))?;
            conj_class[j] = class;
        }
        class += 1;
    }

    let lat = SubgroupLattice {
        subgroups,
        leq,
        normal,
        maximal,
        conj_class,
    };
    verify_complete(g, &lat)?;
    Ok(lat)
}

/// Completeness spot checks: every listed set is closed, the closure of
/// every 2-element subset is present, and pairwise joins are present.
fn verify_complete(g: &FiniteGroup, lat: &SubgroupLattice) -> Result<()> {
    for s in &lat.subgroups {
        if g.generated_subgroup(s) != *s {
            return Err(Error::Invariant("lattice contains a non-closed set".into()));
        }
    }
    let n = g.order();
    let mut want = std::collections::HashSet::new();
    for a in 1..n {
        for b in a..n {
            want.insert(g.generated_by(&[a, b]));
        }
    }
    for s in want {
        if lat.index_of(&s).is_none() {
            return Err(Error::Invariant(
                "closure of a 2-element subset missing from lattice".into(),
            ));
        }
    }
    Ok(())
}

/// Normalizer of a subgroup: {g : gHg^-1 = H}.
pub fn normalizer(g: &FiniteGroup, h: &ElementSet) -> ElementSet {
    let members: Vec<usize> = (0..g.order())
        .filter(|&x| g.conjugate(x, h) == *h)
        .collect();
    ElementSet::from_indices(g.order(), &members)
}

/// Möbius function on the subgroup lattice: mu[G] = 1 and
/// `sum_{K >= H} mu[K] = 0` for every proper H.
#[derive(Clone, Debug)]
pub struct MobiusTable {
    pub mu: Vec<i64>,
}

/// Computes mu by the top-down recursion over the lattice.
pub fn mobius(lat: &SubgroupLattice) -> MobiusTable {
    MobiusTable {
        mu: mobius_below(lat, lat.top()),
    }
}

/// Möbius function of the interval `[1, top]`: entry i is mu(H_i, H_top)
/// for subgroups contained in `top`, and 0 elsewhere.
pub fn mobius_below(lat: &SubgroupLattice, top: usize) -> Vec<i64> {
    let m = lat.len();
    let mut mu = vec![0i64; m];
    mu[top] = 1;
    // process by decreasing order so everything above is done first
    let mut idx: Vec<usize> = (0..m).filter(|&i| lat.lt(i, top)).collect();
    idx.sort_by_key(|&i| std::cmp::Reverse(lat.order_of(i)));
    for i in idx {
        let mut s = 0i64;
        for j in 0..m {
            if lat.lt(i, j) && (j == top || lat.lt(j, top)) {
                s += mu[j];
            }
        }
        mu[i] = -s;
    }
    mu
}

/// A chief series with per-factor complement flags.
#[derive(Clone, Debug, serde::Serialize)]
pub struct ChiefSeriesReport {
    /// Lattice indices from the trivial subgroup up to G.
    pub series: Vec<usize>,
    /// Whether factor i (between series[i] and series[i+1]) is complemented.
    pub complemented: Vec<bool>,
    /// Number of complemented factors.
    pub d: usize,
    /// False when the group is not solvable; the other fields are still
    /// populated (a chief series exists regardless).
    pub solvable: bool,
}

/// One chief series (maximal chain in the normal subgroup lattice), chosen
/// deterministically: the least eligible normal subgroup at each step.
pub fn chief_series(g: &FiniteGroup, lat: &SubgroupLattice) -> ChiefSeriesReport {
    let m = lat.len();
    let mut series = vec![lat.trivial()];
    let mut cur = lat.trivial();
    while cur != lat.top() {
        // normal subgroups strictly above cur
        let above: Vec<usize> = (0..m)
            .filter(|&j| lat.normal[j] && lat.lt(cur, j))
            .collect();
        // minimal ones (no normal subgroup strictly between)
        let next = above
            .iter()
            .copied()
            .find(|&j| !above.iter().any(|&k| k != j && lat.lt(k, j)))
            .expect("normal subgroup lattice has a top element");
        series.push(next);
        cur = next;
    }
    let order = g.order();
    let mut complemented = Vec::new();
    for w in series.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        // complement inside G: K >= lo with K ∩ hi = lo and |K·hi| = |G|
        let lo_len = lat.order_of(lo);
        let hi_len = lat.order_of(hi);
        let found = (0..m).any(|k| {
            lat.leq.get(lo, k)
                && lat.subgroups[k].intersection(&lat.subgroups[hi]).len() == lo_len
                && lat.order_of(k) * hi_len == order * lo_len
        });
        complemented.push(found);
    }
    let d = complemented.iter().filter(|&&c| c).count();
    ChiefSeriesReport {
        series,
        complemented,
        d,
        solvable: is_solvable(g),
    }
}

/// Derived-series termination check.
pub fn is_solvable(g: &FiniteGroup) -> bool {
    let mut cur = g.full_set();
    loop {
        let next = g.derived_subgroup_of(&cur);
        if next.len() == 1 {
            return true;
        }
        if next.len() == cur.len() {
            return false;
        }
        cur = next;
    }
}

/// Number of connected components of the comparability graph on proper
/// nontrivial subgroups.
pub fn subgroup_poset_components(lat: &SubgroupLattice) -> usize {
    let verts: Vec<usize> = (1..lat.top()).collect();
    if verts.is_empty() {
        return 0;
    }
    let pos: std::collections::HashMap<usize, usize> =
        verts.iter().enumerate().map(|(a, &v)| (v, a)).collect();
    let mut dsu: Vec<usize> = (0..verts.len()).collect();
    fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
        if dsu[x] != x {
            let r = find(dsu, dsu[x]);
            dsu[x] = r;
        }
        dsu[x]
    }
    for &i in &verts {
        for &j in &verts {
            if lat.lt(i, j) {
                let (a, b) = (find(&mut dsu, pos[&i]), find(&mut dsu, pos[&j]));
                if a != b {
                    dsu[a] = b;
                }
            }
        }
    }
    let mut roots: Vec<usize> = (0..verts.len()).map(|x| find(&mut dsu, x)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

/// Heuristic isomorphism-type tag used in reports and censuses.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub enum IsoTag {
    Trivial,
    Cyclic(usize),
    /// Dihedral of the given order (V4 reports as Dihedral(4)).
    Dihedral(usize),
    Abelian(usize),
    Quaternion8,
    A4,
    S4,
    Z7SemiZ3,
    Other(usize),
}

/// Tags a subgroup by (order, abelian?, cyclic?, dihedral?) heuristics.
pub fn iso_tag(g: &FiniteGroup, sub: &ElementSet) -> IsoTag {
    let k = sub.len();
    if k == 1 {
        return IsoTag::Trivial;
    }
    let elems: Vec<usize> = sub.iter().collect();
    let orders: Vec<usize> = elems.iter().map(|&x| g.element_order(x)).collect();
    if orders.iter().any(|&o| o == k) {
        return IsoTag::Cyclic(k);
    }
    let abelian = elems
        .iter()
        .all(|&a| elems.iter().all(|&b| g.mul(a, b) == g.mul(b, a)));
    // dihedral: index-2 cyclic subgroup with every outside element of order 2
    if k % 2 == 0 {
        let half = k / 2;
        let dihedral = elems.iter().any(|&c| {
            if g.element_order(c) != half {
                return false;
            }
            let cyc = g.generated_by(&[c]);
            sub.iter()
                .filter(|&x| !cyc.contains(x))
                .all(|x| g.element_order(x) == 2)
        });
        if dihedral {
            return IsoTag::Dihedral(k);
        }
    }
    if abelian {
        return IsoTag::Abelian(k);
    }
    let invols = orders.iter().filter(|&&o| o == 2).count();
    match (k, invols) {
        (8, 1) => IsoTag::Quaternion8,
        (12, 3) => IsoTag::A4,
        (24, 9) => IsoTag::S4,
        (21, 0) => IsoTag::Z7SemiZ3,
        _ => IsoTag::Other(k),
    }
}

/// Census of subgroups by iso tag: (tag, count), sorted.
pub fn census(g: &FiniteGroup, lat: &SubgroupLattice) -> Vec<(IsoTag, usize)> {
    let mut counts = std::collections::BTreeMap::new();
    for s in &lat.subgroups {
        *counts.entry(iso_tag(g, s)).or_insert(0usize) += 1;
    }
    counts.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::{make_alternating, make_cyclic, make_dihedral, make_quaternion};

    #[test]
    fn cyclic_prime_lattice() {
        let g = make_cyclic(7).unwrap();
        let lat = enumerate_subgroups(&g).unwrap();
        assert_eq!(lat.len(), 2);
    }

    #[test]
    fn a5_maximal_census() {
        let g = make_alternating(5).unwrap();
        let lat = enumerate_subgroups(&g).unwrap();
        assert_eq!(lat.len(), 59); // 57 proper nontrivial + trivial + G
        let mut a4 = 0;
        let mut d10 = 0;
        let mut s3 = 0;
        for i in 0..lat.len() {
            if lat.maximal[i] {
                match iso_tag(&g, &lat.subgroups[i]) {
                    IsoTag::A4 => a4 += 1,
                    IsoTag::Dihedral(10) => d10 += 1,
                    IsoTag::Dihedral(6) => s3 += 1,
                    other => panic!("unexpected maximal subgroup {other:?}"),
                }
            }
        }
        assert_eq!((a4, d10, s3), (5, 6, 10));
    }

    #[test]
    fn normalizers() {
        let g = make_alternating(5).unwrap();
        let lat = enumerate_subgroups(&g).unwrap();
        // N(<five-cycle>) has order 10
        let z5 = lat.of_order(5)[0];
        assert_eq!(normalizer(&g, &lat.subgroups[z5]).len(), 10);
        // normal subgroup: whole group
        let q8 = make_quaternion().unwrap();
        let lat8 = enumerate_subgroups(&q8).unwrap();
        let z2 = lat8.of_order(2)[0];
        assert!(lat8.normal[z2]);
        assert_eq!(normalizer(&q8, &lat8.subgroups[z2]).len(), 8);
    }

    #[test]
    fn mobius_on_small_groups() {
        // maximal subgroups get -1
        let g = make_dihedral(4).unwrap();
        let lat = enumerate_subgroups(&g).unwrap();
        let mu = mobius(&lat);
        for i in 0..lat.len() {
            if lat.maximal[i] {
                assert_eq!(mu.mu[i], -1);
            }
        }
        // defining relation: sum over K >= H of mu(K) is 0 for proper H
        for h in 0..lat.top() {
            let total: i64 = (0..lat.len())
                .filter(|&k| k == h || lat.lt(h, k))
                .map(|k| mu.mu[k])
                .sum();
            assert_eq!(total, 0);
        }
        // Z/p^n: mu nonzero only on G and the maximal subgroup
        let g8 = make_cyclic(8).unwrap();
        let lat8 = enumerate_subgroups(&g8).unwrap();
        let mu8 = mobius(&lat8);
        for i in 0..lat8.len() {
            let expected = match lat8.order_of(i) {
                8 => 1,
                4 => -1,
                _ => 0,
            };
            assert_eq!(mu8.mu[i], expected);
        }
    }

    #[test]
    fn mobius_constant_on_conjugacy_classes() {
        let g = make_alternating(5).unwrap();
        let lat = enumerate_subgroups(&g).unwrap();
        let mu = mobius(&lat);
        for i in 0..lat.len() {
            for j in 0..lat.len() {
                if lat.conj_class[i] == lat.conj_class[j] {
                    assert_eq!(mu.mu[i], mu.mu[j]);
                }
            }
        }
    }

    #[test]
    fn mobius_vanishes_off_maximal_intersections() {
        let g = make_alternating(5).unwrap();
        let lat = enumerate_subgroups(&g).unwrap();
        let mu = mobius(&lat);
        for h in 0..lat.top() {
            if mu.mu[h] != 0 {
                // H must be an intersection of maximal subgroups
                let mut inter = lat.subgroups[lat.top()].clone();
                for m in 0..lat.top() {
                    if lat.maximal[m] && lat.leq.get(h, m) {
                        inter = inter.intersection(&lat.subgroups[m]);
                    }
                }
                assert_eq!(inter, lat.subgroups[h], "subgroup {h}");
            }
        }
    }

    #[test]
    fn chief_series_examples() {
        let z5 = make_cyclic(5).unwrap();
        let lat = enumerate_subgroups(&z5).unwrap();
        assert_eq!(chief_series(&z5, &lat).d, 1);

        let z9 = make_cyclic(9).unwrap();
        let lat9 = enumerate_subgroups(&z9).unwrap();
        let rep = chief_series(&z9, &lat9);
        assert_eq!(rep.d, 1);
        assert_eq!(rep.complemented, vec![false, true]);

        let v4 = make_dihedral(2).unwrap();
        let lat4 = enumerate_subgroups(&v4).unwrap();
        assert_eq!(chief_series(&v4, &lat4).d, 2);
    }

    #[test]
    fn solvability_and_components() {
        assert!(!is_solvable(&make_alternating(5).unwrap()));
        assert!(is_solvable(&make_dihedral(6).unwrap()));
        assert!(is_solvable(&make_quaternion().unwrap()));

        // S(Z/pq) has two isolated maximal subgroups
        let z15 = make_cyclic(15).unwrap();
        let lat = enumerate_subgroups(&z15).unwrap();
        assert_eq!(subgroup_poset_components(&lat), 2);

        // S(Q8) is connected (cone on <-1>)
        let q8 = make_quaternion().unwrap();
        let lat8 = enumerate_subgroups(&q8).unwrap();
        assert_eq!(subgroup_poset_components(&lat8), 1);
    }
}
