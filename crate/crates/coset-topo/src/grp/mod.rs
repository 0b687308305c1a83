//! Cayley-table groups and element-set primitives.
//!
//! Every group in this crate is normalized to a multiplication table at
//! construction time; permutation or matrix structure only survives in the
//! element labels. Index 0 is always the identity.

mod aut;
mod constructors;
pub mod psl2;

pub use aut::automorphism_count;
pub use constructors::{
    direct_product, make_alternating, make_cyclic, make_dihedral, make_quaternion,
    make_semidirect, make_symmetric,
};
pub use psl2::make_psl2;

use crate::bits::BitSet;
use crate::{Error, Result};

/// Order above which associativity is verified on a deterministic sample
/// instead of all triples.
pub const FULL_ASSOC_CHECK_LIMIT: usize = 512;
/// Hard cap on group order.
pub const ORDER_CAP: usize = 1100;

/// How a product group was assembled, kept so the saturating-coset
/// machinery can recover the factors.
#[derive(Clone, Debug)]
pub struct ProductMeta {
    /// Order of the (normal) left factor N.
    pub left_order: usize,
    /// Order of the right factor H; element `g` decodes as
    /// `(g / right_order, g % right_order)`.
    pub right_order: usize,
    /// Action of each H-element on N, as tables; the identity action for
    /// direct products.
    pub action: Vec<Vec<u16>>,
    /// True when built by `make_semidirect` with a nontrivial action.
    pub semidirect: bool,
}

/// A finite group as a multiplication table over indices `0..order`.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    mul_table: Vec<u16>,
    inv: Vec<u16>,
    labels: Vec<String>,
    label: String,
    product: Option<ProductMeta>,
}

impl FiniteGroup {
    /// Builds a group from a raw table, verifying the group axioms.
    ///
    /// Associativity is checked on all triples up to order
    /// [`FULL_ASSOC_CHECK_LIMIT`] and on a fixed pseudo-random sample above.
    pub fn from_table(
        mul: Vec<Vec<u16>>,
        labels: Option<Vec<String>>,
        label: String,
    ) -> Result<FiniteGroup> {
        let n = mul.len();
        if n == 0 {
            return Err(Error::BadInput("empty multiplication table".into()));
        }
        if n > ORDER_CAP {
            return Err(Error::Guard(format!("order {n} exceeds cap {ORDER_CAP}")));
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in &mul {
            if row.len() != n {
                return Err(Error::BadInput("multiplication table is not square".into()));
            }
            for &v in row {
                if v as usize >= n {
                    return Err(Error::BadInput(format!("table entry {v} out of range")));
                }
                flat.push(v);
            }
        }
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
        if labels.len() != n {
            return Err(Error::BadInput("label count does not match order".into()));
        }
        let g = FiniteGroup {
            order: n,
            mul_table: flat,
            inv: vec![0; n],
            labels,
            label,
            product: None,
        };
        g.verify()
    }

    fn verify(mut self) -> Result<FiniteGroup> {
        let n = self.order;
        // identity row/column
        for g in 0..n {
            if self.mul_table[g] as usize != g || self.mul_table[g * n] as usize != g {
                return Err(Error::Invariant(format!(
                    "element 0 is not a two-sided identity at {g}"
                )));
            }
        }
        // rows and columns are permutations
        for g in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for h in 0..n {
                let r = self.mul_table[g * n + h] as usize;
                let c = self.mul_table[h * n + g] as usize;
                if seen_row[r] || seen_col[c] {
                    return Err(Error::Invariant(format!(
                        "row or column {g} of the multiplication table is not a permutation"
                    )));
                }
                seen_row[r] = true;
                seen_col[c] = true;
            }
        }
        // inverses
        for g in 0..n {
            let mut found = None;
            for h in 0..n {
                if self.mul_table[g * n + h] == 0 {
                    found = Some(h);
                    break;
                }
            }
            let h = found.ok_or_else(|| Error::Invariant(format!("element {g} has no inverse")))?;
            if self.mul_table[h * n + g] != 0 {
                return Err(Error::Invariant(format!(
                    "left and right inverses of {g} differ"
                )));
            }
            self.inv[g] = h as u16;
        }
        // associativity
        if n <= FULL_ASSOC_CHECK_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul_table[a * n + b] as usize;
                    for c in 0..n {
                        let bc = self.mul_table[b * n + c] as usize;
                        if self.mul_table[ab * n + c] != self.mul_table[a * n + bc] {
                            return Err(Error::Invariant(format!(
                                "associativity fails at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        } else {
            // deterministic sample: splitmix64 stream
            let mut state = 0x9e3779b97f4a7c15u64;
            let mut next = move || {
                state = state.wrapping_add(0x9e3779b97f4a7c15);
                let mut z = state;
                z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
                z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
                z ^ (z >> 31)
            };
            for _ in 0..2_000_000 {
                let a = (next() % n as u64) as usize;
                let b = (next() % n as u64) as usize;
                let c = (next() % n as u64) as usize;
                let ab = self.mul_table[a * n + b] as usize;
                let bc = self.mul_table[b * n + c] as usize;
                if self.mul_table[ab * n + c] != self.mul_table[a * n + bc] {
                    return Err(Error::Invariant(format!(
                        "associativity fails at ({a}, {b}, {c})"
                    )));
                }
            }
        }
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul_table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn element_label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn element_labels(&self) -> &[String] {
        &self.labels
    }

    pub fn product_meta(&self) -> Option<&ProductMeta> {
        self.product.as_ref()
    }

    pub(crate) fn set_product_meta(&mut self, meta: ProductMeta) {
        self.product = Some(meta);
    }

    /// Least k >= 1 with g^k = identity.
    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Multiset of element orders, as (order, count) pairs sorted by order.
    pub fn order_multiset(&self) -> Vec<(usize, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for g in 0..self.order {
            *counts.entry(self.element_order(g)).or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }

    /// Smallest subset closed under multiplication containing
    /// `seed ∪ {identity}`. Closure under inverses is automatic for finite
    /// groups.
    pub fn generated_subgroup(&self, seed: &ElementSet) -> ElementSet {
        let mut members = BitSet::new(self.order);
        members.insert(0);
        let mut list = vec![0usize];
        for g in seed.bits.iter() {
            if !members.contains(g) {
                members.insert(g);
                list.push(g);
            }
        }
        let mut i = 0;
        while i < list.len() {
            let a = list[i];
            for j in 0..list.len() {
                let b = list[j];
                for p in [self.mul(a, b), self.mul(b, a)] {
                    if !members.contains(p) {
                        members.insert(p);
                        list.push(p);
                    }
                }
            }
            i += 1;
        }
        ElementSet::from_bits(members)
    }

    /// Convenience closure of an explicit element list.
    pub fn generated_by(&self, gens: &[usize]) -> ElementSet {
        self.generated_subgroup(&ElementSet::from_indices(self.order, gens))
    }

    /// True iff `elems` is contained in a proper left coset, i.e. the
    /// subgroup generated by `{x1^-1 xi}` is proper.
    pub fn coset_generates_proper(&self, elems: &ElementSet) -> bool {
        let mut it = elems.bits.iter();
        let x1 = match it.next() {
            Some(x) => x,
            None => return true, // empty set sits in any coset
        };
        let x1_inv = self.inv(x1);
        let quotients: Vec<usize> = it.map(|xi| self.mul(x1_inv, xi)).collect();
        self.generated_by(&quotients).len() < self.order
    }

    /// Left translate of a set: `g * S`.
    pub fn translate(&self, g: usize, set: &ElementSet) -> ElementSet {
        ElementSet::from_indices(self.order, &set.iter().map(|x| self.mul(g, x)).collect::<Vec<_>>())
    }

    /// Conjugate of a set: `g S g^-1`.
    pub fn conjugate(&self, g: usize, set: &ElementSet) -> ElementSet {
        let gi = self.inv(g);
        ElementSet::from_indices(
            self.order,
            &set.iter()
                .map(|x| self.mul(self.mul(g, x), gi))
                .collect::<Vec<_>>(),
        )
    }

    /// Commutator subgroup `[G, G]`.
    pub fn derived_subgroup(&self) -> ElementSet {
        let mut comms = Vec::new();
        for a in 0..self.order {
            for b in 0..self.order {
                let c = self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)));
                comms.push(c);
            }
        }
        comms.sort_unstable();
        comms.dedup();
        self.generated_by(&comms)
    }

    /// Derived subgroup of a subgroup (commutators of its elements).
    pub fn derived_subgroup_of(&self, sub: &ElementSet) -> ElementSet {
        let elems: Vec<usize> = sub.iter().collect();
        let mut comms = Vec::new();
        for &a in &elems {
            for &b in &elems {
                comms.push(self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b))));
            }
        }
        comms.sort_unstable();
        comms.dedup();
        self.generated_by(&comms)
    }

    /// True when every pair of elements commutes.
    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// All elements of the group as an ElementSet.
    pub fn full_set(&self) -> ElementSet {
        ElementSet::from_indices(self.order, &(0..self.order).collect::<Vec<_>>())
    }
}

/// A subset of group elements: a bit-set plus cached popcount.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ElementSet {
    bits: BitSet,
    size: usize,
}

impl ElementSet {
    pub fn empty(capacity: usize) -> Self {
        ElementSet {
            bits: BitSet::new(capacity),
            size: 0,
        }
    }

    pub fn from_bits(bits: BitSet) -> Self {
        let size = bits.len();
        ElementSet { bits, size }
    }

    pub fn from_indices(capacity: usize, indices: &[usize]) -> Self {
        Self::from_bits(BitSet::from_iter(capacity, indices.iter().copied()))
    }

    pub fn singleton(capacity: usize, i: usize) -> Self {
        Self::from_indices(capacity, &[i])
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits.contains(i)
    }

    pub fn insert(&mut self, i: usize) {
        if !self.bits.contains(i) {
            self.bits.insert(i);
            self.size += 1;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter()
    }

    pub fn min(&self) -> Option<usize> {
        self.bits.min()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn intersects(&self, other: &ElementSet) -> bool {
        self.bits.intersects(&other.bits)
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut b = self.bits.clone();
        b.union_with(&other.bits);
        ElementSet::from_bits(b)
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let mut b = self.bits.clone();
        b.intersect_with(&other.bits);
        ElementSet::from_bits(b)
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_basics() {
        let g1 = make_cyclic(1).unwrap();
        assert_eq!(g1.order(), 1);
        let g4 = make_cyclic(4).unwrap();
        assert_eq!(g4.element_order(1), 4);
        assert_eq!(g4.inv(1), 3);
    }

    #[test]
    fn cyclic_six_matches_z2_x_z3_orders() {
        // brute-force order-multiset comparison
        let z6 = make_cyclic(6).unwrap();
        let z2xz3 = direct_product(&make_cyclic(2).unwrap(), &make_cyclic(3).unwrap()).unwrap();
        assert_eq!(z6.order_multiset(), z2xz3.order_multiset());
    }

    #[test]
    fn dihedral_shapes() {
        let v4 = make_dihedral(2).unwrap();
        assert_eq!(v4.order(), 4);
        assert!(v4.order_multiset() == vec![(1, 1), (2, 3)]);

        let d6 = make_dihedral(3).unwrap();
        assert_eq!(d6.order(), 6);
        assert_eq!(d6.order_multiset(), vec![(1, 1), (2, 3), (3, 2)]);

        // D8 center has size 2 (brute force)
        let d8 = make_dihedral(4).unwrap();
        let center: Vec<usize> = (0..8)
            .filter(|&z| (0..8).all(|g| d8.mul(z, g) == d8.mul(g, z)))
            .collect();
        assert_eq!(center.len(), 2);
        // rotations aside, everything has order 2
        for g in 0..8 {
            let in_rotations = g < 4;
            if !in_rotations {
                assert_eq!(d8.element_order(g), 2);
            }
        }
    }

    #[test]
    fn quaternion_relations() {
        let q8 = make_quaternion().unwrap();
        assert_eq!(q8.order(), 8);
        // exactly one involution
        let invols = (0..8).filter(|&g| q8.element_order(g) == 2).count();
        assert_eq!(invols, 1);
        // i*j = k, j*i = -k using the constructor's labeling
        let idx = |l: &str| (0..8).find(|&g| q8.element_label(g) == l).unwrap();
        assert_eq!(q8.mul(idx("i"), idx("j")), idx("k"));
        assert_eq!(q8.mul(idx("j"), idx("i")), idx("-k"));
        assert_eq!(q8.order_multiset(), vec![(1, 1), (2, 1), (4, 6)]);
    }

    #[test]
    fn alternating_and_symmetric() {
        assert_eq!(make_alternating(5).unwrap().order(), 60);
        assert_eq!(make_symmetric(4).unwrap().order(), 24);
        let a5 = make_alternating(5).unwrap();
        assert_eq!(
            a5.order_multiset(),
            vec![(1, 1), (2, 15), (3, 20), (5, 24)]
        );
        assert!(make_symmetric(8).is_err()); // 40320 over the cap
    }

    #[test]
    fn semidirect_products() {
        // trivial action gives the direct product
        let n = make_cyclic(3).unwrap();
        let h = make_cyclic(2).unwrap();
        let trivial: Vec<Vec<u16>> = vec![vec![0, 1, 2]; 2];
        let g = make_semidirect(&n, &h, trivial).unwrap();
        assert_eq!(
            g.order_multiset(),
            direct_product(&n, &h).unwrap().order_multiset()
        );

        // Z/7 ⋊ Z/3 via x -> 2x is nonabelian of order 21
        let z7 = make_cyclic(7).unwrap();
        let z3 = make_cyclic(3).unwrap();
        let action: Vec<Vec<u16>> = (0..3)
            .map(|k| {
                (0..7)
                    .map(|x| {
                        let mut y = x;
                        for _ in 0..k {
                            y = (y * 2) % 7;
                        }
                        y as u16
                    })
                    .collect()
            })
            .collect();
        let g21 = make_semidirect(&z7, &z3, action).unwrap();
        assert_eq!(g21.order(), 21);
        assert!(!g21.is_abelian());

        // Z/n ⋊ Z/2 by inversion matches the dihedral group
        for n in [3usize, 5, 6] {
            let zn = make_cyclic(n).unwrap();
            let z2 = make_cyclic(2).unwrap();
            let inv_action: Vec<Vec<u16>> = vec![
                (0..n as u16).collect(),
                (0..n).map(|x| ((n - x) % n) as u16).collect(),
            ];
            let sd = make_semidirect(&zn, &z2, inv_action).unwrap();
            assert_eq!(sd.order_multiset(), make_dihedral(n).unwrap().order_multiset());
        }

        // a non-automorphism action is rejected
        let bad: Vec<Vec<u16>> = vec![vec![0, 1, 2], vec![0, 0, 0]];
        assert!(make_semidirect(&n, &h, bad).is_err());
    }

    #[test]
    fn direct_products() {
        let g = direct_product(&make_cyclic(2).unwrap(), &make_cyclic(3).unwrap()).unwrap();
        assert_eq!(g.order(), 6);
        assert!((0..6).any(|x| g.element_order(x) == 6));

        let v4 = direct_product(&make_cyclic(2).unwrap(), &make_cyclic(2).unwrap()).unwrap();
        assert_eq!(v4.order_multiset(), vec![(1, 1), (2, 3)]);

        let g27 = direct_product(&make_cyclic(3).unwrap(), &make_cyclic(9).unwrap()).unwrap();
        assert_eq!(g27.order(), 27);
        assert_eq!(g27.order_multiset().last().unwrap().0, 9);
    }

    #[test]
    fn generated_subgroups() {
        let a5 = make_alternating(5).unwrap();
        assert_eq!(a5.generated_by(&[]).len(), 1);
        // a 5-cycle generates Z/5
        let five_cycle = (0..60).find(|&g| a5.element_order(g) == 5).unwrap();
        assert_eq!(a5.generated_by(&[five_cycle]).len(), 5);
        // idempotence
        let s = a5.generated_by(&[five_cycle, 1]);
        assert_eq!(a5.generated_subgroup(&s), s);
    }

    #[test]
    fn coset_properness() {
        let a5 = make_alternating(5).unwrap();
        // singleton in a nontrivial group
        assert!(a5.coset_generates_proper(&ElementSet::singleton(60, 7)));
        // any 2-element subset of A5 lies in a proper coset
        for g in (1..60).step_by(7) {
            for h in (2..60).step_by(11) {
                if g != h {
                    assert!(a5.coset_generates_proper(&ElementSet::from_indices(60, &[g, h])));
                }
            }
        }
        // {i, -i, j, -j} generates Q8
        let q8 = make_quaternion().unwrap();
        let idx = |l: &str| (0..8).find(|&g| q8.element_label(g) == l).unwrap();
        let set = ElementSet::from_indices(8, &[idx("i"), idx("-i"), idx("j"), idx("-j")]);
        assert!(!q8.coset_generates_proper(&set));
    }

    #[test]
    fn rejects_corrupt_table() {
        // swap two entries of Z/4's table to break associativity
        let mut table: Vec<Vec<u16>> = (0..4)
            .map(|a| (0..4).map(|b| ((a + b) % 4) as u16).collect())
            .collect();
        table[2][3] = 2;
        table[2][1] = 1;
        let err = FiniteGroup::from_table(table, None, "corrupt".into()).unwrap_err();
        assert!(matches!(err, Error::Invariant(_)));
    }
}
