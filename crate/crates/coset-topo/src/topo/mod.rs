//! Posets and simplicial complexes built from groups, plus certified
//! homotopy-preserving prunings.

mod complexes;
mod export;
mod posets;
mod prune;

pub use complexes::{
    barycentric_subdivision, crosscut_prime_complex, face_poset, minimal_cover_skeleton, nerve,
    order_complex,
};
pub use export::{read_complex, write_complex, ExportHeader};
pub use posets::{coset_poset, nonsaturating_subposet, poset_product, subgroup_poset};
pub use prune::prune_with_cone_fibers;

use crate::bits::BitMatrix;
use crate::grp::ElementSet;
use crate::{Error, Result};

/// What a poset's elements are.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum PosetKind {
    Coset,
    Subgroup,
    Product,
    Derived,
}

/// Identity of a coset inside a coset poset: owning subgroup (lattice
/// index) and least element of the coset.
#[derive(Clone, Debug)]
pub struct CosetElem {
    pub subgroup: usize,
    pub rep: usize,
    pub members: ElementSet,
}

/// A finite strict partial order over labeled elements.
#[derive(Clone, Debug)]
pub struct Poset {
    pub labels: Vec<String>,
    /// `lt.get(i, j)` iff element i is strictly below element j.
    pub lt: BitMatrix,
    pub kind: PosetKind,
    /// Parallel coset payload when `kind == Coset`.
    pub cosets: Option<Vec<CosetElem>>,
}

impl Poset {
    pub fn new(labels: Vec<String>, lt: BitMatrix, kind: PosetKind) -> Result<Poset> {
        if !lt.is_strict_order() {
            return Err(Error::Invariant(
                "relation is not irreflexive and transitive".into(),
            ));
        }
        Ok(Poset {
            labels,
            lt,
            kind,
            cosets: None,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.lt.get(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        i == j || self.lt.get(i, j) || self.lt.get(j, i)
    }

    /// Elements strictly above i.
    pub fn above(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.lt.row_iter(i)
    }

    /// Has an element comparable to every other element.
    pub fn is_cone(&self) -> bool {
        (0..self.len()).any(|z| (0..self.len()).all(|y| self.comparable(z, y)))
    }

    /// Subposet on the elements with `keep[i]`, preserving order and
    /// payload.
    pub fn restrict(&self, keep: &[bool]) -> Poset {
        assert_eq!(keep.len(), self.len());
        let idx: Vec<usize> = (0..self.len()).filter(|&i| keep[i]).collect();
        let mut lt = BitMatrix::new(idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                if self.lt.get(i, j) {
                    lt.set(a, b);
                }
            }
        }
        Poset {
            labels: idx.iter().map(|&i| self.labels[i].clone()).collect(),
            lt,
            kind: PosetKind::Derived,
            cosets: self
                .cosets
                .as_ref()
                .map(|cs| idx.iter().map(|&i| cs[i].clone()).collect()),
        }
    }

    /// Number of connected components of the comparability graph.
    pub fn components(&self) -> usize {
        let n = self.len();
        if n == 0 {
            return 0;
        }
        let mut seen = vec![false; n];
        let mut comps = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            comps += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(x) = stack.pop() {
                for y in 0..n {
                    if !seen[y] && (self.lt.get(x, y) || self.lt.get(y, x)) {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        comps
    }
}

/// Simplices stored per dimension as sorted vertex tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    /// `dims[k]` holds the k-simplices, each a strictly increasing vertex
    /// tuple of length k+1; the list itself is sorted lexicographically.
    pub dims: Vec<Vec<Vec<u32>>>,
    /// Set when simplices above this dimension may have been cut off.
    pub truncated_at: Option<usize>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        SimplicialComplex {
            dims: Vec::new(),
            truncated_at: None,
        }
    }

    /// Builds from an iterator of simplices (any dimensions, unsorted);
    /// lower faces are NOT added automatically.
    pub fn from_simplices<I>(simplices: I, truncated_at: Option<usize>) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<u32>>,
    {
        let mut by_dim: Vec<std::collections::HashSet<Vec<u32>>> = Vec::new();
        for mut s in simplices {
            s.sort_unstable();
            s.dedup();
            if s.is_empty() {
                continue;
            }
            let d = s.len() - 1;
            while by_dim.len() <= d {
                by_dim.push(std::collections::HashSet::new());
            }
            by_dim[d].insert(s);
        }
        let mut dims: Vec<Vec<Vec<u32>>> = by_dim
            .into_iter()
            .map(|set| {
                let mut v: Vec<Vec<u32>> = set.into_iter().collect();
                v.sort_unstable();
                v
            })
            .collect();
        while dims.last().map(|d| d.is_empty()).unwrap_or(false) {
            dims.pop();
        }
        let k = SimplicialComplex { dims, truncated_at };
        k.validate()?;
        Ok(k)
    }

    /// Builds the downward closure of the given simplices.
    pub fn closure_of<I>(simplices: I, truncated_at: Option<usize>) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<u32>>,
    {
        let mut all: std::collections::HashSet<Vec<u32>> = std::collections::HashSet::new();
        let mut stack: Vec<Vec<u32>> = Vec::new();
        for mut s in simplices {
            s.sort_unstable();
            s.dedup();
            if !s.is_empty() && all.insert(s.clone()) {
                stack.push(s);
            }
        }
        while let Some(s) = stack.pop() {
            if s.len() > 1 {
                for i in 0..s.len() {
                    let mut f = s.clone();
                    f.remove(i);
                    if all.insert(f.clone()) {
                        stack.push(f);
                    }
                }
            }
        }
        Self::from_simplices(all, truncated_at)
    }

    /// Downward closure and vertex-presence check, through `truncated_at`.
    pub fn validate(&self) -> Result<()> {
        for (d, list) in self.dims.iter().enumerate() {
            for s in list {
                if s.len() != d + 1 || s.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::Invariant(format!(
                        "malformed {d}-simplex {s:?}"
                    )));
                }
                if d > 0 {
                    for i in 0..s.len() {
                        let mut f = s.clone();
                        f.remove(i);
                        if !self.contains(&f) {
                            return Err(Error::Invariant(format!(
                                "complex is not downward closed at {s:?} / {f:?}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn max_dim(&self) -> Option<usize> {
        if self.dims.is_empty() {
            None
        } else {
            Some(self.dims.len() - 1)
        }
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.dims.iter().map(|d| d.len()).collect()
    }

    pub fn num_simplices(&self) -> usize {
        self.dims.iter().map(|d| d.len()).sum()
    }

    pub fn simplices_of_dim(&self, k: usize) -> &[Vec<u32>] {
        self.dims.get(k).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn contains(&self, simplex: &[u32]) -> bool {
        self.index_of(simplex).is_some()
    }

    /// Canonical index of a simplex within its dimension.
    pub fn index_of(&self, simplex: &[u32]) -> Option<usize> {
        let d = simplex.len().checked_sub(1)?;
        let list = self.dims.get(d)?;
        list.binary_search_by(|s| s.as_slice().cmp(simplex)).ok()
    }

    /// True when homology through `degree` can be computed faithfully.
    pub fn supports_degree(&self, degree: usize) -> bool {
        match self.truncated_at {
            None => true,
            Some(t) => {
                // simplices above t may be missing; degree d needs d+1
                t >= degree + 1 || self.simplices_of_dim(t).is_empty()
            }
        }
    }
}
