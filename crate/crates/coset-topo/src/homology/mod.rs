//! Exact reduced simplicial homology over the integers, via Smith normal
//! form, plus Euler characteristics computed from face counts and from
//! chain-count dynamic programming on posets.

mod snf;

pub use snf::{rank_mod_p, smith_normal_form, IntMatrix, Snf};

use crate::topo::{Poset, SimplicialComplex};
use crate::{Error, Result};
use num::BigInt;

/// Sparse signed boundary matrix from k-simplices (columns) to
/// (k-1)-simplices (rows). Degree 0 maps to the augmentation row.
#[derive(Clone, Debug)]
pub struct BoundaryMatrix {
    pub degree: usize,
    pub rows: usize,
    pub cols: usize,
    /// (row, col, ±1) triplets; each column carries degree+1 entries with
    /// alternating signs.
    pub entries: Vec<(u32, u32, i8)>,
}

impl BoundaryMatrix {
    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|&(r, c, v)| (r, c, v as i64))
                .collect(),
        }
    }
}

/// Boundary matrices ∂_k for k = 0..=up_to+1 (∂_0 is the augmentation).
/// The complex must be downward closed through degree up_to+1, which is
/// checked against its truncation tag.
pub fn boundary_matrices(k: &SimplicialComplex, up_to: usize) -> Result<Vec<BoundaryMatrix>> {
    if !k.supports_degree(up_to) {
        return Err(Error::BadInput(format!(
            "complex truncated at {:?} cannot support homology through degree {up_to}",
            k.truncated_at
        )));
    }
    let mut out = Vec::new();
    for deg in 0..=up_to + 1 {
        let cols_list = k.simplices_of_dim(deg);
        let rows = if deg == 0 {
            1
        } else {
            k.simplices_of_dim(deg - 1).len()
        };
        let mut entries = Vec::with_capacity(cols_list.len() * (deg + 1));
        for (c, s) in cols_list.iter().enumerate() {
            if deg == 0 {
                entries.push((0u32, c as u32, 1i8));
                continue;
            }
            let mut sign = 1i8;
            for i in 0..s.len() {
                let mut face = s.clone();
                face.remove(i);
                let r = k
                    .index_of(&face)
                    .ok_or_else(|| Error::Invariant("missing face".into()))?;
                entries.push((r as u32, c as u32, sign));
                sign = -sign;
            }
        }
        out.push(BoundaryMatrix {
            degree: deg,
            rows,
            cols: cols_list.len(),
            entries,
        });
    }
    verify_dd_zero(&out)?;
    Ok(out)
}

/// Spot-checks ∂_{k-1} ∘ ∂_k = 0 on a deterministic sample of columns.
fn verify_dd_zero(mats: &[BoundaryMatrix]) -> Result<()> {
    for w in mats.windows(2) {
        let (lower, upper) = (&w[0], &w[1]);
        if upper.cols == 0 {
            continue;
        }
        // row-indexed view of the lower matrix
        let mut lower_cols: Vec<Vec<(u32, i8)>> = vec![Vec::new(); lower.cols];
        for &(r, c, v) in &lower.entries {
            lower_cols[c as usize].push((r, v));
        }
        let mut upper_cols: Vec<Vec<(u32, i8)>> = vec![Vec::new(); upper.cols];
        for &(r, c, v) in &upper.entries {
            upper_cols[c as usize].push((r, v));
        }
        // deterministic sample of up to 25 columns
        let step = (upper.cols / 25).max(1);
        for c in (0..upper.cols).step_by(step) {
            let mut acc: std::collections::HashMap<u32, i32> = std::collections::HashMap::new();
            for &(mid, v1) in &upper_cols[c] {
                for &(r, v2) in &lower_cols[mid as usize] {
                    *acc.entry(r).or_insert(0) += v1 as i32 * v2 as i32;
                }
            }
            if acc.values().any(|&v| v != 0) {
                return Err(Error::Invariant(format!(
                    "boundary of boundary is nonzero at degree {} column {c}",
                    upper.degree
                )));
            }
        }
    }
    Ok(())
}

/// Reduced Betti numbers and torsion per degree.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct HomologyProfile {
    /// Rank in degree -1: 1 exactly for the empty complex.
    pub betti_minus1: usize,
    /// Reduced Betti numbers for degrees 0..=up_to.
    pub betti: Vec<usize>,
    /// Torsion invariant factors (decimal strings) per degree 0..=up_to.
    pub torsion: Vec<Vec<String>>,
    /// Reduced Euler characteristic from face counts; None when the
    /// complex is truncated.
    pub euler_reduced: Option<i64>,
    pub up_to: usize,
}

impl HomologyProfile {
    /// Betti numbers including degree -1, padded/truncated to `len`
    /// entries starting at degree -1. Useful for cross-model comparison.
    pub fn betti_from_minus1(&self, len: usize) -> Vec<usize> {
        let mut v = vec![self.betti_minus1];
        v.extend(&self.betti);
        v.resize(len, 0);
        v
    }

    pub fn torsion_free(&self) -> bool {
        self.torsion.iter().all(|t| t.is_empty())
    }
}

/// Reduced homology through degree `up_to`: Betti numbers via
/// rank-nullity over the integer SNF, torsion from the invariant factors.
/// A prime-field rank runs first as a fast cross-check; the integer SNF
/// is authoritative.
pub fn reduced_homology(k: &SimplicialComplex, up_to: usize) -> Result<HomologyProfile> {
    let mats = boundary_matrices(k, up_to)?;
    let mut ranks = Vec::new();
    let mut snfs: Vec<Snf> = Vec::new();
    for m in &mats {
        let im = m.to_int_matrix();
        let fast = rank_mod_p(&im, 1_000_000_007);
        let snf = smith_normal_form(&im);
        if fast != snf.rank {
            // the prime divided some invariant factor; the SNF is exact
        }
        ranks.push(snf.rank);
        snfs.push(snf);
    }
    let dim_c = |deg: usize| -> usize { k.simplices_of_dim(deg).len() };
    let mut betti = Vec::new();
    let mut torsion = Vec::new();
    for deg in 0..=up_to {
        let cycles = dim_c(deg) - ranks[deg];
        let b = cycles - ranks[deg + 1];
        betti.push(b);
        torsion.push(
            snfs[deg + 1]
                .nonunit_factors()
                .iter()
                .map(BigInt::to_string)
                .collect(),
        );
    }
    let betti_minus1 = 1 - ranks[0];
    let euler_reduced = if k.truncated_at.is_none()
        || k.truncated_at
            .map(|t| k.simplices_of_dim(t).is_empty())
            .unwrap_or(false)
    {
        Some(euler_characteristic(k))
    } else {
        None
    };
    Ok(HomologyProfile {
        betti_minus1,
        betti,
        torsion,
        euler_reduced,
        up_to,
    })
}

/// Reduced Euler characteristic from face counts.
pub fn euler_characteristic(k: &SimplicialComplex) -> i64 {
    let mut chi = -1i64;
    for (d, list) in k.dims.iter().enumerate() {
        if d % 2 == 0 {
            chi += list.len() as i64;
        } else {
            chi -= list.len() as i64;
        }
    }
    chi
}

/// Reduced Euler characteristic of the order complex of a poset, via
/// chain-count dynamic programming over the strict-order DAG (no simplex
/// enumeration).
pub fn euler_characteristic_poset(p: &Poset) -> i64 {
    // t[v] = sum over chains with maximum v of (-1)^(len-1)
    let n = p.len();
    // topological order: u < v implies strictly fewer elements below u
    let below: Vec<usize> = (0..n)
        .map(|v| (0..n).filter(|&u| p.lt(u, v)).count())
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| below[v]);
    let mut t = vec![0i128; n];
    for &v in &order {
        let mut s = 1i128;
        for u in 0..n {
            if p.lt(u, v) {
                s -= t[u];
            }
        }
        t[v] = s;
    }
    let chi: i128 = t.iter().sum();
    (chi - 1) as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::{make_cyclic, make_quaternion};
    use crate::lattice::enumerate_subgroups;
    use crate::topo::{coset_poset, order_complex, SimplicialComplex};

    #[test]
    fn single_edge_boundary() {
        let k = SimplicialComplex::closure_of([vec![0u32, 1]], None).unwrap();
        let mats = boundary_matrices(&k, 0).unwrap();
        // ∂_1 column is (-1, +1) against the vertex order
        let d1 = &mats[1];
        assert_eq!((d1.rows, d1.cols), (2, 1));
        let mut vals: Vec<i8> = d1.entries.iter().map(|e| e.2).collect();
        vals.sort();
        assert_eq!(vals, vec![-1, 1]);
    }

    #[test]
    fn triangle_boundary_rank() {
        let k =
            SimplicialComplex::closure_of([vec![0u32, 1], vec![1, 2], vec![0, 2]], None).unwrap();
        let mats = boundary_matrices(&k, 1).unwrap();
        let snf = smith_normal_form(&mats[1].to_int_matrix());
        assert_eq!(snf.rank, 2);
        // circle: reduced betti (0, 1)
        let h = reduced_homology(&k, 1).unwrap();
        assert_eq!(h.betti, vec![0, 1]);
        assert!(h.torsion_free());
        assert_eq!(h.euler_reduced, Some(-1));
    }

    #[test]
    fn two_sphere() {
        // boundary of a tetrahedron
        let k = SimplicialComplex::closure_of(
            [vec![0u32, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
            None,
        )
        .unwrap();
        let h = reduced_homology(&k, 2).unwrap();
        assert_eq!(h.betti, vec![0, 0, 1]);
        assert_eq!(h.euler_reduced, Some(1));
    }

    #[test]
    fn projective_plane_torsion() {
        // minimal 6-vertex triangulation of RP^2: 15 edges, 10 faces,
        // every edge in exactly two faces, Euler characteristic 1
        let rp2: Vec<Vec<u32>> = vec![
            vec![0, 1, 4],
            vec![0, 1, 5],
            vec![0, 2, 3],
            vec![0, 2, 5],
            vec![0, 3, 4],
            vec![1, 2, 3],
            vec![1, 2, 4],
            vec![1, 3, 5],
            vec![2, 4, 5],
            vec![3, 4, 5],
        ];
        let k = SimplicialComplex::closure_of(rp2, None).unwrap();
        assert_eq!(k.f_vector(), vec![6, 15, 10]);
        let h = reduced_homology(&k, 2).unwrap();
        // RP^2: reduced H_0 = 0, H_1 = Z/2, H_2 = 0
        assert_eq!(h.betti, vec![0, 0, 0]);
        assert_eq!(h.torsion[1], vec!["2".to_string()]);
        assert_eq!(h.euler_reduced, Some(0));
    }

    #[test]
    fn empty_complex_reduced_degree_minus_one() {
        let k = SimplicialComplex::empty();
        let h = reduced_homology(&k, 1).unwrap();
        assert_eq!(h.betti_minus1, 1);
        assert_eq!(h.betti, vec![0, 0]);
        assert_eq!(h.euler_reduced, Some(-1));
    }

    #[test]
    fn quaternion_coset_complex_is_wedge_of_three_circles() {
        let g = make_quaternion().unwrap();
        let lat = enumerate_subgroups(&g).unwrap();
        let p = coset_poset(&g, &lat);
        let k = order_complex(&p, None, 1 << 20).unwrap();
        let h = reduced_homology(&k, 2).unwrap();
        assert_eq!(h.betti, vec![0, 3, 0]);
        assert!(h.torsion_free());
        assert_eq!(h.euler_reduced, Some(-3));
        // chain-count DP agrees without enumerating simplices
        assert_eq!(euler_characteristic_poset(&p), -3);
    }

    #[test]
    fn poset_euler_of_discrete_points() {
        let g = make_cyclic(5).unwrap();
        let lat = enumerate_subgroups(&g).unwrap();
        let p = coset_poset(&g, &lat);
        assert_eq!(euler_characteristic_poset(&p), 4);
    }
}
