//! The zeta-style Euler sum over the subgroup lattice.

use super::{MobiusTable, SubgroupLattice};
use num::{BigInt, BigRational};

pub type Rational = BigRational;

/// Exact lattice zeta sum at integer s.
///
/// Computes `-sum_{H <= G} mu(H) / (G:H)^s`, signed so that the value at
/// s = -1 equals the reduced Euler characteristic of the order complex of
/// the coset poset C(G). Negative s yields an integer-weighted sum with
/// positive powers of the indices.
pub fn prob_zeta(lat: &SubgroupLattice, mu: &MobiusTable, s: i64) -> Rational {
    let g_order = lat.order_of(lat.top());
    let mut total = BigRational::from(BigInt::from(0));
    for i in 0..lat.len() {
        if mu.mu[i] == 0 {
            continue;
        }
        let index = BigInt::from((g_order / lat.order_of(i)) as u64);
        let term = if s >= 0 {
            BigRational::new(BigInt::from(mu.mu[i]), index.pow(s as u32))
        } else {
            BigRational::from(BigInt::from(mu.mu[i]) * index.pow((-s) as u32))
        };
        total += term;
    }
    -total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::{make_cyclic, make_quaternion};
    use crate::lattice::{enumerate_subgroups, mobius};

    fn zeta_of(g: &crate::grp::FiniteGroup, s: i64) -> Rational {
        let lat = enumerate_subgroups(g).unwrap();
        let mu = mobius(&lat);
        prob_zeta(&lat, &mu, s)
    }

    #[test]
    fn prime_cyclic_two_subgroup_lattice() {
        // mu(1) = -1, mu(G) = 1; at s = -1 the sum gives the reduced Euler
        // characteristic of p isolated points, p - 1.
        for p in [2u64, 3, 5, 7] {
            let g = make_cyclic(p as usize).unwrap();
            let v = zeta_of(&g, -1);
            assert_eq!(v, BigRational::from(BigInt::from(p - 1)));
            // at s = -2: -(1 - p^2) = p^2 - 1
            let v2 = zeta_of(&g, -2);
            assert_eq!(v2, BigRational::from(BigInt::from(p * p - 1)));
        }
    }

    #[test]
    fn quaternion_matches_wedge_of_three_circles() {
        // C(Q8) is a wedge of three circles: reduced Euler characteristic -3
        let q8 = make_quaternion().unwrap();
        assert_eq!(zeta_of(&q8, -1), BigRational::from(BigInt::from(-3)));
    }
}
