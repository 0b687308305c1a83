//! Eulerian counting: sigma, phi and Phi for generating pairs of given
//! element orders.

use super::{MobiusTable, SubgroupLattice};
use crate::grp::{ElementSet, FiniteGroup};
use crate::{Error, Result};

/// `sigma_{a,b}(H)`: (#order-a elements of H) * (#order-b elements of H).
pub fn sigma_ab(g: &FiniteGroup, h: &ElementSet, a: usize, b: usize) -> i64 {
    let mut ca = 0i64;
    let mut cb = 0i64;
    for x in h.iter() {
        let o = g.element_order(x);
        if o == a {
            ca += 1;
        }
        if o == b {
            cb += 1;
        }
    }
    ca * cb
}

/// Number of ordered generating pairs of G with element orders (a, b),
/// via Möbius inversion over the lattice.
pub fn phi_ab(
    g: &FiniteGroup,
    lat: &SubgroupLattice,
    mu: &MobiusTable,
    a: usize,
    b: usize,
) -> i64 {
    (0..lat.len())
        .map(|i| mu.mu[i] * sigma_ab(g, &lat.subgroups[i], a, b))
        .sum()
}

/// Number of automorphism classes of generating pairs with orders (a, b):
/// `phi / |Aut(G)|`, which must come out a nonnegative integer.
#[allow(non_snake_case)]
pub fn Phi_ab(
    g: &FiniteGroup,
    lat: &SubgroupLattice,
    mu: &MobiusTable,
    aut_order: usize,
    a: usize,
    b: usize,
) -> Result<i64> {
    if a <= 1 || b <= 1 {
        return Err(Error::BadInput("element orders must exceed 1".into()));
    }
    let phi = phi_ab(g, lat, mu, a, b);
    if phi < 0 || phi % aut_order as i64 != 0 {
        return Err(Error::Invariant(format!(
            "phi_{{{a},{b}}} = {phi} is not a nonnegative multiple of |Aut| = {aut_order}"
        )));
    }
    Ok(phi / aut_order as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::{make_alternating, make_quaternion};
    use crate::lattice::{enumerate_subgroups, mobius};

    #[test]
    fn inversion_consistency_small() {
        // sum over H <= G of phi_{a,b}(H) = sigma_{a,b}(G): each pair
        // generates a unique subgroup.
        for g in [make_quaternion().unwrap(), make_alternating(4).unwrap()] {
            let lat = enumerate_subgroups(&g).unwrap();
            let exponent = (0..g.order()).map(|x| g.element_order(x)).max().unwrap();
            for a in 2..=exponent {
                for b in 2..=exponent {
                    let direct = sigma_ab(&g, &g.full_set(), a, b);
                    // phi for each subgroup H computed inside the interval [1, H]
                    let mut total = 0i64;
                    for top in 0..lat.len() {
                        let mu_below = crate::lattice::mobius_below(&lat, top);
                        let phi_h: i64 = (0..lat.len())
                            .filter(|&i| i == top || lat.lt(i, top))
                            .map(|i| mu_below[i] * sigma_ab(&g, &lat.subgroups[i], a, b))
                            .sum();
                        total += phi_h;
                    }
                    assert_eq!(total, direct, "orders ({a},{b})");
                }
            }
        }
    }

    #[test]
    fn ordered_pair_counts_are_sane() {
        let g = make_alternating(5).unwrap();
        let lat = enumerate_subgroups(&g).unwrap();
        let mu = mobius(&lat);
        // brute-force oracle for phi_{2,3}(A5)
        let mut brute = 0i64;
        for x in 0..60 {
            for y in 0..60 {
                if g.element_order(x) == 2
                    && g.element_order(y) == 3
                    && g.generated_by(&[x, y]).len() == 60
                {
                    brute += 1;
                }
            }
        }
        assert_eq!(phi_ab(&g, &lat, &mu, 2, 3), brute);
    }
}
